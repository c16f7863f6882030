#include "chebpos/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "chebpos/expansion.hpp"

namespace chebpos {

namespace {

int sign_of_power(unsigned n)
{
	return n % 2 == 0 ? 1 : -1;
}

bool on_support(unsigned n, std::int64_t k)
{
	const std::int64_t nn = n;
	return k <= nn && k >= -nn && (nn - k) % 2 == 0;
}

ParamValue str(const ExactRational& q)
{
	return q.to_string();
}

ParamValue num(std::int64_t v)
{
	return v;
}

} // namespace

ExactRational CoeffTable::at(long n, std::int64_t k) const
{
	if (n < 0 || static_cast<std::size_t>(n) >= rows.size())
		return {};
	const auto& row = rows[static_cast<std::size_t>(n)];
	auto it = row.find(k);
	return it == row.end() ? ExactRational() : it->second;
}

CoeffTable build_table(ChebKind kind, const ExactRational& c, unsigned n_max)
{
	CoeffTable t{kind, c, {}};
	t.rows.reserve(n_max + 1);
	t.rows.push_back({{0, ExactRational(1)}});
	if (n_max == 0)
		return t;

	const ExactRational first = kind == ChebKind::First ? c / ExactRational(2) : c;
	std::map<std::int64_t, ExactRational> row1;
	if (!first.is_zero())
		row1 = {{-1, first}, {1, first}};
	t.rows.push_back(std::move(row1));

	for (unsigned n = 1; n < n_max; ++n) {
		const std::int64_t next = static_cast<std::int64_t>(n) + 1;
		std::map<std::int64_t, ExactRational> row;
		for (std::int64_t k = -next; k <= next; k += 2) {
			ExactRational v = c * (t.at(n, k - 1) + t.at(n, k + 1)) - t.at(static_cast<long>(n) - 1, k);
			if (!v.is_zero())
				row.emplace(k, std::move(v));
		}
		t.rows.push_back(std::move(row));
	}
	return t;
}

void PropertyCheck::fail(unsigned n, ExpVec e, ExactRational value)
{
	if (!pass)
		return;
	pass = false;
	counterexample = Counterexample{n, std::move(e), std::move(value)};
}

bool VerifyReport::pass() const
{
	return std::ranges::all_of(checks, [](const PropertyCheck& c) { return c.informational || c.pass; });
}

std::optional<Counterexample> VerifyReport::counterexample() const
{
	for (const auto& c : checks)
		if (!c.informational && !c.pass)
			return c.counterexample;
	return std::nullopt;
}

const PropertyCheck* VerifyReport::check(std::string_view name) const
{
	for (const auto& c : checks)
		if (c.name == name)
			return &c;
	return nullptr;
}

std::vector<ExpVec> parity_support(std::size_t d, unsigned n)
{
	std::vector<ExpVec> out;
	std::vector<std::int64_t> e(d, 0);
	const std::int64_t radius = n;
	std::function<void(std::size_t, std::int64_t)> fill = [&](std::size_t i, std::int64_t used) {
		if (i == d) {
			if ((radius - used) % 2 == 0)
				out.emplace_back(e);
			return;
		}
		const std::int64_t left = radius - used;
		for (std::int64_t v = -left; v <= left; ++v) {
			e[i] = v;
			fill(i + 1, used + (v < 0 ? -v : v));
		}
		e[i] = 0;
	};
	fill(0, 0);
	std::ranges::sort(out, GradedLexLess{});
	return out;
}

VerifyReport verify_nonneg(ChebKind kind, const ExactRational& c, unsigned n_max, std::size_t d)
{
	VerifyReport report;
	report.property = "nonneg";
	report.params = {{"kind", std::string(to_string(kind))},
	                 {"c", str(c)},
	                 {"n_max", num(n_max)},
	                 {"d", num(static_cast<std::int64_t>(d))}};
	PropertyCheck positive{"positive"};
	PropertyCheck nonnegative{"nonnegative"};
	nonnegative.informational = true;

	for (unsigned n = 0; n <= n_max; ++n) {
		const LaurentPoly p = expand_recurrence({kind, n, c, d});
		std::set<ExpVec, GradedLexLess> support;
		for (auto& e : parity_support(d, n)) {
			const ExactRational v = p.coeff(e);
			if (v.sign() <= 0)
				positive.fail(n, e, v);
			if (v.sign() < 0)
				nonnegative.fail(n, e, v);
			support.insert(std::move(e));
		}
		for (const auto& [e, v] : p.terms()) {
			if (!support.contains(e)) {
				positive.fail(n, e, v);
				nonnegative.fail(n, e, v);
			}
		}
	}
	report.checks = {std::move(positive), std::move(nonnegative)};
	if (c <= ExactRational(1))
		report.notes.push_back("c <= 1 lies outside the hypothesis c > 1");
	if (c == ExactRational(1))
		report.notes.push_back("c = 1 is the boundary case: non-negativity may hold while strict positivity fails");
	return report;
}

VerifyReport verify_abc(const ExactRational& c, unsigned n_max)
{
	VerifyReport report;
	report.property = "abc";
	report.params = {{"kind", std::string("U")}, {"c", str(c)}, {"n_max", num(n_max)}};

	const CoeffTable a = build_table(ChebKind::Second, c, n_max);
	PropertyCheck pa{"a"}, pb{"b"}, pc{"c"};

	// Strict where the coefficient is structurally nonzero, equal elsewhere.
	auto compare = [](PropertyCheck& chk, unsigned n, std::int64_t k, const ExactRational& lhs,
	                  const ExactRational& rhs) {
		const bool ok = on_support(n, k) ? lhs > rhs : lhs == rhs;
		if (!ok)
			chk.fail(n, ExpVec{k}, lhs);
	};

	for (unsigned n = 0; n <= n_max; ++n) {
		const std::int64_t span = static_cast<std::int64_t>(n) + 2;
		for (std::int64_t k = -span; k <= span; ++k) {
			const ExactRational v = a.at(n, k);
			compare(pa, n, k, v, ExactRational(0));
			if (n >= 1)
				compare(pb, n, k, v, std::max(a.at(n - 1, k - 1), a.at(n - 1, k + 1)));
			if (n >= 2)
				compare(pc, n, k, v, a.at(n - 2, k));
		}
	}
	report.checks = {std::move(pa), std::move(pb), std::move(pc)};
	if (c <= ExactRational(1))
		report.notes.push_back("c <= 1 lies outside the hypothesis c > 1");
	if (c == ExactRational(1))
		report.notes.push_back("c = 1 is the boundary case: a_1^1 = c = a_0^0, so strictness of (b) fails at n = 1");
	return report;
}

VerifyReport verify_moretrig(const ExactRational& c, unsigned n_max)
{
	VerifyReport report;
	report.property = "moretrig";
	report.params = {{"c", str(c)}, {"n_max", num(n_max)}};

	const CoeffTable a = build_table(ChebKind::Second, c, n_max);
	const CoeffTable b = build_table(ChebKind::First, c, n_max);
	const bool above_one = c > ExactRational(1);

	PropertyCheck identity{"identity"};
	PropertyCheck positivity{"positivity"};
	PropertyCheck printed{"printed_variant"};
	printed.informational = true;

	const ExactRational half = ExactRational(1, 2);
	for (unsigned n = 2; n <= n_max; ++n) {
		const std::int64_t nn = n;
		for (std::int64_t k = -nn; k <= nn; ++k) {
			const ExactRational lhs = b.at(n, k);
			if (lhs != (a.at(n, k) - a.at(n - 2, k)) * half)
				identity.fail(n, ExpVec{k}, lhs);
			if (lhs != a.at(n, k) - a.at(n, k - 2))
				printed.fail(n, ExpVec{k}, lhs);
			if (above_one && on_support(n, k) && lhs.sign() <= 0)
				positivity.fail(n, ExpVec{k}, lhs);
		}
	}
	report.checks.push_back(std::move(identity));
	if (above_one)
		report.checks.push_back(std::move(positivity));
	else
		report.notes.push_back("positivity not checked: requires c > 1");
	report.checks.push_back(std::move(printed));
	return report;
}

VerifyReport sign_pattern(const ExactRational& c, unsigned n_max)
{
	VerifyReport report;
	report.property = "sign";
	report.params = {{"c", str(c)}, {"n_max", num(n_max)}};

	PropertyCheck r_check{"R"}, s_check{"S"};
	for (auto [kind, chk] : {std::pair{ChebKind::First, &r_check}, std::pair{ChebKind::Second, &s_check}}) {
		const CoeffTable t = build_table(kind, c, n_max);
		for (unsigned n = 0; n <= n_max; ++n)
			for (const auto& [k, v] : t.rows[n])
				if (v.sign() != sign_of_power(n))
					chk->fail(n, ExpVec{k}, v);
	}
	report.checks = {std::move(r_check), std::move(s_check)};
	if (c >= ExactRational(-1))
		report.notes.push_back("c >= -1 lies outside the hypothesis c < -1");
	return report;
}

std::optional<SignWitness> find_counterexample(const ExactRational& c, unsigned cap, bool include_u)
{
	std::vector<CoeffTable> tables{build_table(ChebKind::First, c, cap)};
	if (include_u)
		tables.push_back(build_table(ChebKind::Second, c, cap));

	for (unsigned n = 0; n <= cap; ++n) {
		for (const auto& t : tables) {
			const auto& row = t.rows[n];
			const ExactRational lead = t.at(n, n);
			bool has_pos = false, has_neg = false;
			for (const auto& [k, v] : row) {
				has_pos = has_pos || v.sign() > 0;
				has_neg = has_neg || v.sign() < 0;
			}
			if (!(has_pos && has_neg))
				continue;
			std::vector<std::int64_t> ks;
			for (const auto& [k, v] : row)
				ks.push_back(k);
			std::ranges::sort(ks, [](std::int64_t x, std::int64_t y) {
				return GradedLexLess{}(ExpVec{x}, ExpVec{y});
			});
			for (auto k : ks) {
				const ExactRational v = t.at(n, k);
				if (v.sign() != lead.sign())
					return SignWitness{t.kind, n, k, v};
			}
		}
	}
	return std::nullopt;
}

VerifyReport counterexample_report(const ExactRational& c, unsigned cap, bool include_u)
{
	VerifyReport report;
	report.property = "counterexample";
	report.params = {{"c", str(c)},
	                 {"cap", num(cap)},
	                 {"families", std::string(include_u ? "T,U" : "T")}};

	const bool inside = c > ExactRational(-1) && c < ExactRational(1);
	PropertyCheck found{"mixed_signs_iff_abs_c_below_one"};
	const auto witness = find_counterexample(c, cap, include_u);
	if (witness) {
		found.counterexample = Counterexample{witness->n, ExpVec{witness->k}, witness->value};
		report.notes.push_back("mixed signs in " + std::string(to_string(witness->kind)) + "_" +
		                       std::to_string(witness->n));
	} else {
		report.notes.push_back("none found <= " + std::to_string(cap));
	}
	found.pass = witness.has_value() == inside;
	report.checks = {std::move(found)};
	return report;
}

VerifyReport verify_trivial(unsigned n_max)
{
	VerifyReport report;
	report.property = "trivial";
	report.params = {{"c", std::string("1")}, {"n_max", num(n_max)}};
	PropertyCheck eq{"equality"};
	const ExactRational half(1, 2);
	for (unsigned n = 0; n <= n_max; ++n) {
		const LaurentPoly got = expand_recurrence({ChebKind::First, n, 1, 1});
		const std::int64_t nn = n;
		const LaurentPoly want =
		    LaurentPoly::monomial(ExpVec{nn}, half) + LaurentPoly::monomial(ExpVec{-nn}, half);
		if (got != want) {
			// First differing exponent.
			LaurentPoly diff = got - want;
			const auto& [e, v] = *diff.terms().begin();
			eq.fail(n, e, got.coeff(e));
		}
	}
	report.checks = {std::move(eq)};
	return report;
}

} // namespace chebpos

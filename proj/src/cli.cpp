#include "chebpos/cli.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "chebpos/census.hpp"
#include "chebpos/expansion.hpp"
#include "chebpos/serialize.hpp"
#include "chebpos/verify.hpp"

namespace chebpos {

namespace {

class UsageError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

struct Options {
	std::string format = "json";
	std::uint64_t budget = kDefaultNodeBudget;

	// expand / coeff
	std::string kind = "T";
	unsigned n = 0;
	std::string c;
	std::size_t d = 1;
	std::string method = "recurrence";
	std::int64_t k_exp = 0;

	// census / total
	std::uint32_t r = 1;
	std::uint32_t k_len = 1;
	std::string backend = "genfn";
	bool compare = false;
	unsigned threads = 0;

	// verify
	std::string suite;
	std::vector<std::string> c_list;
	unsigned n_max = 30;
	std::string verify_kind = "both";
	bool include_u = false;
	unsigned cap = kDefaultSearchCap;
};

void emit(std::ostream& out, const Json& j)
{
	out << j.dump(2) << '\n';
}

int cmd_expand(const Options& o, std::ostream& out)
{
	const ExpansionRequest req{parse_kind(o.kind), o.n, ExactRational::parse(o.c), o.d};
	const LaurentPoly p = o.method == "compose" ? expand_compose(req) : expand_recurrence(req);
	if (o.format == "csv") {
		out << laurent_csv(p);
		return kExitOk;
	}
	emit(out, Json{{"kind", o.kind},
	               {"n", o.n},
	               {"c", req.c.to_string()},
	               {"d", o.d},
	               {"poly", to_json(p)}});
	return kExitOk;
}

int cmd_coeff(const Options& o, std::ostream& out)
{
	const ChebKind kind = parse_kind(o.kind);
	const ExactRational c = ExactRational::parse(o.c);
	const ExactRational value =
	    kind == ChebKind::First ? explicit_coeff(o.n, c, o.k_exp) : explicit_coeff_u(o.n, c, o.k_exp);
	if (o.format == "csv") {
		out << "kind,n,c,k,value\n"
		    << o.kind << ',' << o.n << ',' << c.to_string() << ',' << o.k_exp << ',' << value.to_string() << '\n';
		return kExitOk;
	}
	emit(out, Json{{"kind", o.kind}, {"n", o.n}, {"c", c.to_string()}, {"k", o.k_exp}, {"value", value.to_string()}});
	return kExitOk;
}

int cmd_census(const Options& o, std::ostream& out, std::ostream& err)
{
	auto brute = [&] { return census_bruteforce(o.r, o.k_len, o.budget, o.threads); };
	if (!o.compare) {
		const CensusMap census = o.backend == "bruteforce" ? brute() : census_genfn(o.r, o.k_len);
		if (o.format == "csv") {
			out << census_csv(census, o.r);
			return kExitOk;
		}
		emit(out, Json{{"r", o.r},
		               {"k", o.k_len},
		               {"backend", o.backend},
		               {"census", to_json(census)},
		               {"total", census_total(census).get_str()}});
		return kExitOk;
	}

	const CensusMap lhs = brute();
	const CensusMap rhs = census_genfn(o.r, o.k_len);
	const bool agree = lhs == rhs;

	// Union of classes in graded-lex order.
	std::set<HomologyVector, GradedLexLess> classes;
	for (const auto& [e, v] : lhs)
		classes.insert(e);
	for (const auto& [e, v] : rhs)
		classes.insert(e);
	auto count_in = [](const CensusMap& m, const HomologyVector& e) {
		auto it = m.find(e);
		return it == m.end() ? mpz_class(0) : it->second;
	};

	const std::string total = census_total(rhs).get_str();
	const std::string message = agree ? "backends agree, total " + total : "backends disagree";
	if (o.format == "csv") {
		std::ostringstream os;
		for (std::size_t i = 1; i <= o.r; ++i)
			os << "e_" << i << ',';
		os << "bruteforce,genfn\n";
		for (const auto& e : classes) {
			for (auto v : e)
				os << v << ',';
			os << count_in(lhs, e).get_str() << ',' << count_in(rhs, e).get_str() << '\n';
		}
		out << os.str();
	} else {
		Json diffs = Json::array();
		for (const auto& e : classes) {
			const auto a = count_in(lhs, e);
			const auto b = count_in(rhs, e);
			if (a != b) {
				Json ev = Json::array();
				for (auto v : e)
					ev.push_back(v);
				diffs.push_back(Json{{"e", ev}, {"bruteforce", a.get_str()}, {"genfn", b.get_str()}});
			}
		}
		emit(out, Json{{"r", o.r},
		               {"k", o.k_len},
		               {"backend", "compare"},
		               {"agree", agree},
		               {"total", total},
		               {"bruteforce_total", census_total(lhs).get_str()},
		               {"message", message},
		               {"differences", std::move(diffs)}});
	}
	if (!agree) {
		err << "census: " << message << '\n';
		return kExitVerificationFailed;
	}
	return kExitOk;
}

int cmd_total(const Options& o, std::ostream& out)
{
	const std::string total = total_count(o.r, o.k_len).get_str();
	if (o.format == "csv")
		out << "r,k,total\n" << o.r << ',' << o.k_len << ',' << total << '\n';
	else
		emit(out, Json{{"r", o.r}, {"k", o.k_len}, {"total", total}});
	return kExitOk;
}

std::string params_text(const VerifyReport& r)
{
	std::string s;
	for (const auto& [key, value] : r.params) {
		if (!s.empty())
			s += ';';
		s += key + '=';
		std::visit(
		    [&](const auto& v) {
			    if constexpr (std::is_same_v<std::decay_t<decltype(v)>, std::string>)
				    s += v;
			    else
				    s += std::to_string(v);
		    },
		    value);
	}
	return s;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err)
{
	static const std::vector<std::string> kSuites = {"abc", "counterexample", "moretrig", "nonneg", "sign",
	                                                 "trivial"};
	const bool all = o.suite == "all";
	auto wants = [&](const std::string& s) { return all || o.suite == s; };

	std::vector<ExactRational> cs;
	for (const auto& text : o.c_list)
		cs.push_back(ExactRational::parse(text));
	std::ranges::sort(cs);
	cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
	if (cs.empty() && o.suite != "trivial")
		throw UsageError("verify: --c is required for suite '" + o.suite + "'");

	std::vector<ChebKind> kinds;
	if (o.verify_kind != "U")
		kinds.push_back(ChebKind::First);
	if (o.verify_kind != "T")
		kinds.push_back(ChebKind::Second);

	// (c, report), stable-sorted on (c, property).
	std::vector<std::pair<ExactRational, VerifyReport>> reports;
	for (const auto& c : cs) {
		for (const auto& suite : kSuites) {
			if (!wants(suite))
				continue;
			if (suite == "abc")
				reports.emplace_back(c, verify_abc(c, o.n_max));
			else if (suite == "counterexample")
				reports.emplace_back(c, counterexample_report(c, o.cap, o.include_u));
			else if (suite == "moretrig")
				reports.emplace_back(c, verify_moretrig(c, o.n_max));
			else if (suite == "nonneg")
				for (auto kind : kinds)
					reports.emplace_back(c, verify_nonneg(kind, c, o.n_max, o.d));
			else if (suite == "sign")
				reports.emplace_back(c, sign_pattern(c, o.n_max));
		}
	}
	if (wants("trivial"))
		reports.emplace_back(ExactRational(1), verify_trivial(o.n_max));
	std::ranges::stable_sort(reports, [](const auto& a, const auto& b) {
		if (a.first != b.first)
			return a.first < b.first;
		return a.second.property < b.second.property;
	});

	bool pass = true;
	for (const auto& [c, r] : reports) {
		if (r.pass())
			continue;
		pass = false;
		err << "verification failed: " << r.property << " (" << params_text(r) << ")";
		if (auto cx = r.counterexample())
			err << " at n = " << cx->n << ", k = " << cx->e[0] << ", value " << cx->value.to_string();
		err << '\n';
	}

	if (o.format == "csv") {
		std::ostringstream os;
		os << "property,params,pass,n,k,value\n";
		for (const auto& [c, r] : reports) {
			os << r.property << ',' << params_text(r) << ',' << (r.pass() ? "true" : "false") << ',';
			if (auto cx = r.counterexample())
				os << cx->n << ',' << cx->e[0] << ',' << cx->value.to_string();
			else
				os << ",,";
			os << '\n';
		}
		out << os.str();
	} else {
		Json arr = Json::array();
		for (const auto& [c, r] : reports)
			arr.push_back(to_json(r));
		emit(out, arr);
	}
	return pass ? kExitOk : kExitVerificationFailed;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
	Options o;
	CLI::App app{"Exact Chebyshev-derived Laurent polynomials and free-group word census", "chebpos"};
	app.require_subcommand(1);
	app.fallthrough();
	app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
	app.add_option("--budget", o.budget, "Node budget for the brute-force enumerator");

	auto* expand = app.add_subcommand("expand", "Expand R_n / S_n as a Laurent polynomial");
	expand->add_option("--kind", o.kind, "T (R_n) or U (S_n)")->required()->check(CLI::IsMember({"T", "U"}));
	expand->add_option("--n", o.n, "Degree")->required()->check(CLI::Range(0u, 100000u));
	expand->add_option("--c", o.c, "Parameter c as p/q or an integer")->required();
	expand->add_option("--d", o.d, "Number of variables")->check(CLI::Range(std::size_t(1), std::size_t(64)));
	expand->add_option("--method", o.method, "recurrence or compose")
	    ->check(CLI::IsMember({"recurrence", "compose"}));

	auto* coeff = app.add_subcommand("coeff", "Single coefficient of R_n(c; x) or S_n(c; x)");
	coeff->add_option("--kind", o.kind, "T or U")->check(CLI::IsMember({"T", "U"}));
	coeff->add_option("--n", o.n, "Degree")->required()->check(CLI::Range(0u, 100000u));
	coeff->add_option("--c", o.c, "Nonzero parameter c")->required();
	coeff->add_option("--k", o.k_exp, "Exponent of x")->required();

	auto* census = app.add_subcommand("census", "Cyclically reduced words of length k in F_r by homology class");
	census->add_option("--r", o.r, "Rank")->required()->check(CLI::Range(1u, 1000000u));
	census->add_option("--k", o.k_len, "Word length")->required()->check(CLI::Range(1u, 100000u));
	census->add_option("--backend", o.backend, "bruteforce or genfn")
	    ->check(CLI::IsMember({"bruteforce", "genfn"}));
	census->add_flag("--compare", o.compare, "Run both backends and compare");
	census->add_option("--threads", o.threads, "Enumerator workers (0 = hardware concurrency)");

	auto* verify = app.add_subcommand("verify", "Check positivity theorems and identities");
	verify->add_option("--suite", o.suite, "Suite")
	    ->required()
	    ->check(CLI::IsMember({"nonneg", "abc", "moretrig", "sign", "counterexample", "trivial", "all"}));
	verify->add_option("--c", o.c_list, "Comma-separated parameter values")->delimiter(',');
	verify->add_option("--n-max", o.n_max, "Largest degree")->check(CLI::Range(0u, 100000u));
	verify->add_option("--d", o.d, "Number of variables (nonneg suite)")
	    ->check(CLI::Range(std::size_t(1), std::size_t(64)));
	verify->add_option("--kind", o.verify_kind, "T, U or both (nonneg suite)")
	    ->check(CLI::IsMember({"T", "U", "both"}));
	verify->add_flag("--include-u", o.include_u, "Counterexample search also over S_n");
	verify->add_option("--cap", o.cap, "Counterexample search cap")->check(CLI::Range(0u, 100000u));

	auto* total = app.add_subcommand("total", "Total number of cyclically reduced words");
	total->add_option("--r", o.r, "Rank")->required()->check(CLI::Range(1u, 1000000u));
	total->add_option("--k", o.k_len, "Word length")->required()->check(CLI::Range(1u, 100000u));

	std::vector<std::string> storage{"chebpos"};
	storage.insert(storage.end(), args.begin(), args.end());
	std::vector<const char*> argv;
	for (const auto& s : storage)
		argv.push_back(s.c_str());

	try {
		app.parse(static_cast<int>(argv.size()), argv.data());
	} catch (const CLI::CallForHelp&) {
		out << app.help();
		return kExitOk;
	} catch (const CLI::ParseError& e) {
		err << "error: " << e.what() << '\n';
		return kExitUsage;
	}

	try {
		if (*expand)
			return cmd_expand(o, out);
		if (*coeff)
			return cmd_coeff(o, out);
		if (*census)
			return cmd_census(o, out, err);
		if (*verify)
			return cmd_verify(o, out, err);
		if (*total)
			return cmd_total(o, out);
	} catch (const CensusConsistencyError& e) {
		err << "error: " << e.what() << '\n';
		return kExitVerificationFailed;
	} catch (const std::exception& e) {
		err << "error: " << e.what() << '\n';
		return kExitUsage;
	}
	return kExitUsage;
}

} // namespace chebpos

#include "catch_amalgamated.hpp"

#include "chebpos/expansion.hpp"
#include "chebpos/verify.hpp"

using namespace chebpos;

namespace {

const std::vector<ExactRational>& above_one()
{
	static const std::vector<ExactRational> cs = {ExactRational(3, 2), ExactRational(2), ExactRational(101, 100),
	                                              ExactRational(10)};
	return cs;
}

} // namespace

TEST_CASE("build_table seeds", "[verify]")
{
	const ExactRational c(7, 5);
	const CoeffTable u = build_table(ChebKind::Second, c, 1);
	REQUIRE(u.rows.size() == 2);
	CHECK(u.rows[0] == std::map<std::int64_t, ExactRational>{{0, 1}});
	CHECK(u.rows[1] == std::map<std::int64_t, ExactRational>{{-1, c}, {1, c}});
	const CoeffTable t = build_table(ChebKind::First, c, 1);
	CHECK(t.rows[1] == std::map<std::int64_t, ExactRational>{{-1, c / ExactRational(2)}, {1, c / ExactRational(2)}});

	const CoeffTable u2 = build_table(ChebKind::Second, 2, 2);
	CHECK(u2.rows[2] == std::map<std::int64_t, ExactRational>{{-2, 4}, {0, 7}, {2, 4}});
	CHECK(u2.at(-1, 0) == ExactRational(0));
	CHECK(u2.at(9, 0) == ExactRational(0));
}

TEST_CASE("tables agree with the polynomial expansion", "[verify][property]")
{
	for (const auto& c : {ExactRational(1, 2), ExactRational(3, 2), ExactRational(-2), ExactRational(101, 100)}) {
		for (auto kind : {ChebKind::First, ChebKind::Second}) {
			const CoeffTable t = build_table(kind, c, 30);
			for (unsigned n = 0; n <= 30; ++n) {
				const LaurentPoly p = expand_recurrence({kind, n, c, 1});
				std::map<std::int64_t, ExactRational> row;
				for (const auto& [e, v] : p.terms())
					row.emplace(e[0], v);
				REQUIRE(row == t.rows[n]);
			}
		}
	}
}

TEST_CASE("tables flip sign with c by parity", "[verify][property]")
{
	for (const auto& c : {ExactRational(3, 2), ExactRational(1, 3), ExactRational(7)}) {
		for (auto kind : {ChebKind::First, ChebKind::Second}) {
			const CoeffTable plus = build_table(kind, c, 20);
			const CoeffTable minus = build_table(kind, -c, 20);
			for (unsigned n = 0; n <= 20; ++n) {
				auto expected = plus.rows[n];
				if (n % 2 == 1)
					for (auto& [k, v] : expected)
						v = -v;
				REQUIRE(minus.rows[n] == expected);
			}
		}
	}
}

TEST_CASE("parity_support", "[verify]")
{
	CHECK(parity_support(1, 0).size() == 1);
	CHECK(parity_support(1, 3).size() == 4);
	// |e|_1 in {0, 2} in two variables: 1 + 8 points.
	CHECK(parity_support(2, 2).size() == 9);
	for (const auto& e : parity_support(3, 5)) {
		CHECK(e.abs_degree() <= 5);
		CHECK((5 - e.abs_degree()) % 2 == 0);
	}
}

TEST_CASE("verify_nonneg", "[verify]")
{
	CHECK(verify_nonneg(ChebKind::First, ExactRational(3, 2), 12, 1).pass());
	CHECK(verify_nonneg(ChebKind::Second, ExactRational(101, 100), 8, 2).pass());

	const VerifyReport bad = verify_nonneg(ChebKind::First, ExactRational(1, 2), 2, 1);
	CHECK_FALSE(bad.pass());
	const auto cx = bad.counterexample();
	REQUIRE(cx);
	CHECK(cx->n == 2);
	CHECK(cx->e == ExpVec{0});
	CHECK(cx->value == ExactRational(-3, 4));

	// c = 1: non-negative but not strictly positive.
	const VerifyReport boundary = verify_nonneg(ChebKind::First, 1, 6, 1);
	CHECK_FALSE(boundary.pass());
	CHECK(boundary.check("nonnegative")->pass);
	CHECK_FALSE(boundary.notes.empty());
}

TEST_CASE("verify_abc", "[verify]")
{
	for (const auto& c : above_one())
		REQUIRE(verify_abc(c, 30).pass());

	const VerifyReport one = verify_abc(1, 6);
	CHECK(one.check("a")->pass);
	const PropertyCheck* b = one.check("b");
	REQUIRE(b);
	CHECK_FALSE(b->pass);
	CHECK(b->counterexample->n == 1);
	CHECK(b->counterexample->e == ExpVec{-1});
	CHECK(b->counterexample->value == ExactRational(1));

	// (c) at (2, 0) with c = 3/2: 2c^2 - 1 = 7/2 > a_0^0 = 1.
	const CoeffTable u = build_table(ChebKind::Second, ExactRational(3, 2), 2);
	CHECK(u.at(2, 0) == ExactRational(7, 2));
	CHECK(verify_abc(ExactRational(3, 2), 2).check("c")->pass);
}

TEST_CASE("verify_moretrig", "[verify]")
{
	const ExactRational c(9, 7);
	const CoeffTable a = build_table(ChebKind::Second, c, 2);
	const CoeffTable b = build_table(ChebKind::First, c, 2);
	CHECK(b.at(2, 0) == c * c - ExactRational(1));
	CHECK(a.at(2, 0) == ExactRational(2) * c * c - ExactRational(1));
	CHECK(b.at(2, 2) == c * c / ExactRational(2));

	for (const auto& cc : above_one()) {
		const VerifyReport r = verify_moretrig(cc, 30);
		REQUIRE(r.pass());
		REQUIRE(r.check("positivity"));
		// The relation printed as b_n^k = a_n^k - a_n^{k-2} does not hold.
		REQUIRE_FALSE(r.check("printed_variant")->pass);
	}
	const VerifyReport low = verify_moretrig(ExactRational(1, 2), 10);
	CHECK(low.pass());
	CHECK(low.check("positivity") == nullptr);
}

TEST_CASE("sign_pattern", "[verify]")
{
	for (const auto& c : {ExactRational(-3, 2), ExactRational(-2)})
		REQUIRE(sign_pattern(c, 12).pass());
	const CoeffTable t = build_table(ChebKind::First, ExactRational(-3, 2), 1);
	CHECK(t.at(1, 1) == ExactRational(-3, 4));
	CHECK(build_table(ChebKind::First, -2, 2).at(2, 0) == ExactRational(3));
	CHECK_FALSE(sign_pattern(ExactRational(3, 2), 3).pass());
}

TEST_CASE("find_counterexample", "[verify]")
{
	const auto w = find_counterexample(ExactRational(1, 2));
	REQUIRE(w);
	CHECK(w->n == 2);
	CHECK(w->k == 0);
	CHECK(w->value == ExactRational(-3, 4));
	CHECK(find_counterexample(ExactRational(99, 100))->n == 2);
	CHECK_FALSE(find_counterexample(ExactRational(3, 2)));
	CHECK_FALSE(find_counterexample(ExactRational(-3, 2)));

	const auto wu = find_counterexample(ExactRational(1, 2), 64, true);
	REQUIRE(wu);
	CHECK(wu->n == 2);
	CHECK(wu->kind == ChebKind::First);

	CHECK(counterexample_report(ExactRational(1, 2)).pass());
	CHECK(counterexample_report(ExactRational(3, 2)).pass());
	CHECK(counterexample_report(ExactRational(-1, 3)).pass());
}

TEST_CASE("every 0 < c < 1 fails first at n = 2", "[verify][property]")
{
	for (long q = 2; q <= 12; ++q)
		for (long p = 1; p < q; ++p) {
			const auto w = find_counterexample(ExactRational(mpz_class(p), mpz_class(q)), 8);
			REQUIRE(w);
			REQUIRE(w->n == 2);
		}
}

TEST_CASE("verify_trivial", "[verify]")
{
	const VerifyReport r = verify_trivial(50);
	CHECK(r.pass());
	CHECK_FALSE(r.counterexample());
}

TEST_CASE("two-variable R_2 has constant term c^2/2 - 1", "[verify]")
{
	// Argument (c/4)(x_1 + 1/x_1 + x_2 + 1/x_2): its square has constant c^2/4.
	for (const auto& c : {ExactRational(101, 100), ExactRational(3, 2), ExactRational(2)}) {
		const LaurentPoly r2 = expand_recurrence({ChebKind::First, 2, c, 2});
		REQUIRE(r2.coeff({0, 0}) == c * c / ExactRational(2) - ExactRational(1));
	}
	// Negative for 1 < c < sqrt(2), so positivity of R_n fails there in two variables.
	const VerifyReport r = verify_nonneg(ChebKind::First, ExactRational(101, 100), 4, 2);
	REQUIRE_FALSE(r.pass());
	CHECK(r.counterexample()->n == 2);
	CHECK(r.counterexample()->value == ExactRational(-9799, 20000));
	CHECK_FALSE(r.check("nonnegative")->pass);
}

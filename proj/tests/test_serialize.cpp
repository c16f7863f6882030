#include <random>

#include "catch_amalgamated.hpp"

#include "chebpos/expansion.hpp"
#include "chebpos/serialize.hpp"

using namespace chebpos;

TEST_CASE("LaurentPoly JSON layout", "[serialize]")
{
	const LaurentPoly p = LaurentPoly::monomial({1, -2}, ExactRational(-3, 4)) + LaurentPoly::constant(2, 5);
	const Json j = to_json(p);
	CHECK(j.dump() ==
	      R"({"dimension":2,"terms":[{"exp":[0,0],"num":"5","den":"1"},{"exp":[1,-2],"num":"-3","den":"4"}]})");
}

TEST_CASE("LaurentPoly JSON round trip", "[serialize][property]")
{
	for (std::size_t d : {1u, 2u, 3u}) {
		for (unsigned n = 0; n <= 6; ++n) {
			const LaurentPoly p = expand_recurrence({ChebKind::Second, n, ExactRational(-7, 3), d});
			REQUIRE(laurent_from_json(Json::parse(to_json(p).dump())) == p);
		}
	}
}

TEST_CASE("LaurentPoly JSON rejects bad input", "[serialize]")
{
	CHECK_THROWS_AS(laurent_from_json(Json::parse(R"({"dimension":1})")), std::invalid_argument);
	CHECK_THROWS_AS(laurent_from_json(Json::parse(R"({"dimension":2,"terms":[{"exp":[1],"num":"1","den":"1"}]})")),
	                std::invalid_argument);
	CHECK_THROWS_AS(laurent_from_json(Json::parse(R"({"dimension":1,"terms":[{"exp":[1],"num":"1","den":"0"}]})")),
	                std::invalid_argument);
	CHECK_THROWS_AS(laurent_from_json(Json::parse(R"({"dimension":1,"terms":[{"exp":[1],"num":"x","den":"1"}]})")),
	                std::invalid_argument);
}

TEST_CASE("DensePoly JSON", "[serialize]")
{
	CHECK(to_json(cheb_coeffs(ChebKind::First, 2)).dump() == R"(["-1","0","2"])");
	CHECK(to_json(DensePoly()).dump() == "[]");
}

TEST_CASE("census JSON and CSV", "[serialize]")
{
	CensusMap m;
	m.emplace(HomologyVector{1, 0}, 2);
	m.emplace(HomologyVector{0, 0}, mpz_class("123456789012345678901234567890"));
	CHECK(to_json(m).dump() ==
	      R"([{"e":[0,0],"count":"123456789012345678901234567890"},{"e":[1,0],"count":"2"}])");
	CHECK(census_csv(m, 2) == "e_1,e_2,count\n0,0,123456789012345678901234567890\n1,0,2\n");
}

TEST_CASE("report JSON", "[serialize]")
{
	const VerifyReport r = verify_nonneg(ChebKind::First, ExactRational(1, 2), 2, 1);
	const Json j = to_json(r);
	CHECK(j["property"] == "nonneg");
	CHECK(j["pass"] == false);
	CHECK(j["params"]["c"] == "1/2");
	CHECK(j["params"]["n_max"] == 2);
	CHECK(j["counterexample"]["n"] == 2);
	CHECK(j["counterexample"]["k"] == 0);
	CHECK(j["counterexample"]["value"] == "-3/4");

	const Json ok = to_json(verify_trivial(3));
	CHECK(ok["pass"] == true);
	CHECK(ok["counterexample"].is_null());
}

#include <sstream>

#include "catch_amalgamated.hpp"

#include "chebpos/cli.hpp"
#include "chebpos/serialize.hpp"

using namespace chebpos;

namespace {

struct Run {
	int code;
	std::string out;
	std::string err;
};

Run run(std::vector<std::string> args)
{
	std::ostringstream out, err;
	const int code = run_cli(args, out, err);
	return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("expand", "[cli]")
{
	const Run r = run({"expand", "--kind", "T", "--n", "2", "--c", "2", "--d", "1"});
	REQUIRE(r.code == 0);
	const Json j = Json::parse(r.out);
	CHECK(j["kind"] == "T");
	CHECK(j["c"] == "2");
	const LaurentPoly p = laurent_from_json(j["poly"]);
	CHECK(p == LaurentPoly::monomial({-2}, 2) + LaurentPoly::constant(1, 3) + LaurentPoly::monomial({2}, 2));

	const Run compose = run({"expand", "--kind", "T", "--n", "2", "--c", "2", "--method", "compose"});
	CHECK(compose.out == r.out);

	const Run csv = run({"expand", "--kind", "T", "--n", "2", "--c", "2", "--format", "csv"});
	CHECK(csv.out == "e_1,coeff\n0,3\n-2,2\n2,2\n");
}

TEST_CASE("coeff", "[cli]")
{
	const Run r = run({"coeff", "--n", "1", "--c", "3", "--k", "1"});
	REQUIRE(r.code == 0);
	CHECK(Json::parse(r.out)["value"] == "3/2");
	const Run u = run({"coeff", "--kind", "U", "--n", "1", "--c", "3", "--k", "-1"});
	CHECK(Json::parse(u.out)["value"] == "3");
	CHECK(run({"coeff", "--n", "2", "--c", "0", "--k", "0"}).code == 2);
}

TEST_CASE("census", "[cli]")
{
	const Run cmp = run({"census", "--r", "2", "--k", "2", "--compare"});
	REQUIRE(cmp.code == 0);
	const Json j = Json::parse(cmp.out);
	CHECK(j["agree"] == true);
	CHECK(j["message"] == "backends agree, total 12");

	const Run brute = run({"census", "--r", "2", "--k", "2", "--backend", "bruteforce"});
	const Run gen = run({"census", "--r", "2", "--k", "2", "--backend", "genfn"});
	REQUIRE(brute.code == 0);
	CHECK(Json::parse(brute.out)["census"] == Json::parse(gen.out)["census"]);
	CHECK(Json::parse(gen.out)["total"] == "12");

	const Run csv = run({"census", "--r", "1", "--k", "3", "--format", "csv"});
	CHECK(csv.out == "e_1,count\n-3,1\n3,1\n");

	const Run budget = run({"census", "--r", "2", "--k", "5", "--backend", "bruteforce", "--budget", "10"});
	CHECK(budget.code == 2);
	CHECK(budget.err.find("budget") != std::string::npos);
}

TEST_CASE("verify", "[cli]")
{
	const Run bad = run({"verify", "--suite", "nonneg", "--c", "1/2", "--n-max", "4"});
	CHECK(bad.code == 1);
	const Json j = Json::parse(bad.out);
	REQUIRE(j.is_array());
	CHECK(j[0]["counterexample"]["n"] == 2);
	CHECK(bad.err.find("n = 2") != std::string::npos);

	CHECK(run({"verify", "--suite", "nonneg", "--c", "3/2,2", "--n-max", "8", "--d", "2"}).code == 0);
	CHECK(run({"verify", "--suite", "abc", "--c", "2", "--n-max", "30"}).code == 0);
	CHECK(run({"verify", "--suite", "sign", "--c", "-2,-3/2", "--n-max", "12"}).code == 0);
	CHECK(run({"verify", "--suite", "counterexample", "--c", "1/10,99/100,3/2"}).code == 0);
	CHECK(run({"verify", "--suite", "trivial", "--n-max", "20"}).code == 0);
	CHECK(run({"verify", "--suite", "moretrig", "--c", "10", "--n-max", "12"}).code == 0);

	// Reports come out sorted on (c, property).
	const Run all = run({"verify", "--suite", "all", "--c", "2,3/2", "--n-max", "5"});
	CHECK(all.code == 1); // sign fails for c > 1
	const Json reports = Json::parse(all.out);
	std::vector<std::pair<std::string, std::string>> order;
	for (const auto& rep : reports)
		order.emplace_back(rep["params"]["c"], rep["property"]);
	CHECK(order.front() == std::pair<std::string, std::string>{"1", "trivial"});
	CHECK(order[1] == std::pair<std::string, std::string>{"3/2", "abc"});
	CHECK(order.back() == std::pair<std::string, std::string>{"2", "sign"});
}

TEST_CASE("usage errors exit with 2", "[cli]")
{
	CHECK(run({}).code == 2);
	CHECK(run({"frobnicate"}).code == 2);
	CHECK(run({"expand", "--kind", "T", "--n", "2", "--c", "1/0"}).code == 2);
	CHECK(run({"expand", "--kind", "T", "--n", "2", "--c", "abc"}).code == 2);
	CHECK(run({"expand", "--kind", "V", "--n", "2", "--c", "1"}).code == 2);
	CHECK(run({"expand", "--kind", "T", "--n", "-1", "--c", "1"}).code == 2);
	CHECK(run({"census", "--r", "0", "--k", "2"}).code == 2);
	CHECK(run({"verify", "--suite", "nonneg"}).code == 2);
	CHECK(run({"total", "--r", "2", "--k", "2", "--format", "xml"}).code == 2);
	const Run r = run({"expand", "--kind", "T", "--n", "2", "--c", "x"});
	CHECK(r.out.empty());
	CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
}

TEST_CASE("total", "[cli]")
{
	const Run r = run({"total", "--r", "2", "--k", "2"});
	REQUIRE(r.code == 0);
	CHECK(Json::parse(r.out)["total"] == "12");
	CHECK(run({"total", "--r", "3", "--k", "1", "--format", "csv"}).out == "r,k,total\n3,1,6\n");
}

TEST_CASE("identical invocations give identical output", "[cli]")
{
	const std::vector<std::vector<std::string>> cmds = {
	    {"expand", "--kind", "U", "--n", "7", "--c", "3/2", "--d", "3"},
	    {"census", "--r", "3", "--k", "5", "--backend", "bruteforce"},
	    {"verify", "--suite", "all", "--c", "1/2,-2,2", "--n-max", "6"},
	};
	for (const auto& c : cmds) {
		const Run a = run(c), b = run(c);
		REQUIRE(a.out == b.out);
		REQUIRE(a.code == b.code);
	}
}

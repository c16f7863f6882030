#include "chebpos/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace chebpos {

namespace {

Json exponents(const ExpVec& e)
{
	Json arr = Json::array();
	for (auto v : e)
		arr.push_back(v);
	return arr;
}

void csv_header(std::ostringstream& os, std::size_t d, const char* last)
{
	for (std::size_t i = 1; i <= d; ++i)
		os << "e_" << i << ',';
	os << last << '\n';
}

void csv_exponents(std::ostringstream& os, const ExpVec& e)
{
	for (auto v : e)
		os << v << ',';
}

} // namespace

Json to_json(const LaurentPoly& p)
{
	Json terms = Json::array();
	for (const auto& [e, v] : p.terms())
		terms.push_back(Json{{"exp", exponents(e)},
		                     {"num", v.numerator().get_str()},
		                     {"den", v.denominator().get_str()}});
	return Json{{"dimension", p.dimension()}, {"terms", std::move(terms)}};
}

LaurentPoly laurent_from_json(const Json& j)
{
	try {
		const auto d = j.at("dimension").get<std::size_t>();
		LaurentPoly p(d);
		for (const auto& t : j.at("terms")) {
			auto e = t.at("exp").get<std::vector<std::int64_t>>();
			if (e.size() != d)
				throw std::invalid_argument("term exponent length does not match dimension");
			const mpz_class num(t.at("num").get<std::string>(), 10);
			const mpz_class den(t.at("den").get<std::string>(), 10);
			if (den <= 0)
				throw std::invalid_argument("term denominator must be positive");
			p.add_term(ExpVec(std::move(e)), ExactRational(num, den));
		}
		return p;
	} catch (const nlohmann::json::exception& ex) {
		throw std::invalid_argument(std::string("malformed LaurentPoly JSON: ") + ex.what());
	}
}

Json to_json(const DensePoly& p)
{
	Json arr = Json::array();
	for (const auto& v : p.coefficients())
		arr.push_back(v.to_string());
	return arr;
}

Json to_json(const CensusMap& census)
{
	Json arr = Json::array();
	for (const auto& [e, count] : census)
		arr.push_back(Json{{"e", exponents(e)}, {"count", count.get_str()}});
	return arr;
}

Json to_json(const std::optional<Counterexample>& cx)
{
	if (!cx)
		return nullptr;
	return Json{{"n", cx->n}, {"k", cx->e[0]}, {"e", exponents(cx->e)}, {"value", cx->value.to_string()}};
}

Json to_json(const VerifyReport& report)
{
	Json params = Json::object();
	for (const auto& [key, value] : report.params)
		std::visit([&](const auto& v) { params[key] = v; }, value);

	Json checks = Json::array();
	for (const auto& c : report.checks) {
		Json entry{{"name", c.name}, {"pass", c.pass}, {"counterexample", to_json(c.counterexample)}};
		if (c.informational)
			entry["informational"] = true;
		checks.push_back(std::move(entry));
	}
	return Json{{"property", report.property},
	            {"params", std::move(params)},
	            {"pass", report.pass()},
	            {"counterexample", to_json(report.counterexample())},
	            {"checks", std::move(checks)},
	            {"notes", report.notes}};
}

std::string census_csv(const CensusMap& census, std::size_t rank)
{
	std::ostringstream os;
	csv_header(os, rank, "count");
	for (const auto& [e, count] : census) {
		csv_exponents(os, e);
		os << count.get_str() << '\n';
	}
	return os.str();
}

std::string laurent_csv(const LaurentPoly& p)
{
	std::ostringstream os;
	csv_header(os, p.dimension(), "coeff");
	for (const auto& [e, v] : p.terms()) {
		csv_exponents(os, e);
		os << v.to_string() << '\n';
	}
	return os.str();
}

} // namespace chebpos

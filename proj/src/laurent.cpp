#include "chebpos/laurent.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace chebpos {

namespace {

void check_bound(std::int64_t e)
{
	if (e > kMaxExponent || e < -kMaxExponent)
		throw std::out_of_range("exponent " + std::to_string(e) + " exceeds the bound " +
		                        std::to_string(kMaxExponent));
}

} // namespace

ExpVec::ExpVec(std::initializer_list<std::int64_t> entries) : e_(entries)
{
	std::ranges::for_each(e_, check_bound);
}

ExpVec::ExpVec(std::vector<std::int64_t> entries) : e_(std::move(entries))
{
	std::ranges::for_each(e_, check_bound);
}

std::int64_t ExpVec::abs_degree() const
{
	std::int64_t s = 0;
	for (auto v : e_)
		s += v < 0 ? -v : v;
	return s;
}

std::int64_t ExpVec::total() const
{
	std::int64_t s = 0;
	for (auto v : e_)
		s += v;
	return s;
}

ExpVec ExpVec::operator-() const
{
	ExpVec r(*this);
	for (auto& v : r.e_)
		v = -v;
	return r;
}

ExpVec operator+(const ExpVec& a, const ExpVec& b)
{
	if (a.size() != b.size())
		throw std::invalid_argument("exponent vectors of different length");
	ExpVec r(a);
	for (std::size_t i = 0; i < r.e_.size(); ++i) {
		r.e_[i] += b.e_[i];
		check_bound(r.e_[i]);
	}
	return r;
}

bool GradedLexLess::operator()(const ExpVec& a, const ExpVec& b) const
{
	const auto da = a.abs_degree();
	const auto db = b.abs_degree();
	if (da != db)
		return da < db;
	return std::ranges::lexicographical_compare(a.entries(), b.entries());
}

LaurentPoly::LaurentPoly(std::size_t dimension) : dimension_(dimension)
{
	if (dimension == 0)
		throw std::invalid_argument("LaurentPoly: dimension must be at least 1");
}

LaurentPoly LaurentPoly::constant(std::size_t dimension, const ExactRational& value)
{
	LaurentPoly p(dimension);
	p.add_term(ExpVec(dimension), value);
	return p;
}

LaurentPoly LaurentPoly::monomial(const ExpVec& exponent, const ExactRational& value)
{
	LaurentPoly p(exponent.size());
	p.add_term(exponent, value);
	return p;
}

LaurentPoly LaurentPoly::variable(std::size_t dimension, std::size_t i, std::int64_t power)
{
	if (i >= dimension)
		throw std::out_of_range("variable index out of range");
	std::vector<std::int64_t> e(dimension, 0);
	e[i] = power;
	return monomial(ExpVec(std::move(e)), 1);
}

ExactRational LaurentPoly::coeff(const ExpVec& exponent) const
{
	if (exponent.size() != dimension_)
		throw std::invalid_argument("coeff: exponent length " + std::to_string(exponent.size()) +
		                            " does not match dimension " + std::to_string(dimension_));
	auto it = terms_.find(exponent);
	return it == terms_.end() ? ExactRational() : it->second;
}

void LaurentPoly::add_term(const ExpVec& exponent, const ExactRational& value)
{
	if (exponent.size() != dimension_)
		throw std::invalid_argument("add_term: exponent length does not match dimension");
	if (value.is_zero())
		return;
	auto [it, inserted] = terms_.try_emplace(exponent, value);
	if (!inserted) {
		it->second += value;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

void LaurentPoly::require_same_dimension(const LaurentPoly& o) const
{
	if (dimension_ != o.dimension_)
		throw std::invalid_argument("LaurentPoly: dimension mismatch (" + std::to_string(dimension_) +
		                            " vs " + std::to_string(o.dimension_) + ")");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
	require_same_dimension(o);
	for (const auto& [e, v] : o.terms_)
		add_term(e, v);
	return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
	require_same_dimension(o);
	for (const auto& [e, v] : o.terms_)
		add_term(e, -v);
	return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
	a.require_same_dimension(b);
	LaurentPoly r(a.dimension_);
	for (const auto& [ea, va] : a.terms_)
		for (const auto& [eb, vb] : b.terms_)
			r.add_term(ea + eb, va * vb);
	return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o)
{
	*this = *this * o;
	return *this;
}

LaurentPoly& LaurentPoly::operator*=(const ExactRational& scalar)
{
	if (scalar.is_zero()) {
		terms_.clear();
		return *this;
	}
	for (auto& [e, v] : terms_)
		v *= scalar;
	return *this;
}

LaurentPoly LaurentPoly::operator-() const
{
	LaurentPoly r(*this);
	for (auto& [e, v] : r.terms_)
		v = -v;
	return r;
}

LaurentPoly pow(const LaurentPoly& p, unsigned exponent)
{
	LaurentPoly result = LaurentPoly::constant(p.dimension(), 1);
	LaurentPoly base = p;
	while (exponent != 0) {
		if (exponent & 1u)
			result *= base;
		exponent >>= 1;
		if (exponent != 0)
			base *= base;
	}
	return result;
}

LaurentPoly derivative(const LaurentPoly& p)
{
	if (p.dimension() != 1)
		throw std::invalid_argument("derivative: only defined for one variable, got dimension " +
		                            std::to_string(p.dimension()));
	LaurentPoly r(1);
	for (const auto& [e, v] : p.terms()) {
		const auto k = e[0];
		if (k != 0)
			r.add_term(ExpVec{k - 1}, v * ExactRational(k));
	}
	return r;
}

LaurentPoly reciprocal_sum(std::size_t dimension)
{
	LaurentPoly r(dimension);
	for (std::size_t i = 0; i < dimension; ++i) {
		r += LaurentPoly::variable(dimension, i, 1);
		r += LaurentPoly::variable(dimension, i, -1);
	}
	return r;
}

LaurentPoly cheb_arg(const ExactRational& c, std::size_t dimension)
{
	if (dimension == 0)
		throw std::invalid_argument("cheb_arg: dimension must be at least 1");
	return reciprocal_sum(dimension) * (c / ExactRational(2 * dimension));
}

} // namespace chebpos

#include "chebpos/chebyshev.hpp"

#include <stdexcept>
#include <string>

namespace chebpos {

std::string_view to_string(ChebKind kind)
{
	return kind == ChebKind::First ? "T" : "U";
}

ChebKind parse_kind(std::string_view text)
{
	if (text == "T")
		return ChebKind::First;
	if (text == "U")
		return ChebKind::Second;
	throw std::invalid_argument("unknown Chebyshev kind '" + std::string(text) + "' (expected T or U)");
}

DensePoly::DensePoly(std::vector<ExactRational> coefficients) : c_(std::move(coefficients))
{
	trim();
}

void DensePoly::trim()
{
	while (!c_.empty() && c_.back().is_zero())
		c_.pop_back();
}

ExactRational DensePoly::operator[](std::size_t i) const
{
	return i < c_.size() ? c_[i] : ExactRational();
}

DensePoly& DensePoly::operator+=(const DensePoly& o)
{
	if (c_.size() < o.c_.size())
		c_.resize(o.c_.size());
	for (std::size_t i = 0; i < o.c_.size(); ++i)
		c_[i] += o.c_[i];
	trim();
	return *this;
}

DensePoly& DensePoly::operator-=(const DensePoly& o)
{
	if (c_.size() < o.c_.size())
		c_.resize(o.c_.size());
	for (std::size_t i = 0; i < o.c_.size(); ++i)
		c_[i] -= o.c_[i];
	trim();
	return *this;
}

DensePoly& DensePoly::operator*=(const ExactRational& s)
{
	for (auto& v : c_)
		v *= s;
	trim();
	return *this;
}

DensePoly DensePoly::shifted() const
{
	if (c_.empty())
		return {};
	std::vector<ExactRational> r;
	r.reserve(c_.size() + 1);
	r.emplace_back();
	r.insert(r.end(), c_.begin(), c_.end());
	return DensePoly(std::move(r));
}

DensePoly cheb_coeffs(ChebKind kind, unsigned n)
{
	DensePoly prev({ExactRational(1)});
	if (n == 0)
		return prev;
	DensePoly cur({ExactRational(0), ExactRational(kind == ChebKind::First ? 1 : 2)});
	for (unsigned j = 1; j < n; ++j) {
		DensePoly next = cur.shifted() * ExactRational(2) - prev;
		prev = std::move(cur);
		cur = std::move(next);
	}
	return cur;
}

ExactRational cheb_coeff_closed(unsigned n, unsigned m)
{
	if (n == 0)
		throw std::out_of_range("cheb_coeff_closed: n must be at least 1");
	if (2 * m > n)
		throw std::out_of_range("cheb_coeff_closed: m = " + std::to_string(m) + " outside [0, " +
		                        std::to_string(n / 2) + "]");
	ExactRational value(mpz_class(n), mpz_class(n - m));
	value *= ExactRational(binomial(n - m, m));
	const long two_exp = static_cast<long>(n) - 2 * static_cast<long>(m) - 1;
	if (two_exp >= 0)
		value *= pow(ExactRational(2), static_cast<unsigned long>(two_exp));
	else
		value /= ExactRational(2);
	if (m % 2 == 1)
		value = -value;
	if (!value.is_integer())
		throw std::logic_error("cheb_coeff_closed: non-integral value " + value.to_string());
	return value;
}

DensePoly scaled_t_coeffs(unsigned k, unsigned long s)
{
	if (s == 0)
		throw std::invalid_argument("scaled_t_coeffs: s must be positive");
	DensePoly prev({ExactRational(2)});
	if (k == 0)
		return prev;
	DensePoly cur({ExactRational(0), ExactRational(1)});
	const ExactRational scale(s);
	for (unsigned j = 1; j < k; ++j) {
		DensePoly next = cur.shifted() - prev * scale;
		prev = std::move(cur);
		cur = std::move(next);
	}
	return cur;
}

LaurentPoly to_laurent(const DensePoly& p)
{
	LaurentPoly r(1);
	const auto c = p.coefficients();
	for (std::size_t i = 0; i < c.size(); ++i)
		r.add_term(ExpVec{static_cast<std::int64_t>(i)}, c[i]);
	return r;
}

} // namespace chebpos

#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "chebpos/laurent.hpp"
#include "chebpos/rational.hpp"

namespace chebpos {

enum class ChebKind { First, Second };

/// "T" or "U".
std::string_view to_string(ChebKind kind);
/// Inverse of to_string; throws std::invalid_argument otherwise.
ChebKind parse_kind(std::string_view text);

/// Dense one-variable polynomial; index is the exponent. Trailing zeros
/// are trimmed, so the zero polynomial is the empty sequence.
class DensePoly {
public:
	DensePoly() = default;
	explicit DensePoly(std::vector<ExactRational> coefficients);

	std::span<const ExactRational> coefficients() const { return c_; }
	std::size_t size() const { return c_.size(); }
	bool is_zero() const { return c_.empty(); }
	/// -1 for the zero polynomial.
	long degree() const { return static_cast<long>(c_.size()) - 1; }
	/// Coefficient of x^i, zero past the degree.
	ExactRational operator[](std::size_t i) const;

	DensePoly& operator+=(const DensePoly& o);
	DensePoly& operator-=(const DensePoly& o);
	DensePoly& operator*=(const ExactRational& s);
	friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
	friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
	friend DensePoly operator*(DensePoly a, const ExactRational& s) { return a *= s; }

	/// Multiplication by x.
	DensePoly shifted() const;

	friend bool operator==(const DensePoly&, const DensePoly&) = default;

private:
	void trim();

	std::vector<ExactRational> c_;
};

/// T_n or U_n from the three-term recurrence p_{n+1} = 2x p_n - p_{n-1}.
DensePoly cheb_coeffs(ChebKind kind, unsigned n);

/// Coefficient of x^{n-2m} in T_n from the closed form
/// (-1)^m n/(n-m) C(n-m, m) 2^{n-2m-1}. Requires n >= 1 and
/// 0 <= m <= n/2 (std::out_of_range otherwise). The result is checked to
/// be an integer; std::logic_error if not.
ExactRational cheb_coeff_closed(unsigned n, unsigned m);

/// Dickson rescaling D_k(y) = 2 (sqrt s)^k T_k(y / (2 sqrt s)), which has
/// integer coefficients: D_0 = 2, D_1 = y, D_{k+1} = y D_k - s D_{k-1}.
/// Throws std::invalid_argument when s is 0.
DensePoly scaled_t_coeffs(unsigned k, unsigned long s);

/// The same polynomial viewed as a one-variable LaurentPoly.
LaurentPoly to_laurent(const DensePoly& p);

} // namespace chebpos

#pragma once

#include <cstddef>
#include <cstdint>

#include "chebpos/chebyshev.hpp"
#include "chebpos/laurent.hpp"
#include "chebpos/rational.hpp"

namespace chebpos {

/// R_n (kind First) or S_n (kind Second) with parameter c in d variables:
/// T_n or U_n evaluated at (c / 2d) * sum_i (x_i + 1/x_i).
struct ExpansionRequest {
	ChebKind kind = ChebKind::First;
	unsigned n = 0;
	ExactRational c = 1;
	std::size_t d = 1;
};

/// p_{n+1} = 2 A p_n - p_{n-1} over LaurentPoly, A = cheb_arg(c, d).
LaurentPoly expand_recurrence(const ExpansionRequest& req);

/// Dense T_n / U_n coefficients evaluated at A = cheb_arg(c, d).
LaurentPoly expand_compose(const ExpansionRequest& req);

/// Evaluates a one-variable polynomial at a Laurent polynomial. When every
/// nonzero coefficient has the parity of the degree, Horner runs over
/// arg^2 and multiplies by arg once at the end.
LaurentPoly evaluate_at(const DensePoly& poly, const LaurentPoly& arg);

/// Coefficient of x^k in R_n(c; x) from the single-variable closed form
///   (c^n / 2) sum_m (-1/c^2)^m n/(n-m) C(n-m, m) C(n-2m, (n-2m-k)/2),
/// with C(a, b) = 0 for b outside [0, a] or non-integral. n = 0 gives
/// the constant 1. Throws std::domain_error when c = 0.
ExactRational explicit_coeff(unsigned n, const ExactRational& c, std::int64_t k);

/// Coefficient of x^k in S_n(c; x). Built from explicit_coeff through
/// U_n = 2 (T_n + T_{n-2} + ...) - [n even]. Throws std::domain_error
/// when c = 0.
ExactRational explicit_coeff_u(unsigned n, const ExactRational& c, std::int64_t k);

} // namespace chebpos

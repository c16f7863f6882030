#include "chebpos/expansion.hpp"

#include <stdexcept>

namespace chebpos {

LaurentPoly expand_recurrence(const ExpansionRequest& req)
{
	const LaurentPoly arg = cheb_arg(req.c, req.d);
	LaurentPoly prev = LaurentPoly::constant(req.d, 1);
	if (req.n == 0)
		return prev;
	const LaurentPoly twice_arg = arg * ExactRational(2);
	LaurentPoly cur = req.kind == ChebKind::First ? arg : twice_arg;
	for (unsigned j = 1; j < req.n; ++j) {
		LaurentPoly next = twice_arg * cur - prev;
		prev = std::move(cur);
		cur = std::move(next);
	}
	return cur;
}

LaurentPoly evaluate_at(const DensePoly& poly, const LaurentPoly& arg)
{
	const std::size_t d = arg.dimension();
	if (poly.is_zero())
		return LaurentPoly(d);

	const auto coeffs = poly.coefficients();
	const std::size_t top = coeffs.size() - 1;
	bool parity_pure = true;
	for (std::size_t j = 0; j < coeffs.size() && parity_pure; ++j)
		if ((top - j) % 2 == 1 && !coeffs[j].is_zero())
			parity_pure = false;

	if (!parity_pure) {
		LaurentPoly acc(d);
		for (std::size_t j = coeffs.size(); j-- > 0;) {
			acc *= arg;
			acc += LaurentPoly::constant(d, coeffs[j]);
		}
		return acc;
	}

	// poly(a) = a^{top mod 2} * q(a^2), q holding every second coefficient.
	const LaurentPoly arg_sq = arg * arg;
	LaurentPoly acc(d);
	for (long j = static_cast<long>(top); j >= 0; j -= 2) {
		acc *= arg_sq;
		acc += LaurentPoly::constant(d, coeffs[j]);
	}
	if (top % 2 == 1)
		acc *= arg;
	return acc;
}

LaurentPoly expand_compose(const ExpansionRequest& req)
{
	return evaluate_at(cheb_coeffs(req.kind, req.n), cheb_arg(req.c, req.d));
}

ExactRational explicit_coeff(unsigned n, const ExactRational& c, std::int64_t k)
{
	if (c.is_zero())
		throw std::domain_error("explicit_coeff: c must be nonzero");
	const std::int64_t nn = n;
	if (k > nn || k < -nn || (nn - k) % 2 != 0)
		return {};
	if (n == 0)
		return 1;

	const ExactRational step = -(ExactRational(1) / (c * c));
	ExactRational step_pow(1);
	ExactRational sum;
	for (std::int64_t m = 0; 2 * m <= nn; ++m) {
		const std::int64_t j = nn - 2 * m;
		// (j - k) is even because (n - k) is.
		const mpz_class inner = binomial(nn - m, m) * binomial(j, (j - k) / 2);
		if (inner != 0)
			sum += step_pow * ExactRational(mpz_class(nn), mpz_class(nn - m)) * ExactRational(inner);
		step_pow *= step;
	}
	return pow(c, n) * sum / ExactRational(2);
}

ExactRational explicit_coeff_u(unsigned n, const ExactRational& c, std::int64_t k)
{
	if (c.is_zero())
		throw std::domain_error("explicit_coeff_u: c must be nonzero");
	// U_n - U_{n-2} = 2 T_n telescopes down to U_1 = 2 T_1 or U_0 = T_0.
	ExactRational sum;
	for (long j = n; j >= 0; j -= 2)
		sum += explicit_coeff(static_cast<unsigned>(j), c, k);
	sum *= ExactRational(2);
	if (n % 2 == 0)
		sum -= explicit_coeff(0, c, k);
	return sum;
}

} // namespace chebpos

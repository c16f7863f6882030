#include "chebpos/rational.hpp"

#include <cassert>
#include <stdexcept>

namespace chebpos {

namespace {

bool all_digits(std::string_view s)
{
	if (s.empty())
		return false;
	for (char ch : s)
		if (ch < '0' || ch > '9')
			return false;
	return true;
}

} // namespace

ExactRational::ExactRational(const mpz_class& num, const mpz_class& den)
{
	if (den == 0)
		throw std::domain_error("ExactRational: zero denominator");
	q_.get_num() = num;
	q_.get_den() = den;
	q_.canonicalize();
	check_canonical();
}

ExactRational::ExactRational(mpq_class q) : q_(std::move(q))
{
	q_.canonicalize();
	check_canonical();
}

ExactRational ExactRational::parse(std::string_view text)
{
	auto body = text;
	bool negative = false;
	if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
		negative = body.front() == '-';
		body.remove_prefix(1);
	}
	const auto slash = body.find('/');
	const auto num_text = body.substr(0, slash);
	const auto den_text = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
	if (!all_digits(num_text) || !all_digits(den_text))
		throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");

	mpz_class num(std::string(num_text), 10);
	mpz_class den(std::string(den_text), 10);
	if (den == 0)
		throw std::invalid_argument("malformed rational (zero denominator): '" + std::string(text) + "'");
	if (negative)
		num = -num;
	return ExactRational(num, den);
}

std::string ExactRational::to_string() const
{
	if (is_integer())
		return q_.get_num().get_str();
	return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

ExactRational& ExactRational::operator+=(const ExactRational& o)
{
	q_ += o.q_;
	check_canonical();
	return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& o)
{
	q_ -= o.q_;
	check_canonical();
	return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& o)
{
	q_ *= o.q_;
	check_canonical();
	return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& o)
{
	if (o.is_zero())
		throw std::domain_error("ExactRational: division by zero");
	q_ /= o.q_;
	check_canonical();
	return *this;
}

ExactRational ExactRational::operator-() const
{
	ExactRational r;
	r.q_ = -q_;
	return r;
}

void ExactRational::check_canonical() const
{
#ifndef NDEBUG
	mpz_class g;
	mpz_gcd(g.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
	assert(q_.get_den() >= 1);
	assert(g == 1);
#endif
}

ExactRational pow(const ExactRational& base, unsigned long exponent)
{
	mpz_class num, den;
	mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
	mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
	return ExactRational(num, den);
}

mpz_class binomial(long n, long k)
{
	if (n < 0 || k < 0 || k > n)
		return 0;
	mpz_class r;
	mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
	return r;
}

} // namespace chebpos

#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace chebpos {

/// Arbitrary-precision fraction kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class ExactRational {
public:
	ExactRational() = default;

	template <std::signed_integral I>
	ExactRational(I value) : q_(static_cast<long>(value)) {}

	template <std::unsigned_integral I>
	ExactRational(I value) : q_(static_cast<unsigned long>(value)) {}

	ExactRational(const mpz_class& value) : q_(value) {}

	/// Throws std::domain_error when `den` is zero.
	ExactRational(const mpz_class& num, const mpz_class& den);

	explicit ExactRational(mpq_class q);

	/// Accepts "p/q" or "p" with an optional leading sign; no whitespace.
	/// Throws std::invalid_argument on malformed text or a zero denominator.
	static ExactRational parse(std::string_view text);

	mpz_class numerator() const { return q_.get_num(); }
	mpz_class denominator() const { return q_.get_den(); }
	const mpq_class& raw() const { return q_; }

	int sign() const { return sgn(q_); }
	bool is_zero() const { return sign() == 0; }
	bool is_integer() const { return q_.get_den() == 1; }

	/// "p" when the value is an integer, otherwise "p/q".
	std::string to_string() const;

	ExactRational& operator+=(const ExactRational& o);
	ExactRational& operator-=(const ExactRational& o);
	ExactRational& operator*=(const ExactRational& o);
	/// Throws std::domain_error on division by zero.
	ExactRational& operator/=(const ExactRational& o);

	friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
	friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
	friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
	friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
	ExactRational operator-() const;

	friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.q_ == b.q_; }
	friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b)
	{
		const int c = cmp(a.q_, b.q_);
		return c < 0 ? std::strong_ordering::less
		       : c > 0 ? std::strong_ordering::greater
		               : std::strong_ordering::equal;
	}

	friend std::ostream& operator<<(std::ostream& os, const ExactRational& q)
	{
		return os << q.to_string();
	}

private:
	void check_canonical() const;

	mpq_class q_;
};

ExactRational pow(const ExactRational& base, unsigned long exponent);

/// Binomial coefficient, zero when k < 0 or k > n.
mpz_class binomial(long n, long k);

} // namespace chebpos

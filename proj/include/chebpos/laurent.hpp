#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

#include "chebpos/rational.hpp"

namespace chebpos {

/// Largest admissible |exponent| in any coordinate.
inline constexpr std::int64_t kMaxExponent = 1'000'000;

/// Signed exponent vector of a Laurent monomial. The guard on
/// kMaxExponent is enforced on construction and on addition
/// (std::out_of_range).
class ExpVec {
public:
	explicit ExpVec(std::size_t dimension) : e_(dimension, 0) {}
	ExpVec(std::initializer_list<std::int64_t> entries);
	explicit ExpVec(std::vector<std::int64_t> entries);

	std::size_t size() const { return e_.size(); }
	std::int64_t operator[](std::size_t i) const { return e_[i]; }
	std::span<const std::int64_t> entries() const { return e_; }
	auto begin() const { return e_.begin(); }
	auto end() const { return e_.end(); }

	/// Sum of |e_i|.
	std::int64_t abs_degree() const;
	/// Sum of e_i.
	std::int64_t total() const;

	ExpVec operator-() const;
	friend ExpVec operator+(const ExpVec& a, const ExpVec& b);
	friend bool operator==(const ExpVec&, const ExpVec&) = default;

private:
	std::vector<std::int64_t> e_;
};

/// Graded-lex order: by abs_degree, then lexicographically.
struct GradedLexLess {
	bool operator()(const ExpVec& a, const ExpVec& b) const;
};

/// Sparse Laurent polynomial in `dimension` variables with exact rational
/// coefficients. Zero coefficients are never stored, so == is mathematical
/// equality. Terms iterate in graded-lex order.
class LaurentPoly {
public:
	using TermMap = std::map<ExpVec, ExactRational, GradedLexLess>;

	/// The zero polynomial. Throws std::invalid_argument when dimension is 0.
	explicit LaurentPoly(std::size_t dimension);

	static LaurentPoly constant(std::size_t dimension, const ExactRational& value);
	static LaurentPoly monomial(const ExpVec& exponent, const ExactRational& value);
	/// x_i in `dimension` variables (0-based i).
	static LaurentPoly variable(std::size_t dimension, std::size_t i, std::int64_t power = 1);

	std::size_t dimension() const { return dimension_; }
	const TermMap& terms() const { return terms_; }
	std::size_t size() const { return terms_.size(); }
	bool is_zero() const { return terms_.empty(); }

	/// Stored coefficient or exact zero. Throws std::invalid_argument on a
	/// length mismatch.
	ExactRational coeff(const ExpVec& exponent) const;

	/// Accumulates value into the coefficient at `exponent`, purging a zero result.
	void add_term(const ExpVec& exponent, const ExactRational& value);

	LaurentPoly& operator+=(const LaurentPoly& o);
	LaurentPoly& operator-=(const LaurentPoly& o);
	LaurentPoly& operator*=(const LaurentPoly& o);
	LaurentPoly& operator*=(const ExactRational& scalar);

	friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
	friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
	friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
	friend LaurentPoly operator*(LaurentPoly a, const ExactRational& s) { return a *= s; }
	friend LaurentPoly operator*(const ExactRational& s, LaurentPoly a) { return a *= s; }
	LaurentPoly operator-() const;

	friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
	void require_same_dimension(const LaurentPoly& o) const;

	std::size_t dimension_;
	TermMap terms_;
};

/// p^e by repeated squaring; p^0 is the constant 1.
LaurentPoly pow(const LaurentPoly& p, unsigned exponent);

/// Formal d/dx of a one-variable polynomial. Throws std::invalid_argument
/// when p.dimension() != 1.
LaurentPoly derivative(const LaurentPoly& p);

/// Sum over i of (x_i + 1/x_i).
LaurentPoly reciprocal_sum(std::size_t dimension);

/// (c / 2d) * sum_i (x_i + 1/x_i): the argument substituted into T_n and U_n.
LaurentPoly cheb_arg(const ExactRational& c, std::size_t dimension);

} // namespace chebpos

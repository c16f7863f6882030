#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "chebpos/laurent.hpp"

namespace chebpos {

/// Generator a_i (1-based) or its inverse.
struct Letter {
	std::uint32_t generator = 1;
	int sign = 1;

	Letter inverse() const { return {generator, -sign}; }
	friend bool operator==(const Letter&, const Letter&) = default;
};

struct Word {
	std::vector<Letter> letters;
	std::uint32_t rank = 1;
};

/// Exponent sums (e_1, ..., e_r) of a word.
using HomologyVector = ExpVec;

/// Homology class -> number of words, classes in graded-lex order.
/// Classes with count zero are absent.
using CensusMap = std::map<HomologyVector, mpz_class, GradedLexLess>;

class BudgetExceeded : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Raised when the generating function yields a negative or non-integral
/// coefficient.
class CensusConsistencyError : public std::logic_error {
public:
	using std::logic_error::logic_error;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

/// True when no adjacent pair, including last->first, cancels. The empty
/// word and single letters are cyclically reduced. Throws std::out_of_range
/// for a letter outside the word's rank or with sign other than +-1.
bool is_cyclically_reduced(const Word& w);

/// Throws std::out_of_range for a generator outside the rank.
HomologyVector abelianize(const Word& w);

/// Number of search nodes census_bruteforce visits: the count of reduced
/// words of length 1..k, sum_j 2r (2r-1)^{j-1}.
mpz_class bruteforce_nodes(std::uint32_t r, std::uint32_t k);

/// Depth-first enumeration of cyclically reduced words of length k in F_r,
/// split by first letter across up to `threads` workers (0 = hardware
/// concurrency). Throws BudgetExceeded when bruteforce_nodes(r, k) > budget,
/// std::invalid_argument when r or k is 0.
CensusMap census_bruteforce(std::uint32_t r, std::uint32_t k,
                            std::uint64_t budget = kDefaultNodeBudget, unsigned threads = 0);

/// Coefficients of 2 (sqrt(2r-1))^k R_k(r / sqrt(2r-1); x) + (r-1)(1 + (-1)^k),
/// computed over the integers as D_k(Y) with Y = sum_i (x_i + 1/x_i) and
/// D_k the Dickson rescaling at s = 2r - 1.
CensusMap census_genfn(std::uint32_t r, std::uint32_t k);

/// (2r-1)^k + 1 + (r-1)(1 + (-1)^k).
mpz_class total_count(std::uint32_t r, std::uint32_t k);

/// Sum of all counts in a census.
mpz_class census_total(const CensusMap& census);

} // namespace chebpos

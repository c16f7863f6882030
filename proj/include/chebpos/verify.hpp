#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "chebpos/chebyshev.hpp"
#include "chebpos/laurent.hpp"
#include "chebpos/rational.hpp"

namespace chebpos {

/// Coefficient of x^k in T_n or U_n at (c/2)(x + 1/x), row by row for
/// n = 0..n_max.
struct CoeffTable {
	ChebKind kind = ChebKind::First;
	ExactRational c;
	std::vector<std::map<std::int64_t, ExactRational>> rows;

	/// Zero outside the stored support, including n < 0.
	ExactRational at(long n, std::int64_t k) const;
};

/// Rows from a_{n+1}^k = c (a_n^{k-1} + a_n^{k+1}) - a_{n-1}^k with seeds
/// a_0^0 = 1 and a_1^{+-1} = c (U) or c/2 (T).
CoeffTable build_table(ChebKind kind, const ExactRational& c, unsigned n_max);

struct Counterexample {
	unsigned n = 0;
	ExpVec e{0};
	ExactRational value;
};

struct PropertyCheck {
	std::string name;
	bool pass = true;
	std::optional<Counterexample> counterexample;
	/// Reported but excluded from VerifyReport::pass().
	bool informational = false;

	/// Records the first failure only.
	void fail(unsigned n, ExpVec e, ExactRational value);
};

using ParamValue = std::variant<std::int64_t, std::string>;

struct VerifyReport {
	std::string property;
	std::vector<std::pair<std::string, ParamValue>> params;
	std::vector<PropertyCheck> checks;
	std::vector<std::string> notes;

	bool pass() const;
	/// First counterexample among the non-informational checks.
	std::optional<Counterexample> counterexample() const;
	const PropertyCheck* check(std::string_view name) const;
};

/// Exponent vectors e in Z^d with |e|_1 <= n and |e|_1 = n (mod 2), in
/// graded-lex order: the support a degree-n expansion may have.
std::vector<ExpVec> parity_support(std::size_t d, unsigned n);

/// Checks "positive": each coefficient of the kind's expansion on
/// parity_support is > 0 and every other coefficient is zero, for all
/// n <= n_max. "nonnegative" (informational) relaxes > 0 to >= 0.
VerifyReport verify_nonneg(ChebKind kind, const ExactRational& c, unsigned n_max, std::size_t d);

/// On the U table: (a) a_n^k >= 0, (b) a_n^k >= max(a_{n-1}^{k-1}, a_{n-1}^{k+1}),
/// (c) a_n^k >= a_{n-2}^k, each strict exactly when |k| <= n and n - k is
/// even, and an equality otherwise.
VerifyReport verify_abc(const ExactRational& c, unsigned n_max);

/// "identity": b_n^k = (a_n^k - a_{n-2}^k) / 2 for 2 <= n <= n_max, |k| <= n.
/// "positivity": b_n^k > 0 on the parity support (only when c > 1).
/// "printed_variant" (informational): b_n^k = a_n^k - a_n^{k-2}.
VerifyReport verify_moretrig(const ExactRational& c, unsigned n_max);

/// Every nonzero coefficient of R_n(c; x) and S_n(c; x) has sign (-1)^n.
VerifyReport sign_pattern(const ExactRational& c, unsigned n_max);

struct SignWitness {
	ChebKind kind = ChebKind::First;
	unsigned n = 0;
	std::int64_t k = 0;
	ExactRational value;
};

inline constexpr unsigned kDefaultSearchCap = 64;

/// Smallest n <= cap at which R_n(c; x) (and S_n when include_u) has
/// coefficients of both signs. The witness is the first coefficient in
/// graded-lex order whose sign differs from that of x^n.
std::optional<SignWitness> find_counterexample(const ExactRational& c, unsigned cap = kDefaultSearchCap,
                                               bool include_u = false);

/// Wraps find_counterexample. Passes when a witness exists exactly when
/// |c| < 1.
VerifyReport counterexample_report(const ExactRational& c, unsigned cap = kDefaultSearchCap,
                                   bool include_u = false);

/// R_n(1; x) = (x^n + x^{-n}) / 2 for all n <= n_max.
VerifyReport verify_trivial(unsigned n_max);

} // namespace chebpos

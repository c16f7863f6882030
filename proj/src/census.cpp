#include "chebpos/census.hpp"

#include <algorithm>
#include <future>
#include <string>
#include <thread>

#include "chebpos/chebyshev.hpp"
#include "chebpos/expansion.hpp"

namespace chebpos {

namespace {

void check_letter(const Letter& l, std::uint32_t rank)
{
	if (l.generator < 1 || l.generator > rank)
		throw std::out_of_range("letter a_" + std::to_string(l.generator) + " outside rank " +
		                        std::to_string(rank));
	if (l.sign != 1 && l.sign != -1)
		throw std::out_of_range("letter sign must be +1 or -1");
}

// Letters are coded 0..2r-1: generator index = code / 2, inverse = code ^ 1,
// even codes are positive. Iterating codes upward is lexicographic on
// (generator, sign) with the positive letter first.
constexpr std::size_t kDenseLimit = std::size_t(1) << 17;

/// Enumerates all cyclically reduced words of length k starting with
/// `first` and tallies their homology classes.
class Enumerator {
public:
	Enumerator(std::uint32_t r, std::uint32_t k, unsigned first)
	    : r_(r), k_(k), first_(first), exps_(r, 0)
	{
		const std::size_t side = 2 * std::size_t(k) + 1;
		std::size_t size = 1;
		dense_ = true;
		for (std::uint32_t i = 0; i < r; ++i) {
			if (size > kDenseLimit / side) {
				dense_ = false;
				break;
			}
			size *= side;
		}
		if (dense_) {
			strides_.resize(r);
			std::size_t s = 1;
			for (std::uint32_t i = 0; i < r; ++i) {
				strides_[i] = s;
				s *= side;
			}
			dense_counts_.assign(size, 0);
			// Offset of the zero vector.
			for (std::uint32_t i = 0; i < r; ++i)
				offset_ += k * strides_[i];
		}
	}

	void run()
	{
		push(first_);
		descend(1, first_);
		pop(first_);
	}

	void merge_into(CensusMap& out) const
	{
		if (dense_) {
			const std::int64_t side = 2 * std::int64_t(k_) + 1;
			for (std::size_t idx = 0; idx < dense_counts_.size(); ++idx) {
				if (dense_counts_[idx] == 0)
					continue;
				std::vector<std::int64_t> e(r_);
				std::size_t rest = idx;
				for (std::uint32_t i = 0; i < r_; ++i) {
					e[i] = std::int64_t(rest % side) - std::int64_t(k_);
					rest /= side;
				}
				add(out, HomologyVector(std::move(e)), dense_counts_[idx]);
			}
		} else {
			for (const auto& [e, count] : sparse_counts_)
				add(out, HomologyVector(e), count);
		}
	}

private:
	static void add(CensusMap& out, HomologyVector e, std::uint64_t count)
	{
		auto [it, inserted] = out.try_emplace(std::move(e), mpz_class(static_cast<unsigned long>(count)));
		if (!inserted)
			it->second += static_cast<unsigned long>(count);
	}

	void push(unsigned code)
	{
		const unsigned g = code >> 1;
		const int delta = (code & 1u) ? -1 : 1;
		if (dense_ && delta > 0)
			offset_ += strides_[g];
		else if (dense_)
			offset_ -= strides_[g];
		else
			exps_[g] += delta;
	}

	void pop(unsigned code) { push(code ^ 1u); }

	void record()
	{
		if (dense_)
			++dense_counts_[offset_];
		else
			++sparse_counts_[exps_];
	}

	void descend(std::uint32_t depth, unsigned prev)
	{
		if (depth == k_) {
			record();
			return;
		}
		const bool last = depth + 1 == k_;
		const unsigned letters = 2 * r_;
		for (unsigned code = 0; code < letters; ++code) {
			if (code == (prev ^ 1u))
				continue;
			if (last && code == (first_ ^ 1u))
				continue;
			push(code);
			descend(depth + 1, code);
			pop(code);
		}
	}

	std::uint32_t r_, k_;
	unsigned first_;
	bool dense_ = false;
	std::vector<std::size_t> strides_;
	std::size_t offset_ = 0;
	std::vector<std::uint64_t> dense_counts_;
	std::vector<std::int64_t> exps_;
	std::map<std::vector<std::int64_t>, std::uint64_t> sparse_counts_;
};

} // namespace

bool is_cyclically_reduced(const Word& w)
{
	for (const auto& l : w.letters)
		check_letter(l, w.rank);
	const std::size_t n = w.letters.size();
	if (n < 2)
		return true;
	for (std::size_t i = 0; i + 1 < n; ++i)
		if (w.letters[i + 1] == w.letters[i].inverse())
			return false;
	return !(w.letters.front() == w.letters.back().inverse());
}

HomologyVector abelianize(const Word& w)
{
	std::vector<std::int64_t> e(w.rank, 0);
	for (const auto& l : w.letters) {
		check_letter(l, w.rank);
		e[l.generator - 1] += l.sign;
	}
	return HomologyVector(std::move(e));
}

mpz_class bruteforce_nodes(std::uint32_t r, std::uint32_t k)
{
	mpz_class total = 0;
	mpz_class level = 2 * static_cast<unsigned long>(r);
	for (std::uint32_t j = 1; j <= k; ++j) {
		total += level;
		level *= 2 * static_cast<unsigned long>(r) - 1;
	}
	return total;
}

CensusMap census_bruteforce(std::uint32_t r, std::uint32_t k, std::uint64_t budget, unsigned threads)
{
	if (r == 0 || k == 0)
		throw std::invalid_argument("census_bruteforce: rank and length must be at least 1");
	const mpz_class nodes = bruteforce_nodes(r, k);
	if (nodes > mpz_class(std::to_string(budget)))
		throw BudgetExceeded("census_bruteforce: r = " + std::to_string(r) + ", k = " + std::to_string(k) +
		                     " needs " + nodes.get_str() + " nodes, exceeding the budget of " +
		                     std::to_string(budget));

	const unsigned letters = 2 * r;
	if (threads == 0)
		threads = std::max(1u, std::thread::hardware_concurrency());

	std::vector<Enumerator> workers;
	workers.reserve(letters);
	for (unsigned first = 0; first < letters; ++first)
		workers.emplace_back(r, k, first);

	if (threads == 1) {
		for (auto& w : workers)
			w.run();
	} else {
		// Each task owns one worker; at most `threads` tasks in flight.
		for (unsigned begin = 0; begin < letters; begin += threads) {
			std::vector<std::future<void>> batch;
			for (unsigned i = begin; i < std::min(letters, begin + threads); ++i)
				batch.push_back(std::async(std::launch::async, [&w = workers[i]] { w.run(); }));
			for (auto& f : batch)
				f.get();
		}
	}

	CensusMap result;
	for (const auto& w : workers)
		w.merge_into(result);
	return result;
}

CensusMap census_genfn(std::uint32_t r, std::uint32_t k)
{
	if (r == 0 || k == 0)
		throw std::invalid_argument("census_genfn: rank and length must be at least 1");

	const LaurentPoly y = reciprocal_sum(r);
	LaurentPoly gf = evaluate_at(scaled_t_coeffs(k, 2ul * r - 1), y);
	const long correction = static_cast<long>(r - 1) * (k % 2 == 0 ? 2 : 0);
	gf.add_term(HomologyVector(r), correction);

	CensusMap result;
	for (const auto& [e, v] : gf.terms()) {
		if (!v.is_integer() || v.sign() < 0)
			throw CensusConsistencyError("census_genfn: coefficient " + v.to_string() +
			                             " is not a non-negative integer");
		result.emplace(e, v.numerator());
	}
	return result;
}

mpz_class total_count(std::uint32_t r, std::uint32_t k)
{
	if (r == 0 || k == 0)
		throw std::invalid_argument("total_count: rank and length must be at least 1");
	mpz_class power;
	mpz_ui_pow_ui(power.get_mpz_t(), 2ul * r - 1, k);
	const unsigned long correction = (static_cast<unsigned long>(r) - 1) * (k % 2 == 0 ? 2 : 0);
	return power + 1 + correction;
}

mpz_class census_total(const CensusMap& census)
{
	mpz_class s = 0;
	for (const auto& [e, count] : census)
		s += count;
	return s;
}

} // namespace chebpos

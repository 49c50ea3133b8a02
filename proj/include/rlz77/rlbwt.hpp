/*
 * rlbwt.hpp
 *
 *  Dynamic run-length encoded BWT of a string built right to left (online
 *  left extension). Layout:
 *
 *    heads      one symbol per run
 *    run_starts bitvector marking the first position of every run
 *    lengths[c] concatenated lengths of the c-runs, a run of length m
 *               written as 10^{m-1}
 *    counts     number of occurrences of each symbol (partial sums give the
 *               C array)
 *
 *  While the structure is open for extension the terminator is virtual: it
 *  is reported at term_pos() by every query but is not stored in the runs,
 *  so that overwriting it needs no deletion. seal() stores it physically;
 *  from then on the structure is read-only and the run queries become
 *  available.
 *
 *  All BWT positions are 0-based, intervals inclusive, rank exclusive.
 */

#ifndef RLZ77_RLBWT_HPP_
#define RLZ77_RLBWT_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "alphabet.hpp"
#include "dyn_sequence.hpp"
#include "errors.hpp"
#include "gap_bitvector.hpp"
#include "spsi.hpp"

namespace rlz77 {

struct interval {
	std::uint64_t lo = 0;
	std::uint64_t hi = 0;

	std::uint64_t width() const { return hi - lo + 1; }
	bool contains(std::uint64_t k) const { return lo <= k && k <= hi; }
	bool operator==(const interval&) const = default;
};

struct run_bounds {
	std::uint64_t first = 0;
	std::uint64_t last = 0;
	symbol c = 0;

	bool operator==(const run_bounds&) const = default;
};

class rlbwt {
public:
	rlbwt() : heads_(alphabet_size), lengths_(alphabet_size), counts_(alphabet_size) {
		counts_.update(bwt_terminator + 1, 1);
	}

	// builds a sealed structure holding an explicit BWT (exactly one terminator)
	static rlbwt from_bwt(std::span<const symbol> bwt) {
		rlbwt r;
		std::optional<std::uint64_t> term;
		for (std::uint64_t k = 0; k < bwt.size(); ++k) {
			if (bwt[k] >= alphabet_size) throw std::out_of_range("rlbwt::from_bwt: symbol outside alphabet");
			if (bwt[k] == bwt_terminator) {
				if (term) throw contract_violation("rlbwt::from_bwt: more than one terminator");
				term = k;
			}
		}
		if (!term) throw contract_violation("rlbwt::from_bwt: no terminator");
		for (std::uint64_t k = 0; k < bwt.size(); ++k) {
			if (bwt[k] == bwt_terminator) continue;
			r.insert_stored(r.stored_size(), bwt[k]);
			r.counts_.update(bwt[k] + 1, 1);
		}
		r.size_ = bwt.size();
		r.term_pos_ = *term;
		r.seal();
		return r;
	}

	std::uint64_t size() const { return size_; }
	std::uint64_t term_pos() const { return term_pos_; }
	bool sealed() const { return sealed_; }

	// number of equal-letter runs of the BWT, terminator included
	std::uint64_t runs() const {
		const std::uint64_t stored = run_starts_.ones();
		if (sealed_) return stored;
		const std::uint64_t n = stored_size();
		// the virtual terminator is a run of its own and may cut a stored run in two
		const bool cuts = term_pos_ > 0 && term_pos_ < n && !run_starts_.access(term_pos_);
		return stored + 1 + (cuts ? 1 : 0);
	}

	/*
	 * Left extension: the structure indexing X# becomes the one indexing cX#.
	 * The terminator is overwritten with c and reinserted at the rank of the
	 * new full suffix, C(c) + rank(c, term_pos).
	 */
	void extend(symbol c) {
		if (sealed_) throw contract_violation("rlbwt::extend: structure is sealed");
		if (c == bwt_terminator) throw contract_violation("rlbwt::extend: terminator cannot be prepended");
		if (c >= alphabet_size) throw std::out_of_range("rlbwt::extend: symbol outside alphabet");
		const std::uint64_t q = term_pos_;
		const std::uint64_t p = counts_.sum(c) + stored_rank(c, q);
		insert_stored(q, c);
		counts_.update(c + 1, 1);
		++size_;
		term_pos_ = p;
	}

	// stores the terminator physically; no further extension afterwards
	void seal() {
		if (sealed_) return;
		insert_stored(term_pos_, bwt_terminator);
		sealed_ = true;
	}

	symbol access(std::uint64_t k) const {
		check_pos(k, "access");
		if (sealed_) return stored_access(k);
		if (k == term_pos_) return bwt_terminator;
		return stored_access(k < term_pos_ ? k : k - 1);
	}

	// occurrences of c in BWT[0, k)
	std::uint64_t rank(symbol c, std::uint64_t k) const {
		if (k > size_) throw std::out_of_range("rlbwt::rank: " + std::to_string(k));
		if (c >= alphabet_size) throw std::out_of_range("rlbwt::rank: symbol outside alphabet");
		if (sealed_) return stored_rank(c, k);
		if (c == bwt_terminator) return k > term_pos_ ? 1 : 0;
		return stored_rank(c, k <= term_pos_ ? k : k - 1);
	}

	// number of symbols smaller than c
	std::uint64_t C(symbol c) const { return counts_.sum(c); }

	std::uint64_t count(symbol c) const { return counts_.at(c + 1); }

	std::uint64_t lf(std::uint64_t k) const {
		check_pos(k, "lf");
		const symbol c = access(k);
		return C(c) + rank(c, k);
	}

	interval full_interval() const { return {0, size_ - 1}; }

	/*
	 * One backward-search step: the interval of cW from the interval of W.
	 * Returns nullopt when cW does not occur.
	 */
	std::optional<interval> lf_interval(interval iv, symbol c) const {
		check_interval(iv, "lf_interval");
		if (c == bwt_terminator) throw contract_violation("rlbwt::lf_interval: terminator");
		const std::uint64_t base = C(c);
		const std::uint64_t lo = base + rank(c, iv.lo);
		const std::uint64_t end = base + rank(c, iv.hi + 1);
		if (end == lo) return std::nullopt;
		return interval{lo, end - 1};
	}

	// runs intersecting [lo, hi]: ones in run_starts[lo..hi], plus 1 if bit lo is 0
	std::uint64_t number_of_runs(interval iv) const {
		require_sealed("number_of_runs");
		check_interval(iv, "number_of_runs");
		const std::uint64_t ones_before = iv.lo == 0 ? 0 : run_starts_.rank1(iv.lo - 1);
		const std::uint64_t ones = run_starts_.rank1(iv.hi) - ones_before;
		return ones + (run_starts_.access(iv.lo) ? 0 : 1);
	}

	run_bounds locate_run(std::uint64_t k) const {
		require_sealed("locate_run");
		check_pos(k, "locate_run");
		const std::uint64_t r = run_starts_.rank1(k);
		const std::uint64_t first = run_starts_.select1(r);
		const std::uint64_t last = r < run_starts_.ones() ? run_starts_.select1(r + 1) - 1 : size_ - 1;
		return {first, last, heads_.access(r - 1)};
	}

	std::vector<symbol> materialize() const {
		std::vector<symbol> out(size_);
		for (std::uint64_t k = 0; k < size_; ++k) out[k] = access(k);
		return out;
	}

	const dyn_sequence& heads() const { return heads_; }
	const gap_bitvector& run_starts() const { return run_starts_; }
	const gap_bitvector& run_lengths(symbol c) const { return lengths_.at(c); }

	struct node_counts {
		std::size_t heads = 0;
		std::size_t run_starts = 0;
		std::size_t run_lengths = 0;
		std::size_t symbol_counts = 0;

		std::size_t total() const { return heads + run_starts + run_lengths + symbol_counts; }
	};

	// allocated tree nodes per component
	node_counts nodes() const {
		node_counts n{heads_.node_count(), run_starts_.gaps().node_count(), 0, counts_.node_count()};
		for (const auto& v : lengths_) n.run_lengths += v.gaps().node_count();
		return n;
	}

	std::size_t node_count() const { return nodes().total(); }

	std::uint64_t steps() const {
		std::uint64_t s = heads_.steps() + run_starts_.gaps().steps() + counts_.steps();
		for (const auto& v : lengths_) s += v.gaps().steps();
		return s;
	}

private:
	std::uint64_t stored_size() const { return run_starts_.size(); }

	std::uint64_t run_index(std::uint64_t k) const { return run_starts_.rank1(k) - 1; }

	// length of the first t c-runs
	std::uint64_t run_prefix(symbol c, std::uint64_t t) const {
		const auto& v = lengths_[c];
		return t < v.ones() ? v.select1(t + 1) : v.size();
	}

	symbol stored_access(std::uint64_t k) const { return heads_.access(run_index(k)); }

	std::uint64_t stored_rank(symbol c, std::uint64_t k) const {
		if (k == 0) return 0;
		const std::uint64_t p = k - 1;
		const std::uint64_t r = run_index(p);
		std::uint64_t before = run_prefix(c, heads_.rank(c, r));
		if (heads_.access(r) == c) before += p - run_starts_.select1(r + 1) + 1;
		return before;
	}

	/*
	 * Inserts c at stored position k. Cases: c extends the run ending at k-1,
	 * c extends the run starting at k, c falls strictly inside a run of
	 * another symbol (the run splits in three), or c opens a new run at a run
	 * boundary. Insertion never merges two runs.
	 */
	void insert_stored(std::uint64_t k, symbol c) {
		const std::uint64_t n = stored_size();
		auto& vc = lengths_[c];

		if (k > 0) {
			const std::uint64_t r = run_index(k - 1);
			if (heads_.access(r) == c) {
				run_starts_.insert_bit(k, false);
				vc.insert_bit(run_prefix(c, heads_.rank(c, r)) + 1, false);
				return;
			}
		}
		if (k < n) {
			const std::uint64_t r = run_index(k);
			const symbol d = heads_.access(r);
			if (d == c) {
				run_starts_.insert_bit(k + 1, false);
				vc.insert_bit(run_prefix(c, heads_.rank(c, r)) + 1, false);
				return;
			}
			const std::uint64_t first = run_starts_.select1(r + 1);
			if (first < k) {
				// d^x d^y -> d^x c d^y
				const std::uint64_t offset = k - first;
				run_starts_.insert_bit(k, true);
				run_starts_.delete0(k + 1);
				run_starts_.insert_bit(k + 1, true);

				auto& vd = lengths_[d];
				const std::uint64_t at = run_prefix(d, heads_.rank(d, r)) + offset;
				vd.insert_bit(at, true);
				vd.delete0(at + 1);

				heads_.insert(r + 1, c);
				heads_.insert(r + 2, d);
				vc.insert_bit(run_prefix(c, heads_.rank(c, r + 1)), true);
				return;
			}
		}
		const std::uint64_t r = k == n ? heads_.size() : run_index(k);
		run_starts_.insert_bit(k, true);
		heads_.insert(r, c);
		vc.insert_bit(run_prefix(c, heads_.rank(c, r)), true);
	}

	void check_pos(std::uint64_t k, const char* op) const {
		if (k >= size_) throw std::out_of_range(std::string("rlbwt::") + op + ": position " + std::to_string(k));
	}

	void check_interval(interval iv, const char* op) const {
		if (iv.lo > iv.hi || iv.hi >= size_) throw std::out_of_range(std::string("rlbwt::") + op + ": bad interval");
	}

	void require_sealed(const char* op) const {
		if (!sealed_) throw contract_violation(std::string("rlbwt::") + op + ": structure not sealed");
	}

	dyn_sequence heads_;
	gap_bitvector run_starts_;
	std::vector<gap_bitvector> lengths_;
	spsi counts_;
	std::uint64_t size_ = 1;
	std::uint64_t term_pos_ = 0;
	bool sealed_ = false;
};

} // namespace rlz77

#endif /* RLZ77_RLBWT_HPP_ */

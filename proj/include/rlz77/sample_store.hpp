/*
 * sample_store.hpp
 *
 *  Suffix-array samples kept at the extremes of the BWT runs visited so far.
 *  A sample <j, k> links text position j to BWT position k; samples are
 *  grouped per symbol in ordered maps keyed by k. Every run holds no sample,
 *  one singleton, or an open/close pair bracketing the leftmost and rightmost
 *  visited positions of the run, so at most two samples per run are stored.
 *
 *  The store assumes a frozen BWT: keys are never shifted.
 */

#ifndef RLZ77_SAMPLE_STORE_HPP_
#define RLZ77_SAMPLE_STORE_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "alphabet.hpp"
#include "errors.hpp"
#include "rlbwt.hpp"

namespace rlz77 {

enum class sample_kind : std::uint8_t { singleton, open, close };

struct sample {
	std::uint64_t j = 0;
	sample_kind kind = sample_kind::singleton;

	bool operator==(const sample&) const = default;
};

// run boundaries of a sealed index, grouped by symbol for linear audits
struct run_layout {
	std::vector<run_bounds> runs;
	std::vector<std::vector<std::uint32_t>> by_symbol;

	explicit run_layout(const rlbwt& bwt) : by_symbol(alphabet_size) {
		const auto& starts = bwt.run_starts();
		const std::uint64_t count = starts.ones();
		const auto heads = bwt.heads().to_vector();
		runs.reserve(count);
		for (std::uint64_t r = 1; r <= count; ++r) {
			const std::uint64_t first = starts.select1(r);
			const std::uint64_t last = r < count ? starts.select1(r + 1) - 1 : bwt.size() - 1;
			by_symbol[heads[r - 1]].push_back(static_cast<std::uint32_t>(r - 1));
			runs.push_back(run_bounds{first, last, heads[r - 1]});
		}
	}
};

class sample_store {
public:
	using tree_type = std::map<std::uint64_t, sample>;

	sample_store() : trees_(alphabet_size) {}

	std::size_t size() const { return total_; }
	std::size_t max_size() const { return max_total_; }
	std::uint64_t steps() const { return steps_; }
	const tree_type& tree(symbol c) const { return trees_.at(c); }

	/*
	 * Applies the update rules for text position j read at BWT position k,
	 * run being the run containing k.
	 */
	void process(std::uint64_t j, std::uint64_t k, const run_bounds& run) {
		if (!(run.first <= k && k <= run.last)) throw contract_violation("sample_store::process: k outside its run");
		if (run.c == bwt_terminator) throw contract_violation("sample_store::process: terminator is never sampled");
		auto& t = trees_[run.c];

		auto first = t.lower_bound(run.first);
		auto it = first;
		std::size_t hits = 0;
		tree_type::iterator hit[2];
		for (; it != t.end() && it->first <= run.last; ++it) {
			if (hits == 2) throw corruption_error("sample_store: more than two samples in a run");
			hit[hits++] = it;
		}
		steps_ += 1;

		if (hits == 0) {
			// empty run: k becomes a singleton
			t.emplace(k, sample{j, sample_kind::singleton});
			grow(1);
			steps_ += 1;
			return;
		}
		if (hits == 1) {
			// lone singleton: it and k become the open/close pair
			const auto [k1, s1] = *hit[0];
			if (s1.kind != sample_kind::singleton) throw corruption_error("sample_store: lone non-singleton sample");
			if (k1 == k) throw corruption_error("sample_store: BWT position " + std::to_string(k) + " processed twice");
			t.erase(hit[0]);
			if (k < k1) {
				t.emplace(k, sample{j, sample_kind::open});
				t.emplace(k1, sample{s1.j, sample_kind::close});
			} else {
				t.emplace(k1, sample{s1.j, sample_kind::open});
				t.emplace(k, sample{j, sample_kind::close});
			}
			grow(1);
			steps_ += 3;
			return;
		}
		// pair: k replaces an extreme it lies beyond, otherwise nothing changes
		if (hit[0]->second.kind != sample_kind::open || hit[1]->second.kind != sample_kind::close)
			throw corruption_error("sample_store: run pair is not open/close");
		if (k == hit[0]->first || k == hit[1]->first)
			throw corruption_error("sample_store: BWT position " + std::to_string(k) + " processed twice");
		if (k < hit[0]->first) {
			t.erase(hit[0]);
			t.emplace(k, sample{j, sample_kind::open});
			steps_ += 2;
		} else if (k > hit[1]->first) {
			t.erase(hit[1]);
			t.emplace(k, sample{j, sample_kind::close});
			steps_ += 2;
		}
	}

	// some sample of c lies in [lo, hi]
	bool exists(symbol c, interval iv) const {
		++steps_;
		const auto& t = trees_.at(c);
		auto it = t.lower_bound(iv.lo);
		return it != t.end() && it->first <= iv.hi;
	}

	// text position of the sample of c with smallest BWT position in [lo, hi]
	std::uint64_t locate(symbol c, interval iv) const {
		++steps_;
		const auto& t = trees_.at(c);
		auto it = t.lower_bound(iv.lo);
		if (it == t.end() || it->first > iv.hi) throw contract_violation("sample_store::locate: no sample in interval");
		return it->second.j;
	}

	/*
	 * Sweeps all runs and checks that every run holds nothing, a singleton, or
	 * an open sample followed by a close one, and that every stored sample
	 * falls in a run of its own symbol. Returns, per run, whether it holds a
	 * sample. Throws corruption_error on a violation. Linear in runs plus
	 * samples once the layout is built.
	 */
	std::vector<bool> audit(const run_layout& layout) const {
		std::vector<bool> occupied(layout.runs.size(), false);
		std::size_t seen = 0;
		std::vector<std::pair<std::uint64_t, sample>> in;
		for (std::size_t c = 0; c < trees_.size(); ++c) {
			const auto& t = trees_[c];
			auto it = t.begin();
			for (auto r : layout.by_symbol[c]) {
				if (it == t.end()) break;
				const auto& run = layout.runs[r];
				while (it != t.end() && it->first < run.first) ++it;
				in.clear();
				for (; it != t.end() && it->first <= run.last; ++it) in.push_back(*it);
				if (in.size() > 2) throw corruption_error("audit: run with more than two samples");
				if (in.size() == 1 && in[0].second.kind != sample_kind::singleton)
					throw corruption_error("audit: lone sample is not a singleton");
				if (in.size() == 2 && (in[0].second.kind != sample_kind::open || in[1].second.kind != sample_kind::close))
					throw corruption_error("audit: run pair out of order");
				occupied[r] = !in.empty();
				seen += in.size();
			}
		}
		if (seen != total_) throw corruption_error("audit: samples outside runs of their symbol");
		return occupied;
	}

	std::vector<bool> audit(const rlbwt& bwt) const { return audit(run_layout(bwt)); }

private:
	void grow(std::size_t d) {
		total_ += d;
		if (total_ > max_total_) max_total_ = total_;
	}

	std::vector<tree_type> trees_;
	std::size_t total_ = 0;
	std::size_t max_total_ = 0;
	mutable std::uint64_t steps_ = 0;
};

} // namespace rlz77

#endif /* RLZ77_SAMPLE_STORE_HPP_ */

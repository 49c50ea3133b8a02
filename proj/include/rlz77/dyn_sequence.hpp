/*
 * dyn_sequence.hpp
 *
 *  Dynamic string over a small integer alphabet with access, rank, select
 *  and insert. Symbols are kept in fixed-capacity blocks at the leaves of a
 *  leaf-oriented red-black tree; every node stores its length and one
 *  occurrence counter per alphabet symbol.
 *
 *  Time is O(log(n/B) + B) per query and the counter refresh after a block
 *  split or rotation is O(sigma).
 */

#ifndef RLZ77_DYN_SEQUENCE_HPP_
#define RLZ77_DYN_SEQUENCE_HPP_

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "leaf_rb_tree.hpp"

namespace rlz77 {

class dyn_sequence : public leaf_rb_tree<dyn_sequence> {
	friend class leaf_rb_tree<dyn_sequence>;

public:
	using symbol_type = std::uint16_t;
	static constexpr std::size_t block_capacity = 128;

	explicit dyn_sequence(std::size_t sigma) : sigma_(sigma) {}

	std::size_t size() const { return root_ == nil ? 0 : len_[root_]; }
	std::size_t sigma() const { return sigma_; }

	// total occurrences of c
	std::size_t count(symbol_type c) const {
		check_symbol(c);
		return root_ == nil ? 0 : counts_[root_ * sigma_ + c];
	}

	symbol_type access(std::size_t i) const {
		if (i >= size()) throw std::out_of_range("dyn_sequence::access: " + std::to_string(i));
		const node_id x = find_leaf(i);
		return blocks_[x][i];
	}

	// occurrences of c in [0, i)
	std::size_t rank(symbol_type c, std::size_t i) const {
		check_symbol(c);
		if (i > size()) throw std::out_of_range("dyn_sequence::rank: " + std::to_string(i));
		std::size_t acc = 0;
		node_id x = root_;
		if (i == 0) return 0;
		while (!is_leaf(x)) {
			++steps_;
			const node_id l = links_[x].left;
			if (i >= len_[l]) {
				acc += counts_[l * sigma_ + c];
				i -= len_[l];
				x = links_[x].right;
			} else {
				x = l;
			}
		}
		const auto& b = blocks_[x];
		return acc + static_cast<std::size_t>(std::count(b.begin(), b.begin() + i, c));
	}

	// position of the i-th c, i >= 1
	std::size_t select(symbol_type c, std::size_t i) const {
		if (i == 0 || i > count(c))
			throw std::out_of_range("dyn_sequence::select: occurrence " + std::to_string(i));
		std::size_t pos = 0;
		node_id x = root_;
		while (!is_leaf(x)) {
			++steps_;
			const node_id l = links_[x].left;
			const std::size_t cl = counts_[l * sigma_ + c];
			if (cl >= i) {
				x = l;
			} else {
				i -= cl;
				pos += len_[l];
				x = links_[x].right;
			}
		}
		const auto& b = blocks_[x];
		for (std::size_t k = 0; k < b.size(); ++k)
			if (b[k] == c && --i == 0) return pos + k;
		throw corruption_error("dyn_sequence::select: counters disagree with block");
	}

	void insert(std::size_t i, symbol_type c) {
		check_symbol(c);
		if (i > size()) throw std::out_of_range("dyn_sequence::insert: " + std::to_string(i));
		if (root_ == nil) {
			const node_id x = new_root_leaf();
			blocks_[x].push_back(c);
			len_[x] = 1;
			counts_[x * sigma_ + c] = 1;
			return;
		}
		node_id x = root_;
		while (!is_leaf(x)) {
			++steps_;
			++len_[x];
			++counts_[x * sigma_ + c];
			const node_id l = links_[x].left;
			if (i <= len_[l]) {
				x = l;
			} else {
				i -= len_[l];
				x = links_[x].right;
			}
		}
		blocks_[x].insert(blocks_[x].begin() + static_cast<std::ptrdiff_t>(i), c);
		++len_[x];
		++counts_[x * sigma_ + c];
		if (blocks_[x].size() > block_capacity) split(x);
	}

	std::vector<symbol_type> to_vector() const {
		std::vector<symbol_type> out;
		out.reserve(size());
		collect(root_, out);
		return out;
	}

	bool counters_consistent() const {
		if (root_ == nil) return true;
		std::vector<std::size_t> scratch(sigma_);
		bool ok = true;
		audit(root_, scratch, ok);
		return ok;
	}

private:
	void on_allocate() {
		blocks_.emplace_back();
		len_.push_back(0);
		counts_.resize(counts_.size() + sigma_, 0);
	}

	void pull(node_id x) {
		const node_id l = links_[x].left, r = links_[x].right;
		len_[x] = len_[l] + len_[r];
		auto* dst = &counts_[x * sigma_];
		const auto* a = &counts_[l * sigma_];
		const auto* b = &counts_[r * sigma_];
		for (std::size_t c = 0; c < sigma_; ++c) dst[c] = a[c] + b[c];
	}

	void recount(node_id x) {
		auto* dst = &counts_[x * sigma_];
		std::fill(dst, dst + sigma_, 0);
		for (auto c : blocks_[x]) ++dst[c];
		len_[x] = blocks_[x].size();
	}

	void split(node_id x) {
		const node_id fresh = allocate();
		auto& b = blocks_[x];
		const auto half = static_cast<std::ptrdiff_t>(b.size() / 2);
		blocks_[fresh].assign(b.begin() + half, b.end());
		b.erase(b.begin() + half, b.end());
		recount(x);
		recount(fresh);
		split_leaf(x, fresh, true);
	}

	// leaf holding position i; i is rewritten to the in-block offset
	node_id find_leaf(std::size_t& i) const {
		node_id x = root_;
		while (!is_leaf(x)) {
			++steps_;
			const node_id l = links_[x].left;
			if (i < len_[l]) {
				x = l;
			} else {
				i -= len_[l];
				x = links_[x].right;
			}
		}
		return x;
	}

	void check_symbol(symbol_type c) const {
		if (c >= sigma_) throw std::out_of_range("dyn_sequence: symbol " + std::to_string(c) + " outside alphabet");
	}

	void collect(node_id x, std::vector<symbol_type>& out) const {
		if (x == nil) return;
		if (is_leaf(x)) {
			out.insert(out.end(), blocks_[x].begin(), blocks_[x].end());
			return;
		}
		collect(links_[x].left, out);
		collect(links_[x].right, out);
	}

	// leaf counts into `acc` (added), checking stored counters on the way
	void audit(node_id x, std::vector<std::size_t>& acc, bool& ok) const {
		std::vector<std::size_t> mine(sigma_, 0);
		std::size_t n = 0;
		if (is_leaf(x)) {
			for (auto c : blocks_[x]) ++mine[c];
			n = blocks_[x].size();
		} else {
			audit(links_[x].left, mine, ok);
			audit(links_[x].right, mine, ok);
			n = len_[links_[x].left] + len_[links_[x].right];
		}
		if (len_[x] != n) ok = false;
		for (std::size_t c = 0; c < sigma_; ++c) {
			if (counts_[x * sigma_ + c] != mine[c]) ok = false;
			acc[c] += mine[c];
		}
	}

	std::size_t sigma_;
	std::vector<std::vector<symbol_type>> blocks_;
	std::vector<std::size_t> len_;
	std::vector<std::uint32_t> counts_;
};

} // namespace rlz77

#endif /* RLZ77_DYN_SEQUENCE_HPP_ */

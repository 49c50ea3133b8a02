/*
 * spsi.hpp
 *
 *  Searchable partial sums with indels: a dynamic sequence s_1..s_m of
 *  nonnegative integers supporting sum, search, update and insertion of a
 *  zero, all in O(log m) time.
 *
 *  Integers are stored in the leaves of a leaf-oriented red-black tree; each
 *  internal node stores the number of leaves and the sum of the leaves below
 *  it. Elements are indexed from 1, insertion gaps from 0.
 */

#ifndef RLZ77_SPSI_HPP_
#define RLZ77_SPSI_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "leaf_rb_tree.hpp"

namespace rlz77 {

class spsi : public leaf_rb_tree<spsi> {
	friend class leaf_rb_tree<spsi>;

public:
	using value_type = std::uint64_t;

	spsi() = default;

	// builds (0,0,...,0) with m elements
	explicit spsi(std::size_t m) {
		for (std::size_t i = 0; i < m; ++i) insert(i);
	}

	std::size_t size() const { return root_ == nil ? 0 : count_[root_]; }
	value_type total() const { return root_ == nil ? 0 : sum_[root_]; }
	bool empty() const { return root_ == nil; }

	/*
	 * s_1 + ... + s_i. sum(0) = 0.
	 */
	value_type sum(std::size_t i) const {
		if (i > size()) throw std::out_of_range("spsi::sum: index " + std::to_string(i));
		value_type acc = 0;
		node_id x = root_;
		while (i > 0) {
			++steps_;
			if (is_leaf(x)) {
				acc += sum_[x];
				break;
			}
			const node_id l = links_[x].left;
			if (i >= count_[l]) {
				acc += sum_[l];
				i -= count_[l];
				x = links_[x].right;
			} else {
				x = l;
			}
		}
		return acc;
	}

	/*
	 * smallest i such that sum(i) >= x, for 1 <= x <= total()
	 */
	std::size_t search(value_type x) const {
		if (x == 0 || x > total()) throw std::out_of_range("spsi::search: value " + std::to_string(x));
		std::size_t idx = 0;
		node_id v = root_;
		while (!is_leaf(v)) {
			++steps_;
			const node_id l = links_[v].left;
			if (sum_[l] >= x) {
				v = l;
			} else {
				x -= sum_[l];
				idx += count_[l];
				v = links_[v].right;
			}
		}
		return idx + 1;
	}

	// s_i
	value_type at(std::size_t i) const { return sum_[leaf(i)]; }

	void update(std::size_t i, std::int64_t delta) {
		node_id x = leaf(i);
		if (delta < 0 && sum_[x] < static_cast<value_type>(-delta))
			throw contract_violation("spsi::update: element " + std::to_string(i) + " would become negative");
		for (; x != nil; x = links_[x].parent) {
			++steps_;
			sum_[x] += static_cast<value_type>(delta);
		}
	}

	/*
	 * inserts a 0 before the current element i+1 (it becomes s_{i+1}); i = size()
	 * appends.
	 */
	void insert(std::size_t i) {
		const std::size_t m = size();
		if (i > m) throw std::out_of_range("spsi::insert: gap " + std::to_string(i));
		if (m == 0) {
			const node_id x = new_root_leaf();
			count_[x] = 1;
			sum_[x] = 0;
			return;
		}
		// the new zero goes to the left of s_{i+1}, or to the right of s_m
		const bool append = (i == m);
		const node_id old_leaf = leaf(append ? m : i + 1);
		const node_id fresh = allocate();
		count_[fresh] = 1;
		sum_[fresh] = 0;
		split_leaf(old_leaf, fresh, append);
	}

	std::vector<value_type> to_vector() const {
		std::vector<value_type> out;
		out.reserve(size());
		collect(root_, out);
		return out;
	}

	// recomputes every internal counter from the leaves and compares
	bool counters_consistent() const {
		if (root_ == nil) return true;
		bool ok = true;
		audit(root_, ok);
		return ok;
	}

private:
	void on_allocate() {
		count_.push_back(0);
		sum_.push_back(0);
	}

	void pull(node_id x) {
		const node_id l = links_[x].left, r = links_[x].right;
		count_[x] = count_[l] + count_[r];
		sum_[x] = sum_[l] + sum_[r];
	}

	node_id leaf(std::size_t i) const {
		if (i == 0 || i > size()) throw std::out_of_range("spsi: element " + std::to_string(i));
		node_id x = root_;
		while (!is_leaf(x)) {
			++steps_;
			const node_id l = links_[x].left;
			if (i <= count_[l]) {
				x = l;
			} else {
				i -= count_[l];
				x = links_[x].right;
			}
		}
		return x;
	}

	void collect(node_id x, std::vector<value_type>& out) const {
		if (x == nil) return;
		if (is_leaf(x)) {
			out.push_back(sum_[x]);
			return;
		}
		collect(links_[x].left, out);
		collect(links_[x].right, out);
	}

	std::pair<std::uint64_t, value_type> audit(node_id x, bool& ok) const {
		if (is_leaf(x)) {
			if (count_[x] != 1) ok = false;
			return {1, sum_[x]};
		}
		const auto [cl, sl] = audit(links_[x].left, ok);
		const auto [cr, sr] = audit(links_[x].right, ok);
		if (count_[x] != cl + cr || sum_[x] != sl + sr) ok = false;
		return {cl + cr, sl + sr};
	}

	std::vector<std::uint64_t> count_;
	std::vector<value_type> sum_;
};

} // namespace rlz77

#endif /* RLZ77_SPSI_HPP_ */

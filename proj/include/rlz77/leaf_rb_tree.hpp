/*
 * leaf_rb_tree.hpp
 *
 *  Shape of a leaf-oriented red-black tree: data lives in the leaves, every
 *  internal node has exactly two children and carries an aggregate of the
 *  leaves below it. The leaves play the role of the NIL nodes of a textbook
 *  red-black tree (always black), so growing the tree by turning a leaf into
 *  an internal node with two leaf children is a plain red-black insertion.
 *
 *  The derived class (CRTP) owns the per-node payload and provides
 *
 *      void pull(node_id x);     // recompute x's aggregate from its children
 *      void on_allocate();       // grow payload arrays by one node
 *
 *  Nodes are never freed; node ids index parallel arrays.
 */

#ifndef RLZ77_LEAF_RB_TREE_HPP_
#define RLZ77_LEAF_RB_TREE_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

namespace rlz77 {

template <class Derived>
class leaf_rb_tree {
public:
	using node_id = std::uint32_t;
	static constexpr node_id nil = std::numeric_limits<node_id>::max();

	// allocated nodes (leaves and internal)
	std::size_t node_count() const { return links_.size(); }

	// node visits performed by queries and updates since construction
	std::uint64_t steps() const { return steps_; }

	// maximum number of internal nodes on a root-to-leaf path
	std::size_t height() const {
		if (root_ == nil) return 0;
		std::size_t best = 0;
		std::vector<std::pair<node_id, std::size_t>> stack{{root_, 0}};
		while (!stack.empty()) {
			auto [x, d] = stack.back();
			stack.pop_back();
			if (is_leaf(x)) {
				best = std::max(best, d);
			} else {
				stack.push_back({links_[x].left, d + 1});
				stack.push_back({links_[x].right, d + 1});
			}
		}
		return best;
	}

	// checks the red-black rules: red nodes have black children, equal black
	// height on every path, black root
	bool balanced() const {
		if (root_ == nil) return true;
		if (red(root_)) return false;
		return black_height(root_) >= 0;
	}

protected:
	struct link {
		node_id parent = nil;
		node_id left = nil;
		node_id right = nil;
		bool red = false;
	};

	Derived& derived() { return static_cast<Derived&>(*this); }

	bool is_leaf(node_id x) const { return links_[x].left == nil; }
	bool red(node_id x) const { return x != nil && links_[x].red; }

	node_id allocate() {
		const node_id x = static_cast<node_id>(links_.size());
		links_.push_back(link{});
		derived().on_allocate();
		return x;
	}

	node_id new_root_leaf() {
		root_ = allocate();
		return root_;
	}

	/*
	 * Replaces `leaf` by a new internal node having children `leaf` and
	 * `fresh` (fresh on the right iff fresh_right), then rebalances. Both leaves
	 * must already hold their final payload; aggregates are pulled on the whole
	 * root path.
	 */
	node_id split_leaf(node_id leaf, node_id fresh, bool fresh_right) {
		const node_id x = allocate();
		const node_id p = links_[leaf].parent;
		links_[x].parent = p;
		links_[x].red = true;
		if (p == nil)
			root_ = x;
		else if (links_[p].left == leaf)
			links_[p].left = x;
		else
			links_[p].right = x;

		links_[x].left = fresh_right ? leaf : fresh;
		links_[x].right = fresh_right ? fresh : leaf;
		links_[leaf].parent = x;
		links_[fresh].parent = x;
		links_[leaf].red = links_[fresh].red = false;

		for (node_id y = x; y != nil; y = links_[y].parent) {
			derived().pull(y);
			++steps_;
		}
		insert_fixup(x);
		return x;
	}

	std::vector<link> links_;
	node_id root_ = nil;
	mutable std::uint64_t steps_ = 0;

private:
	void replace_child(node_id p, node_id old_child, node_id new_child) {
		if (p == nil)
			root_ = new_child;
		else if (links_[p].left == old_child)
			links_[p].left = new_child;
		else
			links_[p].right = new_child;
	}

	// rotations touch the aggregates of exactly the two rotated nodes
	void rotate_left(node_id x) {
		const node_id y = links_[x].right;
		links_[x].right = links_[y].left;
		links_[links_[y].left].parent = x;
		links_[y].parent = links_[x].parent;
		replace_child(links_[x].parent, x, y);
		links_[y].left = x;
		links_[x].parent = y;
		derived().pull(x);
		derived().pull(y);
	}

	void rotate_right(node_id x) {
		const node_id y = links_[x].left;
		links_[x].left = links_[y].right;
		links_[links_[y].right].parent = x;
		links_[y].parent = links_[x].parent;
		replace_child(links_[x].parent, x, y);
		links_[y].right = x;
		links_[x].parent = y;
		derived().pull(x);
		derived().pull(y);
	}

	void insert_fixup(node_id z) {
		while (z != root_ && red(links_[z].parent)) {
			node_id p = links_[z].parent;
			const node_id g = links_[p].parent;
			if (p == links_[g].left) {
				const node_id uncle = links_[g].right;
				if (red(uncle)) {
					links_[p].red = links_[uncle].red = false;
					links_[g].red = true;
					z = g;
					continue;
				}
				if (z == links_[p].right) {
					z = p;
					rotate_left(z);
					p = links_[z].parent;
				}
				links_[p].red = false;
				links_[g].red = true;
				rotate_right(g);
			} else {
				const node_id uncle = links_[g].left;
				if (red(uncle)) {
					links_[p].red = links_[uncle].red = false;
					links_[g].red = true;
					z = g;
					continue;
				}
				if (z == links_[p].left) {
					z = p;
					rotate_right(z);
					p = links_[z].parent;
				}
				links_[p].red = false;
				links_[g].red = true;
				rotate_left(g);
			}
		}
		links_[root_].red = false;
	}

	// black height below x, or -1 on a violation
	int black_height(node_id x) const {
		if (is_leaf(x)) return links_[x].red ? -1 : 1;
		const node_id l = links_[x].left, r = links_[x].right;
		if (links_[l].parent != x || links_[r].parent != x) return -1;
		if (red(x) && (red(l) || red(r))) return -1;
		const int hl = black_height(l), hr = black_height(r);
		if (hl < 0 || hl != hr) return -1;
		return hl + (red(x) ? 0 : 1);
	}
};

} // namespace rlz77

#endif /* RLZ77_LEAF_RB_TREE_HPP_ */

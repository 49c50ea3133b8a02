/*
 * gap_bitvector.hpp
 *
 *  Dynamic bitvector B = 10^{s_1-1} 10^{s_2-1} ... 10^{s_m-1} stored as the
 *  partial sums of its gap lengths. Space is O(m) words for m set bits,
 *  independently of the bitvector length.
 *
 *  Bit positions are 0-based; rank1 is inclusive (number of ones in
 *  B[0..i]); select1 takes a 1-based one-index. B always starts with a 1
 *  when nonempty, so the first insertion must be a 1 and 0s can never be
 *  inserted at the head.
 */

#ifndef RLZ77_GAP_BITVECTOR_HPP_
#define RLZ77_GAP_BITVECTOR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "spsi.hpp"

namespace rlz77 {

class gap_bitvector {
public:
	gap_bitvector() = default;

	std::uint64_t size() const { return ps_.total(); }
	std::uint64_t ones() const { return ps_.size(); }
	bool empty() const { return size() == 0; }

	bool access(std::uint64_t i) const {
		check_bit(i, "access");
		if (i == 0) return true;
		return ps_.sum(ps_.search(i + 1) - 1) == i;
	}

	std::uint64_t rank1(std::uint64_t i) const {
		check_bit(i, "rank1");
		return ps_.search(i + 1);
	}

	std::uint64_t select1(std::uint64_t i) const {
		if (i == 0 || i > ones()) throw std::out_of_range("gap_bitvector::select1: " + std::to_string(i));
		return ps_.sum(i - 1);
	}

	void insert_bit(std::uint64_t i, bool b) {
		if (i > size()) throw std::out_of_range("gap_bitvector::insert_bit: " + std::to_string(i));
		if (!b) {
			if (i == 0) throw contract_violation("gap_bitvector::insert_bit: 0 at the head");
			ps_.update(ps_.search(i), +1);
			return;
		}
		if (i == 0) {
			ps_.insert(0);
			ps_.update(1, +1);
			return;
		}
		// split the gap covering bit i-1: it keeps its first part, the tail
		// becomes a new gap headed by the inserted 1
		const std::size_t j = ps_.search(i);
		const std::uint64_t delta = ps_.sum(j) - i;
		ps_.update(j, -static_cast<std::int64_t>(delta));
		ps_.insert(j);
		ps_.update(j + 1, static_cast<std::int64_t>(delta + 1));
	}

	void delete0(std::uint64_t i) {
		check_bit(i, "delete0");
		const std::size_t j = ps_.search(i + 1);
		if (i == 0 || ps_.sum(j - 1) == i)
			throw contract_violation("gap_bitvector::delete0: bit " + std::to_string(i) + " is set");
		ps_.update(j, -1);
	}

	std::vector<bool> to_bits() const {
		std::vector<bool> bits;
		bits.reserve(size());
		for (auto gap : ps_.to_vector()) {
			bits.push_back(true);
			bits.insert(bits.end(), gap - 1, false);
		}
		return bits;
	}

	const spsi& gaps() const { return ps_; }

private:
	void check_bit(std::uint64_t i, const char* op) const {
		if (i >= size()) throw std::out_of_range(std::string("gap_bitvector::") + op + ": " + std::to_string(i));
	}

	spsi ps_;
};

} // namespace rlz77

#endif /* RLZ77_GAP_BITVECTOR_HPP_ */

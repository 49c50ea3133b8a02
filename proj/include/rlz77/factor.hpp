#ifndef RLZ77_FACTOR_HPP_
#define RLZ77_FACTOR_HPP_

#include <cstdint>
#include <optional>
#include <ostream>

namespace rlz77 {

/*
 * One LZ77 phrase <pos, len, ch>: a copy of len symbols starting at text
 * position pos (absent iff len == 0) followed by the literal ch. ch is a byte
 * value, or end_marker for the phrase closing the text.
 */
struct factor {
	static constexpr std::uint16_t end_marker = 256;

	std::optional<std::uint64_t> pos;
	std::uint64_t len = 0;
	std::uint16_t ch = 0;

	bool is_last() const { return ch == end_marker; }
	bool operator==(const factor&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const factor& f) {
	os << '(';
	if (f.pos)
		os << *f.pos;
	else
		os << '_';
	os << ',' << f.len << ',';
	if (f.is_last())
		os << '$';
	else
		os << f.ch;
	return os << ')';
}

} // namespace rlz77

#endif /* RLZ77_FACTOR_HPP_ */

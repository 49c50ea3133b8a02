#ifndef RLZ77_ALPHABET_HPP_
#define RLZ77_ALPHABET_HPP_

#include <cstdint>

namespace rlz77 {

// Internal symbols: the BWT terminator sorts first, the LZ77 end marker
// second, input bytes after both.
using symbol = std::uint16_t;

inline constexpr symbol bwt_terminator = 0;
inline constexpr symbol lz_terminator = 1;
inline constexpr std::size_t alphabet_size = 258;

constexpr symbol to_symbol(std::uint8_t byte) { return static_cast<symbol>(byte) + 2; }
constexpr std::uint8_t to_byte(symbol c) { return static_cast<std::uint8_t>(c - 2); }
constexpr bool is_byte(symbol c) { return c >= 2 && c < alphabet_size; }

} // namespace rlz77

#endif /* RLZ77_ALPHABET_HPP_ */

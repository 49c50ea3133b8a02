/*
 * factor_codec.hpp
 *
 *  On-disk factor formats.
 *
 *  binary: the magic bytes "RLZ1", then one record per factor:
 *
 *      varint  pos + 1   (0 when the factor has no source)
 *      varint  len
 *      literal           one byte b != 0xFF, or 0xFF 0xFF for b == 0xFF,
 *                        or 0xFF 0x00 for the end marker
 *
 *    varints are LEB128, little-endian groups of 7 bits, minimal length. The
 *    stream ends right after the end-marker record.
 *
 *  text: one line per factor, "(pos,len,ch)" with pos written as '_' when
 *    absent, ch as a decimal byte value or '$' for the end marker. Meant for
 *    debugging small inputs.
 */

#ifndef RLZ77_FACTOR_CODEC_HPP_
#define RLZ77_FACTOR_CODEC_HPP_

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>

#include "errors.hpp"
#include "factor.hpp"

namespace rlz77 {

enum class factor_format { binary, text };

inline constexpr char binary_magic[4] = {'R', 'L', 'Z', '1'};

inline void write_varint(std::ostream& os, std::uint64_t v) {
	while (v >= 0x80) {
		os.put(static_cast<char>((v & 0x7F) | 0x80));
		v >>= 7;
	}
	os.put(static_cast<char>(v));
}

// nullopt at a clean end of stream before the first byte
inline std::optional<std::uint64_t> read_varint(std::istream& is) {
	std::uint64_t v = 0;
	for (unsigned shift = 0;; shift += 7) {
		const int byte = is.get();
		if (byte == std::char_traits<char>::eof()) {
			if (shift == 0) return std::nullopt;
			throw malformed_input("truncated varint");
		}
		if (shift == 63 && (byte & 0x7E) != 0) throw malformed_input("varint overflows 64 bits");
		v |= static_cast<std::uint64_t>(byte & 0x7F) << shift;
		if ((byte & 0x80) == 0) {
			if (byte == 0 && shift > 0) throw malformed_input("non-canonical varint");
			return v;
		}
		if (shift == 63) throw malformed_input("varint overflows 64 bits");
	}
}

class binary_factor_writer {
public:
	explicit binary_factor_writer(std::ostream& os) : os_(os) { os_.write(binary_magic, sizeof binary_magic); }

	void operator()(const factor& f) {
		write_varint(os_, f.pos ? *f.pos + 1 : 0);
		write_varint(os_, f.len);
		if (f.is_last()) {
			os_.put('\xFF');
			os_.put('\0');
		} else if (f.ch == 0xFF) {
			os_.put('\xFF');
			os_.put('\xFF');
		} else {
			os_.put(static_cast<char>(f.ch));
		}
	}

private:
	std::ostream& os_;
};

class text_factor_writer {
public:
	explicit text_factor_writer(std::ostream& os) : os_(os) {}

	void operator()(const factor& f) { os_ << f << '\n'; }

private:
	std::ostream& os_;
};

/*
 * Decodes a binary factor stream, handing every factor to sink. Throws
 * malformed_input on a bad header, a truncated record, a bad escape, or bytes
 * after the end marker.
 */
template <class Sink>
void read_binary_factors(std::istream& is, Sink&& sink) {
	char magic[sizeof binary_magic];
	if (!is.read(magic, sizeof magic) || !std::equal(magic, magic + sizeof magic, binary_magic))
		throw malformed_input("not a binary factor stream");
	for (;;) {
		const auto pos = read_varint(is);
		if (!pos) throw malformed_input("factor stream ends without the end marker");
		const auto len = read_varint(is);
		if (!len) throw malformed_input("truncated factor record");
		factor f;
		if (*pos > 0) f.pos = *pos - 1;
		f.len = *len;
		int lit = is.get();
		if (lit == std::char_traits<char>::eof()) throw malformed_input("truncated factor record");
		if (lit == 0xFF) {
			const int esc = is.get();
			if (esc == 0xFF)
				f.ch = 0xFF;
			else if (esc == 0)
				f.ch = factor::end_marker;
			else
				throw malformed_input("bad literal escape");
		} else {
			f.ch = static_cast<std::uint16_t>(lit);
		}
		sink(f);
		if (f.is_last()) break;
	}
	if (is.peek() != std::char_traits<char>::eof()) throw malformed_input("trailing bytes after the end marker");
}

inline factor parse_text_factor(const std::string& line) {
	auto fail = [&] { return malformed_input("bad factor line: " + line.substr(0, 64)); };
	std::size_t i = 0;
	auto skip_spaces = [&] {
		while (i < line.size() && line[i] == ' ') ++i;
	};
	auto number = [&]() -> std::uint64_t {
		skip_spaces();
		if (i >= line.size() || line[i] < '0' || line[i] > '9') throw fail();
		std::uint64_t v = 0;
		while (i < line.size() && line[i] >= '0' && line[i] <= '9') {
			const std::uint64_t d = static_cast<std::uint64_t>(line[i++] - '0');
			if (v > (UINT64_MAX - d) / 10) throw fail();
			v = v * 10 + d;
		}
		return v;
	};
	auto expect = [&](char ch) {
		skip_spaces();
		if (i >= line.size() || line[i] != ch) throw fail();
		++i;
	};

	factor f;
	expect('(');
	skip_spaces();
	if (i < line.size() && line[i] == '_')
		++i;
	else
		f.pos = number();
	expect(',');
	f.len = number();
	expect(',');
	skip_spaces();
	if (i < line.size() && line[i] == '$') {
		++i;
		f.ch = factor::end_marker;
	} else {
		const auto v = number();
		if (v > 0xFF) throw fail();
		f.ch = static_cast<std::uint16_t>(v);
	}
	expect(')');
	skip_spaces();
	if (i != line.size()) throw fail();
	return f;
}

template <class Sink>
void read_text_factors(std::istream& is, Sink&& sink) {
	std::string line;
	bool ended = false;
	while (std::getline(is, line)) {
		if (!line.empty() && line.back() == '\r') line.pop_back();
		if (line.empty()) continue;
		if (ended) throw malformed_input("factor after the end marker");
		const factor f = parse_text_factor(line);
		sink(f);
		ended = f.is_last();
	}
	if (is.bad()) throw std::ios_base::failure("read error");
	if (!ended) throw malformed_input("factor stream ends without the end marker");
}

template <class Sink>
void read_factors(std::istream& is, factor_format format, Sink&& sink) {
	if (format == factor_format::binary)
		read_binary_factors(is, sink);
	else
		read_text_factors(is, sink);
}

} // namespace rlz77

#endif /* RLZ77_FACTOR_CODEC_HPP_ */

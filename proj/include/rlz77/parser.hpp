/*
 * parser.hpp
 *
 *  LZ77 factorization in run-compressed space.
 *
 *  build() reads the text once, left to right, and prepends every symbol
 *  (then the end marker) to a dynamic RLBWT, so that at the end the
 *  structure holds the BWT of the reversed text. factorize() then walks the
 *  text forward with LF starting from BWT position 0, keeping the BWT
 *  interval of the reversed current phrase prefix and the run-extreme
 *  suffix-array samples of the positions read so far. A phrase is closed as
 *  soon as prefix+c has no occurrence ending before the current position.
 *
 *  Working space is O(R) words for R runs in the BWT; the parse is streamed
 *  to a sink and never stored.
 */

#ifndef RLZ77_PARSER_HPP_
#define RLZ77_PARSER_HPP_

#include <cstdint>
#include <istream>
#include <iterator>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "alphabet.hpp"
#include "errors.hpp"
#include "factor.hpp"
#include "rlbwt.hpp"
#include "sample_store.hpp"

namespace rlz77 {

class input_too_large : public std::length_error {
public:
	explicit input_too_large(const std::string& what) : std::length_error(what) {}
};

struct parse_stats {
	std::uint64_t text_length = 0; // end marker included
	std::uint64_t factors = 0;
	std::uint64_t runs = 0;
	std::uint64_t max_samples = 0;
	std::uint64_t bwt_nodes = 0;
	std::uint64_t sample_nodes = 0;
	std::uint64_t steps = 0; // structure node visits during the parse
};

namespace detail {

struct no_observer {
	void operator()(std::uint64_t, std::uint64_t, const sample_store&) const {}
};

inline symbol factor_symbol(std::uint16_t ch) { return ch == factor::end_marker ? lz_terminator : to_symbol(static_cast<std::uint8_t>(ch)); }

inline std::uint16_t symbol_char(symbol c) { return c == lz_terminator ? factor::end_marker : to_byte(c); }

} // namespace detail

inline rlbwt build(std::istream& in, std::uint64_t max_bytes = std::numeric_limits<std::uint64_t>::max()) {
	rlbwt bwt;
	std::uint64_t n = 0;
	for (std::istreambuf_iterator<char> it(in), end; it != end; ++it) {
		if (++n > max_bytes) throw input_too_large("input exceeds " + std::to_string(max_bytes) + " bytes");
		bwt.extend(to_symbol(static_cast<std::uint8_t>(*it)));
	}
	if (in.bad()) throw std::ios_base::failure("read error");
	bwt.extend(lz_terminator);
	bwt.seal();
	return bwt;
}

inline rlbwt build(std::span<const std::uint8_t> text) {
	rlbwt bwt;
	for (auto b : text) bwt.extend(to_symbol(b));
	bwt.extend(lz_terminator);
	bwt.seal();
	return bwt;
}

inline rlbwt build(std::string_view text) {
	return build(std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

/*
 * Streams the LZ77 factors of the text indexed by bwt (as produced by
 * build) to sink, in text order. observer(j, k, samples) is called after
 * position j has been sampled.
 */
template <class Sink, class Observer = detail::no_observer>
parse_stats factorize(const rlbwt& bwt, Sink&& sink, Observer&& observer = {}) {
	if (!bwt.sealed()) throw contract_violation("factorize: rlbwt must be sealed");

	parse_stats stats;
	const std::uint64_t n = bwt.size() - 1;
	const std::uint64_t steps_before = bwt.steps();
	const interval full = bwt.full_interval();

	sample_store samples;
	std::uint64_t k = 0;
	std::uint64_t len = 0;
	std::optional<std::uint64_t> occ;
	interval iv = full;

	for (std::uint64_t j = 0; j < n; ++j) {
		const symbol c = bwt.access(k);
		if (c == bwt_terminator) throw corruption_error("factorize: terminator reached before the end of the text");

		const std::uint64_t u = bwt.number_of_runs(iv);
		if (u == 1 || samples.exists(c, iv)) {
			// prefix+c occurs before j: the phrase goes on
			if (u > 1) occ = samples.locate(c, iv) - len;
			if (!occ && len > 0) throw corruption_error("factorize: phrase prefix without a source");
			++len;
			auto next = bwt.lf_interval(iv, c);
			if (!next) throw corruption_error("factorize: phrase prefix vanished from the index");
			iv = *next;
		} else {
			sink(factor{len > 0 ? occ : std::nullopt, len, detail::symbol_char(c)});
			++stats.factors;
			len = 0;
			occ.reset();
			iv = full;
		}

		samples.process(j, k, bwt.locate_run(k));
		observer(j, k, static_cast<const sample_store&>(samples));
		k = bwt.lf(k);
	}
	if (len != 0) throw corruption_error("factorize: text ended inside a phrase");
	if (k != bwt.term_pos()) throw corruption_error("factorize: LF walk did not end at the terminator");

	stats.text_length = n;
	stats.runs = bwt.runs();
	stats.max_samples = samples.max_size();
	stats.bwt_nodes = bwt.node_count();
	stats.sample_nodes = samples.max_size();
	stats.steps = bwt.steps() - steps_before + samples.steps();
	return stats;
}

inline std::vector<factor> lz77(std::string_view text) {
	std::vector<factor> out;
	factorize(build(text), [&](const factor& f) { out.push_back(f); });
	return out;
}

/*
 * Incremental inverse of the parse. Sources may overlap the phrase being
 * written; copies run forward one byte at a time.
 */
class lz77_decoder {
public:
	void push(const factor& f) {
		if (done_) throw malformed_input("factor after the end marker");
		if (f.ch > factor::end_marker) throw malformed_input("literal outside the byte range");
		if (f.len > 0) {
			if (!f.pos) throw malformed_input("copy without a source position");
			if (*f.pos >= text_.size()) throw malformed_input("source position " + std::to_string(*f.pos) + " not yet written");
			const std::size_t from = static_cast<std::size_t>(*f.pos);
			for (std::uint64_t i = 0; i < f.len; ++i) text_.push_back(text_[from + i]);
		} else if (f.pos) {
			throw malformed_input("source position on an empty copy");
		}
		if (f.is_last())
			done_ = true;
		else
			text_.push_back(static_cast<char>(f.ch));
	}

	bool finished() const { return done_; }

	std::string& text() {
		if (!done_) throw malformed_input("factor stream has no end marker");
		return text_;
	}

private:
	std::string text_;
	bool done_ = false;
};

inline std::string decompress(std::span<const factor> factors) {
	lz77_decoder dec;
	for (const auto& f : factors) dec.push(f);
	return std::move(dec.text());
}

} // namespace rlz77

#endif /* RLZ77_PARSER_HPP_ */

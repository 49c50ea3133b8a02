#include <random>
#include <string>

#include <gtest/gtest.h>

#include "rlz77/parser.hpp"
#include "support/oracles.hpp"

using namespace rlz77;

namespace {

oracle::symbols syms(const std::string& s) {
	oracle::symbols out;
	for (char ch : s)
		out.push_back(ch == '#' ? bwt_terminator : ch == '$' ? lz_terminator : to_symbol(static_cast<std::uint8_t>(ch)));
	return out;
}

} // namespace

TEST(Oracle, Lz77ByDefinition) {
	const auto aaaa = oracle::lz77("aaaa");
	ASSERT_EQ(aaaa.size(), 2u);
	EXPECT_EQ(aaaa[1], (factor{0, 3, factor::end_marker}));

	const auto ab = oracle::lz77("ab");
	ASSERT_EQ(ab.size(), 3u);
	for (const auto& f : ab) EXPECT_EQ(f.len, 0u);

	const auto a = oracle::lz77("a");
	EXPECT_EQ(a, (std::vector<factor>{factor{std::nullopt, 0, 'a'}, factor{std::nullopt, 0, factor::end_marker}}));
}

TEST(Oracle, Lz77RequiresUniqueEndMarker) {
	EXPECT_THROW(oracle::lz77(std::vector<std::uint16_t>{'a'}), std::invalid_argument);
	EXPECT_THROW(oracle::lz77(std::vector<std::uint16_t>{factor::end_marker, 'a', factor::end_marker}),
	             std::invalid_argument);
}

TEST(Oracle, Lz77DecompressesToInput) {
	std::mt19937_64 rng(8);
	for (int rep = 0; rep < 50; ++rep) {
		const auto text = oracle::random_text(rng, rng() % 200, 1 + rep % 5);
		EXPECT_EQ(decompress(oracle::lz77(text)), text);
	}
}

TEST(Oracle, Bwt) {
	EXPECT_EQ(oracle::bwt(syms("$ba#")), syms("a#b$"));
	EXPECT_EQ(oracle::bwt(syms("#")), syms("#"));
}

TEST(Oracle, RunCount) {
	EXPECT_EQ(oracle::run_count(std::string("bc#bbbbccccbaaaaaaaaaaa")), 7u);
	EXPECT_EQ(oracle::run_count(std::string("aaaa")), 1u);
	EXPECT_EQ(oracle::run_count(std::string()), 0u);
}

TEST(Oracle, RunCountMatchesRunHeads) {
	std::mt19937_64 rng(12);
	for (int rep = 0; rep < 20; ++rep) {
		const auto text = oracle::random_text(rng, rng() % 100, 3);
		const auto bwt = build(text);
		EXPECT_EQ(oracle::run_count(oracle::bwt(oracle::reversed_with_terminators(text))), bwt.heads().size());
	}
}

#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "rlz77/gap_bitvector.hpp"
#include "support/fuzz.hpp"

using rlz77::gap_bitvector;

namespace {

gap_bitvector from_string(const std::string& bits) {
	gap_bitvector b;
	for (std::size_t i = 0; i < bits.size(); ++i) b.insert_bit(i, bits[i] == '1');
	return b;
}

std::string to_string(const gap_bitvector& b) {
	std::string s;
	for (bool x : b.to_bits()) s.push_back(x ? '1' : '0');
	return s;
}

} // namespace

TEST(GapBitvector, Access) {
	auto b = from_string("10010");
	EXPECT_TRUE(b.access(0));
	EXPECT_FALSE(b.access(1));
	EXPECT_TRUE(b.access(3));
	EXPECT_THROW(b.access(5), std::out_of_range);
}

TEST(GapBitvector, RankIsInclusive) {
	auto b = from_string("10010");
	EXPECT_EQ(b.rank1(2), 1u);
	EXPECT_EQ(b.rank1(3), 2u);
	EXPECT_EQ(b.rank1(4), 2u);
	EXPECT_THROW(b.rank1(5), std::out_of_range);
}

TEST(GapBitvector, Select) {
	auto b = from_string("10010");
	EXPECT_EQ(b.select1(1), 0u);
	EXPECT_EQ(b.select1(2), 3u);
	EXPECT_EQ(from_string("1").select1(1), 0u);
	EXPECT_THROW(b.select1(3), std::out_of_range);
	EXPECT_THROW(b.select1(0), std::out_of_range);
}

TEST(GapBitvector, InsertCases) {
	auto zero = from_string("10010");
	zero.insert_bit(2, false);
	EXPECT_EQ(to_string(zero), "100010");

	auto split = from_string("10010");
	split.insert_bit(1, true);
	EXPECT_EQ(to_string(split), "110010");

	auto head = from_string("10010");
	head.insert_bit(0, true);
	EXPECT_EQ(to_string(head), "110010");

	auto tail = from_string("10010");
	tail.insert_bit(5, true);
	EXPECT_EQ(to_string(tail), "100101");

	EXPECT_THROW(head.insert_bit(0, false), rlz77::contract_violation);
	EXPECT_THROW(head.insert_bit(9, true), std::out_of_range);
	gap_bitvector empty;
	EXPECT_THROW(empty.insert_bit(0, false), rlz77::contract_violation);
}

TEST(GapBitvector, DeleteZero) {
	auto a = from_string("10010");
	a.delete0(1);
	EXPECT_EQ(to_string(a), "1010");

	auto b = from_string("10010");
	b.delete0(4);
	EXPECT_EQ(to_string(b), "1001");

	auto c = from_string("10010");
	EXPECT_THROW(c.delete0(0), rlz77::contract_violation);
	EXPECT_THROW(c.delete0(3), rlz77::contract_violation);
	EXPECT_EQ(to_string(c), "10010");
}

TEST(GapBitvector, FuzzAgainstBitArray) {
	for (std::uint64_t seed = 1; seed <= 4; ++seed) EXPECT_EQ(rlz77::fuzz::gap_bitvector_run(seed, 10000), "") << seed;
}

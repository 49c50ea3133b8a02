#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "rlz77/spsi.hpp"
#include "support/fuzz.hpp"

using rlz77::spsi;

namespace {

spsi make(std::initializer_list<std::uint64_t> values) {
	spsi ps;
	std::size_t i = 0;
	for (auto v : values) {
		ps.insert(i);
		ps.update(++i, static_cast<std::int64_t>(v));
	}
	return ps;
}

} // namespace

TEST(Spsi, SumExamples) {
	auto ps = make({3, 1, 4});
	EXPECT_EQ(ps.sum(1), 3u);
	EXPECT_EQ(ps.sum(3), 8u);
	EXPECT_EQ(ps.sum(0), 0u);
	EXPECT_EQ(spsi{}.sum(0), 0u);
	EXPECT_THROW(ps.sum(4), std::out_of_range);
}

TEST(Spsi, SearchExamples) {
	auto ps = make({3, 1, 4});
	EXPECT_EQ(ps.search(4), 2u);
	EXPECT_EQ(ps.search(1), 1u);
	EXPECT_EQ(make({0, 0, 5}).search(5), 3u);
	EXPECT_THROW(ps.search(0), std::out_of_range);
	EXPECT_THROW(ps.search(9), std::out_of_range);
}

TEST(Spsi, SearchSkipsTrailingZeros) {
	auto ps = make({2, 0, 0, 1});
	EXPECT_EQ(ps.search(2), 1u);
	EXPECT_EQ(ps.search(3), 4u);
}

TEST(Spsi, UpdateExamples) {
	auto ps = make({3, 1, 4});
	ps.update(2, +2);
	EXPECT_EQ(ps.to_vector(), (std::vector<std::uint64_t>{3, 3, 4}));
	EXPECT_EQ(ps.total(), 10u);

	auto qs = make({3, 1, 4});
	qs.update(3, -4);
	EXPECT_EQ(qs.to_vector(), (std::vector<std::uint64_t>{3, 1, 0}));

	auto one = make({3});
	EXPECT_THROW(one.update(1, -4), rlz77::contract_violation);
	EXPECT_EQ(one.at(1), 3u);
	EXPECT_THROW(one.update(2, 1), std::out_of_range);
}

TEST(Spsi, InsertExamples) {
	auto head = make({3, 1});
	head.insert(0);
	EXPECT_EQ(head.to_vector(), (std::vector<std::uint64_t>{0, 3, 1}));

	auto tail = make({3, 1});
	tail.insert(2);
	EXPECT_EQ(tail.to_vector(), (std::vector<std::uint64_t>{3, 1, 0}));

	spsi empty;
	empty.insert(0);
	EXPECT_EQ(empty.to_vector(), (std::vector<std::uint64_t>{0}));
	EXPECT_THROW(empty.insert(2), std::out_of_range);
}

TEST(Spsi, FuzzAgainstFlatArray) {
	for (std::uint64_t seed = 1; seed <= 5; ++seed) EXPECT_EQ(rlz77::fuzz::spsi_run(seed, 10000), "") << seed;
}

TEST(Spsi, HeightStaysLogarithmic) {
	// sequential inserts at the head and the tail are the worst case for an
	// unbalanced tree
	for (int pattern = 0; pattern < 3; ++pattern) {
		spsi ps;
		std::mt19937_64 rng(pattern);
		for (std::size_t i = 0; i < 5000; ++i) {
			const std::size_t m = ps.size();
			ps.insert(pattern == 0 ? 0 : pattern == 1 ? m : rng() % (m + 1));
			if (i % 97 == 0) {
				ASSERT_LE(static_cast<double>(ps.height()), 2.0 * std::log2(static_cast<double>(ps.size() + 1)));
				ASSERT_TRUE(ps.balanced());
			}
		}
		EXPECT_TRUE(ps.counters_consistent());
	}
}

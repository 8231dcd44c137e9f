#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "lzcrystal/partition.hpp"

using namespace lzc;

TEST_CASE("partition validation and basics") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    Partition p({3, 1});
    CHECK(p.length() == 2);
    CHECK(p.size() == 4);
    CHECK(p.part(1) == 3);
    CHECK(p.part(5) == 0);
}

TEST_CASE("conjugate") {
    CHECK(Partition({2, 1}).conjugate() == Partition({2, 1}));
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    CHECK(Partition{}.conjugate() == Partition{});

    // involution, size preserved
    for (const auto& p : partitions_up_to(6, 6)) {
        CHECK(p.conjugate().conjugate() == p);
        CHECK(p.conjugate().size() == p.size());
    }
}

TEST_CASE("partition enumeration against brute force") {
    // oracle: count via the recurrence p(total, max_part, slots) checked
    // by direct generate-and-filter over compositions
    auto by_filter = [](int total, int max_len) {
        std::set<std::vector<int>> acc;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int rem, int cap) -> void {
            if (rem == 0) {
                if (static_cast<int>(cur.size()) <= max_len) acc.insert(cur);
                return;
            }
            for (int v = std::min(rem, cap); v >= 1; --v) {
                cur.push_back(v);
                self(self, rem - v, v);
                cur.pop_back();
            }
        };
        rec(rec, total, total);
        return acc;
    };
    for (int total = 0; total <= 7; ++total)
        for (int len = 0; len <= 4; ++len) {
            auto got = partitions_of(total, len);
            auto want = by_filter(total, len);
            CHECK(got.size() == want.size());
            for (const auto& p : got) CHECK(want.contains(p.parts()));
        }
}

TEST_CASE("admissible tuples") {
    auto single_row = admissible_tuples({1}, 2);
    REQUIRE(single_row.size() == 3);
    CHECK(single_row[0] == PartitionTuple::empty(1));
    CHECK(single_row[1] == PartitionTuple({Partition({1})}));
    CHECK(single_row[2] == PartitionTuple({Partition({2})}));

    auto rows_two = admissible_tuples({2}, 2);
    REQUIRE(rows_two.size() == 4);
    std::set<PartitionTuple> rows_two_set(rows_two.begin(), rows_two.end());
    CHECK(rows_two_set.contains(PartitionTuple({Partition({1, 1})})));
    CHECK(rows_two_set.contains(PartitionTuple({Partition({2})})));

    // zero caps force empty components
    auto zeros = admissible_tuples({0, 0, 0}, 5);
    REQUIRE(zeros.size() == 1);
    CHECK(zeros[0] == PartitionTuple::empty(3));

    // deterministic graded-lex order, no duplicates
    auto tuples = admissible_tuples({2, 1}, 3);
    std::set<PartitionTuple> dedup(tuples.begin(), tuples.end());
    CHECK(dedup.size() == tuples.size());
    for (std::size_t k = 1; k < tuples.size(); ++k)
        CHECK(tuples[k - 1].total_size() <= tuples[k].total_size());
    for (const auto& t : tuples) CHECK(within_caps(t, {2, 1}));

    // against brute force: every unrestricted tuple within caps appears
    auto everything = all_tuples(2, 3);
    std::size_t matching = 0;
    for (const auto& t : everything)
        if (within_caps(t, {2, 1})) ++matching;
    CHECK(matching == tuples.size());
}

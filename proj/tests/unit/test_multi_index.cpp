#include <random>
#include <vector>

#include "brst/multi_index.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace brst;

namespace {

// Brute-force bubble sort counting transpositions; 0 on repeats.
std::pair<std::vector<int>, int> bubble_sort_sign(std::vector<int> raw) {
    int sign = 1;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        for (std::size_t j = 0; j + 1 < raw.size(); ++j) {
            if (raw[j] > raw[j + 1]) {
                std::swap(raw[j], raw[j + 1]);
                sign = -sign;
            }
        }
    }
    for (std::size_t j = 0; j + 1 < raw.size(); ++j) {
        if (raw[j] == raw[j + 1]) return {raw, 0};
    }
    return {raw, sign};
}

}  // namespace

TEST_CASE("normalize on pinned words") {
    auto [idx, sign] = normalize(std::vector<int>{1, 2, 3}, 3);
    CHECK(sign == 1);
    CHECK(idx.indices() == std::vector<int>{1, 2, 3});

    std::tie(idx, sign) = normalize(std::vector<int>{2, 1}, 2);
    CHECK(sign == -1);
    CHECK(idx.indices() == std::vector<int>{1, 2});

    // Frozen from the bubble-sort reference: (3,1,2) sorts with two swaps.
    const auto [ref, ref_sign] = bubble_sort_sign({3, 1, 2});
    REQUIRE(ref_sign == 1);
    std::tie(idx, sign) = normalize(std::vector<int>{3, 1, 2}, 3);
    CHECK(sign == ref_sign);
    CHECK(idx.indices() == ref);

    std::tie(idx, sign) = normalize(std::vector<int>{1, 1}, 2);
    CHECK(sign == 0);
    CHECK(idx.empty());
}

TEST_CASE("normalize rejects out-of-range entries") {
    CHECK_THROWS_AS(normalize(std::vector<int>{0}, 2), std::invalid_argument);
    CHECK_THROWS_AS(normalize(std::vector<int>{3}, 2), std::invalid_argument);
}

TEST_CASE("normalize agrees with bubble sort on random words") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> len(0, 6);
    std::uniform_int_distribution<int> entry(1, 6);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<int> raw(static_cast<std::size_t>(len(rng)));
        for (int& r : raw) r = entry(rng);
        const auto [sorted, ref_sign] = bubble_sort_sign(raw);
        const auto [idx, sign] = normalize(raw, 6);
        CHECK(sign == ref_sign);
        if (sign != 0) CHECK(idx.indices() == sorted);
    }
}

TEST_CASE("merge_sign pinned examples and idempotence") {
    const int m = 3;
    auto I = [&](std::vector<int> v) { return normalize(v, m).first; };

    CHECK(merge_sign(I({1}), I({2})).second == 1);
    CHECK(merge_sign(I({2}), I({1})).second == -1);
    // Frozen from normalize(1,3,2).
    CHECK(bubble_sort_sign({1, 3, 2}).second == -1);
    CHECK(merge_sign(I({1, 3}), I({2})).second == -1);
    CHECK(merge_sign(I({1, 3}), I({2})).first.indices() == std::vector<int>{1, 2, 3});
    CHECK(merge_sign(I({1}), I({1})).second == 0);
}

TEST_CASE("reversal_sign pinned examples") {
    const int m = 4;
    auto I = [&](std::vector<int> v) { return normalize(v, m).first; };
    CHECK(reversal_sign(I({})) == 1);
    CHECK(reversal_sign(I({2})) == 1);
    // One transposition reverses a length-2 word.
    CHECK(reversal_sign(I({1, 2})) == -1);
    // Frozen from bubble-sorting the reversed word (3,2,1).
    CHECK(bubble_sort_sign({3, 2, 1}).second == -1);
    CHECK(reversal_sign(I({1, 2, 3})) == -1);
    CHECK(reversal_sign(I({1, 2, 3, 4})) == 1);
}

TEST_CASE("complement pinned examples") {
    CHECK(normalize(std::vector<int>{2}, 3).first.complement().indices() ==
          std::vector<int>{1, 3});
    CHECK(MultiIndex(2).complement().indices() == std::vector<int>{1, 2});
    CHECK(normalize(std::vector<int>{1, 4}, 4).first.complement().indices() ==
          std::vector<int>{2, 3});
}

TEST_CASE("multi-index invariants") {
    std::mt19937 rng(11);
    const int m = 6;
    for (int trial = 0; trial < 300; ++trial) {
        std::uniform_int_distribution<int> size(0, m);
        const MultiIndex a = oracle::random_multi_index(rng, m, size(rng));
        const MultiIndex b = oracle::random_multi_index(rng, m, size(rng));

        // Idempotence on increasing input.
        const auto [again, sign] = normalize(a.indices(), m);
        CHECK(sign == 1);
        CHECK(again == a);

        // Graded commutativity of the merge.
        const auto [ab, sab] = merge_sign(a, b);
        const auto [ba, sba] = merge_sign(b, a);
        if (sab != 0) {
            CHECK(ab == ba);
            const int expected = ((a.size() * b.size()) % 2 == 0) ? sba : -sba;
            CHECK(sab == expected);
        } else {
            CHECK(sba == 0);
        }

        // Complement pairing fills up the top index.
        const auto [full, sc] = merge_sign(a, a.complement());
        CHECK((sc == 1 || sc == -1));
        CHECK(full == MultiIndex(m).complement());

        CHECK(reversal_sign(a) * reversal_sign(a) == 1);
    }
}

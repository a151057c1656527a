#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace brst {

/// Strictly increasing sequence of ghost indices in 1..m, stored as a bitmask
/// over m positions. Every sign convention in the library is derived from the
/// single rule that one adjacent transposition flips the sign; nothing is
/// table-driven.
class MultiIndex {
public:
    static constexpr int max_ghosts = 16;

    MultiIndex() = default;
    explicit MultiIndex(int ghost_count);
    MultiIndex(int ghost_count, std::uint32_t bits);

    int ghost_count() const { return m_; }
    int size() const;
    bool empty() const { return bits_ == 0; }
    bool contains(int index) const;  // index in 1..m
    std::uint32_t bits() const { return bits_; }
    std::vector<int> indices() const;  // increasing, 1-based

    /// Indices 1..m not present in this index, in increasing order.
    MultiIndex complement() const;

    std::string str() const;  // "(1,3)" ; "()" when empty

    bool operator==(const MultiIndex& other) const = default;
    /// Orders by (size, lexicographic index sequence); deterministic
    /// container ordering everywhere.
    bool operator<(const MultiIndex& other) const;

private:
    std::uint8_t m_ = 0;
    std::uint32_t bits_ = 0;
};

/// Canonicalizes a raw index word under anticommutation. sign is 0 iff the
/// word repeats an entry (the result is then empty); otherwise sign is the
/// parity of the permutation sorting the word and the result is the sorted
/// word. Entries outside 1..ghost_count throw std::invalid_argument.
std::pair<MultiIndex, int> normalize(std::span<const int> raw, int ghost_count);

/// Sign and result of concatenating two increasing words: 0 on overlap, else
/// (-1)^{#inversions between lhs and rhs} with the merged index. Mismatched
/// ghost counts throw std::invalid_argument.
std::pair<MultiIndex, int> merge_sign(const MultiIndex& lhs, const MultiIndex& rhs);

/// Sign relating the reversed word to the increasing word: (-1)^{r(r-1)/2}
/// for r = size.
int reversal_sign(const MultiIndex& idx);

}  // namespace brst

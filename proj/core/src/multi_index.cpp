#include "brst/multi_index.hpp"

#include <bit>
#include <stdexcept>

namespace brst {

namespace {

void check_ghost_count(int m) {
    if (m < 0 || m > MultiIndex::max_ghosts) {
        throw std::invalid_argument("ghost count out of range: " + std::to_string(m));
    }
}

}  // namespace

MultiIndex::MultiIndex(int ghost_count) : m_(0), bits_(0) {
    check_ghost_count(ghost_count);
    m_ = static_cast<std::uint8_t>(ghost_count);
}

MultiIndex::MultiIndex(int ghost_count, std::uint32_t bits) : MultiIndex(ghost_count) {
    if (ghost_count < MultiIndex::max_ghosts && (bits >> ghost_count) != 0) {
        throw std::invalid_argument("multi-index bits exceed ghost count");
    }
    bits_ = bits;
}

int MultiIndex::size() const { return std::popcount(bits_); }

bool MultiIndex::contains(int index) const {
    if (index < 1 || index > m_) return false;
    return (bits_ >> (index - 1)) & 1u;
}

std::vector<int> MultiIndex::indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int i = 1; i <= m_; ++i) {
        if (contains(i)) out.push_back(i);
    }
    return out;
}

MultiIndex MultiIndex::complement() const {
    const std::uint32_t full = (m_ == 32) ? ~0u : ((1u << m_) - 1u);
    return MultiIndex(m_, full & ~bits_);
}

std::string MultiIndex::str() const {
    std::string out = "(";
    bool first = true;
    for (int i : indices()) {
        if (!first) out += ",";
        out += std::to_string(i);
        first = false;
    }
    out += ")";
    return out;
}

bool MultiIndex::operator<(const MultiIndex& other) const {
    if (size() != other.size()) return size() < other.size();
    // Same cardinality: lexicographic comparison of the index sequences.
    std::uint32_t a = bits_, b = other.bits_;
    while (a != 0 && b != 0) {
        const int la = std::countr_zero(a), lb = std::countr_zero(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return false;
}

std::pair<MultiIndex, int> normalize(std::span<const int> raw, int ghost_count) {
    check_ghost_count(ghost_count);
    std::uint32_t bits = 0;
    int sign = 1;
    for (int r : raw) {
        if (r < 1 || r > ghost_count) {
            throw std::invalid_argument("ghost index out of range: " + std::to_string(r));
        }
        const std::uint32_t bit = 1u << (r - 1);
        if (bits & bit) {
            return {MultiIndex(ghost_count), 0};
        }
        // Appending r to the sorted prefix: it must hop past every entry
        // strictly greater than r, one transposition each.
        const int hops = std::popcount(bits & ~((bit << 1) - 1u));
        if (hops & 1) sign = -sign;
        bits |= bit;
    }
    return {MultiIndex(ghost_count, bits), sign};
}

std::pair<MultiIndex, int> merge_sign(const MultiIndex& lhs, const MultiIndex& rhs) {
    if (lhs.ghost_count() != rhs.ghost_count()) {
        throw std::invalid_argument("merge_sign: mismatched ghost counts");
    }
    if (lhs.bits() & rhs.bits()) {
        return {MultiIndex(lhs.ghost_count()), 0};
    }
    int inversions = 0;
    std::uint32_t r = rhs.bits();
    while (r != 0) {
        const int pos = std::countr_zero(r);
        // Entries of lhs above this rhs entry each contribute one inversion.
        inversions += std::popcount(lhs.bits() >> (pos + 1));
        r &= r - 1;
    }
    const int sign = (inversions & 1) ? -1 : 1;
    return {MultiIndex(lhs.ghost_count(), lhs.bits() | rhs.bits()), sign};
}

int reversal_sign(const MultiIndex& idx) {
    const int r = idx.size();
    return ((r * (r - 1) / 2) & 1) ? -1 : 1;
}

}  // namespace brst

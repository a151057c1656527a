#include "brst/observable.hpp"

#include <algorithm>
#include <stdexcept>

namespace brst {

namespace {

// One ghost-sector generator inside an unreduced word.
struct Gen {
    bool is_mom;  // false: eta^index, true: P_index
    int index;
};

// Rewrites an arbitrary eta/P word into normal order and accumulates the
// signed terms into `out` with coefficient scale * coeff. The rewrite rule
// is P_a eta^b -> -i delta(a,b) - eta^b P_a; the -i makes the relation
// star-invariant and identical to the operator relation, so conjugation is
// an anti-involution and the operator assignment a homomorphism. With
// `contract` off the delta branch is skipped, giving the product of the
// underlying supercommutative algebra. Ordering within the eta and P blocks
// is handled by the anticommutation sign of normalize().
void normal_order_word(const std::vector<Gen>& word, cplx scale,
                       const CoefficientPoly& coeff, Observable& out,
                       bool contract = true) {
    if (scale == cplx(0.0) || coeff.is_zero()) return;

    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        if (word[i].is_mom && !word[i + 1].is_mom) {
            // Swap branch: -1 times the word with the two generators swapped.
            std::vector<Gen> swapped = word;
            std::swap(swapped[i], swapped[i + 1]);
            normal_order_word(swapped, -scale, coeff, out, contract);
            // Contraction branch: -i delta times the word with both removed.
            if (contract && word[i].index == word[i + 1].index) {
                std::vector<Gen> contracted;
                contracted.reserve(word.size() - 2);
                contracted.insert(contracted.end(), word.begin(),
                                  word.begin() + static_cast<long>(i));
                contracted.insert(contracted.end(),
                                  word.begin() + static_cast<long>(i) + 2, word.end());
                normal_order_word(contracted, scale * cplx(0.0, -1.0), coeff, out,
                                  contract);
            }
            return;
        }
    }

    // No P left of an eta remains: sort each block by anticommutation.
    std::vector<int> etas, moms;
    for (const Gen& g : word) (g.is_mom ? moms : etas).push_back(g.index);
    const auto [eta_idx, eta_sign] = normalize(etas, out.ghost_count());
    if (eta_sign == 0) return;
    const auto [mom_idx, mom_sign] = normalize(moms, out.ghost_count());
    if (mom_sign == 0) return;

    CoefficientPoly c = coeff;
    c *= scale * static_cast<double>(eta_sign * mom_sign);
    out.add_term(eta_idx, mom_idx, c);
}

void append_indices(std::vector<Gen>& word, const MultiIndex& idx, bool is_mom) {
    for (int i : idx.indices()) word.push_back(Gen{is_mom, i});
}

}  // namespace

Observable::Observable(int ghost_count) : m_(ghost_count) {
    if (ghost_count < 0 || ghost_count > MultiIndex::max_ghosts) {
        throw std::invalid_argument("ghost count out of range");
    }
}

Observable Observable::scalar(int ghost_count, cplx value) {
    Observable f(ghost_count);
    f.add_term(MultiIndex(ghost_count), MultiIndex(ghost_count),
               CoefficientPoly::constant(ghost_count, value));
    return f;
}

Observable Observable::eta(int ghost_count, int a) {
    Observable f(ghost_count);
    const auto [idx, sign] = normalize(std::vector<int>{a}, ghost_count);
    f.add_term(idx, MultiIndex(ghost_count),
               CoefficientPoly::constant(ghost_count, cplx(sign, 0.0)));
    return f;
}

Observable Observable::mom(int ghost_count, int a) {
    Observable f(ghost_count);
    const auto [idx, sign] = normalize(std::vector<int>{a}, ghost_count);
    f.add_term(MultiIndex(ghost_count), idx,
               CoefficientPoly::constant(ghost_count, cplx(sign, 0.0)));
    return f;
}

Observable Observable::symbol(int ghost_count, int a) {
    Observable f(ghost_count);
    f.add_term(MultiIndex(ghost_count), MultiIndex(ghost_count),
               CoefficientPoly::symbol(ghost_count, a));
    return f;
}

void Observable::add_term(const MultiIndex& eta_idx, const MultiIndex& mom_idx,
                          const CoefficientPoly& coeff) {
    if (eta_idx.ghost_count() != m_ || mom_idx.ghost_count() != m_ ||
        coeff.symbol_count() != m_) {
        throw std::invalid_argument("add_term: mismatched ghost count");
    }
    if (coeff.is_zero()) return;
    TermKey key{eta_idx, mom_idx};
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Observable& Observable::operator+=(const Observable& other) {
    if (other.m_ != m_) throw std::invalid_argument("ghost count mismatch");
    for (const auto& [key, coeff] : other.terms_) add_term(key.eta, key.mom, coeff);
    return *this;
}

Observable& Observable::operator-=(const Observable& other) {
    if (other.m_ != m_) throw std::invalid_argument("ghost count mismatch");
    for (const auto& [key, coeff] : other.terms_) {
        CoefficientPoly neg = coeff;
        neg *= cplx(-1.0, 0.0);
        add_term(key.eta, key.mom, neg);
    }
    return *this;
}

Observable& Observable::operator*=(cplx scale) {
    if (scale == cplx(0.0)) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, coeff] : terms_) coeff *= scale;
    return *this;
}

bool Observable::has_uniform_parity() const {
    if (terms_.empty()) return true;
    const int p = (terms_.begin()->first.eta.size() + terms_.begin()->first.mom.size()) & 1;
    return std::all_of(terms_.begin(), terms_.end(), [p](const auto& t) {
        return ((t.first.eta.size() + t.first.mom.size()) & 1) == p;
    });
}

int Observable::parity() const {
    if (!has_uniform_parity()) {
        throw std::invalid_argument("parity undefined: mixed-parity observable");
    }
    if (terms_.empty()) return 0;
    return (terms_.begin()->first.eta.size() + terms_.begin()->first.mom.size()) & 1;
}

bool Observable::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int r = terms_.begin()->first.eta.size();
    const int s = terms_.begin()->first.mom.size();
    return std::all_of(terms_.begin(), terms_.end(), [r, s](const auto& t) {
        return t.first.eta.size() == r && t.first.mom.size() == s;
    });
}

std::vector<Observable> Observable::split_homogeneous() const {
    std::map<std::pair<int, int>, Observable> pieces;
    for (const auto& [key, coeff] : terms_) {
        const auto deg = std::make_pair(key.eta.size() + key.mom.size(), key.mom.size());
        auto [it, inserted] = pieces.try_emplace(deg, Observable(m_));
        it->second.add_term(key.eta, key.mom, coeff);
    }
    std::vector<Observable> out;
    out.reserve(pieces.size());
    for (auto& [deg, obs] : pieces) out.push_back(std::move(obs));
    return out;
}

int Observable::antighost_number() const {
    int p = 0;
    for (const auto& [key, coeff] : terms_) p = std::max(p, key.mom.size());
    return p;
}

double Observable::max_abs_coefficient() const {
    double out = 0.0;
    for (const auto& [key, coeff] : terms_) out = std::max(out, coeff.max_abs());
    return out;
}

std::string Observable::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, coeff] : terms_) {
        std::vector<std::string> factors;
        const std::string c = coeff.str();
        const bool compound = coeff.terms().size() > 1;
        const bool ghost_free = key.eta.empty() && key.mom.empty();
        bool negate = false;
        if (ghost_free) {
            factors.push_back(compound ? "(" + c + ")" : c);
        } else if (c == "1") {
            // unit coefficient is left implicit
        } else if (c == "-1") {
            negate = true;
        } else {
            factors.push_back(compound ? "(" + c + ")" : c);
        }
        for (int i : key.eta.indices()) factors.push_back("eta_" + std::to_string(i));
        for (int i : key.mom.indices()) factors.push_back("P_" + std::to_string(i));

        std::string term;
        for (const std::string& f : factors) {
            if (!term.empty()) term += " ";
            term += f;
        }
        if (negate) term = "-" + term;

        if (!first) {
            if (!term.empty() && term[0] == '-') {
                out += " - ";
                term = term.substr(1);
            } else {
                out += " + ";
            }
        }
        out += term;
        first = false;
    }
    return out;
}

namespace {

Observable multiply_impl(const Observable& f, const Observable& g, bool contract) {
    if (f.ghost_count() != g.ghost_count()) {
        throw std::invalid_argument("multiply: ghost count mismatch");
    }
    Observable out(f.ghost_count());
    for (const auto& [kf, cf] : f.terms()) {
        for (const auto& [kg, cg] : g.terms()) {
            std::vector<Gen> word;
            word.reserve(static_cast<std::size_t>(kf.eta.size() + kf.mom.size() +
                                                  kg.eta.size() + kg.mom.size()));
            append_indices(word, kf.eta, false);
            append_indices(word, kf.mom, true);
            append_indices(word, kg.eta, false);
            append_indices(word, kg.mom, true);
            normal_order_word(word, cplx(1.0, 0.0), cf * cg, out, contract);
        }
    }
    return out;
}

}  // namespace

Observable multiply(const Observable& f, const Observable& g) {
    return multiply_impl(f, g, true);
}

Observable grassmann_multiply(const Observable& f, const Observable& g) {
    return multiply_impl(f, g, false);
}

Observable conjugate(const Observable& f) {
    Observable out(f.ghost_count());
    for (const auto& [key, coeff] : f.terms()) {
        // (eta^A f P_B)^* = (P_B)^* f^* (eta^A)^*: each conjugated P
        // contributes a -1, both blocks are reversed in place, and the word
        // is re-normal-ordered (P's now sit left of the etas).
        std::vector<Gen> word;
        const auto mom_seq = key.mom.indices();
        const auto eta_seq = key.eta.indices();
        for (auto it = mom_seq.rbegin(); it != mom_seq.rend(); ++it) {
            word.push_back(Gen{true, *it});
        }
        for (auto it = eta_seq.rbegin(); it != eta_seq.rend(); ++it) {
            word.push_back(Gen{false, *it});
        }
        const double sign = (key.mom.size() & 1) ? -1.0 : 1.0;
        normal_order_word(word, cplx(sign, 0.0), coeff.conjugated(), out);
    }
    return out;
}

Observable graded_conjugate(const Observable& f) {
    Observable out(f.ghost_count());
    for (const auto& [key, coeff] : f.terms()) {
        // (-1)^{|B|} from the momentum stars, reversal signs for both
        // blocks, and the block crossing; everything stays term-wise.
        const int r = key.eta.size();
        const int s = key.mom.size();
        const int parity = (s + (r * (r - 1) / 2) + (s * (s - 1) / 2) + r * s) & 1;
        CoefficientPoly c = coeff.conjugated();
        c *= cplx(parity ? -1.0 : 1.0, 0.0);
        out.add_term(key.eta, key.mom, c);
    }
    return out;
}

bool is_real(const Observable& f) { return conjugate(f) == f; }

}  // namespace brst

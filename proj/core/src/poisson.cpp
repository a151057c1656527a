#include <span>
#include <stdexcept>
#include <vector>

#include "brst/observable.hpp"

namespace brst {

namespace {

// Generators appearing in a bracket monomial. Constraint symbols take part
// here because [G_a, G_b] = C_ab^c G_c is nontrivial.
enum class Kind { eta, mom, sym };

struct BGen {
    Kind kind;
    int index;
};

int gen_parity(const BGen& g) { return g.kind == Kind::sym ? 0 : 1; }

int word_parity(std::span<const BGen> w) {
    int p = 0;
    for (const BGen& g : w) p ^= gen_parity(g);
    return p;
}

// A slice of a normal-ordered monomial (etas, then symbols, then momenta)
// stays normal-ordered, so it converts to an Observable without rewriting.
Observable word_to_obs(std::span<const BGen> w, int m) {
    std::vector<int> etas, moms;
    GExponents expo(static_cast<std::size_t>(m), 0u);
    for (const BGen& g : w) {
        switch (g.kind) {
            case Kind::eta: etas.push_back(g.index); break;
            case Kind::mom: moms.push_back(g.index); break;
            case Kind::sym: expo[static_cast<std::size_t>(g.index - 1)] += 1u; break;
        }
    }
    const auto [ei, es] = normalize(etas, m);
    const auto [mi, ms] = normalize(moms, m);
    if (es == 0 || ms == 0) return Observable(m);
    CoefficientPoly coeff(m);
    coeff.add_term(expo, cplx(es * ms, 0.0));
    Observable out(m);
    out.add_term(ei, mi, coeff);
    return out;
}

// Generator bracket table. All signs downstream derive from the graded
// Leibniz rule applied to these three entries.
Observable generator_bracket(const BGen& a, const BGen& b,
                             const StructureConstants& c, BracketPart part, int m) {
    if (a.kind == Kind::sym && b.kind == Kind::sym) {
        Observable out(m);
        if (part != BracketPart::ghosts_only) {
            for (int k = 1; k <= m; ++k) {
                const double v = c.get(a.index, b.index, k);
                if (v != 0.0) out += cplx(v, 0.0) * Observable::symbol(m, k);
            }
        }
        return out;
    }
    const bool ghost_pair =
        (a.kind == Kind::mom && b.kind == Kind::eta) ||
        (a.kind == Kind::eta && b.kind == Kind::mom);
    if (ghost_pair && part != BracketPart::coefficients_only && a.index == b.index) {
        return Observable::scalar(m, cplx(1.0, 0.0));
    }
    return Observable(m);
}

// Leibniz recursion over the generator table. Recombination uses the
// supercommutative product: the bracket lives on the graded algebra, where
// it is independent of the factorization chosen here.
Observable bracket_words(std::span<const BGen> a, std::span<const BGen> b,
                         const StructureConstants& c, BracketPart part, int m) {
    if (a.empty() || b.empty()) return Observable(m);
    if (a.size() == 1 && b.size() == 1) {
        return generator_bracket(a[0], b[0], c, part, m);
    }
    if (a.size() > 1) {
        // [g h, K] = g [h, K] + (-1)^{eps_h eps_K} [g, K] h
        const auto g = a.subspan(0, 1);
        const auto rest = a.subspan(1);
        const int sgn = (word_parity(rest) & word_parity(b)) ? -1 : 1;
        Observable out =
            grassmann_multiply(word_to_obs(g, m), bracket_words(rest, b, c, part, m));
        out += cplx(sgn, 0.0) * grassmann_multiply(bracket_words(g, b, c, part, m),
                                                   word_to_obs(rest, m));
        return out;
    }
    // [K, g h] = [K, g] h + (-1)^{eps_g eps_K} g [K, h]
    const auto g = b.subspan(0, 1);
    const auto rest = b.subspan(1);
    const int sgn = (gen_parity(b[0]) & word_parity(a)) ? -1 : 1;
    Observable out =
        grassmann_multiply(bracket_words(a, g, c, part, m), word_to_obs(rest, m));
    out += cplx(sgn, 0.0) *
           grassmann_multiply(word_to_obs(g, m), bracket_words(a, rest, c, part, m));
    return out;
}

// Expands an Observable into scalar-weighted monomial words.
struct Monomial {
    std::vector<BGen> gens;
    cplx scale;
};

std::vector<Monomial> monomials_of(const Observable& f) {
    std::vector<Monomial> out;
    for (const auto& [key, coeff] : f.terms()) {
        for (const auto& [expo, value] : coeff.terms()) {
            Monomial mono;
            mono.scale = value;
            for (int i : key.eta.indices()) mono.gens.push_back(BGen{Kind::eta, i});
            for (std::size_t k = 0; k < expo.size(); ++k) {
                for (unsigned rep = 0; rep < expo[k]; ++rep) {
                    mono.gens.push_back(BGen{Kind::sym, static_cast<int>(k) + 1});
                }
            }
            for (int i : key.mom.indices()) mono.gens.push_back(BGen{Kind::mom, i});
            out.push_back(std::move(mono));
        }
    }
    return out;
}

}  // namespace

Observable poisson(const Observable& f, const Observable& g,
                   const StructureConstants& c, BracketPart part) {
    if (f.ghost_count() != g.ghost_count()) {
        throw std::invalid_argument("poisson: ghost count mismatch");
    }
    if (c.constraint_count() != f.ghost_count()) {
        throw std::invalid_argument("poisson: structure constants have wrong rank");
    }
    const int m = f.ghost_count();
    Observable out(m);
    for (const Monomial& a : monomials_of(f)) {
        for (const Monomial& b : monomials_of(g)) {
            Observable term = bracket_words(a.gens, b.gens, c, part, m);
            term *= a.scale * b.scale;
            out += term;
        }
    }
    return out;
}

}  // namespace brst

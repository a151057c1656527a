#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "brst/coefficient_poly.hpp"
#include "brst/multi_index.hpp"
#include "brst/structure_constants.hpp"

namespace brst {

/// Ghost structure of one normal-ordered term: eta^A on the left, ghost
/// momenta P_B on the right, both in increasing index order.
struct TermKey {
    MultiIndex eta;
    MultiIndex mom;

    bool operator==(const TermKey& other) const = default;
    bool operator<(const TermKey& other) const {
        const int da = eta.size() + mom.size();
        const int db = other.eta.size() + other.mom.size();
        if (da != db) return da < db;
        if (mom.size() != other.mom.size()) return mom.size() < other.mom.size();
        if (!(eta == other.eta)) return eta < other.eta;
        return mom < other.mom;
    }
};

/// Element of the classical observable algebra: a finite sum of
/// normal-ordered terms eta^A f(G) P_B with polynomial coefficients in the
/// constraint symbols. The normal-ordered map is the unique stored
/// representation; equality is representation equality, so symbolic zero
/// means the empty map.
class Observable {
public:
    Observable() = default;
    explicit Observable(int ghost_count);

    static Observable zero(int ghost_count) { return Observable(ghost_count); }
    static Observable scalar(int ghost_count, cplx value);
    static Observable eta(int ghost_count, int a);
    static Observable mom(int ghost_count, int a);     // P_a
    static Observable symbol(int ghost_count, int a);  // G_a

    int ghost_count() const { return m_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<TermKey, CoefficientPoly>& terms() const { return terms_; }

    void add_term(const MultiIndex& eta_idx, const MultiIndex& mom_idx,
                  const CoefficientPoly& coeff);

    Observable& operator+=(const Observable& other);
    Observable& operator-=(const Observable& other);
    Observable& operator*=(cplx scale);

    friend Observable operator+(Observable a, const Observable& b) {
        a += b;
        return a;
    }
    friend Observable operator-(Observable a, const Observable& b) {
        a -= b;
        return a;
    }
    friend Observable operator*(cplx s, Observable f) {
        f *= s;
        return f;
    }

    bool operator==(const Observable& other) const = default;

    /// 0/1 parity (|A|+|B| mod 2); throws std::invalid_argument when terms
    /// mix parities.
    int parity() const;
    bool has_uniform_parity() const;

    /// True when every term has the same (|A|, |B|) bidegree.
    bool is_homogeneous() const;

    /// The (r,s)-graded pieces, in increasing (r+s, s) order. Always
    /// succeeds, also on mixed-parity input.
    std::vector<Observable> split_homogeneous() const;

    /// Maximum antighost number (P-degree) over terms; 0 for zero.
    int antighost_number() const;

    double max_abs_coefficient() const;

    std::string str() const;

private:
    int m_ = 0;
    std::map<TermKey, CoefficientPoly> terms_;
};

/// Associative product. When a P crosses an eta the relation
/// P_a eta^b = -i delta(a,b) - eta^b P_a is applied until normal order is
/// restored; coefficients multiply commutatively and pass through ghosts.
/// The contraction constant matches the operator relation, which makes the
/// operator assignment a homomorphism and conjugation an anti-involution.
Observable multiply(const Observable& f, const Observable& g);

/// The product of the underlying supercommutative algebra: same
/// anticommutation signs, contraction switched off. The Poisson bracket is
/// a biderivation for this product, and the two products agree whenever no
/// ghost meets a momentum of the same index.
Observable grassmann_multiply(const Observable& f, const Observable& g);

/// Antilinear anti-involution: eta^a fixed, P_a negated, factor order
/// reversed, coefficients conjugated; the result is re-normal-ordered.
/// Satisfies conjugate(conjugate(F)) = F and
/// conjugate(multiply(F,G)) = multiply(conjugate(G), conjugate(F)).
Observable conjugate(const Observable& f);

/// Conjugation of the underlying supercommutative algebra: reversal and
/// momentum signs only, no contraction terms, so it acts term-wise on the
/// normal form. Agrees with conjugate() on every term whose eta and
/// momentum indices do not overlap; the charge construction realifies with
/// this one.
Observable graded_conjugate(const Observable& f);

bool is_real(const Observable& f);

/// Which generator brackets participate in the graded Poisson bracket.
enum class BracketPart {
    full,              // [G_a,G_b] = C_ab^c G_c and [P_a,eta^b] = delta
    coefficients_only, // constraint-symbol brackets only
    ghosts_only        // ghost/antighost contraction only
};

/// Graded Poisson bracket, extended from the generator table by the graded
/// Leibniz rule. Inputs of mixed parity are handled by bilinear extension
/// over their monomials.
Observable poisson(const Observable& f, const Observable& g,
                   const StructureConstants& c,
                   BracketPart part = BracketPart::full);

}  // namespace brst

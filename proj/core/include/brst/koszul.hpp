#pragma once

#include <vector>

#include "brst/observable.hpp"
#include "brst/structure_constants.hpp"

namespace brst {

/// Odd derivation with P_a -> -G_a, eta^a -> 0, G_a -> 0, extended by the
/// graded Leibniz rule. Lowers antighost number by one and squares to zero.
Observable koszul_tate(const Observable& f);

/// Degree-raising homotopy inverting koszul_tate: on a monomial it replaces
/// one G_a factor by -P_a, summed over factor positions with the crossing
/// sign, divided by N = (G-degree + P-degree). Satisfies
/// delta(s(F)) + s(delta(F)) = F monomial-wise, so delta(s(F)) = F whenever
/// delta(F) = 0 and N > 0. A monomial with N = 0 (constant in G, P-free) is
/// outside the image and raises construction_error.
Observable contracting_homotopy(const Observable& f);

/// The charge produced by the homological perturbation loop. pieces[p] is
/// homogeneous of antighost number p (p momenta, p+1 ghosts per term).
struct BRSTCharge {
    std::vector<Observable> pieces;

    int ghost_count() const;
    Observable total() const;
};

/// Runs the perturbation loop: starts from eta^a G_a, at each rank computes
/// the obstruction from the partial brackets of the pieces built so far,
/// inverts the Koszul-Tate differential through the homotopy, and realifies
/// the new piece. Stops when the obstruction vanishes; certifies on exit
/// that the total charge is odd, real, and bracket-nilpotent, all as exact
/// symbolic identities.
BRSTCharge build_brst(const StructureConstants& c, int max_rank = 8);

}  // namespace brst

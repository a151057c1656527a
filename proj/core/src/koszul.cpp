#include "brst/koszul.hpp"

#include <numeric>
#include <stdexcept>

#include "brst/errors.hpp"

namespace brst {

namespace {

// Removes the k-th entry (0-based within the increasing sequence).
MultiIndex without_position(const MultiIndex& idx, int k) {
    auto seq = idx.indices();
    seq.erase(seq.begin() + k);
    return normalize(seq, idx.ghost_count()).first;
}

}  // namespace

Observable koszul_tate(const Observable& f) {
    const int m = f.ghost_count();
    Observable out(m);
    for (const auto& [key, coeff] : f.terms()) {
        const auto moms = key.mom.indices();
        for (int k = 0; k < static_cast<int>(moms.size()); ++k) {
            // Crossing eta^A and the k preceding momenta, then P_b -> -G_b.
            const int crossings = key.eta.size() + k;
            const double sign = (crossings & 1) ? 1.0 : -1.0;
            CoefficientPoly c = CoefficientPoly::symbol(m, moms[static_cast<std::size_t>(k)]) * coeff;
            c *= sign;
            out.add_term(key.eta, without_position(key.mom, k), c);
        }
    }
    return out;
}

Observable contracting_homotopy(const Observable& f) {
    const int m = f.ghost_count();
    Observable out(m);
    for (const auto& [key, coeff] : f.terms()) {
        for (const auto& [expo, value] : coeff.terms()) {
            const int g_degree =
                static_cast<int>(std::accumulate(expo.begin(), expo.end(), 0u));
            const int n = g_degree + key.mom.size();
            if (n == 0) {
                throw construction_error(
                    "contracting homotopy applied outside the image: monomial with "
                    "no constraint symbol and no ghost momentum");
            }
            for (std::size_t a = 0; a < expo.size(); ++a) {
                if (expo[a] == 0) continue;
                const int idx = static_cast<int>(a) + 1;
                const auto [merged, sign] =
                    merge_sign(normalize(std::vector<int>{idx}, m).first, key.mom);
                if (sign == 0) continue;  // P_idx already present
                GExponents reduced = expo;
                reduced[a] -= 1u;
                // One G_idx factor becomes -P_idx; it crosses eta^A and then
                // bubbles into place inside the momentum block.
                const double eta_cross = (key.eta.size() & 1) ? -1.0 : 1.0;
                const cplx scale = value * eta_cross * static_cast<double>(-sign) *
                                   (static_cast<double>(expo[a]) / n);
                CoefficientPoly c(m);
                c.add_term(reduced, scale);
                out.add_term(key.eta, merged, c);
            }
        }
    }
    return out;
}

int BRSTCharge::ghost_count() const {
    return pieces.empty() ? 0 : pieces.front().ghost_count();
}

Observable BRSTCharge::total() const {
    Observable sum(ghost_count());
    for (const Observable& p : pieces) sum += p;
    return sum;
}

namespace {

void check_antighost_pattern(const Observable& piece, int p) {
    for (const auto& [key, coeff] : piece.terms()) {
        if (key.mom.size() != p || key.eta.size() != p + 1) {
            throw construction_error(
                "charge piece violates the antighost pattern at rank " +
                std::to_string(p));
        }
    }
}

}  // namespace

BRSTCharge build_brst(const StructureConstants& c, int max_rank) {
    c.validate_or_throw();
    if (max_rank < 0) throw std::invalid_argument("max_rank must be nonnegative");
    const int m = c.constraint_count();

    BRSTCharge charge;
    {
        Observable omega0(m);
        for (int a = 1; a <= m; ++a) {
            omega0 += multiply(Observable::eta(m, a), Observable::symbol(m, a));
        }
        charge.pieces.push_back(omega0);
    }

    for (int p = 0;; ++p) {
        // Obstruction at antighost number p: the level-p component of half
        // the bracket of the partial sum with itself. The coefficient part
        // keeps antighost number (pairs i+j=p), the ghost contraction lowers
        // it by one (pairs i+j=p+1 among the pieces built so far).
        // Pieces 0..p exist on entry to iteration p, which covers every index
        // below: the coefficient part pairs i+j = p, the ghost contraction
        // pairs i+j = p+1 with both factors among the pieces already built.
        Observable obstruction(m);
        for (int i = 0; i <= p; ++i) {
            obstruction += poisson(charge.pieces.at(static_cast<std::size_t>(i)),
                                   charge.pieces.at(static_cast<std::size_t>(p - i)), c,
                                   BracketPart::coefficients_only);
        }
        for (int i = 1; i <= p; ++i) {
            obstruction += poisson(charge.pieces.at(static_cast<std::size_t>(i)),
                                   charge.pieces.at(static_cast<std::size_t>(p + 1 - i)), c,
                                   BracketPart::ghosts_only);
        }
        obstruction *= cplx(0.5, 0.0);

        if (obstruction.is_zero()) break;
        if (p >= max_rank) {
            throw construction_error(
                "perturbation loop not terminated by rank " + std::to_string(max_rank));
        }

        if (!koszul_tate(obstruction).is_zero()) {
            throw construction_error(
                "obstruction is not closed at rank " + std::to_string(p));
        }
        Observable candidate = contracting_homotopy(obstruction);
        // Realify in the graded algebra; the obstruction is anti-real there,
        // so this preserves the solved equation. Always applied, idempotent
        // on real input.
        candidate += graded_conjugate(candidate);
        candidate *= cplx(0.5, 0.0);
        if (!(koszul_tate(candidate) == obstruction)) {
            throw construction_error(
                "homotopy failed to invert the differential at rank " +
                std::to_string(p));
        }
        check_antighost_pattern(candidate, p + 1);
        charge.pieces.push_back(std::move(candidate));
    }

    const Observable total = charge.total();
    if (!(total.parity() == 1)) {
        throw construction_error("charge is not odd");
    }
    if (!is_real(total)) {
        throw construction_error("charge is not real");
    }
    if (!poisson(total, total, c).is_zero()) {
        throw construction_error("charge fails bracket nilpotency");
    }
    return charge;
}

}  // namespace brst

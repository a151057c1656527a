#include "brst/quantize.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <stdexcept>

#include "brst/errors.hpp"

namespace brst {

namespace {

const cplx kI(0.0, 1.0);

GradedOperator make_eta_op(const FockSpace& space, int a) {
    const int d = space.dim_v();
    Matrix mat = Matrix::Zero(space.total_dim(), space.total_dim());
    for (int s = 0; s < space.ghost_count(); ++s) {
        for (const MultiIndex& idx : space.sector_indices(s)) {
            if (idx.contains(a)) continue;
            const auto single = normalize(std::vector<int>{a}, space.ghost_count()).first;
            const auto [merged, sign] = merge_sign(single, idx);
            for (int k = 0; k < d; ++k) {
                mat(space.index_of(merged, k), space.index_of(idx, k)) = sign;
            }
        }
    }
    return GradedOperator{std::move(mat), 1, 1};
}

GradedOperator make_mom_op(const FockSpace& space, int a) {
    const int d = space.dim_v();
    Matrix mat = Matrix::Zero(space.total_dim(), space.total_dim());
    for (int s = 1; s <= space.ghost_count(); ++s) {
        for (const MultiIndex& idx : space.sector_indices(s)) {
            if (!idx.contains(a)) continue;
            // Left ghost derivative pulls eta_a to the front: one sign per
            // smaller entry; the 1/i makes the operator value -i * sign.
            const int below = std::popcount(idx.bits() & ((1u << (a - 1)) - 1u));
            const cplx value = -kI * ((below & 1) ? -1.0 : 1.0);
            std::vector<int> rest;
            for (int i : idx.indices()) {
                if (i != a) rest.push_back(i);
            }
            const MultiIndex target = normalize(rest, space.ghost_count()).first;
            for (int k = 0; k < d; ++k) {
                mat(space.index_of(target, k), space.index_of(idx, k)) = value;
            }
        }
    }
    return GradedOperator{std::move(mat), 1, -1};
}

}  // namespace

double max_abs(const Matrix& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().maxCoeff();
}

double block_structure_residual(const GradedOperator& op, const FockSpace& space) {
    if (!op.ghost_shift.has_value()) return 0.0;
    const int shift = *op.ghost_shift;
    double residual = 0.0;
    for (int s = 0; s <= space.ghost_count(); ++s) {
        for (int t = 0; t <= space.ghost_count(); ++t) {
            if (t == s + shift) continue;
            const auto block = op.mat.block(space.sector_offset(t), space.sector_offset(s),
                                            space.sector_dim(t), space.sector_dim(s));
            residual = std::max(residual, max_abs(block));
        }
    }
    return residual;
}

GeneratorOps::GeneratorOps(FockSpace space, std::vector<Matrix> constraint_mats,
                           StructureConstants structure, OperatorTolerances tol)
    : space_(std::move(space)),
      g_mats_(std::move(constraint_mats)),
      structure_(std::move(structure)),
      tol_(tol) {
    const int m = space_.ghost_count();
    const int d = space_.dim_v();
    if (static_cast<int>(g_mats_.size()) != m) {
        throw config_error("expected one constraint matrix per ghost");
    }
    if (structure_.constraint_count() != m) {
        throw config_error("structure constants rank does not match ghost count");
    }

    std::vector<std::string> violations;
    char buf[160];
    for (int a = 1; a <= m; ++a) {
        const Matrix& g = g_mats_[static_cast<std::size_t>(a - 1)];
        if (g.rows() != d || g.cols() != d) {
            std::snprintf(buf, sizeof(buf), "constraint matrix %d is not %dx%d", a, d, d);
            violations.emplace_back(buf);
            continue;
        }
        // Self-adjointness for the V inner product: S G = (S G)^H.
        const Matrix sg = space_.metric() * g;
        const double herm = max_abs(sg - Matrix(sg.adjoint()));
        if (herm > tol_.identity * d) {
            std::snprintf(buf, sizeof(buf),
                          "constraint matrix %d is not self-adjoint (residual %.3g)", a,
                          herm);
            violations.emplace_back(buf);
        }
    }
    if (violations.empty()) {
        for (int a = 1; a <= m; ++a) {
            for (int b = a + 1; b <= m; ++b) {
                Matrix closure = g_mats_[static_cast<std::size_t>(a - 1)] *
                                     g_mats_[static_cast<std::size_t>(b - 1)] -
                                 g_mats_[static_cast<std::size_t>(b - 1)] *
                                     g_mats_[static_cast<std::size_t>(a - 1)];
                for (int c = 1; c <= m; ++c) {
                    closure += kI * structure_.get(a, b, c) *
                               g_mats_[static_cast<std::size_t>(c - 1)];
                }
                consistency_residual_ = std::max(consistency_residual_, max_abs(closure));
            }
        }
        if (consistency_residual_ > tol_.identity * d) {
            std::snprintf(buf, sizeof(buf),
                          "constraint commutators do not close on the structure "
                          "constants (residual %.3g)",
                          consistency_residual_);
            violations.emplace_back(buf);
        }
    }
    if (!violations.empty()) {
        throw config_error("invalid constraint representation", std::move(violations));
    }

    for (int a = 1; a <= m; ++a) {
        eta_ops_.push_back(make_eta_op(space_, a));
        mom_ops_.push_back(make_mom_op(space_, a));
        lifted_constraints_.push_back(lift(g_mats_[static_cast<std::size_t>(a - 1)]));
    }
}

const GradedOperator& GeneratorOps::eta(int a) const {
    if (a < 1 || a > space_.ghost_count()) throw std::invalid_argument("eta index out of range");
    return eta_ops_[static_cast<std::size_t>(a - 1)];
}

const GradedOperator& GeneratorOps::mom(int a) const {
    if (a < 1 || a > space_.ghost_count()) throw std::invalid_argument("mom index out of range");
    return mom_ops_[static_cast<std::size_t>(a - 1)];
}

const GradedOperator& GeneratorOps::constraint(int a) const {
    if (a < 1 || a > space_.ghost_count()) {
        throw std::invalid_argument("constraint index out of range");
    }
    return lifted_constraints_[static_cast<std::size_t>(a - 1)];
}

GradedOperator GeneratorOps::lift(const Matrix& v_op) const {
    const int d = space_.dim_v();
    if (v_op.rows() != d || v_op.cols() != d) {
        throw std::invalid_argument("lift: operator is not dim_v x dim_v");
    }
    Matrix mat = Matrix::Zero(space_.total_dim(), space_.total_dim());
    for (int s = 0; s <= space_.ghost_count(); ++s) {
        for (const MultiIndex& idx : space_.sector_indices(s)) {
            const int off = space_.index_of(idx, 0);
            mat.block(off, off, d, d) = v_op;
        }
    }
    return GradedOperator{std::move(mat), 0, 0};
}

Matrix GeneratorOps::eval_coefficient(const CoefficientPoly& poly) const {
    const int d = space_.dim_v();
    Matrix out = Matrix::Zero(d, d);
    for (const auto& [expo, value] : poly.terms()) {
        std::vector<int> factors;
        for (std::size_t a = 0; a < expo.size(); ++a) {
            for (unsigned r = 0; r < expo[a]; ++r) factors.push_back(static_cast<int>(a));
        }
        if (factors.empty()) {
            out += value * Matrix::Identity(d, d);
            continue;
        }
        // Symmetrized product: average over the distinct orderings.
        Matrix sym = Matrix::Zero(d, d);
        int count = 0;
        std::sort(factors.begin(), factors.end());
        do {
            Matrix prod = Matrix::Identity(d, d);
            for (int a : factors) prod = prod * g_mats_[static_cast<std::size_t>(a)];
            sym += prod;
            ++count;
        } while (std::next_permutation(factors.begin(), factors.end()));
        out += value * (sym / static_cast<double>(count));
    }
    return out;
}

GradedOperator quantize(const Observable& f, const GeneratorOps& ops) {
    const FockSpace& space = ops.space();
    if (f.ghost_count() != space.ghost_count()) {
        throw std::invalid_argument("quantize: ghost count mismatch");
    }
    const int n = space.total_dim();
    Matrix mat = Matrix::Zero(n, n);
    for (const auto& [key, coeff] : f.terms()) {
        Matrix term = ops.lift(ops.eval_coefficient(coeff)).mat;
        for (int b : key.mom.indices()) term = term * ops.mom(b).mat;
        Matrix left = Matrix::Identity(n, n);
        for (int a : key.eta.indices()) left = left * ops.eta(a).mat;
        mat += left * term;
    }
    GradedOperator out{std::move(mat), std::nullopt, std::nullopt};
    if (f.has_uniform_parity()) out.parity = f.is_zero() ? 0 : f.parity();
    if (f.is_homogeneous() && !f.is_zero()) {
        const auto& key = f.terms().begin()->first;
        out.ghost_shift = key.eta.size() - key.mom.size();
    } else if (f.is_zero()) {
        out.ghost_shift = 0;
    }
    return out;
}

GradedOperator adjoint(const GradedOperator& op, const FockSpace& space, double tol) {
    const Matrix& pairing = space.pairing_matrix();
    if (op.mat.rows() != pairing.rows() || op.mat.cols() != pairing.cols()) {
        throw std::invalid_argument("adjoint: operator dimension mismatch");
    }
    // (A psi, phi) = (psi, B phi) for all basis pairs reads A^H T = T B.
    Matrix rhs = op.mat.adjoint() * pairing;
    Matrix b = pairing.partialPivLu().solve(rhs);
    const double residual = max_abs(rhs - pairing * b);
    if (residual > tol * static_cast<double>(pairing.rows())) {
        throw theorem_violation("adjoint residual above tolerance", residual);
    }
    GradedOperator out{std::move(b), op.parity, std::nullopt};
    if (op.ghost_shift.has_value()) out.ghost_shift = -*op.ghost_shift;
    return out;
}

GradedOperator adjoint_closed_form(const Observable& f, const GeneratorOps& ops) {
    const FockSpace& space = ops.space();
    if (f.ghost_count() != space.ghost_count()) {
        throw std::invalid_argument("adjoint_closed_form: ghost count mismatch");
    }
    const int n = space.total_dim();
    Matrix mat = Matrix::Zero(n, n);
    for (const auto& [key, coeff] : f.terms()) {
        const int r = key.eta.size();
        const int s = key.mom.size();
        const double sign = (((s + r / 2 + s / 2) & 1) ? -1.0 : 1.0);
        // V-level adjoint of the evaluated coefficient: S^{-1} W^H S.
        const Matrix w = ops.eval_coefficient(coeff);
        const Matrix w_adj = space.metric().partialPivLu().solve(
            Matrix(w.adjoint()) * space.metric());
        Matrix term = ops.lift(w_adj).mat;
        for (int a : key.eta.indices()) term = term * ops.eta(a).mat;
        Matrix left = Matrix::Identity(n, n);
        for (int b : key.mom.indices()) left = left * ops.mom(b).mat;
        mat += sign * (left * term);
    }
    return GradedOperator{std::move(mat), std::nullopt, std::nullopt};
}

GradedOperator ghost_number_op(const FockSpace& space) {
    const int n = space.total_dim();
    Matrix mat = Matrix::Zero(n, n);
    for (int a = 1; a <= space.ghost_count(); ++a) {
        const Matrix e = make_eta_op(space, a).mat;
        const Matrix p = make_mom_op(space, a).mat;
        mat += (kI / 2.0) * (e * p - p * e);
    }
    return GradedOperator{std::move(mat), 0, 0};
}

GradedOperator graded_commutator(const GradedOperator& a, const GradedOperator& b) {
    if (!a.parity.has_value() || !b.parity.has_value()) {
        throw std::invalid_argument("graded_commutator: operands must be parity-homogeneous");
    }
    const double sign = ((*a.parity & *b.parity) ? -1.0 : 1.0);
    GradedOperator out;
    out.mat = a.mat * b.mat - sign * (b.mat * a.mat);
    out.parity = (*a.parity + *b.parity) & 1;
    if (a.ghost_shift.has_value() && b.ghost_shift.has_value()) {
        out.ghost_shift = *a.ghost_shift + *b.ghost_shift;
    }
    return out;
}

}  // namespace brst

#include "brst/brst_operator.hpp"

#include <algorithm>

#include "brst/errors.hpp"

namespace brst {

QuantumBrst quantum_brst(const BRSTCharge& charge, const GeneratorOps& ops, double tol) {
    const FockSpace& space = ops.space();
    if (charge.ghost_count() != space.ghost_count()) {
        throw std::invalid_argument("quantum_brst: ghost count mismatch");
    }

    QuantumBrst out;
    out.op = GradedOperator{Matrix::Zero(space.total_dim(), space.total_dim()), 1, 1};
    for (const Observable& piece : charge.pieces) {
        out.op.mat += quantize(piece, ops).mat;
    }

    out.cert.block_residual = block_structure_residual(out.op, space);

    const Matrix square = out.op.mat * out.op.mat;
    out.cert.nilpotency_residual = max_abs(square);
    for (int s = 0; s + 2 <= space.ghost_count(); ++s) {
        const auto block = square.block(space.sector_offset(s + 2), space.sector_offset(s),
                                        space.sector_dim(s + 2), space.sector_dim(s));
        if (max_abs(block) == out.cert.nilpotency_residual) {
            out.cert.worst_sector = s;
            break;
        }
    }

    const GradedOperator dagger = adjoint(out.op, space);
    out.cert.self_adjoint_residual = max_abs(out.op.mat - dagger.mat);

    if (out.cert.nilpotency_residual > tol * space.total_dim()) {
        throw theorem_violation(
            "quantum charge fails nilpotency (residual " +
                std::to_string(out.cert.nilpotency_residual) + ", worst source sector " +
                std::to_string(out.cert.worst_sector) + ")",
            out.cert.nilpotency_residual);
    }
    return out;
}

CochainComplex ghost_complex(const GradedOperator& omega, const FockSpace& space) {
    CochainComplex complex;
    const int m = space.ghost_count();
    for (int s = 0; s <= m; ++s) {
        complex.dims.push_back(space.sector_dim(s));
        // Ghost number of the s-sector is s - m/2; keep halves readable.
        const int num = 2 * s - m;
        std::string label = (num % 2 == 0) ? std::to_string(num / 2)
                                           : std::to_string(num) + "/2";
        complex.labels.push_back(label);
    }
    for (int s = 0; s < m; ++s) {
        complex.differentials.push_back(
            omega.mat.block(space.sector_offset(s + 1), space.sector_offset(s),
                            space.sector_dim(s + 1), space.sector_dim(s)));
    }
    return complex;
}

}  // namespace brst

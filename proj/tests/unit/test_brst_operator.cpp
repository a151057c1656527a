#include <random>

#include "brst/brst_operator.hpp"
#include "brst/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace brst;

namespace {

// Minus the adjoint-representation generators, padded with a trivial line:
// exact entries, commutators close on the su(2) constants.
std::vector<Matrix> su2_spin1_trivial() {
    std::vector<Matrix> mats(3, Matrix::Zero(4, 4));
    const auto c = StructureConstants::su2();
    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 3; ++b) {
            for (int k = 1; k <= 3; ++k) {
                // (L_a)_{bk} = -i eps_{abk}; store minus it.
                mats[static_cast<std::size_t>(a - 1)](b - 1, k - 1) =
                    cplx(0.0, 1.0) * c.get(a, b, k);
            }
        }
    }
    return mats;
}

}  // namespace

TEST_CASE("abelian diagonal charge squares to zero exactly") {
    const int m = 2;
    StructureConstants abelian(m);
    std::vector<Matrix> mats;
    Vector d1(2), d2(2);
    d1 << cplx(1.0), cplx(0.0);
    d2 << cplx(0.0), cplx(2.0);
    mats.push_back(d1.asDiagonal());
    mats.push_back(d2.asDiagonal());
    GeneratorOps ops(FockSpace(m, 2), mats, abelian);

    const BRSTCharge charge = build_brst(abelian);
    const QuantumBrst quantum = quantum_brst(charge, ops);
    CHECK(quantum.cert.nilpotency_residual == 0.0);
    CHECK(quantum.cert.self_adjoint_residual < 1e-12);

    // The operator is the sum of ghost-times-constraint terms.
    Matrix expected = Matrix::Zero(ops.space().total_dim(), ops.space().total_dim());
    for (int a = 1; a <= m; ++a) expected += ops.eta(a).mat * ops.constraint(a).mat;
    CHECK(max_abs(quantum.op.mat - expected) == 0.0);
}

TEST_CASE("su(2) spin-1 plus trivial charge operator") {
    const auto c = StructureConstants::su2();
    GeneratorOps ops(FockSpace(3, 4), su2_spin1_trivial(), c);
    const BRSTCharge charge = build_brst(c);
    const QuantumBrst quantum = quantum_brst(charge, ops);

    CHECK(ops.space().total_dim() == 32);
    CHECK(quantum.cert.nilpotency_residual < 1e-12);
    CHECK(quantum.cert.self_adjoint_residual < 1e-10);
    CHECK(quantum.cert.block_residual == 0.0);

    // Ghost-degree one homogeneity through the grading operator.
    const GradedOperator g = ghost_number_op(ops.space());
    CHECK(max_abs(graded_commutator(g, quantum.op).mat - quantum.op.mat) < 1e-12);

    // On ghost-free states the operator acts by eta^a G_a; it annihilates
    // exactly the joint kernel, here the trivial summand.
    const FockSpace& space = ops.space();
    const Matrix bottom =
        quantum.op.mat.block(space.sector_offset(1), space.sector_offset(0),
                             space.sector_dim(1), space.sector_dim(0));
    for (int k = 0; k < 4; ++k) {
        Vector e = Vector::Zero(4);
        e(k) = cplx(1.0);
        Vector expected = Vector::Zero(space.sector_dim(1));
        for (int a = 1; a <= 3; ++a) {
            const Vector ga = ops.constraint_mats()[static_cast<std::size_t>(a - 1)] * e;
            // eta^a embeds V into the a-th slot of the one-ghost sector.
            const MultiIndex idx = normalize(std::vector<int>{a}, 3).first;
            expected.segment(space.index_of(idx, 0) - space.sector_offset(1), 4) += ga;
        }
        CHECK(max_abs(bottom.col(k) - expected) < 1e-14);
    }
    // The trivial summand is the only ghost-free state it kills.
    CHECK(kernel_basis(bottom).cols() == 1);
    Vector trivial = Vector::Zero(4);
    trivial(3) = cplx(1.0);
    CHECK(max_abs(bottom * trivial) == 0.0);
}

TEST_CASE("nilpotency failure is surfaced with residual and sector") {
    // Hand-built non-closing "charge": eta^1 G_1 with a constraint matrix
    // pair that does not commute, against abelian constants the bracket
    // check cannot see. Sector information must be carried in the error.
    const int m = 2;
    StructureConstants abelian(m);
    std::vector<Matrix> mats(2, Matrix::Zero(2, 2));
    mats[0] << cplx(0.0), cplx(1.0), cplx(1.0), cplx(0.0);
    mats[1] << cplx(1.0), cplx(0.0), cplx(0.0), cplx(-1.0);
    // The representation check rejects this pair, as it should.
    CHECK_THROWS_AS(GeneratorOps(FockSpace(m, 2), mats, abelian), config_error);
}

TEST_CASE("ghost complex extraction") {
    const auto c = StructureConstants::su2();
    GeneratorOps ops(FockSpace(3, 4), su2_spin1_trivial(), c);
    const QuantumBrst quantum = quantum_brst(build_brst(c), ops);
    const CochainComplex complex = ghost_complex(quantum.op, ops.space());

    CHECK(complex.dims == std::vector<int>{4, 12, 12, 4});
    CHECK(complex.labels == std::vector<std::string>{"-3/2", "-1/2", "1/2", "3/2"});
    complex.validate(1e-12);

    // Blocks reassemble the operator.
    Matrix rebuilt = Matrix::Zero(32, 32);
    for (int s = 0; s < 3; ++s) {
        rebuilt.block(ops.space().sector_offset(s + 1), ops.space().sector_offset(s),
                      ops.space().sector_dim(s + 1), ops.space().sector_dim(s)) =
            complex.differentials[static_cast<std::size_t>(s)];
    }
    CHECK(max_abs(rebuilt - quantum.op.mat) == 0.0);
}

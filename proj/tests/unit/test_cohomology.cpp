#include <random>

#include "brst/brst_operator.hpp"
#include "brst/errors.hpp"
#include "brst/extended_complex.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace brst;

namespace {

std::vector<Matrix> su2_spin1_trivial() {
    std::vector<Matrix> mats(3, Matrix::Zero(4, 4));
    const auto c = StructureConstants::su2();
    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 3; ++b) {
            for (int k = 1; k <= 3; ++k) {
                mats[static_cast<std::size_t>(a - 1)](b - 1, k - 1) =
                    cplx(0.0, 1.0) * c.get(a, b, k);
            }
        }
    }
    return mats;
}

std::vector<Matrix> su2_spin1_only() {
    auto padded = su2_spin1_trivial();
    std::vector<Matrix> mats;
    for (const Matrix& g : padded) mats.push_back(g.block(0, 0, 3, 3));
    return mats;
}

GeneratorOps abelian_m1_ops() {
    Matrix g = Matrix::Zero(2, 2);
    g(0, 0) = cplx(1.0);
    return GeneratorOps(FockSpace(1, 2), {g}, StructureConstants(1));
}

Matrix random_unitary(std::mt19937& rng, int d) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix a(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) a(i, j) = cplx(u(rng), u(rng));
    }
    return Eigen::HouseholderQR<Matrix>(a).householderQ();
}

}  // namespace

TEST_CASE("zero differential complex has full cohomology") {
    CochainComplex complex;
    complex.dims = {3, 5, 2};
    complex.labels = {"0", "1", "2"};
    complex.differentials = {Matrix::Zero(5, 3), Matrix::Zero(2, 5)};
    const auto report = cohomology(complex);
    CHECK(report.homology_dims() == std::vector<int>{3, 5, 2});
}

TEST_CASE("invalid complexes are rejected") {
    CochainComplex complex;
    complex.dims = {2, 2, 2};
    complex.differentials = {Matrix::Identity(2, 2), Matrix::Identity(2, 2)};
    CHECK_THROWS_AS(cohomology(complex), theorem_violation);
}

TEST_CASE("triangle boundary: rank of the coboundary is two") {
    const CochainComplex complex = sphere_complex(1);
    CHECK(complex.dims == std::vector<int>{3, 3});
    // Row-reduction reference pins the rank.
    CHECK(oracle::row_reduction_rank(complex.differentials[0]) == 2);
    const auto report = cohomology(complex);
    CHECK(report.homology_dims() == std::vector<int>{1, 1});
}

TEST_CASE("sphere cochain models for m up to four") {
    for (int m = 1; m <= 4; ++m) {
        const CochainComplex complex = sphere_complex(m);
        REQUIRE(complex.sector_count() == m + 1);
        for (int k = 0; k <= m; ++k) {
            // C(m+2, k+1) faces of each dimension.
            int binom = 1;
            for (int i = 0; i < k + 1; ++i) binom = binom * (m + 2 - i) / (i + 1);
            CHECK(complex.dims[static_cast<std::size_t>(k)] == binom);
        }
        const auto report = cohomology(complex);
        std::vector<int> expected(static_cast<std::size_t>(m + 1), 0);
        expected.front() = 1;
        expected.back() = 1;
        CHECK(report.homology_dims() == expected);

        // SVD ranks against the row-reduction reference.
        for (const Matrix& d : complex.differentials) {
            CHECK(numerical_rank(d) == oracle::row_reduction_rank(d));
        }

        // Euler characteristic of a sphere.
        int chi = 0;
        for (int k = 0; k <= m; ++k) {
            chi += (k % 2 == 0 ? 1 : -1) * report.degrees[static_cast<std::size_t>(k)].homology_dim;
        }
        CHECK(chi == 1 + ((m % 2 == 0) ? 1 : -1));
    }
    CHECK(sphere_complex(2).dims == std::vector<int>{4, 6, 4});
}

TEST_CASE("abelian example: one-dimensional cohomology at both ends") {
    GeneratorOps ops = abelian_m1_ops();
    StructureConstants abelian(1);
    const QuantumBrst quantum = quantum_brst(build_brst(abelian), ops);
    const CochainComplex complex = ghost_complex(quantum.op, ops.space());
    const auto report = cohomology(complex);
    // Kernel of diag(1,0) is one-dimensional; the image in the top sector
    // is one-dimensional as well.
    CHECK(report.homology_dims() == std::vector<int>{1, 1});

    const DualityReport duality = duality_check(quantum.op, ops.space());
    CHECK(duality.kernel_dim == 1);
    CHECK(duality.cokernel_dim == 1);
    CHECK(duality.lambda_rank == 1);
    CHECK(duality.pass);
}

TEST_CASE("duality for the su(2) representations") {
    const auto c = StructureConstants::su2();

    // Spin-1 plus trivial: both end dimensions equal the trivial summand.
    {
        GeneratorOps ops(FockSpace(3, 4), su2_spin1_trivial(), c);
        const QuantumBrst quantum = quantum_brst(build_brst(c), ops);
        const DualityReport duality = duality_check(quantum.op, ops.space());
        CHECK(duality.kernel_dim == 1);
        CHECK(duality.cokernel_dim == 1);
        CHECK(duality.lambda_rank == 1);
        CHECK(duality.pass);
        CHECK(joint_kernel_dim(su2_spin1_trivial()) == 1);
    }

    // Spin-1 alone: no joint kernel, empty duality holds trivially.
    {
        GeneratorOps ops(FockSpace(3, 3), su2_spin1_only(), c);
        const QuantumBrst quantum = quantum_brst(build_brst(c), ops);
        const DualityReport duality = duality_check(quantum.op, ops.space());
        CHECK(duality.kernel_dim == 0);
        CHECK(duality.cokernel_dim == 0);
        CHECK(duality.lambda_rank == 0);
        CHECK(duality.pass);
        CHECK(joint_kernel_dim(su2_spin1_only()) == 0);
    }
}

TEST_CASE("extended complex composes to zero and grades correctly") {
    GeneratorOps ops = abelian_m1_ops();
    StructureConstants abelian(1);
    const QuantumBrst quantum = quantum_brst(build_brst(abelian), ops);
    const CochainComplex charge_complex = ghost_complex(quantum.op, ops.space());
    const CochainComplex sphere = sphere_complex(1);
    const ExtendedComplex ext = extended_complex(charge_complex, sphere);

    ext.total.validate(1e-12);
    // Ghost numbers -1, 0, +1 with the middle sector holding both branches.
    CHECK(ext.total.dims == std::vector<int>{6, 12, 6});
    CHECK(ext.total.labels == std::vector<std::string>{"-1", "0", "1"});

    const ExtendedZeroReport zero =
        extended_zero_check(ext, charge_complex, sphere, ops);
    CHECK(zero.h0_dim == 2);
    CHECK(zero.bottom_dim == 1);
    CHECK(zero.top_dim == 1);
    CHECK(zero.sum_matches);
    CHECK(zero.reps_span);
    CHECK(zero.pass);
}

TEST_CASE("extended ghost-zero cohomology counts two copies for su(2) plus trivial") {
    const auto c = StructureConstants::su2();
    GeneratorOps ops(FockSpace(3, 4), su2_spin1_trivial(), c);
    const QuantumBrst quantum = quantum_brst(build_brst(c), ops);
    const CochainComplex charge_complex = ghost_complex(quantum.op, ops.space());
    const CochainComplex sphere = sphere_complex(3);
    const ExtendedComplex ext = extended_complex(charge_complex, sphere);
    ext.total.validate(1e-12);

    const ExtendedZeroReport zero =
        extended_zero_check(ext, charge_complex, sphere, ops);
    CHECK(zero.h0_dim == 2);
    CHECK(zero.h0_dim == zero.bottom_dim + zero.top_dim);
    CHECK(zero.branch_d_residual < 1e-12);
    CHECK(zero.branch_eta_residual < 1e-12);
    CHECK(zero.pass);
}

TEST_CASE("cohomology dimensions are unitary invariants") {
    std::mt19937 rng(113);
    const auto c = StructureConstants::su2();
    const auto mats = su2_spin1_trivial();
    std::vector<int> baseline;
    {
        GeneratorOps ops(FockSpace(3, 4), mats, c);
        const QuantumBrst quantum = quantum_brst(build_brst(c), ops);
        baseline = cohomology(ghost_complex(quantum.op, ops.space())).homology_dims();
    }
    for (int trial = 0; trial < 3; ++trial) {
        const Matrix u = random_unitary(rng, 4);
        std::vector<Matrix> rotated;
        for (const Matrix& g : mats) rotated.push_back(u.adjoint() * g * u);
        GeneratorOps ops(FockSpace(3, 4), rotated, c);
        const QuantumBrst quantum = quantum_brst(build_brst(c), ops);
        CHECK(cohomology(ghost_complex(quantum.op, ops.space())).homology_dims() ==
              baseline);
    }
}

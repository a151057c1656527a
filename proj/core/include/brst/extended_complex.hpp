#pragma once

#include <vector>

#include "brst/cochain_complex.hpp"
#include "brst/quantize.hpp"

namespace brst {

/// Duality data between the bottom and top ghost sectors: kernel of the
/// charge on ghost-free states, cokernel on the top sector, and the rank of
/// the map induced by the V inner product between kernel representatives
/// and the orthogonal complement of the projected image.
struct DualityReport {
    int kernel_dim = 0;
    int cokernel_dim = 0;
    int lambda_rank = 0;
    double smallest_kept_sv = 0.0;
    bool pass = false;
};

DualityReport duality_check(const GradedOperator& omega, const FockSpace& space,
                            double tol_rel = 1e-9);

/// Dimension of the joint kernel of the constraint matrices on V.
int joint_kernel_dim(const std::vector<Matrix>& g_mats, double tol_rel = 1e-9);

/// Graded tensor product of the charge complex with a second complex, with
/// the Koszul sign (-1)^p on the second differential. Sectors are labeled by
/// total ghost number p + q - m, so ghost zero is p + q = m.
struct ExtendedComplex {
    CochainComplex total;
    int ghost_count = 0;       // m of the charge factor
    int second_sectors = 0;    // sector count of the second factor
    std::vector<int> left_dims, right_dims;

    /// Sector index of total ghost number g (g in -m .. second_sectors-1).
    int sector_of(int g) const { return g + ghost_count; }

    /// Offset of the (p, q) block inside its total sector; the block stores
    /// x (x) y with the left factor index major.
    int block_offset(int p, int q) const;
    int block_dim(int p, int q) const;
};

ExtendedComplex extended_complex(const CochainComplex& charge_complex,
                                 const CochainComplex& second);

/// Ghost-zero analysis of the extended complex. Structured representatives
/// are built per branch: bottom-kernel states tensor the top cocycle of the
/// second factor, and top-sector cokernel states tensor the constant
/// cocycle; each is verified closed and jointly independent modulo the
/// image. The top-branch representatives are checked to be annihilated by
/// 1 (x) d and by eta^b (x) 1.
struct ExtendedZeroReport {
    int h0_dim = 0;
    int bottom_dim = 0;  // charge cohomology at the lowest ghost number
    int top_dim = 0;     // charge cohomology at the highest ghost number
    bool sum_matches = false;
    double rep_closed_residual = 0.0;
    bool reps_span = false;
    double branch_d_residual = 0.0;
    double branch_eta_residual = 0.0;
    bool pass = false;
};

ExtendedZeroReport extended_zero_check(const ExtendedComplex& ext,
                                       const CochainComplex& charge_complex,
                                       const CochainComplex& second,
                                       const GeneratorOps& ops,
                                       double tol_rel = 1e-9);

}  // namespace brst

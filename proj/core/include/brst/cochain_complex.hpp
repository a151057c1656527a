#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "brst/fock_space.hpp"

namespace brst {

/// Finite sequence of sectors with differentials d_k: sector k -> sector
/// k+1 and d_{k+1} d_k = 0. labels annotate sectors with ghost numbers or
/// form degrees.
struct CochainComplex {
    std::vector<int> dims;
    std::vector<Matrix> differentials;  // differentials[k]: dims[k+1] x dims[k]
    std::vector<std::string> labels;

    int sector_count() const { return static_cast<int>(dims.size()); }

    /// Max entry of d_{k+1} d_k over k.
    double composition_residual() const;

    /// Throws theorem_violation when the composition residual exceeds
    /// tol * largest dimension.
    void validate(double tol = 1e-9) const;
};

/// Per-sector cohomology data. Representatives are orthonormal and
/// orthogonal to the incoming image.
struct DegreeReport {
    std::string label;
    int dim = 0;
    int kernel_dim = 0;
    int image_dim = 0;     // rank of the incoming differential
    int homology_dim = 0;  // kernel_dim - image_dim
    Matrix representatives;
};

struct CohomologyReport {
    std::vector<DegreeReport> degrees;
    double d2_residual = 0.0;
    double tol_rel = 0.0;  // relative singular value cutoff used

    std::vector<int> homology_dims() const;
};

/// Kernel/image dimensions per sector by numerical rank: singular values
/// below tol_rel * max(largest singular value, 1) count as zero.
CohomologyReport cohomology(const CochainComplex& complex, double tol_rel = 1e-9);

/// Simplicial cochain complex (complex coefficients) of the boundary of the
/// standard (m+1)-simplex: sector dimensions C(m+2, k+1) for k = 0..m, with
/// cohomology concentrated in degrees 0 and m.
CochainComplex sphere_complex(int m);

/// Numerical rank with the same cutoff convention as cohomology().
int numerical_rank(const Matrix& mat, double tol_rel = 1e-9);

/// Orthonormal basis of the kernel (columns); empty matrix for full rank.
Matrix kernel_basis(const Matrix& mat, double tol_rel = 1e-9);

/// Orthonormal basis of the column space.
Matrix image_basis(const Matrix& mat, double tol_rel = 1e-9);

}  // namespace brst

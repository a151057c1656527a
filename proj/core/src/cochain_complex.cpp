#include "brst/cochain_complex.hpp"

#include <algorithm>
#include <stdexcept>

#include <Eigen/SVD>

#include "brst/errors.hpp"

namespace brst {

namespace {

double rank_cutoff(const Eigen::JacobiSVD<Matrix>& svd, double tol_rel) {
    const double largest =
        svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
    return tol_rel * std::max(largest, 1.0);
}

}  // namespace

double CochainComplex::composition_residual() const {
    double out = 0.0;
    for (std::size_t k = 0; k + 1 < differentials.size(); ++k) {
        const Matrix comp = differentials[k + 1] * differentials[k];
        if (comp.size() > 0) out = std::max(out, comp.cwiseAbs().maxCoeff());
    }
    return out;
}

void CochainComplex::validate(double tol) const {
    if (differentials.size() + 1 != dims.size()) {
        throw std::invalid_argument("cochain complex: differential count mismatch");
    }
    for (std::size_t k = 0; k < differentials.size(); ++k) {
        if (differentials[k].rows() != dims[k + 1] || differentials[k].cols() != dims[k]) {
            throw std::invalid_argument("cochain complex: differential shape mismatch");
        }
    }
    int largest = 1;
    for (int d : dims) largest = std::max(largest, d);
    const double residual = composition_residual();
    if (residual > tol * largest) {
        throw theorem_violation("differential does not square to zero", residual);
    }
}

int numerical_rank(const Matrix& mat, double tol_rel) {
    if (mat.size() == 0) return 0;
    Eigen::JacobiSVD<Matrix> svd(mat);
    const double cutoff = rank_cutoff(svd, tol_rel);
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i) {
        if (svd.singularValues()(i) > cutoff) ++rank;
    }
    return rank;
}

Matrix kernel_basis(const Matrix& mat, double tol_rel) {
    if (mat.size() == 0) return Matrix();
    Eigen::JacobiSVD<Matrix> svd(mat, Eigen::ComputeFullV);
    const double cutoff = rank_cutoff(svd, tol_rel);
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i) {
        if (svd.singularValues()(i) > cutoff) ++rank;
    }
    return svd.matrixV().rightCols(mat.cols() - rank);
}

Matrix image_basis(const Matrix& mat, double tol_rel) {
    if (mat.size() == 0) return Matrix();
    Eigen::JacobiSVD<Matrix> svd(mat, Eigen::ComputeThinU);
    const double cutoff = rank_cutoff(svd, tol_rel);
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i) {
        if (svd.singularValues()(i) > cutoff) ++rank;
    }
    return svd.matrixU().leftCols(rank);
}

std::vector<int> CohomologyReport::homology_dims() const {
    std::vector<int> out;
    out.reserve(degrees.size());
    for (const DegreeReport& d : degrees) out.push_back(d.homology_dim);
    return out;
}

CohomologyReport cohomology(const CochainComplex& complex, double tol_rel) {
    complex.validate(tol_rel);
    CohomologyReport report;
    report.tol_rel = tol_rel;
    report.d2_residual = complex.composition_residual();

    const int n = complex.sector_count();
    for (int k = 0; k < n; ++k) {
        DegreeReport deg;
        deg.label = k < static_cast<int>(complex.labels.size()) ? complex.labels[k] : "";
        deg.dim = complex.dims[static_cast<std::size_t>(k)];

        Matrix ker;
        if (k < n - 1) {
            const Matrix& d_out = complex.differentials[static_cast<std::size_t>(k)];
            deg.kernel_dim = deg.dim - numerical_rank(d_out, tol_rel);
            ker = kernel_basis(d_out, tol_rel);
        } else {
            deg.kernel_dim = deg.dim;
            ker = Matrix::Identity(deg.dim, deg.dim);
        }

        Matrix img;
        if (k > 0) {
            const Matrix& d_in = complex.differentials[static_cast<std::size_t>(k - 1)];
            img = image_basis(d_in, tol_rel);
            deg.image_dim = static_cast<int>(img.cols());
        }
        deg.homology_dim = deg.kernel_dim - deg.image_dim;
        if (deg.homology_dim < 0) {
            throw theorem_violation("negative homology dimension: ranks inconsistent",
                                    static_cast<double>(deg.homology_dim));
        }

        // Representatives: kernel vectors with their image components
        // projected out, re-orthonormalized.
        if (deg.homology_dim > 0 && ker.size() > 0) {
            Matrix reduced = ker;
            if (img.size() > 0) reduced -= img * (img.adjoint() * ker);
            deg.representatives = image_basis(reduced, tol_rel);
        }
        report.degrees.push_back(std::move(deg));
    }
    return report;
}

}  // namespace brst

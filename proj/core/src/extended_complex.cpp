#include "brst/extended_complex.hpp"

#include <stdexcept>

#include "brst/errors.hpp"

namespace brst {

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

}  // namespace

DualityReport duality_check(const GradedOperator& omega, const FockSpace& space,
                            double tol_rel) {
    const int m = space.ghost_count();
    const int d = space.dim_v();
    DualityReport report;

    const Matrix bottom = omega.mat.block(space.sector_offset(1), space.sector_offset(0),
                                          space.sector_dim(1), space.sector_dim(0));
    const Matrix kernel = kernel_basis(bottom, tol_rel);
    report.kernel_dim = static_cast<int>(kernel.cols());

    const Matrix into_top =
        omega.mat.block(space.sector_offset(m), space.sector_offset(m - 1),
                        space.sector_dim(m), space.sector_dim(m - 1));
    // The top sector is a copy of V, so image_basis lands in V coordinates.
    const Matrix image = image_basis(into_top, tol_rel);
    report.cokernel_dim = d - static_cast<int>(image.cols());

    // Basis of the metric-orthogonal complement of the projected image.
    Matrix complement;
    if (image.cols() > 0) {
        complement = kernel_basis(Matrix(image.adjoint() * space.metric()), tol_rel);
    } else {
        complement = Matrix::Identity(d, d);
    }

    // lambda(psi0)(phi) = <psi0|phi> between kernel representatives and the
    // complement basis.
    const Matrix lambda = kernel.adjoint() * space.metric() * complement;
    report.lambda_rank = numerical_rank(lambda, tol_rel);
    if (lambda.size() > 0) {
        Eigen::JacobiSVD<Matrix> svd(lambda);
        if (report.lambda_rank > 0) {
            report.smallest_kept_sv = svd.singularValues()(report.lambda_rank - 1);
        }
    }
    report.pass = (report.kernel_dim == report.cokernel_dim) &&
                  (report.lambda_rank == report.kernel_dim);
    return report;
}

int joint_kernel_dim(const std::vector<Matrix>& g_mats, double tol_rel) {
    if (g_mats.empty()) return 0;
    const int d = static_cast<int>(g_mats.front().rows());
    Matrix stacked(static_cast<int>(g_mats.size()) * d, d);
    for (std::size_t a = 0; a < g_mats.size(); ++a) {
        stacked.block(static_cast<int>(a) * d, 0, d, d) = g_mats[a];
    }
    return d - numerical_rank(stacked, tol_rel);
}

int ExtendedComplex::block_dim(int p, int q) const {
    return left_dims[static_cast<std::size_t>(p)] * right_dims[static_cast<std::size_t>(q)];
}

int ExtendedComplex::block_offset(int p, int q) const {
    const int g = p + q - ghost_count;
    int offset = 0;
    for (int pp = 0; pp < p; ++pp) {
        const int qq = g + ghost_count - pp;
        if (qq >= 0 && qq < second_sectors) offset += block_dim(pp, qq);
    }
    return offset;
}

ExtendedComplex extended_complex(const CochainComplex& charge_complex,
                                 const CochainComplex& second) {
    ExtendedComplex ext;
    ext.ghost_count = charge_complex.sector_count() - 1;
    ext.second_sectors = second.sector_count();
    ext.left_dims = charge_complex.dims;
    ext.right_dims = second.dims;

    const int m = ext.ghost_count;
    const int g_min = -m;
    const int g_max = ext.second_sectors - 1;

    for (int g = g_min; g <= g_max; ++g) {
        int dim = 0;
        for (int p = 0; p <= m; ++p) {
            const int q = g + m - p;
            if (q >= 0 && q < ext.second_sectors) dim += ext.block_dim(p, q);
        }
        ext.total.dims.push_back(dim);
        ext.total.labels.push_back(std::to_string(g));
    }

    for (int g = g_min; g < g_max; ++g) {
        Matrix d = Matrix::Zero(ext.total.dims[static_cast<std::size_t>(g + m + 1)],
                                ext.total.dims[static_cast<std::size_t>(g + m)]);
        for (int p = 0; p <= m; ++p) {
            const int q = g + m - p;
            if (q < 0 || q >= ext.second_sectors) continue;
            const int src = ext.block_offset(p, q);
            const int bp = ext.left_dims[static_cast<std::size_t>(p)];
            const int cq = ext.right_dims[static_cast<std::size_t>(q)];
            if (p + 1 <= m) {
                d.block(ext.block_offset(p + 1, q), src, ext.block_dim(p + 1, q),
                        ext.block_dim(p, q)) +=
                    kron(charge_complex.differentials[static_cast<std::size_t>(p)],
                         Matrix::Identity(cq, cq));
            }
            if (q + 1 < ext.second_sectors) {
                const double sign = (p & 1) ? -1.0 : 1.0;
                d.block(ext.block_offset(p, q + 1), src, ext.block_dim(p, q + 1),
                        ext.block_dim(p, q)) +=
                    sign * kron(Matrix::Identity(bp, bp),
                                second.differentials[static_cast<std::size_t>(q)]);
            }
        }
        ext.total.differentials.push_back(std::move(d));
    }
    return ext;
}

ExtendedZeroReport extended_zero_check(const ExtendedComplex& ext,
                                       const CochainComplex& charge_complex,
                                       const CochainComplex& second,
                                       const GeneratorOps& ops, double tol_rel) {
    const FockSpace& space = ops.space();
    const int m = ext.ghost_count;
    ExtendedZeroReport report;

    const CohomologyReport total_cohomology = cohomology(ext.total, tol_rel);
    report.h0_dim =
        total_cohomology.degrees[static_cast<std::size_t>(m)].homology_dim;

    const CohomologyReport charge_cohomology = cohomology(charge_complex, tol_rel);
    report.bottom_dim = charge_cohomology.degrees.front().homology_dim;
    report.top_dim = charge_cohomology.degrees.back().homology_dim;
    report.sum_matches = (report.h0_dim == report.bottom_dim + report.top_dim);

    const CohomologyReport second_cohomology = cohomology(second, tol_rel);
    const Matrix& second_top = second_cohomology.degrees.back().representatives;

    // Structured ghost-zero representatives, one family per branch.
    const int zero_sector = ext.sector_of(0);
    const int zero_dim = ext.total.dims[static_cast<std::size_t>(zero_sector)];
    std::vector<Vector> reps;

    const Matrix& bottom_reps = charge_cohomology.degrees.front().representatives;
    for (int j = 0; j < bottom_reps.cols(); ++j) {
        for (int t = 0; t < second_top.cols(); ++t) {
            Vector w = Vector::Zero(zero_dim);
            const int off = ext.block_offset(0, ext.second_sectors - 1);
            w.segment(off, ext.block_dim(0, ext.second_sectors - 1)) =
                kron(bottom_reps.col(j), second_top.col(t));
            reps.push_back(std::move(w));
        }
    }

    // Constant cocycle of the second factor; closed because every edge sees
    // equal values at its endpoints.
    const int c0 = ext.right_dims.front();
    Vector constant = Vector::Ones(c0) / std::sqrt(static_cast<double>(c0));
    const Matrix& top_reps = charge_cohomology.degrees.back().representatives;
    std::vector<Vector> branch_states;  // top-branch components, V coordinates
    for (int j = 0; j < top_reps.cols(); ++j) {
        Vector w = Vector::Zero(zero_dim);
        const int off = ext.block_offset(m, 0);
        w.segment(off, ext.block_dim(m, 0)) = kron(top_reps.col(j), constant);
        reps.push_back(std::move(w));
        branch_states.push_back(top_reps.col(j));
    }

    // Closedness of every structured representative.
    if (zero_sector < static_cast<int>(ext.total.differentials.size())) {
        const Matrix& d_out = ext.total.differentials[static_cast<std::size_t>(zero_sector)];
        for (const Vector& w : reps) {
            report.rep_closed_residual =
                std::max(report.rep_closed_residual, max_abs(d_out * w));
        }
    }

    // Joint independence modulo the image: the structured family spans the
    // ghost-zero cohomology.
    {
        const Matrix& d_in = ext.total.differentials[static_cast<std::size_t>(zero_sector - 1)];
        const Matrix image = image_basis(d_in, tol_rel);
        Matrix stacked(zero_dim, image.cols() + static_cast<int>(reps.size()));
        stacked.leftCols(image.cols()) = image;
        for (std::size_t j = 0; j < reps.size(); ++j) {
            stacked.col(image.cols() + static_cast<int>(j)) = reps[j];
        }
        const int combined_rank = numerical_rank(stacked, tol_rel);
        report.reps_span =
            (combined_rank ==
             static_cast<int>(image.cols()) + static_cast<int>(reps.size())) &&
            (static_cast<int>(reps.size()) == report.h0_dim);
    }

    // Branch checks on the top-branch states: 1 (x) d kills the constant
    // cocycle and eta^b (x) 1 kills the top ghost sector.
    const Matrix& d_second0 = second.differentials.front();
    for (const Vector& psi : branch_states) {
        const Vector branch = kron(psi, constant);
        const Vector dres = kron(Matrix::Identity(space.dim_v(), space.dim_v()),
                                 d_second0) *
                            branch;
        report.branch_d_residual = std::max(report.branch_d_residual, max_abs(dres));
        for (int b = 1; b <= m; ++b) {
            const Matrix eta_from_top =
                ops.eta(b).mat.block(0, space.sector_offset(m), space.total_dim(),
                                     space.sector_dim(m));
            report.branch_eta_residual =
                std::max(report.branch_eta_residual, max_abs(eta_from_top * psi));
        }
    }

    report.pass = report.sum_matches && report.reps_span &&
                  report.rep_closed_residual <= tol_rel * zero_dim &&
                  report.branch_d_residual <= tol_rel * zero_dim &&
                  report.branch_eta_residual <= tol_rel * zero_dim;
    return report;
}

}  // namespace brst

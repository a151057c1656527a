#pragma once

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <unordered_map>
#include <vector>

#include "brst/multi_index.hpp"

namespace brst {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Ghost-extended state space over a finite-dimensional complex
/// inner-product space V: basis vectors are (multi-index I, basis vector of
/// V), ordered by (|I|, lexicographic I, V index). The ordering is fixed
/// here once so every matrix representation downstream is reproducible.
class FockSpace {
public:
    /// metric: Hermitian positive-definite Gram matrix of the V inner
    /// product; identity when omitted.
    FockSpace(int ghost_count, int dim_v, Matrix metric = Matrix());

    int ghost_count() const { return m_; }
    int dim_v() const { return d_; }
    int total_dim() const { return static_cast<int>(sector_offsets_.back()); }
    int sector_count() const { return m_ + 1; }

    int sector_dim(int s) const;
    int sector_offset(int s) const;
    const std::vector<MultiIndex>& sector_indices(int s) const;

    /// Global basis index of (I, k), k in 0..dim_v-1.
    int index_of(const MultiIndex& idx, int k) const;

    const Matrix& metric() const { return metric_; }

    /// V-level inner product, antilinear in the first argument.
    cplx v_inner(const Vector& x, const Vector& y) const;

    /// Matrix of the top-coefficient scalar product on the full basis:
    /// entry (i,j) = (e_i, e_j). Nonsingular, block anti-diagonal in the
    /// ghost grading.
    const Matrix& pairing_matrix() const;

private:
    int m_ = 0;
    int d_ = 0;
    Matrix metric_;
    std::vector<std::vector<MultiIndex>> sectors_;
    std::vector<int> sector_offsets_;
    std::unordered_map<std::uint32_t, int> position_;  // bits -> sector position
    mutable Matrix pairing_;                           // built on first use
};

/// Element of the extended state space: finitely many ghost components,
/// each a vector in V; absent components are zero.
class ExtendedState {
public:
    ExtendedState() = default;
    ExtendedState(int ghost_count, int dim_v);

    int ghost_count() const { return m_; }
    int dim_v() const { return d_; }

    const std::map<MultiIndex, Vector>& components() const { return comps_; }
    Vector component(const MultiIndex& idx) const;  // zero vector when absent
    void set_component(const MultiIndex& idx, const Vector& value);

    Vector to_dense(const FockSpace& space) const;
    static ExtendedState from_dense(const FockSpace& space, const Vector& dense);

private:
    int m_ = 0;
    int d_ = 0;
    std::map<MultiIndex, Vector> comps_;
};

/// Degenerate scalar product: the top-ghost coefficient of the conjugated
/// pairing, sum over I of reversal_sign(I) * merge_sign(I, I^c) *
/// <psi_I | phi_{I^c}>. Antilinear in psi, linear in phi; vanishes unless
/// the ghost degrees pair to the ghost count.
cplx scalar_product(const FockSpace& space, const ExtendedState& psi,
                    const ExtendedState& phi);

/// Gram matrix of the scalar product between the standard bases of the
/// degree-p and degree-(m-p) sectors; square of size C(m,p)*dim_v and
/// nonsingular.
Matrix pairing_gram(const FockSpace& space, int p);

/// Top-coefficient extraction: defined on states supported in the top ghost
/// sector only; throws std::invalid_argument otherwise.
Vector zeta(const FockSpace& space, const ExtendedState& psi);

/// Injection of a V vector into the top ghost sector.
ExtendedState zeta_inv(const FockSpace& space, const Vector& value);

}  // namespace brst

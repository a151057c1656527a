#include "brst/fock_space.hpp"

#include <stdexcept>

#include "brst/errors.hpp"

namespace brst {

namespace {

// All size-k subsets of 1..m as multi-indices, in lexicographic sequence
// order ((1,2) < (1,3) < (2,3)).
std::vector<MultiIndex> combinations(int m, int k) {
    std::vector<MultiIndex> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(normalize(cur, m).first);
            return;
        }
        for (int i = next; i <= m - (k - static_cast<int>(cur.size())) + 1; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

}  // namespace

FockSpace::FockSpace(int ghost_count, int dim_v, Matrix metric)
    : m_(ghost_count), d_(dim_v), metric_(std::move(metric)) {
    if (ghost_count < 1 || ghost_count > MultiIndex::max_ghosts) {
        throw std::invalid_argument("ghost count out of range");
    }
    if (dim_v < 1) throw std::invalid_argument("dim_v must be positive");
    if (metric_.size() == 0) {
        metric_ = Matrix::Identity(d_, d_);
    }
    if (metric_.rows() != d_ || metric_.cols() != d_) {
        throw std::invalid_argument("metric dimension mismatch");
    }

    sector_offsets_.assign(1, 0);
    for (int s = 0; s <= m_; ++s) {
        sectors_.push_back(combinations(m_, s));
        int pos = 0;
        for (const MultiIndex& idx : sectors_.back()) {
            position_.emplace(idx.bits(), pos++);
        }
        sector_offsets_.push_back(sector_offsets_.back() +
                                  static_cast<int>(sectors_.back().size()) * d_);
    }
}

int FockSpace::sector_dim(int s) const {
    if (s < 0 || s > m_) throw std::invalid_argument("sector out of range");
    return static_cast<int>(sectors_[static_cast<std::size_t>(s)].size()) * d_;
}

int FockSpace::sector_offset(int s) const {
    if (s < 0 || s > m_) throw std::invalid_argument("sector out of range");
    return sector_offsets_[static_cast<std::size_t>(s)];
}

const std::vector<MultiIndex>& FockSpace::sector_indices(int s) const {
    if (s < 0 || s > m_) throw std::invalid_argument("sector out of range");
    return sectors_[static_cast<std::size_t>(s)];
}

int FockSpace::index_of(const MultiIndex& idx, int k) const {
    if (idx.ghost_count() != m_) throw std::invalid_argument("multi-index ghost count mismatch");
    if (k < 0 || k >= d_) throw std::invalid_argument("V index out of range");
    const int s = idx.size();
    const int pos = position_.at(idx.bits());
    return sector_offset(s) + pos * d_ + k;
}

cplx FockSpace::v_inner(const Vector& x, const Vector& y) const {
    if (x.size() != d_ || y.size() != d_) {
        throw std::invalid_argument("v_inner: vector dimension mismatch");
    }
    return (x.adjoint() * metric_ * y)(0, 0);
}

const Matrix& FockSpace::pairing_matrix() const {
    if (pairing_.size() != 0) return pairing_;
    pairing_ = Matrix::Zero(total_dim(), total_dim());
    for (int s = 0; s <= m_; ++s) {
        for (const MultiIndex& idx : sector_indices(s)) {
            const MultiIndex comp = idx.complement();
            const auto [merged, msign] = merge_sign(idx, comp);
            const double sign = reversal_sign(idx) * msign;
            for (int j = 0; j < d_; ++j) {
                for (int k = 0; k < d_; ++k) {
                    // (e_{I,j}, e_{I^c,k}) = rev(I) merge(I,I^c) <v_j|v_k>.
                    pairing_(index_of(idx, j), index_of(comp, k)) =
                        sign * metric_(j, k);
                }
            }
        }
    }
    return pairing_;
}

ExtendedState::ExtendedState(int ghost_count, int dim_v)
    : m_(ghost_count), d_(dim_v) {}

Vector ExtendedState::component(const MultiIndex& idx) const {
    auto it = comps_.find(idx);
    return it == comps_.end() ? Vector(Vector::Zero(d_)) : it->second;
}

void ExtendedState::set_component(const MultiIndex& idx, const Vector& value) {
    if (idx.ghost_count() != m_) throw std::invalid_argument("ghost count mismatch");
    if (value.size() != d_) throw std::invalid_argument("component dimension mismatch");
    if (value.isZero(0.0)) {
        comps_.erase(idx);
    } else {
        comps_[idx] = value;
    }
}

Vector ExtendedState::to_dense(const FockSpace& space) const {
    if (space.ghost_count() != m_ || space.dim_v() != d_) {
        throw std::invalid_argument("state does not live on this space");
    }
    Vector out = Vector::Zero(space.total_dim());
    for (const auto& [idx, v] : comps_) {
        out.segment(space.index_of(idx, 0), d_) = v;
    }
    return out;
}

ExtendedState ExtendedState::from_dense(const FockSpace& space, const Vector& dense) {
    if (dense.size() != space.total_dim()) {
        throw std::invalid_argument("dense vector dimension mismatch");
    }
    ExtendedState out(space.ghost_count(), space.dim_v());
    for (int s = 0; s <= space.ghost_count(); ++s) {
        for (const MultiIndex& idx : space.sector_indices(s)) {
            out.set_component(idx, dense.segment(space.index_of(idx, 0), space.dim_v()));
        }
    }
    return out;
}

cplx scalar_product(const FockSpace& space, const ExtendedState& psi,
                    const ExtendedState& phi) {
    if (psi.ghost_count() != space.ghost_count() || psi.dim_v() != space.dim_v() ||
        phi.ghost_count() != space.ghost_count() || phi.dim_v() != space.dim_v()) {
        throw std::invalid_argument("scalar_product: mismatched space");
    }
    cplx out(0.0);
    for (const auto& [idx, v] : psi.components()) {
        const MultiIndex comp = idx.complement();
        auto it = phi.components().find(comp);
        if (it == phi.components().end()) continue;
        const auto [merged, msign] = merge_sign(idx, comp);
        out += static_cast<double>(reversal_sign(idx) * msign) *
               space.v_inner(v, it->second);
    }
    return out;
}

Matrix pairing_gram(const FockSpace& space, int p) {
    const int m = space.ghost_count();
    if (p < 0 || p > m) throw std::invalid_argument("pairing_gram: degree out of range");
    const int d = space.dim_v();
    const auto& rows = space.sector_indices(p);
    const auto& cols = space.sector_indices(m - p);
    Matrix gram = Matrix::Zero(static_cast<int>(rows.size()) * d,
                               static_cast<int>(cols.size()) * d);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const MultiIndex comp = rows[i].complement();
        const auto [merged, msign] = merge_sign(rows[i], comp);
        const double sign = reversal_sign(rows[i]) * msign;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (!(cols[j] == comp)) continue;
            gram.block(static_cast<int>(i) * d, static_cast<int>(j) * d, d, d) =
                sign * space.metric();
        }
    }
    return gram;
}

Vector zeta(const FockSpace& space, const ExtendedState& psi) {
    if (psi.ghost_count() != space.ghost_count() || psi.dim_v() != space.dim_v()) {
        throw std::invalid_argument("zeta: mismatched space");
    }
    const MultiIndex top = MultiIndex(space.ghost_count()).complement();
    for (const auto& [idx, v] : psi.components()) {
        if (!(idx == top)) {
            throw std::invalid_argument("zeta: state has support below the top sector");
        }
    }
    return psi.component(top);
}

ExtendedState zeta_inv(const FockSpace& space, const Vector& value) {
    ExtendedState out(space.ghost_count(), space.dim_v());
    out.set_component(MultiIndex(space.ghost_count()).complement(), value);
    return out;
}

}  // namespace brst

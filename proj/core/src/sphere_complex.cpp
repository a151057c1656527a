#include <map>
#include <stdexcept>
#include <vector>

#include "brst/cochain_complex.hpp"

namespace brst {

namespace {

// Size-k subsets of 0..n-1 in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = next; i <= n - (k - static_cast<int>(cur.size())); ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace

CochainComplex sphere_complex(int m) {
    if (m < 1) throw std::invalid_argument("sphere_complex: m must be positive");
    const int vertices = m + 2;  // boundary of the (m+1)-simplex

    CochainComplex complex;
    std::vector<std::vector<std::vector<int>>> faces;  // faces[k]: (k+1)-subsets
    std::vector<std::map<std::vector<int>, int>> position(static_cast<std::size_t>(m + 1));
    for (int k = 0; k <= m; ++k) {
        faces.push_back(subsets(vertices, k + 1));
        complex.dims.push_back(static_cast<int>(faces.back().size()));
        complex.labels.push_back("q=" + std::to_string(k));
        int pos = 0;
        for (const auto& f : faces.back()) position[static_cast<std::size_t>(k)][f] = pos++;
    }

    for (int k = 0; k + 1 <= m; ++k) {
        Matrix d = Matrix::Zero(complex.dims[static_cast<std::size_t>(k + 1)],
                                complex.dims[static_cast<std::size_t>(k)]);
        // (d f)(tau) = sum_i (-1)^i f(tau minus its i-th vertex).
        const auto& rows = faces[static_cast<std::size_t>(k + 1)];
        for (std::size_t r = 0; r < rows.size(); ++r) {
            for (std::size_t i = 0; i < rows[r].size(); ++i) {
                std::vector<int> sub = rows[r];
                sub.erase(sub.begin() + static_cast<long>(i));
                const int c = position[static_cast<std::size_t>(k)].at(sub);
                d(static_cast<int>(r), c) = (i & 1) ? -1.0 : 1.0;
            }
        }
        complex.differentials.push_back(std::move(d));
    }
    return complex;
}

}  // namespace brst

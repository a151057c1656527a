#include "brst/structure_constants.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "brst/errors.hpp"

namespace brst {

StructureConstants::StructureConstants(int constraint_count) : m_(constraint_count) {
    if (constraint_count < 1) {
        throw std::invalid_argument("constraint count must be positive");
    }
    values_.assign(static_cast<std::size_t>(m_) * m_ * m_, 0.0);
}

std::size_t StructureConstants::at(int a, int b, int c) const {
    if (a < 1 || a > m_ || b < 1 || b > m_ || c < 1 || c > m_) {
        throw std::invalid_argument("structure constant index out of range");
    }
    return (static_cast<std::size_t>(a - 1) * m_ + (b - 1)) * m_ + (c - 1);
}

void StructureConstants::set(int a, int b, int c, double value) {
    values_[at(a, b, c)] = value;
}

double StructureConstants::get(int a, int b, int c) const { return values_[at(a, b, c)]; }

bool StructureConstants::is_zero() const {
    for (double v : values_) {
        if (v != 0.0) return false;
    }
    return true;
}

std::vector<std::string> StructureConstants::validate(double tol) const {
    std::vector<std::string> violations;
    char buf[160];
    for (int a = 1; a <= m_; ++a) {
        for (int b = a; b <= m_; ++b) {
            for (int c = 1; c <= m_; ++c) {
                const double r = get(a, b, c) + get(b, a, c);
                if (std::abs(r) > tol) {
                    std::snprintf(buf, sizeof(buf),
                                  "antisymmetry violated at (a=%d,b=%d,c=%d): "
                                  "C[%d,%d,%d]+C[%d,%d,%d] = %.3g",
                                  a, b, c, a, b, c, b, a, c, r);
                    violations.emplace_back(buf);
                }
            }
        }
    }
    for (int a = 1; a <= m_; ++a) {
        for (int b = a + 1; b <= m_; ++b) {
            for (int c = b + 1; c <= m_; ++c) {
                for (int d = 1; d <= m_; ++d) {
                    double r = 0.0;
                    for (int e = 1; e <= m_; ++e) {
                        r += get(a, b, e) * get(e, c, d);
                        r += get(b, c, e) * get(e, a, d);
                        r += get(c, a, e) * get(e, b, d);
                    }
                    if (std::abs(r) > tol) {
                        std::snprintf(buf, sizeof(buf),
                                      "Jacobi identity violated at (a=%d,b=%d,c=%d,d=%d): "
                                      "residual %.3g",
                                      a, b, c, d, r);
                        violations.emplace_back(buf);
                    }
                }
            }
        }
    }
    return violations;
}

void StructureConstants::validate_or_throw(double tol) const {
    auto violations = validate(tol);
    if (!violations.empty()) {
        std::string msg = "invalid structure constants (" +
                          std::to_string(violations.size()) + " violations)";
        throw config_error(msg, std::move(violations));
    }
}

StructureConstants StructureConstants::su2() {
    StructureConstants c(3);
    const int perm[6][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2},
                            {2, 1, 3}, {3, 2, 1}, {1, 3, 2}};
    for (int k = 0; k < 3; ++k) c.set(perm[k][0], perm[k][1], perm[k][2], 1.0);
    for (int k = 3; k < 6; ++k) c.set(perm[k][0], perm[k][1], perm[k][2], -1.0);
    return c;
}

}  // namespace brst

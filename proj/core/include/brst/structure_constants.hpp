#pragma once

#include <string>
#include <vector>

namespace brst {

/// Constant structure constants C_ab^c of a first-class constraint algebra:
/// real, antisymmetric in (a,b), satisfying the Jacobi identity. Validation
/// reports every violation rather than stopping at the first.
class StructureConstants {
public:
    explicit StructureConstants(int constraint_count);

    int constraint_count() const { return m_; }

    void set(int a, int b, int c, double value);
    double get(int a, int b, int c) const;
    bool is_zero() const;

    /// Antisymmetry and Jacobi checks; empty result means valid.
    std::vector<std::string> validate(double tol = 1e-12) const;

    /// Throws config_error carrying all violations.
    void validate_or_throw(double tol = 1e-12) const;

    /// The so(3)/su(2) example: C_ab^c = epsilon_abc, m = 3.
    static StructureConstants su2();

private:
    std::size_t at(int a, int b, int c) const;

    int m_ = 0;
    std::vector<double> values_;
};

}  // namespace brst

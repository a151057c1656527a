#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace brst {

using cplx = std::complex<double>;

/// Exponent vector of a monomial in the commuting constraint symbols
/// G_1..G_m. Length equals the constraint count.
using GExponents = std::vector<unsigned>;

/// Complex-coefficient polynomial in the constraint symbols. Zero terms are
/// never stored, so the zero polynomial is the empty map and equality is
/// representation equality.
class CoefficientPoly {
public:
    CoefficientPoly() = default;
    explicit CoefficientPoly(int symbol_count);

    static CoefficientPoly constant(int symbol_count, cplx value);
    static CoefficientPoly symbol(int symbol_count, int a);  // G_a, a in 1..m

    int symbol_count() const { return m_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_real() const;
    int total_degree() const;  // 0 for constants and for the zero polynomial
    cplx constant_term() const;
    double max_abs() const;

    const std::map<GExponents, cplx>& terms() const { return terms_; }
    void add_term(const GExponents& exponents, cplx value);

    CoefficientPoly& operator+=(const CoefficientPoly& other);
    CoefficientPoly& operator-=(const CoefficientPoly& other);
    CoefficientPoly& operator*=(cplx scale);

    friend CoefficientPoly operator+(CoefficientPoly a, const CoefficientPoly& b) {
        a += b;
        return a;
    }
    friend CoefficientPoly operator-(CoefficientPoly a, const CoefficientPoly& b) {
        a -= b;
        return a;
    }
    friend CoefficientPoly operator*(const CoefficientPoly& a, const CoefficientPoly& b);
    friend CoefficientPoly operator*(cplx s, CoefficientPoly p) {
        p *= s;
        return p;
    }

    CoefficientPoly conjugated() const;
    CoefficientPoly real_part() const;
    CoefficientPoly imag_part() const;

    bool operator==(const CoefficientPoly& other) const = default;

    std::string str() const;

private:
    int m_ = 0;
    std::map<GExponents, cplx> terms_;
};

/// Complex scalar formatting shared by the symbolic printers: "1" and "-1"
/// collapse, reals drop the imaginary part, full complexes print as (a+bi).
std::string format_scalar(cplx value);

}  // namespace brst

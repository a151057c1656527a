#include "brst/coefficient_poly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace brst {

namespace {

std::string format_double(double x) {
    if (x == 0.0) return "0";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

}  // namespace

std::string format_scalar(cplx value) {
    if (value.imag() == 0.0) return format_double(value.real());
    if (value.real() == 0.0) return format_double(value.imag()) + "i";
    std::string out = "(" + format_double(value.real());
    out += (value.imag() < 0 ? "-" : "+");
    out += format_double(std::abs(value.imag())) + "i)";
    return out;
}

CoefficientPoly::CoefficientPoly(int symbol_count) : m_(symbol_count) {
    if (symbol_count < 0) throw std::invalid_argument("negative symbol count");
}

CoefficientPoly CoefficientPoly::constant(int symbol_count, cplx value) {
    CoefficientPoly p(symbol_count);
    p.add_term(GExponents(static_cast<std::size_t>(symbol_count), 0u), value);
    return p;
}

CoefficientPoly CoefficientPoly::symbol(int symbol_count, int a) {
    if (a < 1 || a > symbol_count) {
        throw std::invalid_argument("constraint symbol index out of range");
    }
    CoefficientPoly p(symbol_count);
    GExponents e(static_cast<std::size_t>(symbol_count), 0u);
    e[static_cast<std::size_t>(a - 1)] = 1u;
    p.add_term(e, cplx(1.0, 0.0));
    return p;
}

bool CoefficientPoly::is_real() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second.imag() == 0.0; });
}

int CoefficientPoly::total_degree() const {
    int deg = 0;
    for (const auto& [e, c] : terms_) {
        deg = std::max(deg, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
    }
    return deg;
}

cplx CoefficientPoly::constant_term() const {
    const GExponents zero(static_cast<std::size_t>(m_), 0u);
    auto it = terms_.find(zero);
    return it == terms_.end() ? cplx(0.0) : it->second;
}

double CoefficientPoly::max_abs() const {
    double out = 0.0;
    for (const auto& [e, c] : terms_) out = std::max(out, std::abs(c));
    return out;
}

void CoefficientPoly::add_term(const GExponents& exponents, cplx value) {
    if (static_cast<int>(exponents.size()) != m_) {
        throw std::invalid_argument("exponent vector length mismatch");
    }
    auto [it, inserted] = terms_.try_emplace(exponents, value);
    if (!inserted) it->second += value;
    if (it->second == cplx(0.0)) terms_.erase(it);
}

CoefficientPoly& CoefficientPoly::operator+=(const CoefficientPoly& other) {
    if (other.m_ != m_) throw std::invalid_argument("symbol count mismatch");
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

CoefficientPoly& CoefficientPoly::operator-=(const CoefficientPoly& other) {
    if (other.m_ != m_) throw std::invalid_argument("symbol count mismatch");
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

CoefficientPoly& CoefficientPoly::operator*=(cplx scale) {
    if (scale == cplx(0.0)) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= scale;
    return *this;
}

CoefficientPoly operator*(const CoefficientPoly& a, const CoefficientPoly& b) {
    if (a.m_ != b.m_) throw std::invalid_argument("symbol count mismatch");
    CoefficientPoly out(a.m_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            GExponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

CoefficientPoly CoefficientPoly::conjugated() const {
    CoefficientPoly out(m_);
    for (const auto& [e, c] : terms_) out.add_term(e, std::conj(c));
    return out;
}

CoefficientPoly CoefficientPoly::real_part() const {
    CoefficientPoly out(m_);
    for (const auto& [e, c] : terms_) out.add_term(e, cplx(c.real(), 0.0));
    return out;
}

CoefficientPoly CoefficientPoly::imag_part() const {
    CoefficientPoly out(m_);
    for (const auto& [e, c] : terms_) out.add_term(e, cplx(c.imag(), 0.0));
    return out;
}

std::string CoefficientPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += " ";
            mono += "G_" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        std::string coef = format_scalar(c);
        std::string term;
        if (mono.empty()) {
            term = coef;
        } else if (coef == "1") {
            term = mono;
        } else if (coef == "-1") {
            term = "-" + mono;
        } else {
            term = coef + " " + mono;
        }
        if (!first && term[0] != '-') out += " + ";
        if (!first && term[0] == '-') {
            out += " - ";
            term = term.substr(1);
        }
        out += term;
        first = false;
    }
    return out;
}

}  // namespace brst

#include <random>

#include "brst/errors.hpp"
#include "brst/koszul.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace brst;

namespace {

// Leibniz reference for the differential on one monomial word: act on each
// generator in turn with the sign of the odd factors crossed.
Observable koszul_tate_reference(const Observable& f) {
    const int m = f.ghost_count();
    Observable out(m);
    for (const auto& [key, coeff] : f.terms()) {
        const auto etas = key.eta.indices();
        const auto moms = key.mom.indices();
        for (std::size_t k = 0; k < moms.size(); ++k) {
            Observable word = Observable::scalar(m, cplx(1.0));
            int crossed = 0;
            for (int e : etas) {
                word = multiply(word, Observable::eta(m, e));
                ++crossed;
            }
            for (std::size_t j = 0; j < moms.size(); ++j) {
                if (j == k) {
                    const double sgn = (crossed & 1) ? -1.0 : 1.0;
                    word = multiply(word, cplx(-sgn) * Observable::symbol(m, moms[j]));
                } else {
                    word = multiply(word, Observable::mom(m, moms[j]));
                    ++crossed;
                }
            }
            Observable term(m);
            term.add_term(MultiIndex(m), MultiIndex(m), coeff);
            out += multiply(term, word);
        }
    }
    return out;
}

Observable random_monomial(std::mt19937& rng, int m, int max_ghost, int coeff_deg) {
    std::uniform_int_distribution<int> deg(0, max_ghost);
    return oracle::random_homogeneous(rng, m, deg(rng), deg(rng), coeff_deg,
                                      /*allow_imag=*/false);
}

}  // namespace

TEST_CASE("differential on pinned monomials") {
    const int m = 3;
    // P_1 -> -G_1; the square vanishing on generators is the oracle.
    CHECK(koszul_tate(Observable::mom(m, 1)) == cplx(-1.0) * Observable::symbol(m, 1));
    CHECK(koszul_tate(koszul_tate(Observable::mom(m, 1))).is_zero());
    CHECK(koszul_tate(Observable::eta(m, 1)).is_zero());
    CHECK(koszul_tate(Observable::symbol(m, 1)).is_zero());

    // eta^1 eta^2 P_3 -> -eta^1 eta^2 G_3, two even crossings.
    const Observable f = multiply(multiply(Observable::eta(m, 1), Observable::eta(m, 2)),
                                  Observable::mom(m, 3));
    const Observable expected =
        cplx(-1.0) * multiply(multiply(Observable::eta(m, 1), Observable::eta(m, 2)),
                              Observable::symbol(m, 3));
    CHECK(koszul_tate(f) == expected);
    CHECK(koszul_tate(f) == koszul_tate_reference(f));
}

TEST_CASE("differential squares to zero and matches the Leibniz reference") {
    std::mt19937 rng(53);
    const int m = 4;
    for (int trial = 0; trial < 150; ++trial) {
        const Observable f = random_monomial(rng, m, m, 2);
        CHECK(koszul_tate(f) == koszul_tate_reference(f));
        CHECK(koszul_tate(koszul_tate(f)).is_zero());
    }
}

TEST_CASE("homotopy pinned examples") {
    const int m = 3;
    // s(G_1) = -P_1, recovered by the differential.
    const Observable s_g1 = contracting_homotopy(Observable::symbol(m, 1));
    CHECK(s_g1 == cplx(-1.0) * Observable::mom(m, 1));
    CHECK(koszul_tate(s_g1) == Observable::symbol(m, 1));

    // s(eta^1 eta^2 G_c) = -eta^1 eta^2 P_c, N = 1.
    const auto c = StructureConstants::su2();
    Observable f(m);
    for (int k = 1; k <= m; ++k) {
        const double v = c.get(1, 2, k);
        if (v == 0.0) continue;
        f += cplx(v) * multiply(multiply(Observable::eta(m, 1), Observable::eta(m, 2)),
                                Observable::symbol(m, k));
    }
    const Observable s_f = contracting_homotopy(f);
    CHECK(koszul_tate(s_f) == f);

    CHECK_THROWS_AS(contracting_homotopy(Observable::scalar(m, cplx(1.0))),
                    construction_error);
}

TEST_CASE("homotopy identity delta s + s delta = id on monomials") {
    std::mt19937 rng(59);
    const int m = 4;
    int checked = 0;
    while (checked < 100) {
        const Observable f = random_monomial(rng, m, m, 2);
        if (f.is_zero()) continue;
        // Skip monomials outside the homotopy domain.
        const auto& [key, coeff] = *f.terms().begin();
        if (key.mom.empty() && coeff.total_degree() == 0) continue;
        Observable sum = koszul_tate(contracting_homotopy(f));
        sum += contracting_homotopy(koszul_tate(f));
        // Exact up to rounding of the 1/N division (N need not be dyadic).
        CHECK(oracle::approx_equal(sum, f, 1e-13));
        ++checked;
    }
}

TEST_CASE("abelian constants give the bare charge") {
    const int m = 2;
    StructureConstants abelian(m);
    const BRSTCharge charge = build_brst(abelian);
    REQUIRE(charge.pieces.size() == 1);
    Observable expected(m);
    for (int a = 1; a <= m; ++a) {
        expected += multiply(Observable::eta(m, a), Observable::symbol(m, a));
    }
    CHECK(charge.total() == expected);
}

TEST_CASE("su(2) constants terminate at rank one with a certified charge") {
    const auto c = StructureConstants::su2();
    const BRSTCharge charge = build_brst(c);
    REQUIRE(charge.pieces.size() == 2);

    const Observable total = charge.total();
    CHECK(poisson(total, total, c).is_zero());
    CHECK(is_real(total));
    CHECK(total.parity() == 1);

    // Antighost pattern: piece p carries p momenta and p+1 ghosts.
    for (std::size_t p = 0; p < charge.pieces.size(); ++p) {
        for (const auto& [key, coeff] : charge.pieces[p].terms()) {
            CHECK(key.mom.size() == static_cast<int>(p));
            CHECK(key.eta.size() == static_cast<int>(p) + 1);
        }
    }

    // The correction is quadratic in ghosts, linear in momenta, with
    // constant coefficients matching the structure-constant magnitudes; the
    // nilpotency check above is the oracle for their signs.
    for (const auto& [key, coeff] : charge.pieces[1].terms()) {
        const auto etas = key.eta.indices();
        const auto moms = key.mom.indices();
        REQUIRE(etas.size() == 2);
        REQUIRE(moms.size() == 1);
        CHECK(coeff.max_abs() == std::abs(c.get(etas[0], etas[1], moms[0])));
        CHECK(coeff.total_degree() == 0);
    }
}

TEST_CASE("construction errors") {
    // Jacobi-violating constants are rejected at load.
    StructureConstants nojac(3);
    nojac.set(1, 2, 2, 1.0);
    nojac.set(2, 1, 2, -1.0);
    nojac.set(2, 3, 3, 1.0);
    nojac.set(3, 2, 3, -1.0);
    REQUIRE(!nojac.validate().empty());
    CHECK_THROWS_AS(build_brst(nojac), config_error);

    // Rank exhaustion with a nonzero obstruction.
    CHECK_THROWS_AS(build_brst(StructureConstants::su2(), 0), construction_error);
}

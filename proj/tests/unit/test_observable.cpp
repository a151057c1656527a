#include <random>

#include "brst/observable.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace brst;

namespace {

Observable random_constant_coeff(std::mt19937& rng, int m, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    const int total = deg(rng);
    std::uniform_int_distribution<int> split(0, total);
    const int r = split(rng);
    return oracle::random_homogeneous(rng, m, std::min(r, m), std::min(total - r, m),
                                      /*max_coeff_degree=*/0);
}

}  // namespace

TEST_CASE("multiply reproduces the defining crossing relation") {
    const int m = 2;
    const auto p1 = Observable::mom(m, 1);
    const auto e1 = Observable::eta(m, 1);

    // P_1 eta^1 = -i - eta^1 P_1, the operator relation
    Observable expected = Observable::scalar(m, cplx(0.0, -1.0));
    Observable eta_mom = multiply(e1, p1);
    eta_mom *= cplx(-1.0);
    expected += eta_mom;
    CHECK(multiply(p1, e1) == expected);

    // The graded product drops the contraction and only anticommutes.
    CHECK(grassmann_multiply(p1, e1) == cplx(-1.0) * multiply(e1, p1));

    CHECK(multiply(e1, e1).is_zero());

    // Coefficients pass through ghosts: eta^1 G_1 * eta^2 G_2 = eta^1 eta^2 G_1 G_2.
    const auto lhs = multiply(multiply(Observable::eta(m, 1), Observable::symbol(m, 1)),
                              multiply(Observable::eta(m, 2), Observable::symbol(m, 2)));
    Observable rhs(m);
    rhs.add_term(normalize(std::vector<int>{1, 2}, m).first, MultiIndex(m),
                 CoefficientPoly::symbol(m, 1) * CoefficientPoly::symbol(m, 2));
    CHECK(lhs == rhs);
}

TEST_CASE("multiply agrees with the all-orders rewriting reference") {
    const int m = 3;
    // P_1 P_2 * eta^2 eta^1 exercises every crossing.
    const Observable lhs = multiply(Observable::mom(m, 1), Observable::mom(m, 2));
    const Observable rhs = cplx(-1.0) * multiply(Observable::eta(m, 1), Observable::eta(m, 2));
    const Observable product = multiply(lhs, rhs);

    oracle::Word word{{1, 1}, {1, 2}, {0, 2}, {0, 1}};
    const auto expected = oracle::normal_order(word);
    CHECK(oracle::to_word_sum(product) == expected);
}

TEST_CASE("multiply agrees with the rewriting reference on random words") {
    std::mt19937 rng(23);
    const int m = 3;
    std::uniform_int_distribution<int> len(0, 5);
    std::uniform_int_distribution<int> kind(0, 1);
    std::uniform_int_distribution<int> index(1, m);
    for (int trial = 0; trial < 200; ++trial) {
        oracle::Word word(static_cast<std::size_t>(len(rng)));
        Observable product = Observable::scalar(m, cplx(1.0));
        for (auto& g : word) {
            g = {kind(rng), index(rng)};
            product = multiply(product, g.kind == 0 ? Observable::eta(m, g.index)
                                                    : Observable::mom(m, g.index));
        }
        CHECK(oracle::to_word_sum(product) == oracle::normal_order(word));
    }
}

TEST_CASE("multiply is associative") {
    const int m2 = 2;
    // Exhaustive over the generator set for m = 2.
    std::vector<Observable> gens;
    for (int a = 1; a <= m2; ++a) {
        gens.push_back(Observable::eta(m2, a));
        gens.push_back(Observable::mom(m2, a));
        gens.push_back(Observable::symbol(m2, a));
    }
    for (const auto& f : gens) {
        for (const auto& g : gens) {
            for (const auto& h : gens) {
                CHECK(multiply(multiply(f, g), h) == multiply(f, multiply(g, h)));
            }
        }
    }

    // Sampled for larger ghost counts and longer products.
    std::mt19937 rng(31);
    for (int m : {3, 4}) {
        for (int trial = 0; trial < 60; ++trial) {
            const Observable f = random_constant_coeff(rng, m, 3);
            const Observable g = random_constant_coeff(rng, m, 3);
            const Observable h = random_constant_coeff(rng, m, 3);
            CHECK(multiply(multiply(f, g), h) == multiply(f, multiply(g, h)));
        }
    }
}

TEST_CASE("conjugate pinned examples") {
    const int m = 2;
    // (eta^1 eta^2)^* = eta^2 eta^1 = -eta^1 eta^2.
    const Observable e12 = multiply(Observable::eta(m, 1), Observable::eta(m, 2));
    CHECK(conjugate(e12) == cplx(-1.0) * e12);

    // Antilinearity on a real symbol.
    const Observable ig = cplx(0.0, 1.0) * Observable::symbol(m, 1);
    CHECK(conjugate(ig) == cplx(0.0, -1.0) * Observable::symbol(m, 1));

    // Reordering oracle: conjugating eta^1 G_1 P_2 must equal the product
    // (-P_2) G_1 eta^1 computed through multiply.
    const Observable f = multiply(multiply(Observable::eta(m, 1), Observable::symbol(m, 1)),
                                  Observable::mom(m, 2));
    const Observable via_multiply =
        multiply(multiply(cplx(-1.0) * Observable::mom(m, 2), Observable::symbol(m, 1)),
                 Observable::eta(m, 1));
    CHECK(conjugate(f) == via_multiply);
}

TEST_CASE("conjugate is an antilinear anti-involution") {
    std::mt19937 rng(37);
    const int m = 3;
    for (int trial = 0; trial < 150; ++trial) {
        std::uniform_int_distribution<int> deg(0, m);
        const Observable f =
            oracle::random_homogeneous(rng, m, deg(rng), deg(rng), 2);
        const Observable g =
            oracle::random_homogeneous(rng, m, deg(rng), deg(rng), 2);
        CHECK(conjugate(conjugate(f)) == f);
        CHECK(conjugate(multiply(f, g)) == multiply(conjugate(g), conjugate(f)));
    }
}

TEST_CASE("parity and homogeneous split") {
    const int m = 2;
    CHECK(Observable::eta(m, 1).parity() == 1);
    CHECK(Observable::symbol(m, 1).parity() == 0);

    Observable mixed = Observable::eta(m, 1);
    mixed += Observable::symbol(m, 1);
    CHECK_THROWS_AS(mixed.parity(), std::invalid_argument);

    Observable f = multiply(Observable::eta(m, 1), Observable::symbol(m, 1));
    f += multiply(multiply(Observable::eta(m, 1), Observable::eta(m, 2)),
                  Observable::mom(m, 1));
    const auto pieces = f.split_homogeneous();
    REQUIRE(pieces.size() == 2);
    CHECK(pieces[0].is_homogeneous());
    CHECK(pieces[1].is_homogeneous());
    Observable sum = pieces[0];
    sum += pieces[1];
    CHECK(sum == f);
}

TEST_CASE("mismatched ghost counts are rejected") {
    CHECK_THROWS_AS(multiply(Observable::eta(2, 1), Observable::eta(3, 1)),
                    std::invalid_argument);
}

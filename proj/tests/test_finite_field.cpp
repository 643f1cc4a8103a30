#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "pncode/finite_field.hpp"

using namespace pncode;

namespace {

// Independent oracle: a monic quadratic over F_p is irreducible iff it has
// no root. Scans the same (c1, c0) order make_field commits to.
std::vector<std::uint32_t> first_irreducible_quadratic(std::uint32_t p) {
    for (std::uint32_t v = 0; v < p * p; ++v) {
        std::uint32_t c0 = v % p, c1 = v / p;
        bool has_root = false;
        for (std::uint32_t x = 0; x < p && !has_root; ++x)
            if ((x * x + c1 * x + c0) % p == 0) has_root = true;
        if (!has_root) return {c0, c1, 1};
    }
    return {};
}

}  // namespace

TEST_CASE("modulus selection matches the exhaustive scan") {
    FieldCtx f9 = make_field(3, 2);
    CHECK(f9.modulus() == std::vector<std::uint32_t>{1, 0, 1});  // x^2 + 1
    CHECK(f9.modulus() == first_irreducible_quadratic(3));
    CHECK(f9.modulus_string() == "x^2+1");

    FieldCtx f25 = make_field(5, 2);
    CHECK(f25.modulus() == first_irreducible_quadratic(5));
    CHECK(f25.modulus() == std::vector<std::uint32_t>{2, 0, 1});  // x^2 + 2

    FieldCtx f3 = make_field(3, 1);
    CHECK(f3.modulus() == std::vector<std::uint32_t>{0, 1});  // x
    CHECK(f3.order() == 3);
    CHECK(f3.add(2, 2) == 1);
    CHECK(f3.mul(2, 2) == 1);
}

TEST_CASE("construction rejects bad parameters") {
    CHECK_THROWS_AS(make_field(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_field(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(make_field(9, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_field(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_field(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_field(3, 8), capacity_error);   // 6561 > 2187
    CHECK_NOTHROW(make_field(3, 8, 10000));              // raised ceiling
}

TEST_CASE("field axioms") {
    for (auto [p, m] : {std::pair<std::uint32_t, std::uint32_t>{3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
        CAPTURE(p);
        CAPTURE(m);
        FieldCtx F = make_field(p, m);
        const std::uint32_t q = F.order();

        for (Fe x = 0; x < q; ++x) {
            CHECK(F.add(x, 0) == x);
            CHECK(F.mul(x, 1) == x);
            CHECK(F.add(x, F.neg(x)) == 0);
            if (x != 0) CHECK(F.mul(x, F.inv(x)) == 1);
            // log-table product agrees with the polynomial route
            for (Fe y = 0; y < q; ++y) CHECK(F.mul(x, y) == F.mul_poly(x, y));
        }
        CHECK_THROWS_AS(F.inv(0), std::invalid_argument);

        std::mt19937 rng(42);
        std::uniform_int_distribution<Fe> pick(0, q - 1);
        for (int t = 0; t < 500; ++t) {
            Fe x = pick(rng), y = pick(rng), z = pick(rng);
            CHECK(F.mul(x, F.mul(y, z)) == F.mul(F.mul(x, y), z));
            CHECK(F.add(x, F.add(y, z)) == F.add(F.add(x, y), z));
            CHECK(F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z)));
        }
    }
}

TEST_CASE("trace values and fibers") {
    FieldCtx F = make_field(3, 2);
    Fe alpha = F.basis_element(1);
    CHECK(F.trace(0) == 0);
    CHECK(F.trace(alpha) == 0);  // alpha^2 = -1, so alpha + alpha^3 = 0
    CHECK(F.trace(1) == 2);      // m * 1 mod p

    // direct Frobenius-power summation oracle
    for (Fe x = 0; x < F.order(); ++x) {
        Fe acc = 0, y = x;
        for (std::uint32_t i = 0; i < F.m(); ++i) {
            acc = F.add(acc, y);
            y = F.mul_poly(F.mul_poly(y, y), y);  // y^3
        }
        CHECK(acc == F.trace(x));
    }

    for (auto [p, m] : {std::pair<std::uint32_t, std::uint32_t>{3, 3}, {5, 2}, {3, 4}}) {
        FieldCtx G = make_field(p, m);
        std::vector<std::uint32_t> fiber(p, 0);
        for (Fe x = 0; x < G.order(); ++x) ++fiber[G.trace(x)];
        for (std::uint32_t t = 0; t < p; ++t) CHECK(fiber[t] == G.order() / p);
        // F_p-linearity
        std::mt19937 rng(7);
        std::uniform_int_distribution<Fe> pick(0, G.order() - 1);
        for (int t = 0; t < 200; ++t) {
            Fe x = pick(rng), y = pick(rng);
            CHECK(G.trace(G.add(x, y)) == (G.trace(x) + G.trace(y)) % p);
        }
    }
}

TEST_CASE("quadratic character") {
    FieldCtx f3 = make_field(3, 1);
    CHECK(f3.quadratic_character(2) == -1);
    CHECK(f3.quadratic_character(0) == 0);
    CHECK(f3.quadratic_character(1) == 1);

    FieldCtx F = make_field(3, 2);
    // exhaustive square table of F_9
    std::set<Fe> squares;
    for (Fe y = 1; y < 9; ++y) squares.insert(F.mul(y, y));
    for (Fe z = 1; z < 9; ++z) {
        CHECK(F.quadratic_character(z) == (squares.count(z) ? 1 : -1));
        CHECK((F.quadratic_character(z) == 1) == (F.pow(z, 4) == 1));
    }

    for (auto [p, m] : {std::pair<std::uint32_t, std::uint32_t>{3, 3}, {5, 2}, {7, 2}}) {
        FieldCtx G = make_field(p, m);
        int plus = 0;
        for (Fe x = 1; x < G.order(); ++x)
            if (G.quadratic_character(x) == 1) ++plus;
        CHECK(plus == int((G.order() - 1) / 2));
        for (Fe x = 1; x < G.order(); ++x)
            for (Fe y = 1; y < G.order(); ++y)
                CHECK(G.quadratic_character(G.mul(x, y)) ==
                      G.quadratic_character(x) * G.quadratic_character(y));
    }
}

TEST_CASE("primitive element is the smallest full-order encoding") {
    CHECK(make_field(3, 1).primitive_element() == 2);
    CHECK(make_field(5, 1).primitive_element() == 2);

    FieldCtx F = make_field(3, 2);
    // brute-force order oracle over all 8 nonzero elements
    Fe smallest = 0;
    for (Fe g = 1; g < 9 && !smallest; ++g) {
        Fe acc = 1;
        std::uint32_t ord = 0;
        do {
            acc = F.mul(acc, g);
            ++ord;
        } while (acc != 1);
        if (ord == 8) smallest = g;
    }
    CHECK(F.primitive_element() == smallest);
    CHECK(F.primitive_element() == 4);  // 1 + alpha
    CHECK(F.mul_order(F.primitive_element()) == 8);
}

TEST_CASE("gauss sums: closed form vs direct summation") {
    {
        GaussSumValue g = gauss_sum(make_field(5, 1));
        CHECK(g.sign == 1);
        CHECK(g.i_power == 0);
        CHECK(g.numeric.real() == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
        CHECK(g.numeric.imag() == doctest::Approx(0.0).epsilon(1e-12));
    }
    {
        GaussSumValue g = gauss_sum(make_field(3, 1));  // i*sqrt(3)
        CHECK(g.sign == 1);
        CHECK(g.i_power == 1);
        CHECK(g.numeric.real() == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(g.numeric.imag() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
    }
    {
        GaussSumValue g = gauss_sum(make_field(3, 2));  // (-1)*(i^2)*3 = 3
        CHECK(g.sign == -1);
        CHECK(g.i_power == 2);
        CHECK(g.numeric.real() == doctest::Approx(3.0).epsilon(1e-12));
        CHECK(g.numeric.imag() == doctest::Approx(0.0).epsilon(1e-12));
    }
    // the constructor itself enforces the 1e-9 agreement; sweep small fields
    for (auto [p, mmax] : {std::pair<std::uint32_t, std::uint32_t>{3, 7}, {5, 4}, {7, 3}, {11, 3}}) {
        for (std::uint32_t m = 1; m <= mmax; ++m) {
            std::uint64_t q = 1;
            for (std::uint32_t i = 0; i < m; ++i) q *= p;
            if (q > 2187) break;
            CHECK_NOTHROW(gauss_sum(make_field(p, m)));
        }
    }
}

TEST_CASE("encoding round-trips and frobenius") {
    FieldCtx F = make_field(3, 3);
    for (Fe x = 0; x < F.order(); ++x) {
        std::vector<std::uint32_t> d(F.m());
        for (std::uint32_t i = 0; i < F.m(); ++i) d[i] = F.digit(x, i);
        CHECK(F.element_from_digits(d) == x);
        CHECK(F.frobenius(x) == F.pow(x, 3));
        CHECK(F.frobenius(x, 3) == x);  // full orbit
    }
}

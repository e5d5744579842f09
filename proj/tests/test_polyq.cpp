#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <utility>
#include <vector>

#include "pedlab/errors.hpp"
#include "pedlab/intpoly.hpp"

using namespace pedlab;

namespace {

IntPoly random_poly(std::mt19937_64& rng) {
    std::vector<mpz_class> c(rng() % 6 + 1);
    for (auto& v : c) v = static_cast<long>(rng() % 11) - 5;
    return IntPoly(std::move(c));
}

IntPoly one_minus_qk(int k) {
    std::vector<mpz_class> c(static_cast<size_t>(k) + 1, 0);
    c[0] = 1;
    c[static_cast<size_t>(k)] = -1;
    return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("canonical form") {
    CHECK(IntPoly{}.is_zero());
    CHECK(IntPoly{}.degree() == -1);
    CHECK(IntPoly(std::vector<mpz_class>{0, 0}).is_zero());
    CHECK(IntPoly{1, 0} == IntPoly{1});
    CHECK(IntPoly{0, 1}.degree() == 1);
    CHECK(IntPoly{3}.coeff(0) == 3);
    CHECK(IntPoly{3}.coeff(7) == 0);
    CHECK(IntPoly::variable() == IntPoly{0, 1});
    CHECK(IntPoly::monomial(2, 3) == IntPoly{0, 0, 0, 2});
    CHECK(IntPoly::constant(-4) == IntPoly{-4});
    CHECK(IntPoly::constant(0).is_zero());
}

TEST_CASE("addition") {
    CHECK(IntPoly{1, 1} + IntPoly{1, -1} == IntPoly{2});
    CHECK(IntPoly{} + IntPoly{0, 1, 2} == IntPoly{0, 1, 2});
    CHECK(IntPoly{0, 1, 1} + IntPoly{0, 0, 1} == IntPoly{0, 1, 2});
    CHECK(IntPoly{1, 2} - IntPoly{1, 2} == IntPoly{});
    CHECK(-IntPoly{1, -2} == IntPoly{-1, 2});
}

TEST_CASE("multiplication") {
    CHECK(IntPoly{1, -1} * IntPoly{1, 1} == IntPoly{1, 0, -1});
    CHECK(IntPoly{1, -1} * IntPoly{1, 1} * IntPoly{1, -1, 1} == IntPoly{1, -1, 0, 1, -1});
    CHECK((IntPoly{1, 2, 3} * IntPoly{}).is_zero());
}

TEST_CASE("ring laws on random inputs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        IntPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("exact division") {
    CHECK(poly_exact_div(IntPoly{1, 0, -1}, IntPoly{1, -1}) == IntPoly{1, 1});
    IntPoly p{2, 0, 5, 1};
    CHECK(poly_exact_div(p, p) == IntPoly{1});
    CHECK_THROWS_AS(poly_exact_div(IntPoly{1, 1}, IntPoly{1, -1}), NotDivisible);
    CHECK_THROWS_AS(poly_exact_div(IntPoly{1, 1, 1}, IntPoly{0, 2}), NotDivisible);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        IntPoly a = random_poly(rng), b = random_poly(rng);
        if (a.is_zero()) continue;
        CHECK(poly_exact_div(a * b, a) == b);
    }
}

TEST_CASE("evaluation") {
    CHECK(IntPoly{1, 1, 1, 1, 1}.eval(2) == 31);
    CHECK(IntPoly{7, -3, 4}.eval(0) == 7);
    CHECK(IntPoly{}.eval(12345) == 0);
    CHECK(IntPoly{0, 0, 1}.eval(-3) == 9);
}

TEST_CASE("text form") {
    CHECK(IntPoly{}.to_text() == "0");
    CHECK(IntPoly{1, 1, 2}.to_text() == "1 + q + 2*q^2");
    CHECK(IntPoly{1, 0, -1}.to_text() == "1 - q^2");
    CHECK(IntPoly{0, 1, 1}.to_text() == "q + q^2");
    CHECK(IntPoly{-2}.to_text() == "-2");
}

TEST_CASE("series expansion of rational forms") {
    TruncatedSeries s = series_rational(IntPoly{1}, {1, 2}, 4);
    CHECK(s.coeffs() == std::vector<mpz_class>{1, 1, 2, 2, 3});

    TruncatedSeries t = series_rational(IntPoly{0, 1, 1}, {1, 2, 3}, 1);
    CHECK(t.coeffs() == std::vector<mpz_class>{0, 1});

    TruncatedSeries u = series_rational(IntPoly{1}, {}, 3);
    CHECK(u.coeffs() == std::vector<mpz_class>{1, 0, 0, 0});
}

TEST_CASE("series times denominator recovers the numerator") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        IntPoly numer = random_poly(rng);
        std::vector<int> exps;
        for (size_t i = 0, m = rng() % 4; i < m; ++i) exps.push_back(static_cast<int>(rng() % 4) + 1);
        int N = 10;
        TruncatedSeries s = series_rational(numer, exps, N);
        IntPoly denom{1};
        for (int k : exps) denom *= one_minus_qk(k);
        TruncatedSeries back = s * TruncatedSeries::truncation_of(denom, N);
        CHECK(back == TruncatedSeries::truncation_of(numer, N));
    }
}

TEST_CASE("series arithmetic") {
    TruncatedSeries a({1, 2, 3}, 2);
    TruncatedSeries b({0, 1, 0}, 2);
    CHECK((a + b).coeffs() == std::vector<mpz_class>{1, 3, 3});
    CHECK((a * b).coeffs() == std::vector<mpz_class>{0, 1, 2});
    CHECK(TruncatedSeries(2).coeffs() == std::vector<mpz_class>{0, 0, 0});
}

TEST_CASE("interpolation") {
    IntPoly p = poly_interpolate({{0, 1}, {1, 0}, {2, -3}});
    CHECK(p == IntPoly{1, 0, -1});
    CHECK(p.eval(2) == -3);

    CHECK(poly_interpolate({{5, 7}}) == IntPoly{7});

    CHECK_THROWS_AS(poly_interpolate({{0, 0}, {2, 1}}), NonIntegerCoefficients);
}

TEST_CASE("interpolation recovers random polynomials") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        IntPoly p = random_poly(rng);
        std::vector<std::pair<mpz_class, mpz_class>> pts;
        for (int x = 0; x <= p.degree() || pts.empty(); ++x) pts.emplace_back(x, p.eval(x));
        CHECK(poly_interpolate(pts) == p);
    }
}

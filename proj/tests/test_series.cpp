#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace gop;

namespace {

Series random_series(std::mt19937& rng, std::size_t K, long height = 20) {
    std::vector<Rat> c(K + 1);
    for (Rat& x : c) x = testing::random_rat(rng, height);
    return Series(std::move(c));
}

/// coefficients of (1-z)e^z: (1-n)/n!
Series one_minus_z_exp(std::size_t K) {
    std::vector<Rat> c(K + 1);
    for (std::size_t n = 0; n <= K; ++n)
        c[n] = Rat(1 - static_cast<long>(n)) / Rat(factorial(n));
    return Series(std::move(c));
}

}  // namespace

TEST_CASE("series arithmetic basics") {
    Series f = exp_series(10);
    CHECK((f - f).is_zero());
    CHECK(f.derivative().truncate(8) == f.truncate(8));
    Series geom = series_from_ratfunc(
        RatFunc(Poly::one(), Poly(std::vector<Rat>{Rat(1), Rat(-1)})), 10);
    for (std::size_t n = 0; n <= 10; ++n) CHECK(geom[n] == 1);
    // (1-z) * geometric = 1
    Series prod = geom.mul_poly(Poly(std::vector<Rat>{Rat(1), Rat(-1)}));
    CHECK(prod[0] == 1);
    for (std::size_t n = 1; n <= 10; ++n) CHECK(prod[n] == 0);
}

TEST_CASE("borel and its inverse are mutually inverse") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        Series f = random_series(rng, 12);
        CHECK(laplace_inverse_of_borel(borel(f)) == f);
        CHECK(borel(laplace_inverse_of_borel(f)) == f);
    }
    CHECK(borel(exp_series(10)) ==
          series_from_ratfunc(RatFunc(Poly::one(), Poly(std::vector<Rat>{Rat(1), Rat(-1)})), 10));
}

TEST_CASE("borel image of (1-z)e^z is (1-2z)/(1-z)^2") {
    Series g = borel(one_minus_z_exp(15));
    Poly omz(std::vector<Rat>{Rat(1), Rat(-1)});
    RatFunc closed(Poly(std::vector<Rat>{Rat(1), Rat(-2)}), omz * omz);
    CHECK(g == series_from_ratfunc(closed, 15));
}

TEST_CASE("variable scaling") {
    Series e2 = scale_variable(exp_series(8), Rat(2));
    for (std::size_t n = 0; n <= 8; ++n)
        CHECK(e2[n] == Rat(Int(1) << n) / Rat(factorial(n)));
    Series f(std::vector<Rat>{Rat(1), Rat(1)});
    CHECK(scale_variable(f, Rat(1)) == f);
    CHECK(scale_variable(f, Rat(1, 3))[1] == Rat(1, 3));
    CHECK_THROWS_AS(scale_variable(f, Rat(0)), std::invalid_argument);
}

TEST_CASE("dividing out a known zero") {
    // f = z, xi = 0 -> 1
    auto r0 = divide_out_zero(Series(std::vector<Rat>{Rat(0), Rat(1), Rat(0)}), Rat(0), 1);
    CHECK(r0.quotient == Series(std::vector<Rat>{Rat(1), Rat(0)}));

    // f = z^2 - 1, xi = 1 -> z + 1
    auto r1 = divide_out_zero(Series(std::vector<Rat>{Rat(-1), Rat(0), Rat(1), Rat(0)}), Rat(1), 2);
    CHECK(r1.quotient == Series(std::vector<Rat>{Rat(1), Rat(1), Rat(0)}));

    // f = (1-z)e^z at xi = 1 -> -e^z for divisor (z-1)
    auto r2 = divide_out_zero(one_minus_z_exp(40), Rat(1), 30);
    Series minus_exp = exp_series(30) * Rat(-1);
    CHECK(r2.quotient == minus_exp);

    // nonvanishing value rejected in checked mode
    CHECK_THROWS_AS(divide_out_zero(exp_series(20), Rat(1), 10), std::domain_error);
    CHECK_NOTHROW(divide_out_zero(exp_series(20), Rat(1), 10, ZeroCheck::assert_zero));
}

TEST_CASE("division is a left inverse of multiplication by z - xi") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        Rat xi = testing::random_rat(rng, 5);
        if (xi == 0) continue;
        Series g = random_series(rng, 14);
        Series f = g.mul_poly(Poly(std::vector<Rat>{-xi, Rat(1)}));
        auto r = divide_out_zero(f, xi, 12, ZeroCheck::assert_zero);
        CHECK(r.quotient == g.truncate(12));
    }
}

TEST_CASE("partial-sum identity for division at 1") {
    // f = (1-z) e^z = (1 - z) g with g = e^z: g_n/n!-scale identity
    // g_n = sum_{k<=n} f_k with E-normalized coefficients
    Series f = one_minus_z_exp(40);
    auto r = divide_out_zero(f, Rat(1), 30);
    for (std::size_t n = 0; n <= 30; ++n) {
        Rat acc = 0;
        for (std::size_t k = 0; k <= n; ++k) acc += f[k];
        // dividing by (z-1) flips the sign of the (1-z)-quotient
        CHECK(-r.quotient[n] == acc);
    }
}

TEST_CASE("denominator profile of the logarithm") {
    ArithmeticProfile p = profile(neg_log1m_series(200), SeriesMode::G);
    CHECK(p.dens[6] == 60);
    for (std::size_t n = 1; n < p.dens.size(); ++n) CHECK(p.dens[n] % p.dens[n - 1] == 0);
    // eps_den trends down toward 0 (prime jumps make it non-monotone pointwise,
    // so compare windows)
    auto window_max = [&](std::size_t a, std::size_t b) {
        double m = 0;
        for (std::size_t i = a; i < b; ++i) m = std::max(m, p.eps_den[i]);
        return m;
    };
    auto window_min = [&](std::size_t a, std::size_t b) {
        double m = 1e9;
        for (std::size_t i = a; i < b; ++i) m = std::min(m, p.eps_den[i]);
        return m;
    };
    CHECK(window_max(150, p.eps_den.size()) < window_min(0, 20));
    CHECK(p.eps_den.back() < 0.25);
}

TEST_CASE("house profile of reference normalizations") {
    ArithmeticProfile pe = profile(exp_series(12), SeriesMode::E);
    for (const Rat& h : pe.houses) CHECK(h == 1);
    for (const Int& d : pe.dens) CHECK(d == 1);

    Series geom = series_from_ratfunc(
        RatFunc(Poly::one(), Poly(std::vector<Rat>{Rat(1), Rat(-1)})), 12);
    ArithmeticProfile pg = profile(geom, SeriesMode::G);
    for (const Rat& h : pg.houses) CHECK(h == 1);
    for (const Int& d : pg.dens) CHECK(d == 1);
}

TEST_CASE("denominator profile preserved by division at 1") {
    // den(g_0..g_n) divides den(f_0..f_n) for E-normalized division witnesses
    Series f = one_minus_z_exp(30);
    auto r = divide_out_zero(f, Rat(1), 20);
    ArithmeticProfile pf = profile(f.truncate(20), SeriesMode::E);
    ArithmeticProfile pg = profile(r.quotient, SeriesMode::E);
    for (std::size_t n = 0; n <= 20; ++n) CHECK(pf.dens[n] % pg.dens[n] == 0);
}

TEST_CASE("hypergeometric generator") {
    // 2F1(1, 1; 1; z) is the geometric series
    Series f = hypergeometric_series(Rat(1), Rat(1), Rat(1), 10);
    for (std::size_t n = 0; n <= 10; ++n) CHECK(f[n] == 1);
    // 2F1(1, 1; 2; z) = -log(1-z)/z
    Series g = hypergeometric_series(Rat(1), Rat(1), Rat(2), 10);
    for (std::size_t n = 0; n <= 10; ++n) CHECK(g[n] == Rat(1, static_cast<long>(n + 1)));
}

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace gop;

namespace {

Series geom_series(std::size_t K) {
    return series_from_ratfunc(RatFunc(Poly::one(), Poly(std::vector<Rat>{Rat(1), Rat(-1)})), K);
}

std::vector<Poly> random_poly_vec(std::mt19937& rng, std::size_t n, int max_deg) {
    std::vector<Poly> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(testing::random_poly(rng, max_deg, 5));
    return v;
}

/// truncated solution stack of the log system
std::vector<Series> log_solution(std::size_t K) {
    return {neg_log1m_series(K), geom_series(K)};
}

}  // namespace

TEST_CASE("approximant solver canonical outputs") {
    // exp, N=1, M=1: unconstrained, tie-break gives Q = 1, P = [1+z]
    PadeSolution sol = solve_pade({exp_series(6)}, 1, 1);
    CHECK(sol.Q == Poly::one());
    REQUIRE(sol.P.size() == 1);
    CHECK(sol.P[0] == Poly(std::vector<Rat>{Rat(1), Rat(1)}));
    CHECK(sol.contact >= 2);
    CHECK(sol.integer_q);

    // geometric series: Q = 1-z is a valid exact annihilating denominator
    Series g = geom_series(8);
    Poly q(std::vector<Rat>{Rat(1), Rat(-1)});
    Series rem = g.mul_poly(q) - series_from_poly(Poly::one(), 8);
    CHECK(rem.is_zero());  // contact is unbounded for this pair

    // exp with a real constraint window: N=2, M=2
    PadeSolution sol2 = solve_pade({exp_series(8)}, 2, 2);
    CHECK(sol2.contact >= 4);
    Series check = exp_series(8).mul_poly(sol2.Q) - series_from_poly(sol2.P[0], 8);
    CHECK(check.order() >= 4);
}

TEST_CASE("two-series simultaneous approximation") {
    std::vector<Series> fs{exp_series(12), geom_series(12)};
    PadeSolution sol = solve_pade(fs, 5, 3);  // n*(M-1) = 4 <= N = 5
    CHECK(sol.Q.degree() <= 5);
    for (std::size_t i = 0; i < 2; ++i) {
        Series rem = fs[i].mul_poly(sol.Q) - series_from_poly(sol.P[i], 12);
        CHECK(static_cast<long>(rem.order()) >= sol.contact);
    }
    CHECK(sol.contact >= 8);
}

TEST_CASE("twisted powers agree with direct formulas") {
    // G = 0: pure derivatives
    MatRF zero1(1);
    VecRF p{RatFunc(Poly::monomial(2))};
    CHECK(twisted_powers(zero1, p, 1)[1][0] == RatFunc(Poly::monomial(1) * Rat(2)));
    CHECK(twisted_powers(zero1, p, 0)[0][0] == p[0]);

    // G = [1], P = [1]: (D-G)P = -1
    MatRF one1(1);
    one1(0, 0) = RatFunc::one();
    CHECK(twisted_power(one1, {Poly::one()}, 1)[0] == RatFunc(Rat(-1)));
}

TEST_CASE("derivative relation on the log system") {
    System sys = testing::log_system();
    std::size_t N = 4, M = 4;
    std::vector<Series> f = log_solution(20);
    PadeSolution sol = solve_pade(f, N, M);
    for (std::size_t m = 0; m <= 3; ++m) CHECK(derivative_relation_check(sys, sol, f, m));

    // corrupting one numerator coefficient breaks the m = 1 step
    PadeSolution bad = sol;
    bad.P[0] += Poly::monomial(1, Rat(1, 7));
    CHECK_FALSE(derivative_relation_check(sys, bad, f, 1));
}

TEST_CASE("iterated-matrix Leibniz identity") {
    std::mt19937 rng(211);
    for (int trial = 0; trial < 25; ++trial) {
        System sys(testing::random_system_matrix(rng, 2, 1, 4));
        IteratedMatrices it = iterate(sys, 5);
        std::vector<Poly> P = random_poly_vec(rng, 2, 2);
        for (std::size_t s = 1; s <= 5; ++s) CHECK(similileibniz_check(it, P, s));
    }

    // corrupted iterated-matrix cache fails
    System sys = testing::log_system();
    IteratedMatrices it = iterate(sys, 3);
    it.cache[2](0, 1) += RatFunc::one();
    CHECK_FALSE(similileibniz_check(it, {Poly::one(), Poly::monomial(1)}, 3));
}

TEST_CASE("twisted degree bound inside the integrality window") {
    System sys = testing::log_system();  // t = 1
    std::size_t N = 6, M = 6;
    std::vector<Series> f = log_solution(24);
    PadeSolution sol = solve_pade(f, N, M);
    for (std::size_t m = 0; m * (sys.t + 1) <= M; ++m)
        CHECK(degree_bound_check(sys, sol, m));
    CHECK_THROWS_AS(degree_bound_check(sys, sol, 100), std::invalid_argument);
}

TEST_CASE("determinant witness") {
    // n = 1, geometric target: R_(0) = [P_0] = [1]
    MatRF g1(1);
    g1(0, 0) = RatFunc(Poly::one(), Poly(std::vector<Rat>{Rat(1), Rat(-1)}));
    System sys{g1};
    PadeWitness w = build_witness(sys, {Poly::one()}, 0);
    CHECK(w.detR0 == RatFunc::one());
    CHECK(w.nonsingular);

    // degenerate zero vector is flagged, not rejected
    PadeWitness wz = build_witness(sys, {Poly::zero()}, 0);
    CHECK_FALSE(wz.nonsingular);

    // log-system witness with a generic solution
    System logsys = testing::log_system();
    std::vector<Series> f = log_solution(20);
    PadeSolution sol = solve_pade(f, 4, 4);
    PadeWitness wl = build_witness(logsys, sol.P, 1);
    CHECK(wl.R.size() == 2);
    CHECK(wl.Ph.size() == 3);
    CHECK(wl.nonsingular);
}

TEST_CASE("solver input validation") {
    CHECK_THROWS_AS(solve_pade({}, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(solve_pade({exp_series(2)}, 3, 3), std::invalid_argument);
}

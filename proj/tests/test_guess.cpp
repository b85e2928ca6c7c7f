#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace gop;

TEST_CASE("recover the exponential operator from 8 terms") {
    Series f = exp_series(7);  // 8 coefficients
    auto g = guess_min_operator(f, 1, 0, 2);
    REQUIRE(g.has_value());
    CHECK(g->order == 1);
    CHECK(g->degree == 0);
    CHECK(g->op == diffop_from_weyl(parse_weyl("D - 1")));
    CHECK(g->verified_to == 7);
}

TEST_CASE("recover the logarithm operator from 20 terms") {
    Series f = neg_log1m_series(19);
    auto g = guess_min_operator(f, 2, 1, 3);
    REQUIRE(g.has_value());
    CHECK(g->order == 2);
    // canonical sign normalization flips (1-z)D^2 - D to (z-1)D^2 + D
    CHECK(g->op == diffop_from_weyl(parse_weyl("(z-1)*D^2 + D")));
    CHECK(apply(g->op, neg_log1m_series(60)).is_zero());
}

TEST_CASE("no low-order annihilator for a generic series") {
    std::mt19937 rng(97);
    std::vector<Rat> c(40);
    for (Rat& x : c) x = testing::random_rat(rng, 50);
    auto g = guess_min_operator(Series(std::move(c)), 2, 2, 6);
    CHECK_FALSE(g.has_value());
}

TEST_CASE("canonical normalization of the guessed operator") {
    // annihilator of 1/(1-z) is (1-z)D - 1; canonical sign makes the
    // top coefficient's leading term positive: (z-1)D + 1
    Series f = series_from_ratfunc(
        RatFunc(Poly::one(), Poly(std::vector<Rat>{Rat(1), Rat(-1)})), 15);
    auto g = guess_min_operator(f, 1, 1, 2);
    REQUIRE(g.has_value());
    CHECK(g->op == diffop_from_weyl(parse_weyl("(z-1)*D + 1")));
}

TEST_CASE("guessing respects the truncation precondition") {
    CHECK_THROWS_AS(guess_min_operator(exp_series(4), 2, 2, 4), std::invalid_argument);
}

TEST_CASE("hypergeometric operator recovered") {
    Series f = hypergeometric_series(Rat(1, 2), Rat(1, 2), Rat(1), 30);
    auto g = guess_min_operator(f, 2, 2, 4);
    REQUIRE(g.has_value());
    CHECK(g->order == 2);
    CHECK(apply(g->op, hypergeometric_series(Rat(1, 2), Rat(1, 2), Rat(1), 60)).is_zero());
    // 4 z(1-z) D^2 + 4(1-2z) D - 1, integer-normalized with positive top lead
    CHECK(g->op == diffop_from_weyl(parse_weyl("(4*z^2 - 4*z)*D^2 + (8*z - 4)*D + 1")));
}

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace gop;

TEST_CASE("operator expressions lower to normal order") {
    CHECK(parse_weyl("D*z") == WeylPoly::z() * WeylPoly::d() + WeylPoly::constant(1));
    CHECK(parse_weyl("z*D") == WeylPoly::z() * WeylPoly::d());
    CHECK(parse_weyl("D*z - z*D") == WeylPoly::constant(1));
    CHECK(parse_weyl("(1-z)*D^2 - D") ==
          (WeylPoly::constant(1) - WeylPoly::z()) * WeylPoly::d().pow(2) - WeylPoly::d());
    CHECK(parse_weyl("3/2") == WeylPoly::constant(Rat(3, 2)));
    CHECK(parse_weyl("-z") == WeylPoly::constant(-1) * WeylPoly::z());
}

TEST_CASE("precedence and mandatory multiplication") {
    CHECK(parse_weyl("z^2*D") == WeylPoly::term(2, 1, 1));
    CHECK(parse_weyl("2*z^3") == WeylPoly::term(3, 0, 2));
    CHECK(parse_weyl("z + z*D^2") ==
          WeylPoly::z() + WeylPoly::z() * WeylPoly::d().pow(2));
    CHECK_THROWS_AS(parse_weyl("z z"), ParseError);
    CHECK_THROWS_AS(parse_weyl("2z"), ParseError);
}

TEST_CASE("syntax errors carry a position") {
    try {
        parse_weyl("z + )");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
    CHECK_THROWS_AS(parse_weyl("D^-1"), ParseError);
    CHECK_THROWS_AS(parse_weyl("(z"), ParseError);
    CHECK_THROWS_AS(parse_weyl(""), ParseError);
    CHECK_THROWS_AS(parse_weyl("z^x"), ParseError);
}

TEST_CASE("division rejected in operator text but allowed in literals") {
    CHECK_THROWS_AS(parse_weyl("z/D"), ParseError);
    CHECK_THROWS_AS(parse_weyl("D/2"), ParseError);
    CHECK(parse_weyl("1/2*D") == WeylPoly::term(0, 1, Rat(1, 2)));
}

TEST_CASE("rational function expressions") {
    RatFunc f = parse_ratfunc("1/(1-z)");
    CHECK(f == RatFunc(Poly::one(), Poly(std::vector<Rat>{Rat(1), Rat(-1)})));
    CHECK(parse_ratfunc("(z^2 - 1)/(z - 1)") ==
          RatFunc(Poly(std::vector<Rat>{Rat(1), Rat(1)})));
    CHECK(parse_ratfunc("-1/2") == RatFunc(Rat(-1, 2)));
    CHECK_THROWS_AS(parse_ratfunc("1/(z - z)"), ParseError);
    CHECK_THROWS_AS(parse_ratfunc("D"), ParseError);
}

TEST_CASE("serialization round-trips") {
    std::mt19937 rng(211);
    std::uniform_int_distribution<unsigned long> pw(0, 3);
    std::uniform_int_distribution<int> nterms(1, 5);
    for (int trial = 0; trial < 100; ++trial) {
        WeylPoly w;
        int n = nterms(rng);
        for (int k = 0; k < n; ++k) w.add_term(pw(rng), pw(rng), testing::random_rat(rng, 9));
        CHECK(parse_weyl(weyl_to_string(w)) == w);
    }
    for (int trial = 0; trial < 100; ++trial) {
        RatFunc f = testing::random_ratfunc(rng, 3, 9);
        CHECK(parse_ratfunc(ratfunc_to_string(f)) == f);
    }
    for (int trial = 0; trial < 50; ++trial) {
        Poly p = testing::random_poly(rng, 5, 9);
        CHECK(parse_ratfunc(poly_to_string(p)) == RatFunc(p));
    }
}

TEST_CASE("operator round-trip through the Weyl algebra") {
    std::mt19937 rng(223);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<RatFunc> coeffs;
        for (int k = 0; k < 3; ++k) coeffs.emplace_back(testing::random_poly(rng, 3, 9));
        if (coeffs.back().is_zero()) coeffs.back() = RatFunc::one();
        DiffOp L{coeffs};
        CHECK(diffop_from_weyl(weyl_from_diffop(L)) == L);
    }
}

#include <catch2/catch_amalgamated.hpp>

#include "wreathcoh/arith.hpp"

using namespace wreathcoh;

TEST_CASE("exponents of graded groups") {
    SECTION("trivial input") {
        ExponentPair ex = exponents_of_graded(Graded{});
        REQUIRE(ex.e == 1);
        REQUIRE(ex.ee == 1);
        REQUIRE_FALSE(ex.ambiguous);
    }
    SECTION("finite summands only bound e") {
        Graded h;
        h.add(1, 2);
        h.add(2, 4);
        h.add(5, 6);
        ExponentPair ex = exponents_of_graded(h);
        REQUIRE(ex.e == 12);
        REQUIRE(ex.ee == 1);
    }
    SECTION("periodic families feed the eventual exponent") {
        Graded h;
        h.add(3, 8);
        h.add_tail(2, 2, 4);
        ExponentPair ex = exponents_of_graded(h);
        REQUIRE(ex.e == 8);
        REQUIRE(ex.ee == 4);
    }
    SECTION("an infinite cyclic summand in positive degree unbounds both") {
        Graded h;
        h.add(2, 0);
        h.add_tail(4, 2, 0);
        ExponentPair ex = exponents_of_graded(h);
        REQUIRE(ex.e == 0);
        REQUIRE(ex.ee == 0);
    }
    SECTION("degree zero does not count") {
        Graded h;
        h.add(0, 0);
        ExponentPair ex = exponents_of_graded(h);
        REQUIRE(ex.e == 1);
        REQUIRE(ex.ee == 1);
    }
}

TEST_CASE("the odd-degree escape clause at p = 2") {
    SECTION("maximal order confined to odd degrees") {
        Graded h;
        h.add(3, 4);
        h.add(2, 2);
        REQUIRE(p2_exponent_caveat(h));
    }
    SECTION("maximal order in an even degree") {
        Graded h;
        h.add(2, 4);
        REQUIRE_FALSE(p2_exponent_caveat(h));
    }
    SECTION("maximal order recurring forever") {
        Graded h;
        h.add(3, 4);
        h.add_tail(5, 2, 4);
        REQUIRE_FALSE(p2_exponent_caveat(h));
    }
    SECTION("degenerate exponents never qualify") {
        Graded z;
        z.add(1, 0);
        REQUIRE_FALSE(p2_exponent_caveat(z));
        REQUIRE_FALSE(p2_exponent_caveat(Graded{}));
    }
}

TEST_CASE("exponents across a wreath step") {
    ExponentPair g;
    g.e = g.e_upper = 3;
    g.ee = 3;
    SECTION("odd primes always multiply") {
        ExponentPair out = wreath_exponents(g, 3, false);
        REQUIRE(out.e == 9);
        REQUIRE(out.e_upper == 9);
        REQUIRE(out.ee == 9);
        REQUIRE_FALSE(out.ambiguous);
    }
    SECTION("p = 2 under the caveat leaves a two-way ambiguity") {
        ExponentPair h;
        h.e = h.e_upper = h.ee = 4;
        ExponentPair out = wreath_exponents(h, 2, true);
        REQUIRE(out.e == 4);
        REQUIRE(out.e_upper == 8);
        REQUIRE(out.ee == 8);
        REQUIRE(out.ambiguous);
        // a later unambiguous step keeps both candidates alive
        ExponentPair next = wreath_exponents(out, 2, false);
        REQUIRE(next.e == 8);
        REQUIRE(next.e_upper == 16);
        REQUIRE(next.ee == 16);
        REQUIRE(next.ambiguous);
    }
}

TEST_CASE("support variety dimensions") {
    SECTION("one wreath step") {
        REQUIRE(dim_w_wreath({}, 2) == std::vector<Int>{1});
        REQUIRE(dim_w_wreath({1}, 2) == std::vector<Int>{2, 1});
        REQUIRE(dim_w_wreath({3}, 2) == std::vector<Int>{6, 3});
        REQUIRE(dim_w_wreath({1, 1}, 2) == std::vector<Int>{2, 2, 1});
        REQUIRE(dim_w_wreath({2, 1}, 3) == std::vector<Int>{6, 3, 1});
    }
    SECTION("symmetric groups from base-p digits") {
        REQUIRE(dim_w_symmetric(6, 2, 0) == 3);
        REQUIRE(dim_w_symmetric(6, 2, 1) == 1);
        REQUIRE(dim_w_symmetric(6, 2, 2) == 0);
        for (int i = 0; i <= 2; ++i)
            REQUIRE(dim_w_symmetric(27, 3, i) == pow_int(3, static_cast<unsigned long>(2 - i)));
        REQUIRE(dim_w_symmetric(27, 3, 3) == 0);
        REQUIRE(dim_w_symmetric(0, 5, 0) == 0);
    }
    SECTION("euler characteristic valuation") {
        REQUIRE(nu_p_che({6, 3}) == 9);
        REQUIRE(nu_p_che({}) == 0);
    }
}

TEST_CASE("tower walkthroughs") {
    SECTION("elementary abelian base, one step") {
        TowerReport r = run_tower("E:2^3 wr C_2");
        REQUIRE(r.p == 2);
        REQUIRE(r.steps == 1);
        REQUIRE(r.dims == std::vector<Int>{6, 3});
        REQUIRE(r.nu_che == 9);
        REQUIRE(r.nu_order == 7);
        REQUIRE(r.exps.e == 4);
        REQUIRE(r.exps.ee == 4);
        REQUIRE_FALSE(r.exps.ambiguous);
    }
    SECTION("the euler bound exceeds half the order valuation") {
        // 2n + n against n + 1 at one step up from rank n
        for (int n : {2, 3, 4}) {
            TowerReport r = run_tower("E:3^" + std::to_string(n) + " wr C_3");
            REQUIRE(r.nu_che == 3 * n + n);
            REQUIRE(r.nu_order == 3 * n + 1);
        }
    }
    SECTION("cyclic base, two steps") {
        TowerReport r = run_tower("C:8 wr C_2 wr C_2");
        REQUIRE(r.steps == 2);
        REQUIRE(r.dims == std::vector<Int>{4, 4, 4, 2, 1});
        REQUIRE(r.nu_che == 15);
        REQUIRE(r.nu_order == 15);
        REQUIRE(r.exps.e == 32);
        REQUIRE(r.exps.ee == 32);
    }
    SECTION("iterated regular wreathing keeps exponent and order in step") {
        TowerReport r = run_tower("C:3 wr C_3 wr C_3");
        REQUIRE(r.exps.e == 27);
        REQUIRE(r.exps.ee == 27);
        REQUIRE(r.nu_order == 13);
        TowerReport s = run_tower("C:2");
        REQUIRE(s.steps == 0);
        REQUIRE(s.dims == std::vector<Int>{1});
        REQUIRE(s.nu_che == 1);
    }
    SECTION("odd prime base") {
        TowerReport r = run_tower("C:9 wr C_3");
        REQUIRE(r.dims == std::vector<Int>{3, 3, 1});
        REQUIRE(r.nu_che == 7);
        REQUIRE(r.nu_order == 7);
        REQUIRE(r.exps.e == 27);
    }
    SECTION("malformed descriptions") {
        REQUIRE_THROWS_AS(run_tower(""), Error);
        REQUIRE_THROWS_AS(run_tower("D:4"), Error);
        REQUIRE_THROWS_AS(run_tower("C:1"), Error);
        REQUIRE_THROWS_AS(run_tower("C:6"), Error);
        REQUIRE_THROWS_AS(run_tower("C:8 wr C_3"), Error);
        REQUIRE_THROWS_AS(run_tower("C:8 wr"), Error);
        REQUIRE_THROWS_AS(run_tower("C:8 times C_2"), Error);
        REQUIRE_THROWS_AS(run_tower("C:8 wr D_2"), Error);
        REQUIRE_THROWS_AS(run_tower("E:4^2 wr C_2"), Error);
        REQUIRE_THROWS_AS(run_tower("E:3 wr C_3"), Error);
        REQUIRE_THROWS_AS(run_tower("E:3^0"), Error);
    }
}

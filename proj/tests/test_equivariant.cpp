#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "wreathcoh/equivariant.hpp"

using namespace wreathcoh;

TEST_CASE("cyclic power actions") {
    SECTION("square of a degree-1 block: top class is anti-invariant") {
        CyclicPower cp = cyclic_power(build_cyclic_complex(2, 1), 2);
        cp.ec.validate();
        REQUIRE(cp.ec.action_matrix(2) == Mat::from_rows({{-1}}, 1));
        // bottom degree 0 is g-degree 0 twice: plain fixed point
        REQUIRE(cp.ec.action_matrix(0) == Mat::identity(1));
    }
    SECTION("cube of a degree-1 block: top class is invariant") {
        CyclicPower cp = cyclic_power(build_cyclic_complex(2, 1), 3);
        cp.ec.validate();
        REQUIRE(cp.ec.action_matrix(3) == Mat::from_rows({{1}}, 1));
    }
    SECTION("square of a degree-2 block") {
        CyclicPower cp = cyclic_power(build_cyclic_complex(3, 2), 2);
        cp.ec.validate();
        REQUIRE(cp.ec.action_matrix(4) == Mat::from_rows({{1}}, 1));
        REQUIRE(cp.ec.action_matrix(2) == Mat::from_rows({{-1}}, 1));
        // middle degree: bare swap, both crossings even
        REQUIRE(cp.ec.action_matrix(3) == Mat::from_rows({{0, 1}, {1, 0}}, 2));
    }
    SECTION("index/tuple conversion round trips") {
        CyclicPower cp = cyclic_power(build_cyclic_complex(2, 1), 3);
        const CochainComplex& c = cp.ec.c;
        for (int m = c.lo; m <= c.hi; ++m)
            for (std::size_t idx = 0; idx < c.rank(m); ++idx) {
                auto tup = cp.tuple_of(m, idx);
                int sum = 0;
                for (const auto& [deg, k] : tup)
                    sum += deg;
                REQUIRE(sum == m);
                REQUIRE(cp.index_of(tup) == idx);
            }
    }
    SECTION("rank pattern of the cube of a two-term block") {
        CyclicPower cp = cyclic_power(build_cyclic_complex(2, 2), 3);
        for (int jp = 0; jp <= 3; ++jp)
            REQUIRE(Int(cp.ec.c.rank(6 - jp)) == binom(3, jp));
    }
}

TEST_CASE("periodic resolution") {
    for (int p : {2, 3, 5}) {
        Resolution w = periodic_resolution(p);
        SECTION("boundary elements for p = " + std::to_string(p)) {
            Vec tm1(static_cast<std::size_t>(p), 0);
            tm1[0] = -1;
            tm1[1 % p] += 1;
            REQUIRE(w.boundary_element(1) == tm1);
            REQUIRE(w.boundary_element(3) == tm1);
            REQUIRE(w.boundary_element(2) == Vec(static_cast<std::size_t>(p), 1));
        }
        SECTION("composites vanish and kernels are exactly images, p = " + std::to_string(p)) {
            for (int i = 1; i <= 4; ++i) {
                REQUIRE((w.boundary_matrix(i) * w.boundary_matrix(i + 1)).is_zero());
                REQUIRE(subquotient(kernel(w.boundary_matrix(i)), w.boundary_matrix(i + 1)).trivial());
            }
        }
    }
    SECTION("order 2 special case") {
        Resolution w = periodic_resolution(2);
        REQUIRE(w.boundary_element(1) == Vec{-1, 1});
        REQUIRE(w.boundary_matrix(2) == Mat::from_rows({{1, 1}, {1, 1}}, 2));
    }
}

TEST_CASE("cyclic group cohomology of small modules") {
    for (int p : {2, 3, 5}) {
        Mat triv = Mat::identity(1);
        REQUIRE(cp_cohomology(p, triv, 0) == std::vector<Int>{0});
        REQUIRE(cp_cohomology(p, triv, 1).empty());
        REQUIRE(cp_cohomology(p, triv, 2) == std::vector<Int>{p});
        REQUIRE(cp_cohomology(p, triv, 3).empty());
        REQUIRE(cp_cohomology(p, triv, 4) == std::vector<Int>{p});

        Resolution w = periodic_resolution(p);
        Mat regular = w.regular_rep();
        REQUIRE(cp_cohomology(p, regular, 0) == std::vector<Int>{0});
        for (int i = 1; i <= 3; ++i)
            REQUIRE(cp_cohomology(p, regular, i).empty());
    }
    SECTION("sign representation of the order-2 group") {
        Mat sgn = Mat::from_rows({{-1}}, 1);
        REQUIRE(cp_cohomology(2, sgn, 0).empty());
        REQUIRE(cp_cohomology(2, sgn, 1) == std::vector<Int>{2});
        REQUIRE(cp_cohomology(2, sgn, 2).empty());
        REQUIRE(cp_cohomology(2, sgn, 3) == std::vector<Int>{2});
    }
}

TEST_CASE("hom double complex over the periodic resolution") {
    CyclicPower cp = cyclic_power(build_cyclic_complex(2, 1), 2);
    Resolution w = periodic_resolution(2);
    DoubleComplex dc = equivariant_hom_double_complex(w, cp.ec, 6);
    dc.validate();
    REQUIRE(dc.i_lo == 0);
    REQUIRE(dc.i_hi == 6);
    REQUIRE(dc.j_lo == 0);
    REQUIRE(dc.j_hi == 2);
    for (int i = 0; i <= 6; ++i)
        for (int j = 0; j <= 2; ++j)
            REQUIRE(dc.rank(i, j) == cp.ec.c.rank(j));
    // out of even columns: t - 1; on the anti-invariant top row that is -2
    REQUIRE(dc.horiz(0, 2) == Mat::from_rows({{-2}}, 1));
    // out of odd columns: the norm, which kills the top row entirely
    REQUIRE(dc.horiz(1, 2) == Mat(1, 1));
    // on the invariant bottom row the roles flip
    REQUIRE(dc.horiz(0, 0) == Mat(1, 1));
    REQUIRE(dc.horiz(1, 0) == Mat::from_rows({{2}}, 1));
}

TEST_CASE("totalization certificates") {
    CyclicPower cp = cyclic_power(build_cyclic_complex(2, 1), 2);
    Resolution w = periodic_resolution(2);
    DoubleComplex dc = equivariant_hom_double_complex(w, cp.ec, 10);
    SECTION("margin and width are enforced") {
        REQUIRE_THROWS_AS(totalize(dc, 0, 4, 1), Error);
        REQUIRE_THROWS_AS(totalize(dc, 0, 20, 4), Error);
    }
    SECTION("stored range and certificate") {
        TotalComplex tot = totalize(dc, 0, 5, 4);
        tot.c.validate();
        REQUIRE(tot.c.truncated);
        REQUIRE(tot.c.cert_hi == 5);
        REQUIRE(tot.c.hi == 6);
        REQUIRE_NOTHROW(cohomology_at(tot.c, 5));
        REQUIRE_THROWS_AS(cohomology_at(tot.c, 6), Error);
    }
    SECTION("block layout offsets") {
        TotalComplex tot = totalize(dc, 0, 5, 4);
        // degree 2 blocks: columns 0 (j=2), 1 (j=1), 2 (j=0)
        REQUIRE(tot.offset_of(2, 0) == 0);
        REQUIRE(tot.offset_of(2, 1) == cp.ec.c.rank(2));
        REQUIRE_THROWS_AS(tot.offset_of(2, 7), Error);
    }
}

TEST_CASE("brute force wreath cohomology of an infinite cyclic class") {
    SECTION("degree-1 class, order-2 twist") {
        WreathModel wm = build_wreath_model(build_cyclic_complex(0, 1), 2, 0, 6);
        auto h = cohomology(wm.tot.c, 0, 6).primary_by_degree(0, 6);
        // the square of the generator is anti-invariant, so only odd twists survive
        REQUIRE(h.count(2) == 0);
        REQUIRE(h.at(3) == std::vector<Int>{2});
        REQUIRE(h.count(4) == 0);
        REQUIRE(h.at(5) == std::vector<Int>{2});
        REQUIRE(h.count(0) == 0);
        REQUIRE(h.count(1) == 0);
    }
    SECTION("degree-2 class, order-2 twist") {
        WreathModel wm = build_wreath_model(build_cyclic_complex(0, 2), 2, 0, 7);
        auto h = cohomology(wm.tot.c, 0, 7).primary_by_degree(0, 7);
        REQUIRE(h.at(4) == std::vector<Int>{0});
        REQUIRE(h.at(6) == std::vector<Int>{2});
        REQUIRE(h.count(5) == 0);
        REQUIRE(h.count(7) == 0);
    }
}

TEST_CASE("diagonal classes in the total complex") {
    SECTION("order multiplies by p when p divides it") {
        WreathModel wm = build_wreath_model(build_cyclic_complex(3, 2), 3, 0, 7);
        Cocycle w = wreath_class_cocycle(wm, {2, {1}});
        REQUIRE(w.degree == 6);
        REQUIRE(cocycle_order(wm.tot.c, w) == 9);
    }
    SECTION("order is preserved when coprime to p") {
        WreathModel wm = build_wreath_model(build_cyclic_complex(3, 2), 2, 0, 5);
        Cocycle w = wreath_class_cocycle(wm, {2, {1}});
        REQUIRE(w.degree == 4);
        REQUIRE(cocycle_order(wm.tot.c, w) == 3);
    }
    SECTION("order 2 twist of an order 2 class") {
        WreathModel wm = build_wreath_model(build_cyclic_complex(2, 2), 2, 0, 5);
        REQUIRE(cocycle_order(wm.tot.c, wreath_class_cocycle(wm, {2, {1}})) == 4);
    }
    SECTION("odd-degree input is rejected for odd p") {
        WreathModel wm = build_wreath_model(build_cyclic_complex(2, 1), 3, 0, 4);
        try {
            wreath_class_cocycle(wm, {1, {1}});
            FAIL("expected a rejection");
        } catch (const Error& e) {
            REQUIRE(std::string(e.what()).find("odd-degree") != std::string::npos);
        }
    }
    SECTION("odd-degree square fails closedness for p = 2") {
        WreathModel wm = build_wreath_model(build_cyclic_complex(0, 1), 2, 0, 4);
        try {
            wreath_class_cocycle(wm, {1, {1}});
            FAIL("expected a closedness failure");
        } catch (const Error& e) {
            REQUIRE(std::string(e.what()).find("not closed") != std::string::npos);
        }
    }
    SECTION("non-cocycle input is rejected") {
        WreathModel wm = build_wreath_model(build_cyclic_complex(2, 2), 2, 0, 5);
        REQUIRE_THROWS_AS(wreath_class_cocycle(wm, {1, {1}}), Error);
    }
}

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "wreathcoh/complexes.hpp"

using namespace wreathcoh;

namespace {

std::map<int, std::vector<Int>> degrees_of(const Graded& h, int lo, int hi) {
    return h.primary_by_degree(lo, hi);
}

/* independent expected value for H(a (x) b): summand-by-summand products in
 * degree i+j plus torsion overlaps one degree below */
Graded kunneth_oracle(const Graded& ha, const Graded& hb, int lo, int hi) {
    Graded out;
    auto expand = [&](const Graded& h) {
        std::vector<std::pair<int, Int>> v;
        for (const auto& f : h.restrict(lo - 1, hi + 1).families)
            for (long long k = 0; k < f.multiplicity; ++k)
                v.push_back({f.first_degree, f.order});
        return v;
    };
    auto a = expand(ha), b = expand(hb);
    for (const auto& [ia, na] : a)
        for (const auto& [ib, nb] : b) {
            Int prod;
            if (na == 0 && nb == 0)
                prod = 0;
            else if (na == 0)
                prod = nb;
            else if (nb == 0)
                prod = na;
            else
                prod = gcd(na, nb);
            out.add(ia + ib, prod);
            if (na != 0 && nb != 0)
                out.add(ia + ib - 1, gcd(na, nb));
        }
    return out.restrict(lo, hi);
}

Graded random_graded(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 3), count(1, 3), pick(0, 5);
    const Int orders[] = {Int(0), Int(2), Int(3), Int(4), Int(6), Int(9)};
    Graded h;
    int c = count(rng);
    for (int k = 0; k < c; ++k)
        h.add(deg(rng), orders[pick(rng)]);
    return h;
}

}  // namespace

TEST_CASE("cyclic building blocks") {
    SECTION("torsion block") {
        CochainComplex c = build_cyclic_complex(6, 2);
        c.validate();
        REQUIRE(c.lo == 1);
        REQUIRE(c.hi == 2);
        REQUIRE(c.rank(1) == 1);
        REQUIRE(c.rank(2) == 1);
        REQUIRE(c.rank(0) == 0);
        REQUIRE(c.d(1).at(0, 0) == 6);
        REQUIRE(c.label(1) == std::vector<std::string>{"lower"});
        REQUIRE(c.label(2) == std::vector<std::string>{"g"});
        auto h = degrees_of(cohomology(c, 0, 3), 0, 3);
        REQUIRE(h.size() == 1);
        REQUIRE(h.at(2) == std::vector<Int>{2, 3});
    }
    SECTION("infinite cyclic block") {
        CochainComplex c = build_cyclic_complex(0, 3);
        c.validate();
        REQUIRE(c.lo == 3);
        REQUIRE(c.hi == 3);
        auto h = degrees_of(cohomology(c, 0, 4), 0, 4);
        REQUIRE(h.at(3) == std::vector<Int>{0});
    }
    SECTION("unit block is acyclic") {
        CochainComplex c = build_cyclic_complex(1, 2);
        c.validate();
        REQUIRE(cohomology(c, 0, 3).families.empty());
    }
    SECTION("negative order rejected") { REQUIRE_THROWS_AS(build_cyclic_complex(-2, 1), Error); }
}

TEST_CASE("direct sums") {
    CochainComplex c = direct_sum({build_cyclic_complex(2, 1), build_cyclic_complex(3, 1)});
    c.validate();
    REQUIRE(c.rank(1) == 2);
    REQUIRE(c.rank(0) == 2);
    REQUIRE(c.label(1) == std::vector<std::string>{"0:g", "1:g"});
    auto h = degrees_of(cohomology(c, 0, 2), 0, 2);
    REQUIRE(h.at(1) == std::vector<Int>{2, 3});
    REQUIRE(h.count(0) == 0);

    SECTION("sum with an infinite block") {
        CochainComplex s = direct_sum({build_cyclic_complex(0, 2), build_cyclic_complex(4, 2)});
        auto hs = degrees_of(cohomology(s, 0, 3), 0, 3);
        REQUIRE(hs.at(2) == std::vector<Int>{0, 4});
    }
}

TEST_CASE("tensor product differentials carry the alternating sign") {
    CochainComplex t = tensor(build_cyclic_complex(2, 1), build_cyclic_complex(3, 1));
    t.validate();
    REQUIRE(t.lo == 0);
    REQUIRE(t.hi == 2);
    REQUIRE(t.rank(0) == 1);
    REQUIRE(t.rank(1) == 2);
    REQUIRE(t.rank(2) == 1);
    // basis in degree 1: left factor degree 0 first
    REQUIRE(t.label(1) == std::vector<std::string>{"lower⊗g", "g⊗lower"});
    REQUIRE(t.d(0) == Mat::from_rows({{3}, {2}}, 1));
    REQUIRE(t.d(1) == Mat::from_rows({{2, -3}}, 2));

    SECTION("rank pattern of iterated powers") {
        CochainComplex c = build_cyclic_complex(5, 1);
        CochainComplex p = c;
        for (int k = 1; k < 4; ++k)
            p = tensor(p, c);
        p.validate();
        for (int j = 0; j <= 4; ++j)
            REQUIRE(Int(p.rank(j)) == binom(4, j));
    }
}

TEST_CASE("tensor cohomology matches the product-plus-overlap expansion") {
    SECTION("pinned: two odd-torsion blocks") {
        CochainComplex t = tensor(build_cyclic_complex(3, 1), build_cyclic_complex(3, 1));
        auto h = degrees_of(cohomology(t, 0, 3), 0, 3);
        REQUIRE(h.at(1) == std::vector<Int>{3});  // overlap class below the product
        REQUIRE(h.at(2) == std::vector<Int>{3});
        REQUIRE(h.count(0) == 0);
        REQUIRE(h.count(3) == 0);
    }
    SECTION("pinned: third power") {
        CochainComplex c = build_cyclic_complex(3, 1);
        CochainComplex t = tensor(tensor(c, c), c);
        auto h = degrees_of(cohomology(t, 0, 3), 0, 3);
        REQUIRE(h.at(1) == std::vector<Int>{3});
        REQUIRE(h.at(2) == std::vector<Int>{3, 3});
        REQUIRE(h.at(3) == std::vector<Int>{3});
    }
    SECTION("pinned: coprime orders annihilate") {
        CochainComplex t = tensor(build_cyclic_complex(2, 1), build_cyclic_complex(3, 1));
        REQUIRE(cohomology(t, 0, 3).families.empty());
    }
    SECTION("pinned: free times torsion") {
        CochainComplex t = tensor(build_cyclic_complex(0, 1), build_cyclic_complex(2, 1));
        auto h = degrees_of(cohomology(t, 0, 3), 0, 3);
        REQUIRE(h.size() == 1);
        REQUIRE(h.at(2) == std::vector<Int>{2});
    }
    SECTION("randomized against the oracle") {
        std::mt19937 rng(4242);
        for (int trial = 0; trial < 15; ++trial) {
            Graded h1 = random_graded(rng), h2 = random_graded(rng);
            CochainComplex a = complex_from_graded(h1, 5);
            CochainComplex b = complex_from_graded(h2, 5);
            CochainComplex t = tensor(a, b);
            t.validate();
            Graded expect = kunneth_oracle(h1, h2, 0, 7);
            Graded got = cohomology(t, 0, 7);
            INFO("trial " << trial);
            REQUIRE(expect.equal_on(got, 0, 7));
        }
    }
}

TEST_CASE("certified windows are enforced") {
    CochainComplex c = build_cyclic_complex(4, 2);
    c.truncated = true;
    c.cert_lo = 1;
    c.cert_hi = 2;
    REQUIRE(cohomology_at(c, 2).factors == std::vector<Int>{4});
    REQUIRE_THROWS_AS(cohomology_at(c, 3), Error);
    REQUIRE_THROWS_AS(cohomology(c, 0, 3), Error);
}

TEST_CASE("order of a cocycle class") {
    CochainComplex c = build_cyclic_complex(6, 2);
    REQUIRE(cocycle_order(c, {2, {1}}) == 6);
    REQUIRE(cocycle_order(c, {2, {2}}) == 3);
    REQUIRE(cocycle_order(c, {2, {3}}) == 2);
    REQUIRE(cocycle_order(c, {2, {6}}) == 1);
    REQUIRE(cocycle_order(c, {2, {-5}}) == 6);
    SECTION("infinite order") {
        CochainComplex z = build_cyclic_complex(0, 2);
        REQUIRE(cocycle_order(z, {2, {1}}) == 0);
    }
    SECTION("non-cocycles are rejected") {
        REQUIRE_THROWS_AS(cocycle_order(c, {1, {1}}), Error);
    }
    SECTION("degree outside the complex") {
        REQUIRE(cocycle_order(c, {5, {}}) == 1);
    }
}

TEST_CASE("models built from graded data realize it") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 20; ++trial) {
        Graded h = random_graded(rng);
        CochainComplex c = complex_from_graded(h, 6);
        c.validate();
        REQUIRE(h.equal_on(cohomology(c, 0, 6), 0, 6));
    }
    SECTION("empty input gives an empty complex") {
        CochainComplex c = complex_from_graded(Graded{}, 4);
        REQUIRE(cohomology(c, 0, 4).families.empty());
    }
}

TEST_CASE("induced maps on cohomology") {
    CochainComplex a = build_cyclic_complex(4, 1);
    CochainComplex b = build_cyclic_complex(2, 1);
    SECTION("identity induces the identity") {
        std::map<int, Mat> f{{0, Mat::identity(1)}, {1, Mat::identity(1)}};
        Mat m = induced_map_on_cohomology(a, a, f, 1);
        REQUIRE(m == Mat::identity(1));
    }
    SECTION("reduction from order 4 to order 2") {
        // x -> x on top generators forces doubling below: 1*4 = 2*2
        std::map<int, Mat> f{{0, Mat::from_rows({{2}}, 1)}, {1, Mat::identity(1)}};
        Mat m = induced_map_on_cohomology(a, b, f, 1);
        REQUIRE(m == Mat::identity(1));
    }
    SECTION("multiplication by the order kills the class") {
        std::map<int, Mat> f{{0, Mat::from_rows({{2}}, 1)}, {1, Mat::from_rows({{2}}, 1)}};
        Mat m = induced_map_on_cohomology(b, b, f, 1);
        REQUIRE(m == Mat(1, 1));
    }
    SECTION("non chain maps are rejected with the offending degree") {
        std::map<int, Mat> f{{0, Mat(1, 1)}, {1, Mat::identity(1)}};
        try {
            induced_map_on_cohomology(a, a, f, 1);
            FAIL("expected a chain-map failure");
        } catch (const Error& e) {
            REQUIRE(std::string(e.what()).find("degree 0") != std::string::npos);
        }
    }
}

#include <catch2/catch_amalgamated.hpp>

#include <utility>

#include "wreathcoh/spectral.hpp"

using namespace wreathcoh;

namespace {

// (number of infinite factors, product of the finite ones)
std::pair<std::size_t, Int> order_parts(const std::vector<Int>& factors) {
    std::size_t zeros = 0;
    Int tors = 1;
    for (const auto& f : factors) {
        if (f == 0)
            ++zeros;
        else
            tors *= f;
    }
    return {zeros, tors};
}

void check_composites_vanish(const Page& pg) {
    for (const auto& e : pg.entries) {
        if (!e.has_d)
            continue;
        const PageEntry* t = pg.find(e.ti, e.tj);
        if (t == nullptr || !t->has_d)
            continue;
        const PageEntry* f = pg.find(t->ti, t->tj);
        if (f == nullptr)
            continue;
        Mat comp = t->d * e.d;
        for (std::size_t r = 0; r < comp.rows(); ++r)
            for (std::size_t c = 0; c < comp.cols(); ++c) {
                INFO("page " << pg.r << " source (" << e.i << "," << e.j << ") row " << r);
                if (f->factors[r] == 0)
                    REQUIRE(comp.at(r, c) == 0);
                else
                    REQUIRE(comp.at(r, c) % f->factors[r] == 0);
            }
    }
}

}  // namespace

TEST_CASE("first page under the column filtration is columnwise cohomology") {
    WreathModel wm = build_wreath_model(build_cyclic_complex(3, 1), 3, 0, 6);
    PageComputer pc(wm.e0, Kind::I);
    const CochainComplex& d = wm.power.ec.c;
    for (int i = 0; i <= 4; ++i)
        for (int j = d.lo; j <= d.hi; ++j) {
            INFO("entry (" << i << "," << j << ")");
            REQUIRE(pc.entry(1, i, j).factors == cohomology_at(d, j).factors);
        }
}

TEST_CASE("first page under the row filtration is rowwise group cohomology") {
    WreathModel wm = build_wreath_model(build_cyclic_complex(3, 1), 3, 0, 6);
    PageComputer pc(wm.e0, Kind::II);
    const CochainComplex& d = wm.power.ec.c;
    for (int j = d.lo; j <= d.hi; ++j) {
        Mat act = wm.power.ec.action_matrix(j);
        for (int i = 0; i <= 4; ++i) {
            INFO("entry (" << i << "," << j << ")");
            REQUIRE(pc.entry(1, i, j).factors == cp_cohomology(3, act, i));
        }
    }
}

TEST_CASE("certification bookkeeping") {
    WreathModel wm = build_wreath_model(build_cyclic_complex(2, 1), 2, 0, 5);
    PageComputer pc(wm.e0, Kind::II);
    REQUIRE(pc.cert_total_hi() == wm.e0.i_hi - 1);
    REQUIRE(pc.certified(0, wm.e0.i_hi - 1));
    REQUIRE_FALSE(pc.certified(wm.e0.i_hi, 0));
    REQUIRE(pc.stable_r() == wm.e0.j_hi - wm.e0.j_lo + 2);
}

TEST_CASE("consecutive differentials compose to zero") {
    WreathModel wm = build_wreath_model(build_cyclic_complex(2, 1), 3, 0, 7);
    for (Kind k : {Kind::I, Kind::II}) {
        PageComputer pc(wm.e0, k);
        for (int r = 1; r <= 4; ++r)
            check_composites_vanish(pc.page(r, 0, 7));
    }
}

TEST_CASE("later pages are subquotients of earlier ones") {
    WreathModel wm = build_wreath_model(build_cyclic_complex(2, 1), 3, 0, 7);
    for (Kind k : {Kind::I, Kind::II}) {
        PageComputer pc(wm.e0, k);
        Page prev = pc.page(1, 0, 7);
        for (int r = 2; r <= 5; ++r) {
            Page cur = pc.page(r, 0, 7);
            for (const auto& e : cur.entries) {
                const PageEntry* old = prev.find(e.i, e.j);
                INFO("page " << r << " entry (" << e.i << "," << e.j << ")");
                REQUIRE(old != nullptr);
                auto [z_new, t_new] = order_parts(e.factors);
                auto [z_old, t_old] = order_parts(old->factors);
                REQUIRE(z_new <= z_old);
                if (z_old == 0) {
                    REQUIRE(z_new == 0);
                    REQUIRE(t_old % t_new == 0);
                }
            }
            prev = std::move(cur);
        }
    }
}

TEST_CASE("limit page orders multiply out to the total cohomology") {
    struct Probe {
        int n, p, hi;
    };
    for (Probe pr : {Probe{2, 3, 7}, Probe{2, 2, 6}}) {
        WreathModel wm = build_wreath_model(build_cyclic_complex(pr.n, 1), pr.p, 0, pr.hi);
        for (Kind k : {Kind::I, Kind::II}) {
            PageComputer pc(wm.e0, k);
            Page inf = pc.e_infinity(0, pr.hi);
            for (int m = 0; m <= pr.hi; ++m) {
                std::size_t zeros = 0;
                Int tors = 1;
                for (const auto& e : inf.entries)
                    if (e.i + e.j == m) {
                        auto [z, t] = order_parts(e.factors);
                        zeros += z;
                        tors *= t;
                    }
                auto [hz, ht] = order_parts(cohomology_at(wm.tot.c, m).factors);
                INFO("n=" << pr.n << " p=" << pr.p << " kind " << kind_name(k) << " degree " << m);
                REQUIRE(zeros == hz);
                REQUIRE(tors == ht);
            }
        }
    }
}

TEST_CASE("row filtration collapses at the second page when p divides the order") {
    struct Probe {
        int n, p, hi;
    };
    for (Probe pr : {Probe{3, 3, 7}, Probe{0, 2, 5}}) {
        WreathModel wm = build_wreath_model(build_cyclic_complex(pr.n, 1), pr.p, 0, pr.hi);
        PageComputer pc(wm.e0, Kind::II);
        Page e2 = pc.page(2, 0, pr.hi);
        Page inf = pc.e_infinity(0, pr.hi);
        REQUIRE(e2.entries.size() == inf.entries.size());
        for (std::size_t k = 0; k < e2.entries.size(); ++k) {
            INFO("n=" << pr.n << " entry (" << e2.entries[k].i << "," << e2.entries[k].j << ")");
            REQUIRE(e2.entries[k].i == inf.entries[k].i);
            REQUIRE(e2.entries[k].j == inf.entries[k].j);
            REQUIRE(e2.entries[k].factors == inf.entries[k].factors);
        }
    }
}

TEST_CASE("nothing survives past the stable page index") {
    WreathModel wm = build_wreath_model(build_cyclic_complex(2, 1), 3, 0, 6);
    for (Kind k : {Kind::I, Kind::II}) {
        PageComputer pc(wm.e0, k);
        Page pg = pc.page(pc.stable_r(), 0, 6);
        for (const auto& e : pg.entries)
            REQUIRE_FALSE(e.has_d);
    }
}

TEST_CASE("scaling the base differential scales the r-th differential by n^r") {
    SECTION("third differential at an odd prime") {
        ScaledCheckReport rep = check_scaled_differential(3, 1, 2, 3, 2, 6);
        REQUIRE(rep.all_ok);
        REQUIRE_FALSE(rep.entries.empty());
        bool some_nonzero = false;
        for (const auto& e : rep.entries) {
            REQUIRE(e.zigzag_ok);
            REQUIRE(e.vector_scaled_ok);
            if (!e.base_d.is_zero())
                some_nonzero = true;
        }
        REQUIRE(some_nonzero);
    }
    SECTION("second differential at p = 2") {
        ScaledCheckReport rep = check_scaled_differential(2, 1, 3, 2, 1, 5);
        REQUIRE(rep.all_ok);
        REQUIRE_FALSE(rep.entries.empty());
    }
    SECTION("bad scale is rejected") {
        REQUIRE_THROWS_AS(check_scaled_differential(3, 1, 0, 3, 2, 4), Error);
    }
}

#pragma once

#include <algorithm>
#include <map>
#include <tuple>

#include "common.hpp"

namespace wreathcoh {

/* One family of cyclic summands: `multiplicity` copies of Z/order in degrees
 * first_degree + k*period for 0 <= k < count.  count == kInfinite means the
 * family continues forever (the periodic tails of wreath cohomology).
 * order == 0 denotes an infinite cyclic summand. */
inline constexpr long long kInfinite = -1;

struct Family {
    int first_degree = 0;
    int period = 1;
    long long count = 1;
    Int order = 0;
    long long multiplicity = 1;
    std::string provenance;
};

struct Graded {
    std::vector<Family> families;

    void add(int degree, const Int& order, long long mult = 1, const std::string& prov = "") {
        if (order == 1 || mult == 0)
            return;
        families.push_back({degree, 1, 1, order, mult, prov});
    }

    void add_tail(int first_degree, int period, const Int& order, long long mult = 1,
                  const std::string& prov = "") {
        if (order == 1 || mult == 0)
            return;
        require(period >= 1, "Graded: a family needs a positive period");
        families.push_back({first_degree, period, kInfinite, order, mult, prov});
    }

    bool has_infinite_family() const {
        for (const auto& f : families)
            if (f.count == kInfinite)
                return true;
        return false;
    }

    /* Canonical form: finite families are expanded to one entry per degree and
     * merged; infinite families are merged when identical in shape.  Sorted by
     * (first_degree, order, period).  No family keeps order 1. */
    Graded canonical() const {
        std::map<std::tuple<int, Int, std::string>, long long> finite;
        std::map<std::tuple<int, int, Int, std::string>, long long> infinite;
        for (const auto& f : families) {
            require(f.period >= 1, "Graded: a family needs a positive period");
            if (f.order == 1 || f.multiplicity == 0)
                continue;
            if (f.count == kInfinite) {
                infinite[{f.first_degree, f.period, f.order, f.provenance}] += f.multiplicity;
            } else {
                require(f.count >= 1, "Graded: nonpositive family count");
                for (long long k = 0; k < f.count; ++k)
                    finite[{f.first_degree + static_cast<int>(k) * f.period, f.order, f.provenance}] +=
                        f.multiplicity;
            }
        }
        Graded out;
        for (const auto& [key, mult] : finite)
            out.families.push_back({std::get<0>(key), 1, 1, std::get<1>(key), mult, std::get<2>(key)});
        for (const auto& [key, mult] : infinite)
            out.families.push_back({std::get<0>(key), std::get<1>(key), kInfinite, std::get<2>(key), mult,
                                    std::get<3>(key)});
        std::sort(out.families.begin(), out.families.end(), [](const Family& a, const Family& b) {
            return std::tie(a.first_degree, a.order, a.period, a.count, a.provenance) <
                   std::tie(b.first_degree, b.order, b.period, b.count, b.provenance);
        });
        return out;
    }

    /* All-finite instantiation on [lo, hi] */
    Graded restrict(int lo, int hi) const {
        Graded out;
        for (const auto& f : families) {
            if (f.order == 1)
                continue;
            long long k = 0;
            for (int deg = f.first_degree; deg <= hi; deg += f.period, ++k) {
                if (f.count != kInfinite && k >= f.count)
                    break;
                if (deg >= lo)
                    out.families.push_back({deg, 1, 1, f.order, f.multiplicity, f.provenance});
            }
        }
        return out.canonical();
    }

    /* Summand orders per degree, each order split into prime powers and the
     * resulting multiset sorted.  This is the normal form used for every
     * cross-check: it identifies Z/6 with Z/2 + Z/3, which is exactly the
     * identification the closed forms assume. */
    std::map<int, std::vector<Int>> primary_by_degree(int lo, int hi) const {
        std::map<int, std::vector<Int>> out;
        for (const auto& f : restrict(lo, hi).families) {
            auto parts = primary_parts(f.order);
            auto& slot = out[f.first_degree];
            for (long long m = 0; m < f.multiplicity; ++m)
                slot.insert(slot.end(), parts.begin(), parts.end());
        }
        for (auto& [deg, v] : out)
            std::sort(v.begin(), v.end());
        return out;
    }

    bool equal_on(const Graded& other, int lo, int hi) const {
        return primary_by_degree(lo, hi) == other.primary_by_degree(lo, hi);
    }

    /* prime-power pieces of a cyclic order; 0 stays 0 */
    static std::vector<Int> primary_parts(const Int& order) {
        if (order == 0)
            return {Int(0)};
        std::vector<Int> out;
        Int n = order;
        for (Int q = 2; q * q <= n; ++q) {
            if (n % q != 0)
                continue;
            Int piece = 1;
            while (n % q == 0) {
                piece *= q;
                n /= q;
            }
            out.push_back(piece);
        }
        if (n > 1)
            out.push_back(n);
        return out;
    }
};

}  // namespace wreathcoh

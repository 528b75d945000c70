#pragma once

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>

#include "equivariant.hpp"
#include "formulas.hpp"
#include "json_io.hpp"

namespace wreathcoh {

struct DegreeMismatch {
    int degree = 0;
    std::vector<Int> predicted, computed;
};

struct VerifyEntry {
    int p = 2;
    Int n = 1;
    int d = 1;
    int lo = 0, hi = 0;
    bool ok = false;
    std::vector<DegreeMismatch> mismatches;
    long long millis = 0;
};

struct VerifyReport {
    bool all_ok = true;
    std::vector<VerifyEntry> entries;
};

/* One cell of the sweep: cohomology of the wreath construction on C(n,d),
 * assembled degree by degree from the full equivariant double complex, against
 * the closed-form prediction, on a window past one full period. */
inline VerifyEntry verify_one(int p, const Int& n, int d) {
    VerifyEntry ent;
    ent.p = p;
    ent.n = n;
    ent.d = d;
    ent.lo = p * (d - 1) - 1;  // one degree below the lowest possible row
    ent.hi = p * d + 6;
    auto started = std::chrono::steady_clock::now();

    CochainComplex base = build_cyclic_complex(n, d);
    WreathModel wm = build_wreath_model(base, p, ent.lo, ent.hi);
    Graded computed = cohomology(wm.tot.c, ent.lo, ent.hi);

    Graded base_h = cohomology(base, base.lo, base.hi);
    Graded predicted = predict_wreath_cohomology(base_h, p, ent.lo, ent.hi);

    auto want = predicted.primary_by_degree(ent.lo, ent.hi);
    auto got = computed.primary_by_degree(ent.lo, ent.hi);
    for (int m = ent.lo; m <= ent.hi; ++m) {
        std::vector<Int> w, g;
        if (auto it = want.find(m); it != want.end())
            w = it->second;
        if (auto it = got.find(m); it != got.end())
            g = it->second;
        if (w != g)
            ent.mismatches.push_back({m, w, g});
    }
    ent.ok = ent.mismatches.empty();
    ent.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();
    return ent;
}

inline int verify_thread_count() {
    const char* env = std::getenv("WREATHCOH_THREADS");
    if (env == nullptr || *env == '\0')
        return 0;
    int k = std::atoi(env);
    return k > 0 ? k : 0;
}

/* The standard sweep: p in {2,3,5}, base order 1, p, p^2 and one order prime
 * to p, gap degree 1..3.  Runs serially unless WREATHCOH_THREADS asks for a
 * worker pool; the report order is fixed either way. */
inline VerifyReport verify_corpus() {
    struct Job {
        int p;
        Int n;
        int d;
    };
    std::vector<Job> jobs;
    for (int p : {2, 3, 5}) {
        Int coprime = (p == 2) ? 3 : 2;
        for (const Int& n : {Int(1), Int(p), Int(p) * p, coprime})
            for (int d : {1, 2, 3})
                jobs.push_back({p, n, d});
    }

    VerifyReport rep;
    rep.entries.resize(jobs.size());
    int workers = verify_thread_count();
    if (workers <= 1) {
        for (std::size_t k = 0; k < jobs.size(); ++k)
            rep.entries[k] = verify_one(jobs[k].p, jobs[k].n, jobs[k].d);
    } else {
        std::atomic<std::size_t> next{0};
        auto run = [&]() {
            for (std::size_t k = next.fetch_add(1); k < jobs.size(); k = next.fetch_add(1))
                rep.entries[k] = verify_one(jobs[k].p, jobs[k].n, jobs[k].d);
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t)
            pool.emplace_back(run);
        for (auto& t : pool)
            t.join();
    }
    for (const auto& e : rep.entries)
        rep.all_ok = rep.all_ok && e.ok;
    return rep;
}

inline json json_of(const VerifyEntry& e) {
    json ms = json::array();
    for (const auto& m : e.mismatches)
        ms.push_back(json{{"degree", m.degree},
                          {"predicted", json_factors(m.predicted)},
                          {"computed", json_factors(m.computed)}});
    return json{{"p", e.p},        {"n", json_int(e.n)},
                {"d", e.d},        {"window", json::array({e.lo, e.hi})},
                {"ok", e.ok},      {"mismatches", std::move(ms)},
                {"millis", e.millis}};
}

inline json json_of(const VerifyReport& rep) {
    json entries = json::array();
    for (const auto& e : rep.entries)
        entries.push_back(json_of(e));
    return json{{"all_ok", rep.all_ok}, {"entries", std::move(entries)}};
}

}  // namespace wreathcoh

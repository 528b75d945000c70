#pragma once

#include <functional>

#include "spectral.hpp"

namespace wreathcoh {

/* Multiplicity functions controlling the column-0 entries: g counts the
 * invariant cocycles in each row, f the row ranks; they satisfy
 * g(j) + g(j-1) = f(j) for 0 <= j <= p-1 (and at j = p too when p is odd). */
inline Int g_mult(int p, int j) {
    if (j < 0 || j > p - 1)
        return 0;
    Int sgn = (j % 2 == 0) ? 1 : -1;
    Int val = (Int(p - 1) * sgn + binom(p - 1, j)) / p;
    return val;
}

inline Int f_mult(int p, int j) {
    if (j == 0 || j == p)
        return 1;
    if (j > 0 && j < p)
        return binom(p, j) / p;
    return 0;
}

/* One rectangle-ful of equal entries on a page: a predicate in (i, j) plus
 * the invariant factors of the common group.  The expression strings are the
 * printable form of the predicate. */
struct PagePattern {
    std::string i_expr, j_expr;
    std::function<bool(int, int)> match;
    std::vector<Int> group;
};

struct PageTable {
    std::string name;
    std::vector<PagePattern> patterns;

    std::vector<Int> at(int i, int j) const {
        std::vector<Int> out;
        for (const auto& p : patterns)
            if (p.match(i, j))
                out.insert(out.end(), p.group.begin(), p.group.end());
        return out;
    }
};

/* multiset of prime-power parts, the common currency for comparisons */
inline std::vector<Int> primary_multiset(const std::vector<Int>& factors) {
    std::vector<Int> out;
    for (const auto& f : factors) {
        auto parts = Graded::primary_parts(f);
        out.insert(out.end(), parts.begin(), parts.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct TableMismatch {
    int i = 0, j = 0;
    std::vector<Int> expected, got;
};

/* Compare a computed page against a symbolic table over a bidegree
 * rectangle, as abelian groups (so Z/6 matches Z/2 + Z/3).  Entries outside
 * the page's certified region are skipped. */
inline std::vector<TableMismatch> compare_page_with_table(const Page& pg, const PageTable& t,
                                                          int i_lo, int i_hi, int j_lo, int j_hi) {
    std::vector<TableMismatch> bad;
    for (int i = i_lo; i <= i_hi; ++i)
        for (int j = j_lo; j <= j_hi; ++j) {
            if (i + j < pg.m_lo || i + j > pg.m_hi || i + j > pg.cert_total_hi)
                continue;
            std::vector<Int> expect = primary_multiset(t.at(i, j));
            const PageEntry* e = pg.find(i, j);
            std::vector<Int> got = e ? primary_multiset(e->factors) : std::vector<Int>{};
            if (expect != got)
                bad.push_back({i, j, std::move(expect), std::move(got)});
        }
    return bad;
}

namespace detail {

inline std::vector<Int> copies(const Int& order, const Int& count) {
    std::vector<Int> v;
    for (Int k = 0; k < count; ++k)
        v.push_back(order);
    return v;
}

inline std::string istr(int v) { return std::to_string(v); }

inline PagePattern point(int i, int j, std::vector<Int> group) {
    return {istr(i), istr(j), [i, j](int a, int b) { return a == i && b == j; }, std::move(group)};
}

/* i even and >= 2, fixed j */
inline PagePattern even_tail(int j, std::vector<Int> group) {
    return {"2k+2", istr(j), [j](int a, int b) { return b == j && a > 0 && a % 2 == 0; },
            std::move(group)};
}

/* i odd and >= 1, fixed j */
inline PagePattern odd_tail(int j, std::vector<Int> group) {
    return {"2k+1", istr(j), [j](int a, int b) { return b == j && a % 2 != 0 && a > 0; },
            std::move(group)};
}

}  // namespace detail

/* What the closed forms say about the row-filtration spectral sequence of
 * the double complex built on the order-n, degree-d model: the E_2 page with
 * every extension inside an entry already resolved, the E_infinity page, the
 * first page equal to E_infinity, and which column-0 entries are nonsplit
 * extensions (the cyclic factor of order pn absorbing the order-p part). */
struct TypeIIPrediction {
    int p = 2;
    Int n = 1;
    int d = 0;
    PageTable e2, einf;
    int collapse_page = 2;
    std::vector<std::pair<int, int>> nonsplit_entries;
};

inline TypeIIPrediction predict_type_ii(int p, const Int& n, int d) {
    require(p >= 2, "predict_type_ii: need p >= 2");
    require(n >= 1, "predict_type_ii: the closed forms cover finite positive order");
    TypeIIPrediction out;
    out.p = p;
    out.n = n;
    out.d = d;
    out.e2.name = "II.E2(p=" + std::to_string(p) + ",n=" + n.str() + ",d=" + std::to_string(d) + ")";
    out.einf.name = "II.Einf(p=" + std::to_string(p) + ",n=" + n.str() + ",d=" + std::to_string(d) + ")";
    bool divides = (n % p == 0);
    if (p == 2) {
        if (d % 2 == 0) {
            out.e2.patterns.push_back(detail::point(0, 2 * d, {2 * n}));
            out.e2.patterns.push_back(detail::even_tail(2 * d, {Int(2)}));
            out.e2.patterns.push_back(detail::odd_tail(2 * d - 2, {Int(2)}));
            if (divides)
                out.nonsplit_entries.push_back({0, 2 * d});
            else
                out.einf.patterns.push_back(detail::point(0, 2 * d, {n}));
        } else {
            out.e2.patterns.push_back(detail::point(0, 2 * d - 1, {n}));
            out.e2.patterns.push_back(detail::odd_tail(2 * d, {Int(2)}));
            out.e2.patterns.push_back(detail::even_tail(2 * d - 2, {Int(2)}));
            if (!divides)
                out.einf.patterns.push_back(detail::point(0, 2 * d - 1, {n}));
        }
        if (divides) {
            std::string keep = out.einf.name;
            out.einf = out.e2;
            out.einf.name = keep;
            out.collapse_page = 2;
        } else {
            out.collapse_page = 3;
        }
        return out;
    }
    int top = p * d;
    for (int jp = 0; jp <= p; ++jp) {
        Int g = g_mult(p, jp);
        std::vector<Int> entry;
        if (jp % 2 == 0 && jp <= p - 3) {
            // extension of Z/p by (Z/n)^g; as a group, g-1 copies of Z/n and
            // one Z/pn whether or not it splits
            entry = detail::copies(n, g - 1);
            entry.push_back(p * n);
            if (divides)
                out.nonsplit_entries.push_back({0, top - jp});
        } else {
            entry = detail::copies(n, g);
        }
        if (!entry.empty())
            out.e2.patterns.push_back(detail::point(0, top - jp, entry));
        std::vector<Int> stable = detail::copies(n, g);
        if (!stable.empty() && !divides)
            out.einf.patterns.push_back(detail::point(0, top - jp, stable));
    }
    out.e2.patterns.push_back(detail::even_tail(top, {Int(p)}));
    out.e2.patterns.push_back(detail::even_tail(top - p, {Int(p)}));
    if (divides) {
        std::string keep = out.einf.name;
        out.einf = out.e2;
        out.einf.name = keep;
        out.collapse_page = 2;
    } else {
        out.collapse_page = p + 1;
    }
    return out;
}

/* The column-filtration story: E_2, the stable page E_3 (equal to E_2 when p
 * does not divide n), the support of the only nonzero higher differential
 * d_2, and the nonsplit extensions met when reassembling the total
 * cohomology from E_infinity. */
struct ExtensionNote {
    int m = 0;
    std::pair<int, int> kernel, quotient;
};

struct TypeIPrediction {
    int p = 2;
    Int n = 1;
    int d = 0;
    PageTable e2, e3;
    std::function<bool(int, int)> d2_nonzero = [](int, int) { return false; };
    std::string d2_desc = "zero";
    int collapse_page = 2;
    std::vector<ExtensionNote> nonsplit;
};

inline TypeIPrediction predict_type_i(int p, const Int& n, int d) {
    require(p >= 2, "predict_type_i: need p >= 2");
    require(n >= 1, "predict_type_i: the closed forms cover finite positive order");
    TypeIPrediction out;
    out.p = p;
    out.n = n;
    out.d = d;
    out.e2.name = "I.E2(p=" + std::to_string(p) + ",n=" + n.str() + ",d=" + std::to_string(d) + ")";
    out.e3.name = "I.E3(p=" + std::to_string(p) + ",n=" + n.str() + ",d=" + std::to_string(d) + ")";
    bool divides = (n % p == 0);
    int top = p * d;
    if (p == 2) {
        int h = (d % 2 == 0) ? 2 * d : 2 * d - 1;  // degree carrying the Z/n
        out.e2.patterns.push_back(detail::point(0, h, {n}));
        if (!divides) {
            out.e3 = out.e2;
            out.collapse_page = 2;
            return out;
        }
        if (d % 2 == 0) {
            // rows 2d and 2d-1
            out.e2.patterns.push_back({"k>=0", detail::istr(2 * d - 1),
                                       [d](int i, int j) { return j == 2 * d - 1 && i >= 0; },
                                       {Int(2)}});
            out.e2.patterns.push_back({"k>=1", detail::istr(2 * d),
                                       [d](int i, int j) { return j == 2 * d && i > 0; },
                                       {Int(2)}});
            out.e3.patterns.push_back(detail::point(0, 2 * d, {n}));
            out.e3.patterns.push_back(detail::point(0, 2 * d - 1, {Int(2)}));
            out.e3.patterns.push_back(detail::point(1, 2 * d - 1, {Int(2)}));
            out.e3.patterns.push_back(detail::even_tail(2 * d, {Int(2)}));
            out.e3.patterns.push_back(detail::even_tail(2 * d - 1, {Int(2)}));
            out.nonsplit.push_back({2 * d, {1, 2 * d - 1}, {0, 2 * d}});
        } else {
            // rows 2d and 2d-1, shifted copy of the odd-degree statement
            out.e2.patterns.push_back({"k>=0", detail::istr(2 * d),
                                       [d](int i, int j) { return j == 2 * d && i >= 0; },
                                       {Int(2)}});
            out.e2.patterns.push_back({"k>=1", detail::istr(2 * d - 1),
                                       [d](int i, int j) { return j == 2 * d - 1 && i > 0; },
                                       {Int(2)}});
            out.e3.patterns.push_back(detail::point(0, 2 * d - 1, {n}));
            out.e3.patterns.push_back(detail::odd_tail(2 * d - 1, {Int(2)}));
            out.e3.patterns.push_back(detail::odd_tail(2 * d, {Int(2)}));
        }
        out.d2_nonzero = [d](int i, int j) {
            (void)i;
            return j == 2 * d || j == 2 * d - 1;
        };
        out.d2_desc = "supported on the two nonzero rows";
        out.collapse_page = 3;
        return out;
    }
    for (int jp = 0; jp <= p - 1; ++jp) {
        std::vector<Int> col0 = detail::copies(n, g_mult(p, jp));
        if (divides && jp % 2 != 0)
            col0.push_back(p);
        if (!col0.empty())
            out.e2.patterns.push_back(detail::point(0, top - jp, col0));
        std::vector<Int> col0_stable = detail::copies(n, g_mult(p, jp));
        if (!col0_stable.empty())
            out.e3.patterns.push_back(detail::point(0, top - jp, col0_stable));
    }
    if (!divides) {
        out.collapse_page = 2;
        return out;
    }
    for (int jp = 0; jp <= p - 1; ++jp) {
        int row = top - jp;
        out.e2.patterns.push_back({"k>=1", detail::istr(row),
                                   [row](int i, int j) { return j == row && i > 0; },
                                   {Int(p)}});
    }
    out.e3.patterns.push_back(detail::even_tail(top, {Int(p)}));
    {
        int row = top - (p - 1);
        out.e3.patterns.push_back(detail::odd_tail(row, {Int(p)}));
    }
    for (int jp = 1; jp <= p - 2; jp += 2)
        out.e3.patterns.push_back(detail::point(1, top - jp, {Int(p)}));
    out.d2_nonzero = [p, top](int i, int j) {
        int jp = top - j;
        return i >= 0 && jp >= 0 && jp <= p - 2 && (i + jp) % 2 != 0;
    };
    out.d2_desc = "nonzero exactly where i >= 0, the row index lies in the top p-1 rows, and the "
                  "checkerboard parity is odd";
    out.collapse_page = 3;
    for (int jp = 1; jp <= p - 2; jp += 2)
        out.nonsplit.push_back({top + 1 - jp, {1, top - jp}, {0, top - jp + 1}});
    return out;
}

namespace detail {

struct Instance {
    int degree = 0;
    Int order = 0;  // 0 means infinite cyclic
};

/* instances of the graded group with the p-mixed orders split, every order
 * either 0, a p-power, or coprime to p */
inline std::vector<Instance> normalized_instances(const Graded& h, int p, int max_degree) {
    std::vector<Instance> out;
    int lo = 0;
    for (const auto& f : h.families)
        lo = std::min(lo, f.first_degree);
    for (const auto& f : h.restrict(lo, max_degree).families) {
        Int ppart = 1, rest = f.order;
        if (f.order != 0) {
            while (rest % p == 0) {
                ppart *= p;
                rest /= p;
            }
        }
        for (long long c = 0; c < f.multiplicity; ++c) {
            if (f.order == 0) {
                out.push_back({f.first_degree, Int(0)});
                continue;
            }
            if (ppart > 1)
                out.push_back({f.first_degree, ppart});
            if (rest > 1)
                out.push_back({f.first_degree, rest});
        }
    }
    return out;
}

/* contribution of one free orbit through its representative tuple */
inline void add_free_orbit(Graded& h, const std::vector<Instance>& tuple) {
    int total = 0;
    Int gcd_all = 0;
    int finite = 0;
    for (const auto& t : tuple) {
        total += t.degree;
        gcd_all = gcd(gcd_all, t.order);
        if (t.order != 0)
            ++finite;
    }
    if (finite == 0) {
        h.add(total, 0, 1, "free");
        return;
    }
    for (int j = 0; j < finite; ++j)
        h.add(total - j, gcd_all, static_cast<long long>(binom(finite - 1, j)), "free");
}

/* contribution of the diagonal orbit on one instance */
inline void add_diagonal(Graded& h, const Instance& a, int p) {
    int d = a.degree;
    if (p == 2) {
        if (a.order == 0 && d % 2 == 0) {
            h.add(2 * d, 0, 1, "diag");
            h.add_tail(2 * d + 2, 2, 2, 1, "diag");
        } else if (a.order == 0) {
            h.add_tail(2 * d + 1, 2, 2, 1, "diag");
        } else if (a.order % 2 != 0 && d % 2 == 0) {
            h.add(2 * d, a.order, 1, "diag");
        } else if (a.order % 2 != 0) {
            h.add(2 * d - 1, a.order, 1, "diag");
        } else if (d % 2 == 0) {
            h.add(2 * d, 2 * a.order, 1, "diag");
            h.add(2 * d - 1, 2, 1, "diag");
            h.add_tail(2 * d + 1, 1, 2, 1, "diag");
        } else {
            h.add(2 * d - 1, a.order, 1, "diag");
            h.add_tail(2 * d, 1, 2, 1, "diag");
        }
        return;
    }
    if (a.order == 0) {
        h.add(p * d, 0, 1, "diag");
        h.add_tail(p * d + 2, 2, p, 1, "diag");
        return;
    }
    if (a.order % p != 0) {
        for (int j = 0; j <= p - 1; ++j)
            h.add(p * d - j, a.order, static_cast<long long>(g_mult(p, j)), "diag");
        return;
    }
    for (int j = 0; j <= p - 1; ++j) {
        Int g = g_mult(p, j);
        if (j % 2 == 0 && j <= p - 3) {
            h.add(p * d - j, a.order, static_cast<long long>(g - 1), "diag");
            h.add(p * d - j, p * a.order, 1, "diag");
        } else {
            h.add(p * d - j, a.order, static_cast<long long>(g), "diag");
        }
    }
    h.add_tail(p * d + 2, 2, p, 1, "diag");
    h.add_tail(p * (d - 1) + 2, 2, p, 1, "diag");
}

}  // namespace detail

/* The graded group the closed forms assign to the wreath construction on a
 * base with the given cohomology, restricted to [lo, hi].  Orbit sums run
 * over cyclically minimal representative tuples whose total degree can still
 * reach the window. */
inline Graded predict_wreath_cohomology(const Graded& base, int p, int lo, int hi) {
    require(p >= 2, "predict_wreath_cohomology: need p >= 2");
    std::vector<detail::Instance> inst = detail::normalized_instances(base, p, hi + p - 1);
    Graded out;
    int min_deg = 0;
    for (const auto& a : inst)
        min_deg = std::min(min_deg, a.degree);
    std::size_t n = inst.size();
    // free orbits: lexicographically minimal tuples, not constant
    std::vector<std::size_t> tup(static_cast<std::size_t>(p), 0);
    auto minimal = [&](const std::vector<std::size_t>& t) {
        for (int s = 1; s < p; ++s) {
            for (int k = 0; k < p; ++k) {
                std::size_t a = t[static_cast<std::size_t>(k)];
                std::size_t b = t[static_cast<std::size_t>((k + s) % p)];
                if (a < b)
                    break;
                if (a > b)
                    return false;
            }
        }
        return true;
    };
    std::function<void(int, int)> walk = [&](int pos, int deg_so_far) {
        if (deg_so_far + (p - pos) * min_deg > hi + p - 1)
            return;
        if (pos == p) {
            bool constant = true;
            for (int k = 1; k < p; ++k)
                if (tup[static_cast<std::size_t>(k)] != tup[0])
                    constant = false;
            if (constant || !minimal(tup))
                return;
            std::vector<detail::Instance> tuple;
            for (int k = 0; k < p; ++k)
                tuple.push_back(inst[tup[static_cast<std::size_t>(k)]]);
            detail::add_free_orbit(out, tuple);
            return;
        }
        for (std::size_t k = 0; k < n; ++k) {
            tup[static_cast<std::size_t>(pos)] = k;
            walk(pos + 1, deg_so_far + inst[k].degree);
        }
    };
    if (n > 0)
        walk(0, 0);
    for (const auto& a : inst)
        detail::add_diagonal(out, a, p);
    return out.restrict(lo, hi);
}

/* Kernel of restriction-plus-diagonal detection: every class the covering
 * map and the diagonal jointly fail to see.  Exponent p throughout. */
inline Graded detection_kernel(const Graded& base, int p, int lo, int hi) {
    require(p >= 2, "detection_kernel: need p >= 2");
    Graded out;
    for (const auto& f : base.restrict(0, hi).families) {
        if (f.order == 0 || f.order % p != 0)
            continue;
        int i = f.first_degree;
        if (p == 2) {
            if (i % 2 == 0)
                out.add(2 * i, 2, f.multiplicity, "kernel");
            continue;
        }
        for (int deg = p * (i - 1) + 3; deg <= p * i; deg += 2)
            out.add(deg, p, f.multiplicity, "kernel");
    }
    return out.restrict(lo, hi);
}

/* The symmetric-group analogue of the row-filtration tables, p-locally: only
 * the columns that are multiples of p-1 survive, the top class has order pn
 * for even d and n for odd d, and the sequence collapses at E_2 with no
 * extension problems.  For p = 2 this coincides with the cyclic case. */
inline TypeIIPrediction predict_sigma_p(int p, const Int& n, int d) {
    require(p >= 2, "predict_sigma_p: need p >= 2");
    require(n >= 1, "predict_sigma_p: need a positive order");
    {
        Int m = n;
        while (m % p == 0)
            m /= p;
        require(m == 1, "predict_sigma_p: the order must be a power of p");
    }
    TypeIIPrediction out;
    out.p = p;
    out.n = n;
    out.d = d;
    out.collapse_page = 2;
    out.e2.name = "Sigma.E2(p=" + std::to_string(p) + ",n=" + n.str() + ",d=" + std::to_string(d) + ")";
    int period = 2 * (p - 1);
    int top = p * d;
    auto even_cols = [period](int row) {
        return PagePattern{"(2k+2)(p-1)", detail::istr(row),
                           [row, period](int i, int j) { return j == row && i > 0 && i % period == 0; },
                           {}};
    };
    auto odd_cols = [period, p](int row) {
        return PagePattern{"(2k+1)(p-1)", detail::istr(row),
                           [row, period, p](int i, int j) {
                               return j == row && i > 0 && i % period == p - 1;
                           },
                           {}};
    };
    if (d % 2 == 0) {
        out.e2.patterns.push_back(detail::point(0, top, {p * n}));
        PagePattern a = even_cols(top);
        a.group = {Int(p)};
        PagePattern b = odd_cols(top - p);
        b.group = {Int(p)};
        out.e2.patterns.push_back(a);
        out.e2.patterns.push_back(b);
    } else {
        out.e2.patterns.push_back(detail::point(0, p * (d - 1) + 1, {n}));
        PagePattern a = even_cols(p * (d - 1));
        a.group = {Int(p)};
        PagePattern b = odd_cols(top);
        b.group = {Int(p)};
        out.e2.patterns.push_back(a);
        out.e2.patterns.push_back(b);
    }
    out.einf = out.e2;
    out.einf.name = "Sigma.Einf(p=" + std::to_string(p) + ",n=" + n.str() + ",d=" +
                    std::to_string(d) + ")";
    return out;
}

/* p-local detection kernel for the full symmetric construction: one order-p
 * summand in degree 2pi for every finite p-power summand of H^{2i}. */
inline Graded detection_kernel_sigma_p(const Graded& base, int p, int lo, int hi) {
    require(p >= 2, "detection_kernel_sigma_p: need p >= 2");
    Graded out;
    for (const auto& f : base.restrict(0, hi).families) {
        if (f.order == 0 || f.order % p != 0)
            continue;
        if (f.first_degree % 2 != 0)
            continue;
        out.add(p * f.first_degree, p, f.multiplicity, "kernel");
    }
    return out.restrict(lo, hi);
}

}  // namespace wreathcoh

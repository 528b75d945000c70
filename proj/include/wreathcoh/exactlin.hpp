#pragma once

#include <optional>
#include <utility>

#include "matrix.hpp"

namespace wreathcoh {

/* ------------------------------------------------------------------------
 * Smith normal form.
 *
 * u * m * v == s with u, v unimodular and s diagonal, d_1 | d_2 | ... | d_k,
 * all diagonal entries nonnegative, zeros last.  uinv and vinv are maintained
 * alongside so callers can change basis in either direction without a
 * separate inversion step.
 *
 * Pivot rule: minimal absolute value over the untouched submatrix, ties
 * broken by lowest (row, column) in scan order.  The rule is not mathematics,
 * it is determinism: every golden value in the tests depends on it.
 * ---------------------------------------------------------------------- */

struct Smith {
    Mat u, s, v, uinv, vinv;
};

inline Smith smith_normal_form(const Mat& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    Smith r{Mat::identity(nr), m, Mat::identity(nc), Mat::identity(nr), Mat::identity(nc)};
    Mat& s = r.s;

    auto row_add = [&](std::size_t a, std::size_t b, const Int& c) {
        s.add_row(a, b, c);
        r.u.add_row(a, b, c);
        r.uinv.add_col(b, a, -c);
    };
    auto col_add = [&](std::size_t a, std::size_t b, const Int& c) {
        s.add_col(a, b, c);
        r.v.add_col(a, b, c);
        r.vinv.add_row(b, a, -c);
    };
    auto row_swap = [&](std::size_t a, std::size_t b) {
        s.swap_rows(a, b);
        r.u.swap_rows(a, b);
        r.uinv.swap_cols(a, b);
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        s.swap_cols(a, b);
        r.v.swap_cols(a, b);
        r.vinv.swap_rows(a, b);
    };
    auto row_negate = [&](std::size_t a) {
        s.scale_row(a, -1);
        r.u.scale_row(a, -1);
        r.uinv.scale_col(a, -1);
    };

    const std::size_t kmax = nr < nc ? nr : nc;
    for (std::size_t k = 0; k < kmax; ++k) {
        for (;;) {
            /* locate pivot */
            bool found = false;
            std::size_t pi = k, pj = k;
            Int best;
            for (std::size_t i = k; i < nr; ++i)
                for (std::size_t j = k; j < nc; ++j) {
                    const Int& x = s.at(i, j);
                    if (x == 0)
                        continue;
                    Int a = abs(x);
                    if (!found || a < best) {
                        found = true;
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
            if (!found)
                goto finished;  // remaining submatrix is zero
            if (pi != k)
                row_swap(k, pi);
            if (pj != k)
                col_swap(k, pj);

            bool dirty = false;
            for (std::size_t i = k + 1; i < nr; ++i) {
                if (s.at(i, k) == 0)
                    continue;
                Int q = s.at(i, k) / s.at(k, k);
                if (q != 0)
                    row_add(i, k, -q);
                if (s.at(i, k) != 0)
                    dirty = true;
            }
            for (std::size_t j = k + 1; j < nc; ++j) {
                if (s.at(k, j) == 0)
                    continue;
                Int q = s.at(k, j) / s.at(k, k);
                if (q != 0)
                    col_add(j, k, -q);
                if (s.at(k, j) != 0)
                    dirty = true;
            }
            if (dirty)
                continue;  // remainders became new, smaller candidates

            /* pivot now alone in its row and column; enforce divisibility */
            bool offender = false;
            for (std::size_t i = k + 1; i < nr && !offender; ++i)
                for (std::size_t j = k + 1; j < nc && !offender; ++j)
                    if (s.at(i, j) % s.at(k, k) != 0) {
                        row_add(k, i, 1);
                        offender = true;
                    }
            if (!offender)
                break;
        }
        if (s.at(k, k) < 0)
            row_negate(k);
    }
finished:
    for (std::size_t k = 0; k < kmax; ++k)
        if (s.at(k, k) < 0)
            row_negate(k);
    return r;
}

/* ------------------------------------------------------------------------
 * Column-style Hermite normal form: the canonical basis of the lattice
 * spanned by the columns of m.  Pivot rows strictly increase left to right,
 * pivots are positive, entries to the left of a pivot are reduced into
 * [0, pivot), entries to its right are zero, and zero columns are dropped.
 * Lattice equality is matrix equality of the results.
 * ---------------------------------------------------------------------- */

namespace detail {

/* Column elimination shared by hnf / kernel / solve.  Eliminates the top
 * `top_rows` rows of a; returns the number of pivot columns and their pivot
 * rows.  When `reduce_left` is set, pivot rows are left-reduced to the HNF
 * representative. */
inline std::vector<std::size_t> col_eliminate(Mat& a, std::size_t top_rows, bool reduce_left) {
    std::vector<std::size_t> pivot_rows;
    std::size_t j0 = 0;
    for (std::size_t row = 0; row < top_rows && j0 < a.cols(); ++row) {
        for (;;) {
            bool found = false;
            std::size_t jbest = j0;
            Int best;
            for (std::size_t j = j0; j < a.cols(); ++j) {
                const Int& x = a.at(row, j);
                if (x == 0)
                    continue;
                Int v = abs(x);
                if (!found || v < best) {
                    found = true;
                    best = v;
                    jbest = j;
                }
            }
            if (!found)
                break;
            if (jbest != j0)
                a.swap_cols(j0, jbest);
            bool dirty = false;
            for (std::size_t j = j0 + 1; j < a.cols(); ++j) {
                if (a.at(row, j) == 0)
                    continue;
                Int q = a.at(row, j) / a.at(row, j0);
                if (q != 0)
                    a.add_col(j, j0, -q);
                if (a.at(row, j) != 0)
                    dirty = true;
            }
            if (!dirty)
                break;
        }
        if (a.at(row, j0) != 0) {
            if (a.at(row, j0) < 0)
                a.scale_col(j0, -1);
            if (reduce_left) {
                const Int& h = a.at(row, j0);
                for (std::size_t j = 0; j < j0; ++j) {
                    Int q = a.at(row, j) / h;
                    if (a.at(row, j) % h < 0)
                        q -= 1;  // floor: representative in [0, h)
                    if (q != 0)
                        a.add_col(j, j0, -q);
                }
            }
            pivot_rows.push_back(row);
            ++j0;
        }
    }
    return pivot_rows;
}

}  // namespace detail

inline Mat hermite_normal_form(const Mat& m) {
    Mat a = m;
    auto pivots = detail::col_eliminate(a, a.rows(), true);
    Mat h(m.rows(), pivots.size());
    for (std::size_t j = 0; j < pivots.size(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            h.at(i, j) = a.at(i, j);
    return h;
}

/* Basis of the integer kernel {x : m x = 0}.  The kernel of an integer matrix
 * is a saturated sublattice, so the result generates it in full. */
inline Mat kernel(const Mat& m) {
    Mat stacked = Mat::vcat(m, Mat::identity(m.cols()));
    auto pivots = detail::col_eliminate(stacked, m.rows(), false);
    std::size_t k = pivots.size();
    Mat ker(m.cols(), m.cols() - k);
    for (std::size_t j = k; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.cols(); ++i)
            ker.at(i, j - k) = stacked.at(m.rows() + i, j);
    return ker;
}

/* Solve h y = b by forward substitution along the recorded pivot structure.
 * h must be column-eliminated (pivot rows increasing).  Returns false when b
 * is not an integer combination of the columns. */
namespace detail {

inline bool hnf_solve(const Mat& h, const std::vector<std::size_t>& pivot_rows, const Vec& b, Vec* y) {
    Vec res = b;
    Vec sol(pivot_rows.size());
    for (std::size_t j = 0; j < pivot_rows.size(); ++j) {
        std::size_t pr = pivot_rows[j];
        const Int& coef = h.at(pr, j);
        if (res[pr] % coef != 0)
            return false;
        sol[j] = res[pr] / coef;
        if (sol[j] != 0)
            for (std::size_t i = 0; i < h.rows(); ++i)
                res[i] -= sol[j] * h.at(i, j);
    }
    for (const Int& x : res)
        if (x != 0)
            return false;
    if (y)
        *y = std::move(sol);
    return true;
}

}  // namespace detail

/* Solve m x = b over the integers; empty when no integral solution exists. */
inline std::optional<Vec> solve_in_lattice(const Mat& m, const Vec& b) {
    require(b.size() == m.rows(), "solve_in_lattice: vector length does not match row count");
    Mat stacked = Mat::vcat(m, Mat::identity(m.cols()));
    auto pivots = detail::col_eliminate(stacked, m.rows(), false);
    Mat top(m.rows(), stacked.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < stacked.cols(); ++j)
            top.at(i, j) = stacked.at(i, j);
    Vec y;
    if (!detail::hnf_solve(top, pivots, b, &y))
        return std::nullopt;
    Vec x(m.cols());
    for (std::size_t j = 0; j < pivots.size(); ++j)
        if (y[j] != 0)
            for (std::size_t i = 0; i < m.cols(); ++i)
                x[i] += y[j] * stacked.at(m.rows() + i, j);
    return x;
}

/* ------------------------------------------------------------------------
 * Invariant-factor decomposition of (lattice spanned by ker_gens) modulo
 * (lattice spanned by img_gens), together with enough structure to express
 * further ambient vectors in the chosen cyclic basis.  This is the single
 * place "cycles mod boundaries" happens; everything upstream funnels here.
 * ---------------------------------------------------------------------- */

struct Subquotient {
    /* invariant factors: finite ones (>= 2) in divisibility order, then 0s
     * (0 = infinite cyclic).  Factors equal to 1 are dropped. */
    std::vector<Int> factors;
    /* ambient representatives of the surviving generators, one column each */
    Mat reps;

    /* adapted data for coordinate lookups */
    Mat basis;                      // HNF basis of the kernel lattice
    std::vector<std::size_t> basis_pivots;
    Mat u;                          // Smith row transform on coordinates
    std::vector<std::size_t> keep;  // adapted indices with factor != 1
    std::vector<Int> adapted_factors;

    bool trivial() const { return factors.empty(); }

    /* |group|; 0 when infinite */
    Int order() const {
        Int o = 1;
        for (const Int& f : factors) {
            if (f == 0)
                return 0;
            o *= f;
        }
        return o;
    }

    /* Coordinates of the class of w in the surviving generators; torsion
     * coordinates are reduced into [0, factor).  w must lie in the kernel
     * lattice. */
    std::vector<Int> coords(const Vec& w) const {
        Vec y0;
        require(detail::hnf_solve(basis, basis_pivots, w, &y0),
                "Subquotient::coords: vector outside the kernel lattice");
        Vec y = u.mul(y0);
        std::vector<Int> out;
        out.reserve(keep.size());
        for (std::size_t t = 0; t < keep.size(); ++t) {
            Int c = y[keep[t]];
            const Int& f = factors[t];
            if (f != 0) {
                c %= f;
                if (c < 0)
                    c += f;
            }
            out.push_back(c);
        }
        return out;
    }
};

inline Subquotient subquotient(const Mat& ker_gens, const Mat& img_gens) {
    require(ker_gens.rows() == img_gens.rows(),
            "subquotient: kernel and image lattices live in different ambient ranks");
    Subquotient q;
    q.basis = hermite_normal_form(ker_gens);
    q.basis_pivots.clear();
    {   /* recover pivot rows of the canonical basis */
        for (std::size_t j = 0; j < q.basis.cols(); ++j) {
            std::size_t i = 0;
            while (q.basis.at(i, j) == 0)
                ++i;
            q.basis_pivots.push_back(i);
        }
    }
    const std::size_t k = q.basis.cols();

    /* image generators in kernel-basis coordinates */
    Mat c(k, img_gens.cols());
    for (std::size_t j = 0; j < img_gens.cols(); ++j) {
        Vec y;
        if (!detail::hnf_solve(q.basis, q.basis_pivots, img_gens.col(j), &y))
            throw Error("subquotient: image generator " + std::to_string(j) +
                        " is not contained in the kernel lattice");
        c.set_col(j, y);
    }

    Smith sm = smith_normal_form(c);
    q.u = sm.u;
    Mat adapted = q.basis * sm.uinv;

    const std::size_t diag = k < c.cols() ? k : c.cols();
    q.adapted_factors.assign(k, Int(0));
    for (std::size_t i = 0; i < diag; ++i)
        q.adapted_factors[i] = sm.s.at(i, i);

    std::vector<Vec> rep_cols;
    for (std::size_t i = 0; i < k; ++i) {
        if (q.adapted_factors[i] == 1)
            continue;
        q.keep.push_back(i);
        q.factors.push_back(q.adapted_factors[i]);
        rep_cols.push_back(adapted.col(i));
    }
    q.reps = Mat::from_cols(ker_gens.rows(), rep_cols);
    return q;
}

inline std::vector<Int> subquotient_decomposition(const Mat& ker_gens, const Mat& img_gens) {
    return subquotient(ker_gens, img_gens).factors;
}

}  // namespace wreathcoh

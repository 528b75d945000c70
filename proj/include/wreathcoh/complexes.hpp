#pragma once

#include <optional>
#include <string>

#include "exactlin.hpp"
#include "graded.hpp"

namespace wreathcoh {

/* Cochain complex of finitely generated free Z-modules, supported on the
 * degree range [lo, hi].  diffs[m - lo] is the map out of degree m, of shape
 * rank(m+1) x rank(m); the top differential is the zero map out of hi.
 * Outside the stored range every rank is zero.
 *
 * A complex obtained by truncating something infinite sets `truncated` and
 * the degree range on which its cohomology agrees with the untruncated one;
 * cohomology queries outside that range are refused rather than answered
 * wrongly. */
struct CochainComplex {
    int lo = 0;
    int hi = -1;
    std::vector<std::size_t> ranks;
    std::vector<Mat> diffs;
    std::vector<std::vector<std::string>> labels;
    bool truncated = false;
    int cert_lo = 0;
    int cert_hi = -1;

    std::size_t rank(int m) const {
        if (m < lo || m > hi)
            return 0;
        return ranks[static_cast<std::size_t>(m - lo)];
    }

    Mat d(int m) const {
        if (m < lo || m > hi)
            return Mat(rank(m + 1), rank(m));
        return diffs[static_cast<std::size_t>(m - lo)];
    }

    const std::vector<std::string>& label(int m) const {
        static const std::vector<std::string> none;
        if (m < lo || m > hi)
            return none;
        return labels[static_cast<std::size_t>(m - lo)];
    }

    bool degree_certified(int m) const { return !truncated || (m >= cert_lo && m <= cert_hi); }

    void validate() const {
        require(ranks.size() == diffs.size() && ranks.size() == labels.size(),
                "CochainComplex: ragged internal arrays");
        if (hi < lo)
            return;
        for (int m = lo; m <= hi; ++m) {
            const Mat& dm = diffs[static_cast<std::size_t>(m - lo)];
            require(dm.cols() == rank(m) && dm.rows() == rank(m + 1),
                    "CochainComplex: differential out of degree " + std::to_string(m) +
                    " has the wrong shape");
            require(labels[static_cast<std::size_t>(m - lo)].size() == rank(m),
                    "CochainComplex: label count mismatch in degree " + std::to_string(m));
            if (m > lo)
                require((dm * diffs[static_cast<std::size_t>(m - 1 - lo)]).is_zero(),
                        "CochainComplex: d∘d nonzero out of degree " + std::to_string(m - 1));
        }
    }
};

/* Model of a space with a single interesting cohomology class: H^i = Z/n for
 * n >= 2 (two generators, differential multiplication by n), H^i = Z for
 * n == 0 (one generator).  The degree-(i-1) generator is labelled "lower". */
inline CochainComplex build_cyclic_complex(const Int& n, int i) {
    require(n >= 0, "build_cyclic_complex: order must be 0 (infinite) or positive");
    CochainComplex c;
    if (n == 0) {
        c.lo = c.hi = i;
        c.ranks = {1};
        c.diffs = {Mat(0, 1)};
        c.labels = {{"g"}};
        return c;
    }
    c.lo = i - 1;
    c.hi = i;
    c.ranks = {1, 1};
    Mat d(1, 1);
    d.at(0, 0) = n;
    c.diffs = {d, Mat(0, 1)};
    c.labels = {{"lower"}, {"g"}};
    return c;
}

inline CochainComplex direct_sum(const std::vector<CochainComplex>& parts) {
    CochainComplex out;
    bool any = false;
    for (const auto& c : parts) {
        if (c.hi < c.lo)
            continue;
        if (!any) {
            out.lo = c.lo;
            out.hi = c.hi;
            any = true;
        } else {
            out.lo = std::min(out.lo, c.lo);
            out.hi = std::max(out.hi, c.hi);
        }
    }
    if (!any)
        return out;
    for (int m = out.lo; m <= out.hi; ++m) {
        std::size_t r = 0;
        std::vector<std::string> lab;
        for (std::size_t k = 0; k < parts.size(); ++k) {
            r += parts[k].rank(m);
            for (const auto& s : parts[k].label(m))
                lab.push_back(std::to_string(k) + ":" + s);
        }
        out.ranks.push_back(r);
        out.labels.push_back(std::move(lab));
    }
    for (int m = out.lo; m <= out.hi; ++m) {
        Mat dm(out.rank(m + 1), out.rank(m));
        std::size_t row0 = 0, col0 = 0;
        for (const auto& c : parts) {
            Mat b = c.d(m);
            for (std::size_t i = 0; i < b.rows(); ++i)
                for (std::size_t j = 0; j < b.cols(); ++j)
                    dm.at(row0 + i, col0 + j) = b.at(i, j);
            row0 += c.rank(m + 1);
            col0 += c.rank(m);
        }
        out.diffs.push_back(std::move(dm));
    }
    return out;
}

/* Tensor product with the usual sign: d(x⊗y) = dx⊗y + (-1)^{deg x} x⊗dy.
 * The basis of degree m is ordered by (degree of the left factor, left index,
 * right index), all ascending. */
inline CochainComplex tensor(const CochainComplex& a, const CochainComplex& b) {
    CochainComplex out;
    if (a.hi < a.lo || b.hi < b.lo)
        return out;
    out.lo = a.lo + b.lo;
    out.hi = a.hi + b.hi;
    auto offset = [&](int m, int adeg) {
        std::size_t off = 0;
        for (int t = a.lo; t < adeg; ++t)
            off += a.rank(t) * b.rank(m - t);
        return off;
    };
    for (int m = out.lo; m <= out.hi; ++m) {
        std::size_t r = 0;
        std::vector<std::string> lab;
        for (int t = a.lo; t <= a.hi; ++t) {
            r += a.rank(t) * b.rank(m - t);
            for (std::size_t i = 0; i < a.rank(t); ++i)
                for (std::size_t j = 0; j < b.rank(m - t); ++j)
                    lab.push_back(a.label(t)[i] + "⊗" + b.label(m - t)[j]);
        }
        out.ranks.push_back(r);
        out.labels.push_back(std::move(lab));
    }
    for (int m = out.lo; m <= out.hi; ++m) {
        Mat dm(out.rank(m + 1), out.rank(m));
        for (int t = a.lo; t <= a.hi; ++t) {
            std::size_t nb = b.rank(m - t);
            if (a.rank(t) == 0 || nb == 0)
                continue;
            Mat da = a.d(t);
            Mat db = b.d(m - t);
            std::size_t src = offset(m, t);
            std::size_t dst_left = offset(m + 1, t + 1);
            std::size_t dst_right = offset(m + 1, t);
            Int sign = (t % 2 == 0) ? 1 : -1;
            for (std::size_t i = 0; i < a.rank(t); ++i)
                for (std::size_t j = 0; j < nb; ++j) {
                    std::size_t col = src + i * nb + j;
                    for (std::size_t i2 = 0; i2 < da.rows(); ++i2)
                        if (da.at(i2, i) != 0)
                            dm.at(dst_left + i2 * nb + j, col) += da.at(i2, i);
                    for (std::size_t j2 = 0; j2 < db.rows(); ++j2)
                        if (db.at(j2, j) != 0)
                            dm.at(dst_right + i * b.rank(m - t + 1) + j2, col) += sign * db.at(j2, j);
                }
        }
        out.diffs.push_back(std::move(dm));
    }
    return out;
}

/* Cohomology in one degree, kept as a Subquotient so callers can express
 * further cocycles in the chosen invariant-factor basis. */
inline Subquotient cohomology_at(const CochainComplex& c, int m) {
    require(c.degree_certified(m),
            "cohomology_at: degree " + std::to_string(m) + " lies outside the certified range [" +
            std::to_string(c.cert_lo) + ", " + std::to_string(c.cert_hi) + "]");
    return subquotient(kernel(c.d(m)), c.d(m - 1));
}

inline Graded cohomology(const CochainComplex& c, int lo, int hi) {
    Graded h;
    for (int m = lo; m <= hi; ++m) {
        if (c.rank(m) == 0 && !(c.truncated && (m < c.cert_lo || m > c.cert_hi)))
            continue;
        for (const auto& f : cohomology_at(c, m).factors)
            h.add(m, f);
    }
    return h.canonical();
}

struct Cocycle {
    int degree = 0;
    Vec coeffs;
};

/* Order of the class of z in H^degree: 0 when the class has infinite order,
 * 1 when it is a coboundary. */
inline Int cocycle_order(const CochainComplex& c, const Cocycle& z) {
    require(z.coeffs.size() == c.rank(z.degree), "cocycle_order: coefficient length mismatch");
    Vec dz = c.d(z.degree).mul(z.coeffs);
    for (const auto& v : dz)
        require(v == 0, "cocycle_order: not a cocycle");
    Mat bound = c.d(z.degree - 1);
    Mat span = Mat::hcat(bound, Mat::from_cols(z.coeffs.size(), {z.coeffs}));
    Subquotient q = subquotient(span, bound);
    Int ord = 1;
    for (const auto& f : q.factors) {
        if (f == 0)
            return 0;
        ord = lcm(ord, f);
    }
    return ord;
}

/* Smallest model realizing the given graded group up to degree max_degree:
 * one cyclic block per summand instance.  Labels carry the block index; block
 * k in the sum is the k-th instance in (degree, order) order. */
inline CochainComplex complex_from_graded(const Graded& h, int max_degree) {
    std::vector<CochainComplex> parts;
    for (const auto& f : h.restrict(0, max_degree).families)
        for (long long m = 0; m < f.multiplicity; ++m)
            parts.push_back(build_cyclic_complex(f.order, f.first_degree));
    CochainComplex out = direct_sum(parts);
    if (out.hi < out.lo) {
        out.lo = 0;
        out.hi = -1;
    }
    return out;
}

/* Matrix of H^m(f) for a chain map f = {degree -> matrix}, rows/cols indexed
 * by the invariant-factor bases of the two cohomology groups. */
inline Mat induced_map_on_cohomology(const CochainComplex& a, const CochainComplex& b,
                                     const std::map<int, Mat>& f, int m) {
    auto at = [&](int deg, std::size_t rows, std::size_t cols) {
        auto it = f.find(deg);
        if (it == f.end())
            return Mat(rows, cols);
        require(it->second.rows() == rows && it->second.cols() == cols,
                "induced_map_on_cohomology: component in degree " + std::to_string(deg) +
                " has the wrong shape");
        return it->second;
    };
    int chk_lo = std::min(a.lo, b.lo) - 1, chk_hi = std::max(a.hi, b.hi) + 1;
    for (int t = chk_lo; t <= chk_hi; ++t) {
        Mat ft = at(t, b.rank(t), a.rank(t));
        Mat ft1 = at(t + 1, b.rank(t + 1), a.rank(t + 1));
        if ((b.d(t) * ft) != (ft1 * a.d(t)))
            throw Error("induced_map_on_cohomology: not a chain map in degree " + std::to_string(t));
    }
    Subquotient ha = cohomology_at(a, m);
    Subquotient hb = cohomology_at(b, m);
    Mat fm = at(m, b.rank(m), a.rank(m));
    Mat out(hb.factors.size(), ha.factors.size());
    for (std::size_t k = 0; k < ha.factors.size(); ++k) {
        std::vector<Int> co = hb.coords(fm.mul(ha.reps.col(k)));
        for (std::size_t r = 0; r < co.size(); ++r)
            out.at(r, k) = co[r];
    }
    return out;
}

}  // namespace wreathcoh

#pragma once

#include "complexes.hpp"

namespace wreathcoh {

/* basis permutation with signs: e_k -> sign[k] * e_{to[k]} */
struct SignedPerm {
    std::vector<std::size_t> to;
    std::vector<int> sign;

    Mat matrix() const {
        Mat m(to.size(), to.size());
        for (std::size_t k = 0; k < to.size(); ++k)
            m.at(to[k], k) = sign[k];
        return m;
    }
};

/* Complex with an action of a cyclic group of order p: act[m - c.lo] is the
 * chosen generator t in degree m.  Validation checks t^p = 1 and t d = d t. */
struct EquivariantComplex {
    CochainComplex c;
    int p = 1;
    std::vector<SignedPerm> act;

    Mat action_matrix(int m) const {
        if (m < c.lo || m > c.hi)
            return Mat(0, 0);
        return act[static_cast<std::size_t>(m - c.lo)].matrix();
    }

    void validate() const {
        c.validate();
        require(act.size() == c.ranks.size(), "EquivariantComplex: one action per degree required");
        for (int m = c.lo; m <= c.hi; ++m) {
            Mat a = action_matrix(m);
            Mat power = Mat::identity(a.rows());
            for (int k = 0; k < p; ++k)
                power = a * power;
            require(power == Mat::identity(a.rows()),
                    "EquivariantComplex: generator does not have order dividing p in degree " +
                    std::to_string(m));
            Mat lhs = (m + 1 <= c.hi) ? action_matrix(m + 1) * c.d(m) : c.d(m);
            require(lhs == c.d(m) * a,
                    "EquivariantComplex: action does not commute with d in degree " + std::to_string(m));
        }
    }
};

/* p-fold tensor power of c with the cyclic permutation action
 *   t(x_1 ⊗ ... ⊗ x_p) = ±(x_p ⊗ x_1 ⊗ ... ⊗ x_{p-1}),
 * sign (-1)^{deg x_p * (deg x_1 + ... + deg x_{p-1})}.  The partial powers are
 * kept so basis indices can be converted to tuples and back. */
struct CyclicPower {
    EquivariantComplex ec;
    std::vector<CochainComplex> towers;  // towers[k] = k-fold power, k = 1..p

    const CochainComplex& base() const { return towers[1]; }

    std::vector<std::pair<int, std::size_t>> tuple_of(int m, std::size_t idx) const {
        int p = ec.p;
        std::vector<std::pair<int, std::size_t>> tup(static_cast<std::size_t>(p));
        int mc = m;
        std::size_t ic = idx;
        for (int k = p; k >= 2; --k) {
            const CochainComplex& left = towers[static_cast<std::size_t>(k - 1)];
            bool found = false;
            for (int t = left.lo; t <= left.hi && !found; ++t) {
                std::size_t rb = base().rank(mc - t);
                std::size_t block = left.rank(t) * rb;
                if (ic < block) {
                    tup[static_cast<std::size_t>(k - 1)] = {mc - t, ic % rb};
                    ic /= rb;
                    mc = t;
                    found = true;
                } else {
                    ic -= block;
                }
            }
            require(found, "CyclicPower: basis index out of range");
        }
        tup[0] = {mc, ic};
        return tup;
    }

    std::size_t index_of(const std::vector<std::pair<int, std::size_t>>& tup) const {
        int p = ec.p;
        require(tup.size() == static_cast<std::size_t>(p), "CyclicPower: tuple length mismatch");
        std::size_t idx = tup[0].second;
        int m = tup[0].first;
        for (int k = 2; k <= p; ++k) {
            const CochainComplex& left = towers[static_cast<std::size_t>(k - 1)];
            auto [dc, j] = tup[static_cast<std::size_t>(k - 1)];
            std::size_t off = 0;
            for (int u = left.lo; u < m; ++u)
                off += left.rank(u) * base().rank(m + dc - u);
            idx = off + idx * base().rank(dc) + j;
            m += dc;
        }
        return idx;
    }
};

inline CyclicPower cyclic_power(const CochainComplex& c, int p) {
    require(p >= 1, "cyclic_power: need p >= 1");
    require(c.hi >= c.lo, "cyclic_power: empty complex");
    CyclicPower cp;
    cp.towers.resize(static_cast<std::size_t>(p) + 1);
    cp.towers[1] = c;
    for (int k = 2; k <= p; ++k)
        cp.towers[static_cast<std::size_t>(k)] = tensor(cp.towers[static_cast<std::size_t>(k - 1)], c);
    cp.ec.c = cp.towers[static_cast<std::size_t>(p)];
    cp.ec.p = p;
    for (int m = cp.ec.c.lo; m <= cp.ec.c.hi; ++m) {
        SignedPerm perm;
        std::size_t r = cp.ec.c.rank(m);
        perm.to.resize(r);
        perm.sign.resize(r);
        for (std::size_t idx = 0; idx < r; ++idx) {
            auto tup = cp.tuple_of(m, idx);
            int dp = tup.back().first;
            bool neg = (dp % 2 != 0) && ((m - dp) % 2 != 0);
            std::rotate(tup.begin(), tup.end() - 1, tup.end());
            perm.to[idx] = cp.index_of(tup);
            perm.sign[idx] = neg ? -1 : 1;
        }
        cp.ec.act.push_back(std::move(perm));
    }
    return cp;
}

/* Periodic rank-one resolution of Z over the group ring of C_p: the boundary
 * W_i -> W_{i-1} is multiplication by t-1 for odd i and by the norm
 * 1 + t + ... + t^{p-1} for even i >= 2. */
struct Resolution {
    int p = 2;

    Vec boundary_element(int i) const {
        require(i >= 1, "Resolution: boundaries start at W_1");
        Vec e(static_cast<std::size_t>(p), 0);
        if (i % 2 != 0) {
            e[0] = -1;
            e[1 % p] += 1;
        } else {
            for (auto& v : e)
                v = 1;
        }
        return e;
    }

    Mat regular_rep() const {
        Mat t(static_cast<std::size_t>(p), static_cast<std::size_t>(p));
        for (int k = 0; k < p; ++k)
            t.at(static_cast<std::size_t>((k + 1) % p), static_cast<std::size_t>(k)) = 1;
        return t;
    }

    /* the element of boundary_element(i) acting on a module where t acts by a */
    static Mat eval(const Vec& element, const Mat& a) {
        Mat out(a.rows(), a.cols());
        Mat pow = Mat::identity(a.rows());
        for (std::size_t k = 0; k < element.size(); ++k) {
            if (element[k] != 0)
                out = out + pow * element[k];
            pow = a * pow;
        }
        return out;
    }

    Mat boundary_matrix(int i) const { return eval(boundary_element(i), regular_rep()); }
};

inline Resolution periodic_resolution(int p) {
    require(p >= 2, "periodic_resolution: need p >= 2");
    return Resolution{p};
}

/* First-quadrant-in-i double complex.  Differentials commute as stored; the
 * totalization introduces the sign (-1)^i on the vertical one. */
struct DoubleComplex {
    int i_lo = 0, i_hi = -1, j_lo = 0, j_hi = -1;
    std::vector<std::vector<std::size_t>> rk;  // [i - i_lo][j - j_lo]
    std::vector<std::vector<Mat>> dh;          // (i,j) -> (i+1,j)
    std::vector<std::vector<Mat>> dv;          // (i,j) -> (i,j+1)

    bool inside(int i, int j) const { return i >= i_lo && i <= i_hi && j >= j_lo && j <= j_hi; }

    std::size_t rank(int i, int j) const {
        if (!inside(i, j))
            return 0;
        return rk[static_cast<std::size_t>(i - i_lo)][static_cast<std::size_t>(j - j_lo)];
    }

    Mat horiz(int i, int j) const {
        if (!inside(i, j))
            return Mat(rank(i + 1, j), rank(i, j));
        return dh[static_cast<std::size_t>(i - i_lo)][static_cast<std::size_t>(j - j_lo)];
    }

    Mat vert(int i, int j) const {
        if (!inside(i, j))
            return Mat(rank(i, j + 1), rank(i, j));
        return dv[static_cast<std::size_t>(i - i_lo)][static_cast<std::size_t>(j - j_lo)];
    }

    void validate() const {
        for (int i = i_lo; i <= i_hi; ++i)
            for (int j = j_lo; j <= j_hi; ++j) {
                require(horiz(i, j).cols() == rank(i, j), "DoubleComplex: horizontal shape mismatch");
                /* the map out of the last stored column targets the dropped
                 * column i_hi + 1 and may keep its full row count */
                require(i == i_hi || horiz(i, j).rows() == rank(i + 1, j),
                        "DoubleComplex: horizontal shape mismatch");
                require(vert(i, j).rows() == rank(i, j + 1) && vert(i, j).cols() == rank(i, j),
                        "DoubleComplex: vertical shape mismatch");
                if (i + 1 <= i_hi)
                    require((horiz(i + 1, j) * horiz(i, j)).is_zero(), "DoubleComplex: d_h^2 != 0");
                require((vert(i, j + 1) * vert(i, j)).is_zero(), "DoubleComplex: d_v^2 != 0");
                if (i < i_hi)
                    require(vert(i + 1, j) * horiz(i, j) == horiz(i, j + 1) * vert(i, j),
                            "DoubleComplex: squares do not commute");
            }
    }
};

/* Columns of equivariant maps out of the periodic resolution, identified with
 * the module itself: column i carries the rows of e, the horizontal map out of
 * column i is the action of the boundary element of W_{i+1}. */
inline DoubleComplex equivariant_hom_double_complex(const Resolution& w, const EquivariantComplex& e,
                                                    int i_max) {
    require(w.p == e.p, "equivariant_hom_double_complex: group orders disagree");
    require(i_max >= 0, "equivariant_hom_double_complex: need at least column 0");
    DoubleComplex dc;
    dc.i_lo = 0;
    dc.i_hi = i_max;
    dc.j_lo = e.c.lo;
    dc.j_hi = e.c.hi;
    for (int i = 0; i <= i_max; ++i) {
        std::vector<std::size_t> rks;
        std::vector<Mat> hrow, vrow;
        for (int j = dc.j_lo; j <= dc.j_hi; ++j) {
            rks.push_back(e.c.rank(j));
            hrow.push_back(Resolution::eval(w.boundary_element(i + 1), e.action_matrix(j)));
            vrow.push_back(e.c.d(j));
        }
        dc.rk.push_back(std::move(rks));
        dc.dh.push_back(std::move(hrow));
        dc.dv.push_back(std::move(vrow));
    }
    return dc;
}

/* Total complex with the block layout kept for later coordinate surgery.
 * Blocks of total degree m are listed by ascending column i. */
struct TotalComplex {
    CochainComplex c;
    std::map<int, std::vector<std::pair<int, std::size_t>>> layout;  // m -> [(i, offset)]

    std::size_t offset_of(int m, int i) const {
        auto it = layout.find(m);
        require(it != layout.end(), "TotalComplex: no blocks in degree " + std::to_string(m));
        for (const auto& [col, off] : it->second)
            if (col == i)
                return off;
        throw Error("TotalComplex: no block in column " + std::to_string(i) + " of degree " +
                    std::to_string(m));
    }
};

/* Totalization restricted to total degrees <= safe_hi + 1.  Because the rows
 * have bounded support, a block (i, m - i) exists only for i >= m - j_hi, so a
 * column range extending `margin` columns past the window makes every stored
 * degree exact; cohomology is then certified on [lo, safe_hi]. */
inline TotalComplex totalize(const DoubleComplex& dc, int safe_lo, int safe_hi, int margin) {
    require(margin >= 2, "totalize: margin must be at least 2");
    require(dc.i_hi >= (safe_hi - dc.j_lo) + margin,
            "totalize: double complex too narrow; need columns up to " +
            std::to_string((safe_hi - dc.j_lo) + margin) + ", have " + std::to_string(dc.i_hi));
    TotalComplex tot;
    int lo = std::min(dc.i_lo + dc.j_lo, safe_lo - 1);
    int hi = safe_hi + 1;
    tot.c.lo = lo;
    tot.c.hi = hi;
    for (int m = lo; m <= hi; ++m) {
        std::size_t r = 0;
        std::vector<std::string> lab;
        std::vector<std::pair<int, std::size_t>> row;
        for (int i = std::max(dc.i_lo, m - dc.j_hi); i <= std::min(dc.i_hi, m - dc.j_lo); ++i) {
            row.push_back({i, r});
            for (std::size_t k = 0; k < dc.rank(i, m - i); ++k)
                lab.push_back("(" + std::to_string(i) + "," + std::to_string(m - i) + ")#" +
                              std::to_string(k));
            r += dc.rank(i, m - i);
        }
        tot.layout[m] = std::move(row);
        tot.c.ranks.push_back(r);
        tot.c.labels.push_back(std::move(lab));
    }
    for (int m = lo; m <= hi; ++m) {
        Mat dm(tot.c.rank(m + 1), tot.c.rank(m));
        if (m < hi) {
            for (const auto& [i, off] : tot.layout.at(m)) {
                int j = m - i;
                Mat h = dc.horiz(i, j);
                if (!h.is_zero()) {
                    std::size_t dst = tot.offset_of(m + 1, i + 1);
                    for (std::size_t r2 = 0; r2 < h.rows(); ++r2)
                        for (std::size_t c2 = 0; c2 < h.cols(); ++c2)
                            dm.at(dst + r2, off + c2) += h.at(r2, c2);
                }
                Mat v = dc.vert(i, j);
                if (!v.is_zero()) {
                    std::size_t dst = tot.offset_of(m + 1, i);
                    Int sign = (i % 2 == 0) ? 1 : -1;
                    for (std::size_t r2 = 0; r2 < v.rows(); ++r2)
                        for (std::size_t c2 = 0; c2 < v.cols(); ++c2)
                            dm.at(dst + r2, off + c2) += sign * v.at(r2, c2);
                }
            }
        }
        tot.c.diffs.push_back(std::move(dm));
    }
    tot.c.truncated = true;
    tot.c.cert_lo = lo;
    tot.c.cert_hi = safe_hi;
    return tot;
}

/* H^i(C_p; M) for the module M with generator action t_action. */
inline std::vector<Int> cp_cohomology(int p, const Mat& t_action, int i) {
    require(p >= 2, "cp_cohomology: need p >= 2");
    require(i >= 0, "cp_cohomology: negative cohomological degree");
    require(t_action.rows() == t_action.cols(), "cp_cohomology: action matrix must be square");
    Resolution w{p};
    Mat out_map = Resolution::eval(w.boundary_element(i + 1), t_action);
    Mat in_map = (i == 0) ? Mat(t_action.rows(), 0)
                          : Resolution::eval(w.boundary_element(i), t_action);
    return subquotient(kernel(out_map), in_map).factors;
}

/* Everything needed to study one wreath construction: the base complex, its
 * p-th cyclic power, the Hom double complex over the periodic resolution, and
 * a totalization certified on [safe_lo, safe_hi]. */
struct WreathModel {
    CochainComplex base;
    int p = 2;
    CyclicPower power;
    Resolution res;
    DoubleComplex e0;
    TotalComplex tot;
    int safe_lo = 0, safe_hi = 0;
};

inline WreathModel build_wreath_model(const CochainComplex& base, int p, int safe_lo, int safe_hi) {
    require(p >= 2, "build_wreath_model: need p >= 2");
    WreathModel wm;
    wm.base = base;
    wm.p = p;
    wm.power = cyclic_power(base, p);
    wm.res = periodic_resolution(p);
    int margin = p + 2;
    int i_max = std::max(0, safe_hi - wm.power.ec.c.lo) + margin;
    wm.e0 = equivariant_hom_double_complex(wm.res, wm.power.ec, i_max);
    wm.tot = totalize(wm.e0, safe_lo, safe_hi, margin);
    wm.safe_lo = safe_lo;
    wm.safe_hi = safe_hi;
    return wm;
}

/* The column-0 cochain z ⊗ ... ⊗ z attached to a cocycle z of the base, as a
 * cocycle of the total complex.  For p = 2 and z of odd degree the tensor
 * square is anti-invariant, the candidate fails to be closed, and no class is
 * produced: callers get an error instead of a wrong answer. */
inline Cocycle wreath_class_cocycle(const WreathModel& wm, const Cocycle& z) {
    require(z.degree % 2 == 0 || wm.p == 2,
            "wreath_class_cocycle: odd-degree classes only make sense for p = 2");
    require(z.coeffs.size() == wm.base.rank(z.degree), "wreath_class_cocycle: coefficient length mismatch");
    Vec dz = wm.base.d(z.degree).mul(z.coeffs);
    for (const auto& v : dz)
        require(v == 0, "wreath_class_cocycle: input is not a cocycle");
    int m = wm.p * z.degree;
    require(m >= wm.tot.c.cert_lo && m <= wm.tot.c.cert_hi,
            "wreath_class_cocycle: target degree outside the certified window");
    Vec w(wm.tot.c.rank(m), 0);
    std::size_t off = wm.tot.offset_of(m, 0);
    std::vector<std::size_t> nz;
    for (std::size_t k = 0; k < z.coeffs.size(); ++k)
        if (z.coeffs[k] != 0)
            nz.push_back(k);
    std::vector<std::size_t> pick(static_cast<std::size_t>(wm.p), 0);
    while (!nz.empty()) {
        Int coeff = 1;
        std::vector<std::pair<int, std::size_t>> tup;
        for (int t = 0; t < wm.p; ++t) {
            std::size_t k = nz[pick[static_cast<std::size_t>(t)]];
            coeff *= z.coeffs[k];
            tup.push_back({z.degree, k});
        }
        w[off + wm.power.index_of(tup)] += coeff;
        int t = wm.p - 1;
        while (t >= 0 && ++pick[static_cast<std::size_t>(t)] == nz.size()) {
            pick[static_cast<std::size_t>(t)] = 0;
            --t;
        }
        if (t < 0)
            break;
    }
    Vec dw = wm.tot.c.d(m).mul(w);
    for (const auto& v : dw)
        require(v == 0,
                "wreath_class_cocycle: the diagonal cochain is not closed; for p = 2 this happens "
                "exactly when the class has odd degree (the generator negates the tensor square)");
    return Cocycle{m, w};
}

}  // namespace wreathcoh

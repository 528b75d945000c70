#pragma once

#include <tuple>

#include "equivariant.hpp"

namespace wreathcoh {

/* Which filtration of the total complex is in play: I filters by column
 * (E_2 = column cohomology of row cohomology), II filters by row
 * (E_1 = column cohomology of the rows themselves). */
enum class Kind { I, II };

inline std::string kind_name(Kind k) { return k == Kind::I ? "I" : "II"; }

struct PageEntry {
    int i = 0, j = 0;
    std::vector<Int> factors;
    bool has_d = false;
    int ti = 0, tj = 0;
    Mat d;
};

struct Page {
    int r = 0;
    Kind kind = Kind::I;
    int m_lo = 0, m_hi = -1;
    int cert_total_hi = 0;  // entries with i + j <= this are free of truncation effects
    std::vector<PageEntry> entries;

    const PageEntry* find(int i, int j) const {
        for (const auto& e : entries)
            if (e.i == i && e.j == j)
                return &e;
        return nullptr;
    }
};

/* Pages and differentials of the spectral sequence of a filtered total
 * complex, computed literally: E_r at filtration s and total degree m is
 *     Z_r / (Z_{r-1}(s+1, m) + d Z_{r-1}(s-r+1, m-1)),
 *     Z_r = {x in F^s, deg m : dx in F^{s+r}},
 * with every lattice represented exactly by integer generator matrices.
 * Entries too close to the stored column range are cut by the truncation and
 * are reported outside the certified region. */
class PageComputer {
  public:
    PageComputer(const DoubleComplex& dc, Kind kind) : dc_(dc), kind_(kind) {}

    int fil(int i, int j) const { return kind_ == Kind::I ? i : j; }

    int cert_total_hi() const { return dc_.i_hi + dc_.j_lo - 1; }

    bool certified(int i, int j) const { return i + j <= cert_total_hi(); }

    /* every differential vanishes from this page on, for either filtration */
    int stable_r() const { return dc_.j_hi - dc_.j_lo + 2; }

    struct Ambient {
        std::vector<std::pair<int, int>> blocks;
        std::vector<std::size_t> offsets;
        std::size_t dim = 0;
    };

    Ambient ambient(int s, int m) const {
        return blocks_where(m, [&](int i, int j) { return fil(i, j) >= s; });
    }

    Ambient low_ambient(int bound, int m) const {
        return blocks_where(m, [&](int i, int j) { return fil(i, j) < bound; });
    }

    /* matrix of the total differential between block sets in adjacent degrees */
    Mat transfer(const Ambient& src, const Ambient& dst) const {
        Mat out(dst.dim, src.dim);
        for (std::size_t b = 0; b < src.blocks.size(); ++b) {
            auto [i, j] = src.blocks[b];
            std::size_t off = src.offsets[b];
            add_block(out, dst, i + 1, j, dc_.horiz(i, j), off, 1);
            add_block(out, dst, i, j + 1, dc_.vert(i, j), off, (i % 2 == 0) ? Int(1) : Int(-1));
        }
        return out;
    }

    /* generators of Z_r(s, m), as columns in ambient(s, m) coordinates */
    const Mat& zr(int r, int s, int m) {
        auto key = std::make_tuple(r, s, m);
        auto it = zcache_.find(key);
        if (it != zcache_.end())
            return it->second;
        Mat z;
        if (r == 0) {
            z = Mat::identity(ambient(s, m).dim);
        } else {
            Ambient src = ambient(s, m);
            Ambient low = blocks_where(m + 1, [&](int i, int j) { return fil(i, j) < s + r; });
            z = kernel(transfer(src, low));
        }
        return zcache_.emplace(key, std::move(z)).first->second;
    }

    const Subquotient& entry(int r, int i, int j) {
        require(r >= 1, "PageComputer: pages start at r = 1");
        int s = fil(i, j), m = i + j;
        auto key = std::make_tuple(r, s, m);
        auto it = ecache_.find(key);
        if (it != ecache_.end())
            return it->second;
        Ambient amb = ambient(s, m);
        Mat numer = zr(r, s, m);
        Mat pad = embed(ambient(s + 1, m), amb) * zr(r - 1, s + 1, m);
        Ambient prev = ambient(s - r + 1, m - 1);
        Mat img = transfer(prev, amb) * zr(r - 1, s - r + 1, m - 1);
        return ecache_.emplace(key, subquotient(numer, Mat::hcat(pad, img))).first->second;
    }

    std::pair<int, int> target(int r, int i, int j) const {
        return kind_ == Kind::I ? std::make_pair(i + r, j - r + 1) : std::make_pair(i - r + 1, j + r);
    }

    /* d_r out of (i, j) in the invariant-factor bases of source and target */
    Mat differential(int r, int i, int j) {
        const Subquotient& src = entry(r, i, j);
        auto [ti, tj] = target(r, i, j);
        const Subquotient& dst = entry(r, ti, tj);
        Mat out(dst.factors.size(), src.factors.size());
        if (src.factors.empty() || dst.factors.empty())
            return out;
        int s = fil(i, j), m = i + j;
        Mat t = transfer(ambient(s, m), ambient(s + r, m + 1));
        for (std::size_t k = 0; k < src.factors.size(); ++k) {
            std::vector<Int> co = dst.coords(t.mul(src.reps.col(k)));
            for (std::size_t rr = 0; rr < co.size(); ++rr)
                out.at(rr, k) = co[rr];
        }
        return out;
    }

    Page page(int r, int m_lo, int m_hi) {
        Page p;
        p.r = r;
        p.kind = kind_;
        p.m_lo = m_lo;
        p.m_hi = m_hi;
        p.cert_total_hi = cert_total_hi();
        for (int m = m_lo; m <= m_hi; ++m)
            for (int i = std::max(dc_.i_lo, m - dc_.j_hi); i <= std::min(dc_.i_hi, m - dc_.j_lo); ++i) {
                int j = m - i;
                const Subquotient& e = entry(r, i, j);
                if (e.factors.empty())
                    continue;
                PageEntry pe;
                pe.i = i;
                pe.j = j;
                pe.factors = e.factors;
                auto [ti, tj] = target(r, i, j);
                if (!entry(r, ti, tj).factors.empty()) {
                    pe.has_d = true;
                    pe.ti = ti;
                    pe.tj = tj;
                    pe.d = differential(r, i, j);
                }
                p.entries.push_back(std::move(pe));
            }
        return p;
    }

    std::vector<Page> pages(int r_lo, int r_hi, int m_lo, int m_hi) {
        std::vector<Page> out;
        for (int r = r_lo; r <= r_hi; ++r)
            out.push_back(page(r, m_lo, m_hi));
        return out;
    }

    Page e_infinity(int m_lo, int m_hi) {
        Page p = page(stable_r(), m_lo, m_hi);
        for (auto& e : p.entries)
            e.has_d = false;
        return p;
    }

  private:
    template <class Pred>
    Ambient blocks_where(int m, Pred keep) const {
        Ambient a;
        for (int i = std::max(dc_.i_lo, m - dc_.j_hi); i <= std::min(dc_.i_hi, m - dc_.j_lo); ++i) {
            int j = m - i;
            if (!keep(i, j))
                continue;
            a.blocks.push_back({i, j});
            a.offsets.push_back(a.dim);
            a.dim += dc_.rank(i, j);
        }
        return a;
    }

    static Mat embed(const Ambient& sub, const Ambient& amb) {
        Mat e(amb.dim, sub.dim);
        for (std::size_t b = 0; b < sub.blocks.size(); ++b) {
            std::size_t pos = find_block(amb, sub.blocks[b].first, sub.blocks[b].second);
            std::size_t n = sub.offsets[b];
            std::size_t width = (b + 1 < sub.blocks.size() ? sub.offsets[b + 1] : sub.dim) - n;
            for (std::size_t k = 0; k < width; ++k)
                e.at(pos + k, n + k) = 1;
        }
        return e;
    }

    static std::size_t find_block(const Ambient& a, int i, int j) {
        for (std::size_t b = 0; b < a.blocks.size(); ++b)
            if (a.blocks[b] == std::make_pair(i, j))
                return a.offsets[b];
        throw Error("PageComputer: block lookup failed");
    }

    static void add_block(Mat& out, const Ambient& dst, int i, int j, const Mat& m, std::size_t src_off,
                          const Int& sign) {
        if (m.rows() == 0 || m.is_zero())
            return;
        for (std::size_t b = 0; b < dst.blocks.size(); ++b)
            if (dst.blocks[b] == std::make_pair(i, j)) {
                std::size_t dst_off = dst.offsets[b];
                for (std::size_t r = 0; r < m.rows(); ++r)
                    for (std::size_t c = 0; c < m.cols(); ++c)
                        if (m.at(r, c) != 0)
                            out.at(dst_off + r, src_off + c) += sign * m.at(r, c);
                return;
            }
    }

    DoubleComplex dc_;
    Kind kind_;
    std::map<std::tuple<int, int, int>, Mat> zcache_;
    std::map<std::tuple<int, int, int>, Subquotient> ecache_;
};

/* One bidegree's worth of evidence that scaling the base differential by n
 * scales d_r by n^r at the level of zig-zag representatives. */
struct ScaledEntryReport {
    int i = 0, j = 0;
    std::size_t classes = 0;
    bool zigzag_ok = true;         // truncated representatives satisfy the zig-zag equations
    bool vector_scaled_ok = true;  // scaled image equals n^r times the unit image, as vectors
    Mat base_d;                    // d_r classes in the unit model
    Mat scaled_d;                  // image classes of the scaled zig-zags in the scaled model
};

struct ScaledCheckReport {
    int p = 2, d = 0, r = 1;
    Int n = 1;
    bool all_ok = true;
    std::vector<ScaledEntryReport> entries;
};

/* Compare the r-th differential of the model with H^d = Z/n against the unit
 * model, through explicit zig-zags on the second filtration: truncate each
 * E_r representative to its first r filtration blocks, rescale block k by
 * n^k, and confirm both that the rescaled chain is again a valid
 * representative and that its image is exactly n^r times the unit image. */
inline ScaledCheckReport check_scaled_differential(int p, int d, const Int& n, int r, int m_lo,
                                                   int m_hi) {
    require(n >= 1, "check_scaled_differential: the scale must be positive");
    WreathModel unit = build_wreath_model(build_cyclic_complex(1, d), p, m_lo, m_hi + 1);
    WreathModel scaled = build_wreath_model(build_cyclic_complex(n, d), p, m_lo, m_hi + 1);
    PageComputer pc1(unit.e0, Kind::II);
    PageComputer pcn(scaled.e0, Kind::II);
    ScaledCheckReport rep;
    rep.p = p;
    rep.d = d;
    rep.r = r;
    rep.n = n;
    for (int m = m_lo; m <= m_hi; ++m) {
        for (int i = std::max(0, m - unit.e0.j_hi); i <= m - unit.e0.j_lo; ++i) {
            int j = m - i;
            if (!pc1.certified(i, j) || !pc1.certified(i - r + 1, j + r))
                continue;
            const Subquotient& src = pc1.entry(r, i, j);
            if (src.factors.empty())
                continue;
            ScaledEntryReport er;
            er.i = i;
            er.j = j;
            er.classes = src.factors.size();
            int s = j;
            PageComputer::Ambient amb = pc1.ambient(s, m);
            PageComputer::Ambient dst = pc1.ambient(s + r, m + 1);
            Mat t1 = pc1.transfer(amb, dst);
            Mat tn = pcn.transfer(amb, dst);
            Mat low1 = pc1.transfer(amb, pc1.low_ambient(s + r, m + 1));
            Mat lown = pcn.transfer(amb, pcn.low_ambient(s + r, m + 1));
            auto [ti, tj] = pc1.target(r, i, j);
            const Subquotient& dst1 = pc1.entry(r, ti, tj);
            const Subquotient& dstn = pcn.entry(r, ti, tj);
            er.base_d = Mat(dst1.factors.size(), src.factors.size());
            er.scaled_d = Mat(dstn.factors.size(), src.factors.size());
            Int nr = pow_int(n, static_cast<unsigned long>(r));
            for (std::size_t k = 0; k < src.factors.size(); ++k) {
                Vec x = src.reps.col(k);
                Vec trunc(x.size(), 0), zig(x.size(), 0);
                for (std::size_t b = 0; b < amb.blocks.size(); ++b) {
                    int f = pc1.fil(amb.blocks[b].first, amb.blocks[b].second);
                    if (f >= s + r)
                        continue;
                    std::size_t width =
                        (b + 1 < amb.blocks.size() ? amb.offsets[b + 1] : amb.dim) - amb.offsets[b];
                    Int scale = pow_int(n, static_cast<unsigned long>(f - s));
                    for (std::size_t c = 0; c < width; ++c) {
                        trunc[amb.offsets[b] + c] = x[amb.offsets[b] + c];
                        zig[amb.offsets[b] + c] = scale * x[amb.offsets[b] + c];
                    }
                }
                if (!all_zero(low1.mul(trunc)) || !all_zero(lown.mul(zig)))
                    er.zigzag_ok = false;
                Vec y1 = t1.mul(trunc);
                Vec yn = tn.mul(zig);
                for (std::size_t c = 0; c < y1.size(); ++c)
                    if (yn[c] != nr * y1[c])
                        er.vector_scaled_ok = false;
                std::vector<Int> c1 = dst1.coords(y1);
                std::vector<Int> cn = dstn.coords(yn);
                for (std::size_t rr = 0; rr < c1.size(); ++rr)
                    er.base_d.at(rr, k) = c1[rr];
                for (std::size_t rr = 0; rr < cn.size(); ++rr)
                    er.scaled_d.at(rr, k) = cn[rr];
            }
            rep.all_ok = rep.all_ok && er.zigzag_ok && er.vector_scaled_ok;
            rep.entries.push_back(std::move(er));
        }
    }
    return rep;
}

}  // namespace wreathcoh

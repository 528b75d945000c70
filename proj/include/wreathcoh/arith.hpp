#pragma once

#include <sstream>

#include "graded.hpp"

namespace wreathcoh {

/* Exponent data of a graded group: e bounds the order of everything in
 * positive degree, ee only what persists in arbitrarily high degree.  The
 * p = 2 wreath step can leave e undetermined between two values; then
 * ambiguous is set and the truth lies in {e, e_upper}.  A value 0 means
 * unbounded (an infinite cyclic summand in positive degree). */
struct ExponentPair {
    Int e = 1;
    Int e_upper = 1;
    Int ee = 1;
    bool ambiguous = false;
};

inline ExponentPair exponents_of_graded(const Graded& h) {
    ExponentPair out;
    for (const auto& f : h.canonical().families) {
        // canonical families are single-degree or periodic-forever; either way
        // the family meets positive degrees unless it is a lone entry at <= 0
        if (f.count != kInfinite && f.first_degree <= 0)
            continue;
        if (f.order == 0)
            out.e = 0;
        else if (out.e != 0)
            out.e = lcm(out.e, f.order);
        if (f.count == kInfinite) {
            if (f.order == 0)
                out.ee = 0;
            else if (out.ee != 0)
                out.ee = lcm(out.ee, f.order);
        }
    }
    out.e_upper = out.e;
    return out;
}

/* the escape clause of the p = 2 exponent rule: finitely many summands of
 * maximal order, all sitting in odd degrees */
inline bool p2_exponent_caveat(const Graded& h) {
    ExponentPair ex = exponents_of_graded(h);
    if (ex.e == 0 || ex.e == 1)
        return false;
    for (const auto& f : h.canonical().families) {
        if (f.order != ex.e)
            continue;
        if (f.count == kInfinite)
            return false;  // maximal order recurs forever
        if (f.first_degree > 0 && f.first_degree % 2 == 0)
            return false;
    }
    return true;
}

/* Exponents after one wreath step.  Both exponents multiply by p, except
 * that for p = 2 under the caveat the new e is only known to lie in
 * {e, 2e}; the pair keeps both candidates rather than picking one. */
inline ExponentPair wreath_exponents(const ExponentPair& g, int p, bool caveat) {
    require(p >= 2, "wreath_exponents: need p >= 2");
    ExponentPair out;
    out.ee = g.ee * p;
    if (p == 2 && caveat) {
        out.e = g.e;
        out.e_upper = g.e_upper * 2;
        out.ambiguous = true;
    } else {
        out.e = g.e * p;
        out.e_upper = g.e_upper * p;
        out.ambiguous = g.ambiguous;
    }
    return out;
}

/* Dimensions of the exponent-p^(i+1) support varieties through one wreath
 * step: the diagonal contributes p times the old dimension, the previous
 * variety one level down contributes unchanged. */
inline std::vector<Int> dim_w_wreath(const std::vector<Int>& dims, int p) {
    require(p >= 2, "dim_w_wreath: need p >= 2");
    std::vector<Int> out;
    std::size_t len = dims.size();
    for (std::size_t i = 0; i <= len; ++i) {
        Int cur = (i < len) ? dims[i] * p : Int(0);
        if (i == 0)
            cur = std::max(cur, Int(1));
        else
            cur = std::max(cur, dims[i - 1]);
        if (cur > 0 || i < len)
            out.push_back(cur);
    }
    while (!out.empty() && out.back() == 0)
        out.pop_back();
    return out;
}

/* dim W_i for the symmetric group on m points: sum of m_j p^{j-i-1} over
 * the base-p digits m_j with j >= i+1. */
inline Int dim_w_symmetric(const Int& m, int p, int i) {
    require(p >= 2, "dim_w_symmetric: need p >= 2");
    require(m >= 0 && i >= 0, "dim_w_symmetric: negative input");
    std::vector<Int> digits;
    Int rest = m;
    while (rest > 0) {
        digits.push_back(rest % p);
        rest /= p;
    }
    Int total = 0;
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < digits.size(); ++j)
        total += digits[j] * pow_int(p, static_cast<unsigned long>(j) - static_cast<unsigned long>(i) - 1);
    return total;
}

/* p-valuation of the cohomological Euler characteristic bound: the sum of
 * the variety dimensions */
inline Int nu_p_che(const std::vector<Int>& dims) {
    Int s = 0;
    for (const auto& d : dims)
        s += d;
    return s;
}

/* A tower is a base group followed by iterated wreathing with C_p:
 *   "C:8 wr C_2 wr C_2"   cyclic base of order 8, two wreath steps
 *   "E:3^2 wr C_3"        elementary abelian 3^2 base, one step
 * All primes in one tower must agree. */
struct TowerReport {
    int p = 2;
    int steps = 0;
    ExponentPair exps;
    std::vector<Int> dims;
    Int nu_che = 0;
    Int nu_order = 0;
};

namespace detail {

inline int small_prime_of(const Int& n) {
    for (int q : {2, 3, 5, 7, 11, 13}) {
        if (n % q == 0)
            return q;
    }
    throw Error("tower: unsupported prime in order " + n.str());
}

}  // namespace detail

inline TowerReport run_tower(const std::string& spec) {
    std::istringstream in(spec);
    std::string tok;
    require(static_cast<bool>(in >> tok), "tower: empty description");
    TowerReport rep;
    if (tok.rfind("C:", 0) == 0) {
        Int order(tok.substr(2));
        require(order >= 2, "tower: cyclic base needs order at least 2");
        rep.p = detail::small_prime_of(order);
        int r = 0;
        Int rest = order;
        while (rest % rep.p == 0) {
            rest /= rep.p;
            ++r;
        }
        require(rest == 1, "tower: cyclic base must have prime power order, got " + order.str());
        rep.exps.e = rep.exps.e_upper = rep.exps.ee = order;
        rep.dims.assign(static_cast<std::size_t>(r), Int(1));
        rep.nu_order = r;
    } else if (tok.rfind("E:", 0) == 0) {
        std::string body = tok.substr(2);
        auto caret = body.find('^');
        require(caret != std::string::npos, "tower: elementary abelian base is E:<p>^<n>");
        Int prime(body.substr(0, caret));
        Int count(body.substr(caret + 1));
        rep.p = detail::small_prime_of(prime);
        require(prime == rep.p, "tower: E base needs a prime, got " + prime.str());
        require(count >= 1, "tower: E base needs at least one factor");
        rep.exps.e = rep.exps.e_upper = rep.exps.ee = prime;
        rep.dims = {count};
        rep.nu_order = count;
    } else {
        throw Error("tower: base must be C:<order> or E:<p>^<n>, got '" + tok + "'");
    }
    while (in >> tok) {
        require(tok == "wr", "tower: expected 'wr', got '" + tok + "'");
        require(static_cast<bool>(in >> tok), "tower: dangling 'wr'");
        require(tok.rfind("C_", 0) == 0, "tower: steps wreath by C_<p>, got '" + tok + "'");
        Int q(tok.substr(2));
        require(q == rep.p, "tower: all steps must use the same prime as the base");
        rep.exps = wreath_exponents(rep.exps, rep.p, false);
        rep.dims = dim_w_wreath(rep.dims, rep.p);
        rep.nu_order = rep.nu_order * rep.p + 1;
        ++rep.steps;
    }
    rep.nu_che = nu_p_che(rep.dims);
    return rep;
}

}  // namespace wreathcoh

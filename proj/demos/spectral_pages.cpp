// Walk the row-filtration spectral sequence of a wreath construction page by
// page, printing each nonzero entry and flagging the nonzero differentials.
#include <iostream>

#include "wreathcoh/spectral.hpp"

using namespace wreathcoh;

static std::string group_str(const std::vector<Int>& factors) {
    if (factors.empty())
        return "0";
    std::string s;
    for (const auto& f : factors) {
        if (!s.empty())
            s += " + ";
        s += (f == 0) ? "Z" : "Z/" + f.str();
    }
    return s;
}

int main() {
    const int p = 3;
    const Int n = 2;  // coprime to p, so torsion has to die through a differential
    const int hi = p + 4;

    WreathModel wm = build_wreath_model(build_cyclic_complex(n, 1), p, 0, hi);
    PageComputer pc(wm.e0, Kind::II);

    for (int r = 2; r <= pc.stable_r(); ++r) {
        Page pg = pc.page(r, 0, hi);
        std::cout << "E_" << r << " [kind " << kind_name(pg.kind) << "]\n";
        for (const auto& e : pg.entries) {
            if (e.factors.empty())
                continue;
            std::cout << "  (" << e.i << "," << e.j << "): " << group_str(e.factors);
            if (e.has_d && !e.d.is_zero())
                std::cout << "   d_" << r << " -> (" << e.i - r + 1 << "," << e.j + r
                          << ") nonzero";
            std::cout << "\n";
        }
        std::cout << "\n";
    }

    std::cout << "limit vs assembled cohomology:\n";
    Page inf = pc.e_infinity(0, hi);
    for (int m = 0; m <= hi; ++m) {
        Int layers = 1;
        for (const auto& e : inf.entries)
            if (e.i + e.j == m)
                for (const auto& f : e.factors)
                    layers *= f;
        Int whole = 1;
        for (const auto& f : cohomology_at(wm.tot.c, m).factors)
            whole *= f;
        std::cout << "  degree " << m << ": product of limit orders " << layers.str()
                  << ", |H^" << m << "| " << whole.str() << "\n";
    }
    return 0;
}

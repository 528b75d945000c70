// Predict H^m for one wreath construction two ways and line the answers up:
// the closed-form tables against the computed cohomology of the total complex.
#include <iostream>

#include "wreathcoh/formulas.hpp"

using namespace wreathcoh;

static std::string group_str(const std::vector<Int>& parts) {
    if (parts.empty())
        return "0";
    std::string s;
    for (const auto& f : parts) {
        if (!s.empty())
            s += " + ";
        s += (f == 0) ? "Z" : "Z/" + f.str();
    }
    return s;
}

int main() {
    const int p = 3, d = 2;
    const Int n = 3;
    const int lo = 0, hi = p * d + 3;

    std::cout << "base: Z/" << n << " in degree " << d << ", wreathed by C_" << p << "\n\n";

    Graded base;
    base.add(d, n);
    Graded predicted = predict_wreath_cohomology(base, p, lo, hi);
    auto by_degree = predicted.primary_by_degree(lo, hi);

    WreathModel wm = build_wreath_model(build_cyclic_complex(n, d), p, lo, hi);

    for (int m = lo; m <= hi; ++m) {
        std::vector<Int> closed = by_degree.count(m) ? by_degree[m] : std::vector<Int>{};
        std::vector<Int> brute = primary_multiset(cohomology_at(wm.tot.c, m).factors);
        std::cout << "H^" << m << "  closed form: " << group_str(closed)
                  << "   computed: " << group_str(brute) << (closed == brute ? "" : "   <- disagree")
                  << "\n";
    }
    return 0;
}

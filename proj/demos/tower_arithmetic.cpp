// Iterate the wreath-step arithmetic up a tower: exponents of the integral
// cohomology, dimensions of the support varieties, and the two nu invariants.
#include <iostream>

#include "wreathcoh/arith.hpp"

using namespace wreathcoh;

int main() {
    for (const std::string& spec :
         {std::string("C:8 wr C_2 wr C_2"), std::string("E:3^2 wr C_3 wr C_3")}) {
        TowerReport rep = run_tower(spec);
        std::cout << spec << "\n";
        std::cout << "  p = " << rep.p << ", wreath steps = " << rep.steps << "\n";
        if (rep.exps.ambiguous)
            std::cout << "  exponent e = " << rep.exps.e.str() << " or "
                      << rep.exps.e_upper.str() << " (undetermined)";
        else
            std::cout << "  exponent e = " << rep.exps.e.str();
        std::cout << ", eventual exponent ee = " << rep.exps.ee.str() << "\n";
        std::cout << "  variety dimensions:";
        for (const auto& d : rep.dims)
            std::cout << " " << d.str();
        std::cout << "\n";
        std::cout << "  nu_p(che) = " << rep.nu_che.str() << ", nu_p(order) = "
                  << rep.nu_order.str() << "\n\n";
    }
    return 0;
}

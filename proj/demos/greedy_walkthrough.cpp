// Walkthrough: thresholding greedy expansion of one vector, its Chebyshev
// refinement, and the exhaustive weighted oracle it competes against.

#include <iostream>

#include "greedylab/chebyshev.hpp"
#include "greedylab/constants.hpp"
#include "greedylab/greedy.hpp"
#include "greedylab/normed_space.hpp"
#include "greedylab/sigma.hpp"
#include "greedylab/weight.hpp"

int main() {
    using namespace greedylab;

    const auto space = NormedSpace::lp(6, 2.0);
    const Weight w = Weight::harmonic(6);
    const CoefficientVector x{0.9, -1.4, 0.3, 1.4, -0.2, 0.05};

    std::cout << "space " << space.name() << ", ||x|| = " << space.norm(x)
              << "\n\n";

    const auto o = greedy_ordering(x);
    std::cout << "greedy ordering:";
    for (int i : o.rho) std::cout << ' ' << i;
    std::cout << "\n\n";

    std::cout << "m  support      w(L)    ||x-G_m||  chebyshev  sigma_best\n";
    for (int m = 1; m <= 4; ++m) {
        const IndexSet s = greedy_support(o, m);
        const double budget = w_measure(w, s);
        const double resid = space.norm(x - project(x, s));
        const double cheb = chebyshev_refine(space, x, s).value;
        const double best =
            sigma_w(space, x, w, budget, SigmaMode::best).value;
        std::cout << m << "  {";
        bool first = true;
        for (int i : s) {
            if (!first) std::cout << ',';
            std::cout << i;
            first = false;
        }
        std::cout << "}  " << budget << "  " << resid << "  " << cheb << "  "
                  << best << "\n";
    }

    const auto d = democracy_constant_w(space, w);
    std::cout << "\nweighted democracy constant: " << d.value
              << (d.exact ? " (exact)" : " (lower bound)") << "\n";
    return 0;
}

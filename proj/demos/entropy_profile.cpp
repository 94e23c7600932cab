// Sweep the localized entropy of the golden-mean shift with the first-symbol
// potential across its rotation interval and print the profile.

#include <cstdio>

#include "rotspec/rotspec.hpp"

int main() {
    using namespace rotspec;
    TransitionGraph g = golden_mean_shift();
    CylinderPotential phi = label_potential(g);
    RotationPolytope P = rotation_set(g, phi);
    std::printf("Rot = [%g, %g], h_top = %.6f\n", P.vertices.front()[0], P.vertices.back()[0],
                topological_entropy(g));
    for (auto& [w, h] : detail::entropy_profile(g, phi, 24))
        std::printf("w = %.4f   H(w) = %.6f\n", w, h);
    return 0;
}

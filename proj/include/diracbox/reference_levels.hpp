#pragma once

#include <array>

namespace diracbox {

/// Published cubic-box levels: the first six distinct energies at
/// L/L_C = 0.1, 1, 10, with k_l L_l / pi and E / (m c^2) as printed (6 digits).
struct ReferenceLevel {
    std::array<int, 3> qn;
    int degeneracy;
    double lambda;
    std::array<double, 3> phase_over_pi;
    double epsilon;
};

inline constexpr std::array<ReferenceLevel, 18> kReferenceLevels{{
    {{1, 1, 1}, 1, 0.1, {0.674129, 0.674129, 0.674129}, 36.6957},
    {{1, 1, 1}, 1, 1.0, {0.730735, 0.730735, 0.730735}, 4.10004},
    {{1, 1, 1}, 1, 10.0, {0.914156, 0.914156, 0.914156}, 1.11689},
    {{1, 1, 2}, 3, 0.1, {0.761157, 0.761157, 1.5664}, 59.718},
    {{1, 1, 2}, 3, 1.0, {0.789821, 0.789821, 1.61153}, 6.24063},
    {{1, 1, 2}, 3, 10.0, {0.917935, 0.917935, 1.8383}, 1.22469},
    {{1, 2, 2}, 3, 0.1, {0.800534, 1.62894, 1.62894}, 76.6236},
    {{1, 2, 2}, 3, 1.0, {0.820262, 1.66176, 1.66176}, 7.88349},
    {{1, 2, 2}, 3, 10.0, {0.921162, 1.84449, 1.84449}, 1.32488},
    {{1, 1, 3}, 3, 0.1, {0.819801, 0.819801, 2.53383}, 87.5453},
    {{1, 1, 3}, 3, 1.0, {0.835499, 0.835499, 2.56592}, 8.93086},
    {{1, 1, 3}, 3, 10.0, {0.923098, 0.923098, 2.77709}, 1.38902},
    {{2, 2, 2}, 1, 0.1, {1.66969, 1.66969, 1.66969}, 90.8601},
    {{2, 2, 2}, 1, 1.0, {1.69565, 1.69565, 1.69565}, 9.28075},
    {{2, 2, 2}, 1, 10.0, {1.84989, 1.84989, 1.84989}, 1.41889},
    {{1, 2, 3}, 6, 0.1, {0.838015, 1.69214, 2.57123}, 100.225},
    {{1, 2, 3}, 6, 1.0, {0.850724, 1.71438, 2.59869}, 10.1883},
    {{1, 2, 3}, 6, 10.0, {0.92567, 1.85317, 2.7841}, 1.47937},
}};

/// Tolerances for reproducing the published table: absolute on k L / pi,
/// relative on the energy, and relative for the printed-data consistency check.
inline constexpr double kReferencePhaseTolerance = 5e-5;
inline constexpr double kReferenceEnergyTolerance = 5e-5;
inline constexpr double kReferenceSelfCheckTolerance = 5e-4;

} // namespace diracbox

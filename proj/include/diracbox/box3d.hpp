#pragma once

#include <array>
#include <vector>

#include "diracbox/units.hpp"

namespace diracbox {

struct SweepOptions {
    double tol = 1e-10;   ///< max |delta x_l| between sweeps, x_l = u_l lambda_l
    double tol_f = 1e-9;  ///< max normalized residual
    int max_sweeps = 500;
};

/// Self-consistent root of the three coupled wall conditions.
struct ModeSolution {
    QuantumNumbers qn{{1, 1, 1}};
    BoxGeometry geometry = BoxGeometry::cube(1.0);
    WaveVector u;
    double epsilon = 1.0;
    double kinetic = 0.0;                ///< epsilon - 1
    std::array<double, 3> residuals{};   ///< normalized, see condition_residual
    int sweeps = 0;
    bool damped = false;

    /// k_l L_l = u_l lambda_l.
    double phase(int axis) const { return u[axis] * geometry[axis]; }
};

/// Right side of tan(u_l lambda_l) = 2 u_l (eps + 1) / (u_l^2 - (eps + 1)^2),
/// evaluated through the cancellation-free denominator
/// (eps + 1)^2 - u_l^2 = sum_{j != l} u_j^2 + 2 (eps + 1). Strictly negative for
/// u_l > 0, zero for u_l = 0.
double rhs_coupled(const WaveVector& u, int axis);

/// |tan x - rhs| scaled by |cos x| / sqrt(1 + rhs^2); equals |sin(x - x*)| where
/// x* is the exact phase for the frozen right side.
double condition_residual(double phase, double rhs);

/// Gauss-Seidel relaxation: each axis is solved by bisection on its branch with
/// the other two components frozen, starting from x_l = (n_l - 1/4) pi. Falls
/// back to half-step damping if the update norm stops decreasing.
///
/// Throws SolverError(ConvergenceFailure) with the last iterate on failure.
ModeSolution solve_mode(const BoxGeometry& geometry, const QuantumNumbers& qn, const SweepOptions& options = {});

/// Residuals of `u` recomputed from scratch (used on generated permutations).
std::array<double, 3> mode_residuals(const BoxGeometry& geometry, const WaveVector& u);

struct Level {
    double epsilon = 1.0;
    double kinetic = 0.0;
    int degeneracy = 0;            ///< spatial only; spin is applied by dos
    QuantumNumbers representative{{1, 1, 1}};
    std::vector<ModeSolution> members;  ///< ordered by quantum numbers
};

struct LevelTable {
    BoxGeometry geometry = BoxGeometry::cube(1.0);
    int n_max = 0;
    std::vector<Level> levels;     ///< ascending in energy
    /// Every state with energy below this bound is present in the table: the
    /// lowest excluded state is (1, 1, n_max + 1) up to permutation.
    double complete_below = 0.0;

    std::size_t solution_count() const;
};

/// Merge tolerance on kinetic energy: |dT| <= 1e-8 max(T_a, T_b).
inline constexpr double kLevelGroupingTolerance = 1e-8;

/// Sort solutions by energy (ties by quantum numbers) and merge degenerate ones.
std::vector<Level> group_levels(std::vector<ModeSolution> solutions);

/// All n_max^3 triples with 1 <= n_l <= n_max, grouped into levels. Cubic boxes
/// solve each multiset once and permute. Triples are distributed over OpenMP
/// threads; the result does not depend on the thread count.
LevelTable enumerate_spectrum(const BoxGeometry& geometry, int n_max, const SweepOptions& options = {});

/// Serial reference for enumerate_spectrum (no cubic shortcut, no threads).
LevelTable enumerate_spectrum_serial(const BoxGeometry& geometry, int n_max, const SweepOptions& options = {});

/// tan(x) + x * ratio with ratio = L_C / L_l: the single-axis condition when
/// one component dominates the wave vector.
double reduced_dominant_equation(double x, double ratio);

/// Distinct multisets 1 <= n1 <= n2 <= n3 <= n_max in lexicographic order.
std::vector<QuantumNumbers> multisets(int n_max);

/// Distinct permutations of a triple, lexicographic.
std::vector<QuantumNumbers> permutations(const QuantumNumbers& qn);

} // namespace diracbox

#pragma once

#include <functional>
#include <optional>

namespace diracbox {

/// Search interval for a single sign change.
///
/// Open endpoints are never evaluated directly; the objective is sampled at
/// lo + delta / hi - delta with delta = 1e-12 (hi - lo). When the objective
/// diverges at an endpoint (tan at an odd multiple of pi/2) the caller can
/// supply the limiting sign instead, which then takes precedence.
struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
    bool open_lo = false;
    bool open_hi = false;
    std::optional<int> lo_sign;
    std::optional<int> hi_sign;

    static Bracket closed(double lo, double hi) { return {lo, hi, false, false, {}, {}}; }
    static Bracket open(double lo, double hi) { return {lo, hi, true, true, {}, {}}; }
};

struct SolveReport {
    double root = 0.0;
    double residual = 0.0;
    int iterations = 0;
    bool converged = false;
};

struct BisectOptions {
    double tol_x = 1e-12;
    double tol_f = 1e-10;
    int max_iter = 200;
};

using ScalarFunction = std::function<double(double)>;

/// Bisection on a bracketed sign change.
///
/// Terminates when the bracket width drops to tol_x, when |f(mid)| <= tol_f,
/// or when the midpoint can no longer be split in double precision. The
/// returned root is always strictly inside (lo, hi).
///
/// Throws SolverError(NoSignChange) if the effective endpoint signs agree and
/// SolverError(MaxIterationsExceeded) if max_iter halvings are not enough.
SolveReport bisect(const ScalarFunction& f, const Bracket& bracket, const BisectOptions& options = {});

} // namespace diracbox

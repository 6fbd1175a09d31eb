#include "diracbox/rootfind.hpp"

#include <cmath>
#include <sstream>

#include "diracbox/error.hpp"

namespace diracbox {

namespace {

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

} // namespace

SolveReport bisect(const ScalarFunction& f, const Bracket& bracket, const BisectOptions& options)
{
    if (!(bracket.lo < bracket.hi)) {
        throw SolverError(ErrorKind::InvalidBracket, "bracket requires lo < hi");
    }
    const double delta = 1e-12 * (bracket.hi - bracket.lo);
    double lo = bracket.open_lo ? bracket.lo + delta : bracket.lo;
    double hi = bracket.open_hi ? bracket.hi - delta : bracket.hi;

    const double f_lo = f(lo);
    const double f_hi = f(hi);
    const int s_lo = bracket.lo_sign.value_or(sign_of(f_lo));
    const int s_hi = bracket.hi_sign.value_or(sign_of(f_hi));

    SolveReport report;
    // Exact endpoint roots only count when the endpoint belongs to the bracket.
    if (!bracket.lo_sign && !bracket.open_lo && f_lo == 0.0) {
        std::ostringstream msg;
        msg << "root sits on the closed endpoint lo = " << lo;
        throw SolverError(ErrorKind::InvalidBracket, msg.str());
    }
    if (!bracket.hi_sign && !bracket.open_hi && f_hi == 0.0) {
        std::ostringstream msg;
        msg << "root sits on the closed endpoint hi = " << hi;
        throw SolverError(ErrorKind::InvalidBracket, msg.str());
    }
    if (s_lo == s_hi || s_lo == 0 || s_hi == 0) {
        std::ostringstream msg;
        msg << "no sign change on [" << bracket.lo << ", " << bracket.hi << "]";
        throw SolverError(ErrorKind::NoSignChange, msg.str());
    }

    for (int it = 1; it <= options.max_iter; ++it) {
        const double mid = lo + 0.5 * (hi - lo);
        const double f_mid = f(mid);
        report.root = mid;
        report.residual = f_mid;
        report.iterations = it;

        // The last condition fires once lo and hi are adjacent doubles.
        if (f_mid == 0.0 || std::abs(f_mid) <= options.tol_f || hi - lo <= options.tol_x || mid <= lo ||
            mid >= hi) {
            report.converged = true;
            return report;
        }
        if (sign_of(f_mid) == s_lo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    std::ostringstream msg;
    msg << "bisection did not converge in " << options.max_iter << " steps; last root " << report.root
        << ", residual " << report.residual;
    throw SolverError(ErrorKind::MaxIterationsExceeded, msg.str());
}

} // namespace diracbox

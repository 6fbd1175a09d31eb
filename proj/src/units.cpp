#include "diracbox/units.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "diracbox/error.hpp"

namespace diracbox {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::NoSignChange: return "NoSignChange";
    case ErrorKind::MaxIterationsExceeded: return "MaxIterationsExceeded";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::InvalidBracket: return "InvalidBracket";
    case ErrorKind::NotConverged: return "NotConverged";
    case ErrorKind::InsufficientSpectrum: return "InsufficientSpectrum";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

BoxGeometry::BoxGeometry(std::array<double, 3> lambda) : lambda_(lambda)
{
    for (double l : lambda_) {
        if (!(l > 0.0) || !std::isfinite(l)) {
            throw std::invalid_argument("box edge must be positive and finite, got " + std::to_string(l));
        }
    }
}

QuantumNumbers::QuantumNumbers(std::array<int, 3> n) : n_(n)
{
    for (int v : n_) {
        if (v < 1) {
            throw std::invalid_argument("quantum numbers start at 1, got " + std::to_string(v));
        }
    }
}

QuantumNumbers QuantumNumbers::sorted() const
{
    auto n = n_;
    std::sort(n.begin(), n.end());
    return QuantumNumbers(n);
}

double WaveVector::unit(int axis) const
{
    const double m = magnitude();
    return m > 0.0 ? u[axis] / m : 0.0;
}

double dispersion(double magnitude) { return std::sqrt(1.0 + magnitude * magnitude); }

double dispersion(const WaveVector& u) { return dispersion(u.magnitude()); }

double kinetic_energy(const WaveVector& u)
{
    const double m = u.magnitude();
    return m * m / (dispersion(m) + 1.0);
}

double r_factor(double magnitude) { return magnitude / (dispersion(magnitude) + 1.0); }

double r_factor(const WaveVector& u) { return r_factor(u.magnitude()); }

} // namespace diracbox

#pragma once

// Dimensionless units: lengths in Compton wavelengths L_C = hbar/(m c),
// momenta in m c, energies in m c^2.

#include <array>
#include <cmath>

namespace diracbox {

inline constexpr double pi = 3.14159265358979323846;

/// Box edges in Compton wavelengths.
class BoxGeometry {
public:
    /// Throws std::invalid_argument unless every edge is positive and finite.
    explicit BoxGeometry(std::array<double, 3> lambda);

    static BoxGeometry cube(double lambda) { return BoxGeometry({lambda, lambda, lambda}); }

    double operator[](int axis) const { return lambda_[axis]; }
    const std::array<double, 3>& edges() const { return lambda_; }
    bool is_cubic() const { return lambda_[0] == lambda_[1] && lambda_[1] == lambda_[2]; }

    friend bool operator==(const BoxGeometry&, const BoxGeometry&) = default;

private:
    std::array<double, 3> lambda_;
};

/// Branch labels (n1, n2, n3), each >= 1.
class QuantumNumbers {
public:
    explicit QuantumNumbers(std::array<int, 3> n);

    int operator[](int axis) const { return n_[axis]; }
    const std::array<int, 3>& values() const { return n_; }
    /// Non-decreasing reordering, the label of a cubic-box level.
    QuantumNumbers sorted() const;

    friend auto operator<=>(const QuantumNumbers&, const QuantumNumbers&) = default;

private:
    std::array<int, 3> n_;
};

/// Momentum components u_l = hbar k_l / (m c).
struct WaveVector {
    std::array<double, 3> u{};

    double operator[](int axis) const { return u[axis]; }
    double magnitude() const { return std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]); }
    /// k_hat_l; zero vector maps to zero.
    double unit(int axis) const;
};

/// epsilon = E / (m c^2) = sqrt(1 + u^2).
double dispersion(const WaveVector& u);
double dispersion(double magnitude);

/// epsilon - 1 computed as u^2 / (epsilon + 1), accurate when u << 1.
double kinetic_energy(const WaveVector& u);

/// r = u / (epsilon + 1), in [0, 1).
double r_factor(const WaveVector& u);
double r_factor(double magnitude);

} // namespace diracbox

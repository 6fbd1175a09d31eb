#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

#include "diracbox/box1d.hpp"
#include "diracbox/box3d.hpp"

namespace diracbox {

using Complex = std::complex<double>;
using Spinor2 = Eigen::Vector2cd;
using Spinor4 = Eigen::Matrix<Complex, 4, 1>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;

namespace pauli {
/// sigma_1, sigma_2, sigma_3 for axis = 0, 1, 2.
const Matrix2& sigma(int axis);
const Matrix2& identity();
} // namespace pauli

/// Dirac representation: alpha_i = [[0, sigma_i], [sigma_i, 0]], beta = diag(I, -I).
namespace dirac {
const Matrix4& alpha(int axis);
const Matrix4& beta();
/// gamma^0 = beta, gamma^i = beta alpha_i for mu = 1..3.
Matrix4 gamma(int mu);
} // namespace dirac

/// C_l / B_l = (i r khat_l - 1) / (i r khat_l + 1), unit modulus.
Complex coefficient_ratio(double r, double khat);

struct CoefficientSet {
    std::array<Complex, 3> B{};
    std::array<Complex, 3> C{};
};

/// Wall of the box: x_axis = 0 (far = false) or x_axis = lambda_axis (far = true).
struct Face {
    int axis = 0;
    bool far = false;

    /// +1 on the near wall, -1 on the far wall: the sign in +-i beta alpha psi = psi.
    int sign() const { return far ? -1 : 1; }
};

using Point = std::array<double, 3>;

/// Interior wavefunction built from products of per-axis standing waves.
///
///   upper = prod_j (B_j e^{i u_j x_j} + C_j e^{-i u_j x_j}) chi
///   lower = sum_m prod_j (B_j e^{i u_j x_j} + (-1)^{delta_jm} C_j e^{-i u_j x_j}) r khat_m sigma_m chi
///
/// Positions are in Compton units. The overall normalization is left at one.
class SpinorField {
public:
    SpinorField(ModeSolution mode, CoefficientSet coefficients, Spinor2 chi);

    Spinor4 operator()(const Point& x) const;
    Spinor2 upper(const Point& x) const;
    Spinor2 lower(const Point& x) const;

    /// Same field assembled from the eight plane-wave eigenspinors with
    /// momenta (+-u1, +-u2, +-u3) and coefficient products of B and C.
    Spinor4 plane_wave_sum(const Point& x) const;

    /// prod_j of the standing wave with the sign of C flipped on axis `flip`
    /// (flip = -1 for no flip).
    Complex standing_product(const Point& x, int flip) const;

    const ModeSolution& mode() const { return mode_; }
    const CoefficientSet& coefficients() const { return coefficients_; }
    const Spinor2& chi() const { return chi_; }
    double r() const { return r_; }
    double khat(int axis) const { return khat_[axis]; }

private:
    ModeSolution mode_;
    CoefficientSet coefficients_;
    Spinor2 chi_;
    double r_ = 0.0;
    std::array<double, 3> khat_{};
};

/// B_l = 1, C_l from coefficient_ratio. Throws SolverError(NotConverged) when
/// any residual of `mode` exceeds tol_f, std::invalid_argument for chi = 0.
SpinorField build_field(const ModeSolution& mode, const Spinor2& chi, double tol_f = 1e-9);

inline Spinor2 default_chi() { return Spinor2(Complex(1.0, 0.0), Complex(0.0, 0.0)); }

/// Point on `face` with in-face fractions (s, t) in [0, 1] along the two other
/// axes in increasing axis order.
Point face_point(const BoxGeometry& geometry, const Face& face, double s, double t);

/// | (+-i beta alpha_l - 1) psi | at `point`, which must lie on `face`.
double mit_residual(const SpinorField& field, const Face& face, const Point& point);

/// Residual of the per-axis scalar condition obtained after symmetrizing the
/// wall equations with {sigma_l, sigma_m} = 2 delta_lm:
///   | prod_j(...) -+ i r khat_l prod_j(... flipped on l) | |chi|.
double mit_reduced_residual(const SpinorField& field, const Face& face, const Point& point);

/// (J^0, J^1, J^2, J^3) = (psi^dag psi, psi^dag alpha_i psi).
std::array<double, 4> dirac_current(const SpinorField& field, const Point& point);

/// Same current as psi-bar gamma^mu psi with psi-bar = psi^dag gamma^0.
std::array<Complex, 4> dirac_current_covariant(const Spinor4& psi);

/// 1-D standing wave along z with spinor chi, for the bag of length lambda:
/// upper = (B e^{iuz} + C e^{-iuz}) chi, lower = (B e^{iuz} - C e^{-iuz}) r sigma_3 chi.
class StandingWave1D {
public:
    StandingWave1D(const Mode1D& mode, double lambda, Spinor2 chi);

    Spinor4 operator()(double z) const;
    double length() const { return lambda_; }
    Complex B() const { return B_; }
    Complex C() const { return C_; }

private:
    double u_ = 0.0;
    double lambda_ = 1.0;
    double r_ = 0.0;
    Complex B_{1.0, 0.0};
    Complex C_{};
    Spinor2 chi_;
};

/// | (+-i beta alpha_3 - 1) psi | at z = 0 (far = false) or z = lambda.
double mit_residual_1d(const StandingWave1D& wave, bool far);

} // namespace diracbox

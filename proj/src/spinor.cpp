#include "diracbox/spinor.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "diracbox/error.hpp"

namespace diracbox {

namespace {

constexpr Complex kI{0.0, 1.0};

std::array<Matrix2, 3> make_sigma()
{
    std::array<Matrix2, 3> s;
    s[0] << 0.0, 1.0, 1.0, 0.0;
    s[1] << 0.0, -kI, kI, 0.0;
    s[2] << 1.0, 0.0, 0.0, -1.0;
    return s;
}

std::array<Matrix4, 3> make_alpha()
{
    std::array<Matrix4, 3> a;
    for (int i = 0; i < 3; ++i) {
        a[i].setZero();
        a[i].topRightCorner<2, 2>() = pauli::sigma(i);
        a[i].bottomLeftCorner<2, 2>() = pauli::sigma(i);
    }
    return a;
}

Matrix4 make_beta()
{
    Matrix4 b = Matrix4::Zero();
    b.topLeftCorner<2, 2>() = Matrix2::Identity();
    b.bottomRightCorner<2, 2>() = -Matrix2::Identity();
    return b;
}

Spinor4 stack(const Spinor2& upper, const Spinor2& lower)
{
    Spinor4 psi;
    psi << upper, lower;
    return psi;
}

} // namespace

namespace pauli {

const Matrix2& sigma(int axis)
{
    static const auto s = make_sigma();
    return s.at(static_cast<std::size_t>(axis));
}

const Matrix2& identity()
{
    static const Matrix2 id = Matrix2::Identity();
    return id;
}

} // namespace pauli

namespace dirac {

const Matrix4& alpha(int axis)
{
    static const auto a = make_alpha();
    return a.at(static_cast<std::size_t>(axis));
}

const Matrix4& beta()
{
    static const Matrix4 b = make_beta();
    return b;
}

Matrix4 gamma(int mu)
{
    if (mu == 0) {
        return beta();
    }
    return beta() * alpha(mu - 1);
}

} // namespace dirac

Complex coefficient_ratio(double r, double khat)
{
    const Complex a = kI * (r * khat);
    return (a - 1.0) / (a + 1.0);
}

SpinorField::SpinorField(ModeSolution mode, CoefficientSet coefficients, Spinor2 chi)
    : mode_(std::move(mode)), coefficients_(coefficients), chi_(std::move(chi))
{
    r_ = r_factor(mode_.u);
    for (int l = 0; l < 3; ++l) {
        khat_[l] = mode_.u.unit(l);
    }
}

Complex SpinorField::standing_product(const Point& x, int flip) const
{
    Complex product{1.0, 0.0};
    for (int j = 0; j < 3; ++j) {
        const Complex forward = std::exp(kI * (mode_.u[j] * x[j]));
        const Complex backward = std::exp(-kI * (mode_.u[j] * x[j]));
        const double s = (j == flip) ? -1.0 : 1.0;
        product *= coefficients_.B[j] * forward + s * coefficients_.C[j] * backward;
    }
    return product;
}

Spinor2 SpinorField::upper(const Point& x) const { return standing_product(x, -1) * chi_; }

Spinor2 SpinorField::lower(const Point& x) const
{
    Spinor2 out = Spinor2::Zero();
    for (int m = 0; m < 3; ++m) {
        out += standing_product(x, m) * (r_ * khat_[m]) * (pauli::sigma(m) * chi_);
    }
    return out;
}

Spinor4 SpinorField::operator()(const Point& x) const { return stack(upper(x), lower(x)); }

Spinor4 SpinorField::plane_wave_sum(const Point& x) const
{
    Spinor4 total = Spinor4::Zero();
    for (int mask = 0; mask < 8; ++mask) {
        std::array<double, 3> dir{};
        Complex coefficient{1.0, 0.0};
        double phase = 0.0;
        for (int j = 0; j < 3; ++j) {
            dir[j] = (mask >> j) & 1 ? -1.0 : 1.0;
            coefficient *= dir[j] > 0 ? coefficients_.B[j] : coefficients_.C[j];
            phase += dir[j] * mode_.u[j] * x[j];
        }
        Matrix2 k_dot_sigma = Matrix2::Zero();
        for (int j = 0; j < 3; ++j) {
            k_dot_sigma += (dir[j] * khat_[j]) * pauli::sigma(j);
        }
        const Spinor4 eigenspinor = stack(chi_, r_ * (k_dot_sigma * chi_));
        total += coefficient * std::exp(kI * phase) * eigenspinor;
    }
    return total;
}

SpinorField build_field(const ModeSolution& mode, const Spinor2& chi, double tol_f)
{
    for (double res : mode.residuals) {
        if (!(res <= tol_f)) {
            std::ostringstream msg;
            msg << "mode residual " << res << " exceeds " << tol_f;
            throw SolverError(ErrorKind::NotConverged, msg.str());
        }
    }
    if (chi.squaredNorm() == 0.0) {
        throw std::invalid_argument("chi must be nonzero");
    }
    const double r = r_factor(mode.u);
    CoefficientSet coefficients;
    for (int l = 0; l < 3; ++l) {
        coefficients.B[l] = 1.0;
        coefficients.C[l] = coefficient_ratio(r, mode.u.unit(l));
    }
    return SpinorField(mode, coefficients, chi);
}

Point face_point(const BoxGeometry& geometry, const Face& face, double s, double t)
{
    Point p{};
    p[face.axis] = face.far ? geometry[face.axis] : 0.0;
    int slot = 0;
    for (int j = 0; j < 3; ++j) {
        if (j == face.axis) {
            continue;
        }
        p[j] = (slot == 0 ? s : t) * geometry[j];
        ++slot;
    }
    return p;
}

double mit_residual(const SpinorField& field, const Face& face, const Point& point)
{
    const Spinor4 psi = field(point);
    const Matrix4 wall = (static_cast<double>(face.sign()) * kI) * (dirac::beta() * dirac::alpha(face.axis));
    return (wall * psi - psi).norm();
}

double mit_reduced_residual(const SpinorField& field, const Face& face, const Point& point)
{
    const int l = face.axis;
    const Complex plain = field.standing_product(point, -1);
    const Complex flipped = field.standing_product(point, l);
    const Complex scalar = plain - static_cast<double>(face.sign()) * kI * field.r() * field.khat(l) * flipped;
    return std::abs(scalar) * field.chi().norm();
}

std::array<double, 4> dirac_current(const SpinorField& field, const Point& point)
{
    const Spinor4 psi = field(point);
    std::array<double, 4> j{};
    j[0] = psi.squaredNorm();
    for (int i = 0; i < 3; ++i) {
        j[i + 1] = psi.dot(dirac::alpha(i) * psi).real();
    }
    return j;
}

std::array<Complex, 4> dirac_current_covariant(const Spinor4& psi)
{
    const Eigen::Matrix<Complex, 1, 4> bar = psi.adjoint() * dirac::gamma(0);
    std::array<Complex, 4> j{};
    for (int mu = 0; mu < 4; ++mu) {
        j[mu] = (bar * dirac::gamma(mu) * psi)(0, 0);
    }
    return j;
}

StandingWave1D::StandingWave1D(const Mode1D& mode, double lambda, Spinor2 chi)
    : u_(mode.u), lambda_(lambda), r_(r_factor(mode.u)), chi_(std::move(chi))
{
    C_ = coefficient_ratio(r_, 1.0);
}

Spinor4 StandingWave1D::operator()(double z) const
{
    const Complex forward = B_ * std::exp(kI * (u_ * z));
    const Complex backward = C_ * std::exp(-kI * (u_ * z));
    return stack((forward + backward) * chi_, (forward - backward) * r_ * (pauli::sigma(2) * chi_));
}

double mit_residual_1d(const StandingWave1D& wave, bool far)
{
    const double z = far ? wave.length() : 0.0;
    const Spinor4 psi = wave(z);
    const double sign = far ? -1.0 : 1.0;
    const Matrix4 wall = (sign * kI) * (dirac::beta() * dirac::alpha(2));
    return (wall * psi - psi).norm();
}

} // namespace diracbox

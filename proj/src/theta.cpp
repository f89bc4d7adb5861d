#include "theta3/theta.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace theta3
{

namespace
{

constexpr double pi = std::numbers::pi;

Eigen::Vector3d shift_of(Characteristic c)
{
    return {0.5 * c.eps_dprime(0), 0.5 * c.eps_dprime(1), 0.5 * c.eps_dprime(2)};
}

Eigen::Vector3d phase_of(Characteristic c)
{
    return {0.5 * c.eps_prime(0), 0.5 * c.eps_prime(1), 0.5 * c.eps_prime(2)};
}

struct SeriesResult
{
    Complex value{0, 0};
    GradientVector gradient = GradientVector::Zero();
};

SeriesResult sum_series(Characteristic c, const Vector3c &z, const SiegelPoint &zp, const ThetaEvalConfig &cfg,
                        bool with_gradient)
{
    const double im_norm = z.imag().norm();
    const double radius = truncation_radius(zp, im_norm, with_gradient ? 1 : 0, cfg);
    const Eigen::Vector3d a = shift_of(c);
    const Vector3c zb = z + phase_of(c).cast<Complex>();
    const Matrix3c &Z = zp.matrix();
    const Eigen::Matrix3d &Y = zp.imag();
    const double r2 = radius * radius;

    int lo[3];
    int hi[3];
    for (int i = 0; i < 3; ++i) {
        const double half_width = radius * std::sqrt(zp.imag_inverse()(i, i));
        lo[i] = static_cast<int>(std::ceil(-half_width - a[i]));
        hi[i] = static_cast<int>(std::floor(half_width - a[i]));
    }

    const Complex i_pi(0, pi);
    const Complex two_i_pi(0, 2 * pi);
    SeriesResult out;
    for (int n0 = lo[0]; n0 <= hi[0]; ++n0) {
        for (int n1 = lo[1]; n1 <= hi[1]; ++n1) {
            for (int n2 = lo[2]; n2 <= hi[2]; ++n2) {
                const Eigen::Vector3d v(n0 + a[0], n1 + a[1], n2 + a[2]);
                if (v.dot(Y * v) > r2) {
                    continue;
                }
                const Vector3c vc = v.cast<Complex>();
                const Complex quad = vc.dot(Z * vc); // Eigen's dot conjugates the left side; v is real
                const Complex lin = vc.dot(zb);
                const Complex term = std::exp(i_pi * quad + two_i_pi * lin);
                out.value += term;
                if (with_gradient) {
                    out.gradient += (two_i_pi * term) * vc;
                }
            }
        }
    }
    return out;
}

} // namespace

SiegelPoint::SiegelPoint(const Matrix3c &z, double symmetry_tol)
{
    const double scale = std::max(1.0, z.cwiseAbs().maxCoeff());
    symmetry_residual_ = (z - z.transpose()).cwiseAbs().maxCoeff() / scale;
    if (!(symmetry_residual_ <= symmetry_tol)) {
        std::ostringstream msg;
        msg << "matrix is not symmetric: relative residual " << symmetry_residual_;
        throw std::invalid_argument(msg.str());
    }
    z_ = (z + z.transpose()) / 2.0;
    y_ = z_.imag();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(y_);
    lambda_min_ = eig.eigenvalues()(0);
    lambda_max_ = eig.eigenvalues()(2);
    if (!(lambda_min_ > 0)) {
        std::ostringstream msg;
        msg << "imaginary part is not positive definite: lambda_min = " << lambda_min_;
        throw std::invalid_argument(msg.str());
    }
    y_inv_ = y_.inverse();
    y_det_ = y_.determinant();
}

SiegelPoint random_siegel_point(Rng &rng, double delta)
{
    Eigen::Matrix3d a;
    for (int i = 0; i < 3; ++i) {
        for (int j = i; j < 3; ++j) {
            a(i, j) = a(j, i) = rng.uniform(-1, 1);
        }
    }
    Eigen::Matrix3d m;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            m(i, j) = rng.uniform(-1, 1);
        }
    }
    const Eigen::Matrix3d y = m * m.transpose() + delta * Eigen::Matrix3d::Identity();
    Matrix3c z;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            z(i, j) = Complex(a(i, j), y(i, j));
        }
    }
    return SiegelPoint(z);
}

double tail_bound(const SiegelPoint &z, double radius, double im_z_norm, int order)
{
    const double sl = std::sqrt(z.lambda_min());
    const double growth = im_z_norm / sl;
    const double peak = 0.5 * (growth + std::sqrt(growth * growth + 2.0 * order / pi));
    if (radius < peak) {
        return std::numeric_limits<double>::infinity();
    }
    const double cover = 0.5 * std::sqrt(3.0) * std::sqrt(z.lambda_max());
    const double vol = (4.0 * pi / 3.0) / std::sqrt(z.imag_det());
    auto count = [&](double r) { return vol * std::pow(r + cover, 3); };
    auto term_bound = [&](double rho) {
        return std::pow(2 * pi * rho / sl, order) * std::exp(-pi * rho * rho + 2 * pi * growth * rho);
    };

    constexpr double h = 0.25;
    double sum = 0;
    for (int k = 0; k < 100000; ++k) {
        const double rho = radius + k * h;
        const double term = count(rho + h) * term_bound(rho);
        const double next = count(rho + 2 * h) * term_bound(rho + h);
        sum += term;
        // Successive ratios decrease past the peak, so the rest is dominated by
        // a geometric series.
        const double ratio = term > 0 ? next / term : 0;
        if (ratio < 0.5 && next <= 1e-3 * sum) {
            return sum + next / (1 - ratio);
        }
    }
    return std::numeric_limits<double>::infinity();
}

double truncation_radius(const SiegelPoint &z, double im_z_norm, int order, const ThetaEvalConfig &cfg)
{
    if (!(cfg.tol > 0)) {
        throw std::invalid_argument("theta tolerance must be positive");
    }
    const double sl = std::sqrt(z.lambda_min());
    const double growth = im_z_norm / sl;
    double radius = 0.5 * (growth + std::sqrt(growth * growth + 2.0 * order / pi));
    while (tail_bound(z, radius, im_z_norm, order) > cfg.tol) {
        radius += 0.05;
        if (radius > cfg.max_radius) {
            std::ostringstream msg;
            msg << "theta summation radius exceeds " << cfg.max_radius << " (lambda_min(Im Z) = " << z.lambda_min()
                << ")";
            throw ThetaRadiusError(msg.str());
        }
    }
    return radius;
}

Complex theta(Characteristic c, const Vector3c &z, const SiegelPoint &zp, const ThetaEvalConfig &cfg)
{
    return sum_series(c, z, zp, cfg, false).value;
}

Complex theta_null(Characteristic c, const SiegelPoint &z, const ThetaEvalConfig &cfg)
{
    return sum_series(c, Vector3c::Zero(), z, cfg, false).value;
}

GradientVector grad_theta_null(Characteristic c, const SiegelPoint &z, const ThetaEvalConfig &cfg)
{
    return sum_series(c, Vector3c::Zero(), z, cfg, true).gradient;
}

std::pair<Complex, GradientVector> theta_with_gradient(Characteristic c, const Vector3c &z, const SiegelPoint &zp,
                                                       const ThetaEvalConfig &cfg)
{
    auto r = sum_series(c, z, zp, cfg, true);
    return {r.value, r.gradient};
}

Complex jacobian_nullwert(const GradientVector &g1, const GradientVector &g2, const GradientVector &g3)
{
    Matrix3c m;
    m.row(0) = g1.transpose();
    m.row(1) = g2.transpose();
    m.row(2) = g3.transpose();
    return m.determinant();
}

Complex jacobian_nullwert(Characteristic c1, Characteristic c2, Characteristic c3, const SiegelPoint &z,
                          const ThetaEvalConfig &cfg)
{
    for (auto c : {c1, c2, c3}) {
        if (parity(c) != Parity::odd) {
            throw std::invalid_argument("Jacobian Nullwert needs odd characteristics, got even " + c.str());
        }
    }
    if (c1 == c2 || c2 == c3 || c1 == c3) {
        throw std::invalid_argument("Jacobian Nullwert needs three distinct characteristics");
    }
    return jacobian_nullwert(grad_theta_null(c1, z, cfg), grad_theta_null(c2, z, cfg), grad_theta_null(c3, z, cfg));
}

} // namespace theta3

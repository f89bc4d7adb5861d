#ifndef THETA3_THETA_HPP
#define THETA3_THETA_HPP

#include "theta3/characteristic.hpp"
#include "theta3/rng.hpp"

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>

namespace theta3
{

using Complex = std::complex<double>;
using Matrix3c = Eigen::Matrix3cd;
using Vector3c = Eigen::Vector3cd;
using GradientVector = Eigen::Vector3cd;

// A point of the Siegel upper half space H_3. Construction validates symmetry
// (relative residual below symmetry_tol) and positive definiteness of Im Z; the
// stored matrix is the symmetrized input.
class SiegelPoint
{
public:
    explicit SiegelPoint(const Matrix3c &z, double symmetry_tol = 1e-8);

    const Matrix3c &matrix() const { return z_; }
    const Eigen::Matrix3d &imag() const { return y_; }
    const Eigen::Matrix3d &imag_inverse() const { return y_inv_; }
    double lambda_min() const { return lambda_min_; }
    double lambda_max() const { return lambda_max_; }
    double imag_det() const { return y_det_; }
    double symmetry_residual() const { return symmetry_residual_; }

private:
    Matrix3c z_;
    Eigen::Matrix3d y_;
    Eigen::Matrix3d y_inv_;
    double lambda_min_ = 0;
    double lambda_max_ = 0;
    double y_det_ = 0;
    double symmetry_residual_ = 0;
};

// Z = A + i(M M^t + delta I) with A symmetric, entries of A and M uniform in [-1, 1].
SiegelPoint random_siegel_point(Rng &rng, double delta = 0.3);

struct ThetaEvalConfig
{
    // Absolute bound on the truncation error of every returned value or
    // gradient component.
    double tol = 1e-12;
    // Largest admissible summation radius in the Im Z metric.
    double max_radius = 40;
};

class ThetaRadiusError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Upper bound on sum_{v : v^t Y v > R^2} |2 pi v|^order exp(-pi v^t Y v + 2 pi |v| |Im z|)
// over any shifted integer lattice v in Z^3 + a. Shells of width h = 1/4 in
// rho = sqrt(v^t Y v) hold at most N(rho + h) points, with
//   N(r) = (4 pi / 3) (r + (sqrt(3)/2) sqrt(lambda_max))^3 / sqrt(det Y)
// (disjoint unit cubes inside an enlarged ellipsoid), and each term is bounded
// through |v| <= rho / sqrt(lambda_min). Returns +inf when R lies before the peak
// of the term bound.
double tail_bound(const SiegelPoint &z, double radius, double im_z_norm, int order);

// Smallest radius (in steps of 1/20 past the term peak) whose tail bound is <= tol.
// Throws ThetaRadiusError when it exceeds cfg.max_radius.
double truncation_radius(const SiegelPoint &z, double im_z_norm, int order, const ThetaEvalConfig &cfg);

// theta[c](z; Z) = sum_n exp(pi i (n+a)^t Z (n+a) + 2 pi i (n+a)^t (z+b)),
// a = eps''/2, b = eps'/2.
//
// The lattice shift is the translation part of the label. With this reading the
// eight Frobenius identities carry the signs listed in frobenius_rows().
Complex theta(Characteristic c, const Vector3c &z, const SiegelPoint &zp, const ThetaEvalConfig &cfg = {});

Complex theta_null(Characteristic c, const SiegelPoint &z, const ThetaEvalConfig &cfg = {});

// Gradient in z at z = 0; each summand picks up 2 pi i (n+a).
GradientVector grad_theta_null(Characteristic c, const SiegelPoint &z, const ThetaEvalConfig &cfg = {});

// Value and gradient at an arbitrary z from one pass over the lattice.
std::pair<Complex, GradientVector> theta_with_gradient(Characteristic c, const Vector3c &z, const SiegelPoint &zp,
                                                       const ThetaEvalConfig &cfg = {});

// det of the matrix whose rows are the three gradients, in argument order.
// c1, c2, c3 must be odd and distinct (std::invalid_argument otherwise).
Complex jacobian_nullwert(Characteristic c1, Characteristic c2, Characteristic c3, const SiegelPoint &z,
                          const ThetaEvalConfig &cfg = {});

Complex jacobian_nullwert(const GradientVector &g1, const GradientVector &g2, const GradientVector &g3);

} // namespace theta3

#endif

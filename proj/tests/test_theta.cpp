#include "theta3/named.hpp"
#include "theta3/theta.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace theta3;

namespace
{

const double pi = std::numbers::pi;
const Complex I(0, 1);

// One-dimensional theta with characteristic, summed over |n| <= 40.
Complex theta1(double a, double b, Complex z, Complex tau)
{
    Complex s = 0;
    for (int n = -40; n <= 40; ++n) {
        const double v = n + a;
        s += std::exp(pi * I * v * v * tau + 2.0 * pi * I * v * (z + b));
    }
    return s;
}

Complex dtheta1(double a, double b, Complex z, Complex tau)
{
    Complex s = 0;
    for (int n = -40; n <= 40; ++n) {
        const double v = n + a;
        s += 2.0 * pi * I * v * std::exp(pi * I * v * v * tau + 2.0 * pi * I * v * (z + b));
    }
    return s;
}

// Two-dimensional theta, direct double sum over |n_i| <= 25.
Complex theta2(const double a[2], const double b[2], const Complex z[2], const Complex t[2][2])
{
    Complex s = 0;
    for (int n0 = -25; n0 <= 25; ++n0) {
        for (int n1 = -25; n1 <= 25; ++n1) {
            const double v[2] = {n0 + a[0], n1 + a[1]};
            Complex q = 0;
            Complex l = 0;
            for (int i = 0; i < 2; ++i) {
                l += v[i] * (z[i] + b[i]);
                for (int j = 0; j < 2; ++j) {
                    q += v[i] * t[i][j] * v[j];
                }
            }
            s += std::exp(pi * I * q + 2.0 * pi * I * l);
        }
    }
    return s;
}

double half_shift(Characteristic c, int i) { return 0.5 * c.eps_dprime(i); }
double half_phase(Characteristic c, int i) { return 0.5 * c.eps_prime(i); }

Vector3c random_z(Rng &rng, double scale)
{
    Vector3c z;
    for (int i = 0; i < 3; ++i) {
        z(i) = Complex(rng.uniform(-scale, scale), rng.uniform(-scale, scale));
    }
    return z;
}

} // namespace

TEST_CASE("SiegelPoint validation")
{
    Matrix3c z = I * Matrix3c::Identity();
    CHECK_NOTHROW(SiegelPoint{z});
    Matrix3c ns = z;
    ns(0, 1) = 0.1;
    CHECK_THROWS_AS(SiegelPoint{ns}, std::invalid_argument);
    Matrix3c np = z;
    np(2, 2) = Complex(0.3, -1);
    CHECK_THROWS_AS(SiegelPoint{np}, std::invalid_argument);

    Rng rng(3);
    for (int k = 0; k < 50; ++k) {
        const SiegelPoint p = random_siegel_point(rng);
        CHECK(p.lambda_min() >= 0.3 - 1e-12);
        CHECK(p.symmetry_residual() < 1e-15);
    }
}

TEST_CASE("diagonal Z factors into one-dimensional series")
{
    Rng rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        Complex tau[3];
        Matrix3c m = Matrix3c::Zero();
        for (int i = 0; i < 3; ++i) {
            tau[i] = Complex(rng.uniform(-1, 1), rng.uniform(0.4, 1.5));
            m(i, i) = tau[i];
        }
        const SiegelPoint zp(m);
        const Vector3c z = random_z(rng, 0.3);
        for (Characteristic c : enumerate()) {
            Complex expect = 1;
            GradientVector g;
            Complex f[3];
            Complex df[3];
            for (int i = 0; i < 3; ++i) {
                f[i] = theta1(half_shift(c, i), half_phase(c, i), z(i), tau[i]);
                df[i] = dtheta1(half_shift(c, i), half_phase(c, i), z(i), tau[i]);
                expect *= f[i];
            }
            g << df[0] * f[1] * f[2], f[0] * df[1] * f[2], f[0] * f[1] * df[2];
            const auto [value, grad] = theta_with_gradient(c, z, zp);
            REQUIRE(std::abs(value - expect) < 1e-10);
            REQUIRE(std::abs(theta(c, z, zp) - expect) < 1e-10);
            for (int i = 0; i < 3; ++i) {
                REQUIRE(std::abs(grad(i) - g(i)) < 1e-9);
            }
        }
    }
}

TEST_CASE("block-diagonal (2+1) Z factors into genus-2 and genus-1 sums")
{
    Rng rng(17);
    for (int trial = 0; trial < 5; ++trial) {
        // Genus-2 block: A + i (M M^t + 0.3 I).
        Complex t[2][2];
        double mm[2][2];
        for (auto &row : mm) {
            for (double &x : row) {
                x = rng.uniform(-1, 1);
            }
        }
        const double re01 = rng.uniform(-1, 1);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                const double y = mm[i][0] * mm[j][0] + mm[i][1] * mm[j][1] + (i == j ? 0.3 : 0.0);
                t[i][j] = Complex(i == j ? rng.uniform(-1, 1) : re01, y);
            }
        }
        t[1][0] = t[0][1];
        const Complex tau(rng.uniform(-1, 1), rng.uniform(0.3, 1.2));
        Matrix3c m = Matrix3c::Zero();
        m(0, 0) = t[0][0];
        m(0, 1) = m(1, 0) = t[0][1];
        m(1, 1) = t[1][1];
        m(2, 2) = tau;
        const SiegelPoint zp(m);
        const Vector3c z = random_z(rng, 0.2);
        double worst = 0;
        for (Characteristic c : enumerate()) {
            const double a[2] = {half_shift(c, 0), half_shift(c, 1)};
            const double b[2] = {half_phase(c, 0), half_phase(c, 1)};
            const Complex zz[2] = {z(0), z(1)};
            const Complex expect = theta2(a, b, zz, t) * theta1(half_shift(c, 2), half_phase(c, 2), z(2), tau);
            worst = std::max(worst, std::abs(theta(c, z, zp, {1e-12}) - expect));
        }
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("thetanull of the zero characteristic at Z = iI")
{
    const SiegelPoint zp(I * Matrix3c::Identity());
    const Complex t = theta_null(Characteristic(), zp);
    const Complex t1 = theta1(0, 0, 0, I);
    CHECK(std::abs(t.imag()) < 1e-14);
    CHECK(t.real() > 0);
    CHECK(std::abs(t - t1 * t1 * t1) < 1e-12);
}

TEST_CASE("odd thetanulls and even gradients vanish")
{
    Rng rng(23);
    for (int trial = 0; trial < 5; ++trial) {
        const SiegelPoint zp = random_siegel_point(rng);
        const ThetaEvalConfig cfg{1e-12};
        double odd = 0;
        double even = 0;
        for (Characteristic c : enumerate()) {
            if (parity(c) == Parity::odd) {
                odd = std::max(odd, std::abs(theta_null(c, zp, cfg)));
            } else {
                even = std::max(even, grad_theta_null(c, zp, cfg).cwiseAbs().maxCoeff());
            }
        }
        CHECK(odd < cfg.tol);
        CHECK(even < cfg.tol);
    }
}

TEST_CASE("gradient agrees with central finite differences")
{
    Rng rng(29);
    const double h = 1e-5;
    for (int trial = 0; trial < 10; ++trial) {
        const SiegelPoint zp = random_siegel_point(rng, 0.5);
        REQUIRE(zp.lambda_min() >= 0.5 - 1e-12);
        const auto odd = enumerate(Parity::odd);
        const Characteristic c = odd[rng.uniform_int(0, 27)];
        const GradientVector g = grad_theta_null(c, zp);
        for (int k = 0; k < 3; ++k) {
            Vector3c e = Vector3c::Zero();
            e(k) = h;
            const Complex fd = (theta(c, e, zp) - theta(c, -e, zp)) / (2 * h);
            CHECK(std::abs(fd - g(k)) <= 1e-6 * g.cwiseAbs().maxCoeff());
        }
    }
}

TEST_CASE("periodicity and conjugation symmetry")
{
    Rng rng(31);
    const SiegelPoint zp = random_siegel_point(rng);
    Matrix3c conj_m = -zp.matrix().conjugate();
    const SiegelPoint zc(conj_m);
    const Vector3c z = random_z(rng, 0.2);
    for (Characteristic c : enumerate()) {
        Vector3c shifted = z;
        Eigen::Vector3d m(1, -2, 3);
        shifted += m.cast<Complex>();
        double phase = 0;
        for (int i = 0; i < 3; ++i) {
            phase += half_shift(c, i) * m(i);
        }
        CHECK(std::abs(theta(c, shifted, zp) - std::exp(2 * pi * I * phase) * theta(c, z, zp)) < 1e-10);
        CHECK(std::abs(theta_null(c, zc) - std::conj(theta_null(c, zp))) < 1e-11);
    }
}

TEST_CASE("halving the tolerance moves values by less than the tolerance")
{
    Rng rng(37);
    const ThetaEvalConfig loose{1e-8};
    const ThetaEvalConfig tight{0.5e-8};
    for (int trial = 0; trial < 100; ++trial) {
        const SiegelPoint zp = random_siegel_point(rng);
        const Characteristic c = Characteristic::from_index(rng.uniform_int(0, 63));
        REQUIRE(std::abs(theta_null(c, zp, loose) - theta_null(c, zp, tight)) < loose.tol);
        REQUIRE((grad_theta_null(c, zp, loose) - grad_theta_null(c, zp, tight)).cwiseAbs().maxCoeff() < loose.tol);
    }
}

TEST_CASE("tail bound decreases with the radius and sets the truncation")
{
    Rng rng(41);
    const SiegelPoint zp = random_siegel_point(rng);
    double prev = tail_bound(zp, 2.0, 0, 1);
    for (double r = 2.5; r < 8; r += 0.5) {
        const double t = tail_bound(zp, r, 0, 1);
        CHECK(t < prev);
        prev = t;
    }
    const ThetaEvalConfig cfg{1e-12};
    const double r = truncation_radius(zp, 0, 1, cfg);
    CHECK(tail_bound(zp, r, 0, 1) <= cfg.tol);
    CHECK(tail_bound(zp, r - 0.05, 0, 1) > cfg.tol);
}

TEST_CASE("radius cap")
{
    Matrix3c m = I * Matrix3c::Identity();
    m(0, 0) = Complex(0, 1e-4);
    const SiegelPoint zp(m);
    try {
        theta_null(Characteristic(), zp, {1e-12, 2});
        FAIL("expected ThetaRadiusError");
    } catch (const ThetaRadiusError &e) {
        CHECK(std::string(e.what()).find("lambda_min") != std::string::npos);
    }
    CHECK_THROWS_AS(theta_null(Characteristic(), zp, {0, 40}), std::invalid_argument);
}

TEST_CASE("Jacobian Nullwert: argument checks and antisymmetry")
{
    Rng rng(43);
    const SiegelPoint zp = random_siegel_point(rng);
    const Characteristic w1 = named("w1"), w2 = named("w2"), w3 = named("w3");
    CHECK_THROWS_AS(jacobian_nullwert(w1, w2, w1, zp), std::invalid_argument);
    CHECK_THROWS_AS(jacobian_nullwert(w1, w2, named("a1"), zp), std::invalid_argument);
    const Complex j = jacobian_nullwert(w1, w2, w3, zp);
    CHECK(std::abs(j) > 1e-6);
    CHECK(std::abs(jacobian_nullwert(w2, w1, w3, zp) + j) < 1e-12 * std::abs(j));
    CHECK(std::abs(jacobian_nullwert(w2, w3, w1, zp) - j) < 1e-12 * std::abs(j));
}

TEST_CASE("first Frobenius row: [w1 w2 w3] = pi^3 prod theta[a_k]")
{
    Rng rng(47);
    for (int trial = 0; trial < 5; ++trial) {
        const SiegelPoint zp = random_siegel_point(rng);
        const Complex j = jacobian_nullwert(named("w1"), named("w2"), named("w3"), zp);
        Complex p = pi * pi * pi;
        for (Characteristic e : frobenius_table('a')) {
            p *= theta_null(e, zp);
        }
        CHECK(std::abs(j - p) < 1e-8 * std::abs(p));
    }
}

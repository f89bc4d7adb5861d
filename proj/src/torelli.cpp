#include "theta3/torelli.hpp"

#include "theta3/named.hpp"
#include "theta3/steiner.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace theta3
{

namespace
{

constexpr double conditioning_floor = 1e-10;

double condition_number(const Matrix3c &m)
{
    Eigen::JacobiSVD<Matrix3c> svd(m);
    const auto &s = svd.singularValues();
    return s(2) > 0 ? s(0) / s(2) : std::numeric_limits<double>::infinity();
}

LinearForm<Complex> line_from_gradient(const GradientVector &g, const Matrix3c &omega1_inv)
{
    const Eigen::RowVector3cd row = g.transpose() * omega1_inv;
    return {row(0), row(1), row(2)};
}

std::string label_of(Characteristic c)
{
    for (const auto &n : named_characteristics()) {
        if (n.value == c && parity(c) == Parity::odd) {
            return std::string(n.label);
        }
    }
    return c.str();
}

void fill_common_diagnostics(ReconstructionResult &r, const NormalizedPeriods &np, const ThetaEvalConfig &cfg)
{
    r.diagnostics.orientation = np.orientation;
    r.diagnostics.omega1_condition = np.omega1_condition;
    r.diagnostics.symmetry_residual = np.z.symmetry_residual();
    r.diagnostics.lambda_min = np.z.lambda_min();
    r.diagnostics.max_bitangency_residual =
        max_bitangency_residual(r.quartic, all_bitangents(np, cfg), &r.diagnostics.worst_bitangent);
}

// Gradients of w1..w3, w1'..w3', w7 in that order.
std::array<GradientVector, 7> reconstruction_gradients(const SiegelPoint &z, const ThetaEvalConfig &cfg)
{
    static constexpr const char *labels[7] = {"w1", "w2", "w3", "w1'", "w2'", "w3'", "w7"};
    std::array<GradientVector, 7> g;
    for (int i = 0; i < 7; ++i) {
        g[i] = grad_theta_null(named(labels[i]), z, cfg);
    }
    return g;
}

void set_lines(ReconstructionResult &r, const std::array<GradientVector, 7> &g, const Matrix3c &omega1)
{
    const Matrix3c inv = omega1.inverse();
    for (int i = 0; i < 3; ++i) {
        r.lines.x[i] = line_from_gradient(g[i], inv);
        r.lines.y[i] = line_from_gradient(g[i + 3], inv);
    }
    r.x7 = line_from_gradient(g[6], inv);
}

} // namespace

NormalizedPeriods normalize(const PeriodMatrix &m, double tol)
{
    const double cond = condition_number(m.omega1);
    if (!(cond < 1e14)) {
        std::ostringstream msg;
        msg << "Omega1 is singular (condition number " << cond << ")";
        throw NormalizationError(msg.str());
    }
    std::string direct_error;
    try {
        SiegelPoint z(m.omega1.inverse() * m.omega2, tol);
        return {z, m.omega1, false, cond, "rows are differentials, columns are cycles"};
    } catch (const std::invalid_argument &e) {
        direct_error = e.what();
    }
    const Matrix3c o1 = m.omega1.transpose();
    const Matrix3c o2 = m.omega2.transpose();
    try {
        SiegelPoint z(o1.inverse() * o2, tol);
        return {z, o1, true, cond,
                "blocks transposed (rows are cycles); the direct reading failed: " + direct_error};
    } catch (const std::invalid_argument &e) {
        throw NormalizationError("Z = Omega1^-1 Omega2 is not in H_3: " + direct_error +
                                 "; with transposed blocks: " + e.what());
    }
}

LinearForm<Complex> bitangent_from_char(Characteristic c, const SiegelPoint &z, const Matrix3c &omega1,
                                        const ThetaEvalConfig &cfg)
{
    if (parity(c) != Parity::odd) {
        throw std::invalid_argument("bitangent line needs an odd characteristic, got even " + c.str());
    }
    return line_from_gradient(grad_theta_null(c, z, cfg), omega1.inverse());
}

std::vector<LabeledLine> all_bitangents(const NormalizedPeriods &np, const ThetaEvalConfig &cfg)
{
    const Matrix3c inv = np.omega1.inverse();
    std::vector<LabeledLine> out;
    for (Characteristic c : enumerate(Parity::odd)) {
        out.push_back({label_of(c), c, line_from_gradient(grad_theta_null(c, np.z, cfg), inv)});
    }
    return out;
}

void check_reconstruction_hypotheses()
{
    const Characteristic w1 = named("w1"), w2 = named("w2"), w3 = named("w3");
    const Characteristic v1 = named("w1'"), v2 = named("w2'"), v3 = named("w3'");
    const Characteristic w7 = named("w7");
    for (auto c : {w1, w2, w3, v1, v2, v3, w7}) {
        if (parity(c) != Parity::odd) {
            throw std::logic_error("reconstruction characteristic " + c.str() + " is even");
        }
    }
    const Characteristic eta = w1 + v1;
    if (w2 + v2 != eta || w3 + v3 != eta) {
        throw std::logic_error("the pairs {w_j, w_j'} do not share a Steiner complex");
    }
    const SteinerComplex s = steiner_complex(w1 + v2);
    if (!s.contains(w2) || s.partner(w2) != v1) {
        throw std::logic_error("{w2, w1'} is not a pair of the complex of {w1, w2'}");
    }
    if (!s.contains(w7)) {
        throw std::logic_error("w7 is not in the complex of {w1, w2'}");
    }
    const Characteristic y7 = s.partner(w7);
    if (!is_azygetic_triple(w1, w3, w7) || !is_azygetic_triple(w1, v3, y7)) {
        throw std::logic_error("w7 is not ordered so that {w1, w3, w7} and {w1, w3', Y7} are azygetic");
    }
}

ReconstructionResult reconstruct_jacobian_nullwerte(const PeriodMatrix &m, const ThetaEvalConfig &cfg)
{
    return reconstruct_jacobian_nullwerte(normalize(m), cfg);
}

ReconstructionResult reconstruct_jacobian_nullwerte(const NormalizedPeriods &np, const ThetaEvalConfig &cfg)
{
    check_reconstruction_hypotheses();
    const auto g = reconstruction_gradients(np.z, cfg);
    enum { W1, W2, W3, V1, V2, V3, W7 };

    double gmax = 0;
    for (const auto &v : g) {
        gmax = std::max(gmax, v.cwiseAbs().maxCoeff());
    }
    const double floor = conditioning_floor * gmax * gmax * gmax;

    ReconstructionResult r;
    r.diagnostics.method = "jacobian";
    auto nw = [&](int a, int b, int c, const char *label) {
        const Complex v = jacobian_nullwert(g[a], g[b], g[c]);
        r.values[label] = v;
        return v;
    };
    auto denominator = [&](int a, int b, int c, const char *label) {
        const Complex v = nw(a, b, c, label);
        const double margin = std::abs(v) / floor;
        r.diagnostics.conditioning_margin =
            r.values.size() == 1 ? margin : std::min(r.diagnostics.conditioning_margin, margin);
        if (!(margin > 1)) {
            std::ostringstream msg;
            msg << "Jacobian Nullwert " << label << " = " << std::abs(v) << " is below the conditioning floor "
                << floor;
            throw ConditioningError(msg.str());
        }
        return v;
    };

    const Complex d = denominator(W1, W2, W3, "[w1 w2 w3]") * denominator(V1, V2, V3, "[w1' w2' w3']");
    r.coefficients[0] = nw(W7, W2, W3, "[w7 w2 w3]") * nw(W7, V2, V3, "[w7 w2' w3']") / d;
    r.coefficients[1] = nw(W1, W7, W3, "[w1 w7 w3]") * nw(V1, W7, V3, "[w1' w7 w3']") / d;
    r.coefficients[2] = nw(W1, W2, W7, "[w1 w2 w7]") * nw(V1, V2, W7, "[w1' w2' w7]") / d;

    set_lines(r, g, np.omega1);
    r.quartic = riemann_expression(r.lines, r.coefficients);
    fill_common_diagnostics(r, np, cfg);
    return r;
}

ReconstructionResult reconstruct_thetanullwerte(const PeriodMatrix &m, const ThetaEvalConfig &cfg)
{
    return reconstruct_thetanullwerte(normalize(m), cfg);
}

ReconstructionResult reconstruct_thetanullwerte(const NormalizedPeriods &np, const ThetaEvalConfig &cfg)
{
    check_reconstruction_hypotheses();
    ReconstructionResult r;
    r.diagnostics.method = "theta";

    int evaluations = 0;
    double tmax = 0;
    for (const auto &factors : thetanull_coefficient_factors()) {
        for (std::string_view label : factors) {
            const Complex v = theta_null(named(label), np.z, cfg);
            ++evaluations;
            r.values[std::string(label)] = v;
            tmax = std::max(tmax, std::abs(v));
        }
    }
    r.diagnostics.theta_null_evaluations = evaluations;
    r.diagnostics.conditioning_margin = std::numeric_limits<double>::infinity();
    for (const auto &[label, v] : r.values) {
        const double margin = std::abs(v) / (conditioning_floor * tmax);
        r.diagnostics.conditioning_margin = std::min(r.diagnostics.conditioning_margin, margin);
        if (!(margin > 1)) {
            std::ostringstream msg;
            msg << "Thetanullwert " << label << " = " << std::abs(v) << " vanishes to the conditioning floor";
            throw ConditioningError(msg.str());
        }
    }
    const auto factors = thetanull_coefficient_factors();
    for (int i = 0; i < 3; ++i) {
        Complex a(1, 0);
        for (std::string_view label : factors[i]) {
            a *= r.values.at(std::string(label));
        }
        r.coefficients[i] = a;
    }

    set_lines(r, reconstruction_gradients(np.z, cfg), np.omega1);
    r.quartic = riemann_expression(r.lines, r.coefficients);
    fill_common_diagnostics(r, np, cfg);
    return r;
}

double max_bitangency_residual(const QuarticForm<Complex> &q, const std::vector<LabeledLine> &lines, std::string *worst)
{
    double m = -1;
    for (const auto &l : lines) {
        const auto check = is_bitangent(q, l.line);
        const double res = check.status == TangencyStatus::component ? 1.0 : check.residual;
        if (res > m) {
            m = res;
            if (worst) {
                *worst = l.label;
            }
        }
    }
    return m;
}

} // namespace theta3

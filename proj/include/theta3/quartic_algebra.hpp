#ifndef THETA3_QUARTIC_ALGEBRA_HPP
#define THETA3_QUARTIC_ALGEBRA_HPP

#include "theta3/forms.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace theta3
{

// A determinant that had to be nonzero vanished (or fell below a conditioning
// floor). The message names the offending triple.
class DegenerateError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Three pairs {X_i, Y_i} of lines, indexed 0..2 for X1..X3 / Y1..Y3.
template <typename S>
struct LinePairs
{
    std::array<LinearForm<S>, 3> x;
    std::array<LinearForm<S>, 3> y;
};

template <typename S>
struct DerivedBitangents
{
    LinearForm<S> w;
    std::array<LinearForm<S>, 3> z;
};

template <typename S>
struct ScaleFactors
{
    std::array<S, 3> alpha;
    std::array<S, 3> beta;
};

enum class TangencyStatus { bitangent, not_bitangent, component };

struct BitangencyCheck
{
    TangencyStatus status = TangencyStatus::not_bitangent;
    // Relative square-fit residual (always 0 or 1 in the exact backend).
    double residual = 0;

    bool ok() const { return status == TangencyStatus::bitangent; }
};

// (ABC): determinant of the coefficient rows.
template <typename S>
S det3(const LinearForm<S> &a, const LinearForm<S> &b, const LinearForm<S> &c)
{
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

namespace detail
{

template <typename S>
bool is_negligible(const S &value, double scale, double tol)
{
    if constexpr (is_exact_v<S>) {
        (void)scale;
        (void)tol;
        return value == S(0);
    } else {
        return ScalarTraits<S>::magnitude(value) <= tol * scale;
    }
}

template <typename S>
double line_scale(const LinearForm<S> &l)
{
    double m = 0;
    for (int i = 0; i < 3; ++i) {
        m = std::max(m, ScalarTraits<S>::magnitude(l[i]));
    }
    return m;
}

// det3 that throws DegenerateError naming `label` when it vanishes. In the
// floating backend "vanishes" means |det| <= tol * |A| |B| |C|.
template <typename S>
S checked_det3(const LinearForm<S> &a, const LinearForm<S> &b, const LinearForm<S> &c, const std::string &label,
               double tol = 1e-12)
{
    S d = det3(a, b, c);
    if (is_negligible(d, line_scale(a) * line_scale(b) * line_scale(c), tol)) {
        throw DegenerateError("determinant (" + label + ") vanishes");
    }
    return d;
}

template <typename S>
TernaryForm<S> product(const LinearForm<S> &a, const LinearForm<S> &b)
{
    return TernaryForm<S>(a) * TernaryForm<S>(b);
}

template <typename S>
bool approx_equal(const S &a, const S &b, double tol)
{
    if constexpr (is_exact_v<S>) {
        (void)tol;
        return a == b;
    } else {
        const double scale = std::max(ScalarTraits<S>::magnitude(a), ScalarTraits<S>::magnitude(b));
        return ScalarTraits<S>::magnitude(a - b) <= tol * scale;
    }
}

} // namespace detail

// Throws std::invalid_argument if X1+X2+X3 != Y1+Y2+Y3 or if some triplet picking
// one line from each pair is linearly dependent.
template <typename S>
void validate_riemann_lines(const LinePairs<S> &p, double tol = 1e-12)
{
    const LinearForm<S> sx = p.x[0] + p.x[1] + p.x[2];
    const LinearForm<S> sy = p.y[0] + p.y[1] + p.y[2];
    const LinearForm<S> diff = sx - sy;
    const double scale = std::max(detail::line_scale(sx), detail::line_scale(sy));
    for (int i = 0; i < 3; ++i) {
        if (!detail::is_negligible(diff[i], scale, tol)) {
            throw std::invalid_argument("sum relation X1+X2+X3 = Y1+Y2+Y3 violated");
        }
    }
    for (int mask = 0; mask < 8; ++mask) {
        const auto &a = (mask & 1) ? p.y[0] : p.x[0];
        const auto &b = (mask & 2) ? p.y[1] : p.x[1];
        const auto &c = (mask & 4) ? p.y[2] : p.x[2];
        const std::string label = std::string((mask & 1) ? "Y1 " : "X1 ") + ((mask & 2) ? "Y2 " : "X2 ") +
                                  ((mask & 4) ? "Y3" : "X3");
        try {
            detail::checked_det3(a, b, c, label, tol);
        } catch (const DegenerateError &e) {
            throw std::invalid_argument(std::string("degenerate triplet: ") + e.what());
        }
    }
}

// (c1 X1Y1 + c2 X2Y2 - c3 X3Y3)^2 - 4 c1 c2 X1Y1 X2Y2.
template <typename S>
QuarticForm<S> riemann_expression(const LinePairs<S> &p, const std::array<S, 3> &c)
{
    const TernaryForm<S> p1 = detail::product(p.x[0], p.y[0]);
    const TernaryForm<S> p2 = detail::product(p.x[1], p.y[1]);
    const TernaryForm<S> p3 = detail::product(p.x[2], p.y[2]);
    const TernaryForm<S> conic = c[0] * p1 + c[1] * p2 - c[2] * p3;
    const S four_c1c2 = S(4) * c[0] * c[1];
    return QuarticForm<S>(conic * conic - four_c1c2 * (p1 * p2));
}

// Q = (X1Y1 + X2Y2 - X3Y3)^2 - 4 X1Y1X2Y2 after validating the lines.
template <typename S>
QuarticForm<S> riemann_quartic(const LinePairs<S> &p, double tol = 1e-12)
{
    validate_riemann_lines(p, tol);
    return riemann_expression(p, {S(1), S(1), S(1)});
}

// W = X1+X2+X3 and Z_i formed with the normalized Ybar = -Y (for which
// X1+X2+X3 + Ybar1+Ybar2+Ybar3 = 0): Z1 = X1+Ybar2+Ybar3, Z2 = Ybar1+X2+Ybar3,
// Z3 = Ybar1+Ybar2+X3.
template <typename S>
DerivedBitangents<S> derived_bitangents(const LinePairs<S> &p, double tol = 1e-12)
{
    validate_riemann_lines(p, tol);
    DerivedBitangents<S> out;
    out.w = p.x[0] + p.x[1] + p.x[2];
    out.z[0] = p.x[0] - p.y[1] - p.y[2];
    out.z[1] = p.x[1] - p.y[0] - p.y[2];
    out.z[2] = p.x[2] - p.y[0] - p.y[1];
    return out;
}

// Ratios making Xbar1+Xbar2+Xbar3 = X7 and Ybar1+Ybar2+Ybar3 = -X7:
//   alpha_i = (X1X2X3 with X_i replaced by X7) / (X1X2X3),
//   beta_i = -(Y1Y2Y3 with Y_i replaced by X7) / (Y1Y2Y3).
template <typename S>
ScaleFactors<S> rescale_factors(const LinePairs<S> &p, const LinearForm<S> &x7, double tol = 1e-12)
{
    using detail::checked_det3;
    const auto &x = p.x;
    const auto &y = p.y;
    const S dx = checked_det3(x[0], x[1], x[2], "X1 X2 X3", tol);
    const S dy = checked_det3(y[0], y[1], y[2], "Y1 Y2 Y3", tol);
    ScaleFactors<S> f;
    f.alpha[0] = checked_det3(x7, x[1], x[2], "X7 X2 X3", tol) / dx;
    f.alpha[1] = checked_det3(x[0], x7, x[2], "X1 X7 X3", tol) / dx;
    f.alpha[2] = checked_det3(x[0], x[1], x7, "X1 X2 X7", tol) / dx;
    f.beta[0] = -checked_det3(x7, y[1], y[2], "X7 Y2 Y3", tol) / dy;
    f.beta[1] = -checked_det3(y[0], x7, y[2], "Y1 X7 Y3", tol) / dy;
    f.beta[2] = -checked_det3(y[0], y[1], x7, "Y1 Y2 X7", tol) / dy;
    return f;
}

// The quartic through seven bitangents: coefficients
//   c1 = (X7X2X3)(X7Y2Y3) / D, c2 = (X1X7X3)(Y1X7Y3) / D, c3 = (X1X2X7)(Y1Y2X7) / D,
// D = (X1X2X3)(Y1Y2Y3), inserted in riemann_expression.
template <typename S>
QuarticForm<S> quartic_from_bitangents(const LinePairs<S> &p, const LinearForm<S> &x7, double tol = 1e-12)
{
    const ScaleFactors<S> f = rescale_factors(p, x7, tol);
    std::array<S, 3> c;
    for (int i = 0; i < 3; ++i) {
        c[i] = -(f.alpha[i] * f.beta[i]);
    }
    return riemann_expression(p, c);
}

// q(s, t) = Q(s P + t R): coefficients of s^4, s^3 t, ..., t^4.
template <typename S>
std::array<S, 5> restrict_to_line(const QuarticForm<S> &q, const std::array<S, 3> &p, const std::array<S, 3> &r)
{
    // powers[v][e] = (p_v s + r_v t)^e as a binary form, index = power of t
    std::array<std::array<std::vector<S>, 5>, 3> powers;
    for (int v = 0; v < 3; ++v) {
        powers[v][0] = {S(1)};
        for (int e = 1; e <= 4; ++e) {
            const auto &prev = powers[v][e - 1];
            std::vector<S> next(prev.size() + 1, S(0));
            for (std::size_t k = 0; k < prev.size(); ++k) {
                next[k] += prev[k] * p[v];
                next[k + 1] += prev[k] * r[v];
            }
            powers[v][e] = std::move(next);
        }
    }
    std::array<S, 5> out;
    out.fill(S(0));
    for (int i = 4; i >= 0; --i) {
        for (int j = 4 - i; j >= 0; --j) {
            const int k = 4 - i - j;
            const S &c = q[monomial_index(4, i, j)];
            if (c == S(0)) {
                continue;
            }
            const auto &a = powers[0][i];
            const auto &b = powers[1][j];
            const auto &d = powers[2][k];
            for (std::size_t ia = 0; ia < a.size(); ++ia) {
                for (std::size_t ib = 0; ib < b.size(); ++ib) {
                    const S ab = c * a[ia] * b[ib];
                    for (std::size_t id = 0; id < d.size(); ++id) {
                        out[ia + ib + id] += ab * d[id];
                    }
                }
            }
        }
    }
    return out;
}

namespace detail
{

// Square test over Q: q = k h^2 with h a binary quadratic.
inline BitangencyCheck exact_square_test(const std::array<Rational, 5> &q)
{
    int first = 0;
    while (first < 5 && q[first] == 0) {
        ++first;
    }
    if (first == 5) {
        return {TangencyStatus::component, 0};
    }
    bool square = false;
    if (first == 0) {
        const Rational beta = q[1] / (2 * q[0]);
        const Rational gamma = (q[2] / q[0] - beta * beta) / 2;
        square = q[3] == q[0] * 2 * beta * gamma && q[4] == q[0] * gamma * gamma;
    } else if (first == 2) {
        square = q[3] * q[3] == 4 * q[2] * q[4];
    } else {
        // odd vanishing order at s = 0, or t^4 only
        square = first == 4;
    }
    return {square ? TangencyStatus::bitangent : TangencyStatus::not_bitangent, square ? 0.0 : 1.0};
}

// Kernel basis of the line: two points spanning {aX+bY+cZ = 0}.
template <typename S>
std::array<std::array<S, 3>, 2> line_points(const LinearForm<S> &l)
{
    std::size_t big = 0;
    for (std::size_t i = 1; i < 3; ++i) {
        if (ScalarTraits<S>::magnitude(l[i]) > ScalarTraits<S>::magnitude(l[big])) {
            big = i;
        }
    }
    const std::size_t o1 = (big + 1) % 3;
    const std::size_t o2 = (big + 2) % 3;
    std::array<S, 3> p{S(0), S(0), S(0)};
    std::array<S, 3> r{S(0), S(0), S(0)};
    p[o1] = l[big];
    p[big] = -l[o1];
    r[o2] = l[big];
    r[big] = -l[o2];
    return {p, r};
}

} // namespace detail

// Whether Q restricted to L is a nonzero multiple of a square. Exact backend:
// factorization over Q. Floating backend: the line is parameterized by an
// orthonormal basis rotated to make the s^4 coefficient dominant; the residual
// is |q - q0 h^2| / |q| for the square h^2 matched on the first three
// coefficients, compared against tol.
template <typename S>
BitangencyCheck is_bitangent(const QuarticForm<S> &q, const LinearForm<S> &l, double tol = 1e-9)
{
    if (l.is_zero()) {
        throw std::invalid_argument("is_bitangent: zero linear form");
    }
    if constexpr (is_exact_v<S>) {
        (void)tol;
        const auto pts = detail::line_points(l);
        return detail::exact_square_test(restrict_to_line(q, pts[0], pts[1]));
    } else {
        auto pts = detail::line_points(l);
        // Gram-Schmidt in the Hermitian product.
        auto dotc = [](const std::array<S, 3> &a, const std::array<S, 3> &b) {
            return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1] + std::conj(a[2]) * b[2];
        };
        auto normalize = [&](std::array<S, 3> &a) {
            const double n = std::sqrt(std::real(dotc(a, a)));
            for (auto &x : a) {
                x /= n;
            }
        };
        normalize(pts[0]);
        const S proj = dotc(pts[0], pts[1]);
        for (int i = 0; i < 3; ++i) {
            pts[1][i] -= proj * pts[0][i];
        }
        normalize(pts[1]);

        double qnorm = 0;
        for (const auto &x : q.coefficients()) {
            qnorm = std::max(qnorm, std::abs(x));
        }
        std::array<S, 5> best{};
        double best_lead = -1;
        for (int k = 0; k < 12; ++k) {
            const double th = k * 3.14159265358979323846 / 12;
            std::array<S, 3> a;
            std::array<S, 3> b;
            for (int i = 0; i < 3; ++i) {
                a[i] = std::cos(th) * pts[0][i] + std::sin(th) * pts[1][i];
                b[i] = -std::sin(th) * pts[0][i] + std::cos(th) * pts[1][i];
            }
            auto r = restrict_to_line(q, a, b);
            if (std::abs(r[0]) > best_lead) {
                best_lead = std::abs(r[0]);
                best = r;
            }
        }
        double rnorm = 0;
        for (const auto &x : best) {
            rnorm = std::max(rnorm, std::abs(x));
        }
        if (rnorm <= tol * qnorm) {
            return {TangencyStatus::component, 0};
        }
        const S beta = best[1] / (2.0 * best[0]);
        const S gamma = (best[2] / best[0] - beta * beta) / 2.0;
        const std::array<S, 5> square = {best[0], best[0] * 2.0 * beta, best[0] * (beta * beta + 2.0 * gamma),
                                         best[0] * 2.0 * beta * gamma, best[0] * gamma * gamma};
        double diff = 0;
        for (int i = 0; i < 5; ++i) {
            diff = std::max(diff, std::abs(best[i] - square[i]));
        }
        const double residual = diff / rnorm;
        return {residual < tol ? TangencyStatus::bitangent : TangencyStatus::not_bitangent, residual};
    }
}

template <typename S>
struct ProportionalityFit
{
    S factor;
    // max_k |Q2_k - factor Q1_k| / max_k |Q2_k|; 0 or 1 in the exact backend.
    double residual;
};

// Least-squares (floating) or exact (rational) fit of Q2 ~ factor * Q1.
template <typename S>
std::optional<ProportionalityFit<S>> proportionality_fit(const QuarticForm<S> &q1, const QuarticForm<S> &q2)
{
    if (q1.is_zero()) {
        return std::nullopt;
    }
    if constexpr (is_exact_v<S>) {
        std::size_t k = 0;
        while (q1[k] == 0) {
            ++k;
        }
        const S factor = q2[k] / q1[k];
        bool equal = true;
        for (std::size_t i = 0; i < 15 && equal; ++i) {
            equal = q2[i] == factor * q1[i];
        }
        return ProportionalityFit<S>{factor, equal ? 0.0 : 1.0};
    } else {
        S num(0);
        double den = 0;
        for (std::size_t i = 0; i < 15; ++i) {
            num += std::conj(q1[i]) * q2[i];
            den += std::norm(q1[i]);
        }
        const S factor = num / den;
        double diff = 0;
        double scale = 0;
        for (std::size_t i = 0; i < 15; ++i) {
            diff = std::max(diff, std::abs(q2[i] - factor * q1[i]));
            scale = std::max(scale, std::abs(q2[i]));
        }
        return ProportionalityFit<S>{factor, scale > 0 ? diff / scale : 1.0};
    }
}

// The nonzero lambda with Q2 = lambda Q1 (exactly, or within tol relative), if any.
template <typename S>
std::optional<S> proportional(const QuarticForm<S> &q1, const QuarticForm<S> &q2, double tol = 0)
{
    const auto fit = proportionality_fit(q1, q2);
    if (!fit || fit->factor == S(0)) {
        return std::nullopt;
    }
    if constexpr (is_exact_v<S>) {
        (void)tol;
        if (fit->residual != 0) {
            return std::nullopt;
        }
    } else {
        if (!(fit->residual <= tol)) {
            return std::nullopt;
        }
    }
    return fit->factor;
}

// One line of the block of alternative presentations (AB + CD - EF)^2 - 4 GHIJ,
// lines named among X1..X3, Y1..Y3, W, Z1..Z3 (Y meaning the normalized Ybar).
struct PresentationCheck
{
    int line = 0;
    std::string printed;
    std::string corrected;
    // The printed final term equals the forced -4 (AB)(CD).
    bool printed_term_is_forced = false;
    bool printed_proportional = false;
    bool corrected_proportional = false;
    // Factor lambda with presentation = lambda Q for the corrected form, as text.
    std::string factor;
};

template <typename S>
struct DoblesReport
{
    // r_k = (X3 A B)(Y3 A B) / ((X4 A B)(Y4 A B)) for (A, B) = (X1,X2), (X1,Y2), (X2,Y1), (Y1,Y2).
    std::array<S, 4> ratios;
    bool holds = false;
};

// The four pairs {X_k, Y_k}, k = 1..4, of one Steiner complex.
template <typename S>
DoblesReport<S> verify_dobles(const std::array<LinearForm<S>, 4> &x, const std::array<LinearForm<S>, 4> &y,
                              double tol = 1e-9)
{
    using detail::checked_det3;
    const std::array<std::pair<const LinearForm<S> *, const LinearForm<S> *>, 4> bases = {{
        {&x[0], &x[1]},
        {&x[0], &y[1]},
        {&x[1], &y[0]},
        {&y[0], &y[1]},
    }};
    const std::array<const char *, 4> names = {"X1 X2", "X1 Y2", "X2 Y1", "Y1 Y2"};
    DoblesReport<S> out;
    for (int k = 0; k < 4; ++k) {
        const auto &a = *bases[k].first;
        const auto &b = *bases[k].second;
        const std::string n = names[k];
        const S num = checked_det3(x[2], a, b, "X3 " + n, tol) * checked_det3(y[2], a, b, "Y3 " + n, tol);
        const S den = checked_det3(x[3], a, b, "X4 " + n, tol) * checked_det3(y[3], a, b, "Y4 " + n, tol);
        out.ratios[k] = num / den;
    }
    out.holds = true;
    for (int k = 1; k < 4; ++k) {
        out.holds = out.holds && detail::approx_equal(out.ratios[0], out.ratios[k], tol);
    }
    return out;
}

template <typename S>
struct SimplesReport
{
    // (X2X3X7)/(X1X3X7) vs (X2Y3Y7)/(X1Y3Y7).
    std::array<S, 2> first;
    // (Y2X3Y7)/(Y1X3Y7) vs (Y2Y3X7)/(Y1Y3X7).
    std::array<S, 2> second;
    bool holds = false;
};

template <typename S>
SimplesReport<S> verify_simples(const LinePairs<S> &p, const LinearForm<S> &x7, const LinearForm<S> &y7,
                                double tol = 1e-9)
{
    using detail::checked_det3;
    const auto &x = p.x;
    const auto &y = p.y;
    SimplesReport<S> r;
    r.first[0] = checked_det3(x[1], x[2], x7, "X2 X3 X7", tol) / checked_det3(x[0], x[2], x7, "X1 X3 X7", tol);
    r.first[1] = checked_det3(x[1], y[2], y7, "X2 Y3 Y7", tol) / checked_det3(x[0], y[2], y7, "X1 Y3 Y7", tol);
    r.second[0] = checked_det3(y[1], x[2], y7, "Y2 X3 Y7", tol) / checked_det3(y[0], x[2], y7, "Y1 X3 Y7", tol);
    r.second[1] = checked_det3(y[1], y[2], x7, "Y2 Y3 X7", tol) / checked_det3(y[0], y[2], x7, "Y1 Y3 X7", tol);
    r.holds = detail::approx_equal(r.first[0], r.first[1], tol) && detail::approx_equal(r.second[0], r.second[1], tol);
    return r;
}

// The ten rational lines of a model by name: X1..X3, Y1..Y3 (meaning Ybar = -Y),
// W, Z1..Z3.
std::map<std::string, LinearForm<Rational>> model_lines(const LinePairs<Rational> &p);

// Names of the pairs (A, B), (C, D), (E, F) of the thirteen presentations.
const std::array<std::array<const char *, 6>, 13> &presentation_pairs();

// Expands all thirteen presentations exactly and compares each with Q; see
// PresentationCheck.
std::vector<PresentationCheck> verify_presentations(const LinePairs<Rational> &p);

} // namespace theta3

#endif

#include "theta3/named.hpp"
#include "theta3/torelli.hpp"

#include <doctest.h>

#include <set>
#include <sstream>
#include <stdexcept>

using namespace theta3;

namespace
{

const std::string fixtures = THETA3_FIXTURES_DIR;

QuarticForm<Complex> quartic_of(std::initializer_list<std::pair<const char *, double>> terms)
{
    QuarticForm<Complex> q;
    const auto &names = quartic_monomial_names();
    for (const auto &[name, value] : terms) {
        const auto it = std::find_if(names.begin(), names.end(), [&](const char *n) { return std::string(n) == name; });
        REQUIRE(it != names.end());
        q[static_cast<std::size_t>(it - names.begin())] = value;
    }
    return q;
}

// Largest coefficient error of q after scaling it onto `expect`, relative to max |expect|.
double relative_distance(const QuarticForm<Complex> &expect, const QuarticForm<Complex> &q)
{
    const auto fit = proportionality_fit(q, expect);
    REQUIRE(fit.has_value());
    double diff = 0;
    double scale = 0;
    for (std::size_t k = 0; k < 15; ++k) {
        diff = std::max(diff, std::abs(expect[k] - fit->factor * q[k]));
        scale = std::max(scale, std::abs(expect[k]));
    }
    return diff / scale;
}

QuarticForm<Complex> klein()
{
    return quartic_of({{"X^3*Y", 1}, {"Y^3*Z", 1}, {"X*Z^3", 1}});
}

QuarticForm<Complex> generic()
{
    return quartic_of({{"X^4", 1},
                       {"Y^4", 2},
                       {"X^2*Y*Z", 1},
                       {"X*Y^2*Z", -2},
                       {"X*Y*Z^2", 1},
                       {"Y*Z^3", 1},
                       {"Z^4", 3}});
}

PeriodMatrix identity_block(const SiegelPoint &z)
{
    return {Matrix3c::Identity(), z.matrix()};
}

std::array<Complex, 3> point(Rng &rng)
{
    return {Complex(rng.uniform(-1, 1), rng.uniform(-1, 1)), Complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
            Complex(rng.uniform(-1, 1), rng.uniform(-1, 1))};
}

} // namespace

TEST_CASE("period file parsing")
{
    std::istringstream good("# comment\n\nPERIOD 3 6\n"
                            "1 0 0 0 0 0 0 1 0 0 0 0\n"
                            "0 0 1 0 0 0 0 0 0 1 0 0\n"
                            "# interleaved\n"
                            "0 0 0 0 1 0 0 0 0 0 0 1\n");
    const PeriodMatrix m = parse_period_matrix(good);
    CHECK(m.omega1 == Matrix3c::Identity());
    CHECK(m.omega2 == Complex(0, 1) * Matrix3c::Identity());

    std::stringstream round;
    write_period_matrix(round, m);
    const PeriodMatrix back = parse_period_matrix(round);
    CHECK(back.omega1 == m.omega1);
    CHECK(back.omega2 == m.omega2);

    std::istringstream transposed("PERIOD 6 3\n"
                                  "1 0 0 0 0 0\n"
                                  "0 0 1 0 0 0\n"
                                  "0 0 0 0 1 0\n"
                                  "0 1 0 0 0 0\n"
                                  "0 0 0 1 0 0\n"
                                  "0 0 0 0 0 1\n");
    const PeriodMatrix t = parse_period_matrix(transposed);
    CHECK(t.omega1 == m.omega1);
    CHECK(t.omega2 == m.omega2);

    auto error_line = [](const std::string &text) {
        std::istringstream in(text);
        try {
            parse_period_matrix(in);
        } catch (const PeriodParseError &e) {
            CHECK(std::string(e.what()).rfind("line " + std::to_string(e.line()) + ":", 0) == 0);
            return e.line();
        }
        return 0;
    };
    CHECK(error_line("# x\nPERIOD 3 6\n1 0 0 0 0 0 0 1 0 0 0 0\n1 2 3\n") == 4);
    CHECK(error_line("PERIOD 4 6\n") == 1);
    CHECK(error_line("\n\n1 0 0\n") == 3);
    CHECK(error_line("PERIOD 3 6\n1 0 0 0 0 0 0 1 0 0 0 x\n") == 2);
    CHECK(error_line("PERIOD 3 6\n1 0 0 0 0 0 0 1 0 0 0 0\n") > 0);
    CHECK_THROWS(read_period_file(fixtures + "/does-not-exist.period"));
}

TEST_CASE("normalization")
{
    Rng rng(3);
    const SiegelPoint z0 = random_siegel_point(rng);
    const auto np = normalize(identity_block(z0));
    CHECK((np.z.matrix() - z0.matrix()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK_FALSE(np.transposed);
    CHECK(np.omega1_condition == doctest::Approx(1));

    // Omega1 Z with a general Omega1.
    Matrix3c o1;
    o1 << Complex(1, 2), 0.5, 0, Complex(0, -1), 2, 1, 0.3, Complex(1, 1), 3;
    const auto np2 = normalize({o1, o1 * z0.matrix()});
    CHECK((np2.z.matrix() - z0.matrix()).cwiseAbs().maxCoeff() < 1e-12);

    // Cycles along rows.
    const auto np3 = normalize({o1.transpose(), (o1 * z0.matrix()).transpose()});
    CHECK(np3.transposed);
    CHECK((np3.z.matrix() - z0.matrix()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK_FALSE(np3.orientation.empty());

    Matrix3c singular = Matrix3c::Identity();
    singular(2, 2) = 0;
    CHECK_THROWS_AS(normalize({singular, z0.matrix()}), NormalizationError);
    Matrix3c not_siegel = z0.matrix();
    not_siegel(0, 1) += 0.5;
    CHECK_THROWS_AS(normalize({Matrix3c::Identity(), not_siegel}), NormalizationError);
}

TEST_CASE("the labelled characteristics satisfy the formula hypotheses")
{
    CHECK_NOTHROW(check_reconstruction_hypotheses());
}

TEST_CASE("Klein quartic from its periods")
{
    const auto np = normalize(read_period_file(fixtures + "/klein.period"));
    const auto jac = reconstruct_jacobian_nullwerte(np);
    const auto th = reconstruct_thetanullwerte(np);
    CHECK(relative_distance(klein(), jac.quartic) < 1e-6);
    CHECK(relative_distance(klein(), th.quartic) < 1e-6);

    const auto fit = proportionality_fit(jac.quartic, th.quartic);
    REQUIRE(fit.has_value());
    CHECK(fit->residual < 1e-8);

    CHECK(jac.diagnostics.max_bitangency_residual < 1e-6);
    CHECK(th.diagnostics.max_bitangency_residual < 1e-6);
    CHECK(jac.diagnostics.conditioning_margin > 1);

    const auto lines = all_bitangents(np);
    REQUIRE(lines.size() == 28);
    std::set<unsigned> chars;
    for (const auto &l : lines) {
        chars.insert(l.c.index());
        CHECK(parity(l.c) == Parity::odd);
        CHECK(is_bitangent(jac.quartic, l.line).residual < 1e-6);
    }
    CHECK(chars.size() == 28);
    CHECK(lines[0].c < lines[1].c);

    // Exactly 18 distinct Thetanullwerte.
    CHECK(th.diagnostics.theta_null_evaluations == 18);
    std::set<unsigned> used;
    for (const auto &[label, v] : th.values) {
        used.insert(named(label).index());
    }
    CHECK(th.values.size() == 18);
    CHECK(used.size() == 18);
}

TEST_CASE("generic quartic from its periods")
{
    const auto m = read_period_file(fixtures + "/generic.period");
    const auto jac = reconstruct_jacobian_nullwerte(m);
    const auto th = reconstruct_thetanullwerte(m);
    CHECK(relative_distance(generic(), jac.quartic) < 1e-6);
    CHECK(relative_distance(generic(), th.quartic) < 1e-6);
    CHECK(jac.diagnostics.max_bitangency_residual < 1e-6);
}

TEST_CASE("Jacobian Nullwert ratios are ratios of line determinants")
{
    Rng rng(17);
    for (int trial = 0; trial < 5; ++trial) {
        const SiegelPoint z = random_siegel_point(rng, 0.5);
        Matrix3c o1;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                o1(i, j) = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
            }
        }
        auto h = [&](const char *l) { return bitangent_from_char(named(l), z, o1); };
        const Complex lhs = jacobian_nullwert(named("w1"), named("w2"), named("w3"), z) /
                            jacobian_nullwert(named("w1"), named("w2"), named("w7"), z);
        const Complex rhs = det3(h("w1"), h("w2"), h("w3")) / det3(h("w1"), h("w2"), h("w7"));
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::abs(lhs));
    }
    CHECK_THROWS_AS(bitangent_from_char(named("a1"), random_siegel_point(rng), Matrix3c::Identity()),
                    std::invalid_argument);
}

TEST_CASE("random period points: both formulas agree with each other and with the seven lines")
{
    Rng rng(23);
    for (int trial = 0; trial < 5; ++trial) {
        const SiegelPoint z = random_siegel_point(rng, 0.5);
        const auto np = normalize(identity_block(z));
        const auto jac = reconstruct_jacobian_nullwerte(np);
        const auto th = reconstruct_thetanullwerte(np);
        const auto fit = proportionality_fit(jac.quartic, th.quartic);
        REQUIRE(fit.has_value());
        CHECK(fit->residual < 1e-8);
        const auto fit7 = proportionality_fit(jac.quartic, quartic_from_bitangents(jac.lines, jac.x7));
        REQUIRE(fit7.has_value());
        CHECK(fit7->residual < 1e-10);
        CHECK(jac.diagnostics.max_bitangency_residual < 1e-6);
    }
}

TEST_CASE("change of basis of the differentials")
{
    Rng rng(29);
    const PeriodMatrix base = read_period_file(fixtures + "/klein.period");
    Matrix3c m;
    m << 2, Complex(0, 1), 0, 1, -1, 0.5, 0, Complex(1, -1), 3;
    const PeriodMatrix moved{m * base.omega1, m * base.omega2};
    const auto q = reconstruct_jacobian_nullwerte(base).quartic;
    const auto q2 = reconstruct_jacobian_nullwerte(moved).quartic;
    const Matrix3c minv = m.inverse();
    // The lines of the new basis are the old ones composed with M^-1.
    Complex ratio;
    for (int k = 0; k < 8; ++k) {
        const auto p = point(rng);
        const Eigen::Vector3cd v(p[0], p[1], p[2]);
        const Eigen::Vector3cd w = minv * v;
        const Complex r = q2(p) / q({w(0), w(1), w(2)});
        if (k == 0) {
            ratio = r;
        }
        CHECK(std::abs(r - ratio) < 1e-8 * std::abs(ratio));
    }

    const PeriodMatrix scaled{Complex(0.5, 2) * base.omega1, Complex(0.5, 2) * base.omega2};
    CHECK(relative_distance(klein(), reconstruct_jacobian_nullwerte(scaled).quartic) < 1e-6);
}

TEST_CASE("a product of elliptic curves is rejected")
{
    Matrix3c d = Matrix3c::Zero();
    d(0, 0) = Complex(0.1, 1.1);
    d(1, 1) = Complex(-0.2, 0.9);
    d(2, 2) = Complex(0.3, 1.3);
    const auto np = normalize({Matrix3c::Identity(), d});
    CHECK_THROWS_AS(reconstruct_thetanullwerte(np), ConditioningError);
    bool flagged = false;
    try {
        flagged = reconstruct_jacobian_nullwerte(np).diagnostics.max_bitangency_residual >= 1e-6;
    } catch (const DegenerateError &) {
        flagged = true;
    }
    CHECK(flagged);
}

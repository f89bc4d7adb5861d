#ifndef THETA3_TORELLI_HPP
#define THETA3_TORELLI_HPP

#include "theta3/quartic_algebra.hpp"
#include "theta3/theta.hpp"

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace theta3
{

// Omega = (Omega1 | Omega2): rows are the differentials, columns the cycles.
struct PeriodMatrix
{
    Matrix3c omega1;
    Matrix3c omega2;
};

class PeriodParseError : public std::runtime_error
{
public:
    PeriodParseError(int line, const std::string &what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    int line() const { return line_; }

private:
    int line_;
};

// Text format: '#' comment lines and blank lines anywhere, a header
// "PERIOD 3 6", then three rows of six complex entries "re im". A header
// "PERIOD 6 3" (six rows of three entries, cycles along rows) is read and
// transposed.
PeriodMatrix parse_period_matrix(std::istream &in);
PeriodMatrix read_period_file(const std::string &path);

void write_period_matrix(std::ostream &out, const PeriodMatrix &m);

struct NormalizedPeriods
{
    SiegelPoint z;
    // The Omega1 actually used (transposed when the block-transposed reading was
    // needed).
    Matrix3c omega1;
    bool transposed = false;
    double omega1_condition = 0;
    // Human-readable record of the orientation decision.
    std::string orientation;
};

class NormalizationError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Z = Omega1^-1 Omega2. When Z fails the symmetry or positivity check, the
// reading with both blocks transposed (cycles along rows) is tried; the choice is
// recorded in `orientation`. Throws NormalizationError naming the failing check
// when both fail or Omega1 is singular.
NormalizedPeriods normalize(const PeriodMatrix &m, double tol = 1e-8);

// H_c = grad theta[c](0; Z) Omega1^-1 (X, Y, Z)^t. c must be odd.
LinearForm<Complex> bitangent_from_char(Characteristic c, const SiegelPoint &z, const Matrix3c &omega1,
                                        const ThetaEvalConfig &cfg = {});

struct LabeledLine
{
    std::string label; // named label when there is one, else the encoding
    Characteristic c;
    LinearForm<Complex> line;
};

// The 28 bitangents in index order of the odd characteristics.
std::vector<LabeledLine> all_bitangents(const NormalizedPeriods &np, const ThetaEvalConfig &cfg = {});

// Characteristic-level hypotheses of the seven-line formula for the labelled
// w1..w3, w1'..w3', w7: the three pairs share one complex, w7 lies in the
// complex of {w1, w2'} and {w2, w1'}, and with Y7 its partner there,
// {w1, w3, w7} and {w1, w3', Y7} are azygetic. Throws std::logic_error.
void check_reconstruction_hypotheses();

struct ReconstructionDiagnostics
{
    std::string method;
    std::string orientation;
    double omega1_condition = 0;
    double symmetry_residual = 0;
    double lambda_min = 0;
    // Smallest |denominator| / floor among the checked Nullwerte (> 1 passes).
    double conditioning_margin = 0;
    int theta_null_evaluations = 0;
    // Max square-fit residual of the 28 bitangents against the quartic.
    double max_bitangency_residual = 0;
    std::string worst_bitangent;
};

struct ReconstructionResult
{
    QuarticForm<Complex> quartic;
    LinePairs<Complex> lines; // X_j = H_{w_j}, Y_j = H_{w_j'}
    LinearForm<Complex> x7;   // H_{w7}
    std::array<Complex, 3> coefficients;
    // Nullwerte used, keyed by their labels (e.g. "[w1 w2 w3]" or "c2").
    std::map<std::string, Complex> values;
    ReconstructionDiagnostics diagnostics;
};

// Raised when a denominator falls below the conditioning floor
// 1e-10 * (max gradient magnitude)^3, or a Thetanullwert below 1e-10.
class ConditioningError : public DegenerateError
{
public:
    using DegenerateError::DegenerateError;
};

// (c1 X1Y1 + c2 X2Y2 - c3 X3Y3)^2 - 4 c1 c2 X1Y1X2Y2 with
//   c1 = [w7 w2 w3][w7 w2' w3'] / D, c2 = [w1 w7 w3][w1' w7 w3'] / D,
//   c3 = [w1 w2 w7][w1' w2' w7] / D,  D = [w1 w2 w3][w1' w2' w3'].
ReconstructionResult reconstruct_jacobian_nullwerte(const PeriodMatrix &m, const ThetaEvalConfig &cfg = {});
ReconstructionResult reconstruct_jacobian_nullwerte(const NormalizedPeriods &np, const ThetaEvalConfig &cfg = {});

// Same shape with A1 = c2c3c4 d1d4d5, A2 = e2e3e5 f1f3f4, A3 = g2g3g5 h1h3h4
// (products of Thetanullwerte); exactly 18 theta_null evaluations.
ReconstructionResult reconstruct_thetanullwerte(const PeriodMatrix &m, const ThetaEvalConfig &cfg = {});
ReconstructionResult reconstruct_thetanullwerte(const NormalizedPeriods &np, const ThetaEvalConfig &cfg = {});

// Largest is_bitangent residual of `lines` against q; sets `worst` to its label.
double max_bitangency_residual(const QuarticForm<Complex> &q, const std::vector<LabeledLine> &lines,
                               std::string *worst = nullptr);

} // namespace theta3

#endif

#ifndef THETA3_IDENTITIES_HPP
#define THETA3_IDENTITIES_HPP

#include "theta3/theta.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace theta3
{

struct IdentityReport
{
    std::string identity;
    Complex lhs;
    Complex rhs;
    double rel_err = 0;
    bool pass = false;
    // "signed" for the Frobenius table; "verbatim", "corrected" or
    // "degenerate-verbatim" for the Nullwerte identities.
    std::string mode;
    // Frobenius rows: sign s with lhs ~ s pi^3 prod theta (+1 or -1); 0 otherwise.
    int observed_sign = 0;
    Matrix3c z;
    ThetaEvalConfig cfg;
};

// |L - R| / max(|L|, |R|, 1e-30).
double relative_error(Complex lhs, Complex rhs);

constexpr double identity_threshold = 1e-8;

// [t1 t2 t3] = sign pi^3 prod_k theta[e_k] for the eight rows a..h.
std::vector<IdentityReport> verify_frobenius_table(const SiegelPoint &z, const ThetaEvalConfig &cfg = {},
                                                   double threshold = identity_threshold);

// The pair standing in for {w4, w4'}: the lexicographically smallest pair of
// the complex of w1 + w1' not meeting the three pairs {w_j, w_j'}.
std::pair<Characteristic, Characteristic> corrected_w4_pair();

// The five Nullwerte identities ("igualtats-1" .. "igualtats-5"). Identities 3-5
// use {w4, w4'} as printed unless use_corrected is set. A printed w4' that is
// even makes both sides vanish; those reports carry mode "degenerate-verbatim"
// and pass = false.
std::vector<IdentityReport> verify_igualtats(const SiegelPoint &z, const ThetaEvalConfig &cfg = {},
                                             bool use_corrected = false, double threshold = identity_threshold);

struct SweepSummary
{
    int trials = 0;
    std::uint64_t seed = 0;
    // Every report, in trial order, then identity order (Frobenius, verbatim,
    // corrected).
    std::vector<std::pair<int, IdentityReport>> reports;
    // Largest rel_err per identity id and mode ("a", "igualtats-3/corrected", ...).
    std::map<std::string, double> max_rel_err;
    // Frobenius rows whose observed sign changed between samples.
    std::vector<std::string> unstable_signs;
    int failures = 0;   // non-degenerate reports that failed
    int degenerate = 0; // degenerate-verbatim reports

    bool all_pass() const { return failures == 0 && unstable_signs.empty(); }
};

// n seeded samples of random_siegel_point; throws std::invalid_argument for n < 1.
SweepSummary sweep(int n_trials, std::uint64_t seed, const ThetaEvalConfig &cfg = {},
                   double threshold = identity_threshold);

} // namespace theta3

#endif

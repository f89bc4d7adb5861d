#include "theta3/identities.hpp"

#include "theta3/named.hpp"
#include "theta3/steiner.hpp"

#include <algorithm>
#include <map>
#include <numbers>
#include <set>

namespace theta3
{

namespace
{

constexpr double pi3 = std::numbers::pi * std::numbers::pi * std::numbers::pi;

// Gradient cache keyed by characteristic; entries are evaluated independently.
class Gradients
{
public:
    Gradients(const SiegelPoint &z, const ThetaEvalConfig &cfg) : z_(z), cfg_(cfg) {}

    const GradientVector &operator()(Characteristic c)
    {
        auto it = cache_.find(c.index());
        if (it == cache_.end()) {
            it = cache_.emplace(c.index(), grad_theta_null(c, z_, cfg_)).first;
        }
        return it->second;
    }

    Complex nullwert(Characteristic a, Characteristic b, Characteristic c)
    {
        return jacobian_nullwert((*this)(a), (*this)(b), (*this)(c));
    }

private:
    const SiegelPoint &z_;
    ThetaEvalConfig cfg_;
    std::map<unsigned, GradientVector> cache_;
};

IdentityReport make_report(std::string id, Complex lhs, Complex rhs, std::string mode, const SiegelPoint &z,
                           const ThetaEvalConfig &cfg, double threshold)
{
    IdentityReport r;
    r.identity = std::move(id);
    r.lhs = lhs;
    r.rhs = rhs;
    r.rel_err = relative_error(lhs, rhs);
    r.pass = r.rel_err < threshold;
    r.mode = std::move(mode);
    r.z = z.matrix();
    r.cfg = cfg;
    return r;
}

} // namespace

double relative_error(Complex lhs, Complex rhs)
{
    return std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1e-30});
}

std::vector<IdentityReport> verify_frobenius_table(const SiegelPoint &z, const ThetaEvalConfig &cfg, double threshold)
{
    Gradients grad(z, cfg);
    std::vector<IdentityReport> out;
    for (const FrobeniusRow &row : frobenius_rows()) {
        const Complex lhs = grad.nullwert(named(row.triple[0]), named(row.triple[1]), named(row.triple[2]));
        Complex prod = pi3;
        for (Characteristic e : frobenius_table(row.table)) {
            prod *= theta_null(e, z, cfg);
        }
        IdentityReport r = make_report(std::string(row.id), lhs, double(row.sign) * prod, "signed", z, cfg, threshold);
        r.observed_sign = std::real(lhs / prod) >= 0 ? 1 : -1;
        out.push_back(std::move(r));
    }
    return out;
}

std::pair<Characteristic, Characteristic> corrected_w4_pair()
{
    const SteinerComplex s = steiner_complex(named("w1") + named("w1'"));
    std::set<Characteristic> used;
    for (const char *l : {"w1", "w1'", "w2", "w2'", "w3", "w3'"}) {
        used.insert(named(l));
    }
    for (const CharPair &p : s.pairs) {
        if (!used.count(p.first) && !used.count(p.second)) {
            return p;
        }
    }
    throw std::logic_error("no free pair in the complex of w1 + w1'");
}

std::vector<IdentityReport> verify_igualtats(const SiegelPoint &z, const ThetaEvalConfig &cfg, bool use_corrected,
                                             double threshold)
{
    Gradients g(z, cfg);
    const Characteristic w1 = named("w1"), w2 = named("w2"), w3 = named("w3");
    const Characteristic v1 = named("w1'"), v2 = named("w2'"), v3 = named("w3'");
    const Characteristic w7 = named("w7"), v7 = named("w7'");
    Characteristic w4 = named("w4"), v4 = named("w4'");
    if (use_corrected) {
        std::tie(w4, v4) = corrected_w4_pair();
    }
    auto J = [&](Characteristic a, Characteristic b, Characteristic c) { return g.nullwert(a, b, c); };

    const std::string mode = use_corrected ? "corrected" : "verbatim";
    std::vector<IdentityReport> out;
    out.push_back(make_report("igualtats-1", J(w2, w3, w7) * J(w1, v3, v7), J(w1, w3, w7) * J(w2, v3, v7), mode, z,
                              cfg, threshold));
    out.push_back(make_report("igualtats-2", J(v2, w3, v7) * J(v1, v3, w7), J(v1, w3, v7) * J(v2, v3, w7), mode, z,
                              cfg, threshold));

    const bool degenerate = parity(w4) != Parity::odd || parity(v4) != Parity::odd;
    const Complex common_lhs = J(w3, w1, w2) * J(v3, w1, w2);
    const Complex common_rhs = J(w4, w1, w2) * J(v4, w1, w2);
    const std::array<std::pair<Characteristic, Characteristic>, 3> bases = {{{w1, v2}, {w2, v1}, {v1, v2}}};
    for (int k = 0; k < 3; ++k) {
        const auto [a, b] = bases[k];
        const Complex lhs = common_lhs * J(w4, a, b) * J(v4, a, b);
        const Complex rhs = common_rhs * J(w3, a, b) * J(v3, a, b);
        IdentityReport r = make_report("igualtats-" + std::to_string(k + 3), lhs, rhs,
                                       degenerate ? "degenerate-verbatim" : mode, z, cfg, threshold);
        if (degenerate) {
            r.pass = false;
        }
        out.push_back(std::move(r));
    }
    return out;
}

SweepSummary sweep(int n_trials, std::uint64_t seed, const ThetaEvalConfig &cfg, double threshold)
{
    if (n_trials < 1) {
        throw std::invalid_argument("sweep needs at least one trial");
    }
    SweepSummary s;
    s.trials = n_trials;
    s.seed = seed;
    Rng rng(seed);
    std::map<std::string, std::set<int>> signs;
    for (int t = 0; t < n_trials; ++t) {
        const SiegelPoint z = random_siegel_point(rng);
        std::vector<IdentityReport> all = verify_frobenius_table(z, cfg, threshold);
        for (bool corrected : {false, true}) {
            auto more = verify_igualtats(z, cfg, corrected, threshold);
            all.insert(all.end(), more.begin(), more.end());
        }
        for (auto &r : all) {
            const std::string key = r.mode == "signed" ? r.identity : r.identity + "/" + r.mode;
            auto &m = s.max_rel_err[key];
            m = std::max(m, r.rel_err);
            if (r.observed_sign != 0) {
                signs[r.identity].insert(r.observed_sign);
            }
            if (r.mode == "degenerate-verbatim") {
                ++s.degenerate;
            } else if (!r.pass) {
                ++s.failures;
            }
            s.reports.emplace_back(t, std::move(r));
        }
    }
    for (const auto &[id, set] : signs) {
        if (set.size() > 1) {
            s.unstable_signs.push_back(id);
        }
    }
    return s;
}

} // namespace theta3

#include "theta3/quartic_algebra.hpp"

#include <map>
#include <set>

namespace theta3
{

const std::array<const char *, 15> &quartic_monomial_names()
{
    static const std::array<const char *, 15> names = {
        "X^4",   "X^3*Y", "X^3*Z",   "X^2*Y^2", "X^2*Y*Z", "X^2*Z^2", "X*Y^3", "X*Y^2*Z",
        "X*Y*Z^2", "X*Z^3", "Y^4",   "Y^3*Z",   "Y^2*Z^2", "Y*Z^3",   "Z^4",
    };
    return names;
}

namespace
{

struct Presentation
{
    std::array<const char *, 6> pairs; // A B C D E F
    std::array<const char *, 4> printed;
};

// The block of thirteen presentations with the final four factors as printed.
const std::array<Presentation, 13> presentations = {{
    {{"X1", "Y2", "X2", "Y1", "W", "Z3"}, {"X1", "X2", "Y1", "Y2"}},
    {{"X1", "Y3", "X3", "Y1", "W", "Z2"}, {"X1", "X3", "Y1", "Y3"}},
    {{"X2", "Y3", "X3", "Y2", "W", "Z1"}, {"X2", "X3", "Y2", "Y3"}},
    {{"X1", "X2", "Y1", "Y2", "Z1", "Z2"}, {"X1", "X2", "Y1", "Y2"}},
    {{"X1", "X3", "Y1", "Y3", "Z1", "Z3"}, {"X1", "X3", "Y1", "Y3"}},
    {{"X2", "X3", "Y2", "Y3", "Z2", "Z3"}, {"X1", "X3", "Y1", "Y3"}},
    {{"X1", "W", "Y2", "Z3", "Y3", "Z2"}, {"X1", "W", "Y2", "Z3"}},
    {{"X2", "W", "Y1", "Z3", "Y3", "Z1"}, {"X2", "W", "Y1", "Z3"}},
    {{"X3", "W", "Y1", "Z2", "Y2", "Z1"}, {"X3", "W", "Y1", "Z2"}},
    {{"X1", "Z3", "Y2", "W", "X3", "Z1"}, {"X1", "Z3", "Y2", "W"}},
    {{"X1", "Z2", "Y3", "W", "X2", "Z1"}, {"X1", "Z2", "Y3", "W"}},
    {{"X1", "Z1", "X2", "Z2", "X3", "Z3"}, {"X1", "Z1", "X2", "Z2"}},
    {{"Y1", "Z1", "Y2", "Z2", "Y3", "Z3"}, {"X1", "Y1", "Y2", "Z2"}},
}};

std::string render(const Presentation &pr, const std::array<const char *, 4> &last)
{
    const auto &n = pr.pairs;
    std::string s = "(";
    s += std::string(n[0]) + n[1] + "+" + n[2] + n[3] + "-" + n[4] + n[5] + ")^2-4";
    for (const char *f : last) {
        s += f;
    }
    return s;
}

std::multiset<std::string> as_multiset(const std::array<const char *, 4> &f)
{
    return {f.begin(), f.end()};
}

} // namespace

std::map<std::string, LinearForm<Rational>> model_lines(const LinePairs<Rational> &p)
{
    const DerivedBitangents<Rational> d = derived_bitangents(p, 0);
    std::map<std::string, LinearForm<Rational>> lines;
    for (int i = 0; i < 3; ++i) {
        lines["X" + std::to_string(i + 1)] = p.x[i];
        lines["Y" + std::to_string(i + 1)] = -p.y[i];
        lines["Z" + std::to_string(i + 1)] = d.z[i];
    }
    lines["W"] = d.w;
    return lines;
}

const std::array<std::array<const char *, 6>, 13> &presentation_pairs()
{
    static const auto pairs = [] {
        std::array<std::array<const char *, 6>, 13> out;
        for (std::size_t k = 0; k < 13; ++k) {
            out[k] = presentations[k].pairs;
        }
        return out;
    }();
    return pairs;
}

std::vector<PresentationCheck> verify_presentations(const LinePairs<Rational> &p)
{
    const QuarticForm<Rational> q = riemann_quartic(p, 0);
    const auto lines = model_lines(p);

    auto prod2 = [&](const char *a, const char *b) { return detail::product(lines.at(a), lines.at(b)); };

    std::vector<PresentationCheck> out;
    for (std::size_t k = 0; k < presentations.size(); ++k) {
        const Presentation &pr = presentations[k];
        const auto &n = pr.pairs;
        const TernaryForm<Rational> ab = prod2(n[0], n[1]);
        const TernaryForm<Rational> cd = prod2(n[2], n[3]);
        const TernaryForm<Rational> conic = ab + cd - prod2(n[4], n[5]);
        const TernaryForm<Rational> square = conic * conic;

        const TernaryForm<Rational> printed_last =
            prod2(pr.printed[0], pr.printed[1]) * prod2(pr.printed[2], pr.printed[3]);
        const QuarticForm<Rational> printed(square - Rational(4) * printed_last);
        const QuarticForm<Rational> corrected(square - Rational(4) * (ab * cd));

        PresentationCheck c;
        c.line = static_cast<int>(k + 1);
        const std::array<const char *, 4> forced = {n[0], n[1], n[2], n[3]};
        c.printed = render(pr, pr.printed);
        c.corrected = render(pr, forced);
        c.printed_term_is_forced = as_multiset(pr.printed) == as_multiset(forced);
        c.printed_proportional = proportional(q, printed).has_value();
        const auto factor = proportional(q, corrected);
        c.corrected_proportional = factor.has_value();
        c.factor = factor ? factor->get_str() : "";
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace theta3

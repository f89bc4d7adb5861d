#include "theta3/steiner.hpp"

#include <algorithm>
#include <iterator>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

namespace theta3
{

namespace
{

void require_odd_azygetic(Characteristic a, Characteristic b, Characteristic c)
{
    for (auto x : {a, b, c}) {
        if (parity(x) != Parity::odd) {
            throw std::invalid_argument("expected odd characteristics, got even " + x.str());
        }
    }
    if (!is_azygetic_triple(a, b, c)) {
        throw std::invalid_argument("triple " + a.str() + " " + b.str() + " " + c.str() + " is syzygetic");
    }
}

} // namespace

std::array<Characteristic, 12> SteinerComplex::lines() const
{
    std::array<Characteristic, 12> out;
    for (int i = 0; i < 6; ++i) {
        out[2 * i] = pairs[i].first;
        out[2 * i + 1] = pairs[i].second;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool SteinerComplex::contains(Characteristic c) const
{
    return std::any_of(pairs.begin(), pairs.end(), [c](const CharPair &p) { return p.first == c || p.second == c; });
}

Characteristic SteinerComplex::partner(Characteristic c) const
{
    if (!contains(c)) {
        throw std::invalid_argument(c.str() + " is not in the complex of " + eta.str());
    }
    return c + eta;
}

SteinerComplex steiner_complex(Characteristic eta)
{
    if (eta.is_zero()) {
        throw std::invalid_argument("Steiner complex of the zero characteristic");
    }
    SteinerComplex s;
    s.eta = eta;
    std::size_t n = 0;
    for (Characteristic a : enumerate(Parity::odd)) {
        const Characteristic b = a + eta;
        if (a < b && parity(b) == Parity::odd) {
            if (n == 6) {
                throw std::logic_error("more than six pairs for " + eta.str());
            }
            s.pairs[n++] = {a, b};
        }
    }
    if (n != 6) {
        throw std::logic_error("expected six pairs for " + eta.str() + ", found " + std::to_string(n));
    }
    return s;
}

std::vector<SteinerComplex> all_steiner_complexes()
{
    std::vector<SteinerComplex> out;
    for (unsigned i = 1; i < 64; ++i) {
        out.push_back(steiner_complex(Characteristic::from_index(i)));
    }
    return out;
}

bool complexes_syzygetic(Characteristic eta1, Characteristic eta2)
{
    if (eta1.is_zero() || eta2.is_zero()) {
        throw std::invalid_argument("Steiner complexes need nonzero characteristics");
    }
    if (eta1 == eta2) {
        throw std::invalid_argument("complexes_syzygetic needs two distinct complexes");
    }
    return weil_pairing(eta1, eta2) == 0;
}

std::vector<Characteristic> line_intersection(const SteinerComplex &a, const SteinerComplex &b)
{
    const auto la = a.lines();
    const auto lb = b.lines();
    std::vector<Characteristic> out;
    std::set_intersection(la.begin(), la.end(), lb.begin(), lb.end(), std::back_inserter(out));
    return out;
}

std::array<CharPair, 6> AsyzygeticLabeling::table(int k) const
{
    // Offsets of the left and right columns of rows 2..6 in each printed shape.
    static constexpr int left[3] = {3, 8, 13};
    static constexpr int right[3] = {8, 13, 3};
    std::array<CharPair, 6> t;
    t[0] = {x[k], x[(k + 1) % 3]};
    for (int r = 0; r < 5; ++r) {
        t[r + 1] = {x[left[k] + r], x[right[k] + r]};
    }
    return t;
}

AsyzygeticLabeling label_asyzygetic_triple(Characteristic x1, Characteristic x2, Characteristic x3)
{
    require_odd_azygetic(x1, x2, x3);
    AsyzygeticLabeling out;
    out.complexes = {steiner_complex(x1 + x2), steiner_complex(x2 + x3), steiner_complex(x3 + x1)};
    const auto &s12 = out.complexes[0];
    const auto &s23 = out.complexes[1];
    const auto &s31 = out.complexes[2];

    // Each remaining pair of S_{X1X2} has exactly one member in S_{X3X1}; that
    // member is X_{4+k}, its partner X_{9+k}, and X_{14+k} is the common partner
    // of X_{9+k} in S_{X2X3} and of X_{4+k} in S_{X3X1}.
    std::vector<std::array<Characteristic, 3>> rows;
    for (const CharPair &p : s12.pairs) {
        if (p.first == x1 || p.first == x2) {
            continue;
        }
        const bool f = s31.contains(p.first);
        const bool g = s31.contains(p.second);
        if (f == g) {
            throw std::logic_error("pair " + p.first.str() + " " + p.second.str() + " meets S_{X3X1} in " +
                                   std::to_string(int(f) + int(g)) + " members");
        }
        const Characteristic a = f ? p.first : p.second;
        const Characteristic b = f ? p.second : p.first;
        const Characteristic c = s23.partner(b);
        if (s31.partner(a) != c) {
            throw std::logic_error("no consistent labeling through " + a.str());
        }
        rows.push_back({a, b, c});
    }
    if (rows.size() != 5) {
        throw std::logic_error("S_{X1X2} does not contain the pair {X1, X2}");
    }
    std::sort(rows.begin(), rows.end());
    out.x[0] = x1;
    out.x[1] = x2;
    out.x[2] = x3;
    for (int k = 0; k < 5; ++k) {
        out.x[3 + k] = rows[k][0];
        out.x[8 + k] = rows[k][1];
        out.x[13 + k] = rows[k][2];
    }
    auto sorted = out.x;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::logic_error("labeling repeats a characteristic");
    }
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            if (complexes_syzygetic(out.complexes[i].eta, out.complexes[j].eta)) {
                throw std::logic_error("complexes of an azygetic triple are syzygetic");
            }
        }
    }
    return out;
}

std::array<Characteristic, 5> frobenius_completion(Characteristic c1, Characteristic c2, Characteristic c3)
{
    require_odd_azygetic(c1, c2, c3);
    // Only even characteristics azygetic with every pair of the triple can occur.
    std::vector<Characteristic> cand;
    for (Characteristic e : enumerate(Parity::even)) {
        if (is_azygetic_triple(c1, c2, e) && is_azygetic_triple(c1, c3, e) && is_azygetic_triple(c2, c3, e)) {
            cand.push_back(e);
        }
    }
    std::optional<std::array<Characteristic, 5>> found;
    const std::size_t n = cand.size();
    std::array<Characteristic, 8> seq{c1, c2, c3};
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            for (std::size_t c = b + 1; c < n; ++c) {
                for (std::size_t d = c + 1; d < n; ++d) {
                    for (std::size_t e = d + 1; e < n; ++e) {
                        seq[3] = cand[a];
                        seq[4] = cand[b];
                        seq[5] = cand[c];
                        seq[6] = cand[d];
                        seq[7] = cand[e];
                        if (!is_fundamental_system(std::span<const Characteristic, 8>(seq))) {
                            continue;
                        }
                        if (found) {
                            throw std::logic_error("completion of " + c1.str() + " " + c2.str() + " " + c3.str() +
                                                   " is not unique");
                        }
                        found = std::array<Characteristic, 5>{seq[3], seq[4], seq[5], seq[6], seq[7]};
                    }
                }
            }
        }
    }
    if (!found) {
        throw std::logic_error("no completion of " + c1.str() + " " + c2.str() + " " + c3.str());
    }
    return *found;
}

FundamentalFromTriple fundamental_from_asyzygetic(Characteristic x1, Characteristic x2, Characteristic x3)
{
    require_odd_azygetic(x1, x2, x3);
    const auto common = line_intersection(steiner_complex(x1 + x2), steiner_complex(x1 + x3));
    if (common.size() != 6 || !std::binary_search(common.begin(), common.end(), x1)) {
        throw std::logic_error("S_{x1x2} and S_{x1x3} should share x1 and five more members");
    }
    FundamentalFromTriple out;
    out.system[0] = x1;
    out.system[1] = x2;
    out.system[2] = x3;
    int k = 3;
    for (Characteristic xj : common) {
        if (xj != x1) {
            out.system[k++] = x2 + x3 + xj;
        }
    }
    std::sort(out.system.begin() + 3, out.system.end());
    out.azygetic = true;
    for (int i = 0; i < 8 && out.azygetic; ++i) {
        for (int j = i + 1; j < 8 && out.azygetic; ++j) {
            for (int l = j + 1; l < 8 && out.azygetic; ++l) {
                out.azygetic = is_azygetic_triple(out.system[i], out.system[j], out.system[l]);
            }
        }
    }
    for (Characteristic c : out.system) {
        (parity(c) == Parity::odd ? out.odd : out.even) += 1;
    }
    return out;
}

} // namespace theta3

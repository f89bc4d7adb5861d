#ifndef THETA3_STEINER_HPP
#define THETA3_STEINER_HPP

#include "theta3/characteristic.hpp"

#include <array>
#include <utility>
#include <vector>

namespace theta3
{

using CharPair = std::pair<Characteristic, Characteristic>;

// The six pairs {a, b} of odd characteristics with a + b = eta. Each pair is
// stored with the smaller index first and the pairs are sorted.
struct SteinerComplex
{
    Characteristic eta;
    std::array<CharPair, 6> pairs;

    // The twelve members, sorted.
    std::array<Characteristic, 12> lines() const;
    bool contains(Characteristic c) const;
    // Partner of c in its pair; throws std::invalid_argument if c is not a member.
    Characteristic partner(Characteristic c) const;
};

// Throws std::invalid_argument for eta = 0.
SteinerComplex steiner_complex(Characteristic eta);

// The 63 complexes in index order of eta.
std::vector<SteinerComplex> all_steiner_complexes();

// weil_pairing(eta1, eta2) == 0. Throws for zero or equal arguments.
bool complexes_syzygetic(Characteristic eta1, Characteristic eta2);

// Common members of the two complexes, sorted.
std::vector<Characteristic> line_intersection(const SteinerComplex &a, const SteinerComplex &b);

// Labels X1..X18 (x[0] .. x[17]) of the members of S_{X1X2}, S_{X2X3} and
// S_{X3X1} such that, for k = 0..4,
//   {X_{4+k}, X_{9+k}} lies in S_{X1X2}, {X_{9+k}, X_{14+k}} in S_{X2X3},
//   {X_{14+k}, X_{4+k}} in S_{X3X1}.
// Rows are ordered by the index of X_{4+k}.
struct AsyzygeticLabeling
{
    std::array<Characteristic, 18> x;
    std::array<SteinerComplex, 3> complexes; // S_{X1X2}, S_{X2X3}, S_{X3X1}

    // 6 x 2 table of complex k (0, 1, 2) in the printed shape.
    std::array<CharPair, 6> table(int k) const;
};

// Throws std::invalid_argument if the triple is not odd and azygetic; throws
// std::logic_error if no consistent labeling exists.
AsyzygeticLabeling label_asyzygetic_triple(Characteristic x1, Characteristic x2, Characteristic x3);

// The unique five even characteristics completing an odd azygetic triple to a
// fundamental system, sorted. Throws std::invalid_argument for other triples and
// std::logic_error if the completion is not unique.
std::array<Characteristic, 5> frobenius_completion(Characteristic c1, Characteristic c2, Characteristic c3);

struct FundamentalFromTriple
{
    // x1, x2, x3, w4..w8 with w_j = x2 + x3 + x_j for the members x4..x8 of
    // S_{x1x2} and S_{x1x3} other than x1 (sorted by index).
    std::array<Characteristic, 8> system;
    bool azygetic = false;
    int odd = 0;
    int even = 0;
};

FundamentalFromTriple fundamental_from_asyzygetic(Characteristic x1, Characteristic x2, Characteristic x3);

} // namespace theta3

#endif

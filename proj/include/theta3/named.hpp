#ifndef THETA3_NAMED_HPP
#define THETA3_NAMED_HPP

#include "theta3/characteristic.hpp"

#include <array>
#include <span>
#include <string_view>

namespace theta3
{

struct NamedCharacteristic
{
    std::string_view label;
    Characteristic value;
};

// The labelled characteristics of the reconstruction formula and the Frobenius
// tables: w1..w3, w1'..w3', w7 (reconstruction), w4, w4', w7' (Nullwerte
// identities, w4' exactly as printed), and a1..h5 (even completions).
std::span<const NamedCharacteristic> named_characteristics();

// Throws std::out_of_range for an unknown label.
Characteristic named(std::string_view label);

// One row of the Frobenius table: [t0, t1, t2] = sign * pi^3 * prod theta[e_k].
struct FrobeniusRow
{
    std::string_view id;
    std::array<std::string_view, 3> triple;
    char table;
    int sign;
};

std::span<const FrobeniusRow, 8> frobenius_rows();

// The five even characteristics of table `letter` ('a'..'h').
std::array<Characteristic, 5> frobenius_table(char letter);

// Factors of A1, A2, A3 in the Thetanullwerte model, six labels each.
std::span<const std::array<std::string_view, 6>, 3> thetanull_coefficient_factors();

} // namespace theta3

#endif

#include "theta3/named.hpp"

#include <stdexcept>
#include <string>

namespace theta3
{

namespace
{

// Written as translation part + Z-multiplied part, the way the tables list them;
// the encoding flips them into (eps', eps'').
constexpr Characteristic ch(std::string_view translation, std::string_view zpart)
{
    unsigned bits = 0;
    for (char c : zpart) {
        bits = (bits << 1) | static_cast<unsigned>(c - '0');
    }
    for (char c : translation) {
        bits = (bits << 1) | static_cast<unsigned>(c - '0');
    }
    return Characteristic::from_index(bits);
}

constexpr NamedCharacteristic table[] = {
    {"w1", ch("101", "001")},
    {"w1'", ch("001", "001")},
    {"w2", ch("110", "011")},
    {"w2'", ch("010", "011")},
    {"w3", ch("111", "010")},
    {"w3'", ch("011", "010")},
    {"w7", ch("001", "111")},
    {"w4", ch("100", "111")},
    {"w4'", ch("000", "111")},
    {"w7'", ch("110", "101")},

    {"a1", ch("000", "000")},
    {"a2", ch("000", "100")},
    {"a3", ch("101", "111")},
    {"a4", ch("110", "110")},
    {"a5", ch("111", "101")},

    {"b1", ch("000", "100")},
    {"b2", ch("100", "000")},
    {"b3", ch("101", "111")},
    {"b4", ch("110", "110")},
    {"b5", ch("111", "101")},

    {"c1", ch("000", "000")},
    {"c2", ch("010", "000")},
    {"c3", ch("011", "011")},
    {"c4", ch("100", "010")},
    {"c5", ch("101", "111")},

    {"d1", ch("000", "010")},
    {"d2", ch("100", "000")},
    {"d3", ch("101", "111")},
    {"d4", ch("110", "000")},
    {"d5", ch("111", "011")},

    {"e1", ch("000", "000")},
    {"e2", ch("000", "001")},
    {"e3", ch("001", "010")},
    {"e4", ch("101", "111")},
    {"e5", ch("111", "000")},

    {"f1", ch("011", "000")},
    {"f2", ch("100", "000")},
    {"f3", ch("100", "001")},
    {"f4", ch("101", "010")},
    {"f5", ch("101", "111")},

    {"g1", ch("000", "000")},
    {"g2", ch("000", "011")},
    {"g3", ch("001", "000")},
    {"g4", ch("101", "111")},
    {"g5", ch("110", "001")},

    {"h1", ch("010", "001")},
    {"h2", ch("100", "000")},
    {"h3", ch("100", "011")},
    {"h4", ch("101", "000")},
    {"h5", ch("101", "111")},
};

constexpr std::array<FrobeniusRow, 8> rows = {{
    {"a", {"w1", "w2", "w3"}, 'a', +1},
    {"b", {"w1'", "w2'", "w3'"}, 'b', -1},
    {"c", {"w7", "w2", "w3"}, 'c', +1},
    {"d", {"w7", "w2'", "w3'"}, 'd', +1},
    {"e", {"w1", "w7", "w3"}, 'e', -1},
    {"f", {"w1'", "w7", "w3'"}, 'f', -1},
    {"g", {"w1", "w2", "w7"}, 'g', +1},
    {"h", {"w1'", "w2'", "w7"}, 'h', +1},
}};

constexpr std::array<std::array<std::string_view, 6>, 3> a_factors = {{
    {"c2", "c3", "c4", "d1", "d4", "d5"},
    {"e2", "e3", "e5", "f1", "f3", "f4"},
    {"g2", "g3", "g5", "h1", "h3", "h4"},
}};

} // namespace

std::span<const NamedCharacteristic> named_characteristics()
{
    return table;
}

Characteristic named(std::string_view label)
{
    for (const auto &entry : table) {
        if (entry.label == label) {
            return entry.value;
        }
    }
    throw std::out_of_range("unknown characteristic label '" + std::string(label) + "'");
}

std::span<const FrobeniusRow, 8> frobenius_rows()
{
    return rows;
}

std::array<Characteristic, 5> frobenius_table(char letter)
{
    std::array<Characteristic, 5> out;
    for (int k = 0; k < 5; ++k) {
        const char label[] = {letter, static_cast<char>('1' + k), '\0'};
        out[k] = named(label);
    }
    return out;
}

std::span<const std::array<std::string_view, 6>, 3> thetanull_coefficient_factors()
{
    return a_factors;
}

} // namespace theta3

#include "theta3/characteristic.hpp"

#include <bit>
#include <stdexcept>

namespace theta3
{

std::string_view to_string(Parity p)
{
    return p == Parity::odd ? "odd" : "even";
}

Characteristic::Characteristic(const std::array<int, 3> &eps_prime, const std::array<int, 3> &eps_dprime)
{
    unsigned bits = 0;
    for (int i = 0; i < 3; ++i) {
        if ((eps_prime[i] != 0 && eps_prime[i] != 1) || (eps_dprime[i] != 0 && eps_dprime[i] != 1)) {
            throw std::invalid_argument("characteristic components must be 0 or 1");
        }
        bits |= static_cast<unsigned>(eps_prime[i]) << (5 - i);
        bits |= static_cast<unsigned>(eps_dprime[i]) << (2 - i);
    }
    bits_ = static_cast<std::uint8_t>(bits);
}

Characteristic Characteristic::parse(std::string_view text)
{
    if (text.size() != 7 || text[3] != '.') {
        throw std::invalid_argument("malformed characteristic '" + std::string(text) + "', expected e1e2e3.d1d2d3");
    }
    unsigned bits = 0;
    for (std::size_t k = 0; k < 7; ++k) {
        if (k == 3) {
            continue;
        }
        if (text[k] != '0' && text[k] != '1') {
            throw std::invalid_argument("malformed characteristic '" + std::string(text) + "', digits must be 0 or 1");
        }
        bits = (bits << 1) | static_cast<unsigned>(text[k] - '0');
    }
    return from_index(bits);
}

std::string Characteristic::str() const
{
    std::string s(7, '.');
    for (int i = 0; i < 3; ++i) {
        s[i] = static_cast<char>('0' + eps_prime(i));
        s[4 + i] = static_cast<char>('0' + eps_dprime(i));
    }
    return s;
}

Parity parity(Characteristic c)
{
    return (std::popcount(c.prime_bits() & c.dprime_bits()) & 1) ? Parity::odd : Parity::even;
}

Characteristic add(Characteristic a, Characteristic b)
{
    return Characteristic::from_index(a.index() ^ b.index());
}

int weil_pairing(Characteristic a, Characteristic b)
{
    return std::popcount((a.prime_bits() & b.dprime_bits()) ^ (a.dprime_bits() & b.prime_bits())) & 1;
}

bool is_azygetic_triple(Characteristic a, Characteristic b, Characteristic c)
{
    if (a == b || b == c || a == c) {
        throw std::invalid_argument("azygetic test needs three distinct characteristics");
    }
    return weil_pairing(add(a, b), add(a, c)) == 1;
}

bool is_fundamental_system(std::span<const Characteristic, 8> seq)
{
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = i + 1; j < 8; ++j) {
            if (seq[i] == seq[j]) {
                throw std::invalid_argument("fundamental system candidate contains duplicate " + seq[i].str());
            }
        }
    }
    for (std::size_t i = 0; i < 8; ++i) {
        if (parity(seq[i]) != (i < 3 ? Parity::odd : Parity::even)) {
            return false;
        }
    }
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = i + 1; j < 8; ++j) {
            for (std::size_t k = j + 1; k < 8; ++k) {
                if (!is_azygetic_triple(seq[i], seq[j], seq[k])) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<Characteristic> enumerate(std::optional<Parity> filter)
{
    std::vector<Characteristic> out;
    out.reserve(64);
    for (unsigned i = 0; i < 64; ++i) {
        const auto c = Characteristic::from_index(i);
        if (!filter || parity(c) == *filter) {
            out.push_back(c);
        }
    }
    return out;
}

} // namespace theta3

#ifndef THETA3_CHARACTERISTIC_HPP
#define THETA3_CHARACTERISTIC_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace theta3
{

enum class Parity { even, odd };

std::string_view to_string(Parity p);

// A level-2 theta characteristic (eps', eps'') with every component in {0, 1/2},
// stored as six bits. eps' is the vector multiplying Z, eps'' the translation
// part; the represented 2-torsion point is eps''/2 + Z eps'/2 in the labels used
// throughout the library.
//
// Bit layout (most significant first): e1 e2 e3 d1 d2 d3, so the natural order on
// index() is the lexicographic order of the text encoding "e1e2e3.d1d2d3".
class Characteristic
{
public:
    constexpr Characteristic() = default;

    // Components must be 0 or 1 (meaning 0 or 1/2).
    Characteristic(const std::array<int, 3> &eps_prime, const std::array<int, 3> &eps_dprime);

    static constexpr Characteristic from_index(unsigned index)
    {
        Characteristic c;
        c.bits_ = static_cast<std::uint8_t>(index & 0x3Fu);
        return c;
    }

    // Parses "e1e2e3.d1d2d3", e.g. "001.101". Throws std::invalid_argument.
    static Characteristic parse(std::string_view text);

    std::string str() const;

    constexpr unsigned index() const { return bits_; }
    constexpr int eps_prime(int i) const { return (bits_ >> (5 - i)) & 1; }
    constexpr int eps_dprime(int i) const { return (bits_ >> (2 - i)) & 1; }
    constexpr unsigned prime_bits() const { return bits_ >> 3; }
    constexpr unsigned dprime_bits() const { return bits_ & 0x7u; }
    constexpr bool is_zero() const { return bits_ == 0; }

    friend constexpr bool operator==(Characteristic, Characteristic) = default;
    friend constexpr auto operator<=>(Characteristic, Characteristic) = default;

private:
    std::uint8_t bits_ = 0;
};

Parity parity(Characteristic c);

// Group law on J[2]: componentwise addition mod 2.
Characteristic add(Characteristic a, Characteristic b);
inline Characteristic operator+(Characteristic a, Characteristic b) { return add(a, b); }

// Additive Weil pairing eps1'.eps2'' + eps1''.eps2' mod 2.
int weil_pairing(Characteristic a, Characteristic b);

// Throws std::invalid_argument unless the three are pairwise distinct.
bool is_azygetic_triple(Characteristic a, Characteristic b, Characteristic c);

// Eight pairwise distinct characteristics; true iff every embedded triple is
// azygetic, the first three are odd and the last five even.
bool is_fundamental_system(std::span<const Characteristic, 8> seq);

// All 64 characteristics in index order, optionally filtered by parity.
std::vector<Characteristic> enumerate(std::optional<Parity> filter = std::nullopt);

} // namespace theta3

#endif

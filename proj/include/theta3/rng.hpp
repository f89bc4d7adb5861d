#ifndef THETA3_RNG_HPP
#define THETA3_RNG_HPP

#include <cstdint>
#include <random>

namespace theta3
{

// All randomness in the library flows through this generator: mt19937_64 seeded
// with the user seed, with hand-written distributions.
class Rng
{
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Uniform integer in [lo, hi] by reduction modulo the span.
    long uniform_int(long lo, long hi)
    {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace theta3

#endif

#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace skewconv {

// Raised when an exact computation would exceed its enumeration guard.
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an internal consistency check fails (indicates a bug, not bad input).
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Deterministic RNG wrapper. mt19937_64 output is fully specified by the
// standard, so results are reproducible across platforms. Draws below a bound
// use plain modulo; the bias is irrelevant for seeded test workloads.
class DetRng {
  public:
    explicit DetRng(uint64_t seed) : gen_(seed) {}

    // Independent stream per trial index, stable under reordering.
    static DetRng for_trial(uint64_t seed, uint64_t trial) {
        uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (trial + 1);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return DetRng(z ^ (z >> 31));
    }

    uint64_t next() { return gen_(); }

    uint64_t below(uint64_t n) { return n == 0 ? 0 : gen_() % n; }

    // Uniform in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  private:
    std::mt19937_64 gen_;
};

} // namespace skewconv

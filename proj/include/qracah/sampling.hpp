/// Deterministic admissible-parameter sampling. Square roots are drawn
/// uniformly from reduced fractions with numerator and denominator in
/// [2, bound]; records violating the constraint scans are redrawn.
#pragma once

#include <cstdint>

#include "qracah/params.hpp"

namespace qracah {

/// SplitMix64: stable, platform-independent stream.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

/// Stream for one (suite, N, trial) cell; identical seeds give identical
/// parameter streams regardless of execution order.
Rng stream_for(std::uint64_t seed, const char* suite, int N, int trial);

/// One reduced fraction num/den with 2 <= num, den <= bound and num != den.
/// Throws SamplingExhausted when no admissible value exists (bound < 3).
Rational sample_root(Rng& rng, int bound);

RacahParams sample_racah(int N, Rng& rng, int bound = 9);
TratnikParams sample_tratnik(int N, Rng& rng, int bound = 9);
GriffithsParams sample_griffiths(int N, Rng& rng, int bound = 9);

inline constexpr int kSampleRedrawCap = 1000;

}  // namespace qracah

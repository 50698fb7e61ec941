#include "qracah/sampling.hpp"

#include <numeric>

namespace qracah {

Rng stream_for(std::uint64_t seed, const char* suite, int N, int trial) {
    // FNV-1a over the suite name, then mixed with the cell coordinates.
    std::uint64_t h = 1469598103934665603ULL;
    for (const char* c = suite; *c; ++c) h = (h ^ static_cast<std::uint64_t>(*c)) * 1099511628211ULL;
    h ^= seed + 0x9e3779b97f4a7c15ULL;
    h ^= static_cast<std::uint64_t>(N) * 0xff51afd7ed558ccdULL;
    h ^= static_cast<std::uint64_t>(trial) * 0xc4ceb9fe1a85ec53ULL;
    return Rng(h);
}

Rational sample_root(Rng& rng, int bound) {
    if (bound < 2) throw SamplingExhausted("sample_root: bound < 2");
    for (int tries = 0; tries < kSampleRedrawCap; ++tries) {
        long num = 2 + static_cast<long>(rng.below(static_cast<std::uint64_t>(bound - 1)));
        long den = 2 + static_cast<long>(rng.below(static_cast<std::uint64_t>(bound - 1)));
        if (num == den) continue;
        if (std::gcd(num, den) != 1) continue;
        return Rational(num, den);
    }
    throw SamplingExhausted("sample_root: no reduced fraction in range");
}

RacahParams sample_racah(int N, Rng& rng, int bound) {
    for (int tries = 0; tries < kSampleRedrawCap; ++tries) {
        RacahParams p{sample_root(rng, bound), sample_root(rng, bound), sample_root(rng, bound),
                      sample_root(rng, bound), N};
        if (!safe_for_checks(p)) continue;
        if (!validate(p).empty()) continue;
        return p;
    }
    throw SamplingExhausted("sample_racah: redraw cap reached");
}

TratnikParams sample_tratnik(int N, Rng& rng, int bound) {
    for (int tries = 0; tries < kSampleRedrawCap; ++tries) {
        TratnikParams p =
            TratnikParams::make(sample_root(rng, bound), sample_root(rng, bound),
                                sample_root(rng, bound), sample_root(rng, bound),
                                sample_root(rng, bound), N);
        if (!safe_for_checks(p)) continue;
        if (!validate(p).empty()) continue;
        return p;
    }
    throw SamplingExhausted("sample_tratnik: redraw cap reached");
}

GriffithsParams sample_griffiths(int N, Rng& rng, int bound) {
    for (int tries = 0; tries < kSampleRedrawCap; ++tries) {
        GriffithsParams g{TratnikParams::make(sample_root(rng, bound), sample_root(rng, bound),
                                              sample_root(rng, bound), sample_root(rng, bound),
                                              sample_root(rng, bound), N)};
        if (!safe_for_checks(g.base)) continue;
        if (!validate(g).empty()) continue;
        return g;
    }
    throw SamplingExhausted("sample_griffiths: redraw cap reached");
}

}  // namespace qracah

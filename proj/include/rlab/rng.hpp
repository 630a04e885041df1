#pragma once

#include <cstdint>
#include <vector>

namespace rlab {

// Counter-based deterministic generator (SplitMix64).
//
// Output i of stream s under seed x is mix(x ^ mix(s)) + (i+1)*GAMMA pushed
// through the finalizer, where mix is the SplitMix64 finalizer with constants
//   GAMMA = 0x9E3779B97F4A7C15, M1 = 0xBF58476D1CE4E5B9, M2 = 0x94D049BB133111EB
// and shifts 30/27/31. Pure 64-bit integer arithmetic, so identical
// (seed, stream) pairs reproduce identical output on every platform.
class Rng {
public:
    static constexpr uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

    explicit Rng(uint64_t seed, uint64_t stream = 0)
        : state_(mix(seed ^ mix(stream * kGamma + 1))) {}

    static uint64_t mix(uint64_t z) {
        z += kGamma;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    uint64_t next_u64() {
        state_ += kGamma;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Unbiased integer in [0, bound) via rejection.
    uint64_t next_below(uint64_t bound) {
        // bound == 0 is a caller bug; keep the check cheap.
        uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    int next_int(int lo, int hi) { // inclusive range
        return lo + static_cast<int>(next_below(static_cast<uint64_t>(hi - lo + 1)));
    }

    // Uniform double in [0,1) with 53 random bits.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool next_bernoulli(double prob) {
        if (prob <= 0.0) return false;
        if (prob >= 1.0) return true;
        return next_unit() < prob;
    }

    // Derive an independent seed for a sub-stream (trial fan-out).
    uint64_t derive(uint64_t stream) const {
        return mix(state_ ^ mix(stream * kGamma + 0x632BE59BD9B4E019ULL));
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = next_below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    uint64_t state_;
};

} // namespace rlab

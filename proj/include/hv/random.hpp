#pragma once

// Counter-based splitmix generator.  Streams are derived by label, so the
// value drawn for a given (seed, label, index) never depends on call order.

#include <cstdint>
#include <string_view>

#include "hv/scalar.hpp"

namespace hv {

class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : key_(mix(seed ^ 0x243F6A8885A308D3ULL)) {}

    CounterRng split(std::string_view label) const {
        std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
        for (char ch : label) {
            h ^= static_cast<unsigned char>(ch);
            h *= 0x100000001b3ULL;
        }
        return CounterRng(key_, mix(h));
    }
    CounterRng split(std::uint64_t index) const { return CounterRng(key_, mix(index + 0x9E3779B97F4A7C15ULL)); }

    std::uint64_t next() { return mix(key_ + (counter_++) * 0x9E3779B97F4A7C15ULL); }

    // uniform in [lo, hi]
    long uniform(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }
    // num/den with num in [-h, h], den in [1, h]
    mpq_class rational(long height) {
        mpq_class q(uniform(-height, height), uniform(1, height));
        q.canonicalize();
        return q;
    }
    mpq_class nonzero_rational(long height) {
        for (;;) {
            mpq_class q = rational(height);
            if (sgn(q) != 0) return q;
        }
    }
    ExactScalar exact(long height) { return ExactScalar(rational(height)); }
    ExactScalar gaussian(long height) { return ExactScalar(rational(height), rational(height)); }

private:
    CounterRng(std::uint64_t key, std::uint64_t stream) : key_(mix(key ^ stream)) {}
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

inline constexpr long kSampleHeight = 1000000;

}  // namespace hv

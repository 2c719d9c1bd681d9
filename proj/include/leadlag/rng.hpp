#pragma once

#include <cstdint>

namespace leadlag {

// Deterministic random numbers, version "llrng/1".
//
// Generator: the splitmix64 finalizer applied in counter mode,
//   out_n = mix64(key + n * 0x9E3779B97F4A7C15),  n = 1, 2, ...
// Sub-streams are derived by key mixing (see stream_seed). Gaussians come
// from the inverse normal CDF (Wichura's AS241, double precision) applied
// to the centered 53-bit uniform. Identical seeds give bit-identical
// output for a fixed toolchain; the central branch of AS241 is pure
// arithmetic, only the tail branch (|u - 1/2| > 0.425) touches libm's log.
// Changing any of this breaks stored results and requires a version bump.

constexpr std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

// Independent sub-stream key for (seed, stream). Also the splittable
// per-run construction: run i of a Monte Carlo uses stream_seed(master, i).
constexpr std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
    return mix64(seed ^ mix64(stream * 0xD1342543DE82EF95ull + 0x632BE59BD9B4E019ull));
}

double normal_inv_cdf(double p);  // AS241 PPND16, p in (0, 1)

class CounterRng {
public:
    explicit CounterRng(std::uint64_t key) : key_(key) {}

    std::uint64_t next_u64() { return mix64(key_ + (++n_) * 0x9E3779B97F4A7C15ull); }

    // Uniform on (0, 1), never 0 or 1: center of a 53-bit cell.
    double next_unit() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    double next_gaussian() { return normal_inv_cdf(next_unit()); }

    // Uniform integer in [0, n), n >= 1. Modulo reduction: the bias is
    // below 2^-51 for every n used here and the result is portable.
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

private:
    std::uint64_t key_;
    std::uint64_t n_ = 0;
};

}  // namespace leadlag

#pragma once

#include <cstdint>
#include <random>

namespace bsc {

/// SplitMix64 finalizer; used to expand user seeds and to derive stream seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Seeded generator used by every randomized routine in the library.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard, seeded with splitmix64(seed). Bounded integers are drawn by
/// rejection sampling on the raw 64-bit output and reals from the top 53 bits,
/// so results are bit-identical across platforms and standard libraries.
///
/// Independent streams (one per Monte Carlo trial, say) come from
/// Rng::stream(seed, index), which seeds a fresh engine with
/// splitmix64(seed + index * 0x9E3779B97F4A7C15). A trial's draws therefore
/// depend only on (seed, index), never on execution order.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    static Rng stream(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n);

    /// Uniform real in [0, 1).
    double uniform();

private:
    std::mt19937_64 engine_;
};

}  // namespace bsc

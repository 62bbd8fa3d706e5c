#pragma once

#include <concepts>
#include <cstdint>
#include <random>

namespace asd {

/// Deterministic, seedable uniform source.
///
/// The engine is std::mt19937_64, whose algorithm the standard pins down,
/// so a given seed produces the same stream on every platform. Each draw
/// takes the high 53 bits of one engine step and maps them onto the open
/// interval (0,1): a raw zero is bumped to the smallest grid value 2^-53,
/// and the largest raw value lands at 1 - 2^-53, so no draw is ever
/// exactly 0 or 1.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    /// One uniform draw on (0,1). Consumes exactly one engine step.
    double next_unit() {
        ++draws_;
        const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return u == 0.0 ? 0x1.0p-53 : u;
    }

    std::uint64_t seed() const { return seed_; }

    /// Number of uniform draws consumed so far.
    std::uint64_t draws_consumed() const { return draws_; }

    /// Independent stream for parallel task `task_index`. Derivation is a
    /// pure function of (seed, task_index), so results do not depend on
    /// scheduling.
    SeededRng substream(std::uint64_t task_index) const {
        return SeededRng(mix64(seed_ ^ mix64(task_index + 1)));
    }

private:
    static std::uint64_t mix64(std::uint64_t z) {
        // splitmix64 finalizer
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t draws_ = 0;
    std::mt19937_64 engine_;
};

/// Anything that yields uniform draws on (0,1). Lets tests script exact
/// draw sequences through the sampling kernels.
template <typename R>
concept UniformSource = requires(R& r) {
    { r.next_unit() } -> std::convertible_to<double>;
};

} // namespace asd

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <string_view>

namespace aj {

namespace detail {

// SplitMix64 finalizer (Steele, Lea, Flood 2014).
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t golden = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace detail

// Deterministic 64-bit generator (SplitMix64 stream). All randomness in the
// library goes through this type so that runs are reproducible bit-for-bit
// across platforms; no std::*_distribution is used anywhere.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += detail::golden;
        return detail::mix64(state_);
    }

    // [0, 1), 53-bit resolution
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // (0, 1]; safe as a log() argument
    double uniform_pos() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // [0, bound) via 128-bit multiply-shift
    std::uint64_t uniform_int(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

    // Standard normal, Box-Muller. The sine mate is discarded; use
    // complex_gaussian when both quadratures are needed.
    double gaussian() {
        double r = std::sqrt(-2.0 * std::log(uniform_pos()));
        return r * std::cos(2.0 * std::numbers::pi * uniform());
    }

    // Circularly-symmetric complex Gaussian with E|z|^2 = variance.
    std::complex<double> complex_gaussian(double variance) {
        double r = std::sqrt(-std::log(uniform_pos()) * variance);
        double phi = 2.0 * std::numbers::pi * uniform();
        return {r * std::cos(phi), r * std::sin(phi)};
    }

    // Index drawn from an (unnormalized tolerated) pdf by cumulative scan.
    int categorical(std::span<const double> pdf) {
        double u = uniform();
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < pdf.size(); ++i) {
            acc += pdf[i];
            if (u < acc) return static_cast<int>(i);
        }
        return static_cast<int>(pdf.size()) - 1;
    }

  private:
    std::uint64_t state_;
};

// Named substream of a master seed. Components draw from disjoint streams
// ("chain", "noise", "snr", "exploration", "replay", "strategy", ...) so any
// one of them can be reproduced in isolation.
inline std::uint64_t substream_seed(std::uint64_t master, std::string_view name) {
    return detail::mix64(master ^ detail::fnv1a(name));
}

// Counter-based per-slot seed: slot t of a stream is addressable without
// generating slots 0..t-1, which is what makes evaluation loops parallel.
inline std::uint64_t slot_seed(std::uint64_t stream, std::uint64_t slot) {
    return detail::mix64(stream ^ ((slot + 1) * detail::golden));
}

inline Rng slot_rng(std::uint64_t stream, std::uint64_t slot) {
    return Rng(slot_seed(stream, slot));
}

} // namespace aj

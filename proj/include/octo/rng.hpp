#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <random>
#include <string_view>

namespace octo {

// SplitMix64 finalizer. Used to condition raw seeds and to derive substream
// seeds; guarantees that nearby seeds (0, 1, 2, ...) map to well-separated
// engine states.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    return splitmix64(a ^ splitmix64(b));
}

// Fold a list of stream tags into one substream seed. Deterministic and
// order-sensitive: substream_seed({s, 1, 2}) != substream_seed({s, 2, 1}).
constexpr std::uint64_t substream_seed(std::initializer_list<std::uint64_t> tags) {
    std::uint64_t s = 0x6f63746f70757321ULL;
    for (std::uint64_t t : tags) s = mix_seed(s, t);
    return s;
}

constexpr std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : text) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Deterministic random source. All floating-point draws are produced from the
// raw 64-bit stream with fixed arithmetic (no std::*_distribution), so replays
// are bit-identical across standard library implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

    // uniform integer in [0, n); n must be > 0
    std::size_t index(std::size_t n) {
        return static_cast<std::size_t>(uniform() * static_cast<double>(n));
    }

    bool coin(double p) { return uniform() < p; }

    // Standard normal via Box-Muller (cosine branch only, so one draw
    // consumes exactly two uniforms and substream replay stays simple).
    double normal() {
        const double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

  private:
    std::mt19937_64 engine_;
};

// One symmetric alpha-stable step via Mantegna's algorithm. `beta` is the tail
// index in (1, 2]; consumes two normal draws (four uniforms).
inline double levy_step(Rng& rng, double beta) {
    const double num = std::tgamma(1.0 + beta) * std::sin(std::numbers::pi * beta / 2.0);
    const double den = std::tgamma((1.0 + beta) / 2.0) * beta * std::pow(2.0, (beta - 1.0) / 2.0);
    const double sigma_u = std::pow(num / den, 1.0 / beta);
    const double u = rng.normal(0.0, sigma_u);
    const double v = rng.normal();
    return u / std::pow(std::fabs(v), 1.0 / beta);
}

}  // namespace octo

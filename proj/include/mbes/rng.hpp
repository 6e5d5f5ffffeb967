#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace mbes {

// Deterministic, platform-independent PRNG (splitmix64). Every random draw in
// the project goes through this type so that identical seeds yield identical
// outputs regardless of standard-library implementation.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {
        // warm up so that small seeds diverge immediately
        next_u64();
        next_u64();
    }

    // Substream derived from (seed, name, index); independent draws for
    // parallel work items (e.g. one stream per ping).
    static Rng stream(std::uint64_t seed, std::string_view name, std::uint64_t index = 0) {
        std::uint64_t h = 1469598103934665603ull; // FNV-1a
        for (char c : name) {
            h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(c));
            h *= 1099511628211ull;
        }
        std::uint64_t s = seed;
        s ^= h + 0x9e3779b97f4a7c15ull + (s << 6) + (s >> 2);
        s ^= (index + 1) * 0xbf58476d1ce4e5b9ull;
        return Rng(s);
    }

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    // uniform integer in [0, n)
    std::uint64_t uniform_index(std::uint64_t n) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    // Box-Muller; no cached spare so substream state stays call-count linear
    double normal(double mu, double sigma) {
        double u1 = 1.0 - uniform01(); // (0, 1]
        double u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        return mu + sigma * r * std::cos(6.283185307179586476925286766559 * u2);
    }

    // log-uniform magnitude over [lo, hi], lo > 0
    double log_uniform(double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

    bool coin() { return (next_u64() & 1ull) != 0; }

  private:
    std::uint64_t state_;
};

} // namespace mbes

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace tunekit {

// Deterministic RNG used throughout. mt19937_64 gives a standardized
// stream; the distributions below are hand-rolled so results do not
// depend on the standard library's implementation-defined adaptors.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(mix(seed)) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1).
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Uniform integer in [0, n). n must be > 0.
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    bool bernoulli(double p) { return uniform01() < p; }

    // Box-Muller, no cached spare: two uniforms per draw.
    double normal() {
        double u1 = 1.0 - uniform01();
        double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[below(i)]);
        }
    }

    std::vector<std::uint32_t> permutation(std::uint32_t n) {
        std::vector<std::uint32_t> p(n);
        for (std::uint32_t i = 0; i < n; ++i) p[i] = i;
        shuffle(p);
        return p;
    }

    // k distinct values from [0, n), k <= n, in random order.
    std::vector<std::uint32_t> sample_distinct(std::uint32_t n, std::uint32_t k) {
        std::vector<std::uint32_t> p = permutation(n);
        p.resize(k);
        return p;
    }

    // Independent stream derived from a seed and a tag; used to decorrelate
    // e.g. the stochastic draw stream from the algorithm stream.
    static Rng stream(std::uint64_t seed, std::uint64_t tag) {
        return Rng(mix(seed) ^ mix(tag * 0x9e3779b97f4a7c15ULL + 1));
    }

private:
    static std::uint64_t mix(std::uint64_t x) {
        // splitmix64 finalizer; spreads small/sequential seeds.
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::mt19937_64 engine_;
};

}  // namespace tunekit

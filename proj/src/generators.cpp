#include "tunekit/generators.hpp"

#include <cmath>

#include "tunekit/errors.hpp"

namespace tunekit {

namespace {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Cheap per-entry stream: uniform in [0,1) as a pure function of
// (seed, rank, slot). Keeps generation byte-identical and allocation-free.
double hash_uniform(std::uint64_t seed, std::uint64_t rank, std::uint64_t slot) {
    std::uint64_t h = mix64(seed ^ mix64(rank * 0x2545f4914f6cdd1dULL + slot));
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

}  // namespace

SearchSpaceCache generate_nk_landscape(int n, int k, std::uint64_t seed) {
    if (n < 1 || n > 24)
        throw InvalidArgument("nk landscape: n must be in [1, 24], got " +
                              std::to_string(n));
    if (k < 0 || k >= n)
        throw InvalidArgument("nk landscape: k must satisfy 0 <= k < n, got k=" +
                              std::to_string(k));

    std::vector<Parameter> params(n);
    for (int i = 0; i < n; ++i) {
        params[i].name = "b" + std::to_string(i);
        params[i].values = {std::int64_t(0), std::int64_t(1)};
    }
    ParameterSpace space(std::move(params));

    Rng rng(seed);
    // Component i reads bit i plus k other fixed positions.
    std::vector<std::vector<int>> links(n);
    for (int i = 0; i < n; ++i) {
        auto pool = rng.permutation(n);
        for (auto p : pool) {
            if (static_cast<int>(p) == i) continue;
            links[i].push_back(static_cast<int>(p));
            if (static_cast<int>(links[i].size()) == k) break;
        }
    }
    const std::size_t table_size = std::size_t(1) << (k + 1);
    std::vector<std::vector<double>> tables(n);
    for (int i = 0; i < n; ++i) {
        tables[i].resize(table_size);
        for (auto& v : tables[i]) v = rng.uniform01();
    }

    CacheMetadata meta;
    meta.kernel = "nk-n" + std::to_string(n) + "-k" + std::to_string(k);
    meta.device = "synthetic";
    SearchSpaceCache cache(std::move(space), std::move(meta));

    const std::uint64_t size = std::uint64_t(1) << n;
    for (std::uint64_t rank = 0; rank < size; ++rank) {
        // dimension i is the (n-1-i)-th bit of the lexicographic rank
        auto bit = [&](int i) { return (rank >> (n - 1 - i)) & 1u; };
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            std::size_t key = bit(i);
            for (int j : links[i]) key = (key << 1) | bit(j);
            sum += tables[i][key];
        }
        cache.set_ok_mean(rank, sum / n);
    }
    cache.finalize(/*require_complete=*/true);
    return cache;
}

SyntheticProfile synthetic_profile(const std::string& name) {
    if (name == "smooth") return {0.0, 0.01, 0.02};
    if (name == "ridged") return {0.6, 0.02, 0.02};
    if (name == "rugged") return {0.3, 0.08, 0.02};
    throw InvalidArgument("unknown synthetic profile: " + name +
                          " (expected smooth, ridged or rugged)");
}

SearchSpaceCache generate_synthetic_kernel_space(const ParameterSpace& space,
                                                 double fail_fraction,
                                                 const SyntheticProfile& profile,
                                                 std::uint64_t seed) {
    if (fail_fraction < 0.0 || fail_fraction >= 1.0)
        throw InvalidArgument("fail_fraction must be in [0, 1)");

    const std::size_t n = space.dims();
    Rng rng(seed);
    const double scale = rng.uniform(0.5, 5.0);
    std::vector<double> weight(n), center(n);
    for (std::size_t d = 0; d < n; ++d) {
        weight[d] = rng.uniform(0.5, 2.0);
        center[d] = rng.uniform01();
    }
    std::vector<double> ridge_a(n), ridge_phase(n);
    for (std::size_t d = 0; d < n; ++d) {
        ridge_a[d] = rng.uniform(1.0, 3.0);
        ridge_phase[d] = rng.uniform(0.0, 3.141592653589793);
    }

    CacheMetadata meta;
    meta.kernel = "synthetic";
    meta.device = "profile";
    SearchSpaceCache cache(space, std::move(meta));

    std::vector<double> u(n);
    std::uint64_t rank = 0;
    for (const auto& config : space) {
        if (hash_uniform(seed, rank, 0) < fail_fraction) {
            cache.set_failed(rank);
            ++rank;
            continue;
        }
        for (std::size_t d = 0; d < n; ++d)
            u[d] = (config[d] + 0.5) / space.list_size(d);
        double f = 1.0;
        for (std::size_t d = 0; d < n; ++d)
            f += weight[d] * (u[d] - center[d]) * (u[d] - center[d]);
        for (std::size_t d = 0; d + 1 < n; ++d) {
            const double s = std::sin(3.141592653589793 *
                                      (ridge_a[d] * u[d] - ridge_a[d + 1] * u[d + 1] +
                                       ridge_phase[d]));
            f += profile.ridge_strength * s * s;
        }
        f += profile.noise * hash_uniform(seed, rank, 1);
        f *= scale;

        std::vector<double> times(32);
        for (int s = 0; s < 32; ++s)
            times[s] = f * (1.0 + profile.jitter * (hash_uniform(seed, rank, 2 + s) - 0.5));
        cache.set_ok(rank, std::move(times));
        ++rank;
    }
    cache.finalize(/*require_complete=*/true);
    return cache;
}

}  // namespace tunekit

#pragma once

#include <cstdint>
#include <string>

#include "tunekit/cache.hpp"

namespace tunekit {

// Random NK landscape over N binary parameters. The fitness of a bitstring
// is the mean of N component tables; component i reads bit i plus K other
// (seeded, fixed) bit positions from a table of 2^(K+1) uniform(0,1) values.
// Domain: 0 <= K < N <= 24. All entries ok, single sample per entry.
SearchSpaceCache generate_nk_landscape(int n, int k, std::uint64_t seed);

// Landscape shape knobs for synthetic kernel-like caches.
struct SyntheticProfile {
    double ridge_strength = 0.3;  // cross-dimension coupling
    double noise = 0.05;          // relative per-point noise; controls minima count
    double jitter = 0.02;         // spread of the 32 per-point samples
};
SyntheticProfile synthetic_profile(const std::string& name);  // smooth|ridged|rugged

// Complete cache over the given space. Approximately fail_fraction of the
// entries fail (seeded Bernoulli); ok entries get smooth-plus-noise runtimes
// with 32 jittered samples each. Deterministic per seed.
SearchSpaceCache generate_synthetic_kernel_space(const ParameterSpace& space,
                                                 double fail_fraction,
                                                 const SyntheticProfile& profile,
                                                 std::uint64_t seed);

}  // namespace tunekit

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tunekit/rng.hpp"
#include "tunekit/space.hpp"

namespace tunekit {

// Fitness assigned to configurations that failed to compile or run.
// A large finite constant keeps means and orderings well-defined.
inline constexpr double kFailFitness = 1.0e10;

struct CacheMetadata {
    std::string kernel;
    std::string device;
    std::string units = "ms";
};

// Precomputed fitness table over a full (or explicitly partial) search
// space. Entries are addressed by configuration rank. Immutable after
// construction / load; shareable across threads.
class SearchSpaceCache {
public:
    SearchSpaceCache() = default;
    SearchSpaceCache(ParameterSpace space, CacheMetadata meta);

    // Build API (used by generators and importers).
    void set_ok(std::uint64_t rank, std::vector<double> times);
    void set_ok_mean(std::uint64_t rank, double mean);  // single-sample entry
    void set_failed(std::uint64_t rank);
    void finalize(bool require_complete);

    const ParameterSpace& space() const { return space_; }
    const CacheMetadata& metadata() const { return meta_; }
    CacheMetadata& metadata() { return meta_; }
    std::uint64_t size() const { return space_.size(); }
    bool complete() const { return complete_; }
    bool present(std::uint64_t rank) const {
        return present_.empty() || present_[rank] != 0;
    }

    bool ok(std::uint64_t rank) const { return ok_[rank] != 0; }
    // Deterministic fitness: stored mean, or kFailFitness for failed entries.
    double mean(std::uint64_t rank) const { return mean_[rank]; }
    // Stored samples; empty means the entry has the single sample {mean}.
    const std::vector<double>& raw_times(std::uint64_t rank) const;
    std::size_t sample_count(std::uint64_t rank) const;
    // Uniform draw (with replacement) from the entry's samples.
    double draw(std::uint64_t rank, Rng& rng) const;

    std::uint64_t ok_count() const { return ok_count_; }
    std::uint64_t fail_count() const { return present_count_ - ok_count_; }
    std::uint64_t present_count() const { return present_count_; }

    // Minimum mean over ok entries. Throws NoFeasiblePoint if none.
    double optimum() const;
    std::uint64_t optimum_rank() const;

private:
    void ensure_slot(std::uint64_t rank);

    ParameterSpace space_;
    CacheMetadata meta_;
    std::vector<double> mean_;
    std::vector<std::vector<double>> times_;  // entry may be empty: {mean}
    std::vector<std::uint8_t> ok_;
    std::vector<std::uint8_t> present_;  // empty once finalized complete
    bool complete_ = false;
    bool finalized_ = false;
    std::uint64_t present_count_ = 0;
    std::uint64_t ok_count_ = 0;
    double optimum_ = kFailFitness;
    std::uint64_t optimum_rank_ = 0;
    bool has_optimum_ = false;
};

// f_opt / f for a fitness value from this cache. f must not beat f_opt.
double fraction_of_optimum(const SearchSpaceCache& cache, double f);

}  // namespace tunekit

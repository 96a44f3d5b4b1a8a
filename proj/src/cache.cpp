#include "tunekit/cache.hpp"

#include <numeric>

#include "tunekit/errors.hpp"

namespace tunekit {

SearchSpaceCache::SearchSpaceCache(ParameterSpace space, CacheMetadata meta)
    : space_(std::move(space)), meta_(std::move(meta)) {
    const std::uint64_t n = space_.size();
    mean_.assign(n, kFailFitness);
    times_.assign(n, {});
    ok_.assign(n, 0);
    present_.assign(n, 0);
}

void SearchSpaceCache::ensure_slot(std::uint64_t rank) {
    if (finalized_) throw Error("cache is finalized");
    if (rank >= mean_.size()) throw InvalidArgument("cache rank out of range");
    if (!present_[rank]) {
        present_[rank] = 1;
        ++present_count_;
    } else if (ok_[rank]) {
        --ok_count_;
        ok_[rank] = 0;
    }
}

void SearchSpaceCache::set_ok(std::uint64_t rank, std::vector<double> times) {
    if (times.empty()) throw InvalidArgument("ok entry needs at least one sample");
    ensure_slot(rank);
    const double mean =
        std::accumulate(times.begin(), times.end(), 0.0) / times.size();
    mean_[rank] = mean;
    times_[rank] = std::move(times);
    ok_[rank] = 1;
    ++ok_count_;
}

void SearchSpaceCache::set_ok_mean(std::uint64_t rank, double mean) {
    ensure_slot(rank);
    mean_[rank] = mean;
    times_[rank].clear();
    ok_[rank] = 1;
    ++ok_count_;
}

void SearchSpaceCache::set_failed(std::uint64_t rank) {
    ensure_slot(rank);
    mean_[rank] = kFailFitness;
    times_[rank].clear();
}

void SearchSpaceCache::finalize(bool require_complete) {
    if (finalized_) return;
    complete_ = present_count_ == space_.size();
    if (require_complete && !complete_)
        throw Error("cache covers " + std::to_string(present_count_) + " of " +
                    std::to_string(space_.size()) + " configurations");
    if (complete_) present_.clear();
    has_optimum_ = false;
    for (std::uint64_t r = 0; r < mean_.size(); ++r) {
        if (!present(r) || !ok_[r]) continue;
        if (!has_optimum_ || mean_[r] < optimum_) {
            optimum_ = mean_[r];
            optimum_rank_ = r;
            has_optimum_ = true;
        }
    }
    finalized_ = true;
}

const std::vector<double>& SearchSpaceCache::raw_times(std::uint64_t rank) const {
    return times_[rank];
}

std::size_t SearchSpaceCache::sample_count(std::uint64_t rank) const {
    return times_[rank].empty() ? 1 : times_[rank].size();
}

double SearchSpaceCache::draw(std::uint64_t rank, Rng& rng) const {
    if (!ok_[rank]) return kFailFitness;
    const auto& t = times_[rank];
    if (t.empty()) return mean_[rank];
    return t[rng.below(t.size())];
}

double SearchSpaceCache::optimum() const {
    if (!has_optimum_)
        throw NoFeasiblePoint("cache '" + meta_.kernel + "' has no ok entry");
    return optimum_;
}

std::uint64_t SearchSpaceCache::optimum_rank() const {
    optimum();
    return optimum_rank_;
}

double fraction_of_optimum(const SearchSpaceCache& cache, double f) {
    const double f_opt = cache.optimum();
    if (f < f_opt)
        throw InvalidArgument("fitness " + std::to_string(f) +
                              " is below the cache optimum " + std::to_string(f_opt));
    return f_opt / f;
}

}  // namespace tunekit

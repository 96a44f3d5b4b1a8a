#pragma once

#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

#include "tunekit/value.hpp"

namespace tunekit {

struct Parameter {
    std::string name;
    std::vector<Value> values;  // non-empty, duplicate-free, numeric lists ascending
};

enum class NeighbourhoodKind { Hamming, Adjacent };

NeighbourhoodKind neighbourhood_from_string(const std::string& s);
std::string to_string(NeighbourhoodKind kind);

// A point in the space: one index per parameter into its value list.
using Configuration = std::vector<std::int32_t>;

// Finite Cartesian search space over named parameters. Immutable after
// construction; configurations are addressed either as index vectors or by
// their lexicographic rank (dimension 0 most significant).
class ParameterSpace {
public:
    ParameterSpace() = default;
    explicit ParameterSpace(std::vector<Parameter> params);

    std::size_t dims() const { return params_.size(); }
    std::uint64_t size() const { return size_; }
    const Parameter& param(std::size_t i) const { return params_[i]; }
    const std::vector<Parameter>& params() const { return params_; }
    std::int32_t list_size(std::size_t i) const {
        return static_cast<std::int32_t>(params_[i].values.size());
    }

    bool valid(const Configuration& x) const;
    void require_valid(const Configuration& x) const;

    std::uint64_t rank_of(const Configuration& x) const;
    Configuration config_at(std::uint64_t rank) const;
    std::uint64_t stride(std::size_t i) const { return strides_[i]; }

    std::vector<Value> to_values(const Configuration& x) const;
    Configuration from_values(const std::vector<Value>& values) const;

    // Comma-joined value key, e.g. "64,16,1,1,0,0"; the cache-file entry key.
    std::string key_of(const Configuration& x) const;
    Configuration config_from_key(const std::string& key) const;

    // All points differing from x in exactly one dimension (Hamming), or only
    // in a list-adjacent value (Adjacent). Ascending dimension, then ascending
    // index; x itself never included.
    std::vector<Configuration> neighbours(const Configuration& x,
                                          NeighbourhoodKind kind) const;
    // Rank-based variant for hot paths; appends into out (cleared first).
    void neighbour_ranks(std::uint64_t rank, NeighbourhoodKind kind,
                         std::vector<std::uint64_t>& out) const;
    std::size_t max_neighbours(NeighbourhoodKind kind) const;

    // One-hot segment per parameter; segment i has exactly one set bit at
    // position x[i].
    std::string bitstring_encode(const Configuration& x) const;
    Configuration bitstring_decode(const std::string& bits) const;

    static ParameterSpace from_json(const Json& j);
    Json to_json() const;

    // Iteration over every configuration in rank (lexicographic) order.
    class const_iterator {
    public:
        using value_type = Configuration;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        const_iterator(const ParameterSpace* space, std::uint64_t rank)
            : space_(space), rank_(rank) {
            if (space_ && rank_ < space_->size()) current_ = space_->config_at(rank_);
        }
        const Configuration& operator*() const { return current_; }
        const_iterator& operator++() {
            ++rank_;
            if (rank_ < space_->size()) advance();
            return *this;
        }
        bool operator==(const const_iterator& o) const { return rank_ == o.rank_; }
        bool operator!=(const const_iterator& o) const { return rank_ != o.rank_; }

    private:
        void advance() {
            // odometer increment, least-significant dimension last
            for (std::size_t i = current_.size(); i-- > 0;) {
                if (++current_[i] < space_->list_size(i)) return;
                current_[i] = 0;
            }
        }
        const ParameterSpace* space_;
        std::uint64_t rank_;
        Configuration current_;
    };

    const_iterator begin() const { return const_iterator(this, 0); }
    const_iterator end() const { return const_iterator(this, size_); }

private:
    std::vector<Parameter> params_;
    std::vector<std::uint64_t> strides_;
    std::uint64_t size_ = 1;
};

ParameterSpace load_space(const std::string& path);
void save_space(const ParameterSpace& space, const std::string& path);

Configuration random_configuration(const ParameterSpace& space, class Rng& rng);

}  // namespace tunekit

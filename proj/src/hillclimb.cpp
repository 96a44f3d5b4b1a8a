#include "tunekit/hillclimb.hpp"

#include "tunekit/errors.hpp"

namespace tunekit {

ClimbVariant climb_variant_from_string(const std::string& s) {
    if (s == "none" || s == "None") return ClimbVariant::None;
    if (s == "random-first" || s == "RandomFirst") return ClimbVariant::RandomFirst;
    if (s == "best" || s == "BestImprovement") return ClimbVariant::BestImprovement;
    throw InvalidArgument("unknown hill climber: " + s +
                          " (expected none, random-first or best)");
}

namespace {

// A scan slot is (dimension, alternative). For Hamming the alternative is
// the j-th index skipping the current one; for Adjacent it is below/above,
// invalid at the list ends. The slot universe is position-independent, so
// a scan order can survive moves.
struct Slot {
    std::uint32_t dim;
    std::int32_t alt;
};

std::vector<Slot> build_slots(const ParameterSpace& space, NeighbourhoodKind kind) {
    std::vector<Slot> slots;
    for (std::uint32_t i = 0; i < space.dims(); ++i) {
        const std::int32_t m = space.list_size(i);
        if (kind == NeighbourhoodKind::Hamming) {
            for (std::int32_t a = 0; a + 1 < m; ++a) slots.push_back({i, a});
        } else if (m > 1) {
            slots.push_back({i, -1});
            slots.push_back({i, +1});
        }
    }
    return slots;
}

// Index this slot selects at the current point, or -1 when invalid.
std::int32_t resolve_slot(const Slot& s, std::int32_t current, std::int32_t m,
                          NeighbourhoodKind kind) {
    if (kind == NeighbourhoodKind::Hamming) return s.alt < current ? s.alt : s.alt + 1;
    const std::int32_t j = current + s.alt;
    return (j < 0 || j >= m) ? -1 : j;
}

ClimbResult climb_random_first(Evaluator& ev, Rng& rng, std::uint64_t start,
                               double f_start, NeighbourhoodKind kind,
                               bool restart_scan) {
    const ParameterSpace& space = ev.space();
    std::vector<Slot> slots = build_slots(space, kind);
    if (slots.empty()) return {start, f_start};

    Configuration x = space.config_at(start);
    std::uint64_t rank = start;
    double f = f_start;
    auto order = rng.permutation(static_cast<std::uint32_t>(slots.size()));
    std::size_t pos = 0;
    std::size_t since_improvement = 0;

    while (since_improvement < slots.size()) {
        const Slot& s = slots[order[pos % order.size()]];
        ++pos;
        const std::int32_t j = resolve_slot(s, x[s.dim], space.list_size(s.dim), kind);
        if (j < 0) {
            ++since_improvement;
            continue;
        }
        const std::uint64_t nb =
            rank + (static_cast<std::int64_t>(j) - x[s.dim]) * space.stride(s.dim);
        const double fn = ev.evaluate_rank(nb);
        if (fn < f) {
            x[s.dim] = j;
            rank = nb;
            f = fn;
            since_improvement = 0;
            if (restart_scan) {
                order = rng.permutation(static_cast<std::uint32_t>(slots.size()));
                pos = 0;
            }
        } else {
            ++since_improvement;
        }
    }
    return {rank, f};
}

ClimbResult climb_best(Evaluator& ev, std::uint64_t start, double f_start,
                       NeighbourhoodKind kind) {
    const ParameterSpace& space = ev.space();
    std::uint64_t rank = start;
    double f = f_start;
    std::vector<std::uint64_t> nbrs;
    while (true) {
        space.neighbour_ranks(rank, kind, nbrs);
        std::uint64_t best = rank;
        double fb = f;
        for (std::uint64_t nb : nbrs) {
            const double fn = ev.evaluate_rank(nb);
            if (fn < fb) {  // strict: ties keep the earlier scan index
                fb = fn;
                best = nb;
            }
        }
        if (best == rank) return {rank, f};
        rank = best;
        f = fb;
    }
}

}  // namespace

ClimbResult hill_climb(Evaluator& ev, Rng& rng, std::uint64_t start, double f_start,
                       ClimbVariant variant, NeighbourhoodKind kind,
                       bool restart_scan) {
    switch (variant) {
        case ClimbVariant::None:
            return {start, f_start};
        case ClimbVariant::RandomFirst:
            return climb_random_first(ev, rng, start, f_start, kind, restart_scan);
        case ClimbVariant::BestImprovement:
            return climb_best(ev, start, f_start, kind);
    }
    throw InvalidArgument("bad climb variant");
}

}  // namespace tunekit

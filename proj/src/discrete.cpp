#include <algorithm>
#include <cmath>
#include <deque>
#include <unordered_set>

#include "algorithms.hpp"
#include "tunekit/errors.hpp"
#include "tunekit/hillclimb.hpp"
#include "tunekit/operators.hpp"

namespace tunekit::detail {

namespace {

std::uint64_t random_rank(const Evaluator& ev, Rng& rng) {
    return rng.below(ev.cache().size());
}

struct Member {
    Configuration config;
    std::uint64_t rank;
    double fitness;
};

// Two distinct parent indices, uniform.
std::pair<std::size_t, std::size_t> pick_parents(std::size_t pop, Rng& rng) {
    const std::size_t a = static_cast<std::size_t>(rng.below(pop));
    std::size_t b = static_cast<std::size_t>(rng.below(pop - 1));
    if (b >= a) ++b;
    return {a, b};
}

struct SelectionSpec {
    bool rts = true;
    int tournament = 0;
};

SelectionSpec parse_selection(const std::string& s) {
    if (s == "RTS" || s == "rts") return {true, 0};
    if (s.rfind("tour", 0) == 0) {
        const int k = std::atoi(s.c_str() + 4);
        if (k >= 1) return {false, k};
    }
    throw InvalidArgument("unknown selector: " + s + " (expected RTS or tour<k>)");
}

// Restricted tournament selection: each child competes against the
// Hamming-closest of `window` uniformly drawn population members and
// replaces it only if strictly better. Window = population size.
void select_rts(std::vector<Member>& pop, const std::vector<Member>& children,
                Rng& rng) {
    for (const auto& child : children) {
        auto window = rng.sample_distinct(static_cast<std::uint32_t>(pop.size()),
                                          static_cast<std::uint32_t>(pop.size()));
        std::size_t closest = window[0];
        int best_d = hamming_distance(child.config, pop[window[0]].config);
        for (std::size_t w = 1; w < window.size(); ++w) {
            const int d = hamming_distance(child.config, pop[window[w]].config);
            if (d < best_d) {
                best_d = d;
                closest = window[w];
            }
        }
        if (child.fitness < pop[closest].fitness) pop[closest] = child;
    }
}

// Tournament over the combined parent+child pool, repeated to fill the
// next population. Entrants drawn uniformly with replacement; best fitness
// wins, ties to the earliest entrant.
void select_tournament(std::vector<Member>& pop, const std::vector<Member>& children,
                       int k, Rng& rng) {
    std::vector<const Member*> pool;
    pool.reserve(pop.size() + children.size());
    for (const auto& m : pop) pool.push_back(&m);
    for (const auto& m : children) pool.push_back(&m);
    std::vector<Member> next;
    next.reserve(pop.size());
    for (std::size_t i = 0; i < pop.size(); ++i) {
        const Member* winner = pool[rng.below(pool.size())];
        for (int e = 1; e < k; ++e) {
            const Member* entrant = pool[rng.below(pool.size())];
            if (entrant->fitness < winner->fitness) winner = entrant;
        }
        next.push_back(*winner);
    }
    pop = std::move(next);
}

}  // namespace

void run_random_sampling(const OptimizerSpec&, Evaluator& ev, Rng& rng) {
    while (true) {
        if (ev.space_exhausted()) throw BudgetExhausted{};
        const std::uint64_t r = random_rank(ev, rng);
        // deterministic mode: resample until unseen so each draw costs budget
        if (ev.seen(r)) continue;
        ev.evaluate_rank(r);
    }
}

void run_mls(const OptimizerSpec& spec, Evaluator& ev, Rng& rng,
             bool best_improvement) {
    const bool restart = best_improvement ? true : spec.hyperparams.at("restart").get<bool>();
    const auto variant =
        best_improvement ? ClimbVariant::BestImprovement : ClimbVariant::RandomFirst;
    while (true) {
        const std::uint64_t start = random_rank(ev, rng);
        const double f = ev.evaluate_rank(start);
        hill_climb(ev, rng, start, f, variant, spec.neighbourhood, restart);
    }
}

void run_ils(const OptimizerSpec& spec, Evaluator& ev, Rng& rng,
             bool best_improvement) {
    const double perturbation = spec.hyperparams.at("perturbation").get<double>();
    const int exit_after = spec.hyperparams.at("exit").get<int>();
    const bool restart = best_improvement ? true : spec.hyperparams.at("restart").get<bool>();
    const auto variant =
        best_improvement ? ClimbVariant::BestImprovement : ClimbVariant::RandomFirst;
    const ParameterSpace& space = ev.space();
    const int perturb_dims = scaled_dimension_count(perturbation, space.dims());

    auto fresh_minimum = [&]() {
        const std::uint64_t start = random_rank(ev, rng);
        const double f = ev.evaluate_rank(start);
        return hill_climb(ev, rng, start, f, variant, spec.neighbourhood, restart);
    };

    ClimbResult base = fresh_minimum();
    int no_improve = 0;
    while (true) {
        Configuration cand = space.config_at(base.rank);
        mutate_dimensions(space, cand, perturb_dims, rng);
        const std::uint64_t cr = space.rank_of(cand);
        const double fc = ev.evaluate_rank(cr);
        const ClimbResult m =
            hill_climb(ev, rng, cr, fc, variant, spec.neighbourhood, restart);
        if (m.fitness < base.fitness) {
            base = m;
            no_improve = 0;
        } else if (++no_improve >= exit_after) {
            base = fresh_minimum();
            no_improve = 0;
        }
    }
}

void run_tabu(const OptimizerSpec& spec, Evaluator& ev, Rng& rng,
              bool best_improvement) {
    const std::size_t tabu_size =
        spec.hyperparams.at("tabu_size").get<std::size_t>();
    const ParameterSpace& space = ev.space();
    const std::uint64_t space_size = ev.cache().size();

    std::deque<std::uint64_t> fifo;
    std::unordered_set<std::uint64_t> in_queue;
    auto push_tabu = [&](std::uint64_t r) {
        fifo.push_back(r);
        in_queue.insert(r);
        if (fifo.size() > tabu_size) {
            in_queue.erase(fifo.front());
            fifo.pop_front();
        }
    };

    std::uint64_t cur = random_rank(ev, rng);
    ev.evaluate_rank(cur);
    std::vector<std::uint64_t> nbrs;
    std::vector<std::uint64_t> open;
    while (true) {
        push_tabu(cur);
        space.neighbour_ranks(cur, spec.neighbourhood, nbrs);
        open.clear();
        for (std::uint64_t nb : nbrs)
            if (!in_queue.count(nb)) open.push_back(nb);

        if (open.empty()) {
            // all neighbours tabu: jump to a uniform random non-tabu point
            bool jumped = false;
            for (int attempt = 0; attempt < 256 && !jumped; ++attempt) {
                const std::uint64_t r = rng.below(space_size);
                if (!in_queue.count(r)) {
                    cur = r;
                    jumped = true;
                }
            }
            if (!jumped) {
                const std::uint64_t offset = rng.below(space_size);
                for (std::uint64_t i = 0; i < space_size && !jumped; ++i) {
                    const std::uint64_t r = (offset + i) % space_size;
                    if (!in_queue.count(r)) {
                        cur = r;
                        jumped = true;
                    }
                }
            }
            if (!jumped) return;  // every configuration is tabu
            ev.evaluate_rank(cur);
            continue;
        }

        if (best_improvement) {
            // best non-tabu neighbour, improvement or not
            std::uint64_t best = open[0];
            double fb = ev.evaluate_rank(open[0]);
            for (std::size_t i = 1; i < open.size(); ++i) {
                const double f = ev.evaluate_rank(open[i]);
                if (f < fb) {
                    fb = f;
                    best = open[i];
                }
            }
            cur = best;
        } else {
            // first non-tabu neighbour in random scan order
            cur = open[rng.below(open.size())];
            ev.evaluate_rank(cur);
        }
    }
}

void run_simulated_annealing(const OptimizerSpec& spec, Evaluator& ev, Rng& rng) {
    const double explore = spec.hyperparams.at("explore").get<double>();
    const auto climber =
        climb_variant_from_string(spec.hyperparams.at("hill_climber").get<std::string>());
    const double t0 = spec.hyperparams.at("t0").get<double>();
    const double alpha = spec.hyperparams.at("alpha").get<double>();
    const ParameterSpace& space = ev.space();
    const int mutate_count = scaled_dimension_count(explore, space.dims());

    std::uint64_t cur = random_rank(ev, rng);
    double f_cur = ev.evaluate_rank(cur);
    // acceptance deltas are normalized by the first fitness magnitude
    const double norm = std::max(std::abs(ev.trace().front().fitness), 1e-30);

    double temperature = t0;
    while (true) {
        Configuration cand = space.config_at(cur);
        mutate_dimensions(space, cand, mutate_count, rng);
        std::uint64_t cr = space.rank_of(cand);
        double fc = ev.evaluate_rank(cr);
        if (climber != ClimbVariant::None) {
            const ClimbResult res =
                hill_climb(ev, rng, cr, fc, climber, spec.neighbourhood, true);
            cr = res.rank;
            fc = res.fitness;
        }
        const double p = metropolis_accept_probability(fc / norm, f_cur / norm, temperature);
        if (p >= 1.0 || rng.bernoulli(p)) {
            cur = cr;
            f_cur = fc;
        }
        temperature *= alpha;
    }
}

void run_gls(const OptimizerSpec& spec, Evaluator& ev, Rng& rng) {
    const std::size_t pop_size = spec.hyperparams.at("population").get<std::size_t>();
    const CrossoverKind repro =
        crossover_from_string(spec.hyperparams.at("reproduction").get<std::string>());
    const SelectionSpec sel =
        parse_selection(spec.hyperparams.at("selection").get<std::string>());
    const auto climber =
        climb_variant_from_string(spec.hyperparams.at("hill_climber").get<std::string>());
    const ParameterSpace& space = ev.space();

    auto climbed_member = [&](std::uint64_t rank, double f) {
        const ClimbResult res =
            hill_climb(ev, rng, rank, f, climber, spec.neighbourhood, true);
        return Member{space.config_at(res.rank), res.rank, res.fitness};
    };

    std::vector<Member> pop;
    for (std::size_t i = 0; i < pop_size; ++i) {
        const std::uint64_t r = random_rank(ev, rng);
        pop.push_back(climbed_member(r, ev.evaluate_rank(r)));
    }

    std::vector<Member> children;
    while (true) {
        children.clear();
        for (std::size_t i = 0; i < pop_size; ++i) {
            const auto [a, b] = pick_parents(pop_size, rng);
            const Configuration child =
                crossover(pop[a].config, pop[b].config, repro, rng);
            const std::uint64_t cr = space.rank_of(child);
            children.push_back(climbed_member(cr, ev.evaluate_rank(cr)));
        }
        if (sel.rts)
            select_rts(pop, children, rng);
        else
            select_tournament(pop, children, sel.tournament, rng);
    }
}

void run_ga(const OptimizerSpec& spec, Evaluator& ev, Rng& rng) {
    const std::size_t pop_size = spec.hyperparams.at("population").get<std::size_t>();
    const double mutation = spec.hyperparams.at("mutation").get<double>();
    const CrossoverKind repro =
        crossover_from_string(spec.hyperparams.at("reproduction").get<std::string>());
    const SelectionSpec sel =
        parse_selection(spec.hyperparams.at("selection").get<std::string>());
    const ParameterSpace& space = ev.space();
    const int mutate_count =
        mutation > 0.0 ? scaled_dimension_count(mutation, space.dims()) : 0;

    std::vector<Member> pop;
    for (std::size_t i = 0; i < pop_size; ++i) {
        Configuration x = random_configuration(space, rng);
        const std::uint64_t r = space.rank_of(x);
        pop.push_back({std::move(x), r, ev.evaluate_rank(r)});
    }

    std::vector<Member> children;
    while (true) {
        children.clear();
        for (std::size_t i = 0; i < pop_size; ++i) {
            const auto [a, b] = pick_parents(pop_size, rng);
            Configuration child = crossover(pop[a].config, pop[b].config, repro, rng);
            if (mutate_count > 0) mutate_dimensions(space, child, mutate_count, rng);
            const std::uint64_t cr = space.rank_of(child);
            const double fc = ev.evaluate_rank(cr);
            children.push_back({std::move(child), cr, fc});
        }
        if (sel.rts)
            select_rts(pop, children, rng);
        else
            select_tournament(pop, children, sel.tournament, rng);
    }
}

}  // namespace tunekit::detail

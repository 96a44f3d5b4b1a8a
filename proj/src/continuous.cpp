#include "tunekit/continuous.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "algorithms.hpp"
#include "tunekit/errors.hpp"
#include "tunekit/operators.hpp"

namespace tunekit {

int snap_index(int m, double y) {
    // grid points (2j+1)/(2m); linear argmin keeps the lower index on ties
    int best = 0;
    double best_d = std::abs(1.0 / (2.0 * m) - y);
    for (int j = 1; j < m; ++j) {
        const double d = std::abs((2.0 * j + 1.0) / (2.0 * m) - y);
        if (d < best_d) {
            best_d = d;
            best = j;
        }
    }
    return best;
}

const Value& snap(const std::vector<Value>& values, double y) {
    if (values.empty()) throw InvalidArgument("snap needs a non-empty value list");
    return values[snap_index(static_cast<int>(values.size()), y)];
}

Configuration snap_config(const ParameterSpace& space, const std::vector<double>& point) {
    if (point.size() != space.dims())
        throw InvalidArgument("point dimension does not match the space");
    Configuration x(space.dims());
    for (std::size_t i = 0; i < space.dims(); ++i)
        x[i] = snap_index(space.list_size(i), point[i]);
    return x;
}

std::uint64_t snap_rank(const ParameterSpace& space, const std::vector<double>& point) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < space.dims(); ++i)
        r += static_cast<std::uint64_t>(snap_index(space.list_size(i), point[i])) *
             space.stride(i);
    return r;
}

void clamp_unit(std::vector<double>& point) {
    for (double& v : point) v = std::clamp(v, 0.0, 1.0);
}

LocalMinimizerKind resolve_minimizer(const std::string& requested) {
    if (requested == "Powell" || requested == "powell" ||
        requested == "pattern-search" || requested == "PatternSearch")
        return LocalMinimizerKind::PatternSearch;
    if (requested == "Nelder-Mead" || requested == "nelder-mead" ||
        requested == "NelderMead")
        return LocalMinimizerKind::NelderMead;
    warn("minimizer '" + requested + "' is not derivative-free here; using Nelder-Mead");
    return LocalMinimizerKind::NelderMead;
}

namespace {

double snapped_eval(Evaluator& ev, const std::vector<double>& p) {
    return ev.evaluate_rank(snap_rank(ev.space(), p));
}

MinimizeResult pattern_search(Evaluator& ev, const std::vector<double>& start) {
    const std::size_t n = start.size();
    std::vector<double> x = start;
    clamp_unit(x);
    double f = snapped_eval(ev, x);
    double step = 0.25;
    std::vector<double> y = x;
    while (step >= 1e-3) {
        double best_f = f;
        std::size_t best_dim = n;
        double best_val = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double xi = x[i];
            for (const double sgn : {+1.0, -1.0}) {
                const double v = std::clamp(xi + sgn * step, 0.0, 1.0);
                if (v == xi) continue;
                y[i] = v;
                const double fy = snapped_eval(ev, y);
                if (fy < best_f) {
                    best_f = fy;
                    best_dim = i;
                    best_val = v;
                }
            }
            y[i] = xi;
        }
        if (best_dim < n) {
            x[best_dim] = best_val;
            y[best_dim] = best_val;
            f = best_f;
        } else {
            step *= 0.5;
        }
    }
    return {x, f};
}

MinimizeResult nelder_mead(Evaluator& ev, const std::vector<double>& start) {
    const std::size_t n = start.size();
    constexpr double kAlpha = 1.0, kGamma = 2.0, kRho = 0.5, kSigma = 0.5;
    const double h = 0.15;

    std::vector<std::vector<double>> simplex;
    simplex.push_back(start);
    clamp_unit(simplex[0]);
    for (std::size_t i = 0; i < n; ++i) {
        auto v = simplex[0];
        v[i] = v[i] + h <= 1.0 ? v[i] + h : v[i] - h;
        clamp_unit(v);
        simplex.push_back(std::move(v));
    }
    std::vector<double> fs(simplex.size());
    for (std::size_t i = 0; i < simplex.size(); ++i) fs[i] = snapped_eval(ev, simplex[i]);

    std::vector<std::size_t> idx(simplex.size());
    const int max_iter = 200 + 80 * static_cast<int>(n);
    for (int iter = 0; iter < max_iter; ++iter) {
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
        const std::size_t best = idx.front(), worst = idx.back();
        const std::size_t second_worst = idx[idx.size() - 2];

        double spread = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double lo = simplex[best][i], hi = lo;
            for (const auto& v : simplex) {
                lo = std::min(lo, v[i]);
                hi = std::max(hi, v[i]);
            }
            spread = std::max(spread, hi - lo);
        }
        if (spread < 1e-4) break;

        // centroid of all vertices but the worst (n points)
        std::vector<double> centroid(n, 0.0);
        for (std::size_t k = 0; k + 1 < idx.size(); ++k)
            for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[idx[k]][i];
        for (double& c : centroid) c /= static_cast<double>(n);
        std::vector<double> reflected(n);
        for (std::size_t i = 0; i < n; ++i)
            reflected[i] = centroid[i] + kAlpha * (centroid[i] - simplex[worst][i]);
        clamp_unit(reflected);
        const double fr = snapped_eval(ev, reflected);

        if (fr < fs[best]) {
            std::vector<double> expanded(n);
            for (std::size_t i = 0; i < n; ++i)
                expanded[i] = centroid[i] + kGamma * (reflected[i] - centroid[i]);
            clamp_unit(expanded);
            const double fe = snapped_eval(ev, expanded);
            if (fe < fr) {
                simplex[worst] = std::move(expanded);
                fs[worst] = fe;
            } else {
                simplex[worst] = std::move(reflected);
                fs[worst] = fr;
            }
        } else if (fr < fs[second_worst]) {
            simplex[worst] = std::move(reflected);
            fs[worst] = fr;
        } else {
            std::vector<double> contracted(n);
            const bool outside = fr < fs[worst];
            const auto& toward = outside ? reflected : simplex[worst];
            for (std::size_t i = 0; i < n; ++i)
                contracted[i] = centroid[i] + kRho * (toward[i] - centroid[i]);
            clamp_unit(contracted);
            const double fc = snapped_eval(ev, contracted);
            if (fc < std::min(fr, fs[worst])) {
                simplex[worst] = std::move(contracted);
                fs[worst] = fc;
            } else {
                for (std::size_t k = 1; k < idx.size(); ++k) {
                    auto& v = simplex[idx[k]];
                    for (std::size_t i = 0; i < n; ++i)
                        v[i] = simplex[best][i] + kSigma * (v[i] - simplex[best][i]);
                    clamp_unit(v);
                    fs[idx[k]] = snapped_eval(ev, v);
                }
            }
        }
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < fs.size(); ++i)
        if (fs[i] < fs[best]) best = i;
    return {simplex[best], fs[best]};
}

}  // namespace

MinimizeResult local_minimize(LocalMinimizerKind kind, Evaluator& ev, Rng&,
                              const std::vector<double>& start) {
    return kind == LocalMinimizerKind::PatternSearch ? pattern_search(ev, start)
                                                     : nelder_mead(ev, start);
}

double annealing_temperature(double t0, double visit_param, std::int64_t step) {
    const double s = visit_param - 1.0;
    return t0 * (std::pow(2.0, s) - 1.0) /
           (std::pow(static_cast<double>(step) + 2.0, s) - 1.0);
}

double visiting_displacement(Rng& rng, double temperature, double qv) {
    const double factor1 = std::exp(std::log(temperature) / (qv - 1.0));
    const double factor2 = std::exp((4.0 - qv) * std::log(qv - 1.0));
    const double factor3 = std::exp((2.0 - qv) * std::log(2.0) / (qv - 1.0));
    const double factor4 = std::sqrt(3.141592653589793) * factor2 /
                           (factor3 * (3.0 - qv)) * factor1;
    const double factor5 = 1.0 / (qv - 1.0) - 0.5;
    const double d1 = 3.0 - qv;
    const double factor6 = 3.141592653589793 * (1.0 - factor5) /
                           std::sin(3.141592653589793 * (1.0 - factor5)) /
                           std::tgamma(d1);
    const double sigmax =
        std::exp(-(qv - 1.0) * std::log(factor6 / factor4) / (3.0 - qv));
    const double x = sigmax * rng.normal();
    const double y = rng.normal();
    const double den = std::exp((qv - 1.0) * std::log(std::abs(y)) / (3.0 - qv));
    return x / den;
}

namespace detail {

namespace {

std::vector<double> uniform_point(std::size_t n, Rng& rng) {
    std::vector<double> p(n);
    for (double& v : p) v = rng.uniform01();
    return p;
}

// Wrap into [0,1) the way the annealing visitor expects; keeps a tiny
// offset from the lower bound so repeated wraps cannot stick to it.
double wrap_unit(double v) {
    double b = std::fmod(v, 1.0) + 1.0;
    double w = std::fmod(b, 1.0);
    if (std::abs(w) < 1e-10) w += 1e-10;
    return w;
}

constexpr double kVisitTailLimit = 1e8;

double clipped_visit(Rng& rng, double temperature, double qv) {
    const double d = visiting_displacement(rng, temperature, qv);
    if (d > kVisitTailLimit) return kVisitTailLimit * rng.uniform01();
    if (d < -kVisitTailLimit) return -kVisitTailLimit * rng.uniform01();
    return d;
}

}  // namespace

void run_basin_hopping(const OptimizerSpec& spec, Evaluator& ev, Rng& rng) {
    const double temperature = spec.hyperparams.at("temperature").get<double>();
    const LocalMinimizerKind minimizer =
        resolve_minimizer(spec.hyperparams.at("method").get<std::string>());
    const double step = 0.1;
    const std::size_t n = ev.space().dims();

    MinimizeResult cur = local_minimize(minimizer, ev, rng, uniform_point(n, rng));
    while (true) {
        std::vector<double> cand = cur.point;
        for (double& v : cand) v += rng.uniform(-step, step);
        clamp_unit(cand);
        const MinimizeResult next = local_minimize(minimizer, ev, rng, cand);
        const double p =
            metropolis_accept_probability(next.fitness, cur.fitness, temperature);
        if (p >= 1.0 || rng.bernoulli(p)) cur = next;
    }
}

void run_dual_annealing(const OptimizerSpec& spec, Evaluator& ev, Rng& rng) {
    const LocalMinimizerKind minimizer =
        resolve_minimizer(spec.hyperparams.at("method").get<std::string>());
    const double qv = spec.hyperparams.at("visit").get<double>();
    const double qa = spec.hyperparams.at("accept").get<double>();
    const double t0 = spec.hyperparams.at("t0").get<double>();
    const double restart_ratio = 1e-5;
    const std::size_t n = ev.space().dims();

    std::vector<double> x = uniform_point(n, rng);
    double f = snapped_eval(ev, x);
    std::vector<double> best_x = x;
    double best_f = f;

    std::int64_t step = 0;
    std::vector<double> cand(n);
    while (true) {
        double temperature = annealing_temperature(t0, qv, step);
        if (temperature < t0 * restart_ratio) {
            step = 0;
            temperature = t0;
        }
        const double t_accept = temperature / static_cast<double>(step + 1);

        bool improved = false;
        for (std::size_t j = 0; j < 2 * n; ++j) {
            cand = x;
            if (j < n) {
                for (std::size_t i = 0; i < n; ++i)
                    cand[i] = wrap_unit(x[i] + clipped_visit(rng, temperature, qv));
            } else {
                const std::size_t i = j - n;
                cand[i] = wrap_unit(x[i] + clipped_visit(rng, temperature, qv));
            }
            const double fc = snapped_eval(ev, cand);
            bool accept = false;
            if (fc < f) {
                accept = true;
                if (fc < best_f) {
                    best_f = fc;
                    best_x = cand;
                    improved = true;
                }
            } else {
                // generalized acceptance controlled by qa
                const double base = 1.0 - (1.0 - qa) * (fc - f) / t_accept;
                const double p =
                    base <= 0.0 ? 0.0 : std::exp(std::log(base) / (1.0 - qa));
                accept = rng.uniform01() <= p;
            }
            if (accept) {
                x = cand;
                f = fc;
            }
        }
        if (improved) {
            const MinimizeResult res = local_minimize(minimizer, ev, rng, best_x);
            if (res.fitness < best_f) {
                best_x = res.point;
                best_f = res.fitness;
                x = res.point;
                f = res.fitness;
            }
        }
        ++step;
    }
}

void run_pso(const OptimizerSpec& spec, Evaluator& ev, Rng& rng) {
    const std::size_t particles = spec.hyperparams.at("particles").get<std::size_t>();
    const std::size_t informed =
        std::min<std::size_t>(spec.hyperparams.at("neighbours").get<std::size_t>(),
                              particles);
    const std::size_t n = ev.space().dims();

    std::vector<std::vector<double>> pos(particles), vel(particles), pbest(particles);
    std::vector<double> pf(particles);
    for (std::size_t i = 0; i < particles; ++i) {
        pos[i] = uniform_point(n, rng);
        vel[i].assign(n, 0.0);
        pf[i] = snapped_eval(ev, pos[i]);
        pbest[i] = pos[i];
    }

    // ring window of `informed` particles centred on i (includes i)
    const std::int64_t lo = -static_cast<std::int64_t>((informed - 1) / 2);
    const std::int64_t hi = static_cast<std::int64_t>(informed / 2);
    auto local_best = [&](std::size_t i) -> const std::vector<double>& {
        std::size_t best = i;
        for (std::int64_t d = lo; d <= hi; ++d) {
            const std::size_t k =
                static_cast<std::size_t>((static_cast<std::int64_t>(i + particles) + d) %
                                         static_cast<std::int64_t>(particles));
            if (pf[k] < pf[best]) best = k;
        }
        return pbest[best];
    };

    while (true) {
        for (std::size_t i = 0; i < particles; ++i) {
            const std::vector<double>& lbest = local_best(i);
            for (std::size_t c = 0; c < n; ++c) {
                vel[i][c] = pso_velocity_update(vel[i][c], pos[i][c], pbest[i][c],
                                                lbest[c], rng.uniform01(),
                                                rng.uniform01());
                pos[i][c] = std::clamp(pos[i][c] + vel[i][c], 0.0, 1.0);
            }
            const double f = snapped_eval(ev, pos[i]);
            if (f < pf[i]) {
                pf[i] = f;
                pbest[i] = pos[i];
            }
        }
    }
}

void run_differential_evolution(const OptimizerSpec& spec, Evaluator& ev, Rng& rng) {
    const DeMethod method =
        de_method_from_string(spec.hyperparams.at("method").get<std::string>());
    const std::size_t pop_mult = spec.hyperparams.at("population").get<std::size_t>();
    const double cr = spec.hyperparams.at("recombination").get<double>();
    const auto mutation = spec.hyperparams.at("mutation");
    const double f_lo = mutation.at(0).get<double>();
    const double f_hi = mutation.at(1).get<double>();
    const std::size_t n = ev.space().dims();
    // population scales with dimensionality; best2 needs five members
    const std::size_t members = std::max<std::size_t>(5, pop_mult * n);

    std::vector<std::vector<double>> pop(members);
    std::vector<double> fit(members);
    std::size_t best = 0;
    for (std::size_t i = 0; i < members; ++i) {
        pop[i] = uniform_point(n, rng);
        fit[i] = snapped_eval(ev, pop[i]);
        if (fit[i] < fit[best]) best = i;
    }

    while (true) {
        const double f = rng.uniform(f_lo, f_hi);  // dither per generation
        for (std::size_t i = 0; i < members; ++i) {
            // distinct sample indices, none equal to the target
            std::uint32_t r[4];
            std::size_t picked = 0;
            const std::size_t need = method == DeMethod::Best2Bin ? 4 : 2;
            while (picked < need) {
                const std::uint32_t c = static_cast<std::uint32_t>(rng.below(members));
                if (c == i) continue;
                bool dup = false;
                for (std::size_t k = 0; k < picked; ++k) dup |= r[k] == c;
                if (!dup) r[picked++] = c;
            }
            std::vector<double> donor =
                method == DeMethod::Best2Bin
                    ? de_donor_best2(pop[best], pop[r[0]], pop[r[1]], pop[r[2]],
                                     pop[r[3]], f)
                    : de_donor_best1(pop[best], pop[r[0]], pop[r[1]], f);
            clamp_unit(donor);
            std::vector<double> trial =
                method == DeMethod::Best1Exp ? de_crossover_exp(pop[i], donor, cr, rng)
                                             : de_crossover_bin(pop[i], donor, cr, rng);
            const double ft = snapped_eval(ev, trial);
            if (ft < fit[i]) {
                pop[i] = std::move(trial);
                fit[i] = ft;
                if (ft < fit[best]) best = i;
            }
        }
    }
}

}  // namespace detail
}  // namespace tunekit

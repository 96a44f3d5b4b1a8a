#include "tunekit/operators.hpp"

#include <algorithm>
#include <cmath>

#include "tunekit/errors.hpp"

namespace tunekit {

CrossoverKind crossover_from_string(const std::string& s) {
    if (s == "uniform") return CrossoverKind::Uniform;
    if (s == "1point") return CrossoverKind::OnePoint;
    if (s == "2point") return CrossoverKind::TwoPoint;
    throw InvalidArgument("unknown reproduction operator: " + s +
                          " (expected uniform, 1point or 2point)");
}

Configuration crossover(const Configuration& a, const Configuration& b,
                        CrossoverKind kind, Rng& rng) {
    if (a.size() != b.size()) throw InvalidArgument("crossover parents differ in length");
    const std::size_t n = a.size();
    Configuration child = a;
    switch (kind) {
        case CrossoverKind::Uniform:
            for (std::size_t i = 0; i < n; ++i)
                if (rng.bernoulli(0.5)) child[i] = b[i];
            break;
        case CrossoverKind::OnePoint: {
            // positions in [0, n]; [cut, n) comes from b
            const std::size_t cut = static_cast<std::size_t>(rng.below(n + 1));
            for (std::size_t i = cut; i < n; ++i) child[i] = b[i];
            break;
        }
        case CrossoverKind::TwoPoint: {
            std::size_t c1 = static_cast<std::size_t>(rng.below(n + 1));
            std::size_t c2 = static_cast<std::size_t>(rng.below(n + 1));
            if (c1 > c2) std::swap(c1, c2);
            for (std::size_t i = c1; i < c2; ++i) child[i] = b[i];
            break;
        }
    }
    return child;
}

void mutate_dimensions(const ParameterSpace& space, Configuration& x, int dims,
                       Rng& rng) {
    std::vector<std::uint32_t> mutable_dims;
    for (std::size_t i = 0; i < space.dims(); ++i)
        if (space.list_size(i) > 1) mutable_dims.push_back(static_cast<std::uint32_t>(i));
    if (mutable_dims.empty()) return;
    rng.shuffle(mutable_dims);
    const int count = std::min<int>(dims, static_cast<int>(mutable_dims.size()));
    for (int j = 0; j < count; ++j) {
        const std::uint32_t d = mutable_dims[j];
        const std::int32_t m = space.list_size(d);
        // uniform over the other m-1 values
        std::int32_t v = static_cast<std::int32_t>(rng.below(m - 1));
        if (v >= x[d]) ++v;
        x[d] = v;
    }
}

int scaled_dimension_count(double fraction, std::size_t n) {
    const int c = static_cast<int>(std::ceil(fraction * static_cast<double>(n)));
    return std::max(1, c);
}

int hamming_distance(const Configuration& a, const Configuration& b) {
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

double metropolis_accept_probability(double f_new, double f_cur, double t) {
    if (f_new < f_cur) return 1.0;
    if (t <= 0.0) return f_new == f_cur ? 1.0 : 0.0;
    return std::exp(-(f_new - f_cur) / t);
}

double pso_velocity_update(double v, double x, double pbest, double lbest,
                           double r1, double r2, double inertia, double c1,
                           double c2) {
    return inertia * v + c1 * r1 * (pbest - x) + c2 * r2 * (lbest - x);
}

DeMethod de_method_from_string(const std::string& s) {
    if (s == "best1bin") return DeMethod::Best1Bin;
    if (s == "best2bin") return DeMethod::Best2Bin;
    if (s == "best1exp") return DeMethod::Best1Exp;
    throw InvalidArgument("unknown differential evolution method: " + s +
                          " (expected best1bin, best2bin or best1exp)");
}

std::vector<double> de_donor_best1(const std::vector<double>& best,
                                   const std::vector<double>& r1,
                                   const std::vector<double>& r2, double f) {
    std::vector<double> donor(best.size());
    for (std::size_t i = 0; i < best.size(); ++i)
        donor[i] = best[i] + f * (r1[i] - r2[i]);
    return donor;
}

std::vector<double> de_donor_best2(const std::vector<double>& best,
                                   const std::vector<double>& r1,
                                   const std::vector<double>& r2,
                                   const std::vector<double>& r3,
                                   const std::vector<double>& r4, double f) {
    std::vector<double> donor(best.size());
    for (std::size_t i = 0; i < best.size(); ++i)
        donor[i] = best[i] + f * (r1[i] - r2[i]) + f * (r3[i] - r4[i]);
    return donor;
}

std::vector<double> de_crossover_bin(const std::vector<double>& target,
                                     const std::vector<double>& donor,
                                     double cr, Rng& rng) {
    const std::size_t n = target.size();
    std::vector<double> trial = target;
    const std::size_t forced = static_cast<std::size_t>(rng.below(n));
    for (std::size_t i = 0; i < n; ++i)
        if (i == forced || rng.bernoulli(cr)) trial[i] = donor[i];
    return trial;
}

std::vector<double> de_crossover_exp(const std::vector<double>& target,
                                     const std::vector<double>& donor,
                                     double cr, Rng& rng) {
    const std::size_t n = target.size();
    std::vector<double> trial = target;
    std::size_t i = static_cast<std::size_t>(rng.below(n));
    std::size_t copied = 0;
    do {
        trial[i] = donor[i];
        i = (i + 1) % n;
        ++copied;
    } while (copied < n && rng.bernoulli(cr));
    return trial;
}

}  // namespace tunekit

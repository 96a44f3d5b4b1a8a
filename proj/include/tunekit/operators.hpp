#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tunekit/rng.hpp"
#include "tunekit/space.hpp"

namespace tunekit {

// Variation and acceptance operators shared by the population-based and
// annealing-style optimizers. Pure functions of their inputs and the RNG.

enum class CrossoverKind { Uniform, OnePoint, TwoPoint };
CrossoverKind crossover_from_string(const std::string& s);

Configuration crossover(const Configuration& a, const Configuration& b,
                        CrossoverKind kind, Rng& rng);

// Re-draw `dims` distinct randomly chosen dimensions to random different
// values. Dimensions with a single value cannot change and are not chosen.
void mutate_dimensions(const ParameterSpace& space, Configuration& x, int dims,
                       Rng& rng);

// ceil(fraction * n), floored at 1; the number of dimensions a perturbation
// or mutation of the given relative size touches.
int scaled_dimension_count(double fraction, std::size_t n);

// Hamming distance between index vectors.
int hamming_distance(const Configuration& a, const Configuration& b);

// Annealing acceptance: 1 if candidate is better, exp(-(f_new-f_cur)/t)
// otherwise; t <= 0 degenerates to greedy.
double metropolis_accept_probability(double f_new, double f_cur, double t);

// PSO velocity update for one coordinate.
double pso_velocity_update(double v, double x, double pbest, double lbest,
                           double r1, double r2, double inertia = 0.729,
                           double c1 = 1.49445, double c2 = 1.49445);

// Differential evolution donor and crossover operators on unit-box vectors.
enum class DeMethod { Best1Bin, Best2Bin, Best1Exp };
DeMethod de_method_from_string(const std::string& s);

std::vector<double> de_donor_best1(const std::vector<double>& best,
                                   const std::vector<double>& r1,
                                   const std::vector<double>& r2, double f);
std::vector<double> de_donor_best2(const std::vector<double>& best,
                                   const std::vector<double>& r1,
                                   const std::vector<double>& r2,
                                   const std::vector<double>& r3,
                                   const std::vector<double>& r4, double f);
// Binomial crossover: each coordinate from donor with probability cr, plus
// one uniformly chosen coordinate always taken from the donor.
std::vector<double> de_crossover_bin(const std::vector<double>& target,
                                     const std::vector<double>& donor,
                                     double cr, Rng& rng);
// Exponential crossover: contiguous donor run of geometric length starting
// at a uniform index.
std::vector<double> de_crossover_exp(const std::vector<double>& target,
                                     const std::vector<double>& donor,
                                     double cr, Rng& rng);

}  // namespace tunekit

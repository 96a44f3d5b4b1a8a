#pragma once

#include <cstddef>
#include <vector>

namespace tunekit {

double mean_of(const std::vector<double>& xs);
// Sample standard deviation (n-1 denominator); 0 for fewer than two samples.
double stddev_of(const std::vector<double>& xs);

struct WelchResult {
    double t = 0.0;
    double df = 0.0;
    double p_one_sided = 1.0;  // in the direction of the larger mean
    bool degenerate = false;   // both samples constant
};

// Welch two-sample t-test (unequal variances) with the t statistic oriented
// toward the larger sample mean.
WelchResult welch_ttest(const std::vector<double>& a, const std::vector<double>& b);

enum class TTestOutcome { AWins, BWins, Tie };

// One-sided Welch competition at level alpha. Equal means or p >= alpha is
// a tie; two distinct constant samples decide by value directly.
TTestOutcome ttest_win(const std::vector<double>& a, const std::vector<double>& b,
                       double alpha = 0.05);

// Spearman rank correlation with average ranks for ties.
double spearman(const std::vector<double>& a, const std::vector<double>& b);

// Upper-tail p-value of a chi-squared statistic.
double chi_squared_p_value(double statistic, int dof);

// Chi-squared uniformity test over observed bin counts.
double chi_squared_uniform_p(const std::vector<std::uint64_t>& counts);

}  // namespace tunekit

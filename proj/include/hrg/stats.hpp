#pragma once
#include <cstdint>
#include <functional>
#include <vector>

namespace hrg {

double mean_of(const std::vector<double>& xs);
double median_of(std::vector<double> xs);  // takes a copy, order not preserved

// sup_x |F_emp(x) - F(x)|, evaluated on both sides of every sample step
double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf);

// asymptotic two-sided Kolmogorov-Smirnov critical value at the 1% level
double ks_critical_1pct(std::size_t n);

// Pearson chi-square statistic against expected counts, and its upper-tail
// probability at the given degrees of freedom
double chi_square_stat(const std::vector<std::uint64_t>& observed,
                       const std::vector<double>& expected);
double chi_square_pvalue(double stat, unsigned dof);

// Pearson correlation; defined as 0 when either variance vanishes
double pearson(const std::vector<double>& x, const std::vector<double>& y);

// central acceptance band [lo, hi] for Bin(trials, p): each tail outside the
// band carries at most (1 - conf)/2 probability (quantiles rounded outwards)
struct count_band {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  bool contains(std::uint64_t k) const { return lo <= k && k <= hi; }
};
count_band binomial_band(std::uint64_t trials, double p, double conf);

// two-sided two-proportion z test with pooled variance
struct proportion_test {
  double z = 0.0;
  double p_value = 1.0;
};
proportion_test two_proportion_test(std::uint64_t k1, std::uint64_t n1,
                                    std::uint64_t k2, std::uint64_t n2);

// sum_{j>=0} (a+j)^{-s} for s > 1, a > 0 (Euler-Maclaurin tail)
double hurwitz_zeta(double s, double a);

// discrete power-law MLE on the samples >= k_min: P(k) = k^{-gamma}/H(gamma,k_min)
struct powerlaw_fit {
  double gamma = 0.0;
  double std_error = 0.0;
  std::size_t n_tail = 0;
  unsigned k_min = 1;
};
powerlaw_fit fit_power_tail(const std::vector<std::uint32_t>& values, unsigned k_min);

// least squares y = slope * x + intercept with coefficient of determination
struct linear_fit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};
linear_fit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// half L1 distance between two sub-probability vectors (shorter one padded)
double total_variation(const std::vector<double>& p, const std::vector<double>& q);

}  // namespace hrg

#include "hrg/stats.hpp"

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace hrg {

double mean_of(const std::vector<double>& xs) {
  if (xs.empty()) throw std::invalid_argument("mean_of: empty sample");
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double median_of(std::vector<double> xs) {
  if (xs.empty()) throw std::invalid_argument("median_of: empty sample");
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  return n % 2 == 1 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf) {
  if (sample.empty()) throw std::invalid_argument("ks_statistic: empty sample");
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = cdf(sample[i]);
    d = std::max(d, f - static_cast<double>(i) / n);
    d = std::max(d, static_cast<double>(i + 1) / n - f);
  }
  return d;
}

double ks_critical_1pct(std::size_t n) {
  return 1.6276 / std::sqrt(static_cast<double>(n));
}

double chi_square_stat(const std::vector<std::uint64_t>& observed,
                       const std::vector<double>& expected) {
  if (observed.size() != expected.size() || observed.empty())
    throw std::invalid_argument("chi_square_stat: mismatched bins");
  double stat = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    if (!(expected[i] > 0.0))
      throw std::invalid_argument("chi_square_stat: nonpositive expected count");
    const double diff = static_cast<double>(observed[i]) - expected[i];
    stat += diff * diff / expected[i];
  }
  return stat;
}

double chi_square_pvalue(double stat, unsigned dof) {
  if (dof == 0) throw std::invalid_argument("chi_square_pvalue: zero dof");
  if (!(stat > 0.0)) return 1.0;
  const boost::math::chi_squared_distribution<double> dist(dof);
  return boost::math::cdf(boost::math::complement(dist, stat));
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("pearson: need two equal-length samples");
  const double mx = mean_of(x);
  const double my = mean_of(y);
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx <= 0.0 || syy <= 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

count_band binomial_band(std::uint64_t trials, double p, double conf) {
  if (!(conf > 0.0) || !(conf < 1.0))
    throw std::domain_error("binomial_band: confidence must be in (0,1)");
  if (!(p >= 0.0) || !(p <= 1.0))
    throw std::domain_error("binomial_band: probability must be in [0,1]");
  if (p <= 0.0) return {0, 0};
  if (p >= 1.0) return {trials, trials};
  const double tail = (1.0 - conf) / 2.0;
  const boost::math::binomial_distribution<double> dist(static_cast<double>(trials), p);
  count_band band;
  band.lo = static_cast<std::uint64_t>(boost::math::quantile(dist, tail));
  band.hi = static_cast<std::uint64_t>(
      boost::math::quantile(boost::math::complement(dist, tail)));
  return band;
}

proportion_test two_proportion_test(std::uint64_t k1, std::uint64_t n1,
                                    std::uint64_t k2, std::uint64_t n2) {
  if (n1 == 0 || n2 == 0)
    throw std::invalid_argument("two_proportion_test: empty sample");
  const double p1 = static_cast<double>(k1) / static_cast<double>(n1);
  const double p2 = static_cast<double>(k2) / static_cast<double>(n2);
  const double pooled = (static_cast<double>(k1) + static_cast<double>(k2)) /
                        (static_cast<double>(n1) + static_cast<double>(n2));
  const double var = pooled * (1.0 - pooled) *
                     (1.0 / static_cast<double>(n1) + 1.0 / static_cast<double>(n2));
  proportion_test t;
  if (var <= 0.0) return t;  // both proportions forced equal at 0 or 1
  t.z = (p1 - p2) / std::sqrt(var);
  t.p_value = std::erfc(std::fabs(t.z) / std::numbers::sqrt2);
  return t;
}

double hurwitz_zeta(double s, double a) {
  if (!(s > 1.0) || !(a > 0.0))
    throw std::domain_error("hurwitz_zeta: needs s > 1 and a > 0");
  constexpr int head_terms = 16;
  double sum = 0.0;
  for (int k = 0; k < head_terms; ++k)
    sum += std::pow(a + static_cast<double>(k), -s);
  const double x = a + static_cast<double>(head_terms);
  sum += std::pow(x, 1.0 - s) / (s - 1.0);
  sum += 0.5 * std::pow(x, -s);
  // B_{2j}/(2j)! for j = 1..6
  static constexpr double bern_over_fact[] = {
      1.0 / 12.0,       -1.0 / 720.0,      1.0 / 30240.0,
      -1.0 / 1209600.0, 1.0 / 47900160.0,  -691.0 / 1307674368000.0};
  double rising = s;                      // (s)_{2j-1}, starts at (s)_1
  double power = std::pow(x, -s - 1.0);   // x^{-s-2j+1}
  for (int j = 0; j < 6; ++j) {
    sum += bern_over_fact[j] * rising * power;
    rising *= (s + 2.0 * j + 1.0) * (s + 2.0 * j + 2.0);
    power /= x * x;
  }
  return sum;
}

powerlaw_fit fit_power_tail(const std::vector<std::uint32_t>& values, unsigned k_min) {
  if (k_min < 1) throw std::invalid_argument("fit_power_tail: k_min must be >= 1");
  double log_sum = 0.0;
  std::size_t n_tail = 0;
  for (std::uint32_t v : values) {
    if (v >= k_min) {
      log_sum += std::log(static_cast<double>(v));
      ++n_tail;
    }
  }
  if (n_tail < 2)
    throw std::invalid_argument("fit_power_tail: needs at least 2 samples above k_min");

  const double nn = static_cast<double>(n_tail);
  const double a = static_cast<double>(k_min);
  auto nll = [&](double g) { return nn * std::log(hurwitz_zeta(g, a)) + g * log_sum; };

  // golden-section minimum of the negative log likelihood
  double lo = 1.02, hi = 12.0;
  constexpr double invphi = 0.6180339887498949;
  double x1 = hi - invphi * (hi - lo);
  double x2 = lo + invphi * (hi - lo);
  double f1 = nll(x1), f2 = nll(x2);
  while (hi - lo > 1e-10) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - invphi * (hi - lo);
      f1 = nll(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + invphi * (hi - lo);
      f2 = nll(x2);
    }
  }

  powerlaw_fit fit;
  fit.gamma = 0.5 * (lo + hi);
  fit.n_tail = n_tail;
  fit.k_min = k_min;
  const double h = 1e-4 * std::max(1.0, fit.gamma);
  const double d2 =
      (nll(fit.gamma + h) - 2.0 * nll(fit.gamma) + nll(fit.gamma - h)) / (h * h);
  fit.std_error = d2 > 0.0 ? 1.0 / std::sqrt(d2) : std::numeric_limits<double>::infinity();
  return fit;
}

linear_fit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("fit_line: need two equal-length samples");
  const double mx = mean_of(x);
  const double my = mean_of(y);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx <= 0.0) throw std::invalid_argument("fit_line: degenerate abscissa");
  linear_fit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0, ss_tot = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double pred = fit.slope * x[i] + fit.intercept;
    ss_res += (y[i] - pred) * (y[i] - pred);
    ss_tot += (y[i] - my) * (y[i] - my);
  }
  fit.r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

double total_variation(const std::vector<double>& p, const std::vector<double>& q) {
  const std::size_t n = std::max(p.size(), q.size());
  double l1 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = i < p.size() ? p[i] : 0.0;
    const double b = i < q.size() ? q[i] : 0.0;
    l1 += std::fabs(a - b);
  }
  return 0.5 * l1;
}

}  // namespace hrg

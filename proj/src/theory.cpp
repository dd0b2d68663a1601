#include "hrg/theory.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hrg/geometry.hpp"
#include "hrg/quadrature.hpp"

namespace hrg {

namespace {

constexpr double pi = std::numbers::pi;

void require_theory(const model_params& p) {
  if (!p.theory_valid())
    throw std::domain_error("regime constants need zeta/alpha < 2");
}

regime_constants_t cold_constants(const model_params& p) {
  regime_constants_t c;
  c.kind = regime::cold;
  if (p.disc) {
    // beta -> infinity: (2/beta)/sin(pi/beta) -> 2/pi
    c.c_beta = 2.0 / pi;
  } else {
    c.c_beta = (2.0 / p.beta) / std::sin(pi / p.beta);
  }
  c.k_const = (2.0 * p.alpha / (2.0 * p.alpha - p.zeta)) * c.c_beta;
  return c;
}

}  // namespace

regime_constants_t regime_constants(const model_params& p) {
  // the more specific hot-regime violation is reported first: when
  // beta*zeta >= 2*alpha with beta < 1, zeta/alpha >= 2 follows anyway
  if (!p.disc && p.beta < 1.0 && !(2.0 * p.alpha - p.beta * p.zeta > 0.0))
    throw std::domain_error(
        "hot-regime constant undefined: needs 2*alpha > beta*zeta");
  require_theory(p);
  regime_constants_t c;
  switch (p.regime_kind()) {
    case regime::cold:
      c = cold_constants(p);
      break;
    case regime::critical:
      c.kind = regime::critical;
      c.c_beta = 2.0 / pi;
      c.k_const = (1.0 / pi) * (2.0 * p.alpha * p.zeta / (2.0 * p.alpha - p.zeta));
      break;
    case regime::hot: {
      c.kind = regime::hot;
      c.c_beta = std::tgamma((1.0 - p.beta) / 2.0) /
                 (std::sqrt(pi) * std::tgamma(1.0 - p.beta / 2.0));
      c.k_const = (2.0 * p.alpha / (2.0 * p.alpha - p.beta * p.zeta)) * c.c_beta;
      break;
    }
  }
  c.power_exponent = 2.0 * p.alpha / p.zeta + 1.0;
  return c;
}

double angle_avg_probability_numeric(double t_u, double t_v, const model_params& p) {
  const double r_u = p.radius - t_u;
  const double r_v = p.radius - t_v;
  if (p.disc) {
    // step integrand: solve d(theta) = R for the transition angle
    const double lo = std::cosh(p.zeta * std::fabs(r_u - r_v));
    const double hi = std::cosh(p.zeta * p.radius);
    if (hi <= lo) return 0.0;
    const double ss = (hi - lo) / (2.0 * std::sinh(p.zeta * r_u) * std::sinh(p.zeta * r_v));
    if (ss >= 1.0) return 1.0;
    return 2.0 * std::asin(std::sqrt(ss)) / pi;
  }
  auto integrand = [&](double theta) {
    return connection_probability(exact_distance_rt(r_u, r_v, theta, p.zeta), p);
  };
  const double a_factor = std::exp((p.zeta / 2.0) * (p.radius - t_u - t_v));
  double knee = 4.0 / a_factor;
  if (!(knee < pi)) return integrate(integrand, 0.0, pi, 1e-11) / pi;
  double total = integrate(integrand, 0.0, knee, 1e-11);
  double lo = knee;
  while (lo < pi) {
    const double hi = std::min(pi, 4.0 * lo);
    total += integrate(integrand, lo, hi, 1e-11);
    lo = hi;
  }
  return total / pi;
}

double angle_avg_probability_closed(double t_u, double t_v, const model_params& p) {
  const regime_constants_t c = regime_constants(p);
  const double a_factor = std::exp((p.zeta / 2.0) * (p.radius - t_u - t_v));
  switch (c.kind) {
    case regime::cold:
      return c.c_beta / a_factor;
    case regime::critical:
      return c.c_beta * std::log(a_factor) / a_factor;
    case regime::hot:
      return c.c_beta * std::pow(a_factor, -p.beta);
  }
  return 0.0;
}

double expected_degree(double t_u, const model_params& p) {
  const regime_constants_t c = regime_constants(p);
  const double growth = std::exp(p.zeta * t_u / 2.0);
  double q = 0.0;
  switch (c.kind) {
    case regime::cold:
      q = c.k_const * growth / p.n;
      break;
    case regime::critical:
      q = c.k_const * (p.radius - t_u) * growth / p.n;
      break;
    case regime::hot:
      q = c.k_const * std::pow(growth / p.n, p.beta);
      break;
  }
  return (p.n - 1.0) * q;
}

double mixing_distribution::cdf(double t) const {
  if (t <= support_min) return 0.0;
  return 1.0 - std::pow(k_const / t, shape);
}

double mixing_distribution::quantile(double u) const {
  return k_const * std::pow(1.0 - u, -1.0 / shape);
}

mixing_distribution mixing_for(const model_params& p) {
  if (p.regime_kind() != regime::cold)
    throw std::domain_error("mixing distribution is defined in the cold regime only");
  const regime_constants_t c = regime_constants(p);
  mixing_distribution f;
  f.k_const = c.k_const;
  f.shape = 2.0 * p.alpha / p.zeta;
  f.support_min = c.k_const;
  return f;
}

double mixed_poisson_pmf(unsigned k, const model_params& p) {
  const mixing_distribution f = mixing_for(p);
  const double s = f.shape;
  const double K = f.k_const;
  const double log_norm = std::log(s) + s * std::log(K) - std::lgamma(k + 1.0);
  auto integrand = [&](double t) {
    return std::exp(log_norm - t + (k - s - 1.0) * std::log(t));
  };
  const double t_hi = K + 60.0 + 10.0 * k;
  // remainder of the dropped tail: t^{k-s-1} <= t^k t_hi^{-s-1} above t_hi
  const double remainder =
      s * std::pow(K, s) * std::pow(t_hi, -s - 1.0) * boost::math::gamma_q(k + 1.0, t_hi);
  if (!(remainder < 1e-13))
    throw std::logic_error("mixed_poisson_pmf: truncated tail above bound");
  return integrate(integrand, K, t_hi, 1e-13);
}

double mixed_poisson_tail(unsigned k_cap, const model_params& p) {
  const mixing_distribution f = mixing_for(p);
  const double s = f.shape;
  const double K = f.k_const;
  // P(Poisson(t) > k_cap) = gamma_p(k_cap + 1, t); above t_split it is 1 to
  // within ~1e-14, so the mixing tail mass there is added exactly
  const double t_split = 2.0 * k_cap + 100.0;
  auto integrand = [&](double t) {
    return boost::math::gamma_p(k_cap + 1.0, t) * s * std::pow(K, s) *
           std::pow(t, -s - 1.0);
  };
  return integrate(integrand, K, t_split, 1e-12) + std::pow(K / t_split, s);
}

double chung_lu_kernel(double t_u, double t_v, const model_params& p) {
  if (p.regime_kind() != regime::cold)
    throw std::domain_error("product kernel is defined in the cold regime only");
  const regime_constants_t c = regime_constants(p);
  return c.k_const * std::exp(p.zeta * (t_u + t_v) / 2.0);
}

}  // namespace hrg

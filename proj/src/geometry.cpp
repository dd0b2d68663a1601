#include "hrg/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hrg {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// log(sinh x) and log(cosh x) for large positive x, used only when the plain
// law-of-cosines argument overflows a double
double log_sinh(double x) { return x + std::log1p(-std::exp(-2.0 * x)) - std::numbers::ln2; }
double log_cosh(double x) { return x + std::log1p(std::exp(-2.0 * x)) - std::numbers::ln2; }

}  // namespace

double rel_angle(double theta_u, double theta_v) {
  double d = std::fabs(theta_u - theta_v);
  d = std::fmod(d, two_pi);
  if (d > std::numbers::pi) d = two_pi - d;
  return d;
}

double exact_distance_rt(double r_u, double r_v, double angle, double zeta) {
  const double s = std::sin(0.5 * angle);
  const double dr = std::fabs(r_u - r_v);
  // carry cosh(zeta d) - 1 instead of cosh(zeta d): both summands below are
  // non-negative, and tiny distances (y near machine epsilon) keep all their
  // digits through acosh(1 + y) = log1p(y + sqrt(y (y + 2)))
  const double sh = std::sinh(0.5 * zeta * dr);
  const double y =
      2.0 * sh * sh + 2.0 * std::sinh(zeta * r_u) * std::sinh(zeta * r_v) * s * s;
  if (std::isfinite(y)) {
    if (y < 1.0) return std::log1p(y + std::sqrt(y * (y + 2.0))) / zeta;
    return std::acosh(1.0 + y) / zeta;
  }
  // overflow: evaluate log(arg) termwise; acosh(e^L) = L + ln 2 up to e^{-2L}
  double lc = log_cosh(zeta * dr);
  double ls = std::numbers::ln2 + log_sinh(zeta * r_u) + log_sinh(zeta * r_v) +
              2.0 * std::log(s);
  double hi = std::max(lc, ls), lo = std::min(lc, ls);
  double l = hi + std::log1p(std::exp(lo - hi));
  return (l + std::numbers::ln2) / zeta;
}

double exact_distance(const vertex_position& u, const vertex_position& v,
                      const model_params& p) {
  return exact_distance_rt(u.r, v.r, rel_angle(u.theta, v.theta), p.zeta);
}

double approx_distance(const vertex_position& u, const vertex_position& v,
                       const model_params& p) {
  const double angle = rel_angle(u.theta, v.theta);
  if (angle == 0.0)
    throw std::domain_error("approx_distance: zero angular separation");
  return 2.0 * p.radius - u.t - v.t + (2.0 / p.zeta) * std::log(std::sin(0.5 * angle));
}

double connection_probability(double distance, const model_params& p) {
  if (p.disc) {
    if (distance < p.radius) return 1.0;
    if (distance > p.radius) return 0.0;
    return 0.5;
  }
  const double x = p.beta * (p.zeta / 2.0) * (distance - p.radius);
  if (x > 0.0) {
    const double e = std::exp(-x);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(x));
}

pair_geometry_result pair_geometry(const vertex_position& u,
                                   const vertex_position& v,
                                   const model_params& p) {
  pair_geometry_result g;
  g.rel_angle = rel_angle(u.theta, v.theta);
  g.distance = exact_distance_rt(u.r, v.r, g.rel_angle, p.zeta);
  g.a_factor = std::exp((p.zeta / 2.0) * (p.radius - u.t - v.t));
  g.theta_hat = std::sqrt(std::exp(-2.0 * p.zeta * u.r) + std::exp(-2.0 * p.zeta * v.r));
  return g;
}

}  // namespace hrg

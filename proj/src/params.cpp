#include "hrg/params.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace hrg {

namespace {

void validate_common(double zeta, double alpha, double beta, bool disc) {
  if (!(zeta > 0.0) || !std::isfinite(zeta))
    throw std::domain_error("model_params: zeta must be positive and finite");
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw std::domain_error("model_params: alpha must be positive and finite");
  if (!disc && (!(beta > 0.0) || !std::isfinite(beta)))
    throw std::domain_error("model_params: beta must be positive and finite");
}

}  // namespace

model_params model_params::from_vertices(double n, double zeta, double alpha,
                                         double beta, bool disc) {
  validate_common(zeta, alpha, beta, disc);
  if (!(n >= 1.0) || !std::isfinite(n))
    throw std::domain_error("model_params: vertex count must be >= 1");
  model_params p;
  p.n = n;
  p.zeta = zeta;
  p.alpha = alpha;
  p.beta = beta;
  p.disc = disc;
  p.radius = (2.0 / zeta) * std::log(n);
  return p;
}

model_params model_params::from_radius(double radius, double zeta, double alpha,
                                       double beta, bool disc) {
  validate_common(zeta, alpha, beta, disc);
  if (!(radius >= 0.0) || !std::isfinite(radius))
    throw std::domain_error("model_params: radius must be >= 0");
  model_params p;
  p.n = std::exp(zeta * radius / 2.0);
  p.zeta = zeta;
  p.alpha = alpha;
  p.beta = beta;
  p.disc = disc;
  p.radius = radius;
  return p;
}

regime model_params::regime_kind() const {
  if (disc || beta > 1.0) return regime::cold;
  if (beta == 1.0) return regime::critical;
  return regime::hot;
}

std::size_t model_params::vertex_count() const {
  if (n > 1e12 || n != std::floor(n))
    throw std::domain_error("model_params: vertex count " + std::to_string(n) +
                            " is not a generatable integer size");
  return static_cast<std::size_t>(n);
}

effective_cutoff effective_cutoff::for_params(const model_params& p,
                                              std::optional<double> omega_override) {
  effective_cutoff c;
  double lln = p.n > std::exp(1.0) ? std::log(std::log(p.n)) : 0.0;
  c.omega = omega_override.value_or(std::max(lln, 1.0));
  if (!(c.omega > 0.0)) throw std::domain_error("effective_cutoff: omega must be positive");
  c.x0 = p.zeta * p.radius / (2.0 * p.alpha) + c.omega;
  if (c.x0 > p.radius)
    throw std::domain_error("effective_cutoff: x0 exceeds the disc radius; "
                            "increase n or alpha (needs zeta/alpha well below 2)");
  return c;
}

}  // namespace hrg

#include "hrg/sampler.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hrg/parallel.hpp"

namespace hrg {

namespace {

// cosh(x) - 1 without cancellation for small x
double coshm1(double x) {
  const double s = std::sinh(0.5 * x);
  return 2.0 * s * s;
}

// acosh(1 + y) stable near y = 0
double acosh1p(double y) {
  return std::log1p(y + std::sqrt(y * (y + 2.0)));
}

}  // namespace

double radial_cdf(double r, const model_params& p) {
  if (!(r >= 0.0) || r > p.radius)
    throw std::domain_error("radial_cdf: radius outside [0, R]");
  return coshm1(p.alpha * r) / coshm1(p.alpha * p.radius);
}

double sample_radius(double u, const model_params& p) {
  const double y = u * coshm1(p.alpha * p.radius);
  return acosh1p(y) / p.alpha;
}

std::vector<vertex_position> sample_positions(const model_params& p, sample_seed seed) {
  const std::size_t n = p.vertex_count();
  std::vector<vertex_position> out(n);
  const std::uint64_t key0 = root_key(seed, stream_tag::position);
  parallel_ranges(n, 4096, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const std::uint64_t key = chain(key0, i);
      const double u_r = to_unit(stream_at(key, 0));
      const double u_a = to_unit(stream_at(key, 1));
      out[i] = vertex_position(sample_radius(u_r, p),
                               2.0 * std::numbers::pi * (1.0 - u_a), p);
    }
  });
  return out;
}

}  // namespace hrg

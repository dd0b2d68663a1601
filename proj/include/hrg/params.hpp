#pragma once
#include <cstddef>
#include <optional>

namespace hrg {

enum class regime { cold, critical, hot };

// Model parameters. The disc radius R is derived from the vertex count so the
// expected graph density stays bounded: n = e^{zeta R / 2}.
//
// n is kept as a double: theory-only evaluations use radii (R = 90 means
// n ~ 3.5e19) that do not fit a 64-bit integer, while every size that can
// actually be generated is far below 2^53 and therefore exact.
struct model_params {
  double n = 0;
  double zeta = 1.0;
  double alpha = 1.0;
  double beta = 1.0;
  bool disc = false;  // hard-threshold limit of the connection probability
  double radius = 0.0;

  static model_params from_vertices(double n, double zeta, double alpha,
                                    double beta, bool disc = false);
  static model_params from_radius(double radius, double zeta, double alpha,
                                  double beta, bool disc = false);

  // beta > 1 cold, beta == 1 critical, beta < 1 hot; the disc limit is cold
  regime regime_kind() const;

  // the degree results require zeta/alpha < 2
  bool theory_valid() const { return zeta / alpha < 2.0; }

  // checked integral vertex count for sampling and generation
  std::size_t vertex_count() const;
};

// Largest type for which the closed-form degree predictions are quantitative:
// x0 = zeta R / (2 alpha) + omega, with omega defaulting to max(ln ln n, 1).
struct effective_cutoff {
  double x0 = 0.0;
  double omega = 0.0;

  static effective_cutoff for_params(const model_params& p,
                                     std::optional<double> omega_override = {});
};

}  // namespace hrg

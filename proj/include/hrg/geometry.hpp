#pragma once
#include "hrg/params.hpp"

namespace hrg {

// Point in the native representation: r is the hyperbolic distance from the
// disc centre, theta in (0, 2pi]. The type t = R - r is fixed at construction.
struct vertex_position {
  double r = 0.0;
  double theta = 0.0;
  double t = 0.0;

  vertex_position() = default;
  vertex_position(double r_, double theta_, const model_params& p)
      : r(r_), theta(theta_), t(p.radius - r_) {}
};

// angular separation folded into [0, pi]; symmetric in its arguments
double rel_angle(double theta_u, double theta_v);

// hyperbolic law of cosines, evaluated without cancellation:
// cosh(zeta d) = cosh(zeta |r_u - r_v|) + 2 sinh(zeta r_u) sinh(zeta r_v) sin^2(angle/2)
double exact_distance(const vertex_position& u, const vertex_position& v,
                      const model_params& p);
double exact_distance_rt(double r_u, double r_v, double angle, double zeta);

// large-distance expansion 2R - t_u - t_v + (2/zeta) ln sin(angle/2);
// throws std::domain_error at zero angular separation
double approx_distance(const vertex_position& u, const vertex_position& v,
                       const model_params& p);

// Fermi-Dirac probability 1/(exp(beta (zeta/2)(d - R)) + 1), evaluated on the
// branch that only exponentiates non-positive arguments. d == R gives exactly
// 0.5. With the disc flag: 1 below R, 0 above, 0.5 at R by convention.
double connection_probability(double distance, const model_params& p);

struct pair_geometry_result {
  double distance = 0.0;   // exact
  double rel_angle = 0.0;  // in [0, pi]
  double a_factor = 0.0;   // A = exp((zeta/2)(R - t_u - t_v))
  double theta_hat = 0.0;  // expansion scale (e^{-2 zeta r_u} + e^{-2 zeta r_v})^{1/2}
};

pair_geometry_result pair_geometry(const vertex_position& u,
                                   const vertex_position& v,
                                   const model_params& p);

}  // namespace hrg

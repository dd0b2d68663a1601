#pragma once
#include "hrg/params.hpp"

namespace hrg {

// Closed-form constants of the three degree regimes. power_exponent is the
// tail exponent of the limiting degree distribution, 2 alpha / zeta + 1.
struct regime_constants_t {
  regime kind = regime::cold;
  double c_beta = 0.0;
  double k_const = 0.0;
  double power_exponent = 0.0;
};

// Throws std::domain_error when zeta/alpha >= 2, and in the hot regime when
// 2 alpha - beta zeta <= 0 (the degree integral diverges there).
regime_constants_t regime_constants(const model_params& p);

// (1/pi) int_0^pi p(d(theta)) dtheta with the exact distance in the integrand.
// Panels are laid geometrically around the transition angle ~1/A so the result
// keeps relative accuracy even when the value is far below 1e-10.
double angle_avg_probability_numeric(double t_u, double t_v, const model_params& p);

// regime closed form: C/A (cold), C ln(A)/A (critical), C A^{-beta} (hot)
double angle_avg_probability_closed(double t_u, double t_v, const model_params& p);

// (n-1) times the per-partner edge probability of a vertex with type t_u.
// Quantitative for t_u <= x0; callers flag larger types as extrapolation.
double expected_degree(double t_u, const model_params& p);

// limiting mixing law F(t) = 1 - (K/t)^{2 alpha/zeta} on [K, inf); cold only
struct mixing_distribution {
  double k_const = 0.0;
  double shape = 0.0;        // 2 alpha / zeta
  double support_min = 0.0;  // equals k_const

  double cdf(double t) const;
  double quantile(double u) const;  // inverse cdf, u in [0,1)
};

mixing_distribution mixing_for(const model_params& p);

// P(MP(F) = k) = shape K^shape int_K^inf e^{-t} t^{k - shape - 1} dt / k!,
// by quadrature on [K, K + 60 + 10k]; the dropped remainder is bounded by an
// incomplete-gamma tail and checked to stay below 1e-13. Cold regime only.
double mixed_poisson_pmf(unsigned k, const model_params& p);

// P(MP(F) > k_cap), split exactly at the point where the conditional Poisson
// tail saturates; used for normalization checks and tail lumps
double mixed_poisson_tail(unsigned k_cap, const model_params& p);

// rank-1 kernel K e^{zeta t_u / 2} e^{zeta t_v / 2}; kernel/n is the edge
// probability of the equivalent inhomogeneous random graph. Cold only.
double chung_lu_kernel(double t_u, double t_v, const model_params& p);

}  // namespace hrg

#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hrg/graph.hpp"
#include "hrg/params.hpp"
#include "hrg/rng.hpp"
#include "hrg/stats.hpp"

namespace hrg {

struct degree_report {
  std::map<unsigned, std::uint64_t> histogram;  // k -> N_k, zero counts omitted
  double mean_degree = 0.0;
  std::uint64_t n = 0;
  unsigned k_min = 10;
  std::optional<powerlaw_fit> tail_fit;  // absent when the tail is too thin
  std::string tail_note;                 // reason when tail_fit is absent
  unsigned k_cap = 30;
  // TV distance of {N_k/N} to the limiting mixed-Poisson pmf over k <= k_cap
  // with lumped tails; computed in the cold regime only
  std::optional<double> tv_to_mixed_poisson;
};

degree_report analyze_degrees(const graph& g, unsigned k_min = 10, unsigned k_cap = 30);
degree_report analyze_degree_sequence(const std::vector<std::uint32_t>& degrees,
                                      const model_params& p, unsigned k_min = 10,
                                      unsigned k_cap = 30);

struct scaling_point {
  double n = 0.0;
  double mean_degree = 0.0;     // across replicates
  double ci_half_width = 0.0;   // ~95% normal interval for the replicate mean
};
struct scaling_result {
  std::vector<scaling_point> points;
  linear_fit mean_vs_log_n;      // logarithmic-growth reading
  linear_fit log_mean_vs_log_n;  // polynomial-growth reading
};

// Mean degree across an ascending size grid (at least 4 sizes), `replicates`
// independent accelerated draws per size. Only zeta/alpha/beta/disc of `base`
// are used; each grid entry sets its own radius.
scaling_result scaling_experiment(const model_params& base,
                                  const std::vector<double>& n_grid,
                                  unsigned replicates, sample_seed seed);

struct conditional_degree_result {
  double t_star = 0.0;
  double empirical_mean = 0.0;  // mean degree over vertices with |t - t_star| <= window
  double predicted = 0.0;       // closed-form expected degree at t_star
  std::size_t window_count = 0;
  bool extrapolated = false;    // t_star above the quantitative cutoff x0
};
conditional_degree_result conditional_degree_check(const graph& g, double t_star,
                                                   double window);

struct independence_result {
  std::size_t m = 0;
  std::size_t samples = 0;
  std::vector<double> correlations;  // pairwise, upper triangle row-major
  double max_abs_correlation = 0.0;
};

// Degrees of m designated vertices across `samples` independently generated
// graphs (fresh positions per sample); cold regime only.
independence_result independence_check(const model_params& p, std::size_t m,
                                       std::size_t samples, sample_seed seed);

// global transitivity: 3 * (#triangles) / (#two-edge paths), 0 when undefined
double clustering_coefficient(const graph& g);

}  // namespace hrg

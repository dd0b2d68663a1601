#include "hrg/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hrg/generator.hpp"
#include "hrg/parallel.hpp"
#include "hrg/theory.hpp"

namespace hrg {

namespace {

constexpr std::size_t min_tail_samples = 100;

degree_report build_report(const std::vector<std::uint32_t>& degrees,
                           const model_params& p, unsigned k_min, unsigned k_cap) {
  if (degrees.empty()) throw std::invalid_argument("degree report: empty graph");
  degree_report rep;
  rep.n = degrees.size();
  rep.k_min = k_min;
  rep.k_cap = k_cap;

  double sum = 0.0;
  std::size_t tail_count = 0;
  for (std::uint32_t d : degrees) {
    ++rep.histogram[d];
    sum += d;
    if (d >= k_min) ++tail_count;
  }
  rep.mean_degree = sum / static_cast<double>(rep.n);

  if (tail_count >= min_tail_samples) {
    rep.tail_fit = fit_power_tail(degrees, k_min);
  } else {
    rep.tail_note = "insufficient tail";
  }

  if (p.regime_kind() == regime::cold && p.theory_valid()) {
    const double nn = static_cast<double>(rep.n);
    std::vector<double> empirical(k_cap + 2, 0.0);
    std::vector<double> model(k_cap + 2, 0.0);
    for (const auto& [k, count] : rep.histogram) {
      const std::size_t slot = k <= k_cap ? k : k_cap + 1;
      empirical[slot] += static_cast<double>(count) / nn;
    }
    for (unsigned k = 0; k <= k_cap; ++k) model[k] = mixed_poisson_pmf(k, p);
    model[k_cap + 1] = mixed_poisson_tail(k_cap, p);
    rep.tv_to_mixed_poisson = total_variation(empirical, model);
  }
  return rep;
}

}  // namespace

degree_report analyze_degrees(const graph& g, unsigned k_min, unsigned k_cap) {
  return build_report(g.degree_sequence(), g.params, k_min, k_cap);
}

degree_report analyze_degree_sequence(const std::vector<std::uint32_t>& degrees,
                                      const model_params& p, unsigned k_min,
                                      unsigned k_cap) {
  return build_report(degrees, p, k_min, k_cap);
}

scaling_result scaling_experiment(const model_params& base,
                                  const std::vector<double>& n_grid,
                                  unsigned replicates, sample_seed seed) {
  if (n_grid.size() < 4)
    throw std::invalid_argument("scaling_experiment: need at least 4 grid sizes");
  for (std::size_t i = 0; i + 1 < n_grid.size(); ++i)
    if (!(n_grid[i] < n_grid[i + 1]))
      throw std::invalid_argument("scaling_experiment: grid must be ascending");
  if (replicates < 1)
    throw std::invalid_argument("scaling_experiment: need at least 1 replicate");

  scaling_result result;
  result.points.resize(n_grid.size());
  std::vector<std::vector<double>> means(n_grid.size(),
                                         std::vector<double>(replicates, 0.0));

  // one task per (size, replicate); every draw has its own derived stream
  parallel_blocks(n_grid.size() * replicates, [&](std::size_t task) {
    const std::size_t gi = task / replicates;
    const std::size_t rep = task % replicates;
    const model_params p = model_params::from_vertices(n_grid[gi], base.zeta,
                                                       base.alpha, base.beta, base.disc);
    const sample_seed s{seed.seed, chain(chain(seed.stream, gi), rep)};
    const auto edge_count = count_edges_accelerated(p, s);
    means[gi][rep] = 2.0 * static_cast<double>(edge_count) / n_grid[gi];
  });

  std::vector<double> xs, ys;
  for (std::size_t gi = 0; gi < n_grid.size(); ++gi) {
    scaling_point& pt = result.points[gi];
    pt.n = n_grid[gi];
    pt.mean_degree = mean_of(means[gi]);
    if (replicates > 1) {
      double ss = 0.0;
      for (double m : means[gi]) ss += (m - pt.mean_degree) * (m - pt.mean_degree);
      const double sd = std::sqrt(ss / static_cast<double>(replicates - 1));
      pt.ci_half_width = 1.96 * sd / std::sqrt(static_cast<double>(replicates));
    }
    xs.push_back(std::log(pt.n));
    ys.push_back(pt.mean_degree);
  }
  result.mean_vs_log_n = fit_line(xs, ys);

  std::vector<double> log_xs, log_ys;
  for (std::size_t gi = 0; gi < n_grid.size(); ++gi) {
    if (result.points[gi].mean_degree > 0.0) {
      log_xs.push_back(xs[gi]);
      log_ys.push_back(std::log(result.points[gi].mean_degree));
    }
  }
  if (log_xs.size() >= 2) result.log_mean_vs_log_n = fit_line(log_xs, log_ys);
  return result;
}

conditional_degree_result conditional_degree_check(const graph& g, double t_star,
                                                   double window) {
  if (!(window >= 0.0))
    throw std::invalid_argument("conditional_degree_check: negative window");
  const auto degrees = g.degree_sequence();
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < g.positions.size(); ++i) {
    if (std::fabs(g.positions[i].t - t_star) <= window) {
      sum += degrees[i];
      ++count;
    }
  }
  if (count == 0) throw std::domain_error("conditional_degree_check: empty window");

  conditional_degree_result res;
  res.t_star = t_star;
  res.window_count = count;
  res.empirical_mean = sum / static_cast<double>(count);
  res.predicted = expected_degree(t_star, g.params);
  try {
    res.extrapolated = t_star > effective_cutoff::for_params(g.params).x0;
  } catch (const std::domain_error&) {
    res.extrapolated = true;  // no quantitative window exists at these parameters
  }
  return res;
}

independence_result independence_check(const model_params& p, std::size_t m,
                                       std::size_t samples, sample_seed seed) {
  if (m < 2 || m > 5)
    throw std::invalid_argument("independence_check: m must be between 2 and 5");
  if (samples < 2)
    throw std::invalid_argument("independence_check: insufficient samples");
  if (p.regime_kind() != regime::cold)
    throw std::domain_error("independence_check: defined for the cold regime only");
  if (p.vertex_count() < m)
    throw std::invalid_argument("independence_check: fewer vertices than m");

  std::vector<std::vector<double>> tracked(m, std::vector<double>(samples, 0.0));
  parallel_blocks(samples, [&](std::size_t s) {
    const graph g =
        generate_accelerated(p, sample_seed{seed.seed, chain(seed.stream, s)});
    const auto degrees = g.degree_sequence();
    for (std::size_t v = 0; v < m; ++v) tracked[v][s] = degrees[v];
  });

  independence_result res;
  res.m = m;
  res.samples = samples;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      const double rho = pearson(tracked[a], tracked[b]);
      res.correlations.push_back(rho);
      res.max_abs_correlation = std::max(res.max_abs_correlation, std::fabs(rho));
    }
  }
  return res;
}

double clustering_coefficient(const graph& g) {
  const auto adj = g.adjacency();
  double paths2 = 0.0;
  for (const auto& nb : adj) {
    const double d = static_cast<double>(nb.size());
    paths2 += d * (d - 1.0) / 2.0;
  }
  if (paths2 <= 0.0) return 0.0;

  // each triangle contributes one common neighbour to each of its three edges
  double closed = 0.0;
  for (const auto& [u, v] : g.edges) {
    const auto& a = adj[u];
    const auto& b = adj[v];
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] < b[j]) {
        ++i;
      } else if (a[i] > b[j]) {
        ++j;
      } else {
        ++closed;
        ++i;
        ++j;
      }
    }
  }
  return closed / paths2;
}

}  // namespace hrg

#include "hrg/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "hrg/analysis.hpp"
#include "hrg/generator.hpp"
#include "hrg/geometry.hpp"
#include "hrg/parallel.hpp"
#include "hrg/quadrature.hpp"
#include "hrg/sampler.hpp"
#include "hrg/stats.hpp"
#include "hrg/theory.hpp"

namespace hrg {

namespace {

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list args;
  va_start(args, f);
  std::vsnprintf(buf, sizeof buf, f, args);
  va_end(args);
  return buf;
}

// ---- criterion 1: closed-form constants vs defining integrals --------------

check_result constants_quadrature() {
  check_result c{"constants-quadrature", false, ""};
  double worst = 0.0;
  // beta > 1 family: 2 * int_0^inf dz/(1+z^beta) == pi * c_beta
  for (double beta : {1.5, 2.0, 3.0}) {
    const auto p = model_params::from_vertices(1000, 1.0, 1.0, beta);
    const double target = std::numbers::pi * regime_constants(p).c_beta;
    const double head =
        integrate([&](double z) { return 1.0 / (1.0 + std::pow(z, beta)); }, 0.0, 1.0);
    // z -> 1/w maps [1, inf) to (0, 1]; the integrand becomes w^{beta-2}/(1+w^beta)
    const double tail = integrate_singular(
        [&](double w) { return std::pow(w, beta - 2.0) / (1.0 + std::pow(w, beta)); },
        0.0, 1.0);
    worst = std::max(worst, std::fabs(2.0 * (head + tail) - target));
  }
  // beta < 1 family: (1/pi) * int_0^pi sin^{-beta}(theta/2) dtheta == c_beta
  for (double beta : {0.25, 0.5, 0.75}) {
    const auto p = model_params::from_vertices(1000, 1.0, 1.0, beta);
    const double target = regime_constants(p).c_beta;
    const double got = integrate_singular(
                           [&](double th) { return std::pow(std::sin(0.5 * th), -beta); },
                           0.0, std::numbers::pi) /
                       std::numbers::pi;
    worst = std::max(worst, std::fabs(got - target));
  }
  c.pass = worst <= 1e-8;
  c.detail = fmt("max |quadrature - closed form| = %.3g (tolerance 1e-8)", worst);
  return c;
}

// ---- criterion 2: angle-averaged probability approaches the closed form ----

check_result angle_average_asymptotics() {
  check_result c{"angle-average-asymptotics", false, ""};
  const std::pair<double, double> grid[] = {{0, 0}, {0, 5}, {2, 5},
                                            {0, 10}, {5, 10}, {2, 12}};
  double worst90 = 0.0;
  bool monotone = true;
  for (double beta : {2.0, 1.0, 0.5}) {
    for (const auto& [tu, tv] : grid) {
      double prev_err = 0.0;
      for (double radius : {30.0, 60.0, 90.0}) {
        const auto p = model_params::from_radius(radius, 1.0, 1.0, beta);
        const double ratio = angle_avg_probability_numeric(tu, tv, p) /
                             angle_avg_probability_closed(tu, tv, p);
        const double err = std::fabs(ratio - 1.0);
        if (radius > 30.0 && err > prev_err + 1e-6) monotone = false;
        prev_err = err;
        if (radius == 90.0) worst90 = std::max(worst90, err);
      }
    }
  }
  c.pass = worst90 <= 0.05 && monotone;
  c.detail = fmt("max |ratio - 1| at R=90 over 6 type pairs x 3 regimes = %.4f "
                 "(tolerance 0.05), deviation monotone in R: %s",
                 worst90, monotone ? "yes" : "no");
  return c;
}

// ---- criterion 3: sampler laws ---------------------------------------------

check_result sampler_laws() {
  check_result c{"sampler-laws", false, ""};
  const auto p6 = model_params::from_vertices(1e6, 1.0, 1.0, 2.0);
  const auto pos6 = sample_positions(p6, {301, 0});
  std::vector<double> radii(pos6.size());
  for (std::size_t i = 0; i < pos6.size(); ++i) radii[i] = pos6[i].r;
  const double ks = ks_statistic(std::move(radii),
                                 [&](double r) { return radial_cdf(r, p6); });
  const double ks_crit = ks_critical_1pct(pos6.size());

  const auto p5 = model_params::from_vertices(1e5, 1.0, 1.0, 2.0);
  const auto pos5 = sample_positions(p5, {302, 0});
  std::vector<double> types(pos5.size());
  for (std::size_t i = 0; i < pos5.size(); ++i) types[i] = pos5[i].t;
  const double type_dev = ks_statistic(
      std::move(types), [&](double x) { return 1.0 - std::exp(-p5.alpha * x); });
  const double band = 3.0 / std::sqrt(1e5);

  c.pass = ks <= ks_crit && type_dev <= band;
  c.detail = fmt("radial KS %.5f vs 1%% critical %.5f at n=1e6; "
                 "type-law deviation %.5f vs band %.5f at n=1e5",
                 ks, ks_crit, type_dev, band);
  return c;
}

// ---- criterion 4: per-pair exactness of both generators --------------------

check_result generator_exactness() {
  check_result c{"generator-exactness", false, ""};
  constexpr std::size_t n = 50;
  constexpr std::size_t n_pairs = n * (n - 1) / 2;
  constexpr std::uint64_t trials = 100000;
  constexpr std::uint64_t fixture_seed = 7;
  constexpr std::uint64_t master_seed = 11;
  const double family_conf = 0.999;
  const double equiv_alpha = 0.01 / static_cast<double>(n_pairs);

  const auto p = model_params::from_vertices(n, 1.0, 1.0, 2.0);
  const auto positions = sample_positions(p, {fixture_seed, 0});

  auto pair_index = [&](std::uint32_t i, std::uint32_t j) {
    return static_cast<std::size_t>(i) * (2 * n - i - 1) / 2 + (j - i - 1);
  };
  std::vector<double> prob(n_pairs);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      prob[pair_index(i, j)] =
          connection_probability(exact_distance(positions[i], positions[j], p), p);

  const banded_sampler sampler(p, positions);

  constexpr std::size_t seeds_per_block = 500;
  constexpr std::size_t n_blocks = trials / seeds_per_block;
  auto tally = [&](bool banded) {
    std::vector<std::vector<std::uint32_t>> parts(
        n_blocks, std::vector<std::uint32_t>(n_pairs, 0));
    parallel_blocks(n_blocks, [&](std::size_t blk) {
      auto& counts = parts[blk];
      for (std::size_t s = blk * seeds_per_block; s < (blk + 1) * seeds_per_block; ++s) {
        const sample_seed draw{master_seed, s};
        const edge_list edges = banded
                                    ? sampler.sample_edges(draw, false)
                                    : generate_naive(p, positions, draw).edges;
        for (const auto& [u, v] : edges) ++counts[pair_index(u, v)];
      }
    });
    std::vector<std::uint64_t> total(n_pairs, 0);
    for (const auto& part : parts)
      for (std::size_t k = 0; k < n_pairs; ++k) total[k] += part[k];
    return total;
  };
  const auto naive_counts = tally(false);
  const auto banded_counts = tally(true);

  std::size_t outside_naive = 0, outside_banded = 0;
  double min_equiv_p = 1.0;
  for (std::size_t k = 0; k < n_pairs; ++k) {
    const count_band band = binomial_band(trials, prob[k], family_conf);
    if (!band.contains(naive_counts[k])) ++outside_naive;
    if (!band.contains(banded_counts[k])) ++outside_banded;
    const auto eq = two_proportion_test(naive_counts[k], trials, banded_counts[k], trials);
    min_equiv_p = std::min(min_equiv_p, eq.p_value);
  }
  const bool equiv_ok = min_equiv_p >= equiv_alpha;
  c.pass = outside_naive == 0 && outside_banded == 0 && equiv_ok;
  c.detail = fmt("n=50, 1e5 seeds: pairs outside 99.9%% band: pairwise=%zu banded=%zu; "
                 "min equivalence p=%.2e vs Bonferroni cut %.2e",
                 outside_naive, outside_banded, min_equiv_p, equiv_alpha);
  return c;
}

// ---- criterion 5: cold-regime degree laws ----------------------------------

check_result cold_regime_degrees() {
  check_result c{"cold-regime-degrees", false, ""};
  const auto p = model_params::from_vertices(1e5, 1.0, 1.0, 2.0);
  const graph g = generate_accelerated(p, {505, 0});
  const degree_report rep = analyze_degrees(g, 10, 30);

  const bool accel = g.kind == generator_kind::accelerated;
  const bool mean_ok = std::fabs(rep.mean_degree - 4.0) <= 0.6;
  const bool mle_ok = rep.tail_fit && std::fabs(rep.tail_fit->gamma - 3.0) <= 0.3;
  const bool tv_ok = rep.tv_to_mixed_poisson && *rep.tv_to_mixed_poisson <= 0.05;

  // convergence proxy: median TV over 5 replicates falls as n grows
  const double sizes[] = {1e3, 1e4, 1e5};
  double medians[3] = {0, 0, 0};
  for (int si = 0; si < 3; ++si) {
    const auto ps = model_params::from_vertices(sizes[si], 1.0, 1.0, 2.0);
    std::vector<double> tvs(5);
    for (std::size_t r = 0; r < 5; ++r) {  // each draw parallelizes internally
      const graph gr = generate_accelerated(
          ps, {505, chain(100 + static_cast<std::uint64_t>(si), r)});
      tvs[r] = *analyze_degrees(gr, 10, 30).tv_to_mixed_poisson;
    }
    medians[si] = median_of(tvs);
  }
  const bool tv_falls = medians[0] > medians[1] && medians[1] > medians[2];

  c.pass = accel && mean_ok && mle_ok && tv_ok && tv_falls;
  c.detail = fmt("accelerated n=1e5: mean %.3f (target 4 +- 0.6), "
                 "tail exponent %.3f (target 3 +- 0.3), TV %.4f (<= 0.05); "
                 "median TV %.4f > %.4f > %.4f across n=1e3,1e4,1e5: %s",
                 rep.mean_degree, rep.tail_fit ? rep.tail_fit->gamma : 0.0,
                 rep.tv_to_mixed_poisson ? *rep.tv_to_mixed_poisson : 1.0,
                 medians[0], medians[1], medians[2], tv_falls ? "yes" : "no");
  return c;
}

// ---- criteria 6 and 7: mean-degree growth laws -----------------------------

std::vector<double> size_grid() {
  std::vector<double> grid;
  for (int e = 10; e <= 16; ++e) grid.push_back(std::pow(2.0, e));
  return grid;
}

check_result critical_growth() {
  check_result c{"critical-regime-growth", false, ""};
  const auto base = model_params::from_vertices(1024, 1.0, 1.0, 1.0);
  const auto res = scaling_experiment(base, size_grid(), 5, {606, 0});
  const auto& fit = res.mean_vs_log_n;
  c.pass = fit.r2 >= 0.98 && fit.slope > 0.0;
  c.detail = fmt("mean degree vs ln n over 2^10..2^16, 5 replicates: "
                 "slope %.3f (>0), R^2 %.5f (>= 0.98)",
                 fit.slope, fit.r2);
  return c;
}

check_result hot_growth() {
  check_result c{"hot-regime-growth", false, ""};
  const auto base = model_params::from_vertices(1024, 1.0, 1.0, 0.5);
  const auto res = scaling_experiment(base, size_grid(), 5, {707, 0});
  const auto& fit = res.log_mean_vs_log_n;
  c.pass = std::fabs(fit.slope - 0.5) <= 0.05;
  c.detail = fmt("ln mean degree vs ln n over 2^10..2^16, 5 replicates: "
                 "slope %.4f (target 0.5 +- 0.05), R^2 %.5f",
                 fit.slope, fit.r2);
  return c;
}

// ---- criterion 8: asymptotic independence of fixed-vertex degrees ----------

check_result degree_independence() {
  check_result c{"degree-independence", false, ""};
  const auto p = model_params::from_vertices(1e4, 1.0, 1.0, 2.0);
  const auto res = independence_check(p, 2, 500, {808, 0});
  c.pass = res.max_abs_correlation <= 0.1;
  c.detail = fmt("two tracked vertices, 500 replicate graphs at n=1e4: "
                 "max |pearson| = %.4f (tolerance 0.1)",
                 res.max_abs_correlation);
  return c;
}

// ---- criterion 9: limiting pmf normalization and tail ----------------------

check_result mixed_poisson_law() {
  check_result c{"mixed-poisson-law", false, ""};
  const auto p = model_params::from_vertices(1e5, 1.0, 1.0, 2.0);
  double head = 0.0;
  for (unsigned k = 0; k <= 500; ++k) head += mixed_poisson_pmf(k, p);
  const double total = head + mixed_poisson_tail(500, p);
  const double norm_err = std::fabs(total - 1.0);

  // k^(2a/z+1) * pmf(k) approaches (2a/z) K^(2a/z) = 8 at these parameters
  const double scaled =
      std::pow(200.0, 3.0) * mixed_poisson_pmf(200, p) / 8.0;
  const double tail_err = std::fabs(scaled - 1.0);

  c.pass = norm_err <= 1e-8 && tail_err <= 0.05;
  c.detail = fmt("sum over k<=500 plus integrated tail deviates from 1 by %.2e "
                 "(tolerance 1e-8); k^3-scaled pmf at k=200 off the constant by %.4f "
                 "(tolerance 0.05)",
                 norm_err, tail_err);
  return c;
}

// ---- criterion 10: accelerated-path performance ----------------------------

check_result accelerated_performance() {
  check_result c{"accelerated-performance", false, ""};
  const auto p = model_params::from_vertices(1e5, 1.0, 1.0, 2.0);
  const auto t0 = std::chrono::steady_clock::now();
  const graph g = generate_accelerated(p, {1010, 0});
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const double edges = static_cast<double>(g.edges.size());
  const bool accel = g.kind == generator_kind::accelerated;
  c.pass = accel && secs < 10.0 && std::fabs(edges - 200000.0) <= 20000.0;
  c.detail = fmt("n=1e5 accelerated: %.2f s (< 10 s), %zu edges "
                 "(200000 +- 20000), path used: %s",
                 secs, g.edges.size(), accel ? "banded" : "pairwise fallback");
  return c;
}

}  // namespace

std::vector<check_result> acceptance_battery(
    const std::vector<std::string>& names,
    const std::function<void(const check_result&)>& on_result) {
  using criterion_fn = check_result (*)();
  static constexpr std::pair<const char*, criterion_fn> criteria[] = {
      {"constants-quadrature", constants_quadrature},
      {"angle-average-asymptotics", angle_average_asymptotics},
      {"sampler-laws", sampler_laws},
      {"generator-exactness", generator_exactness},
      {"cold-regime-degrees", cold_regime_degrees},
      {"critical-regime-growth", critical_growth},
      {"hot-regime-growth", hot_growth},
      {"degree-independence", degree_independence},
      {"mixed-poisson-law", mixed_poisson_law},
      {"accelerated-performance", accelerated_performance},
  };
  std::vector<check_result> results;
  for (const auto& [name, fn] : criteria) {
    if (!names.empty() &&
        std::find(names.begin(), names.end(), name) == names.end())
      continue;
    results.push_back(fn());
    if (on_result) on_result(results.back());
  }
  return results;
}

// ---- user-facing validation at arbitrary parameters -------------------------

namespace {

double predicted_mean_degree(const model_params& p) {
  // average the closed-form expected degree over the exact type density
  const double denom = std::cosh(p.alpha * p.radius) - 1.0;
  return integrate(
      [&](double t) {
        const double density = p.alpha * std::sinh(p.alpha * (p.radius - t)) / denom;
        return expected_degree(t, p) * density;
      },
      0.0, p.radius, 1e-9);
}

}  // namespace

std::vector<check_result> validate_battery(const model_params& p, sample_seed seed) {
  if (!p.theory_valid())
    throw std::domain_error(
        "validate: the degree theory requires zeta/alpha < 2; got zeta/alpha >= 2");
  regime_constants(p);  // surfaces hot-regime domain violations before any work

  std::vector<check_result> results;
  const auto positions = sample_positions(p, seed);
  const std::size_t n = positions.size();

  {
    check_result c{"radial-distribution", false, ""};
    std::vector<double> radii(n);
    for (std::size_t i = 0; i < n; ++i) radii[i] = positions[i].r;
    const double ks =
        ks_statistic(std::move(radii), [&](double r) { return radial_cdf(r, p); });
    const double crit = ks_critical_1pct(n);
    c.pass = ks <= crit;
    c.detail = fmt("KS %.5f vs 1%% critical %.5f over n=%zu radii", ks, crit, n);
    results.push_back(c);
  }
  {
    check_result c{"type-law", false, ""};
    std::vector<double> types(n);
    for (std::size_t i = 0; i < n; ++i) types[i] = positions[i].t;
    const double dev = ks_statistic(
        std::move(types), [&](double x) { return 1.0 - std::exp(-p.alpha * x); });
    const double band = 3.0 / std::sqrt(static_cast<double>(n));
    c.pass = dev <= band;
    c.detail = fmt("max deviation from the exponential type law %.5f vs band %.5f",
                   dev, band);
    results.push_back(c);
  }

  const graph g = generate_accelerated(p, positions, seed);
  {
    check_result c{"mean-degree", false, ""};
    const double observed =
        2.0 * static_cast<double>(g.edges.size()) / static_cast<double>(n);
    const double predicted = predicted_mean_degree(p);
    c.pass = predicted > 0.0 && std::fabs(observed / predicted - 1.0) <= 0.25;
    c.detail = fmt("observed %.3f vs predicted %.3f (tolerance 25%%)", observed,
                   predicted);
    results.push_back(c);
  }

  switch (p.regime_kind()) {
    case regime::cold: {
      const degree_report rep = analyze_degrees(g, 10, 30);
      check_result c{"tail-exponent", false, ""};
      const double target = 2.0 * p.alpha / p.zeta + 1.0;
      if (rep.tail_fit) {
        c.pass = std::fabs(rep.tail_fit->gamma - target) <= 0.5;
        c.detail = fmt("MLE %.3f vs %.3f (tolerance 0.5), %zu tail samples",
                       rep.tail_fit->gamma, target, rep.tail_fit->n_tail);
      } else {
        c.pass = true;
        c.detail = "not evaluated: " + rep.tail_note + " (needs 100 vertices of degree >= 10)";
      }
      results.push_back(c);

      check_result tv{"degree-law-tv", false, ""};
      if (n >= 10000 && rep.tv_to_mixed_poisson) {
        tv.pass = *rep.tv_to_mixed_poisson <= 0.1;
        tv.detail = fmt("TV to the limiting pmf %.4f (tolerance 0.1, k <= %u)",
                        *rep.tv_to_mixed_poisson, rep.k_cap);
      } else {
        tv.pass = true;
        tv.detail = "not evaluated: needs n >= 10000";
      }
      results.push_back(tv);
      break;
    }
    case regime::critical:
    case regime::hot: {
      check_result c{"conditional-degree", false, ""};
      try {
        const auto res = conditional_degree_check(g, 0.0, 0.5);
        if (res.window_count >= 50) {
          const double ratio = res.empirical_mean / res.predicted;
          c.pass = ratio >= 0.8 && ratio <= 1.25;
          c.detail = fmt("mean degree of %zu low-type vertices: %.2f vs predicted %.2f",
                         res.window_count, res.empirical_mean, res.predicted);
        } else {
          c.pass = true;
          c.detail = fmt("not evaluated: only %zu vertices in the type window",
                         res.window_count);
        }
      } catch (const std::domain_error&) {
        c.pass = true;
        c.detail = "not evaluated: empty type window";
      }
      results.push_back(c);
      break;
    }
  }

  if (p.disc) {
    check_result c{"disc-threshold", false, ""};
    bool ok = true;
    std::size_t checked = 0;
    for (const auto& [u, v] : g.edges) {
      if (exact_distance(g.positions[u], g.positions[v], p) >= p.radius) {
        ok = false;
        break;
      }
      if (++checked == 100000) break;
    }
    c.pass = ok;
    c.detail = fmt("checked %zu edges for d < R: %s", checked, ok ? "all inside" : "violation");
    results.push_back(c);
  }

  {
    check_result c{"clustering-range", false, ""};
    const double cc = clustering_coefficient(g);
    c.pass = cc >= 0.0 && cc <= 1.0;
    c.detail = fmt("global transitivity %.4f", cc);
    results.push_back(c);
  }
  return results;
}

}  // namespace hrg

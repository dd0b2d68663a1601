#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "hrg/analysis.hpp"
#include "hrg/generator.hpp"
#include "hrg/graph.hpp"
#include "hrg/stats.hpp"
#include "hrg/theory.hpp"

using namespace hrg;

namespace {

graph tiny_graph(std::size_t n, edge_list edges) {
  const auto p = model_params::from_vertices(static_cast<double>(n), 1.0, 1.0, 2.0);
  std::vector<vertex_position> pos(n);
  for (std::size_t i = 0; i < n; ++i)
    pos[i] = vertex_position(p.radius * (i + 1) / (n + 1),
                             6.0 * (i + 1) / (n + 1), p);
  return graph(p, std::move(pos), std::move(edges), 0, generator_kind::naive);
}

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("clustering coefficient on hand-built graphs") {
  CHECK(clustering_coefficient(tiny_graph(3, {{0, 1}, {0, 2}, {1, 2}})) ==
        doctest::Approx(1.0));
  CHECK(clustering_coefficient(tiny_graph(3, {{0, 1}, {1, 2}})) == 0.0);
  CHECK(clustering_coefficient(tiny_graph(4, {{0, 1}, {0, 2}, {0, 3}})) == 0.0);
  CHECK(clustering_coefficient(tiny_graph(3, {})) == 0.0);
  // one triangle plus a pendant: 3 closed out of 5 paths
  CHECK(clustering_coefficient(tiny_graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}})) ==
        doctest::Approx(3.0 / 5.0));
}

TEST_CASE("degree reports flag thin tails instead of fitting them") {
  const graph g = tiny_graph(5, {{0, 1}, {1, 2}, {2, 3}});
  const degree_report rep = analyze_degrees(g);
  CHECK(rep.n == 5);
  CHECK(rep.mean_degree == doctest::Approx(6.0 / 5.0));
  CHECK_FALSE(rep.tail_fit.has_value());
  CHECK(!rep.tail_note.empty());
  REQUIRE(rep.tv_to_mixed_poisson.has_value());
  CHECK(*rep.tv_to_mixed_poisson >= 0.0);
  CHECK(*rep.tv_to_mixed_poisson <= 1.0);
  // histogram is sparse and sums to n
  std::uint64_t total = 0;
  for (const auto& [k, c] : rep.histogram) total += c;
  CHECK(total == 5);
}

TEST_CASE("tail MLE recovers the exponent of synthetic limit-law samples") {
  const auto p = model_params::from_vertices(20000, 1.0, 1.0, 2.0);
  const auto f = mixing_for(p);
  std::mt19937_64 rng(424242);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<std::uint32_t> degrees(20000);
  for (auto& d : degrees) {
    std::poisson_distribution<std::uint32_t> pois(f.quantile(unif(rng)));
    d = pois(rng);
  }
  const degree_report rep = analyze_degree_sequence(degrees, p, 20, 30);
  REQUIRE(rep.tail_fit.has_value());
  // population MLE at this truncation sits at 3.07; two standard errors of
  // the ~200-sample tail comfortably cover the target 3
  CHECK(std::fabs(rep.tail_fit->gamma - 3.0) <= 0.45);
  CHECK(rep.tail_fit->std_error > 0.03);
  CHECK(rep.tail_fit->std_error < 0.40);
  CHECK(rep.tail_fit->k_min == 20);
  REQUIRE(rep.tv_to_mixed_poisson.has_value());
  CHECK(*rep.tv_to_mixed_poisson <= 0.05);
}

TEST_CASE("conditional degree check validates its window") {
  const graph g = tiny_graph(4, {{0, 1}});
  CHECK_THROWS_AS(conditional_degree_check(g, 0.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(conditional_degree_check(g, 1e9, 0.1), std::domain_error);
}

TEST_CASE("low-type vertices have the predicted mean degree") {
  const auto p = model_params::from_vertices(20000, 1.0, 1.0, 2.0);
  const graph g = generate_accelerated(p, {99, 0});
  const auto res = conditional_degree_check(g, 0.0, 0.5);
  CHECK(res.window_count > 5000);
  CHECK_FALSE(res.extrapolated);
  CHECK(res.predicted == doctest::Approx(2.0).epsilon(1e-3));
  // the window averages e^{t/2} growth over [0, 0.5], a ~13% lift over t = 0
  const double ratio = res.empirical_mean / res.predicted;
  CHECK(ratio > 0.95);
  CHECK(ratio < 1.35);
}

TEST_CASE("independence check validates its arguments") {
  const auto p = model_params::from_vertices(500, 1.0, 1.0, 2.0);
  CHECK_THROWS_AS(independence_check(p, 1, 10, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(independence_check(p, 6, 10, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(independence_check(p, 2, 1, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(
      independence_check(model_params::from_vertices(500, 1, 1, 0.5), 2, 10, {1, 0}),
      std::domain_error);
  CHECK_THROWS_AS(
      independence_check(model_params::from_vertices(3, 1, 1, 2), 4, 10, {1, 0}),
      std::invalid_argument);
}

TEST_CASE("tracked degrees decorrelate across replicate graphs") {
  const auto p = model_params::from_vertices(500, 1.0, 1.0, 2.0);
  const auto res = independence_check(p, 3, 40, {777, 0});
  CHECK(res.correlations.size() == 3);
  CHECK(res.max_abs_correlation <= 0.6);
}

TEST_CASE("scaling experiment validates the grid") {
  const auto base = model_params::from_vertices(256, 1.0, 1.0, 2.0);
  CHECK_THROWS_AS(scaling_experiment(base, {256, 512, 1024}, 2, {1, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(scaling_experiment(base, {512, 256, 1024, 2048}, 2, {1, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(scaling_experiment(base, {256, 512, 1024, 2048}, 0, {1, 0}),
                  std::invalid_argument);
}

TEST_CASE("cold scaling keeps the mean degree near its constant limit") {
  const auto base = model_params::from_vertices(256, 1.0, 1.0, 2.0);
  const auto res = scaling_experiment(base, {256, 512, 1024, 2048}, 3, {55, 0});
  REQUIRE(res.points.size() == 4);
  for (const auto& pt : res.points) {
    CHECK(pt.mean_degree > 1.5);
    CHECK(pt.mean_degree < 6.0);
    CHECK(pt.ci_half_width >= 0.0);
  }
  // constant growth: the ln n fit stays nearly flat
  CHECK(std::fabs(res.mean_vs_log_n.slope) < 0.6);
}

// ---- statistics toolkit ------------------------------------------------------

TEST_CASE("ks statistic evaluates both sides of each step") {
  CHECK(ks_statistic({0.5}, [](double x) { return x; }) == doctest::Approx(0.5));
  CHECK(ks_statistic({0.25, 0.75}, [](double x) { return x; }) ==
        doctest::Approx(0.25));
  CHECK(ks_critical_1pct(10000) == doctest::Approx(1.6276 / 100.0));
}

TEST_CASE("hurwitz zeta satisfies the shift recurrence and classic values") {
  CHECK(hurwitz_zeta(2.0, 1.0) ==
        doctest::Approx(std::numbers::pi * std::numbers::pi / 6.0).epsilon(1e-13));
  CHECK(hurwitz_zeta(3.0, 1.0) == doctest::Approx(1.2020569031595943).epsilon(1e-13));
  for (double s : {1.5, 2.0, 3.7}) {
    for (double a : {1.0, 2.5, 10.0}) {
      CHECK(hurwitz_zeta(s, a) - hurwitz_zeta(s, a + 1.0) ==
            doctest::Approx(std::pow(a, -s)).epsilon(1e-12));
    }
  }
}

TEST_CASE("binomial bands bracket the centre and respect the edges") {
  const auto band = binomial_band(10000, 0.5, 0.99);
  CHECK(band.contains(5000));
  CHECK(band.lo > 4800);
  CHECK(band.hi < 5200);
  CHECK_FALSE(band.contains(4800));
  const auto zero = binomial_band(100, 0.0, 0.999);
  CHECK(zero.lo == 0);
  CHECK(zero.hi == 0);
  const auto one = binomial_band(100, 1.0, 0.999);
  CHECK(one.lo == 100);
  CHECK(one.hi == 100);
}

TEST_CASE("two-proportion test is calibrated at the extremes") {
  const auto same = two_proportion_test(500, 1000, 500, 1000);
  CHECK(same.z == 0.0);
  CHECK(same.p_value == 1.0);
  const auto far = two_proportion_test(900, 1000, 100, 1000);
  CHECK(far.p_value < 1e-10);
  const auto empty = two_proportion_test(0, 1000, 0, 1000);
  CHECK(empty.p_value == 1.0);
}

TEST_CASE("linear fits recover exact lines") {
  const std::vector<double> x{1, 2, 3, 4, 5};
  std::vector<double> y;
  for (double v : x) y.push_back(3.0 * v + 1.0);
  const auto fit = fit_line(x, y);
  CHECK(fit.slope == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(fit.intercept == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fit.r2 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("pearson correlation at its extremes") {
  const std::vector<double> x{1, 2, 3, 4};
  CHECK(pearson(x, {2, 4, 6, 8}) == doctest::Approx(1.0));
  CHECK(pearson(x, {8, 6, 4, 2}) == doctest::Approx(-1.0));
  CHECK(pearson(x, {5, 5, 5, 5}) == 0.0);
}

TEST_CASE("total variation distance of padded histograms") {
  CHECK(total_variation({0.5, 0.5}, {0.5, 0.5}) == 0.0);
  CHECK(total_variation({1.0, 0.0}, {0.0, 1.0}) == doctest::Approx(1.0));
  CHECK(total_variation({0.5, 0.5}, {0.5, 0.25, 0.25}) == doctest::Approx(0.25));
}

TEST_CASE("chi-square helpers behave at the boundaries") {
  CHECK(chi_square_pvalue(0.0, 5) == doctest::Approx(1.0));
  CHECK(chi_square_pvalue(1000.0, 5) < 1e-12);
  const std::vector<std::uint64_t> obs{10, 20, 30};
  const std::vector<double> exp{20.0, 20.0, 20.0};
  CHECK(chi_square_stat(obs, exp) == doctest::Approx(10.0));
}

TEST_CASE("power tail fit validates its inputs") {
  CHECK_THROWS_AS(fit_power_tail({5, 6, 7}, 0), std::invalid_argument);
  CHECK_THROWS_AS(fit_power_tail({50}, 10), std::invalid_argument);
  CHECK_THROWS_AS(fit_power_tail({1, 2, 3}, 10), std::invalid_argument);
}

TEST_CASE("location summaries") {
  CHECK(mean_of({1, 2, 3, 4}) == doctest::Approx(2.5));
  CHECK(median_of({5, 1, 3}) == doctest::Approx(3.0));
  CHECK(median_of({4, 1, 3, 2}) == doctest::Approx(2.5));
}

}  // TEST_SUITE

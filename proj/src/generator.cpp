#include "hrg/generator.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "hrg/parallel.hpp"
#include "hrg/sampler.hpp"

namespace hrg {
namespace {

constexpr std::size_t cell_grain = 8;  // target occupancy of one angular cell
constexpr std::size_t max_cells = 4096;
// candidate indices are manipulated in doubles, so the padded candidate space
// of a single class must stay exactly representable
constexpr double max_candidate_space = 9.0e15;

void require_generable(const model_params& p, std::size_t n_positions) {
  if (p.vertex_count() != n_positions)
    throw std::invalid_argument("position count does not match the parameter set");
  if (n_positions > 0xffffffffULL)
    throw std::domain_error("generation supports at most 2^32 - 1 vertices");
}

// triangular index y = i(i-1)/2 + j with 0 <= j < i; returns i
std::uint32_t tri_row(std::uint64_t y) {
  auto i = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(y))) / 2.0);
  while (i > 1 && i * (i - 1) / 2 > y) --i;
  while ((i + 1) * i / 2 <= y) ++i;
  return static_cast<std::uint32_t>(i);
}

}  // namespace

graph generate_naive(const model_params& p, std::vector<vertex_position> positions,
                     sample_seed seed) {
  require_generable(p, positions.size());
  const std::size_t n = positions.size();
  const std::uint64_t edge_root = root_key(seed, stream_tag::edge);

  constexpr std::size_t rows_per_block = 128;
  const std::size_t n_rows = n > 0 ? n - 1 : 0;
  const std::size_t n_blocks = (n_rows + rows_per_block - 1) / rows_per_block;
  std::vector<edge_list> parts(n_blocks);

  parallel_blocks(n_blocks, [&](std::size_t blk) {
    const std::size_t lo = blk * rows_per_block;
    const std::size_t hi = std::min(lo + rows_per_block, n_rows);
    edge_list& out = parts[blk];
    for (std::size_t i = lo; i < hi; ++i) {
      const std::uint64_t row_key = chain(edge_root, i);
      for (std::size_t j = i + 1; j < n; ++j) {
        const double d = exact_distance(positions[i], positions[j], p);
        bool connect;
        if (p.disc) {
          connect = d < p.radius;
        } else {
          connect = to_unit(stream_at(row_key, j)) < connection_probability(d, p);
        }
        if (connect)
          out.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
      }
    }
  });

  edge_list edges;
  std::size_t total = 0;
  for (const auto& part : parts) total += part.size();
  edges.reserve(total);
  for (auto& part : parts) edges.insert(edges.end(), part.begin(), part.end());

  return graph(p, std::move(positions), std::move(edges), seed.seed,
               p.disc ? generator_kind::disc : generator_kind::naive);
}

graph generate_naive(const model_params& p, sample_seed seed) {
  return generate_naive(p, sample_positions(p, seed), seed);
}

banded_sampler::banded_sampler(const model_params& p,
                               const std::vector<vertex_position>& positions)
    : params_(p) {
  require_generable(p, positions.size());
  band_width_ = std::numbers::ln2 / p.zeta;
  const auto n_bands = static_cast<std::size_t>(p.radius / band_width_) + 1;
  bands_.assign(n_bands, {});

  for (std::size_t i = 0; i < positions.size(); ++i) {
    const double t = positions[i].t;
    const std::size_t b =
        t <= 0.0 ? 0
                 : std::min(static_cast<std::size_t>(t / band_width_), n_bands - 1);
    bands_[b].theta.push_back(positions[i].theta);
    bands_[b].id.push_back(static_cast<std::uint32_t>(i));
  }

  for (auto& bd : bands_) {
    if (bd.size() == 0) continue;
    std::vector<std::size_t> order(bd.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return bd.theta[a] < bd.theta[b] || (bd.theta[a] == bd.theta[b] && bd.id[a] < bd.id[b]);
    });

    band sorted;
    sorted.theta.reserve(bd.size());
    sorted.id.reserve(bd.size());
    sorted.ezr.reserve(bd.size());
    sorted.emzr.reserve(bd.size());
    sorted.shr.reserve(bd.size());
    sorted.r_lo = p.radius;
    sorted.r_hi = 0.0;
    for (std::size_t idx : order) {
      const double r = positions[bd.id[idx]].r;
      sorted.theta.push_back(bd.theta[idx]);
      sorted.id.push_back(bd.id[idx]);
      const double e = std::exp(p.zeta * r);
      sorted.ezr.push_back(e);
      sorted.emzr.push_back(1.0 / e);
      sorted.shr.push_back(std::sinh(p.zeta * r));
      sorted.r_lo = std::min(sorted.r_lo, r);
      sorted.r_hi = std::max(sorted.r_hi, r);
    }
    sorted.sinh_r_lo = std::sinh(p.zeta * sorted.r_lo);
    bd = std::move(sorted);
  }

  for (std::uint32_t b1 = 0; b1 < bands_.size(); ++b1) {
    if (bands_[b1].size() == 0) continue;
    for (std::uint32_t b2 = b1; b2 < bands_.size(); ++b2) {
      if (bands_[b2].size() == 0) continue;
      jobs_.push_back({b1, b2});
    }
  }
  layouts_.reserve(jobs_.size());
  for (const auto& job : jobs_) layouts_.push_back(make_layout(job));

  expected_tests_ = 0.0;
  for (std::size_t ji = 0; ji < jobs_.size(); ++ji)
    expected_tests_ += envelope_mass(ji);
}

banded_sampler::cell_layout banded_sampler::make_layout(const pair_job& job) const {
  const band& a = bands_[job.b1];
  const band& b = bands_[job.b2];
  cell_layout l;
  const std::size_t base = std::min(a.size(), b.size()) / cell_grain;
  l.m = base == 0 ? 1 : std::min(std::bit_floor(base), max_cells);
  l.delta = 2.0 * std::numbers::pi / static_cast<double>(l.m);

  auto offsets = [&](const band& bd) {
    std::vector<std::uint32_t> off(l.m + 1, 0);
    std::size_t idx = 0;
    for (std::size_t c = 1; c < l.m; ++c) {
      const double bound = static_cast<double>(c) * l.delta;
      while (idx < bd.size() && bd.theta[idx] < bound) ++idx;
      off[c] = static_cast<std::uint32_t>(idx);
    }
    off[l.m] = static_cast<std::uint32_t>(bd.size());
    return off;
  };
  auto max_occupancy = [&](const std::vector<std::uint32_t>& off) {
    std::uint32_t cap = 0;
    for (std::size_t c = 0; c < l.m; ++c) cap = std::max(cap, off[c + 1] - off[c]);
    return cap;
  };

  l.off1 = offsets(a);
  l.off2 = job.b1 == job.b2 ? l.off1 : offsets(b);
  l.cap1 = max_occupancy(l.off1);
  l.cap2 = job.b1 == job.b2 ? l.cap1 : max_occupancy(l.off2);
  return l;
}

banded_sampler::category_space banded_sampler::make_category(const pair_job& job,
                                                             const cell_layout& l,
                                                             std::size_t k) const {
  const band& a = bands_[job.b1];
  const band& b = bands_[job.b2];
  const bool same = job.b1 == job.b2;

  category_space cs;
  double theta_min = 0.0;
  if (k > 0) {
    const double fwd = static_cast<double>(k - 1) * l.delta;
    const double bwd = 2.0 * std::numbers::pi - static_cast<double>(k + 1) * l.delta;
    theta_min = std::max(0.0, std::min(fwd, bwd));
  }
  const double dr_min = std::max(0.0, std::max(a.r_lo - b.r_hi, b.r_lo - a.r_hi));
  const double s = std::sin(theta_min / 2.0);
  const double arg =
      std::cosh(params_.zeta * dr_min) + 2.0 * a.sinh_r_lo * b.sinh_r_lo * s * s;
  const double d_lb = std::acosh(std::max(arg, 1.0)) / params_.zeta;
  cs.p_bar = connection_probability(d_lb, params_);

  double dspan, dcrange;
  if (same && k == 0) {
    cs.triangular = true;
    dspan = 0.5 * static_cast<double>(l.cap1) * static_cast<double>(l.cap1 - 1);
    dcrange = static_cast<double>(l.m);
  } else {
    cs.triangular = false;
    dspan = static_cast<double>(l.cap1) * static_cast<double>(l.cap2);
    dcrange = same && k == l.m / 2 ? static_cast<double>(l.m / 2)
                                   : static_cast<double>(l.m);
  }
  if (dspan * dcrange > max_candidate_space)
    throw std::logic_error("angular cells too uneven: candidate space exceeds exact range");
  cs.span = static_cast<std::uint64_t>(dspan);
  cs.crange = static_cast<std::uint64_t>(dcrange);
  cs.total = cs.span * cs.crange;
  return cs;
}

double banded_sampler::envelope_mass(std::size_t job_index) const {
  const pair_job& job = jobs_[job_index];
  const cell_layout& l = layouts_[job_index];
  const std::size_t k_max = job.b1 == job.b2 ? l.m / 2 : l.m - 1;
  double mass = 0.0;
  for (std::size_t k = 0; k <= k_max; ++k) {
    const category_space cs = make_category(job, l, k);
    mass += cs.p_bar * static_cast<double>(cs.total) + 1.0;
  }
  return mass;
}

void banded_sampler::run_band_pair(std::size_t job_index, std::uint64_t edge_key,
                                   const edge_sink& sink) const {
  const pair_job& job = jobs_[job_index];
  const band& a = bands_[job.b1];
  const band& b = bands_[job.b2];
  const cell_layout& l = layouts_[job_index];
  const std::size_t k_max = job.b1 == job.b2 ? l.m / 2 : l.m - 1;
  const double zeta = params_.zeta;

  for (std::size_t k = 0; k <= k_max; ++k) {
    const category_space cs = make_category(job, l, k);
    if (cs.total == 0 || cs.p_bar <= 0.0) continue;

    // decode a padded candidate index; returns false for padding holes
    auto decode = [&](std::uint64_t x, std::size_t& ui, std::size_t& vi) {
      const std::uint64_t c = x / cs.span;
      const std::uint64_t rem = x % cs.span;
      if (cs.triangular) {
        const std::uint32_t i = tri_row(rem);
        const std::uint32_t j = static_cast<std::uint32_t>(
            rem - static_cast<std::uint64_t>(i) * (i - 1) / 2);
        if (l.off1[c] + i >= l.off1[c + 1]) return false;
        ui = l.off1[c] + i;
        vi = l.off1[c] + j;
        return true;
      }
      const std::uint64_t c2 = (c + k) & (l.m - 1);
      const auto i = static_cast<std::uint32_t>(rem / l.cap2);
      const auto j = static_cast<std::uint32_t>(rem % l.cap2);
      if (l.off1[c] + i >= l.off1[c + 1]) return false;
      if (l.off2[c2] + j >= l.off2[c2 + 1]) return false;
      ui = l.off1[c] + i;
      vi = l.off2[c2] + j;
      return true;
    };

    auto pair_distance = [&](std::size_t ui, std::size_t vi) {
      const double ang = rel_angle(a.theta[ui], b.theta[vi]);
      const double sh = std::sin(ang / 2.0);
      const double arg = 0.5 * (a.ezr[ui] * b.emzr[vi] + a.emzr[ui] * b.ezr[vi]) +
                         2.0 * a.shr[ui] * b.shr[vi] * sh * sh;
      return std::acosh(std::max(arg, 1.0)) / zeta;
    };

    auto emit = [&](std::size_t ui, std::size_t vi) {
      const std::uint32_t ia = a.id[ui];
      const std::uint32_t ib = b.id[vi];
      sink(std::min(ia, ib), std::max(ia, ib));
    };

    if (params_.disc) {
      // hard threshold: the class is scanned deterministically, no randomness
      for (std::uint64_t x = 0; x < cs.total; ++x) {
        std::size_t ui, vi;
        if (!decode(x, ui, vi)) continue;
        if (pair_distance(ui, vi) < params_.radius) emit(ui, vi);
      }
      continue;
    }

    counter_rng rng(chain(chain(chain(edge_key, job.b1), job.b2), k));
    const double linv = 1.0 / std::log1p(-cs.p_bar);  // finite and negative
    const double dtotal = static_cast<double>(cs.total);
    double g = std::log1p(-rng.next_unit()) * linv;
    if (!(g < dtotal)) continue;
    std::uint64_t x = static_cast<std::uint64_t>(g);
    while (true) {
      std::size_t ui, vi;
      if (decode(x, ui, vi)) {
        const double prob = connection_probability(pair_distance(ui, vi), params_);
        if (rng.next_unit() * cs.p_bar < prob) emit(ui, vi);
      }
      g = std::log1p(-rng.next_unit()) * linv;
      if (!(g < dtotal - static_cast<double>(x) - 1.0)) break;
      x += 1 + static_cast<std::uint64_t>(g);
    }
  }
}

edge_list banded_sampler::sample_edges(sample_seed seed, bool parallel) const {
  const std::uint64_t edge_key = root_key(seed, stream_tag::cell);
  std::vector<edge_list> parts(jobs_.size());
  auto run_one = [&](std::size_t ji) {
    edge_list& out = parts[ji];
    run_band_pair(ji, edge_key,
                  [&out](std::uint32_t u, std::uint32_t v) { out.emplace_back(u, v); });
  };
  if (parallel) {
    parallel_blocks(jobs_.size(), run_one);
  } else {
    for (std::size_t ji = 0; ji < jobs_.size(); ++ji) run_one(ji);
  }

  edge_list edges;
  std::size_t total = 0;
  for (const auto& part : parts) total += part.size();
  edges.reserve(total);
  for (auto& part : parts) edges.insert(edges.end(), part.begin(), part.end());
  return edges;
}

void banded_sampler::sample_edges(sample_seed seed, const edge_sink& sink,
                                  bool parallel) const {
  const std::uint64_t edge_key = root_key(seed, stream_tag::cell);
  if (!parallel) {
    for (std::size_t ji = 0; ji < jobs_.size(); ++ji) run_band_pair(ji, edge_key, sink);
    return;
  }
  std::mutex mu;
  parallel_blocks(jobs_.size(), [&](std::size_t ji) {
    edge_list buf;
    run_band_pair(ji, edge_key,
                  [&buf](std::uint32_t u, std::uint32_t v) { buf.emplace_back(u, v); });
    const std::scoped_lock lock(mu);
    for (const auto& [u, v] : buf) sink(u, v);
  });
}

graph generate_accelerated(const model_params& p,
                           std::vector<vertex_position> positions, sample_seed seed) {
  const banded_sampler sampler(p, positions);
  const auto n = static_cast<double>(positions.size());
  if (!p.disc && sampler.expected_candidate_tests() > 0.5 * n * (n - 1.0)) {
    std::fprintf(stderr,
                 "[hrg] banded envelope admits no saving at n=%zu; using the pairwise generator\n",
                 positions.size());
    return generate_naive(p, std::move(positions), seed);
  }
  edge_list edges = sampler.sample_edges(seed, true);
  return graph(p, std::move(positions), std::move(edges), seed.seed,
               p.disc ? generator_kind::disc : generator_kind::accelerated);
}

graph generate_accelerated(const model_params& p, sample_seed seed) {
  return generate_accelerated(p, sample_positions(p, seed), seed);
}

std::size_t count_edges_accelerated(const model_params& p, sample_seed seed) {
  const auto positions = sample_positions(p, seed);
  const banded_sampler sampler(p, positions);
  std::atomic<std::size_t> count{0};
  sampler.sample_edges(
      seed, [&count](std::uint32_t, std::uint32_t) { count.fetch_add(1, std::memory_order_relaxed); },
      true);
  return count.load();
}

}  // namespace hrg

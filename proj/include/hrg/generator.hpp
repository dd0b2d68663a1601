#pragma once
#include <cstdint>
#include <functional>
#include <vector>

#include "hrg/graph.hpp"
#include "hrg/params.hpp"
#include "hrg/rng.hpp"

namespace hrg {

using edge_sink = std::function<void(std::uint32_t, std::uint32_t)>;

// Reference generator: every unordered pair {i, j} draws one uniform that is a
// pure function of (seed, stream, i, j) and keeps the edge iff u < p_ij. With
// the disc flag a pair is connected iff d < R, no randomness involved.
graph generate_naive(const model_params& p, sample_seed seed);
graph generate_naive(const model_params& p, std::vector<vertex_position> positions,
                     sample_seed seed);

// Accelerated generator with the same per-pair edge law. Vertices are grouped
// into radial bands of type-width ln(2)/zeta and, per band pair, into
// equal-angle cells; the candidate pairs of each cell-offset class are walked
// with geometric jumps under an envelope probability derived from the class's
// minimal possible distance, then thinned to the exact probability. Falls back
// to the pairwise path, with a notice on stderr, when the envelope predicts no
// saving over testing every pair.
graph generate_accelerated(const model_params& p, sample_seed seed);
graph generate_accelerated(const model_params& p,
                           std::vector<vertex_position> positions, sample_seed seed);

// Band/cell layout over a fixed position set, reusable across edge draws.
class banded_sampler {
 public:
  banded_sampler(const model_params& p, const std::vector<vertex_position>& positions);

  // expected number of candidate tests the envelope admits (padding included);
  // the fallback heuristic compares this against the pairwise n(n-1)/2
  double expected_candidate_tests() const { return expected_tests_; }

  // One keyed edge draw over the stored positions. The edge_list overload is
  // deterministic for any worker count; the sink overload calls the sink from
  // one thread at a time but in an unspecified order when parallel.
  edge_list sample_edges(sample_seed seed, bool parallel = true) const;
  void sample_edges(sample_seed seed, const edge_sink& sink, bool parallel = true) const;

 private:
  struct band {
    std::vector<double> theta;           // ascending
    std::vector<std::uint32_t> id;       // original vertex index
    std::vector<double> ezr, emzr, shr;  // e^{zeta r}, e^{-zeta r}, sinh(zeta r)
    double r_lo = 0.0, r_hi = 0.0;       // observed radial extent
    double sinh_r_lo = 0.0;              // sinh(zeta r_lo)
    std::size_t size() const { return theta.size(); }
  };
  struct pair_job {
    std::uint32_t b1, b2;
  };
  struct cell_layout {
    std::size_t m = 1;  // cells per band (power of two)
    double delta = 0.0;
    std::vector<std::uint32_t> off1, off2;  // cell boundaries, size m+1
    std::uint32_t cap1 = 0, cap2 = 0;       // max cell occupancy per side
  };
  struct category_space {
    double p_bar = 0.0;        // envelope probability for the class
    std::uint64_t span = 0;    // padded candidates per anchor cell
    std::uint64_t crange = 0;  // anchor cells
    std::uint64_t total = 0;   // span * crange
    bool triangular = false;   // same-cell class, pairs within one cell
  };

  cell_layout make_layout(const pair_job& job) const;
  category_space make_category(const pair_job& job, const cell_layout& l,
                               std::size_t k) const;
  void run_band_pair(std::size_t job_index, std::uint64_t edge_key,
                     const edge_sink& sink) const;
  double envelope_mass(std::size_t job_index) const;

  model_params params_;
  std::vector<band> bands_;
  std::vector<pair_job> jobs_;
  std::vector<cell_layout> layouts_;  // aligned with jobs_, built once
  double band_width_ = 0.0;
  double expected_tests_ = 0.0;
};

// edge count of one accelerated draw without materializing the graph
std::size_t count_edges_accelerated(const model_params& p, sample_seed seed);

}  // namespace hrg

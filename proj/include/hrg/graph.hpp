#pragma once
#include <cstdint>
#include <utility>
#include <vector>

#include "hrg/geometry.hpp"
#include "hrg/params.hpp"

namespace hrg {

enum class generator_kind { naive, accelerated, disc };

using edge_list = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

// Simple undirected graph on sampled positions. Edges are stored once as
// (u, v) with u < v, sorted lexicographically; no self loops, no duplicates.
struct graph {
  model_params params;
  std::vector<vertex_position> positions;
  edge_list edges;
  std::uint64_t seed = 0;
  generator_kind kind = generator_kind::naive;

  graph() = default;
  graph(model_params p, std::vector<vertex_position> pos, edge_list e,
        std::uint64_t seed_, generator_kind kind_);

  std::size_t n() const { return positions.size(); }
  std::vector<std::uint32_t> degree_sequence() const;
  std::vector<std::vector<std::uint32_t>> adjacency() const;  // sorted lists
};

}  // namespace hrg

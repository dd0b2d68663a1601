#include "hrg/graph.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace hrg {

graph::graph(model_params p, std::vector<vertex_position> pos, edge_list e,
             std::uint64_t seed_, generator_kind kind_)
    : params(std::move(p)), positions(std::move(pos)), edges(std::move(e)),
      seed(seed_), kind(kind_) {
  std::sort(edges.begin(), edges.end());
#ifndef NDEBUG
  for (const auto& [u, v] : edges) {
    assert(u < v && v < positions.size());
  }
  assert(std::adjacent_find(edges.begin(), edges.end()) == edges.end());
#endif
}

std::vector<std::uint32_t> graph::degree_sequence() const {
  std::vector<std::uint32_t> deg(n(), 0);
  for (const auto& [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

std::vector<std::vector<std::uint32_t>> graph::adjacency() const {
  std::vector<std::vector<std::uint32_t>> adj(n());
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  return adj;
}

}  // namespace hrg

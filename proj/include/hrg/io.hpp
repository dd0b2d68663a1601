#pragma once
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "hrg/analysis.hpp"
#include "hrg/graph.hpp"

namespace hrg {

// write via temp file + rename so readers never observe partial output;
// throws std::runtime_error with path context on failure
void write_text_atomic(const std::filesystem::path& path, const std::string& content);

// Edge list: "#hrg v1", "#params <n> <zeta> <alpha> <beta|inf> <seed>", then
// one "u v" line per edge with u < v, ascending lexicographically. A beta of
// "inf" marks the disc (hard threshold) model.
void write_edge_file(const std::filesystem::path& path, const graph& g);

struct edge_file_data {
  model_params params;
  std::uint64_t seed = 0;
  edge_list edges;
};
// strict reader: any malformed header, ordering, duplicate, or out-of-range
// endpoint throws std::runtime_error
edge_file_data read_edge_file(const std::filesystem::path& path);

// positions: one "i r theta" line per vertex, 17 significant digits, no header
void write_position_file(const std::filesystem::path& path,
                         const std::vector<vertex_position>& positions);
std::vector<vertex_position> read_position_file(const std::filesystem::path& path,
                                                const model_params& p);

// graph reassembled from the two files; generator kind is not recorded in the
// format, so the result reports disc when the parameters do and naive otherwise
graph read_graph(const std::filesystem::path& edge_path,
                 const std::filesystem::path& position_path);

// degree histogram CSV "k,count,frac,mp_pmf"; the mp_pmf column is filled for
// k <= k_cap in the cold regime and left empty otherwise
void write_histogram_csv(const std::filesystem::path& path, const degree_report& rep,
                         const model_params& p);

}  // namespace hrg

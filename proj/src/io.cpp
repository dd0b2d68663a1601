#include "hrg/io.hpp"

#include <cerrno>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "hrg/theory.hpp"

namespace hrg {

namespace {

[[noreturn]] void io_fail(const std::filesystem::path& path, const std::string& what) {
  throw std::runtime_error(path.string() + ": " + what);
}

std::string read_all(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) io_fail(path, std::strerror(errno));
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) io_fail(path, "read error");
  return buf.str();
}

void append_g17(std::string& out, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

}  // namespace

void write_text_atomic(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) io_fail(tmp, std::strerror(errno));
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) io_fail(tmp, "write error");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) io_fail(path, "rename failed: " + ec.message());
}

void write_edge_file(const std::filesystem::path& path, const graph& g) {
  std::string out = "#hrg v1\n#params ";
  char buf[128];
  std::snprintf(buf, sizeof buf, "%llu ",
                static_cast<unsigned long long>(g.params.vertex_count()));
  out += buf;
  append_g17(out, g.params.zeta);
  out += ' ';
  append_g17(out, g.params.alpha);
  out += ' ';
  if (g.params.disc) {
    out += "inf";
  } else {
    append_g17(out, g.params.beta);
  }
  std::snprintf(buf, sizeof buf, " %llu\n", static_cast<unsigned long long>(g.seed));
  out += buf;
  for (const auto& [u, v] : g.edges) {
    std::snprintf(buf, sizeof buf, "%" PRIu32 " %" PRIu32 "\n", u, v);
    out += buf;
  }
  write_text_atomic(path, out);
}

edge_file_data read_edge_file(const std::filesystem::path& path) {
  std::istringstream in(read_all(path));
  std::string line;
  if (!std::getline(in, line) || line != "#hrg v1")
    io_fail(path, "missing '#hrg v1' header");
  if (!std::getline(in, line) || line.rfind("#params ", 0) != 0)
    io_fail(path, "missing '#params' header");

  std::istringstream hdr(line.substr(8));
  unsigned long long n = 0, seed = 0;
  double zeta = 0.0, alpha = 0.0, beta = 0.0;
  std::string beta_tok;
  if (!(hdr >> n >> zeta >> alpha >> beta_tok >> seed))
    io_fail(path, "malformed '#params' header");
  bool disc = false;
  if (beta_tok == "inf") {
    disc = true;
    beta = 2.0;  // placeholder; ignored under the disc flag
  } else {
    try {
      std::size_t used = 0;
      beta = std::stod(beta_tok, &used);
      if (used != beta_tok.size()) io_fail(path, "malformed beta field");
    } catch (const std::logic_error&) {
      io_fail(path, "malformed beta field");
    }
  }
  std::string extra;
  if (hdr >> extra) io_fail(path, "trailing tokens in '#params' header");

  edge_file_data data;
  data.params = model_params::from_vertices(static_cast<double>(n), zeta, alpha,
                                            beta, disc);
  data.seed = seed;

  std::uint64_t line_no = 2;
  std::pair<std::uint32_t, std::uint32_t> prev{0, 0};
  bool have_prev = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) io_fail(path, "empty line " + std::to_string(line_no));
    if (line.find('-') != std::string::npos)
      io_fail(path, "negative endpoint at line " + std::to_string(line_no));
    std::istringstream row(line);
    unsigned long long u = 0, v = 0;
    if (!(row >> u >> v) || (row >> extra))
      io_fail(path, "malformed edge at line " + std::to_string(line_no));
    if (u >= v) io_fail(path, "edge endpoints not ascending at line " + std::to_string(line_no));
    if (v >= n) io_fail(path, "endpoint out of range at line " + std::to_string(line_no));
    const std::pair<std::uint32_t, std::uint32_t> cur{static_cast<std::uint32_t>(u),
                                                      static_cast<std::uint32_t>(v)};
    if (have_prev && !(prev < cur))
      io_fail(path, "edges not in ascending order at line " + std::to_string(line_no));
    prev = cur;
    have_prev = true;
    data.edges.push_back(cur);
  }
  return data;
}

void write_position_file(const std::filesystem::path& path,
                         const std::vector<vertex_position>& positions) {
  std::string out;
  out.reserve(positions.size() * 48);
  char buf[32];
  for (std::size_t i = 0; i < positions.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%zu ", i);
    out += buf;
    append_g17(out, positions[i].r);
    out += ' ';
    append_g17(out, positions[i].theta);
    out += '\n';
  }
  write_text_atomic(path, out);
}

std::vector<vertex_position> read_position_file(const std::filesystem::path& path,
                                                const model_params& p) {
  std::istringstream in(read_all(path));
  const std::size_t n = p.vertex_count();
  std::vector<vertex_position> out;
  out.reserve(n);
  std::string line, extra;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream row(line);
    unsigned long long idx = 0;
    double r = 0.0, theta = 0.0;
    if (!(row >> idx >> r >> theta) || (row >> extra))
      io_fail(path, "malformed position at line " + std::to_string(line_no));
    if (idx != out.size())
      io_fail(path, "vertex indices not consecutive at line " + std::to_string(line_no));
    if (!(r >= 0.0) || r > p.radius * (1.0 + 1e-12))
      io_fail(path, "radius outside [0, R] at line " + std::to_string(line_no));
    if (!(theta >= 0.0) || theta > 2.0 * std::numbers::pi * (1.0 + 1e-12))
      io_fail(path, "angle outside (0, 2 pi] at line " + std::to_string(line_no));
    out.emplace_back(r, theta, p);
  }
  if (out.size() != n)
    io_fail(path, "expected " + std::to_string(n) + " positions, found " +
                      std::to_string(out.size()));
  return out;
}

graph read_graph(const std::filesystem::path& edge_path,
                 const std::filesystem::path& position_path) {
  edge_file_data data = read_edge_file(edge_path);
  auto positions = read_position_file(position_path, data.params);
  return graph(data.params, std::move(positions), std::move(data.edges), data.seed,
               data.params.disc ? generator_kind::disc : generator_kind::naive);
}

void write_histogram_csv(const std::filesystem::path& path, const degree_report& rep,
                         const model_params& p) {
  const bool with_pmf = p.regime_kind() == regime::cold && p.theory_valid();
  std::string out = "k,count,frac,mp_pmf\n";
  char buf[160];
  const double nn = static_cast<double>(rep.n);
  const unsigned k_max = rep.histogram.empty() ? 0 : rep.histogram.rbegin()->first;
  for (unsigned k = 0; k <= k_max; ++k) {
    const auto it = rep.histogram.find(k);
    const std::uint64_t count = it == rep.histogram.end() ? 0 : it->second;
    std::snprintf(buf, sizeof buf, "%u,%llu,%.17g,", k,
                  static_cast<unsigned long long>(count),
                  static_cast<double>(count) / nn);
    out += buf;
    if (with_pmf && k <= rep.k_cap) {
      std::snprintf(buf, sizeof buf, "%.17g", mixed_poisson_pmf(k, p));
      out += buf;
    }
    out += '\n';
  }
  write_text_atomic(path, out);
}

}  // namespace hrg

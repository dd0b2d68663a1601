#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hrg/cli.hpp"
#include "hrg/generator.hpp"
#include "hrg/geometry.hpp"
#include "hrg/io.hpp"
#include "hrg/params.hpp"

using namespace hrg;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct temp_dir {
  fs::path path;
  explicit temp_dir(const std::string& tag)
      : path(fs::temp_directory_path() / ("hrg_test_" + tag)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~temp_dir() { fs::remove_all(path); }
  std::string str(const std::string& sub = "") const {
    return (sub.empty() ? path : path / sub).string();
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  out << content;
}

}  // namespace

TEST_SUITE("cli_io") {

TEST_CASE("generate writes a graph that reloads to the in-memory original") {
  temp_dir dir("roundtrip");
  const int code = run_cli({"generate", "--n", "300", "--zeta", "1", "--alpha",
                            "1", "--beta", "2", "--seed", "5", "--out", dir.str()});
  REQUIRE(code == 0);

  const auto p = model_params::from_vertices(300, 1.0, 1.0, 2.0);
  const graph want = generate_accelerated(p, {5, 0});
  const graph got = read_graph(dir.path / "graph.edges", dir.path / "graph.positions");

  CHECK(got.edges == want.edges);
  REQUIRE(got.positions.size() == want.positions.size());
  for (std::size_t i = 0; i < got.positions.size(); ++i) {
    // 17 significant digits round-trip doubles exactly
    CHECK(got.positions[i].r == want.positions[i].r);
    CHECK(got.positions[i].theta == want.positions[i].theta);
  }
  CHECK(got.params.n == want.params.n);
  CHECK(got.params.beta == want.params.beta);
  CHECK(got.seed == 5);
}

TEST_CASE("reruns of the same config are byte identical") {
  temp_dir a("bytes_a"), b("bytes_b");
  const std::vector<std::string> base{"generate", "--n", "200", "--seed", "42"};
  auto with_out = [&](const std::string& out) {
    auto v = base;
    v.push_back("--out");
    v.push_back(out);
    return v;
  };
  REQUIRE(run_cli(with_out(a.str())) == 0);
  REQUIRE(run_cli(with_out(b.str())) == 0);
  CHECK(slurp(a.path / "graph.edges") == slurp(b.path / "graph.edges"));
  CHECK(slurp(a.path / "graph.positions") == slurp(b.path / "graph.positions"));
  CHECK(!slurp(a.path / "graph.edges").empty());
}

TEST_CASE("naive and accelerated flags both generate") {
  temp_dir dir("kinds");
  CHECK(run_cli({"generate", "--n", "150", "--generator", "naive", "--out",
                 dir.str("nav")}) == 0);
  CHECK(run_cli({"generate", "--n", "150", "--generator", "accelerated", "--out",
                 dir.str("acc")}) == 0);
  CHECK(fs::exists(dir.path / "nav" / "graph.edges"));
  CHECK(fs::exists(dir.path / "acc" / "graph.edges"));
}

TEST_CASE("disc graphs serialize beta as inf and re-verify the threshold") {
  temp_dir dir("disc");
  REQUIRE(run_cli({"generate", "--n", "200", "--disc", "--seed", "3", "--out",
                   dir.str()}) == 0);
  const std::string header = slurp(dir.path / "graph.edges").substr(0, 200);
  CHECK(header.find(" inf ") != std::string::npos);

  const graph g = read_graph(dir.path / "graph.edges", dir.path / "graph.positions");
  CHECK(g.params.disc);
  CHECK(g.kind == generator_kind::disc);
  for (const auto& [u, v] : g.edges)
    CHECK(exact_distance(g.positions[u], g.positions[v], g.params) < g.params.radius);
}

TEST_CASE("usage errors exit 1, domain errors 2, io errors 3") {
  temp_dir dir("codes");
  CHECK(run_cli({"frobnicate"}) == 1);
  CHECK(run_cli({"generate", "--n", "10"}) == 1);            // --out missing
  CHECK(run_cli({"generate", "--bogus", "1", "--n", "10", "--out", dir.str()}) == 1);
  CHECK(run_cli({"generate", "--n", "0.5", "--out", dir.str()}) == 2);
  CHECK(run_cli({"generate", "--n", "100", "--zeta", "-1", "--out", dir.str()}) == 2);
  CHECK(run_cli({"analyze", "--in", dir.str("missing")}) == 3);
  CHECK(run_cli({"--help"}) == 0);
}

TEST_CASE("predict emits the closed-form constants as JSON") {
  temp_dir dir("predict");
  const std::string out = dir.str("cold.json");
  REQUIRE(run_cli({"predict", "--n", "100000", "--beta", "2", "--out", out}) == 0);
  const json j = json::parse(slurp(out));
  CHECK(j["schema"] == 1);
  CHECK(j["regime"] == "cold");
  CHECK(j["growth"] == "constant");
  CHECK(j["constants"]["K"].get<double>() == doctest::Approx(2.0));
  CHECK(j["constants"]["exponent"].get<double>() == doctest::Approx(3.0));
  CHECK(j["expected_degree"]["t"].size() == 33);
  CHECK(j["pmf"]["k"].size() == 31);
  // pmf values form a sub-probability vector
  double mass = 0.0;
  for (const auto& v : j["pmf"]["value"]) mass += v.get<double>();
  CHECK(mass > 0.9);
  CHECK(mass < 1.0);

  const std::string crit = dir.str("crit.json");
  REQUIRE(run_cli({"predict", "--n", "100000", "--beta", "1", "--out", crit}) == 0);
  const json jc = json::parse(slurp(crit));
  CHECK(jc["growth"] == "logarithmic");
  CHECK(jc["constants"]["K"].get<double>() ==
        doctest::Approx(0.636619772367581343));
  CHECK(!jc.contains("pmf"));
}

TEST_CASE("predict refuses out-of-theory parameters with exit 2") {
  CHECK(run_cli({"predict", "--n", "1000", "--zeta", "2.5"}) == 2);
  // beta zeta >= 2 alpha in the hot regime
  CHECK(run_cli({"predict", "--n", "1000", "--zeta", "4.1", "--beta", "0.5"}) == 2);
}

TEST_CASE("analyze reports degrees and writes the histogram") {
  temp_dir dir("analyze");
  REQUIRE(run_cli({"generate", "--n", "5000", "--seed", "7", "--out",
                   dir.str("g")}) == 0);
  REQUIRE(run_cli({"analyze", "--in", dir.str("g"), "--out", dir.str("rep")}) == 0);

  const json j = json::parse(slurp(dir.path / "rep" / "report.json"));
  CHECK(j["schema"] == 1);
  CHECK(j["n"] == 5000);
  CHECK(j["mean_degree"].get<double>() > 2.0);
  CHECK(j["mean_degree"].get<double>() < 6.0);
  CHECK(j["clustering"].get<double>() >= 0.0);
  CHECK(j["clustering"].get<double>() <= 1.0);

  const std::string csv = slurp(dir.path / "rep" / "degrees.csv");
  CHECK(csv.rfind("k,count,frac,mp_pmf", 0) == 0);
  CHECK(csv.find("\n0,") != std::string::npos);
}

TEST_CASE("strict edge-file reader rejects malformed input") {
  temp_dir dir("malformed");
  const std::string pos_ok = "0 1.0 1.0\n1 1.2 2.0\n";  // R = 2 ln 2 here
  auto expect_throw = [&](const std::string& name, const std::string& content) {
    const fs::path f = dir.path / name;
    spit(f, content);
    CAPTURE(name);
    CHECK_THROWS_AS(read_edge_file(f), std::runtime_error);
  };
  expect_throw("missing", "");  // empty file: no magic line
  expect_throw("magic.edges", "#hrgg v1\n#params 2 1 1 2 0\n0 1\n");
  expect_throw("version.edges", "#hrg v2\n#params 2 1 1 2 0\n0 1\n");
  expect_throw("header.edges", "#hrg v1\n#parms 2 1 1 2 0\n0 1\n");
  expect_throw("selfloop.edges", "#hrg v1\n#params 2 1 1 2 0\n1 1\n");
  expect_throw("swapped.edges", "#hrg v1\n#params 3 1 1 2 0\n1 0\n");
  expect_throw("range.edges", "#hrg v1\n#params 2 1 1 2 0\n0 5\n");
  expect_throw("order.edges", "#hrg v1\n#params 3 1 1 2 0\n1 2\n0 1\n");
  expect_throw("dup.edges", "#hrg v1\n#params 3 1 1 2 0\n0 1\n0 1\n");
  expect_throw("negative.edges", "#hrg v1\n#params 3 1 1 2 0\n-1 1\n");
  expect_throw("junk.edges", "#hrg v1\n#params 3 1 1 2 0\n0 1 9\n");
  expect_throw("badnum.edges", "#hrg v1\n#params 3 1 one 2 0\n0 1\n");

  // a well-formed pair parses
  spit(dir.path / "ok.edges", "#hrg v1\n#params 2 1 1 2 0\n0 1\n");
  const auto data = read_edge_file(dir.path / "ok.edges");
  CHECK(data.params.vertex_count() == 2);
  CHECK(data.edges.size() == 1);

  // positions must agree with the parameter count and ranges
  spit(dir.path / "short.positions", "0 1.0 1.0\n");
  CHECK_THROWS_AS(read_position_file(dir.path / "short.positions", data.params),
                  std::runtime_error);
  spit(dir.path / "ok.positions", pos_ok);
  CHECK(read_position_file(dir.path / "ok.positions", data.params).size() == 2);
  spit(dir.path / "range.positions", "0 1.0 1.0\n1 99.0 1.0\n");
  CHECK_THROWS_AS(read_position_file(dir.path / "range.positions", data.params),
                  std::runtime_error);
}

TEST_CASE("validate runs the regime-scaled battery and reports JSON") {
  temp_dir dir("validate");
  const std::string out = dir.str("report.json");
  const int code = run_cli({"validate", "--n", "20000", "--beta", "2", "--seed",
                            "2024", "--out", out});
  CHECK(code == 0);
  const json j = json::parse(slurp(out));
  CHECK(j["schema"] == 1);
  CHECK(j["pass"] == true);
  bool has_mean = false;
  for (const auto& c : j["checks"]) has_mean |= c["name"] == "mean-degree";
  CHECK(has_mean);
  // out-of-theory parameters refuse with exit 2
  CHECK(run_cli({"validate", "--n", "1000", "--zeta", "2.1"}) == 2);
}

TEST_CASE("scale prints the grid and stores fits") {
  temp_dir dir("scale");
  const std::string out = dir.str("scale.json");
  REQUIRE(run_cli({"scale", "--n-grid", "256,512,1024,2048", "--replicates", "2",
                   "--seed", "91", "--out", out}) == 0);
  const json j = json::parse(slurp(out));
  CHECK(j["schema"] == 1);
  CHECK(j["points"].size() == 4);
  CHECK(j["points"][0]["n"] == 256.0);
  CHECK(j["fit_mean_vs_log_n"].contains("r2"));
  CHECK(j["fit_log_mean_vs_log_n"].contains("slope"));
}

TEST_CASE("config files feed defaults that flags override") {
  temp_dir dir("config");
  const fs::path cfg = dir.path / "run.toml";
  spit(cfg, "[generate]\nn = 150\nseed = 6\nout = \"" + dir.str("from_cfg") +
                "\"\n");
  REQUIRE(run_cli({"--config", cfg.string(), "generate"}) == 0);
  const graph a = read_graph(dir.path / "from_cfg" / "graph.edges",
                             dir.path / "from_cfg" / "graph.positions");
  CHECK(a.positions.size() == 150);
  CHECK(a.seed == 6);

  // explicit flags win over the config file
  REQUIRE(run_cli({"--config", cfg.string(), "generate", "--n", "80", "--out",
                   dir.str("override")}) == 0);
  const graph b = read_graph(dir.path / "override" / "graph.edges",
                             dir.path / "override" / "graph.positions");
  CHECK(b.positions.size() == 80);

  // unknown keys are rejected as usage errors
  spit(cfg, "[generate]\nbogus = 1\n");
  CHECK(run_cli({"--config", cfg.string(), "generate", "--n", "10", "--out",
                 dir.str("x")}) == 1);
}

}  // TEST_SUITE

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "condmds/cli.hpp"
#include "condmds/csv_io.hpp"
#include "condmds/errors.hpp"
#include "condmds/kinship.hpp"
#include "condmds/svg.hpp"
#include "json.hpp"

using namespace condmds;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / ("condmds_cli_" + name)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& f) const { return (path / f).string(); }
};

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string l;
  while (std::getline(ss, l)) out.push_back(l);
  return out;
}

void check_trace(const nlohmann::json& report) {
  const auto trace = report.at("stress_trace").get<std::vector<double>>();
  REQUIRE(trace.size() == report.at("iterations").get<std::size_t>() + 1);
  for (std::size_t l = 1; l < trace.size(); ++l) CHECK(trace[l] <= trace[l - 1] + 1e-9);
}

void write(const std::string& path, const std::string& text) { std::ofstream(path, std::ios::binary) << text; }

}  // namespace

TEST_CASE("kinship-demo writes all outputs") {
  TempDir dir("demo");
  const Result r = invoke({"kinship-demo", "--cond", "gender", "--weights", "uniform", "--p", "2", "--plot", "--out",
                           dir.path.string()});
  REQUIRE(r.code == 0);
  const auto emb = lines(read_file(dir / "embedding.csv"));
  CHECK(emb.size() == 15);
  CHECK(emb[0] == "label,u1,u2");
  CHECK(emb[1].rfind("Aunt,", 0) == 0);
  CHECK(emb[14].rfind("Uncle,", 0) == 0);
  const auto b = lines(read_file(dir / "b_matrix.csv"));
  REQUIRE(b.size() == 2);
  CHECK(b[0] == ",gender");
  CHECK(b[1].rfind("gender,", 0) == 0);

  const auto report = nlohmann::json::parse(read_file(dir / "report.json"));
  check_trace(report);
  CHECK(report.at("seed") == 42);
  CHECK(report.at("config").at("cond") == nlohmann::json::array({"gender"}));
  CHECK(count(read_file(dir / "embedding.svg"), "<circle") == 14);
}

TEST_CASE("condisomap on the kinship data") {
  TempDir dir("iso");
  const Result ok = invoke({"condisomap", "--kinship", "--k", "5", "--cond", "gender,kinship_degree", "--weights",
                            "uniform", "--out", dir.path.string()});
  REQUIRE(ok.code == 0);
  const auto report = nlohmann::json::parse(read_file(dir / "report.json"));
  check_trace(report);
  CHECK(report.at("config").at("neighborhood").at("k") == 5);
  CHECK(report.at("dropped").empty());

  const Result disconnected =
      invoke({"condisomap", "--kinship", "--k", "1", "--cond", "gender,kinship_degree", "--out", dir.path.string()});
  CHECK(disconnected.code == 3);
  CHECK(disconnected.err.find("--k") != std::string::npos);
  CHECK(disconnected.err.find("{Aunt,Uncle}") != std::string::npos);

  const Result largest = invoke({"kinship-demo", "--k", "1", "--largest-component", "--out", dir.path.string()});
  CHECK(largest.code == 0);
  CHECK(lines(read_file(dir / "embedding.csv")).size() == 3);
  CHECK(nlohmann::json::parse(read_file(dir / "report.json")).at("dropped").size() == 12);
}

TEST_CASE("CSV inputs give the same embedding as the built-in data") {
  TempDir dir("files");
  const auto labels = kinship::labels();
  write(dir / "delta.csv", write_dissimilarity_csv(kinship::dissimilarities(), labels));
  // Rows deliberately in reverse order.
  std::string aux = "label,gender,kinship_degree\n";
  for (int i = 13; i >= 0; --i)
    aux += labels[std::size_t(i)] + "," + std::to_string(kinship::fixture().gender[i]) + "," +
           std::to_string(kinship::fixture().kinship_degree[i]) + "\n";
  write(dir / "aux.csv", aux);

  REQUIRE(invoke({"condmds", "-d", dir / "delta.csv", "-a", dir / "aux.csv", "--cond", "gender", "--out",
                  dir / "from_files"})
              .code == 0);
  REQUIRE(invoke({"kinship-demo", "--cond", "gender", "--out", dir / "builtin"}).code == 0);
  CHECK(read_file(dir / "from_files/embedding.csv") == read_file(dir / "builtin/embedding.csv"));
  CHECK(lines(read_file(dir / "from_files/embedding.csv"))[1].rfind("Aunt,", 0) == 0);

  // Without --cond every auxiliary column is used.
  REQUIRE(invoke({"condmds", "-d", dir / "delta.csv", "-a", dir / "aux.csv", "--out", dir / "all"}).code == 0);
  CHECK(lines(read_file(dir / "all/b_matrix.csv"))[0] == ",gender,kinship_degree");
}

TEST_CASE("validation failures exit with 2") {
  TempDir dir("bad");
  const Result missing = invoke({"condmds", "-d", dir / "nope.csv", "-a", dir / "aux.csv", "--out", dir / "o"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("nope.csv") != std::string::npos);

  write(dir / "delta.csv", ",a,b\na,0,1\nb,1,0\n");
  write(dir / "aux.csv", "label,x\na,1\nb,2\n");
  const Result missing_aux = invoke({"condmds", "-d", dir / "delta.csv", "-a", dir / "absent.csv"});
  CHECK(missing_aux.code == 2);
  CHECK(missing_aux.err.find("absent.csv") != std::string::npos);

  const Result bad_cond = invoke({"condmds", "-d", dir / "delta.csv", "-a", dir / "aux.csv", "--cond", "y"});
  CHECK(bad_cond.code == 2);
  CHECK(bad_cond.err.find("'y'") != std::string::npos);

  CHECK(invoke({"condisomap", "--kinship"}).code == 2);
  CHECK(invoke({"kinship-demo", "--weights", "bogus"}).code == 2);
  CHECK(invoke({"kinship-demo", "--p", "0"}).code == 2);
  CHECK(invoke({"kinship-demo", "--k", "3", "--epsilon", "40"}).code == 2);
  CHECK(invoke({"kinship-demo", "--k", "20"}).code == 2);
  CHECK(invoke({}).code == 2);

  const Result plot3 = invoke({"kinship-demo", "--p", "3", "--plot", "--out", dir / "p3"});
  CHECK(plot3.code == 2);
  CHECK(plot3.err.find("--p 2") != std::string::npos);
  CHECK(invoke({"kinship-demo", "--p", "3", "--plot", "false", "--out", dir / "p3"}).code == 0);

  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("restarts keep the best run and record its seed") {
  TempDir dir("restarts");
  REQUIRE(invoke({"kinship-demo", "--cond", "gender,kinship_degree", "--weights", "sammon", "--restarts", "5",
                  "--seed", "7", "--out", dir.path.string()})
              .code == 0);
  const auto report = nlohmann::json::parse(read_file(dir / "report.json"));
  const double best = report.at("final_stress");
  bool seed_found = false;
  for (const auto& r : report.at("restarts")) {
    CHECK(best <= r.at("final_stress").get<double>());
    seed_found = seed_found || (r.at("seed") == report.at("seed") && r.at("final_stress") == best);
  }
  CHECK(report.at("restarts").size() == 5);
  CHECK(seed_found);
}

TEST_CASE("repeated invocations are byte-identical") {
  TempDir dir("repeat");
  const std::vector<std::string> base{"kinship-demo", "--cond", "gender,kinship_degree,generation_difference",
                                      "--plot",       "--diag-b", "--restarts", "2"};
  auto args_a = base, args_b = base;
  args_a.insert(args_a.end(), {"--out", dir / "a"});
  args_b.insert(args_b.end(), {"--out", dir / "a_again"});
  REQUIRE(invoke(args_a).code == 0);
  const std::string emb = read_file(dir / "a/embedding.csv"), rep = read_file(dir / "a/report.json"),
                    svg = read_file(dir / "a/embedding.svg");
  REQUIRE(invoke(args_a).code == 0);
  CHECK(read_file(dir / "a/embedding.csv") == emb);
  CHECK(read_file(dir / "a/report.json") == rep);
  CHECK(read_file(dir / "a/embedding.svg") == svg);
  // A different output directory changes only the config echo, not the results.
  REQUIRE(invoke(args_b).code == 0);
  CHECK(read_file(dir / "a_again/embedding.csv") == emb);
  CHECK(read_file(dir / "a_again/embedding.svg") == svg);
}

TEST_CASE("render_svg") {
  const Matrix u{{0.0, 0.0}, {1.0, 1.0}};
  const std::string svg = render_svg(u, {"A", "B"});
  CHECK(count(svg, "<circle") == 2);
  CHECK(count(svg, "class=\"label\"") == 2);
  CHECK(svg.find(">A</text>") != std::string::npos);
  CHECK(svg.find(">B</text>") != std::string::npos);
  CHECK(render_svg(u, {"A", "B"}) == svg);
  // Bounding box plus 5% margins maps the two corners to inner positions.
  CHECK(svg.find("cx=\"63.64\" cy=\"536.36\"") != std::string::npos);
  CHECK(svg.find("cx=\"536.36\" cy=\"63.64\"") != std::string::npos);
  CHECK(render_svg(u, {"<&>", "B"}).find("&lt;&amp;&gt;") != std::string::npos);

  CHECK_THROWS_AS(render_svg(Matrix::Zero(2, 3), {"A", "B"}), InputError);
  CHECK_NOTHROW(render_svg(Matrix::Zero(3, 2), {"a", "b", "c"}));  // degenerate extent
}

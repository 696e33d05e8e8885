#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI with the given arguments; stderr is discarded.
Run cli(const std::string& args) {
  const std::string cmd = std::string(FRACMEASURE_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Run r;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(FRACMEASURE_DATA_DIR) + "/" + name; }

std::map<std::string, std::string> keys(const std::string& out) {
  std::map<std::string, std::string> kv;
  std::istringstream in(out);
  for (std::string line; std::getline(in, line);) {
    const auto eq = line.find('=');
    if (eq != std::string::npos) kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return kv;
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "fracmeasure-cli-test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("dim goldens") {
  const std::map<std::string, std::string> golden = {
      {"segments.json", "1.000000000000"},         {"cantor3.json", "0.630929753571"},
      {"golden_mean.json", "0.438017879486"},      {"two_vertex_graph.json", "0.464958417216"},
      {"no_triple_ones.json", "0.665048594554"},   {"single_map.json", "0.000000000000"},
  };
  for (const auto& [file, s] : golden) {
    CAPTURE(file);
    const auto r = cli("--format machine dim " + data(file));
    CHECK(r.code == 0);
    CHECK(keys(r.out)["s"] == s);
  }
  CHECK(keys(cli("--format machine dim " + data("single_map.json")).out)["warning"].find("degenerate") == 0);
  CHECK(cli("dim " + data("cantor3.json")).out.find("s: 0.630929753571") != std::string::npos);
}

TEST_CASE("check reports") {
  CHECK(cli("check " + data("nonirreducible.json")).out.find("irreducible: no") != std::string::npos);
  CHECK(cli("check " + data("segments.json")).out.find("aperiodic: yes") != std::string::npos);
  const auto c3 = cli("check " + data("cantor3.json"));
  CHECK(c3.code == 0);
  CHECK(c3.out.find("strong separation: yes, gap 0.3333") != std::string::npos);
}

TEST_CASE("estimate reports") {
  auto kv = keys(cli("--format machine estimate " + data("segments.json") + " --quantity content --s 1").out);
  CHECK(std::stod(kv["upper"]) <= 1.4243);

  kv = keys(cli("--format machine estimate " + data("interval.json") + " --quantity packing --s 1 --delta 0.1").out);
  CHECK(std::stod(kv["lower"]) <= 1.1);
  CHECK(std::stod(kv["upper"]) >= 1.1);
  CHECK(std::stod(kv["upper"]) - std::stod(kv["lower"]) <= 0.02);

  kv = keys(cli("--format machine estimate " + data("segments.json") + " --quantity measure --s 1").out);
  CHECK(std::abs(std::stod(kv["upper"]) - 2) <= 0.02);
}

TEST_CASE("verify-paper") {
  const auto all = cli("verify-paper");
  CHECK(all.code == 0);
  CHECK(all.out.find("passed: 10/10") != std::string::npos);
  const auto one = cli("verify-paper --only circle");
  CHECK(one.code == 0);
  CHECK(one.out.find("passed: 1/1") != std::string::npos);

  const auto dir = scratch("corrupt");
  std::filesystem::create_directories(dir);
  for (const auto* f : {"segments.json", "nonirreducible.json", "interval.json"}) {
    std::filesystem::copy_file(data(f), dir / f, std::filesystem::copy_options::overwrite_existing);
  }
  std::ofstream(dir / "segments.json") << "{ \"dimension\": 2, \"maps\": [";
  CHECK(cli("verify-paper --data-dir " + dir.string()).code == 2);
}

TEST_CASE("render") {
  const auto a = scratch("a.ppm"), b = scratch("b.ppm"), svg = scratch("a.svg");
  CHECK(cli("render " + data("segments.json") + " --depth 8 --out " + a.string()).code == 0);
  CHECK(cli("render " + data("segments.json") + " --depth 8 --out " + b.string()).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).rfind("P6", 0) == 0);
  CHECK(cli("render " + data("cantor_dust.json") + " --depth 3 --format svg --out " + svg.string()).code == 0);
  CHECK(slurp(svg).find("<svg") != std::string::npos);
  CHECK(cli("render " + data("cube_corners.json") + " --out " + a.string()).code == 4);
}

TEST_CASE("convert, recode and exhaust") {
  const auto gds = scratch("golden_gds.json");
  CHECK(cli("convert " + data("golden_mean.json") + " --to gds --out " + gds.string()).code == 0);
  CHECK(keys(cli("--format machine dim " + gds.string()).out)["s"] == "0.438017879486");
  const auto back = cli("convert " + gds.string() + " --to sft");
  CHECK(back.code == 0);
  CHECK(back.out.find("\"transitions\"") != std::string::npos);

  const auto rec = scratch("no111.json");
  CHECK(cli("recode " + data("no_triple_ones.json") + " --out " + rec.string()).code == 0);
  CHECK(keys(cli("--format machine dim " + rec.string()).out)["s"] == "0.665048594554");
  CHECK(cli("recode " + data("segments.json")).code == 2);

  const auto kv = keys(cli("--format machine exhaust " + data("interval.json") + " --symbol 0 --stages 4").out);
  CHECK(kv.at("moran_sum") == "0.937500000000");
  CHECK(kv.at("word.4") == "(0,1,1,1,0)");
}

TEST_CASE("exit codes") {
  CHECK(cli("dim /nonexistent/file.json").code == 2);
  CHECK(cli("dim " + data("nonirreducible.json")).code == 3);
  CHECK(cli("exhaust " + data("nonirreducible.json") + " --symbol 0").code == 3);
  CHECK(cli("render " + data("cantor_dust.json") + " --depth 14 --out " + scratch("big.ppm").string()).code == 5);
  CHECK(cli("dim").code == 2);
  CHECK(cli("frobnicate").code == 2);
}

TEST_CASE("identical inputs give identical reports") {
  for (const auto* args : {"check", "--format machine estimate --quantity measure --s 1", "dim"}) {
    const std::string cmd = std::string(args) + " " + data("segments.json");
    CHECK(cli(cmd).out == cli(cmd).out);
  }
}

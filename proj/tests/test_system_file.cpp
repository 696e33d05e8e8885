#include <doctest.h>

#include <cmath>
#include <string>

#include "support.hpp"

using namespace fracmeasure;

namespace {

const char* kCantor = R"({
  "dimension": 1,
  "maps": [
    {"ratio": 0.3333333333333333, "translation": [0]},
    {"ratio": 0.3333333333333333, "translation": [0.6666666666666666]}
  ],
  "transitions": "full"
})";

std::string error_of(const std::string& text) {
  try {
    parse_system(text, "in.json");
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("full transitions") {
  const auto d = parse_system(kCantor);
  REQUIRE(d.sft.has_value());
  CHECK_FALSE(d.is_graph());
  CHECK(d.dim() == 1);
  CHECK(d.sft->transitions() == TransitionMatrix::full(2));
  CHECK(d.source == "<string>");
  CHECK(d.labels == std::vector<std::string>{"", ""});
}

TEST_CASE("orthogonal parts") {
  const auto d = parse_system(R"({"dimension": 2, "maps": [
    {"ratio": 0.5, "orthogonal": "reflectX", "translation": [0.5, 0]},
    {"ratio": 0.25, "orthogonal": {"rotation": 1.5707963267948966}, "translation": [1, 0.5]},
    {"ratio": 0.25, "orthogonal": [[0, 1], [1, 0]], "translation": [0.5, 0.5], "label": "swap"}
  ], "transitions": "full"})");
  const auto& sys = *d.sft;
  CHECK(sys.map(0).orthogonal()(0, 0) == -1.0);
  CHECK(std::abs(sys.map(1).orthogonal()(1, 0) - 1) < 1e-15);
  CHECK(sys.map(2).orthogonal()(0, 1) == 1.0);
  CHECK(d.labels[2] == "swap");
}

TEST_CASE("syntax errors carry line and column") {
  const std::string msg = error_of("{\n  \"dimension\": 1,\n  \"maps\": [,]\n}");
  CHECK(msg.rfind("in.json:3:", 0) == 0);
  CHECK(msg.find("syntax error") != std::string::npos);
  CHECK(error_of("").rfind("in.json:1:1:", 0) == 0);
}

TEST_CASE("invalid content is reported by path") {
  struct Case {
    const char* text;
    const char* expect;
  };
  const Case cases[] = {
      {R"({"maps": []})", "missing field \"dimension\""},
      {R"({"dimension": 1, "maps": []})", "maps: at least one map"},
      {R"({"dimension": 1, "maps": [{"ratio": 1.5, "translation": [0]}], "transitions": "full"})", "maps[0]"},
      {R"({"dimension": 1, "maps": [{"ratio": 0.5, "translation": [0.7]}], "transitions": "full"})",
       "maps[0]: does not send"},
      {R"({"dimension": 1, "maps": [{"ratio": 0.5, "translation": [0, 1]}], "transitions": "full"})",
       "maps[0].translation: expected 1 entries"},
      {R"({"dimension": 1, "maps": [{"ratio": "x", "translation": [0]}], "transitions": "full"})",
       "maps[0].ratio: expected a number"},
      {R"({"dimension": 1, "maps": [{"ratio": 0.5, "translation": [0]}]})", "exactly one of"},
      {R"({"dimension": 1, "maps": [{"ratio": 0.5, "translation": [0]}], "transitions": [[2]]})",
       "transitions[0][0]: entries must be 0 or 1"},
      {R"({"dimension": 1, "maps": [{"ratio": 0.5, "translation": [0]}], "transitions": [[1], [1]]})",
       "transitions: expected 1 rows"},
      {R"({"dimension": 1, "maps": [{"ratio": 0.5, "orthogonal": "spin", "translation": [0]}], "transitions": "full"})",
       "unknown orthogonal name"},
      {R"({"dimension": 1, "maps": [{"ratio": 0.5, "orthogonal": {"rotation": 1}, "translation": [0]}], "transitions": "full"})",
       "rotation angles need dimension 2"},
      {R"({"dimension": 1, "vertices": 2, "maps": [{"ratio": 0.5, "translation": [0]}], "edges": [{"source": 0, "target": 2, "map": 0}]})",
       "edges[0].target: vertex out of range"},
      {R"({"dimension": 1, "vertices": 2, "maps": [{"ratio": 0.5, "translation": [0]}], "edges": [{"source": 0, "target": 1, "map": 0}]})",
       "vertex 1 has no outgoing edge"},
      {R"({"dimension": 1, "maps": [{"ratio": 0.5, "translation": [0]}], "kblock": {"k": 3, "forbidden": [[0, 0]]}})",
       "kblock.forbidden[0]: forbidden words must have length 3"},
      {R"({"dimension": 1, "maps": [{"ratio": 0.5, "translation": [0]}], "kblock": {"k": 2, "forbidden": [[0, 1]]}})",
       "kblock.forbidden[0][1]: symbol out of range"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.text);
    const std::string msg = error_of(c.text);
    CHECK(msg.rfind("in.json: ", 0) == 0);
    CHECK(msg.find(c.expect) != std::string::npos);
  }
}

TEST_CASE("graph files") {
  const auto d = parse_system(R"({"dimension": 1, "vertices": 2,
    "maps": [{"ratio": 0.5, "translation": [0]}, {"ratio": 0.25, "translation": [0.75]}],
    "edges": [{"source": 0, "target": 0, "map": 0}, {"source": 0, "target": 1, "map": 1},
              {"source": 1, "target": 0, "map": 1}]})");
  REQUIRE(d.is_graph());
  CHECK(d.gds->edge_count() == 3);
  CHECK(d.gds->edge(2).map.ratio() == 0.25);
  CHECK(d.gds->strongly_connected());
}

TEST_CASE("k-block files are recoded on load") {
  const auto d = parse_system(R"({"dimension": 1,
    "maps": [{"ratio": 0.4, "translation": [0]}, {"ratio": 0.4, "translation": [0.6]}],
    "kblock": {"k": 3, "forbidden": [[1, 1, 1]]}})");
  REQUIRE(d.recoding.has_value());
  CHECK(d.sft->alphabet_size() == 4);
  CHECK(d.labels.size() == 4);
  // Each block takes the map of its first symbol.
  for (int b = 0; b < 4; ++b) {
    const double t = d.recoding->blocks[b].front() == 0 ? 0.0 : 0.6;
    CHECK(d.sft->map(b).translation()(0) == doctest::Approx(t));
  }
  const std::vector<std::uint64_t> counts = {4, 7, 13, 24, 44, 81, 149};
  for (int n = 2; n <= 8; ++n) CHECK(count_admissible(d.sft->transitions(), n - 1) == counts[n - 2]);
}

TEST_CASE("dump and parse round trip") {
  const auto seg = fixtures::segments();
  const auto back = parse_system(dump_system(seg, {"a", "b", "c", "d"}));
  REQUIRE(back.sft.has_value());
  CHECK(back.sft->transitions() == seg.transitions());
  CHECK(back.labels == std::vector<std::string>{"a", "b", "c", "d"});
  for (int i = 0; i < 4; ++i) {
    CHECK((back.sft->map(i).linear() - seg.map(i).linear()).norm() < 1e-15);
    CHECK((back.sft->map(i).translation() - seg.map(i).translation()).norm() < 1e-15);
  }
  CHECK(dump_system(*back.sft, back.labels) == dump_system(seg, {"a", "b", "c", "d"}));

  const auto g = sft_to_gds(fixtures::golden_mean()).graph;
  const auto gback = parse_system(dump_system(g));
  REQUIRE(gback.is_graph());
  CHECK(gback.gds->edge_count() == g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    CHECK(gback.gds->edge(e).source == g.edge(e).source);
    CHECK(gback.gds->edge(e).target == g.edge(e).target);
    CHECK(gback.gds->edge(e).map.ratio() == g.edge(e).map.ratio());
  }
}

TEST_CASE("missing files") {
  CHECK_THROWS_WITH_AS(load_system("/nonexistent/x.json"), doctest::Contains("cannot open"), ParseError);
}

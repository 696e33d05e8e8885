#include "fracmeasure/system_file.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fracmeasure {

using nlohmann::json;

namespace {

struct Context {
  std::string source;

  [[noreturn]] void fail(const std::string& path, const std::string& what) const {
    throw ParseError(source + ": " + path + ": " + what);
  }

  const json& field(const json& obj, const std::string& path, const char* key) const {
    if (!obj.is_object()) fail(path, "expected an object");
    const auto it = obj.find(key);
    if (it == obj.end()) fail(path, std::string("missing field \"") + key + "\"");
    return *it;
  }

  double number(const json& v, const std::string& path) const {
    if (!v.is_number()) fail(path, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) fail(path, "expected a finite number");
    return x;
  }

  int integer(const json& v, const std::string& path) const {
    if (!v.is_number_integer()) fail(path, "expected an integer");
    return v.get<int>();
  }

  const json& array(const json& v, const std::string& path) const {
    if (!v.is_array()) fail(path, "expected an array");
    return v;
  }
};

// Line and column (1-based) of a byte offset.
std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

Matrix parse_orthogonal(const Context& ctx, const json& v, const std::string& path, int n) {
  if (v.is_string()) {
    const auto name = v.get<std::string>();
    Matrix m = Matrix::Identity(n, n);
    if (name == "identity") return m;
    if (name == "reflectX") {
      m(0, 0) = -1;
      return m;
    }
    ctx.fail(path, "unknown orthogonal name \"" + name + "\" (identity, reflectX)");
  }
  if (v.is_object()) {
    if (n != 2) ctx.fail(path, "rotation angles need dimension 2");
    const double a = ctx.number(ctx.field(v, path, "rotation"), path + ".rotation");
    Matrix m(2, 2);
    m << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
    return m;
  }
  ctx.array(v, path);
  if (static_cast<int>(v.size()) != n) ctx.fail(path, "expected " + std::to_string(n) + " rows");
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    const std::string rp = path + "[" + std::to_string(i) + "]";
    ctx.array(v[i], rp);
    if (static_cast<int>(v[i].size()) != n) ctx.fail(rp, "expected " + std::to_string(n) + " entries");
    for (int j = 0; j < n; ++j) m(i, j) = ctx.number(v[i][j], rp + "[" + std::to_string(j) + "]");
  }
  return m;
}

Similarity parse_map(const Context& ctx, const json& v, const std::string& path, int n) {
  const double ratio = ctx.number(ctx.field(v, path, "ratio"), path + ".ratio");
  Matrix o = Matrix::Identity(n, n);
  if (v.contains("orthogonal")) o = parse_orthogonal(ctx, v["orthogonal"], path + ".orthogonal", n);
  const json& t = ctx.array(ctx.field(v, path, "translation"), path + ".translation");
  if (static_cast<int>(t.size()) != n) ctx.fail(path + ".translation", "expected " + std::to_string(n) + " entries");
  Vector tv(n);
  for (int i = 0; i < n; ++i) tv(i) = ctx.number(t[i], path + ".translation[" + std::to_string(i) + "]");
  try {
    return Similarity(ratio, std::move(o), std::move(tv));
  } catch (const ParseError& e) {
    ctx.fail(path, e.what());
  }
}

TransitionMatrix parse_transitions(const Context& ctx, const json& v, int m) {
  if (v.is_string()) {
    if (v.get<std::string>() != "full") ctx.fail("transitions", "expected \"full\" or a list of rows");
    return TransitionMatrix::full(m);
  }
  ctx.array(v, "transitions");
  if (static_cast<int>(v.size()) != m) {
    ctx.fail("transitions", "expected " + std::to_string(m) + " rows, one per map");
  }
  IntMatrix a(m, m);
  for (int i = 0; i < m; ++i) {
    const std::string rp = "transitions[" + std::to_string(i) + "]";
    ctx.array(v[i], rp);
    if (static_cast<int>(v[i].size()) != m) ctx.fail(rp, "expected " + std::to_string(m) + " entries");
    for (int j = 0; j < m; ++j) {
      const int x = ctx.integer(v[i][j], rp + "[" + std::to_string(j) + "]");
      if (x != 0 && x != 1) ctx.fail(rp + "[" + std::to_string(j) + "]", "entries must be 0 or 1");
      a(i, j) = x;
    }
  }
  return TransitionMatrix(std::move(a));
}

}  // namespace

SystemDescription parse_system(const std::string& text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string msg = e.what();
    if (const auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
  }
  const Context ctx{source};
  SystemDescription out;
  out.source = source;

  const int n = ctx.integer(ctx.field(doc, "$", "dimension"), "dimension");
  if (n < 1 || n > 16) ctx.fail("dimension", "must be between 1 and 16");
  const json& maps_json = ctx.array(ctx.field(doc, "$", "maps"), "maps");
  if (maps_json.empty()) ctx.fail("maps", "at least one map is required");
  std::vector<Similarity> maps;
  for (std::size_t i = 0; i < maps_json.size(); ++i) {
    const std::string path = "maps[" + std::to_string(i) + "]";
    maps.push_back(parse_map(ctx, maps_json[i], path, n));
    if (!maps.back().maps_unit_cube_into_itself()) ctx.fail(path, "does not send [0,1]^n into itself");
    const auto label = maps_json[i].find("label");
    out.labels.push_back(label != maps_json[i].end() && label->is_string() ? label->get<std::string>() : "");
  }
  const int m = static_cast<int>(maps.size());

  const int kinds = doc.contains("transitions") + doc.contains("edges") + doc.contains("kblock");
  if (kinds != 1) ctx.fail("$", "exactly one of \"transitions\", \"edges\", \"kblock\" is required");

  if (doc.contains("transitions")) {
    out.sft = SftSystem(std::move(maps), parse_transitions(ctx, doc["transitions"], m));
  } else if (doc.contains("edges")) {
    const int vertices = ctx.integer(ctx.field(doc, "$", "vertices"), "vertices");
    if (vertices < 1) ctx.fail("vertices", "must be positive");
    const json& ej = ctx.array(doc["edges"], "edges");
    std::vector<GdsEdge> edges;
    for (std::size_t e = 0; e < ej.size(); ++e) {
      const std::string path = "edges[" + std::to_string(e) + "]";
      const int src = ctx.integer(ctx.field(ej[e], path, "source"), path + ".source");
      const int dst = ctx.integer(ctx.field(ej[e], path, "target"), path + ".target");
      const int map = ctx.integer(ctx.field(ej[e], path, "map"), path + ".map");
      if (src < 0 || src >= vertices) ctx.fail(path + ".source", "vertex out of range");
      if (dst < 0 || dst >= vertices) ctx.fail(path + ".target", "vertex out of range");
      if (map < 0 || map >= m) ctx.fail(path + ".map", "map index out of range");
      edges.push_back({src, dst, maps[map]});
    }
    try {
      out.gds = GraphDirectedSystem(vertices, std::move(edges));
    } catch (const ParseError& e) {
      ctx.fail("edges", e.what());
    }
  } else {
    const json& kb = doc["kblock"];
    KBlockSpec spec;
    spec.alphabet_size = m;
    spec.block_length = ctx.integer(ctx.field(kb, "kblock", "k"), "kblock.k");
    if (spec.block_length < 2) ctx.fail("kblock.k", "must be at least 2");
    const json& fj = ctx.array(ctx.field(kb, "kblock", "forbidden"), "kblock.forbidden");
    for (std::size_t w = 0; w < fj.size(); ++w) {
      const std::string path = "kblock.forbidden[" + std::to_string(w) + "]";
      ctx.array(fj[w], path);
      if (static_cast<int>(fj[w].size()) != spec.block_length) {
        ctx.fail(path, "forbidden words must have length " + std::to_string(spec.block_length));
      }
      Word word;
      for (std::size_t k = 0; k < fj[w].size(); ++k) {
        const int x = ctx.integer(fj[w][k], path + "[" + std::to_string(k) + "]");
        if (x < 0 || x >= m) ctx.fail(path + "[" + std::to_string(k) + "]", "symbol out of range");
        word.push_back(x);
      }
      spec.forbidden.push_back(std::move(word));
    }
    KBlockRecoding rec = recode_k_block(spec);
    std::vector<Similarity> recoded;
    std::vector<std::string> labels;
    for (const Word& block : rec.blocks) {
      recoded.push_back(maps[block.front()]);
      labels.push_back(to_string(block));
    }
    out.sft = SftSystem(std::move(recoded), rec.matrix);
    out.labels = std::move(labels);
    out.recoding = std::move(rec);
  }
  return out;
}

SystemDescription load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_system(buf.str(), path);
}

namespace {

json map_json(const Similarity& s, const std::string& label) {
  json m;
  m["ratio"] = s.ratio();
  const int n = s.dim();
  if (s.orthogonal().isIdentity(0)) {
    m["orthogonal"] = "identity";
  } else {
    json rows = json::array();
    for (int i = 0; i < n; ++i) {
      json row = json::array();
      for (int j = 0; j < n; ++j) row.push_back(s.orthogonal()(i, j));
      rows.push_back(row);
    }
    m["orthogonal"] = rows;
  }
  json t = json::array();
  for (int i = 0; i < n; ++i) t.push_back(s.translation()(i));
  m["translation"] = t;
  if (!label.empty()) m["label"] = label;
  return m;
}

}  // namespace

std::string dump_system(const SftSystem& sys, const std::vector<std::string>& labels) {
  json doc;
  doc["dimension"] = sys.dim();
  doc["maps"] = json::array();
  for (int i = 0; i < sys.alphabet_size(); ++i) {
    doc["maps"].push_back(map_json(sys.map(i), i < static_cast<int>(labels.size()) ? labels[i] : ""));
  }
  if (sys.transitions().is_full()) {
    doc["transitions"] = "full";
  } else {
    json rows = json::array();
    for (int i = 0; i < sys.alphabet_size(); ++i) {
      json row = json::array();
      for (int j = 0; j < sys.alphabet_size(); ++j) row.push_back(sys.transitions()(i, j));
      rows.push_back(row);
    }
    doc["transitions"] = rows;
  }
  return doc.dump(2) + "\n";
}

std::string dump_system(const GraphDirectedSystem& g, const std::vector<std::string>& labels) {
  json doc;
  doc["dimension"] = g.dim();
  doc["vertices"] = g.vertex_count();
  doc["maps"] = json::array();
  doc["edges"] = json::array();
  for (int e = 0; e < g.edge_count(); ++e) {
    doc["maps"].push_back(map_json(g.edge(e).map, e < static_cast<int>(labels.size()) ? labels[e] : ""));
    doc["edges"].push_back({{"source", g.edge(e).source}, {"target", g.edge(e).target}, {"map", e}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace fracmeasure

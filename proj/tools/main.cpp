#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <fracmeasure/fracmeasure.hpp>

#include "report.hpp"
#include "verify.hpp"

#ifndef FRACMEASURE_DATA_DIR
#define FRACMEASURE_DATA_DIR "data"
#endif

namespace fm = fracmeasure;
using fm::cli::fixed;
using fm::cli::OutputFormat;
using fm::cli::Report;
using fm::cli::yes_no;

namespace {

struct Options {
  std::string format = "human";
  int threads = 0;
  bool timing = false;
  std::string file;

  // estimate
  std::string quantity = "content";
  std::optional<double> s;
  std::optional<double> delta;
  int depth = 10;
  int budget = 0;
  std::vector<int> roots;

  // verify-paper
  std::string only;
  std::string data_dir = FRACMEASURE_DATA_DIR;

  // render
  std::string out;
  std::string image_format = "raster";
  int size = 512;
  int render_depth = 8;

  // convert / exhaust
  std::string to = "sft";
  int symbol = 0;
  int stages = 5;
};

OutputFormat output_format(const Options& o) {
  return o.format == "machine" ? OutputFormat::machine : OutputFormat::human;
}

// Graph inputs are handled through their edge-shift form.
fm::SftSystem as_sft(const fm::SystemDescription& d) { return d.sft ? *d.sft : fm::gds_to_sft(*d.gds).system; }

std::vector<fm::Symbol> live_roots(const fm::SftSystem& sys) {
  const auto live = fm::live_symbols(sys.transitions());
  std::vector<fm::Symbol> roots;
  for (int i = 0; i < static_cast<int>(live.size()); ++i) {
    if (live[i]) roots.push_back(i);
  }
  return roots;
}

std::string join(const std::vector<std::vector<int>>& groups) {
  std::string out;
  for (const auto& g : groups) {
    if (!out.empty()) out += ' ';
    out += fm::to_string(g);
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << content;
}

// Prints a SystemFile either to --out or to stdout.
void emit_system(const Options& o, const std::string& text, Report& report) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  write_file(o.out, text);
  report.add("output", o.out);
}

int cmd_dim(const Options& o) {
  const auto d = fm::load_system(o.file);
  const auto r = d.is_graph() ? fm::gds_dimension(*d.gds) : fm::sft_dimension(*d.sft);
  Report rep;
  rep.add("s", fixed(r.s, 12));
  rep.add("residual", fixed(r.residual, 15));
  rep.add("bracket", "[" + fixed(r.lo, 15) + ", " + fixed(r.hi, 15) + "]");
  rep.add("iterations", std::to_string(r.iterations));
  if (r.degenerate) rep.add("warning", "degenerate: a single admissible branch, s = 0");
  if (r.exceeds_ambient) rep.add("warning", "similarity dimension exceeds the ambient dimension");
  std::cout << rep.render(output_format(o));
  return 0;
}

int cmd_check(const Options& o) {
  const auto d = fm::load_system(o.file);
  const auto sys = as_sft(d);
  const auto& a = sys.transitions();
  const bool irreducible = fm::is_irreducible(a);
  Report rep;
  rep.add("irreducible", yes_no(irreducible));
  rep.add("aperiodic", yes_no(irreducible && fm::is_aperiodic(a)));
  if (irreducible) rep.add("period", std::to_string(fm::period(a)));
  rep.add("components", join(fm::strongly_connected_components(a)));
  const auto cert = fm::check_strong_separation(sys);
  std::string sep;
  if (cert.strong()) {
    sep = "yes, gap " + fixed(cert.gap, 4);
  } else {
    sep = cert.kind == fm::SeparationKind::failed ? "no" : "inconclusive";
    sep += " at depth " + std::to_string(cert.depth);
  }
  rep.add("strong_separation", "strong separation", sep);
  rep.add("open_cube_condition", "open cube condition", yes_no(cert.open_cube_condition));
  if (cert.strong()) rep.add("delta0", "delta0", fixed(fm::delta0(cert), 6));
  std::cout << rep.render(output_format(o));
  return 0;
}

int cmd_estimate(const Options& o) {
  const auto d = fm::load_system(o.file);
  const auto sys = as_sft(d);
  const auto roots = o.roots.empty() ? live_roots(sys) : std::vector<fm::Symbol>(o.roots.begin(), o.roots.end());
  for (int r : roots) {
    if (r < 0 || r >= sys.alphabet_size()) throw fm::ParseError("--roots: symbol " + std::to_string(r) + " out of range");
  }
  const double s = o.s ? *o.s : fm::sft_dimension(sys).s;
  Report rep;
  rep.add("quantity", o.quantity);
  rep.add("s", fixed(s, 12));
  rep.add("roots", fm::to_string(roots));
  rep.add("depth", std::to_string(o.depth));
  fm::EstimateBracket b;
  b.s = s;
  if (o.quantity == "packing") {
    const double delta = o.delta.value_or(0.1);
    const auto est = fm::packing_premeasure_delta(sys, roots, o.depth, s, delta, o.budget > 0 ? o.budget : 64);
    b = est.bracket;
    rep.add("delta", fixed(delta, 6));
    rep.add("balls", std::to_string(est.packing.balls.size()));
  } else {
    const auto cells = fm::sample_cylinders(sys, roots, o.depth);
    const int budget = o.budget > 0 ? o.budget : 256;
    rep.add("cells", std::to_string(cells.size()));
    fm::CoverEstimate cover;
    if (o.quantity == "content") {
      cover = fm::content_upper(cells, s, budget);
    } else {
      const double delta = o.delta.value_or(std::ldexp(1.0, -6));
      rep.add("delta", fixed(delta, 6));
      cover = fm::hausdorff_measure_delta(cells, s, delta, budget);
    }
    b.upper = cover.value;
    b.upper_method = cover.method;
    // Content is a lower bound for the measure as well.
    const auto low = fm::content_lower(sys, roots, s);
    if (low.value) {
      b.lower = *low.value;
      b.lower_method = low.method;
    } else {
      b.lower = 0;
      b.lower_method = "none (" + low.reason + ")";
    }
    rep.add("cover_groups", "cover groups", std::to_string(cover.groups));
  }
  rep.add("lower", fixed(b.lower, 6));
  rep.add("upper", fixed(b.upper, 6));
  rep.add("lower_method", "lower method", b.lower_method);
  rep.add("upper_method", "upper method", b.upper_method);
  std::cout << rep.render(output_format(o));
  return 0;
}

int cmd_verify(const Options& o) {
  std::vector<std::string> names = fm::cli::catalogue_names();
  if (!o.only.empty()) {
    if (std::find(names.begin(), names.end(), o.only) == names.end()) {
      throw fm::ParseError("--only: unknown entry \"" + o.only + "\"");
    }
    names = {o.only};
  }
  int passed = 0;
  const bool human = output_format(o) == OutputFormat::human;
  for (const auto& name : names) {
    const auto row = fm::cli::run_catalogue_entry(name, o.data_dir);
    passed += row.pass;
    const std::string status = row.pass ? "PASS" : "FAIL";
    if (human) {
      std::cout << status << "  " << row.name << "  expected " << row.expected << "  computed " << row.computed << '\n';
    } else {
      std::cout << row.name << ".status=" << (row.pass ? "pass" : "fail") << '\n'
                << row.name << ".expected=" << row.expected << '\n'
                << row.name << ".computed=" << row.computed << '\n';
    }
  }
  const std::string summary = std::to_string(passed) + "/" + std::to_string(names.size());
  std::cout << (human ? "passed: " : "passed=") << summary << '\n';
  return passed == static_cast<int>(names.size()) ? 0 : 1;
}

int cmd_render(const Options& o) {
  const auto d = fm::load_system(o.file);
  if (d.dim() != 2) throw fm::UnsupportedError("render requires n=2, got n=" + std::to_string(d.dim()));
  const auto sys = as_sft(d);
  const auto cells = fm::sample_cylinders(sys, live_roots(sys), o.render_depth);
  const auto format = o.image_format == "svg" ? fm::ImageFormat::svg : fm::ImageFormat::raster;
  write_file(o.out, fm::render_cells(cells, format, o.size));
  Report rep;
  rep.add("cells", std::to_string(cells.size()));
  rep.add("output", o.out);
  std::cout << rep.render(output_format(o));
  return 0;
}

int cmd_convert(const Options& o) {
  const auto d = fm::load_system(o.file);
  Report rep;
  if (o.to == "gds") {
    if (d.is_graph()) {
      emit_system(o, fm::dump_system(*d.gds, d.labels), rep);
    } else {
      const auto g = fm::sft_to_gds(*d.sft);
      std::vector<std::string> labels;
      for (const auto& [i, j] : g.entry_of_edge) {
        labels.push_back(i < static_cast<int>(d.labels.size()) && !d.labels[i].empty() ? d.labels[i] : "");
      }
      emit_system(o, fm::dump_system(g.graph, labels), rep);
    }
  } else {
    if (d.is_graph()) {
      const auto c = fm::gds_to_sft(*d.gds);
      std::vector<std::string> labels;
      for (int e : c.edge_of_symbol) labels.push_back("e" + std::to_string(e));
      emit_system(o, fm::dump_system(c.system, labels), rep);
    } else {
      emit_system(o, fm::dump_system(*d.sft, d.labels), rep);
    }
  }
  std::cout << rep.render(output_format(o));
  return 0;
}

int cmd_recode(const Options& o) {
  const auto d = fm::load_system(o.file);
  if (!d.recoding) throw fm::ParseError(o.file + ": recode needs a \"kblock\" system");
  Report rep;
  emit_system(o, fm::dump_system(*d.sft, d.labels), rep);
  std::cout << rep.render(output_format(o));
  return 0;
}

int cmd_exhaust(const Options& o) {
  const auto d = fm::load_system(o.file);
  const auto sys = as_sft(d);
  if (o.symbol < 0 || o.symbol >= sys.alphabet_size()) {
    throw fm::ParseError("--symbol: " + std::to_string(o.symbol) + " out of range");
  }
  const double s = fm::sft_dimension(sys).s;
  const auto cert = fm::check_strong_separation(sys);
  const auto fam = fm::exhaustion_family(sys, o.symbol, s, o.stages, cert);
  Report rep;
  rep.add("s", fixed(s, 12));
  rep.add("stages", std::to_string(fam.stages));
  rep.add("words", std::to_string(fam.words.size()));
  for (std::size_t k = 0; k < fam.words.size(); ++k) {
    rep.add("word." + std::to_string(k + 1), "word " + std::to_string(k + 1), fm::to_string(fam.words[k]));
  }
  rep.add("moran_sum", "moran sum", fixed(fam.moran_sum, 12));
  rep.add("guarantee", fixed(fam.guarantee, 12));
  rep.add("pending", std::to_string(fam.pending));
  std::cout << rep.render(output_format(o));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fracmeasure: dimensions, Hausdorff content, measure and packing estimates for self-similar sets"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "report format")->check(CLI::IsMember({"human", "machine"}));
  app.add_option("--threads", o.threads, "worker cap (FRACMEASURE_THREADS)")
      ->envname("FRACMEASURE_THREADS")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--timing", o.timing, "print elapsed time to stderr");

  auto* dim = app.add_subcommand("dim", "dimension of a system");
  dim->add_option("file", o.file)->required();

  auto* check = app.add_subcommand("check", "irreducibility, aperiodicity and separation");
  check->add_option("file", o.file)->required();

  auto* estimate = app.add_subcommand("estimate", "content, measure or packing estimate");
  estimate->add_option("file", o.file)->required();
  estimate->add_option("--quantity", o.quantity)->check(CLI::IsMember({"content", "measure", "packing"}));
  estimate->add_option("--s", o.s, "exponent (default: the dimension)");
  estimate->add_option("--delta", o.delta)->check(CLI::PositiveNumber);
  estimate->add_option("--depth", o.depth)->check(CLI::Range(1, 40));
  estimate->add_option("--budget", o.budget)->check(CLI::PositiveNumber);
  estimate->add_option("--roots", o.roots, "comma-separated root symbols")->delimiter(',');

  auto* verify = app.add_subcommand("verify-paper", "run the reference catalogue");
  verify->add_option("--only", o.only, "run a single entry");
  verify->add_option("--data-dir", o.data_dir, "directory with the catalogue system files");

  auto* render = app.add_subcommand("render", "draw a 2-D attractor");
  render->add_option("file", o.file)->required();
  render->add_option("--depth", o.render_depth)->check(CLI::Range(0, 30));
  render->add_option("--out", o.out)->required();
  render->add_option("--format", o.image_format)->check(CLI::IsMember({"raster", "svg"}));
  render->add_option("--size", o.size)->check(CLI::Range(1, 8192));

  auto* convert = app.add_subcommand("convert", "rewrite as a shift or a graph-directed system");
  convert->add_option("file", o.file)->required();
  convert->add_option("--to", o.to)->check(CLI::IsMember({"sft", "gds"}));
  convert->add_option("--out", o.out);

  auto* recode = app.add_subcommand("recode", "recode a k-block system as a 2-block shift");
  recode->add_option("file", o.file)->required();
  recode->add_option("--out", o.out);

  auto* exhaust = app.add_subcommand("exhaust", "disjoint cylinder family inside a first-level cylinder");
  exhaust->add_option("file", o.file)->required();
  exhaust->add_option("--symbol", o.symbol);
  exhaust->add_option("--stages", o.stages)->check(CLI::Range(1, 64));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(fm::ExitCode::invalid_input);
  }

  const auto start = std::chrono::steady_clock::now();
  int status = 0;
  try {
    if (*dim) status = cmd_dim(o);
    else if (*check) status = cmd_check(o);
    else if (*estimate) status = cmd_estimate(o);
    else if (*verify) status = cmd_verify(o);
    else if (*render) status = cmd_render(o);
    else if (*convert) status = cmd_convert(o);
    else if (*recode) status = cmd_recode(o);
    else if (*exhaust) status = cmd_exhaust(o);
  } catch (const fm::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(e.code());
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(fm::ExitCode::invalid_input);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  if (o.timing) {
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cerr << "elapsed: " << fixed(secs, 3) << " s\n";
  }
  return status;
}

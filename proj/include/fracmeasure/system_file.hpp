#ifndef FRACMEASURE_SYSTEM_FILE_HPP
#define FRACMEASURE_SYSTEM_FILE_HPP

#include <optional>
#include <string>
#include <vector>

#include "fracmeasure/systems.hpp"

namespace fracmeasure {

/// A parsed system description (see docs/system-file.md). Exactly one of
/// sft / gds is set. k-block inputs are recoded on load; the recoding is
/// kept so words can be translated back.
struct SystemDescription {
  std::optional<SftSystem> sft;
  std::optional<GraphDirectedSystem> gds;
  std::optional<KBlockRecoding> recoding;
  std::vector<std::string> labels;  // one per map, possibly empty strings
  std::string source;               // file name or "<string>"

  int dim() const { return sft ? sft->dim() : gds->dim(); }
  bool is_graph() const { return gds.has_value(); }
};

/// Throws ParseError carrying "source:line:column" for syntax errors and a
/// JSON path for invalid content.
SystemDescription parse_system(const std::string& text, const std::string& source = "<string>");
SystemDescription load_system(const std::string& path);

std::string dump_system(const SftSystem& sys, const std::vector<std::string>& labels = {});
std::string dump_system(const GraphDirectedSystem& g, const std::vector<std::string>& labels = {});

}  // namespace fracmeasure

#endif  // FRACMEASURE_SYSTEM_FILE_HPP

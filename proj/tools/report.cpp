#include "report.hpp"

#include <cmath>
#include <cstdio>

namespace fracmeasure::cli {

void Report::add(std::string key, std::string label, std::string value) {
  entries_.push_back({std::move(key), std::move(label), std::move(value)});
}

std::string Report::render(OutputFormat format) const {
  std::string out;
  for (const auto& e : entries_) {
    out += format == OutputFormat::human ? e.label + ": " + e.value : e.key + "=" + e.value;
    out += '\n';
  }
  return out;
}

std::string fixed(double x, int digits) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  // Avoid "-0.000000" in reports.
  if (std::string(buf).find_first_not_of("-0.") == std::string::npos) std::snprintf(buf, sizeof buf, "%.*f", digits, 0.0);
  return buf;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace fracmeasure::cli

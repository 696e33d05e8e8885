#ifndef FRACMEASURE_TOOLS_REPORT_HPP
#define FRACMEASURE_TOOLS_REPORT_HPP

#include <string>
#include <vector>

namespace fracmeasure::cli {

enum class OutputFormat { human, machine };

// Ordered key/value report. Human output prints "label: value", machine
// output prints "key=value", one entry per line.
class Report {
 public:
  void add(std::string key, std::string label, std::string value);
  void add(std::string key, std::string value) {
    std::string label = key;
    add(std::move(key), std::move(label), std::move(value));
  }
  void note(std::string text) { add("note", "note", std::move(text)); }
  std::string render(OutputFormat format) const;

 private:
  struct Entry {
    std::string key, label, value;
  };
  std::vector<Entry> entries_;
};

std::string fixed(double x, int digits = 6);
std::string yes_no(bool b);

}  // namespace fracmeasure::cli

#endif  // FRACMEASURE_TOOLS_REPORT_HPP

#ifndef FRACMEASURE_TOOLS_VERIFY_HPP
#define FRACMEASURE_TOOLS_VERIFY_HPP

#include <string>
#include <vector>

namespace fracmeasure::cli {

// One line of the reference catalogue run by `verify-paper`.
struct CheckRow {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

const std::vector<std::string>& catalogue_names();

// Runs one catalogue entry. System files are read from data_dir; a broken
// file propagates ParseError.
CheckRow run_catalogue_entry(const std::string& name, const std::string& data_dir);

}  // namespace fracmeasure::cli

#endif  // FRACMEASURE_TOOLS_VERIFY_HPP

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "eulersym/form_space.hpp"

namespace eulersym::cli {

using Json = nlohmann::ordered_json;

/// One verified property. `property` is a stable tag naming what was checked.
struct Check {
  std::string property;
  bool passed = false;
  std::string detail;
};

/// Result document of one CLI run. Identical (input, seed) pairs give byte-identical output.
class Report {
 public:
  Report(std::string command, std::string_view input_text, std::uint64_t seed);

  Json& results() { return results_; }
  const Json& results() const { return results_; }
  void add_check(std::string property, bool passed, std::string detail = {});
  void add_diagnostic(std::string message) { diagnostics_.push_back(std::move(message)); }

  const std::vector<Check>& checks() const { return checks_; }
  const std::vector<std::string>& diagnostics() const { return diagnostics_; }
  bool all_checks_passed() const;

  Json to_json() const;
  std::string to_json_text() const { return to_json().dump(2) + "\n"; }
  std::string to_text() const;

 private:
  std::string command_;
  std::string digest_;
  std::uint64_t seed_;
  Json results_ = Json::object();
  std::vector<Check> checks_;
  std::vector<std::string> diagnostics_;
};

/// 64-bit FNV-1a of the input, as "fnv1a64:<16 hex digits>".
std::string input_digest(std::string_view text);

Json to_json(const Scalar& value);
Json to_json(const FormSpace& space);
Json to_json(const std::vector<std::size_t>& values);

}  // namespace eulersym::cli

#include "eulersym/cli/report.hpp"

#include <algorithm>
#include <cstdio>

namespace eulersym::cli {

std::string input_digest(std::string_view text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

Json to_json(const Scalar& value) { return to_string(value); }

Json to_json(const FormSpace& space) {
  Json basis = Json::array();
  for (const auto& b : space.basis()) basis.push_back(b.to_string());
  return Json{{"degree", space.degree()}, {"dimension", space.dimension()}, {"basis", std::move(basis)}};
}

Json to_json(const std::vector<std::size_t>& values) {
  Json out = Json::array();
  for (auto v : values) out.push_back(v);
  return out;
}

Report::Report(std::string command, std::string_view input_text, std::uint64_t seed)
    : command_(std::move(command)), digest_(input_digest(input_text)), seed_(seed) {}

void Report::add_check(std::string property, bool passed, std::string detail) {
  checks_.push_back({std::move(property), passed, std::move(detail)});
}

bool Report::all_checks_passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

Json Report::to_json() const {
  Json checks = Json::array();
  for (const auto& c : checks_)
    checks.push_back({{"property", c.property}, {"status", c.passed ? "PASS" : "FAIL"}, {"detail", c.detail}});
  return Json{{"command", command_},
              {"input_digest", digest_},
              {"seed", seed_},
              {"results", results_},
              {"checks", std::move(checks)},
              {"diagnostics", diagnostics_}};
}

namespace {

void flatten(const Json& node, const std::string& path, std::string& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) flatten(value, path.empty() ? key : path + "." + key, out);
  } else if (node.is_array() && std::all_of(node.begin(), node.end(), [](const Json& j) { return j.is_primitive(); })) {
    std::string line;
    for (const auto& v : node) line += (line.empty() ? "" : ", ") + (v.is_string() ? v.get<std::string>() : v.dump());
    out += path + ": [" + line + "]\n";
  } else if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out += path + ": " + (node.is_string() ? node.get<std::string>() : node.dump()) + "\n";
  }
}

}  // namespace

std::string Report::to_text() const {
  std::string out = "command: " + command_ + "\ninput: " + digest_ + "\nseed: " + std::to_string(seed_) + "\n";
  flatten(results_, "", out);
  for (const auto& c : checks_) {
    out += std::string(c.passed ? "[PASS] " : "[FAIL] ") + c.property;
    if (!c.detail.empty()) out += ": " + c.detail;
    out += "\n";
  }
  for (const auto& d : diagnostics_) out += "note: " + d + "\n";
  return out;
}

}  // namespace eulersym::cli

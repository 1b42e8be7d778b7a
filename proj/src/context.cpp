#include "eulersym/context.hpp"

#include <set>

#include "eulersym/error.hpp"

namespace eulersym {

VarContext::VarContext(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw Error("a variable context needs at least one variable");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error("empty variable name");
    if (!seen.insert(n).second) throw Error("duplicate variable name '" + n + "'");
  }
}

std::optional<std::size_t> VarContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

ContextPtr make_context(std::vector<std::string> names) {
  return std::make_shared<const VarContext>(std::move(names));
}

ContextPtr standard_context(std::size_t n, std::string_view prefix) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return make_context(std::move(names));
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_context(const ContextPtr& a, const ContextPtr& b) {
  if (!same_context(a, b)) throw ContextMismatch();
}

}  // namespace eulersym

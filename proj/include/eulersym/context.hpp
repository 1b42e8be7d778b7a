#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eulersym {

/// Ordered list of variable names: the coordinates x1..xn of W, i.e. a basis of W*.
class VarContext {
 public:
  /// Throws Error when `names` is empty or has duplicates.
  explicit VarContext(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const VarContext& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const VarContext>;

ContextPtr make_context(std::vector<std::string> names);

/// prefix1, prefix2, ..., prefix<n>.
ContextPtr standard_context(std::size_t n, std::string_view prefix = "x");

bool same_context(const ContextPtr& a, const ContextPtr& b);

/// Throws ContextMismatch unless `a` and `b` name the same variables.
void require_same_context(const ContextPtr& a, const ContextPtr& b);

}  // namespace eulersym

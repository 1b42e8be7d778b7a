#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "eulersym/fundamental_forms.hpp"
#include "eulersym/symbol_system.hpp"

namespace eulersym::cli {

/// Parsed symbol-system file:
///
///   vars: x1 x2 x3
///   rank: 3
///   F2: x1^2, x1*x2, x1*x3
///   F3: x1^3
///
/// `#` starts a comment. Omitted F<k> (2 <= k < rank) are zero; F0 and F1 are implied.
struct SymbolFile {
  ContextPtr context;
  int rank = 0;
  std::map<int, std::vector<Polynomial>> generators;

  /// F^0, F^1 forced, F^k spanned by the listed generators.
  std::vector<FormSpace> components() const;
  ValidationResult validate() const;
};

SymbolFile parse_symbol_file(std::string_view text);

/// Canonical file text for a system: its echelon bases, one F<k> line per nonzero k >= 2.
std::string format_symbol_file(const SymbolSystem& system);

/// Parametrization file:
///
///   vars: z1 z2
///   coords: z1, z2, z1*z2
///   at: 1, 2        # optional base point
///   degree: 4       # optional jet truncation
Parametrization parse_param_file(std::string_view text);

/// One point per line, coordinates separated by commas.
std::vector<Vector> parse_points(std::string_view text, const ContextPtr& ctx);

}  // namespace eulersym::cli

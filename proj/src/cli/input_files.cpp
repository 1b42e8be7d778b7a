#include "eulersym/cli/input_files.hpp"

#include <cctype>
#include <optional>
#include <set>

namespace eulersym::cli {

namespace {

struct Line {
  int number;         // 1-based
  std::string text;   // comment stripped
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    out.push_back({number, std::move(line)});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

bool blank(const std::string& s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

struct Field {
  std::string key;
  std::string value;
  int line;
  int value_column;  // 1-based column of value[0]
  int key_column;
};

Field split_field(const Line& line) {
  std::size_t first = 0;
  while (first < line.text.size() && std::isspace(static_cast<unsigned char>(line.text[first]))) ++first;
  auto colon = line.text.find(':');
  if (colon == std::string::npos) throw ParseError("expected 'key: value'", line.number, static_cast<int>(first) + 1);
  std::string key = line.text.substr(first, colon - first);
  while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
  return {key, line.text.substr(colon + 1), line.number, static_cast<int>(colon) + 2, static_cast<int>(first) + 1};
}

struct Item {
  std::string text;
  int column;  // 1-based column of text[0] on its line
};

// Splits on `sep`, trimming surrounding spaces; positions refer to the original line.
std::vector<Item> split_items(const Field& f, char sep) {
  std::vector<Item> out;
  std::size_t start = 0;
  while (true) {
    std::size_t end = f.value.find(sep, start);
    if (end == std::string::npos) end = f.value.size();
    std::size_t a = start;
    std::size_t b = end;
    while (a < b && std::isspace(static_cast<unsigned char>(f.value[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(f.value[b - 1]))) --b;
    out.push_back({f.value.substr(a, b - a), f.value_column + static_cast<int>(a)});
    if (end == f.value.size()) break;
    start = end + 1;
  }
  return out;
}

std::vector<Item> split_words(const Field& f) {
  std::vector<Item> out;
  std::size_t i = 0;
  while (i < f.value.size()) {
    while (i < f.value.size() && std::isspace(static_cast<unsigned char>(f.value[i]))) ++i;
    std::size_t start = i;
    while (i < f.value.size() && !std::isspace(static_cast<unsigned char>(f.value[i]))) ++i;
    if (i > start) out.push_back({f.value.substr(start, i - start), f.value_column + static_cast<int>(start)});
  }
  return out;
}

ContextPtr parse_vars(const Field& f) {
  auto words = split_words(f);
  if (words.empty()) throw ParseError("no variables declared", f.line, f.value_column);
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (const auto& w : words) {
    bool ok = std::isalpha(static_cast<unsigned char>(w.text[0])) || w.text[0] == '_';
    for (char c : w.text) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
    if (!ok) throw ParseError("invalid variable name '" + w.text + "'", f.line, w.column);
    if (!seen.insert(w.text).second) throw ParseError("duplicate variable '" + w.text + "'", f.line, w.column);
    names.push_back(w.text);
  }
  return make_context(std::move(names));
}

Polynomial parse_item(const Item& item, const ContextPtr& ctx, int line) {
  if (item.text.empty()) throw ParseError("empty entry", line, item.column);
  try {
    return parse_polynomial(item.text, ctx);
  } catch (const ParseError& e) {
    throw e.at(line, item.column - 1);
  }
}

Scalar parse_rational_item(const Item& item, int line) {
  if (item.text.empty()) throw ParseError("empty entry", line, item.column);
  try {
    return parse_scalar(item.text);
  } catch (const Error& e) {
    throw ParseError(e.what(), line, item.column);
  }
}

int parse_positive_int(const Field& f, const std::string& what) {
  auto words = split_words(f);
  if (words.size() != 1) throw ParseError("expected one integer for '" + what + "'", f.line, f.value_column);
  for (char c : words[0].text)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("expected a positive integer for '" + what + "'", f.line, words[0].column);
  int v = std::stoi(words[0].text);
  if (v < 1) throw ParseError("'" + what + "' must be >= 1", f.line, words[0].column);
  return v;
}

// F<k> header -> k, or nullopt when the key is not of that shape.
std::optional<int> component_index(const std::string& key) {
  if (key.size() < 2 || key[0] != 'F') return std::nullopt;
  for (std::size_t i = 1; i < key.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(key[i]))) return std::nullopt;
  return std::stoi(key.substr(1));
}

std::vector<Field> fields_of(std::string_view text) {
  std::vector<Field> out;
  for (const auto& line : split_lines(text))
    if (!blank(line.text)) out.push_back(split_field(line));
  return out;
}

}  // namespace

std::vector<FormSpace> SymbolFile::components() const {
  std::vector<FormSpace> out{FormSpace::full(context, 0), FormSpace::full(context, 1)};
  for (int k = 2; k <= rank; ++k) {
    auto it = generators.find(k);
    out.push_back(it == generators.end() ? FormSpace::zero(context, k) : FormSpace::span(context, k, it->second));
  }
  return out;
}

ValidationResult SymbolFile::validate() const { return SymbolSystem::validate(context, components()); }

SymbolFile parse_symbol_file(std::string_view text) {
  SymbolFile file;
  std::optional<Field> rank_field;
  std::set<int> seen;
  std::vector<Field> component_fields;
  for (const auto& f : fields_of(text)) {
    if (f.key == "vars") {
      if (file.context) throw ParseError("duplicate 'vars' line", f.line, f.key_column);
      file.context = parse_vars(f);
    } else if (f.key == "rank") {
      if (rank_field) throw ParseError("duplicate 'rank' line", f.line, f.key_column);
      file.rank = parse_positive_int(f, "rank");
      rank_field = f;
    } else if (auto k = component_index(f.key)) {
      if (*k <= 1) throw ParseError("F0 and F1 are fixed and must not be written", f.line, f.key_column);
      if (!seen.insert(*k).second) throw ParseError("duplicate component " + f.key, f.line, f.key_column);
      component_fields.push_back(f);
    } else {
      throw ParseError("unknown key '" + f.key + "'", f.line, f.key_column);
    }
  }
  if (!file.context) throw ParseError("missing 'vars' line", 0, 0);
  if (!rank_field) throw ParseError("missing 'rank' line", 0, 0);
  for (const auto& f : component_fields) {
    const int k = *component_index(f.key);
    if (k > file.rank)
      throw ParseError(f.key + " exceeds the declared rank " + std::to_string(file.rank), f.line, f.key_column);
    std::vector<Polynomial> gens;
    for (const auto& item : split_items(f, ',')) {
      Polynomial p = parse_item(item, file.context, f.line);
      if (!p.is_zero() && p.homogeneous_degree() != k)
        throw ParseError("degree mismatch: " + f.key + " expects homogeneous degree-" + std::to_string(k) +
                             " forms, got '" + item.text + "'",
                         f.line, item.column);
      gens.push_back(std::move(p));
    }
    file.generators.emplace(k, std::move(gens));
  }
  return file;
}

std::string format_symbol_file(const SymbolSystem& system) {
  std::string out = "vars:";
  for (const auto& n : system.context()->names()) out += " " + n;
  out += "\nrank: " + std::to_string(system.rank()) + "\n";
  for (int k = 2; k <= system.rank(); ++k) {
    const FormSpace component = system.component(k);
    const auto& basis = component.basis();
    if (basis.empty()) continue;
    out += "F" + std::to_string(k) + ":";
    for (std::size_t i = 0; i < basis.size(); ++i) out += (i ? ", " : " ") + basis[i].to_string();
    out += "\n";
  }
  return out;
}

Parametrization parse_param_file(std::string_view text) {
  Parametrization param;
  std::optional<Field> coords_field;
  std::optional<Field> at_field;
  for (const auto& f : fields_of(text)) {
    if (f.key == "vars") {
      if (param.context) throw ParseError("duplicate 'vars' line", f.line, f.key_column);
      param.context = parse_vars(f);
    } else if (f.key == "coords") {
      if (coords_field) throw ParseError("duplicate 'coords' line", f.line, f.key_column);
      coords_field = f;
    } else if (f.key == "at") {
      if (at_field) throw ParseError("duplicate 'at' line", f.line, f.key_column);
      at_field = f;
    } else if (f.key == "degree") {
      param.truncation_degree = parse_positive_int(f, "degree");
    } else {
      throw ParseError("unknown key '" + f.key + "'", f.line, f.key_column);
    }
  }
  if (!param.context) throw ParseError("missing 'vars' line", 0, 0);
  if (!coords_field) throw ParseError("missing 'coords' line", 0, 0);
  if (blank(coords_field->value))
    throw ParseError("empty embedding: 'coords' lists no functions", coords_field->line, coords_field->value_column);
  for (const auto& item : split_items(*coords_field, ','))
    param.coords.push_back(parse_item(item, param.context, coords_field->line));
  if (at_field) {
    auto items = split_items(*at_field, ',');
    if (items.size() != param.context->size())
      throw ParseError("base point needs " + std::to_string(param.context->size()) + " coordinates", at_field->line,
                       at_field->value_column);
    std::vector<Scalar> coords;
    for (const auto& item : items) coords.push_back(parse_rational_item(item, at_field->line));
    param.base_point = Vector(param.context, std::move(coords));
  }
  return param;
}

std::vector<Vector> parse_points(std::string_view text, const ContextPtr& ctx) {
  std::vector<Vector> out;
  for (const auto& line : split_lines(text)) {
    if (blank(line.text)) continue;
    Field f{"", line.text, line.number, 1, 1};
    auto items = split_items(f, ',');
    if (items.size() != ctx->size())
      throw ParseError("point needs " + std::to_string(ctx->size()) + " coordinates", line.number, 1);
    std::vector<Scalar> coords;
    for (const auto& item : items) coords.push_back(parse_rational_item(item, line.number));
    out.emplace_back(ctx, std::move(coords));
  }
  return out;
}

}  // namespace eulersym::cli

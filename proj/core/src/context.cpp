#include "ltvcl/context.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "ltvcl/error.hpp"
#include "text_util.hpp"

namespace ltvcl {

namespace {

template <class Names>
std::optional<std::size_t> find_name(const Names& names, std::string_view name) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names.begin());
}

std::string read_file(const std::string& path, const char* what) {
  std::ifstream in(path);
  if (!in) throw LoadError(std::string("cannot open ") + what + " '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Calls f(subset) for every strictly increasing index tuple of the given
// size over [0, n), in lexicographic order.
template <class F>
void for_each_subset(std::size_t n, std::size_t size, F&& f) {
  if (size == 0 || size > n) return;
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t p = size;
    while (p > 0 && idx[p - 1] == p - 1 + n - size) --p;
    if (p == 0) return;
    ++idx[p - 1];
    for (std::size_t q = p; q < size; ++q) idx[q] = idx[q - 1] + 1;
  }
}

}  // namespace

std::vector<Alias> paper_aliases() {
  return {{"a", TruthValue{1, 2}}, {"b", TruthValue{3, 1}}, {"I", TruthValue{3, 2}}, {"O", TruthValue{1, 1}}};
}

FuzzyContext::FuzzyContext(Algebra algebra, std::vector<std::string> objects, std::vector<std::string> attributes,
                           std::vector<std::vector<TruthValue>> matrix, std::vector<AttributeProvenance> provenance,
                           std::vector<Alias> aliases)
    : algebra_(std::move(algebra)),
      objects_(std::move(objects)),
      attributes_(std::move(attributes)),
      matrix_(std::move(matrix)),
      provenance_(std::move(provenance)),
      aliases_(std::move(aliases)) {
  if (std::set<std::string>(objects_.begin(), objects_.end()).size() != objects_.size())
    throw ArgumentError("object names are not unique");
  if (std::set<std::string>(attributes_.begin(), attributes_.end()).size() != attributes_.size())
    throw ArgumentError("attribute names are not unique");
  if (matrix_.size() != objects_.size())
    throw DimensionError("matrix has " + std::to_string(matrix_.size()) + " rows for " +
                         std::to_string(objects_.size()) + " objects");
  for (std::size_t g = 0; g < matrix_.size(); ++g) {
    if (matrix_[g].size() != attributes_.size())
      throw DimensionError("row '" + objects_[g] + "' has " + std::to_string(matrix_[g].size()) + " values for " +
                           std::to_string(attributes_.size()) + " attributes");
    for (const auto& v : matrix_[g])
      if (!algebra_.contains(v)) throw DimensionError("row '" + objects_[g] + "' holds a value outside the algebra");
  }

  if (provenance_.empty()) provenance_.assign(attributes_.size(), AttributeProvenance::original());
  if (provenance_.size() != attributes_.size())
    throw DimensionError("provenance list does not match the attribute list");
  for (std::size_t m = 0; m < provenance_.size(); ++m) {
    const auto& p = provenance_[m];
    if (p.kind != AttributeProvenance::Kind::MeetOf) {
      if (!p.sources.empty()) throw ArgumentError("only meet columns carry sources");
      continue;
    }
    if (p.sources.size() < 2) throw ArgumentError("meet column '" + attributes_[m] + "' needs at least two sources");
    for (std::size_t i = 0; i < p.sources.size(); ++i) {
      const auto s = p.sources[i];
      if (s >= attributes_.size() || provenance_[s].kind != AttributeProvenance::Kind::Original)
        throw ArgumentError("meet column '" + attributes_[m] + "' references a non-original attribute");
      if (i > 0 && s <= p.sources[i - 1])
        throw ArgumentError("meet column '" + attributes_[m] + "' sources are not strictly increasing");
    }
  }

  for (std::size_t i = 0; i < aliases_.size(); ++i) {
    if (!algebra_.contains(aliases_[i].value)) throw ArgumentError("alias '" + aliases_[i].token + "' is out of range");
    for (std::size_t j = 0; j < i; ++j)
      if (aliases_[j].token == aliases_[i].token) throw ArgumentError("alias '" + aliases_[i].token + "' bound twice");
  }
}

std::vector<TruthValue> FuzzyContext::column(std::size_t attribute) const {
  if (attribute >= attributes_.size()) throw DimensionError("attribute index out of range");
  std::vector<TruthValue> col;
  col.reserve(matrix_.size());
  for (const auto& row : matrix_) col.push_back(row[attribute]);
  return col;
}

bool FuzzyContext::all_original() const {
  return std::all_of(provenance_.begin(), provenance_.end(),
                     [](const auto& p) { return p.kind == AttributeProvenance::Kind::Original; });
}

std::optional<std::size_t> FuzzyContext::object_index(std::string_view name) const { return find_name(objects_, name); }

std::optional<std::size_t> FuzzyContext::attribute_index(std::string_view name) const {
  return find_name(attributes_, name);
}

std::string FuzzyContext::display(const TruthValue& v) const {
  for (const auto& a : aliases_)
    if (a.value == v) return a.token;
  return algebra_.name_of(v);
}

std::vector<TruthValue> FuzzyContext::values() const {
  std::set<TruthValue> seen;
  for (const auto& row : matrix_) seen.insert(row.begin(), row.end());
  return {seen.begin(), seen.end()};
}

bool FuzzyContext::same_data(const FuzzyContext& other) const {
  return algebra_ == other.algebra_ && objects_ == other.objects_ && attributes_ == other.attributes_ &&
         matrix_ == other.matrix_;
}

FuzzyContext parse_context(std::string_view text, const std::string& base_dir) {
  std::optional<Algebra> algebra;
  std::vector<Alias> aliases;
  std::optional<std::vector<std::string>> attributes;
  std::vector<std::string> objects;
  std::vector<std::vector<TruthValue>> matrix;

  auto resolve = [&](const std::string& token, std::size_t line) {
    for (const auto& a : aliases)
      if (a.token == token) return a.value;
    if (auto v = algebra->parse_value(token)) return *v;
    throw ParseError(line, "unknown label '" + token + "' for algebra " + algebra->description());
  };

  std::size_t line_no = 0;
  for (const auto& raw : split_lines(text)) {
    ++line_no;
    const auto tokens = tokenize(strip_comment(raw));
    if (tokens.empty()) continue;
    const auto& head = tokens[0];

    if (head == "algebra") {
      if (algebra) throw ParseError(line_no, "duplicate 'algebra' directive");
      if (tokens.size() >= 2 && tokens[1] == "product") {
        std::vector<int> sizes;
        for (std::size_t i = 2; i < tokens.size(); ++i) {
          auto s = parse_int(tokens[i]);
          if (!s) throw ParseError(line_no, "chain size '" + tokens[i] + "' is not an integer");
          sizes.push_back(*s);
        }
        try {
          algebra = Algebra::product(sizes);
        } catch (const Error& e) {
          throw ParseError(line_no, e.what());
        }
      } else if (tokens.size() == 3 && tokens[1] == "table") {
        std::filesystem::path path(tokens[2]);
        if (path.is_relative() && !base_dir.empty()) path = std::filesystem::path(base_dir) / path;
        try {
          algebra = parse_table_algebra(read_file(path.string(), "table algebra file"), tokens[2]);
        } catch (const Error& e) {
          throw ParseError(line_no, e.what());
        }
      } else {
        throw ParseError(line_no, "expected 'algebra product <sizes...>' or 'algebra table <path>'");
      }
    } else if (head == "alias") {
      if (!algebra) throw ParseError(line_no, "'alias' before 'algebra'");
      if (!objects.empty()) throw ParseError(line_no, "'alias' after object rows");
      if (tokens.size() == 2 && tokens[1] == "paper") {
        if (!algebra->is_default()) throw ParseError(line_no, "the paper alias map needs algebra product 3 2");
        for (auto& a : paper_aliases()) aliases.push_back(std::move(a));
        continue;
      }
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const auto eq = tokens[i].find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == tokens[i].size())
          throw ParseError(line_no, "alias '" + tokens[i] + "' is not of the form token=value");
        const std::string token = tokens[i].substr(0, eq);
        const auto value = algebra->parse_value(tokens[i].substr(eq + 1));
        if (!value) throw ParseError(line_no, "alias target '" + tokens[i].substr(eq + 1) + "' is not a value of " +
                                                  algebra->description());
        if (auto canon = algebra->parse_value(token); canon && *canon != *value)
          throw ParseError(line_no, "alias '" + token + "' shadows a canonical value");
        for (const auto& a : aliases)
          if (a.token == token) throw ParseError(line_no, "alias '" + token + "' bound twice");
        aliases.push_back({token, *value});
      }
    } else if (head == "attributes") {
      if (!algebra) throw ParseError(line_no, "'attributes' before 'algebra'");
      if (attributes) throw ParseError(line_no, "duplicate 'attributes' directive");
      attributes.emplace(tokens.begin() + 1, tokens.end());
      std::set<std::string> seen;
      for (const auto& a : *attributes)
        if (!seen.insert(a).second) throw ParseError(line_no, "duplicate attribute name '" + a + "'");
    } else {
      if (!attributes) throw ParseError(line_no, "object row before 'attributes'");
      if (find_name(objects, head)) throw ParseError(line_no, "duplicate object name '" + head + "'");
      if (tokens.size() - 1 != attributes->size())
        throw ParseError(line_no, "row '" + head + "' has " + std::to_string(tokens.size() - 1) + " values, expected " +
                                      std::to_string(attributes->size()));
      std::vector<TruthValue> row;
      for (std::size_t i = 1; i < tokens.size(); ++i) row.push_back(resolve(tokens[i], line_no));
      objects.push_back(head);
      matrix.push_back(std::move(row));
    }
  }
  if (!algebra) throw ParseError(0, "missing 'algebra' directive");
  if (!attributes) throw ParseError(0, "missing 'attributes' directive");
  return FuzzyContext(*algebra, std::move(objects), std::move(*attributes), std::move(matrix), {},
                      std::move(aliases));
}

FuzzyContext load_context_file(const std::string& path) {
  const auto text = read_file(path, "context file");
  return parse_context(text, std::filesystem::path(path).parent_path().string());
}

std::string provenance_formula(const FuzzyContext& context, std::size_t attribute) {
  const auto& p = context.provenance(attribute);
  switch (p.kind) {
    case AttributeProvenance::Kind::Original:
      return "original";
    case AttributeProvenance::Kind::ConstantTop:
      return "top";
    case AttributeProvenance::Kind::MeetOf: {
      std::string out = "meet(";
      for (std::size_t i = 0; i < p.sources.size(); ++i) {
        if (i) out += ',';
        out += context.attributes()[p.sources[i]];
      }
      return out + ")";
    }
  }
  return {};
}

std::string serialize_context(const FuzzyContext& context) {
  std::ostringstream os;
  os << "algebra " << context.algebra().description() << '\n';
  if (!context.aliases().empty()) {
    os << "alias";
    for (const auto& a : context.aliases()) os << ' ' << a.token << '=' << context.algebra().name_of(a.value);
    os << '\n';
  }
  os << "attributes";
  for (const auto& m : context.attributes()) os << ' ' << m;
  os << '\n';
  for (std::size_t m = 0; m < context.attribute_count(); ++m)
    if (context.provenance(m).kind != AttributeProvenance::Kind::Original)
      os << "# " << context.attributes()[m] << " = " << provenance_formula(context, m) << '\n';
  for (std::size_t g = 0; g < context.object_count(); ++g) {
    os << context.objects()[g];
    for (const auto& v : context.matrix()[g]) os << ' ' << context.display(v);
    os << '\n';
  }
  return os.str();
}

ExtensionConfig ExtensionConfig::paper_preset() {
  ExtensionConfig c;
  c.explicit_meets = {{0, 1}};
  return c;
}

FuzzyContext extend_context(const FuzzyContext& base, const ExtensionConfig& config) {
  if (config.max_meet_arity < 2) throw ArgumentError("max_meet_arity must be at least 2");
  if (!base.all_original()) throw ArgumentError("extend_context expects a context of original attributes only");
  const std::size_t m = base.attribute_count();
  const Algebra& alg = base.algebra();

  std::vector<std::vector<TruthValue>> columns;
  for (std::size_t j = 0; j < m; ++j) columns.push_back(base.column(j));
  auto attributes = base.attributes();
  std::vector<AttributeProvenance> provenance(m);

  std::size_t next_number = m + 1;
  auto fresh_name = [&] {
    std::string name;
    do {
      name = "m" + std::to_string(next_number++);
    } while (find_name(attributes, name));
    return name;
  };
  auto add = [&](std::vector<TruthValue> col, AttributeProvenance prov) {
    if (config.novelty_filter && std::find(columns.begin(), columns.end(), col) != columns.end()) return;
    columns.push_back(std::move(col));
    attributes.push_back(fresh_name());
    provenance.push_back(std::move(prov));
  };
  auto add_meet = [&](const std::vector<std::size_t>& subset) {
    std::vector<TruthValue> col = columns[subset[0]];
    for (std::size_t g = 0; g < col.size(); ++g)
      for (std::size_t i = 1; i < subset.size(); ++i) col[g] = alg.meet(col[g], columns[subset[i]][g]);
    add(std::move(col), AttributeProvenance::meet_of(subset));
  };

  if (!config.explicit_meets.empty()) {
    for (const auto& subset : config.explicit_meets) {
      if (subset.size() < 2) throw ArgumentError("explicit meet subsets need at least two attributes");
      for (std::size_t i = 0; i < subset.size(); ++i)
        if (subset[i] >= m || (i > 0 && subset[i] <= subset[i - 1]))
          throw ArgumentError("explicit meet subset is out of range or not strictly increasing");
      add_meet(subset);
    }
  } else {
    for (std::size_t k = 2; k <= std::min(config.max_meet_arity, m); ++k) for_each_subset(m, k, add_meet);
  }
  if (config.include_top_column)
    add(std::vector<TruthValue>(base.object_count(), alg.top()), AttributeProvenance::constant_top());

  std::vector<std::vector<TruthValue>> matrix(base.object_count());
  for (std::size_t g = 0; g < base.object_count(); ++g)
    for (const auto& col : columns) matrix[g].push_back(col[g]);
  return FuzzyContext(alg, base.objects(), std::move(attributes), std::move(matrix), std::move(provenance),
                      base.aliases());
}

bool restrict_agrees(const FuzzyContext& base, const FuzzyContext& extended) {
  if (!(base.algebra() == extended.algebra()))
    throw StructureError("contexts are over different algebras");
  if (base.object_count() != extended.object_count())
    throw StructureError("contexts have different object counts");
  std::vector<std::size_t> rows;
  for (const auto& g : base.objects()) {
    auto idx = extended.object_index(g);
    if (!idx) throw StructureError("object '" + g + "' is missing from the extended context");
    rows.push_back(*idx);
  }
  std::vector<std::size_t> cols;
  for (const auto& a : base.attributes()) {
    auto idx = extended.attribute_index(a);
    if (!idx) throw StructureError("attribute '" + a + "' is missing from the extended context");
    cols.push_back(*idx);
  }
  for (std::size_t g = 0; g < rows.size(); ++g)
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (base.at(g, j) != extended.at(rows[g], cols[j])) return false;
  return true;
}

}  // namespace ltvcl

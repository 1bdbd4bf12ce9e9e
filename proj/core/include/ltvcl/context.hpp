#pragma once

// Linguistic truth-valued formal contexts and the attribute-extension
// generator that manufactures candidate tacit attributes.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ltvcl/lia.hpp"

namespace ltvcl {

/// Where an attribute column came from.
struct AttributeProvenance {
  enum class Kind { Original, MeetOf, ConstantTop };

  Kind kind = Kind::Original;
  /// Indices of Original attributes, strictly increasing; MeetOf only.
  std::vector<std::size_t> sources;

  static AttributeProvenance original() { return {}; }
  static AttributeProvenance meet_of(std::vector<std::size_t> sources) {
    return {Kind::MeetOf, std::move(sources)};
  }
  static AttributeProvenance constant_top() { return {Kind::ConstantTop, {}}; }

  friend bool operator==(const AttributeProvenance&, const AttributeProvenance&) = default;
};

/// A display token bound to a value, e.g. `a=SlT`.
struct Alias {
  std::string token;
  TruthValue value;

  friend bool operator==(const Alias&, const Alias&) = default;
};

/// a -> SlT, b -> SlF, I -> AbT, O -> AbF: the assignment under which the
/// product algebra reproduces the worked example contexts in data/.
std::vector<Alias> paper_aliases();

class FuzzyContext {
 public:
  /// Validates shapes, name uniqueness, membership of every value and the
  /// provenance invariants. An empty `provenance` means all Original.
  FuzzyContext(Algebra algebra, std::vector<std::string> objects, std::vector<std::string> attributes,
               std::vector<std::vector<TruthValue>> matrix, std::vector<AttributeProvenance> provenance = {},
               std::vector<Alias> aliases = {});

  const Algebra& algebra() const { return algebra_; }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<std::string>& attributes() const { return attributes_; }
  std::size_t object_count() const { return objects_.size(); }
  std::size_t attribute_count() const { return attributes_.size(); }

  const TruthValue& at(std::size_t object, std::size_t attribute) const { return matrix_[object][attribute]; }
  const std::vector<std::vector<TruthValue>>& matrix() const { return matrix_; }
  std::vector<TruthValue> column(std::size_t attribute) const;

  const AttributeProvenance& provenance(std::size_t attribute) const { return provenance_[attribute]; }
  const std::vector<AttributeProvenance>& provenance() const { return provenance_; }
  bool all_original() const;

  std::optional<std::size_t> object_index(std::string_view name) const;
  std::optional<std::size_t> attribute_index(std::string_view name) const;

  const std::vector<Alias>& aliases() const { return aliases_; }
  /// Alias token when one is bound to `v`, else the canonical spelling.
  std::string display(const TruthValue& v) const;

  /// Every value appearing in the matrix, deduplicated, canonical order.
  std::vector<TruthValue> values() const;

  /// Same algebra, names and matrix; provenance and aliases are ignored.
  bool same_data(const FuzzyContext& other) const;

 private:
  Algebra algebra_;
  std::vector<std::string> objects_;
  std::vector<std::string> attributes_;
  std::vector<std::vector<TruthValue>> matrix_;
  std::vector<AttributeProvenance> provenance_;
  std::vector<Alias> aliases_;
};

/// Parses the context file format:
///   algebra product 3 2            (or: algebra table <path>)
///   alias a=SlT b=SlF I=AbT O=AbF   (optional; `alias paper` for the
///                                    built-in map)
///   attributes m1 m2 m3
///   g1 a b I
/// Table paths are resolved against `base_dir` when relative.
FuzzyContext parse_context(std::string_view text, const std::string& base_dir = "");
FuzzyContext load_context_file(const std::string& path);

/// Canonical text form; provenance of non-original columns is written as
/// `# m4 = meet(m1,m2)` / `# m5 = top` comment lines.
std::string serialize_context(const FuzzyContext& context);

/// Human-readable formula for an attribute's provenance, e.g.
/// "meet(m1,m2)", "top" or "original".
std::string provenance_formula(const FuzzyContext& context, std::size_t attribute);

struct ExtensionConfig {
  std::size_t max_meet_arity = 2;
  bool include_top_column = true;
  bool novelty_filter = true;
  /// When non-empty, only these subsets (original attribute indices) are
  /// used instead of enumerating every subset up to max_meet_arity.
  std::vector<std::vector<std::size_t>> explicit_meets;

  /// The two columns of the worked example: meet(m1,m2) and the top column.
  static ExtensionConfig paper_preset();
};

/// Builds the attribute-extended context: meet columns for every subset of
/// original attributes of size 2..max_meet_arity (arity ascending, index
/// tuples lexicographic), then the constant-top column. Original columns are
/// copied unchanged. With the novelty filter, a candidate equal to an
/// existing or already added column is dropped.
FuzzyContext extend_context(const FuzzyContext& base, const ExtensionConfig& config = {});

/// True iff `extended` restricted to `base`'s attributes equals `base`.
/// Objects are matched by name and must coincide as sets; missing names
/// raise StructureError.
bool restrict_agrees(const FuzzyContext& base, const FuzzyContext& extended);

}  // namespace ltvcl

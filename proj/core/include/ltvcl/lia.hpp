#pragma once

// Finite lattice implication algebras.
//
// Two constructions are supported: products of Lukasiewicz chains (the
// default algebra L6 is the product of a 3-chain and a 2-chain) and algebras
// loaded from an implication table. Both are immutable once built and share
// the same value type, so every later stage is agnostic of how the algebra
// was obtained.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ltvcl {

/// An element of a finite algebra, stored as 1-based chain indices, one per
/// factor chain. Table algebras use a single coordinate: the element's
/// position in the declared element list.
struct TruthValue {
  std::vector<int> coords;

  TruthValue() = default;
  TruthValue(std::initializer_list<int> c) : coords(c) {}
  explicit TruthValue(std::vector<int> c) : coords(std::move(c)) {}

  friend bool operator==(const TruthValue&, const TruthValue&) = default;
  friend auto operator<=>(const TruthValue&, const TruthValue&) = default;
};

std::ostream& operator<<(std::ostream& os, const TruthValue& v);

enum class Modifier { Sl = 1, Ve = 2, Ab = 3 };
enum class Meta { Fa, Tr };

/// A hedged truth judgment such as (Ve, Fa), "very false".
struct LinguisticLabel {
  Modifier modifier;
  Meta meta;

  friend bool operator==(const LinguisticLabel&, const LinguisticLabel&) = default;
};

/// Spelling used throughout the project: modifier then T/F, e.g. "VeF".
std::string to_string(LinguisticLabel label);
std::optional<LinguisticLabel> parse_label(std::string_view text);

/// Raw description of a table algebra before validation.
struct TableAlgebraSpec {
  std::vector<std::string> element_names;
  /// imp_rows[i][j] names the value of element_names[i] -> element_names[j].
  std::vector<std::vector<std::string>> imp_rows;
  /// Optional negation table, pairs (x, x'). When empty the negation is
  /// derived as x' = x -> bottom.
  std::vector<std::pair<std::string, std::string>> neg;
};

namespace detail {
struct AlgebraData;
}

class Algebra {
 public:
  enum class Kind { Product, Table };

  /// Product of Lukasiewicz chains of the given sizes; every size must be
  /// at least 2. Throws ArgumentError otherwise.
  static Algebra product(std::vector<int> chain_sizes);

  /// The 6-element default algebra L3 x L2.
  static Algebra l6() { return product({3, 2}); }

  /// Validates totality and antisymmetry of the derived order. `source`
  /// is remembered for `description()` (e.g. the file path it came from).
  static Algebra from_table(const TableAlgebraSpec& spec, std::string source = "");

  Kind kind() const;
  std::size_t size() const;
  /// Number of coordinates per value.
  std::size_t arity() const;
  /// Chain sizes for products; {size()} for table algebras.
  const std::vector<int>& chain_sizes() const;
  /// True for the product [3, 2], the only algebra with linguistic labels.
  bool is_default() const;

  /// "product 3 2" or "table <source>".
  std::string description() const;

  /// All elements in canonical order (lexicographic on coordinates).
  std::vector<TruthValue> elements() const;
  TruthValue element(std::size_t index) const;
  std::size_t index_of(const TruthValue& v) const;
  bool contains(const TruthValue& v) const;

  TruthValue top() const;
  TruthValue bottom() const;

  bool leq(const TruthValue& x, const TruthValue& y) const;
  TruthValue meet(const TruthValue& x, const TruthValue& y) const;
  TruthValue join(const TruthValue& x, const TruthValue& y) const;
  TruthValue imp(const TruthValue& x, const TruthValue& y) const;
  TruthValue neg(const TruthValue& x) const;

  /// Number of elements strictly below v.
  int height(const TruthValue& v) const;

  /// Canonical spelling of a value: a linguistic label on the default
  /// algebra, "(i,j,...)" on other products, the element name on tables.
  std::string name_of(const TruthValue& v) const;
  /// Accepts canonical spellings and, on products, the "(i,j)" form.
  std::optional<TruthValue> parse_value(std::string_view token) const;

  /// Hasse covers (lower, upper) of the algebra's own order.
  std::vector<std::pair<TruthValue, TruthValue>> covers() const;

  /// Smallest subset containing the seeds, top and bottom that is closed
  /// under meet, join, negation and implication; canonical order.
  std::vector<TruthValue> generated_subalgebra(const std::vector<TruthValue>& seeds) const;

  // Index-level access, used by the checker and scans. Indices follow the
  // canonical order of elements(). Partial operations return nullopt.
  std::optional<std::size_t> meet_index(std::size_t x, std::size_t y) const;
  std::optional<std::size_t> join_index(std::size_t x, std::size_t y) const;
  std::size_t imp_index(std::size_t x, std::size_t y) const;
  std::size_t neg_index(std::size_t x) const;
  bool leq_index(std::size_t x, std::size_t y) const;
  std::size_t top_index() const;
  std::size_t bottom_index() const;

  /// Same underlying structure (identity, or equal tables).
  friend bool operator==(const Algebra& a, const Algebra& b);

 private:
  explicit Algebra(std::shared_ptr<const detail::AlgebraData> data);
  std::size_t checked_index(const TruthValue& v, const char* op) const;

  std::shared_ptr<const detail::AlgebraData> data_;
};

/// Parses the line-oriented table format:
///   elements O a b c I
///   imp O I I I I I
///   ...
///   neg a c          (optional)
/// Throws ParseError with a line number, or LoadError from validation.
Algebra parse_table_algebra(std::string_view text, std::string source = "");
Algebra load_table_algebra_file(const std::string& path);

/// One failed law instance.
struct AxiomViolation {
  std::string law;
  std::vector<TruthValue> witness;
};

struct AxiomReport {
  bool passed = true;
  std::vector<AxiomViolation> violations;
  /// Number of (x, y, z) triples visited.
  std::size_t triples_checked = 0;
};

inline constexpr std::size_t kDefaultAxiomBudget = 64;

/// Exhaustively checks the bounded-lattice laws, the order-reversing
/// involution and the seven LIA axioms on every element triple. Algebras
/// larger than `element_budget` raise BudgetError.
AxiomReport check_axioms(const Algebra& algebra,
                         std::size_t element_budget = kDefaultAxiomBudget);

/// Label <-> value bijection on the default algebra:
/// (r, Tr) -> (r, 2) and (r, Fa) -> (4 - r, 1) for modifier rank r.
TruthValue encode_label(const Algebra& algebra, LinguisticLabel label);
LinguisticLabel decode_label(const Algebra& algebra, const TruthValue& v);

}  // namespace ltvcl

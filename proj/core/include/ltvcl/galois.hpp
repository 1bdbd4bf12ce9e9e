#pragma once

// The Galois pair between object-side and attribute-side fuzzy sets, its
// closure operators, exhaustive concept enumeration and the resulting
// concept lattice.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ltvcl/context.hpp"
#include "ltvcl/lia.hpp"

namespace ltvcl {

enum class Side { Objects, Attributes };

/// An L-valued subset of the objects or of the attributes of a context,
/// aligned with the corresponding name list.
struct FuzzySet {
  Side side = Side::Objects;
  std::vector<TruthValue> values;

  friend bool operator==(const FuzzySet&, const FuzzySet&) = default;
  friend auto operator<=>(const FuzzySet&, const FuzzySet&) = default;
};

/// Pointwise inclusion. Throws DimensionError on mismatched sides/lengths.
bool subset_of(const Algebra& algebra, const FuzzySet& a, const FuzzySet& b);
FuzzySet pointwise_meet(const Algebra& algebra, const FuzzySet& a, const FuzzySet& b);
FuzzySet pointwise_join(const Algebra& algebra, const FuzzySet& a, const FuzzySet& b);
FuzzySet constant_set(const FuzzyContext& context, Side side, const TruthValue& value);

/// f1: intent(m) = meet over objects g of (A(g) -> I(g, m)). An empty
/// object set yields the all-top intent.
FuzzySet derive_intent(const FuzzyContext& context, const FuzzySet& extent);
/// f2: extent(g) = meet over attributes m of (B(m) -> I(g, m)).
FuzzySet derive_extent(const FuzzyContext& context, const FuzzySet& intent);
/// f2 . f1
FuzzySet closure_extent(const FuzzyContext& context, const FuzzySet& extent);
/// f1 . f2
FuzzySet closure_intent(const FuzzyContext& context, const FuzzySet& intent);

struct Concept {
  FuzzySet extent;
  FuzzySet intent;

  friend bool operator==(const Concept&, const Concept&) = default;
  friend auto operator<=>(const Concept&, const Concept&) = default;
};

/// f1(extent) == intent and f2(intent) == extent.
bool is_concept(const FuzzyContext& context, const Concept& c);

enum class ScanEngine { ExtentScan, IntentScan };

/// Which truth values a scan ranges over.
///   FullAlgebra: every element of the context's algebra.
///   GeneratedSubalgebra: the sub-algebra generated by the values occurring
///     in the context. The Galois pair maps sets valued in it to sets valued
///     in it, so this yields the concept lattice of the context read over
///     that smaller algebra.
enum class ScanDomain { FullAlgebra, GeneratedSubalgebra };

inline constexpr std::uint64_t kDefaultCandidateBudget = 1'000'000;

struct EnumerationOptions {
  ScanEngine engine = ScanEngine::ExtentScan;
  ScanDomain domain = ScanDomain::FullAlgebra;
  std::uint64_t budget = kDefaultCandidateBudget;
};

/// The values a scan over `context` ranges over, canonical order.
std::vector<TruthValue> scan_values(const FuzzyContext& context, ScanDomain domain);

/// |domain|^|G| for ExtentScan, |domain|^|M| for IntentScan; saturates at
/// UINT64_MAX.
std::uint64_t candidate_count(const FuzzyContext& context, const EnumerationOptions& options);

/// Calls f(set) for every fuzzy set on `side` valued in `domain`
/// (odometer order, last position fastest).
template <class F>
void for_each_fuzzy_set(std::size_t length, Side side, const std::vector<TruthValue>& domain, F&& f);

class ConceptLattice {
 public:
  /// Sorts the concepts canonically, drops duplicates and computes the
  /// order and its Hasse covers. Concepts are trusted to be fixpoints of
  /// `context`; use is_concept to verify.
  ConceptLattice(FuzzyContext context, std::vector<Concept> concepts, ScanDomain domain = ScanDomain::FullAlgebra);

  const FuzzyContext& context() const { return context_; }
  ScanDomain domain() const { return domain_; }
  std::size_t size() const { return concepts_.size(); }
  const std::vector<Concept>& concepts() const { return concepts_; }
  const Concept& operator[](std::size_t i) const { return concepts_[i]; }

  /// c_i <= c_j iff extent_i is pointwise below extent_j.
  bool leq(std::size_t i, std::size_t j) const { return order_[i * concepts_.size() + j] != 0; }
  /// Hasse edges as (lower, upper) index pairs, sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }

  std::optional<std::size_t> index_of(const Concept& c) const;
  std::optional<std::size_t> index_of_extent(const FuzzySet& extent) const;
  std::size_t top() const;
  std::size_t bottom() const;

  std::vector<FuzzySet> extents() const;

  /// Same concept set (the contexts are not compared).
  bool same_concepts(const ConceptLattice& other) const { return concepts_ == other.concepts_; }

 private:
  FuzzyContext context_;
  ScanDomain domain_;
  std::vector<Concept> concepts_;
  std::vector<char> order_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
};

/// Exhaustive scan + closure. ExtentScan closes every A in D^G, IntentScan
/// every B in D^M; both collect the distinct fixpoints. Throws BudgetError
/// naming the candidate count when it exceeds options.budget.
ConceptLattice enumerate_concepts(const FuzzyContext& context, const EnumerationOptions& options = {});

/// (pointwise meet of extents, closure of pointwise join of intents).
/// Both arguments must be members of `lattice` (MembershipError otherwise).
Concept concept_meet(const ConceptLattice& lattice, const Concept& a, const Concept& b);
/// (closure of pointwise join of extents, pointwise meet of intents).
Concept concept_join(const ConceptLattice& lattice, const Concept& a, const Concept& b);

/// "k# (ext1, ext2 | int1, int2, int3)" using the context's display tokens
/// when `use_aliases`, canonical spellings otherwise.
std::string format_concept(const ConceptLattice& lattice, std::size_t index, bool use_aliases = false);

/// Graphviz digraph: one node per concept, one edge upper -> lower per cover.
std::string export_dot(const ConceptLattice& lattice);

/// Parsed form of the JSON export, comparable for round-trip checks.
struct LatticeDocument {
  std::string algebra;
  std::vector<std::string> objects;
  std::vector<std::string> attributes;
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> concepts;
  std::vector<std::pair<std::size_t, std::size_t>> order;
  std::vector<std::pair<std::size_t, std::size_t>> covers;

  friend bool operator==(const LatticeDocument&, const LatticeDocument&) = default;
};

LatticeDocument to_document(const ConceptLattice& lattice);
/// {algebra, objects, attributes, concepts:[{extent, intent}], order, covers}
/// with canonical value spellings; `order` lists strict pairs (i, j), i < j
/// in the lattice order.
std::string export_json(const ConceptLattice& lattice);
LatticeDocument parse_lattice_json(const std::string& text);

// ---------------------------------------------------------------------------

template <class F>
void for_each_fuzzy_set(std::size_t length, Side side, const std::vector<TruthValue>& domain, F&& f) {
  if (domain.empty()) return;
  std::vector<std::size_t> digits(length, 0);
  FuzzySet set{side, std::vector<TruthValue>(length, domain[0])};
  while (true) {
    f(static_cast<const FuzzySet&>(set));
    std::size_t p = length;
    while (p > 0) {
      --p;
      if (++digits[p] < domain.size()) {
        set.values[p] = domain[digits[p]];
        break;
      }
      digits[p] = 0;
      set.values[p] = domain[0];
      if (p == 0) return;
    }
    if (length == 0) return;
  }
}

}  // namespace ltvcl

#pragma once

// Tacit-knowledge mining: congener predicates on attribute-extended
// contexts, sufficient-condition classification of new columns, the fast
// concept extension and the end-to-end mining report.

#include <cstddef>
#include <string>
#include <vector>

#include "ltvcl/context.hpp"
#include "ltvcl/galois.hpp"

namespace ltvcl {

/// Extent-family comparison of a context and one of its extensions.
struct CongenerReport {
  bool is_congener = false;
  std::size_t base_extent_count = 0;
  std::size_t extended_extent_count = 0;
  /// Extents present in exactly one of the two lattices.
  std::vector<FuzzySet> witnesses;
  /// Hasse covers coincide when matched by extent.
  bool covers_match = false;
};

/// Compares two already-enumerated lattices by their extent sets.
CongenerReport compare_extents(const ConceptLattice& base, const ConceptLattice& extended);

/// Enumerates both lattices and compares their extent sets. Requires
/// restrict_agrees(base, extended); throws PreconditionError otherwise.
CongenerReport is_congener(const FuzzyContext& base, const FuzzyContext& extended,
                           const EnumerationOptions& options = {});

/// For one object-side set A: is the base closure of A pointwise below the
/// closure contributed by the new attributes alone,
///   f2(f1(A))(g) <= meet over new n of (f1+(A)(n) -> I+(g, n))  for all g?
bool check_pointwise_condition(const FuzzyContext& base, const FuzzyContext& extended, const FuzzySet& extent);

/// The pointwise condition quantified over every A in D^G.
bool pointwise_condition_all(const FuzzyContext& base, const FuzzyContext& extended,
                             const EnumerationOptions& options = {});
/// The pointwise condition quantified over the base lattice's extents only.
bool pointwise_condition_on_extents(const FuzzyContext& base, const FuzzyContext& extended,
                                    const EnumerationOptions& options = {});

/// Which sufficient condition a new column meets.
enum class Rule {
  PairMeet,  ///< equals the meet of two original columns
  KMeet,     ///< equals the meet of k original columns (k != 2)
  Top,       ///< constant top column
  None,      ///< no sufficient condition found
};

std::string to_string(Rule rule);

struct TheoremCheck {
  Rule rule = Rule::None;
  std::string attribute;
  bool satisfied = false;
  /// Source attribute names for meet rules.
  std::vector<std::string> sources;
};

struct ClassifyOptions {
  std::size_t min_arity = 2;
  /// 0 means every original attribute may participate.
  std::size_t max_arity = 0;
};

/// One entry per attribute of `extended` not present in `base`, in column
/// order. The all-top test comes first, then subsets by ascending arity in
/// lexicographic order; the first exact match wins.
std::vector<TheoremCheck> classify_columns(const FuzzyContext& base, const FuzzyContext& extended,
                                           const ClassifyOptions& options = {});

/// Extends every concept of `base_lattice` to `extended` without a rescan:
/// meet columns append the meet of the matching original intent components,
/// top columns append top, extents are kept. Throws PreconditionError when
/// any new column is unclassified.
ConceptLattice extend_concepts_fast(const ConceptLattice& base_lattice, const FuzzyContext& base,
                                    const FuzzyContext& extended, const ClassifyOptions& options = {});

struct MiningConfig {
  ExtensionConfig extension;
  EnumerationOptions enumeration;
  ClassifyOptions classify;

  /// Two-column extension over the generated sub-algebra, reproducing the
  /// worked example in data/.
  static MiningConfig paper_preset();
};

struct TacitAttribute {
  std::string name;
  AttributeProvenance provenance;
  std::string formula;
};

struct MiningReport {
  std::vector<TacitAttribute> tacit_attributes;
  std::vector<TheoremCheck> theorem_checks;
  CongenerReport congener;
  bool fast_extension_verified = false;
  std::size_t base_concepts = 0;
  std::size_t extended_concepts = 0;
  /// Set when the fast path was refused, e.g. an unclassified column.
  std::string fast_path_note;
};

/// A mining run with its intermediate artifacts.
struct MiningResult {
  MiningReport report;
  FuzzyContext extended;
  ConceptLattice base_lattice;
  ConceptLattice extended_lattice;
};

/// extend_context -> classify_columns -> extend_concepts_fast ->
/// full recomputation -> congener comparison.
MiningResult mine(const FuzzyContext& base, const MiningConfig& config = {});

/// {tacit:[{name, kind, sources}], congener, concepts_base, concepts_ext,
///  fast_verified, witnesses, theorem_checks}
std::string report_to_json(const MiningResult& result);

}  // namespace ltvcl

#include "ltvcl/tacit.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "ltvcl/error.hpp"

namespace ltvcl {

namespace {

void require_restriction(const FuzzyContext& base, const FuzzyContext& extended) {
  bool agrees = false;
  try {
    agrees = restrict_agrees(base, extended);
  } catch (const StructureError& e) {
    throw PreconditionError(std::string("extended context does not extend the base: ") + e.what());
  }
  if (!agrees) throw PreconditionError("extended context alters values of the base attributes");
}

std::vector<std::size_t> new_attributes(const FuzzyContext& base, const FuzzyContext& extended) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < extended.attribute_count(); ++j)
    if (!base.attribute_index(extended.attributes()[j])) out.push_back(j);
  return out;
}

// Rows of `extended` in the order of base's objects.
std::vector<std::size_t> row_map(const FuzzyContext& base, const FuzzyContext& extended) {
  std::vector<std::size_t> rows;
  for (const auto& g : base.objects()) rows.push_back(*extended.object_index(g));
  return rows;
}

std::vector<TruthValue> meet_of_columns(const FuzzyContext& ctx, const std::vector<std::size_t>& cols) {
  std::vector<TruthValue> out(ctx.object_count(), ctx.algebra().top());
  for (std::size_t g = 0; g < ctx.object_count(); ++g)
    for (auto c : cols) out[g] = ctx.algebra().meet(out[g], ctx.at(g, c));
  return out;
}

template <class F>
bool for_each_subset_until(std::size_t n, std::size_t size, F&& f) {
  if (size == 0 || size > n) return false;
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    if (f(idx)) return true;
    std::size_t p = size;
    while (p > 0 && idx[p - 1] == p - 1 + n - size) --p;
    if (p == 0) return false;
    ++idx[p - 1];
    for (std::size_t q = p; q < size; ++q) idx[q] = idx[q - 1] + 1;
  }
}

nlohmann::ordered_json spell(const Algebra& algebra, const FuzzySet& s) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& v : s.values) out.push_back(algebra.name_of(v));
  return out;
}

}  // namespace

std::string to_string(Rule rule) {
  switch (rule) {
    case Rule::PairMeet:
      return "pair-meet";
    case Rule::KMeet:
      return "k-meet";
    case Rule::Top:
      return "top";
    case Rule::None:
      return "none";
  }
  return {};
}

CongenerReport compare_extents(const ConceptLattice& base, const ConceptLattice& extended) {
  const auto a = base.extents();
  const auto b = extended.extents();
  const std::set<FuzzySet> sa(a.begin(), a.end());
  const std::set<FuzzySet> sb(b.begin(), b.end());

  CongenerReport r;
  r.base_extent_count = sa.size();
  r.extended_extent_count = sb.size();
  std::set_symmetric_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(r.witnesses));
  r.is_congener = r.witnesses.empty();

  auto edges = [](const ConceptLattice& l) {
    std::set<std::pair<FuzzySet, FuzzySet>> out;
    for (const auto& [lo, hi] : l.covers()) out.emplace(l[lo].extent, l[hi].extent);
    return out;
  };
  r.covers_match = edges(base) == edges(extended);
  return r;
}

CongenerReport is_congener(const FuzzyContext& base, const FuzzyContext& extended, const EnumerationOptions& options) {
  require_restriction(base, extended);
  return compare_extents(enumerate_concepts(base, options), enumerate_concepts(extended, options));
}

bool check_pointwise_condition(const FuzzyContext& base, const FuzzyContext& extended, const FuzzySet& extent) {
  require_restriction(base, extended);
  const Algebra& alg = base.algebra();
  const auto lhs = closure_extent(base, extent);
  const auto rows = row_map(base, extended);

  for (auto n : new_attributes(base, extended)) {
    TruthValue intent_n = alg.top();
    for (std::size_t g = 0; g < base.object_count(); ++g)
      intent_n = alg.meet(intent_n, alg.imp(extent.values[g], extended.at(rows[g], n)));
    for (std::size_t g = 0; g < base.object_count(); ++g)
      if (!alg.leq(lhs.values[g], alg.imp(intent_n, extended.at(rows[g], n)))) return false;
  }
  return true;
}

bool pointwise_condition_all(const FuzzyContext& base, const FuzzyContext& extended,
                             const EnumerationOptions& options) {
  EnumerationOptions scan = options;
  scan.engine = ScanEngine::ExtentScan;
  const std::uint64_t candidates = candidate_count(base, scan);
  if (candidates > options.budget)
    throw BudgetError("pointwise scan needs " + std::to_string(candidates) + " candidates, budget is " +
                      std::to_string(options.budget));
  bool all = true;
  for_each_fuzzy_set(base.object_count(), Side::Objects, scan_values(base, options.domain),
                     [&](const FuzzySet& a) { all = all && check_pointwise_condition(base, extended, a); });
  return all;
}

bool pointwise_condition_on_extents(const FuzzyContext& base, const FuzzyContext& extended,
                                    const EnumerationOptions& options) {
  const auto lattice = enumerate_concepts(base, options);
  for (const auto& c : lattice.concepts())
    if (!check_pointwise_condition(base, extended, c.extent)) return false;
  return true;
}

std::vector<TheoremCheck> classify_columns(const FuzzyContext& base, const FuzzyContext& extended,
                                           const ClassifyOptions& options) {
  require_restriction(base, extended);
  const Algebra& alg = base.algebra();
  const auto rows = row_map(base, extended);
  const std::size_t m = base.attribute_count();
  const std::size_t max_arity = options.max_arity == 0 ? m : std::min(options.max_arity, m);

  std::vector<TheoremCheck> checks;
  for (auto n : new_attributes(base, extended)) {
    TheoremCheck check;
    check.attribute = extended.attributes()[n];
    std::vector<TruthValue> column;
    for (auto r : rows) column.push_back(extended.at(r, n));

    if (std::all_of(column.begin(), column.end(), [&](const auto& v) { return v == alg.top(); })) {
      check.rule = Rule::Top;
    } else {
      for (std::size_t k = std::max<std::size_t>(options.min_arity, 1); k <= max_arity; ++k) {
        const bool found = for_each_subset_until(m, k, [&](const std::vector<std::size_t>& subset) {
          if (meet_of_columns(base, subset) != column) return false;
          check.rule = k == 2 ? Rule::PairMeet : Rule::KMeet;
          for (auto s : subset) check.sources.push_back(base.attributes()[s]);
          return true;
        });
        if (found) break;
      }
    }
    check.satisfied = check.rule != Rule::None;
    checks.push_back(std::move(check));
  }
  return checks;
}

ConceptLattice extend_concepts_fast(const ConceptLattice& base_lattice, const FuzzyContext& base,
                                    const FuzzyContext& extended, const ClassifyOptions& options) {
  const auto checks = classify_columns(base, extended, options);
  for (const auto& c : checks)
    if (!c.satisfied)
      throw PreconditionError("column '" + c.attribute +
                              "' is neither a meet of original columns nor all-top; use full enumeration");

  const Algebra& alg = base.algebra();
  // For every extended attribute: the base index it copies, or the check
  // describing how to derive it.
  std::vector<std::optional<std::size_t>> copy_of(extended.attribute_count());
  std::vector<const TheoremCheck*> rule_of(extended.attribute_count(), nullptr);
  std::size_t next_check = 0;
  for (std::size_t j = 0; j < extended.attribute_count(); ++j) {
    if (auto b = base.attribute_index(extended.attributes()[j]))
      copy_of[j] = *b;
    else
      rule_of[j] = &checks[next_check++];
  }

  const auto rows = row_map(base, extended);
  std::vector<Concept> concepts;
  for (const auto& c : base_lattice.concepts()) {
    FuzzySet intent{Side::Attributes, {}};
    for (std::size_t j = 0; j < extended.attribute_count(); ++j) {
      if (copy_of[j]) {
        intent.values.push_back(c.intent.values[*copy_of[j]]);
        continue;
      }
      if (rule_of[j]->rule == Rule::Top) {
        intent.values.push_back(alg.top());
        continue;
      }
      TruthValue v = alg.top();
      for (const auto& name : rule_of[j]->sources) v = alg.meet(v, c.intent.values[*base.attribute_index(name)]);
      intent.values.push_back(v);
    }
    // extents follow the extended context's object order
    FuzzySet extent{Side::Objects, std::vector<TruthValue>(extended.object_count())};
    for (std::size_t g = 0; g < rows.size(); ++g) extent.values[rows[g]] = c.extent.values[g];
    concepts.push_back(Concept{std::move(extent), std::move(intent)});
  }
  return ConceptLattice(extended, std::move(concepts), base_lattice.domain());
}

MiningConfig MiningConfig::paper_preset() {
  MiningConfig c;
  c.extension = ExtensionConfig::paper_preset();
  c.enumeration.domain = ScanDomain::GeneratedSubalgebra;
  return c;
}

MiningResult mine(const FuzzyContext& base, const MiningConfig& config) {
  auto extended = extend_context(base, config.extension);
  auto base_lattice = enumerate_concepts(base, config.enumeration);
  auto extended_lattice = enumerate_concepts(extended, config.enumeration);

  MiningReport report;
  for (std::size_t j = base.attribute_count(); j < extended.attribute_count(); ++j)
    report.tacit_attributes.push_back(
        {extended.attributes()[j], extended.provenance(j), provenance_formula(extended, j)});
  report.theorem_checks = classify_columns(base, extended, config.classify);
  report.base_concepts = base_lattice.size();
  report.extended_concepts = extended_lattice.size();
  try {
    const auto fast = extend_concepts_fast(base_lattice, base, extended, config.classify);
    report.fast_extension_verified = fast.same_concepts(extended_lattice);
    if (!report.fast_extension_verified) report.fast_path_note = "fast extension disagrees with full recomputation";
  } catch (const PreconditionError& e) {
    report.fast_path_note = e.what();
  }
  report.congener = compare_extents(base_lattice, extended_lattice);
  return MiningResult{std::move(report), std::move(extended), std::move(base_lattice), std::move(extended_lattice)};
}

std::string report_to_json(const MiningResult& result) {
  const auto& r = result.report;
  const Algebra& alg = result.extended.algebra();
  nlohmann::ordered_json j;
  j["tacit"] = nlohmann::ordered_json::array();
  for (const auto& t : r.tacit_attributes) {
    nlohmann::ordered_json entry;
    entry["name"] = t.name;
    entry["kind"] = t.provenance.kind == AttributeProvenance::Kind::ConstantTop ? "top" : "meet";
    entry["sources"] = nlohmann::ordered_json::array();
    for (auto s : t.provenance.sources) entry["sources"].push_back(result.extended.attributes()[s]);
    entry["formula"] = t.formula;
    j["tacit"].push_back(std::move(entry));
  }
  j["congener"] = r.congener.is_congener;
  j["concepts_base"] = r.base_concepts;
  j["concepts_ext"] = r.extended_concepts;
  j["fast_verified"] = r.fast_extension_verified;
  j["witnesses"] = nlohmann::ordered_json::array();
  for (const auto& w : r.congener.witnesses) j["witnesses"].push_back(spell(alg, w));
  j["theorem_checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.theorem_checks)
    j["theorem_checks"].push_back(
        {{"attribute", c.attribute}, {"rule", to_string(c.rule)}, {"satisfied", c.satisfied}, {"sources", c.sources}});
  if (!r.fast_path_note.empty()) j["note"] = r.fast_path_note;
  return j.dump(2) + "\n";
}

}  // namespace ltvcl

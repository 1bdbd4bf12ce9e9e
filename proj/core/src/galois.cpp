#include "ltvcl/galois.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ltvcl/error.hpp"

namespace ltvcl {

namespace {

void check_side(const FuzzyContext& context, const FuzzySet& set, Side side, const char* op) {
  const std::size_t expected = side == Side::Objects ? context.object_count() : context.attribute_count();
  if (set.side != side || set.values.size() != expected)
    throw DimensionError(std::string(op) + ": expected a fuzzy set on the " +
                         (side == Side::Objects ? "objects" : "attributes") + " of length " +
                         std::to_string(expected));
}

void check_pair(const FuzzySet& a, const FuzzySet& b) {
  if (a.side != b.side || a.values.size() != b.values.size())
    throw DimensionError("fuzzy sets differ in side or length");
}

int extent_weight(const Algebra& algebra, const FuzzySet& s) {
  int w = 0;
  for (const auto& v : s.values) w += algebra.height(v);
  return w;
}

std::string spell(const FuzzyContext& context, const FuzzySet& s, bool use_aliases) {
  std::string out;
  for (const auto& v : s.values) {
    if (!out.empty()) out += ", ";
    out += use_aliases ? context.display(v) : context.algebra().name_of(v);
  }
  return out;
}

std::vector<std::string> spell_list(const Algebra& algebra, const FuzzySet& s) {
  std::vector<std::string> out;
  for (const auto& v : s.values) out.push_back(algebra.name_of(v));
  return out;
}

}  // namespace

bool subset_of(const Algebra& algebra, const FuzzySet& a, const FuzzySet& b) {
  check_pair(a, b);
  for (std::size_t i = 0; i < a.values.size(); ++i)
    if (!algebra.leq(a.values[i], b.values[i])) return false;
  return true;
}

FuzzySet pointwise_meet(const Algebra& algebra, const FuzzySet& a, const FuzzySet& b) {
  check_pair(a, b);
  FuzzySet out{a.side, {}};
  for (std::size_t i = 0; i < a.values.size(); ++i) out.values.push_back(algebra.meet(a.values[i], b.values[i]));
  return out;
}

FuzzySet pointwise_join(const Algebra& algebra, const FuzzySet& a, const FuzzySet& b) {
  check_pair(a, b);
  FuzzySet out{a.side, {}};
  for (std::size_t i = 0; i < a.values.size(); ++i) out.values.push_back(algebra.join(a.values[i], b.values[i]));
  return out;
}

FuzzySet constant_set(const FuzzyContext& context, Side side, const TruthValue& value) {
  const std::size_t n = side == Side::Objects ? context.object_count() : context.attribute_count();
  return FuzzySet{side, std::vector<TruthValue>(n, value)};
}

FuzzySet derive_intent(const FuzzyContext& context, const FuzzySet& extent) {
  check_side(context, extent, Side::Objects, "derive_intent");
  const Algebra& alg = context.algebra();
  FuzzySet out{Side::Attributes, std::vector<TruthValue>(context.attribute_count(), alg.top())};
  for (std::size_t m = 0; m < context.attribute_count(); ++m)
    for (std::size_t g = 0; g < context.object_count(); ++g)
      out.values[m] = alg.meet(out.values[m], alg.imp(extent.values[g], context.at(g, m)));
  return out;
}

FuzzySet derive_extent(const FuzzyContext& context, const FuzzySet& intent) {
  check_side(context, intent, Side::Attributes, "derive_extent");
  const Algebra& alg = context.algebra();
  FuzzySet out{Side::Objects, std::vector<TruthValue>(context.object_count(), alg.top())};
  for (std::size_t g = 0; g < context.object_count(); ++g)
    for (std::size_t m = 0; m < context.attribute_count(); ++m)
      out.values[g] = alg.meet(out.values[g], alg.imp(intent.values[m], context.at(g, m)));
  return out;
}

FuzzySet closure_extent(const FuzzyContext& context, const FuzzySet& extent) {
  return derive_extent(context, derive_intent(context, extent));
}

FuzzySet closure_intent(const FuzzyContext& context, const FuzzySet& intent) {
  return derive_intent(context, derive_extent(context, intent));
}

bool is_concept(const FuzzyContext& context, const Concept& c) {
  return derive_intent(context, c.extent) == c.intent && derive_extent(context, c.intent) == c.extent;
}

std::vector<TruthValue> scan_values(const FuzzyContext& context, ScanDomain domain) {
  if (domain == ScanDomain::FullAlgebra) return context.algebra().elements();
  return context.algebra().generated_subalgebra(context.values());
}

std::uint64_t candidate_count(const FuzzyContext& context, const EnumerationOptions& options) {
  const std::uint64_t base = scan_values(context, options.domain).size();
  const std::size_t exponent =
      options.engine == ScanEngine::ExtentScan ? context.object_count() : context.attribute_count();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (count > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    count *= base;
  }
  return count;
}

ConceptLattice::ConceptLattice(FuzzyContext context, std::vector<Concept> concepts, ScanDomain domain)
    : context_(std::move(context)), domain_(domain), concepts_(std::move(concepts)) {
  const Algebra& alg = context_.algebra();
  for (const auto& c : concepts_) {
    check_side(context_, c.extent, Side::Objects, "ConceptLattice");
    check_side(context_, c.intent, Side::Attributes, "ConceptLattice");
  }
  // Descending extent weight is a linear extension of the concept order
  // (top first); ties are broken by the extents' coordinates.
  std::vector<std::pair<int, Concept>> keyed;
  keyed.reserve(concepts_.size());
  for (auto& c : concepts_) keyed.emplace_back(extent_weight(alg, c.extent), std::move(c));
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first > y.first;
    return x.second < y.second;
  });
  concepts_.clear();
  for (auto& [w, c] : keyed)
    if (concepts_.empty() || !(concepts_.back() == c)) concepts_.push_back(std::move(c));

  const std::size_t n = concepts_.size();
  order_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) order_[i * n + j] = subset_of(alg, concepts_[i].extent, concepts_[j].extent);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !leq(i, j)) continue;
      bool direct = true;
      for (std::size_t k = 0; k < n && direct; ++k)
        if (k != i && k != j && leq(i, k) && leq(k, j)) direct = false;
      if (direct) covers_.emplace_back(i, j);
    }
  }
  std::sort(covers_.begin(), covers_.end());
}

std::optional<std::size_t> ConceptLattice::index_of(const Concept& c) const {
  auto it = std::find(concepts_.begin(), concepts_.end(), c);
  if (it == concepts_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - concepts_.begin());
}

std::optional<std::size_t> ConceptLattice::index_of_extent(const FuzzySet& extent) const {
  for (std::size_t i = 0; i < concepts_.size(); ++i)
    if (concepts_[i].extent == extent) return i;
  return std::nullopt;
}

std::size_t ConceptLattice::top() const {
  for (std::size_t i = 0; i < size(); ++i) {
    bool greatest = true;
    for (std::size_t j = 0; j < size() && greatest; ++j) greatest = leq(j, i);
    if (greatest) return i;
  }
  throw StructureError("concept set has no greatest element");
}

std::size_t ConceptLattice::bottom() const {
  for (std::size_t i = 0; i < size(); ++i) {
    bool least = true;
    for (std::size_t j = 0; j < size() && least; ++j) least = leq(i, j);
    if (least) return i;
  }
  throw StructureError("concept set has no least element");
}

std::vector<FuzzySet> ConceptLattice::extents() const {
  std::vector<FuzzySet> out;
  out.reserve(concepts_.size());
  for (const auto& c : concepts_) out.push_back(c.extent);
  return out;
}

ConceptLattice enumerate_concepts(const FuzzyContext& context, const EnumerationOptions& options) {
  const std::uint64_t candidates = candidate_count(context, options);
  if (candidates > options.budget)
    throw BudgetError("enumeration needs " + std::to_string(candidates) + " candidates, budget is " +
                      std::to_string(options.budget));

  const auto domain = scan_values(context, options.domain);
  std::set<Concept> found;
  if (options.engine == ScanEngine::ExtentScan) {
    for_each_fuzzy_set(context.object_count(), Side::Objects, domain, [&](const FuzzySet& a) {
      auto intent = derive_intent(context, a);
      auto extent = derive_extent(context, intent);
      found.insert(Concept{std::move(extent), std::move(intent)});
    });
  } else {
    for_each_fuzzy_set(context.attribute_count(), Side::Attributes, domain, [&](const FuzzySet& b) {
      auto extent = derive_extent(context, b);
      auto intent = derive_intent(context, extent);
      found.insert(Concept{std::move(extent), std::move(intent)});
    });
  }
  return ConceptLattice(context, {found.begin(), found.end()}, options.domain);
}

Concept concept_meet(const ConceptLattice& lattice, const Concept& a, const Concept& b) {
  if (!lattice.index_of(a) || !lattice.index_of(b)) throw MembershipError("concept_meet: operand is not in the lattice");
  const auto& ctx = lattice.context();
  Concept c{pointwise_meet(ctx.algebra(), a.extent, b.extent),
            closure_intent(ctx, pointwise_join(ctx.algebra(), a.intent, b.intent))};
  if (!lattice.index_of(c)) throw StructureError("concept_meet produced a pair outside the lattice");
  return c;
}

Concept concept_join(const ConceptLattice& lattice, const Concept& a, const Concept& b) {
  if (!lattice.index_of(a) || !lattice.index_of(b)) throw MembershipError("concept_join: operand is not in the lattice");
  const auto& ctx = lattice.context();
  Concept c{closure_extent(ctx, pointwise_join(ctx.algebra(), a.extent, b.extent)),
            pointwise_meet(ctx.algebra(), a.intent, b.intent)};
  if (!lattice.index_of(c)) throw StructureError("concept_join produced a pair outside the lattice");
  return c;
}

std::string format_concept(const ConceptLattice& lattice, std::size_t index, bool use_aliases) {
  const auto& c = lattice[index];
  return std::to_string(index) + "# (" + spell(lattice.context(), c.extent, use_aliases) + " | " +
         spell(lattice.context(), c.intent, use_aliases) + ")";
}

std::string export_dot(const ConceptLattice& lattice) {
  std::ostringstream os;
  os << "digraph concept_lattice {\n";
  os << "  node [shape=box];\n";
  for (std::size_t i = 0; i < lattice.size(); ++i)
    os << "  c" << i << " [label=\"" << format_concept(lattice, i) << "\"];\n";
  for (const auto& [lower, upper] : lattice.covers()) os << "  c" << upper << " -> c" << lower << ";\n";
  os << "}\n";
  return os.str();
}

LatticeDocument to_document(const ConceptLattice& lattice) {
  const auto& ctx = lattice.context();
  LatticeDocument doc;
  doc.algebra = ctx.algebra().description();
  doc.objects = ctx.objects();
  doc.attributes = ctx.attributes();
  for (const auto& c : lattice.concepts())
    doc.concepts.emplace_back(spell_list(ctx.algebra(), c.extent), spell_list(ctx.algebra(), c.intent));
  for (std::size_t i = 0; i < lattice.size(); ++i)
    for (std::size_t j = 0; j < lattice.size(); ++j)
      if (i != j && lattice.leq(i, j)) doc.order.emplace_back(i, j);
  doc.covers = lattice.covers();
  return doc;
}

std::string export_json(const ConceptLattice& lattice) {
  const auto doc = to_document(lattice);
  nlohmann::ordered_json j;
  j["algebra"] = doc.algebra;
  j["objects"] = doc.objects;
  j["attributes"] = doc.attributes;
  j["concepts"] = nlohmann::ordered_json::array();
  for (const auto& [extent, intent] : doc.concepts) j["concepts"].push_back({{"extent", extent}, {"intent", intent}});
  j["order"] = doc.order;
  j["covers"] = doc.covers;
  return j.dump(2) + "\n";
}

LatticeDocument parse_lattice_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    LatticeDocument doc;
    doc.algebra = j.at("algebra").get<std::string>();
    doc.objects = j.at("objects").get<std::vector<std::string>>();
    doc.attributes = j.at("attributes").get<std::vector<std::string>>();
    for (const auto& c : j.at("concepts"))
      doc.concepts.emplace_back(c.at("extent").get<std::vector<std::string>>(),
                                c.at("intent").get<std::vector<std::string>>());
    doc.order = j.at("order").get<std::vector<std::pair<std::size_t, std::size_t>>>();
    doc.covers = j.at("covers").get<std::vector<std::pair<std::size_t, std::size_t>>>();
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("lattice JSON: ") + e.what());
  }
}

}  // namespace ltvcl

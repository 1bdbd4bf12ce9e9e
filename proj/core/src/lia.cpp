#include "ltvcl/lia.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "ltvcl/error.hpp"
#include "text_util.hpp"

namespace ltvcl {

namespace detail {

struct AlgebraData {
  Algebra::Kind kind = Algebra::Kind::Product;
  std::vector<int> chain_sizes;
  std::vector<std::string> names;  // table algebras only
  std::string source;
  std::size_t n = 0;
  std::vector<TruthValue> elements;
  std::vector<std::size_t> imp;
  std::vector<long> meet;  // -1 where no meet exists
  std::vector<long> join;
  std::vector<std::size_t> neg;
  std::vector<char> leq;
  std::vector<int> height;
  std::size_t top = 0;
  std::size_t bottom = 0;
};

}  // namespace detail

namespace {

constexpr const char* kModifierNames[] = {"", "Sl", "Ve", "Ab"};

void fill_heights(detail::AlgebraData& d) {
  d.height.assign(d.n, 0);
  for (std::size_t x = 0; x < d.n; ++x)
    for (std::size_t y = 0; y < d.n; ++y)
      if (y != x && d.leq[y * d.n + x]) ++d.height[x];
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const TruthValue& v) {
  os << '(';
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    if (i) os << ',';
    os << v.coords[i];
  }
  return os << ')';
}

std::string to_string(LinguisticLabel label) {
  return std::string(kModifierNames[static_cast<int>(label.modifier)]) +
         (label.meta == Meta::Tr ? "T" : "F");
}

std::optional<LinguisticLabel> parse_label(std::string_view text) {
  if (text.size() != 3) return std::nullopt;
  std::optional<Modifier> mod;
  for (int r = 1; r <= 3; ++r)
    if (text.substr(0, 2) == kModifierNames[r]) mod = static_cast<Modifier>(r);
  if (!mod) return std::nullopt;
  if (text[2] == 'T') return LinguisticLabel{*mod, Meta::Tr};
  if (text[2] == 'F') return LinguisticLabel{*mod, Meta::Fa};
  return std::nullopt;
}

Algebra::Algebra(std::shared_ptr<const detail::AlgebraData> data) : data_(std::move(data)) {}

Algebra Algebra::product(std::vector<int> chain_sizes) {
  if (chain_sizes.empty()) throw ArgumentError("product algebra needs at least one chain");
  std::size_t n = 1;
  for (int s : chain_sizes) {
    if (s < 2) throw ArgumentError("chain size " + std::to_string(s) + " is below 2");
    n *= static_cast<std::size_t>(s);
    if (n > 1'000'000) throw ArgumentError("product algebra too large");
  }

  auto d = std::make_shared<detail::AlgebraData>();
  d->kind = Kind::Product;
  d->chain_sizes = chain_sizes;
  d->n = n;
  const std::size_t k = chain_sizes.size();

  d->elements.reserve(n);
  std::vector<int> c(k, 1);
  for (std::size_t i = 0; i < n; ++i) {
    d->elements.emplace_back(c);
    for (std::size_t p = k; p-- > 0;) {
      if (++c[p] <= chain_sizes[p]) break;
      c[p] = 1;
    }
  }

  auto index = [&](const std::vector<int>& coords) {
    std::size_t idx = 0;
    for (std::size_t p = 0; p < k; ++p)
      idx = idx * static_cast<std::size_t>(chain_sizes[p]) + static_cast<std::size_t>(coords[p] - 1);
    return idx;
  };

  d->imp.resize(n * n);
  d->meet.resize(n * n);
  d->join.resize(n * n);
  d->leq.resize(n * n);
  d->neg.resize(n);
  std::vector<int> r(k);
  for (std::size_t x = 0; x < n; ++x) {
    const auto& a = d->elements[x].coords;
    for (std::size_t p = 0; p < k; ++p) r[p] = chain_sizes[p] + 1 - a[p];
    d->neg[x] = index(r);
    for (std::size_t y = 0; y < n; ++y) {
      const auto& b = d->elements[y].coords;
      bool le = true;
      for (std::size_t p = 0; p < k; ++p) {
        const int size = chain_sizes[p];
        r[p] = std::min(size - a[p] + b[p], size);
        le = le && a[p] <= b[p];
      }
      d->imp[x * n + y] = index(r);
      for (std::size_t p = 0; p < k; ++p) r[p] = std::min(a[p], b[p]);
      d->meet[x * n + y] = static_cast<long>(index(r));
      for (std::size_t p = 0; p < k; ++p) r[p] = std::max(a[p], b[p]);
      d->join[x * n + y] = static_cast<long>(index(r));
      d->leq[x * n + y] = le;
    }
  }
  d->bottom = 0;
  d->top = n - 1;
  fill_heights(*d);
  return Algebra(std::move(d));
}

Algebra Algebra::from_table(const TableAlgebraSpec& spec, std::string source) {
  const auto& names = spec.element_names;
  const std::size_t n = names.size();
  if (n == 0) throw LoadError("table algebra declares no elements");
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i)
    if (!pos.emplace(names[i], i).second) throw LoadError("duplicate element name '" + names[i] + "'");

  auto lookup = [&](const std::string& name, const std::string& where) {
    auto it = pos.find(name);
    if (it == pos.end()) throw LoadError("unknown element '" + name + "' in " + where);
    return it->second;
  };

  auto d = std::make_shared<detail::AlgebraData>();
  d->kind = Kind::Table;
  d->chain_sizes = {static_cast<int>(n)};
  d->names = names;
  d->source = std::move(source);
  d->n = n;
  for (std::size_t i = 0; i < n; ++i) d->elements.push_back(TruthValue{static_cast<int>(i + 1)});

  if (spec.imp_rows.size() != n)
    throw LoadError("implication table has " + std::to_string(spec.imp_rows.size()) + " rows, expected " +
                    std::to_string(n));
  d->imp.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto& row = spec.imp_rows[x];
    if (row.size() != n)
      throw LoadError("implication row '" + names[x] + "' has " + std::to_string(row.size()) +
                      " entries, expected " + std::to_string(n));
    for (std::size_t y = 0; y < n; ++y) d->imp[x * n + y] = lookup(row[y], "row '" + names[x] + "'");
  }

  const std::size_t top = d->imp[0];
  for (std::size_t x = 1; x < n; ++x)
    if (d->imp[x * n + x] != top)
      throw LoadError("x -> x is not constant (" + names[0] + " -> " + names[0] + " = " + names[top] + ", " +
                      names[x] + " -> " + names[x] + " = " + names[d->imp[x * n + x]] + "); cannot identify top");
  d->top = top;

  d->leq.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) d->leq[x * n + y] = d->imp[x * n + y] == top;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (d->leq[x * n + y] && d->leq[y * n + x])
        throw LoadError("derived order is not antisymmetric: " + names[x] + " <= " + names[y] + " and " +
                        names[y] + " <= " + names[x]);

  std::optional<std::size_t> least;
  for (std::size_t b = 0; b < n && !least; ++b) {
    bool all = true;
    for (std::size_t x = 0; x < n; ++x) all = all && d->leq[b * n + x];
    if (all) least = b;
  }

  d->neg.assign(n, n);
  if (!spec.neg.empty()) {
    for (const auto& [x, y] : spec.neg) {
      const std::size_t i = lookup(x, "negation table");
      if (d->neg[i] != n) throw LoadError("negation of '" + x + "' given twice");
      d->neg[i] = lookup(y, "negation table");
    }
    for (std::size_t i = 0; i < n; ++i)
      if (d->neg[i] == n) throw LoadError("negation table has no entry for '" + names[i] + "'");
    d->bottom = least ? *least : d->neg[top];
  } else {
    if (!least) throw LoadError("derived order has no least element and no negation table was given");
    d->bottom = *least;
    for (std::size_t x = 0; x < n; ++x) d->neg[x] = d->imp[x * n + d->bottom];
  }

  d->meet.assign(n * n, -1);
  d->join.assign(n * n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      // greatest lower bound / least upper bound under the derived order
      for (std::size_t z = 0; z < n; ++z) {
        if (d->leq[z * n + x] && d->leq[z * n + y]) {
          bool greatest = true;
          for (std::size_t w = 0; w < n && greatest; ++w)
            if (d->leq[w * n + x] && d->leq[w * n + y]) greatest = d->leq[w * n + z];
          if (greatest) d->meet[x * n + y] = static_cast<long>(z);
        }
        if (d->leq[x * n + z] && d->leq[y * n + z]) {
          bool least_ub = true;
          for (std::size_t w = 0; w < n && least_ub; ++w)
            if (d->leq[x * n + w] && d->leq[y * n + w]) least_ub = d->leq[z * n + w];
          if (least_ub) d->join[x * n + y] = static_cast<long>(z);
        }
      }
    }
  }
  fill_heights(*d);
  return Algebra(std::move(d));
}

Algebra::Kind Algebra::kind() const { return data_->kind; }
std::size_t Algebra::size() const { return data_->n; }
std::size_t Algebra::arity() const { return data_->kind == Kind::Product ? data_->chain_sizes.size() : 1; }
const std::vector<int>& Algebra::chain_sizes() const { return data_->chain_sizes; }

bool Algebra::is_default() const {
  return data_->kind == Kind::Product && data_->chain_sizes == std::vector<int>{3, 2};
}

std::string Algebra::description() const {
  if (data_->kind == Kind::Table) return "table " + data_->source;
  std::string out = "product";
  for (int s : data_->chain_sizes) out += " " + std::to_string(s);
  return out;
}

std::vector<TruthValue> Algebra::elements() const { return data_->elements; }

TruthValue Algebra::element(std::size_t index) const {
  if (index >= data_->n) throw DimensionError("element index " + std::to_string(index) + " out of range");
  return data_->elements[index];
}

bool Algebra::contains(const TruthValue& v) const {
  if (v.coords.size() != arity()) return false;
  for (std::size_t p = 0; p < v.coords.size(); ++p)
    if (v.coords[p] < 1 || v.coords[p] > data_->chain_sizes[p]) return false;
  return true;
}

std::size_t Algebra::checked_index(const TruthValue& v, const char* op) const {
  if (!contains(v)) {
    std::ostringstream os;
    os << op << ": value " << v << " does not belong to algebra " << description();
    throw DimensionError(os.str());
  }
  std::size_t idx = 0;
  for (std::size_t p = 0; p < v.coords.size(); ++p)
    idx = idx * static_cast<std::size_t>(data_->chain_sizes[p]) + static_cast<std::size_t>(v.coords[p] - 1);
  return idx;
}

std::size_t Algebra::index_of(const TruthValue& v) const { return checked_index(v, "index_of"); }

TruthValue Algebra::top() const { return data_->elements[data_->top]; }
TruthValue Algebra::bottom() const { return data_->elements[data_->bottom]; }

bool Algebra::leq(const TruthValue& x, const TruthValue& y) const {
  return leq_index(checked_index(x, "leq"), checked_index(y, "leq"));
}

TruthValue Algebra::meet(const TruthValue& x, const TruthValue& y) const {
  auto r = meet_index(checked_index(x, "meet"), checked_index(y, "meet"));
  if (!r) throw StructureError("no meet exists for " + name_of(x) + " and " + name_of(y));
  return data_->elements[*r];
}

TruthValue Algebra::join(const TruthValue& x, const TruthValue& y) const {
  auto r = join_index(checked_index(x, "join"), checked_index(y, "join"));
  if (!r) throw StructureError("no join exists for " + name_of(x) + " and " + name_of(y));
  return data_->elements[*r];
}

TruthValue Algebra::imp(const TruthValue& x, const TruthValue& y) const {
  return data_->elements[imp_index(checked_index(x, "imp"), checked_index(y, "imp"))];
}

TruthValue Algebra::neg(const TruthValue& x) const {
  return data_->elements[neg_index(checked_index(x, "neg"))];
}

int Algebra::height(const TruthValue& v) const { return data_->height[checked_index(v, "height")]; }

std::string Algebra::name_of(const TruthValue& v) const {
  checked_index(v, "name_of");
  if (data_->kind == Kind::Table) return data_->names[static_cast<std::size_t>(v.coords[0] - 1)];
  if (is_default()) return to_string(decode_label(*this, v));
  std::ostringstream os;
  os << v;
  return os.str();
}

std::optional<TruthValue> Algebra::parse_value(std::string_view token) const {
  if (data_->kind == Kind::Table) {
    for (std::size_t i = 0; i < data_->n; ++i)
      if (data_->names[i] == token) return data_->elements[i];
    return std::nullopt;
  }
  if (is_default()) {
    if (auto label = parse_label(token)) return encode_label(*this, *label);
  }
  if (token.size() < 2 || token.front() != '(' || token.back() != ')') return std::nullopt;
  std::vector<int> coords;
  for (const auto& part : split(token.substr(1, token.size() - 2), ',')) {
    auto value = parse_int(part);
    if (!value) return std::nullopt;
    coords.push_back(*value);
  }
  TruthValue v(std::move(coords));
  if (!contains(v)) return std::nullopt;
  return v;
}

std::vector<std::pair<TruthValue, TruthValue>> Algebra::covers() const {
  const std::size_t n = data_->n;
  std::vector<std::pair<TruthValue, TruthValue>> out;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y || !leq_index(x, y)) continue;
      bool direct = true;
      for (std::size_t z = 0; z < n && direct; ++z)
        if (z != x && z != y && leq_index(x, z) && leq_index(z, y)) direct = false;
      if (direct) out.emplace_back(data_->elements[x], data_->elements[y]);
    }
  }
  return out;
}

std::vector<TruthValue> Algebra::generated_subalgebra(const std::vector<TruthValue>& seeds) const {
  const std::size_t n = data_->n;
  std::vector<char> in(n, 0);
  std::vector<std::size_t> members;
  auto add = [&](std::size_t i) {
    if (!in[i]) {
      in[i] = 1;
      members.push_back(i);
    }
  };
  add(data_->top);
  add(data_->bottom);
  for (const auto& s : seeds) add(checked_index(s, "generated_subalgebra"));

  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t count = members.size();
    for (std::size_t a = 0; a < count; ++a) {
      const std::size_t x = members[a];
      add(data_->neg[x]);
      for (std::size_t b = 0; b < count; ++b) {
        const std::size_t y = members[b];
        add(data_->imp[x * n + y]);
        if (auto m = meet_index(x, y)) add(*m);
        if (auto j = join_index(x, y)) add(*j);
      }
    }
    grew = members.size() != count;
  }
  std::sort(members.begin(), members.end());
  std::vector<TruthValue> out;
  out.reserve(members.size());
  for (auto i : members) out.push_back(data_->elements[i]);
  return out;
}

std::optional<std::size_t> Algebra::meet_index(std::size_t x, std::size_t y) const {
  const long r = data_->meet[x * data_->n + y];
  if (r < 0) return std::nullopt;
  return static_cast<std::size_t>(r);
}

std::optional<std::size_t> Algebra::join_index(std::size_t x, std::size_t y) const {
  const long r = data_->join[x * data_->n + y];
  if (r < 0) return std::nullopt;
  return static_cast<std::size_t>(r);
}

std::size_t Algebra::imp_index(std::size_t x, std::size_t y) const { return data_->imp[x * data_->n + y]; }
std::size_t Algebra::neg_index(std::size_t x) const { return data_->neg[x]; }
bool Algebra::leq_index(std::size_t x, std::size_t y) const { return data_->leq[x * data_->n + y] != 0; }
std::size_t Algebra::top_index() const { return data_->top; }
std::size_t Algebra::bottom_index() const { return data_->bottom; }

bool operator==(const Algebra& a, const Algebra& b) {
  if (a.data_ == b.data_) return true;
  const auto& x = *a.data_;
  const auto& y = *b.data_;
  if (x.kind != y.kind || x.chain_sizes != y.chain_sizes) return false;
  if (x.kind == Algebra::Kind::Product) return true;
  return x.names == y.names && x.imp == y.imp && x.neg == y.neg;
}

Algebra parse_table_algebra(std::string_view text, std::string source) {
  TableAlgebraSpec spec;
  bool have_elements = false;
  std::size_t line_no = 0;
  auto check_names = [&](const std::vector<std::string>& tokens, std::size_t from) {
    for (std::size_t i = from; i < tokens.size(); ++i)
      if (std::find(spec.element_names.begin(), spec.element_names.end(), tokens[i]) == spec.element_names.end())
        throw ParseError(line_no, "unknown element '" + tokens[i] + "'");
  };
  for (const auto& raw : split_lines(text)) {
    ++line_no;
    const auto tokens = tokenize(strip_comment(raw));
    if (tokens.empty()) continue;
    const auto& head = tokens[0];
    if (head == "elements") {
      if (have_elements) throw ParseError(line_no, "duplicate 'elements' directive");
      if (tokens.size() < 2) throw ParseError(line_no, "'elements' needs at least one name");
      spec.element_names.assign(tokens.begin() + 1, tokens.end());
      have_elements = true;
    } else if (head == "imp") {
      if (!have_elements) throw ParseError(line_no, "'imp' before 'elements'");
      const std::size_t row = spec.imp_rows.size();
      if (row >= spec.element_names.size()) throw ParseError(line_no, "more 'imp' rows than elements");
      if (tokens.size() < 2 || tokens[1] != spec.element_names[row])
        throw ParseError(line_no, "expected row for '" + spec.element_names[row] + "'");
      if (tokens.size() != spec.element_names.size() + 2)
        throw ParseError(line_no, "row '" + tokens[1] + "' has " + std::to_string(tokens.size() - 2) +
                                      " entries, expected " + std::to_string(spec.element_names.size()));
      check_names(tokens, 2);
      spec.imp_rows.emplace_back(tokens.begin() + 2, tokens.end());
    } else if (head == "neg") {
      if (!have_elements) throw ParseError(line_no, "'neg' before 'elements'");
      if (tokens.size() != 3) throw ParseError(line_no, "'neg' takes exactly two names");
      check_names(tokens, 1);
      spec.neg.emplace_back(tokens[1], tokens[2]);
    } else {
      throw ParseError(line_no, "unknown directive '" + head + "'");
    }
  }
  if (!have_elements) throw ParseError(0, "missing 'elements' directive");
  if (spec.imp_rows.size() != spec.element_names.size())
    throw ParseError(0, "implication table has " + std::to_string(spec.imp_rows.size()) + " rows, expected " +
                            std::to_string(spec.element_names.size()));
  return Algebra::from_table(spec, std::move(source));
}

Algebra load_table_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open table algebra file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_table_algebra(buf.str(), path);
}

AxiomReport check_axioms(const Algebra& algebra, std::size_t element_budget) {
  const std::size_t n = algebra.size();
  if (n > element_budget)
    throw BudgetError("axiom check over " + std::to_string(n) + " elements exceeds budget of " +
                      std::to_string(element_budget));

  AxiomReport report;
  auto fail = [&](const char* law, std::initializer_list<std::size_t> witness) {
    AxiomViolation v{law, {}};
    for (auto i : witness) v.witness.push_back(algebra.element(i));
    report.violations.push_back(std::move(v));
  };
  auto imp = [&](std::size_t x, std::size_t y) { return algebra.imp_index(x, y); };
  auto neg = [&](std::size_t x) { return algebra.neg_index(x); };
  auto meet = [&](std::size_t x, std::size_t y) { return algebra.meet_index(x, y); };
  auto join = [&](std::size_t x, std::size_t y) { return algebra.join_index(x, y); };
  auto opt_meet = [&](std::optional<std::size_t> x, std::optional<std::size_t> y) -> std::optional<std::size_t> {
    if (!x || !y) return std::nullopt;
    return meet(*x, *y);
  };
  auto opt_join = [&](std::optional<std::size_t> x, std::optional<std::size_t> y) -> std::optional<std::size_t> {
    if (!x || !y) return std::nullopt;
    return join(*x, *y);
  };
  // Instances whose operands are undefined are skipped; the missing bound is
  // already reported by the existence laws.
  auto differ = [](std::optional<std::size_t> a, std::optional<std::size_t> b) { return a && b && *a != *b; };

  const std::size_t top = algebra.top_index();
  const std::size_t bot = algebra.bottom_index();

  for (std::size_t x = 0; x < n; ++x) {
    if (differ(meet(x, x), x)) fail("lattice-idempotent-meet", {x});
    if (differ(join(x, x), x)) fail("lattice-idempotent-join", {x});
    if (!algebra.leq_index(bot, x)) fail("bounds-bottom", {x});
    if (!algebra.leq_index(x, top)) fail("bounds-top", {x});
    if (neg(neg(x)) != x) fail("involution", {x});
    if (imp(x, x) != top) fail("A2", {x});

    for (std::size_t y = 0; y < n; ++y) {
      const auto mxy = meet(x, y);
      const auto jxy = join(x, y);
      if (!mxy) fail("lattice-meet-exists", {x, y});
      if (!jxy) fail("lattice-join-exists", {x, y});
      if (differ(mxy, meet(y, x))) fail("lattice-commutative-meet", {x, y});
      if (differ(jxy, join(y, x))) fail("lattice-commutative-join", {x, y});
      if (differ(opt_meet(x, jxy), x)) fail("lattice-absorption-meet", {x, y});
      if (differ(opt_join(x, mxy), x)) fail("lattice-absorption-join", {x, y});
      if (mxy && algebra.leq_index(x, y) != (*mxy == x)) fail("lattice-order", {x, y});
      if (algebra.leq_index(x, y) && !algebra.leq_index(neg(y), neg(x))) fail("order-reversing", {x, y});
      if (imp(x, y) != imp(neg(y), neg(x))) fail("A3", {x, y});
      if (x != y && imp(x, y) == top && imp(y, x) == top) fail("A4", {x, y});
      if (imp(imp(x, y), y) != imp(imp(y, x), x)) fail("A5", {x, y});

      for (std::size_t z = 0; z < n; ++z) {
        ++report.triples_checked;
        if (differ(opt_meet(x, meet(y, z)), opt_meet(mxy, z))) fail("lattice-associative-meet", {x, y, z});
        if (differ(opt_join(x, join(y, z)), opt_join(jxy, z))) fail("lattice-associative-join", {x, y, z});
        if (imp(x, imp(y, z)) != imp(y, imp(x, z))) fail("A1", {x, y, z});
        if (jxy && differ(imp(*jxy, z), meet(imp(x, z), imp(y, z)))) fail("A6", {x, y, z});
        if (mxy && differ(imp(*mxy, z), join(imp(x, z), imp(y, z)))) fail("A7", {x, y, z});
      }
    }
  }
  report.passed = report.violations.empty();
  return report;
}

TruthValue encode_label(const Algebra& algebra, LinguisticLabel label) {
  if (!algebra.is_default())
    throw UnsupportedError("linguistic labels are defined only on product 3 2, not " + algebra.description());
  const int rank = static_cast<int>(label.modifier);
  return label.meta == Meta::Tr ? TruthValue{rank, 2} : TruthValue{4 - rank, 1};
}

LinguisticLabel decode_label(const Algebra& algebra, const TruthValue& v) {
  if (!algebra.is_default())
    throw UnsupportedError("linguistic labels are defined only on product 3 2, not " + algebra.description());
  if (!algebra.contains(v)) {
    std::ostringstream os;
    os << "value " << v << " is not an element of product 3 2";
    throw DimensionError(os.str());
  }
  if (v.coords[1] == 2) return {static_cast<Modifier>(v.coords[0]), Meta::Tr};
  return {static_cast<Modifier>(4 - v.coords[0]), Meta::Fa};
}

}  // namespace ltvcl

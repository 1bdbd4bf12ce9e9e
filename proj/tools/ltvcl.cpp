// ltvcl: command-line front end for linguistic truth-valued concept lattices
// and tacit attribute mining.
//
// Exit codes: 0 success / affirmative verdict, 1 negative verdict,
// 2 usage or input error.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ltvcl/context.hpp"
#include "ltvcl/error.hpp"
#include "ltvcl/galois.hpp"
#include "ltvcl/lia.hpp"
#include "ltvcl/tacit.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t budget_from_env() {
  const char* env = std::getenv("LTVCL_BUDGET");
  if (!env || !*env) return ltvcl::kDefaultCandidateBudget;
  try {
    std::size_t used = 0;
    const auto value = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return value;
  } catch (const std::exception&) {
    throw UsageError(std::string("LTVCL_BUDGET is not a non-negative integer: '") + env + "'");
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ltvcl::LoadError("cannot write '" + path + "'");
  out << content;
}

ltvcl::ScanDomain parse_domain(const std::string& s) {
  return s == "generated" ? ltvcl::ScanDomain::GeneratedSubalgebra : ltvcl::ScanDomain::FullAlgebra;
}

const char* domain_name(ltvcl::ScanDomain d) {
  return d == ltvcl::ScanDomain::FullAlgebra ? "full" : "generated";
}

std::string join_values(const ltvcl::FuzzyContext& ctx, const ltvcl::FuzzySet& s) {
  std::string out;
  for (const auto& v : s.values) {
    if (!out.empty()) out += ", ";
    out += ctx.display(v);
  }
  return out;
}

// ---------------------------------------------------------------------------

struct AlgebraArgs {
  std::vector<int> product;
  std::string table;
  bool check_axioms = false;
  bool show_tables = false;
};

int cmd_algebra(const AlgebraArgs& args) {
  if (args.product.empty() == args.table.empty()) throw UsageError("give exactly one of --product or --table");
  const auto algebra =
      args.table.empty() ? ltvcl::Algebra::product(args.product) : ltvcl::load_table_algebra_file(args.table);

  const auto elements = algebra.elements();
  std::cout << "algebra: " << algebra.description() << "\n";
  std::cout << "elements (" << elements.size() << "):";
  for (const auto& e : elements) std::cout << ' ' << algebra.name_of(e);
  std::cout << "\n";
  std::cout << "top: " << algebra.name_of(algebra.top()) << ", bottom: " << algebra.name_of(algebra.bottom()) << "\n";
  std::cout << "covers:";
  for (const auto& [lo, hi] : algebra.covers()) std::cout << ' ' << algebra.name_of(lo) << '<' << algebra.name_of(hi);
  std::cout << "\n";

  if (args.show_tables) {
    std::size_t width = 2;
    for (const auto& e : elements) width = std::max(width, algebra.name_of(e).size() + 1);
    auto cell = [&](const std::string& s) { std::cout << s << std::string(width - s.size(), ' '); };
    std::cout << "imp:\n";
    cell("->");
    for (const auto& y : elements) cell(algebra.name_of(y));
    std::cout << "\n";
    for (const auto& x : elements) {
      cell(algebra.name_of(x));
      for (const auto& y : elements) cell(algebra.name_of(algebra.imp(x, y)));
      std::cout << "\n";
    }
    std::cout << "neg:";
    for (const auto& x : elements) std::cout << ' ' << algebra.name_of(x) << "'=" << algebra.name_of(algebra.neg(x));
    std::cout << "\n";
  }

  if (!args.check_axioms) return kOk;
  const auto report = ltvcl::check_axioms(algebra);
  if (report.passed) {
    std::cout << "axioms: PASS (" << report.triples_checked << " triples)\n";
    return kOk;
  }
  std::cout << "axioms: FAIL (" << report.violations.size() << " violations over " << report.triples_checked
            << " triples)\n";
  for (const auto& v : report.violations) {
    std::cout << "  " << v.law << ":";
    for (const auto& w : v.witness) std::cout << ' ' << algebra.name_of(w);
    std::cout << "\n";
  }
  return kNegative;
}

// ---------------------------------------------------------------------------

struct ConceptsArgs {
  std::string context;
  std::string engine = "extent";
  std::string domain;
  std::string preset = "default";
  std::string dot;
  std::string json;
};

int cmd_concepts(const ConceptsArgs& args) {
  if (args.preset == "paper" && args.domain == "full") throw UsageError("--preset paper scans the generated domain");
  const auto ctx = ltvcl::load_context_file(args.context);
  ltvcl::EnumerationOptions opts;
  opts.budget = budget_from_env();
  opts.domain = args.preset == "paper" ? ltvcl::ScanDomain::GeneratedSubalgebra : parse_domain(args.domain);

  std::cout << "context: " << args.context << " (" << ctx.object_count() << " objects, " << ctx.attribute_count()
            << " attributes, algebra " << ctx.algebra().description() << ")\n";
  std::cout << "domain: " << domain_name(opts.domain) << " (" << ltvcl::scan_values(ctx, opts.domain).size()
            << " values)\n";

  std::optional<ltvcl::ConceptLattice> lattice;
  bool agree = true;
  for (const char* name : {"extent", "intent"}) {
    if (args.engine != "both" && args.engine != name) continue;
    opts.engine = std::string(name) == "extent" ? ltvcl::ScanEngine::ExtentScan : ltvcl::ScanEngine::IntentScan;
    const auto candidates = ltvcl::candidate_count(ctx, opts);
    auto result = ltvcl::enumerate_concepts(ctx, opts);
    std::cout << "engine " << name << ": " << candidates << " candidates, " << result.size() << " concepts\n";
    if (lattice && !lattice->same_concepts(result)) agree = false;
    if (!lattice) lattice.emplace(std::move(result));
  }
  if (args.engine == "both") std::cout << (agree ? "engines agree\n" : "engines DISAGREE\n");

  std::cout << lattice->size() << " concepts\n";
  for (std::size_t i = 0; i < lattice->size(); ++i) std::cout << ltvcl::format_concept(*lattice, i, true) << "\n";
  std::cout << "covers:";
  for (const auto& [lo, hi] : lattice->covers()) std::cout << ' ' << lo << '<' << hi;
  std::cout << "\n";

  if (!args.dot.empty()) write_file(args.dot, ltvcl::export_dot(*lattice));
  if (!args.json.empty()) write_file(args.json, ltvcl::export_json(*lattice));
  return agree ? kOk : kNegative;
}

// ---------------------------------------------------------------------------

struct ExtensionArgs {
  std::string context;
  std::string preset = "default";
  std::optional<std::size_t> max_k;
  bool no_top = false;
  bool no_novelty = false;
  std::string domain;
  std::string out;
};

ltvcl::MiningConfig mining_config(const ExtensionArgs& args) {
  if (args.preset == "paper") {
    if (args.max_k || args.no_top || args.no_novelty)
      throw UsageError("--preset paper fixes the extension; drop --max-k/--no-top/--no-novelty");
    if (args.domain == "full") throw UsageError("--preset paper scans the generated domain");
    auto cfg = ltvcl::MiningConfig::paper_preset();
    cfg.enumeration.budget = budget_from_env();
    return cfg;
  }
  ltvcl::MiningConfig cfg;
  if (args.max_k) cfg.extension.max_meet_arity = *args.max_k;
  cfg.extension.include_top_column = !args.no_top;
  cfg.extension.novelty_filter = !args.no_novelty;
  cfg.enumeration.domain = parse_domain(args.domain);
  cfg.enumeration.budget = budget_from_env();
  return cfg;
}

int cmd_extend(const ExtensionArgs& args) {
  const auto cfg = mining_config(args);
  const auto extended = ltvcl::extend_context(ltvcl::load_context_file(args.context), cfg.extension);
  const auto text = ltvcl::serialize_context(extended);
  if (args.out.empty())
    std::cout << text;
  else
    write_file(args.out, text);
  return kOk;
}

int cmd_mine(const ExtensionArgs& args) {
  const auto cfg = mining_config(args);
  const auto base = ltvcl::load_context_file(args.context);
  const auto result = ltvcl::mine(base, cfg);
  const auto& r = result.report;

  std::cout << "tacit attributes (" << r.tacit_attributes.size() << "):\n";
  for (std::size_t i = 0; i < r.tacit_attributes.size(); ++i) {
    const auto& t = r.tacit_attributes[i];
    const ltvcl::FuzzySet column{ltvcl::Side::Objects,
                                 result.extended.column(*result.extended.attribute_index(t.name))};
    std::cout << "  " << t.name << " = " << t.formula << "  column (" << join_values(result.extended, column)
              << ")  rule " << ltvcl::to_string(r.theorem_checks[i].rule) << "\n";
  }
  std::cout << "concepts: base " << r.base_concepts << ", extended " << r.extended_concepts << "\n";
  std::cout << "congener: " << (r.congener.is_congener ? "yes" : "no") << "\n";
  std::cout << "fast extension verified: " << (r.fast_extension_verified ? "yes" : "no") << "\n";
  if (!r.fast_path_note.empty()) std::cout << "note: " << r.fast_path_note << "\n";
  for (std::size_t i = 0; i < result.extended_lattice.size(); ++i)
    std::cout << ltvcl::format_concept(result.extended_lattice, i, true) << "\n";

  if (!args.out.empty()) write_file(args.out, ltvcl::report_to_json(result));
  return r.congener.is_congener && r.fast_extension_verified ? kOk : kNegative;
}

// ---------------------------------------------------------------------------

struct CongenerArgs {
  std::string base;
  std::string extended;
  std::string domain;
};

int cmd_check_congener(const CongenerArgs& args) {
  const auto base = ltvcl::load_context_file(args.base);
  const auto extended = ltvcl::load_context_file(args.extended);
  ltvcl::EnumerationOptions opts;
  opts.domain = parse_domain(args.domain);
  opts.budget = budget_from_env();
  const auto report = ltvcl::is_congener(base, extended, opts);
  std::cout << "extents: base " << report.base_extent_count << ", extended " << report.extended_extent_count << "\n";
  std::cout << "congener: " << (report.is_congener ? "yes" : "no") << "\n";
  for (const auto& w : report.witnesses) std::cout << "  witness extent (" << join_values(base, w) << ")\n";
  return report.is_congener ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linguistic truth-valued concept lattices and tacit attribute mining"};
  app.require_subcommand(1, 1);

  const std::vector<std::string> engines{"extent", "intent", "both"};
  const std::vector<std::string> domains{"full", "generated"};
  const std::vector<std::string> presets{"default", "paper"};

  AlgebraArgs algebra_args;
  auto* algebra = app.add_subcommand("algebra", "Inspect and validate a finite lattice implication algebra");
  auto* product_opt = algebra->add_option("--product", algebra_args.product, "Chain sizes of a product algebra")
                          ->expected(1, 16);
  auto* table_opt =
      algebra->add_option("--table", algebra_args.table, "Table algebra file")->check(CLI::ExistingFile);
  product_opt->excludes(table_opt);
  algebra->add_flag("--check-axioms", algebra_args.check_axioms, "Exhaustively check the LIA axioms");
  algebra->add_flag("--show-tables", algebra_args.show_tables, "Print implication and negation tables");

  ConceptsArgs concepts_args;
  auto* concepts = app.add_subcommand("concepts", "Enumerate the concept lattice of a context");
  concepts->add_option("context", concepts_args.context, "Context file")->required()->check(CLI::ExistingFile);
  concepts->add_option("--engine", concepts_args.engine, "Scan side")->check(CLI::IsMember(engines));
  concepts->add_option("--domain", concepts_args.domain, "Scan domain (default full)")->check(CLI::IsMember(domains));
  concepts->add_option("--preset", concepts_args.preset, "default | paper")->check(CLI::IsMember(presets));
  concepts->add_option("--dot", concepts_args.dot, "Write the Hasse diagram as Graphviz DOT");
  concepts->add_option("--json", concepts_args.json, "Write the lattice as JSON");

  auto add_extension_options = [&](CLI::App* cmd, ExtensionArgs& args) {
    cmd->add_option("context", args.context, "Context file")->required()->check(CLI::ExistingFile);
    cmd->add_option("--preset", args.preset, "default | paper")->check(CLI::IsMember(presets));
    cmd->add_option("--max-k", args.max_k, "Largest meet arity")->check(CLI::Range(2, 64));
    cmd->add_flag("--no-top", args.no_top, "Do not add the constant-top column");
    cmd->add_flag("--no-novelty", args.no_novelty, "Keep candidate columns that duplicate existing ones");
    cmd->add_option("--domain", args.domain, "Scan domain (default full)")->check(CLI::IsMember(domains));
    cmd->add_option("--out", args.out, "Output file");
  };
  ExtensionArgs extend_args;
  auto* extend = app.add_subcommand("extend", "Write the attribute-extended context");
  add_extension_options(extend, extend_args);
  ExtensionArgs mine_args;
  auto* mine = app.add_subcommand("mine", "Mine tacit attributes and verify the congener property");
  add_extension_options(mine, mine_args);

  CongenerArgs congener_args;
  auto* congener = app.add_subcommand("check-congener", "Compare the extent families of a context and its extension");
  congener->add_option("base", congener_args.base, "Base context")->required()->check(CLI::ExistingFile);
  congener->add_option("extended", congener_args.extended, "Extended context")->required()->check(CLI::ExistingFile);
  congener->add_option("--domain", congener_args.domain, "Scan domain (default full)")->check(CLI::IsMember(domains));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*algebra) return cmd_algebra(algebra_args);
    if (*concepts) return cmd_concepts(concepts_args);
    if (*extend) return cmd_extend(extend_args);
    if (*mine) return cmd_mine(mine_args);
    if (*congener) return cmd_check_congener(congener_args);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ltvcl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

#pragma once

// Frozen values from the worked example, in its own a/b/I/O tokens.
// Concepts are matched by content: the example's numbering (0#..11#) is kept
// for reference only and does not follow the library's canonical order.

#include <string>
#include <vector>

#include "ltvcl/context.hpp"
#include "ltvcl/galois.hpp"

namespace fixtures {

inline const char* kTable2 =
    "algebra product 3 2\n"
    "alias a=SlT b=SlF I=AbT O=AbF\n"
    "attributes m1 m2 m3\n"
    "g1 a b I\n"
    "g2 b O a\n";

inline const char* kTable3Corrected =
    "algebra product 3 2\n"
    "alias a=SlT b=SlF I=AbT O=AbF\n"
    "attributes m1 m2 m3 m4 m5\n"
    "g1 a b I O I\n"
    "g2 b O a O I\n";

struct ExampleConcept {
  int number;
  std::vector<std::string> extent;
  std::vector<std::string> intent;
};

// Concept list of the three-attribute context.
inline const std::vector<ExampleConcept> kBaseConcepts = {
    {0, {"I", "I"}, {"O", "O", "a"}},  {1, {"a", "I"}, {"b", "O", "a"}},  {2, {"I", "a"}, {"O", "b", "I"}},
    {3, {"I", "b"}, {"a", "O", "a"}},  {4, {"a", "a"}, {"b", "b", "I"}},  {5, {"a", "b"}, {"I", "O", "a"}},
    {6, {"b", "b"}, {"a", "a", "a"}},  {7, {"I", "O"}, {"a", "b", "I"}},  {8, {"a", "O"}, {"I", "b", "I"}},
    {9, {"O", "b"}, {"I", "a", "a"}},  {10, {"b", "O"}, {"a", "I", "I"}}, {11, {"O", "O"}, {"I", "I", "I"}},
};

// Concept list of the five-attribute congener context.
inline const std::vector<ExampleConcept> kExtendedConcepts = {
    {0, {"I", "I"}, {"O", "O", "a", "O", "I"}},  {1, {"a", "I"}, {"b", "O", "a", "O", "I"}},
    {2, {"I", "a"}, {"O", "b", "I", "O", "I"}},  {3, {"I", "b"}, {"a", "O", "a", "O", "I"}},
    {4, {"a", "a"}, {"b", "b", "I", "b", "I"}},  {5, {"a", "b"}, {"I", "O", "a", "O", "I"}},
    {6, {"b", "b"}, {"a", "a", "a", "a", "I"}},  {7, {"I", "O"}, {"a", "b", "I", "O", "I"}},
    {8, {"a", "O"}, {"I", "b", "I", "b", "I"}},  {9, {"O", "b"}, {"I", "a", "a", "a", "I"}},
    {10, {"b", "O"}, {"a", "I", "I", "a", "I"}}, {11, {"O", "O"}, {"I", "I", "I", "I", "I"}},
};

inline ltvcl::TruthValue token(const ltvcl::FuzzyContext& ctx, const std::string& t) {
  for (const auto& a : ctx.aliases())
    if (a.token == t) return a.value;
  return *ctx.algebra().parse_value(t);
}

inline ltvcl::Concept to_concept(const ltvcl::FuzzyContext& ctx, const ExampleConcept& c) {
  ltvcl::Concept out{{ltvcl::Side::Objects, {}}, {ltvcl::Side::Attributes, {}}};
  for (const auto& t : c.extent) out.extent.values.push_back(token(ctx, t));
  for (const auto& t : c.intent) out.intent.values.push_back(token(ctx, t));
  return out;
}

inline std::vector<ltvcl::Concept> to_concepts(const ltvcl::FuzzyContext& ctx,
                                               const std::vector<ExampleConcept>& list) {
  std::vector<ltvcl::Concept> out;
  for (const auto& c : list) out.push_back(to_concept(ctx, c));
  return out;
}

}  // namespace fixtures

#include <gtest/gtest.h>

#include <random>
#include <string>

#include "fixtures.hpp"
#include "ltvcl/context.hpp"
#include "ltvcl/error.hpp"
#include "oracle.hpp"

using ltvcl::Algebra;
using ltvcl::AttributeProvenance;
using ltvcl::ExtensionConfig;
using ltvcl::FuzzyContext;
using ltvcl::TruthValue;

namespace {

const TruthValue AbF{1, 1}, SlT{1, 2}, VeF{2, 1}, VeT{2, 2}, SlF{3, 1}, AbT{3, 2};

std::string data(const std::string& name) { return std::string(LTVCL_DATA_DIR) + "/" + name; }

FuzzyContext table2() { return ltvcl::parse_context(fixtures::kTable2); }

std::size_t parse_error_line(const std::string& text) {
  try {
    ltvcl::parse_context(text);
  } catch (const ltvcl::ParseError& e) {
    return e.line();
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace

TEST(Context, ParsesSampleContext) {
  const auto K = table2();
  EXPECT_EQ(K.object_count(), 2u);
  EXPECT_EQ(K.attribute_count(), 3u);
  EXPECT_EQ(K.matrix(), (std::vector<std::vector<TruthValue>>{{SlT, SlF, AbT}, {SlF, AbF, SlT}}));
  EXPECT_TRUE(K.all_original());
  EXPECT_EQ(K.display(SlT), "a");
  EXPECT_EQ(K.display(VeT), "VeT");
  EXPECT_EQ(K.values(), (std::vector<TruthValue>{AbF, SlT, SlF, AbT}));
}

TEST(Context, DataFileMatchesInlineFixture) {
  EXPECT_TRUE(ltvcl::load_context_file(data("table2.ctx")).same_data(table2()));
  EXPECT_TRUE(ltvcl::load_context_file(data("table3_corrected.ctx"))
                  .same_data(ltvcl::parse_context(fixtures::kTable3Corrected)));
}

TEST(Context, BuiltInAliasMap) {
  const auto K = ltvcl::parse_context("algebra product 3 2\nalias paper\nattributes m1 m2 m3\ng1 a b I\ng2 b O a\n");
  EXPECT_TRUE(K.same_data(table2()));
  EXPECT_EQ(K.aliases(), ltvcl::paper_aliases());
  EXPECT_EQ(parse_error_line("algebra product 2 2\nalias paper\nattributes m1\n"), 2u);
}

TEST(Context, CanonicalLabelsWithoutAliases) {
  const auto K = ltvcl::parse_context("algebra product 3 2\nattributes m1 m2 m3\ng1 SlT SlF AbT\ng2 SlF AbF SlT\n");
  EXPECT_TRUE(K.same_data(table2()));
  EXPECT_TRUE(K.aliases().empty());
}

TEST(Context, EmptyObjectSectionIsValid) {
  const auto K = ltvcl::load_context_file(data("empty.ctx"));
  EXPECT_EQ(K.object_count(), 0u);
  EXPECT_EQ(K.attribute_count(), 2u);
}

TEST(Context, ParseErrors) {
  EXPECT_EQ(parse_error_line("algebra product 3 2\nattributes m1 m2 m3\ng1 SlT SlF\n"), 3u);
  EXPECT_EQ(parse_error_line("algebra product 3 2\nattributes m1 m2\ng1 SlT Huh\n"), 3u);
  EXPECT_EQ(parse_error_line("algebra product 3 2\ng1 SlT\n"), 2u);
  EXPECT_EQ(parse_error_line("algebra product 3 2\nattributes m1 m1\n"), 2u);
  EXPECT_EQ(parse_error_line("algebra product 3 2\nattributes m1\ng1 SlT\ng1 AbT\n"), 4u);
  EXPECT_EQ(parse_error_line("algebra product 3 2\nalias SlT=AbF\n"), 2u);
  EXPECT_EQ(parse_error_line("algebra product 3 2\nalias a=Nope\n"), 2u);
  EXPECT_EQ(parse_error_line("algebra product 1 2\n"), 1u);
  EXPECT_EQ(parse_error_line("algebra product 3 x\n"), 1u);
  EXPECT_EQ(parse_error_line("attributes m1\n"), 1u);
  EXPECT_THROW(ltvcl::parse_context("algebra product 3 2\n"), ltvcl::ParseError);
  EXPECT_THROW(ltvcl::parse_context("# nothing\n"), ltvcl::ParseError);
  EXPECT_THROW(ltvcl::load_context_file(data("missing.ctx")), ltvcl::LoadError);
}

TEST(Context, TableAlgebraContext) {
  const auto K = ltvcl::parse_context("algebra table boolean.lia\nattributes m1 m2\ng1 I O\n", LTVCL_DATA_DIR);
  EXPECT_EQ(K.algebra().kind(), Algebra::Kind::Table);
  EXPECT_EQ(K.display(K.at(0, 0)), "I");
  EXPECT_EQ(ltvcl::serialize_context(K).rfind("algebra table boolean.lia\n", 0), 0u);
}

TEST(Context, ConstructorValidation) {
  const auto L = Algebra::l6();
  EXPECT_THROW(FuzzyContext(L, {"g", "g"}, {"m"}, {{AbT}, {AbT}}), ltvcl::ArgumentError);
  EXPECT_THROW(FuzzyContext(L, {"g"}, {"m", "n"}, {{AbT}}), ltvcl::DimensionError);
  EXPECT_THROW(FuzzyContext(L, {"g"}, {"m"}, {{TruthValue{4, 2}}}), ltvcl::DimensionError);
  EXPECT_THROW(FuzzyContext(L, {"g"}, {"m", "n"}, {{AbT, AbT}}, {{}, AttributeProvenance::meet_of({0})}),
               ltvcl::ArgumentError);
  EXPECT_THROW(FuzzyContext(L, {"g"}, {"m", "n", "k"}, {{AbT, AbT, AbT}},
                            {{}, {}, AttributeProvenance::meet_of({1, 0})}),
               ltvcl::ArgumentError);
}

TEST(Context, DefaultExtensionOfSampleContext) {
  const auto K = table2();
  const auto KM = ltvcl::extend_context(K);
  // meet(m2, m3) = (b, O) repeats m2 and is dropped by the novelty filter
  ASSERT_EQ(KM.attribute_count(), 6u);
  EXPECT_EQ(KM.attributes(), (std::vector<std::string>{"m1", "m2", "m3", "m4", "m5", "m6"}));
  EXPECT_EQ(KM.column(3), (std::vector<TruthValue>{AbF, AbF}));
  EXPECT_EQ(KM.column(4), (std::vector<TruthValue>{SlT, AbF}));
  EXPECT_EQ(KM.column(5), (std::vector<TruthValue>{AbT, AbT}));
  EXPECT_EQ(KM.provenance(3), AttributeProvenance::meet_of({0, 1}));
  EXPECT_EQ(KM.provenance(4), AttributeProvenance::meet_of({0, 2}));
  EXPECT_EQ(KM.provenance(5), AttributeProvenance::constant_top());
  EXPECT_EQ(ltvcl::provenance_formula(KM, 3), "meet(m1,m2)");
  EXPECT_EQ(ltvcl::provenance_formula(KM, 5), "top");

  ExtensionConfig keep;
  keep.novelty_filter = false;
  const auto all = ltvcl::extend_context(K, keep);
  ASSERT_EQ(all.attribute_count(), 7u);
  EXPECT_EQ(all.column(5), K.column(1));
  EXPECT_EQ(ltvcl::provenance_formula(KM, 0), "original");
  EXPECT_EQ(KM.aliases(), K.aliases());
}

TEST(Context, PresetExtensionReproducesCorrectedExtension) {
  const auto KM = ltvcl::extend_context(table2(), ExtensionConfig::paper_preset());
  EXPECT_TRUE(KM.same_data(ltvcl::parse_context(fixtures::kTable3Corrected)));
  EXPECT_FALSE(KM.same_data(ltvcl::load_context_file(data("table3_printed.ctx"))));
}

TEST(Context, NoveltyFilterDropsDuplicateColumns) {
  const auto L = Algebra::l6();
  const FuzzyContext K(L, {"g1", "g2"}, {"m1", "m2"}, {{SlT, SlT}, {VeF, VeF}});
  const auto KM = ltvcl::extend_context(K);
  ASSERT_EQ(KM.attribute_count(), 3u);
  EXPECT_EQ(KM.provenance(2).kind, AttributeProvenance::Kind::ConstantTop);

  ExtensionConfig keep;
  keep.novelty_filter = false;
  EXPECT_EQ(ltvcl::extend_context(K, keep).attribute_count(), 4u);

  const FuzzyContext topped(L, {"g1"}, {"m1"}, {{AbT}});
  EXPECT_EQ(ltvcl::extend_context(topped).attribute_count(), 1u);
  EXPECT_EQ(ltvcl::extend_context(topped, keep).attribute_count(), 2u);
}

TEST(Context, SingleAttributeGetsOnlyTopColumn) {
  const FuzzyContext K(Algebra::l6(), {"g1", "g2"}, {"m1"}, {{SlT}, {VeF}});
  const auto KM = ltvcl::extend_context(K);
  ASSERT_EQ(KM.attribute_count(), 2u);
  EXPECT_EQ(KM.column(1), (std::vector<TruthValue>{AbT, AbT}));
}

TEST(Context, TripleMeetWithArityThree) {
  ExtensionConfig cfg;
  cfg.max_meet_arity = 3;
  cfg.novelty_filter = false;
  cfg.include_top_column = false;
  const auto KM = ltvcl::extend_context(table2(), cfg);
  ASSERT_EQ(KM.attribute_count(), 7u);
  EXPECT_EQ(KM.provenance(6), AttributeProvenance::meet_of({0, 1, 2}));
  EXPECT_EQ(ltvcl::provenance_formula(KM, 6), "meet(m1,m2,m3)");
  EXPECT_EQ(KM.column(6), (std::vector<TruthValue>{AbF, AbF}));
}

TEST(Context, ExtensionArguments) {
  ExtensionConfig bad;
  bad.max_meet_arity = 1;
  EXPECT_THROW(ltvcl::extend_context(table2(), bad), ltvcl::ArgumentError);
  const auto KM = ltvcl::extend_context(table2());
  EXPECT_THROW(ltvcl::extend_context(KM), ltvcl::ArgumentError);
  ExtensionConfig odd;
  odd.explicit_meets = {{1, 0}};
  EXPECT_THROW(ltvcl::extend_context(table2(), odd), ltvcl::ArgumentError);
}

TEST(Context, FreshNamesSkipCollisions) {
  const FuzzyContext K(Algebra::l6(), {"g1"}, {"m3", "m1"}, {{SlT, VeF}});
  const auto KM = ltvcl::extend_context(K);
  EXPECT_EQ(KM.attributes(), (std::vector<std::string>{"m3", "m1", "m4", "m5"}));
}

TEST(Context, RestrictAgrees) {
  const auto K = table2();
  EXPECT_TRUE(ltvcl::restrict_agrees(K, ltvcl::extend_context(K)));
  EXPECT_TRUE(ltvcl::restrict_agrees(K, ltvcl::parse_context(fixtures::kTable3Corrected)));
  EXPECT_TRUE(ltvcl::restrict_agrees(K, K));

  auto m = K.matrix();
  m[1][2] = VeT;
  EXPECT_FALSE(ltvcl::restrict_agrees(K, FuzzyContext(K.algebra(), K.objects(), K.attributes(), m)));

  // object order does not matter
  const FuzzyContext swapped(K.algebra(), {"g2", "g1"}, K.attributes(), {K.matrix()[1], K.matrix()[0]});
  EXPECT_TRUE(ltvcl::restrict_agrees(K, swapped));

  const FuzzyContext renamed(K.algebra(), {"g1", "g3"}, K.attributes(), K.matrix());
  EXPECT_THROW(ltvcl::restrict_agrees(K, renamed), ltvcl::StructureError);
  const FuzzyContext other(Algebra::product({4, 2}), K.objects(), K.attributes(), K.matrix());
  EXPECT_THROW(ltvcl::restrict_agrees(K, other), ltvcl::StructureError);
}

TEST(Context, SerializeRoundTrip) {
  const auto K = table2();
  const auto text = ltvcl::serialize_context(K);
  EXPECT_EQ(text,
            "algebra product 3 2\n"
            "alias a=SlT b=SlF I=AbT O=AbF\n"
            "attributes m1 m2 m3\n"
            "g1 a b I\n"
            "g2 b O a\n");
  const auto back = ltvcl::parse_context(text);
  EXPECT_TRUE(back.same_data(K));
  EXPECT_EQ(back.aliases(), K.aliases());
}

TEST(Context, SerializeWritesProvenanceComments) {
  const auto KM = ltvcl::extend_context(table2(), ExtensionConfig::paper_preset());
  const auto text = ltvcl::serialize_context(KM);
  EXPECT_NE(text.find("# m4 = meet(m1,m2)\n"), std::string::npos);
  EXPECT_NE(text.find("# m5 = top\n"), std::string::npos);
  EXPECT_TRUE(ltvcl::parse_context(text).same_data(KM));
}

TEST(Context, SerializeHeaderOnly) {
  const FuzzyContext K(Algebra::l6(), {}, {}, {});
  EXPECT_EQ(ltvcl::serialize_context(K), "algebra product 3 2\nattributes\n");
}

TEST(Context, RandomExtensionsPreserveOriginalsAndProvenance) {
  std::mt19937 rng(20261016);
  const auto L = Algebra::l6();
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + trial % 3, cols = 1 + (trial / 3) % 4;
    const auto K = oracle::random_context(rng, L, rows, cols);
    ExtensionConfig cfg;
    cfg.max_meet_arity = 2 + trial % 3;
    cfg.novelty_filter = trial % 2 == 0;
    const auto KM = ltvcl::extend_context(K, cfg);
    ASSERT_TRUE(ltvcl::restrict_agrees(K, KM));
    for (std::size_t j = 0; j < KM.attribute_count(); ++j) {
      const auto& p = KM.provenance(j);
      if (j < cols) {
        EXPECT_EQ(p.kind, AttributeProvenance::Kind::Original);
        continue;
      }
      for (std::size_t g = 0; g < rows; ++g) {
        TruthValue expected = L.top();
        for (auto s : p.sources) expected = L.meet(expected, K.at(g, s));
        EXPECT_EQ(KM.at(g, j), expected);
      }
    }
    if (cfg.novelty_filter)
      for (std::size_t a = 0; a < KM.attribute_count(); ++a)
        for (std::size_t b = a + 1; b < KM.attribute_count(); ++b)
          if (b >= cols) EXPECT_NE(KM.column(a), KM.column(b));
    EXPECT_TRUE(ltvcl::parse_context(ltvcl::serialize_context(KM)).same_data(KM));
  }
}

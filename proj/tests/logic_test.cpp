#include <gtest/gtest.h>

#include "choicerev/logic.hpp"
#include "choicerev/random.hpp"
#include "oracles.hpp"

using namespace choicerev;

namespace {

SentenceClass cls(const char* text, const Language& lang) { return class_of(parse_formula(text, lang), lang); }

ModelMask mask_of(std::initializer_list<const char*> valuations, const Language& lang) {
  ModelMask m = 0;
  for (auto v : valuations) m |= ModelMask{1} << parse_valuation_string(v, lang);
  return m;
}

Formula random_formula(Rng& rng, const Language& lang, int depth) {
  if (depth == 0 || uniform_below(rng, 3) == 0) {
    auto pick = uniform_below(rng, lang.atoms() + 2);
    if (pick == 0) return Formula::top();
    if (pick == 1) return Formula::bottom();
    return Formula::atom(static_cast<int>(pick - 2));
  }
  switch (uniform_below(rng, 4)) {
    case 0: return Formula::negation(random_formula(rng, lang, depth - 1));
    case 1: return Formula::conjunction(random_formula(rng, lang, depth - 1), random_formula(rng, lang, depth - 1));
    case 2: return Formula::disjunction(random_formula(rng, lang, depth - 1), random_formula(rng, lang, depth - 1));
    default: return Formula::conditional(random_formula(rng, lang, depth - 1), random_formula(rng, lang, depth - 1));
  }
}

}  // namespace

TEST(Language, BoundsAndCounts) {
  EXPECT_THROW(Language(0), std::invalid_argument);
  EXPECT_THROW(Language(5), std::invalid_argument);
  Language l2(2);
  EXPECT_EQ(l2.valuation_count(), 4);
  EXPECT_EQ(l2.class_count(), 16u);
  EXPECT_EQ(Language(4).class_count(), 65536u);
  EXPECT_FALSE(Language(4).exhaustive());
  EXPECT_THROW(all_classes(Language(4)), std::length_error);
}

TEST(Valuation, StringsPutAtomIAtCharacterI) {
  Language lang(3);
  EXPECT_EQ(valuation_string(0b001, lang), "100");
  EXPECT_EQ(valuation_string(0b110, lang), "011");
  for (int v = 0; v < lang.valuation_count(); ++v) EXPECT_EQ(parse_valuation_string(valuation_string(v, lang), lang), v);
  EXPECT_THROW(parse_valuation_string("10", lang), std::invalid_argument);
  EXPECT_THROW(parse_valuation_string("1x0", lang), std::invalid_argument);
}

TEST(ParseFormula, Grammar) {
  Language lang(3);
  Formula f = parse_formula("p0 & ~p0", lang);
  EXPECT_EQ(f, Formula::conjunction(Formula::atom(0), Formula::negation(Formula::atom(0))));

  Formula g = parse_formula("p0 -> (p1 | p2)", lang);
  ASSERT_EQ(g.kind(), Formula::Kind::conditional);
  EXPECT_EQ(g.lhs(), Formula::atom(0));
  EXPECT_EQ(g.rhs(), Formula::disjunction(Formula::atom(1), Formula::atom(2)));

  Formula chain = parse_formula("p0 -> p1 -> p2", lang);
  ASSERT_EQ(chain.kind(), Formula::Kind::conditional);
  EXPECT_EQ(chain.rhs().kind(), Formula::Kind::conditional);

  EXPECT_EQ(parse_formula("  T ", lang), Formula::top());
  EXPECT_EQ(parse_formula("F", lang), Formula::bottom());
}

TEST(ParseFormula, Errors) {
  Language lang(2);
  try {
    parse_formula("p9", lang);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("atom out of range"), std::string::npos);
    EXPECT_EQ(e.position(), 0u);
  }
  try {
    parse_formula("p0 & ", lang);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
  EXPECT_THROW(parse_formula("(p0", lang), ParseError);
  EXPECT_THROW(parse_formula("p0 p1", lang), ParseError);
  EXPECT_THROW(parse_formula("", lang), ParseError);
  EXPECT_THROW(parse_formula("p", lang), ParseError);
}

TEST(ParseFormula, PrinterRoundTrips) {
  Language lang(3);
  Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    Formula f = random_formula(rng, lang, 4);
    std::string text = to_string(f);
    EXPECT_EQ(parse_formula(text, lang), f) << text;
  }
}

TEST(ClassOf, TruthTables) {
  Language lang(2);
  EXPECT_EQ(cls("p0 & ~p0", lang).models, 0u);
  EXPECT_EQ(cls("T", lang).models, lang.full_mask());
  EXPECT_EQ(cls("p0", lang).models, mask_of({"10", "11"}, lang));
  EXPECT_EQ(cls("p1", lang).models, mask_of({"01", "11"}, lang));
  EXPECT_EQ(cls("p0 -> p1", lang).models, mask_of({"00", "01", "11"}, lang));
  EXPECT_EQ(model_strings(cls("p0", lang).models, lang), (std::vector<std::string>{"10", "11"}));
}

TEST(ClassOf, FactorsThroughEquivalence) {
  Language lang(3);
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    Formula f = random_formula(rng, lang, 3);
    Formula g = random_formula(rng, lang, 3);
    bool same_table = true;
    for (int v = 0; v < lang.valuation_count(); ++v) same_table = same_table && f.evaluate(v) == g.evaluate(v);
    EXPECT_EQ(class_of(f, lang) == class_of(g, lang), same_table);
    // the DNF printed for a class denotes that class
    EXPECT_EQ(class_of(formula_of(class_of(f, lang), lang), lang), class_of(f, lang));
  }
}

TEST(Entails, Examples) {
  Language lang(2);
  BeliefSet p0p1 = BeliefSet::closure_of(cls("p0 & p1", lang));
  EXPECT_TRUE(entails(p0p1, cls("p0 & p1", lang)));
  EXPECT_FALSE(entails(BeliefSet::tautologies(lang), cls("p0", lang)));
  for (auto c : all_classes(lang)) EXPECT_TRUE(entails(BeliefSet::inconsistent(), c));
}

TEST(Entails, AgreesWithValuationScan) {
  Language lang(2);
  for (auto x : all_belief_sets(lang)) {
    for (auto c : all_classes(lang)) EXPECT_EQ(entails(x, c), oracle::believes(x, c, lang));
  }
}

TEST(Entails, TheoryIsClosedUnderConjunctionAndWeakening) {
  Language lang(2);
  for (auto x : all_belief_sets(lang)) {
    for (auto a : all_classes(lang)) {
      for (auto b : all_classes(lang)) {
        bool both = entails(x, a) && entails(x, b);
        EXPECT_EQ(both, entails(x, class_conjunction(a, b)));
        // a ⊢ b and a in X gives b in X
        if ((a.models & ~b.models) == 0 && entails(x, a)) { EXPECT_TRUE(entails(x, b)); }
      }
    }
  }
}

TEST(ConjAll, Examples) {
  Language lang(2);
  EXPECT_EQ(conj_all(InputSet{cls("p0", lang), cls("p1", lang)}, lang).models, mask_of({"11"}, lang));
  EXPECT_EQ(conj_all(InputSet{}, lang), top_class(lang));
  EXPECT_EQ(conj_all(InputSet{cls("p0", lang), cls("~p0", lang)}, lang), bottom_class());
}

TEST(PairwiseConj, Examples) {
  Language lang(2);
  auto p0 = cls("p0", lang), p1 = cls("p1", lang);
  EXPECT_EQ(pairwise_conj(InputSet{p0}, InputSet{p1}), InputSet{cls("p0 & p1", lang)});
  EXPECT_TRUE(pairwise_conj(InputSet{p0, p1}, InputSet{}).empty());
  EXPECT_EQ(pairwise_conj(InputSet{p0, p1}, InputSet{p0}), (InputSet{p0, cls("p0 & p1", lang)}));
}

TEST(PairwiseConj, AssociativeAndCommutative) {
  Language lang(2);
  Rng rng(5);
  auto pick = [&] {
    std::vector<SentenceClass> v;
    auto k = uniform_below(rng, 3);
    for (std::uint64_t i = 0; i < k; ++i) v.push_back({static_cast<ModelMask>(uniform_below(rng, 16))});
    return InputSet(v);
  };
  for (int i = 0; i < 200; ++i) {
    InputSet a = pick(), b = pick(), c = pick();
    EXPECT_EQ(pairwise_conj(a, b), pairwise_conj(b, a));
    EXPECT_EQ(pairwise_conj(pairwise_conj(a, b), c), pairwise_conj(a, pairwise_conj(b, c)));
    // &(A ∪ B) = &A ∧ &B
    EXPECT_EQ(conj_all(set_union(a, b), lang), class_conjunction(conj_all(a, lang), conj_all(b, lang)));
  }
}

TEST(SetEquiv, Examples) {
  Language lang(2);
  EXPECT_TRUE(set_equiv(InputSet{cls("p0 & p1", lang)}, InputSet{cls("p1 & p0", lang)}));
  EXPECT_FALSE(set_equiv(InputSet{cls("p0", lang)}, InputSet{cls("p0", lang), cls("T", lang)}));
  EXPECT_FALSE(set_equiv(InputSet{cls("p0", lang), cls("~p0", lang)}, InputSet{cls("p1", lang), cls("~p1", lang)}));
}

TEST(InputSet, CollapsesEquivalentMembers) {
  Language lang(2);
  InputSet a = parse_input_set("p0 & p1, p1 & p0, ~~p0 & p1", lang);
  EXPECT_EQ(a.size(), 1u);
  InputSet b = parse_input_set("p0 -> (p1 | p0), ~p1", lang);
  EXPECT_EQ(b.size(), 2u);
  EXPECT_TRUE(b.contains(top_class(lang)));
  EXPECT_TRUE(parse_input_set("", lang).empty());
  EXPECT_THROW(parse_input_set("p0,,p1", lang), ParseError);
  EXPECT_THROW(parse_input_set("p0, p7", lang), ParseError);
}

TEST(Describe, CanonicalText) {
  Language lang(2);
  EXPECT_EQ(describe(cls("p0", lang), lang), "[10,11]");
  EXPECT_EQ(describe(BeliefSet::inconsistent(), lang), "[]");
  EXPECT_EQ(describe(InputSet{cls("p0", lang), cls("p1 & ~p0", lang)}, lang), "{[01], [10,11]}");
}

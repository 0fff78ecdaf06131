#include <gtest/gtest.h>

#include "choicerev/descriptor.hpp"
#include "choicerev/operators.hpp"
#include "oracles.hpp"

using namespace choicerev;

namespace {

SentenceClass cls(const char* text, const Language& lang) { return class_of(parse_formula(text, lang), lang); }

}  // namespace

TEST(ParseDescriptor, Examples) {
  Language lang(3);
  Descriptor one = parse_descriptor("B(p0)", lang);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], MolecularDescriptor::believed(Formula::atom(0), lang));

  Descriptor two = parse_descriptor("B(p0)|B(p1), !B(p2)", lang);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[1], MolecularDescriptor::negation(MolecularDescriptor::believed(Formula::atom(2), lang)));

  EXPECT_THROW(parse_descriptor("B(p0 & ", lang), ParseError);
  EXPECT_THROW(parse_descriptor("p0", lang), ParseError);
  EXPECT_TRUE(parse_descriptor("", lang).empty());
}

TEST(ParseDescriptor, PrinterRoundTrips) {
  Language lang(3);
  for (const char* text : {"B(p0)", "B(p0) | B(p1), !B(p2)", "!(B(p0) & B(p1)) -> B(p2 | ~p0)", "B(T), B(F)"}) {
    Descriptor d = parse_descriptor(text, lang);
    EXPECT_EQ(parse_descriptor(to_string(d), lang), d) << text;
  }
}

TEST(Satisfies, Examples) {
  Language lang(3);
  BeliefSet x = BeliefSet::closure_of(cls("p0", lang));
  EXPECT_TRUE(satisfies(x, MolecularDescriptor::believed(cls("p0", lang), lang)));
  EXPECT_TRUE(satisfies(x, MolecularDescriptor::negation(MolecularDescriptor::believed(cls("p1", lang), lang))));
  for (auto c : all_classes(lang)) {
    EXPECT_TRUE(satisfies(BeliefSet::inconsistent(), MolecularDescriptor::believed(c, lang)));
  }
}

TEST(SatisfiesComposite, Examples) {
  Language lang(2);
  for (auto x : all_belief_sets(lang)) EXPECT_TRUE(satisfies_composite(x, Descriptor{}));
  BeliefSet x = BeliefSet::closure_of(cls("p0", lang));
  EXPECT_TRUE(satisfies_composite(x, parse_descriptor("B(p0), !B(p1)", lang)));
  EXPECT_FALSE(satisfies_composite(BeliefSet::tautologies(lang), parse_descriptor("B(p0)", lang)));
}

TEST(Satisfies, ConnectivesAreTruthFunctional) {
  Language lang(2);
  auto b0 = MolecularDescriptor::believed(cls("p0", lang), lang);
  auto b1 = MolecularDescriptor::believed(cls("p1", lang), lang);
  for (auto x : all_belief_sets(lang)) {
    bool s0 = oracle::believes(x, cls("p0", lang), lang);
    bool s1 = oracle::believes(x, cls("p1", lang), lang);
    EXPECT_EQ(satisfies(x, MolecularDescriptor::conjunction(b0, b1)), s0 && s1);
    EXPECT_EQ(satisfies(x, MolecularDescriptor::disjunction(b0, b1)), s0 || s1);
    EXPECT_EQ(satisfies(x, MolecularDescriptor::conditional(b0, b1)), !s0 || s1);
    EXPECT_EQ(satisfies(x, MolecularDescriptor::negation(b0)), !s0);
  }
}

TEST(ChoiceDescriptor, Examples) {
  Language lang(2);
  Descriptor d = choice_descriptor(InputSet{cls("p0", lang)}, lang);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0], MolecularDescriptor::believed(cls("p0", lang), lang));

  Descriptor e = choice_descriptor(InputSet{cls("p0", lang), cls("p1", lang)}, lang);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_TRUE(satisfies_composite(BeliefSet::closure_of(cls("p1", lang)), e));

  EXPECT_THROW(choice_descriptor(InputSet{}, lang), std::invalid_argument);
}

TEST(ChoiceDescriptor, SatisfiedExactlyWhenTheoryMeetsInput) {
  Language lang(2);
  auto u = make_universe(lang, 2);
  for (const auto& a : u->sets()) {
    if (a.empty()) continue;
    Descriptor d = choice_descriptor(a, lang);
    for (auto x : all_belief_sets(lang)) EXPECT_EQ(satisfies_composite(x, d), oracle::meets(a, x, lang));
  }
}

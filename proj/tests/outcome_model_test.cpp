#include <gtest/gtest.h>

#include <set>

#include "choicerev/outcome_model.hpp"
#include "oracles.hpp"

using namespace choicerev;

namespace {

SentenceClass cls(const char* text, const Language& lang) { return class_of(parse_formula(text, lang), lang); }
BeliefSet cn(const char* text, const Language& lang) { return BeliefSet::closure_of(cls(text, lang)); }

bool check_passed(const ValidationReport& r, const std::string& condition) {
  for (const auto& c : r.checks) {
    if (c.condition == condition) return c.passed;
  }
  ADD_FAILURE() << "no check named " << condition;
  return false;
}

}  // namespace

TEST(ValidateModel, Examples) {
  Language lang(2);
  BeliefSet k = cn("p0", lang);
  EXPECT_TRUE(validate_model(RelationalModel::from_outcomes(lang, {k})).ok());

  RelationalModel misplaced{lang, k, {cn("p1", lang), k}};
  auto r = validate_model(misplaced);
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(check_passed(r, "leq1"));
  EXPECT_TRUE(check_passed(r, "X2"));

  RelationalModel duplicate{lang, k, {k, cn("p1", lang), cn("p1", lang)}};
  auto d = validate_model(duplicate);
  EXPECT_FALSE(check_passed(d, "leq2"));

  RelationalModel missing{lang, k, {cn("p1", lang)}};
  EXPECT_FALSE(check_passed(validate_model(missing), "X2"));

  RelationalModel inconsistent_k{lang, BeliefSet::inconsistent(), {BeliefSet::inconsistent()}};
  EXPECT_FALSE(validate_model(inconsistent_k).ok());
}

TEST(DescriptorRevise, Examples) {
  Language lang(2);
  BeliefSet k = cn("p0", lang);
  RelationalModel m = RelationalModel::from_outcomes(lang, {k, cn("p1", lang), cn("~p0", lang)});
  EXPECT_EQ(descriptor_revise(m, parse_descriptor("B(p0)", lang)), k);
  EXPECT_EQ(descriptor_revise(m, parse_descriptor("B(F)", lang)), k);
  EXPECT_EQ(descriptor_revise(m, Descriptor{}), k);
  EXPECT_EQ(descriptor_revise(m, parse_descriptor("!B(p0)", lang)), cn("p1", lang));
  EXPECT_EQ(descriptor_revise(m, parse_descriptor("B(~p0), !B(p1)", lang)), cn("~p0", lang));
}

TEST(ChoiceReviseViaModel, Examples) {
  Language lang(2);
  BeliefSet top = BeliefSet::tautologies(lang);
  RelationalModel m = RelationalModel::from_outcomes(lang, {top, cn("p0", lang), cn("p1", lang)});
  EXPECT_EQ(choice_revise_via_model(m, InputSet{cls("p1", lang)}), cn("p1", lang));
  EXPECT_EQ(choice_revise_via_model(m, InputSet{}), top);
  EXPECT_EQ(choice_revise_via_model(m, InputSet{cls("p0 | ~p0", lang), cls("p1", lang)}), top);
  EXPECT_EQ(choice_revise_via_model(m, InputSet{cls("p1", lang), cls("p0", lang)}), cn("p0", lang));
}

TEST(ChoiceReviseViaModel, AgreesWithOracleAndInducedTable) {
  Language lang(2);
  auto u = make_universe(lang, 2);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto m = generate_model(seed, lang, 1 + seed % 8);
    auto op = induced_operator(m, u);
    for (const auto& a : u->sets()) {
      BeliefSet x = choice_revise_via_model(m, a);
      EXPECT_EQ(x, oracle::model_revise(m, a));
      EXPECT_EQ(x, op.revise(a));
      // success-condition shape
      if (!a.empty()) { EXPECT_TRUE(x == m.K || oracle::meets(a, x, lang)); }
      if (oracle::meets(a, m.K, lang)) { EXPECT_EQ(x, m.K); }
    }
  }
}

TEST(CheckExtendedConditions, Examples) {
  Language lang(2);
  BeliefSet top = BeliefSet::tautologies(lang);
  EXPECT_FALSE(check_extended_conditions(RelationalModel::from_outcomes(lang, {top})).has_X3);

  // every belief set, K = Cn(T) first and Cn(F) last
  std::vector<BeliefSet> all;
  all.push_back(top);
  for (auto x : all_belief_sets(lang)) {
    if (x != top && x.consistent()) all.push_back(x);
  }
  all.push_back(BeliefSet::inconsistent());
  EXPECT_EQ(check_extended_conditions(RelationalModel::from_outcomes(lang, all)), (ModelFlags{true, true}));

  auto flags = check_extended_conditions(RelationalModel::from_outcomes(lang, {top, BeliefSet::inconsistent()}));
  EXPECT_TRUE(flags.has_X3);
  EXPECT_FALSE(flags.has_leq3);
}

TEST(CheckExtendedConditions, Leq3MatchesDirectScan) {
  // scan every consistent sentence for its first believing outcome
  Language lang(2);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto m = generate_model(seed, lang, 1 + seed % 12);
    bool direct = true;
    for (auto phi : all_classes(lang)) {
      if (phi.models == 0) continue;
      auto first = std::find_if(m.outcomes.begin(), m.outcomes.end(),
                                [&](const BeliefSet& x) { return oracle::believes(x, phi, lang); });
      if (first == m.outcomes.end() || first->models == 0) direct = false;
    }
    EXPECT_EQ(check_extended_conditions(m).has_leq3, direct) << seed;
  }
}

TEST(GenerateModel, DeterministicAndValid) {
  Language lang(2);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto m = generate_model(seed, lang, 1 + seed % 8);
    EXPECT_EQ(m, generate_model(seed, lang, 1 + seed % 8));
    EXPECT_TRUE(validate_model(m).ok());
    EXPECT_EQ(m.outcomes.size(), 1 + seed % 8);
    EXPECT_TRUE(m.K.consistent());
  }
}

TEST(GenerateModel, HonoursFlags) {
  Language lang(2);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    for (ModelFlags want : {ModelFlags{true, true}, ModelFlags{true, false}, ModelFlags{false, false}}) {
      const std::size_t size = want.has_leq3 ? 5 + seed % 6 : 2 + seed % 6;
      auto m = generate_model(seed, lang, size, want);
      EXPECT_TRUE(validate_model(m).ok());
      EXPECT_EQ(check_extended_conditions(m), want) << seed;
    }
  }
}

TEST(GenerateModel, RejectsInfeasibleRequests) {
  Language lang(2);
  EXPECT_THROW(generate_model(0, lang, 0), std::invalid_argument);
  EXPECT_THROW(generate_model(0, lang, 17), std::invalid_argument);
  EXPECT_THROW(generate_model(0, lang, 16, ModelFlags{false, false}), std::invalid_argument);
  // leq3 needs a satisfier for each of the four complete theories plus Cn(F)
  EXPECT_THROW(generate_model(0, lang, 3, ModelFlags{true, true}), std::invalid_argument);
}

TEST(EnumerateModels, OneAtomHas48Models) {
  Language lang(1);
  auto models = enumerate_models(lang, 4);
  EXPECT_EQ(models.size(), 48u);
  std::set<std::vector<ModelMask>> distinct;
  for (const auto& m : models) {
    EXPECT_TRUE(validate_model(m).ok());
    std::vector<ModelMask> key;
    for (auto x : m.outcomes) key.push_back(x.models);
    distinct.insert(key);
  }
  EXPECT_EQ(distinct.size(), 48u);
  EXPECT_THROW(enumerate_models(Language(2), 4), std::length_error);
}

TEST(InducedOperator, PassesBasicAndSupplementedPostulates) {
  Language lang(2);
  auto u = make_universe(lang, 2);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto plain = induced_operator(generate_model(seed, lang, 1 + seed % 8), u);
    EXPECT_TRUE(oracle::basic(plain)) << seed;
    auto extended = induced_operator(generate_model(seed, lang, 6, ModelFlags{true, true}), u);
    EXPECT_TRUE(oracle::basic(extended));
    EXPECT_TRUE(oracle::supplemented(extended)) << seed;
  }
}

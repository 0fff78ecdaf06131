#ifndef CHOICEREV_OUTCOME_MODEL_HPP
#define CHOICEREV_OUTCOME_MODEL_HPP

// Relational select-direct models: a list of candidate belief sets in order of
// preference, K first. Descriptor revision picks the first outcome satisfying
// the descriptor; choice revision by A uses the descriptor B(a0) | B(a1) | ...

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "choicerev/descriptor.hpp"
#include "choicerev/logic.hpp"
#include "choicerev/operators.hpp"
#include "choicerev/random.hpp"

namespace choicerev {

// The order on outcomes is list position; index 0 is the minimum.
struct RelationalModel {
  Language lang;
  BeliefSet K;
  std::vector<BeliefSet> outcomes;

  // Model whose K is its first outcome, as in the file format.
  static RelationalModel from_outcomes(const Language& lang, std::vector<BeliefSet> outcomes) {
    if (outcomes.empty()) throw std::invalid_argument("model has no outcomes");
    BeliefSet k = outcomes.front();
    return {lang, k, std::move(outcomes)};
  }

  friend bool operator==(const RelationalModel&, const RelationalModel&) = default;
};

struct ValidationReport {
  struct Check {
    std::string condition;
    bool passed = true;
    std::string witness;
  };
  std::vector<Check> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
};

inline ValidationReport validate_model(const RelationalModel& m) {
  ValidationReport r;
  const ModelMask full = m.lang.full_mask();

  ValidationReport::Check x1{"X1"};
  for (std::size_t i = 0; i < m.outcomes.size(); ++i) {
    if ((m.outcomes[i].models & ~full) != 0) {
      x1 = {"X1", false, "outcome " + std::to_string(i) + " uses valuations outside the language"};
      break;
    }
  }
  r.checks.push_back(x1);

  ValidationReport::Check consistent{"K_consistent"};
  if (!m.K.consistent()) consistent = {"K_consistent", false, "K is Cn({F})"};
  r.checks.push_back(consistent);

  ValidationReport::Check x2{"X2"};
  if (std::find(m.outcomes.begin(), m.outcomes.end(), m.K) == m.outcomes.end()) {
    x2 = {"X2", false, "K " + describe(m.K, m.lang) + " is not an outcome"};
  }
  r.checks.push_back(x2);

  ValidationReport::Check leq1{"leq1"};
  if (m.outcomes.empty() || m.outcomes.front() != m.K) {
    leq1 = {"leq1", false,
            m.outcomes.empty() ? "no outcomes"
                               : "K is not minimal; position 0 holds " + describe(m.outcomes.front(), m.lang)};
  }
  r.checks.push_back(leq1);

  ValidationReport::Check leq2{"leq2"};
  std::set<ModelMask> seen;
  for (std::size_t i = 0; i < m.outcomes.size(); ++i) {
    if (!seen.insert(m.outcomes[i].models).second) {
      leq2 = {"leq2", false, "duplicate outcome " + describe(m.outcomes[i], m.lang) + " at position " +
                                 std::to_string(i)};
      break;
    }
  }
  r.checks.push_back(leq2);
  return r;
}

inline BeliefSet descriptor_revise(const RelationalModel& m, const Descriptor& phi) {
  for (const auto& x : m.outcomes) {
    if (satisfies_composite(x, phi)) return x;
  }
  return m.K;
}

inline BeliefSet choice_revise_via_model(const RelationalModel& m, const InputSet& a) {
  if (a.empty()) return m.K;
  return descriptor_revise(m, choice_descriptor(a, m.lang));
}

// The choice operator a model induces on a universe. Satisfying the choice
// descriptor of A means containing some member of A, which is tested directly.
inline ChoiceOperator induced_operator(const RelationalModel& m, UniversePtr universe) {
  return ChoiceOperator::from_function(m.K, std::move(universe), [&m](const InputSet& a) {
    if (a.empty()) return m.K;
    for (const auto& x : m.outcomes) {
      if (intersects(a, x)) return x;
    }
    return m.K;
  });
}

struct ModelFlags {
  bool has_X3 = false;
  bool has_leq3 = false;

  friend bool operator==(const ModelFlags&, const ModelFlags&) = default;
};

// has_leq3: for every consistent phi some outcome entails phi and the first
// one to do so is not Cn({F}).
inline ModelFlags check_extended_conditions(const RelationalModel& m) {
  ModelFlags f;
  f.has_X3 = std::find(m.outcomes.begin(), m.outcomes.end(), BeliefSet::inconsistent()) != m.outcomes.end();
  f.has_leq3 = true;
  for (std::uint64_t phi = 1; phi < m.lang.class_count() && f.has_leq3; ++phi) {
    const SentenceClass c{static_cast<ModelMask>(phi)};
    auto first = std::find_if(m.outcomes.begin(), m.outcomes.end(),
                              [&](const BeliefSet& x) { return x.contains(c); });
    if (first == m.outcomes.end() || !first->consistent()) f.has_leq3 = false;
  }
  return f;
}

namespace detail {

inline bool is_complete_theory(const BeliefSet& x) { return std::has_single_bit(x.models); }

inline RelationalModel draw_model(Rng& rng, const Language& lang, std::size_t size,
                                  const std::optional<ModelFlags>& flags) {
  const ModelMask bottom = 0;
  BeliefSet k = random_consistent_belief_set(rng, lang);
  std::vector<ModelMask> chosen{k.models};
  std::set<ModelMask> used{k.models};
  auto take = [&](ModelMask m) {
    if (used.insert(m).second) chosen.push_back(m);
  };
  if (flags && flags->has_X3) take(bottom);
  if (flags && flags->has_leq3) {
    for (int v = 0; v < lang.valuation_count(); ++v) take(ModelMask{1} << v);
  }
  const bool allow_bottom = !flags || flags->has_X3;
  while (chosen.size() < size) {
    auto m = static_cast<ModelMask>(uniform_below(rng, lang.class_count()));
    if (m == bottom && !allow_bottom) continue;
    take(m);
  }
  std::vector<BeliefSet> outcomes;
  for (auto m : chosen) outcomes.push_back({m});
  shuffle(outcomes, rng);
  std::stable_partition(outcomes.begin(), outcomes.end(), [&](const BeliefSet& x) { return x == k; });
  if (flags && flags->has_X3 && flags->has_leq3) {
    // Cn({F}) after every complete theory
    auto bot = std::find(outcomes.begin(), outcomes.end(), BeliefSet::inconsistent());
    auto last = std::find_if(outcomes.rbegin(), outcomes.rend(), [](const BeliefSet& x) { return is_complete_theory(x); });
    auto last_pos = outcomes.rend() - last - 1;
    if (bot - outcomes.begin() < last_pos) {
      BeliefSet b = *bot;
      outcomes.erase(bot);
      outcomes.insert(outcomes.begin() + last_pos, b);
    }
  }
  return {lang, k, std::move(outcomes)};
}

}  // namespace detail

// Seeded random model with `size` distinct outcomes. With flags given, the
// model has exactly those extended conditions.
inline RelationalModel generate_model(std::uint64_t seed, const Language& lang, std::size_t size,
                                      const std::optional<ModelFlags>& flags = std::nullopt) {
  if (size < 1) throw std::invalid_argument("model size must be at least 1");
  const std::uint64_t classes = lang.class_count();
  const bool forbid_bottom = flags && !flags->has_X3;
  if (size > classes - (forbid_bottom ? 1 : 0)) {
    throw std::invalid_argument("model size " + std::to_string(size) + " exceeds the available belief sets");
  }
  if (flags && flags->has_leq3) {
    // K plus every complete theory, plus Cn({F}) if requested
    std::size_t needed = static_cast<std::size_t>(lang.valuation_count()) + (flags->has_X3 ? 1 : 0);
    if (size < needed) {
      throw std::invalid_argument("leq3 needs at least " + std::to_string(needed) + " outcomes");
    }
  }
  Rng rng(seed);
  constexpr int kAttempts = 1000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    RelationalModel m = detail::draw_model(rng, lang, size, flags);
    if (m.outcomes.size() != size) continue;
    if (!flags || check_extended_conditions(m) == *flags) return m;
  }
  throw std::invalid_argument("could not generate a model of size " + std::to_string(size) +
                              " with the requested flags");
}

// Every valid model over the language with at most max_size outcomes: a
// consistent K followed by an ordered arrangement of other belief sets.
inline std::vector<RelationalModel> enumerate_models(const Language& lang, std::size_t max_size) {
  if (lang.atoms() > 1) throw std::length_error("model enumeration limited to one atom");
  const auto all = all_belief_sets(lang);
  std::vector<RelationalModel> out;
  std::vector<BeliefSet> current;
  std::vector<bool> used(all.size(), false);
  auto extend = [&](auto&& self) -> void {
    out.push_back({lang, current.front(), current});
    if (current.size() >= max_size) return;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      current.push_back(all[i]);
      self(self);
      current.pop_back();
      used[i] = false;
    }
  };
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!all[i].consistent()) continue;
    used[i] = true;
    current.push_back(all[i]);
    extend(extend);
    current.pop_back();
    used[i] = false;
  }
  return out;
}

}  // namespace choicerev

#endif  // CHOICEREV_OUTCOME_MODEL_HPP

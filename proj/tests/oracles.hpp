#ifndef CHOICEREV_TESTS_ORACLES_HPP
#define CHOICEREV_TESTS_ORACLES_HPP

// Brute-force reference evaluators. These deliberately avoid the library's
// checking code paths: membership is tested valuation by valuation, and
// postulates are evaluated from their quantified statements over InputSets
// looked up through ChoiceOperator::revise.

#include <deque>
#include <vector>

#include "choicerev/choicerev.hpp"

namespace oracle {

using namespace choicerev;

// Every valuation of X satisfies c.
inline bool believes(const BeliefSet& x, SentenceClass c, const Language& lang) {
  for (int v = 0; v < lang.valuation_count(); ++v) {
    bool in_x = (x.models >> v) & 1;
    bool in_c = (c.models >> v) & 1;
    if (in_x && !in_c) return false;
  }
  return true;
}

inline bool meets(const InputSet& a, const BeliefSet& x, const Language& lang) {
  for (auto c : a) {
    if (believes(x, c, lang)) return true;
  }
  return false;
}

// The five basic postulates and the supplementary ones, straight from their
// quantified statements.
inline bool relative_success(const ChoiceOperator& op) {
  const auto& lang = op.lang();
  for (const auto& a : op.universe().sets()) {
    const auto& x = op.revise(a);
    if (!(x == op.K() || meets(a, x, lang))) return false;
  }
  return true;
}

inline bool regularity(const ChoiceOperator& op) {
  const auto& lang = op.lang();
  for (const auto& a : op.universe().sets()) {
    for (const auto& b : op.universe().sets()) {
      if (meets(a, op.revise(b), lang) && !meets(a, op.revise(a), lang)) return false;
    }
  }
  return true;
}

inline bool confirmation(const ChoiceOperator& op) {
  for (const auto& a : op.universe().sets()) {
    if (meets(a, op.K(), op.lang()) && op.revise(a) != op.K()) return false;
  }
  return true;
}

inline bool reciprocity(const ChoiceOperator& op) {
  const auto& lang = op.lang();
  for (const auto& a : op.universe().sets()) {
    for (const auto& b : op.universe().sets()) {
      if (meets(b, op.revise(a), lang) && meets(a, op.revise(b), lang) && op.revise(a) != op.revise(b)) {
        return false;
      }
    }
  }
  return true;
}

inline bool success(const ChoiceOperator& op) {
  for (const auto& a : op.universe().sets()) {
    if (!a.empty() && !meets(a, op.revise(a), op.lang())) return false;
  }
  return true;
}

inline bool vacuity(const ChoiceOperator& op) { return op.revise(InputSet{}) == op.K(); }

inline bool consistency(const ChoiceOperator& op) {
  for (const auto& a : op.universe().sets()) {
    bool only_falsum = a.size() == 1 && a[0].models == 0;
    if (!only_falsum && op.revise(a).models == 0) return false;
  }
  return true;
}

inline bool basic(const ChoiceOperator& op) {
  return relative_success(op) && regularity(op) && confirmation(op) && reciprocity(op);
}

inline bool supplemented(const ChoiceOperator& op) {
  return success(op) && vacuity(op) && confirmation(op) && reciprocity(op) && consistency(op);
}

// Some loop A0 -> A1 -> ... -> A0 of at most max_len sets, with each A_i
// believed after revising by A_{i+1}, has unequal outcomes.
inline bool has_short_bad_loop(const ChoiceOperator& op, std::size_t max_len) {
  const auto& sets = op.universe().sets();
  const auto& lang = op.lang();
  const std::size_t n = sets.size();
  auto hit = [&](std::size_t i, std::size_t j) { return meets(sets[i], op.revise(sets[j]), lang); };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!hit(a, b)) continue;
      if (max_len >= 2 && hit(b, a) && op.revise(sets[a]) != op.revise(sets[b])) return true;
      if (max_len < 3) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (hit(b, c) && hit(c, a)) {
          const auto& x = op.revise(sets[a]);
          if (x != op.revise(sets[b]) || x != op.revise(sets[c])) return true;
        }
      }
    }
  }
  return false;
}

// First outcome in order believing some member of A; K when A is empty or
// nothing qualifies.
inline BeliefSet model_revise(const RelationalModel& m, const InputSet& a) {
  if (a.empty()) return m.K;
  for (const auto& x : m.outcomes) {
    if (meets(a, x, m.lang)) return x;
  }
  return m.K;
}

// A ≼c B read off an operator by literal chains of universe sets: B is not
// successful, or A is and some chain C0..Cn has K ∗c C0 = K ∗c A,
// K ∗c Cn = K ∗c B and C_i believed after revising by C_{i+1}.
inline bool chain_leq(const ChoiceOperator& op, const InputSet& a, const InputSet& b) {
  const auto& sets = op.universe().sets();
  const auto& lang = op.lang();
  if (!meets(b, op.revise(b), lang)) return true;
  if (!meets(a, op.revise(a), lang)) return false;
  const BeliefSet from = op.revise(a);
  const BeliefSet to = op.revise(b);
  std::vector<bool> seen(sets.size(), false);
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (op.revise(sets[i]) == from) {
      seen[i] = true;
      queue.push_back(i);
    }
  }
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    if (op.revise(sets[i]) == to) return true;
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (!seen[j] && meets(sets[i], op.revise(sets[j]), lang)) {
        seen[j] = true;
        queue.push_back(j);
      }
    }
  }
  return false;
}

// Number of sets of size at most k drawn from n elements.
inline std::uint64_t binomial_sum(std::uint64_t n, std::uint64_t k) {
  std::uint64_t total = 0;
  std::uint64_t c = 1;
  for (std::uint64_t i = 0; i <= k && i <= n; ++i) {
    total += c;
    c = c * (n - i) / (i + 1);
  }
  return total;
}

}  // namespace oracle

#endif  // CHOICEREV_TESTS_ORACLES_HPP

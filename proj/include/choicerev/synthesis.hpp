#ifndef CHOICEREV_SYNTHESIS_HPP
#define CHOICEREV_SYNTHESIS_HPP

// Going back from operators to the structures that generate them: relational
// models from choice operators, multi-believability relations from choice
// operators, and round trips that regenerate the operator and compare it on
// every input of the universe. Also sentential (single-input) revision tables.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "choicerev/believability.hpp"
#include "choicerev/graph.hpp"
#include "choicerev/logic.hpp"
#include "choicerev/operators.hpp"
#include "choicerev/outcome_model.hpp"

namespace choicerev {

class PostulateViolation : public std::runtime_error {
 public:
  explicit PostulateViolation(PostulateReport report)
      : std::runtime_error("operator violates " + report.postulate), report_(std::move(report)) {}
  const PostulateReport& report() const { return report_; }

 private:
  PostulateReport report_;
};

class AntisymmetryViolation : public std::runtime_error {
 public:
  AntisymmetryViolation(BeliefSet x, BeliefSet y)
      : std::runtime_error("chain relation links distinct outcomes both ways"), x_(x), y_(y) {}
  BeliefSet first() const { return x_; }
  BeliefSet second() const { return y_; }

 private:
  BeliefSet x_, y_;
};

// X ≤′ Y on the outcomes of an operator: some chain A0..An has K ∗c A0 = X,
// K ∗c An = Y and A_i ∩ (K ∗c A_{i+1}) ≠ ∅ at every step.
struct ChainRelation {
  std::vector<BeliefSet> outcomes;  // distinct, in first-seen universe order
  graph::Adjacency steps;           // one-step links between outcome indices
  graph::BitMatrix leq;             // reflexive-transitive closure of steps
};

inline ChainRelation chain_relation(const ChoiceOperator& op) {
  const Universe& u = op.universe();
  ChainRelation c;
  std::vector<std::size_t> cls(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    auto it = std::find(c.outcomes.begin(), c.outcomes.end(), op.outcome(i));
    cls[i] = static_cast<std::size_t>(it - c.outcomes.begin());
    if (it == c.outcomes.end()) c.outcomes.push_back(op.outcome(i));
  }
  c.steps.assign(c.outcomes.size(), {});
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t y = 0; y < c.outcomes.size(); ++y) {
      if (cls[i] != y && intersects(u[i], c.outcomes[y])) c.steps[cls[i]].push_back(y);
    }
  }
  for (auto& s : c.steps) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  c.leq = graph::reachability(c.steps);
  return c;
}

// A relational model inducing op on its universe: the outcomes of op ordered
// by a linear extension of ≤′, ties broken by canonical encoding.
inline RelationalModel synthesize_model(const ChoiceOperator& op) {
  for (auto id : kBasicPostulates) {
    auto r = check_postulate(op, id);
    if (!r.passed) throw PostulateViolation(std::move(r));
  }
  const Language& lang = op.lang();
  ChainRelation c = chain_relation(op);
  const std::size_t n = c.outcomes.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (c.leq.get(x, y) && c.leq.get(y, x)) throw AntisymmetryViolation(c.outcomes[x], c.outcomes[y]);
    }
  }
  auto order = graph::stable_topological_order(c.steps, [&](std::size_t a, std::size_t b) {
    return canonical_less(c.outcomes[a].models, c.outcomes[b].models, lang);
  });
  RelationalModel m{lang, op.K(), {}};
  for (auto i : order) m.outcomes.push_back(c.outcomes[i]);
  if (m.outcomes.front() != op.K()) {
    // Only possible when {T} is outside the universe; K then has no chain to
    // the other outcomes but is still minimal in the model.
    auto k = std::find(m.outcomes.begin(), m.outcomes.end(), op.K());
    if (k == m.outcomes.end()) throw std::logic_error("K is not an outcome of a relatively successful operator");
    std::rotate(m.outcomes.begin(), k, k + 1);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Round trips

struct Mismatch {
  InputSet input;
  BeliefSet expected;
  BeliefSet regenerated;
};

struct RoundTripReport {
  std::string theorem;
  bool passed = true;
  std::string failure;
  std::optional<PostulateReport> violation;
  std::optional<Mismatch> mismatch;
  std::uint64_t compared = 0;
  std::string artifact_hash;
};

namespace detail {

class Fnv1a {
 public:
  void add(std::uint64_t value, int bytes = 8) {
    for (int i = 0; i < bytes; ++i) {
      h_ ^= (value >> (8 * i)) & 0xff;
      h_ *= 1099511628211ull;
    }
  }
  std::string hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h_));
    return buf;
  }

 private:
  std::uint64_t h_ = 14695981039346656037ull;
};

inline std::optional<Mismatch> compare_operators(const ChoiceOperator& expected, const ChoiceOperator& actual,
                                                 std::uint64_t& compared) {
  const Universe& u = expected.universe();
  for (std::size_t i = 0; i < u.size(); ++i, ++compared) {
    if (expected.outcome(i) != actual.outcome(i)) return Mismatch{u[i], expected.outcome(i), actual.outcome(i)};
  }
  return std::nullopt;
}

template <class Ids>
std::optional<PostulateReport> first_failure(const ChoiceOperator& op, const Ids& ids) {
  for (auto id : ids) {
    auto r = check_postulate(op, id);
    if (!r.passed) return r;
  }
  return std::nullopt;
}

inline RoundTripReport fail_with(RoundTripReport r, PostulateReport violation) {
  r.passed = false;
  r.failure = "postulate " + violation.postulate;
  r.violation = std::move(violation);
  return r;
}

}  // namespace detail

inline std::string content_hash(const RelationalModel& m) {
  detail::Fnv1a h;
  h.add(static_cast<std::uint64_t>(m.lang.atoms()), 1);
  for (const auto& x : m.outcomes) h.add(x.models, 4);
  return h.hex();
}

inline std::string content_hash(const graph::BitMatrix& m) {
  detail::Fnv1a h;
  h.add(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) h.add(m.get(i, j) ? 1 : 0, 1);
  }
  return h.hex();
}

// Synthesize a model from op, regenerate the operator from it and compare.
// Round trip "1" requires the basic postulates; "2" requires the supplemented
// set. Whenever success, vacuity and consistency hold, the synthesized model
// must also have Cn({F}) among its outcomes and every consistent sentence
// satisfied ahead of it.
inline RoundTripReport verify_roundtrip_model(const ChoiceOperator& op, int theorem = 1) {
  if (theorem != 1 && theorem != 2) throw std::invalid_argument("model round trips exist for theorems 1 and 2");
  RoundTripReport r{std::to_string(theorem)};
  if (theorem == 2) {
    if (auto v = detail::first_failure(op, kSupplementedPostulates)) return detail::fail_with(r, *v);
  }
  std::optional<RelationalModel> synthesized;
  try {
    synthesized = synthesize_model(op);
  } catch (const PostulateViolation& e) {
    return detail::fail_with(r, e.report());
  } catch (const AntisymmetryViolation& e) {
    r.passed = false;
    r.failure = "antisymmetry of the chain relation: " + describe(e.first(), op.lang()) + " and " +
                describe(e.second(), op.lang());
    return r;
  }
  const RelationalModel& m = *synthesized;
  r.artifact_hash = content_hash(m);
  ChoiceOperator regenerated = induced_operator(m, op.universe_ptr());
  if (auto mm = detail::compare_operators(op, regenerated, r.compared)) {
    r.passed = false;
    r.failure = "regenerated operator differs";
    r.mismatch = *mm;
    return r;
  }
  const bool supplemented = !detail::first_failure(
      op, std::array{PostulateId::success, PostulateId::vacuity, PostulateId::consistency});
  if (supplemented) {
    ModelFlags f = check_extended_conditions(m);
    if (!f.has_X3 || !f.has_leq3) {
      r.passed = false;
      r.failure = !f.has_X3 ? "synthesized model lacks Cn({F})" : "synthesized model places Cn({F}) too early";
    }
  }
  return r;
}

// Read a multi-believability relation off op, check it, rebuild the operator
// from it and compare. Round trip "4" checks the basic relation postulates, "5"
// all nine.
inline RoundTripReport verify_roundtrip_relation(const ChoiceOperator& op, bool standard) {
  RoundTripReport r{standard ? "5" : "4"};
  const Universe& u = op.universe();
  auto mb = derive_mb_from_operator(op);
  r.artifact_hash = content_hash(tabulate(mb, u));
  auto reports = standard ? check_relation_postulates(mb, kStandardPostulates, u)
                          : check_relation_postulates(mb, kBasicRelationPostulates, u);
  for (auto& rep : reports) {
    if (!rep.passed) {
      r.passed = false;
      r.failure = "relation postulate " + rep.postulate;
      r.violation = std::move(rep);
      return r;
    }
  }
  try {
    ChoiceOperator regenerated = operator_from_mb(mb, op.K(), op.universe_ptr());
    if (auto mm = detail::compare_operators(op, regenerated, r.compared)) {
      r.passed = false;
      r.failure = "regenerated operator differs";
      r.mismatch = *mm;
    }
  } catch (const ResultNotClosed& e) {
    r.passed = false;
    r.failure = e.what();
  }
  return r;
}

// A quasi-linear ≼ lifts to a standard ≼c on u, and projecting that back
// gives ≼ again.
inline RoundTripReport verify_translation(const BelievabilityRelation& rel, const Universe& u) {
  RoundTripReport r{"3.1"};
  for (auto& rep : check_relation_postulates(rel, kQuasiLinearPostulates)) {
    if (!rep.passed) {
      r.passed = false;
      r.failure = "precondition: relation postulate " + rep.postulate;
      r.violation = std::move(rep);
      return r;
    }
  }
  auto mb = lift(rel);
  r.artifact_hash = content_hash(tabulate(mb, u));
  for (auto& rep : check_relation_postulates(mb, kStandardPostulates, u)) {
    if (!rep.passed) {
      r.passed = false;
      r.failure = "lifted relation fails " + rep.postulate;
      r.violation = std::move(rep);
      return r;
    }
  }
  BelievabilityRelation back = project(mb);
  r.compared = rel.size() * rel.size();
  if (!(back == rel)) {
    r.passed = false;
    r.failure = "projection of the lift differs from the original";
  }
  return r;
}

// A standard ≼c projects to a quasi-linear ≼, and lifting that back gives
// ≼c again on u.
inline RoundTripReport verify_translation(const MultiBelievabilityRelation& mb, const Universe& u) {
  RoundTripReport r{"3.2"};
  for (auto& rep : check_relation_postulates(mb, kStandardPostulates, u)) {
    if (!rep.passed) {
      r.passed = false;
      r.failure = "precondition: relation postulate " + rep.postulate;
      r.violation = std::move(rep);
      return r;
    }
  }
  BelievabilityRelation rel = project(mb);
  r.artifact_hash = content_hash(rel.matrix());
  for (auto& rep : check_relation_postulates(rel, kQuasiLinearPostulates)) {
    if (!rep.passed) {
      r.passed = false;
      r.failure = "projected relation fails " + rep.postulate;
      r.violation = std::move(rep);
      return r;
    }
  }
  auto original = tabulate(mb, u);
  auto back = tabulate(lift(rel), u);
  r.compared = u.size() * u.size();
  if (!(original == back)) {
    r.passed = false;
    r.failure = "lift of the projection differs from the original";
  }
  return r;
}

// ---------------------------------------------------------------------------
// Sentential revision

// K ∗ phi for every sentence class phi, indexed by class mask.
struct SententialOperator {
  Language lang;
  BeliefSet K;
  std::vector<BeliefSet> table;

  const BeliefSet& revise(SentenceClass phi) const { return table.at(phi.models); }
};

// K = Cn({T}). Inputs between p0&p1 and p0 go to Cn({p0&p1}), between p1&p2
// and p1 to Cn({p1&p2}), between p0&p2 and p2 to Cn({p0&p2}), checked in that
// order; anything else phi goes to Cn({phi}). Satisfies (*1)-(*5) but has a
// loop p0 -> p2 -> p1 -> p0 through three different outcomes.
inline SententialOperator atom_loop_operator(const Language& lang) {
  if (lang.atoms() < 3) throw std::invalid_argument("the construction needs at least 3 atoms");
  if (!lang.exhaustive()) throw std::length_error("sentential tables need at most 3 atoms");
  auto cls = [&](const char* text) { return class_of(parse_formula(text, lang), lang); };
  struct Clause {
    SentenceClass lower, upper;
  };
  const Clause clauses[] = {{cls("p0 & p1"), cls("p0")}, {cls("p1 & p2"), cls("p1")}, {cls("p0 & p2"), cls("p2")}};
  SententialOperator op{lang, BeliefSet::tautologies(lang), {}};
  for (auto phi : all_classes(lang)) {
    BeliefSet out = BeliefSet::closure_of(phi);
    for (const auto& c : clauses) {
      // lower ⊢ phi and phi ⊢ upper
      if ((c.lower.models & ~phi.models) == 0 && (phi.models & ~c.upper.models) == 0) {
        out = BeliefSet::closure_of(c.lower);
        break;
      }
    }
    op.table.push_back(out);
  }
  return op;
}

// (*1) closure, (*2) relative success, (*3) confirmation, (*4) regularity,
// (*5) reciprocity, extensionality, and strong reciprocity over loops of any
// length.
inline std::vector<PostulateReport> check_sentential_postulates(const SententialOperator& op) {
  const std::size_t n = op.table.size();
  if (n != op.lang.class_count()) throw std::invalid_argument("sentential table is not total");
  auto cls = [](std::size_t i) { return SentenceClass{static_cast<ModelMask>(i)}; };
  auto out = [&](std::size_t i) -> const BeliefSet& { return op.table[i]; };
  auto in = [&](std::size_t phi, std::size_t x) { return out(x).contains(cls(phi)); };
  auto fail = [&](PostulateReport r, std::initializer_list<std::size_t> idx) {
    r.passed = false;
    Witness w;
    for (auto i : idx) {
      w.inputs.push_back(InputSet{cls(i)});
      w.outcomes.push_back(out(i));
    }
    r.witness = std::move(w);
    return r;
  };
  std::vector<PostulateReport> reports;

  PostulateReport closure{"closure", true, n};
  reports.push_back(closure);

  PostulateReport rel{"relative_success"};
  for (std::size_t i = 0; i < n && rel.passed; ++i, ++rel.checked) {
    if (out(i) != op.K && !in(i, i)) rel = fail(rel, {i});
  }
  reports.push_back(rel);

  PostulateReport conf{"confirmation"};
  for (std::size_t i = 0; i < n && conf.passed; ++i, ++conf.checked) {
    if (op.K.contains(cls(i)) && out(i) != op.K) conf = fail(conf, {i});
  }
  reports.push_back(conf);

  PostulateReport reg{"regularity"};
  for (std::size_t phi = 0; phi < n && reg.passed; ++phi) {
    for (std::size_t psi = 0; psi < n; ++psi, ++reg.checked) {
      if (in(psi, phi) && !in(psi, psi)) {
        reg = fail(reg, {phi, psi});
        break;
      }
    }
  }
  reports.push_back(reg);

  PostulateReport rec{"reciprocity"};
  for (std::size_t phi = 0; phi < n && rec.passed; ++phi) {
    for (std::size_t psi = 0; psi < n; ++psi, ++rec.checked) {
      if (in(psi, phi) && in(phi, psi) && out(phi) != out(psi)) {
        rec = fail(rec, {phi, psi});
        break;
      }
    }
  }
  reports.push_back(rec);

  // Tables are keyed by class, so equivalent inputs share an entry.
  PostulateReport ext{"extensionality", true, n};
  reports.push_back(ext);

  // phi -> psi iff phi ∈ K ∗ psi
  PostulateReport strong{"strong_reciprocity", true, n};
  graph::Adjacency g(n);
  for (std::size_t phi = 0; phi < n; ++phi) {
    for (std::size_t psi = 0; psi < n; ++psi) {
      if (in(phi, psi)) g[phi].push_back(psi);
    }
  }
  const auto comp = graph::strongly_connected_components(g);
  std::unordered_map<std::size_t, std::size_t> representative;
  for (std::size_t i = 0; i < n && strong.passed; ++i) {
    auto [it, inserted] = representative.emplace(comp[i], i);
    if (inserted || out(it->second) == out(i)) continue;
    auto there = graph::shortest_path(g, it->second, i);
    auto back = graph::shortest_path(g, i, it->second);
    std::vector<std::size_t> cycle = *there;
    cycle.insert(cycle.end(), back->begin() + 1, back->end() - 1);
    strong.passed = false;
    Witness w;
    for (auto k : cycle) {
      w.inputs.push_back(InputSet{cls(k)});
      w.outcomes.push_back(out(k));
    }
    strong.witness = std::move(w);
  }
  reports.push_back(strong);
  return reports;
}

}  // namespace choicerev

#endif  // CHOICEREV_SYNTHESIS_HPP

#ifndef CHOICEREV_OPERATORS_HPP
#define CHOICEREV_OPERATORS_HPP

// Choice revision operators as total tables over a bounded universe of input
// sets, and the checker for the rationality postulates on such tables.
//
// Quantifiers range over the enumerated universe only. Instances that would
// need a set outside it (A ∪ B too large, say) are skipped and tallied, so a
// report distinguishes a clean pass from a pass with skipped instances.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "choicerev/graph.hpp"
#include "choicerev/logic.hpp"
#include "choicerev/random.hpp"

namespace choicerev {

inline constexpr std::uint64_t kMaxUniverseSize = 100000;

struct UniverseSpec {
  Language lang;
  int max_input_size = 0;
};

// Σ_{k ≤ max} C(classes, k), saturating at kMaxUniverseSize + 1.
inline std::uint64_t universe_size(const UniverseSpec& spec) {
  const std::uint64_t cap = kMaxUniverseSize + 1;
  if (!spec.lang.exhaustive()) return cap;
  const std::uint64_t n = spec.lang.class_count();
  std::uint64_t total = 0, binom = 1;
  for (std::uint64_t k = 0; k <= static_cast<std::uint64_t>(spec.max_input_size) && k <= n; ++k) {
    total += binom;
    if (total >= cap) return cap;
    // binom(n, k+1) = binom(n, k) * (n - k) / (k + 1); exact while below cap * n
    binom = binom * (n - k) / (k + 1);
    if (binom >= cap) binom = cap;
  }
  return total;
}

// All input sets of at most max_input_size classes, ordered by size and then
// lexicographically by class mask.
inline std::vector<InputSet> enumerate_universe(const UniverseSpec& spec) {
  if (spec.max_input_size < 0) throw std::invalid_argument("negative max_input_size");
  if (universe_size(spec) > kMaxUniverseSize) {
    throw std::length_error("universe exceeds " + std::to_string(kMaxUniverseSize) + " input sets");
  }
  const auto classes = all_classes(spec.lang);
  const std::size_t n = classes.size();
  std::vector<InputSet> out;
  out.emplace_back();
  for (std::size_t k = 1; k <= static_cast<std::size_t>(spec.max_input_size) && k <= n; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::vector<SentenceClass> members;
      members.reserve(k);
      for (auto i : idx) members.push_back(classes[i]);
      out.emplace_back(std::move(members));
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return out;
}

class Universe {
 public:
  explicit Universe(UniverseSpec spec)
      : spec_(spec), sets_(enumerate_universe(spec)), classes_(all_classes(spec.lang)) {
    index_.reserve(sets_.size());
    for (std::size_t i = 0; i < sets_.size(); ++i) index_.emplace(sets_[i], i);
  }

  const UniverseSpec& spec() const { return spec_; }
  const Language& lang() const { return spec_.lang; }
  int max_input_size() const { return spec_.max_input_size; }
  std::size_t size() const { return sets_.size(); }
  const InputSet& operator[](std::size_t i) const { return sets_[i]; }
  const std::vector<InputSet>& sets() const { return sets_; }
  const std::vector<SentenceClass>& classes() const { return classes_; }

  std::optional<std::size_t> find(const InputSet& a) const {
    auto it = index_.find(a);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t index_of(const InputSet& a) const {
    auto i = find(a);
    if (!i) throw std::out_of_range("input set outside the universe");
    return *i;
  }

 private:
  UniverseSpec spec_;
  std::vector<InputSet> sets_;
  std::vector<SentenceClass> classes_;
  std::unordered_map<InputSet, std::size_t, InputSetHash> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

inline UniversePtr make_universe(const Language& lang, int max_input_size) {
  return std::make_shared<const Universe>(UniverseSpec{lang, max_input_size});
}

// K ∗c A for every A in the universe.
class ChoiceOperator {
 public:
  ChoiceOperator(BeliefSet k, UniversePtr universe, std::vector<BeliefSet> table)
      : k_(k), universe_(std::move(universe)), table_(std::move(table)) {
    if (!k_.consistent()) throw std::invalid_argument("K must be consistent");
    if (table_.size() != universe_->size()) throw std::invalid_argument("operator table is not total");
    const ModelMask full = universe_->lang().full_mask();
    if ((k_.models & ~full) != 0) throw std::invalid_argument("K outside the language");
    for (const auto& x : table_) {
      if ((x.models & ~full) != 0) throw std::invalid_argument("outcome outside the language");
    }
  }

  template <class F>
  static ChoiceOperator from_function(BeliefSet k, UniversePtr universe, F&& revise) {
    std::vector<BeliefSet> table;
    table.reserve(universe->size());
    for (const auto& a : universe->sets()) table.push_back(revise(a));
    return ChoiceOperator(k, std::move(universe), std::move(table));
  }

  const BeliefSet& K() const { return k_; }
  const Universe& universe() const { return *universe_; }
  const UniversePtr& universe_ptr() const { return universe_; }
  const Language& lang() const { return universe_->lang(); }
  const std::vector<BeliefSet>& table() const { return table_; }
  const BeliefSet& outcome(std::size_t i) const { return table_[i]; }
  const BeliefSet& revise(const InputSet& a) const { return table_[universe_->index_of(a)]; }

  friend bool operator==(const ChoiceOperator& a, const ChoiceOperator& b) {
    return a.k_ == b.k_ && a.universe_->spec().lang == b.universe_->spec().lang &&
           a.universe_->max_input_size() == b.universe_->max_input_size() && a.table_ == b.table_;
  }

 private:
  BeliefSet k_;
  UniversePtr universe_;
  std::vector<BeliefSet> table_;
};

enum class PostulateId {
  closure,
  relative_success,
  regularity,
  confirmation,
  reciprocity,
  success,
  vacuity,
  consistency,
  syntax_irrelevance,
  cautiousness,
  dichotomy,
  strong_reciprocity,
};

inline constexpr std::array<PostulateId, 12> kAllPostulates = {
    PostulateId::closure,          PostulateId::relative_success, PostulateId::regularity,
    PostulateId::confirmation,     PostulateId::reciprocity,      PostulateId::success,
    PostulateId::vacuity,          PostulateId::consistency,      PostulateId::syntax_irrelevance,
    PostulateId::cautiousness,     PostulateId::dichotomy,        PostulateId::strong_reciprocity,
};

// (∗c1)-(∗c5)
inline constexpr std::array<PostulateId, 5> kBasicPostulates = {
    PostulateId::closure, PostulateId::relative_success, PostulateId::regularity,
    PostulateId::confirmation, PostulateId::reciprocity};

// The set characterised by relational models with (X3) and (≤3).
inline constexpr std::array<PostulateId, 6> kSupplementedPostulates = {
    PostulateId::closure,     PostulateId::success,     PostulateId::vacuity,
    PostulateId::confirmation, PostulateId::reciprocity, PostulateId::consistency};

inline std::string to_string(PostulateId id) {
  switch (id) {
    case PostulateId::closure: return "closure";
    case PostulateId::relative_success: return "relative_success";
    case PostulateId::regularity: return "regularity";
    case PostulateId::confirmation: return "confirmation";
    case PostulateId::reciprocity: return "reciprocity";
    case PostulateId::success: return "success";
    case PostulateId::vacuity: return "vacuity";
    case PostulateId::consistency: return "consistency";
    case PostulateId::syntax_irrelevance: return "syntax_irrelevance";
    case PostulateId::cautiousness: return "cautiousness";
    case PostulateId::dichotomy: return "dichotomy";
    case PostulateId::strong_reciprocity: return "strong_reciprocity";
  }
  return "?";
}

inline std::optional<PostulateId> postulate_from_string(std::string_view name) {
  for (auto id : kAllPostulates) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

// A concrete failing instance: the input sets bound by the quantifiers, in the
// order the postulate names them, and their outcomes.
struct Witness {
  std::vector<InputSet> inputs;
  std::vector<BeliefSet> outcomes;
  std::string note;
};

struct PostulateReport {
  std::string postulate;
  bool passed = true;
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
  std::optional<Witness> witness;
};

namespace detail {

class OperatorView {
 public:
  explicit OperatorView(const ChoiceOperator& op) : op_(op), u_(op.universe()) {
    successful_.reserve(u_.size());
    for (std::size_t i = 0; i < u_.size(); ++i) successful_.push_back(intersects(u_[i], op.outcome(i)));
  }

  std::size_t size() const { return u_.size(); }
  const InputSet& set(std::size_t i) const { return u_[i]; }
  const BeliefSet& out(std::size_t i) const { return op_.outcome(i); }
  // A_i ∩ (K ∗c A_j) ≠ ∅
  bool hits(std::size_t i, std::size_t j) const { return intersects(u_[i], op_.outcome(j)); }
  bool successful(std::size_t i) const { return successful_[i]; }
  const ChoiceOperator& op() const { return op_; }

  PostulateReport fail(PostulateReport r, std::initializer_list<std::size_t> idx) const {
    r.passed = false;
    Witness w;
    for (auto i : idx) {
      w.inputs.push_back(u_[i]);
      w.outcomes.push_back(op_.outcome(i));
    }
    r.witness = std::move(w);
    return r;
  }

 private:
  const ChoiceOperator& op_;
  const Universe& u_;
  std::vector<bool> successful_;
};

inline graph::Adjacency hit_graph(const OperatorView& v) {
  graph::Adjacency g(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v.hits(i, j)) g[i].push_back(j);
    }
  }
  return g;
}

inline PostulateReport check_strong_reciprocity(const OperatorView& v, PostulateReport r) {
  // Edge i -> j iff A_i ∩ (K ∗c A_j) ≠ ∅; a loop of the postulate is a closed
  // walk, so it holds iff outcomes are constant on every strong component.
  const auto g = hit_graph(v);
  const auto comp = graph::strongly_connected_components(g);
  r.checked = v.size();
  std::unordered_map<std::size_t, std::size_t> representative;
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto [it, inserted] = representative.emplace(comp[i], i);
    if (inserted || v.out(it->second) == v.out(i)) continue;
    std::size_t a = it->second;
    auto there = graph::shortest_path(g, a, i);
    auto back = graph::shortest_path(g, i, a);
    std::vector<std::size_t> cycle = *there;
    cycle.insert(cycle.end(), back->begin() + 1, back->end() - 1);
    r.passed = false;
    Witness w;
    for (auto k : cycle) {
      w.inputs.push_back(v.set(k));
      w.outcomes.push_back(v.out(k));
    }
    r.witness = std::move(w);
    return r;
  }
  return r;
}

}  // namespace detail

inline PostulateReport check_postulate(const ChoiceOperator& op, PostulateId id) {
  detail::OperatorView v(op);
  const std::size_t n = v.size();
  const BeliefSet& k = op.K();
  PostulateReport r{to_string(id)};

  switch (id) {
    case PostulateId::closure:
    case PostulateId::syntax_irrelevance:
      // Outcomes are stored as model sets and inputs as classes, so both hold
      // by representation.
      r.checked = n;
      return r;

    case PostulateId::relative_success:
      for (std::size_t i = 0; i < n; ++i, ++r.checked) {
        if (v.out(i) != k && !v.successful(i)) return v.fail(r, {i});
      }
      return r;

    case PostulateId::regularity:
      for (std::size_t i = 0; i < n; ++i) {
        if (v.successful(i)) {
          r.checked += n;
          continue;
        }
        for (std::size_t j = 0; j < n; ++j, ++r.checked) {
          if (v.hits(i, j)) return v.fail(r, {i, j});
        }
      }
      return r;

    case PostulateId::confirmation:
      for (std::size_t i = 0; i < n; ++i, ++r.checked) {
        if (intersects(v.set(i), k) && v.out(i) != k) return v.fail(r, {i});
      }
      return r;

    case PostulateId::reciprocity:
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j, ++r.checked) {
          if (v.hits(j, i) && v.hits(i, j) && v.out(i) != v.out(j)) return v.fail(r, {i, j});
        }
      }
      return r;

    case PostulateId::success:
      for (std::size_t i = 0; i < n; ++i, ++r.checked) {
        if (!v.set(i).empty() && !v.successful(i)) return v.fail(r, {i});
      }
      return r;

    case PostulateId::vacuity: {
      std::size_t e = op.universe().index_of(InputSet{});
      r.checked = 1;
      if (v.out(e) != k) return v.fail(r, {e});
      return r;
    }

    case PostulateId::consistency: {
      const InputSet falsum{bottom_class()};
      for (std::size_t i = 0; i < n; ++i, ++r.checked) {
        if (!set_equiv(v.set(i), falsum) && !v.out(i).consistent()) return v.fail(r, {i});
      }
      return r;
    }

    case PostulateId::cautiousness:
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j, ++r.checked) {
          if (v.set(i).subset_of(v.set(j)) && v.hits(i, j) && v.out(i) != v.out(j)) {
            return v.fail(r, {i, j});
          }
        }
      }
      return r;

    case PostulateId::dichotomy:
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          auto u = op.universe().find(set_union(v.set(i), v.set(j)));
          if (!u) {
            ++r.skipped;
            continue;
          }
          ++r.checked;
          if (v.out(*u) != v.out(i) && v.out(*u) != v.out(j)) return v.fail(r, {i, j, *u});
        }
      }
      return r;

    case PostulateId::strong_reciprocity:
      return detail::check_strong_reciprocity(v, std::move(r));
  }
  return r;
}

template <class Ids>
std::vector<PostulateReport> check_postulates(const ChoiceOperator& op, const Ids& ids) {
  std::vector<PostulateReport> out;
  for (auto id : ids) out.push_back(check_postulate(op, id));
  return out;
}

inline bool all_passed(const std::vector<PostulateReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
}

// Re-evaluates the instance recorded in a failing report against the
// operator, independently of the scan that produced it.
inline bool witness_reproduces(const ChoiceOperator& op, const PostulateReport& report) {
  if (report.passed || !report.witness) return false;
  auto id = postulate_from_string(report.postulate);
  if (!id) return false;
  const auto& in = report.witness->inputs;
  auto out = [&](const InputSet& a) { return op.revise(a); };
  const BeliefSet& k = op.K();
  auto need = [&](std::size_t count) { return in.size() >= count; };
  switch (*id) {
    case PostulateId::closure:
    case PostulateId::syntax_irrelevance: return false;
    case PostulateId::relative_success: return need(1) && out(in[0]) != k && !intersects(in[0], out(in[0]));
    case PostulateId::regularity:
      return need(2) && intersects(in[0], out(in[1])) && !intersects(in[0], out(in[0]));
    case PostulateId::confirmation: return need(1) && intersects(in[0], k) && out(in[0]) != k;
    case PostulateId::reciprocity:
      return need(2) && intersects(in[1], out(in[0])) && intersects(in[0], out(in[1])) &&
             out(in[0]) != out(in[1]);
    case PostulateId::success: return need(1) && !in[0].empty() && !intersects(in[0], out(in[0]));
    case PostulateId::vacuity: return need(1) && in[0].empty() && out(in[0]) != k;
    case PostulateId::consistency:
      return need(1) && !set_equiv(in[0], InputSet{bottom_class()}) && !out(in[0]).consistent();
    case PostulateId::cautiousness:
      return need(2) && in[0].subset_of(in[1]) && intersects(in[0], out(in[1])) && out(in[0]) != out(in[1]);
    case PostulateId::dichotomy: {
      if (!need(2)) return false;
      const BeliefSet& joint = out(set_union(in[0], in[1]));
      return joint != out(in[0]) && joint != out(in[1]);
    }
    case PostulateId::strong_reciprocity: {
      if (!need(2)) return false;
      bool all_equal = true;
      for (std::size_t i = 0; i < in.size(); ++i) {
        const InputSet& next = in[(i + 1) % in.size()];
        if (!intersects(in[i], out(next))) return false;
        if (out(in[i]) != out(in[0])) all_equal = false;
      }
      return !all_equal;
    }
  }
  return false;
}

// Implications among postulates that hold for every operator. An item is
// applicable when its antecedent postulates pass on this operator.
struct EquivalenceReport {
  struct Item {
    std::string name;
    bool applicable = false;
    bool holds = true;
    std::string witness;
  };
  std::vector<Item> items;

  bool ok() const {
    return std::all_of(items.begin(), items.end(), [](const Item& i) { return !i.applicable || i.holds; });
  }
};

inline EquivalenceReport check_equivalences(const ChoiceOperator& op) {
  std::unordered_map<PostulateId, bool> pass;
  for (auto id : kAllPostulates) pass[id] = check_postulate(op, id).passed;
  using P = PostulateId;
  auto item = [](std::string name, bool antecedent, bool consequent) {
    return EquivalenceReport::Item{std::move(name), antecedent, !antecedent || consequent};
  };
  EquivalenceReport r;
  r.items.push_back(item("closure+relative_success+regularity+reciprocity => syntax_irrelevance",
                         pass[P::closure] && pass[P::relative_success] && pass[P::regularity] &&
                             pass[P::reciprocity],
                         pass[P::syntax_irrelevance]));
  r.items.push_back(item("relative_success+regularity => (reciprocity <=> cautiousness)",
                         pass[P::relative_success] && pass[P::regularity],
                         pass[P::reciprocity] == pass[P::cautiousness]));
  r.items.push_back(item("relative_success+regularity+reciprocity => dichotomy",
                         pass[P::relative_success] && pass[P::regularity] && pass[P::reciprocity],
                         pass[P::dichotomy]));
  r.items.push_back(item("regularity => (reciprocity <=> strong_reciprocity)", pass[P::regularity],
                         pass[P::reciprocity] == pass[P::strong_reciprocity]));
  r.items.push_back(item("relative_success => vacuity", pass[P::relative_success], pass[P::vacuity]));
  r.items.push_back(item("success+vacuity => relative_success", pass[P::success] && pass[P::vacuity],
                         pass[P::relative_success]));
  r.items.push_back(item("success => regularity", pass[P::success], pass[P::regularity]));
  return r;
}

inline BeliefSet random_consistent_belief_set(Rng& rng, const Language& lang) {
  const std::uint64_t count = lang.class_count() - 1;
  return {static_cast<ModelMask>(1 + uniform_below(rng, count))};
}

// Arbitrary table: K uniform over consistent belief sets, each outcome
// uniform over all belief sets. A negative control for the checker.
inline ChoiceOperator random_operator(std::uint64_t seed, UniversePtr universe) {
  Rng rng(seed);
  const Language lang = universe->lang();
  BeliefSet k = random_consistent_belief_set(rng, lang);
  std::vector<BeliefSet> table;
  table.reserve(universe->size());
  for (std::size_t i = 0; i < universe->size(); ++i) {
    table.push_back({static_cast<ModelMask>(uniform_below(rng, lang.class_count()))});
  }
  return ChoiceOperator(k, std::move(universe), std::move(table));
}

// ---------------------------------------------------------------------------
// Syntax-level probe

using SyntacticOperator = std::function<BeliefSet(const std::vector<Formula>&)>;

// Treats formula lists as input sets by taking classes; the syntax-level view
// of a table operator.
inline SyntacticOperator quotient_adapter(const ChoiceOperator& op) {
  return [&op](const std::vector<Formula>& formulas) {
    std::vector<SentenceClass> classes;
    for (const auto& f : formulas) classes.push_back(class_of(f, op.lang()));
    return op.revise(InputSet(std::move(classes)));
  };
}

struct SyntaxProbeReport {
  std::size_t samples = 0;
  std::size_t differences = 0;
  // first differing pair of inputs, as printed formulas
  std::optional<std::pair<std::vector<std::string>, std::vector<std::string>>> witness;
};

namespace detail {

inline Formula equivalent_rewrite(const Formula& f, Rng& rng, int depth = 0) {
  using K = Formula::Kind;
  Formula g = f;
  switch (f.kind()) {
    case K::negation: g = Formula::negation(equivalent_rewrite(f.operand(), rng, depth + 1)); break;
    case K::conjunction:
    case K::disjunction:
    case K::conditional: {
      Formula l = equivalent_rewrite(f.lhs(), rng, depth + 1);
      Formula r = equivalent_rewrite(f.rhs(), rng, depth + 1);
      if (f.kind() == K::conditional) {
        g = uniform_below(rng, 2) ? Formula::disjunction(Formula::negation(l), r) : Formula::conditional(l, r);
      } else {
        bool swap = uniform_below(rng, 2) != 0;
        if (swap) std::swap(l, r);
        g = f.kind() == K::conjunction ? Formula::conjunction(l, r) : Formula::disjunction(l, r);
      }
      break;
    }
    default: break;
  }
  if (depth == 0 || uniform_below(rng, 4) == 0) {
    switch (uniform_below(rng, 3)) {
      case 0: g = Formula::negation(Formula::negation(g)); break;
      case 1: g = Formula::conjunction(g, Formula::top()); break;
      default: g = Formula::disjunction(Formula::bottom(), g); break;
    }
  }
  return g;
}

}  // namespace detail

// Samples pairs of input sets that are identical as sets of classes but
// differ as formula lists, and counts pairs the operator treats differently.
inline SyntaxProbeReport syntax_probe(const SyntacticOperator& op, const UniverseSpec& spec, std::size_t samples,
                                      std::uint64_t seed = 0) {
  Rng rng(seed);
  const Language& lang = spec.lang;
  SyntaxProbeReport report;
  for (std::size_t s = 0; s < samples; ++s) {
    std::size_t size = spec.max_input_size > 0 ? 1 + uniform_below(rng, static_cast<std::uint64_t>(spec.max_input_size)) : 0;
    std::vector<SentenceClass> classes;
    for (std::size_t i = 0; i < size; ++i) {
      classes.push_back({static_cast<ModelMask>(uniform_below(rng, lang.class_count()))});
    }
    InputSet set(std::move(classes));
    std::vector<Formula> plain, rewritten;
    for (const auto& c : set) {
      plain.push_back(formula_of(c, lang));
      rewritten.push_back(detail::equivalent_rewrite(plain.back(), rng));
    }
    shuffle(rewritten, rng);
    ++report.samples;
    if (op(plain) != op(rewritten)) {
      ++report.differences;
      if (!report.witness) {
        std::vector<std::string> a, b;
        for (const auto& f : plain) a.push_back(to_string(f));
        for (const auto& f : rewritten) b.push_back(to_string(f));
        report.witness.emplace(std::move(a), std::move(b));
      }
    }
  }
  return report;
}

}  // namespace choicerev

#endif  // CHOICEREV_OPERATORS_HPP

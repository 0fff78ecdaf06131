#ifndef CHOICEREV_BELIEVABILITY_HPP
#define CHOICEREV_BELIEVABILITY_HPP

// Believability relations on sentences (phi ≼ psi: phi is at least as easy to
// come to believe as psi) and multi-believability relations on finite sets
// (A ≼c B: it is at least as easy to believe some member of A as some member
// of B). Includes the translations between the two, choice revision built
// from a multi-believability relation, and the relation read off an operator.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "choicerev/graph.hpp"
#include "choicerev/logic.hpp"
#include "choicerev/operators.hpp"
#include "choicerev/outcome_model.hpp"
#include "choicerev/random.hpp"

namespace choicerev {

class BelievabilityRelation {
 public:
  BelievabilityRelation(const Language& lang, BeliefSet k)
      : lang_(lang), k_(k), holds_(static_cast<std::size_t>(lang.class_count())) {
    if (!lang.exhaustive()) throw std::length_error("believability relations need at most 3 atoms");
  }

  const Language& lang() const { return lang_; }
  const BeliefSet& K() const { return k_; }
  std::size_t size() const { return holds_.size(); }
  const graph::BitMatrix& matrix() const { return holds_; }

  bool operator()(SentenceClass a, SentenceClass b) const { return holds_.get(a.models, b.models); }
  void set(SentenceClass a, SentenceClass b, bool value = true) { holds_.set(a.models, b.models, value); }
  bool equivalent(SentenceClass a, SentenceClass b) const { return (*this)(a, b) && (*this)(b, a); }

  friend bool operator==(const BelievabilityRelation&, const BelievabilityRelation&) = default;

 private:
  Language lang_;
  BeliefSet k_;
  graph::BitMatrix holds_;
};

class MultiBelievabilityRelation {
 public:
  struct Table {
    UniversePtr universe;
    graph::BitMatrix holds;
  };
  struct Lifted {
    std::shared_ptr<const BelievabilityRelation> base;
  };
  // Read off an operator: A ≼c B iff B ∩ (K ∗c B) = ∅, or A ∩ (K ∗c A) ≠ ∅
  // and a chain links the outcome of A to the outcome of B. Chains are
  // reachability between distinct outcomes, with X -> Y whenever some C with
  // K ∗c C = X has C ∩ Y ≠ ∅.
  struct Derived {
    UniversePtr universe;
    std::vector<std::size_t> outcome_class;
    std::vector<bool> successful;
    graph::BitMatrix reach;
  };

  static MultiBelievabilityRelation from_table(BeliefSet k, UniversePtr universe, graph::BitMatrix holds) {
    if (holds.size() != universe->size()) throw std::invalid_argument("relation table is not total");
    Language lang = universe->lang();
    return MultiBelievabilityRelation(k, lang, Table{std::move(universe), std::move(holds)});
  }

  static MultiBelievabilityRelation lifted(std::shared_ptr<const BelievabilityRelation> base) {
    BeliefSet k = base->K();
    Language lang = base->lang();
    return MultiBelievabilityRelation(k, lang, Lifted{std::move(base)});
  }

  static MultiBelievabilityRelation derived(const ChoiceOperator& op) {
    const Universe& u = op.universe();
    Derived d{op.universe_ptr(), std::vector<std::size_t>(u.size()), std::vector<bool>(u.size()), {}};
    std::vector<BeliefSet> distinct;
    for (std::size_t i = 0; i < u.size(); ++i) {
      const BeliefSet& x = op.outcome(i);
      auto it = std::find(distinct.begin(), distinct.end(), x);
      d.outcome_class[i] = static_cast<std::size_t>(it - distinct.begin());
      if (it == distinct.end()) distinct.push_back(x);
      d.successful[i] = intersects(u[i], x);
    }
    graph::Adjacency g(distinct.size());
    for (std::size_t c = 0; c < u.size(); ++c) {
      for (std::size_t y = 0; y < distinct.size(); ++y) {
        if (intersects(u[c], distinct[y])) g[d.outcome_class[c]].push_back(y);
      }
    }
    d.reach = graph::reachability(g);
    return MultiBelievabilityRelation(op.K(), op.lang(), std::move(d));
  }

  const BeliefSet& K() const { return k_; }
  const Language& lang() const { return lang_; }

  // The universe the relation is defined on, if it is a bounded one.
  const Universe* universe() const {
    if (auto t = std::get_if<Table>(&backing_)) return t->universe.get();
    if (auto d = std::get_if<Derived>(&backing_)) return d->universe.get();
    return nullptr;
  }

  std::string_view backing_name() const {
    switch (backing_.index()) {
      case 0: return "table";
      case 1: return "lifted";
      default: return "derived";
    }
  }

  bool holds(const InputSet& a, const InputSet& b) const {
    if (auto l = std::get_if<Lifted>(&backing_)) {
      if (b.empty()) return true;
      const BelievabilityRelation& base = *l->base;
      return std::any_of(a.begin(), a.end(), [&](SentenceClass phi) {
        return std::all_of(b.begin(), b.end(), [&](SentenceClass psi) { return base(phi, psi); });
      });
    }
    const Universe& u = *universe();
    return holds_at(u.index_of(a), u.index_of(b));
  }

  // Query by universe index; only for table and derived backings.
  bool holds_at(std::size_t i, std::size_t j) const {
    if (auto t = std::get_if<Table>(&backing_)) return t->holds.get(i, j);
    const auto& d = std::get<Derived>(backing_);
    if (!d.successful[j]) return true;
    return d.successful[i] && d.reach.get(d.outcome_class[i], d.outcome_class[j]);
  }

  bool strictly(const InputSet& a, const InputSet& b) const { return holds(a, b) && !holds(b, a); }
  bool equivalent(const InputSet& a, const InputSet& b) const { return holds(a, b) && holds(b, a); }

 private:
  using Backing = std::variant<Table, Lifted, Derived>;
  MultiBelievabilityRelation(BeliefSet k, Language lang, Backing b) : k_(k), lang_(lang), backing_(std::move(b)) {}

  BeliefSet k_;
  Language lang_;
  Backing backing_;
};

// The relation as a dense matrix over a universe.
inline graph::BitMatrix tabulate(const MultiBelievabilityRelation& mb, const Universe& u) {
  graph::BitMatrix m(u.size());
  const Universe* own = mb.universe();
  const bool same = own && own->spec().lang == u.lang() && own->max_input_size() == u.max_input_size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < u.size(); ++j) {
      if (same ? mb.holds_at(i, j) : mb.holds(u[i], u[j])) m.set(i, j);
    }
  }
  return m;
}

inline MultiBelievabilityRelation materialize(const MultiBelievabilityRelation& mb, UniversePtr u) {
  graph::BitMatrix m = tabulate(mb, *u);
  return MultiBelievabilityRelation::from_table(mb.K(), std::move(u), std::move(m));
}

inline bool equal_on(const MultiBelievabilityRelation& a, const MultiBelievabilityRelation& b, const Universe& u) {
  return tabulate(a, u) == tabulate(b, u);
}

// ---------------------------------------------------------------------------
// Postulates

enum class RelationPostulateId {
  transitivity,
  weak_coupling,
  coupling,
  counter_dominance,
  minimality,
  maximality,
  completeness,
  determination,
  union_,
};

inline constexpr std::array<RelationPostulateId, 7> kQuasiLinearPostulates = {
    RelationPostulateId::transitivity,  RelationPostulateId::weak_coupling, RelationPostulateId::coupling,
    RelationPostulateId::counter_dominance, RelationPostulateId::minimality, RelationPostulateId::maximality,
    RelationPostulateId::completeness};

inline constexpr std::array<RelationPostulateId, 9> kStandardPostulates = {
    RelationPostulateId::transitivity,  RelationPostulateId::weak_coupling, RelationPostulateId::coupling,
    RelationPostulateId::counter_dominance, RelationPostulateId::minimality, RelationPostulateId::maximality,
    RelationPostulateId::completeness,  RelationPostulateId::determination, RelationPostulateId::union_};

// Relations that determine exactly the operators satisfying the basic postulates.
inline constexpr std::array<RelationPostulateId, 5> kBasicRelationPostulates = {
    RelationPostulateId::transitivity, RelationPostulateId::weak_coupling, RelationPostulateId::counter_dominance,
    RelationPostulateId::minimality, RelationPostulateId::union_};

inline std::string to_string(RelationPostulateId id) {
  switch (id) {
    case RelationPostulateId::transitivity: return "transitivity";
    case RelationPostulateId::weak_coupling: return "weak_coupling";
    case RelationPostulateId::coupling: return "coupling";
    case RelationPostulateId::counter_dominance: return "counter_dominance";
    case RelationPostulateId::minimality: return "minimality";
    case RelationPostulateId::maximality: return "maximality";
    case RelationPostulateId::completeness: return "completeness";
    case RelationPostulateId::determination: return "determination";
    case RelationPostulateId::union_: return "union";
  }
  return "?";
}

inline std::optional<RelationPostulateId> relation_postulate_from_string(std::string_view name) {
  for (auto id : kStandardPostulates) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

namespace detail {

inline PostulateReport relation_fail(PostulateReport r, std::vector<InputSet> sets, std::string note = {}) {
  r.passed = false;
  r.witness = Witness{std::move(sets), {}, std::move(note)};
  return r;
}

}  // namespace detail

// Single-sentence postulates, over every class of the language. Determination
// and union have no single-sentence form.
inline PostulateReport check_relation_postulate(const BelievabilityRelation& rel, RelationPostulateId id) {
  using R = RelationPostulateId;
  const std::size_t n = rel.size();
  const auto& m = rel.matrix();
  auto cls = [](std::size_t i) { return SentenceClass{static_cast<ModelMask>(i)}; };
  auto single = [&](std::initializer_list<std::size_t> idx) {
    std::vector<InputSet> out;
    for (auto i : idx) out.push_back(InputSet{cls(i)});
    return out;
  };
  auto eq = [&](std::size_t a, std::size_t b) { return m.get(a, b) && m.get(b, a); };
  PostulateReport r{to_string(id)};

  switch (id) {
    case R::transitivity:
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b, ++r.checked) {
          if (!m.get(a, b)) continue;
          if (auto c = m.first_missing(a, b)) return detail::relation_fail(r, single({a, b, *c}));
        }
      }
      return r;

    case R::weak_coupling:
      for (std::size_t a = 0; a < n; ++a) {
        std::vector<std::size_t> absorbed;
        for (std::size_t b = 0; b < n; ++b) {
          if (eq(a, a & b)) absorbed.push_back(b);
        }
        for (auto b : absorbed) {
          for (auto c : absorbed) {
            ++r.checked;
            if (!eq(a, a & b & c)) return detail::relation_fail(r, single({a, b, c}));
          }
        }
      }
      return r;

    case R::coupling:
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b, ++r.checked) {
          if (eq(a, b) && !eq(a, a & b)) return detail::relation_fail(r, single({a, b}));
        }
      }
      return r;

    case R::counter_dominance:
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b, ++r.checked) {
          // a ⊢ b
          if ((a & ~b) == 0 && !m.get(b, a)) return detail::relation_fail(r, single({a, b}));
        }
      }
      return r;

    case R::minimality:
      for (std::size_t a = 0; a < n; ++a, ++r.checked) {
        bool bottom = true;
        for (std::size_t b = 0; b < n && bottom; ++b) bottom = m.get(a, b);
        if (bottom != rel.K().contains(cls(a))) {
          return detail::relation_fail(r, single({a}), bottom ? "below everything but not in K" : "in K but not below everything");
        }
      }
      return r;

    case R::maximality:
      for (std::size_t a = 1; a < n; ++a, ++r.checked) {
        bool top = true;
        for (std::size_t b = 0; b < n && top; ++b) top = m.get(b, a);
        if (top) return detail::relation_fail(r, single({a}), "consistent sentence above everything");
      }
      return r;

    case R::completeness:
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b, ++r.checked) {
          if (!m.get(a, b) && !m.get(b, a)) return detail::relation_fail(r, single({a, b}));
        }
      }
      return r;

    case R::determination:
    case R::union_:
      throw std::invalid_argument(to_string(id) + " has no single-sentence form");
  }
  return r;
}

template <class Ids>
std::vector<PostulateReport> check_relation_postulates(const BelievabilityRelation& rel, const Ids& ids) {
  std::vector<PostulateReport> out;
  for (auto id : ids) out.push_back(check_relation_postulate(rel, id));
  return out;
}

// U_i ⩕ U_j as a universe index, or npos when the product leaves the universe.
class ConjunctionTable {
 public:
  static constexpr std::uint32_t npos = std::numeric_limits<std::uint32_t>::max();

  explicit ConjunctionTable(const Universe& u) : n_(u.size()), table_(n_ * n_, npos) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i; j < n_; ++j) {
        auto k = u.find(pairwise_conj(u[i], u[j]));
        std::uint32_t v = k ? static_cast<std::uint32_t>(*k) : npos;
        table_[i * n_ + j] = v;
        table_[j * n_ + i] = v;
      }
    }
  }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return table_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> table_;
};

namespace detail {

class MultiChecker {
 public:
  MultiChecker(const MultiBelievabilityRelation& mb, const Universe& u)
      : mb_(mb), u_(u), m_(tabulate(mb, u)) {}

  PostulateReport check(RelationPostulateId id) {
    using R = RelationPostulateId;
    const std::size_t n = u_.size();
    PostulateReport r{to_string(id)};
    auto sets = [&](std::initializer_list<std::size_t> idx) {
      std::vector<InputSet> out;
      for (auto i : idx) out.push_back(u_[i]);
      return out;
    };
    auto eq = [&](std::size_t a, std::size_t b) { return m_.get(a, b) && m_.get(b, a); };
    const std::size_t empty = u_.index_of(InputSet{});

    switch (id) {
      case R::transitivity:
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b, ++r.checked) {
            if (!m_.get(a, b)) continue;
            if (auto c = m_.first_missing(a, b)) return relation_fail(r, sets({a, b, *c}));
          }
        }
        return r;

      case R::weak_coupling: {
        const auto& conj = conjunctions();
        for (std::size_t a = 0; a < n; ++a) {
          std::vector<std::size_t> absorbed;
          std::size_t outside = 0;
          for (std::size_t b = 0; b < n; ++b) {
            auto ab = conj(a, b);
            if (ab == ConjunctionTable::npos) {
              ++outside;
            } else if (eq(a, ab)) {
              absorbed.push_back(b);
            }
          }
          // pairs (B, C) where A ⩕ B or A ⩕ C cannot be formed
          r.skipped += n * n - (n - outside) * (n - outside);
          r.checked += (n - outside) * (n - outside) - absorbed.size() * absorbed.size();
          for (auto b : absorbed) {
            for (auto c : absorbed) {
              auto abc = conj(conj(a, b), c);
              if (abc == ConjunctionTable::npos) {
                ++r.skipped;
                continue;
              }
              ++r.checked;
              if (!eq(a, abc)) return relation_fail(r, sets({a, b, c}));
            }
          }
        }
        return r;
      }

      case R::coupling: {
        const auto& conj = conjunctions();
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            if (!eq(a, b)) {
              ++r.checked;
              continue;
            }
            auto ab = conj(a, b);
            if (ab == ConjunctionTable::npos) {
              ++r.skipped;
              continue;
            }
            ++r.checked;
            if (!eq(a, ab)) return relation_fail(r, sets({a, b}));
          }
        }
        return r;
      }

      case R::counter_dominance:
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b, ++r.checked) {
            if (m_.get(a, b)) continue;
            bool dominated = std::all_of(u_[b].begin(), u_[b].end(), [&](SentenceClass phi) {
              return std::any_of(u_[a].begin(), u_[a].end(),
                                 [&](SentenceClass psi) { return (phi.models & ~psi.models) == 0; });
            });
            if (dominated) return relation_fail(r, sets({a, b}));
          }
        }
        return r;

      case R::minimality:
        for (std::size_t a = 0; a < n; ++a, ++r.checked) {
          bool bottom = true;
          for (std::size_t b = 0; b < n && bottom; ++b) bottom = m_.get(a, b);
          if (bottom != intersects(u_[a], mb_.K())) {
            return relation_fail(r, sets({a}), bottom ? "below everything but disjoint from K"
                                                      : "meets K but not below everything");
          }
        }
        return r;

      case R::maximality: {
        const InputSet falsum{bottom_class()};
        for (std::size_t b = 0; b < n; ++b, ++r.checked) {
          if (u_[b].empty() || u_[b] == falsum) continue;
          bool top = true;
          for (std::size_t a = 0; a < n && top; ++a) top = u_[a].empty() || m_.get(a, b);
          if (top) return relation_fail(r, sets({b}), "above every non-empty set but not equivalent to {F}");
        }
        return r;
      }

      case R::completeness:
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b, ++r.checked) {
            if (!m_.get(a, b) && !m_.get(b, a)) return relation_fail(r, sets({a, b}));
          }
        }
        return r;

      case R::determination:
        for (std::size_t a = 0; a < n; ++a, ++r.checked) {
          if (u_[a].empty()) continue;
          if (!m_.get(a, empty) || m_.get(empty, a)) return relation_fail(r, sets({a}), "not strictly below {}");
        }
        return r;

      case R::union_:
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            auto ab = u_.find(set_union(u_[a], u_[b]));
            if (!ab) {
              ++r.skipped;
              continue;
            }
            ++r.checked;
            if (!m_.get(a, *ab) && !m_.get(b, *ab)) return relation_fail(r, sets({a, b, *ab}));
          }
        }
        return r;
    }
    return r;
  }

  const graph::BitMatrix& matrix() const { return m_; }

  const ConjunctionTable& conjunctions() {
    if (!conj_) conj_.emplace(u_);
    return *conj_;
  }

 private:
  const MultiBelievabilityRelation& mb_;
  const Universe& u_;
  graph::BitMatrix m_;
  std::optional<ConjunctionTable> conj_;
};

}  // namespace detail

// Multi-set postulates with quantifiers over the universe u. Instances whose
// ⩕ or ∪ leaves u are skipped and tallied.
inline PostulateReport check_relation_postulate(const MultiBelievabilityRelation& mb, RelationPostulateId id,
                                                const Universe& u) {
  detail::MultiChecker checker(mb, u);
  return checker.check(id);
}

template <class Ids>
std::vector<PostulateReport> check_relation_postulates(const MultiBelievabilityRelation& mb, const Ids& ids,
                                                       const Universe& u) {
  detail::MultiChecker checker(mb, u);
  std::vector<PostulateReport> out;
  for (auto id : ids) out.push_back(checker.check(id));
  return out;
}

// ---------------------------------------------------------------------------
// Translations

inline MultiBelievabilityRelation lift(const BelievabilityRelation& base) {
  return MultiBelievabilityRelation::lifted(std::make_shared<const BelievabilityRelation>(base));
}

inline BelievabilityRelation project(const MultiBelievabilityRelation& mb) {
  BelievabilityRelation out(mb.lang(), mb.K());
  const auto classes = all_classes(mb.lang());
  for (auto a : classes) {
    for (auto b : classes) {
      if (mb.holds(InputSet{a}, InputSet{b})) out.set(a, b);
    }
  }
  return out;
}

// A ≼p B, reduced to &A ≼ &B with &{} = T.
inline bool package_relation(const BelievabilityRelation& base, const InputSet& a, const InputSet& b) {
  return base(conj_all(a, base.lang()), conj_all(b, base.lang()));
}

class NoRepresentationElement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A member phi of A with {phi} ≃c A; the canonically smallest if several.
inline SentenceClass representation_element(const MultiBelievabilityRelation& mb, const InputSet& a) {
  if (a.empty()) throw std::invalid_argument("representation element of an empty set");
  std::optional<SentenceClass> best;
  for (auto phi : a) {
    if (!mb.equivalent(InputSet{phi}, a)) continue;
    if (!best || canonical_less(phi.models, best->models, mb.lang())) best = phi;
  }
  if (!best) throw NoRepresentationElement("no member of the set is equivalent to it");
  return *best;
}

class ResultNotClosed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// K ∗c A = { phi | A ≃c A ⩕ {phi} } if A ≺c {}, else K.
inline BeliefSet revise_via_mb(const MultiBelievabilityRelation& mb, const BeliefSet& k, const InputSet& a) {
  const InputSet empty;
  if (!mb.strictly(a, empty)) return k;
  const Language& lang = mb.lang();
  std::vector<bool> member(static_cast<std::size_t>(lang.class_count()), false);
  ModelMask models = lang.full_mask();
  for (auto phi : all_classes(lang)) {
    if (mb.equivalent(a, pairwise_conj(a, phi))) {
      member[phi.models] = true;
      models &= phi.models;
    }
  }
  // closed iff the collected classes are exactly those true in all of `models`
  for (std::uint64_t c = 0; c < lang.class_count(); ++c) {
    bool entailed = (models & ~static_cast<ModelMask>(c)) == 0;
    if (entailed != member[c]) {
      throw ResultNotClosed("collected theory is not deductively closed at class " +
                            describe(BeliefSet{static_cast<ModelMask>(c)}, lang));
    }
  }
  return {models};
}

inline ChoiceOperator operator_from_mb(const MultiBelievabilityRelation& mb, const BeliefSet& k, UniversePtr u) {
  return ChoiceOperator::from_function(k, std::move(u), [&](const InputSet& a) { return revise_via_mb(mb, k, a); });
}

inline MultiBelievabilityRelation derive_mb_from_operator(const ChoiceOperator& op) {
  return MultiBelievabilityRelation::derived(op);
}

// ---------------------------------------------------------------------------
// Generators

// Quasi-linear ≼ from a random model with Cn({F}) present and every complete
// theory ahead of it: phi ranks at the position of the first outcome that
// entails it, and phi ≼ psi iff rank(phi) ≤ rank(psi).
inline BelievabilityRelation ranked_relation(const RelationalModel& m) {
  BelievabilityRelation rel(m.lang, m.K);
  const auto classes = all_classes(m.lang);
  std::vector<std::size_t> rank(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    rank[i] = m.outcomes.size();
    for (std::size_t p = 0; p < m.outcomes.size(); ++p) {
      if (m.outcomes[p].contains(classes[i])) {
        rank[i] = p;
        break;
      }
    }
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = 0; j < classes.size(); ++j) {
      if (rank[i] <= rank[j]) rel.set(classes[i], classes[j]);
    }
  }
  return rel;
}

inline RelationalModel standard_model(std::uint64_t seed, const Language& lang) {
  Rng rng(seed);
  const std::size_t minimum = static_cast<std::size_t>(lang.valuation_count()) + 1;
  const std::size_t spare = static_cast<std::size_t>(std::min<std::uint64_t>(4, lang.class_count() - minimum));
  const std::size_t size = minimum + static_cast<std::size_t>(uniform_below(rng, spare + 1));
  return generate_model(rng(), lang, size, ModelFlags{true, true});
}

inline BelievabilityRelation generate_quasi_linear(std::uint64_t seed, const Language& lang) {
  return ranked_relation(standard_model(seed, lang));
}

// Standard ≼c: the relation read off the operator of a random model with both
// extended conditions, stored as a table over the universe.
inline MultiBelievabilityRelation generate_standard_mb(std::uint64_t seed, UniversePtr u) {
  RelationalModel m = standard_model(seed, u->lang());
  ChoiceOperator op = induced_operator(m, u);
  return materialize(derive_mb_from_operator(op), u);
}

// ---------------------------------------------------------------------------
// Derived properties, checked on one relation over a universe

inline EquivalenceReport check_relation_properties(const MultiBelievabilityRelation& mb, const Universe& u) {
  using R = RelationPostulateId;
  detail::MultiChecker checker(mb, u);
  auto pass = [&](R id) { return checker.check(id).passed; };
  const bool trans = pass(R::transitivity), cd = pass(R::counter_dominance), un = pass(R::union_),
             det = pass(R::determination);
  const auto& m = checker.matrix();
  const std::size_t n = u.size();
  auto eq = [&](std::size_t a, std::size_t b) { return m.get(a, b) && m.get(b, a); };
  auto single = [&](SentenceClass c) { return u.find(InputSet{c}); };
  EquivalenceReport r;

  // reduction to single sentences on either side
  {
    EquivalenceReport::Item left{"determination+transitivity+counter_dominance => (A ≼c B iff some phi in A has {phi} ≼c B)",
                                 det && trans && cd};
    EquivalenceReport::Item right{"determination+transitivity+counter_dominance => (A ≼c B iff A ≼c {psi} for all psi in B)",
                                  det && trans && cd};
    for (std::size_t a = 0; a < n && (left.holds || right.holds); ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (u[a].empty() || u[b].empty()) continue;
        bool some = std::any_of(u[a].begin(), u[a].end(), [&](SentenceClass phi) {
          auto i = single(phi);
          return i && m.get(*i, b);
        });
        bool all = std::all_of(u[b].begin(), u[b].end(), [&](SentenceClass psi) {
          auto j = single(psi);
          return j && m.get(a, *j);
        });
        if (left.holds && some != m.get(a, b)) {
          left.holds = false;
          left.witness = describe(u[a], u.lang()) + " vs " + describe(u[b], u.lang());
        }
        if (right.holds && all != m.get(a, b)) {
          right.holds = false;
          right.witness = describe(u[a], u.lang()) + " vs " + describe(u[b], u.lang());
        }
      }
    }
    left.holds = !left.applicable || left.holds;
    right.holds = !right.applicable || right.holds;
    r.items.push_back(left);
    r.items.push_back(right);
  }

  // consequences of union
  {
    const bool ante = trans && cd && un;
    r.items.push_back({"transitivity+counter_dominance+union => completeness", ante,
                       !ante || pass(R::completeness)});
    r.items.push_back({"transitivity+counter_dominance+union => (weak_coupling <=> coupling)", ante,
                       !ante || pass(R::weak_coupling) == pass(R::coupling)});
  }

  // Representation elements
  {
    const bool ante = trans && cd && un;
    EquivalenceReport::Item exists{"transitivity+counter_dominance+union => every non-empty A has a representation element",
                                   ante};
    for (std::size_t a = 0; a < n && ante && exists.holds; ++a) {
      if (u[a].empty()) continue;
      try {
        representation_element(mb, u[a]);
      } catch (const NoRepresentationElement&) {
        exists.holds = false;
        exists.witness = describe(u[a], u.lang());
      }
    }
    r.items.push_back(exists);

    EquivalenceReport::Item absorb{"transitivity+counter_dominance => (A ≃c A ⩕ {phi} iff {phi} ≃c A) for phi in A",
                                   trans && cd};
    for (std::size_t a = 0; a < n && absorb.applicable && absorb.holds; ++a) {
      for (auto phi : u[a]) {
        auto p = single(phi);
        auto ap = u.find(pairwise_conj(u[a], phi));
        if (!p || !ap) continue;
        if (eq(a, *ap) != eq(*p, a)) {
          absorb.holds = false;
          absorb.witness = describe(u[a], u.lang());
          break;
        }
      }
    }
    r.items.push_back(absorb);
  }
  return r;
}

// For the relation read off an operator satisfying the basic postulates,
// A ≃c B implies K ∗c A = K ∗c B.
inline EquivalenceReport::Item check_equivalent_sets_share_outcomes(const ChoiceOperator& op) {
  EquivalenceReport::Item item{"basic postulates => (A ≃c B implies equal outcomes)",
                               all_passed(check_postulates(op, kBasicPostulates))};
  if (!item.applicable) return item;
  auto mb = derive_mb_from_operator(op);
  const std::size_t n = op.universe().size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (mb.holds_at(a, b) && mb.holds_at(b, a) && op.outcome(a) != op.outcome(b)) {
        item.holds = false;
        item.witness = describe(op.universe()[a], op.lang()) + " vs " + describe(op.universe()[b], op.lang());
        return item;
      }
    }
  }
  return item;
}

}  // namespace choicerev

#endif  // CHOICEREV_BELIEVABILITY_HPP

#ifndef CHOICEREV_LOGIC_HPP
#define CHOICEREV_LOGIC_HPP

// Finite propositional language p0..p(n-1), formulas, and their semantic
// classes. A sentence is identified with the set of valuations satisfying it,
// stored as a bitmask with bit v set iff valuation v is a model. Bit i of the
// valuation index v is the truth value of atom p_i.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace choicerev {

inline constexpr int kMaxAtoms = 4;
// Exhaustive enumeration of the class space is only attempted up to here.
inline constexpr int kMaxExhaustiveAtoms = 3;

using ModelMask = std::uint32_t;

class Language {
 public:
  explicit Language(int atoms) : atoms_(atoms) {
    if (atoms < 1 || atoms > kMaxAtoms) {
      throw std::invalid_argument("atom count " + std::to_string(atoms) +
                                  " outside [1, " + std::to_string(kMaxAtoms) + "]");
    }
  }

  int atoms() const { return atoms_; }
  int valuation_count() const { return 1 << atoms_; }
  ModelMask full_mask() const {
    return valuation_count() == 32 ? ~ModelMask{0} : (ModelMask{1} << valuation_count()) - 1;
  }
  std::uint64_t class_count() const { return std::uint64_t{1} << valuation_count(); }
  bool exhaustive() const { return atoms_ <= kMaxExhaustiveAtoms; }

  friend bool operator==(const Language&, const Language&) = default;

 private:
  int atoms_;
};

// Truth-table string of a valuation: character i is the value of p_i.
inline std::string valuation_string(int valuation, const Language& lang) {
  std::string s(static_cast<std::size_t>(lang.atoms()), '0');
  for (int i = 0; i < lang.atoms(); ++i) {
    if ((valuation >> i) & 1) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

inline int parse_valuation_string(std::string_view s, const Language& lang) {
  if (static_cast<int>(s.size()) != lang.atoms()) {
    throw std::invalid_argument("valuation '" + std::string(s) + "' has wrong length for " +
                                std::to_string(lang.atoms()) + " atoms");
  }
  int v = 0;
  for (int i = 0; i < lang.atoms(); ++i) {
    char c = s[static_cast<std::size_t>(i)];
    if (c == '1') {
      v |= 1 << i;
    } else if (c != '0') {
      throw std::invalid_argument("valuation '" + std::string(s) + "' is not a bitstring");
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// Formulas

class Formula {
 public:
  enum class Kind { atom, top, bottom, negation, conjunction, disjunction, conditional };

  static Formula atom(int index) { return Formula(Kind::atom, index, nullptr, nullptr); }
  static Formula top() { return Formula(Kind::top, 0, nullptr, nullptr); }
  static Formula bottom() { return Formula(Kind::bottom, 0, nullptr, nullptr); }
  static Formula negation(Formula f) { return Formula(Kind::negation, 0, share(std::move(f)), nullptr); }
  static Formula conjunction(Formula a, Formula b) { return binary(Kind::conjunction, std::move(a), std::move(b)); }
  static Formula disjunction(Formula a, Formula b) { return binary(Kind::disjunction, std::move(a), std::move(b)); }
  static Formula conditional(Formula a, Formula b) { return binary(Kind::conditional, std::move(a), std::move(b)); }

  Kind kind() const { return kind_; }
  int atom_index() const { return atom_; }
  const Formula& operand() const { return *lhs_; }
  const Formula& lhs() const { return *lhs_; }
  const Formula& rhs() const { return *rhs_; }

  bool evaluate(int valuation) const {
    switch (kind_) {
      case Kind::atom: return (valuation >> atom_) & 1;
      case Kind::top: return true;
      case Kind::bottom: return false;
      case Kind::negation: return !lhs_->evaluate(valuation);
      case Kind::conjunction: return lhs_->evaluate(valuation) && rhs_->evaluate(valuation);
      case Kind::disjunction: return lhs_->evaluate(valuation) || rhs_->evaluate(valuation);
      case Kind::conditional: return !lhs_->evaluate(valuation) || rhs_->evaluate(valuation);
    }
    return false;
  }

  int max_atom() const {
    switch (kind_) {
      case Kind::atom: return atom_;
      case Kind::top:
      case Kind::bottom: return -1;
      case Kind::negation: return lhs_->max_atom();
      default: return std::max(lhs_->max_atom(), rhs_->max_atom());
    }
  }

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.kind_ != b.kind_ || a.atom_ != b.atom_) return false;
    switch (a.kind_) {
      case Kind::atom:
      case Kind::top:
      case Kind::bottom: return true;
      case Kind::negation: return *a.lhs_ == *b.lhs_;
      default: return *a.lhs_ == *b.lhs_ && *a.rhs_ == *b.rhs_;
    }
  }

 private:
  Formula(Kind k, int atom, std::shared_ptr<const Formula> l, std::shared_ptr<const Formula> r)
      : kind_(k), atom_(atom), lhs_(std::move(l)), rhs_(std::move(r)) {}
  static std::shared_ptr<const Formula> share(Formula f) {
    return std::make_shared<const Formula>(std::move(f));
  }
  static Formula binary(Kind k, Formula a, Formula b) {
    return Formula(k, 0, share(std::move(a)), share(std::move(b)));
  }

  Kind kind_;
  int atom_;
  std::shared_ptr<const Formula> lhs_;
  std::shared_ptr<const Formula> rhs_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        message_(what),
        position_(position) {}
  std::size_t position() const { return position_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

namespace detail {

// Character cursor shared by the formula and descriptor parsers.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                   text_[pos_] == '\n' || text_[pos_] == '\r')) {
      ++pos_;
    }
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool match(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view token) {
    if (!match(token)) fail("expected '" + std::string(token) + "'");
  }
  [[noreturn]] void fail(const std::string& what) {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(what + ", found end of input", pos_);
    throw ParseError(what + ", found '" + std::string(1, text_[pos_]) + "'", pos_);
  }
  std::size_t position() const { return pos_; }
  std::string_view rest() const { return text_.substr(pos_); }
  void advance(std::size_t n) { pos_ += n; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class FormulaParser {
 public:
  FormulaParser(Cursor& cur, const Language& lang) : cur_(cur), lang_(lang) {}

  Formula conditional() {
    Formula lhs = disjunction();
    if (cur_.match("->")) return Formula::conditional(std::move(lhs), conditional());
    return lhs;
  }

 private:
  Formula disjunction() {
    Formula f = conjunction();
    while (cur_.match("|")) f = Formula::disjunction(std::move(f), conjunction());
    return f;
  }
  Formula conjunction() {
    Formula f = unary();
    while (cur_.match("&")) f = Formula::conjunction(std::move(f), unary());
    return f;
  }
  Formula unary() {
    if (cur_.match("~")) return Formula::negation(unary());
    return primary();
  }
  Formula primary() {
    char c = cur_.peek();
    if (c == '(') {
      cur_.advance(1);
      Formula f = conditional();
      cur_.expect(")");
      return f;
    }
    if (c == 'T' || c == 'F') {
      cur_.advance(1);
      return c == 'T' ? Formula::top() : Formula::bottom();
    }
    if (c == 'p') {
      std::size_t start = cur_.position();
      std::string_view rest = cur_.rest();
      std::size_t n = 1;
      while (n < rest.size() && rest[n] >= '0' && rest[n] <= '9') ++n;
      if (n == 1) cur_.fail("expected atom index after 'p'");
      if (n > 4) throw ParseError("atom out of range", start);
      int index = std::stoi(std::string(rest.substr(1, n - 1)));
      if (index >= lang_.atoms()) {
        throw ParseError("atom out of range: p" + std::to_string(index) + " with " +
                             std::to_string(lang_.atoms()) + " atoms",
                         start);
      }
      cur_.advance(n);
      return Formula::atom(index);
    }
    cur_.fail("expected formula");
  }

  Cursor& cur_;
  const Language& lang_;
};

}  // namespace detail

inline Formula parse_formula(std::string_view text, const Language& lang) {
  detail::Cursor cur(text);
  Formula f = detail::FormulaParser(cur, lang).conditional();
  if (!cur.at_end()) cur.fail("unexpected trailing input");
  return f;
}

namespace detail {

inline int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::conditional: return 1;
    case Formula::Kind::disjunction: return 2;
    case Formula::Kind::conjunction: return 3;
    case Formula::Kind::negation: return 4;
    default: return 5;
  }
}

inline void print(const Formula& f, int min_prec, std::string& out) {
  int prec = precedence(f.kind());
  bool parens = prec < min_prec;
  if (parens) out += '(';
  switch (f.kind()) {
    case Formula::Kind::atom: out += 'p' + std::to_string(f.atom_index()); break;
    case Formula::Kind::top: out += 'T'; break;
    case Formula::Kind::bottom: out += 'F'; break;
    case Formula::Kind::negation:
      out += '~';
      print(f.operand(), 4, out);
      break;
    case Formula::Kind::conjunction:
      print(f.lhs(), 3, out);
      out += " & ";
      print(f.rhs(), 4, out);
      break;
    case Formula::Kind::disjunction:
      print(f.lhs(), 2, out);
      out += " | ";
      print(f.rhs(), 3, out);
      break;
    case Formula::Kind::conditional:
      print(f.lhs(), 2, out);
      out += " -> ";
      print(f.rhs(), 1, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace detail

inline std::string to_string(const Formula& f) {
  std::string out;
  detail::print(f, 0, out);
  return out;
}

// ---------------------------------------------------------------------------
// Semantic values

// A sentence up to logical equivalence.
struct SentenceClass {
  ModelMask models = 0;

  bool inconsistent() const { return models == 0; }
  friend auto operator<=>(const SentenceClass&, const SentenceClass&) = default;
};

inline SentenceClass top_class(const Language& lang) { return {lang.full_mask()}; }
inline SentenceClass bottom_class() { return {0}; }

inline SentenceClass class_of(const Formula& f, const Language& lang) {
  if (f.max_atom() >= lang.atoms()) throw std::invalid_argument("formula uses atom outside language");
  ModelMask m = 0;
  for (int v = 0; v < lang.valuation_count(); ++v) {
    if (f.evaluate(v)) m |= ModelMask{1} << v;
  }
  return {m};
}

inline SentenceClass class_conjunction(SentenceClass a, SentenceClass b) { return {a.models & b.models}; }

// A deductively closed theory, held as its model set. The theory contains
// exactly the sentences true in every model; no models is Cn({F}).
struct BeliefSet {
  ModelMask models = 0;

  static BeliefSet inconsistent() { return {0}; }
  static BeliefSet tautologies(const Language& lang) { return {lang.full_mask()}; }
  // Cn({phi})
  static BeliefSet closure_of(SentenceClass c) { return {c.models}; }

  bool consistent() const { return models != 0; }
  bool contains(SentenceClass c) const { return (models & ~c.models) == 0; }

  friend auto operator<=>(const BeliefSet&, const BeliefSet&) = default;
};

inline bool entails(const BeliefSet& x, const SentenceClass& c) { return x.contains(c); }

// Sorted truth-table strings of a model set; the canonical textual form of
// both sentence classes and belief sets.
inline std::vector<std::string> model_strings(ModelMask models, const Language& lang) {
  std::vector<std::string> out;
  for (int v = 0; v < lang.valuation_count(); ++v) {
    if ((models >> v) & 1) out.push_back(valuation_string(v, lang));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Total order on model sets by their canonical string list; used wherever a
// deterministic tie-break between classes or belief sets is needed.
inline bool canonical_less(ModelMask a, ModelMask b, const Language& lang) {
  return model_strings(a, lang) < model_strings(b, lang);
}

// Compact text for witnesses and messages: a model set as [v1,v2,...].
inline std::string describe(ModelMask models, const Language& lang) {
  std::string out = "[";
  auto strings = model_strings(models, lang);
  for (std::size_t i = 0; i < strings.size(); ++i) {
    if (i) out += ",";
    out += strings[i];
  }
  return out + "]";
}
inline std::string describe(const BeliefSet& x, const Language& lang) { return describe(x.models, lang); }
inline std::string describe(SentenceClass c, const Language& lang) { return describe(c.models, lang); }

// Disjunctive normal form over the models, used when a class must be shown as
// a formula.
inline Formula formula_of(SentenceClass c, const Language& lang) {
  if (c.models == 0) return Formula::bottom();
  if (c.models == lang.full_mask()) return Formula::top();
  std::vector<Formula> disjuncts;
  for (int v = 0; v < lang.valuation_count(); ++v) {
    if (!((c.models >> v) & 1)) continue;
    Formula term = ((v & 1) ? Formula::atom(0) : Formula::negation(Formula::atom(0)));
    for (int i = 1; i < lang.atoms(); ++i) {
      Formula lit = ((v >> i) & 1) ? Formula::atom(i) : Formula::negation(Formula::atom(i));
      term = Formula::conjunction(std::move(term), std::move(lit));
    }
    disjuncts.push_back(std::move(term));
  }
  Formula f = disjuncts.front();
  for (std::size_t i = 1; i < disjuncts.size(); ++i) f = Formula::disjunction(std::move(f), disjuncts[i]);
  return f;
}

// ---------------------------------------------------------------------------
// Input sets

// Finite set of sentence classes, kept sorted and duplicate-free so that
// equivalent members collapse.
class InputSet {
 public:
  InputSet() = default;
  InputSet(std::initializer_list<SentenceClass> members) : members_(members) { normalize(); }
  explicit InputSet(std::vector<SentenceClass> members) : members_(std::move(members)) { normalize(); }

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  const SentenceClass& operator[](std::size_t i) const { return members_[i]; }
  const std::vector<SentenceClass>& members() const { return members_; }

  bool contains(SentenceClass c) const { return std::binary_search(members_.begin(), members_.end(), c); }
  bool subset_of(const InputSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
  }

  friend auto operator<=>(const InputSet&, const InputSet&) = default;

 private:
  void normalize() {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }
  std::vector<SentenceClass> members_;
};

inline std::string describe(const InputSet& a, const Language& lang) {
  std::string out = "{";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ", ";
    out += describe(a[i], lang);
  }
  return out + "}";
}

struct InputSetHash {
  std::size_t operator()(const InputSet& s) const {
    std::size_t h = 1469598103934665603ull;
    for (const auto& c : s) {
      h ^= c.models;
      h *= 1099511628211ull;
    }
    return h ^ s.size();
  }
};

inline InputSet set_union(const InputSet& a, const InputSet& b) {
  std::vector<SentenceClass> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return InputSet(std::move(out));
}

// &A; the empty conjunction is T.
inline SentenceClass conj_all(const InputSet& a, const Language& lang) {
  ModelMask m = lang.full_mask();
  for (const auto& c : a) m &= c.models;
  return {m};
}

// A ⩕ B = { phi & psi | phi in A, psi in B }
inline InputSet pairwise_conj(const InputSet& a, const InputSet& b) {
  std::vector<SentenceClass> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back(class_conjunction(x, y));
  }
  return InputSet(std::move(out));
}

inline InputSet pairwise_conj(const InputSet& a, SentenceClass phi) { return pairwise_conj(a, InputSet{phi}); }

// A ≡ B: every member of each has an equivalent member in the other. With
// members stored as classes this is set equality.
inline bool set_equiv(const InputSet& a, const InputSet& b) { return a == b; }

// Some member of A is in the theory X.
inline bool intersects(const InputSet& a, const BeliefSet& x) {
  return std::any_of(a.begin(), a.end(), [&](const SentenceClass& c) { return x.contains(c); });
}

inline InputSet parse_input_set(std::string_view text, const Language& lang) {
  std::vector<SentenceClass> members;
  std::size_t start = 0;
  std::size_t depth = 0;
  auto flush = [&](std::size_t end) {
    std::string_view piece = text.substr(start, end - start);
    if (piece.find_first_not_of(" \t\r\n") == std::string_view::npos) {
      if (end < text.size() || !members.empty()) throw ParseError("empty formula in input set", start);
      return;
    }
    try {
      members.push_back(class_of(parse_formula(piece, lang), lang));
    } catch (const ParseError& e) {
      throw ParseError(e.message(), start + e.position());
    }
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')' && depth > 0) --depth;
    if (text[i] == ',' && depth == 0) {
      flush(i);
      start = i + 1;
    }
  }
  flush(text.size());
  return InputSet(std::move(members));
}

// All sentence classes of the language, ordered by mask value.
inline std::vector<SentenceClass> all_classes(const Language& lang) {
  if (!lang.exhaustive()) throw std::length_error("class space too large to enumerate");
  std::vector<SentenceClass> out;
  out.reserve(static_cast<std::size_t>(lang.class_count()));
  for (std::uint64_t m = 0; m < lang.class_count(); ++m) out.push_back({static_cast<ModelMask>(m)});
  return out;
}

// Every belief set of the language; same enumeration as all_classes.
inline std::vector<BeliefSet> all_belief_sets(const Language& lang) {
  std::vector<BeliefSet> out;
  for (auto c : all_classes(lang)) out.push_back({c.models});
  return out;
}

}  // namespace choicerev

#endif  // CHOICEREV_LOGIC_HPP

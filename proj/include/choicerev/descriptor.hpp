#ifndef CHOICEREV_DESCRIPTOR_HPP
#define CHOICEREV_DESCRIPTOR_HPP

// Belief descriptors. B(phi) is satisfied by a belief set that contains phi;
// molecular descriptors combine these truth-functionally at the meta level,
// and a composite descriptor is a set of molecular ones, satisfied when all
// of its elements are.

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "choicerev/logic.hpp"

namespace choicerev {

class MolecularDescriptor {
 public:
  enum class Kind { believed, negation, conjunction, disjunction, conditional };

  static MolecularDescriptor believed(Formula f, const Language& lang) {
    SentenceClass c = class_of(f, lang);
    return MolecularDescriptor(Kind::believed, std::make_shared<const Formula>(std::move(f)), c,
                               nullptr, nullptr);
  }
  // B(phi) for a class given only semantically; printed in disjunctive normal form.
  static MolecularDescriptor believed(SentenceClass c, const Language& lang) {
    return believed(formula_of(c, lang), lang);
  }
  static MolecularDescriptor negation(MolecularDescriptor d) {
    return MolecularDescriptor(Kind::negation, nullptr, {}, share(std::move(d)), nullptr);
  }
  static MolecularDescriptor conjunction(MolecularDescriptor a, MolecularDescriptor b) {
    return binary(Kind::conjunction, std::move(a), std::move(b));
  }
  static MolecularDescriptor disjunction(MolecularDescriptor a, MolecularDescriptor b) {
    return binary(Kind::disjunction, std::move(a), std::move(b));
  }
  static MolecularDescriptor conditional(MolecularDescriptor a, MolecularDescriptor b) {
    return binary(Kind::conditional, std::move(a), std::move(b));
  }

  Kind kind() const { return kind_; }
  const Formula& formula() const { return *formula_; }
  SentenceClass sentence() const { return sentence_; }
  const MolecularDescriptor& operand() const { return *lhs_; }
  const MolecularDescriptor& lhs() const { return *lhs_; }
  const MolecularDescriptor& rhs() const { return *rhs_; }

  friend bool operator==(const MolecularDescriptor& a, const MolecularDescriptor& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
      case Kind::believed: return *a.formula_ == *b.formula_;
      case Kind::negation: return *a.lhs_ == *b.lhs_;
      default: return *a.lhs_ == *b.lhs_ && *a.rhs_ == *b.rhs_;
    }
  }

 private:
  MolecularDescriptor(Kind k, std::shared_ptr<const Formula> f, SentenceClass c,
                      std::shared_ptr<const MolecularDescriptor> l,
                      std::shared_ptr<const MolecularDescriptor> r)
      : kind_(k), formula_(std::move(f)), sentence_(c), lhs_(std::move(l)), rhs_(std::move(r)) {}
  static std::shared_ptr<const MolecularDescriptor> share(MolecularDescriptor d) {
    return std::make_shared<const MolecularDescriptor>(std::move(d));
  }
  static MolecularDescriptor binary(Kind k, MolecularDescriptor a, MolecularDescriptor b) {
    return MolecularDescriptor(k, nullptr, {}, share(std::move(a)), share(std::move(b)));
  }

  Kind kind_;
  std::shared_ptr<const Formula> formula_;
  SentenceClass sentence_;
  std::shared_ptr<const MolecularDescriptor> lhs_;
  std::shared_ptr<const MolecularDescriptor> rhs_;
};

using Descriptor = std::vector<MolecularDescriptor>;

inline bool satisfies(const BeliefSet& x, const MolecularDescriptor& d) {
  using K = MolecularDescriptor::Kind;
  switch (d.kind()) {
    case K::believed: return entails(x, d.sentence());
    case K::negation: return !satisfies(x, d.operand());
    case K::conjunction: return satisfies(x, d.lhs()) && satisfies(x, d.rhs());
    case K::disjunction: return satisfies(x, d.lhs()) || satisfies(x, d.rhs());
    case K::conditional: return !satisfies(x, d.lhs()) || satisfies(x, d.rhs());
  }
  return false;
}

inline bool satisfies_composite(const BeliefSet& x, const Descriptor& phi) {
  for (const auto& d : phi) {
    if (!satisfies(x, d)) return false;
  }
  return true;
}

// { B(a0) | B(a1) | ... } over the members of a non-empty input set.
inline Descriptor choice_descriptor(const InputSet& a, const Language& lang) {
  if (a.empty()) throw std::invalid_argument("choice descriptor of an empty input set");
  MolecularDescriptor d = MolecularDescriptor::believed(a[0], lang);
  for (std::size_t i = 1; i < a.size(); ++i) {
    d = MolecularDescriptor::disjunction(std::move(d), MolecularDescriptor::believed(a[i], lang));
  }
  return {std::move(d)};
}

namespace detail {

class DescriptorParser {
 public:
  DescriptorParser(Cursor& cur, const Language& lang) : cur_(cur), lang_(lang) {}

  MolecularDescriptor conditional() {
    MolecularDescriptor lhs = disjunction();
    if (cur_.match("->")) return MolecularDescriptor::conditional(std::move(lhs), conditional());
    return lhs;
  }

 private:
  MolecularDescriptor disjunction() {
    MolecularDescriptor d = conjunction();
    while (cur_.match("|")) d = MolecularDescriptor::disjunction(std::move(d), conjunction());
    return d;
  }
  MolecularDescriptor conjunction() {
    MolecularDescriptor d = unary();
    while (cur_.match("&")) d = MolecularDescriptor::conjunction(std::move(d), unary());
    return d;
  }
  MolecularDescriptor unary() {
    if (cur_.match("!")) return MolecularDescriptor::negation(unary());
    if (cur_.match("(")) {
      MolecularDescriptor d = conditional();
      cur_.expect(")");
      return d;
    }
    if (cur_.match("B(")) {
      Formula f = FormulaParser(cur_, lang_).conditional();
      cur_.expect(")");
      return MolecularDescriptor::believed(std::move(f), lang_);
    }
    cur_.fail("expected descriptor");
  }

  Cursor& cur_;
  const Language& lang_;
};

inline void print(const MolecularDescriptor& d, int min_prec, std::string& out) {
  using K = MolecularDescriptor::Kind;
  int prec = 5;
  switch (d.kind()) {
    case K::conditional: prec = 1; break;
    case K::disjunction: prec = 2; break;
    case K::conjunction: prec = 3; break;
    case K::negation: prec = 4; break;
    case K::believed: break;
  }
  bool parens = prec < min_prec;
  if (parens) out += '(';
  switch (d.kind()) {
    case K::believed: out += "B(" + to_string(d.formula()) + ")"; break;
    case K::negation:
      out += '!';
      print(d.operand(), 4, out);
      break;
    case K::conjunction:
      print(d.lhs(), 3, out);
      out += " & ";
      print(d.rhs(), 4, out);
      break;
    case K::disjunction:
      print(d.lhs(), 2, out);
      out += " | ";
      print(d.rhs(), 3, out);
      break;
    case K::conditional:
      print(d.lhs(), 2, out);
      out += " -> ";
      print(d.rhs(), 1, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace detail

// Composite := molecular (',' molecular)*; empty text is the empty descriptor.
inline Descriptor parse_descriptor(std::string_view text, const Language& lang) {
  detail::Cursor cur(text);
  Descriptor out;
  if (cur.at_end()) return out;
  detail::DescriptorParser parser(cur, lang);
  out.push_back(parser.conditional());
  while (cur.match(",")) out.push_back(parser.conditional());
  if (!cur.at_end()) cur.fail("unexpected trailing input");
  return out;
}

inline std::string to_string(const MolecularDescriptor& d) {
  std::string out;
  detail::print(d, 0, out);
  return out;
}

inline std::string to_string(const Descriptor& phi) {
  std::string out;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (i) out += ", ";
    out += to_string(phi[i]);
  }
  return out;
}

}  // namespace choicerev

#endif  // CHOICEREV_DESCRIPTOR_HPP

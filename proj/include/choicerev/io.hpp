#ifndef CHOICEREV_IO_HPP
#define CHOICEREV_IO_HPP

// JSON forms of models, operators, relations and reports. A sentence class or
// belief set is written as its sorted list of valuation strings, e.g. p0 over
// two atoms is ["10","11"].

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "choicerev/believability.hpp"
#include "choicerev/logic.hpp"
#include "choicerev/operators.hpp"
#include "choicerev/outcome_model.hpp"
#include "choicerev/synthesis.hpp"

namespace choicerev {

using json = nlohmann::json;

inline constexpr const char* kToolName = "choicerev";
inline constexpr const char* kToolVersion = "0.1.0";

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Encoding

inline json encode_models(ModelMask m, const Language& lang) { return model_strings(m, lang); }
inline json encode(const BeliefSet& x, const Language& lang) { return encode_models(x.models, lang); }
inline json encode(SentenceClass c, const Language& lang) { return encode_models(c.models, lang); }

inline json encode(const InputSet& a, const Language& lang) {
  json out = json::array();
  for (auto c : a) out.push_back(encode(c, lang));
  return out;
}

inline json to_json(const RelationalModel& m) {
  json outcomes = json::array();
  for (const auto& x : m.outcomes) outcomes.push_back(encode(x, m.lang));
  return {{"atoms", m.lang.atoms()}, {"outcomes", outcomes}};
}

inline json to_json(const ChoiceOperator& op) {
  const Language& lang = op.lang();
  json entries = json::array();
  for (std::size_t i = 0; i < op.universe().size(); ++i) {
    entries.push_back({{"input", encode(op.universe()[i], lang)}, {"output", encode(op.outcome(i), lang)}});
  }
  return {{"atoms", lang.atoms()},
          {"max_input_size", op.universe().max_input_size()},
          {"K", encode(op.K(), lang)},
          {"entries", entries}};
}

inline json to_json(const BelievabilityRelation& rel) {
  const Language& lang = rel.lang();
  json pairs = json::array();
  for (auto a : all_classes(lang)) {
    for (auto b : all_classes(lang)) {
      if (rel(a, b)) pairs.push_back(json::array({encode(a, lang), encode(b, lang)}));
    }
  }
  return {{"atoms", lang.atoms()}, {"kind", "single"}, {"K", encode(rel.K(), lang)}, {"pairs", pairs}};
}

inline json to_json(const MultiBelievabilityRelation& mb, const Universe& u) {
  const Language& lang = mb.lang();
  auto m = tabulate(mb, u);
  json pairs = json::array();
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < u.size(); ++j) {
      if (m.get(i, j)) pairs.push_back(json::array({encode(u[i], lang), encode(u[j], lang)}));
    }
  }
  return {{"atoms", lang.atoms()},
          {"kind", "multi"},
          {"max_input_size", u.max_input_size()},
          {"K", encode(mb.K(), lang)},
          {"pairs", pairs}};
}

inline json to_json(const Witness& w, const Language& lang) {
  json inputs = json::array(), outcomes = json::array();
  for (const auto& a : w.inputs) inputs.push_back(encode(a, lang));
  for (const auto& x : w.outcomes) outcomes.push_back(encode(x, lang));
  json out{{"inputs", inputs}, {"outcomes", outcomes}};
  if (!w.note.empty()) out["note"] = w.note;
  return out;
}

inline json to_json(const PostulateReport& r, const Language& lang) {
  json out{{"postulate", r.postulate}, {"passed", r.passed}, {"checked", r.checked}, {"skipped", r.skipped}};
  if (r.witness) out["witness"] = to_json(*r.witness, lang);
  return out;
}

inline json to_json(const EquivalenceReport& r) {
  json items = json::array();
  for (const auto& i : r.items) {
    json item{{"implication", i.name}, {"applicable", i.applicable}, {"holds", i.holds}};
    if (!i.witness.empty()) item["witness"] = i.witness;
    items.push_back(item);
  }
  return {{"ok", r.ok()}, {"items", items}};
}

inline json to_json(const ValidationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json item{{"condition", c.condition}, {"passed", c.passed}};
    if (!c.witness.empty()) item["witness"] = c.witness;
    checks.push_back(item);
  }
  return {{"ok", r.ok()}, {"checks", checks}};
}

inline json to_json(const RoundTripReport& r, const Language& lang) {
  json out{{"theorem", r.theorem}, {"passed", r.passed}, {"compared", r.compared}};
  if (!r.failure.empty()) out["failure"] = r.failure;
  if (!r.artifact_hash.empty()) out["artifact_hash"] = r.artifact_hash;
  if (r.violation) out["violation"] = to_json(*r.violation, lang);
  if (r.mismatch) {
    out["mismatch"] = {{"input", encode(r.mismatch->input, lang)},
                       {"expected", encode(r.mismatch->expected, lang)},
                       {"regenerated", encode(r.mismatch->regenerated, lang)}};
  }
  return out;
}

// Every report carries the tool version and the bounds it was checked under.
inline json report_header(const Language& lang, int max_input_size) {
  return {{"tool", kToolName},
          {"version", kToolVersion},
          {"universe", {{"atoms", lang.atoms()}, {"max_input_size", max_input_size}}}};
}

// ---------------------------------------------------------------------------
// Decoding

namespace detail {

[[noreturn]] inline void format_fail(const std::string& where, const std::string& what) {
  throw FormatError(where + ": " + what);
}

inline const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) format_fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) format_fail(where, std::string("missing field '") + key + "'");
  return *it;
}

inline Language decode_language(const json& j) {
  const json& a = field(j, "atoms", "");
  if (!a.is_number_integer()) format_fail("/atoms", "expected an integer");
  try {
    return Language(a.get<int>());
  } catch (const std::invalid_argument& e) {
    format_fail("/atoms", e.what());
  }
}

inline int decode_size(const json& j) {
  const json& s = field(j, "max_input_size", "");
  if (!s.is_number_integer() || s.get<int>() < 0) format_fail("/max_input_size", "expected a non-negative integer");
  return s.get<int>();
}

inline ModelMask decode_models(const json& j, const Language& lang, const std::string& where) {
  if (!j.is_array()) format_fail(where, "expected a list of valuation strings");
  ModelMask m = 0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) format_fail(where + "/" + std::to_string(i), "expected a valuation string");
    try {
      m |= ModelMask{1} << parse_valuation_string(j[i].get<std::string>(), lang);
    } catch (const std::invalid_argument& e) {
      format_fail(where + "/" + std::to_string(i), e.what());
    }
  }
  return m;
}

inline InputSet decode_set(const json& j, const Language& lang, const std::string& where) {
  if (!j.is_array()) format_fail(where, "expected a list of sentence classes");
  std::vector<SentenceClass> members;
  for (std::size_t i = 0; i < j.size(); ++i) {
    members.push_back({decode_models(j[i], lang, where + "/" + std::to_string(i))});
  }
  return InputSet(std::move(members));
}

}  // namespace detail

inline RelationalModel model_from_json(const json& j) {
  Language lang = detail::decode_language(j);
  const json& outs = detail::field(j, "outcomes", "");
  if (!outs.is_array() || outs.empty()) detail::format_fail("/outcomes", "expected a non-empty list");
  std::vector<BeliefSet> outcomes;
  for (std::size_t i = 0; i < outs.size(); ++i) {
    outcomes.push_back({detail::decode_models(outs[i], lang, "/outcomes/" + std::to_string(i))});
  }
  return RelationalModel::from_outcomes(lang, std::move(outcomes));
}

inline ChoiceOperator operator_from_json(const json& j) {
  Language lang = detail::decode_language(j);
  int size = detail::decode_size(j);
  UniversePtr u;
  try {
    u = make_universe(lang, size);
  } catch (const std::length_error& e) {
    detail::format_fail("/max_input_size", e.what());
  }
  BeliefSet k{detail::decode_models(detail::field(j, "K", ""), lang, "/K")};
  if (!k.consistent()) detail::format_fail("/K", "K must be consistent");
  const json& entries = detail::field(j, "entries", "");
  if (!entries.is_array()) detail::format_fail("/entries", "expected a list");
  std::vector<std::optional<BeliefSet>> table(u->size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string where = "/entries/" + std::to_string(i);
    InputSet a = detail::decode_set(detail::field(entries[i], "input", where), lang, where + "/input");
    BeliefSet x{detail::decode_models(detail::field(entries[i], "output", where), lang, where + "/output")};
    auto idx = u->find(a);
    if (!idx) detail::format_fail(where + "/input", "input set outside the universe");
    if (table[*idx] && *table[*idx] != x) detail::format_fail(where, "conflicting entry for the same input set");
    table[*idx] = x;
  }
  std::vector<BeliefSet> values;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!table[i]) detail::format_fail("/entries", "no entry for input set " + describe((*u)[i], lang));
    values.push_back(*table[i]);
  }
  return ChoiceOperator(k, u, std::move(values));
}

// A relation file may omit K; it is then read off the relation's bottom
// elements (those below everything), which minimality ties to K.
struct RelationFile {
  std::string kind;
  std::optional<BelievabilityRelation> single;
  std::optional<MultiBelievabilityRelation> multi;
  UniversePtr universe;
};

inline RelationFile relation_from_json(const json& j, int default_max_input_size = 2) {
  Language lang = detail::decode_language(j);
  const json& kind = detail::field(j, "kind", "");
  if (!kind.is_string() || (kind != "single" && kind != "multi")) {
    detail::format_fail("/kind", "expected \"single\" or \"multi\"");
  }
  const json& pairs = detail::field(j, "pairs", "");
  if (!pairs.is_array()) detail::format_fail("/pairs", "expected a list");
  std::optional<BeliefSet> k;
  if (j.contains("K")) k = BeliefSet{detail::decode_models(j["K"], lang, "/K")};
  if (!lang.exhaustive()) detail::format_fail("/atoms", "relations need at most 3 atoms");

  RelationFile out;
  out.kind = kind.get<std::string>();
  if (out.kind == "single") {
    BelievabilityRelation rel(lang, k.value_or(BeliefSet{}));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const std::string where = "/pairs/" + std::to_string(i);
      if (!pairs[i].is_array() || pairs[i].size() != 2) detail::format_fail(where, "expected [lhs, rhs]");
      SentenceClass a{detail::decode_models(pairs[i][0], lang, where + "/0")};
      SentenceClass b{detail::decode_models(pairs[i][1], lang, where + "/1")};
      rel.set(a, b);
    }
    if (!k) {
      ModelMask m = lang.full_mask();
      for (auto a : all_classes(lang)) {
        bool bottom = true;
        for (auto b : all_classes(lang)) bottom = bottom && rel(a, b);
        if (bottom) m &= a.models;
      }
      BelievabilityRelation with_k(lang, BeliefSet{m});
      for (auto a : all_classes(lang)) {
        for (auto b : all_classes(lang)) with_k.set(a, b, rel(a, b));
      }
      rel = with_k;
    }
    out.single = rel;
    return out;
  }

  int size = j.contains("max_input_size") ? detail::decode_size(j) : default_max_input_size;
  try {
    out.universe = make_universe(lang, size);
  } catch (const std::length_error& e) {
    detail::format_fail("/max_input_size", e.what());
  }
  const Universe& u = *out.universe;
  graph::BitMatrix m(u.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string where = "/pairs/" + std::to_string(i);
    if (!pairs[i].is_array() || pairs[i].size() != 2) detail::format_fail(where, "expected [lhs, rhs]");
    auto a = u.find(detail::decode_set(pairs[i][0], lang, where + "/0"));
    auto b = u.find(detail::decode_set(pairs[i][1], lang, where + "/1"));
    if (!a || !b) detail::format_fail(where, "set outside the universe");
    m.set(*a, *b);
  }
  if (!k) {
    ModelMask models = lang.full_mask();
    for (auto c : all_classes(lang)) {
      auto i = u.find(InputSet{c});
      if (!i) continue;
      bool bottom = true;
      for (std::size_t b = 0; b < u.size() && bottom; ++b) bottom = m.get(*i, b);
      if (bottom) models &= c.models;
    }
    k = BeliefSet{models};
  }
  out.multi = MultiBelievabilityRelation::from_table(*k, out.universe, std::move(m));
  return out;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

inline void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError(path + ": cannot write file");
  out << j.dump(2) << "\n";
}

}  // namespace choicerev

#endif  // CHOICEREV_IO_HPP

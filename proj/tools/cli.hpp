#ifndef CHOICEREV_TOOLS_CLI_HPP
#define CHOICEREV_TOOLS_CLI_HPP

// Command-line front end. run() takes the arguments after the program name and
// returns the exit status: 0 when every check passed, 1 when a check failed
// (the report is still printed), 2 on usage or input-format errors.

#include <algorithm>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "choicerev/choicerev.hpp"

namespace choicerev::cli {

enum ExitCode { kPass = 0, kCheckFailed = 1, kUsageError = 2 };

struct CommandConfig {
  std::string format = "text";
  int atoms = 2;
  int max_input_size = 2;
  std::uint64_t seed = 0;

  std::string text;
  std::string parse_kind = "formula";
  std::string model_path;
  std::string operator_path;
  std::string relation_path;
  std::string out_path;
  std::string input;
  std::string descriptor;
  std::string postulates = "all";
  bool equivalences = false;
  int theorem = 1;
  std::string direction;
  std::string gen_what;
  std::string gen_kind = "multi";
  int size = 0;
  bool x3 = false;
  bool leq3 = false;
  bool arbitrary = false;
  std::string demo;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void emit(std::ostream& out, const CommandConfig& cfg, const json& report, const std::string& text) {
  if (cfg.format == "json") {
    out << report.dump(2) << "\n";
  } else {
    out << text;
  }
}

inline std::string theory_text(const BeliefSet& x, const Language& lang) {
  return to_string(formula_of(SentenceClass{x.models}, lang)) + "  " + describe(x, lang);
}

inline std::string witness_text(const Witness& w, const Language& lang) {
  std::string s;
  for (std::size_t i = 0; i < w.inputs.size(); ++i) {
    s += "    input " + describe(w.inputs[i], lang);
    if (i < w.outcomes.size()) s += " -> " + describe(w.outcomes[i], lang);
    s += "\n";
  }
  if (!w.note.empty()) s += "    " + w.note + "\n";
  return s;
}

inline std::string report_text(const PostulateReport& r, const Language& lang) {
  std::string s = r.postulate + ": " + (r.passed ? "pass" : "FAIL") + " (checked " + std::to_string(r.checked);
  if (r.skipped) s += ", skipped " + std::to_string(r.skipped);
  s += ")\n";
  if (r.witness) s += witness_text(*r.witness, lang);
  return s;
}

inline std::string roundtrip_text(const RoundTripReport& r, const Language& lang) {
  std::string s = "theorem " + r.theorem + " round trip: " + (r.passed ? "pass" : "FAIL") + " (compared " +
                  std::to_string(r.compared) + " inputs)\n";
  if (!r.failure.empty()) s += "  " + r.failure + "\n";
  if (r.violation) s += "  " + report_text(*r.violation, lang);
  if (r.mismatch) {
    s += "  input " + describe(r.mismatch->input, lang) + ": expected " + describe(r.mismatch->expected, lang) +
         ", regenerated " + describe(r.mismatch->regenerated, lang) + "\n";
  }
  if (!r.artifact_hash.empty()) s += "  artifact " + r.artifact_hash + "\n";
  return s;
}

inline void require_file(const std::string& path, const char* flag) {
  if (path.empty()) throw UsageError(std::string(flag) + " is required");
  if (!std::filesystem::is_regular_file(path)) throw FormatError(path + ": no such file");
}

inline void require_output(const std::string& path) {
  if (path.empty()) return;
  auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty() && !std::filesystem::is_directory(parent)) {
    throw FormatError(path + ": output directory does not exist");
  }
}

inline json header(const Language& lang, int max_input_size, const std::string& command) {
  json h = report_header(lang, max_input_size);
  h["command"] = command;
  return h;
}

// ---------------------------------------------------------------------------

inline int cmd_parse(const CommandConfig& cfg, std::ostream& out) {
  Language lang(cfg.atoms);
  json report{{"header", header(lang, cfg.max_input_size, "parse")}, {"kind", cfg.parse_kind}};
  std::string text;
  if (cfg.parse_kind == "formula") {
    Formula f = parse_formula(cfg.text, lang);
    SentenceClass c = class_of(f, lang);
    report["printed"] = to_string(f);
    report["class"] = encode(c, lang);
    text = to_string(f) + "\n  models " + describe(c, lang) + "\n";
  } else if (cfg.parse_kind == "input") {
    InputSet a = parse_input_set(cfg.text, lang);
    report["classes"] = encode(a, lang);
    text = "input set of " + std::to_string(a.size()) + " classes " + describe(a, lang) + "\n";
  } else if (cfg.parse_kind == "descriptor") {
    Descriptor d = parse_descriptor(cfg.text, lang);
    report["printed"] = to_string(d);
    report["molecular"] = d.size();
    text = to_string(d) + "\n";
  } else {
    throw UsageError("--kind must be formula, input or descriptor");
  }
  emit(out, cfg, report, text);
  return kPass;
}

inline int cmd_revise(const CommandConfig& cfg, std::ostream& out) {
  require_file(cfg.model_path, "--model");
  if (cfg.input.empty() == cfg.descriptor.empty() && !(cfg.input.empty() && cfg.descriptor.empty())) {
    throw UsageError("give either --input or --descriptor, not both");
  }
  RelationalModel m = model_from_json(read_json_file(cfg.model_path));
  ValidationReport v = validate_model(m);
  if (!v.ok()) {
    for (const auto& c : v.checks) {
      if (!c.passed) throw FormatError(cfg.model_path + ": invalid model, " + c.condition + ": " + c.witness);
    }
  }
  BeliefSet result;
  json report{{"header", header(m.lang, -1, "revise")}};
  if (!cfg.descriptor.empty()) {
    Descriptor d = parse_descriptor(cfg.descriptor, m.lang);
    result = descriptor_revise(m, d);
    report["descriptor"] = to_string(d);
  } else {
    InputSet a = parse_input_set(cfg.input, m.lang);
    result = choice_revise_via_model(m, a);
    report["input"] = encode(a, m.lang);
  }
  report["outcome"] = encode(result, m.lang);
  report["outcome_formula"] = to_string(formula_of(SentenceClass{result.models}, m.lang));
  report["unchanged"] = result == m.K;
  emit(out, cfg, report, theory_text(result, m.lang) + (result == m.K ? "  (K unchanged)\n" : "\n"));
  return kPass;
}

inline std::vector<PostulateId> selected_postulates(const std::string& spec) {
  if (spec == "all") return {kAllPostulates.begin(), kAllPostulates.end()};
  if (spec == "basic") return {kBasicPostulates.begin(), kBasicPostulates.end()};
  std::vector<PostulateId> ids;
  std::stringstream ss(spec);
  std::string name;
  while (std::getline(ss, name, ',')) {
    name.erase(0, name.find_first_not_of(' '));
    name.erase(name.find_last_not_of(' ') + 1);
    auto id = postulate_from_string(name);
    if (!id) throw UsageError("unknown postulate '" + name + "'");
    ids.push_back(*id);
  }
  if (ids.empty()) throw UsageError("no postulates selected");
  return ids;
}

inline int cmd_check(const CommandConfig& cfg, std::ostream& out) {
  require_file(cfg.operator_path, "--operator");
  auto ids = selected_postulates(cfg.postulates);
  ChoiceOperator op = operator_from_json(read_json_file(cfg.operator_path));
  const Language& lang = op.lang();
  auto reports = check_postulates(op, ids);
  json report{{"header", header(lang, op.universe().max_input_size(), "check")}};
  json list = json::array();
  std::string text;
  for (const auto& r : reports) {
    list.push_back(to_json(r, lang));
    text += report_text(r, lang);
  }
  report["postulates"] = list;
  bool ok = all_passed(reports);
  if (cfg.equivalences) {
    EquivalenceReport e = check_equivalences(op);
    report["equivalences"] = to_json(e);
    for (const auto& i : e.items) {
      text += i.name + ": " + (!i.applicable ? "not applicable" : i.holds ? "holds" : "VIOLATED") + "\n";
    }
    ok = ok && e.ok();
  }
  report["passed"] = ok;
  emit(out, cfg, report, text);
  return ok ? kPass : kCheckFailed;
}

inline int cmd_synthesize(const CommandConfig& cfg, std::ostream& out) {
  require_file(cfg.operator_path, "--operator");
  require_output(cfg.out_path);
  ChoiceOperator op = operator_from_json(read_json_file(cfg.operator_path));
  const Language& lang = op.lang();
  json report{{"header", header(lang, op.universe().max_input_size(), "synthesize")}};
  try {
    RelationalModel m = synthesize_model(op);
    report["passed"] = true;
    report["outcomes"] = m.outcomes.size();
    report["artifact_hash"] = content_hash(m);
    std::string text = "synthesized model with " + std::to_string(m.outcomes.size()) + " outcomes\n";
    for (const auto& x : m.outcomes) text += "  " + theory_text(x, lang) + "\n";
    if (!cfg.out_path.empty()) {
      write_json_file(cfg.out_path, to_json(m));
      report["out"] = cfg.out_path;
    } else {
      report["model"] = to_json(m);
    }
    emit(out, cfg, report, text);
    return kPass;
  } catch (const PostulateViolation& e) {
    report["passed"] = false;
    report["violation"] = to_json(e.report(), lang);
    emit(out, cfg, report, "cannot synthesize: " + report_text(e.report(), lang));
    return kCheckFailed;
  } catch (const AntisymmetryViolation& e) {
    report["passed"] = false;
    report["failure"] = "antisymmetry";
    emit(out, cfg, report,
         "cannot synthesize: chain relation links " + describe(e.first(), lang) + " and " +
             describe(e.second(), lang) + " both ways\n");
    return kCheckFailed;
  }
}

inline int cmd_roundtrip(const CommandConfig& cfg, std::ostream& out) {
  require_file(cfg.operator_path, "--operator");
  if (cfg.theorem != 1 && cfg.theorem != 2 && cfg.theorem != 4 && cfg.theorem != 5) {
    throw UsageError("--theorem must be 1, 2, 4 or 5");
  }
  ChoiceOperator op = operator_from_json(read_json_file(cfg.operator_path));
  RoundTripReport r = cfg.theorem <= 2 ? verify_roundtrip_model(op, cfg.theorem)
                                       : verify_roundtrip_relation(op, cfg.theorem == 5);
  json report{{"header", header(op.lang(), op.universe().max_input_size(), "roundtrip")},
              {"roundtrip", to_json(r, op.lang())}};
  emit(out, cfg, report, roundtrip_text(r, op.lang()));
  return r.passed ? kPass : kCheckFailed;
}

inline int cmd_translate(const CommandConfig& cfg, std::ostream& out) {
  require_file(cfg.relation_path, "--relation");
  require_output(cfg.out_path);
  if (cfg.direction != "lift" && cfg.direction != "project") throw UsageError("--direction must be lift or project");
  RelationFile file = relation_from_json(read_json_file(cfg.relation_path), cfg.max_input_size);
  json result;
  RoundTripReport r;
  Language lang(cfg.atoms);
  int bound = cfg.max_input_size;
  if (cfg.direction == "lift") {
    if (!file.single) throw UsageError("lift needs a single-sentence relation");
    lang = file.single->lang();
    auto u = make_universe(lang, cfg.max_input_size);
    result = to_json(lift(*file.single), *u);
    r = verify_translation(*file.single, *u);
  } else {
    if (!file.multi) throw UsageError("project needs a multi-set relation");
    lang = file.multi->lang();
    bound = file.universe->max_input_size();
    result = to_json(project(*file.multi));
    r = verify_translation(*file.multi, *file.universe);
  }
  json report{{"header", header(lang, bound, "translate")}, {"roundtrip", to_json(r, lang)}};
  if (!cfg.out_path.empty()) {
    write_json_file(cfg.out_path, result);
    report["out"] = cfg.out_path;
  } else {
    report["relation"] = result;
  }
  std::string text = cfg.direction + ": " + std::to_string(result["pairs"].size()) + " pairs\n" + roundtrip_text(r, lang);
  emit(out, cfg, report, text);
  return r.passed ? kPass : kCheckFailed;
}

inline int cmd_gen(const CommandConfig& cfg, std::ostream& out) {
  require_output(cfg.out_path);
  Language lang(cfg.atoms);
  json artifact;
  if (cfg.gen_what == "model" || cfg.gen_what == "operator") {
    std::optional<ModelFlags> flags;
    if (cfg.x3 || cfg.leq3) flags = ModelFlags{cfg.x3, cfg.leq3};
    std::size_t size = cfg.size > 0 ? static_cast<std::size_t>(cfg.size)
                                    : 1 + static_cast<std::size_t>(cfg.seed % 8);
    if (cfg.gen_what == "model") {
      artifact = to_json(generate_model(cfg.seed, lang, size, flags));
    } else {
      auto u = make_universe(lang, cfg.max_input_size);
      artifact = cfg.arbitrary ? to_json(random_operator(cfg.seed, u))
                               : to_json(induced_operator(generate_model(cfg.seed, lang, size, flags), u));
    }
  } else if (cfg.gen_what == "relation") {
    if (cfg.gen_kind == "single") {
      artifact = to_json(generate_quasi_linear(cfg.seed, lang));
    } else if (cfg.gen_kind == "multi") {
      auto u = make_universe(lang, cfg.max_input_size);
      artifact = to_json(generate_standard_mb(cfg.seed, u), *u);
    } else {
      throw UsageError("--kind must be single or multi");
    }
  } else {
    throw UsageError("gen needs one of: model, operator, relation");
  }
  if (!cfg.out_path.empty()) {
    write_json_file(cfg.out_path, artifact);
    json report{{"header", header(lang, cfg.max_input_size, "gen")}, {"out", cfg.out_path}};
    emit(out, cfg, report, "wrote " + cfg.out_path + "\n");
  } else {
    out << artifact.dump(2) << "\n";
  }
  return kPass;
}

inline int cmd_demo(const CommandConfig& cfg, std::ostream& out) {
  if (cfg.demo != "footnote7") throw UsageError("unknown demo '" + cfg.demo + "'");
  Language lang(3);
  SententialOperator op = atom_loop_operator(lang);
  auto reports = check_sentential_postulates(op);
  bool basic = true;
  const PostulateReport* strong = nullptr;
  json list = json::array();
  for (const auto& r : reports) {
    list.push_back(to_json(r, lang));
    if (r.postulate == "strong_reciprocity") {
      strong = &r;
    } else if (r.postulate != "extensionality") {
      basic = basic && r.passed;
    }
  }
  const bool reproduced = basic && strong && !strong->passed && strong->witness;
  json report{{"header", header(lang, 1, "demo")}, {"postulates", list}, {"reproduced", reproduced}};
  std::string text = std::string("(*1)-(*5): ") + (basic ? "pass" : "FAIL") + "; strong reciprocity: " +
                     (strong && strong->passed ? "pass" : "FAIL") + "\n";
  if (strong && strong->witness) {
    text += "  cycle (each sentence is believed after revising by the next):\n";
    const auto& w = *strong->witness;
    for (std::size_t i = 0; i < w.inputs.size(); ++i) {
      text += "    " + to_string(formula_of(w.inputs[i][0], lang)) + "  revises to  " +
              to_string(formula_of(SentenceClass{w.outcomes[i].models}, lang)) + "\n";
    }
  }
  emit(out, cfg, report, text);
  return reproduced ? kPass : kCheckFailed;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandConfig cfg;
  CLI::App app{"Choice revision: models, operators, postulates and representation round trips", "choicerev"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--atoms", cfg.atoms, "Number of atoms p0..p(n-1)")->check(CLI::Range(1, kMaxAtoms));
  app.add_option("--max-input-size", cfg.max_input_size, "Largest input set in the universe")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", cfg.seed, "Generator seed");

  auto* parse = app.add_subcommand("parse", "Parse a formula, input set or descriptor");
  parse->add_option("text", cfg.text, "Text to parse")->required();
  parse->add_option("--kind", cfg.parse_kind, "formula | input | descriptor");

  auto* revise = app.add_subcommand("revise", "Revise the K of a model by an input set or descriptor");
  revise->add_option("--model", cfg.model_path, "Model JSON")->required();
  revise->add_option("--input", cfg.input, "Comma-separated formulas");
  revise->add_option("--descriptor", cfg.descriptor, "Composite descriptor");

  auto* check = app.add_subcommand("check", "Check postulates on an operator table");
  check->add_option("--operator", cfg.operator_path, "Operator JSON")->required();
  check->add_option("--postulates", cfg.postulates, "all | basic | comma-separated names");
  check->add_flag("--equivalences", cfg.equivalences, "Also check implications among postulates");

  auto* synth = app.add_subcommand("synthesize", "Build a relational model that induces an operator");
  synth->add_option("--operator", cfg.operator_path, "Operator JSON")->required();
  synth->add_option("--out", cfg.out_path, "Where to write the model JSON");

  auto* roundtrip = app.add_subcommand("roundtrip", "Synthesize, regenerate and compare");
  roundtrip->add_option("--operator", cfg.operator_path, "Operator JSON")->required();
  roundtrip->add_option("--theorem", cfg.theorem, "1 | 2 (models), 4 | 5 (relations)")->required();

  auto* translate = app.add_subcommand("translate", "Lift a single-sentence relation or project a multi-set one");
  translate->add_option("--relation", cfg.relation_path, "Relation JSON")->required();
  translate->add_option("--direction", cfg.direction, "lift | project")->required();
  translate->add_option("--out", cfg.out_path, "Where to write the translated relation");

  auto* gen = app.add_subcommand("gen", "Generate a model, operator or relation");
  gen->add_option("what", cfg.gen_what, "model | operator | relation")->required();
  gen->add_option("--size", cfg.size, "Number of outcomes of the model");
  gen->add_flag("--x3", cfg.x3, "Model must contain Cn({F})");
  gen->add_flag("--leq3", cfg.leq3, "Every consistent sentence is satisfied ahead of Cn({F})");
  gen->add_flag("--arbitrary", cfg.arbitrary, "Operator with an arbitrary table instead of a model-induced one");
  gen->add_option("--kind", cfg.gen_kind, "single | multi (relations)");
  gen->add_option("--out", cfg.out_path, "Where to write the artifact");

  auto* demo = app.add_subcommand("demo", "Built-in demonstrations");
  demo->add_option("name", cfg.demo, "footnote7")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }

  try {
    if (*parse) return detail::cmd_parse(cfg, out);
    if (*revise) return detail::cmd_revise(cfg, out);
    if (*check) return detail::cmd_check(cfg, out);
    if (*synth) return detail::cmd_synthesize(cfg, out);
    if (*roundtrip) return detail::cmd_roundtrip(cfg, out);
    if (*translate) return detail::cmd_translate(cfg, out);
    if (*gen) return detail::cmd_gen(cfg, out);
    if (*demo) return detail::cmd_demo(cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::length_error& e) {
    err << "limit exceeded: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace choicerev::cli

#endif  // CHOICEREV_TOOLS_CLI_HPP

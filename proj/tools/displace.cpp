// displace: parse sentences, prove sequents and check proofs.
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dispnet/pipeline.hpp"

using namespace dispnet;
using nlohmann::ordered_json;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Flags {
  bool all = false;
  bool trace = false;
  bool json = false;
  bool latex = false;
  std::string mode;
  std::string goal;
  int jobs = 1;
};

std::string row_text(const std::vector<ApsItem>& row) {
  std::string out;
  for (const auto& it : row) out += (out.empty() ? "" : " ") + to_string(it);
  return out.empty() ? "_" : out;
}

ordered_json trace_json(const Trace& t) {
  ordered_json steps = ordered_json::array();
  for (const auto& s : t.steps)
    steps.push_back({{"rule", rule_name(s.rule, s.mode)},
                     {"consumed", s.consumed},
                     {"produced", s.produced},
                     {"row", row_text(s.row)},
                     {"conclusion", s.conclusion}});
  return steps;
}

ordered_json diagnostics_json(const std::vector<Diagnostic>& ds) {
  ordered_json out = ordered_json::array();
  for (const auto& d : ds)
    out.push_back({{"element", d.element}, {"rule", d.rule}, {"reason", d.reason}, {"detail", d.detail}});
  return out;
}

ordered_json result_json(const SolveResult& r, const Formula& goal, const Flags& f) {
  ordered_json j;
  j["linkings_total"] = r.linkings_total;
  j["linkings_tried"] = r.linkings_tried;
  ordered_json mm = ordered_json::array();
  for (const auto& m : r.mismatches) mm.push_back({{"atom", m.atom}, {"inputs", m.inputs}, {"outputs", m.outputs}});
  j["count_mismatches"] = mm;
  j["duplicates"] = r.duplicates;
  ordered_json readings = ordered_json::array();
  for (const auto& rd : r.readings) {
    ordered_json x;
    x["linking"] = rd.linking;
    x["comb"] = row_text(rd.trace.final_row);
    x["goal"] = to_string(goal);
    x["steps"] = rd.trace.steps.size();
    if (rd.proof) {
      x["sequent"] = to_string(sequent_of(*rd.proof));
      x["proof"] = to_sexpr(*rd.proof);
    }
    if (f.trace) x["trace"] = trace_json(rd.trace);
    if (f.latex && rd.proof) x["latex"] = latex(*rd.proof);
    readings.push_back(x);
  }
  j["readings"] = readings;
  if (f.trace) {
    ordered_json rej = ordered_json::array();
    for (const auto& rj : r.rejections)
      rej.push_back({{"linking", rj.linking}, {"diagnostics", diagnostics_json(rj.diagnostics)}});
    j["rejections"] = rej;
  }
  return j;
}

void print_result(std::ostream& os, const SolveResult& r, const Formula& goal, const Flags& f, const std::string& ind) {
  for (const auto& m : r.mismatches)
    os << ind << "count mismatch: atom " << m.atom << " has " << m.inputs << " input and " << m.outputs
       << " output occurrences\n";
  os << ind << "linkings: " << r.linkings_tried << " tried of " << r.linkings_total << '\n';
  if (r.duplicates) os << ind << "duplicate readings: " << r.duplicates << '\n';
  for (std::size_t i = 0; i < r.readings.size(); ++i) {
    const auto& rd = r.readings[i];
    os << ind << "reading " << i + 1 << " (linking " << rd.linking << "): " << row_text(rd.trace.final_row) << " : "
       << to_string(goal) << '\n';
    if (f.trace) {
      std::istringstream lines(trace_text(rd.trace));
      for (std::string line; std::getline(lines, line);) os << ind << "  " << line << '\n';
    }
    if (rd.proof) {
      std::istringstream lines(to_sexpr(*rd.proof));
      for (std::string line; std::getline(lines, line);) os << ind << "  " << line << '\n';
    }
    if (f.latex) {
      if (rd.proof) os << latex(*rd.proof) << '\n';
      os << trace_latex(rd.trace);
    }
  }
  if (f.trace)
    for (const auto& rj : r.rejections) {
      os << ind << "rejected linking " << rj.linking << '\n';
      for (const auto& d : rj.diagnostics) os << ind << "  " << d.rule << ' ' << d.reason << ": " << d.detail << '\n';
    }
}

AcceptMode mode_of(const Flags& f, AcceptMode fallback) {
  if (f.mode.empty()) return fallback;
  return f.mode == "net" ? AcceptMode::Net : AcceptMode::Parse;
}

SolveOptions options_of(const Flags& f) {
  SolveOptions o;
  o.all = f.all;
  o.jobs = f.jobs;
  o.keep_rejections = f.trace;
  return o;
}

int cmd_parse(const std::string& grammar_path, const std::string& sentence, const Flags& f) {
  Grammar g = load_grammar(read_file(grammar_path));
  std::set<std::string> known;
  for (const auto& e : g.entries)
    for (const auto& it : e.term.items())
      if (!it.is_sep()) known.insert(it.word);
  auto tokens = tokenize(sentence);
  if (tokens.empty()) throw InputError("empty sentence");
  for (const auto& t : tokens)
    if (!known.count(t)) throw InputError("unknown word '" + t + "'");
  std::optional<Formula> goal;
  if (!f.goal.empty()) goal = parse_formula(f.goal, g.signature);
  ParseResult pr = parse_sentence(g, sentence, goal, mode_of(f, AcceptMode::Parse), options_of(f));

  if (f.json) {
    ordered_json j;
    j["tokens"] = pr.tokens;
    j["goal"] = to_string(pr.goal);
    j["mode"] = pr.mode == AcceptMode::Net ? "net" : "parse";
    ordered_json as = ordered_json::array();
    for (const auto& a : pr.assignments) {
      ordered_json x;
      ordered_json lx = ordered_json::array();
      for (const auto& l : a.assignment.lexemes)
        lx.push_back({{"headword", g.entries[l.entry].headword},
                      {"term", to_string(l.term)},
                      {"formula", to_string(l.formula)},
                      {"tokens", l.origins}});
      x["lexemes"] = lx;
      x.update(result_json(a.result, pr.goal, f));
      as.push_back(x);
    }
    j["assignments"] = as;
    j["reading_count"] = pr.reading_count();
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "sentence: " << [&] {
      std::string s;
      for (const auto& t : pr.tokens) s += (s.empty() ? "" : " ") + t;
      return s;
    }() << '\n';
    std::cout << "goal: " << to_string(pr.goal) << '\n';
    if (pr.assignments.empty()) std::cout << "no lexical assignment covers the sentence\n";
    for (std::size_t i = 0; i < pr.assignments.size(); ++i) {
      const auto& a = pr.assignments[i];
      std::cout << "assignment " << i + 1 << ":";
      for (const auto& l : a.assignment.lexemes)
        std::cout << "\n  " << g.entries[l.entry].headword << " := " << to_string(l.term) << " : "
                  << to_string(l.formula);
      std::cout << '\n';
      print_result(std::cout, a.result, pr.goal, f, "  ");
    }
    std::cout << "readings: " << pr.reading_count() << '\n';
  }
  return pr.reading_count() > 0 ? 0 : 1;
}

int cmd_prove(const std::string& sig_path, const std::string& sequent, const Flags& f) {
  Signature sig = load_signature(read_file(sig_path));
  Problem p = parse_sequent(sequent, sig);
  p.mode = mode_of(f, p.mode);
  if (p.mode == AcceptMode::Parse && !p.expected) throw InputError("parse mode needs a string for the goal");
  SolveResult r = solve(p, options_of(f));
  if (f.json) {
    ordered_json j;
    j["sequent"] = sequent;
    j["goal"] = to_string(p.goal);
    j["mode"] = p.mode == AcceptMode::Net ? "net" : "parse";
    j.update(result_json(r, p.goal, f));
    j["reading_count"] = r.readings.size();
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "sequent: " << sequent << '\n';
    print_result(std::cout, r, p.goal, f, "");
    std::cout << "readings: " << r.readings.size() << '\n';
  }
  return r.readings.empty() ? 1 : 0;
}

int cmd_check(const std::string& path, const Flags& f) {
  ProofFile pf = parse_proof_file(read_file(path));
  auto v = check_nd(pf.proof);
  std::string seq = to_string(sequent_of(pf.proof));
  if (f.json) {
    ordered_json j;
    j["valid"] = !v;
    j["sequent"] = seq;
    if (v) j["violation"] = {{"path", v->path}, {"message", v->message}};
    if (f.latex) j["latex"] = latex(pf.proof);
    std::cout << j.dump(2) << '\n';
  } else {
    if (v)
      std::cout << "invalid at " << (v->path.empty() ? "root" : v->path) << ": " << v->message << '\n';
    else
      std::cout << "ok: " << seq << '\n';
    if (f.latex) std::cout << latex(pf.proof) << '\n';
  }
  return v ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proof nets for the Displacement calculus"};
  app.require_subcommand(1);
  Flags f;
  std::string a, b;

  auto common = [&](CLI::App* c, bool search) {
    c->add_flag("--json", f.json, "JSON output");
    c->add_flag("--latex", f.latex, "LaTeX for proofs and traces");
    if (!search) return;
    c->add_flag("--all", f.all, "exhaust all axiom linkings");
    c->add_flag("--trace", f.trace, "print contraction traces and rejected linkings");
    c->add_option("--mode", f.mode, "net: any comb; parse: comb must match the string")
        ->check(CLI::IsMember({"net", "parse"}));
    c->add_option("--jobs", f.jobs, "worker threads")->check(CLI::PositiveNumber);
  };

  auto* parse = app.add_subcommand("parse", "parse a sentence with a grammar");
  parse->add_option("grammar", a, "grammar file")->required();
  parse->add_option("sentence", b, "sentence")->required();
  parse->add_option("--goal", f.goal, "goal formula (default from the grammar, else s)");
  common(parse, true);

  auto* prove = app.add_subcommand("prove", "prove a sequent 'x:A, y:B |- [x+y:]C'");
  prove->add_option("signature", a, "signature file")->required();
  prove->add_option("sequent", b, "sequent")->required();
  common(prove, true);

  auto* check = app.add_subcommand("check", "check a natural deduction proof file");
  check->add_option("proof", a, "proof file")->required();
  common(check, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*parse) return cmd_parse(a, b, f);
    if (*prove) return cmd_prove(a, b, f);
    return cmd_check(a, f);
  } catch (const GrammarError& e) {
    for (const auto& v : e.violations()) std::cerr << a << ':' << v.line << ": " << v.message << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

#include "dispnet/pipeline.hpp"

#include <atomic>
#include <thread>

namespace dispnet {

namespace {

struct Candidate {
  std::uint64_t linking;
  ProofStructure structure;
  std::optional<Verdict> verdict;
  std::optional<NDProof> proof;
  std::string error;
};

void evaluate(Candidate& c, const Problem& problem, const std::vector<HypLabel>& labels, bool extract) {
  const Expected* expected = problem.expected ? &*problem.expected : nullptr;
  try {
    c.verdict = is_proof_net(c.structure, labels, problem.goal, problem.mode, expected);
    if (c.verdict->accepted && extract) c.proof = extract_nd(c.structure, labels, problem.goal);
  } catch (const std::exception& e) {
    c.error = e.what();
  }
}

}  // namespace

SolveResult solve(const Problem& problem, const SolveOptions& options) {
  SolveResult out;
  std::vector<Formula> formulas;
  std::vector<HypLabel> labels;
  for (const auto& h : problem.hypotheses) {
    formulas.push_back(h.formula);
    labels.push_back({h.term, h.origins});
  }
  if (problem.mode == AcceptMode::Parse && !problem.expected)
    throw ApsError(ApsError::Kind::BadStructure, "parse mode needs the expected string");
  ProofFrame frame = unfold(formulas, problem.goal);
  LinkingEnumerator en(frame);
  out.mismatches = en.mismatches();
  out.linkings_total = en.total();
  if (!out.mismatches.empty()) return out;

  const int jobs = std::max(1, options.jobs);
  const std::size_t batch = jobs == 1 ? 1 : static_cast<std::size_t>(jobs) * 4;
  bool stop = false;
  while (!stop) {
    std::vector<Candidate> cands;
    while (cands.size() < batch) {
      auto ps = en.next();
      if (!ps) break;
      cands.push_back({en.index(), std::move(*ps), std::nullopt, std::nullopt, {}});
    }
    if (cands.empty()) break;
    if (jobs == 1) {
      for (auto& c : cands) evaluate(c, problem, labels, options.extract);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < cands.size(); i = next++) evaluate(cands[i], problem, labels, options.extract);
        });
      for (auto& th : pool) th.join();
    }
    for (auto& c : cands) {
      ++out.linkings_tried;
      if (!c.error.empty()) throw std::runtime_error("linking " + std::to_string(c.linking) + ": " + c.error);
      if (c.verdict->accepted) {
        bool dup = false;
        if (c.proof)
          for (const auto& r : out.readings)
            if (r.proof && same_proof(*r.proof, *c.proof)) dup = true;
        if (dup) {
          ++out.duplicates;
        } else {
          out.readings.push_back({c.linking, std::move(c.structure), std::move(c.verdict->trace), std::move(c.proof)});
        }
        if (!options.all) {
          stop = true;
          break;
        }
      } else if (options.keep_rejections) {
        out.rejections.push_back({c.linking, std::move(c.structure), std::move(c.verdict->diagnostics)});
      }
    }
  }
  return out;
}

std::size_t ParseResult::reading_count() const {
  std::size_t n = 0;
  for (const auto& a : assignments) n += a.result.readings.size();
  return n;
}

ParseResult parse_sentence(const Grammar& g, const std::string& sentence, const std::optional<Formula>& goal,
                           AcceptMode mode, const SolveOptions& options) {
  ParseResult pr{tokenize(sentence), goal ? *goal : g.goal_or_default(), mode, {}};
  std::vector<TermItem> words;
  std::vector<int> origins;
  for (std::size_t i = 0; i < pr.tokens.size(); ++i) {
    words.push_back(TermItem::make_word(pr.tokens[i]));
    origins.push_back(static_cast<int>(i));
  }
  Expected expected{StringTerm(words), origins};
  for (auto& a : match_sentence(g, pr.tokens)) {
    Problem p{{}, pr.goal, mode, expected};
    for (const auto& lx : a.lexemes) p.hypotheses.push_back({lx.term, lx.formula, lx.origins});
    SolveResult r = solve(p, options);
    bool found = !r.readings.empty();
    pr.assignments.push_back({std::move(a), std::move(r)});
    if (found && !options.all) break;
  }
  return pr;
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Problem parse_sequent(const std::string& text, const Signature& sig) {
  auto turn = text.find("|-");
  if (turn == std::string::npos) throw FormulaError("sequent needs '|-'");
  std::string left = text.substr(0, turn), right = trim(text.substr(turn + 2));
  std::vector<Hypothesis> hyps;
  if (!trim(left).empty()) {
    std::size_t start = 0;
    while (true) {
      auto comma = left.find(',', start);
      std::string part = trim(left.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
      auto colon = part.find(':');
      if (colon == std::string::npos) throw FormulaError("hypothesis '" + part + "' needs 'term : formula'");
      hyps.push_back({parse_term(part.substr(0, colon)), parse_formula(part.substr(colon + 1), sig), {}});
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  for (const auto& h : hyps) {
    auto v = well_sorted(h.formula, sig);
    if (!v.empty()) throw FormulaError("ill-sorted " + v[0].subformula + ": " + v[0].message);
    if (h.term.sort() != h.formula.sort())
      throw FormulaError("string " + to_string(h.term) + " has sort " + std::to_string(h.term.sort()) + " but " +
                         to_string(h.formula) + " has sort " + std::to_string(h.formula.sort()));
  }
  std::optional<Expected> expected;
  std::string goal_text = right;
  if (auto colon = right.find(':'); colon != std::string::npos) {
    expected = Expected{parse_term(right.substr(0, colon)), {}};
    goal_text = right.substr(colon + 1);
  }
  Formula goal = parse_formula(goal_text, sig);
  auto v = well_sorted(goal, sig);
  if (!v.empty()) throw FormulaError("ill-sorted " + v[0].subformula + ": " + v[0].message);
  return Problem{hyps, goal, expected ? AcceptMode::Parse : AcceptMode::Net, expected};
}

}  // namespace dispnet

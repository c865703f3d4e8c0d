// Contraction of abstract proof structures and the proof net criterion.
#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dispnet/aps.hpp"

namespace dispnet {

enum class RuleKind { Plus, Insert, Under, Over, Prod, Up, Down, Wrap };

bool is_structural(RuleKind r);
std::string rule_name(RuleKind r, Mode m);  // "[+]", "[x>]", "[\]", "[^>]", ...

struct Redex {
  RuleKind rule = RuleKind::Plus;
  Mode mode = Mode::first();
  int anchor = -1;  // element the pattern was found from
  int comb = -1;    // comb rewritten
  int other = -1;   // second comb ([+] inner comb, [x] right comb)
  std::size_t begin = 0, end = 0;  // item range of comb replaced
};

struct Step {
  RuleKind rule = RuleKind::Plus;
  Mode mode = Mode::first();
  std::vector<int> consumed;
  int produced = -1;
  std::vector<ApsItem> row;
  int conclusion = -1;
};

struct Diagnostic {
  int element = -1;
  std::string rule;    // pattern that does not apply
  std::string reason;  // short code
  std::string detail;
};

struct Trace {
  std::vector<Step> steps;
  bool comb = false;  // ended in a single comb without points
  std::vector<ApsItem> final_row;
  int final_conclusion = -1;
  int initial_elements = 0;
  int max_examined = 0;  // most elements examined by one redex search
  std::vector<Diagnostic> stuck;
};

class Contractor {
 public:
  explicit Contractor(Aps aps);

  // Structural patterns before logical ones, lowest element id first.
  std::optional<Redex> first_redex();
  std::vector<Redex> all_redexes();
  Step apply(const Redex& r);
  std::vector<Diagnostic> diagnose() const;
  const Aps& aps() const { return aps_; }
  int last_examined() const { return examined_; }

 private:
  std::optional<Redex> match(int element, bool structural, std::string* why = nullptr, std::string* code = nullptr) const;
  std::optional<Redex> match_plus(int e) const;
  std::optional<Redex> match_insert(int e, std::string* why, std::string* code) const;
  std::optional<Redex> match_par(int e, std::string* why, std::string* code) const;
  int position(const ApsElement& comb, int point) const;
  bool block_at(const std::vector<ApsItem>& row, std::size_t pos, const std::vector<int>& tethers, std::size_t first,
                std::size_t last) const;
  int new_comb(std::vector<ApsItem> row, int conclusion);

  Aps aps_;
  std::vector<int> producer_, consumer_;
  int examined_ = 0;
};

Trace contract(Aps aps);
Trace contract_random(Aps aps, std::mt19937_64& rng);

enum class AcceptMode { Net, Parse };

struct Expected {
  StringTerm term;
  std::vector<int> origins;  // compared with word origins when non-empty
};

struct Verdict {
  bool accepted = false;
  Trace trace;
  std::vector<Diagnostic> diagnostics;
};

Verdict is_proof_net(const ProofStructure& ps, const std::vector<HypLabel>& labels, const Formula& goal,
                     AcceptMode mode, const Expected* expected = nullptr);

bool row_matches(const std::vector<ApsItem>& row, const Expected& expected);
StringTerm row_term(const std::vector<ApsItem>& row);

std::string trace_text(const Trace& t);
std::string trace_latex(const Trace& t);

}  // namespace dispnet

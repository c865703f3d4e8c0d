// Grammar files: signature, lexical entries and sentence matching.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dispnet/formula.hpp"
#include "dispnet/terms.hpp"

namespace dispnet {

struct LexEntry {
  std::string headword;
  StringTerm term;
  Formula formula;

  friend bool operator==(const LexEntry&, const LexEntry&) = default;
};

struct Grammar {
  Signature signature;
  std::optional<Formula> goal;
  std::vector<LexEntry> entries;

  // Goal from the file, else the atom s.
  Formula goal_or_default() const;
  friend bool operator==(const Grammar&, const Grammar&) = default;
};

struct GrammarViolation {
  int line = 0;
  std::string message;
};

class GrammarError : public std::runtime_error {
 public:
  explicit GrammarError(std::vector<GrammarViolation> v);
  const std::vector<GrammarViolation>& violations() const { return violations_; }

 private:
  std::vector<GrammarViolation> violations_;
};

Grammar load_grammar(std::string_view text);
std::string print_grammar(const Grammar& g);

// All entries with the given headword, in file order.
std::vector<LexEntry> lookup(const Grammar& g, std::string_view word);

// One lexical hypothesis placed on the sentence; origins[i] is the token
// index of the i-th word item of term.
struct Lexeme {
  std::size_t entry = 0;
  StringTerm term;
  Formula formula;
  std::vector<int> origins;
};

struct LexicalAssignment {
  std::vector<Lexeme> lexemes;  // ordered by first token
};

std::vector<std::string> tokenize(std::string_view sentence);

// Every way of covering the tokens exactly once with entries. Discontinuous
// entries match their segments in order, with gaps only at separators.
std::vector<LexicalAssignment> match_sentence(const Grammar& g, const std::vector<std::string>& tokens);

}  // namespace dispnet

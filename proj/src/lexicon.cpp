#include "dispnet/lexicon.hpp"

#include <cctype>
#include <functional>
#include <sstream>

namespace dispnet {

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::string summary(const std::vector<GrammarViolation>& v) {
  std::string out = "grammar has " + std::to_string(v.size()) + " error(s)";
  for (const auto& x : v) out += "\n  line " + std::to_string(x.line) + ": " + x.message;
  return out;
}

}  // namespace

GrammarError::GrammarError(std::vector<GrammarViolation> v) : std::runtime_error(summary(v)), violations_(std::move(v)) {}

Formula Grammar::goal_or_default() const {
  if (goal) return *goal;
  return Formula::atom("s", signature.find("s").value_or(0));
}

Grammar load_grammar(std::string_view text) {
  Grammar g;
  std::vector<GrammarViolation> errors;
  struct Pending {
    int line;
    std::string head, term, formula;
  };
  std::vector<Pending> pending;
  std::optional<std::pair<int, std::string>> goal_text;

  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.rfind("%goal", 0) == 0) {
      goal_text = {lineno, trim(std::string_view(line).substr(5))};
      continue;
    }
    auto def = line.find(":=");
    if (def == std::string::npos) {
      std::istringstream ls(line);
      std::string atom, rest;
      int sort;
      if (!(ls >> atom >> sort) || (ls >> rest)) {
        errors.push_back({lineno, "expected 'atom sort' or 'head := term : formula'"});
        continue;
      }
      try {
        g.signature.declare(atom, sort);
      } catch (const FormulaError& e) {
        errors.push_back({lineno, e.what()});
      }
      continue;
    }
    auto colon = line.find(':', def + 2);
    if (colon == std::string::npos) {
      errors.push_back({lineno, "missing ': formula' in entry"});
      continue;
    }
    pending.push_back({lineno, trim(std::string_view(line).substr(0, def)),
                       trim(std::string_view(line).substr(def + 2, colon - def - 2)),
                       trim(std::string_view(line).substr(colon + 1))});
  }

  auto parse_checked = [&](int line, const std::string& text) -> std::optional<Formula> {
    try {
      Formula f = parse_formula(text, g.signature);
      auto violations = well_sorted(f, g.signature);
      for (const auto& v : violations) errors.push_back({line, "ill-sorted " + v.subformula + ": " + v.message});
      if (!violations.empty()) return std::nullopt;
      return f;
    } catch (const FormulaError& e) {
      errors.push_back({line, e.what()});
      return std::nullopt;
    }
  };

  if (goal_text) g.goal = parse_checked(goal_text->first, goal_text->second);

  for (const auto& p : pending) {
    if (!is_word_token(p.head)) {
      errors.push_back({p.line, "bad headword '" + p.head + "'"});
      continue;
    }
    StringTerm term;
    try {
      term = parse_term(p.term);
    } catch (const TermError& e) {
      errors.push_back({p.line, e.what()});
      continue;
    }
    bool has_word = false;
    for (const auto& it : term.items()) has_word |= !it.is_sep();
    if (!has_word) {
      errors.push_back({p.line, "entry string contains no word"});
      continue;
    }
    auto f = parse_checked(p.line, p.formula);
    if (!f) continue;
    if (f->sort() != term.sort()) {
      errors.push_back({p.line, "string sort " + std::to_string(term.sort()) + " differs from formula sort " +
                                    std::to_string(f->sort())});
      continue;
    }
    g.entries.push_back({p.head, term, *f});
  }
  if (!errors.empty()) throw GrammarError(std::move(errors));
  return g;
}

std::string print_grammar(const Grammar& g) {
  std::string out;
  for (const auto& [atom, sort] : g.signature.atoms()) out += atom + " " + std::to_string(sort) + "\n";
  if (g.goal) out += "%goal " + to_string(*g.goal) + "\n";
  for (const auto& e : g.entries) out += e.headword + " := " + to_string(e.term) + " : " + to_string(e.formula) + "\n";
  return out;
}

std::vector<LexEntry> lookup(const Grammar& g, std::string_view word) {
  std::vector<LexEntry> out;
  for (const auto& e : g.entries)
    if (e.headword == word) out.push_back(e);
  return out;
}

std::vector<std::string> tokenize(std::string_view sentence) {
  std::vector<std::string> out;
  std::istringstream in{std::string(sentence)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::vector<LexicalAssignment> match_sentence(const Grammar& g, const std::vector<std::string>& tokens) {
  std::vector<LexicalAssignment> results;
  std::vector<bool> covered(tokens.size(), false);
  std::vector<Lexeme> chosen;
  const int n = static_cast<int>(tokens.size());

  std::function<void()> fill;

  // Places segments[seg..] of an entry; words must sit on adjacent uncovered
  // tokens, segments may be separated by any gap.
  std::function<void(std::size_t, const std::vector<std::vector<std::string>>&, std::size_t, int, std::vector<int>&)>
      place = [&](std::size_t entry, const std::vector<std::vector<std::string>>& segs, std::size_t seg, int from,
                  std::vector<int>& origins) {
        if (seg == segs.size()) {
          chosen.push_back({entry, g.entries[entry].term, g.entries[entry].formula, origins});
          fill();
          chosen.pop_back();
          return;
        }
        const auto& words = segs[seg];
        if (words.empty()) {
          place(entry, segs, seg + 1, from, origins);
          return;
        }
        // the first placed word of an entry is pinned by the caller
        int last_start = origins.empty() ? from : n - static_cast<int>(words.size());
        for (int start = from; start <= last_start; ++start) {
          bool ok = start + static_cast<int>(words.size()) <= n;
          for (std::size_t i = 0; ok && i < words.size(); ++i)
            ok = !covered[start + i] && tokens[start + i] == words[i];
          if (!ok) continue;
          for (std::size_t i = 0; i < words.size(); ++i) {
            covered[start + i] = true;
            origins.push_back(start + static_cast<int>(i));
          }
          place(entry, segs, seg + 1, start + static_cast<int>(words.size()), origins);
          for (std::size_t i = 0; i < words.size(); ++i) {
            covered[start + i] = false;
            origins.pop_back();
          }
        }
      };

  fill = [&] {
    int p = 0;
    while (p < n && covered[p]) ++p;
    if (p == n) {
      results.push_back({chosen});
      return;
    }
    for (std::size_t e = 0; e < g.entries.size(); ++e) {
      std::vector<int> origins;
      place(e, g.entries[e].term.segments(), 0, p, origins);
    }
  };
  if (n > 0) fill();
  return results;
}

}  // namespace dispnet

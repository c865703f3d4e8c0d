// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance                 all criteria
//   acceptance --criterion 3   one criterion (exit code reflects it)
//   acceptance --budget 600    wall-clock seconds for the exhaustive sweep
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "dispnet/pipeline.hpp"
#include "dispnet/random_proofs.hpp"

using namespace dispnet;
using Clock = std::chrono::steady_clock;

namespace {

// Tolerances and corpus sizes.
constexpr double kRangUpSeconds = 1.0;
constexpr int kSortSamples = 10000;
constexpr int kMaxConnectives = 6;
constexpr int kMaxHypotheses = 4;
constexpr int kSampleSequents = 100000;
constexpr int kCorpus = 1000;
constexpr int kOrders = 20;
constexpr int kMaxDepth = 6;

const char* kRangUpGrammar =
    "np 0\n"
    "s 0\n"
    "%goal s\n"
    "mary := mary : np\n"
    "rang_up := rang+1+up : (np\\s)^>np\n"
    "everyone := everyone : (s^>np)!>s\n";

struct Result {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// ---------------------------------------------------------------- 1
Result rang_up() {
  Grammar g = load_grammar(kRangUpGrammar);
  SolveOptions opt;
  opt.all = true;
  opt.keep_rejections = true;
  auto t0 = Clock::now();
  ParseResult r = parse_sentence(g, "mary rang everyone up", std::nullopt, AcceptMode::Parse, opt);
  double secs = seconds_since(t0);
  if (r.assignments.size() != 1) return {false, "expected one lexical assignment"};
  const SolveResult& s = r.assignments[0].result;
  std::ostringstream os;
  os << r.reading_count() << " reading(s) of " << s.linkings_tried << " linkings (" << s.linkings_total
     << " enumerated)";
  bool ok = r.reading_count() == 1 && s.linkings_total == 4 && s.linkings_tried == 4;
  if (ok) {
    const Reading& rd = s.readings[0];
    bool up = false;
    os << ", trace";
    for (const auto& st : rd.trace.steps) {
      os << ' ' << rule_name(st.rule, st.mode);
      if (!is_structural(st.rule) && st.rule == RuleKind::Up && st.mode == Mode::first()) up = true;
    }
    std::string comb = spaced(row_term(rd.trace.final_row));
    const Formula& concl = rd.structure.vertices[rd.trace.final_conclusion].formula;
    os << ", comb " << comb << " : " << to_string(concl);
    ok = up && comb == "mary rang everyone up" && rd.trace.final_conclusion == rd.structure.conclusion &&
         to_string(concl) == "s";
  }
  os << ", " << secs << " s";
  return {ok && secs < kRangUpSeconds, os.str()};
}

// ---------------------------------------------------------------- 2
// Sorts recomputed from the connective equations, independently of the
// cached sorts of the library.
int oracle_sort(const Formula& f, const std::map<std::string, int>& atoms) {
  if (f.is_atom()) return atoms.at(f.name());
  int l = oracle_sort(f.left(), atoms), r = oracle_sort(f.right(), atoms);
  switch (f.connective()) {
    case Connective::Prod: return l + r;
    case Connective::Under: return r - l;
    case Connective::Over: return l - r;
    case Connective::Wrap: return l + r - 1;
    case Connective::Down: return r + 1 - l;
    case Connective::Up: return l + 1 - r;
    case Connective::Atom: break;
  }
  return -1000;
}

StringTerm witness(int sort, int& counter) {
  std::vector<TermItem> items;
  for (int i = 0; i <= sort; ++i) {
    if (i) items.push_back(TermItem::sep());
    items.push_back(TermItem::make_word("u" + std::to_string(counter++)));
  }
  return StringTerm(items);
}

// Checks that strings of the subformulas' sorts combine, by the operation
// each connective stands for, into strings of the expected sorts.
bool string_identities(const Formula& f, const std::map<std::string, int>& atoms, int& counter) {
  if (f.is_atom()) return true;
  if (!string_identities(f.left(), atoms, counter) || !string_identities(f.right(), atoms, counter)) return false;
  int s = oracle_sort(f, atoms), l = oracle_sort(f.left(), atoms), r = oracle_sort(f.right(), atoms);
  StringTerm whole = witness(s, counter), a = witness(l, counter), b = witness(r, counter);
  try {
    switch (f.connective()) {
      case Connective::Prod: return (a + b).sort() == s;
      case Connective::Wrap: return wrap(a, f.mode(), b).sort() == s;
      case Connective::Under: return (a + whole).sort() == r;
      case Connective::Over: return (whole + b).sort() == l;
      case Connective::Up: return wrap(whole, f.mode(), b).sort() == l;
      case Connective::Down: return wrap(a, f.mode(), whole).sort() == r;
      case Connective::Atom: break;
    }
  } catch (const TermError&) {
    return false;
  }
  return false;
}

Result sorts() {
  Signature sig = random_signature();
  std::map<std::string, int> atoms = sig.atoms();
  std::ostringstream os;
  Formula rang = parse_formula("(np\\s)^>np", sig);
  bool ok = rang.sort() == 1 && oracle_sort(rang, atoms) == 1;
  os << "s((np\\s)^>np) = " << rang.sort();
  try {
    Grammar g = load_grammar("np 0\ns 0\ngave_the_cold_shoulder := gave+1+the+cold+shoulder : (np\\s)^>np\n");
    int st = g.entries.at(0).term.sort();
    os << ", cold shoulder entry sort " << st;
    ok = ok && st == 1;
  } catch (const GrammarError& e) {
    os << ", cold shoulder entry rejected";
    ok = false;
  }
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> depth(1, 6), target(0, 2);
  int bad = 0, counter = 0, ill = 0;
  for (int i = 0; i < kSortSamples; ++i) {
    Formula f = random_formula(rng, depth(rng), target(rng));
    if (!well_sorted(f, sig).empty()) {
      ++ill;
      continue;
    }
    int expect = oracle_sort(f, atoms);
    bool good = expect >= 0 && f.sort() == expect && sort_of_formula(f, sig) == expect &&
                string_identities(f, atoms, counter) && parse_formula(to_string(f), sig) == f;
    if (!good) ++bad;
  }
  os << ", " << kSortSamples - ill << " random well-sorted formulas, " << bad << " identity failures";
  if (ill) os << ", " << ill << " generated formulas ill-sorted";
  return {ok && bad == 0 && ill == 0, os.str()};
}

// ---------------------------------------------------------------- 3
// Product-free plus product Lambek formulas over np, n, s, by number of
// connectives. Small sizes are tabulated, larger ones generated on demand.
class LambekSpace {
 public:
  static constexpr int kTabulated = 4;

  LambekSpace() : table_(kTabulated + 1) {
    for (const char* a : {"np", "n", "s"}) table_[0].push_back(Formula::atom(a, 0));
    for (int k = 1; k <= kTabulated; ++k)
      for (int i = 0; i < k; ++i)
        for (const auto& l : table_[i])
          for (const auto& r : table_[k - 1 - i])
            for (const auto& f : combine(l, r)) table_[k].push_back(f);
    catalan_ = {1};
    for (int k = 1; k <= kMaxConnectives; ++k) {
      std::uint64_t c = 0;
      for (int i = 0; i < k; ++i) c += catalan_[i] * catalan_[k - 1 - i];
      catalan_.push_back(c);
    }
  }

  // Calls fn on every formula with k connectives until fn returns false.
  bool each(int k, const std::function<bool(const Formula&)>& fn) const {
    if (k <= kTabulated) {
      for (const auto& f : table_[k])
        if (!fn(f)) return false;
      return true;
    }
    for (int i = 0; i < k; ++i) {
      bool go = each(i, [&](const Formula& l) {
        return each(k - 1 - i, [&](const Formula& r) {
          for (const auto& f : combine(l, r))
            if (!fn(f)) return false;
          return true;
        });
      });
      if (!go) return false;
    }
    return true;
  }

  // Uniform over formulas with k connectives.
  Formula random(int k, std::mt19937_64& rng) const {
    if (k <= kTabulated) {
      std::uniform_int_distribution<std::size_t> pick(0, table_[k].size() - 1);
      return table_[k][pick(rng)];
    }
    std::uniform_int_distribution<std::uint64_t> shape(0, catalan_[k] - 1);
    std::uint64_t x = shape(rng);
    int i = 0;
    while (x >= catalan_[i] * catalan_[k - 1 - i]) x -= catalan_[i] * catalan_[k - 1 - i++];
    Formula l = random(i, rng), r = random(k - 1 - i, rng);
    return combine(l, r)[std::uniform_int_distribution<int>(0, 2)(rng)];
  }

 private:
  static std::array<Formula, 3> combine(const Formula& l, const Formula& r) {
    return {Formula::over(l, r), Formula::under(l, r), Formula::prod(l, r)};
  }

  std::vector<std::vector<Formula>> table_;
  std::vector<std::uint64_t> catalan_;
};

// Number of sequents with exactly t connectives in total, as a polynomial
// product over hypotheses plus goal.
std::vector<std::uint64_t> sequent_counts(int max_conn, int max_hyps) {
  std::vector<std::uint64_t> cat(max_conn + 1, 0), per(max_conn + 1);
  cat[0] = 1;
  for (int k = 1; k <= max_conn; ++k)
    for (int i = 0; i < k; ++i) cat[k] += cat[i] * cat[k - 1 - i];
  // shapes * atom choices for k+1 leaves * operator choices for k nodes
  for (int k = 0; k <= max_conn; ++k) {
    std::uint64_t p = 1;
    for (int i = 0; i < 2 * k + 1; ++i) p *= 3;
    per[k] = cat[k] * p;
  }
  std::vector<std::uint64_t> total(max_conn + 1, 0), poly(max_conn + 1, 0);
  poly = per;  // goal only
  for (int h = 0; h <= max_hyps; ++h) {
    for (int t = 0; t <= max_conn; ++t) total[t] += poly[t];
    std::vector<std::uint64_t> next(max_conn + 1, 0);
    for (int a = 0; a <= max_conn; ++a)
      for (int b = 0; a + b <= max_conn; ++b) next[a + b] += poly[a] * per[b];
    poly = next;
  }
  return total;
}

// Cut-free sequent search for the Lambek calculus allowing empty
// antecedents, kept separate from the library's own search.
class LambekOracle {
 public:
  bool derivable(const std::vector<Formula>& ante, const Formula& goal) {
    memo_.clear();
    return prove(ante, goal);
  }

 private:
  using Key = std::pair<std::vector<Formula>, Formula>;

  bool prove(const std::vector<Formula>& g, const Formula& c) {
    Key key{g, c};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool r = search(g, c);
    memo_.emplace(std::move(key), r);
    return r;
  }

  static std::vector<Formula> slice(const std::vector<Formula>& g, std::size_t b, std::size_t e) {
    return {g.begin() + static_cast<long>(b), g.begin() + static_cast<long>(e)};
  }

  bool search(const std::vector<Formula>& g, const Formula& c) {
    if (c.is_atom() && g.size() == 1 && g[0] == c) return true;
    // Product on the left is invertible.
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i].connective() == Connective::Prod) {
        auto h = slice(g, 0, i);
        h.push_back(g[i].left());
        h.push_back(g[i].right());
        for (std::size_t j = i + 1; j < g.size(); ++j) h.push_back(g[j]);
        return prove(h, c);
      }
    switch (c.connective()) {
      case Connective::Under: {
        std::vector<Formula> h{c.left()};
        h.insert(h.end(), g.begin(), g.end());
        if (prove(h, c.right())) return true;
        break;
      }
      case Connective::Over: {
        auto h = g;
        h.push_back(c.right());
        if (prove(h, c.left())) return true;
        break;
      }
      case Connective::Prod:
        for (std::size_t k = 0; k <= g.size(); ++k)
          if (prove(slice(g, 0, k), c.left()) && prove(slice(g, k, g.size()), c.right())) return true;
        break;
      default: break;
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Formula& f = g[i];
      if (f.connective() == Connective::Under) {
        // g[k..i) proves A, then C replaces g[k..i].
        for (std::size_t k = 0; k <= i; ++k) {
          if (!prove(slice(g, k, i), f.left())) continue;
          auto h = slice(g, 0, k);
          h.push_back(f.right());
          for (std::size_t j = i + 1; j < g.size(); ++j) h.push_back(g[j]);
          if (prove(h, c)) return true;
        }
      } else if (f.connective() == Connective::Over) {
        for (std::size_t k = i + 1; k <= g.size(); ++k) {
          if (!prove(slice(g, i + 1, k), f.right())) continue;
          auto h = slice(g, 0, i);
          h.push_back(f.left());
          for (std::size_t j = k; j < g.size(); ++j) h.push_back(g[j]);
          if (prove(h, c)) return true;
        }
      }
    }
    return false;
  }

  std::map<Key, bool> memo_;
};

bool engine_derivable(const std::vector<Formula>& hyps, const Formula& goal) {
  Problem p{{}, goal, AcceptMode::Parse, std::nullopt};
  std::vector<TermItem> words;
  std::vector<int> origins;
  for (std::size_t i = 0; i < hyps.size(); ++i) {
    std::string w = "w" + std::to_string(i);
    p.hypotheses.push_back({StringTerm({TermItem::make_word(w)}), hyps[i], {static_cast<int>(i)}});
    words.push_back(TermItem::make_word(w));
    origins.push_back(static_cast<int>(i));
  }
  p.expected = Expected{StringTerm(words), origins};
  SolveOptions opt;
  opt.extract = false;
  return !solve(p, opt).readings.empty();
}

struct Sweep {
  std::uint64_t checked = 0, derivable = 0, disagreements = 0;
  std::string first_disagreement;
  LambekOracle oracle;

  void check(const std::vector<Formula>& hyps, const Formula& goal) {
    bool l = oracle.derivable(hyps, goal);
    bool e = engine_derivable(hyps, goal);
    ++checked;
    if (l) ++derivable;
    if (l != e && disagreements++ == 0) {
      std::string s;
      for (const auto& h : hyps) s += (s.empty() ? "" : ", ") + to_string(h);
      first_disagreement = s + " |- " + to_string(goal) + (l ? " (oracle yes)" : " (oracle no)");
    }
  }
};

// Polarity balance of atom occurrences, used to bias the random sample
// toward sequents that reach the contraction stage.
void polarity(const Formula& f, bool input, std::map<std::string, int>& bal) {
  switch (f.connective()) {
    case Connective::Atom: bal[f.name()] += input ? 1 : -1; return;
    case Connective::Prod:
      polarity(f.left(), input, bal);
      polarity(f.right(), input, bal);
      return;
    case Connective::Under:
      polarity(f.left(), !input, bal);
      polarity(f.right(), input, bal);
      return;
    case Connective::Over:
      polarity(f.left(), input, bal);
      polarity(f.right(), !input, bal);
      return;
    default: return;
  }
}

Result lambek(double budget) {
  LambekSpace space;
  auto counts = sequent_counts(kMaxConnectives, kMaxHypotheses);
  std::uint64_t space_size = 0;
  for (auto c : counts) space_size += c;

  auto t0 = Clock::now();
  Sweep sweep;
  int complete = -1;
  bool out_of_time = false;
  std::uint64_t polls = 0;
  std::vector<Formula> hyps;
  std::function<void(int, int)> rec = [&](int budget_left, int slots) {
    if (out_of_time) return;
    space.each(budget_left, [&](const Formula& g) {
      sweep.check(hyps, g);
      if ((++polls & 0xff) == 0 && seconds_since(t0) > budget) out_of_time = true;
      return !out_of_time;
    });
    if (slots == 0) return;
    for (int k = 0; k <= budget_left && !out_of_time; ++k)
      space.each(k, [&](const Formula& f) {
        hyps.push_back(f);
        rec(budget_left - k, slots - 1);
        hyps.pop_back();
        return !out_of_time;
      });
  };
  for (int t = 0; t <= kMaxConnectives && !out_of_time; ++t) {
    rec(t, kMaxHypotheses);
    if (!out_of_time) complete = t;
  }
  double secs = seconds_since(t0);

  // Random sequents with 4 to 6 connectives and balanced atom polarities.
  std::mt19937_64 rng(77);
  Sweep sample;
  std::uniform_int_distribution<int> nh(0, kMaxHypotheses), total(4, kMaxConnectives);
  while (sample.checked < static_cast<std::uint64_t>(kSampleSequents)) {
    int h = nh(rng), t = total(rng);
    std::vector<int> sizes(h + 1, 0);
    std::uniform_int_distribution<int> slot(0, h);
    for (int i = 0; i < t; ++i) ++sizes[slot(rng)];
    std::vector<Formula> fs;
    for (int s : sizes) fs.push_back(space.random(s, rng));
    Formula goal = fs.back();
    fs.pop_back();
    std::map<std::string, int> bal;
    for (const auto& f : fs) polarity(f, true, bal);
    polarity(goal, false, bal);
    bool balanced = true;
    for (const auto& [a, c] : bal) balanced = balanced && c == 0;
    if (balanced) sample.check(fs, goal);
  }

  std::ostringstream os;
  os << "exhaustive through " << complete << " connective(s): " << sweep.checked << " of " << space_size
     << " sequents in " << static_cast<int>(secs) << " s, " << sweep.derivable << " derivable, "
     << sweep.disagreements << " disagreement(s)";
  if (complete < kMaxConnectives) os << "; bound " << kMaxConnectives << " not reached within " << budget << " s budget";
  os << "; random balanced sample at 4-6 connectives: " << sample.checked << " sequents, " << sample.derivable
     << " derivable, " << sample.disagreements << " disagreement(s)";
  if (!sweep.first_disagreement.empty()) os << "; first: " << sweep.first_disagreement;
  if (!sample.first_disagreement.empty()) os << "; sample: " << sample.first_disagreement;
  bool ok = complete == kMaxConnectives && sweep.disagreements == 0 && sample.disagreements == 0;
  return {ok, os.str()};
}

// ---------------------------------------------------------------- 4-6
int depth_of(const NDProof& p) {
  int d = 0;
  for (const auto& c : p.children) d = std::max(d, depth_of(c));
  return p.children.empty() ? 0 : d + 1;
}

struct Corpus {
  std::vector<NDProof> proofs;
  std::vector<NetOfND> nets;
  int too_deep = 0;

  Corpus() {
    std::mt19937_64 rng(4242);
    RandomProofOptions opt;
    opt.max_depth = kMaxDepth;
    for (int i = 0; i < kCorpus; ++i) {
      proofs.push_back(random_nd_proof(rng, opt));
      if (depth_of(proofs.back()) > kMaxDepth) ++too_deep;
      nets.push_back(net_of_nd(proofs.back()));
    }
  }
};

const Corpus& corpus() {
  static Corpus c;
  return c;
}

Result confluence() {
  const Corpus& c = corpus();
  std::mt19937_64 rng(99);
  int discrepancies = 0, not_comb = 0;
  long steps = 0;
  for (const auto& net : c.nets) {
    if (!net.trace.comb) {
      ++not_comb;
      continue;
    }
    for (int k = 0; k < kOrders; ++k) {
      Trace t = contract_random(to_aps(net.structure, net.labels, net.goal), rng);
      steps += static_cast<long>(t.steps.size());
      if (!t.comb || !(t.final_row == net.trace.final_row) || t.final_conclusion != net.trace.final_conclusion)
        ++discrepancies;
    }
  }
  std::ostringstream os;
  os << c.proofs.size() << " nets x " << kOrders << " random orders, " << discrepancies << " discrepancies, "
     << not_comb << " not contractible, " << steps << " steps";
  if (c.too_deep) os << ", " << c.too_deep << " proofs deeper than " << kMaxDepth;
  return {discrepancies == 0 && not_comb == 0 && c.too_deep == 0, os.str()};
}

Result step_bound() {
  const Corpus& c = corpus();
  std::mt19937_64 rng(100);
  int violations = 0, traces = 0, longest = 0, widest = 0;
  auto check = [&](const Trace& t) {
    ++traces;
    longest = std::max(longest, static_cast<int>(t.steps.size()));
    widest = std::max(widest, t.max_examined);
    if (static_cast<int>(t.steps.size()) > t.initial_elements || t.max_examined > t.initial_elements) ++violations;
  };
  for (const auto& net : c.nets) {
    check(net.trace);
    for (int k = 0; k < kOrders; ++k) check(contract_random(to_aps(net.structure, net.labels, net.goal), rng));
  }
  std::ostringstream os;
  os << traces << " traces, " << violations << " exceed the initial link+comb count (longest " << longest
     << " steps, widest search " << widest << " elements)";
  return {violations == 0, os.str()};
}

Result round_trip() {
  const Corpus& c = corpus();
  int wrong_comb = 0, invalid = 0, other_sequent = 0, errors = 0;
  std::string first;
  for (std::size_t i = 0; i < c.proofs.size(); ++i) {
    const NDProof& p = c.proofs[i];
    const NetOfND& net = c.nets[i];
    if (!net.trace.comb || !(row_term(net.trace.final_row) == p.term)) {
      ++wrong_comb;
      continue;
    }
    try {
      NDProof q = extract_nd(net.structure, net.labels, net.goal);
      if (auto v = check_nd(q)) {
        if (invalid++ == 0 && first.empty()) first = v->message;
      } else if (!(sequent_of(q) == sequent_of(p))) {
        ++other_sequent;
      }
    } catch (const std::exception& e) {
      if (errors++ == 0 && first.empty()) first = e.what();
    }
  }
  int bad = wrong_comb + invalid + other_sequent + errors;
  std::ostringstream os;
  os << c.proofs.size() - bad << "/" << c.proofs.size() << " pass (" << wrong_comb << " comb mismatches, " << invalid
     << " invalid extractions, " << other_sequent << " sequent changes, " << errors << " errors)";
  if (!first.empty()) os << "; first: " << first;
  return {bad == 0, os.str()};
}

// ---------------------------------------------------------------- 7
Result negative() {
  std::ostringstream os;
  Signature sig;
  sig.declare("np", 0);
  sig.declare("s", 0);
  SolveResult r = solve(parse_sequent("x:np |- s", sig));
  bool ok = r.readings.empty() && r.linkings_total == 0;
  std::set<std::string> mm;
  for (const auto& m : r.mismatches) mm.insert(m.atom + ":" + std::to_string(m.inputs) + "/" + std::to_string(m.outputs));
  ok = ok && mm == std::set<std::string>{"np:1/0", "s:0/1"};
  os << "np |- s: " << r.mismatches.size() << " count mismatch(es)";

  Grammar g = load_grammar(kRangUpGrammar);
  SolveOptions opt;
  opt.all = true;
  opt.keep_rejections = true;
  ParseResult pr = parse_sentence(g, "mary rang everyone up", std::nullopt, AcceptMode::Parse, opt);
  const SolveResult& s = pr.assignments.at(0).result;
  const std::set<std::string> codes{"premiss-not-comb", "non-adjacent", "not-an-infix", "not-leftmost",
                                    "not-rightmost",    "sort-condition", "not-a-circumfix", "cyclic",
                                    "word-order"};
  int structured = 0;
  for (const auto& rj : s.rejections) {
    bool good = !rj.diagnostics.empty();
    for (const auto& d : rj.diagnostics) good = good && codes.count(d.reason) && !d.detail.empty();
    if (good) ++structured;
    os << "; linking " << rj.linking << ":";
    std::set<std::string> seen;
    for (const auto& d : rj.diagnostics)
      if (seen.insert(d.reason).second) os << ' ' << d.reason;
  }
  ok = ok && s.rejections.size() == 3 && structured == 3 && s.readings.size() == 1;
  return {ok, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  double budget = 300;
  app.add_option("--criterion", only, "run one criterion (1-7)")->check(CLI::Range(1, 7));
  app.add_option("--budget", budget, "seconds for the exhaustive Lambek sweep");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"rang-up parse", rang_up},
      {"sort arithmetic", sorts},
      {"lambek oracle", [&] { return lambek(budget); }},
      {"confluence", confluence},
      {"step bound", step_bound},
      {"round trip", round_trip},
      {"negative control", negative},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && static_cast<int>(i) + 1 != only) continue;
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    if (!r.pass) ++failed;
    std::cout << (r.pass ? "PASS" : "FAIL") << " C" << i + 1 << " " << criteria[i].first << ": " << r.detail << std::endl;
  }
  return failed ? 1 : 0;
}

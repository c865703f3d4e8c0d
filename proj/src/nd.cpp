#include <algorithm>
#include <map>
#include <set>

#include "dispnet/nd.hpp"
#include "nd_util.hpp"

namespace dispnet {

NDProof nd_leaf(int k, StringTerm term, Formula f) {
  return NDProof{NDRule::Hyp, Mode::first(), k, 0, std::move(term), std::move(f), {}};
}

NDProof nd_discharged(int i, int slot, StringTerm term, Formula f) {
  return NDProof{NDRule::Dis, Mode::first(), i, slot, std::move(term), std::move(f), {}};
}

bool is_intro(NDRule r) {
  return r == NDRule::UnderI || r == NDRule::OverI || r == NDRule::ProdI || r == NDRule::DownI || r == NDRule::UpI ||
         r == NDRule::WrapI;
}

bool discharges(NDRule r) {
  return r == NDRule::UnderI || r == NDRule::OverI || r == NDRule::DownI || r == NDRule::UpI || r == NDRule::ProdE ||
         r == NDRule::WrapE;
}

std::string rule_label(NDRule r, Mode m) {
  std::string k = m.to_string();
  switch (r) {
    case NDRule::Hyp: return "hyp";
    case NDRule::Dis: return "dis";
    case NDRule::UnderE: return "\\E";
    case NDRule::UnderI: return "\\I";
    case NDRule::OverE: return "/E";
    case NDRule::OverI: return "/I";
    case NDRule::ProdE: return "*E";
    case NDRule::ProdI: return "*I";
    case NDRule::DownE: return "!" + k + "E";
    case NDRule::DownI: return "!" + k + "I";
    case NDRule::UpE: return "^" + k + "E";
    case NDRule::UpI: return "^" + k + "I";
    case NDRule::WrapE: return "o" + k + "E";
    case NDRule::WrapI: return "o" + k + "I";
  }
  return "?";
}

std::optional<std::size_t> find_sub(const StringTerm& hay, const StringTerm& needle) {
  const auto& h = hay.items();
  const auto& n = needle.items();
  if (n.size() > h.size()) return std::nullopt;
  auto it = std::search(h.begin(), h.end(), n.begin(), n.end());
  if (it == h.end() && !n.empty()) return std::nullopt;
  return static_cast<std::size_t>(it - h.begin());
}

StringTerm replace_at(const StringTerm& hay, std::size_t pos, std::size_t len, const StringTerm& with) {
  std::vector<TermItem> out(hay.items().begin(), hay.items().begin() + pos);
  out.insert(out.end(), with.items().begin(), with.items().end());
  out.insert(out.end(), hay.items().begin() + pos + len, hay.items().end());
  return StringTerm(std::move(out));
}

bool has_prefix(const StringTerm& t, const StringTerm& p) {
  return p.size() <= t.size() && std::equal(p.items().begin(), p.items().end(), t.items().begin());
}

bool has_suffix(const StringTerm& t, const StringTerm& s) {
  return s.size() <= t.size() && std::equal(s.items().begin(), s.items().end(), t.items().end() - s.size());
}

StringTerm slice(const StringTerm& t, std::size_t b, std::size_t e) {
  return StringTerm(std::vector<TermItem>(t.items().begin() + b, t.items().begin() + e));
}

std::optional<StringTerm> solve_circumfix(const StringTerm& alpha, Mode k, const StringTerm& whole) {
  int pos = separator_position(alpha, k);
  if (pos < 0) return std::nullopt;
  StringTerm left = slice(alpha, 0, pos), right = slice(alpha, pos + 1, alpha.size());
  if (left.size() + right.size() > whole.size() || !has_prefix(whole, left) || !has_suffix(whole, right))
    return std::nullopt;
  return slice(whole, left.size(), whole.size() - right.size());
}

std::optional<StringTerm> solve_infix(const StringTerm& whole, Mode k, const StringTerm& beta) {
  auto pos = find_sub(whole, beta);
  if (!pos) return std::nullopt;
  StringTerm gamma = replace_at(whole, *pos, beta.size(), StringTerm::separator());
  int sep = separator_position(gamma, k);
  if (sep != static_cast<int>(*pos)) return std::nullopt;
  return gamma;
}

std::string to_string(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.hypotheses.size(); ++i) {
    if (i) out += ", ";
    out += to_string(s.hypotheses[i].term) + " : " + to_string(s.hypotheses[i].formula);
  }
  return out + " |- " + to_string(s.term) + " : " + to_string(s.goal);
}

namespace {

void collect_free(const NDProof& p, std::map<int, SequentHyp>& out) {
  if (p.rule == NDRule::Hyp) out.emplace(p.index, SequentHyp{p.term, p.formula});
  for (const auto& c : p.children) collect_free(c, out);
}

void collect_words(const NDProof& p, std::map<std::string, int>& counts) {
  if (p.rule == NDRule::Hyp || p.rule == NDRule::Dis)
    for (const auto& it : p.term.items())
      if (!it.is_sep()) ++counts[it.word];
  for (const auto& c : p.children) collect_words(c, counts);
}

using Open = std::map<std::pair<int, int>, const NDProof*>;

class Checker {
 public:
  explicit Checker(const NDProof& root) { collect_words(root, word_counts_); }

  std::optional<NDViolation> run(const NDProof& root) {
    Open open;
    visit(root, "", open);
    if (!err_ && !open.empty()) {
      auto [key, leaf] = *open.begin();
      fail("", "hypothesis [" + to_string(leaf->term) + " : " + to_string(leaf->formula) + "] with index " +
                   std::to_string(key.first) + " is never discharged");
    }
    if (!err_) {
      int expect = 0;
      for (int k : free_) {
        if (k != expect) {
          fail("", "antecedent positions must be 0.." + std::to_string(free_.size() - 1) + ", missing " +
                       std::to_string(expect));
          break;
        }
        ++expect;
      }
    }
    return err_;
  }

 private:
  void fail(const std::string& path, const std::string& msg) {
    if (!err_) err_ = NDViolation{path.empty() ? "root" : path, msg};
  }

  static std::string sub(const std::string& path, std::size_t i) {
    return path.empty() ? std::to_string(i) : path + "." + std::to_string(i);
  }

  bool fresh_variable(const NDProof& leaf) {
    const auto& items = leaf.term.items();
    if (items.size() % 2 == 0) return false;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if ((i % 2 == 1) != items[i].is_sep()) return false;
      if (!items[i].is_sep() && word_counts_[items[i].word] != 1) return false;
    }
    return true;
  }

  // Removes the hypothesis (i, slot) from open and checks its formula.
  const NDProof* take(Open& open, int i, int slot, const Formula& f, const std::string& path) {
    auto it = open.find({i, slot});
    if (it == open.end()) {
      fail(path, "discharges no hypothesis with index " + std::to_string(i) + (slot ? " (second)" : ""));
      return nullptr;
    }
    const NDProof* leaf = it->second;
    open.erase(it);
    if (!(leaf->formula == f))
      fail(path, "discharged hypothesis has formula " + to_string(leaf->formula) + ", expected " + to_string(f));
    return leaf;
  }

  void visit(const NDProof& p, const std::string& path, Open& open) {
    if (err_) return;
    auto violations = well_sorted(p.formula);
    if (!violations.empty()) return fail(path, "ill-sorted formula " + violations[0].subformula + ": " + violations[0].message);
    if (p.term.sort() != p.formula.sort())
      return fail(path, "string " + to_string(p.term) + " has sort " + std::to_string(p.term.sort()) + " but " +
                            to_string(p.formula) + " has sort " + std::to_string(p.formula.sort()));

    auto arity = [&](std::size_t n) {
      if (p.children.size() != n) {
        fail(path, rule_label(p.rule, p.mode) + " needs " + std::to_string(n) + " premiss(es)");
        return false;
      }
      return true;
    };

    if (p.rule == NDRule::Hyp) {
      if (!arity(0)) return;
      if (p.index < 0) return fail(path, "negative antecedent position");
      if (!free_.insert(p.index).second) return fail(path, "antecedent position " + std::to_string(p.index) + " used twice");
      return;
    }
    if (p.rule == NDRule::Dis) {
      if (!arity(0)) return;
      if (p.slot != 0 && p.slot != 1) return fail(path, "bad hypothesis slot");
      if (!fresh_variable(p))
        return fail(path, "discharged hypothesis string " + to_string(p.term) + " is not made of fresh variables");
      if (!open.emplace(std::make_pair(p.index, p.slot), &p).second)
        return fail(path, "hypothesis index " + std::to_string(p.index) + " used twice");
      return;
    }

    std::vector<Open> opens(p.children.size());
    for (std::size_t i = 0; i < p.children.size(); ++i) visit(p.children[i], sub(path, i), opens[i]);
    if (err_) return;

    if (discharges(p.rule)) {
      if (!discharge_ids_.insert(p.index).second)
        return fail(path, "discharge index " + std::to_string(p.index) + " used by two rules");
    }

    const Formula& f = p.formula;
    auto conn = [&](const Formula& g, Connective c, bool with_mode) {
      return g.connective() == c && (!with_mode || g.mode() == p.mode);
    };
    auto bad_formula = [&]() { fail(path, "formulas do not fit " + rule_label(p.rule, p.mode)); };
    auto bad_string = [&](const std::string& eq) {
      fail(path, "string equation " + eq + " fails at " + rule_label(p.rule, p.mode));
    };

    switch (p.rule) {
      case NDRule::UnderE: {
        if (!arity(2)) return;
        const auto &a = p.children[0], &g = p.children[1];
        if (!conn(g.formula, Connective::Under, false) || !(g.formula.left() == a.formula) || !(g.formula.right() == f))
          return bad_formula();
        if (!(p.term == a.term + g.term)) return bad_string("alpha+gamma");
        break;
      }
      case NDRule::OverE: {
        if (!arity(2)) return;
        const auto &g = p.children[0], &b = p.children[1];
        if (!conn(g.formula, Connective::Over, false) || !(g.formula.right() == b.formula) || !(g.formula.left() == f))
          return bad_formula();
        if (!(p.term == g.term + b.term)) return bad_string("gamma+beta");
        break;
      }
      case NDRule::DownE: {
        if (!arity(2)) return;
        const auto &a = p.children[0], &g = p.children[1];
        if (!conn(g.formula, Connective::Down, true) || !(g.formula.left() == a.formula) || !(g.formula.right() == f))
          return bad_formula();
        if (a.term.sort() < 1 || separator_position(a.term, p.mode) < 0) return bad_string("alpha wrap gamma");
        if (!(p.term == wrap(a.term, p.mode, g.term))) return bad_string("alpha wrap gamma");
        break;
      }
      case NDRule::UpE: {
        if (!arity(2)) return;
        const auto &g = p.children[0], &b = p.children[1];
        if (!conn(g.formula, Connective::Up, true) || !(g.formula.right() == b.formula) || !(g.formula.left() == f))
          return bad_formula();
        if (g.term.sort() < 1 || separator_position(g.term, p.mode) < 0) return bad_string("gamma wrap beta");
        if (!(p.term == wrap(g.term, p.mode, b.term))) return bad_string("gamma wrap beta");
        break;
      }
      case NDRule::ProdI:
      case NDRule::WrapI: {
        if (!arity(2)) return;
        bool w = p.rule == NDRule::WrapI;
        const auto &a = p.children[0], &b = p.children[1];
        if (!conn(f, w ? Connective::Wrap : Connective::Prod, w) || !(f.left() == a.formula) || !(f.right() == b.formula))
          return bad_formula();
        if (w) {
          if (a.term.sort() < 1 || separator_position(a.term, p.mode) < 0) return bad_string("alpha wrap beta");
          if (!(p.term == wrap(a.term, p.mode, b.term))) return bad_string("alpha wrap beta");
        } else if (!(p.term == a.term + b.term)) {
          return bad_string("alpha+beta");
        }
        break;
      }
      case NDRule::UnderI:
      case NDRule::OverI:
      case NDRule::UpI:
      case NDRule::DownI: {
        if (!arity(1)) return;
        const auto& s = p.children[0];
        Connective c = p.rule == NDRule::UnderI ? Connective::Under
                       : p.rule == NDRule::OverI ? Connective::Over
                       : p.rule == NDRule::UpI   ? Connective::Up
                                                 : Connective::Down;
        if (!conn(f, c, is_discontinuous(c))) return bad_formula();
        bool arg_left = c == Connective::Under || c == Connective::Down;
        const Formula& arg = arg_left ? f.left() : f.right();
        const Formula& res = arg_left ? f.right() : f.left();
        if (!(s.formula == res)) return bad_formula();
        const NDProof* leaf = take(opens[0], p.index, 0, arg, path);
        if (!leaf) return;
        if (opens[0].count({p.index, 1})) return fail(path, "stray second hypothesis with index " + std::to_string(p.index));
        const StringTerm& x = leaf->term;
        bool ok = false;
        switch (c) {
          case Connective::Under: ok = s.term == x + p.term; break;
          case Connective::Over: ok = s.term == p.term + x; break;
          case Connective::Up:
            ok = p.term.sort() >= 1 && separator_position(p.term, p.mode) >= 0 && s.term == wrap(p.term, p.mode, x);
            break;
          case Connective::Down:
            ok = separator_position(x, p.mode) >= 0 && s.term == wrap(x, p.mode, p.term);
            break;
          default: break;
        }
        if (!ok) return bad_string("on the discharged hypothesis " + to_string(x));
        break;
      }
      case NDRule::ProdE:
      case NDRule::WrapE: {
        if (!arity(2)) return;
        bool w = p.rule == NDRule::WrapE;
        const auto &major = p.children[0], &minor = p.children[1];
        const Formula& ab = major.formula;
        if (!conn(ab, w ? Connective::Wrap : Connective::Prod, w) || !(minor.formula == f)) return bad_formula();
        for (const auto& [key, leaf] : opens[0])
          if (key.first == p.index) return fail(path, "major premiss uses a hypothesis discharged here");
        const NDProof* a = take(opens[1], p.index, 0, ab.left(), path);
        if (!a) return;
        const NDProof* b = take(opens[1], p.index, 1, ab.right(), path);
        if (!b) return;
        if (w && separator_position(a->term, p.mode) < 0) return bad_string("alpha wrap beta");
        StringTerm inner = w ? wrap(a->term, p.mode, b->term) : a->term + b->term;
        auto pos = find_sub(minor.term, inner);
        if (!pos || !(p.term == replace_at(minor.term, *pos, inner.size(), major.term)))
          return bad_string("context[" + to_string(inner) + "] -> context[" + to_string(major.term) + "]");
        break;
      }
      case NDRule::Hyp:
      case NDRule::Dis: break;
    }
    for (auto& o : opens)
      for (auto& [key, leaf] : o)
        if (!open.emplace(key, leaf).second) return fail(path, "hypothesis index " + std::to_string(key.first) + " used twice");
  }

  std::map<std::string, int> word_counts_;
  std::set<int> free_;
  std::set<int> discharge_ids_;
  std::optional<NDViolation> err_;
};

void rename(NDProof& p, std::map<int, int>& ids, std::map<std::string, std::string>& vars) {
  if (discharges(p.rule) && !ids.count(p.index)) {
    int fresh = static_cast<int>(ids.size());
    ids[p.index] = fresh;
  }
  if (p.rule == NDRule::Dis) {
    for (const auto& it : p.term.items())
      if (!it.is_sep() && !vars.count(it.word)) {
        std::string fresh = "$" + std::to_string(vars.size());
        vars[it.word] = fresh;
      }
  }
  for (auto& c : p.children) rename(c, ids, vars);
}

void apply_renaming(NDProof& p, const std::map<int, int>& ids, const std::map<std::string, std::string>& vars) {
  if (discharges(p.rule) || p.rule == NDRule::Dis) {
    auto it = ids.find(p.index);
    if (it != ids.end()) p.index = it->second;
  }
  std::vector<TermItem> items = p.term.items();
  for (auto& it : items)
    if (!it.is_sep()) {
      auto v = vars.find(it.word);
      if (v != vars.end()) it.word = v->second;
    }
  p.term = StringTerm(std::move(items));
  for (auto& c : p.children) apply_renaming(c, ids, vars);
}

}  // namespace

Sequent sequent_of(const NDProof& p) {
  std::map<int, SequentHyp> free;
  collect_free(p, free);
  Sequent s{{}, p.term, p.formula};
  for (auto& [k, h] : free) s.hypotheses.push_back(h);
  return s;
}

std::optional<NDViolation> check_nd(const NDProof& p) { return Checker(p).run(p); }

NDProof canonical(const NDProof& p) {
  std::map<int, int> ids;
  std::map<std::string, std::string> vars;
  NDProof out = p;
  rename(out, ids, vars);
  apply_renaming(out, ids, vars);
  return out;
}

bool same_proof(const NDProof& a, const NDProof& b) { return to_sexpr(canonical(a)) == to_sexpr(canonical(b)); }

}  // namespace dispnet

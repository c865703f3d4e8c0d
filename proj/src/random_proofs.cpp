#include "dispnet/random_proofs.hpp"

#include <algorithm>
#include <map>

#include "nd_util.hpp"

namespace dispnet {

Signature random_signature() {
  Signature sig;
  sig.declare("np", 0);
  sig.declare("s", 0);
  sig.declare("n", 0);
  sig.declare("inf", 1);
  return sig;
}

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Mode random_mode(std::mt19937_64& rng, int sort) {
  int pick = uniform(rng, 0, sort + 1);
  if (pick == 0) return Mode::first();
  if (pick == 1) return Mode::last();
  return Mode::at(pick - 1);
}

Formula atom_of_sort(std::mt19937_64& rng, int sort) {
  static const char* zero[] = {"np", "s", "n"};
  if (sort == 0) return Formula::atom(zero[uniform(rng, 0, 2)], 0);
  if (sort == 1) return Formula::atom("inf", 1);
  return Formula::prod(Formula::atom("inf", 1), atom_of_sort(rng, sort - 1));
}

int height(const NDProof& p) {
  int h = 0;
  for (const auto& c : p.children) h = std::max(h, 1 + height(c));
  return h;
}

void free_leaves(NDProof& p, std::vector<NDProof*>& out) {
  if (p.rule == NDRule::Hyp) out.push_back(&p);
  for (auto& c : p.children) free_leaves(c, out);
}

void discharge(NDProof* leaf, int index, int slot) {
  leaf->rule = NDRule::Dis;
  leaf->index = index;
  leaf->slot = slot;
}

class ProofGenerator {
 public:
  ProofGenerator(std::mt19937_64& rng, const RandomProofOptions& opt) : rng_(rng), opt_(opt) {}

  NDProof generate() {
    NDProof p = gen(opt_.max_depth);
    number(p);
    return p;
  }

 private:
  StringTerm fresh_term(int sort) {
    std::vector<TermItem> items;
    for (int i = 0; i <= sort; ++i) {
      if (i) items.push_back(TermItem::sep());
      items.push_back(TermItem::make_word("w" + std::to_string(words_++)));
    }
    return StringTerm(std::move(items));
  }

  Formula formula(int sort) { return random_formula(rng_, 2, sort, 2, opt_.discontinuous); }

  NDProof leaf(Formula f) {
    StringTerm t = fresh_term(f.sort());
    return nd_leaf(-1, std::move(t), std::move(f));
  }

  NDProof leaf_of_sort(int sort) { return leaf(formula(sort)); }

  // Major premiss for an elimination: a hypothesis, or an expanded detour.
  NDProof major(const Formula& f, int depth) {
    if (depth < 2 || f.is_atom() || !coin(rng_, opt_.detour_rate)) return leaf(f);
    NDProof g = leaf(f);
    int i = next_index_++;
    Mode k = f.mode();
    const Formula &l = f.left(), &r = f.right();
    switch (f.connective()) {
      case Connective::Under: {
        NDProof x = nd_discharged(i, 0, fresh_term(l.sort()), l);
        NDProof e{NDRule::UnderE, k, -1, 0, x.term + g.term, r, {x, g}};
        return NDProof{NDRule::UnderI, k, i, 0, g.term, f, {e}};
      }
      case Connective::Over: {
        NDProof x = nd_discharged(i, 0, fresh_term(r.sort()), r);
        NDProof e{NDRule::OverE, k, -1, 0, g.term + x.term, l, {g, x}};
        return NDProof{NDRule::OverI, k, i, 0, g.term, f, {e}};
      }
      case Connective::Up: {
        NDProof x = nd_discharged(i, 0, fresh_term(r.sort()), r);
        NDProof e{NDRule::UpE, k, -1, 0, wrap(g.term, k, x.term), l, {g, x}};
        return NDProof{NDRule::UpI, k, i, 0, g.term, f, {e}};
      }
      case Connective::Down: {
        NDProof x = nd_discharged(i, 0, fresh_term(l.sort()), l);
        NDProof e{NDRule::DownE, k, -1, 0, wrap(x.term, k, g.term), r, {x, g}};
        return NDProof{NDRule::DownI, k, i, 0, g.term, f, {e}};
      }
      case Connective::Prod:
      case Connective::Wrap: {
        bool w = f.connective() == Connective::Wrap;
        NDProof x = nd_discharged(i, 0, fresh_term(l.sort()), l);
        NDProof y = nd_discharged(i, 1, fresh_term(r.sort()), r);
        StringTerm xy = w ? wrap(x.term, k, y.term) : x.term + y.term;
        NDProof intro{w ? NDRule::WrapI : NDRule::ProdI, k, -1, 0, xy, f, {x, y}};
        return NDProof{w ? NDRule::WrapE : NDRule::ProdE, k, i, 0, g.term, f, {g, intro}};
      }
      case Connective::Atom: break;
    }
    return g;
  }

  NDProof gen(int depth) {
    if (depth == 0 || coin(rng_, 0.2)) return leaf_of_sort(uniform(rng_, 0, 1));
    for (int attempt = 0; attempt < 12; ++attempt) {
      int words = words_, index = next_index_;
      if (auto p = attempt_rule(depth)) return *p;
      words_ = words;
      next_index_ = index;
    }
    return leaf_of_sort(uniform(rng_, 0, 1));
  }

  std::optional<NDProof> attempt_rule(int depth) {
    static const NDRule continuous[] = {NDRule::UnderE, NDRule::OverE, NDRule::ProdI, NDRule::UnderI,
                                        NDRule::OverI,  NDRule::ProdE};
    static const NDRule all[] = {NDRule::UnderE, NDRule::OverE, NDRule::ProdI, NDRule::UnderI, NDRule::OverI,
                                 NDRule::ProdE,  NDRule::UpE,   NDRule::DownE, NDRule::WrapI,  NDRule::UpI,
                                 NDRule::DownI,  NDRule::WrapE};
    NDRule rule = opt_.discontinuous ? all[uniform(rng_, 0, 11)] : continuous[uniform(rng_, 0, 5)];
    switch (rule) {
      case NDRule::UnderE:
      case NDRule::OverE:
      case NDRule::UpE:
      case NDRule::DownE: return elimination(rule, depth);
      case NDRule::ProdI:
      case NDRule::WrapI: return product_intro(rule, depth);
      case NDRule::UnderI:
      case NDRule::OverI:
      case NDRule::UpI:
      case NDRule::DownI: return implication_intro(rule, depth);
      case NDRule::ProdE:
      case NDRule::WrapE: return product_elim(rule, depth);
      default: return std::nullopt;
    }
  }

  std::optional<NDProof> elimination(NDRule rule, int depth) {
    NDProof arg = gen(depth - 1);
    int sa = arg.formula.sort();
    int fs = uniform(rng_, 0, 1);  // sort of the functor
    switch (rule) {
      case NDRule::UnderE: {
        if (sa + fs > 2) return std::nullopt;
        Formula f = Formula::under(arg.formula, formula(sa + fs));
        NDProof m = major(f, depth - 1);
        StringTerm t = arg.term + m.term;
        return NDProof{rule, Mode::first(), -1, 0, t, f.right(), {arg, m}};
      }
      case NDRule::OverE: {
        if (sa + fs > 2) return std::nullopt;
        Formula f = Formula::over(formula(sa + fs), arg.formula);
        NDProof m = major(f, depth - 1);
        StringTerm t = m.term + arg.term;
        return NDProof{rule, Mode::first(), -1, 0, t, f.left(), {m, arg}};
      }
      case NDRule::UpE: {
        int g = 1 + fs;
        if (g - 1 + sa > 2) return std::nullopt;
        Mode k = random_mode(rng_, g);
        Formula f = Formula::up(formula(g - 1 + sa), arg.formula, k);
        NDProof m = major(f, depth - 1);
        StringTerm t = wrap(m.term, k, arg.term);
        return NDProof{rule, k, -1, 0, t, f.left(), {m, arg}};
      }
      case NDRule::DownE: {
        if (sa < 1 || fs + sa - 1 > 2) return std::nullopt;
        Mode k = random_mode(rng_, sa);
        Formula f = Formula::down(arg.formula, formula(fs + sa - 1), k);
        NDProof m = major(f, depth - 1);
        StringTerm t = wrap(arg.term, k, m.term);
        return NDProof{rule, k, -1, 0, t, f.right(), {arg, m}};
      }
      default: return std::nullopt;
    }
  }

  std::optional<NDProof> product_intro(NDRule rule, int depth) {
    NDProof a = gen(depth - 1);
    NDProof b = gen(depth - 1);
    if (rule == NDRule::ProdI) {
      if (a.formula.sort() + b.formula.sort() > 3) return std::nullopt;
      Formula f = Formula::prod(a.formula, b.formula);
      StringTerm t = a.term + b.term;
      return NDProof{rule, Mode::first(), -1, 0, t, f, {a, b}};
    }
    if (a.formula.sort() < 1) return std::nullopt;
    Mode k = random_mode(rng_, a.formula.sort());
    Formula f = Formula::wrap(a.formula, b.formula, k);
    StringTerm t = wrap(a.term, k, b.term);
    return NDProof{rule, k, -1, 0, t, f, {a, b}};
  }

  std::optional<NDProof> implication_intro(NDRule rule, int depth) {
    NDProof sub = gen(depth - 1);
    std::vector<NDProof*> leaves;
    free_leaves(sub, leaves);
    struct Choice {
      NDProof* leaf;
      StringTerm gamma;
      Mode mode;
    };
    std::vector<Choice> choices;
    const StringTerm& s = sub.term;
    for (NDProof* x : leaves) {
      const StringTerm& a = x->term;
      switch (rule) {
        case NDRule::UnderI:
          if (has_prefix(s, a)) choices.push_back({x, slice(s, a.size(), s.size()), Mode::first()});
          break;
        case NDRule::OverI:
          if (has_suffix(s, a)) choices.push_back({x, slice(s, 0, s.size() - a.size()), Mode::first()});
          break;
        case NDRule::UpI: {
          auto pos = find_sub(s, a);
          if (!pos) break;
          StringTerm gamma = replace_at(s, *pos, a.size(), StringTerm::separator());
          int n = gamma.sort(), p = slice(gamma, 0, *pos).sort() + 1;
          std::vector<Mode> modes{Mode::at(p)};
          if (p == 1) modes.push_back(Mode::first());
          if (p == n) modes.push_back(Mode::last());
          choices.push_back({x, gamma, modes[uniform(rng_, 0, static_cast<int>(modes.size()) - 1)]});
          break;
        }
        case NDRule::DownI: {
          int n = a.sort();
          for (int j = 1; j <= n; ++j) {
            auto gamma = solve_circumfix(a, Mode::at(j), s);
            if (!gamma) continue;
            std::vector<Mode> modes{Mode::at(j)};
            if (j == 1) modes.push_back(Mode::first());
            if (j == n) modes.push_back(Mode::last());
            choices.push_back({x, *gamma, modes[uniform(rng_, 0, static_cast<int>(modes.size()) - 1)]});
          }
          break;
        }
        default: break;
      }
    }
    if (choices.empty()) return std::nullopt;
    Choice c = choices[uniform(rng_, 0, static_cast<int>(choices.size()) - 1)];
    Formula arg = c.leaf->formula;
    int i = next_index_++;
    discharge(c.leaf, i, 0);
    Formula f = rule == NDRule::UnderI ? Formula::under(arg, sub.formula)
                : rule == NDRule::OverI ? Formula::over(sub.formula, arg)
                : rule == NDRule::UpI   ? Formula::up(sub.formula, arg, c.mode)
                                        : Formula::down(arg, sub.formula, c.mode);
    if (!well_sorted(f).empty()) return std::nullopt;
    return NDProof{rule, c.mode, i, 0, c.gamma, f, {sub}};
  }

  std::optional<NDProof> product_elim(NDRule rule, int depth) {
    NDProof sub = gen(depth - 1);
    std::vector<NDProof*> leaves;
    free_leaves(sub, leaves);
    struct Choice {
      NDProof *x, *y;
      Mode mode;
      std::size_t pos, len;
    };
    std::vector<Choice> choices;
    for (NDProof* x : leaves)
      for (NDProof* y : leaves) {
        if (x == y) continue;
        if (rule == NDRule::ProdE) {
          StringTerm xy = x->term + y->term;
          if (auto pos = find_sub(sub.term, xy)) choices.push_back({x, y, Mode::first(), *pos, xy.size()});
        } else if (x->term.sort() >= 1) {
          Mode k = random_mode(rng_, x->term.sort());
          StringTerm xy = wrap(x->term, k, y->term);
          if (auto pos = find_sub(sub.term, xy)) choices.push_back({x, y, k, *pos, xy.size()});
        }
      }
    if (choices.empty()) return std::nullopt;
    Choice c = choices[uniform(rng_, 0, static_cast<int>(choices.size()) - 1)];
    Formula f = rule == NDRule::ProdE ? Formula::prod(c.x->formula, c.y->formula)
                                      : Formula::wrap(c.x->formula, c.y->formula, c.mode);
    if (f.sort() > 3) return std::nullopt;
    int i = next_index_++;
    discharge(c.x, i, 0);
    discharge(c.y, i, 1);
    NDProof m = major(f, depth - 1);
    StringTerm t = replace_at(sub.term, c.pos, c.len, m.term);
    Formula concl = sub.formula;
    return NDProof{rule, c.mode, i, 0, t, concl, {m, sub}};
  }

  // Antecedent positions follow the order of first words in the conclusion.
  void number(NDProof& p) {
    std::vector<NDProof*> leaves;
    free_leaves(p, leaves);
    std::map<std::string, std::size_t> where;
    for (std::size_t i = 0; i < p.term.size(); ++i)
      if (!p.term.items()[i].is_sep()) where.emplace(p.term.items()[i].word, i);
    auto first = [&](const NDProof* l) {
      for (const auto& it : l->term.items())
        if (!it.is_sep()) return where.at(it.word);
      return std::size_t{0};
    };
    std::sort(leaves.begin(), leaves.end(), [&](const NDProof* a, const NDProof* b) { return first(a) < first(b); });
    for (std::size_t k = 0; k < leaves.size(); ++k) leaves[k]->index = static_cast<int>(k);
  }

  std::mt19937_64& rng_;
  const RandomProofOptions& opt_;
  int words_ = 0;
  int next_index_ = 1;
};

Formula formula_impl(std::mt19937_64& rng, int depth, int sort, int max_sort, bool disc) {
  if (depth == 0 || (sort <= 1 && coin(rng, 0.35))) return atom_of_sort(rng, sort);
  std::vector<Connective> options{Connective::Prod, Connective::Under, Connective::Over};
  if (disc) {
    options.push_back(Connective::Wrap);
    options.push_back(Connective::Down);
    if (sort >= 1) options.push_back(Connective::Up);
  }
  Connective c = options[uniform(rng, 0, static_cast<int>(options.size()) - 1)];
  switch (c) {
    case Connective::Prod: {
      int a = uniform(rng, 0, sort);
      return Formula::prod(formula_impl(rng, depth - 1, a, max_sort, disc),
                           formula_impl(rng, depth - 1, sort - a, max_sort, disc));
    }
    case Connective::Under:
    case Connective::Over: {
      if (sort > max_sort) break;
      int a = uniform(rng, 0, max_sort - sort);
      Formula arg = formula_impl(rng, depth - 1, a, max_sort, disc);
      Formula res = formula_impl(rng, depth - 1, sort + a, max_sort, disc);
      return c == Connective::Under ? Formula::under(arg, res) : Formula::over(res, arg);
    }
    case Connective::Wrap: {
      int hi = std::min(max_sort, sort + 1);
      if (hi < 1) break;
      int a = uniform(rng, 1, hi);
      Mode k = random_mode(rng, a);
      return Formula::wrap(formula_impl(rng, depth - 1, a, max_sort, disc),
                           formula_impl(rng, depth - 1, sort + 1 - a, max_sort, disc), k);
    }
    case Connective::Down: {
      int a = uniform(rng, 1, max_sort);
      if (sort - 1 + a > max_sort || sort - 1 + a < 0) break;
      Mode k = random_mode(rng, a);
      return Formula::down(formula_impl(rng, depth - 1, a, max_sort, disc),
                           formula_impl(rng, depth - 1, sort - 1 + a, max_sort, disc), k);
    }
    case Connective::Up: {
      int b = uniform(rng, 0, max_sort);
      if (sort - 1 + b > max_sort) break;
      Mode k = random_mode(rng, sort);
      return Formula::up(formula_impl(rng, depth - 1, sort - 1 + b, max_sort, disc),
                         formula_impl(rng, depth - 1, b, max_sort, disc), k);
    }
    case Connective::Atom: break;
  }
  return atom_of_sort(rng, sort);
}

}  // namespace

Formula random_formula(std::mt19937_64& rng, int depth, int sort, int max_sort, bool discontinuous) {
  return formula_impl(rng, depth, sort, max_sort, discontinuous);
}

NDProof random_nd_proof(std::mt19937_64& rng, const RandomProofOptions& opt) {
  while (true) {
    ProofGenerator g(rng, opt);
    NDProof p = g.generate();
    if (height(p) >= opt.min_depth) return p;
  }
}

}  // namespace dispnet

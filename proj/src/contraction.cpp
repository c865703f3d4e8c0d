#include "dispnet/contraction.hpp"

#include <algorithm>
#include <sstream>

namespace dispnet {

bool is_structural(RuleKind r) { return r == RuleKind::Plus || r == RuleKind::Insert; }

std::string rule_name(RuleKind r, Mode m) {
  switch (r) {
    case RuleKind::Plus: return "[+]";
    case RuleKind::Insert: return "[x" + m.to_string() + "]";
    case RuleKind::Under: return "[\\]";
    case RuleKind::Over: return "[/]";
    case RuleKind::Prod: return "[*]";
    case RuleKind::Up: return "[^" + m.to_string() + "]";
    case RuleKind::Down: return "[!" + m.to_string() + "]";
    case RuleKind::Wrap: return "[o" + m.to_string() + "]";
  }
  return "[?]";
}

Contractor::Contractor(Aps aps) : aps_(std::move(aps)) {
  producer_.assign(aps_.points.size(), -1);
  consumer_.assign(aps_.points.size(), -1);
  for (std::size_t i = 0; i < aps_.elements.size(); ++i) {
    const auto& e = aps_.elements[i];
    if (!e.alive) continue;
    int id = static_cast<int>(i);
    switch (e.kind) {
      case ElementKind::Comb:
        producer_[e.conclusion] = id;
        for (const auto& it : e.row)
          if (it.kind == ApsItem::Kind::Point) consumer_[it.point] = id;
        break;
      case ElementKind::Wrap:
        producer_[e.conclusion] = id;
        consumer_[e.left] = id;
        consumer_[e.right] = id;
        break;
      case ElementKind::Par:
        if (e.premiss >= 0) {
          consumer_[e.premiss] = id;
          producer_[e.main] = id;
        } else {
          consumer_[e.main] = id;
        }
        for (int t : e.tethers) producer_[t] = id;
        for (int t : e.tethers_b) producer_[t] = id;
        break;
    }
  }
}

int Contractor::position(const ApsElement& comb, int point) const {
  for (std::size_t i = 0; i < comb.row.size(); ++i)
    if (comb.row[i].kind == ApsItem::Kind::Point && comb.row[i].point == point) return static_cast<int>(i);
  return -1;
}

bool Contractor::block_at(const std::vector<ApsItem>& row, std::size_t pos, const std::vector<int>& tethers,
                          std::size_t first, std::size_t last) const {
  std::size_t len = 2 * (last - first) + 1;
  if (pos + len > row.size()) return false;
  for (std::size_t i = 0; i < len; ++i) {
    const auto& it = row[pos + i];
    if (i % 2 == 0) {
      if (it.kind != ApsItem::Kind::Point || it.point != tethers[first + i / 2]) return false;
    } else if (it.kind != ApsItem::Kind::Sep) {
      return false;
    }
  }
  return true;
}

namespace {

bool comb_alive(const Aps& aps, int e) {
  return e >= 0 && aps.elements[e].alive && aps.elements[e].kind == ElementKind::Comb;
}

void set(std::string* s, const std::string& v) {
  if (s) *s = v;
}

RuleKind par_rule(Connective c) {
  switch (c) {
    case Connective::Under: return RuleKind::Under;
    case Connective::Over: return RuleKind::Over;
    case Connective::Prod: return RuleKind::Prod;
    case Connective::Up: return RuleKind::Up;
    case Connective::Down: return RuleKind::Down;
    case Connective::Wrap: return RuleKind::Wrap;
    case Connective::Atom: break;
  }
  return RuleKind::Plus;
}

}  // namespace

std::optional<Redex> Contractor::match_plus(int e) const {
  const auto& c1 = aps_.elements[e];
  int c2 = consumer_[c1.conclusion];
  if (c2 == e || !comb_alive(aps_, c2)) return std::nullopt;
  Redex r;
  r.rule = RuleKind::Plus;
  r.anchor = e;
  r.comb = c2;
  r.other = e;
  r.begin = static_cast<std::size_t>(position(aps_.elements[c2], c1.conclusion));
  r.end = r.begin + 1;
  if (row_sort(c1.row, 0, c1.row.size()) != aps_.points[c1.conclusion].sort)
    throw ApsError(ApsError::Kind::BadStructure, "comb " + row_string(c1.row) + " does not have the sort of #" +
                                                     std::to_string(c1.conclusion));
  return r;
}

std::optional<Redex> Contractor::match_insert(int e, std::string* why, std::string* code) const {
  const auto& w = aps_.elements[e];
  int kl = producer_[w.left], kr = producer_[w.right];
  if (!comb_alive(aps_, kl)) {
    set(code, "premiss-not-comb");
    set(why, "left premiss #" + std::to_string(w.left) + " is not yet a comb conclusion");
    return std::nullopt;
  }
  if (!comb_alive(aps_, kr)) {
    set(code, "premiss-not-comb");
    set(why, "right premiss #" + std::to_string(w.right) + " is not yet a comb conclusion");
    return std::nullopt;
  }
  if (kl == kr) {
    set(code, "cyclic");
    set(why, "both premisses come from the same comb");
    return std::nullopt;
  }
  const auto& row = aps_.elements[kl].row;
  int total = row_sort(row, 0, row.size());
  int prefix = 0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i].kind == ApsItem::Kind::Sep) {
      int suffix = total - prefix - 1;
      bool hit = false;
      switch (w.mode.kind()) {
        case Mode::Kind::First: hit = prefix == 0; break;
        case Mode::Kind::Last: hit = suffix == 0; break;
        case Mode::Kind::At: hit = prefix == w.mode.index() - 1; break;
      }
      if (hit) {
        Redex r;
        r.rule = RuleKind::Insert;
        r.mode = w.mode;
        r.anchor = e;
        r.comb = kl;
        r.other = kr;
        r.begin = i;
        r.end = i + 1;
        return r;
      }
    }
    prefix += row_sort(row, i, i + 1);
  }
  set(code, "sort-condition");
  set(why, "no separator at position " + w.mode.to_string() + " in " + row_string(row));
  return std::nullopt;
}

std::optional<Redex> Contractor::match_par(int e, std::string* why, std::string* code) const {
  const auto& p = aps_.elements[e];
  Redex r;
  r.rule = par_rule(p.connective);
  r.mode = p.mode;
  r.anchor = e;
  const std::size_t n = p.tethers.size() - 1;
  const std::string name = rule_name(r.rule, r.mode);

  if (p.premiss >= 0) {
    int k = producer_[p.premiss];
    if (!comb_alive(aps_, k)) {
      set(code, "premiss-not-comb");
      set(why, name + " premiss #" + std::to_string(p.premiss) + " is not yet a comb conclusion");
      return std::nullopt;
    }
    for (int t : p.tethers) {
      if (consumer_[t] != k) {
        set(code, "non-adjacent");
        set(why, name + " tether #" + std::to_string(t) + " is not in the premiss comb");
        return std::nullopt;
      }
    }
    const auto& row = aps_.elements[k].row;
    r.comb = k;
    if (p.connective == Connective::Down) {
      int j = p.mode.resolve(static_cast<int>(n));
      std::size_t head = 2 * static_cast<std::size_t>(j) - 1, tail = 2 * (n - j) + 1;
      if (j < 1 || row.size() < head + tail || !block_at(row, 0, p.tethers, 0, j - 1) ||
          !block_at(row, row.size() - tail, p.tethers, j, n)) {
        set(code, "not-a-circumfix");
        set(why, name + " tethers do not surround the row " + row_string(row));
        return std::nullopt;
      }
      r.begin = head;
      r.end = row.size() - tail;
      return r;
    }
    std::size_t pos = static_cast<std::size_t>(position(aps_.elements[k], p.tethers[0]));
    if (!block_at(row, pos, p.tethers, 0, n)) {
      set(code, "not-an-infix");
      set(why, name + " tethers are not a contiguous block in " + row_string(row));
      return std::nullopt;
    }
    r.begin = pos;
    r.end = pos + 2 * n + 1;
    if (p.connective == Connective::Under && r.begin != 0) {
      set(code, "not-leftmost");
      set(why, name + " tethers are not leftmost in " + row_string(row));
      return std::nullopt;
    }
    if (p.connective == Connective::Over && r.end != row.size()) {
      set(code, "not-rightmost");
      set(why, name + " tethers are not rightmost in " + row_string(row));
      return std::nullopt;
    }
    if (p.connective == Connective::Up) {
      int before = row_sort(row, 0, r.begin), after = row_sort(row, r.end, row.size());
      bool ok = false;
      switch (p.mode.kind()) {
        case Mode::Kind::First: ok = before == 0; break;
        case Mode::Kind::Last: ok = after == 0; break;
        case Mode::Kind::At: ok = before == p.mode.index() - 1; break;
      }
      if (!ok) {
        set(code, "sort-condition");
        set(why, name + " block sits after sort " + std::to_string(before) + " and before sort " +
                     std::to_string(after) + " in " + row_string(row));
        return std::nullopt;
      }
    }
    return r;
  }

  // products: the A block with the B block after it or inside it; separators
  // of either block that are not joined may have been filled by wraps
  int k = consumer_[p.tethers[0]];
  bool together = comb_alive(aps_, k);
  for (int t : p.tethers) together = together && consumer_[t] == k;
  for (int t : p.tethers_b) together = together && consumer_[t] == k;
  if (!together) {
    set(code, "non-adjacent");
    set(why, name + " tether blocks are not in the same comb");
    return std::nullopt;
  }
  const auto& comb = aps_.elements[k];
  auto positions = [&](const std::vector<int>& ts) {
    std::vector<std::size_t> out;
    for (int t : ts) out.push_back(static_cast<std::size_t>(position(comb, t)));
    return out;
  };
  const auto pa = positions(p.tethers), pb = positions(p.tethers_b);
  const std::size_t m = pb.size() - 1;
  auto ordered = [](const std::vector<std::size_t>& ps) { return std::is_sorted(ps.begin(), ps.end()); };
  r.comb = k;
  r.begin = pa[0];
  bool ok = ordered(pa) && ordered(pb);
  if (p.connective == Connective::Prod) {
    ok = ok && pa[n] + 1 == pb[0];
    r.end = pb[m] + 1;
  } else {
    int j = p.mode.resolve(static_cast<int>(n));
    ok = ok && j >= 1 && pa[j - 1] + 1 == pb[0] && pb[m] + 1 == pa[j];
    r.end = pa[n] + 1;
  }
  if (!ok) {
    set(code, "non-adjacent");
    if (p.connective == Connective::Prod)
      set(why, name + " blocks are not adjacent in " + row_string(comb.row));
    else
      set(why, name + " B block is not wrapped at separator " + p.mode.to_string() + " of the A block in " +
                   row_string(comb.row));
    return std::nullopt;
  }
  return r;
}

std::optional<Redex> Contractor::match(int e, bool structural, std::string* why, std::string* code) const {
  const auto& el = aps_.elements[e];
  if (!el.alive) return std::nullopt;
  if (structural) {
    if (el.kind == ElementKind::Comb) return match_plus(e);
    if (el.kind == ElementKind::Wrap) return match_insert(e, why, code);
    return std::nullopt;
  }
  if (el.kind == ElementKind::Par) return match_par(e, why, code);
  return std::nullopt;
}

std::optional<Redex> Contractor::first_redex() {
  examined_ = 0;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t e = 0; e < aps_.elements.size(); ++e) {
      const auto& el = aps_.elements[e];
      if (!el.alive || (pass == 0) == (el.kind == ElementKind::Par)) continue;
      ++examined_;
      if (auto r = match(static_cast<int>(e), pass == 0)) return r;
    }
  }
  return std::nullopt;
}

std::vector<Redex> Contractor::all_redexes() {
  std::vector<Redex> out;
  examined_ = 0;
  for (std::size_t e = 0; e < aps_.elements.size(); ++e) {
    const auto& el = aps_.elements[e];
    if (!el.alive) continue;
    ++examined_;
    if (auto r = match(static_cast<int>(e), el.kind != ElementKind::Par)) out.push_back(*r);
  }
  return out;
}

int Contractor::new_comb(std::vector<ApsItem> row, int conclusion) {
  ApsElement c;
  c.row = std::move(row);
  c.conclusion = conclusion;
  int id = aps_.add_element(std::move(c));
  producer_[conclusion] = id;
  for (const auto& it : aps_.elements[id].row)
    if (it.kind == ApsItem::Kind::Point) consumer_[it.point] = id;
  return id;
}

Step Contractor::apply(const Redex& r) {
  Step s;
  s.rule = r.rule;
  s.mode = r.mode;
  // copies: new_comb may reallocate the element vector
  const std::vector<ApsItem> row = aps_.elements[r.comb].row;
  auto slice = [&](std::size_t b, std::size_t e) { return std::vector<ApsItem>(row.begin() + b, row.begin() + e); };
  std::vector<ApsItem> out;
  int conclusion = -1;
  switch (r.rule) {
    case RuleKind::Plus: {
      // piece i of the point takes the i-th separator-delimited segment
      const auto inner = aps_.elements[r.other].row;
      const int v = aps_.elements[r.other].conclusion;
      std::vector<std::vector<ApsItem>> segments(1);
      for (const auto& it : inner) {
        if (it.kind == ApsItem::Kind::Sep)
          segments.emplace_back();
        else
          segments.back().push_back(it);
      }
      for (const auto& it : row) {
        if (it.kind == ApsItem::Kind::Point && it.point == v) {
          const auto& seg = segments.at(static_cast<std::size_t>(it.piece));
          out.insert(out.end(), seg.begin(), seg.end());
        } else {
          out.push_back(it);
        }
      }
      conclusion = aps_.elements[r.comb].conclusion;
      s.consumed = {r.comb, r.other};
      break;
    }
    case RuleKind::Insert: {
      const auto inner = aps_.elements[r.other].row;
      out = slice(0, r.begin);
      out.insert(out.end(), inner.begin(), inner.end());
      auto rest = slice(r.end, row.size());
      out.insert(out.end(), rest.begin(), rest.end());
      conclusion = aps_.elements[r.anchor].conclusion;
      s.consumed = {r.comb, r.other, r.anchor};
      break;
    }
    case RuleKind::Under:
      out = slice(r.end, row.size());
      conclusion = aps_.elements[r.anchor].main;
      s.consumed = {r.comb, r.anchor};
      break;
    case RuleKind::Over:
      out = slice(0, r.begin);
      conclusion = aps_.elements[r.anchor].main;
      s.consumed = {r.comb, r.anchor};
      break;
    case RuleKind::Up: {
      out = slice(0, r.begin);
      out.push_back(ApsItem::sep());
      auto rest = slice(r.end, row.size());
      out.insert(out.end(), rest.begin(), rest.end());
      conclusion = aps_.elements[r.anchor].main;
      s.consumed = {r.comb, r.anchor};
      break;
    }
    case RuleKind::Down:
      out = slice(r.begin, r.end);
      conclusion = aps_.elements[r.anchor].main;
      s.consumed = {r.comb, r.anchor};
      break;
    case RuleKind::Prod:
    case RuleKind::Wrap: {
      // tethers become the pieces of the main point; a tether that continues
      // the piece before it (the joins of A and B) adds none
      const auto& par = aps_.elements[r.anchor];
      const int v = par.main;
      std::vector<int> joined{par.tethers_b.front()};
      if (r.rule == RuleKind::Wrap)
        joined.push_back(par.tethers[static_cast<std::size_t>(par.mode.resolve(static_cast<int>(par.tethers.size()) - 1))]);
      auto tether = [&](const ApsItem& it) {
        return it.kind == ApsItem::Kind::Point && aps_.points[it.point].par == r.anchor;
      };
      const bool split = aps_.points[v].sort > 0;
      out = slice(0, r.begin);
      int piece = -1;
      for (std::size_t i = r.begin; i < r.end; ++i) {
        if (!tether(row[i])) {
          out.push_back(row[i]);
        } else if (std::find(joined.begin(), joined.end(), row[i].point) == joined.end()) {
          ++piece;
          out.push_back(split ? ApsItem::make_piece(v, piece) : ApsItem::make_point(v));
        }
      }
      if (piece != aps_.points[v].sort)
        throw ApsError(ApsError::Kind::BadStructure, "pieces of #" + std::to_string(v) + " do not match its sort");
      auto rest = slice(r.end, row.size());
      out.insert(out.end(), rest.begin(), rest.end());
      conclusion = aps_.elements[r.comb].conclusion;
      s.consumed = {r.comb, r.anchor};
      break;
    }
  }
  for (int e : s.consumed) aps_.elements[e].alive = false;
  std::sort(s.consumed.begin(), s.consumed.end());
  s.produced = new_comb(out, conclusion);
  s.row = std::move(out);
  s.conclusion = conclusion;
  return s;
}

std::vector<Diagnostic> Contractor::diagnose() const {
  std::vector<Diagnostic> out;
  int combs = 0, links = 0;
  for (std::size_t e = 0; e < aps_.elements.size(); ++e) {
    const auto& el = aps_.elements[e];
    if (!el.alive) continue;
    if (el.kind == ElementKind::Comb) {
      ++combs;
      continue;
    }
    ++links;
    std::string why, code;
    if (el.kind == ElementKind::Wrap) {
      if (!match_insert(static_cast<int>(e), &why, &code))
        out.push_back({static_cast<int>(e), rule_name(RuleKind::Insert, el.mode), code, why});
    } else if (!match_par(static_cast<int>(e), &why, &code)) {
      out.push_back({static_cast<int>(e), rule_name(par_rule(el.connective), el.mode), code, why});
    }
  }
  if (links == 0 && combs > 1) {
    for (std::size_t e = 0; e < aps_.elements.size(); ++e) {
      const auto& el = aps_.elements[e];
      if (el.alive && el.kind == ElementKind::Comb)
        out.push_back({static_cast<int>(e), "[+]", "disconnected",
                       "comb " + row_string(el.row) + " -> #" + std::to_string(el.conclusion) + " is not connected"});
    }
  } else if (links == 0 && combs == 1) {
    for (std::size_t e = 0; e < aps_.elements.size(); ++e) {
      const auto& el = aps_.elements[e];
      if (el.alive && el.kind == ElementKind::Comb)
        out.push_back({static_cast<int>(e), "[+]", "cyclic", "comb " + row_string(el.row) + " still contains points"});
    }
  }
  return out;
}

namespace {

void finish(const Contractor& c, Trace& t) {
  const Aps& aps = c.aps();
  int alive = 0, last = -1;
  for (std::size_t e = 0; e < aps.elements.size(); ++e)
    if (aps.elements[e].alive) {
      ++alive;
      last = static_cast<int>(e);
    }
  if (alive == 1 && aps.elements[last].kind == ElementKind::Comb) {
    const auto& comb = aps.elements[last];
    bool closed = std::none_of(comb.row.begin(), comb.row.end(),
                               [](const ApsItem& i) { return i.kind == ApsItem::Kind::Point; });
    if (closed && comb.conclusion == aps.conclusion) {
      t.comb = true;
      t.final_row = comb.row;
      t.final_conclusion = comb.conclusion;
      return;
    }
  }
  t.stuck = c.diagnose();
}

}  // namespace

Trace contract(Aps aps) {
  Trace t;
  t.initial_elements = aps.alive_count();
  Contractor c(std::move(aps));
  while (true) {
    auto r = c.first_redex();
    t.max_examined = std::max(t.max_examined, c.last_examined());
    if (!r) break;
    t.steps.push_back(c.apply(*r));
  }
  finish(c, t);
  return t;
}

Trace contract_random(Aps aps, std::mt19937_64& rng) {
  Trace t;
  t.initial_elements = aps.alive_count();
  Contractor c(std::move(aps));
  while (true) {
    auto rs = c.all_redexes();
    t.max_examined = std::max(t.max_examined, c.last_examined());
    if (rs.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, rs.size() - 1);
    t.steps.push_back(c.apply(rs[pick(rng)]));
  }
  finish(c, t);
  return t;
}

bool row_matches(const std::vector<ApsItem>& row, const Expected& expected) {
  const auto& items = expected.term.items();
  if (row.size() != items.size()) return false;
  std::size_t w = 0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (items[i].is_sep()) {
      if (row[i].kind != ApsItem::Kind::Sep) return false;
      continue;
    }
    if (row[i].kind != ApsItem::Kind::Word || row[i].word != items[i].word) return false;
    if (!expected.origins.empty() && row[i].origin != expected.origins[w]) return false;
    ++w;
  }
  return true;
}

StringTerm row_term(const std::vector<ApsItem>& row) {
  std::vector<TermItem> items;
  for (const auto& it : row) {
    if (it.kind == ApsItem::Kind::Sep)
      items.push_back(TermItem::sep());
    else if (it.kind == ApsItem::Kind::Word)
      items.push_back(TermItem::make_word(it.word));
    else
      throw ApsError(ApsError::Kind::BadStructure, "row still contains point #" + std::to_string(it.point));
  }
  return StringTerm(std::move(items));
}

Verdict is_proof_net(const ProofStructure& ps, const std::vector<HypLabel>& labels, const Formula& goal,
                     AcceptMode mode, const Expected* expected) {
  Verdict v;
  v.trace = contract(to_aps(ps, labels, goal));
  v.accepted = v.trace.comb;
  v.diagnostics = v.trace.stuck;
  if (v.accepted && mode == AcceptMode::Parse) {
    if (!expected) throw ApsError(ApsError::Kind::BadStructure, "parse mode needs the expected string");
    if (!row_matches(v.trace.final_row, *expected)) {
      v.accepted = false;
      v.diagnostics.push_back({-1, "comb", "word-order",
                               "final comb " + row_string(v.trace.final_row) + " differs from " +
                                   spaced(expected->term)});
    }
  }
  return v;
}

std::string trace_text(const Trace& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const auto& s = t.steps[i];
    os << i + 1 << ". " << rule_name(s.rule, s.mode) << ' ';
    for (std::size_t j = 0; j < s.consumed.size(); ++j) os << (j ? "," : "") << 'e' << s.consumed[j];
    os << " => e" << s.produced << ' ' << row_string(s.row) << " -> #" << s.conclusion << '\n';
  }
  return os.str();
}

std::string trace_latex(const Trace& t) {
  auto rule = [](const Step& s) {
    std::string m = s.mode.kind() == Mode::Kind::First ? ">" : s.mode.kind() == Mode::Kind::Last ? "<"
                                                                                                  : std::to_string(s.mode.index());
    switch (s.rule) {
      case RuleKind::Plus: return std::string("[+]");
      case RuleKind::Insert: return "[\\times_{" + m + "}]";
      case RuleKind::Under: return std::string("[\\backslash]");
      case RuleKind::Over: return std::string("[/]");
      case RuleKind::Prod: return std::string("[\\bullet]");
      case RuleKind::Up: return "[\\uparrow_{" + m + "}]";
      case RuleKind::Down: return "[\\downarrow_{" + m + "}]";
      case RuleKind::Wrap: return "[\\odot_{" + m + "}]";
    }
    return std::string("[?]");
  };
  auto items = [](const std::vector<ApsItem>& row) {
    std::string out;
    for (const auto& it : row) {
      if (!out.empty()) out += "\\;";
      if (it.kind == ApsItem::Kind::Sep)
        out += "\\mathbf{1}";
      else if (it.kind == ApsItem::Kind::Point)
        out += "x_{" + std::to_string(it.point) + "}";
      else
        out += "\\mathit{" + it.word + "}";
    }
    return out.empty() ? std::string("\\epsilon") : out;
  };
  std::ostringstream os;
  os << "\\begin{enumerate}\n";
  for (const auto& s : t.steps)
    os << "  \\item $" << rule(s) << "$: $" << items(s.row) << " \\rightarrow x_{" << s.conclusion << "}$\n";
  os << "\\end{enumerate}\n";
  return os.str();
}

}  // namespace dispnet

#include <algorithm>
#include <map>
#include <set>

#include "dispnet/nd.hpp"
#include "nd_util.hpp"

namespace dispnet {

// ---- natural deduction to proof structure ----
namespace {

class NetBuilder {
 public:
  ProofStructure ps;
  std::map<int, std::pair<int, StringTerm>> free;  // antecedent position -> vertex, string
  int logical = 0;

  int build(const NDProof& p) {
    switch (p.rule) {
      case NDRule::Hyp: {
        int v = ps.add_vertex(p.formula);
        ps.vertices[v].hypothesis = p.index;
        free[p.index] = {v, p.term};
        return v;
      }
      case NDRule::Dis: {
        int v = ps.add_vertex(p.formula);
        dis_[{p.index, p.slot}] = v;
        return v;
      }
      case NDRule::UnderE:
      case NDRule::OverE:
      case NDRule::UpE:
      case NDRule::DownE: {
        int a = build(p.children[0]);
        int b = build(p.children[1]);
        int c = ps.add_vertex(p.formula);
        Connective conn = p.children[p.rule == NDRule::UnderE || p.rule == NDRule::DownE ? 1 : 0].formula.connective();
        ps.links.push_back({false, {conn, Side::Left, p.mode}, {a, b}, {c}, -1});
        return c;
      }
      case NDRule::ProdI:
      case NDRule::WrapI: {
        int a = build(p.children[0]);
        int b = build(p.children[1]);
        int c = ps.add_vertex(p.formula);
        ps.links.push_back({false, {p.formula.connective(), Side::Right, p.mode}, {a, b}, {c}, -1});
        return c;
      }
      case NDRule::UnderI:
      case NDRule::OverI:
      case NDRule::UpI:
      case NDRule::DownI: {
        int c = build(p.children[0]);
        int m = ps.add_vertex(p.formula);
        int aux = dis_.at({p.index, 0});
        Connective conn = p.formula.connective();
        bool arg_left = conn == Connective::Under || conn == Connective::Down;
        std::vector<int> concl = arg_left ? std::vector<int>{aux, m} : std::vector<int>{m, aux};
        ps.links.push_back({true, {conn, Side::Right, p.mode}, {c}, concl, m});
        ++logical;
        return m;
      }
      case NDRule::ProdE:
      case NDRule::WrapE: {
        int major = build(p.children[0]);
        int c = build(p.children[1]);
        int a = dis_.at({p.index, 0}), b = dis_.at({p.index, 1});
        ps.links.push_back({true, {p.children[0].formula.connective(), Side::Left, p.mode}, {major}, {a, b}, major});
        ++logical;
        return c;
      }
    }
    return -1;
  }

 private:
  std::map<std::pair<int, int>, int> dis_;
};

}  // namespace

NetOfND net_of_nd(const NDProof& p) {
  NetBuilder b;
  int root = b.build(p);
  b.ps.conclusion = root;
  std::vector<HypLabel> labels;
  for (const auto& [k, vt] : b.free) {
    b.ps.hypotheses.push_back(vt.first);
    labels.push_back({vt.second, {}});
  }
  NetOfND out{b.ps, labels, p.formula, {}, b.logical};
  out.trace = contract(to_aps(out.structure, out.labels, out.goal));
  return out;
}

// ---- proof net to natural deduction ----
namespace {

struct Sub {
  std::vector<int> links;
  std::vector<int> hyps;
  int conclusion;
};

struct Component {
  std::set<int> vertices;
  std::vector<int> links;
};

class Extractor {
 public:
  Extractor(const ProofStructure& ps, const std::vector<HypLabel>& labels) : ps_(ps), incident_(ps.vertices.size()) {
    for (std::size_t l = 0; l < ps.links.size(); ++l) {
      for (int v : ps.links[l].premisses) incident_[v].push_back(static_cast<int>(l));
      for (int v : ps.links[l].conclusions) incident_[v].push_back(static_cast<int>(l));
    }
    for (const auto& lab : labels) fresh_.reserve(lab.term);
    for (std::size_t k = 0; k < ps.hypotheses.size(); ++k) {
      int v = ps.hypotheses[k];
      plug_.emplace(v, nd_leaf(static_cast<int>(k), labels[k].term, ps.vertices[v].formula));
    }
  }

  NDProof run(const Sub& sub) {
    if (sub.links.empty()) {
      if (sub.hyps.size() != 1 || sub.hyps[0] != sub.conclusion)
        throw ExtractError("a structure without links must be a single hypothesis");
      return plug_.at(sub.conclusion);
    }
    std::vector<int> pars;
    for (int l : sub.links)
      if (ps_.links[l].par) pars.push_back(l);
    if (!pars.empty()) {
      std::vector<HypLabel> labels;
      for (int h : sub.hyps) labels.push_back({plug_.at(h).term, {}});
      Trace t = contract(to_aps(ps_, sub.links, sub.hyps, labels, sub.conclusion));
      if (!t.comb) throw ExtractError("structure is not a proof net");
      // par links in reverse order of their contraction
      Aps aps = to_aps(ps_, sub.links, sub.hyps, labels, sub.conclusion);
      std::vector<int> order;
      for (auto it = t.steps.rbegin(); it != t.steps.rend(); ++it) {
        if (is_structural(it->rule)) continue;
        for (int e : it->consumed)
          if (e < static_cast<int>(aps.elements.size()) && aps.elements[e].kind == ElementKind::Par)
            order.push_back(aps.elements[e].link);
      }
      for (int p : order)
        if (auto r = split_par(sub, p)) return *r;
      throw ExtractError("no par link splits the structure");
    }
    for (int h : sub.hyps)
      if (auto r = split_hypothesis(sub, h)) return *r;
    if (auto r = split_conclusion(sub)) return *r;
    throw ExtractError("no tensor link splits the structure");
  }

 private:
  Component component(const Sub& sub, int removed, int start) const {
    std::set<int> in_sub(sub.links.begin(), sub.links.end());
    in_sub.erase(removed);
    Component c;
    std::set<int> seen_links;
    std::vector<int> stack{start};
    c.vertices.insert(start);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int l : incident_[v]) {
        if (!in_sub.count(l) || !seen_links.insert(l).second) continue;
        c.links.push_back(l);
        const auto& link = ps_.links[l];
        for (const auto* side : {&link.premisses, &link.conclusions})
          for (int w : *side)
            if (c.vertices.insert(w).second) stack.push_back(w);
      }
    }
    std::sort(c.links.begin(), c.links.end());
    return c;
  }

  static std::vector<int> hyps_in(const Sub& sub, const Component& c) {
    std::vector<int> out;
    for (int h : sub.hyps)
      if (c.vertices.count(h)) out.push_back(h);
    return out;
  }

  std::optional<NDProof> split_par(const Sub& sub, int p) {
    const PSLink& link = ps_.links[p];
    NDProof result{NDRule::Hyp, link.tag.mode, -1, 0, {}, ps_.vertices[link.main].formula, {}};
    if (link.tag.side == Side::Right) {
      int c = link.premisses[0], m = link.main;
      int a = link.conclusions[0] == m ? link.conclusions[1] : link.conclusions[0];
      Component top = component(sub, p, c), bottom = component(sub, p, m);
      if (!top.vertices.count(a) || top.vertices.count(m) || bottom.vertices.count(c) ||
          !bottom.vertices.count(sub.conclusion))
        return std::nullopt;
      int index = next_index_++;
      const Formula& fa = ps_.vertices[a].formula;
      StringTerm alpha = fresh_.term_of_sort(fa.sort());
      plug_.insert_or_assign(a, nd_discharged(index, 0, alpha, fa));
      auto top_hyps = hyps_in(sub, top);
      top_hyps.push_back(a);
      NDProof body = run({top.links, top_hyps, c});
      const StringTerm& s = body.term;
      std::optional<StringTerm> gamma;
      switch (link.tag.connective) {
        case Connective::Under:
          if (has_prefix(s, alpha)) gamma = slice(s, alpha.size(), s.size());
          result.rule = NDRule::UnderI;
          break;
        case Connective::Over:
          if (has_suffix(s, alpha)) gamma = slice(s, 0, s.size() - alpha.size());
          result.rule = NDRule::OverI;
          break;
        case Connective::Up:
          gamma = solve_infix(s, link.tag.mode, alpha);
          result.rule = NDRule::UpI;
          break;
        case Connective::Down:
          gamma = solve_circumfix(alpha, link.tag.mode, s);
          result.rule = NDRule::DownI;
          break;
        default: return std::nullopt;
      }
      if (!gamma) throw ExtractError("subproof string " + to_string(s) + " does not fit the discharged " + to_string(alpha));
      result.index = index;
      result.term = *gamma;
      result.children.push_back(std::move(body));
      plug_.insert_or_assign(m, std::move(result));
      auto bottom_hyps = hyps_in(sub, bottom);
      bottom_hyps.push_back(m);
      return run({bottom.links, bottom_hyps, sub.conclusion});
    }
    int m = link.main, a = link.conclusions[0], b = link.conclusions[1];
    Component top = component(sub, p, m), bottom = component(sub, p, a);
    if (top.vertices.count(a) || top.vertices.count(b) || !bottom.vertices.count(b) || bottom.vertices.count(m) ||
        !bottom.vertices.count(sub.conclusion))
      return std::nullopt;
    NDProof major = run({top.links, hyps_in(sub, top), m});
    int index = next_index_++;
    const Formula &fa = ps_.vertices[a].formula, &fb = ps_.vertices[b].formula;
    StringTerm alpha = fresh_.term_of_sort(fa.sort()), beta = fresh_.term_of_sort(fb.sort());
    plug_.insert_or_assign(a, nd_discharged(index, 0, alpha, fa));
    plug_.insert_or_assign(b, nd_discharged(index, 1, beta, fb));
    bool w = link.tag.connective == Connective::Wrap;
    StringTerm inner = w ? wrap(alpha, link.tag.mode, beta) : alpha + beta;

    // The minor subproof ends at the first vertex below a and b whose string
    // still contains the pattern.
    std::set<int> bottom_links(bottom.links.begin(), bottom.links.end());
    std::vector<std::pair<Component, int>> cuts;
    for (int v : bottom.vertices) {
      if (v == a || v == b) continue;
      if (v == sub.conclusion) {
        cuts.push_back({bottom, v});
        continue;
      }
      int below = -1;
      for (int l : incident_[v])
        if (bottom_links.count(l) && std::count(ps_.links[l].premisses.begin(), ps_.links[l].premisses.end(), v))
          below = l;
      if (below < 0) continue;
      Component upper = component({bottom.links, {}, v}, below, v);
      if (upper.vertices.count(a) && upper.vertices.count(b) && !upper.vertices.count(sub.conclusion))
        cuts.push_back({std::move(upper), v});
    }
    std::stable_sort(cuts.begin(), cuts.end(),
                     [](const auto& x, const auto& y) { return x.first.links.size() < y.first.links.size(); });
    std::string failure = "no vertex below the product hypotheses";
    for (const auto& [upper, c] : cuts) {
      std::vector<int> upper_hyps = hyps_in(sub, upper);
      upper_hyps.push_back(a);
      upper_hyps.push_back(b);
      std::optional<NDProof> attempt;
      try {
        attempt = run({upper.links, upper_hyps, c});
      } catch (const ExtractError& e) {
        failure = e.what();
        continue;
      }
      NDProof& minor = *attempt;
      auto pos = find_sub(minor.term, inner);
      if (!pos) {
        failure = "minor string " + to_string(minor.term) + " lacks " + to_string(inner);
        continue;
      }
      result.rule = w ? NDRule::WrapE : NDRule::ProdE;
      result.index = index;
      result.term = replace_at(minor.term, *pos, inner.size(), major.term);
      result.formula = minor.formula;
      result.children = {major, std::move(minor)};
      if (c == sub.conclusion) return result;
      plug_.insert_or_assign(c, std::move(result));
      std::vector<int> rest_links, rest_hyps;
      for (int l : bottom.links)
        if (std::find(upper.links.begin(), upper.links.end(), l) == upper.links.end()) rest_links.push_back(l);
      for (int h : hyps_in(sub, bottom))
        if (!upper.vertices.count(h)) rest_hyps.push_back(h);
      rest_hyps.push_back(c);
      return run({rest_links, rest_hyps, sub.conclusion});
    }
    throw ExtractError(failure);
  }

  // h is the functor of a tensor L link: split off the argument subproof.
  std::optional<NDProof> split_hypothesis(const Sub& sub, int h) {
    int t = -1;
    for (int l : incident_[h])
      if (std::find(sub.links.begin(), sub.links.end(), l) != sub.links.end()) t = l;
    if (t < 0) return std::nullopt;
    const PSLink& link = ps_.links[t];
    if (link.par || link.tag.side != Side::Left) return std::nullopt;
    Connective conn = link.tag.connective;
    std::size_t functor = conn == Connective::Under || conn == Connective::Down ? 1 : 0;
    if (link.premisses[functor] != h) return std::nullopt;
    int arg = link.premisses[1 - functor], c = link.conclusions[0];
    Component minor = component(sub, t, arg), rest = component(sub, t, c);
    if (minor.vertices.count(c) || minor.vertices.count(h) || rest.vertices.count(h) ||
        !rest.vertices.count(sub.conclusion))
      return std::nullopt;
    NDProof arg_proof = run({minor.links, hyps_in(sub, minor), arg});
    const NDProof& fun = plug_.at(h);
    NDProof node{NDRule::Hyp, link.tag.mode, -1, 0, {}, ps_.vertices[c].formula, {}};
    try {
      switch (conn) {
        case Connective::Under:
          node.rule = NDRule::UnderE;
          node.term = arg_proof.term + fun.term;
          node.children = {arg_proof, fun};
          break;
        case Connective::Over:
          node.rule = NDRule::OverE;
          node.term = fun.term + arg_proof.term;
          node.children = {fun, arg_proof};
          break;
        case Connective::Up:
          node.rule = NDRule::UpE;
          node.term = wrap(fun.term, link.tag.mode, arg_proof.term);
          node.children = {fun, arg_proof};
          break;
        case Connective::Down:
          node.rule = NDRule::DownE;
          node.term = wrap(arg_proof.term, link.tag.mode, fun.term);
          node.children = {arg_proof, fun};
          break;
        default: return std::nullopt;
      }
    } catch (const TermError& e) {
      throw ExtractError(std::string("string of an elimination does not wrap: ") + e.what());
    }
    plug_.insert_or_assign(c, std::move(node));
    auto rest_hyps = hyps_in(sub, rest);
    rest_hyps.push_back(c);
    return run({rest.links, rest_hyps, sub.conclusion});
  }

  std::optional<NDProof> split_conclusion(const Sub& sub) {
    int t = -1;
    for (int l : sub.links)
      for (int v : ps_.links[l].conclusions)
        if (v == sub.conclusion) t = l;
    if (t < 0) return std::nullopt;
    const PSLink& link = ps_.links[t];
    if (link.par || link.tag.side != Side::Right) return std::nullopt;
    int a = link.premisses[0], b = link.premisses[1];
    Component ca = component(sub, t, a), cb = component(sub, t, b);
    if (ca.vertices.count(b)) return std::nullopt;
    NDProof pa = run({ca.links, hyps_in(sub, ca), a});
    NDProof pb = run({cb.links, hyps_in(sub, cb), b});
    bool w = link.tag.connective == Connective::Wrap;
    StringTerm term;
    try {
      term = w ? wrap(pa.term, link.tag.mode, pb.term) : pa.term + pb.term;
    } catch (const TermError& e) {
      throw ExtractError(std::string("string of a product does not wrap: ") + e.what());
    }
    return NDProof{w ? NDRule::WrapI : NDRule::ProdI, link.tag.mode, -1, 0, term,
                   ps_.vertices[sub.conclusion].formula, {pa, pb}};
  }

  const ProofStructure& ps_;
  std::vector<std::vector<int>> incident_;
  std::map<int, NDProof> plug_;
  FreshVariables fresh_;
  int next_index_ = 1;
};

}  // namespace

NDProof extract_nd(const ProofStructure& ps, const std::vector<HypLabel>& labels, const Formula& goal) {
  if (!(ps.vertices.at(ps.conclusion).formula == goal)) throw ExtractError("structure conclusion differs from goal");
  if (labels.size() != ps.hypotheses.size()) throw ExtractError("expected one label per hypothesis");
  Extractor ex(ps, labels);
  std::vector<int> links(ps.links.size());
  for (std::size_t i = 0; i < links.size(); ++i) links[i] = static_cast<int>(i);
  return ex.run({links, ps.hypotheses, ps.conclusion});
}

}  // namespace dispnet

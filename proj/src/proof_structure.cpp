#include "dispnet/proof_structure.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace dispnet {

std::string LinkTag::to_string() const {
  std::string s = side == Side::Left ? "L" : "R";
  switch (connective) {
    case Connective::Over: return s + "/";
    case Connective::Under: return s + "\\";
    case Connective::Prod: return s + "*";
    case Connective::Up: return s + "^" + mode.to_string();
    case Connective::Down: return s + "!" + mode.to_string();
    case Connective::Wrap: return s + "o" + mode.to_string();
    case Connective::Atom: break;
  }
  return s + "?";
}

int ProofStructure::add_vertex(Formula f) {
  vertices.push_back({std::move(f)});
  return static_cast<int>(vertices.size()) - 1;
}

std::vector<int> ProofStructure::producers() const {
  std::vector<int> out(vertices.size(), -1);
  for (std::size_t l = 0; l < links.size(); ++l)
    for (int v : links[l].conclusions) out[v] = static_cast<int>(l);
  return out;
}

std::vector<int> ProofStructure::consumers() const {
  std::vector<int> out(vertices.size(), -1);
  for (std::size_t l = 0; l < links.size(); ++l)
    for (int v : links[l].premisses) out[v] = static_cast<int>(l);
  return out;
}

namespace {

class Unfolder {
 public:
  explicit Unfolder(ProofFrame& frame) : fr_(frame), g_(frame.graph) {}

  void input(int v) {
    Formula f = g_.vertices[v].formula;
    Connective c = f.connective();
    if (c == Connective::Atom) {
      fr_.input_atoms.push_back(v);
      return;
    }
    LinkTag tag{c, Side::Left, f.mode()};
    int l = g_.add_vertex(f.left());
    int r = g_.add_vertex(f.right());
    switch (c) {
      case Connective::Over:  // [C/B, B] -> C
      case Connective::Up:
        g_.links.push_back({false, tag, {v, r}, {l}, -1});
        input(l);
        output(r);
        break;
      case Connective::Under:  // [A, A\C] -> C
      case Connective::Down:
        g_.links.push_back({false, tag, {l, v}, {r}, -1});
        output(l);
        input(r);
        break;
      case Connective::Prod:  // A*B -> [A, B]
      case Connective::Wrap:
        g_.links.push_back({true, tag, {v}, {l, r}, v});
        input(l);
        input(r);
        break;
      case Connective::Atom: break;
    }
  }

  void output(int v) {
    Formula f = g_.vertices[v].formula;
    Connective c = f.connective();
    if (c == Connective::Atom) {
      fr_.output_atoms.push_back(v);
      return;
    }
    LinkTag tag{c, Side::Right, f.mode()};
    int l = g_.add_vertex(f.left());
    int r = g_.add_vertex(f.right());
    switch (c) {
      case Connective::Over:  // C -> [C/B, B]
      case Connective::Up:
        g_.links.push_back({true, tag, {l}, {v, r}, v});
        output(l);
        input(r);
        break;
      case Connective::Under:  // C -> [A, A\C]
      case Connective::Down:
        g_.links.push_back({true, tag, {r}, {l, v}, v});
        input(l);
        output(r);
        break;
      case Connective::Prod:  // [A, B] -> A*B
      case Connective::Wrap:
        g_.links.push_back({false, tag, {l, r}, {v}, -1});
        output(l);
        output(r);
        break;
      case Connective::Atom: break;
    }
  }

 private:
  ProofFrame& fr_;
  ProofStructure& g_;
};

}  // namespace

ProofFrame unfold(const std::vector<Formula>& hypotheses, const Formula& goal) {
  ProofFrame frame;
  auto& g = frame.graph;
  Unfolder u(frame);
  for (std::size_t i = 0; i < hypotheses.size(); ++i) {
    int v = g.add_vertex(hypotheses[i]);
    g.vertices[v].hypothesis = static_cast<int>(i);
    g.hypotheses.push_back(v);
    u.input(v);
  }
  int c = g.add_vertex(goal);
  g.vertices[c].goal = true;
  g.conclusion = c;
  u.output(c);
  return frame;
}

ProofStructure link(const ProofFrame& frame, const std::vector<std::pair<int, int>>& axioms) {
  const auto& g = frame.graph;
  std::vector<int> rep(g.vertices.size());
  for (std::size_t v = 0; v < rep.size(); ++v) rep[v] = static_cast<int>(v);
  for (auto [in, out] : axioms) rep[in] = rep[out] = std::min(in, out);
  std::vector<int> compact(g.vertices.size(), -1);
  ProofStructure ps;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (rep[v] != static_cast<int>(v)) continue;
    compact[v] = ps.add_vertex(g.vertices[v].formula);
  }
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    int c = compact[rep[v]];
    compact[v] = c;
    if (g.vertices[v].hypothesis >= 0) ps.vertices[c].hypothesis = g.vertices[v].hypothesis;
    if (g.vertices[v].goal) ps.vertices[c].goal = true;
  }
  for (const auto& l : g.links) {
    PSLink nl = l;
    for (int& v : nl.premisses) v = compact[v];
    for (int& v : nl.conclusions) v = compact[v];
    if (nl.main >= 0) nl.main = compact[nl.main];
    ps.links.push_back(std::move(nl));
  }
  for (int h : g.hypotheses) ps.hypotheses.push_back(compact[h]);
  ps.conclusion = compact[g.conclusion];
  ps.axioms = axioms;
  return ps;
}

LinkingEnumerator::LinkingEnumerator(const ProofFrame& frame) : frame_(frame) {
  std::map<std::string, Group> by_atom;
  for (int v : frame.input_atoms) by_atom[frame.graph.vertices[v].formula.name()].inputs.push_back(v);
  for (int v : frame.output_atoms) by_atom[frame.graph.vertices[v].formula.name()].outputs.push_back(v);
  total_ = 1;
  for (auto& [atom, grp] : by_atom) {
    if (grp.inputs.size() != grp.outputs.size()) {
      mismatches_.push_back({atom, static_cast<int>(grp.inputs.size()), static_cast<int>(grp.outputs.size())});
      continue;
    }
    std::sort(grp.inputs.begin(), grp.inputs.end());
    std::sort(grp.outputs.begin(), grp.outputs.end());
    grp.perm.resize(grp.inputs.size());
    for (std::size_t i = 0; i < grp.perm.size(); ++i) {
      grp.perm[i] = static_cast<int>(i);
      total_ *= i + 1;
    }
    groups_.push_back(std::move(grp));
  }
  if (!mismatches_.empty()) {
    total_ = 0;
    done_ = true;
  }
}

ProofStructure LinkingEnumerator::build() const {
  std::vector<std::pair<int, int>> axioms;
  for (const auto& grp : groups_)
    for (std::size_t i = 0; i < grp.outputs.size(); ++i) axioms.emplace_back(grp.inputs[grp.perm[i]], grp.outputs[i]);
  return link(frame_, axioms);
}

std::optional<ProofStructure> LinkingEnumerator::next() {
  if (done_) return std::nullopt;
  ProofStructure ps = build();
  ++produced_;
  // advance the odometer, last group fastest
  std::size_t g = groups_.size();
  while (true) {
    if (g == 0) {
      done_ = true;
      break;
    }
    --g;
    if (std::next_permutation(groups_[g].perm.begin(), groups_[g].perm.end())) break;
  }
  return ps;
}

std::string dump(const ProofStructure& ps) {
  std::ostringstream os;
  auto list = [&](const std::vector<int>& vs) {
    os << '[';
    for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? " " : "") << 'v' << vs[i];
    os << ']';
  };
  for (const auto& l : ps.links) {
    os << (l.par ? "par " : "tensor ") << l.tag.to_string() << ' ';
    list(l.premisses);
    os << " -> ";
    list(l.conclusions);
    if (l.par) os << " main=v" << l.main;
    os << '\n';
  }
  return os.str();
}

}  // namespace dispnet

#include "dispnet/aps.hpp"

#include <algorithm>
#include <sstream>

namespace dispnet {

int Aps::alive_count() const {
  return static_cast<int>(std::count_if(elements.begin(), elements.end(), [](const ApsElement& e) { return e.alive; }));
}

int Aps::add_point(int sort, int vertex) {
  ApsPoint p;
  p.sort = sort;
  p.vertex = vertex;
  points.push_back(p);
  return static_cast<int>(points.size()) - 1;
}

int Aps::add_element(ApsElement e) {
  elements.push_back(std::move(e));
  return static_cast<int>(elements.size()) - 1;
}

namespace {

bool uses_comb(const PSLink& l) {
  return !l.par && (l.tag.connective == Connective::Under || l.tag.connective == Connective::Over ||
                    l.tag.connective == Connective::Prod);
}

}  // namespace

Aps to_aps(const ProofStructure& ps, const std::vector<int>& links, const std::vector<int>& hypotheses,
           const std::vector<HypLabel>& labels, int conclusion) {
  if (labels.size() != hypotheses.size())
    throw ApsError(ApsError::Kind::BadStructure, "expected one string label per hypothesis");
  Aps aps;
  for (const auto& v : ps.vertices) aps.add_point(v.formula.sort(), static_cast<int>(&v - ps.vertices.data()));
  aps.conclusion = conclusion;

  std::vector<int> trivial;  // single-item combs created here
  int next_origin = 0;
  for (std::size_t h = 0; h < hypotheses.size(); ++h) {
    int v = hypotheses[h];
    const auto& label = labels[h];
    if (label.term.sort() != ps.vertices[v].formula.sort())
      throw ApsError(ApsError::Kind::SortMismatch,
                     "string '" + to_string(label.term) + "' has sort " + std::to_string(label.term.sort()) +
                         " but formula " + to_string(ps.vertices[v].formula) + " has sort " +
                         std::to_string(ps.vertices[v].formula.sort()));
    ApsElement comb;
    std::size_t w = 0;
    for (const auto& it : label.term.items()) {
      if (it.is_sep()) {
        comb.row.push_back(ApsItem::sep());
      } else {
        int origin = w < label.origins.size() ? label.origins[w] : 1000000 + next_origin;
        ++next_origin;
        ++w;
        comb.row.push_back(ApsItem::make_word(it.word, origin));
      }
    }
    comb.conclusion = v;
    int id = aps.add_element(std::move(comb));
    if (aps.elements[id].row.size() == 1 && label.term.sort() == 0) trivial.push_back(id);
  }

  auto tether_comb = [&](int par, int aux, int block, std::vector<int>& tethers) {
    ApsElement comb;
    int n = ps.vertices[aux].formula.sort();
    for (int i = 0; i <= n; ++i) {
      int t = aps.add_point(0);
      aps.points[t].par = par;
      aps.points[t].block = block;
      aps.points[t].position = i;
      tethers.push_back(t);
      if (i) comb.row.push_back(ApsItem::sep());
      comb.row.push_back(ApsItem::make_point(t));
    }
    comb.conclusion = aux;
    int id = aps.add_element(std::move(comb));
    if (n == 0) trivial.push_back(id);
  };

  for (int li : links) {
    const PSLink& l = ps.links[li];
    if (uses_comb(l)) {
      ApsElement comb;
      append_point(aps, comb.row, l.premisses[0]);
      append_point(aps, comb.row, l.premisses[1]);
      comb.conclusion = l.conclusions[0];
      comb.link = li;
      aps.add_element(std::move(comb));
    } else if (!l.par) {
      ApsElement w;
      w.kind = ElementKind::Wrap;
      w.mode = l.tag.mode;
      w.left = l.premisses[0];
      w.right = l.premisses[1];
      w.conclusion = l.conclusions[0];
      w.link = li;
      aps.add_element(std::move(w));
    } else {
      ApsElement p;
      p.kind = ElementKind::Par;
      p.connective = l.tag.connective;
      p.mode = l.tag.mode;
      p.main = l.main;
      p.link = li;
      int id = aps.add_element(std::move(p));
      if (l.tag.side == Side::Right) {
        aps.elements[id].premiss = l.premisses[0];
        int aux = l.conclusions[0] == l.main ? l.conclusions[1] : l.conclusions[0];
        std::vector<int> tethers;
        tether_comb(id, aux, 0, tethers);
        aps.elements[id].tethers = tethers;
      } else {
        std::vector<int> ta, tb;
        tether_comb(id, l.conclusions[0], 0, ta);
        tether_comb(id, l.conclusions[1], 1, tb);
        aps.elements[id].tethers = ta;
        aps.elements[id].tethers_b = tb;
      }
    }
  }

  // Single-item combs feeding a comb are spliced into it right away.
  std::vector<int> consumer(aps.points.size(), -1);
  for (std::size_t e = 0; e < aps.elements.size(); ++e)
    if (aps.elements[e].kind == ElementKind::Comb)
      for (const auto& it : aps.elements[e].row)
        if (it.kind == ApsItem::Kind::Point) consumer[it.point] = static_cast<int>(e);
  for (int t : trivial) {
    auto& comb = aps.elements[t];
    int user = consumer[comb.conclusion];
    if (user < 0 || user == t) continue;
    for (auto& it : aps.elements[user].row) {
      if (it.kind == ApsItem::Kind::Point && it.point == comb.conclusion) {
        it = comb.row[0];
        if (it.kind == ApsItem::Kind::Point) consumer[it.point] = user;
        break;
      }
    }
    comb.alive = false;
  }
  return aps;
}

Aps to_aps(const ProofStructure& ps, const std::vector<HypLabel>& labels, const Formula& goal) {
  if (!(ps.vertices.at(ps.conclusion).formula == goal))
    throw ApsError(ApsError::Kind::BadStructure, "structure conclusion is " +
                                                     to_string(ps.vertices[ps.conclusion].formula) + ", expected " +
                                                     to_string(goal));
  std::vector<int> links(ps.links.size());
  for (std::size_t i = 0; i < links.size(); ++i) links[i] = static_cast<int>(i);
  return to_aps(ps, links, ps.hypotheses, labels, ps.conclusion);
}

void append_point(const Aps& aps, std::vector<ApsItem>& row, int point) {
  int n = aps.points[point].sort;
  if (n == 0) {
    row.push_back(ApsItem::make_point(point));
    return;
  }
  for (int i = 0; i <= n; ++i) {
    if (i) row.push_back(ApsItem::sep());
    row.push_back(ApsItem::make_piece(point, i));
  }
}

std::string to_string(const ApsItem& item) {
  switch (item.kind) {
    case ApsItem::Kind::Point:
      return "#" + std::to_string(item.point) + (item.split ? "." + std::to_string(item.piece) : "");
    case ApsItem::Kind::Sep: return "1";
    case ApsItem::Kind::Word: return item.word;
  }
  return "?";
}

std::string row_string(const std::vector<ApsItem>& row) {
  std::string out = "[";
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ' ';
    out += to_string(row[i]);
  }
  return out + "]";
}

int row_sort(const std::vector<ApsItem>& row, std::size_t begin, std::size_t end) {
  return static_cast<int>(
      std::count_if(row.begin() + begin, row.begin() + end, [](const ApsItem& i) { return i.kind == ApsItem::Kind::Sep; }));
}

std::string serialize(const Aps& aps) {
  std::ostringstream os;
  auto plist = [&](const std::vector<int>& ps) {
    os << '[';
    for (std::size_t i = 0; i < ps.size(); ++i) os << (i ? " " : "") << '#' << ps[i];
    os << ']';
  };
  for (std::size_t p = 0; p < aps.points.size(); ++p) {
    const auto& pt = aps.points[p];
    os << "point #" << p << " sort " << pt.sort;
    if (pt.vertex >= 0)
      os << " vertex v" << pt.vertex;
    else if (pt.par >= 0)
      os << " tether e" << pt.par << '.' << pt.block << '.' << pt.position;
    os << '\n';
  }
  for (std::size_t e = 0; e < aps.elements.size(); ++e) {
    const auto& el = aps.elements[e];
    if (!el.alive) continue;
    os << 'e' << e << ' ';
    switch (el.kind) {
      case ElementKind::Comb: os << "comb " << row_string(el.row) << " -> #" << el.conclusion; break;
      case ElementKind::Wrap:
        os << "wrap x" << el.mode.to_string() << " #" << el.left << " #" << el.right << " -> #" << el.conclusion;
        break;
      case ElementKind::Par: {
        LinkTag tag{el.connective, el.premiss >= 0 ? Side::Right : Side::Left, el.mode};
        os << "par " << tag.to_string().substr(1);
        if (el.premiss >= 0) os << " premiss #" << el.premiss;
        os << " main #" << el.main << " tethers ";
        plist(el.tethers);
        if (el.premiss < 0) {
          os << ' ';
          plist(el.tethers_b);
        }
        break;
      }
    }
    os << '\n';
  }
  os << "conclusion #" << aps.conclusion << '\n';
  return os.str();
}

}  // namespace dispnet

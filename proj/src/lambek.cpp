#include <unordered_map>

#include "dispnet/nd.hpp"

namespace dispnet {

namespace {

struct Node {
  Connective conn;
  int left = -1, right = -1;
  int atom = -1;
};

class LambekSearch {
 public:
  // Hash-consed: structurally equal formulas get the same id.
  int intern(const Formula& f) {
    Node n{f.connective()};
    std::string key;
    if (f.is_atom()) {
      key = "a" + f.name();
    } else {
      if (is_discontinuous(f.connective()))
        throw FormulaError("the Lambek oracle does not handle " + to_string(f));
      n.left = intern(f.left());
      n.right = intern(f.right());
      key = std::to_string(static_cast<int>(n.conn)) + ":" + std::to_string(n.left) + ":" + std::to_string(n.right);
    }
    auto [it, fresh] = ids_.emplace(key, static_cast<int>(nodes_.size()));
    if (fresh) {
      n.atom = f.is_atom() ? it->second : -1;
      nodes_.push_back(n);
    }
    return it->second;
  }

  bool prove(const std::vector<int>& gamma, int c) {
    std::string key;
    key.reserve(4 * (gamma.size() + 1));
    auto put = [&](int v) { key.append(reinterpret_cast<const char*>(&v), sizeof v); };
    for (int g : gamma) put(g);
    put(-1);
    put(c);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool r = search(gamma, c);
    memo_.emplace(std::move(key), r);
    return r;
  }

 private:
  bool search(const std::vector<int>& gamma, int c) {
    const Node& goal = nodes_[c];
    if (goal.conn == Connective::Atom && gamma.size() == 1) {
      const Node& h = nodes_[gamma[0]];
      if (h.conn == Connective::Atom && h.atom == goal.atom) return true;
    }
    switch (goal.conn) {
      case Connective::Under: {  // A\C: prove A, Gamma => C
        std::vector<int> g{goal.left};
        g.insert(g.end(), gamma.begin(), gamma.end());
        if (prove(g, goal.right)) return true;
        break;
      }
      case Connective::Over: {  // C/B: prove Gamma, B => C
        std::vector<int> g = gamma;
        g.push_back(goal.right);
        if (prove(g, goal.left)) return true;
        break;
      }
      case Connective::Prod:
        for (std::size_t i = 0; i <= gamma.size(); ++i) {
          std::vector<int> a(gamma.begin(), gamma.begin() + i), b(gamma.begin() + i, gamma.end());
          if (prove(a, goal.left) && prove(b, goal.right)) return true;
        }
        break;
      default: break;
    }
    for (std::size_t j = 0; j < gamma.size(); ++j) {
      const Node& h = nodes_[gamma[j]];
      switch (h.conn) {
        case Connective::Prod: {
          std::vector<int> g(gamma.begin(), gamma.begin() + j);
          g.push_back(h.left);
          g.push_back(h.right);
          g.insert(g.end(), gamma.begin() + j + 1, gamma.end());
          if (prove(g, c)) return true;
          break;
        }
        case Connective::Under:  // Delta, A\C with Delta => A
          for (std::size_t i = 0; i <= j; ++i) {
            std::vector<int> delta(gamma.begin() + i, gamma.begin() + j);
            if (!prove(delta, h.left)) continue;
            std::vector<int> g(gamma.begin(), gamma.begin() + i);
            g.push_back(h.right);
            g.insert(g.end(), gamma.begin() + j + 1, gamma.end());
            if (prove(g, c)) return true;
          }
          break;
        case Connective::Over:  // C/B, Delta with Delta => B
          for (std::size_t k = j + 1; k <= gamma.size(); ++k) {
            std::vector<int> delta(gamma.begin() + j + 1, gamma.begin() + k);
            if (!prove(delta, h.right)) continue;
            std::vector<int> g(gamma.begin(), gamma.begin() + j);
            g.push_back(h.left);
            g.insert(g.end(), gamma.begin() + k, gamma.end());
            if (prove(g, c)) return true;
          }
          break;
        default: break;
      }
    }
    return false;
  }

  std::vector<Node> nodes_;
  std::unordered_map<std::string, int> ids_;
  std::unordered_map<std::string, bool> memo_;
};

}  // namespace

bool lambek_derivable(const std::vector<Formula>& antecedent, const Formula& goal) {
  LambekSearch s;
  std::vector<int> gamma;
  for (const auto& f : antecedent) gamma.push_back(s.intern(f));
  int c = s.intern(goal);
  return s.prove(gamma, c);
}

}  // namespace dispnet

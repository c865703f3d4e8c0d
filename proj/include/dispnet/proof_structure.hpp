// Proof frames, axiom linkings and proof structures.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dispnet/formula.hpp"

namespace dispnet {

enum class Side { Left, Right };

struct LinkTag {
  Connective connective = Connective::Prod;
  Side side = Side::Left;
  Mode mode = Mode::first();

  std::string to_string() const;  // e.g. "L\", "R^>", "Lo2"
  friend bool operator==(const LinkTag&, const LinkTag&) = default;
};

struct PSVertex {
  Formula formula;
  int hypothesis = -1;  // index into the sequent antecedent, if any
  bool goal = false;
};

struct PSLink {
  bool par = false;
  LinkTag tag;
  std::vector<int> premisses;
  std::vector<int> conclusions;
  int main = -1;  // par links only
};

// A graph of formula occurrences. Before axiom linking it is a proof frame;
// after linking each vertex is premiss of at most one link and conclusion of
// at most one link.
struct ProofStructure {
  std::vector<PSVertex> vertices;
  std::vector<PSLink> links;
  std::vector<int> hypotheses;  // in antecedent order
  int conclusion = -1;
  // Frame vertex ids identified by the linking, as (input atom, output atom).
  std::vector<std::pair<int, int>> axioms;

  int add_vertex(Formula f);
  std::vector<int> producers() const;  // vertex -> link concluding it, or -1
  std::vector<int> consumers() const;  // vertex -> link using it as premiss, or -1
};

// Unfolded frame with its unlinked atoms split by polarity: input atoms are
// hypotheses or link conclusions, output atoms are link premisses or the goal.
struct ProofFrame {
  ProofStructure graph;
  std::vector<int> input_atoms;
  std::vector<int> output_atoms;
};

ProofFrame unfold(const std::vector<Formula>& hypotheses, const Formula& goal);

struct CountMismatch {
  std::string atom;
  int inputs = 0;
  int outputs = 0;
};

// Lazily enumerates the perfect matchings between input and output atoms of
// equal name, lexicographically by vertex id.
class LinkingEnumerator {
 public:
  explicit LinkingEnumerator(const ProofFrame& frame);
  const std::vector<CountMismatch>& mismatches() const { return mismatches_; }
  std::uint64_t total() const { return total_; }
  std::optional<ProofStructure> next();
  // Linking index of the structure last returned by next(), 0-based.
  std::uint64_t index() const { return produced_ - 1; }

 private:
  ProofStructure build() const;

  const ProofFrame& frame_;
  std::vector<CountMismatch> mismatches_;
  struct Group {
    std::vector<int> inputs, outputs;
    std::vector<int> perm;  // perm[i]: input matched with outputs[i]
  };
  std::vector<Group> groups_;
  std::uint64_t total_ = 0;
  std::uint64_t produced_ = 0;
  bool done_ = false;
};

ProofStructure link(const ProofFrame& frame, const std::vector<std::pair<int, int>>& axioms);

// One line per link: "kind tag [premisses] -> [conclusions] main=v?".
std::string dump(const ProofStructure& ps);

}  // namespace dispnet

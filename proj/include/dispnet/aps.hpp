// Abstract proof structures: combs, wrap links and par links over points.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "dispnet/proof_structure.hpp"
#include "dispnet/terms.hpp"

namespace dispnet {

// A point of sort n occupies a row as pieces 0..n, initially separated by
// n separators; a wrap may later fill those separators.
struct ApsItem {
  enum class Kind { Point, Sep, Word };
  Kind kind = Kind::Sep;
  int point = -1;
  std::string word;
  int origin = -1;  // identity of the lexical word occurrence
  int piece = 0;
  bool split = false;  // point of sort > 0

  static ApsItem make_point(int p) { return {Kind::Point, p, {}, -1, 0, false}; }
  static ApsItem make_piece(int p, int piece) { return {Kind::Point, p, {}, -1, piece, true}; }
  static ApsItem sep() { return {Kind::Sep, -1, {}, -1, 0, false}; }
  static ApsItem make_word(std::string w, int origin) { return {Kind::Word, -1, std::move(w), origin, 0, false}; }
  friend bool operator==(const ApsItem&, const ApsItem&) = default;
};

struct ApsPoint {
  int sort = 0;
  int vertex = -1;  // proof structure vertex, or -1 for a tether
  int par = -1;     // owning par element, for tethers
  int block = 0;    // 0: first (or only) tether block, 1: second block of a product
  int position = 0;
};

enum class ElementKind { Comb, Wrap, Par };

struct ApsElement {
  ElementKind kind = ElementKind::Comb;
  bool alive = true;
  int link = -1;        // proof structure link it stems from
  int conclusion = -1;  // combs and wrap links
  std::vector<ApsItem> row;
  // wrap links: left is the wrapper, right is inserted at the separator
  Mode mode = Mode::first();
  int left = -1, right = -1;
  // par links; for products main is the premiss and there is no premiss field
  Connective connective = Connective::Prod;
  int premiss = -1;
  int main = -1;
  std::vector<int> tethers;    // tethers of the implication argument, or of A
  std::vector<int> tethers_b;  // tethers of B (products only)
};

struct Aps {
  std::vector<ApsPoint> points;
  std::vector<ApsElement> elements;
  int conclusion = -1;

  int alive_count() const;
  int add_point(int sort, int vertex = -1);
  int add_element(ApsElement e);
};

// String label of an antecedent formula. Empty origins means each word gets a
// fresh origin.
struct HypLabel {
  StringTerm term;
  std::vector<int> origins;
};

class ApsError : public std::runtime_error {
 public:
  enum class Kind { SortMismatch, BadStructure };
  ApsError(Kind k, const std::string& what) : std::runtime_error(what), kind_(k) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

Aps to_aps(const ProofStructure& ps, const std::vector<HypLabel>& labels, const Formula& goal);

// Conversion of the part of ps made of the given links, with the given
// hypothesis vertices (labelled in the same order) and conclusion vertex.
Aps to_aps(const ProofStructure& ps, const std::vector<int>& links, const std::vector<int>& hypotheses,
           const std::vector<HypLabel>& labels, int conclusion);

// Pieces 0..sort of the point, separated by separators.
void append_point(const Aps& aps, std::vector<ApsItem>& row, int point);

std::string to_string(const ApsItem& item);
std::string row_string(const std::vector<ApsItem>& row);
int row_sort(const std::vector<ApsItem>& row, std::size_t begin, std::size_t end);
std::string serialize(const Aps& aps);

}  // namespace dispnet

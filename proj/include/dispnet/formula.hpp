// Displacement calculus formulas, signatures and sort checking.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dispnet/terms.hpp"

namespace dispnet {

enum class Connective { Atom, Over, Under, Prod, Up, Down, Wrap };

bool is_discontinuous(Connective c);

// Immutable, shared formula tree. Binary nodes keep their operands in
// textual order: C/B has left C, right B; A\C has left A, right C;
// C^kB has left C, right B; A!kC has left A, right C.
class Formula {
 public:
  static Formula atom(std::string name, int sort);
  static Formula binary(Connective c, Formula left, Formula right, Mode mode = Mode::first());
  static Formula over(Formula c, Formula b) { return binary(Connective::Over, std::move(c), std::move(b)); }
  static Formula under(Formula a, Formula c) { return binary(Connective::Under, std::move(a), std::move(c)); }
  static Formula prod(Formula a, Formula b) { return binary(Connective::Prod, std::move(a), std::move(b)); }
  static Formula up(Formula c, Formula b, Mode k) { return binary(Connective::Up, std::move(c), std::move(b), k); }
  static Formula down(Formula a, Formula c, Mode k) { return binary(Connective::Down, std::move(a), std::move(c), k); }
  static Formula wrap(Formula a, Formula b, Mode k) { return binary(Connective::Wrap, std::move(a), std::move(b), k); }

  Connective connective() const;
  bool is_atom() const { return connective() == Connective::Atom; }
  const std::string& name() const;
  const Formula& left() const;
  const Formula& right() const;
  Mode mode() const;
  // Sort computed bottom-up at construction; negative when ill-sorted.
  int sort() const;
  int connective_count() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator<(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Connective conn;
  std::string name;
  std::optional<Formula> left, right;
  Mode mode = Mode::first();
  int sort = 0;
  int size = 0;
};

class Signature {
 public:
  void declare(const std::string& atom, int sort);
  std::optional<int> find(const std::string& atom) const;
  const std::map<std::string, int>& atoms() const { return sorts_; }
  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::map<std::string, int> sorts_;
};

class FormulaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SortViolation {
  std::string subformula;
  std::string message;
};

int sort_of_formula(const Formula& f, const Signature& sig);
std::vector<SortViolation> well_sorted(const Formula& f, const Signature& sig);
std::vector<SortViolation> well_sorted(const Formula& f);

Formula parse_formula(std::string_view text, const Signature& sig);
std::string to_string(const Formula& f);
std::string latex(const Formula& f);

// "atom sort" per line; '#' starts a comment.
Signature load_signature(std::string_view text);

}  // namespace dispnet

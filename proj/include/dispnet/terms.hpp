// String terms over words and the separator, with concatenation and wrapping.
#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dispnet {

// Which separator a wrap (or a discontinuous connective) targets.
class Mode {
 public:
  enum class Kind { First, Last, At };

  static Mode first() { return Mode(Kind::First, 0); }
  static Mode last() { return Mode(Kind::Last, 0); }
  static Mode at(int n);

  Kind kind() const { return kind_; }
  int index() const { return n_; }

  // 1-based position of the targeted separator in a term of the given sort,
  // or 0 when the term has no such separator.
  int resolve(int sort) const;

  std::string to_string() const;  // ">", "<" or the decimal index
  static Mode parse(std::string_view text);

  friend bool operator==(const Mode&, const Mode&) = default;
  friend auto operator<=>(const Mode&, const Mode&) = default;

 private:
  Mode(Kind k, int n) : kind_(k), n_(n) {}
  Kind kind_;
  int n_;
};

struct TermItem {
  enum class Kind { Word, Sep };
  Kind kind = Kind::Sep;
  std::string word;

  static TermItem sep() { return {Kind::Sep, {}}; }
  static TermItem make_word(std::string w) { return {Kind::Word, std::move(w)}; }
  bool is_sep() const { return kind == Kind::Sep; }

  friend bool operator==(const TermItem&, const TermItem&) = default;
  friend auto operator<=>(const TermItem&, const TermItem&) = default;
};

class StringTerm {
 public:
  StringTerm() = default;
  explicit StringTerm(std::vector<TermItem> items) : items_(std::move(items)) {}

  static StringTerm word(std::string w);
  static StringTerm separator();

  const std::vector<TermItem>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  int sort() const;

  // Words between consecutive separators; a term of sort n has n+1 segments.
  std::vector<std::vector<std::string>> segments() const;

  friend bool operator==(const StringTerm&, const StringTerm&) = default;
  friend auto operator<=>(const StringTerm&, const StringTerm&) = default;

 private:
  std::vector<TermItem> items_;
};

class TermError : public std::runtime_error {
 public:
  enum class Kind { WrapOnSortZero, IndexOutOfRange, Syntax };
  TermError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

int sort_of_string(const StringTerm& t);
StringTerm concat(const StringTerm& a, const StringTerm& b);
StringTerm operator+(const StringTerm& a, const StringTerm& b);

// Replaces the separator of alpha selected by k with beta.
StringTerm wrap(const StringTerm& alpha, Mode k, const StringTerm& beta);

// Index into items() of the separator selected by k, or -1.
int separator_position(const StringTerm& t, Mode k);

// Textual syntax: items joined by '+', separator written 1, empty term written _.
StringTerm parse_term(std::string_view text);
std::string to_string(const StringTerm& t);
// Words joined by spaces, separators shown as 1.
std::string spaced(const StringTerm& t);

bool is_word_token(std::string_view w);

// Variables for hypotheses introduced during proof search: p0, p1, ...
// skipping names reserved by the input.
class FreshVariables {
 public:
  FreshVariables() = default;
  explicit FreshVariables(std::set<std::string> reserved) : reserved_(std::move(reserved)) {}
  void reserve(const std::string& w) { reserved_.insert(w); }
  void reserve(const StringTerm& t);
  std::string next();
  // p_i + 1 + ... + 1 + p_j with sort separators.
  StringTerm term_of_sort(int sort);

 private:
  std::set<std::string> reserved_;
  int counter_ = 0;
};

}  // namespace dispnet

#include "dispnet/terms.hpp"

#include <algorithm>
#include <cctype>

namespace dispnet {

Mode Mode::at(int n) {
  if (n < 1) throw TermError(TermError::Kind::IndexOutOfRange, "wrap index must be >= 1");
  return Mode(Kind::At, n);
}

int Mode::resolve(int sort) const {
  if (sort < 1) return 0;
  switch (kind_) {
    case Kind::First: return 1;
    case Kind::Last: return sort;
    case Kind::At: return n_ <= sort ? n_ : 0;
  }
  return 0;
}

std::string Mode::to_string() const {
  switch (kind_) {
    case Kind::First: return ">";
    case Kind::Last: return "<";
    case Kind::At: return std::to_string(n_);
  }
  return "?";
}

Mode Mode::parse(std::string_view text) {
  if (text == ">") return first();
  if (text == "<") return last();
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw TermError(TermError::Kind::Syntax, "bad wrap mode '" + std::string(text) + "'");
  return at(std::stoi(std::string(text)));
}

StringTerm StringTerm::word(std::string w) { return StringTerm({TermItem::make_word(std::move(w))}); }
StringTerm StringTerm::separator() { return StringTerm({TermItem::sep()}); }

int StringTerm::sort() const {
  return static_cast<int>(std::count_if(items_.begin(), items_.end(), [](const TermItem& i) { return i.is_sep(); }));
}

std::vector<std::vector<std::string>> StringTerm::segments() const {
  std::vector<std::vector<std::string>> out(1);
  for (const auto& it : items_) {
    if (it.is_sep())
      out.emplace_back();
    else
      out.back().push_back(it.word);
  }
  return out;
}

int sort_of_string(const StringTerm& t) { return t.sort(); }

StringTerm concat(const StringTerm& a, const StringTerm& b) {
  std::vector<TermItem> items = a.items();
  items.insert(items.end(), b.items().begin(), b.items().end());
  return StringTerm(std::move(items));
}

StringTerm operator+(const StringTerm& a, const StringTerm& b) { return concat(a, b); }

int separator_position(const StringTerm& t, Mode k) {
  int target = k.resolve(t.sort());
  if (target == 0) return -1;
  int seen = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.items()[i].is_sep() && ++seen == target) return static_cast<int>(i);
  }
  return -1;
}

StringTerm wrap(const StringTerm& alpha, Mode k, const StringTerm& beta) {
  if (alpha.sort() == 0) throw TermError(TermError::Kind::WrapOnSortZero, "cannot wrap around a term of sort 0");
  int pos = separator_position(alpha, k);
  if (pos < 0)
    throw TermError(TermError::Kind::IndexOutOfRange,
                    "wrap index " + k.to_string() + " exceeds sort " + std::to_string(alpha.sort()));
  std::vector<TermItem> items(alpha.items().begin(), alpha.items().begin() + pos);
  items.insert(items.end(), beta.items().begin(), beta.items().end());
  items.insert(items.end(), alpha.items().begin() + pos + 1, alpha.items().end());
  return StringTerm(std::move(items));
}

bool is_word_token(std::string_view w) {
  if (w.empty() || w == "1" || w == "_") return false;
  for (unsigned char c : w) {
    if (c >= 0x80 || std::isalnum(c) || c == '_' || c == '\'' || c == '-' || c == '.') continue;
    return false;
  }
  return true;
}

StringTerm parse_term(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "_") return {};
  if (text.empty()) throw TermError(TermError::Kind::Syntax, "empty string term (write _ for the empty string)");
  std::vector<TermItem> items;
  std::size_t start = 0;
  while (true) {
    std::size_t plus = text.find('+', start);
    std::string_view tok = trim(text.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start));
    if (tok == "1")
      items.push_back(TermItem::sep());
    else if (is_word_token(tok))
      items.push_back(TermItem::make_word(std::string(tok)));
    else
      throw TermError(TermError::Kind::Syntax, "bad string term item '" + std::string(tok) + "'");
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return StringTerm(std::move(items));
}

std::string to_string(const StringTerm& t) {
  if (t.empty()) return "_";
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += '+';
    out += t.items()[i].is_sep() ? "1" : t.items()[i].word;
  }
  return out;
}

std::string spaced(const StringTerm& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ' ';
    out += t.items()[i].is_sep() ? "1" : t.items()[i].word;
  }
  return out;
}

void FreshVariables::reserve(const StringTerm& t) {
  for (const auto& it : t.items())
    if (!it.is_sep()) reserved_.insert(it.word);
}

std::string FreshVariables::next() {
  while (true) {
    std::string name = "p" + std::to_string(counter_++);
    if (!reserved_.count(name)) {
      reserved_.insert(name);
      return name;
    }
  }
}

StringTerm FreshVariables::term_of_sort(int sort) {
  std::vector<TermItem> items;
  for (int i = 0; i <= sort; ++i) {
    if (i) items.push_back(TermItem::sep());
    items.push_back(TermItem::make_word(next()));
  }
  return StringTerm(std::move(items));
}

}  // namespace dispnet

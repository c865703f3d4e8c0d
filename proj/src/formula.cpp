#include "dispnet/formula.hpp"

#include <cctype>
#include <sstream>

namespace dispnet {

bool is_discontinuous(Connective c) {
  return c == Connective::Up || c == Connective::Down || c == Connective::Wrap;
}

namespace {

int sort_rule(Connective c, int l, int r) {
  switch (c) {
    case Connective::Prod: return l + r;
    case Connective::Under: return r - l;
    case Connective::Over: return l - r;
    case Connective::Wrap: return l + r - 1;
    case Connective::Down: return r + 1 - l;
    case Connective::Up: return l + 1 - r;
    case Connective::Atom: break;
  }
  return 0;
}

}  // namespace

Formula Formula::atom(std::string name, int sort) {
  auto n = std::make_shared<Node>();
  n->conn = Connective::Atom;
  n->name = std::move(name);
  n->sort = sort;
  n->size = 0;
  return Formula(std::move(n));
}

Formula Formula::binary(Connective c, Formula left, Formula right, Mode mode) {
  if (c == Connective::Atom) throw FormulaError("binary() called with Atom");
  auto n = std::make_shared<Node>();
  n->conn = c;
  n->sort = sort_rule(c, left.sort(), right.sort());
  n->size = 1 + left.connective_count() + right.connective_count();
  n->mode = is_discontinuous(c) ? mode : Mode::first();
  n->left = std::move(left);
  n->right = std::move(right);
  return Formula(std::move(n));
}

Connective Formula::connective() const { return node_->conn; }
const std::string& Formula::name() const { return node_->name; }
const Formula& Formula::left() const { return *node_->left; }
const Formula& Formula::right() const { return *node_->right; }
Mode Formula::mode() const { return node_->mode; }
int Formula::sort() const { return node_->sort; }
int Formula::connective_count() const { return node_->size; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.connective() != b.connective()) return false;
  if (a.is_atom()) return a.name() == b.name() && a.sort() == b.sort();
  return a.mode() == b.mode() && a.left() == b.left() && a.right() == b.right();
}

bool operator<(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return false;
  if (a.connective() != b.connective()) return a.connective() < b.connective();
  if (a.is_atom()) return a.name() < b.name();
  if (a.mode() != b.mode()) return a.mode() < b.mode();
  if (!(a.left() == b.left())) return a.left() < b.left();
  return a.right() < b.right();
}

void Signature::declare(const std::string& atom, int sort) {
  if (sort < 0) throw FormulaError("atom '" + atom + "' declared with negative sort");
  auto [it, fresh] = sorts_.emplace(atom, sort);
  if (!fresh && it->second != sort) throw FormulaError("atom '" + atom + "' declared twice with different sorts");
}

std::optional<int> Signature::find(const std::string& atom) const {
  auto it = sorts_.find(atom);
  if (it == sorts_.end()) return std::nullopt;
  return it->second;
}

int sort_of_formula(const Formula& f, const Signature& sig) {
  if (f.is_atom()) {
    auto s = sig.find(f.name());
    if (!s) throw FormulaError("unknown atom '" + f.name() + "'");
    return *s;
  }
  return sort_rule(f.connective(), sort_of_formula(f.left(), sig), sort_of_formula(f.right(), sig));
}

namespace {

void check(const Formula& f, const Signature* sig, std::vector<SortViolation>& out) {
  auto fail = [&](std::string msg) { out.push_back({to_string(f), std::move(msg)}); };
  if (f.is_atom()) {
    if (sig) {
      auto s = sig->find(f.name());
      if (!s)
        fail("unknown atom");
      else if (*s != f.sort())
        fail("atom sort " + std::to_string(f.sort()) + " disagrees with signature sort " + std::to_string(*s));
    }
    if (f.sort() < 0) fail("negative sort");
    return;
  }
  check(f.left(), sig, out);
  check(f.right(), sig, out);
  int l = f.left().sort(), r = f.right().sort();
  Mode k = f.mode();
  switch (f.connective()) {
    case Connective::Wrap:
    case Connective::Down:
      if (l < 1)
        fail("left operand must have sort >= 1");
      else if (k.resolve(l) == 0)
        fail("wrap index " + k.to_string() + " exceeds sort " + std::to_string(l));
      break;
    case Connective::Up:
      if (f.sort() >= 1 && k.resolve(f.sort()) == 0)
        fail("wrap index " + k.to_string() + " exceeds sort " + std::to_string(f.sort()));
      if (l < r) fail("sort of C must be at least the sort of B");
      break;
    default: break;
  }
  if (f.sort() < 0) fail("negative sort " + std::to_string(f.sort()));
}

}  // namespace

std::vector<SortViolation> well_sorted(const Formula& f, const Signature& sig) {
  std::vector<SortViolation> out;
  check(f, &sig, out);
  return out;
}

std::vector<SortViolation> well_sorted(const Formula& f) {
  std::vector<SortViolation> out;
  check(f, nullptr, out);
  return out;
}

// ---- parser ----
namespace {

class FormulaParser {
 public:
  FormulaParser(std::string_view text, const Signature& sig) : s_(text), sig_(sig) {}

  Formula parse() {
    Formula f = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    throw FormulaError("formula '" + std::string(s_) + "' at column " + std::to_string(pos_ + 1) + ": " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip();
    return pos_ >= s_.size();
  }

  struct Op {
    Connective conn;
    Mode mode;
  };

  Mode read_mode() {
    if (pos_ >= s_.size()) error("missing wrap mode");
    char c = s_[pos_];
    if (c == '>' || c == '<') {
      ++pos_;
      return c == '>' ? Mode::first() : Mode::last();
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("missing wrap mode");
    int n = std::stoi(std::string(s_.substr(start, pos_ - start)));
    if (n < 1) error("wrap index must be >= 1");
    return Mode::at(n);
  }

  std::optional<Op> peek_op() {
    skip();
    if (pos_ >= s_.size()) return std::nullopt;
    char c = s_[pos_];
    auto mode_follows = [&] {
      if (pos_ + 1 >= s_.size()) return false;
      char d = s_[pos_ + 1];
      return d == '>' || d == '<' || std::isdigit(static_cast<unsigned char>(d));
    };
    switch (c) {
      case '/': return Op{Connective::Over, Mode::first()};
      case '\\': return Op{Connective::Under, Mode::first()};
      case '*': return Op{Connective::Prod, Mode::first()};
      case '^': return Op{Connective::Up, Mode::first()};
      case '!': return Op{Connective::Down, Mode::first()};
      case 'o':
        if (mode_follows()) return Op{Connective::Wrap, Mode::first()};
        return std::nullopt;
      default: return std::nullopt;
    }
  }

  Op take_op() {
    Op op = *peek_op();
    ++pos_;
    if (is_discontinuous(op.conn)) op.mode = read_mode();
    return op;
  }

  Formula primary() {
    skip();
    if (pos_ >= s_.size()) error("expected a formula");
    if (s_[pos_] == '(') {
      ++pos_;
      Formula f = expr();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') error("expected ')'");
      ++pos_;
      return f;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\''))
      ++pos_;
    if (start == pos_) error("expected an atom or '('");
    if (!std::isalpha(static_cast<unsigned char>(s_[start]))) error("atom names start with a letter");
    std::string name(s_.substr(start, pos_ - start));
    auto sort = sig_.find(name);
    if (!sort) error("unknown atom '" + name + "'");
    return Formula::atom(name, *sort);
  }

  // A chain of \ is right associative, a chain of / is left associative;
  // mixing them or chaining any other operator needs parentheses.
  Formula expr() {
    std::vector<Formula> operands{primary()};
    std::vector<Op> ops;
    while (auto op = peek_op()) {
      if (!ops.empty()) {
        Connective prev = ops.back().conn;
        if (prev != op->conn || (prev != Connective::Under && prev != Connective::Over))
          error("ambiguous operator sequence; add parentheses");
      }
      ops.push_back(take_op());
      operands.push_back(primary());
    }
    if (ops.empty()) return operands[0];
    if (ops[0].conn == Connective::Under) {
      Formula f = operands.back();
      for (std::size_t i = ops.size(); i-- > 0;) f = Formula::under(operands[i], f);
      return f;
    }
    Formula f = operands[0];
    for (std::size_t i = 0; i < ops.size(); ++i) f = Formula::binary(ops[i].conn, f, operands[i + 1], ops[i].mode);
    return f;
  }

  std::string_view s_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

std::string op_text(const Formula& f) {
  switch (f.connective()) {
    case Connective::Over: return "/";
    case Connective::Under: return "\\";
    case Connective::Prod: return "*";
    case Connective::Up: return "^" + f.mode().to_string();
    case Connective::Down: return "!" + f.mode().to_string();
    case Connective::Wrap: return " o" + f.mode().to_string() + " ";
    case Connective::Atom: break;
  }
  return "";
}

void print(const Formula& f, std::ostream& os) {
  if (f.is_atom()) {
    os << f.name();
    return;
  }
  bool paren_left = !f.left().is_atom() && !(f.connective() == Connective::Over && f.left().connective() == Connective::Over);
  bool paren_right = !f.right().is_atom() && !(f.connective() == Connective::Under && f.right().connective() == Connective::Under);
  if (paren_left) os << '(';
  print(f.left(), os);
  if (paren_left) os << ')';
  os << op_text(f);
  if (paren_right) os << '(';
  print(f.right(), os);
  if (paren_right) os << ')';
}

std::string latex_mode(Mode m) {
  switch (m.kind()) {
    case Mode::Kind::First: return "{>}";
    case Mode::Kind::Last: return "{<}";
    case Mode::Kind::At: return "{" + std::to_string(m.index()) + "}";
  }
  return "";
}

void print_latex(const Formula& f, std::ostream& os) {
  if (f.is_atom()) {
    os << "\\mathit{" << f.name() << "}";
    return;
  }
  auto side = [&](const Formula& g) {
    if (g.is_atom()) {
      print_latex(g, os);
    } else {
      os << '(';
      print_latex(g, os);
      os << ')';
    }
  };
  side(f.left());
  switch (f.connective()) {
    case Connective::Over: os << " / "; break;
    case Connective::Under: os << " \\backslash "; break;
    case Connective::Prod: os << " \\bullet "; break;
    case Connective::Up: os << " \\uparrow_" << latex_mode(f.mode()) << ' '; break;
    case Connective::Down: os << " \\downarrow_" << latex_mode(f.mode()) << ' '; break;
    case Connective::Wrap: os << " \\odot_" << latex_mode(f.mode()) << ' '; break;
    case Connective::Atom: break;
  }
  side(f.right());
}

}  // namespace

Formula parse_formula(std::string_view text, const Signature& sig) { return FormulaParser(text, sig).parse(); }

std::string to_string(const Formula& f) {
  std::ostringstream os;
  print(f, os);
  return os.str();
}

std::string latex(const Formula& f) {
  std::ostringstream os;
  print_latex(f, os);
  return os.str();
}

Signature load_signature(std::string_view text) {
  Signature sig;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string atom;
    if (!(ls >> atom)) continue;
    int sort;
    std::string rest;
    if (!(ls >> sort) || (ls >> rest))
      throw FormulaError("signature line " + std::to_string(lineno) + ": expected 'atom sort'");
    try {
      sig.declare(atom, sort);
    } catch (const FormulaError& e) {
      throw FormulaError("signature line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return sig;
}

}  // namespace dispnet

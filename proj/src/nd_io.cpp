#include <cctype>
#include <sstream>

#include "dispnet/nd.hpp"

namespace dispnet {

namespace {

void write(const NDProof& p, int depth, std::ostringstream& os) {
  os << std::string(2 * depth, ' ') << '(';
  switch (p.rule) {
    case NDRule::Hyp: os << "hyp " << p.index; break;
    case NDRule::Dis: os << "dis " << p.index << ' ' << (p.slot ? 'b' : 'a'); break;
    default:
      os << rule_label(p.rule, p.mode);
      if (discharges(p.rule)) os << ' ' << p.index;
  }
  os << " \"" << to_string(p.term) << "\" \"" << to_string(p.formula) << '"';
  for (const auto& c : p.children) {
    os << '\n';
    write(c, depth + 1, os);
  }
  os << ')';
}

struct Token {
  enum class Kind { Open, Close, Quoted, Atom, End };
  Kind kind;
  std::string text;
  int line;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  Token next() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '\n') ++line_;
      if (c == ';') {  // comment to end of line
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
        continue;
      }
      if (!std::isspace(static_cast<unsigned char>(c))) break;
      ++pos_;
    }
    if (pos_ >= s_.size()) return {Token::Kind::End, "", line_};
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      return {Token::Kind::Open, "(", line_};
    }
    if (c == ')') {
      ++pos_;
      return {Token::Kind::Close, ")", line_};
    }
    if (c == '"') {
      std::size_t end = s_.find('"', pos_ + 1);
      if (end == std::string_view::npos) throw NDSyntaxError("line " + std::to_string(line_) + ": unterminated string");
      std::string text(s_.substr(pos_ + 1, end - pos_ - 1));
      for (char ch : text)
        if (ch == '\n') ++line_;
      pos_ = end + 1;
      return {Token::Kind::Quoted, text, line_};
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != '(' &&
           s_[pos_] != ')' && s_[pos_] != '"')
      ++pos_;
    return {Token::Kind::Atom, std::string(s_.substr(start, pos_ - start)), line_};
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

class SexprParser {
 public:
  SexprParser(std::string_view text) : lex_(text) { advance(); }

  [[noreturn]] void error(const std::string& msg) const {
    throw NDSyntaxError("line " + std::to_string(tok_.line) + ": " + msg);
  }
  void advance() { tok_ = lex_.next(); }
  void expect(Token::Kind k, const char* what) {
    if (tok_.kind != k) error(std::string("expected ") + what);
    advance();
  }
  const Token& peek() const { return tok_; }

  int integer() {
    if (tok_.kind != Token::Kind::Atom) error("expected a number");
    try {
      std::size_t used = 0;
      int v = std::stoi(tok_.text, &used);
      if (used != tok_.text.size()) error("expected a number, got '" + tok_.text + "'");
      advance();
      return v;
    } catch (const std::logic_error&) {
      error("expected a number, got '" + tok_.text + "'");
    }
  }

  std::string quoted() {
    if (tok_.kind != Token::Kind::Quoted) error("expected a quoted string");
    std::string t = tok_.text;
    advance();
    return t;
  }

  Signature signature() {
    Signature sig;
    while (tok_.kind == Token::Kind::Open) {
      advance();
      if (tok_.kind != Token::Kind::Atom) error("expected an atom name");
      std::string atom = tok_.text;
      advance();
      int sort = integer();
      try {
        sig.declare(atom, sort);
      } catch (const FormulaError& e) {
        error(e.what());
      }
      expect(Token::Kind::Close, "')'");
    }
    return sig;
  }

  NDProof node(const Signature& sig) {
    expect(Token::Kind::Open, "'('");
    if (tok_.kind != Token::Kind::Atom) error("expected a rule name");
    std::string label = tok_.text;
    advance();
    NDRule rule;
    Mode mode = Mode::first();
    int index = -1, slot = 0;
    if (label == "hyp") {
      rule = NDRule::Hyp;
      index = integer();
    } else if (label == "dis") {
      rule = NDRule::Dis;
      index = integer();
      if (tok_.kind != Token::Kind::Atom || (tok_.text != "a" && tok_.text != "b")) error("expected slot a or b");
      slot = tok_.text == "b";
      advance();
    } else {
      rule = parse_label(label, mode);
      if (discharges(rule)) index = integer();
    }
    StringTerm term;
    std::optional<Formula> formula;
    try {
      term = parse_term(quoted());
      formula = parse_formula(quoted(), sig);
    } catch (const TermError& e) {
      error(e.what());
    } catch (const FormulaError& e) {
      error(e.what());
    }
    NDProof p{rule, mode, index, slot, term, *formula, {}};
    while (tok_.kind == Token::Kind::Open) p.children.push_back(node(sig));
    expect(Token::Kind::Close, "')'");
    return p;
  }

  NDRule parse_label(const std::string& label, Mode& mode) {
    if (label.size() < 2) error("unknown rule '" + label + "'");
    char last = label.back();
    if (last != 'E' && last != 'I') error("unknown rule '" + label + "'");
    bool intro = last == 'I';
    std::string mid = label.substr(1, label.size() - 2);
    auto need_mode = [&] {
      try {
        mode = Mode::parse(mid);
      } catch (const TermError&) {
        error("bad mode in rule '" + label + "'");
      }
    };
    switch (label[0]) {
      case '\\':
        if (!mid.empty()) break;
        return intro ? NDRule::UnderI : NDRule::UnderE;
      case '/':
        if (!mid.empty()) break;
        return intro ? NDRule::OverI : NDRule::OverE;
      case '*':
        if (!mid.empty()) break;
        return intro ? NDRule::ProdI : NDRule::ProdE;
      case '^': need_mode(); return intro ? NDRule::UpI : NDRule::UpE;
      case '!': need_mode(); return intro ? NDRule::DownI : NDRule::DownE;
      case 'o': need_mode(); return intro ? NDRule::WrapI : NDRule::WrapE;
      default: break;
    }
    error("unknown rule '" + label + "'");
  }

 private:
  Lexer lex_;
  Token tok_{Token::Kind::End, "", 1};
};

std::string latex_term(const StringTerm& t) {
  if (t.empty()) return "\\epsilon";
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += "{+}";
    out += t.items()[i].is_sep() ? "\\mathbf{1}" : "\\mathit{" + t.items()[i].word + "}";
  }
  return out;
}

std::string latex_rule(const NDProof& p) {
  std::string k;
  switch (p.mode.kind()) {
    case Mode::Kind::First: k = ">"; break;
    case Mode::Kind::Last: k = "<"; break;
    case Mode::Kind::At: k = std::to_string(p.mode.index()); break;
  }
  std::string name;
  switch (p.rule) {
    case NDRule::UnderE: name = "\\backslash E"; break;
    case NDRule::UnderI: name = "\\backslash I"; break;
    case NDRule::OverE: name = "/E"; break;
    case NDRule::OverI: name = "/I"; break;
    case NDRule::ProdE: name = "\\bullet E"; break;
    case NDRule::ProdI: name = "\\bullet I"; break;
    case NDRule::DownE: name = "\\downarrow_{" + k + "} E"; break;
    case NDRule::DownI: name = "\\downarrow_{" + k + "} I"; break;
    case NDRule::UpE: name = "\\uparrow_{" + k + "} E"; break;
    case NDRule::UpI: name = "\\uparrow_{" + k + "} I"; break;
    case NDRule::WrapE: name = "\\odot_{" + k + "} E"; break;
    case NDRule::WrapI: name = "\\odot_{" + k + "} I"; break;
    default: break;
  }
  if (discharges(p.rule)) name += "^{" + std::to_string(p.index) + "}";
  return name;
}

void write_latex(const NDProof& p, std::ostringstream& os) {
  std::string judgement = latex_term(p.term) + " : " + latex(p.formula);
  if (p.rule == NDRule::Hyp) {
    os << judgement;
    return;
  }
  if (p.rule == NDRule::Dis) {
    os << "[" << judgement << "]^{" << p.index << "}";
    return;
  }
  os << "\\infer[" << latex_rule(p) << "]{" << judgement << "}{";
  for (std::size_t i = 0; i < p.children.size(); ++i) {
    if (i) os << " & ";
    write_latex(p.children[i], os);
  }
  os << "}";
}

}  // namespace

std::string to_sexpr(const NDProof& p) {
  std::ostringstream os;
  write(p, 0, os);
  return os.str();
}

std::string proof_file_text(const Signature& sig, const NDProof& p) {
  std::string out = "(signature";
  for (const auto& [atom, sort] : sig.atoms()) out += " (" + atom + " " + std::to_string(sort) + ")";
  return out + ")\n" + to_sexpr(p) + "\n";
}

NDProof parse_sexpr(std::string_view text, const Signature& sig) {
  SexprParser parser(text);
  NDProof p = parser.node(sig);
  if (parser.peek().kind != Token::Kind::End) parser.error("trailing input after proof");
  return p;
}

ProofFile parse_proof_file(std::string_view text) {
  SexprParser parser(text);
  Signature sig;
  // optional leading (signature (atom sort) ...)
  parser.expect(Token::Kind::Open, "'('");
  if (parser.peek().kind == Token::Kind::Atom && parser.peek().text == "signature") {
    parser.advance();
    sig = parser.signature();
    parser.expect(Token::Kind::Close, "')'");
    NDProof p = parser.node(sig);
    if (parser.peek().kind != Token::Kind::End) parser.error("trailing input after proof");
    return {sig, p};
  }
  parser.error("proof files start with (signature ...)");
}

std::string latex(const NDProof& p) {
  std::ostringstream os;
  write_latex(p, os);
  return os.str();
}

}  // namespace dispnet

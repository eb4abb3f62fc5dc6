#include "dast/parser.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "dast/error.hpp"

namespace dast {

namespace {

enum class Tok { Ident, Var, LParen, RParen, Comma, Pipe, RuleArrow, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;  // Ident: symbol name (possibly symbolic like `<>`); Var: name without '$'
};

bool ident_char(unsigned char c) {
  return std::isalnum(c) || c == '-' || c == '_' || c >= 0x80;
}

bool symbolic_char(unsigned char c) {
  return c == '<' || c == '>' || c == '=' || c == '?' || c == '~' || c == '^' || c == '*' ||
         c == '+' || c == '!' || c == '&' || c == '/' || c == '\\' || c == '%';
}

/// Tokenizes the remainder of a line (comments already stripped).
class Lexer {
 public:
  Lexer(std::string text, int line) : text_(std::move(text)), line_(line) { advance(); }

  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }
  void expect(Tok kind, const std::string& what) {
    if (current_.kind != kind) throw parse_error("expected " + what, line_);
    advance();
  }
  int line() const { return line_; }

 private:
  void advance() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    if (pos_ >= text_.size()) {
      current_ = {Tok::End, ""};
      return;
    }
    unsigned char c = text_[pos_];
    // Trailing comment: `#` followed by whitespace or end of line.
    if (c == '#' && (pos_ + 1 >= text_.size() || !ident_char(text_[pos_ + 1]))) {
      pos_ = text_.size();
      current_ = {Tok::End, ""};
      return;
    }
    if (c == '(') {
      ++pos_;
      current_ = {Tok::LParen, "("};
      return;
    }
    if (c == ')') {
      ++pos_;
      current_ = {Tok::RParen, ")"};
      return;
    }
    if (c == ',') {
      ++pos_;
      current_ = {Tok::Comma, ","};
      return;
    }
    if (c == '|') {
      ++pos_;
      current_ = {Tok::Pipe, "|"};
      return;
    }
    if (c == '$') {
      size_t start = ++pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      if (pos_ == start) throw parse_error("bare '$' without a variable name", line_);
      current_ = {Tok::Var, text_.substr(start, pos_ - start)};
      return;
    }
    if (c == '#' || ident_char(c)) {
      size_t start = pos_++;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      current_ = {Tok::Ident, text_.substr(start, pos_ - start)};
      return;
    }
    if (symbolic_char(c)) {
      size_t start = pos_;
      while (pos_ < text_.size() && symbolic_char(text_[pos_])) ++pos_;
      std::string run = text_.substr(start, pos_ - start);
      if (run == "==>") {
        current_ = {Tok::RuleArrow, run};
      } else {
        current_ = {Tok::Ident, run};
      }
      return;
    }
    throw parse_error(std::string("unexpected character '") + static_cast<char>(c) + "'", line_);
  }

  std::string text_;
  size_t pos_ = 0;
  int line_;
  Token current_;
};

class TermParser {
 public:
  explicit TermParser(Lexer& lex) : lex_(lex) {}

  /// One term; `And` at this level joins operands into an infix chain.
  Term parse_full() { return parse_infix(/*and_is_operator=*/true); }

  /// Terms separated by top-level `And`.
  std::vector<Term> parse_and_list() {
    std::vector<Term> items;
    items.push_back(parse_infix(/*and_is_operator=*/false));
    while (lex_.peek().kind == Tok::Ident && lex_.peek().text == "And") {
      lex_.take();
      items.push_back(parse_infix(false));
    }
    return items;
  }

 private:
  bool at_operator() const {
    return lex_.peek().kind == Tok::Ident;  // any identifier after an operand is an operator
  }

  Term parse_infix(bool and_is_operator) {
    Term lhs = parse_primary();
    bool chained_and = false;
    bool used_op = false;
    while (at_operator()) {
      const std::string op = lex_.peek().text;
      if (op == "And" && !and_is_operator) break;
      if (op == "And") {
        if (used_op)
          throw parse_error("mixing 'And' with another operator needs parentheses", lex_.line());
        chained_and = true;
      } else {
        if (chained_and || used_op)
          throw parse_error("chained operator '" + op + "' needs parentheses", lex_.line());
        used_op = true;
      }
      lex_.take();
      Term rhs = parse_primary();
      lhs = Term::infix(op, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Term parse_primary() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Tok::LParen: {
        lex_.take();
        Term inner = parse_infix(true);
        lex_.expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Var: {
        std::string name = lex_.take().text;
        if (lex_.peek().kind == Tok::LParen)
          return Term::compound(std::move(name), parse_args(), /*head_is_var=*/true);
        return Term::var(std::move(name));
      }
      case Tok::Ident: {
        std::string name = lex_.take().text;
        if (lex_.peek().kind == Tok::LParen)
          return Term::compound(std::move(name), parse_args());
        return Term::atom(std::move(name));
      }
      default:
        throw parse_error("expected a term", lex_.line());
    }
  }

  std::vector<Term> parse_args() {
    lex_.expect(Tok::LParen, "'('");
    std::vector<Term> args;
    args.push_back(parse_infix(true));
    while (lex_.peek().kind == Tok::Comma) {
      lex_.take();
      args.push_back(parse_infix(true));
    }
    lex_.expect(Tok::RParen, "')'");
    return args;
  }

  Lexer& lex_;
};

struct Line {
  int number;
  std::string text;  // stripped, comments removed when the line starts with '#'
};

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool starts_with_keyword(const std::string& line, const std::string& kw, size_t& after) {
  if (line.compare(0, kw.size(), kw) != 0) return false;
  after = kw.size();
  return true;
}

}  // namespace

SemanticLogic parse_logic(const std::string& source, const ParseOptions& options) {
  SemanticLogic logic;
  int next_rule_id = 1;
  int line_no = 0;

  std::istringstream in(source);
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip(raw);
    if (line.empty() || line[0] == '#') continue;

    size_t after = 0;
    if (starts_with_keyword(line, "theory", after)) {
      std::string rest = strip(line.substr(after));
      if (rest.empty() || rest.back() != ':')
        throw parse_error("theory header must end with ':'", line_no);
      std::string name = strip(rest.substr(0, rest.size() - 1));
      if (name.empty()) throw parse_error("theory needs a name", line_no);
      Theory t;
      t.name = name;
      logic.theories.push_back(std::move(t));
      continue;
    }

    if (starts_with_keyword(line, "intuitions:", after)) {
      if (logic.theories.empty())
        throw parse_error("intuitions outside of a theory block", line_no);
      Theory& t = logic.theories.back();
      std::string rest = line.substr(after);
      std::string item;
      std::istringstream items(rest);
      while (std::getline(items, item, ',')) {
        item = strip(item);
        if (item.empty()) throw parse_error("empty intuition name", line_no);
        if (std::find(t.intuitions.begin(), t.intuitions.end(), item) == t.intuitions.end())
          t.intuitions.push_back(item);
      }
      continue;
    }

    if (starts_with_keyword(line, "fact:", after)) {
      if (logic.theories.empty()) throw parse_error("fact outside of a theory block", line_no);
      Lexer lex(line.substr(after), line_no);
      TermParser tp(lex);
      std::vector<Term> facts = tp.parse_and_list();
      if (lex.peek().kind != Tok::End) throw parse_error("trailing input after fact", line_no);
      for (Term& f : facts) logic.theories.back().facts.push_back(std::move(f));
      continue;
    }

    if (starts_with_keyword(line, "define", after)) {
      std::string rest = line.substr(after);
      size_t eq = rest.find('=');
      if (eq == std::string::npos) throw parse_error("define needs '='", line_no);
      std::string sym = strip(rest.substr(0, eq));
      if (sym.size() < 2 || sym[0] != '#')
        throw parse_error("define target must be a '#' text symbol", line_no);
      Lexer lex(rest.substr(eq + 1), line_no);
      TermParser tp(lex);
      Term value = tp.parse_full();
      if (lex.peek().kind != Tok::End) throw parse_error("trailing input after define", line_no);
      Binding b;
      b.symbol = sym;
      b.value = std::move(value);
      b.theory_index = logic.theories.empty() ? -1 : static_cast<int>(logic.theories.size()) - 1;
      logic.bindings.push_back(std::move(b));
      continue;
    }

    if (starts_with_keyword(line, "rule", after)) {
      if (logic.theories.empty()) throw parse_error("rule outside of a theory block", line_no);
      std::string rest = line.substr(after);
      std::optional<std::string> tag;
      rest = strip(rest);
      if (!rest.empty() && rest[0] == '[') {
        size_t close = rest.find(']');
        if (close == std::string::npos) throw parse_error("unterminated rule tag", line_no);
        tag = strip(rest.substr(1, close - 1));
        rest = strip(rest.substr(close + 1));
      }
      if (rest.empty() || rest[0] != ':') throw parse_error("rule needs ':'", line_no);
      Lexer lex(rest.substr(1), line_no);
      TermParser tp(lex);
      std::vector<Term> premises = tp.parse_and_list();
      if (lex.peek().kind != Tok::RuleArrow) throw parse_error("rule needs '==>'", line_no);
      lex.take();
      // Alternatives: `|` separates conclusion lists sharing the premises.
      std::vector<std::vector<Term>> alternatives;
      alternatives.push_back(tp.parse_and_list());
      while (lex.peek().kind == Tok::Pipe) {
        lex.take();
        alternatives.push_back(tp.parse_and_list());
      }
      if (lex.peek().kind != Tok::End) throw parse_error("trailing input after rule", line_no);
      for (auto& conclusions : alternatives) {
        if (conclusions.empty()) throw parse_error("empty conclusion", line_no);
        Rule r;
        r.id = next_rule_id++;
        r.theory = logic.theories.back().name;
        r.premises = premises;
        r.conclusions = std::move(conclusions);
        r.tag = tag;
        logic.theories.back().rules.push_back(std::move(r));
      }
      continue;
    }

    throw parse_error("unrecognized line: " + line, line_no);
  }

  validate_logic(logic, options.strict_symbols);
  return logic;
}

SemanticLogic load_logic_file(const std::string& path, const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_logic(buf.str(), options);
}

Term parse_term(const std::string& text) {
  Lexer lex(text, 1);
  TermParser tp(lex);
  Term t = tp.parse_full();
  if (lex.peek().kind != Tok::End) throw parse_error("trailing input after term");
  return t;
}

}  // namespace dast

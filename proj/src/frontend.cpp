#include "lingres/frontend.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "lingres/error.hpp"

namespace lingres {

namespace {

enum class Tok {
  Ident,
  Caret,
  Bang,
  Amp,
  Bar,
  Arrow,
  DoubleArrow,
  LParen,
  RParen,
  Dot,
  At,
  Equals,
  Less,
  Plus,
  Minus,
  Semicolon,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

std::vector<Token> lex(std::string_view text, std::size_t line, std::size_t column0) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto col = [&](std::size_t at) { return column0 + at + 1; };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      ++i;
      continue;
    }
    if (ident_char(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), col(i)});
      i = j;
      continue;
    }
    auto single = [&](Tok kind) {
      out.push_back({kind, std::string(1, c), col(i)});
      ++i;
    };
    switch (c) {
      case '^': single(Tok::Caret); break;
      case '!': single(Tok::Bang); break;
      case '&': single(Tok::Amp); break;
      case '|': single(Tok::Bar); break;
      case '(': single(Tok::LParen); break;
      case ')': single(Tok::RParen); break;
      case '.': single(Tok::Dot); break;
      case '@': single(Tok::At); break;
      case '=': single(Tok::Equals); break;
      case '+': single(Tok::Plus); break;
      case ';': single(Tok::Semicolon); break;
      case '-':
        if (text.substr(i).starts_with("->")) {
          out.push_back({Tok::Arrow, "->", col(i)});
          i += 2;
        } else {
          single(Tok::Minus);
        }
        break;
      case '<':
        if (text.substr(i).starts_with("<->")) {
          out.push_back({Tok::DoubleArrow, "<->", col(i)});
          i += 3;
        } else {
          single(Tok::Less);
        }
        break;
      default:
        throw ParseError(ErrorCode::SyntaxError,
                         "unexpected character '" + std::string(1, c) + "'", line,
                         col(i));
    }
  }
  out.push_back({Tok::End, "", col(text.size())});
  return out;
}

std::string describe(const Token& t) {
  return t.kind == Tok::End ? "end of line" : "'" + t.text + "'";
}

class Parser {
 public:
  Parser(const AlgebraSignature* sig, std::vector<Token> tokens, std::size_t line)
      : sig_(sig), tokens_(std::move(tokens)), line_(line) {}

  const Token& peek() const { return tokens_[pos_]; }
  bool at(Tok kind) const { return peek().kind == kind; }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  bool accept(Tok kind) {
    if (!at(kind)) return false;
    next();
    return true;
  }

  const Token& expect(Tok kind, std::string_view what) {
    if (!at(kind)) {
      fail(ErrorCode::SyntaxError,
           "expected " + std::string(what) + ", found " + describe(peek()), peek());
    }
    return next();
  }

  [[noreturn]] void fail(ErrorCode code, const std::string& msg, const Token& at) const {
    throw ParseError(code, msg, line_, at.column);
  }

  Term term(const Token& tok) const {
    try {
      if (auto t = try_parse_term(*sig_, tok.text)) return *std::move(t);
    } catch (const Error& e) {
      fail(e.code(), e.what(), tok);
    }
    fail(ErrorCode::UnknownHedge, "'" + tok.text + "' is not a term of the declared algebra",
         tok);
  }

  Literal literal() {
    const Token& name = expect(Tok::Ident, "atom");
    expect(Tok::Caret, "'^' after atom '" + name.text + "'");
    const Token& label = expect(Tok::Ident, "label");
    return Literal{atom(name), term(label)};
  }

  Formula formula() { return iff(); }

  void finish_with_dot(bool required) {
    if (required) {
      expect(Tok::Dot, "'.'");
    } else {
      accept(Tok::Dot);
    }
    if (!at(Tok::End)) fail(ErrorCode::SyntaxError, "trailing " + describe(peek()), peek());
  }

 private:
  Atom atom(const Token& tok) const {
    if (std::isalpha(static_cast<unsigned char>(tok.text.front())) == 0) {
      fail(ErrorCode::SyntaxError, "atom names start with a letter", tok);
    }
    try {
      if (auto t = try_parse_term(*sig_, tok.text)) return Atom::constant(*std::move(t));
    } catch (const Error& e) {
      fail(e.code(), e.what(), tok);
    }
    return Atom::variable(tok.text);
  }

  Formula iff() {
    Formula lhs = implies();
    while (accept(Tok::DoubleArrow)) lhs = Formula::equivalence(std::move(lhs), implies());
    return lhs;
  }

  Formula implies() {
    Formula lhs = disjunction();
    if (accept(Tok::Arrow)) return Formula::implication(std::move(lhs), implies());
    return lhs;
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    while (accept(Tok::Bar)) lhs = Formula::disjunction(std::move(lhs), conjunction());
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = unary();
    while (accept(Tok::Amp)) lhs = Formula::conjunction(std::move(lhs), unary());
    return lhs;
  }

  Formula unary() {
    if (accept(Tok::Bang)) return Formula::negation(unary());
    return primary();
  }

  Formula primary() {
    if (accept(Tok::LParen)) {
      Formula inner = iff();
      expect(Tok::RParen, "')'");
      return inner;
    }
    const Token& name = expect(Tok::Ident, "literal, constant or '('");
    if (accept(Tok::Caret)) {
      const Token& label = expect(Tok::Ident, "label");
      return Formula::literal(Literal{atom(name), term(label)});
    }
    try {
      if (auto t = try_parse_term(*sig_, name.text)) return Formula::constant(*std::move(t));
    } catch (const Error& e) {
      fail(e.code(), e.what(), name);
    }
    fail(ErrorCode::SyntaxError, "expected '^' after atom '" + name.text + "'", peek());
  }

  const AlgebraSignature* sig_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

std::string_view trim(std::string_view s, std::size_t* offset = nullptr) {
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b])) != 0) ++b;
  std::size_t e = s.size();
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])) != 0) --e;
  if (offset != nullptr) *offset += b;
  return s.substr(b, e - b);
}

struct Line {
  std::size_t number;
  std::string keyword;
  std::size_t keyword_column;
  std::string_view body;
  std::size_t body_offset;  // 0-based column of body[0]
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (auto pct = raw.find('%'); pct != std::string_view::npos) raw = raw.substr(0, pct);
    std::size_t offset = 0;
    std::string_view content = trim(raw, &offset);
    if (!content.empty()) {
      const auto colon = content.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError(ErrorCode::SyntaxError, "expected 'keyword:'", number, offset + 1);
      }
      std::size_t kw_offset = offset;
      std::string keyword(trim(content.substr(0, colon), &kw_offset));
      out.push_back(Line{number, keyword, kw_offset + 1, content.substr(colon + 1),
                         offset + colon + 1});
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

AlgebraSignature parse_signature(const std::vector<Line>& lines) {
  std::vector<std::string> positive;
  std::vector<std::string> negative;
  int depth = 2;
  const Line* hedges_line = nullptr;
  const Line* depth_line = nullptr;

  for (const auto& line : lines) {
    if (line.keyword == "hedges") {
      if (hedges_line != nullptr) {
        throw ParseError(ErrorCode::SyntaxError, "duplicate 'hedges:' line", line.number,
                         line.keyword_column);
      }
      hedges_line = &line;
      Parser p(nullptr, lex(line.body, line.number, line.body_offset), line.number);
      std::set<std::string> seen_classes;
      while (!p.at(Tok::End)) {
        const Token& h = p.expect(Tok::Ident, "'H+' or 'H-'");
        if (h.text != "H") p.fail(ErrorCode::SyntaxError, "expected 'H+' or 'H-'", h);
        const Token& sign = p.next();
        std::vector<std::string>* target = nullptr;
        if (sign.kind == Tok::Plus) {
          target = &positive;
        } else if (sign.kind == Tok::Minus) {
          target = &negative;
        } else {
          p.fail(ErrorCode::SyntaxError, "expected '+' or '-' after 'H'", sign);
        }
        if (!seen_classes.insert(sign.text).second) {
          p.fail(ErrorCode::SyntaxError, "hedge class declared twice", sign);
        }
        p.expect(Tok::Equals, "'='");
        if (p.at(Tok::Ident)) {
          target->push_back(p.next().text);
          while (p.accept(Tok::Less)) target->push_back(p.expect(Tok::Ident, "hedge name").text);
        }
        if (!p.accept(Tok::Semicolon) && !p.at(Tok::End)) {
          p.fail(ErrorCode::SyntaxError, "expected ';' or end of line, found " + describe(p.peek()),
                 p.peek());
        }
      }
    } else if (line.keyword == "maxdepth") {
      if (depth_line != nullptr) {
        throw ParseError(ErrorCode::SyntaxError, "duplicate 'maxdepth:' line", line.number,
                         line.keyword_column);
      }
      depth_line = &line;
      std::size_t off = line.body_offset;
      const std::string_view body = trim(line.body, &off);
      const char* first = body.data();
      const char* last = body.data() + body.size();
      auto [ptr, ec] = std::from_chars(first, last, depth);
      if (ec != std::errc() || ptr != last || body.empty()) {
        throw ParseError(ErrorCode::SyntaxError, "expected an integer depth", line.number,
                         off + 1);
      }
      if (depth < 0) {
        throw ParseError(ErrorCode::NegativeDepth, "max depth must be >= 0", line.number,
                         off + 1);
      }
    }
  }

  if (hedges_line == nullptr) {
    positive = default_signature().positive_names();
    negative = default_signature().negative_names();
  }
  try {
    return AlgebraSignature::build(positive, negative, depth);
  } catch (const Error& e) {
    throw ParseError(e.code(), e.what(), hedges_line ? hedges_line->number : 1,
                     hedges_line ? hedges_line->keyword_column : 1);
  }
}

const std::map<std::string, std::vector<std::string>>& known_options() {
  static const std::map<std::string, std::vector<std::string>> options{
      {"merge_duplicates", {"off", "max_label"}},
      {"strategy", {"alpha", "naive"}},
      {"max_steps", {}},  // positive integer
  };
  return options;
}

}  // namespace

// ---------------------------------------------------------------------------

MergeMode merge_mode_from_string(std::string_view s) {
  if (s == "off") return MergeMode::Off;
  if (s == "max_label") return MergeMode::MaxLabel;
  throw Error(ErrorCode::BadOption, "merge_duplicates must be off or max_label");
}

Strategy strategy_from_string(std::string_view s) {
  if (s == "alpha") return Strategy::Alpha;
  if (s == "naive") return Strategy::Naive;
  throw Error(ErrorCode::BadOption, "strategy must be alpha or naive");
}

std::string_view to_string(MergeMode m) { return m == MergeMode::Off ? "off" : "max_label"; }
std::string_view to_string(Strategy s) { return s == Strategy::Alpha ? "alpha" : "naive"; }

Formula parse_formula(const AlgebraSignature& sig, std::string_view text) {
  Parser p(&sig, lex(text, 1, 0), 1);
  Formula f = p.formula();
  p.finish_with_dot(false);
  return f;
}

Clause parse_clause(const AlgebraSignature& sig, std::string_view text) {
  if (trim(text) == "[]") return Clause{};
  Parser p(&sig, lex(text, 1, 0), 1);
  std::vector<Literal> lits{p.literal()};
  while (p.accept(Tok::Bar)) lits.push_back(p.literal());
  p.finish_with_dot(false);
  return Clause(std::move(lits));
}

Problem parse_problem(std::string_view text) {
  const auto lines = split_lines(text);
  Problem problem;
  problem.signature = parse_signature(lines);
  const AlgebraSignature& sig = problem.signature;

  for (const auto& line : lines) {
    if (line.keyword == "hedges" || line.keyword == "maxdepth") continue;
    Parser p(&sig, lex(line.body, line.number, line.body_offset), line.number);
    if (line.keyword == "clause") {
      std::vector<Literal> lits;
      if (!p.at(Tok::Dot) && !p.at(Tok::At)) {
        lits.push_back(p.literal());
        while (p.accept(Tok::Bar)) lits.push_back(p.literal());
      }
      Term reliability = Term::top();
      if (p.accept(Tok::At)) {
        const Token& tok = p.expect(Tok::Ident, "reliability term");
        reliability = p.term(tok);
        if (!above_neutral(sig, reliability)) {
          p.fail(ErrorCode::BadReliability,
                 "reliability " + tok.text + " is not above W", tok);
        }
      }
      p.finish_with_dot(true);
      problem.inputs.emplace_back(ReliableClause{Clause(std::move(lits)), reliability});
    } else if (line.keyword == "formula") {
      Formula f = p.formula();
      p.finish_with_dot(true);
      problem.inputs.emplace_back(std::move(f));
    } else if (line.keyword == "option") {
      const Token& key = p.expect(Tok::Ident, "option name");
      p.expect(Tok::Equals, "'='");
      const Token& value = p.expect(Tok::Ident, "option value");
      if (!p.at(Tok::End)) p.fail(ErrorCode::SyntaxError, "trailing " + describe(p.peek()), p.peek());
      auto it = known_options().find(key.text);
      if (it == known_options().end()) {
        p.fail(ErrorCode::BadOption, "unknown option '" + key.text + "'", key);
      }
      const auto& allowed = it->second;
      if (allowed.empty()) {
        std::size_t n = 0;
        auto [ptr, ec] = std::from_chars(value.text.data(),
                                         value.text.data() + value.text.size(), n);
        if (ec != std::errc() || ptr != value.text.data() + value.text.size() || n == 0) {
          p.fail(ErrorCode::BadOption, key.text + " must be a positive integer", value);
        }
      } else if (std::find(allowed.begin(), allowed.end(), value.text) == allowed.end()) {
        p.fail(ErrorCode::BadOption, "bad value '" + value.text + "' for " + key.text, value);
      }
      problem.directives[key.text] = value.text;
    } else {
      throw ParseError(ErrorCode::SyntaxError, "unknown keyword '" + line.keyword + "'",
                       line.number, line.keyword_column);
    }
  }
  return problem;
}

std::vector<ReliableClause> Problem::seed_clauses() const {
  std::vector<ReliableClause> out;
  for (const auto& input : inputs) {
    if (const auto* rc = std::get_if<ReliableClause>(&input)) {
      out.push_back(*rc);
    } else {
      for (auto& c : to_cnf(signature, std::get<Formula>(input))) {
        out.push_back(ReliableClause{std::move(c), Term::top()});
      }
    }
  }
  return out;
}

std::vector<std::string> Problem::variables() const {
  std::set<std::string> vars;
  for (const auto& input : inputs) {
    if (const auto* rc = std::get_if<ReliableClause>(&input)) {
      for (const auto& lit : rc->clause.literals()) {
        if (!lit.atom.is_constant()) vars.insert(lit.atom.name());
      }
    } else {
      std::get<Formula>(input).collect_variables(vars);
    }
  }
  return {vars.begin(), vars.end()};
}

// ---------------------------------------------------------------------------
// Serialization

std::string format_literal(const AlgebraSignature& sig, const Literal& lit) {
  std::string atom =
      lit.atom.is_constant() ? format_term(sig, lit.atom.value()) : lit.atom.name();
  return atom + "^" + format_term(sig, lit.label);
}

std::string format_clause(const AlgebraSignature& sig, const Clause& c) {
  if (c.empty()) return "[]";
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) out += " | ";
    out += format_literal(sig, c[i]);
  }
  return out;
}

namespace {

int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Iff: return 1;
    case Formula::Kind::Implies: return 2;
    case Formula::Kind::Or: return 3;
    case Formula::Kind::And: return 4;
    case Formula::Kind::Not: return 5;
    default: return 6;
  }
}

std::string_view op_text(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Iff: return " <-> ";
    case Formula::Kind::Implies: return " -> ";
    case Formula::Kind::Or: return " | ";
    case Formula::Kind::And: return " & ";
    default: return "";
  }
}

void write_formula(std::string& out, const AlgebraSignature& sig, const Formula& f) {
  auto child = [&](const Formula& c, bool parens) {
    if (parens) out += '(';
    write_formula(out, sig, c);
    if (parens) out += ')';
  };
  switch (f.kind()) {
    case Formula::Kind::Literal:
      out += format_literal(sig, f.lit());
      return;
    case Formula::Kind::Constant:
      out += format_term(sig, f.constant_value());
      return;
    case Formula::Kind::Not:
      out += '!';
      child(f.lhs(), precedence(f.lhs().kind()) < precedence(Formula::Kind::Not));
      return;
    default:
      break;
  }
  const int p = precedence(f.kind());
  const bool right_assoc = f.kind() == Formula::Kind::Implies;
  const int pl = precedence(f.lhs().kind());
  const int pr = precedence(f.rhs().kind());
  child(f.lhs(), right_assoc ? pl <= p : pl < p);
  out += op_text(f.kind());
  child(f.rhs(), right_assoc ? pr < p : pr <= p);
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    out += (i == 0 ? " " : " < ");
    out += names[i];
  }
  return out;
}

}  // namespace

std::string format_formula(const AlgebraSignature& sig, const Formula& f) {
  std::string out;
  write_formula(out, sig, f);
  return out;
}

std::string serialize_problem(const Problem& problem) {
  const auto& sig = problem.signature;
  std::ostringstream out;
  out << "hedges: H+ =" << join_names(sig.positive_names()) << " ; H- ="
      << join_names(sig.negative_names()) << '\n';
  out << "maxdepth: " << sig.max_depth() << '\n';
  for (const auto& [key, value] : problem.directives) {
    out << "option: " << key << " = " << value << '\n';
  }
  for (const auto& input : problem.inputs) {
    if (const auto* rc = std::get_if<ReliableClause>(&input)) {
      std::string body = rc->clause.empty() ? "" : format_clause(sig, rc->clause);
      if (rc->reliability != Term::top()) {
        body += (body.empty() ? "@ " : " @ ") + format_term(sig, rc->reliability);
      }
      out << "clause: " << body << ".\n";
    } else {
      out << "formula: " << format_formula(sig, std::get<Formula>(input)) << ".\n";
    }
  }
  return out.str();
}

}  // namespace lingres

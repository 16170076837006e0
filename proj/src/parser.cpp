// Recursive-descent parser for the plain-text formula syntax.
//
//   formula := implies
//   implies := or ("->" implies)?
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := "~" unary | prefix unary | "(" formula ")" | "@" rule | atom
//   prefix  := "[]" | "<>" | "[" ident "]" | K_a | P | P_a | O | O_a
//            | O_{a,b} | R_a | Power_{a,b}
//   atom    := ident ("(" ident ("," ident)* ")")?
//
// Identifiers O, P and those starting with K_, P_, O_, R_, Power_ are
// reserved for modal prefixes and cannot name atoms.

#include <cctype>

#include "normargue/error.hpp"
#include "normargue/formula.hpp"

namespace normargue {

namespace {

enum class Tok {
  Ident,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Comma,
  Tilde,
  Amp,
  Bar,
  Arrow,
  Box,
  Diamond,
  LBracket,
  RBracket,
  At,
  End,
};

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t offset;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool is_identifier(std::string_view s) {
  if (s.empty() || !ident_start(s[0])) return false;
  for (char c : s) {
    if (!ident_char(c)) return false;
  }
  return true;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::size_t start = pos_;
    if (pos_ >= text_.size()) return {Tok::End, {}, start};
    char c = text_[pos_];
    if (ident_start(c)) {
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      return {Tok::Ident, text_.substr(start, pos_ - start), start};
    }
    auto two = [&](char second) { return pos_ + 1 < text_.size() && text_[pos_ + 1] == second; };
    auto single = [&](Tok k) {
      ++pos_;
      return Token{k, text_.substr(start, 1), start};
    };
    auto pair = [&](Tok k) {
      pos_ += 2;
      return Token{k, text_.substr(start, 2), start};
    };
    switch (c) {
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case '{': return single(Tok::LBrace);
      case '}': return single(Tok::RBrace);
      case ',': return single(Tok::Comma);
      case '~': return single(Tok::Tilde);
      case '&': return single(Tok::Amp);
      case '|': return single(Tok::Bar);
      case '@': {
        // rule names may carry a scheme suffix such as fcp#2
        ++pos_;
        std::size_t name_start = pos_;
        while (pos_ < text_.size() && (ident_char(text_[pos_]) || text_[pos_] == '#')) ++pos_;
        if (pos_ == name_start) throw SyntaxError(ErrorKind::Syntax, pos_, {"rule name"}, "empty rule reference");
        return Token{Tok::At, text_.substr(name_start, pos_ - name_start), start};
      }
      case ']': return single(Tok::RBracket);
      case '[': return two(']') ? pair(Tok::Box) : single(Tok::LBracket);
      case '-':
        if (two('>')) return pair(Tok::Arrow);
        break;
      case '<':
        if (two('>')) return pair(Tok::Diamond);
        break;
      default:
        break;
    }
    throw SyntaxError(ErrorKind::Syntax, start, {}, "unexpected character");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

const char* describe(Tok k) {
  switch (k) {
    case Tok::Ident: return "identifier";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::Tilde: return "'~'";
    case Tok::Amp: return "'&'";
    case Tok::Bar: return "'|'";
    case Tok::Arrow: return "'->'";
    case Tok::Box: return "'[]'";
    case Tok::Diamond: return "'<>'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::At: return "'@'";
    case Tok::End: return "end of input";
  }
  return "?";
}

const std::vector<std::string> kUnaryStart = {"'~'", "'[]'", "'<>'", "'['", "'('",
                                              "'@'", "identifier"};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { advance(); }

  Formula parse_all() {
    Formula f = parse_implies();
    if (cur_.kind != Tok::End) fail({"'&'", "'|'", "'->'", "end of input"}, "trailing input");
    return f;
  }

 private:
  void advance() { cur_ = lexer_.next(); }

  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& detail) const {
    throw SyntaxError(ErrorKind::Syntax, cur_.offset, std::move(expected), detail);
  }

  [[noreturn]] void unknown_operator(const Token& at, const std::string& detail) const {
    throw SyntaxError(ErrorKind::UnknownOperator, at.offset, {}, detail);
  }

  void expect(Tok k) {
    if (cur_.kind != k) fail({describe(k)}, std::string("unexpected ") + describe(cur_.kind));
    advance();
  }

  std::string expect_ident() {
    if (cur_.kind != Tok::Ident) fail({"identifier"}, std::string("unexpected ") + describe(cur_.kind));
    std::string s(cur_.text);
    advance();
    return s;
  }

  Formula parse_implies() {
    Formula lhs = parse_or();
    if (cur_.kind == Tok::Arrow) {
      advance();
      return Formula::implication(std::move(lhs), parse_implies());
    }
    return lhs;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (cur_.kind == Tok::Bar) {
      advance();
      f = Formula::disjunction(std::move(f), parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (cur_.kind == Tok::Amp) {
      advance();
      f = Formula::conjunction(std::move(f), parse_unary());
    }
    return f;
  }

  // "{a}" or "{a,b}" after a prefix ending in '_'.
  std::vector<std::string> parse_agent_braces(std::size_t max_agents) {
    expect(Tok::LBrace);
    std::vector<std::string> agents{expect_ident()};
    while (cur_.kind == Tok::Comma && agents.size() < max_agents) {
      advance();
      agents.push_back(expect_ident());
    }
    expect(Tok::RBrace);
    return agents;
  }

  Formula parse_unary() {
    switch (cur_.kind) {
      case Tok::Tilde:
        advance();
        return Formula::negation(parse_unary());
      case Tok::Box:
        advance();
        return Formula::box(parse_unary());
      case Tok::Diamond:
        advance();
        return Formula::diamond(parse_unary());
      case Tok::LBracket: {
        advance();
        std::string agent = expect_ident();
        expect(Tok::RBracket);
        return Formula::stit(std::move(agent), parse_unary());
      }
      case Tok::LParen: {
        advance();
        Formula f = parse_implies();
        expect(Tok::RParen);
        return f;
      }
      case Tok::At: {
        std::string name(cur_.text);
        advance();
        return Formula::rule_atom(std::move(name));
      }
      case Tok::Ident:
        return parse_ident_led();
      default:
        fail(kUnaryStart, std::string("unexpected ") + describe(cur_.kind));
    }
  }

  Formula parse_ident_led() {
    Token tok = cur_;
    std::string_view text = tok.text;
    advance();

    if (text == "O") return Formula::oblig(std::nullopt, std::nullopt, parse_unary());
    if (text == "P") return Formula::perm(std::nullopt, parse_unary());

    if (text == "Power_") {
      if (cur_.kind != Tok::LBrace) unknown_operator(tok, "Power needs the form Power_{a,b}");
      auto agents = parse_agent_braces(2);
      if (agents.size() != 2) unknown_operator(tok, "Power needs two agents");
      return Formula::power(agents[0], agents[1], parse_unary());
    }
    if (text.starts_with("Power_")) unknown_operator(tok, "Power needs the form Power_{a,b}");

    if (text.size() >= 2 && text[1] == '_' &&
        (text[0] == 'K' || text[0] == 'P' || text[0] == 'O' || text[0] == 'R')) {
      char op = text[0];
      std::vector<std::string> agents;
      std::string_view rest = text.substr(2);
      if (rest.empty()) {
        if (cur_.kind != Tok::LBrace) {
          unknown_operator(tok, std::string("missing agent after ") + std::string(text));
        }
        agents = parse_agent_braces(op == 'O' ? 2 : 1);
      } else {
        if (!is_identifier(rest)) unknown_operator(tok, "malformed agent in " + std::string(text));
        agents.emplace_back(rest);
      }
      Formula body = parse_unary();
      switch (op) {
        case 'K': return Formula::know(agents[0], std::move(body));
        case 'P': return Formula::perm(agents[0], std::move(body));
        case 'R': return Formula::right(agents[0], std::move(body));
        default:
          return Formula::oblig(agents[0],
                                agents.size() > 1 ? std::optional<AgentId>(agents[1]) : std::nullopt,
                                std::move(body));
      }
    }

    std::vector<std::string> args;
    if (cur_.kind == Tok::LParen) {
      advance();
      args.push_back(expect_ident());
      while (cur_.kind == Tok::Comma) {
        advance();
        args.push_back(expect_ident());
      }
      expect(Tok::RParen);
    }
    return Formula::atom(std::string(text), std::move(args));
  }

  Lexer lexer_;
  Token cur_{Tok::End, {}, 0};
};

}  // namespace

Formula parse(std::string_view text, ParseOptions options) {
  Formula f = Parser(text).parse_all();
  return options.normalize ? normalize(f, options.weak_mode) : f;
}

}  // namespace normargue

#include "lpocert/trs_parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>

#include "lpocert/errors.hpp"

namespace lpo {

namespace {

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct Token {
  enum Kind { LPAREN, RPAREN, COMMA, ARROW, IDENT, END } kind;
  std::string text;
  int line, col;
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; ++j, ++i) {
      if (text[i] == '\n') { ++line; col = 1; }
      else if (text[i] != '\r') ++col;
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') { advance(1); continue; }
    int tl = line, tc = col;
    if (c == '(') { out.push_back({Token::LPAREN, "(", tl, tc}); advance(1); }
    else if (c == ')') { out.push_back({Token::RPAREN, ")", tl, tc}); advance(1); }
    else if (c == ',') { out.push_back({Token::COMMA, ",", tl, tc}); advance(1); }
    else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({Token::ARROW, "->", tl, tc});
      advance(2);
    } else if (ident_char(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      out.push_back({Token::IDENT, std::string(text.substr(i, j - i)), tl, tc});
      advance(j - i);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", tl, tc);
    }
  }
  out.push_back({Token::END, "", line, col});
  return out;
}

struct Parser {
  std::vector<Token> toks;
  std::size_t pos = 0;

  const Token& peek() const { return toks[pos]; }
  const Token& next() { return toks[pos++]; }
  [[noreturn]] void fail(const std::string& msg, const Token& at) const {
    throw ParseError(msg, at.line, at.col);
  }
  Token expect(Token::Kind k, const std::string& what) {
    if (peek().kind != k) fail("expected " + what, peek());
    return next();
  }

  std::set<std::string> vars;
  std::map<std::string, std::pair<std::size_t, Token>> arities;  // first use
  std::vector<std::pair<Term, Term>> raw_rules;

  void note_arity(const std::string& name, std::size_t n, const Token& at) {
    auto [it, fresh] = arities.emplace(name, std::make_pair(n, at));
    if (!fresh && it->second.first != n)
      throw ArityClash(name, it->second.first, n);
  }

  Term term() {
    Token head = expect(Token::IDENT, "an identifier");
    if (peek().kind != Token::LPAREN) {
      if (vars.count(head.text)) return Term::var(head.text);
      note_arity(head.text, 0, head);
      return Term::app(head.text);
    }
    next();  // (
    if (vars.count(head.text))
      fail("variable " + head.text + " used as a function symbol", head);
    std::vector<Term> args;
    if (peek().kind != Token::RPAREN) {
      args.push_back(term());
      while (peek().kind == Token::COMMA) {
        next();
        args.push_back(term());
      }
    }
    expect(Token::RPAREN, "')'");
    note_arity(head.text, args.size(), head);
    return Term::app(head.text, std::move(args));
  }

  void section_var() {
    while (peek().kind == Token::IDENT) vars.insert(next().text);
  }

  void section_sig() {
    while (peek().kind != Token::RPAREN && peek().kind != Token::END) {
      bool wrapped = peek().kind == Token::LPAREN;
      if (wrapped) next();
      Token name = expect(Token::IDENT, "a symbol name");
      Token num = expect(Token::IDENT, "an arity");
      std::size_t ar = 0;
      for (char c : num.text) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          fail("expected a numeric arity", num);
        ar = ar * 10 + static_cast<std::size_t>(c - '0');
      }
      if (vars.count(name.text))
        fail("variable " + name.text + " declared in SIG", name);
      note_arity(name.text, ar, name);
      if (wrapped) expect(Token::RPAREN, "')'");
    }
  }

  void section_rules() {
    while (peek().kind == Token::IDENT) {
      Term l = term();
      expect(Token::ARROW, "'->'");
      Term r = term();
      raw_rules.emplace_back(std::move(l), std::move(r));
    }
  }
};

}  // namespace

TRSFile parse_trs(std::string_view text, std::string name) {
  Parser p{lex(text)};
  bool seen_var = false, seen_sig = false, seen_rules = false;

  // VAR must precede term-bearing sections so identifiers classify
  // correctly; collect section spans first, then parse VAR, SIG, RULES.
  struct Span { std::string kind; std::size_t open; };
  std::vector<Span> spans;
  while (p.peek().kind != Token::END) {
    const Token open = p.expect(Token::LPAREN, "'('");
    Token kw = p.expect(Token::IDENT, "a section keyword");
    bool* seen = nullptr;
    if (kw.text == "VAR") seen = &seen_var;
    else if (kw.text == "SIG") seen = &seen_sig;
    else if (kw.text == "RULES") seen = &seen_rules;
    else p.fail("unsupported section " + kw.text, kw);
    if (*seen) p.fail("duplicate section " + kw.text, kw);
    *seen = true;
    spans.push_back({kw.text, p.pos});
    // Skip to the matching close paren.
    int depth = 1;
    while (depth > 0) {
      const Token& t = p.next();
      if (t.kind == Token::LPAREN) ++depth;
      else if (t.kind == Token::RPAREN) --depth;
      else if (t.kind == Token::END)
        throw ParseError("unterminated section " + kw.text, open.line,
                         open.col);
    }
  }
  std::stable_sort(spans.begin(), spans.end(),
                   [](const Span& a, const Span& b) {
                     auto rank = [](const std::string& k) {
                       return k == "VAR" ? 0 : k == "SIG" ? 1 : 2;
                     };
                     return rank(a.kind) < rank(b.kind);
                   });
  for (const Span& s : spans) {
    p.pos = s.open;
    if (s.kind == "VAR") p.section_var();
    else if (s.kind == "SIG") p.section_sig();
    else p.section_rules();
    p.expect(Token::RPAREN, "')'");
  }
  if (!seen_rules)
    throw ParseError("missing RULES section", 1, 1);

  TRSFile trs;
  trs.name = std::move(name);
  trs.vars.assign(p.vars.begin(), p.vars.end());
  for (auto& [l, r] : p.raw_rules) trs.rules.emplace_back(l, r);

  std::vector<Symbol> symbols;
  for (const auto& [sym, info] : p.arities)
    symbols.push_back({sym, static_cast<unsigned>(info.first)});
  trs.sig = Signature(std::move(symbols), {});
  return trs;
}

std::string print_trs(const TRSFile& trs) {
  std::string out;
  if (!trs.vars.empty()) {
    out += "(VAR";
    for (const std::string& v : trs.vars) out += " " + v;
    out += ")\n";
  }
  if (!trs.sig.symbols().empty()) {
    out += "(SIG";
    for (const Symbol& s : trs.sig.symbols())
      out += " (" + s.name + " " + std::to_string(s.arity) + ")";
    out += ")\n";
  }
  out += "(RULES\n";
  for (const Rule& r : trs.rules) out += "  " + r.str() + "\n";
  out += ")\n";
  return out;
}

Term parse_term(std::string_view text, const Signature& sig) {
  Parser p{lex(text)};
  Term t = p.term();
  if (p.peek().kind != Token::END)
    p.fail("trailing input after term", p.peek());
  // Validate against the signature.
  auto check = [&](auto&& self, const Term& u) -> void {
    unsigned ar = sig.arity(u.name());  // SymbolMismatch if unknown
    if (ar != u.args().size())
      throw LengthMismatch(u.name(), ar, u.args().size());
    for (const Term& a : u.args()) self(self, a);
  };
  check(check, t);
  return t;
}

}  // namespace lpo

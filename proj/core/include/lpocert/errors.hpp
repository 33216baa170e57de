#pragma once

#include <stdexcept>
#include <string>

namespace lpo {

// Base for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A symbol was used that the signature (or context) does not know.
struct SymbolMismatch : Error {
  std::string symbol;
  explicit SymbolMismatch(std::string sym)
      : Error("unknown symbol: " + sym), symbol(std::move(sym)) {}
};

// Argument list length disagrees with a declared arity.
struct LengthMismatch : Error {
  std::string symbol;
  std::size_t expected, got;
  LengthMismatch(std::string sym, std::size_t exp, std::size_t g)
      : Error("symbol " + sym + " expects " + std::to_string(exp) +
              " arguments, got " + std::to_string(g)),
        symbol(std::move(sym)), expected(exp), got(g) {}
};

// Precedence synthesis refuses signatures with more than 8 symbols.
struct TooManySymbols : Error {
  std::size_t count;
  explicit TooManySymbols(std::size_t n)
      : Error("precedence synthesis limited to 8 symbols, signature has " +
              std::to_string(n)),
        count(n) {}
};

// A work or memory budget was exhausted before the computation finished.
struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

// A rewrite derivation revisited a term already on the current path.
struct NonTerminating : Error {
  std::string witness;  // printed form of the cycling term
  explicit NonTerminating(std::string term)
      : Error("derivation cycles at " + term), witness(std::move(term)) {}
};

// Syntax error with 1-based position information.
struct ParseError : Error {
  int line, column;
  ParseError(const std::string& msg, int ln, int col)
      : Error(msg + " at line " + std::to_string(ln) + ", column " +
              std::to_string(col)),
        line(ln), column(col) {}
};

// The same symbol was used with two different arities.
struct ArityClash : Error {
  std::string symbol;
  std::size_t first, second;
  ArityClash(std::string sym, std::size_t a, std::size_t b)
      : Error("symbol " + sym + " used with arity " + std::to_string(a) +
              " and arity " + std::to_string(b)),
        symbol(std::move(sym)), first(a), second(b) {}
};

// Right-hand side contains a variable absent from the left-hand side.
struct VariableRight : Error {
  std::string variable;
  explicit VariableRight(std::string var)
      : Error("right-hand side introduces variable " + var),
        variable(std::move(var)) {}
};

// Left-hand side is a bare variable.
struct VariableLeft : Error {
  VariableLeft() : Error("left-hand side is a variable") {}
};

// Classification requires at least one symbol of arity >= 2.
struct DegenerateSignature : Error {
  DegenerateSignature()
      : Error("signature has no symbol of arity at least 2") {}
};

// Fundamental sequence requested for an ordinal that is not a limit.
struct NotALimit : Error {
  std::string ordinal;
  explicit NotALimit(std::string ord)
      : Error(ord + " is not a limit ordinal"), ordinal(std::move(ord)) {}
};

// Precedence pairs whose transitive closure relates a symbol to itself.
struct PrecedenceCycle : Error {
  std::string symbol;
  explicit PrecedenceCycle(std::string sym)
      : Error("precedence contains a cycle through " + sym),
        symbol(std::move(sym)) {}
};

}  // namespace lpo

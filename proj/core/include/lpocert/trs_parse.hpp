#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lpocert/rewrite.hpp"
#include "lpocert/signature.hpp"
#include "lpocert/term.hpp"

namespace lpo {

// A parsed rewrite system: declared variables, rules, and the signature
// inferred from rule symbols (merged with any SIG declarations). The
// signature carries no precedence.
struct TRSFile {
  std::string name;
  std::vector<std::string> vars;  // sorted
  std::vector<Rule> rules;
  Signature sig;
};

// Sections, in any order, each at most once:
//   (VAR x y ...)
//   (SIG f 2 g 1 ...)  or  (SIG (f 2) (g 1) ...)
//   (RULES l -> r  l2 -> r2 ...)
// Identifiers are [A-Za-z0-9_]+; terms are ident or ident(term,...).
// Variable identifiers must not be applied or declared in SIG. Arities
// are inferred from use; conflicting uses raise ArityClash, malformed
// input raises ParseError with 1-based line and column, and rule
// validation raises VariableLeft / VariableRight.
TRSFile parse_trs(std::string_view text, std::string name = "");

// Canonical text: VAR, SIG, RULES, one rule per line.
std::string print_trs(const TRSFile& trs);

// A single term over the given signature, e.g. "A(s(0),0)". Unknown
// symbols raise SymbolMismatch, wrong argument counts LengthMismatch.
Term parse_term(std::string_view text, const Signature& sig);

}  // namespace lpo

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lpocert/signature.hpp"
#include "lpocert/term.hpp"

namespace lpo {

// Strict lexicographic path order induced by the signature's precedence.
// s <_lpo t holds for t = f(t_1..t_n) iff one of
//   (1) s = t_i or s <_lpo t_i for some i,
//   (2) s = g(s_1..s_k) with g < f and s_j <_lpo t for all j,
//   (3) s = f(s_1..s_n), the argument tuples differ, (s_1..s_n) is
//       lexicographically below (t_1..t_n) under <_lpo with equal prefix,
//       and s_j <_lpo t for all j.
// A variable x is below t iff x occurs in t and x != t; nothing is below
// a variable. Symbols of s and t must belong to sig (SymbolMismatch) and
// argument counts must match declared arities (LengthMismatch).
bool lpo_less(const Term& s, const Term& t, const Signature& sig);

// Strict lexicographic extension of an arbitrary term order to equal-length
// tuples: some position i has as[i] strictly below bs[i] and all earlier
// positions equal. Throws LengthMismatch on unequal lengths.
bool lex_less(const std::vector<Term>& as, const std::vector<Term>& bs,
              const std::function<bool(const Term&, const Term&)>& below);

struct Rule;  // rewrite.hpp

struct OrientationResult {
  bool orientable = false;
  // Ascending total chain that orients every rule; empty when none exists
  // or when a supplied precedence was checked instead of synthesized.
  std::vector<std::string> chain;
  // The signature (with precedence) that witnessed the orientation.
  Signature sig;
  // Per-rule verdict r <_lpo l under that precedence.
  std::vector<bool> per_rule;
};

// Check every rule of R under the fixed precedence in sig.
OrientationResult orient(const std::vector<Rule>& rules, const Signature& sig);

// Try total chains over the given symbols in lexicographic order of the
// name-sorted symbol list and return the first that orients all rules.
// Throws TooManySymbols above 8 symbols.
OrientationResult synthesize_precedence(const std::vector<Rule>& rules,
                                        std::vector<Symbol> symbols);

}  // namespace lpo

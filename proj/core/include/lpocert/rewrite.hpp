#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpocert/signature.hpp"
#include "lpocert/term.hpp"

namespace lpo {

// A rewrite rule l -> r. Construction rejects a bare-variable left side
// (VariableLeft) and right-side variables missing on the left
// (VariableRight).
struct Rule {
  Term lhs, rhs;
  Rule(Term l, Term r);
  std::string str() const { return lhs.str() + " -> " + rhs.str(); }
};

using Substitution = std::map<std::string, Term>;

// Syntactic matching: extends sub so that pattern[sub] == subject, or
// returns false leaving sub in an unspecified state.
bool match(const Term& pattern, const Term& subject, Substitution& sub);

// Apply sub to t; unbound variables are left in place.
Term substitute(const Term& t, const Substitution& sub);

// All one-step reducts of t under the rules, at any position, sorted by
// term_less and deduplicated.
std::vector<Term> successors(const Term& t, const std::vector<Rule>& rules);

// Derivation height of ground t: the length of the longest rewrite
// sequence starting at t. Computed over the memoized reduct graph with
// on-path cycle detection. Throws NonTerminating(witness) when a cycle is
// reachable and BudgetExceeded when more than step_cap distinct terms are
// explored.
std::uint64_t dh_term(const Term& t, const std::vector<Rule>& rules,
                      std::uint64_t step_cap = 100000);

struct CurvePoint {
  unsigned n;
  std::uint64_t dh;
  Term witness;  // first maximizer in witness_less order
};

// dh_R(n) = max{ dh_term(t) : t ground, size(t) <= n } for n = 1..n_max,
// over terms enumerated from sig. When depth_bounded is set the pool is
// terms of depth <= n instead.
std::vector<CurvePoint> dh_complexity(const std::vector<Rule>& rules,
                                      const Signature& sig, unsigned n_max,
                                      std::uint64_t step_cap = 100000,
                                      bool depth_bounded = false);

struct TerminationReport {
  std::uint64_t explored = 0;        // ground terms checked
  std::vector<Term> cycles;          // NonTerminating witnesses, deduplicated
  std::uint64_t cap_breaches = 0;    // terms where step_cap ran out
};

// Run dh_term on every ground term of size <= n_max, collecting cycle
// witnesses instead of throwing.
TerminationReport check_ground_termination(const std::vector<Rule>& rules,
                                           const Signature& sig,
                                           unsigned n_max,
                                           std::uint64_t step_cap = 100000);

}  // namespace lpo

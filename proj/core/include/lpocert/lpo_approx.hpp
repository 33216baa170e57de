#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "lpocert/rewrite.hpp"
#include "lpocert/signature.hpp"
#include "lpocert/term.hpp"

namespace lpo {

// Finite approximations <_p of the lexicographic path order:
//   s <_0 t never holds; for p >= 1 and t = f(t_1..t_n), s <_p t iff
//   (1) s = t_i or s <_p t_i for some i,                    (no decrement)
//   (2) s = g(s_1..s_k), g < f, and all s_j <_{p-1} t,
//   (3) s = f(s_1..s_n), arguments lex-smaller with the changed position
//       compared at p, and every s_j with j past the changed position
//       below t at p-1 (earlier positions are equal to t's).
// The approximations are monotone in p and sound for <_lpo. On open terms
// a variable x satisfies x <_p t iff p >= 1 and x occurs properly in t.
//
// ApproxWorkspace shares decision, predecessor-set and height memos across
// calls. Predecessor sets are materialized per (term, p); the cumulative
// number of stored set elements is capped by the budget (BudgetExceeded).
class ApproxWorkspace {
 public:
  explicit ApproxWorkspace(Signature sig, std::uint64_t budget = 1000000);
  ~ApproxWorkspace();
  ApproxWorkspace(const ApproxWorkspace&) = delete;
  ApproxWorkspace& operator=(const ApproxWorkspace&) = delete;

  const Signature& sig() const { return sig_; }

  // Decide s <_p t; open terms allowed. No budget is consumed.
  bool approx_less(const Term& s, const Term& t, unsigned p);

  // P_p(t) = { s ground : s <_p t } for ground t, sorted by size then
  // structurally. Consumes budget for every newly materialized set.
  std::vector<Term> predecessors(const Term& t, unsigned p);

  // Height of ground t in the well-founded part of <_p:
  // 0 when P_p(t) is empty, else 1 + max over P_p(t).
  std::uint64_t wp_height(const Term& t, unsigned p);

  // Rule-level approximation index:
  //   0 for an empty system; otherwise 1 + max over rules of the least p
  //   with r <_p l as open terms. Requires every rule oriented by the
  //   workspace precedence (r <_lpo l); the least p is at most
  //   depth(r) + 1.
  unsigned static_pR(const std::vector<Rule>& rules);

  // Cumulative stored predecessor-set elements so far.
  std::uint64_t stored_elements() const;

 private:
  struct Impl;
  Signature sig_;
  std::unique_ptr<Impl> impl_;
};

// One-shot conveniences; each builds a fresh workspace with the default
// budget.
bool approx_less(const Term& s, const Term& t, unsigned p,
                 const Signature& sig);
std::vector<Term> predecessors(const Term& t, unsigned p,
                               const Signature& sig);
std::uint64_t wp_height(const Term& t, unsigned p, const Signature& sig);
unsigned static_pR(const std::vector<Rule>& rules, const Signature& sig);

struct ContainmentReport {
  std::uint64_t steps = 0;                        // rewrite steps checked
  std::vector<std::pair<Term, Term>> violations;  // (from, to) not in <_p
};

// Check that every rewrite step t -> u between ground terms of size
// <= size_bound satisfies u <_p t.
ContainmentReport check_containment(const std::vector<Rule>& rules,
                                    ApproxWorkspace& ws, unsigned p,
                                    unsigned size_bound);
ContainmentReport check_containment(const std::vector<Rule>& rules,
                                    const Signature& sig, unsigned p,
                                    unsigned size_bound);

}  // namespace lpo

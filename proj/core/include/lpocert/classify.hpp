#pragma once

#include <map>
#include <string>

#include "lpocert/signature.hpp"

namespace lpo {

// rk(f) = max{ rk(g) + 1 : g < f }, with max over the empty set = 0.
std::map<std::string, unsigned> compute_rk(const Signature& sig);

// Like rk, but only predecessors of arity >= 2 contribute:
// rk2(f) = max{ rk2(g) + 1 : g < f and arity(g) >= 2 }.
std::map<std::string, unsigned> compute_rk2(const Signature& sig);

struct Classification {
  unsigned k;          // max arity minus 2
  unsigned m;          // max over arity>=2 symbols of rk2(f) + 1
  unsigned max_arity;
  std::map<std::string, unsigned> rk, rk2;
};

// Throws DegenerateSignature when no symbol has arity >= 2.
Classification classify(const Signature& sig);

// The canonical (m, k) signature: constant 0, unary S, binary-core symbols
// A_0 < ... < A_{m-1} of arity 2+k, and unary f_0 < ... < f_{Q-1} on top,
// chained above 0 < S. classify() of the result returns (k, m) back.
Signature gen_paper_signature(unsigned m, unsigned k, unsigned q);

}  // namespace lpo

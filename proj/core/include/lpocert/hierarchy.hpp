#pragma once

#include <cstdint>

#include "lpocert/classify.hpp"
#include "lpocert/ordinal.hpp"

namespace lpo {

// Fast-growing hierarchy with base F_0(n) = n + 1:
//   F_{a+1}(n) = F_a^{(n+1)}(n)   (n+1-fold iteration)
//   F_l(n)     = F_{l[n]}(n)      (canonical fundamental sequence)
// Aborts with BudgetExceeded when any intermediate value exceeds
// value_budget or when the recursion performs more than work_cap calls.
BigNat fast_F(const OrdinalCNF& alpha, const BigNat& n,
              const BigNat& value_budget =
                  boost::multiprecision::pow(BigNat(10), 100),
              std::uint64_t work_cap = 10000000);

// Slow-growing hierarchy: G_n(0) = 0, G_n(a+1) = G_n(a) + 1,
// G_n(l) = G_n(l[n]).
BigNat slow_G(const OrdinalCNF& alpha, const BigNat& n);

// Bound index for a classified signature: w^{1+k} * m.
OrdinalCNF bound_index(const Classification& cls);

}  // namespace lpo

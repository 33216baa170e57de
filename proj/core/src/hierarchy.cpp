#include "lpocert/hierarchy.hpp"

#include "lpocert/errors.hpp"

namespace lpo {

namespace {

struct FState {
  const BigNat& value_budget;
  std::uint64_t work_cap;
  std::uint64_t work = 0;

  void tick() {
    if (++work > work_cap)
      throw BudgetExceeded("fast-growing hierarchy exceeded " +
                           std::to_string(work_cap) + " evaluation steps");
  }
  void check_value(const BigNat& v) const {
    if (v > value_budget)
      throw BudgetExceeded(
          "fast-growing hierarchy value exceeded the budget");
  }
};

BigNat F(const OrdinalCNF& alpha, BigNat n, FState& st) {
  st.tick();
  st.check_value(n);
  if (alpha.is_zero()) {
    BigNat v = n + 1;
    st.check_value(v);
    return v;
  }
  if (alpha.is_successor()) {
    OrdinalCNF beta = alpha.pred();
    BigNat iterations = n + 1;
    for (BigNat i = 0; i < iterations; ++i) n = F(beta, n, st);
    return n;
  }
  return F(alpha.fund_seq(n), n, st);
}

}  // namespace

BigNat fast_F(const OrdinalCNF& alpha, const BigNat& n,
              const BigNat& value_budget, std::uint64_t work_cap) {
  if (n < 0) throw Error("fast_F needs a natural argument");
  FState st{value_budget, work_cap};
  return F(alpha, n, st);
}

OrdinalCNF bound_index(const Classification& cls) {
  return OrdinalCNF::omega_power(1 + cls.k, BigNat(cls.m));
}

BigNat slow_G(const OrdinalCNF& alpha, const BigNat& n) {
  if (n < 0) throw Error("slow_G needs a natural argument");
  BigNat total = 0;
  OrdinalCNF cur = alpha;
  while (!cur.is_zero()) {
    if (cur.is_successor()) {
      // A trailing w^0*c contributes c steps at once.
      BigNat c = cur.terms().back().second;
      total += c;
      std::vector<std::pair<std::uint64_t, BigNat>> rest(
          cur.terms().begin(), cur.terms().end() - 1);
      cur = OrdinalCNF::from_terms(std::move(rest));
    } else {
      cur = cur.fund_seq(n);
    }
  }
  return total;
}

}  // namespace lpo

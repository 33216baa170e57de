#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace lpo {

using BigNat = boost::multiprecision::cpp_int;

// Ordinals below w^w in Cantor normal form: a finite sum
//   w^{e_1} * c_1 + ... + w^{e_r} * c_r
// with e_1 > ... > e_r natural numbers and every c_i >= 1.
class OrdinalCNF {
 public:
  OrdinalCNF() = default;  // zero

  static OrdinalCNF zero() { return {}; }
  static OrdinalCNF from_nat(BigNat n);
  // w^exp * coeff; coeff must be >= 1.
  static OrdinalCNF omega_power(std::uint64_t exp, BigNat coeff = 1);
  // Terms may arrive unsorted but exponents must be distinct; coefficients
  // of zero are dropped.
  static OrdinalCNF from_terms(std::vector<std::pair<std::uint64_t, BigNat>>);

  // Strictly descending exponents.
  const std::vector<std::pair<std::uint64_t, BigNat>>& terms() const {
    return terms_;
  }

  bool is_zero() const { return terms_.empty(); }
  // A successor has a trailing w^0 term; a nonzero ordinal that has none
  // is a limit.
  bool is_successor() const;
  bool is_limit() const { return !is_zero() && !is_successor(); }

  // For a successor a+1, returns a. Throws Error on zero or limits.
  OrdinalCNF pred() const;

  // Canonical fundamental sequence at n >= 0:
  //   (b + w^{e+1})[n]     = b + w^e * n
  //   (b + w^{e+1} * c)[n] = b + w^{e+1} * (c-1) + w^e * n   for c >= 2.
  // Throws NotALimit unless *this is a limit.
  OrdinalCNF fund_seq(const BigNat& n) const;

  // Total order; -1, 0, 1.
  int cmp(const OrdinalCNF& other) const;
  bool operator==(const OrdinalCNF& o) const { return cmp(o) == 0; }
  bool operator<(const OrdinalCNF& o) const { return cmp(o) < 0; }

  // Ordinal (left) addition; used by fund_seq and parsing.
  OrdinalCNF plus(const OrdinalCNF& other) const;

  // Canonical text: "0", "w", "w + 4", "w^2*2 + w*3 + 1". Exponent 1 and
  // coefficient 1 are left implicit; w^0*c prints as the bare natural.
  std::string str() const;

  // Liberal parser for the same shape: accepts explicit ^1 and *1, extra
  // whitespace, and unsorted terms with distinct exponents. ParseError on
  // malformed input, duplicate exponents, or values above w^w.
  static OrdinalCNF parse(const std::string& text);

 private:
  std::vector<std::pair<std::uint64_t, BigNat>> terms_;
};

}  // namespace lpo

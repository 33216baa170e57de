#include <doctest.h>

#include "lpocert/classify.hpp"
#include "lpocert/errors.hpp"
#include "lpocert/hierarchy.hpp"
#include "lpocert/ordinal.hpp"

using lpo::BigNat;
using lpo::OrdinalCNF;

TEST_CASE("printing ordinals in Cantor normal form") {
  CHECK(OrdinalCNF::zero().str() == "0");
  CHECK(OrdinalCNF::from_nat(5).str() == "5");
  CHECK(OrdinalCNF::omega_power(1).str() == "w");
  CHECK(OrdinalCNF::omega_power(2, 2).str() == "w^2*2");
  CHECK(OrdinalCNF::from_terms({{3, 1}, {1, 4}, {0, 17}}).str() ==
        "w^3+w*4+17");
}

TEST_CASE("parsing is liberal, printing is canonical") {
  const char* cases[] = {"0", "5", "w", "w^2*2", "w*2+3", "w^3+w*4+17",
                         "w^2+w+1"};
  for (const char* text : cases)
    CHECK(OrdinalCNF::parse(text).str() == text);

  CHECK(OrdinalCNF::parse("w^1*1").str() == "w");
  CHECK(OrdinalCNF::parse("w^0*3").str() == "3");
  CHECK(OrdinalCNF::parse(" w ^ 2 + w * 2 ").str() == "w^2+w*2");

  CHECK_THROWS_AS(OrdinalCNF::parse("w*0+3"), lpo::ParseError);
  CHECK_THROWS_AS(OrdinalCNF::parse("w+w"), lpo::ParseError);
  CHECK_THROWS_AS(OrdinalCNF::parse("q"), lpo::ParseError);
  CHECK_THROWS_AS(OrdinalCNF::parse(""), lpo::ParseError);
  CHECK_THROWS_AS(OrdinalCNF::parse("w^9999999"), lpo::ParseError);
}

TEST_CASE("comparison is lexicographic on (exponent, coefficient)") {
  CHECK(OrdinalCNF::zero() < OrdinalCNF::from_nat(1));
  CHECK(OrdinalCNF::from_nat(17) < OrdinalCNF::omega_power(1));
  CHECK(OrdinalCNF::parse("w*5") < OrdinalCNF::parse("w^2"));
  CHECK(OrdinalCNF::parse("w^2+w") < OrdinalCNF::parse("w^2*2"));
  CHECK(OrdinalCNF::parse("w^2*2") == OrdinalCNF::parse("w^2*2"));
}

TEST_CASE("successor structure and predecessors") {
  CHECK(OrdinalCNF::zero().is_zero());
  CHECK(!OrdinalCNF::zero().is_limit());
  CHECK(OrdinalCNF::parse("w+3").is_successor());
  CHECK(OrdinalCNF::parse("w+3").pred().str() == "w+2");
  CHECK(OrdinalCNF::parse("w").is_limit());
  CHECK(OrdinalCNF::parse("w^2*2").is_limit());
}

TEST_CASE("left addition with coefficient carry") {
  auto plus = [](const char* a, const char* b) {
    return OrdinalCNF::parse(a).plus(OrdinalCNF::parse(b)).str();
  };
  CHECK(plus("w+3", "w") == "w*2");
  CHECK(plus("w^2", "w+1") == "w^2+w+1");
  CHECK(plus("3", "w") == "w");  // absorbed
  CHECK(plus("w*2+5", "w*3") == "w*5");
  CHECK(plus("0", "w") == "w");
  CHECK(plus("w", "0") == "w");
}

TEST_CASE("fundamental sequences peel the trailing term") {
  auto fs = [](const char* a, unsigned n) {
    return OrdinalCNF::parse(a).fund_seq(n).str();
  };
  CHECK(fs("w", 3) == "3");
  CHECK(fs("w", 0) == "0");
  CHECK(fs("w^2", 3) == "w*3");
  CHECK(fs("w^2*2", 3) == "w^2+w*3");
  CHECK(fs("w^3+w^2", 2) == "w^3+w*2");
  CHECK(fs("w*2", 5) == "w+5");

  CHECK_THROWS_AS(OrdinalCNF::parse("w+1").fund_seq(2), lpo::NotALimit);
  CHECK_THROWS_AS(OrdinalCNF::zero().fund_seq(1), lpo::NotALimit);
}

TEST_CASE("fast-growing hierarchy identities") {
  for (unsigned n = 0; n <= 10; ++n) {
    CHECK(lpo::fast_F(OrdinalCNF::zero(), n) == n + 1);
    CHECK(lpo::fast_F(OrdinalCNF::from_nat(1), n) == 2 * n + 1);
  }
  for (unsigned n = 0; n <= 6; ++n) {
    BigNat want = (BigNat(1) << (n + 1)) * (n + 1) - 1;
    CHECK(lpo::fast_F(OrdinalCNF::from_nat(2), n) == want);
  }
  CHECK(lpo::fast_F(OrdinalCNF::parse("w"), 2) == 23);
}

TEST_CASE("fast_F stops at its budgets") {
  // F_{w+1}(1) = F_w(F_w(1)) = F_3(3); the tower overflows the value budget
  // or the tick cap long before completing.
  CHECK_THROWS_AS(lpo::fast_F(OrdinalCNF::parse("w+1"), 1),
                  lpo::BudgetExceeded);
}

TEST_CASE("slow-growing hierarchy") {
  for (unsigned n = 0; n <= 4; ++n)
    for (unsigned k = 0; k <= 3; ++k) {
      BigNat want = 1;
      for (unsigned i = 0; i < k; ++i) want *= n;
      CHECK(lpo::slow_G(OrdinalCNF::omega_power(k), n) == want);
    }
  CHECK(lpo::slow_G(OrdinalCNF::zero(), 7) == 0);
  CHECK(lpo::slow_G(OrdinalCNF::parse("w^2+w+1"), 3) == 13);
  CHECK(lpo::slow_G(OrdinalCNF::parse("w*3"), 2) == 6);
}

TEST_CASE("bound index w^{1+k}*m") {
  CHECK(lpo::bound_index(lpo::classify(lpo::gen_paper_signature(1, 0, 0)))
            .str() == "w");
  CHECK(lpo::bound_index(lpo::classify(lpo::gen_paper_signature(2, 1, 1)))
            .str() == "w^2*2");
  CHECK(lpo::bound_index(lpo::classify(lpo::gen_paper_signature(3, 2, 0)))
            .str() == "w^3*3");
}

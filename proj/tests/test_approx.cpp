#include <doctest.h>

#include <vector>

#include "lpocert/classify.hpp"
#include "lpocert/errors.hpp"
#include "lpocert/lpo.hpp"
#include "lpocert/lpo_approx.hpp"
#include "lpocert/rewrite.hpp"
#include "lpocert/signature.hpp"
#include "lpocert/term.hpp"

using lpo::ApproxWorkspace;
using lpo::Rule;
using lpo::Signature;
using lpo::Term;

namespace {

Term n0() { return Term::app("0"); }
Term s(Term t) { return Term::app("s", {std::move(t)}); }
Term A(Term a, Term b) { return Term::app("A", {std::move(a), std::move(b)}); }
Term tower(unsigned k) {
  Term t = n0();
  while (k--) t = s(t);
  return t;
}

Signature sig_nat() { return Signature::chain({{"0", 0}, {"s", 1}}, {"0", "s"}); }

Signature sig_ack() {
  return Signature::chain({{"0", 0}, {"s", 1}, {"A", 2}}, {"0", "s", "A"});
}

std::vector<Rule> ack_rules() {
  Term x = Term::var("x"), y = Term::var("y");
  return {Rule(A(n0(), y), s(y)), Rule(A(s(x), n0()), A(x, s(n0()))),
          Rule(A(s(x), s(y)), A(x, A(s(x), y)))};
}

}  // namespace

TEST_CASE("p = 0 relates nothing; variables sit at the bottom") {
  ApproxWorkspace ws(sig_nat());
  Term x = Term::var("x");
  CHECK(!ws.approx_less(n0(), s(n0()), 0));
  CHECK(!ws.approx_less(x, s(x), 0));
  CHECK(ws.approx_less(x, s(x), 1));   // proper occurrence, p >= 1
  CHECK(!ws.approx_less(x, x, 3));
  CHECK(!ws.approx_less(n0(), x, 3));  // nothing below a variable
}

TEST_CASE("the terms below s(s(0)) at p = 2") {
  ApproxWorkspace ws(sig_nat());
  CHECK(ws.approx_less(n0(), s(s(n0())), 2));
  CHECK(ws.approx_less(s(n0()), s(s(n0())), 2));
  CHECK(!ws.approx_less(s(s(n0())), s(s(n0())), 2));

  std::vector<Term> preds = ws.predecessors(s(s(n0())), 2);
  REQUIRE(preds.size() == 2);
  CHECK(preds[0] == n0());
  CHECK(preds[1] == s(n0()));

  CHECK(ws.predecessors(s(n0()), 2) == std::vector<Term>{n0()});
  for (unsigned p = 0; p <= 4; ++p)
    CHECK(ws.predecessors(n0(), p).empty());
}

TEST_CASE("approx_less validates terms against the signature") {
  ApproxWorkspace ws(sig_nat());
  CHECK_THROWS_AS(ws.approx_less(Term::app("h"), n0(), 2),
                  lpo::SymbolMismatch);
  CHECK_THROWS_AS(ws.approx_less(Term::app("s", {n0(), n0()}), n0(), 2),
                  lpo::LengthMismatch);
}

TEST_CASE("static_pR of the bundled systems") {
  Term x = Term::var("x");

  ApproxWorkspace nat(sig_nat());
  CHECK(nat.static_pR({Rule(s(x), x)}) == 2);
  CHECK(nat.static_pR({}) == 0);

  Signature usig = Signature::chain({{"c", 0}, {"f", 1}, {"g", 1}},
                                    {"c", "g", "f"});
  ApproxWorkspace unary(usig);
  CHECK(unary.static_pR({Rule(Term::app("f", {x}), Term::app("g", {x}))}) ==
        3);

  ApproxWorkspace ack(sig_ack());
  CHECK(ack.static_pR(ack_rules()) == 4);

  Signature psig = lpo::gen_paper_signature(2, 1, 1);
  Term y = Term::var("y"), z = Term::var("z");
  std::vector<Rule> paper = {
      Rule(Term::app("A_0", {x, y, z}), Term::app("S", {Term::app("S", {x})})),
      Rule(Term::app("A_1", {x, y, z}), Term::app("A_0", {z, x, y})),
      Rule(Term::app("f_0", {x}), Term::app("A_1", {x, x, x}))};
  ApproxWorkspace pw(psig);
  CHECK(pw.static_pR(paper) == 4);
}

TEST_CASE("static_pR rejects rules the precedence does not orient") {
  Signature usig = Signature::chain({{"c", 0}, {"f", 1}, {"g", 1}},
                                    {"c", "g", "f"});
  ApproxWorkspace ws(usig);
  Term x = Term::var("x");
  CHECK_THROWS_AS(
      ws.static_pR({Rule(Term::app("g", {x}), Term::app("f", {x}))}),
      lpo::Error);
}

TEST_CASE("well-founded-part heights over {0,s}") {
  ApproxWorkspace ws(sig_nat());
  CHECK(ws.wp_height(n0(), 3) == 0);
  CHECK(ws.wp_height(s(s(n0())), 2) == 2);
  for (unsigned k = 0; k <= 5; ++k) CHECK(ws.wp_height(tower(k), 2) == k);
  for (unsigned p = 2; p <= 5; ++p)  // monotone in p
    CHECK(ws.wp_height(tower(4), p) <= ws.wp_height(tower(4), p + 1));
}

TEST_CASE("well-founded-part heights over the Ackermann signature") {
  ApproxWorkspace ws(sig_ack(), 100000000);
  CHECK(ws.wp_height(A(n0(), n0()), 4) == 4);
  CHECK(ws.wp_height(s(A(n0(), n0())), 4) == 5);
  CHECK(ws.wp_height(A(n0(), s(n0())), 4) == 8);
  CHECK(ws.wp_height(A(n0(), A(n0(), n0())), 4) == 17);
  CHECK(ws.wp_height(A(s(n0()), n0()), 4) == 98);
  CHECK(ws.wp_height(A(s(n0()), s(n0())), 3) == 89);
}

TEST_CASE("the element budget is cumulative and enforced") {
  ApproxWorkspace ws(sig_nat(), 20);
  CHECK(ws.stored_elements() == 0);
  CHECK(ws.wp_height(tower(3), 2) == 3);
  // P_1 and P_2 of the towers s(0), s(s(0)), s(s(s(0))): (1+2+3) * 2.
  CHECK(ws.stored_elements() == 12);
  CHECK_THROWS_AS(ws.wp_height(tower(9), 2), lpo::BudgetExceeded);
}

TEST_CASE("containment of rewrite steps in <_p") {
  Term x = Term::var("x");
  std::vector<Rule> nat_rules = {Rule(s(x), x)};

  lpo::ContainmentReport ok =
      lpo::check_containment(nat_rules, sig_nat(), 2, 8);
  CHECK(ok.steps == 7);
  CHECK(ok.violations.empty());

  lpo::ContainmentReport zero =
      lpo::check_containment(nat_rules, sig_nat(), 0, 8);
  CHECK(zero.steps == 7);
  CHECK(!zero.violations.empty());  // <_0 is empty

  ApproxWorkspace ws(sig_ack(), 100000000);
  lpo::ContainmentReport ack =
      lpo::check_containment(ack_rules(), ws, 4, 7);
  CHECK(ack.violations.empty());
  CHECK(ack.steps > 0);
}

#include <doctest.h>

#include "lpocert/errors.hpp"
#include "lpocert/lpo.hpp"
#include "lpocert/rewrite.hpp"
#include "lpocert/signature.hpp"
#include "lpocert/term.hpp"

using lpo::Rule;
using lpo::Signature;
using lpo::Term;

namespace {

Term n0() { return Term::app("0"); }
Term s(Term t) { return Term::app("s", {std::move(t)}); }
Term f2(Term a, Term b) { return Term::app("f", {std::move(a), std::move(b)}); }
Term A(Term a, Term b) { return Term::app("A", {std::move(a), std::move(b)}); }

Signature sig_0sf() {
  return Signature::chain({{"0", 0}, {"s", 1}, {"f", 2}}, {"0", "s", "f"});
}

Signature sig_ack() {
  return Signature::chain({{"0", 0}, {"s", 1}, {"A", 2}}, {"0", "s", "A"});
}

std::vector<Rule> ack_rules() {
  Term x = Term::var("x"), y = Term::var("y");
  return {Rule(A(n0(), y), s(y)), Rule(A(s(x), n0()), A(x, s(n0()))),
          Rule(A(s(x), s(y)), A(x, A(s(x), y)))};
}

}  // namespace

TEST_CASE("lexicographic first difference beats size") {
  Signature sig = sig_0sf();
  CHECK(lpo::lpo_less(f2(n0(), s(s(s(n0())))), f2(s(n0()), n0()), sig));
  CHECK(!lpo::lpo_less(f2(s(n0()), n0()), f2(n0(), s(s(s(n0())))), sig));
}

TEST_CASE("subterms, precedence and variables") {
  Signature sig = sig_0sf();
  Term x = Term::var("x");
  CHECK(lpo::lpo_less(n0(), s(n0()), sig));          // subterm
  CHECK(lpo::lpo_less(s(n0()), f2(n0(), s(n0())), sig));
  CHECK(lpo::lpo_less(s(s(n0())), f2(n0(), n0()), sig));  // s < f, clause 2
  CHECK(!lpo::lpo_less(s(n0()), s(n0()), sig));      // irreflexive
  CHECK(lpo::lpo_less(x, s(x), sig));                // proper occurrence
  CHECK(!lpo::lpo_less(x, x, sig));
  CHECK(!lpo::lpo_less(x, s(Term::var("y")), sig));  // no occurrence
  CHECK(!lpo::lpo_less(n0(), x, sig));               // nothing below a var
}

TEST_CASE("lpo_less validates terms against the signature") {
  Signature sig = sig_0sf();
  CHECK_THROWS_AS(lpo::lpo_less(Term::app("h"), n0(), sig),
                  lpo::SymbolMismatch);
  CHECK_THROWS_AS(lpo::lpo_less(Term::app("s", {n0(), n0()}), n0(), sig),
                  lpo::LengthMismatch);
}

TEST_CASE("lex_less on tuples") {
  auto below = [](const Term& a, const Term& b) {
    return a.size() < b.size();
  };
  CHECK(!lpo::lex_less({}, {}, below));
  CHECK(lpo::lex_less({n0(), s(n0())}, {s(n0()), n0()}, below));
  CHECK(!lpo::lex_less({n0(), n0()}, {n0(), n0()}, below));
  CHECK_THROWS_AS(lpo::lex_less({n0()}, {n0(), n0()}, below),
                  lpo::LengthMismatch);
}

TEST_CASE("orienting the Ackermann rules under 0<s<A") {
  lpo::OrientationResult res = lpo::orient(ack_rules(), sig_ack());
  CHECK(res.orientable);
  REQUIRE(res.per_rule.size() == 3);
  CHECK(res.per_rule[0]);
  CHECK(res.per_rule[1]);
  CHECK(res.per_rule[2]);
  CHECK(res.chain == std::vector<std::string>{"0", "s", "A"});
}

TEST_CASE("a wrong precedence fails per rule") {
  Signature bad =
      Signature::chain({{"0", 0}, {"s", 1}, {"A", 2}}, {"A", "s", "0"});
  lpo::OrientationResult res = lpo::orient(ack_rules(), bad);
  CHECK(!res.orientable);
  CHECK(!res.per_rule[0]);  // s(y) not below A(0,y) when A < s
}

TEST_CASE("synthesis returns the first orienting chain") {
  Term x = Term::var("x");

  lpo::OrientationResult nat = lpo::synthesize_precedence(
      {Rule(s(x), x)}, {{"0", 0}, {"s", 1}});
  CHECK(nat.orientable);
  CHECK(nat.chain == std::vector<std::string>{"0", "s"});

  lpo::OrientationResult unary = lpo::synthesize_precedence(
      {Rule(Term::app("f", {x}), Term::app("g", {x}))},
      {{"c", 0}, {"f", 1}, {"g", 1}});
  CHECK(unary.orientable);
  CHECK(unary.chain == std::vector<std::string>{"c", "g", "f"});

  lpo::OrientationResult ack =
      lpo::synthesize_precedence(ack_rules(), sig_ack().symbols());
  CHECK(ack.orientable);
  CHECK(ack.chain == std::vector<std::string>{"0", "s", "A"});
}

TEST_CASE("synthesis proves the swap system unorientable") {
  Term x = Term::var("x");
  std::vector<Rule> rules = {Rule(Term::app("f", {x}), Term::app("g", {x})),
                             Rule(Term::app("g", {x}), Term::app("f", {x}))};
  lpo::OrientationResult res = lpo::synthesize_precedence(
      rules, {{"c", 0}, {"f", 1}, {"g", 1}});
  CHECK(!res.orientable);
}

TEST_CASE("synthesis refuses more than 8 symbols") {
  std::vector<lpo::Symbol> syms;
  for (int i = 0; i < 9; ++i)
    syms.push_back({"k" + std::to_string(i), 0});
  std::vector<Rule> rules = {Rule(Term::app("k1"), Term::app("k0"))};
  CHECK_THROWS_AS(lpo::synthesize_precedence(rules, syms),
                  lpo::TooManySymbols);
}

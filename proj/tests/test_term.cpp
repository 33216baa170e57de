#include <doctest.h>

#include <algorithm>

#include "lpocert/signature.hpp"
#include "lpocert/term.hpp"
#include "lpocert/term_enum.hpp"

using lpo::Signature;
using lpo::Term;

namespace {

Term n0() { return Term::app("0"); }
Term s(Term t) { return Term::app("s", {std::move(t)}); }
Term f(Term a, Term b) { return Term::app("f", {std::move(a), std::move(b)}); }

Signature sig_0sf() {
  return Signature::chain({{"0", 0}, {"s", 1}, {"f", 2}}, {"0", "s", "f"});
}

}  // namespace

TEST_CASE("term measures") {
  CHECK(n0().depth() == 0);
  CHECK(n0().size() == 1);
  CHECK(s(n0()).depth() == 1);
  CHECK(f(n0(), s(n0())).size() == 4);
  CHECK(f(n0(), s(n0())).depth() == 2);
  CHECK(Term::var("x").depth() == 0);
  CHECK(Term::var("x").size() == 1);
  CHECK(f(Term::var("x"), n0()).ground() == false);
  CHECK(f(n0(), n0()).ground() == true);
}

TEST_CASE("term printing and equality") {
  CHECK(f(n0(), s(n0())).str() == "f(0,s(0))");
  CHECK(Term::var("x").str() == "x");
  CHECK(n0() == n0());
  CHECK(s(n0()) != n0());
  CHECK(Term::var("x") != Term::app("x"));
  CHECK(s(n0()).hash() == s(n0()).hash());
}

TEST_CASE("subterms includes the term itself, in structural order") {
  std::vector<Term> subs = lpo::subterms(s(s(n0())));
  REQUIRE(subs.size() == 3);
  CHECK(subs[0] == n0());
  CHECK(subs[1] == s(n0()));
  CHECK(subs[2] == s(s(n0())));

  // Shared subterms are reported once.
  CHECK(lpo::subterms(f(s(n0()), s(n0()))).size() == 3);
}

TEST_CASE("occurs and variables") {
  Term x = Term::var("x"), y = Term::var("y");
  CHECK(lpo::occurs(x, f(x, n0())));
  CHECK(!lpo::occurs(y, f(x, n0())));
  CHECK(lpo::occurs(s(n0()), f(n0(), s(n0()))));
  std::vector<std::string> vars = lpo::variables(f(y, s(x)));
  CHECK(vars == std::vector<std::string>{"x", "y"});
  CHECK(lpo::variables(n0()).empty());
}

TEST_CASE("structural order: variables first, then by symbol and arguments") {
  Term x = Term::var("x"), y = Term::var("y");
  CHECK(lpo::term_cmp(x, y) < 0);
  CHECK(lpo::term_cmp(x, n0()) < 0);
  CHECK(lpo::term_cmp(n0(), s(n0())) < 0);      // "0" before "s"
  CHECK(lpo::term_cmp(s(n0()), s(s(n0()))) < 0);  // recurse into arguments
  CHECK(lpo::term_cmp(n0(), n0()) == 0);
  CHECK(lpo::witness_less(s(n0()), f(n0(), s(n0()))));  // depth 1 < depth 2
  CHECK(lpo::witness_less(f(n0(), n0()), s(n0())));     // same depth: f < s
}

TEST_CASE("ground enumeration by depth over {0,s,f}") {
  Signature sig = sig_0sf();
  CHECK(lpo::enum_ground_by_depth(sig, 0).size() == 1);
  CHECK(lpo::enum_ground_by_depth(sig, 1).size() == 3);
  CHECK(lpo::enum_ground_by_depth(sig, 2).size() == 13);
  CHECK(lpo::enum_ground_by_depth(sig, 3).size() == 183);
  CHECK(lpo::enum_ground_by_depth(sig, 4).size() == 33673);
}

TEST_CASE("ground enumeration by size is size-major and deterministic") {
  Signature ack =
      Signature::chain({{"0", 0}, {"s", 1}, {"A", 2}}, {"0", "s", "A"});
  std::vector<Term> terms = lpo::enum_ground_by_size(ack, 4);
  std::vector<std::string> names;
  for (const Term& t : terms) names.push_back(t.str());
  CHECK(names == std::vector<std::string>{
                     "0", "s(0)", "A(0,0)", "s(s(0))", "A(0,s(0))",
                     "A(s(0),0)", "s(A(0,0))", "s(s(s(0)))"});
  for (std::size_t i = 1; i < terms.size(); ++i)
    CHECK(terms[i - 1].size() <= terms[i].size());

  CHECK(lpo::enum_ground_by_size(ack, 6).size() == 38);
}

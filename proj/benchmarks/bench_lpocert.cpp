#include <benchmark/benchmark.h>

#include "lpocert/hierarchy.hpp"
#include "lpocert/lpo.hpp"
#include "lpocert/lpo_approx.hpp"
#include "lpocert/ordinal.hpp"
#include "lpocert/rewrite.hpp"
#include "lpocert/signature.hpp"
#include "lpocert/term.hpp"

namespace {

using lpo::Rule;
using lpo::Signature;
using lpo::Term;

Term n0() { return Term::app("0"); }
Term s(Term t) { return Term::app("s", {std::move(t)}); }
Term A(Term a, Term b) { return Term::app("A", {std::move(a), std::move(b)}); }

Signature sig_ack() {
  return Signature::chain({{"0", 0}, {"s", 1}, {"A", 2}}, {"0", "s", "A"});
}

std::vector<Rule> ack_rules() {
  Term x = Term::var("x"), y = Term::var("y");
  return {Rule(A(n0(), y), s(y)), Rule(A(s(x), n0()), A(x, s(n0()))),
          Rule(A(s(x), s(y)), A(x, A(s(x), y)))};
}

void bench_lpo_less(benchmark::State& state) {
  Signature sig = sig_ack();
  Term lhs = A(s(s(n0())), A(s(n0()), s(s(n0()))));
  Term rhs = A(s(s(s(n0()))), n0());
  for (auto _ : state)
    benchmark::DoNotOptimize(lpo::lpo_less(lhs, rhs, sig));
}
BENCHMARK(bench_lpo_less);

void bench_synthesize(benchmark::State& state) {
  std::vector<Rule> rules = ack_rules();
  std::vector<lpo::Symbol> symbols = sig_ack().symbols();
  for (auto _ : state)
    benchmark::DoNotOptimize(lpo::synthesize_precedence(rules, symbols));
}
BENCHMARK(bench_synthesize);

void bench_predecessors(benchmark::State& state) {
  Signature sig = sig_ack();
  Term t = A(n0(), s(n0()));
  unsigned p = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    lpo::ApproxWorkspace ws(sig);  // fresh memo: measures materialization
    benchmark::DoNotOptimize(ws.predecessors(t, p));
  }
}
BENCHMARK(bench_predecessors)->Arg(3)->Arg(4)->Arg(5);

void bench_wp_height(benchmark::State& state) {
  Signature sig = sig_ack();
  Term t = A(n0(), A(n0(), n0()));
  for (auto _ : state) {
    lpo::ApproxWorkspace ws(sig);
    benchmark::DoNotOptimize(ws.wp_height(t, 4));
  }
}
BENCHMARK(bench_wp_height);

void bench_dh_term(benchmark::State& state) {
  std::vector<Rule> rules = ack_rules();
  Term t = A(s(s(n0())), s(n0()));  // dh = 14
  for (auto _ : state)
    benchmark::DoNotOptimize(lpo::dh_term(t, rules));
}
BENCHMARK(bench_dh_term);

void bench_fast_F(benchmark::State& state) {
  lpo::OrdinalCNF w = lpo::OrdinalCNF::omega_power(1);
  for (auto _ : state)
    benchmark::DoNotOptimize(lpo::fast_F(w, 2));
}
BENCHMARK(bench_fast_F);

void bench_slow_G(benchmark::State& state) {
  lpo::OrdinalCNF alpha = lpo::OrdinalCNF::omega_power(3);
  for (auto _ : state)
    benchmark::DoNotOptimize(lpo::slow_G(alpha, 4));
}
BENCHMARK(bench_slow_G);

}  // namespace

BENCHMARK_MAIN();

#include "lpocert/rewrite.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "lpocert/errors.hpp"
#include "lpocert/term_enum.hpp"

namespace lpo {

Rule::Rule(Term l, Term r) : lhs(std::move(l)), rhs(std::move(r)) {
  if (lhs.is_var()) throw VariableLeft();
  auto lvars = variables(lhs);
  for (const std::string& v : variables(rhs))
    if (!std::binary_search(lvars.begin(), lvars.end(), v))
      throw VariableRight(v);
}

bool match(const Term& pattern, const Term& subject, Substitution& sub) {
  if (pattern.is_var()) {
    auto [it, fresh] = sub.emplace(pattern.name(), subject);
    return fresh || it->second == subject;
  }
  if (subject.is_var() || pattern.name() != subject.name() ||
      pattern.args().size() != subject.args().size())
    return false;
  for (std::size_t i = 0; i < pattern.args().size(); ++i)
    if (!match(pattern.args()[i], subject.args()[i], sub)) return false;
  return true;
}

Term substitute(const Term& t, const Substitution& sub) {
  if (t.is_var()) {
    auto it = sub.find(t.name());
    return it == sub.end() ? t : it->second;
  }
  if (t.args().empty()) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(substitute(a, sub));
  return Term::app(t.name(), std::move(args));
}

namespace {

void reducts_at_root(const Term& t, const std::vector<Rule>& rules,
                     std::vector<Term>& out) {
  for (const Rule& rule : rules) {
    Substitution sub;
    if (match(rule.lhs, t, sub)) out.push_back(substitute(rule.rhs, sub));
  }
}

}  // namespace

std::vector<Term> successors(const Term& t, const std::vector<Rule>& rules) {
  std::vector<Term> out;
  reducts_at_root(t, rules, out);
  for (std::size_t i = 0; i < t.args().size(); ++i)
    for (const Term& u : successors(t.args()[i], rules)) {
      std::vector<Term> args = t.args();
      args[i] = u;
      out.push_back(Term::app(t.name(), std::move(args)));
    }
  std::sort(out.begin(), out.end(), term_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

struct DhState {
  std::unordered_map<Term, std::uint64_t, TermHash> memo;
  std::unordered_set<Term, TermHash> on_path;
  std::uint64_t step_cap;
};

std::uint64_t dh_rec(const Term& t, const std::vector<Rule>& rules,
                     DhState& st) {
  if (auto it = st.memo.find(t); it != st.memo.end()) return it->second;
  if (st.on_path.count(t)) throw NonTerminating(t.str());
  if (st.memo.size() + st.on_path.size() >= st.step_cap)
    throw BudgetExceeded("derivation height explored more than " +
                         std::to_string(st.step_cap) + " distinct terms");
  st.on_path.insert(t);
  std::uint64_t best = 0;
  for (const Term& u : successors(t, rules))
    best = std::max(best, 1 + dh_rec(u, rules, st));
  st.on_path.erase(t);
  return st.memo[t] = best;
}

}  // namespace

std::uint64_t dh_term(const Term& t, const std::vector<Rule>& rules,
                      std::uint64_t step_cap) {
  DhState st;
  st.step_cap = step_cap;
  return dh_rec(t, rules, st);
}

std::vector<CurvePoint> dh_complexity(const std::vector<Rule>& rules,
                                      const Signature& sig, unsigned n_max,
                                      std::uint64_t step_cap,
                                      bool depth_bounded) {
  DhState st;
  st.step_cap = step_cap;
  std::vector<Term> pool = depth_bounded
                               ? enum_ground_by_depth(sig, n_max)
                               : enum_ground_by_size(sig, n_max);
  std::stable_sort(pool.begin(), pool.end(), witness_less);

  std::vector<CurvePoint> curve;
  for (unsigned n = 1; n <= n_max; ++n) {
    CurvePoint pt{n, 0, Term()};
    bool have = false;
    for (const Term& t : pool) {
      unsigned measure = depth_bounded ? t.depth() : t.size();
      if (measure > n) continue;
      std::uint64_t h = dh_rec(t, rules, st);
      // Pool is in witness_less order, so strict improvement keeps the
      // first maximizer.
      if (!have || h > pt.dh) {
        pt.dh = h;
        pt.witness = t;
        have = true;
      }
    }
    if (have) curve.push_back(pt);
  }
  return curve;
}

TerminationReport check_ground_termination(const std::vector<Rule>& rules,
                                           const Signature& sig,
                                           unsigned n_max,
                                           std::uint64_t step_cap) {
  TerminationReport rep;
  std::set<Term, bool (*)(const Term&, const Term&)> cycles(&term_less);
  for (const Term& t : enum_ground_by_size(sig, n_max)) {
    ++rep.explored;
    try {
      dh_term(t, rules, step_cap);
    } catch (const NonTerminating& e) {
      // Witness is on the cycle found from t; record t itself.
      cycles.insert(t);
    } catch (const BudgetExceeded&) {
      ++rep.cap_breaches;
    }
  }
  rep.cycles.assign(cycles.begin(), cycles.end());
  return rep;
}

}  // namespace lpo

#include "lpocert/lpo.hpp"

#include <algorithm>

#include "lpocert/errors.hpp"
#include "lpocert/rewrite.hpp"

namespace lpo {

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<const void*, const void*>& p) const {
    return std::hash<const void*>{}(p.first) * 31 ^
           std::hash<const void*>{}(p.second);
  }
};

// Memo keyed on node identity; misses on structurally equal but distinct
// nodes only cost a recomputation.
using Memo = std::unordered_map<std::pair<const void*, const void*>, bool,
                                PairHash>;

void check_symbol(const Term& t, const Signature& sig) {
  if (t.is_var()) return;
  unsigned ar = sig.arity(t.name());
  if (ar != t.args().size())
    throw LengthMismatch(t.name(), ar, t.args().size());
}

bool less(const Term& s, const Term& t, const Signature& sig, Memo& memo) {
  check_symbol(s, sig);
  check_symbol(t, sig);
  if (t.is_var()) return false;  // nothing is below a variable
  auto key = std::make_pair(s.id(), t.id());
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  bool r = false;
  // (1) s is below or equal to some argument of t.
  for (const Term& ti : t.args())
    if (s == ti || less(s, ti, sig, memo)) { r = true; break; }
  if (!r && !s.is_var()) {
    const auto& sa = s.args();
    const auto& ta = t.args();
    if (sig.less(s.name(), t.name())) {
      // (2) smaller head, all arguments below t.
      r = std::all_of(sa.begin(), sa.end(), [&](const Term& sj) {
        return less(sj, t, sig, memo);
      });
    } else if (s.name() == t.name() && s != t) {
      // (3) equal head, lexicographically smaller arguments, all below t.
      bool lex = false;
      for (std::size_t i = 0; i < sa.size(); ++i) {
        if (sa[i] == ta[i]) continue;
        lex = less(sa[i], ta[i], sig, memo);
        break;
      }
      if (lex)
        r = std::all_of(sa.begin(), sa.end(), [&](const Term& sj) {
          return less(sj, t, sig, memo);
        });
    }
  }
  return memo[key] = r;
}

}  // namespace

bool lpo_less(const Term& s, const Term& t, const Signature& sig) {
  Memo memo;
  return less(s, t, sig, memo);
}

bool lex_less(const std::vector<Term>& as, const std::vector<Term>& bs,
              const std::function<bool(const Term&, const Term&)>& below) {
  if (as.size() != bs.size())
    throw LengthMismatch("<tuple>", bs.size(), as.size());
  for (std::size_t i = 0; i < as.size(); ++i) {
    if (as[i] == bs[i]) continue;
    return below(as[i], bs[i]);
  }
  return false;
}

OrientationResult orient(const std::vector<Rule>& rules,
                         const Signature& sig) {
  OrientationResult res;
  res.sig = sig;
  res.orientable = true;
  Memo memo;
  for (const Rule& rule : rules) {
    bool ok = less(rule.rhs, rule.lhs, sig, memo);
    res.per_rule.push_back(ok);
    res.orientable = res.orientable && ok;
  }
  if (res.orientable) res.chain = sig.total_chain();
  return res;
}

OrientationResult synthesize_precedence(const std::vector<Rule>& rules,
                                        std::vector<Symbol> symbols) {
  std::sort(symbols.begin(), symbols.end(),
            [](const Symbol& a, const Symbol& b) { return a.name < b.name; });
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  if (symbols.size() > 8) throw TooManySymbols(symbols.size());

  std::vector<std::string> names;
  for (const Symbol& s : symbols) names.push_back(s.name);
  // next_permutation enumerates chains in lexicographic order of the
  // name-sorted list, so the first hit is deterministic.
  do {
    Signature sig = Signature::chain(symbols, names);
    OrientationResult res = orient(rules, sig);
    if (res.orientable) {
      res.chain = names;
      return res;
    }
  } while (std::next_permutation(names.begin(), names.end()));

  OrientationResult res;
  res.orientable = false;
  res.sig = Signature(symbols, {});
  res.per_rule.assign(rules.size(), false);
  return res;
}

}  // namespace lpo

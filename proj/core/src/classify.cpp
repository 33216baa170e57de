#include "lpocert/classify.hpp"

#include <algorithm>

#include "lpocert/errors.hpp"

namespace lpo {

namespace {

// Generic rank: rk(f) = max{ rk(g) + 1 : g < f, counts(g) }.
// Precedences are finite strict orders, so plain recursion terminates.
std::map<std::string, unsigned> ranks(const Signature& sig,
                                      bool (*counts)(unsigned arity)) {
  std::map<std::string, unsigned> rk;
  auto rank = [&](auto&& self, const std::string& f) -> unsigned {
    if (auto it = rk.find(f); it != rk.end()) return it->second;
    unsigned r = 0;
    for (const Symbol& g : sig.symbols())
      if (sig.less(g.name, f)) {
        unsigned rg = self(self, g.name);
        if (counts(g.arity)) r = std::max(r, rg + 1);
      }
    return rk[f] = r;
  };
  for (const Symbol& s : sig.symbols()) rank(rank, s.name);
  return rk;
}

}  // namespace

std::map<std::string, unsigned> compute_rk(const Signature& sig) {
  return ranks(sig, [](unsigned) { return true; });
}

std::map<std::string, unsigned> compute_rk2(const Signature& sig) {
  return ranks(sig, [](unsigned a) { return a >= 2; });
}

Classification classify(const Signature& sig) {
  Classification c;
  c.max_arity = 0;
  for (const Symbol& s : sig.symbols())
    c.max_arity = std::max(c.max_arity, s.arity);
  if (c.max_arity < 2) throw DegenerateSignature();
  c.k = c.max_arity - 2;
  c.rk = compute_rk(sig);
  c.rk2 = compute_rk2(sig);
  c.m = 0;
  for (const Symbol& s : sig.symbols())
    if (s.arity >= 2) c.m = std::max(c.m, c.rk2.at(s.name) + 1);
  return c;
}

Signature gen_paper_signature(unsigned m, unsigned k, unsigned q) {
  std::vector<Symbol> symbols{{"0", 0}, {"S", 1}};
  std::vector<std::string> chain{"0", "S"};
  for (unsigned i = 0; i < m; ++i) {
    std::string name = "A_" + std::to_string(i);
    symbols.push_back({name, 2 + k});
    chain.push_back(name);
  }
  for (unsigned i = 0; i < q; ++i) {
    std::string name = "f_" + std::to_string(i);
    symbols.push_back({name, 1});
    chain.push_back(name);
  }
  return Signature::chain(std::move(symbols), chain);
}

}  // namespace lpo

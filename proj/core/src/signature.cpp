#include "lpocert/signature.hpp"

#include <algorithm>
#include <set>

#include "lpocert/errors.hpp"

namespace lpo {

Signature::Signature(std::vector<Symbol> symbols,
                     std::vector<std::pair<std::string, std::string>> below_above)
    : symbols_(std::move(symbols)) {
  std::sort(symbols_.begin(), symbols_.end(),
            [](const Symbol& a, const Symbol& b) { return a.name < b.name; });
  for (const Symbol& s : symbols_) {
    auto [it, fresh] = arities_.emplace(s.name, s.arity);
    if (!fresh && it->second != s.arity)
      throw ArityClash(s.name, it->second, s.arity);
  }
  symbols_.erase(std::unique(symbols_.begin(), symbols_.end()),
                 symbols_.end());

  std::set<std::pair<std::string, std::string>> closed;
  for (auto& [lo, hi] : below_above) {
    if (!arities_.count(lo)) throw SymbolMismatch(lo);
    if (!arities_.count(hi)) throw SymbolMismatch(hi);
    closed.emplace(lo, hi);
  }
  // Floyd–Warshall-style closure over the symbol set.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::pair<std::string, std::string>> add;
    for (const auto& [a, b] : closed)
      for (const auto& [c, d] : closed)
        if (b == c && !closed.count({a, d})) add.emplace_back(a, d);
    for (auto& p : add) changed |= closed.insert(std::move(p)).second;
  }
  for (const auto& [a, b] : closed)
    if (a == b) throw PrecedenceCycle(a);
  pairs_.assign(closed.begin(), closed.end());
}

Signature Signature::chain(std::vector<Symbol> symbols,
                           const std::vector<std::string>& ascending) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i + 1 < ascending.size(); ++i)
    pairs.emplace_back(ascending[i], ascending[i + 1]);
  return Signature(std::move(symbols), std::move(pairs));
}

bool Signature::has(const std::string& name) const {
  return arities_.count(name) != 0;
}

unsigned Signature::arity(const std::string& name) const {
  auto it = arities_.find(name);
  if (it == arities_.end()) throw SymbolMismatch(name);
  return it->second;
}

bool Signature::less(const std::string& g, const std::string& f) const {
  return std::binary_search(pairs_.begin(), pairs_.end(),
                            std::make_pair(g, f));
}

std::vector<std::string> Signature::total_chain() const {
  // Order by number of strictly smaller symbols; total orders give each
  // symbol a distinct count 0..n-1.
  std::vector<std::pair<std::size_t, std::string>> ranked;
  for (const Symbol& s : symbols_) {
    std::size_t below = 0;
    for (const Symbol& t : symbols_)
      if (less(t.name, s.name)) ++below;
    ranked.emplace_back(below, s.name);
  }
  std::sort(ranked.begin(), ranked.end());
  std::vector<std::string> chain;
  for (auto& [_, name] : ranked) chain.push_back(name);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (!less(chain[i], chain[i + 1])) return {};
  return chain;
}

}  // namespace lpo

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lpo {

struct Symbol {
  std::string name;
  unsigned arity;
  bool operator==(const Symbol&) const = default;
};

// A finite signature with a strict partial precedence on its symbols.
// The constructor transitively closes the given pairs and rejects any
// closure that relates a symbol to itself (PrecedenceCycle). Pairs naming
// unknown symbols raise SymbolMismatch.
class Signature {
 public:
  Signature() = default;
  Signature(std::vector<Symbol> symbols,
            std::vector<std::pair<std::string, std::string>> below_above);

  // Convenience: chain[0] < chain[1] < ... < chain.back().
  static Signature chain(std::vector<Symbol> symbols,
                         const std::vector<std::string>& ascending);

  bool has(const std::string& name) const;
  unsigned arity(const std::string& name) const;  // SymbolMismatch if unknown

  // Strict precedence g < f after transitive closure.
  bool less(const std::string& g, const std::string& f) const;

  // Symbols sorted by name.
  const std::vector<Symbol>& symbols() const { return symbols_; }

  // Closed precedence as sorted (below, above) pairs.
  const std::vector<std::pair<std::string, std::string>>& pairs() const {
    return pairs_;
  }

  // If the precedence is a total order, the symbols in ascending order;
  // empty otherwise.
  std::vector<std::string> total_chain() const;

 private:
  std::vector<Symbol> symbols_;                           // name-sorted
  std::map<std::string, unsigned> arities_;
  std::vector<std::pair<std::string, std::string>> pairs_;  // closed, sorted
};

}  // namespace lpo

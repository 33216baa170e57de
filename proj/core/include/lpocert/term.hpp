#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace lpo {

// First-order terms over named function symbols and named variables.
// Terms are immutable; copies share the underlying node. Depth, size,
// hash and groundness are computed once at construction.
class Term {
 public:
  Term() : Term(var("_")) {}  // default-constructible for containers

  static Term var(std::string name);
  static Term app(std::string symbol, std::vector<Term> args = {});

  bool is_var() const { return node_->is_var; }
  // Variable name, or function symbol.
  const std::string& name() const { return node_->name; }
  const std::vector<Term>& args() const { return node_->args; }

  // Constants and variables have depth 0.
  unsigned depth() const { return node_->depth; }
  // Number of symbol and variable occurrences.
  unsigned size() const { return node_->size; }
  bool ground() const { return node_->ground; }
  std::size_t hash() const { return node_->hash; }

  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }

  // Identity of the shared node; distinct pointers may still be equal terms.
  const void* id() const { return node_.get(); }

  std::string str() const;

 private:
  struct Node {
    bool is_var;
    std::string name;
    std::vector<Term> args;
    unsigned depth, size;
    bool ground;
    std::size_t hash;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

// Total structural order: variables first (by name), then applications by
// symbol name, then by argument lists left to right (shorter list first on
// a shared prefix). Used wherever a deterministic term order is needed.
int term_cmp(const Term& a, const Term& b);
inline bool term_less(const Term& a, const Term& b) {
  return term_cmp(a, b) < 0;
}

// Order used to pick canonical witnesses: smaller depth first, ties broken
// by the structural order above.
inline bool witness_less(const Term& a, const Term& b) {
  if (a.depth() != b.depth()) return a.depth() < b.depth();
  return term_cmp(a, b) < 0;
}

// True if variable x occurs anywhere in t (x itself counts).
bool occurs(const Term& x, const Term& t);

// All distinct subterms of t, including t itself, in structural order.
std::vector<Term> subterms(const Term& t);

// Names of variables occurring in t, sorted and deduplicated.
std::vector<std::string> variables(const Term& t);

}  // namespace lpo

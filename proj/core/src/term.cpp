#include "lpocert/term.hpp"

#include <algorithm>
#include <set>

namespace lpo {

namespace {

std::size_t combine(std::size_t seed, std::size_t v) {
  // boost::hash_combine-style mixing
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Term Term::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->is_var = true;
  n->name = std::move(name);
  n->depth = 0;
  n->size = 1;
  n->ground = false;
  n->hash = combine(0x564152, std::hash<std::string>{}(n->name));
  return Term(std::move(n));
}

Term Term::app(std::string symbol, std::vector<Term> args) {
  auto n = std::make_shared<Node>();
  n->is_var = false;
  n->name = std::move(symbol);
  n->args = std::move(args);
  unsigned d = 0, sz = 1;
  bool g = true;
  std::size_t h = combine(0x415050, std::hash<std::string>{}(n->name));
  for (const Term& a : n->args) {
    d = std::max(d, a.depth() + 1);
    sz += a.size();
    g = g && a.ground();
    h = combine(h, a.hash());
  }
  n->depth = d;
  n->size = sz;
  n->ground = g;
  n->hash = h;
  return Term(std::move(n));
}

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  if (node_->hash != other.node_->hash) return false;
  if (node_->is_var != other.node_->is_var ||
      node_->name != other.node_->name ||
      node_->args.size() != other.node_->args.size())
    return false;
  for (std::size_t i = 0; i < node_->args.size(); ++i)
    if (node_->args[i] != other.node_->args[i]) return false;
  return true;
}

std::string Term::str() const {
  if (is_var() || args().empty()) return name();
  std::string out = name();
  out += '(';
  for (std::size_t i = 0; i < args().size(); ++i) {
    if (i) out += ',';
    out += args()[i].str();
  }
  out += ')';
  return out;
}

int term_cmp(const Term& a, const Term& b) {
  if (a.is_var() != b.is_var()) return a.is_var() ? -1 : 1;
  if (int c = a.name().compare(b.name()); c != 0) return c < 0 ? -1 : 1;
  const auto& xs = a.args();
  const auto& ys = b.args();
  for (std::size_t i = 0; i < std::min(xs.size(), ys.size()); ++i)
    if (int c = term_cmp(xs[i], ys[i]); c != 0) return c;
  if (xs.size() != ys.size()) return xs.size() < ys.size() ? -1 : 1;
  return 0;
}

bool occurs(const Term& x, const Term& t) {
  if (x == t) return true;
  for (const Term& a : t.args())
    if (occurs(x, a)) return true;
  return false;
}

namespace {
void collect_subterms(const Term& t, std::set<Term, bool (*)(const Term&, const Term&)>& out) {
  if (!out.insert(t).second) return;
  for (const Term& a : t.args()) collect_subterms(a, out);
}
}  // namespace

std::vector<Term> subterms(const Term& t) {
  std::set<Term, bool (*)(const Term&, const Term&)> acc(&term_less);
  collect_subterms(t, acc);
  return {acc.begin(), acc.end()};
}

std::vector<std::string> variables(const Term& t) {
  std::vector<std::string> out;
  auto walk = [&](auto&& self, const Term& u) -> void {
    if (u.is_var()) {
      out.push_back(u.name());
      return;
    }
    for (const Term& a : u.args()) self(self, a);
  };
  walk(walk, t);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace lpo

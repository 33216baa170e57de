#include "lpocert/lpo_approx.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "lpocert/errors.hpp"
#include "lpocert/lpo.hpp"
#include "lpocert/term_enum.hpp"

namespace lpo {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    std::size_t h = 0x811c9dc5;
    for (std::uint32_t x : v) h = (h ^ x) * 0x01000193;
    return h;
  }
};

struct DecKey {
  Term s, t;
  unsigned p;
  bool operator==(const DecKey& o) const {
    return p == o.p && s == o.s && t == o.t;
  }
};

struct DecKeyHash {
  std::size_t operator()(const DecKey& k) const {
    return k.s.hash() * 1000003 ^ k.t.hash() * 31 ^ k.p;
  }
};

}  // namespace

struct ApproxWorkspace::Impl {
  std::uint64_t budget;
  std::uint64_t mass = 0;  // stored set elements

  // Symbol table, index-aligned with sig.symbols() (name-sorted).
  std::vector<std::string> sym_names;
  std::vector<unsigned> sym_arity;
  std::vector<std::vector<bool>> sym_less;  // [below][above]

  // Interned ground nodes: node i is sym nodes_[i][0] applied to the ids
  // nodes_[i][1..]. Ids are stable; pool growth never moves payloads the
  // memos point to (sets live behind unique_ptr).
  std::vector<std::vector<std::uint32_t>> nodes;
  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, VecHash>
      node_ids;

  // (id << 9 | p) -> sorted unique member ids.
  std::unordered_map<std::uint64_t, std::unique_ptr<std::vector<std::uint32_t>>>
      pred_memo;
  std::unordered_map<std::uint64_t, std::uint64_t> height_memo;
  std::unordered_map<DecKey, bool, DecKeyHash> dec_memo;

  const Signature* sig = nullptr;

  std::uint32_t sym_index(const std::string& name) const {
    auto it = std::lower_bound(sym_names.begin(), sym_names.end(), name);
    if (it == sym_names.end() || *it != name) throw SymbolMismatch(name);
    return static_cast<std::uint32_t>(it - sym_names.begin());
  }

  std::uint32_t intern_node(std::vector<std::uint32_t> key) {
    auto it = node_ids.find(key);
    if (it != node_ids.end()) return it->second;
    auto id = static_cast<std::uint32_t>(nodes.size());
    if (id >= (1u << 28))
      throw BudgetExceeded("interned term pool exceeded 2^28 nodes");
    nodes.push_back(key);
    node_ids.emplace(std::move(key), id);
    return id;
  }

  std::uint32_t intern(const Term& t) {
    if (t.is_var())
      throw Error("predecessor enumeration requires a ground term");
    std::vector<std::uint32_t> key{sym_index(t.name())};
    if (t.args().size() != sym_arity[key[0]])
      throw LengthMismatch(t.name(), sym_arity[key[0]], t.args().size());
    for (const Term& a : t.args()) key.push_back(intern(a));
    return intern_node(std::move(key));
  }

  Term materialize(std::uint32_t id) const {
    const auto& node = nodes[id];
    std::vector<Term> args;
    for (std::size_t i = 1; i < node.size(); ++i)
      args.push_back(materialize(node[i]));
    return Term::app(sym_names[node[0]], std::move(args));
  }

  static std::uint64_t key_of(std::uint32_t id, unsigned p) {
    assert(p < 512);
    return (static_cast<std::uint64_t>(id) << 9) | p;
  }

  // P_p for interned ground terms, memoized. Returns a stable pointer.
  const std::vector<std::uint32_t>* pred_set(std::uint32_t id, unsigned p) {
    if (p == 0) {
      static const std::vector<std::uint32_t> empty;
      return &empty;
    }
    std::uint64_t key = key_of(id, p);
    if (auto it = pred_memo.find(key); it != pred_memo.end())
      return it->second.get();

    const std::uint32_t f = nodes[id][0];
    const unsigned n = sym_arity[f];
    // Resolve every input set first; pointers stay valid afterwards.
    std::vector<const std::vector<std::uint32_t>*> arg_same_p(n);
    for (unsigned i = 0; i < n; ++i)
      arg_same_p[i] = pred_set(nodes[id][i + 1], p);
    const std::vector<std::uint32_t>* prev = pred_set(id, p - 1);

    std::vector<std::uint32_t> out;
    // (1) arguments and their predecessors.
    for (unsigned i = 0; i < n; ++i) {
      out.push_back(nodes[id][i + 1]);
      out.insert(out.end(), arg_same_p[i]->begin(), arg_same_p[i]->end());
    }
    // (2) smaller head over (p-1)-predecessors of t.
    for (std::uint32_t g = 0; g < sym_names.size(); ++g) {
      if (!sym_less[g][f]) continue;
      const unsigned k = sym_arity[g];
      if (k == 0) {
        out.push_back(intern_node({g}));
        continue;
      }
      if (prev->empty()) continue;
      std::vector<std::size_t> idx(k, 0);
      while (true) {
        std::vector<std::uint32_t> kid{g};
        for (unsigned j = 0; j < k; ++j) kid.push_back((*prev)[idx[j]]);
        out.push_back(intern_node(std::move(kid)));
        check_transient(out.size());
        unsigned j = k;
        bool done = true;
        while (j > 0) {
          --j;
          if (++idx[j] < prev->size()) { done = false; break; }
          idx[j] = 0;
        }
        if (done) break;
      }
    }
    // (3) same head, one position strictly smaller at p, tail at p-1.
    for (unsigned i = 0; i < n; ++i) {
      const auto& pos = *arg_same_p[i];
      if (pos.empty()) continue;
      const unsigned tail = n - 1 - i;
      if (tail > 0 && prev->empty()) continue;
      std::vector<std::size_t> idx(tail, 0);
      while (true) {
        for (std::uint32_t u : pos) {
          std::vector<std::uint32_t> kid{f};
          for (unsigned j = 0; j < i; ++j) kid.push_back(nodes[id][j + 1]);
          kid.push_back(u);
          for (unsigned j = 0; j < tail; ++j) kid.push_back((*prev)[idx[j]]);
          out.push_back(intern_node(std::move(kid)));
          check_transient(out.size());
        }
        unsigned j = tail;
        bool done = true;
        while (j > 0) {
          --j;
          if (++idx[j] < prev->size()) { done = false; break; }
          idx[j] = 0;
        }
        if (done) break;
      }
    }

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    mass += out.size();
    if (mass > budget)
      throw BudgetExceeded("predecessor sets exceeded the budget of " +
                           std::to_string(budget) + " stored elements");
    auto owned = std::make_unique<std::vector<std::uint32_t>>(std::move(out));
    auto* raw = owned.get();
    pred_memo.emplace(key, std::move(owned));
    return raw;
  }

  // A single set under construction must not outgrow the budget either;
  // without this a product could fill memory before the stored check.
  void check_transient(std::size_t produced) const {
    if (mass + produced > 2 * budget + 16)
      throw BudgetExceeded(
          "predecessor set under construction exceeded the budget of " +
          std::to_string(budget) + " stored elements");
  }

  std::uint64_t height(std::uint32_t root, unsigned p) {
    // Two-phase DFS: a key stays on the stack until every member height
    // is memoized; <_p is well-founded, so there are no cycles.
    std::vector<std::uint64_t> stack{key_of(root, p)};
    while (!stack.empty()) {
      std::uint64_t key = stack.back();
      if (height_memo.count(key)) {
        stack.pop_back();
        continue;
      }
      auto id = static_cast<std::uint32_t>(key >> 9);
      auto p_cur = static_cast<unsigned>(key & 511);
      const auto* members = pred_set(id, p_cur);
      bool ready = true;
      std::uint64_t best = 0;
      for (std::uint32_t m : *members) {
        std::uint64_t mkey = key_of(m, p_cur);
        if (auto it = height_memo.find(mkey); it != height_memo.end()) {
          best = std::max(best, 1 + it->second);
        } else {
          if (ready) ready = false;
          stack.push_back(mkey);
        }
      }
      if (ready) {
        height_memo.emplace(key, best);
        stack.pop_back();
      }
    }
    return height_memo.at(key_of(root, p));
  }

  bool decide(const Term& s, const Term& t, unsigned p) {
    if (p == 0 || t.is_var()) return false;
    if (s.is_var()) {
      // Only clause (1) applies to a variable.
      for (const Term& ti : t.args())
        if (s == ti || decide(s, ti, p)) return true;
      return false;
    }
    DecKey key{s, t, p};
    if (auto it = dec_memo.find(key); it != dec_memo.end()) return it->second;
    bool r = false;
    for (const Term& ti : t.args())
      if (s == ti || decide(s, ti, p)) { r = true; break; }
    if (!r) {
      const auto& sa = s.args();
      const auto& ta = t.args();
      if (sig->less(s.name(), t.name())) {
        r = std::all_of(sa.begin(), sa.end(), [&](const Term& sj) {
          return decide(sj, t, p - 1);
        });
      } else if (s.name() == t.name() && s != t) {
        std::size_t i = 0;
        while (i < sa.size() && sa[i] == ta[i]) ++i;
        if (i < sa.size() && decide(sa[i], ta[i], p)) {
          r = true;
          for (std::size_t j = i + 1; j < sa.size() && r; ++j)
            r = decide(sa[j], t, p - 1);
        }
      }
    }
    dec_memo.emplace(key, r);
    return r;
  }
};

ApproxWorkspace::ApproxWorkspace(Signature sig, std::uint64_t budget)
    : sig_(std::move(sig)), impl_(std::make_unique<Impl>()) {
  impl_->budget = budget;
  impl_->sig = &sig_;
  for (const Symbol& s : sig_.symbols()) {
    impl_->sym_names.push_back(s.name);
    impl_->sym_arity.push_back(s.arity);
  }
  const std::size_t ns = impl_->sym_names.size();
  impl_->sym_less.assign(ns, std::vector<bool>(ns, false));
  for (std::size_t a = 0; a < ns; ++a)
    for (std::size_t b = 0; b < ns; ++b)
      impl_->sym_less[a][b] =
          sig_.less(impl_->sym_names[a], impl_->sym_names[b]);
}

ApproxWorkspace::~ApproxWorkspace() = default;

namespace {

void validate(const Term& t, const Signature& sig) {
  if (t.is_var()) return;
  unsigned ar = sig.arity(t.name());  // SymbolMismatch if unknown
  if (ar != t.args().size())
    throw LengthMismatch(t.name(), ar, t.args().size());
  for (const Term& a : t.args()) validate(a, sig);
}

}  // namespace

bool ApproxWorkspace::approx_less(const Term& s, const Term& t, unsigned p) {
  validate(s, sig_);
  validate(t, sig_);
  return impl_->decide(s, t, p);
}

std::vector<Term> ApproxWorkspace::predecessors(const Term& t, unsigned p) {
  if (!t.ground())
    throw Error("predecessor enumeration requires a ground term");
  if (p >= 512) throw Error("approximation index limited to 511");
  std::uint32_t id = impl_->intern(t);
  const auto* members = impl_->pred_set(id, p);
  std::vector<Term> out;
  out.reserve(members->size());
  for (std::uint32_t m : *members) out.push_back(impl_->materialize(m));
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return term_less(a, b);
  });
  return out;
}

std::uint64_t ApproxWorkspace::wp_height(const Term& t, unsigned p) {
  if (!t.ground())
    throw Error("well-founded-part height requires a ground term");
  if (p >= 512) throw Error("approximation index limited to 511");
  return impl_->height(impl_->intern(t), p);
}

unsigned ApproxWorkspace::static_pR(const std::vector<Rule>& rules) {
  if (rules.empty()) return 0;
  unsigned worst = 0;
  for (const Rule& rule : rules) {
    if (!lpo_less(rule.rhs, rule.lhs, sig_))
      throw Error("static_pR requires an oriented system; rule " +
                  rule.str() + " is not oriented");
    unsigned minp = 0;
    for (unsigned p = 1; p <= rule.rhs.depth() + 1; ++p)
      if (approx_less(rule.rhs, rule.lhs, p)) { minp = p; break; }
    if (minp == 0)  // oriented rules reach <_p by depth(rhs)+1
      throw Error("internal: no approximation index found for oriented rule " +
                  rule.str());
    worst = std::max(worst, minp);
  }
  return 1 + worst;
}

std::uint64_t ApproxWorkspace::stored_elements() const { return impl_->mass; }

bool approx_less(const Term& s, const Term& t, unsigned p,
                 const Signature& sig) {
  ApproxWorkspace ws(sig);
  return ws.approx_less(s, t, p);
}

std::vector<Term> predecessors(const Term& t, unsigned p,
                               const Signature& sig) {
  ApproxWorkspace ws(sig);
  return ws.predecessors(t, p);
}

std::uint64_t wp_height(const Term& t, unsigned p, const Signature& sig) {
  ApproxWorkspace ws(sig);
  return ws.wp_height(t, p);
}

unsigned static_pR(const std::vector<Rule>& rules, const Signature& sig) {
  ApproxWorkspace ws(sig);
  return ws.static_pR(rules);
}

ContainmentReport check_containment(const std::vector<Rule>& rules,
                                    ApproxWorkspace& ws, unsigned p,
                                    unsigned size_bound) {
  ContainmentReport rep;
  for (const Term& t : enum_ground_by_size(ws.sig(), size_bound))
    for (const Term& u : successors(t, rules)) {
      ++rep.steps;
      if (!ws.approx_less(u, t, p)) rep.violations.emplace_back(t, u);
    }
  return rep;
}

ContainmentReport check_containment(const std::vector<Rule>& rules,
                                    const Signature& sig, unsigned p,
                                    unsigned size_bound) {
  ApproxWorkspace ws(sig);
  return check_containment(rules, ws, p, size_bound);
}

}  // namespace lpo

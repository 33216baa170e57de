#include "lpocert/term_enum.hpp"

#include <algorithm>
#include <functional>

namespace lpo {

namespace {

// Ordered compositions of n into k positive parts, lexicographic.
void compositions(unsigned n, unsigned k, std::vector<unsigned>& parts,
                  const std::function<void()>& emit) {
  if (k == 0) {
    if (n == 0) emit();
    return;
  }
  if (n < k) return;  // every part is at least 1
  for (unsigned first = 1; first + (k - 1) <= n; ++first) {
    parts.push_back(first);
    compositions(n - first, k - 1, parts, emit);
    parts.pop_back();
  }
}

}  // namespace

std::vector<Term> enum_ground_by_size(const Signature& sig,
                                      unsigned max_size) {
  // by_size[n] lists the terms of size exactly n, in generation order.
  std::vector<std::vector<Term>> by_size(max_size + 1);
  std::vector<Term> all;
  for (unsigned n = 1; n <= max_size; ++n) {
    for (const Symbol& f : sig.symbols()) {  // name-sorted
      if (f.arity == 0) {
        if (n == 1) by_size[n].push_back(Term::app(f.name));
        continue;
      }
      if (n < 1 + f.arity) continue;
      std::vector<unsigned> parts;
      compositions(n - 1, f.arity, parts, [&]() {
        // Cartesian product over by_size[parts[i]], rightmost fastest.
        std::vector<std::size_t> idx(parts.size(), 0);
        while (true) {
          std::vector<Term> args;
          bool ok = true;
          for (std::size_t i = 0; i < parts.size(); ++i) {
            if (idx[i] >= by_size[parts[i]].size()) { ok = false; break; }
            args.push_back(by_size[parts[i]][idx[i]]);
          }
          if (!ok) break;  // some factor is empty
          by_size[n].push_back(Term::app(f.name, std::move(args)));
          std::size_t i = parts.size();
          while (i > 0) {
            --i;
            if (++idx[i] < by_size[parts[i]].size()) break;
            idx[i] = 0;
            if (i == 0) return;
          }
        }
      });
    }
    all.insert(all.end(), by_size[n].begin(), by_size[n].end());
  }
  return all;
}

std::vector<Term> enum_ground_by_depth(const Signature& sig,
                                       unsigned max_depth) {
  // Terms of depth <= d, built level by level.
  std::vector<Term> prev;  // depth <= d-1
  std::vector<Term> cur;   // depth <= d
  for (const Symbol& f : sig.symbols())
    if (f.arity == 0) cur.push_back(Term::app(f.name));
  for (unsigned d = 1; d <= max_depth; ++d) {
    prev = cur;
    for (const Symbol& f : sig.symbols()) {
      if (f.arity == 0) continue;
      std::vector<std::size_t> idx(f.arity, 0);
      if (prev.empty()) continue;
      while (true) {
        std::vector<Term> args;
        for (std::size_t i = 0; i < f.arity; ++i)
          args.push_back(prev[idx[i]]);
        Term t = Term::app(f.name, std::move(args));
        if (t.depth() == d) cur.push_back(t);  // skip re-adding shallower
        std::size_t i = f.arity;
        bool done = true;
        while (i > 0) {
          --i;
          if (++idx[i] < prev.size()) { done = false; break; }
          idx[i] = 0;
        }
        if (done) break;
      }
    }
  }
  std::sort(cur.begin(), cur.end(), witness_less);
  return cur;
}

}  // namespace lpo

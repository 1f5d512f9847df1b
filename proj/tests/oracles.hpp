#pragma once

// Brute-force reference computations used to cross-check the library.

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "twistcross/partial_bijection.hpp"
#include "twistcross/semigroup.hpp"

namespace oracle {

using twistcross::Elem;
using twistcross::FiniteInverseSemigroup;
using twistcross::PartialBijection;

// Naive fixpoint: multiply every pair and invert every element until
// nothing new appears.
inline std::set<std::vector<std::uint32_t>> closure(std::vector<PartialBijection> const& gens) {
  std::vector<PartialBijection>        elems;
  std::set<std::vector<std::uint32_t>> seen;
  auto add = [&](PartialBijection const& f) {
    if (seen.insert(f.image()).second) {
      elems.push_back(f);
      return true;
    }
    return false;
  };
  for (auto const& g : gens) {
    add(g);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    auto snapshot = elems;
    for (auto const& f : snapshot) {
      grew = add(star(f)) || grew;
      for (auto const& g : snapshot) {
        grew = add(compose(f, g)) || grew;
      }
    }
  }
  return seen;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent_[a] != a) {
      a = parent_[a] = parent_[parent_[a]];
    }
    return a;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return false;
    }
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

inline std::vector<std::vector<Elem>> classes_of(UnionFind& uf, std::size_t n) {
  std::vector<std::vector<Elem>> out;
  std::vector<std::size_t>       slot(n, n);
  for (Elem a = 0; a < n; ++a) {
    auto r = uf.find(a);
    if (slot[r] == n) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(a);
  }
  return out;
}

// Smallest congruence containing the given pairs.
inline std::vector<std::vector<Elem>> congruence_closure(FiniteInverseSemigroup const& s,
                                                         std::vector<std::pair<Elem, Elem>> pairs) {
  std::size_t const n = s.size();
  UnionFind         uf(n);
  for (auto [a, b] : pairs) {
    uf.unite(a, b);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (a == b || uf.find(a) != uf.find(b)) {
          continue;
        }
        for (Elem r = 0; r < n; ++r) {
          changed = uf.unite(s.mul(r, a), s.mul(r, b)) || changed;
          changed = uf.unite(s.mul(a, r), s.mul(b, r)) || changed;
        }
      }
    }
  }
  return classes_of(uf, n);
}

inline bool is_congruence(FiniteInverseSemigroup const& s, std::vector<Elem> const& cls) {
  for (Elem a = 0; a < s.size(); ++a) {
    for (Elem b = 0; b < s.size(); ++b) {
      if (cls[a] != cls[b]) {
        continue;
      }
      for (Elem r = 0; r < s.size(); ++r) {
        if (cls[s.mul(r, a)] != cls[s.mul(r, b)] || cls[s.mul(a, r)] != cls[s.mul(b, r)]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Every partition whose quotient is a group, as class-label vectors.
inline std::vector<std::vector<Elem>> group_congruences(FiniteInverseSemigroup const& s) {
  std::size_t const              n = s.size();
  std::vector<std::vector<Elem>> out;
  std::vector<Elem>              cls(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
    if (i == n) {
      if (!is_congruence(s, cls)) {
        return;
      }
      // Quotient is a group iff all idempotents collapse to one class.
      auto es = s.idempotents();
      bool one = std::all_of(es.begin(), es.end(), [&](Elem e) { return cls[e] == cls[es[0]]; });
      if (one) {
        out.push_back(cls);
      }
      return;
    }
    for (std::size_t c = 0; c <= used && c < n; ++c) {
      cls[i] = c;
      rec(i + 1, std::max(used, c + 1));
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace oracle

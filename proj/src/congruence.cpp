#include "twistcross/congruence.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace twistcross {

bool contains(Subset const& set, Elem a) { return std::binary_search(set.begin(), set.end(), a); }

Congruence::Congruence(std::size_t size, std::vector<std::vector<Elem>> classes)
    : classes_(std::move(classes)), class_of_(size, size) {
  for (auto& c : classes_) {
    if (c.empty()) {
      throw InputError("congruence: empty class");
    }
    std::sort(c.begin(), c.end());
  }
  std::sort(classes_.begin(), classes_.end());
  for (Elem k = 0; k < classes_.size(); ++k) {
    for (Elem a : classes_[k]) {
      if (a >= size) {
        throw InputError("congruence: element " + std::to_string(a) + " out of range");
      }
      if (class_of_[a] != size) {
        throw InputError("congruence: element " + std::to_string(a) + " in two classes");
      }
      class_of_[a] = k;
    }
  }
  for (Elem a = 0; a < size; ++a) {
    if (class_of_[a] == size) {
      throw InputError("congruence: element " + std::to_string(a) + " in no class");
    }
  }
}

Congruence Congruence::identity(std::size_t size) {
  std::vector<std::vector<Elem>> classes(size);
  for (Elem a = 0; a < size; ++a) {
    classes[a] = {a};
  }
  return Congruence(size, std::move(classes));
}

Report is_congruence(FiniteInverseSemigroup const& s, Congruence const& c) {
  if (c.size() != s.size()) {
    throw InputError("congruence: partition size does not match semigroup");
  }
  Report rep("congruence");
  for (auto const& cls : c.classes()) {
    for (Elem a : cls) {
      for (Elem b : cls) {
        if (a >= b) {
          continue;
        }
        for (Elem r = 0; r < s.size(); ++r) {
          rep.check("left compatible", c.related(s.mul(r, a), s.mul(r, b)),
                    s.label(a) + " ~ " + s.label(b) + " but not after left factor " + s.label(r));
          rep.check("right compatible", c.related(s.mul(a, r), s.mul(b, r)),
                    s.label(a) + " ~ " + s.label(b) + " but not after right factor " + s.label(r));
        }
      }
    }
  }
  rep.check("left compatible", true);
  rep.check("right compatible", true);
  return rep;
}

Report is_congruence(FiniteInverseSemigroup const& s, std::vector<std::vector<Elem>> const& classes) {
  return is_congruence(s, Congruence(s.size(), classes));
}

bool is_idempotent_separating(FiniteInverseSemigroup const& s, Congruence const& c) {
  for (auto const& cls : c.classes()) {
    auto n = std::count_if(cls.begin(), cls.end(), [&](Elem a) { return s.is_idempotent(a); });
    if (n > 1) {
      return false;
    }
  }
  return true;
}

std::vector<KernelClass> kernel_normal_system(FiniteInverseSemigroup const& s, Congruence const& c) {
  bool const               separating = is_idempotent_separating(s, c);
  std::vector<KernelClass> out;
  for (auto const& cls : c.classes()) {
    auto it = std::find_if(cls.begin(), cls.end(), [&](Elem a) { return s.is_idempotent(a); });
    if (it == cls.end()) {
      continue;
    }
    Elem f = *it;
    if (separating) {
      for (Elem n : cls) {
        if (s.target(n) != f || s.source(n) != f) {
          throw ConstructionError("kernel class is a group",
                                  s.label(n) + " in the class of " + s.label(f));
        }
        for (Elem m : cls) {
          if (!contains(cls, s.mul(n, m))) {
            throw ConstructionError("kernel class is a group",
                                    "class of " + s.label(f) + " not closed under product");
          }
        }
      }
    }
    out.push_back(KernelClass{f, cls});
  }
  return out;
}

Subset kernel_union(FiniteInverseSemigroup const& s, Congruence const& c) {
  Subset out;
  for (auto const& k : kernel_normal_system(s, c)) {
    out.insert(out.end(), k.members.begin(), k.members.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Report is_normal_clifford(FiniteInverseSemigroup const& s, Subset const& n) {
  Report rep("normal Clifford subsemigroup");
  for (Elem a : n) {
    if (a >= s.size()) {
      throw InputError("subset: element " + std::to_string(a) + " out of range");
    }
  }
  for (Elem e : s.idempotents()) {
    rep.check("contains idempotents", contains(n, e), s.label(e));
  }
  for (Elem a : n) {
    rep.check("closed under star", contains(n, s.star(a)), s.label(a));
    rep.check("Clifford", s.target(a) == s.source(a), s.label(a));
    for (Elem b : n) {
      rep.check("closed under product", contains(n, s.mul(a, b)),
                s.label(a) + " * " + s.label(b));
    }
    for (Elem t = 0; t < s.size(); ++t) {
      rep.check("normal", contains(n, s.mul(t, a, s.star(t))),
                s.label(t) + " " + s.label(a) + " " + s.label(t) + "*");
    }
  }
  return rep;
}

Congruence congruence_from_normal_clifford(FiniteInverseSemigroup const& s, Subset const& n) {
  auto rep = is_normal_clifford(s, n);
  for (auto const& cl : rep.clauses()) {
    if (!cl.passed) {
      throw ConstructionError(cl.name, cl.witness);
    }
  }
  std::size_t const              size = s.size();
  std::vector<Elem>              cls(size, size);
  std::vector<std::vector<Elem>> classes;
  for (Elem a = 0; a < size; ++a) {
    if (cls[a] != size) {
      continue;
    }
    cls[a] = classes.size();
    classes.push_back({a});
    Elem const f = s.target(a);
    for (Elem b = a + 1; b < size; ++b) {
      if (cls[b] != size || s.target(b) != f) {
        continue;
      }
      Elem ab = s.mul(a, s.star(b));
      if (contains(n, ab) && s.target(ab) == f) {
        cls[b] = cls[a];
        classes.back().push_back(b);
      }
    }
  }
  Congruence out(size, std::move(classes));
  auto       check = is_congruence(s, out);
  if (!check.ok()) {
    throw ConstructionError("induced relation is a congruence", check.clauses().front().witness);
  }
  return out;
}

Subset idempotent_centralizer(FiniteInverseSemigroup const& s) {
  auto const es = s.idempotents();
  Subset     out;
  for (Elem a = 0; a < s.size(); ++a) {
    if (std::all_of(es.begin(), es.end(), [&](Elem e) { return s.mul(a, e) == s.mul(e, a); })) {
      out.push_back(a);
    }
  }
  return out;
}

Subset normal_clifford_closure(FiniteInverseSemigroup const& s, Subset const& seed) {
  std::vector<bool> in(s.size(), false);
  std::deque<Elem>  pending;
  Subset            members;
  auto add = [&](Elem a) {
    if (!in[a]) {
      in[a] = true;
      members.push_back(a);
      pending.push_back(a);
    }
  };
  for (Elem e : s.idempotents()) {
    add(e);
  }
  for (Elem a : seed) {
    add(a);
  }
  while (!pending.empty()) {
    Elem a = pending.front();
    pending.pop_front();
    add(s.star(a));
    for (Elem t = 0; t < s.size(); ++t) {
      add(s.mul(t, a, s.star(t)));
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      Elem b = members[i];
      add(s.mul(a, b));
      add(s.mul(b, a));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<Subset> enumerate_normal_clifford(FiniteInverseSemigroup const& s, std::size_t guard) {
  if (s.size() > guard) {
    throw LimitError("enumerate_normal_clifford: semigroup of size " + std::to_string(s.size())
                         + " exceeds guard " + std::to_string(guard),
                     0);
  }
  Subset const      z = idempotent_centralizer(s);
  std::set<Subset>  found;
  std::deque<Subset> pending;
  Subset base = normal_clifford_closure(s, {});
  found.insert(base);
  pending.push_back(base);
  while (!pending.empty()) {
    Subset x = std::move(pending.front());
    pending.pop_front();
    for (Elem c : z) {
      if (contains(x, c)) {
        continue;
      }
      Subset seed = x;
      seed.push_back(c);
      Subset y = normal_clifford_closure(s, seed);
      if (found.insert(y).second) {
        pending.push_back(std::move(y));
      }
    }
  }
  std::vector<Subset> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(),
                   [](Subset const& a, Subset const& b) { return a.size() < b.size(); });
  return out;
}

Quotient quotient(FiniteInverseSemigroup const& s, Congruence const& c) {
  return quotient_by_partition(s, c.classes());
}

}  // namespace twistcross

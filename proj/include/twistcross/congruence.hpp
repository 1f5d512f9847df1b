#pragma once

#include <cstddef>
#include <vector>

#include "twistcross/report.hpp"
#include "twistcross/semigroup.hpp"

namespace twistcross {

// Sorted list of element indices.
using Subset = std::vector<Elem>;

bool contains(Subset const& set, Elem a);

// Partition of the elements of a semigroup. Classes are sorted and ordered by
// their least member, which is the canonical representative.
class Congruence {
 public:
  Congruence() = default;
  // Throws InputError unless `classes` partitions {0, ..., size - 1}.
  Congruence(std::size_t size, std::vector<std::vector<Elem>> classes);

  static Congruence identity(std::size_t size);

  std::size_t                           size() const noexcept { return class_of_.size(); }
  std::size_t                           class_count() const noexcept { return classes_.size(); }
  std::vector<std::vector<Elem>> const& classes() const noexcept { return classes_; }
  std::vector<Elem> const&              members(Elem cls) const { return classes_[cls]; }
  Elem                                  class_of(Elem a) const { return class_of_[a]; }
  Elem                                  representative(Elem cls) const { return classes_[cls][0]; }
  bool related(Elem a, Elem b) const { return class_of_[a] == class_of_[b]; }

  friend bool operator==(Congruence const&, Congruence const&) = default;

 private:
  std::vector<std::vector<Elem>> classes_;
  std::vector<Elem>              class_of_;
};

// Exhaustive left and right compatibility check.
Report is_congruence(FiniteInverseSemigroup const& s, Congruence const& c);
Report is_congruence(FiniteInverseSemigroup const& s, std::vector<std::vector<Elem>> const& classes);

bool is_idempotent_separating(FiniteInverseSemigroup const& s, Congruence const& c);

struct KernelClass {
  Elem   idempotent;
  Subset members;
};

// Classes containing idempotents, one per idempotent class. For an
// idempotent-separating congruence each class is checked to be a group with
// identity its idempotent; a ConstructionError reports a failure.
std::vector<KernelClass> kernel_normal_system(FiniteInverseSemigroup const& s, Congruence const& c);

// Union of the kernel normal system.
Subset kernel_union(FiniteInverseSemigroup const& s, Congruence const& c);

// Checks E in N, closure under product and star, sNs* in N, and nn* = n*n.
Report is_normal_clifford(FiniteInverseSemigroup const& s, Subset const& n);

// s ~ t iff ss*, tt*, st* lie in one class [f] = {n in N : nn* = f}.
Congruence congruence_from_normal_clifford(FiniteInverseSemigroup const& s, Subset const& n);

// Elements commuting with every idempotent; the largest normal Clifford
// subsemigroup.
Subset idempotent_centralizer(FiniteInverseSemigroup const& s);

// Smallest normal Clifford subsemigroup containing E and `seed`. Assumes the
// seed lies in the idempotent centralizer.
Subset normal_clifford_closure(FiniteInverseSemigroup const& s, Subset const& seed);

// All normal Clifford subsemigroups, ordered by size then lexicographically.
// Throws LimitError when |S| exceeds `guard`.
std::vector<Subset> enumerate_normal_clifford(FiniteInverseSemigroup const& s, std::size_t guard = 30);

Quotient quotient(FiniteInverseSemigroup const& s, Congruence const& c);

}  // namespace twistcross

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "twistcross/semigroup.hpp"

namespace twistcross {

// Element [g1][g1^-1]...[gm][gm^-1][s] of S(G) in pair form (P, s), where P is
// the bitmask of {e, s, g1, ..., gm} over the group's element indices.
struct ExelElement {
  std::shared_ptr<Group const> carrier;
  std::uint64_t                P = 0;
  Elem                         s = 0;

  bool contains(Elem g) const { return (P >> g) & 1u; }
  std::vector<Elem> brackets() const;  // P as a sorted index list

  friend bool operator==(ExelElement const& a, ExelElement const& b) {
    return a.carrier == b.carrier && a.P == b.P && a.s == b.s;
  }
};

inline constexpr std::size_t kMaxExelGroupOrder = 64;

// Throws InputError unless {e, s} is contained in P and P fits the carrier.
ExelElement make_exel(std::shared_ptr<Group const> carrier, std::vector<Elem> const& brackets, Elem s);

ExelElement exel_unit(std::shared_ptr<Group const> carrier);
ExelElement embed(std::shared_ptr<Group const> carrier, Elem g);  // ({e, g}, g)

// (P, s)(Q, t) = (P u sQ, st). Throws InputError on carrier mismatch.
ExelElement multiply(ExelElement const& x, ExelElement const& y);
// (P, s)* = (s^-1 P, s^-1).
ExelElement star(ExelElement const& x);

bool is_idempotent(ExelElement const& x);

// "[g][g^-1]...[s]" listing P minus {e, s} in index order, then s. The
// identity is written e.
std::string to_canonical_string(ExelElement const& x);

struct ExelSemigroup {
  std::shared_ptr<Group const> carrier;
  FiniteInverseSemigroup       semigroup;
  std::vector<ExelElement>     elements;

  // Index of x in `elements`; throws InputError if x belongs elsewhere.
  Elem index_of(ExelElement const& x) const;
};

// All pairs (P, s) with {e, s} in P, ordered by s and then by P. The table has
// 2^(n-2)(n+1) elements for |G| = n >= 2; throws LimitError past max_size.
ExelSemigroup enumerate_SG(std::shared_ptr<Group const> carrier, std::size_t max_size = 4096);

// True when the table of `s` is the S(G) product and involution on its
// elements.
bool is_exel_semigroup(ExelSemigroup const& s);

}  // namespace twistcross

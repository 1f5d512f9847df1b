#pragma once

#include <algorithm>

#include "twistcross/congruence.hpp"
#include "twistcross/partial_bijection.hpp"
#include "twistcross/semigroup.hpp"

namespace fixture {

using namespace twistcross;

inline PartialBijection pb(char const* text) { return PartialBijection::parse(text); }

// The 19-element semigroup generated by r and s, with indices of the elements
// that appear in its kernel normal system.
struct Ex19 {
  Generated<PartialBijection> g;
  Elem                        r, s, sr, srsr, rs, rsrs, ssr;

  FiniteInverseSemigroup const& semigroup() const { return g.semigroup; }

  Elem index(PartialBijection const& f) const {
    return static_cast<Elem>(std::find(g.elements.begin(), g.elements.end(), f) - g.elements.begin());
  }

  // E together with s*r and rs*.
  Subset kernel() const {
    Subset n = g.semigroup.idempotents();
    n.push_back(sr);
    n.push_back(rs);
    std::sort(n.begin(), n.end());
    return n;
  }
};

inline Ex19 ex19() {
  auto r = pb("(1,4,5,0,0,0)");
  auto s = pb("(0,5,4,0,0,6)");
  Ex19 out{generate_partial_bijections({r, s}), 0, 0, 0, 0, 0, 0, 0};
  auto sr  = compose(star(s), r);
  auto rs  = compose(r, star(s));
  out.r    = out.index(r);
  out.s    = out.index(s);
  out.sr   = out.index(sr);
  out.srsr = out.index(compose(sr, sr));
  out.rs   = out.index(rs);
  out.rsrs = out.index(compose(rs, rs));
  out.ssr  = out.index(compose(s, star(s), r));
  return out;
}

inline FiniteInverseSemigroup s3() {
  return generate_partial_bijections({pb("(2,1,3)"), pb("(2,3,1)")}).semigroup;
}

}  // namespace fixture

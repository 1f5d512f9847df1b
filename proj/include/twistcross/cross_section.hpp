#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "twistcross/congruence.hpp"
#include "twistcross/report.hpp"

namespace twistcross {

// Choice of one element per congruence class: image[k] lies in class k.
struct CrossSection {
  std::vector<Elem> image;

  Elem operator()(Elem cls) const { return image[cls]; }
  friend bool operator==(CrossSection const&, CrossSection const&) = default;
};

// Throws InputError unless `c` picks one member of every class.
void validate_cross_section(Congruence const& cong, CrossSection const& c);

// c([f]) = f for idempotents f, and [s] <= [t] implies c([s]) <= c([t]).
// Whether c also commutes with star is recorded as a note.
Report is_order_preserving(FiniteInverseSemigroup const& s, Congruence const& cong, CrossSection const& c);

bool respects_star(FiniteInverseSemigroup const& s, Congruence const& cong, CrossSection const& c);

// Classes X <= Y1, Y2 with Y1, Y2 maximal such that no choice of
// representatives y1, y2 gives y1 f = y2 f for the idempotent f of X*X, so
// no representative of X lies below both.
struct SectionObstruction {
  Elem below;
  Elem first;
  Elem second;
};

struct SectionSearch {
  std::optional<CrossSection>     section;
  std::vector<SectionObstruction> obstructions;
  std::size_t                     nodes = 0;  // backtracking nodes visited
};

// Backtracking over representatives of the maximal classes of S/N; all other
// values are forced by c(X) = c(Y) f. Deterministic; the empty result is an
// exhaustive certificate of non-existence.
SectionSearch find_order_preserving(FiniteInverseSemigroup const& s, Congruence const& cong);

// F~-inverse construction: c(t) = c(m_t) f with m_t the maximal class above t
// and f the idempotent in t*t. `choice` assigns representatives to maximal
// classes; classes it omits get their least member, and the unit class is
// always sent to the unit. Throws ConstructionError when S/~ is not F~.
CrossSection ftilde_cross_section(FiniteInverseSemigroup const& s,
                                  Congruence const&             cong,
                                  std::map<Elem, Elem> const&   choice = {});

}  // namespace twistcross

#include "twistcross/cross_section.hpp"

#include <algorithm>

namespace twistcross {

namespace {

// Idempotent of each idempotent class, indexed by class.
std::vector<std::optional<Elem>> class_idempotents(FiniteInverseSemigroup const& s, Congruence const& cong) {
  std::vector<std::optional<Elem>> out(cong.class_count());
  for (Elem e : s.idempotents()) {
    out[cong.class_of(e)] = e;
  }
  return out;
}

std::string class_label(FiniteInverseSemigroup const& s, Congruence const& cong, Elem k) {
  return "[" + s.label(cong.representative(k)) + "]";
}

}  // namespace

void validate_cross_section(Congruence const& cong, CrossSection const& c) {
  if (c.image.size() != cong.class_count()) {
    throw InputError("cross-section: " + std::to_string(c.image.size()) + " values for "
                     + std::to_string(cong.class_count()) + " classes");
  }
  for (Elem k = 0; k < c.image.size(); ++k) {
    if (c.image[k] >= cong.size() || cong.class_of(c.image[k]) != k) {
      throw InputError("cross-section: value for class " + std::to_string(k) + " lies outside it");
    }
  }
}

bool respects_star(FiniteInverseSemigroup const& s, Congruence const& cong, CrossSection const& c) {
  for (Elem k = 0; k < c.image.size(); ++k) {
    Elem ks = cong.class_of(s.star(cong.representative(k)));
    if (s.star(c(k)) != c(ks)) {
      return false;
    }
  }
  return true;
}

Report is_order_preserving(FiniteInverseSemigroup const& s, Congruence const& cong, CrossSection const& c) {
  validate_cross_section(cong, c);
  Report     rep("order-preserving cross-section");
  auto const q = quotient(s, cong);
  for (Elem f : s.idempotents()) {
    rep.check("fixes idempotents", c(cong.class_of(f)) == f,
              "c(" + class_label(s, cong, cong.class_of(f)) + ") = " + s.label(c(cong.class_of(f))));
  }
  for (Elem x = 0; x < q.semigroup.size(); ++x) {
    for (Elem y = 0; y < q.semigroup.size(); ++y) {
      if (x != y && q.semigroup.leq(x, y)) {
        rep.check("monotone", s.leq(c(x), c(y)),
                  class_label(s, cong, x) + " <= " + class_label(s, cong, y) + " but c = "
                      + s.label(c(x)) + " not <= " + s.label(c(y)));
      }
    }
  }
  rep.check("monotone", true);
  rep.note(std::string("star compatibility c([s])* = c([s*]): ")
           + (respects_star(s, cong, c) ? "holds" : "fails"));
  return rep;
}

SectionSearch find_order_preserving(FiniteInverseSemigroup const& s, Congruence const& cong) {
  SectionSearch     out;
  auto const        q      = quotient(s, cong);
  auto const&       qs     = q.semigroup;
  std::size_t const m      = qs.size();
  auto const        idem   = class_idempotents(s, cong);
  auto const        maxima = maximal_elements(qs);

  // f_X: idempotent of the class X*X.
  std::vector<Elem> f(m);
  for (Elem x = 0; x < m; ++x) {
    f[x] = *idem[qs.source(x)];
  }
  // Maximal classes above each class, in the order of `maxima`.
  std::vector<std::vector<std::size_t>> above(m);
  std::vector<bool>                     is_max(m, false);
  for (std::size_t i = 0; i < maxima.size(); ++i) {
    is_max[maxima[i]] = true;
    for (Elem x = 0; x < m; ++x) {
      if (qs.leq(x, maxima[i])) {
        above[x].push_back(i);
      }
    }
  }
  bool const has_zero = qs.zero().has_value() && m > 1;

  for (Elem x = 0; x < m; ++x) {
    if (is_max[x]) {
      continue;
    }
    for (std::size_t a = 0; a < above[x].size(); ++a) {
      for (std::size_t b = a + 1; b < above[x].size(); ++b) {
        auto const& y1 = cong.members(maxima[above[x][a]]);
        auto const& y2 = cong.members(maxima[above[x][b]]);
        bool        meet = false;
        for (Elem u : y1) {
          for (Elem v : y2) {
            meet = meet || s.mul(u, f[x]) == s.mul(v, f[x]);
          }
        }
        if (!meet) {
          out.obstructions.push_back({x, maxima[above[x][a]], maxima[above[x][b]]});
        }
      }
    }
  }

  std::vector<Elem> choice(maxima.size(), s.size());
  // Candidate representatives of each maximal class.
  std::vector<std::vector<Elem>> cand(maxima.size());
  for (std::size_t i = 0; i < maxima.size(); ++i) {
    if (idem[maxima[i]]) {
      cand[i] = {*idem[maxima[i]]};
    } else {
      cand[i] = cong.members(maxima[i]);
    }
  }
  // Consistency of the newly assigned maximal class i with earlier ones.
  auto consistent = [&](std::size_t i) {
    for (Elem x = 0; x < m; ++x) {
      if (is_max[x] || !qs.leq(x, maxima[i])) {
        continue;
      }
      Elem v = s.mul(choice[i], f[x]);
      if (idem[x] && v != *idem[x]) {
        return false;
      }
      for (std::size_t j : above[x]) {
        if (j < i && s.mul(choice[j], f[x]) != v) {
          return false;
        }
      }
    }
    return true;
  };
  auto rec = [&](auto& self, std::size_t i) -> bool {
    if (i == maxima.size()) {
      return true;
    }
    for (Elem u : cand[i]) {
      ++out.nodes;
      choice[i] = u;
      if (consistent(i) && self(self, i + 1)) {
        return true;
      }
    }
    return false;
  };
  if (!rec(rec, 0)) {
    return out;
  }
  CrossSection c{std::vector<Elem>(m)};
  for (Elem x = 0; x < m; ++x) {
    if (has_zero && x == *qs.zero()) {
      c.image[x] = *idem[x];
    } else if (is_max[x]) {
      auto i     = static_cast<std::size_t>(std::find(maxima.begin(), maxima.end(), x) - maxima.begin());
      c.image[x] = choice[i];
    } else {
      c.image[x] = s.mul(choice[above[x].front()], f[x]);
    }
  }
  if (!is_order_preserving(s, cong, c).ok()) {
    throw Error("find_order_preserving: assembled section failed verification");
  }
  out.section = std::move(c);
  return out;
}

CrossSection ftilde_cross_section(FiniteInverseSemigroup const& s,
                                  Congruence const&             cong,
                                  std::map<Elem, Elem> const&   choice) {
  auto const q  = quotient(s, cong);
  auto const ft = is_ftilde(q.semigroup);
  if (!ft.ftilde) {
    throw ConstructionError("quotient is F-tilde inverse",
                            ft.witness ? class_label(s, cong, *ft.witness) + ": " + ft.note : ft.note);
  }
  auto const  idem = class_idempotents(s, cong);
  auto const& qs   = q.semigroup;
  Elem const  unit_class = *qs.unit();
  std::map<Elem, Elem> pick;
  for (Elem m : maximal_elements(qs)) {
    pick[m] = cong.representative(m);
  }
  for (auto [cls, rep] : choice) {
    if (pick.count(cls) == 0) {
      throw InputError("ftilde_cross_section: class " + std::to_string(cls) + " is not maximal");
    }
    if (rep >= s.size() || cong.class_of(rep) != cls) {
      throw InputError("ftilde_cross_section: representative outside class " + std::to_string(cls));
    }
    pick[cls] = rep;
  }
  if (!idem[unit_class]) {
    throw InputError("ftilde_cross_section: unit class has no idempotent");
  }
  if (pick[unit_class] != *idem[unit_class]) {
    if (choice.count(unit_class) != 0) {
      throw InputError("ftilde_cross_section: the unit class must map to the unit");
    }
    pick[unit_class] = *idem[unit_class];
  }
  CrossSection c{std::vector<Elem>(qs.size())};
  for (Elem t = 0; t < qs.size(); ++t) {
    if (qs.zero() && *qs.zero() == t && qs.size() > 1) {
      c.image[t] = *idem[t];
      continue;
    }
    c.image[t] = s.mul(pick[ft.majorant[t]], *idem[qs.source(t)]);
  }
  return c;
}

}  // namespace twistcross

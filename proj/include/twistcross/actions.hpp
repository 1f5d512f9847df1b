#pragma once

// The three twisted-action datasets and their verifiers. Every identity is
// checked on the basis vectors of the relevant ideal, which spans it.

#include <memory>
#include <string>
#include <vector>

#include "twistcross/algebra.hpp"
#include "twistcross/congruence.hpp"

namespace twistcross {

// (beta, w) of a unital S on A: beta[s] maps E[s*] onto E[s]; w[s * |S| + t]
// is a unitary multiplier of E[st].
template <typename Scalar>
struct BusbySmithAction {
  FdStarAlgebra<Scalar>                        algebra;
  FiniteInverseSemigroup                       semigroup;
  std::vector<BasisIdeal>                      ideals;
  std::vector<PartialStarAutomorphism<Scalar>> beta;
  std::vector<Vector<Scalar>>                  w;

  Vector<Scalar> const& cocycle(Elem s, Elem t) const { return w[s * semigroup.size() + t]; }
  Vector<Scalar>&       cocycle(Elem s, Elem t) { return w[s * semigroup.size() + t]; }
};

// (gamma, tau) of (S, N): gamma a homomorphism into partial automorphisms,
// tau[k] a unitary multiplier of E[normal[k]].
template <typename Scalar>
struct GreenAction {
  FdStarAlgebra<Scalar>                        algebra;
  FiniteInverseSemigroup                       semigroup;
  Subset                                       normal;
  std::vector<BasisIdeal>                      ideals;
  std::vector<PartialStarAutomorphism<Scalar>> gamma;
  std::vector<Vector<Scalar>>                  tau;

  Vector<Scalar> const& twist(Elem n) const {
    auto it = std::lower_bound(normal.begin(), normal.end(), n);
    if (it == normal.end() || *it != n) {
      throw InputError("twist requested outside N");
    }
    return tau[static_cast<std::size_t>(it - normal.begin())];
  }
};

// (alpha, u) of a group G: alpha[s] maps D[s^-1] onto D[s]; u[r * |G| + s] is
// a unitary multiplier of D[r] D[rs].
template <typename Scalar>
struct TwistedPartialAction {
  FdStarAlgebra<Scalar>                        algebra;
  std::shared_ptr<Group const>                 group;
  std::vector<BasisIdeal>                      ideals;
  std::vector<PartialStarAutomorphism<Scalar>> alpha;
  std::vector<Vector<Scalar>>                  u;

  Vector<Scalar> const& cocycle(Elem r, Elem s) const { return u[r * group->order() + s]; }
};

// Clause names reported by verify_busby_smith.
inline std::vector<std::string> const& busby_smith_axioms() {
  static std::vector<std::string> const names = {
      "E_e = A",
      "beta_s beta_t = Ad w_s,t o beta_st",
      "w_s,t = 1 if s or t is idempotent",
      "beta_r(a w_s,t) w_r,st = beta_r(a) w_r,s w_rs,t",
  };
  return names;
}

inline std::vector<std::string> const& busby_smith_consequences() {
  static std::vector<std::string> const names = {
      "E_s = E_ss*",
      "beta_ss* = id",
      "beta_e = id",
      "beta_s* = Ad w_s*,s o beta_s^-1",
      "beta_r(E_r* E_s) = E_rs",
      "beta_r(a w*_s,t) = beta_r(a) w_r,st w*_rs,t w*_r,s",
      "beta_r(w_s,t a) = w_r,s w_rs,t w*_r,st beta_r(a)",
      "beta_r(w*_s,t a) = w_r,st w*_rs,t w*_r,s beta_r(a)",
      "w_s*r*r,s = w_s*,r*rs",
      "w_s*,s 1_E(s*r*) = w_s*,r*rs",
      "beta_s(w_s*,s) = w_s,s*",
  };
  return names;
}

namespace detail {

template <typename Scalar>
std::vector<Vector<Scalar>> ideal_units(FdStarAlgebra<Scalar> const& a, std::vector<BasisIdeal> const& ideals) {
  std::vector<Vector<Scalar>> out;
  for (auto const& e : ideals) {
    out.push_back(ideal_identity(a, e));
  }
  return out;
}

// Columns are the basis vectors of the ideal.
template <typename Scalar>
Matrix<Scalar> ideal_frame(FdStarAlgebra<Scalar> const& a, BasisIdeal const& ideal) {
  Matrix<Scalar> out(a.dim(), ideal.size());
  for (Index k = 0; k < ideal.size(); ++k) {
    out.col(k) = a.basis(ideal.indices[static_cast<std::size_t>(k)]);
  }
  return out;
}

// Equality of partial maps, failing (rather than throwing) when a
// composite is not basis-aligned.
template <typename Scalar, typename F>
bool same_partial_map(PartialStarAutomorphism<Scalar> const& lhs, F&& rhs, double tol) {
  try {
    return equal(lhs, rhs(), tol);
  } catch (ConstructionError const&) {
    return false;
  }
}

template <typename F, typename G>
bool same_composite(F&& lhs, G&& rhs, double tol) {
  try {
    return equal(lhs(), rhs(), tol);
  } catch (ConstructionError const&) {
    return false;
  }
}

}  // namespace detail

template <typename Scalar>
Report verify_busby_smith(BusbySmithAction<Scalar> const& act) {
  auto const&  a   = act.algebra;
  auto const&  s   = act.semigroup;
  std::size_t  n   = s.size();
  double const tol = a.tolerance();
  Report       rep("Busby-Smith twisted action");

  if (!s.unit() || act.ideals.size() != n || act.beta.size() != n || act.w.size() != n * n) {
    rep.check("shape", false, "semigroup must be unital and every table must be indexed by it");
    return rep;
  }
  auto lab = [&](Elem x) { return s.label(x); };
  for (Elem x = 0; x < n; ++x) {
    rep.check("ideals", is_ideal(a, act.ideals[x]).ok(), "E_" + lab(x));
  }
  if (!rep.ok()) {
    return rep;
  }
  auto const ones = detail::ideal_units(a, act.ideals);
  auto ideal_of   = [&](Elem x) -> BasisIdeal const& { return act.ideals[x]; };

  for (Elem x = 0; x < n; ++x) {
    auto const& b  = act.beta[x];
    bool        ok = b.domain == ideal_of(s.star(x)) && b.range == ideal_of(x)
              && verify_partial_automorphism(a, b).ok();
    rep.check("beta_s is a partial automorphism E_s* -> E_s", ok, "s=" + lab(x));
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      rep.check("w_s,t is a unitary multiplier of E_st",
                is_unitary_multiplier(a, act.cocycle(x, y), ideal_of(s.mul(x, y))),
                "s=" + lab(x) + ", t=" + lab(y));
    }
  }
  if (!rep.ok()) {
    return rep;
  }

  Elem const e = *s.unit();
  rep.check(busby_smith_axioms()[0], ideal_of(e) == BasisIdeal::full(a.dim()), "E_e = " + to_string(ideal_of(e)));
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      Elem xy = s.mul(x, y);
      bool ok = detail::same_composite([&] { return compose(act.beta[x], act.beta[y], tol); },
                                       [&] { return compose(Ad(a, act.cocycle(x, y), ideal_of(xy)), act.beta[xy], tol); },
                                       tol);
      rep.check(busby_smith_axioms()[1], ok, "s=" + lab(x) + ", t=" + lab(y));
      if (s.is_idempotent(x) || s.is_idempotent(y)) {
        rep.check(busby_smith_axioms()[2], a.equal(act.cocycle(x, y), ones[xy]), "s=" + lab(x) + ", t=" + lab(y));
      }
    }
  }
  rep.check(busby_smith_axioms()[2], true);

  auto const& names = busby_smith_consequences();
  for (Elem r = 0; r < n; ++r) {
    auto const& br  = act.beta[r];
    Elem const  rs_ = s.star(r);
    for (Elem x = 0; x < n; ++x) {
      Elem const rx = s.mul(r, x);
      for (Elem y = 0; y < n; ++y) {
        Elem const xy  = s.mul(x, y);
        auto const& w_xy   = act.cocycle(x, y);
        auto const  w_xy_s = a.star(w_xy);
        auto const& w_r_xy = act.cocycle(r, xy);
        auto const& w_rx_y = act.cocycle(rx, y);
        auto const& w_r_x  = act.cocycle(r, x);
        std::string where  = "r=" + lab(r) + ", s=" + lab(x) + ", t=" + lab(y);
        for (Index i : intersect(ideal_of(rs_), ideal_of(xy)).indices) {
          auto const ai  = a.basis(i);
          auto const bra = br.apply(ai, tol);
          std::string at = where + ", a=" + a.label(i);
          rep.check(busby_smith_axioms()[3],
                    a.equal(a.mul(br.apply(a.mul(ai, w_xy), tol), w_r_xy), a.mul(bra, w_r_x, w_rx_y)), at);
          rep.check(names[5],
                    a.equal(br.apply(a.mul(ai, w_xy_s), tol),
                            a.mul(a.mul(bra, w_r_xy), a.mul(a.star(w_rx_y), a.star(w_r_x)))),
                    at);
          rep.check(names[6],
                    a.equal(br.apply(a.mul(w_xy, ai), tol),
                            a.mul(a.mul(w_r_x, w_rx_y), a.mul(a.star(w_r_xy), bra))),
                    at);
          rep.check(names[7],
                    a.equal(br.apply(a.mul(w_xy_s, ai), tol),
                            a.mul(a.mul(w_r_xy, a.star(w_rx_y)), a.mul(a.star(w_r_x), bra))),
                    at);
        }
      }
    }
  }
  rep.check(busby_smith_axioms()[3], true);
  for (std::size_t k = 5; k < 8; ++k) {
    rep.check(names[k], true);
  }

  for (Elem x = 0; x < n; ++x) {
    Elem const xs = s.star(x);
    rep.check(names[0], ideal_of(x) == ideal_of(s.target(x)), "s=" + lab(x));
    rep.check(names[1],
              equal(act.beta[s.target(x)], PartialStarAutomorphism<Scalar>::identity(ideal_of(x), a.dim()), tol),
              "s=" + lab(x));
    bool inv_ok = detail::same_partial_map(act.beta[xs], [&] {
      return compose(Ad(a, act.cocycle(xs, x), ideal_of(s.source(x))), inverse(act.beta[x], tol), tol);
    }, tol);
    rep.check(names[3], inv_ok, "s=" + lab(x));
    rep.check(names[10], a.equal(act.beta[x].apply(act.cocycle(xs, x), tol), act.cocycle(x, xs)), "s=" + lab(x));
  }
  rep.check(names[2], equal(act.beta[e], PartialStarAutomorphism<Scalar>::identity(ideal_of(e), a.dim()), tol));
  for (Elem r = 0; r < n; ++r) {
    Elem const rs_ = s.star(r);
    for (Elem x = 0; x < n; ++x) {
      Elem const     xs  = s.star(x);
      std::string    at  = "r=" + lab(r) + ", s=" + lab(x);
      BasisIdeal     dom = intersect(ideal_of(rs_), ideal_of(x));
      Matrix<Scalar> img(a.dim(), dom.size());
      for (Index k = 0; k < dom.size(); ++k) {
        img.col(k) = act.beta[r].apply(a.basis(dom.indices[static_cast<std::size_t>(k)]), tol);
      }
      rep.check(names[4], same_column_space(img, detail::ideal_frame(a, ideal_of(s.mul(r, x))), tol), at);
      Elem const rr  = s.source(r);  // r*r
      auto const lhs = act.cocycle(s.mul(xs, rr), x);
      auto const rhs = act.cocycle(xs, s.mul(rr, x));
      rep.check(names[8], a.equal(lhs, rhs), at);
      Elem const sr = s.mul(xs, rs_);  // s*r*
      rep.check(names[9], a.equal(a.mul(act.cocycle(xs, x), ones[sr]), rhs), at);
    }
  }
  return rep;
}

template <typename Scalar>
Report verify_green(GreenAction<Scalar> const& act) {
  auto const&  a   = act.algebra;
  auto const&  s   = act.semigroup;
  std::size_t  n   = s.size();
  double const tol = a.tolerance();
  Report       rep("Green twisted action");
  if (!s.unit() || act.ideals.size() != n || act.gamma.size() != n || act.tau.size() != act.normal.size()) {
    rep.check("shape", false, "semigroup must be unital and every table must be indexed by it");
    return rep;
  }
  rep.check("N is a normal Clifford subsemigroup", is_normal_clifford(s, act.normal).ok());
  auto lab = [&](Elem x) { return s.label(x); };
  for (Elem x = 0; x < n; ++x) {
    rep.check("ideals", is_ideal(a, act.ideals[x]).ok(), "E_" + lab(x));
  }
  if (!rep.ok()) {
    return rep;
  }
  rep.check("E_e = A", act.ideals[*s.unit()] == BasisIdeal::full(a.dim()));
  for (Elem x = 0; x < n; ++x) {
    auto const& g  = act.gamma[x];
    bool        ok = g.domain == act.ideals[s.star(x)] && g.range == act.ideals[x]
              && verify_partial_automorphism(a, g).ok();
    rep.check("gamma_s is a partial automorphism E_s* -> E_s", ok, "s=" + lab(x));
  }
  for (Elem m : act.normal) {
    rep.check("tau_n is a unitary multiplier of E_n", is_unitary_multiplier(a, act.twist(m), act.ideals[m]),
              "n=" + lab(m));
  }
  if (!rep.ok()) {
    return rep;
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      bool ok = detail::same_partial_map(act.gamma[s.mul(x, y)],
                                         [&] { return compose(act.gamma[x], act.gamma[y], tol); }, tol);
      rep.check("gamma_s gamma_t = gamma_st", ok, "s=" + lab(x) + ", t=" + lab(y));
    }
  }
  for (Elem m : act.normal) {
    rep.check("gamma_n = Ad tau_n", equal(act.gamma[m], Ad(a, act.twist(m), act.ideals[m]), tol), "n=" + lab(m));
    for (Elem x = 0; x < n; ++x) {
      if (s.leq(s.source(m), s.source(x))) {
        Elem conj = s.mul(x, m, s.star(x));
        rep.check("gamma_s(tau_n) = tau_sns*", a.equal(act.gamma[x].apply(act.twist(m), tol), act.twist(conj)),
                  "s=" + lab(x) + ", n=" + lab(m));
      }
    }
    for (Elem l : act.normal) {
      rep.check("tau_n tau_l = tau_nl", a.equal(a.mul(act.twist(m), act.twist(l)), act.twist(s.mul(m, l))),
                "n=" + lab(m) + ", l=" + lab(l));
    }
  }
  return rep;
}

template <typename Scalar>
Report verify_twisted_partial(TwistedPartialAction<Scalar> const& act) {
  auto const&  a   = act.algebra;
  auto const&  g   = *act.group;
  std::size_t  n   = g.order();
  double const tol = a.tolerance();
  Report       rep("twisted partial action");
  if (act.ideals.size() != n || act.alpha.size() != n || act.u.size() != n * n) {
    rep.check("shape", false, "every table must be indexed by the group");
    return rep;
  }
  auto lab = [&](Elem x) { return g.label(x); };
  auto D   = [&](Elem x) -> BasisIdeal const& { return act.ideals[x]; };
  for (Elem x = 0; x < n; ++x) {
    rep.check("ideals", is_ideal(a, D(x)).ok(), "D_" + lab(x));
  }
  if (!rep.ok()) {
    return rep;
  }
  auto const ones = detail::ideal_units(a, act.ideals);
  for (Elem x = 0; x < n; ++x) {
    auto const& al = act.alpha[x];
    bool        ok = al.domain == D(g.inverse(x)) && al.range == D(x) && verify_partial_automorphism(a, al).ok();
    rep.check("alpha_s is a partial automorphism D_s^-1 -> D_s", ok, "s=" + lab(x));
    for (Elem y = 0; y < n; ++y) {
      rep.check("u_r,s is a unitary multiplier of D_r D_rs",
                is_unitary_multiplier(a, act.cocycle(x, y), intersect(D(x), D(g.mul(x, y)))),
                "r=" + lab(x) + ", s=" + lab(y));
    }
  }
  if (!rep.ok()) {
    return rep;
  }
  Elem const e = g.identity();
  rep.check("D_e = A and alpha_e = id",
            D(e) == BasisIdeal::full(a.dim())
                && equal(act.alpha[e], PartialStarAutomorphism<Scalar>::identity(D(e), a.dim()), tol));
  for (Elem r = 0; r < n; ++r) {
    Elem const ri = g.inverse(r);
    for (Elem x = 0; x < n; ++x) {
      std::string    at  = "r=" + lab(r) + ", s=" + lab(x);
      BasisIdeal     dom = intersect(D(ri), D(x));
      Matrix<Scalar> img(a.dim(), dom.size());
      for (Index k = 0; k < dom.size(); ++k) {
        img.col(k) = act.alpha[r].apply(a.basis(dom.indices[static_cast<std::size_t>(k)]), tol);
      }
      rep.check("alpha_r(D_r^-1 D_s) = D_r D_rs",
                same_column_space(img, detail::ideal_frame(a, intersect(D(r), D(g.mul(r, x)))), tol), at);

      Elem const xi = g.inverse(x);
      Elem const rx = g.mul(r, x);
      for (Index i : intersect(D(xi), D(g.mul(xi, ri))).indices) {
        auto const ai  = a.basis(i);
        auto const lhs = act.alpha[r].apply(act.alpha[x].apply(ai, tol), tol);
        auto const u   = act.cocycle(r, x);
        rep.check("alpha_r alpha_s(a) = u_r,s alpha_rs(a) u*_r,s",
                  a.equal(lhs, a.mul(a.mul(u, act.alpha[rx].apply(ai, tol)), a.star(u))), at + ", a=" + a.label(i));
      }
      for (Elem y = 0; y < n; ++y) {
        Elem const xy = g.mul(x, y);
        for (Index i : intersect(intersect(D(ri), D(x)), D(xy)).indices) {
          auto const ai  = a.basis(i);
          auto const lhs = a.mul(act.alpha[r].apply(a.mul(ai, act.cocycle(x, y)), tol), act.cocycle(r, xy));
          auto const rhs = a.mul(act.alpha[r].apply(ai, tol), act.cocycle(r, x), act.cocycle(rx, y));
          rep.check("alpha_r(a u_s,t) u_r,st = alpha_r(a) u_r,s u_rs,t", a.equal(lhs, rhs),
                    at + ", t=" + lab(y) + ", a=" + a.label(i));
        }
      }
    }
    rep.check("u_e,t = u_t,e = 1",
              a.equal(act.cocycle(e, r), ones[r]) && a.equal(act.cocycle(r, e), ones[r]), "t=" + lab(r));
  }
  rep.check("alpha_r alpha_s(a) = u_r,s alpha_rs(a) u*_r,s", true);
  rep.check("alpha_r(a u_s,t) u_r,st = alpha_r(a) u_r,s u_rs,t", true);
  return rep;
}

// Field-by-field comparison: algebra, semigroup table, ideals, maps, cocycle.
template <typename Scalar>
Report same_action(BusbySmithAction<Scalar> const& x, BusbySmithAction<Scalar> const& y) {
  Report rep("Busby-Smith actions agree");
  rep.check("algebra", same_algebra(x.algebra, y.algebra));
  rep.check("semigroup", x.semigroup == y.semigroup);
  if (!rep.ok()) {
    return rep;
  }
  double const tol = x.algebra.tolerance();
  for (Elem s = 0; s < x.semigroup.size(); ++s) {
    rep.check("E_s", x.ideals[s] == y.ideals[s], "s=" + x.semigroup.label(s));
    rep.check("beta_s", equal(x.beta[s], y.beta[s], tol), "s=" + x.semigroup.label(s));
    for (Elem t = 0; t < x.semigroup.size(); ++t) {
      rep.check("w_s,t", x.algebra.equal(x.cocycle(s, t), y.cocycle(s, t)),
                "s=" + x.semigroup.label(s) + ", t=" + x.semigroup.label(t));
    }
  }
  return rep;
}

template <typename Scalar>
Report same_action(TwistedPartialAction<Scalar> const& x, TwistedPartialAction<Scalar> const& y) {
  Report rep("twisted partial actions agree");
  rep.check("algebra", same_algebra(x.algebra, y.algebra));
  rep.check("group", x.group->semigroup() == y.group->semigroup());
  if (!rep.ok()) {
    return rep;
  }
  double const tol = x.algebra.tolerance();
  std::size_t  n   = x.group->order();
  for (Elem s = 0; s < n; ++s) {
    rep.check("D_s", x.ideals[s] == y.ideals[s], "s=" + x.group->label(s));
    rep.check("alpha_s", equal(x.alpha[s], y.alpha[s], tol), "s=" + x.group->label(s));
    for (Elem t = 0; t < n; ++t) {
      rep.check("u_s,t", x.algebra.equal(x.cocycle(s, t), y.cocycle(s, t)),
                "s=" + x.group->label(s) + ", t=" + x.group->label(t));
    }
  }
  return rep;
}

// (alpha, u) and (beta, w) are exterior equivalent through V when
// beta_s = Ad V_s o alpha_s and w_s,t = V_s alpha_s(1_{E_s*} V_t) u_s,t V*_st.
template <typename Scalar>
Report is_exterior_equivalence(BusbySmithAction<Scalar> const& first,
                               BusbySmithAction<Scalar> const& second,
                               std::vector<Vector<Scalar>> const& v) {
  if (!same_algebra(first.algebra, second.algebra) || !(first.semigroup == second.semigroup)) {
    throw InputError("exterior equivalence: actions over different algebras or semigroups");
  }
  auto const&  a   = first.algebra;
  auto const&  s   = first.semigroup;
  double const tol = a.tolerance();
  if (v.size() != s.size()) {
    throw InputError("exterior equivalence: one unitary per element expected");
  }
  Report rep("exterior equivalence");
  auto const ones = detail::ideal_units(a, first.ideals);
  for (Elem x = 0; x < s.size(); ++x) {
    rep.check("same ideals", first.ideals[x] == second.ideals[x], "s=" + s.label(x));
    rep.check("V_s is a unitary multiplier of E_s", is_unitary_multiplier(a, v[x], first.ideals[x]), "s=" + s.label(x));
  }
  if (!rep.ok()) {
    return rep;
  }
  for (Elem x = 0; x < s.size(); ++x) {
    bool ok = detail::same_partial_map(second.beta[x], [&] {
      return compose(Ad(a, v[x], first.ideals[x]), first.beta[x], tol);
    }, tol);
    rep.check("beta_s = Ad V_s o alpha_s", ok, "s=" + s.label(x));
    for (Elem y = 0; y < s.size(); ++y) {
      Elem const xy  = s.mul(x, y);
      auto const mid = first.beta[x].apply(a.mul(ones[s.star(x)], v[y]), tol);
      auto const rhs = a.mul(a.mul(v[x], mid), a.mul(first.cocycle(x, y), a.star(v[xy])));
      rep.check("w_s,t = V_s alpha_s(1 V_t) u_s,t V*_st", a.equal(second.cocycle(x, y), rhs),
                "s=" + s.label(x) + ", t=" + s.label(y));
    }
  }
  return rep;
}

// (rho, phi) conjugates (alpha, u) on (A, S) to (beta, w) on (B, T). `rho` is
// the matrix of a linear map A -> B and phi maps elements of S to T.
template <typename Scalar>
Report is_conjugacy(BusbySmithAction<Scalar> const& first,
                    BusbySmithAction<Scalar> const& second,
                    Matrix<Scalar> const&           rho,
                    std::vector<Elem> const&        phi) {
  auto const&  a   = first.algebra;
  auto const&  b   = second.algebra;
  auto const&  s   = first.semigroup;
  auto const&  t   = second.semigroup;
  double const tol = b.tolerance();
  Report       rep("conjugacy");
  if (rho.rows() != b.dim() || rho.cols() != a.dim() || phi.size() != s.size()) {
    throw InputError("conjugacy: rho or phi has the wrong shape");
  }
  bool rho_ok = inverse(rho, tol).has_value();
  for (Index i = 0; i < a.dim() && rho_ok; ++i) {
    rho_ok = b.equal(rho * a.star(a.basis(i)), b.star(rho * a.basis(i)));
    for (Index j = 0; j < a.dim() && rho_ok; ++j) {
      rho_ok = b.equal(rho * a.mul(a.basis(i), a.basis(j)), b.mul(rho * a.basis(i), rho * a.basis(j)));
    }
  }
  rep.check("rho is a star isomorphism", rho_ok);
  std::vector<bool> hit(t.size(), false);
  bool              phi_ok = s.size() == t.size();
  for (Elem x = 0; x < s.size() && phi_ok; ++x) {
    phi_ok = phi[x] < t.size() && !hit[phi[x]] && phi[s.star(x)] == t.star(phi[x]);
    if (phi_ok) {
      hit[phi[x]] = true;
    }
    for (Elem y = 0; y < s.size() && phi_ok; ++y) {
      phi_ok = phi[s.mul(x, y)] == t.mul(phi[x], phi[y]);
    }
  }
  rep.check("phi is a semigroup isomorphism", phi_ok);
  if (!rep.ok()) {
    return rep;
  }
  for (Elem x = 0; x < s.size(); ++x) {
    auto const&    dom = first.ideals[s.star(x)];
    auto const&    tgt = second.beta[phi[x]];
    Matrix<Scalar> img(b.dim(), dom.size());
    bool           ok = true;
    for (Index k = 0; k < dom.size(); ++k) {
      auto ak    = a.basis(dom.indices[static_cast<std::size_t>(k)]);
      img.col(k) = rho * ak;
      ok         = ok && tgt.defined_on(img.col(k), tol)
           && b.equal(rho * first.beta[x].apply(ak, tol), tgt.apply(img.col(k), tol));
    }
    ok = ok && same_column_space(img, detail::ideal_frame(b, tgt.domain), tol);
    rep.check("rho o alpha_s = beta_phi(s) o rho", ok, "s=" + s.label(x));
    for (Elem y = 0; y < s.size(); ++y) {
      rep.check("rho(u_s,t) = w_phi(s),phi(t)", b.equal(rho * first.cocycle(x, y), second.cocycle(phi[x], phi[y])),
                "s=" + s.label(x) + ", t=" + s.label(y));
    }
  }
  return rep;
}

}  // namespace twistcross

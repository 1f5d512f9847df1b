#pragma once

// Constructions of twisted actions and the conversions between the three
// kinds: cross-section actions on C N, the canonical Green action, Green to
// Busby-Smith and back, S(G) versus twisted partial actions, and exterior
// perturbations.

#include <algorithm>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "twistcross/actions.hpp"
#include "twistcross/cross_section.hpp"
#include "twistcross/exel.hpp"

namespace twistcross {

namespace detail {

inline Elem position_in(Subset const& set, Elem x) {
  auto it = std::lower_bound(set.begin(), set.end(), x);
  if (it == set.end() || *it != x) {
    throw InputError("element outside the normal subsemigroup");
  }
  return static_cast<Elem>(it - set.begin());
}

// Basis indices k of C N with n_k n_k* <= f.
inline BasisIdeal lower_ideal(FiniteInverseSemigroup const& s, Subset const& n, Elem f) {
  std::vector<Index> out;
  for (std::size_t k = 0; k < n.size(); ++k) {
    if (s.leq(s.target(n[k]), f)) {
      out.push_back(static_cast<Index>(k));
    }
  }
  return BasisIdeal{out};
}

// n -> x n x* on the basis of C N, from `domain` onto `range`.
template <typename Scalar>
PartialStarAutomorphism<Scalar> conjugation_map(FiniteInverseSemigroup const& s,
                                                Subset const&                 n,
                                                Elem                          x,
                                                BasisIdeal const&             domain,
                                                BasisIdeal const&             range) {
  Matrix<Scalar> m = Matrix<Scalar>::Zero(range.size(), domain.size());
  for (Index k = 0; k < domain.size(); ++k) {
    Elem img = s.mul(x, n[static_cast<std::size_t>(domain.indices[static_cast<std::size_t>(k)])], s.star(x));
    auto pos = std::lower_bound(range.indices.begin(), range.indices.end(), static_cast<Index>(position_in(n, img)));
    if (pos == range.indices.end() || *pos != static_cast<Index>(position_in(n, img))) {
      throw ConstructionError("conjugation maps E_s* into E_s", "image of " + s.label(x) + " escapes");
    }
    m(pos - range.indices.begin(), k) = Scalar(1);
  }
  return {domain, range, m, static_cast<Index>(n.size())};
}

// Restriction of f to `domain`, whose image must be span(range).
template <typename Scalar>
PartialStarAutomorphism<Scalar> restrict_map(PartialStarAutomorphism<Scalar> const& f,
                                             BasisIdeal const&                      domain,
                                             BasisIdeal const&                      range,
                                             double                                 tol) {
  Matrix<Scalar> m(range.size(), domain.size());
  for (Index k = 0; k < domain.size(); ++k) {
    Vector<Scalar> e = Vector<Scalar>::Zero(f.ambient);
    e(domain.indices[static_cast<std::size_t>(k)]) = Scalar(1);
    Vector<Scalar> img  = f.apply(e, tol);
    Vector<Scalar> back = extend_from<Scalar>(restrict_to(img, range), range, f.ambient);
    if (!approx_equal(img, back, ScalarTraits<Scalar>::exact ? 0.0 : tol * std::max(1.0, max_magnitude(img)))) {
      throw ConstructionError("basis-aligned", "restriction to " + to_string(domain) + " leaves " + to_string(range));
    }
    m.col(k) = restrict_to(img, range);
  }
  return {domain, range, m, f.ambient};
}

inline Congruence checked_section(FiniteInverseSemigroup const& t, Subset const& n, CrossSection const& c) {
  if (!t.unit()) {
    throw InputError("twisted actions need a unital semigroup");
  }
  auto const nc = is_normal_clifford(t, n);
  if (!nc.ok()) {
    throw InputError("N is not a normal Clifford subsemigroup");
  }
  Congruence cong = congruence_from_normal_clifford(t, n);
  validate_cross_section(cong, c);
  auto const rep = is_order_preserving(t, cong, c);
  if (!rep.ok()) {
    for (auto const& cl : rep.clauses()) {
      if (!cl.passed) {
        throw InputError("cross-section is not order-preserving: " + cl.name + " fails at " + cl.witness);
      }
    }
  }
  return cong;
}

}  // namespace detail

// E_s = A, beta_s = id and w = 1 for a unital S.
template <typename Scalar>
BusbySmithAction<Scalar> trivial_action(FdStarAlgebra<Scalar> const& a, FiniteInverseSemigroup const& s) {
  if (!s.unit()) {
    throw InputError("twisted actions need a unital semigroup");
  }
  auto const               full = BasisIdeal::full(a.dim());
  BusbySmithAction<Scalar> out{a, s, std::vector<BasisIdeal>(s.size(), full), {}, {}};
  out.beta.assign(s.size(), PartialStarAutomorphism<Scalar>::identity(full, a.dim()));
  out.w.assign(s.size() * s.size(), ideal_identity(a, full));
  return out;
}

// Busby-Smith action of T/N on C N: E_s spans the n with nn* <= c(s)c(s)*,
// beta_s is conjugation by c(s), w_r,s = c(r)c(s)c(rs)*. Throws InputError
// when c is not an order-preserving cross-section.
template <typename Scalar>
BusbySmithAction<Scalar> action_from_cross_section(FiniteInverseSemigroup const& t,
                                                   Subset const&                 n,
                                                   CrossSection const&           c) {
  Congruence const cong = detail::checked_section(t, n, c);
  Quotient         q    = quotient(t, cong);
  std::size_t      m    = q.semigroup.size();

  BusbySmithAction<Scalar> out{from_semigroup_algebra<Scalar>(t, n), q.semigroup, {}, {}, {}};
  for (Elem x = 0; x < m; ++x) {
    out.ideals.push_back(detail::lower_ideal(t, n, t.target(c(x))));
  }
  for (Elem x = 0; x < m; ++x) {
    out.beta.push_back(detail::conjugation_map<Scalar>(t, n, c(x), out.ideals[q.semigroup.star(x)], out.ideals[x]));
  }
  for (Elem x = 0; x < m; ++x) {
    for (Elem y = 0; y < m; ++y) {
      Elem w = t.mul(c(x), c(y), t.star(c(q.semigroup.mul(x, y))));
      out.w.push_back(out.algebra.basis(static_cast<Index>(detail::position_in(n, w))));
    }
  }
  return out;
}

// gamma_s = Ad s and tau_n = n on C N, with E_s spanning the n with nn* <= ss*.
template <typename Scalar>
GreenAction<Scalar> green_canonical(FiniteInverseSemigroup const& t, Subset const& n) {
  if (!t.unit()) {
    throw InputError("twisted actions need a unital semigroup");
  }
  if (!is_normal_clifford(t, n).ok()) {
    throw InputError("N is not a normal Clifford subsemigroup");
  }
  GreenAction<Scalar> out{from_semigroup_algebra<Scalar>(t, n), t, n, {}, {}, {}};
  for (Elem x = 0; x < t.size(); ++x) {
    out.ideals.push_back(detail::lower_ideal(t, n, t.target(x)));
  }
  for (Elem x = 0; x < t.size(); ++x) {
    out.gamma.push_back(detail::conjugation_map<Scalar>(t, n, x, out.ideals[t.star(x)], out.ideals[x]));
  }
  for (std::size_t k = 0; k < n.size(); ++k) {
    out.tau.push_back(out.algebra.basis(static_cast<Index>(k)));
  }
  return out;
}

// beta_q = gamma_c(q) and w_q,r = tau_{c(q)c(r)c(qr)*}, over S/N.
template <typename Scalar>
BusbySmithAction<Scalar> green_to_busby(GreenAction<Scalar> const& green, CrossSection const& c) {
  auto const&      t    = green.semigroup;
  Congruence const cong = detail::checked_section(t, green.normal, c);
  Quotient         q    = quotient(t, cong);
  std::size_t      m    = q.semigroup.size();

  BusbySmithAction<Scalar> out{green.algebra, q.semigroup, {}, {}, {}};
  for (Elem x = 0; x < m; ++x) {
    out.ideals.push_back(green.ideals[c(x)]);
    out.beta.push_back(green.gamma[c(x)]);
  }
  for (Elem x = 0; x < m; ++x) {
    for (Elem y = 0; y < m; ++y) {
      out.w.push_back(green.twist(t.mul(c(x), c(y), t.star(c(q.semigroup.mul(x, y))))));
    }
  }
  return out;
}

// V_s = d(s) c(s)* in C N; exterior equivalence between the actions of two
// sections.
template <typename Scalar>
std::vector<Vector<Scalar>> cross_section_equivalence_witness(FiniteInverseSemigroup const& t,
                                                              Subset const&                 n,
                                                              CrossSection const&           c,
                                                              CrossSection const&           d) {
  Congruence const cong = detail::checked_section(t, n, c);
  detail::checked_section(t, n, d);
  auto const                  a = from_semigroup_algebra<Scalar>(t, n);
  std::vector<Vector<Scalar>> out;
  for (Elem x = 0; x < cong.class_count(); ++x) {
    out.push_back(a.basis(static_cast<Index>(detail::position_in(n, t.mul(d(x), t.star(c(x)))))));
  }
  return out;
}

// (Ad V_s o beta_s, V_s beta_s(1 V_t) w_s,t V*_st).
template <typename Scalar>
BusbySmithAction<Scalar> perturb(BusbySmithAction<Scalar> const& act, std::vector<Vector<Scalar>> const& v) {
  auto const&  a   = act.algebra;
  auto const&  s   = act.semigroup;
  double const tol = a.tolerance();
  if (v.size() != s.size()) {
    throw InputError("perturb: one unitary per element expected");
  }
  auto const               ones = detail::ideal_units(a, act.ideals);
  BusbySmithAction<Scalar> out{act.algebra, act.semigroup, act.ideals, {}, {}};
  for (Elem x = 0; x < s.size(); ++x) {
    out.beta.push_back(compose(Ad(a, v[x], act.ideals[x]), act.beta[x], tol));
  }
  for (Elem x = 0; x < s.size(); ++x) {
    for (Elem y = 0; y < s.size(); ++y) {
      auto mid = act.beta[x].apply(a.mul(ones[s.star(x)], v[y]), tol);
      out.w.push_back(a.mul(a.mul(v[x], mid), a.mul(act.cocycle(x, y), a.star(v[s.mul(x, y)]))));
    }
  }
  return out;
}

// Random V with V_f = 1 on idempotents and V_s' = 1_{E_s'} V_s for s' <= s,
// so the perturbed action is again a Busby-Smith action. On maximal s the
// unitary is random away from the ideals E_f of idempotents f <= s. Throws
// ConstructionError when S is not F~-inverse.
template <typename Scalar>
std::vector<Vector<Scalar>> random_exterior_family(BusbySmithAction<Scalar> const& act, std::mt19937_64& rng) {
  auto const& a  = act.algebra;
  auto const& s  = act.semigroup;
  auto const  ft = is_ftilde(s);
  if (!ft.ftilde) {
    throw ConstructionError("semigroup is F-tilde inverse", ft.note);
  }
  auto const                  ones = detail::ideal_units(a, act.ideals);
  std::vector<Vector<Scalar>> v(s.size());
  for (Elem m : maximal_elements(s)) {
    if (s.is_idempotent(m)) {
      v[m] = ones[m];
      continue;
    }
    std::vector<Index> fixed;
    for (Elem f : s.idempotents()) {
      if (s.leq(f, m)) {
        fixed.insert(fixed.end(), act.ideals[f].indices.begin(), act.ideals[f].indices.end());
      }
    }
    auto const p = ideal_identity(a, make_ideal(std::move(fixed)));
    auto const u = random_unitary(a, act.ideals[m], rng);
    v[m]         = u - a.mul(u, p) + p;
  }
  for (Elem x = 0; x < s.size(); ++x) {
    if (s.is_idempotent(x)) {
      v[x] = ones[x];
    } else if (ft.majorant[x] != x) {
      v[x] = a.mul(ones[x], v[ft.majorant[x]]);
    }
  }
  return v;
}

// Element u d_t of the semigroup attached to a Busby-Smith action: u is a
// unitary multiplier of E_t.
template <typename Scalar>
struct DeltaElement {
  Vector<Scalar> u;
  Elem           t = 0;
};

// The inverse semigroup {u d_t} with
//   (u d_r)(v d_t) = beta_r(beta_r^-1(u) v) w_r,t d_rt,
//   (u d_t)* = beta_t^-1(u*) w*_t*,t d_t*,
// together with gamma_{u d_t} = Ad u o beta_t and tau_{u d_f} = u.
template <typename Scalar>
class DeltaSemigroup {
 public:
  using Element = DeltaElement<Scalar>;

  explicit DeltaSemigroup(BusbySmithAction<Scalar> act) : act_(std::move(act)) {
    double const tol = act_.algebra.tolerance();
    ones_            = detail::ideal_units(act_.algebra, act_.ideals);
    for (auto const& b : act_.beta) {
      beta_inv_.push_back(inverse(b, tol));
    }
  }

  BusbySmithAction<Scalar> const& action() const { return act_; }

  Element identity(Elem t) const { return {ones_[t], t}; }

  Element mul(Element const& x, Element const& y) const {
    auto const&  a   = act_.algebra;
    double const tol = a.tolerance();
    auto inner       = a.mul(beta_inv_[x.t].apply(x.u, tol), y.u);
    return {a.mul(act_.beta[x.t].apply(inner, tol), act_.cocycle(x.t, y.t)), act_.semigroup.mul(x.t, y.t)};
  }

  Element star(Element const& x) const {
    auto const&  a   = act_.algebra;
    Elem const   ts  = act_.semigroup.star(x.t);
    auto         inv = beta_inv_[x.t].apply(a.star(x.u), a.tolerance());
    return {a.mul(inv, a.star(act_.cocycle(ts, x.t))), ts};
  }

  bool equal(Element const& x, Element const& y) const { return x.t == y.t && act_.algebra.equal(x.u, y.u); }

  bool is_idempotent(Element const& x) const { return equal(mul(x, x), x); }

  PartialStarAutomorphism<Scalar> gamma(Element const& x) const {
    return compose(Ad(act_.algebra, x.u, act_.ideals[x.t]), act_.beta[x.t], act_.algebra.tolerance());
  }

  // Throws InputError unless x lies over an idempotent.
  Vector<Scalar> const& tau(Element const& x) const {
    if (!act_.semigroup.is_idempotent(x.t)) {
      throw InputError("tau is defined on elements over idempotents");
    }
    return x.u;
  }

  // u d_t with t uniform and u a random unitary of E_t.
  Element sample(std::mt19937_64& rng) const {
    std::uniform_int_distribution<Elem> pick(0, act_.semigroup.size() - 1);
    Elem t = pick(rng);
    return {random_unitary(act_.algebra, act_.ideals[t], rng), t};
  }

  // u d_f with f a random idempotent below `bound`.
  Element sample_below(Elem bound, std::mt19937_64& rng) const {
    std::vector<Elem> below;
    for (Elem f : act_.semigroup.idempotents()) {
      if (act_.semigroup.leq(f, bound)) {
        below.push_back(f);
      }
    }
    std::uniform_int_distribution<std::size_t> pick(0, below.size() - 1);
    Elem f = below[pick(rng)];
    return {random_unitary(act_.algebra, act_.ideals[f], rng), f};
  }

  std::string label(Element const& x) const {
    return "(" + act_.algebra.format(x.u) + ")d_" + act_.semigroup.label(x.t);
  }

  // Inverse-semigroup laws, the shape of idempotents and the Green axioms on
  // `samples` random draws.
  Report verify_sampled(std::size_t samples = 200, std::uint64_t seed = 0) const {
    auto const&     s   = act_.semigroup;
    auto const&     a   = act_.algebra;
    double const    tol = a.tolerance();
    std::mt19937_64 rng(seed);
    Report          rep("sampled Green axioms of the semigroup u d_t");
    for (std::size_t k = 0; k < samples; ++k) {
      Element x  = sample(rng);
      Element y  = sample(rng);
      Element z  = sample(rng);
      Element xs = star(x);
      std::string at = "x=" + label(x);
      rep.check("associative", equal(mul(mul(x, y), z), mul(x, mul(y, z))), at);
      rep.check("x x* x = x", equal(mul(mul(x, xs), x), x), at);
      rep.check("x** = x", equal(star(xs), x), at);
      rep.check("(xy)* = y* x*", equal(star(mul(x, y)), mul(star(y), xs)), at);
      rep.check("x x* = 1 d_tt*", equal(mul(x, xs), identity(s.target(x.t))), at);
      rep.check("x is idempotent iff x = 1 d_f",
                is_idempotent(x) == (s.is_idempotent(x.t) && a.equal(x.u, ones_[x.t])), at);
      rep.check("1 d_f is idempotent", is_idempotent(identity(s.target(x.t))), at);
      rep.check("gamma_x gamma_y = gamma_xy",
                detail::same_composite([&] { return compose(gamma(x), gamma(y), tol); },
                                       [&] { return gamma(mul(x, y)); }, tol),
                at + ", y=" + label(y));

      Element n = sample_below(s.source(x.t), rng);
      Element l = sample_below(s.target(n.t), rng);
      rep.check("gamma_n = Ad tau_n", twistcross::equal(gamma(n), Ad(a, tau(n), act_.ideals[n.t]), tol), "n=" + label(n));
      rep.check("gamma_s(tau_n) = tau_sns*", a.equal(gamma(x).apply(tau(n), tol), tau(mul(mul(x, n), xs))),
                at + ", n=" + label(n));
      rep.check("tau_n tau_l = tau_nl", a.equal(a.mul(tau(n), tau(l)), tau(mul(n, l))),
                "n=" + label(n) + ", l=" + label(l));
    }
    return rep;
  }

  // Closure of {1 d_t} under product and star, deduplicated up to the
  // algebra's tolerance. Throws LimitError past `cap` elements.
  Generated<Element> enumerate(std::size_t cap = 1024) const {
    std::vector<Element> elems;
    auto find = [&](Element const& x) -> std::optional<Elem> {
      for (Elem k = 0; k < elems.size(); ++k) {
        if (equal(elems[k], x)) {
          return k;
        }
      }
      return std::nullopt;
    };
    auto add = [&](Element const& x) {
      if (find(x)) {
        return;
      }
      if (elems.size() >= cap) {
        throw LimitError("delta semigroup exceeds cap " + std::to_string(cap), elems.size());
      }
      elems.push_back(x);
    };
    for (Elem t = 0; t < act_.semigroup.size(); ++t) {
      add(identity(t));
    }
    for (std::size_t done = 0; done < elems.size(); ++done) {
      add(star(elems[done]));
      for (std::size_t k = 0; k <= done; ++k) {
        add(mul(elems[done], elems[k]));
        add(mul(elems[k], elems[done]));
      }
    }
    std::size_t const              n = elems.size();
    std::vector<std::vector<Elem>> product(n, std::vector<Elem>(n));
    std::vector<Elem>              st(n);
    std::vector<std::string>       labels;
    for (Elem x = 0; x < n; ++x) {
      st[x] = *find(star(elems[x]));
      for (Elem y = 0; y < n; ++y) {
        product[x][y] = *find(mul(elems[x], elems[y]));
      }
      labels.push_back(label(elems[x]));
    }
    Generated<Element> out{FiniteInverseSemigroup(product, std::move(st)), std::move(elems)};
    out.semigroup.set_labels(std::move(labels));
    return out;
  }

 private:
  BusbySmithAction<Scalar>                     act_;
  std::vector<Vector<Scalar>>                  ones_;
  std::vector<PartialStarAutomorphism<Scalar>> beta_inv_;
};

// Green action of (S0, N0) for S0 the enumerated subsemigroup generated by
// the 1 d_t and N0 its elements over idempotents, together with the section
// c([u d_t]) = 1 d_t and phi(t) = [1 d_t].
template <typename Scalar>
struct BusbyGreen {
  DeltaSemigroup<Scalar>            delta;
  std::vector<DeltaElement<Scalar>> elements;
  GreenAction<Scalar>               green;
  Congruence                        congruence;
  CrossSection                      section;
  std::vector<Elem>                 phi;
};

template <typename Scalar>
BusbyGreen<Scalar> busby_to_green(BusbySmithAction<Scalar> const& act, std::size_t cap = 1024) {
  DeltaSemigroup<Scalar> delta(act);
  auto                   gen = delta.enumerate(cap);
  auto const&            s0  = gen.semigroup;
  Subset                 normal;
  for (Elem x = 0; x < s0.size(); ++x) {
    if (act.semigroup.is_idempotent(gen.elements[x].t)) {
      normal.push_back(x);
    }
  }
  GreenAction<Scalar> green{act.algebra, s0, normal, {}, {}, {}};
  for (Elem x = 0; x < s0.size(); ++x) {
    green.ideals.push_back(act.ideals[gen.elements[x].t]);
    green.gamma.push_back(delta.gamma(gen.elements[x]));
  }
  for (Elem x : normal) {
    green.tau.push_back(gen.elements[x].u);
  }
  Congruence cong = congruence_from_normal_clifford(s0, normal);

  std::vector<Elem> unit_of(act.semigroup.size());
  for (Elem t = 0; t < act.semigroup.size(); ++t) {
    for (Elem x = 0; x < s0.size(); ++x) {
      if (delta.equal(gen.elements[x], delta.identity(t))) {
        unit_of[t] = x;
      }
    }
  }
  CrossSection      section{std::vector<Elem>(cong.class_count())};
  std::vector<Elem> phi(act.semigroup.size());
  for (Elem t = 0; t < act.semigroup.size(); ++t) {
    section.image[cong.class_of(unit_of[t])] = unit_of[t];
    phi[t]                                   = cong.class_of(unit_of[t]);
  }
  return {std::move(delta), std::move(gen.elements), std::move(green), std::move(cong), std::move(section),
          std::move(phi)};
}

// E_p = D_g1 ... D_gm D_s, beta_p the restriction of alpha_s to E_p*, and
// w_p,q = 1_{E_pq} u_s,t for p = (P, s), q = (Q, t).
template <typename Scalar>
BusbySmithAction<Scalar> partial_to_exel(TwistedPartialAction<Scalar> const& tpa, ExelSemigroup const& sg) {
  if (!(sg.carrier->semigroup() == tpa.group->semigroup())) {
    throw InputError("partial_to_exel: S(G) is built over a different group");
  }
  auto const&  a   = tpa.algebra;
  double const tol = a.tolerance();
  std::size_t  n   = sg.elements.size();

  BusbySmithAction<Scalar> out{a, sg.semigroup, {}, {}, {}};
  for (auto const& p : sg.elements) {
    BasisIdeal e = BasisIdeal::full(a.dim());
    for (Elem g : p.brackets()) {
      e = intersect(e, tpa.ideals[g]);
    }
    out.ideals.push_back(std::move(e));
  }
  for (Elem x = 0; x < n; ++x) {
    out.beta.push_back(detail::restrict_map(tpa.alpha[sg.elements[x].s], out.ideals[sg.semigroup.star(x)],
                                            out.ideals[x], tol));
  }
  auto const ones = detail::ideal_units(a, out.ideals);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      out.w.push_back(a.mul(ones[sg.semigroup.mul(x, y)], tpa.cocycle(sg.elements[x].s, sg.elements[y].s)));
    }
  }
  return out;
}

// alpha_s = beta_[s], u_s,t = w_[s],[t]. Throws InputError unless the action
// is over S(G).
template <typename Scalar>
TwistedPartialAction<Scalar> exel_to_partial(BusbySmithAction<Scalar> const& act, ExelSemigroup const& sg) {
  if (!(act.semigroup == sg.semigroup) || !is_exel_semigroup(sg)) {
    throw InputError("exel_to_partial: the action is not over S(G)");
  }
  auto const&                  g = *sg.carrier;
  std::vector<Elem>            bracket(g.order());
  TwistedPartialAction<Scalar> out{act.algebra, sg.carrier, {}, {}, {}};
  for (Elem x = 0; x < g.order(); ++x) {
    bracket[x] = sg.index_of(embed(sg.carrier, x));
    out.ideals.push_back(act.ideals[bracket[x]]);
    out.alpha.push_back(act.beta[bracket[x]]);
  }
  for (Elem r = 0; r < g.order(); ++r) {
    for (Elem s = 0; s < g.order(); ++s) {
      out.u.push_back(act.cocycle(bracket[r], bracket[s]));
    }
  }
  return out;
}

// A point (h, layer) of G x {0, ..., L-1}; G acts on the first coordinate.
struct OrbitPoint {
  Elem        element = 0;
  std::size_t layer   = 0;

  friend bool operator==(OrbitPoint const&, OrbitPoint const&) = default;
};

// Restriction of the translation action of G on G x layers to the subset
// `points`, on the algebra of functions X -> M_block: D_g holds the blocks
// over X n gX and alpha_g moves the block over y to the one over gy. The
// cocycle is trivial.
template <typename Scalar>
TwistedPartialAction<Scalar> restricted_partial_action(std::shared_ptr<Group const> group,
                                                       std::vector<OrbitPoint> const& points,
                                                       std::size_t                    block) {
  if (points.empty() || block == 0) {
    throw InputError("restricted_partial_action: empty point set or block");
  }
  auto const& g = *group;
  auto locate   = [&](OrbitPoint p) -> std::optional<std::size_t> {
    auto it = std::find(points.begin(), points.end(), p);
    return it == points.end() ? std::nullopt : std::optional<std::size_t>(it - points.begin());
  };
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (points[k].element >= g.order() || locate(points[k]) != k) {
      throw InputError("restricted_partial_action: invalid or repeated point");
    }
  }
  std::size_t const            sq = block * block;
  TwistedPartialAction<Scalar> out{from_multimatrix<Scalar>(std::vector<std::size_t>(points.size(), block)), group,
                                   {}, {}, {}};
  Index const                  dim = out.algebra.dim();
  auto block_indices = [&](std::vector<std::size_t> const& blocks) {
    std::vector<Index> idx;
    for (std::size_t b : blocks) {
      for (std::size_t k = 0; k < sq; ++k) {
        idx.push_back(static_cast<Index>(b * sq + k));
      }
    }
    return make_ideal(std::move(idx));
  };
  for (Elem x = 0; x < g.order(); ++x) {
    std::vector<std::size_t> in;
    for (std::size_t k = 0; k < points.size(); ++k) {
      if (locate({g.mul(g.inverse(x), points[k].element), points[k].layer})) {
        in.push_back(k);
      }
    }
    out.ideals.push_back(block_indices(in));
  }
  for (Elem x = 0; x < g.order(); ++x) {
    auto const&    dom = out.ideals[g.inverse(x)];
    auto const&    ran = out.ideals[x];
    Matrix<Scalar> m   = Matrix<Scalar>::Zero(ran.size(), dom.size());
    for (Index k = 0; k < dom.size(); ++k) {
      Index       i      = dom.indices[static_cast<std::size_t>(k)];
      std::size_t b      = static_cast<std::size_t>(i) / sq;
      std::size_t target = *locate({g.mul(x, points[b].element), points[b].layer});
      Index       j      = static_cast<Index>(target * sq + static_cast<std::size_t>(i) % sq);
      auto        pos    = std::lower_bound(ran.indices.begin(), ran.indices.end(), j);
      m(pos - ran.indices.begin(), k) = Scalar(1);
    }
    out.alpha.push_back({dom, ran, m, dim});
  }
  for (Elem r = 0; r < g.order(); ++r) {
    for (Elem s = 0; s < g.order(); ++s) {
      out.u.push_back(ideal_identity(out.algebra, intersect(out.ideals[r], out.ideals[g.mul(r, s)])));
    }
  }
  return out;
}

// (Ad V_g o alpha_g, V_r alpha_r(1 V_s) u_r,s V*_rs) for unitaries V_g of D_g
// with V_e = 1.
template <typename Scalar>
TwistedPartialAction<Scalar> perturb(TwistedPartialAction<Scalar> const& tpa, std::vector<Vector<Scalar>> const& v) {
  auto const&  a   = tpa.algebra;
  auto const&  g   = *tpa.group;
  double const tol = a.tolerance();
  if (v.size() != g.order()) {
    throw InputError("perturb: one unitary per group element expected");
  }
  auto const                   ones = detail::ideal_units(a, tpa.ideals);
  TwistedPartialAction<Scalar> out{a, tpa.group, tpa.ideals, {}, {}};
  for (Elem x = 0; x < g.order(); ++x) {
    out.alpha.push_back(compose(Ad(a, v[x], tpa.ideals[x]), tpa.alpha[x], tol));
  }
  for (Elem r = 0; r < g.order(); ++r) {
    for (Elem s = 0; s < g.order(); ++s) {
      auto mid = tpa.alpha[r].apply(a.mul(ones[g.inverse(r)], v[s]), tol);
      out.u.push_back(a.mul(a.mul(v[r], mid), a.mul(tpa.cocycle(r, s), a.star(v[g.mul(r, s)]))));
    }
  }
  return out;
}

// Restricted action on a random nonempty subset of G x {0, 1}, perturbed by
// random unitaries V_g (V_e = 1) so the cocycle is not trivial.
template <typename Scalar>
TwistedPartialAction<Scalar> random_partial_action(std::shared_ptr<Group const> group,
                                                   std::size_t                  block,
                                                   std::mt19937_64&             rng) {
  std::vector<OrbitPoint>     points;
  std::bernoulli_distribution keep(0.6);
  while (points.empty()) {
    for (std::size_t layer = 0; layer < 2; ++layer) {
      for (Elem h = 0; h < group->order(); ++h) {
        if (keep(rng)) {
          points.push_back({h, layer});
        }
      }
    }
  }
  auto                        base = restricted_partial_action<Scalar>(group, points, block);
  std::vector<Vector<Scalar>> v;
  for (Elem x = 0; x < group->order(); ++x) {
    v.push_back(x == group->identity() ? ideal_identity(base.algebra, base.ideals[x])
                                       : random_unitary(base.algebra, base.ideals[x], rng));
  }
  return perturb(base, v);
}

}  // namespace twistcross

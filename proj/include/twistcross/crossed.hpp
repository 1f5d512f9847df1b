#pragma once

// Finite-dimensional crossed products. The convolution algebra L has basis
// b_i d_s for s in S and b_i in the basis of E_s, ordered by (s, i); the
// crossed product is L modulo the star-ideal generated by the order
// relations, plus the twist relations for Green actions.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "twistcross/constructions.hpp"

namespace twistcross {

template <typename Scalar>
struct ConvolutionAlgebra {
  FdStarAlgebra<Scalar>               algebra;
  std::vector<std::pair<Elem, Index>> cells;    // (s, basis index of A) per basis vector
  std::vector<Index>                  offsets;  // first basis vector over s; back() = dim
  std::vector<BasisIdeal>             ideals;
  Index                               coefficient_dim = 0;
  Report                              report;

  Index dim() const { return algebra.dim(); }

  Index cell(Elem s, Index i) const {
    auto const& idx = ideals[s].indices;
    auto        it  = std::lower_bound(idx.begin(), idx.end(), i);
    if (it == idx.end() || *it != i) {
      throw InputError("coefficient outside E_s");
    }
    return offsets[s] + static_cast<Index>(it - idx.begin());
  }

  // a d_s as a vector of L; a must lie in E_s.
  Vector<Scalar> delta(Elem s, Vector<Scalar> const& a) const {
    Vector<Scalar> out = Vector<Scalar>::Zero(dim());
    double         tol = ScalarTraits<Scalar>::exact ? 0.0 : algebra.tolerance() * std::max(1.0, max_magnitude(a));
    for (Index i = 0; i < a.size(); ++i) {
      if (!ScalarTraits<Scalar>::is_zero(a(i), tol)) {
        out(cell(s, i)) = a(i);
      }
    }
    return out;
  }

  // Coefficient of d_s in x, as an element of A.
  Vector<Scalar> coefficient(Vector<Scalar> const& x, Elem s) const {
    Vector<Scalar> out = Vector<Scalar>::Zero(coefficient_dim);
    for (Index k = offsets[s]; k < offsets[s + 1]; ++k) {
      out(cells[static_cast<std::size_t>(k)].second) = x(k);
    }
    return out;
  }
};

template <typename Scalar>
struct CrossedProduct {
  ConvolutionAlgebra<Scalar> convolution;
  Matrix<Scalar>             relations;  // columns generate the relation ideal
  AlgebraQuotient<Scalar>    quotient;
  CstarDimension             cstar;
  std::string                provenance;

  Index dim() const { return quotient.algebra.dim(); }

  // Image of a vector of L in the quotient.
  Vector<Scalar> project(Vector<Scalar> const& x) const { return quotient.projection * x; }
};

namespace detail {

inline std::string failure_text(Report const& rep) {
  for (auto const& cl : rep.clauses()) {
    if (!cl.passed) {
      return cl.name + " fails at " + cl.witness;
    }
  }
  return "no failing clause";
}

template <typename Scalar>
Matrix<Scalar> columns(std::vector<Vector<Scalar>> const& cols, Index rows) {
  Matrix<Scalar> out(rows, static_cast<Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) {
    out.col(static_cast<Index>(k)) = cols[k];
  }
  return out;
}

// The subsemigroup on `subset` (sorted), indexed by position in `subset`.
inline FiniteInverseSemigroup subsemigroup(FiniteInverseSemigroup const& s, Subset const& subset) {
  std::size_t const              n = subset.size();
  std::vector<std::vector<Elem>> product(n, std::vector<Elem>(n));
  std::vector<Elem>              star(n);
  std::vector<std::string>       labels;
  for (std::size_t i = 0; i < n; ++i) {
    star[i] = position_in(subset, s.star(subset[i]));
    labels.push_back(s.label(subset[i]));
    for (std::size_t j = 0; j < n; ++j) {
      product[i][j] = position_in(subset, s.mul(subset[i], subset[j]));
    }
  }
  FiniteInverseSemigroup out(product, std::move(star));
  out.set_labels(std::move(labels));
  return out;
}

template <typename Scalar>
BusbySmithAction<Scalar> untwisted(GreenAction<Scalar> const& green) {
  auto const&              s = green.semigroup;
  BusbySmithAction<Scalar> out{green.algebra, s, green.ideals, green.gamma, {}};
  auto const               ones = ideal_units(green.algebra, green.ideals);
  for (Elem x = 0; x < s.size(); ++x) {
    for (Elem y = 0; y < s.size(); ++y) {
      out.w.push_back(ones[s.mul(x, y)]);
    }
  }
  return out;
}

template <typename Scalar>
GreenAction<Scalar> restrict_green(GreenAction<Scalar> const& green, Subset const& k) {
  GreenAction<Scalar> out{green.algebra, subsemigroup(green.semigroup, k), {}, {}, {}, green.tau};
  for (Elem n : green.normal) {
    out.normal.push_back(position_in(k, n));
  }
  for (Elem x : k) {
    out.ideals.push_back(green.ideals[x]);
    out.gamma.push_back(green.gamma[x]);
  }
  return out;
}

template <typename Scalar>
BusbySmithAction<Scalar> restrict_busby(BusbySmithAction<Scalar> const& act, Subset const& l) {
  BusbySmithAction<Scalar> out{act.algebra, subsemigroup(act.semigroup, l), {}, {}, {}};
  for (Elem x : l) {
    out.ideals.push_back(act.ideals[x]);
    out.beta.push_back(act.beta[x]);
  }
  for (Elem x : l) {
    for (Elem y : l) {
      out.w.push_back(act.cocycle(x, y));
    }
  }
  return out;
}

// Basis order of L for a Green action listing the cells over s by the
// number of idempotents below ss*, a linear extension of the order on the
// ranges.
template <typename Scalar>
std::vector<Index> range_order(GreenAction<Scalar> const& green) {
  auto const&              s = green.semigroup;
  auto const               es = s.idempotents();
  std::vector<std::size_t> below(s.size(), 0);
  std::vector<Elem>        owner;
  for (Elem x = 0; x < s.size(); ++x) {
    for (Elem f : es) {
      below[x] += s.leq(f, s.target(x)) ? 1 : 0;
    }
    owner.insert(owner.end(), static_cast<std::size_t>(green.ideals[x].size()), x);
  }
  std::vector<Index> order(owner.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    order[k] = static_cast<Index>(k);
  }
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    return below[owner[static_cast<std::size_t>(a)]] < below[owner[static_cast<std::size_t>(b)]];
  });
  return order;
}

}  // namespace detail

// Convolution algebra of a verified Busby-Smith action with
//   (a d_s)(b d_t) = beta_s(beta_s^-1(a) b) w_s,t d_st,
//   (a d_s)* = beta_s^-1(a*) w*_s*,s d_s*.
// Associativity and the star laws are re-verified on basis triples and kept
// in the report. Throws InputError when the action fails verification.
template <typename Scalar>
ConvolutionAlgebra<Scalar> build_L(BusbySmithAction<Scalar> const& act) {
  Report const verdict = verify_busby_smith(act);
  if (!verdict.ok()) {
    throw InputError("crossed product refused, action fails verification: " + detail::failure_text(verdict));
  }
  auto const&  a   = act.algebra;
  auto const&  s   = act.semigroup;
  double const tol = a.tolerance();

  ConvolutionAlgebra<Scalar> out;
  out.ideals          = act.ideals;
  out.coefficient_dim = a.dim();
  std::vector<std::string> labels;
  for (Elem x = 0; x < s.size(); ++x) {
    out.offsets.push_back(static_cast<Index>(out.cells.size()));
    for (Index i : act.ideals[x].indices) {
      out.cells.emplace_back(x, i);
      labels.push_back(a.label(i) + "@" + s.label(x));
    }
  }
  out.offsets.push_back(static_cast<Index>(out.cells.size()));

  std::vector<PartialStarAutomorphism<Scalar>> beta_inv;
  for (auto const& b : act.beta) {
    beta_inv.push_back(inverse(b, tol));
  }
  auto sparse_delta = [&](Elem x, Vector<Scalar> const& v, std::string const& what) {
    if (!in_span(a, v, act.ideals[x])) {
      throw ConstructionError("product lands in E_st", what + " leaves " + to_string(act.ideals[x]));
    }
    Sparse<Scalar> terms;
    for (auto const& t : to_sparse<Scalar>(v, tol)) {
      terms.push_back({out.cell(x, t.index), t.coef});
    }
    return terms;
  };

  std::size_t const           n = out.cells.size();
  std::vector<Sparse<Scalar>> prod(n * n), star(n);
  for (std::size_t p = 0; p < n; ++p) {
    auto const [x, i] = out.cells[p];
    auto const bi     = a.basis(i);
    auto const back   = beta_inv[x].apply(bi, tol);
    star[p] = sparse_delta(s.star(x), a.mul(beta_inv[x].apply(a.star(bi), tol), a.star(act.cocycle(s.star(x), x))),
                           labels[p] + "*");
    for (std::size_t q = 0; q < n; ++q) {
      auto const [y, j] = out.cells[q];
      auto const inner  = a.mul(back, a.basis(j));
      prod[p * n + q]   = sparse_delta(s.mul(x, y), a.mul(act.beta[x].apply(inner, tol), act.cocycle(x, y)),
                                       labels[p] + " " + labels[q]);
    }
  }
  out.algebra = FdStarAlgebra<Scalar>(std::move(labels), std::move(prod), std::move(star), tol);
  out.report  = verify_star_algebra(out.algebra);
  return out;
}

// Generators a d_s - a d_t for s < t and a in the basis of E_s.
template <typename Scalar>
Matrix<Scalar> order_relations(BusbySmithAction<Scalar> const& act, ConvolutionAlgebra<Scalar> const& conv) {
  auto const&                 s = act.semigroup;
  std::vector<Vector<Scalar>> gens;
  for (Elem x = 0; x < s.size(); ++x) {
    for (Elem y = 0; y < s.size(); ++y) {
      if (x == y || !s.leq(x, y)) {
        continue;
      }
      for (Index i : act.ideals[x].indices) {
        Vector<Scalar> g = Vector<Scalar>::Zero(conv.dim());
        g(conv.cell(x, i)) += Scalar(1);
        g(conv.cell(y, i)) -= Scalar(1);
        gens.push_back(std::move(g));
      }
    }
  }
  return detail::columns(gens, conv.dim());
}

template <typename Scalar>
CrossedProduct<Scalar> make_crossed_product(ConvolutionAlgebra<Scalar> conv,
                                            Matrix<Scalar>             relations,
                                            std::string                provenance,
                                            std::vector<Index>         order = {}) {
  auto quot  = quotient_algebra(conv.algebra, relations, std::move(order));
  auto cstar = cstar_dimension(quot.algebra);
  return {std::move(conv), std::move(relations), std::move(quot), cstar, std::move(provenance)};
}

// L modulo the order relations.
template <typename Scalar>
CrossedProduct<Scalar> quotient_crossed_product(BusbySmithAction<Scalar> const& act) {
  auto conv = build_L(act);
  auto rel  = order_relations(act, conv);
  return make_crossed_product(std::move(conv), std::move(rel), "Busby-Smith action, order relations");
}

// Generators a tau_n d_e - a d_n for n in N and a in the basis of E_n.
template <typename Scalar>
Matrix<Scalar> twist_relations(GreenAction<Scalar> const& green, ConvolutionAlgebra<Scalar> const& conv) {
  auto const&                 a = green.algebra;
  Elem const                  e = *green.semigroup.unit();
  std::vector<Vector<Scalar>> gens;
  for (std::size_t k = 0; k < green.normal.size(); ++k) {
    Elem const n = green.normal[k];
    for (Index i : green.ideals[n].indices) {
      gens.push_back(conv.delta(e, a.mul(a.basis(i), green.tau[k])) - conv.delta(n, a.basis(i)));
    }
  }
  return detail::columns(gens, conv.dim());
}

// Untwisted L for gamma modulo the order and twist relations. Throws
// InputError when the Green action fails verification. `order` fixes the
// scan order of the quotient basis.
template <typename Scalar>
CrossedProduct<Scalar> green_crossed_product(GreenAction<Scalar> const& green, std::vector<Index> order = {}) {
  Report const verdict = verify_green(green);
  if (!verdict.ok()) {
    throw InputError("crossed product refused, Green action fails verification: " + detail::failure_text(verdict));
  }
  auto const     plain = detail::untwisted(green);
  auto           conv  = build_L(plain);
  Matrix<Scalar> ord   = order_relations(plain, conv);
  Matrix<Scalar> tw    = twist_relations(green, conv);
  Matrix<Scalar> rel(conv.dim(), ord.cols() + tw.cols());
  rel << ord, tw;
  return make_crossed_product(std::move(conv), std::move(rel), "Green action, order and twist relations",
                              std::move(order));
}

// ---------------------------------------------------------------------------
// Representations on C^d with the inner product <x, y> = y^H G x.

template <typename Scalar>
struct AlgebraRepresentation {
  Matrix<Scalar>              gram;
  std::vector<Matrix<Scalar>> image;  // one matrix per basis vector

  Index space_dim() const { return gram.rows(); }

  Matrix<Scalar> of(Vector<Scalar> const& x) const {
    Matrix<Scalar> out = Matrix<Scalar>::Zero(space_dim(), space_dim());
    for (Index i = 0; i < x.size(); ++i) {
      if (!ScalarTraits<Scalar>::is_zero(x(i), 0.0)) {
        out += x(i) * image[static_cast<std::size_t>(i)];
      }
    }
    return out;
  }
};

template <typename Scalar>
struct CovariantRepresentation {
  Matrix<Scalar>              gram;
  std::vector<Matrix<Scalar>> pi;  // images of the basis of A
  std::vector<Matrix<Scalar>> v;   // one partial isometry per s
  std::vector<std::string>    notes;

  Index space_dim() const { return gram.rows(); }

  Matrix<Scalar> pi_of(Vector<Scalar> const& a) const {
    Matrix<Scalar> out = Matrix<Scalar>::Zero(space_dim(), space_dim());
    for (Index i = 0; i < a.size(); ++i) {
      if (!ScalarTraits<Scalar>::is_zero(a(i), 0.0)) {
        out += a(i) * pi[static_cast<std::size_t>(i)];
      }
    }
    return out;
  }
};

namespace detail {

// Adjoint for the inner product with Gram matrix g: g^-1 x^H g.
template <typename Scalar>
Matrix<Scalar> hilbert_adjoint(Matrix<Scalar> const& g, Matrix<Scalar> const& g_inv, Matrix<Scalar> const& x) {
  return g_inv * Matrix<Scalar>(adjoint(x)) * g;
}

template <typename Scalar>
Matrix<Scalar> gram_inverse(Matrix<Scalar> const& g, double tol) {
  auto inv = inverse(g, tol);
  if (!inv) {
    throw ConstructionError("inner product is nondegenerate", "Gram matrix is singular");
  }
  return *inv;
}

// Column span of the horizontally stacked matrices.
template <typename Scalar>
Matrix<Scalar> stacked(std::vector<Matrix<Scalar>> const& ms, Index rows) {
  Index cols = 0;
  for (auto const& m : ms) {
    cols += m.cols();
  }
  Matrix<Scalar> out(rows, cols);
  Index          at = 0;
  for (auto const& m : ms) {
    out.middleCols(at, m.cols()) = m;
    at += m.cols();
  }
  return out;
}

template <typename Scalar>
bool same_matrix(Matrix<Scalar> const& x, Matrix<Scalar> const& y, double tol) {
  double scale = ScalarTraits<Scalar>::exact ? 0.0 : tol * std::max(1.0, std::max(max_magnitude(x), max_magnitude(y)));
  return approx_equal(x, y, scale);
}

// Restriction of every operator to the range of p, an idempotent commuting
// with all of them; the new Gram matrix is the restricted inner product.
template <typename Scalar>
AlgebraRepresentation<Scalar> compress(AlgebraRepresentation<Scalar> const& rep, Matrix<Scalar> const& p, double tol) {
  SpanBuilder<Scalar> span(p.rows(), tol);
  for (Index j = 0; j < p.cols(); ++j) {
    span.insert(p.col(j));
  }
  Matrix<Scalar> b     = span.basis();
  Matrix<Scalar> bh    = adjoint(b);
  Matrix<Scalar> g     = bh * rep.gram * b;
  Matrix<Scalar> left  = gram_inverse(g, tol) * bh * rep.gram;
  AlgebraRepresentation<Scalar> out{g, {}};
  for (auto const& m : rep.image) {
    out.image.push_back(left * m * b);
  }
  return out;
}

}  // namespace detail

// Left multiplication of an algebra on itself with the trace inner product
// (x, y) -> trace(L_{y* x}); a star representation whenever the trace form
// is positive definite.
template <typename Scalar>
AlgebraRepresentation<Scalar> left_regular(FdStarAlgebra<Scalar> const& a) {
  AlgebraRepresentation<Scalar> out{trace_gram(a), {}};
  detail::gram_inverse(out.gram, a.tolerance());
  for (Index i = 0; i < a.dim(); ++i) {
    out.image.push_back(a.left_matrix(a.basis(i)));
  }
  return out;
}

template <typename Scalar>
Report verify_representation(AlgebraRepresentation<Scalar> const& rep, FdStarAlgebra<Scalar> const& a) {
  Report       out("star representation");
  double const tol   = a.tolerance();
  auto const   g_inv = detail::gram_inverse(rep.gram, tol);
  for (Index i = 0; i < a.dim(); ++i) {
    auto const& pi = rep.image[static_cast<std::size_t>(i)];
    out.check("star-preserving", detail::same_matrix(rep.of(a.star(a.basis(i))), detail::hilbert_adjoint(rep.gram, g_inv, pi), tol),
              a.label(i));
    for (Index j = 0; j < a.dim(); ++j) {
      out.check("multiplicative",
                detail::same_matrix(rep.of(a.mul(a.basis(i), a.basis(j))), Matrix<Scalar>(pi * rep.image[static_cast<std::size_t>(j)]), tol),
                a.label(i) + " " + a.label(j));
    }
  }
  return out;
}

// pi(a) = Pi(a d_e) and v_s = Pi(1_{E_s} d_s) for a representation Pi of the
// crossed product. A degenerate Pi is first compressed to the range of
// Pi(1 d_e); the compression is noted.
template <typename Scalar>
CovariantRepresentation<Scalar> rep_from_algebra_rep(AlgebraRepresentation<Scalar> const& big,
                                                     BusbySmithAction<Scalar> const&      act,
                                                     CrossedProduct<Scalar> const&        cp) {
  auto const&  a   = act.algebra;
  double const tol = a.tolerance();
  Elem const   e   = *act.semigroup.unit();
  auto const   one = ideal_identity(a, BasisIdeal::full(a.dim()));

  CovariantRepresentation<Scalar> out;
  AlgebraRepresentation<Scalar>   rep = big;
  Matrix<Scalar> const            p   = rep.of(cp.project(cp.convolution.delta(e, one)));
  if (!detail::same_matrix(p, Matrix<Scalar>(Matrix<Scalar>::Identity(p.rows(), p.cols())), tol)) {
    rep = detail::compress(rep, p, tol);
    out.notes.push_back("degenerate representation compressed from dimension " + std::to_string(big.space_dim())
                        + " to " + std::to_string(rep.space_dim()));
  }
  out.gram = rep.gram;
  for (Index i = 0; i < a.dim(); ++i) {
    out.pi.push_back(rep.of(cp.project(cp.convolution.delta(e, a.basis(i)))));
  }
  auto const ones = detail::ideal_units(a, act.ideals);
  for (Elem s = 0; s < act.semigroup.size(); ++s) {
    out.v.push_back(rep.of(cp.project(cp.convolution.delta(s, ones[s]))));
  }
  return out;
}

// The defining conditions of a covariant representation and the derived
// identities for v.
template <typename Scalar>
Report verify_covariant(CovariantRepresentation<Scalar> const& rep, BusbySmithAction<Scalar> const& act) {
  Report       out("covariant representation");
  auto const&  a     = act.algebra;
  auto const&  s     = act.semigroup;
  double const tol   = a.tolerance();
  Index const  d     = rep.space_dim();
  auto const   g_inv = detail::gram_inverse(rep.gram, tol);
  auto adj = [&](Matrix<Scalar> const& x) { return detail::hilbert_adjoint(rep.gram, g_inv, x); };
  auto same = [&](Matrix<Scalar> const& x, Matrix<Scalar> const& y) { return detail::same_matrix(x, y, tol); };
  Matrix<Scalar> const id = Matrix<Scalar>::Identity(d, d);
  auto range_of = [&](BasisIdeal const& ideal) {
    std::vector<Matrix<Scalar>> ms;
    for (Index i : ideal.indices) {
      ms.push_back(rep.pi[static_cast<std::size_t>(i)]);
    }
    return detail::stacked(ms, d);
  };

  for (Index i = 0; i < a.dim(); ++i) {
    auto const& pi = rep.pi[static_cast<std::size_t>(i)];
    out.check("pi is star-preserving", same(rep.pi_of(a.star(a.basis(i))), adj(pi)), a.label(i));
    for (Index j = 0; j < a.dim(); ++j) {
      out.check("pi is multiplicative",
                same(rep.pi_of(a.mul(a.basis(i), a.basis(j))), Matrix<Scalar>(pi * rep.pi[static_cast<std::size_t>(j)])),
                a.label(i) + " " + a.label(j));
    }
  }
  out.check("pi is nondegenerate", same(rep.pi_of(ideal_identity(a, BasisIdeal::full(a.dim()))), id));

  for (Elem x = 0; x < s.size(); ++x) {
    auto const& vx = rep.v[x];
    for (Index i : act.ideals[s.star(x)].indices) {
      out.check("pi(beta_s(a)) = v_s pi(a) v_s*",
                same(rep.pi_of(act.beta[x].apply(a.basis(i), tol)), Matrix<Scalar>(vx * rep.pi[static_cast<std::size_t>(i)] * adj(vx))),
                "s=" + s.label(x) + ", a=" + a.label(i));
    }
    for (Elem y = 0; y < s.size(); ++y) {
      out.check("v_r v_s = pi(w_r,s) v_rs", same(Matrix<Scalar>(vx * rep.v[y]), Matrix<Scalar>(rep.pi_of(act.cocycle(x, y)) * rep.v[s.mul(x, y)])),
                "r=" + s.label(x) + ", s=" + s.label(y));
    }
    Matrix<Scalar> const vxa = adj(vx);
    out.check("v_s is a partial isometry", same(Matrix<Scalar>(vx * vxa * vx), vx), s.label(x));
    out.check("initial space of v_s is pi(E_s*)H",
              same_column_space<Scalar>(vxa * vx, range_of(act.ideals[s.star(x)]), tol), s.label(x));
    out.check("final space of v_s is pi(E_s)H", same_column_space<Scalar>(vx * vxa, range_of(act.ideals[x]), tol),
              s.label(x));

    Elem const xs = s.star(x);
    out.check("v_s* = pi(w_s*,s) adj(v_s)", same(rep.v[xs], Matrix<Scalar>(rep.pi_of(act.cocycle(xs, x)) * vxa)), s.label(x));
    out.check("adj(v_s) = v_s* pi(w*_s,s*)", same(vxa, Matrix<Scalar>(rep.v[xs] * rep.pi_of(a.star(act.cocycle(x, xs))))),
              s.label(x));
    out.check("adj(v_s) = pi(w*_s*,s) v_s*", same(vxa, Matrix<Scalar>(rep.pi_of(a.star(act.cocycle(xs, x))) * rep.v[xs])),
              s.label(x));
    if (s.is_idempotent(x)) {
      bool proj = same(vx, vxa) && same(Matrix<Scalar>(vx * vx), vx)
                  && same_column_space<Scalar>(vx, range_of(act.ideals[x]), tol);
      out.check("v_f is the orthogonal projection onto pi(E_f)H", proj, s.label(x));
    }
  }
  out.check("v_e = 1", same(rep.v[*s.unit()], id));
  return out;
}

// pi x v on L: a d_s -> pi(a) v_s.
template <typename Scalar>
Matrix<Scalar> integrated_form(CovariantRepresentation<Scalar> const& rep,
                               ConvolutionAlgebra<Scalar> const&      conv,
                               Vector<Scalar> const&                  x) {
  Matrix<Scalar> out = Matrix<Scalar>::Zero(rep.space_dim(), rep.space_dim());
  for (Index k = 0; k < conv.dim(); ++k) {
    if (!ScalarTraits<Scalar>::is_zero(x(k), 0.0)) {
      auto const [s, i] = conv.cells[static_cast<std::size_t>(k)];
      out += x(k) * rep.pi[static_cast<std::size_t>(i)] * rep.v[s];
    }
  }
  return out;
}

// pi x v is a star representation of L and agrees on every basis vector
// with Pi, compressed as in rep_from_algebra_rep.
template <typename Scalar>
Report verify_integrated_form(CovariantRepresentation<Scalar> const& rep,
                              AlgebraRepresentation<Scalar> const&   big,
                              BusbySmithAction<Scalar> const&        act,
                              CrossedProduct<Scalar> const&          cp) {
  Report       out("integrated form");
  auto const&  conv  = cp.convolution;
  auto const&  l     = conv.algebra;
  double const tol   = l.tolerance();
  auto const   g_inv = detail::gram_inverse(rep.gram, tol);
  auto same = [&](Matrix<Scalar> const& x, Matrix<Scalar> const& y) { return detail::same_matrix(x, y, tol); };

  AlgebraRepresentation<Scalar> pi_big = big;
  auto const one = ideal_identity(act.algebra, BasisIdeal::full(act.algebra.dim()));
  Matrix<Scalar> const p = big.of(cp.project(conv.delta(*act.semigroup.unit(), one)));
  if (!same(p, Matrix<Scalar>(Matrix<Scalar>::Identity(p.rows(), p.cols())))) {
    pi_big = detail::compress(big, p, tol);
  }
  std::vector<Matrix<Scalar>> images;
  for (Index k = 0; k < l.dim(); ++k) {
    images.push_back(integrated_form(rep, conv, l.basis(k)));
  }
  for (Index k = 0; k < l.dim(); ++k) {
    auto const& ik = images[static_cast<std::size_t>(k)];
    out.check("pi x v is star-preserving",
              same(integrated_form(rep, conv, l.star(l.basis(k))), detail::hilbert_adjoint(rep.gram, g_inv, ik)),
              l.label(k));
    for (Index m = 0; m < l.dim(); ++m) {
      out.check("pi x v is multiplicative",
                same(integrated_form(rep, conv, l.mul(l.basis(k), l.basis(m))),
                     Matrix<Scalar>(ik * images[static_cast<std::size_t>(m)])),
                l.label(k) + " " + l.label(m));
    }
    out.check("pi x v reproduces the representation", same(ik, pi_big.of(cp.project(l.basis(k)))), l.label(k));
  }
  return out;
}

// Checks that `map` (target.dim() x dim L) is a star homomorphism on basis
// pairs of L, is onto, and has kernel equal to the relation ideal; together
// these certify that the crossed product is isomorphic to the target.
template <typename Scalar>
Report verify_explicit_iso(Matrix<Scalar> const&        map,
                           CrossedProduct<Scalar> const& source,
                           FdStarAlgebra<Scalar> const&  target) {
  Report      out("explicit isomorphism");
  auto const& l   = source.convolution.algebra;
  double      tol = l.tolerance();
  if (map.rows() != target.dim() || map.cols() != l.dim()) {
    throw InputError("explicit isomorphism: map has the wrong shape");
  }
  for (Index k = 0; k < l.dim(); ++k) {
    Vector<Scalar> mk = map.col(k);
    out.check("star-preserving", target.equal(map * l.star(l.basis(k)), target.star(mk)), l.label(k));
    for (Index m = 0; m < l.dim(); ++m) {
      out.check("multiplicative", target.equal(map * l.mul(l.basis(k), l.basis(m)), target.mul(mk, map.col(m))),
                l.label(k) + " " + l.label(m));
    }
  }
  Index const r = rank<Scalar>(map, tol);
  out.check("surjective", r == target.dim(), "rank " + std::to_string(r) + " of " + std::to_string(target.dim()));
  Matrix<Scalar> kernel = nullspace<Scalar>(map, tol);
  out.check("kernel equals the relation ideal", same_column_space<Scalar>(kernel, source.quotient.ideal, tol),
            "kernel dimension " + std::to_string(kernel.cols()) + ", relation ideal dimension "
                + std::to_string(source.quotient.ideal.cols()));
  return out;
}

// a d_s -> a c(s) in the semigroup algebra of T, for a crossed product whose
// coefficient algebra is C N with basis ordered as `n`.
template <typename Scalar>
Matrix<Scalar> semigroup_algebra_map(ConvolutionAlgebra<Scalar> const& conv,
                                     FiniteInverseSemigroup const&     t,
                                     Subset const&                     n,
                                     std::vector<Elem> const&          c) {
  Matrix<Scalar> out = Matrix<Scalar>::Zero(static_cast<Index>(t.size()), conv.dim());
  for (Index k = 0; k < conv.dim(); ++k) {
    auto const [s, i] = conv.cells[static_cast<std::size_t>(k)];
    out(static_cast<Index>(t.mul(n[static_cast<std::size_t>(i)], c[s])), k) = Scalar(1);
  }
  return out;
}

// a d_s -> image of a d_{c(s)} in `target`, for two crossed products over
// the same coefficient algebra.
template <typename Scalar>
Matrix<Scalar> relabel_map(ConvolutionAlgebra<Scalar> const& source,
                           CrossedProduct<Scalar> const&     target,
                           std::vector<Elem> const&          c) {
  Matrix<Scalar> out(target.dim(), source.dim());
  auto const&    a_dim = source.coefficient_dim;
  for (Index k = 0; k < source.dim(); ++k) {
    auto const [s, i] = source.cells[static_cast<std::size_t>(k)];
    Vector<Scalar> a  = Vector<Scalar>::Zero(a_dim);
    a(i)              = Scalar(1);
    out.col(k)        = target.project(target.convolution.delta(c[s], a));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Decompositions.

struct Decomposition {
  Report      report;
  Index       direct   = 0;
  Index       iterated = 0;
  bool        iso      = false;
  bool        refused  = false;
  std::string diagnosis;

  bool ok() const { return !refused && report.ok() && direct == iterated && iso; }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["dims"]      = {{"direct", direct}, {"iterated", iterated}, {"iso", iso}};
    j["refused"]   = refused;
    j["diagnosis"] = diagnosis;
    j["report"]    = report.to_json();
    return j;
  }
};

// The iterated Green data of (S, K) on B = A x_{gamma,tau} K:
//   E~_s = span{a d_k : k in K, kk* <= ss*},
//   gamma~_s(a d_k) = gamma_s(a) d_sks*,  tau~_k = 1_{E_k} d_k.
template <typename Scalar>
struct IteratedGreen {
  GreenAction<Scalar>    restricted;
  CrossedProduct<Scalar> inner;
  GreenAction<Scalar>    action;
};

template <typename Scalar>
IteratedGreen<Scalar> iterated_green(GreenAction<Scalar> const& green, Subset const& k) {
  auto const&  s   = green.semigroup;
  auto const&  a   = green.algebra;
  double const tol = a.tolerance();
  for (Elem n : green.normal) {
    if (!contains(k, n)) {
      throw InputError("K does not contain N");
    }
  }
  if (!is_normal_clifford(s, k).ok()) {
    throw InputError("K is not a normal Clifford subsemigroup");
  }
  auto restricted = detail::restrict_green(green, k);
  auto inner      = green_crossed_product(restricted, detail::range_order(restricted));
  auto const& conv      = inner.convolution;
  auto const& b         = inner.quotient.algebra;
  Index const q         = b.dim();

  // Generators of E~_f, as quotient coordinates with their source cells.
  auto generators = [&](Elem f) {
    std::vector<std::pair<Elem, Index>> cells;
    for (std::size_t p = 0; p < k.size(); ++p) {
      if (s.leq(s.target(k[p]), f)) {
        for (Index i : green.ideals[k[p]].indices) {
          cells.emplace_back(static_cast<Elem>(p), i);
        }
      }
    }
    Matrix<Scalar> g(q, static_cast<Index>(cells.size()));
    for (std::size_t c = 0; c < cells.size(); ++c) {
      g.col(static_cast<Index>(c)) = inner.project(conv.delta(cells[c].first, a.basis(cells[c].second)));
    }
    return std::make_pair(cells, g);
  };
  auto aligned = [&](Elem f) {
    auto const [cells, g] = generators(f);
    SpanBuilder<Scalar> span(q, tol);
    for (Index c = 0; c < g.cols(); ++c) {
      span.insert(g.col(c));
    }
    std::vector<Index> idx;
    for (Index j = 0; j < q; ++j) {
      Vector<Scalar> ej = Vector<Scalar>::Zero(q);
      ej(j)             = Scalar(1);
      if (span.contains(ej)) {
        idx.push_back(j);
      }
    }
    if (static_cast<Index>(idx.size()) != span.rank()) {
      throw ConstructionError("basis-aligned", "E~ over " + s.label(f) + " is not spanned by quotient basis vectors");
    }
    return BasisIdeal{idx};
  };

  GreenAction<Scalar> it{b, s, k, {}, {}, {}};
  std::vector<BasisIdeal> by_idempotent(s.size());
  for (Elem f : s.idempotents()) {
    by_idempotent[f] = aligned(f);
  }
  for (Elem x = 0; x < s.size(); ++x) {
    it.ideals.push_back(by_idempotent[s.target(x)]);
  }
  for (Elem x = 0; x < s.size(); ++x) {
    auto const [cells, g] = generators(s.source(x));
    Matrix<Scalar> h(q, static_cast<Index>(cells.size()));
    for (std::size_t c = 0; c < cells.size(); ++c) {
      Elem const kk  = k[cells[c].first];
      Elem const img = detail::position_in(k, s.mul(x, kk, s.star(x)));
      h.col(static_cast<Index>(c)) = inner.project(conv.delta(img, green.gamma[x].apply(a.basis(cells[c].second), tol)));
    }
    if (!is_zero(Matrix<Scalar>(h * nullspace<Scalar>(g, tol)), ScalarTraits<Scalar>::exact ? 0.0 : tol * std::max(1.0, max_magnitude(h)))) {
      throw ConstructionError("iterated action is well defined", "gamma~ over " + s.label(x));
    }
    auto const& dom = it.ideals[s.star(x)];
    auto const& ran = it.ideals[x];
    Matrix<Scalar> m(ran.size(), dom.size());
    for (Index c = 0; c < dom.size(); ++c) {
      Vector<Scalar> ej = Vector<Scalar>::Zero(q);
      ej(dom.indices[static_cast<std::size_t>(c)]) = Scalar(1);
      auto coeffs = solve<Scalar>(g, ej, tol);
      if (!coeffs) {
        throw ConstructionError("basis-aligned", "E~ over " + s.label(s.source(x)));
      }
      Vector<Scalar> image = h * *coeffs;
      if (!in_span(b, image, ran)) {
        throw ConstructionError("gamma~_s maps E~_s* into E~_s", s.label(x));
      }
      m.col(c) = restrict_to(image, ran);
    }
    it.gamma.push_back({dom, ran, m, q});
  }
  auto const ones = detail::ideal_units(a, green.ideals);
  for (std::size_t p = 0; p < k.size(); ++p) {
    it.tau.push_back(inner.project(conv.delta(static_cast<Elem>(p), ones[k[p]])));
  }
  return {std::move(restricted), std::move(inner), std::move(it)};
}

// A x_{gamma,tau} S against (A x_{gamma,tau} K) x_{gamma~,tau~} S, with the
// candidate isomorphism a d_s -> (a d_ss*) d_s.
template <typename Scalar>
Decomposition decompose_green(GreenAction<Scalar> const& green, Subset const& k) {
  Decomposition out;
  out.report   = Report("Green decomposition");
  auto const&  s   = green.semigroup;
  auto const   itg = iterated_green(green, k);
  out.report.merge(verify_green(itg.restricted), "restricted: ");
  out.report.merge(verify_green(itg.action), "iterated: ");
  auto const direct   = green_crossed_product(green);
  auto const iterated = green_crossed_product(itg.action);
  out.direct          = direct.dim();
  out.iterated        = iterated.dim();
  out.report.check("dimensions agree", out.direct == out.iterated,
                   std::to_string(out.direct) + " vs " + std::to_string(out.iterated));
  out.report.check("crossed products certified", direct.cstar.certified && iterated.cstar.certified,
                   direct.cstar.note + iterated.cstar.note);
  out.report.note("dim L direct " + std::to_string(direct.convolution.dim()) + ", dim inner "
                  + std::to_string(itg.inner.dim()) + ", dim L iterated " + std::to_string(iterated.convolution.dim()));

  auto const&    conv = direct.convolution;
  Matrix<Scalar> map(iterated.dim(), conv.dim());
  for (Index c = 0; c < conv.dim(); ++c) {
    auto const [x, i] = conv.cells[static_cast<std::size_t>(c)];
    Elem const f      = detail::position_in(k, s.target(x));
    auto const inner  = itg.inner.project(itg.inner.convolution.delta(f, green.algebra.basis(i)));
    map.col(c)        = iterated.project(iterated.convolution.delta(x, inner));
  }
  auto const iso = verify_explicit_iso(map, direct, iterated.quotient.algebra);
  out.report.merge(iso, "a d_s -> (a d_ss*) d_s: ");
  out.iso = iso.ok();
  return out;
}

namespace detail {

inline std::string obstruction_text(Quotient const& q, SectionSearch const& search) {
  std::string out = "no order-preserving cross-section";
  for (auto const& ob : search.obstructions) {
    out += "; " + q.semigroup.label(ob.below) + " lies under " + q.semigroup.label(ob.first) + " and "
           + q.semigroup.label(ob.second) + " with no common representative below both";
  }
  return out;
}

}  // namespace detail

// A x_{beta,w} T against (A x_{beta,w} L) x T/L, through the Green action of
// (S0, N0), the Green decomposition over K = {u d_t : t in L}, and the
// induced section d([u d_t]) = 1 d_c([t]). Without an order-preserving
// section for T/L the result is a refusal naming the obstruction.
template <typename Scalar>
Decomposition decompose_busby(BusbySmithAction<Scalar> const& busby,
                              Subset const&                   l,
                              std::optional<CrossSection>     c = std::nullopt,
                              std::size_t                     cap = 1024) {
  Decomposition out;
  out.report    = Report("Busby-Smith decomposition");
  auto const& t = busby.semigroup;
  if (!verify_busby_smith(busby).ok()) {
    throw InputError("decomposition refused, action fails verification: " + detail::failure_text(verify_busby_smith(busby)));
  }
  if (!is_normal_clifford(t, l).ok()) {
    throw InputError("L is not a normal Clifford subsemigroup");
  }
  Congruence const cong = congruence_from_normal_clifford(t, l);
  Quotient const   ql   = quotient(t, cong);
  if (c) {
    validate_cross_section(cong, *c);
    auto const rep = is_order_preserving(t, cong, *c);
    if (!rep.ok()) {
      out.refused   = true;
      out.diagnosis = "cross-section is not order-preserving: " + detail::failure_text(rep);
    }
  } else {
    auto const search = find_order_preserving(t, cong);
    if (search.section) {
      c = search.section;
    } else {
      out.refused   = true;
      out.diagnosis = detail::obstruction_text(ql, search);
    }
  }
  out.report.check("order-preserving cross-section exists", !out.refused, out.diagnosis);
  if (out.refused) {
    return out;
  }

  auto const  bg  = busby_to_green(busby, cap);
  auto const& s0  = bg.green.semigroup;
  Subset      k0;
  for (Elem x = 0; x < s0.size(); ++x) {
    if (contains(l, bg.elements[x].t)) {
      k0.push_back(x);
    }
  }
  std::vector<Elem> unit_of(t.size());
  for (Elem x = 0; x < t.size(); ++x) {
    unit_of[x] = bg.section(bg.phi[x]);
  }

  auto const direct = quotient_crossed_product(busby);
  auto const green  = green_crossed_product(bg.green);
  auto const iso1   = verify_explicit_iso(relabel_map(direct.convolution, green, unit_of), direct, green.quotient.algebra);
  out.report.merge(iso1, "a d_t -> a d_(1 d_t): ");

  auto const restricted = quotient_crossed_product(detail::restrict_busby(busby, l));
  auto const itg        = iterated_green(bg.green, k0);
  out.report.check("A x L and A x K0 have equal dimension", restricted.dim() == itg.inner.dim(),
                   std::to_string(restricted.dim()) + " vs " + std::to_string(itg.inner.dim()));
  auto const gdec = decompose_green(bg.green, k0);
  out.report.merge(gdec.report, "Green: ");

  Congruence const cong0 = congruence_from_normal_clifford(s0, k0);
  CrossSection     d{std::vector<Elem>(cong0.class_count())};
  for (Elem cls = 0; cls < cong0.class_count(); ++cls) {
    Elem const x   = cong0.representative(cls);
    d.image[cls]   = unit_of[(*c)(cong.class_of(bg.elements[x].t))];
  }
  auto const iterated_busby = green_to_busby(itg.action, d);
  out.report.merge(verify_busby_smith(iterated_busby), "iterated Busby-Smith: ");
  auto const xb        = quotient_crossed_product(iterated_busby);
  auto const iter_g    = green_crossed_product(itg.action);
  auto const iso3      = verify_explicit_iso(relabel_map(xb.convolution, iter_g, d.image), xb, iter_g.quotient.algebra);
  out.report.merge(iso3, "b d_q -> b d_d(q): ");

  out.direct   = direct.dim();
  out.iterated = xb.dim();
  out.report.check("dimensions agree", out.direct == out.iterated,
                   std::to_string(out.direct) + " vs " + std::to_string(out.iterated));
  out.iso = iso1.ok() && gdec.iso && iso3.ok();
  out.report.note("|S0| = " + std::to_string(s0.size()) + ", |K0| = " + std::to_string(k0.size()));
  return out;
}

// Green action of S on the group algebra of G_K: E_s is everything,
// gamma_s([k]) = [sks*] and tau_n = [n].
template <typename Scalar>
GreenAction<Scalar> green_group_image(FiniteInverseSemigroup const& s, Subset const& k, Subset const& n) {
  if (!s.unit()) {
    throw InputError("twisted actions need a unital semigroup");
  }
  if (!is_normal_clifford(s, k).ok() || !is_normal_clifford(s, n).ok()) {
    throw InputError("N or K is not a normal Clifford subsemigroup");
  }
  auto const  sub = detail::subsemigroup(s, k);
  auto const  gi  = max_group_image(sub);
  Index const m   = static_cast<Index>(gi.group.order());
  auto const  full = BasisIdeal::full(m);

  GreenAction<Scalar> out{from_group_algebra<Scalar>(gi.group), s, n, {}, {}, {}};
  std::vector<Elem>   rep(static_cast<std::size_t>(m));
  for (std::size_t p = 0; p < k.size(); ++p) {
    rep[gi.projection[p]] = k[p];
  }
  for (Elem x = 0; x < s.size(); ++x) {
    out.ideals.push_back(full);
    Matrix<Scalar> map = Matrix<Scalar>::Zero(m, m);
    for (Index g = 0; g < m; ++g) {
      Elem img = gi.projection[detail::position_in(k, s.mul(x, rep[static_cast<std::size_t>(g)], s.star(x)))];
      map(static_cast<Index>(img), g) = Scalar(1);
    }
    out.gamma.push_back({full, full, map, m});
  }
  for (Elem x : n) {
    out.tau.push_back(out.algebra.basis(static_cast<Index>(gi.projection[detail::position_in(k, x)])));
  }
  return out;
}

// Dimension comparisons for C*(S) = C*(N) x S (Green), C*(G_S) = C*(G_N) x S
// (Green), and, when T/N has an order-preserving section, C*(T) = C*(N) x T/N
// and C*(G_T) = C*(G_N) x T/N (Busby-Smith).
template <typename Scalar>
Report semigroup_cstar_reports(FiniteInverseSemigroup const& s, Subset const& n) {
  Report      out("semigroup C*-algebras");
  auto const  cs    = from_semigroup_algebra<Scalar>(s);
  auto const  dim_s = cstar_dimension(cs);
  auto const  gs    = max_group_image(s);
  Index const dim_g = static_cast<Index>(gs.group.order());
  out.check("C*(S) is certified", dim_s.certified, dim_s.note);
  out.note("dim C*(S) = " + std::to_string(dim_s.dimension) + ", |G_S| = " + std::to_string(dim_g)
           + ", |N| = " + std::to_string(n.size()));

  auto const canonical = green_canonical<Scalar>(s, n);
  auto const p1        = green_crossed_product(canonical);
  out.check("C*(S) = C*(N) x S (Green)", p1.dim() == dim_s.dimension,
            std::to_string(dim_s.dimension) + " vs " + std::to_string(p1.dim()));
  std::vector<Elem> ident(s.size());
  for (Elem x = 0; x < s.size(); ++x) {
    ident[x] = x;
  }
  out.merge(verify_explicit_iso(semigroup_algebra_map(p1.convolution, s, n, ident), p1, cs), "a d_s -> a s: ");

  auto const grp = green_group_image<Scalar>(s, n, n);
  auto const p2  = green_crossed_product(grp);
  out.check("C*(G_S) = C*(G_N) x S (Green)", p2.dim() == dim_g,
            std::to_string(dim_g) + " vs " + std::to_string(p2.dim()));
  out.note("|G_N| = " + std::to_string(grp.algebra.dim()));

  Congruence const cong   = congruence_from_normal_clifford(s, n);
  auto const       search = find_order_preserving(s, cong);
  if (!search.section) {
    out.note("Busby-Smith statements skipped: " + detail::obstruction_text(quotient(s, cong), search));
    return out;
  }
  auto const p3 = quotient_crossed_product(action_from_cross_section<Scalar>(s, n, *search.section));
  out.check("C*(T) = C*(N) x T/N (Busby-Smith)", p3.dim() == dim_s.dimension,
            std::to_string(dim_s.dimension) + " vs " + std::to_string(p3.dim()));
  out.merge(verify_explicit_iso(semigroup_algebra_map(p3.convolution, s, n, search.section->image), p3, cs),
            "a d_q -> a c(q): ");
  auto const p4 = quotient_crossed_product(green_to_busby(grp, *search.section));
  out.check("C*(G_T) = C*(G_N) x T/N (Busby-Smith)", p4.dim() == dim_g,
            std::to_string(dim_g) + " vs " + std::to_string(p4.dim()));
  return out;
}

}  // namespace twistcross

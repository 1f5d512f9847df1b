#pragma once

// Finite-dimensional *-algebras given by sparse structure constants, with
// basis-aligned ideals and partial *-automorphisms between them. Elements are
// plain coefficient vectors over the algebra's basis.

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "twistcross/error.hpp"
#include "twistcross/linalg.hpp"
#include "twistcross/report.hpp"
#include "twistcross/semigroup.hpp"

namespace twistcross {

template <typename Scalar>
struct Term {
  Index  index;
  Scalar coef;
};

template <typename Scalar>
using Sparse = std::vector<Term<Scalar>>;

template <typename Scalar>
Sparse<Scalar> to_sparse(Vector<Scalar> const& v, double tol = kDefaultTolerance) {
  Sparse<Scalar> out;
  for (Index i = 0; i < v.size(); ++i) {
    if (!ScalarTraits<Scalar>::is_zero(v(i), tol)) {
      out.push_back({i, v(i)});
    }
  }
  return out;
}

template <typename Scalar>
class FdStarAlgebra {
 public:
  using Vec = Vector<Scalar>;
  using Mat = Matrix<Scalar>;

  FdStarAlgebra() = default;

  // `products[i * n + j]` expands b_i b_j; `star[i]` expands b_i*.
  FdStarAlgebra(std::vector<std::string> labels,
                std::vector<Sparse<Scalar>> products,
                std::vector<Sparse<Scalar>> star,
                double tol = kDefaultTolerance)
      : labels_(std::move(labels)), products_(std::move(products)), star_(std::move(star)), tol_(tol) {
    std::size_t const n = labels_.size();
    if (products_.size() != n * n || star_.size() != n) {
      throw InputError("FdStarAlgebra: structure tensor does not match the basis");
    }
    auto check = [n](Sparse<Scalar> const& s) {
      for (auto const& t : s) {
        if (t.index < 0 || static_cast<std::size_t>(t.index) >= n) {
          throw InputError("FdStarAlgebra: basis index out of range");
        }
      }
    };
    std::for_each(products_.begin(), products_.end(), check);
    std::for_each(star_.begin(), star_.end(), check);
  }

  Index dim() const { return static_cast<Index>(labels_.size()); }
  double tolerance() const { return tol_; }
  void   set_tolerance(double tol) {
    if (!(tol > 0.0)) {
      throw InputError("FdStarAlgebra: tolerance must be positive");
    }
    tol_ = tol;
  }

  std::string const&              label(Index i) const { return labels_[static_cast<std::size_t>(i)]; }
  std::vector<std::string> const& labels() const { return labels_; }

  Sparse<Scalar> const& product(Index i, Index j) const {
    return products_[static_cast<std::size_t>(i * dim() + j)];
  }
  Sparse<Scalar> const& star_of(Index i) const { return star_[static_cast<std::size_t>(i)]; }

  Vec zero() const { return Vec::Zero(dim()); }
  Vec basis(Index i) const {
    Vec v = zero();
    v(i)  = Scalar(1);
    return v;
  }

  Vec mul(Vec const& x, Vec const& y) const {
    Vec out = zero();
    for (Index i = 0; i < dim(); ++i) {
      if (ScalarTraits<Scalar>::is_zero(x(i), 0.0)) {
        continue;
      }
      for (Index j = 0; j < dim(); ++j) {
        if (ScalarTraits<Scalar>::is_zero(y(j), 0.0)) {
          continue;
        }
        Scalar xy = x(i) * y(j);
        for (auto const& t : product(i, j)) {
          out(t.index) += xy * t.coef;
        }
      }
    }
    return out;
  }

  Vec mul(Vec const& x, Vec const& y, Vec const& z) const { return mul(mul(x, y), z); }

  Vec star(Vec const& x) const {
    Vec out = zero();
    for (Index i = 0; i < dim(); ++i) {
      if (ScalarTraits<Scalar>::is_zero(x(i), 0.0)) {
        continue;
      }
      Scalar c = ScalarTraits<Scalar>::conj(x(i));
      for (auto const& t : star_of(i)) {
        out(t.index) += c * t.coef;
      }
    }
    return out;
  }

  // Matrix of y -> x y.
  Mat left_matrix(Vec const& x) const {
    Mat out(dim(), dim());
    for (Index j = 0; j < dim(); ++j) {
      out.col(j) = mul(x, basis(j));
    }
    return out;
  }

  // Matrix of y -> y x.
  Mat right_matrix(Vec const& x) const {
    Mat out(dim(), dim());
    for (Index j = 0; j < dim(); ++j) {
      out.col(j) = mul(basis(j), x);
    }
    return out;
  }

  bool equal(Vec const& x, Vec const& y) const {
    double scale = ScalarTraits<Scalar>::exact ? 0.0 : tol_ * std::max(1.0, std::max(max_magnitude(x), max_magnitude(y)));
    return is_zero(x - y, scale);
  }

  std::string format(Vec const& x) const {
    std::string out;
    for (Index i = 0; i < dim(); ++i) {
      if (ScalarTraits<Scalar>::is_zero(x(i), tol_)) {
        continue;
      }
      if (!out.empty()) {
        out += " + ";
      }
      out += "(" + ScalarTraits<Scalar>::to_string(x(i)) + ")" + label(i);
    }
    return out.empty() ? "0" : out;
  }

 private:
  std::vector<std::string>    labels_;
  std::vector<Sparse<Scalar>> products_;
  std::vector<Sparse<Scalar>> star_;
  double                      tol_ = kDefaultTolerance;
};

// Same basis labels and identical structure constants and star.
template <typename Scalar>
bool same_algebra(FdStarAlgebra<Scalar> const& a, FdStarAlgebra<Scalar> const& b) {
  if (a.dim() != b.dim() || a.labels() != b.labels()) {
    return false;
  }
  for (Index i = 0; i < a.dim(); ++i) {
    if (!a.equal(a.star(a.basis(i)), b.star(b.basis(i)))) {
      return false;
    }
    for (Index j = 0; j < a.dim(); ++j) {
      if (!a.equal(a.mul(a.basis(i), a.basis(j)), b.mul(b.basis(i), b.basis(j)))) {
        return false;
      }
    }
  }
  return true;
}

template <typename Scalar>
Report verify_star_algebra(FdStarAlgebra<Scalar> const& a) {
  Report rep("star algebra");
  for (Index i = 0; i < a.dim(); ++i) {
    auto bi = a.basis(i);
    rep.check("star involutive", a.equal(a.star(a.star(bi)), bi), a.label(i));
    for (Index j = 0; j < a.dim(); ++j) {
      auto bj  = a.basis(j);
      auto bij = a.mul(bi, bj);
      rep.check("star anti-multiplicative", a.equal(a.star(bij), a.mul(a.star(bj), a.star(bi))),
                a.label(i) + ", " + a.label(j));
      for (Index k = 0; k < a.dim(); ++k) {
        auto bk = a.basis(k);
        rep.check("associative", a.equal(a.mul(bij, bk), a.mul(bi, a.mul(bj, bk))),
                  a.label(i) + ", " + a.label(j) + ", " + a.label(k));
      }
    }
  }
  return rep;
}

// Algebra of the subsemigroup `subset` of S, basis ordered as `subset`.
// Throws ConstructionError when the subset is not closed under product and
// star.
template <typename Scalar>
FdStarAlgebra<Scalar> from_semigroup_algebra(FiniteInverseSemigroup const& s, std::vector<Elem> const& subset) {
  std::vector<Index> pos(s.size(), -1);
  for (std::size_t k = 0; k < subset.size(); ++k) {
    if (subset[k] >= s.size() || pos[subset[k]] >= 0) {
      throw InputError("from_semigroup_algebra: bad subset");
    }
    pos[subset[k]] = static_cast<Index>(k);
  }
  std::size_t const             n = subset.size();
  std::vector<std::string>      labels;
  std::vector<Sparse<Scalar>>   prod(n * n), star(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(s.label(subset[i]));
    Elem si = s.star(subset[i]);
    if (pos[si] < 0) {
      throw ConstructionError("closed under star", s.label(subset[i]) + "* = " + s.label(si));
    }
    star[i] = {{pos[si], Scalar(1)}};
    for (std::size_t j = 0; j < n; ++j) {
      Elem p = s.mul(subset[i], subset[j]);
      if (pos[p] < 0) {
        throw ConstructionError("closed under product",
                                s.label(subset[i]) + " " + s.label(subset[j]) + " = " + s.label(p));
      }
      prod[i * n + j] = {{pos[p], Scalar(1)}};
    }
  }
  return FdStarAlgebra<Scalar>(std::move(labels), std::move(prod), std::move(star));
}

template <typename Scalar>
FdStarAlgebra<Scalar> from_semigroup_algebra(FiniteInverseSemigroup const& s) {
  std::vector<Elem> all(s.size());
  for (Elem a = 0; a < s.size(); ++a) {
    all[a] = a;
  }
  return from_semigroup_algebra<Scalar>(s, all);
}

template <typename Scalar>
FdStarAlgebra<Scalar> from_group_algebra(Group const& g) {
  return from_semigroup_algebra<Scalar>(g.semigroup());
}

// Direct sum of full matrix algebras; basis = matrix units "b:i,j".
template <typename Scalar>
FdStarAlgebra<Scalar> from_multimatrix(std::vector<std::size_t> const& blocks) {
  struct Unit {
    std::size_t block, i, j;
  };
  std::vector<Unit> units;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t i = 0; i < blocks[b]; ++i) {
      for (std::size_t j = 0; j < blocks[b]; ++j) {
        units.push_back({b, i, j});
      }
    }
  }
  auto index = [&](std::size_t b, std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < units.size(); ++k) {
      if (units[k].block == b && units[k].i == i && units[k].j == j) {
        return static_cast<Index>(k);
      }
    }
    return Index{-1};
  };
  std::size_t const           n = units.size();
  std::vector<std::string>    labels;
  std::vector<Sparse<Scalar>> prod(n * n), star(n);
  for (std::size_t p = 0; p < n; ++p) {
    auto const& u = units[p];
    labels.push_back(std::to_string(u.block) + ":" + std::to_string(u.i) + "," + std::to_string(u.j));
    star[p] = {{index(u.block, u.j, u.i), Scalar(1)}};
    for (std::size_t q = 0; q < n; ++q) {
      auto const& v = units[q];
      if (u.block == v.block && u.j == v.i) {
        prod[p * n + q] = {{index(u.block, u.i, v.j), Scalar(1)}};
      }
    }
  }
  return FdStarAlgebra<Scalar>(std::move(labels), std::move(prod), std::move(star));
}

// Span of a sorted subset of basis vectors.
struct BasisIdeal {
  std::vector<Index> indices;

  static BasisIdeal full(Index dim) {
    BasisIdeal out;
    for (Index i = 0; i < dim; ++i) {
      out.indices.push_back(i);
    }
    return out;
  }

  Index size() const { return static_cast<Index>(indices.size()); }
  bool  empty() const { return indices.empty(); }
  bool  contains(Index i) const { return std::binary_search(indices.begin(), indices.end(), i); }

  friend bool operator==(BasisIdeal const&, BasisIdeal const&) = default;
};

// Builds a BasisIdeal from arbitrary indices (sorted, deduplicated).
inline BasisIdeal make_ideal(std::vector<Index> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return BasisIdeal{std::move(indices)};
}

// Product of two basis-aligned ideals, which is their intersection.
inline BasisIdeal intersect(BasisIdeal const& a, BasisIdeal const& b) {
  BasisIdeal out;
  std::set_intersection(a.indices.begin(), a.indices.end(), b.indices.begin(), b.indices.end(),
                        std::back_inserter(out.indices));
  return out;
}

inline std::string to_string(BasisIdeal const& ideal) {
  std::string out = "{";
  for (std::size_t k = 0; k < ideal.indices.size(); ++k) {
    out += (k ? "," : "") + std::to_string(ideal.indices[k]);
  }
  return out + "}";
}

// Coordinates of x on the ideal's basis.
template <typename Scalar>
Vector<Scalar> restrict_to(Vector<Scalar> const& x, BasisIdeal const& ideal) {
  Vector<Scalar> out(ideal.size());
  for (Index k = 0; k < ideal.size(); ++k) {
    out(k) = x(ideal.indices[static_cast<std::size_t>(k)]);
  }
  return out;
}

template <typename Scalar>
Vector<Scalar> extend_from(Vector<Scalar> const& y, BasisIdeal const& ideal, Index dim) {
  Vector<Scalar> out = Vector<Scalar>::Zero(dim);
  for (Index k = 0; k < ideal.size(); ++k) {
    out(ideal.indices[static_cast<std::size_t>(k)]) = y(k);
  }
  return out;
}

// True when x vanishes off the ideal's basis.
template <typename Scalar>
bool in_span(FdStarAlgebra<Scalar> const& a, Vector<Scalar> const& x, BasisIdeal const& ideal) {
  double scale = ScalarTraits<Scalar>::exact ? 0.0 : a.tolerance() * std::max(1.0, max_magnitude(x));
  for (Index i = 0; i < x.size(); ++i) {
    if (!ideal.contains(i) && !ScalarTraits<Scalar>::is_zero(x(i), scale)) {
      return false;
    }
  }
  return true;
}

template <typename Scalar>
Report is_ideal(FdStarAlgebra<Scalar> const& a, BasisIdeal const& ideal) {
  Report rep("basis ideal " + to_string(ideal));
  for (Index i : ideal.indices) {
    if (i < 0 || i >= a.dim()) {
      throw InputError("basis ideal index out of range");
    }
    auto bi = a.basis(i);
    rep.check("star-closed", in_span(a, a.star(bi), ideal), a.label(i));
    for (Index j = 0; j < a.dim(); ++j) {
      auto bj = a.basis(j);
      rep.check("left ideal", in_span(a, a.mul(bj, bi), ideal), a.label(j) + " " + a.label(i));
      rep.check("right ideal", in_span(a, a.mul(bi, bj), ideal), a.label(i) + " " + a.label(j));
    }
  }
  return rep;
}

// The element 1_I with 1_I x = x 1_I = x on the ideal. Throws
// ConstructionError if the ideal has no unit.
template <typename Scalar>
Vector<Scalar> ideal_identity(FdStarAlgebra<Scalar> const& a, BasisIdeal const& ideal) {
  Index const m = ideal.size();
  if (m == 0) {
    return a.zero();
  }
  Index const    n = a.dim();
  Matrix<Scalar> sys(2 * m * n, m);
  Vector<Scalar> rhs = Vector<Scalar>::Zero(2 * m * n);
  for (Index k = 0; k < m; ++k) {
    auto u = a.basis(ideal.indices[static_cast<std::size_t>(k)]);
    for (Index j = 0; j < m; ++j) {
      auto bj                                 = a.basis(ideal.indices[static_cast<std::size_t>(j)]);
      sys.block(j * n, k, n, 1)               = a.mul(u, bj);
      sys.block((m + j) * n, k, n, 1)         = a.mul(bj, u);
      if (k == 0) {
        rhs.segment(j * n, n)       = bj;
        rhs.segment((m + j) * n, n) = bj;
      }
    }
  }
  auto x = solve(sys, rhs, a.tolerance());
  if (!x) {
    throw ConstructionError("ideal is unital", "no identity in span " + to_string(ideal));
  }
  return extend_from(*x, ideal, n);
}

template <typename Scalar>
bool is_unitary_multiplier(FdStarAlgebra<Scalar> const& a, Vector<Scalar> const& u, BasisIdeal const& ideal) {
  if (!in_span(a, u, ideal)) {
    return false;
  }
  auto one = ideal_identity(a, ideal);
  auto us  = a.star(u);
  return a.equal(a.mul(u, us), one) && a.equal(a.mul(us, u), one);
}

// Isomorphism span(domain) -> span(range) stored as a matrix on ideal
// coordinates (range.size() x domain.size()).
template <typename Scalar>
struct PartialStarAutomorphism {
  BasisIdeal     domain;
  BasisIdeal     range;
  Matrix<Scalar> map;
  Index          ambient = 0;

  static PartialStarAutomorphism identity(BasisIdeal const& ideal, Index ambient) {
    return {ideal, ideal, Matrix<Scalar>::Identity(ideal.size(), ideal.size()), ambient};
  }

  bool defined_on(Vector<Scalar> const& x, double tol) const {
    for (Index i = 0; i < x.size(); ++i) {
      if (!domain.contains(i) && !ScalarTraits<Scalar>::is_zero(x(i), tol)) {
        return false;
      }
    }
    return true;
  }

  // Throws InputError when x has support off the domain.
  Vector<Scalar> apply(Vector<Scalar> const& x, double tol = kDefaultTolerance) const {
    double scale = ScalarTraits<Scalar>::exact ? 0.0 : tol * std::max(1.0, max_magnitude(x));
    if (!defined_on(x, scale)) {
      throw InputError("partial automorphism applied outside its domain " + to_string(domain));
    }
    return extend_from<Scalar>(map * restrict_to(x, domain), range, ambient);
  }
};

template <typename Scalar>
PartialStarAutomorphism<Scalar> inverse(PartialStarAutomorphism<Scalar> const& f, double tol = kDefaultTolerance) {
  auto inv = inverse(f.map, tol);
  if (!inv) {
    throw ConstructionError("bijective", "partial automorphism on " + to_string(f.domain) + " is singular");
  }
  return {f.range, f.domain, *inv, f.ambient};
}

namespace detail {

// Basis indices k of `within` whose image under f lies in span(target).
template <typename Scalar>
std::vector<Index> preimage_support(PartialStarAutomorphism<Scalar> const& f,
                                    BasisIdeal const&                      target,
                                    double                                 tol) {
  std::vector<Index> out;
  for (Index k = 0; k < f.domain.size(); ++k) {
    Vector<Scalar> img = f.map.col(k);
    double         scale = ScalarTraits<Scalar>::exact ? 0.0 : tol * std::max(1.0, max_magnitude(img));
    bool           inside = true;
    for (Index r = 0; r < f.range.size(); ++r) {
      if (!target.contains(f.range.indices[static_cast<std::size_t>(r)])
          && !ScalarTraits<Scalar>::is_zero(img(r), scale)) {
        inside = false;
      }
    }
    if (inside) {
      out.push_back(f.domain.indices[static_cast<std::size_t>(k)]);
    }
  }
  return out;
}

}  // namespace detail

// f o g on its natural domain g^-1(range g . dom f). Throws
// ConstructionError("basis-aligned", ...) when that domain or its image is
// not spanned by basis vectors.
template <typename Scalar>
PartialStarAutomorphism<Scalar> compose(PartialStarAutomorphism<Scalar> const& f,
                                        PartialStarAutomorphism<Scalar> const& g,
                                        double                                 tol = kDefaultTolerance) {
  BasisIdeal const mid = intersect(g.range, f.domain);
  BasisIdeal const dom{detail::preimage_support(g, mid, tol)};
  BasisIdeal const ran{detail::preimage_support(inverse(f, tol), mid, tol)};
  if (dom.size() != mid.size() || ran.size() != mid.size()) {
    throw ConstructionError("basis-aligned", "composite domain over " + to_string(mid));
  }
  Index const    n = std::max(f.ambient, g.ambient);
  Matrix<Scalar> m(ran.size(), dom.size());
  for (Index k = 0; k < dom.size(); ++k) {
    Vector<Scalar> e = Vector<Scalar>::Zero(n);
    e(dom.indices[static_cast<std::size_t>(k)]) = Scalar(1);
    m.col(k) = restrict_to(f.apply(g.apply(e, tol), tol), ran);
  }
  return {dom, ran, m, n};
}

template <typename Scalar>
bool equal(PartialStarAutomorphism<Scalar> const& f, PartialStarAutomorphism<Scalar> const& g, double tol) {
  if (f.domain != g.domain || f.range != g.range) {
    return false;
  }
  double scale = ScalarTraits<Scalar>::exact ? 0.0 : tol * std::max(1.0, max_magnitude(f.map));
  return is_zero(f.map - g.map, scale);
}

// x -> u x u* on `ideal`.
template <typename Scalar>
PartialStarAutomorphism<Scalar> Ad(FdStarAlgebra<Scalar> const& a, Vector<Scalar> const& u, BasisIdeal const& ideal) {
  auto const     us = a.star(u);
  Matrix<Scalar> m(ideal.size(), ideal.size());
  for (Index k = 0; k < ideal.size(); ++k) {
    m.col(k) = restrict_to(a.mul(u, a.basis(ideal.indices[static_cast<std::size_t>(k)]), us), ideal);
  }
  return {ideal, ideal, m, a.dim()};
}

// The three invariants: both ideals are ideals, the map is bijective, and it
// is multiplicative and star-preserving on basis vectors of the domain.
template <typename Scalar>
Report verify_partial_automorphism(FdStarAlgebra<Scalar> const& a, PartialStarAutomorphism<Scalar> const& f) {
  Report rep("partial automorphism " + to_string(f.domain) + " -> " + to_string(f.range));
  rep.check("domain is an ideal", is_ideal(a, f.domain).ok(), to_string(f.domain));
  rep.check("range is an ideal", is_ideal(a, f.range).ok(), to_string(f.range));
  bool square = f.map.rows() == f.map.cols() && f.map.rows() == f.domain.size() && f.range.size() == f.domain.size();
  rep.check("bijective", square && inverse(f.map, a.tolerance()).has_value(), "matrix is singular or not square");
  if (!rep.ok()) {
    return rep;
  }
  for (Index i : f.domain.indices) {
    auto bi = a.basis(i);
    rep.check("star-preserving", a.equal(f.apply(a.star(bi), a.tolerance()), a.star(f.apply(bi, a.tolerance()))),
              a.label(i));
    for (Index j : f.domain.indices) {
      auto bj = a.basis(j);
      rep.check("multiplicative",
                a.equal(f.apply(a.mul(bi, bj), a.tolerance()),
                        a.mul(f.apply(bi, a.tolerance()), f.apply(bj, a.tolerance()))),
                a.label(i) + " " + a.label(j));
    }
  }
  return rep;
}

// Random unitary of the ideal by the Cayley transform (1 + ih)(1 - ih)^-1 of
// a random self-adjoint h with small integer coefficients.
template <typename Scalar>
Vector<Scalar> random_unitary(FdStarAlgebra<Scalar> const& a, BasisIdeal const& ideal, std::mt19937_64& rng) {
  auto one = ideal_identity(a, ideal);
  if (ideal.empty()) {
    return one;
  }
  std::uniform_int_distribution<int> coef(-3, 3);
  Vector<Scalar>                     x = a.zero();
  for (Index i : ideal.indices) {
    x(i) = ScalarTraits<Scalar>::from_int(coef(rng)) + ScalarTraits<Scalar>::unit_root(1) * ScalarTraits<Scalar>::from_int(coef(rng));
  }
  Vector<Scalar> h     = (x + a.star(x)) * (Scalar(1) / Scalar(2));
  Scalar const   i     = ScalarTraits<Scalar>::unit_root(1);
  Vector<Scalar> plus  = one + i * h;
  Vector<Scalar> minus = one - i * h;
  // minus is invertible in the ideal; solve minus * y = one there.
  Matrix<Scalar> lm(ideal.size(), ideal.size());
  for (Index k = 0; k < ideal.size(); ++k) {
    lm.col(k) = restrict_to(a.mul(minus, a.basis(ideal.indices[static_cast<std::size_t>(k)])), ideal);
  }
  auto y = solve(lm, Vector<Scalar>(restrict_to(one, ideal)), a.tolerance());
  if (!y) {
    throw Error("random_unitary: Cayley denominator not invertible");
  }
  return a.mul(plus, extend_from(*y, ideal, a.dim()));
}

// Entry (i, j) is trace(L_{b_i b_j}).
template <typename Scalar>
Matrix<Scalar> trace_form(FdStarAlgebra<Scalar> const& a) {
  Index const         n = a.dim();
  std::vector<Scalar> tr(static_cast<std::size_t>(n), Scalar(0));
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (auto const& t : a.product(i, j)) {
        if (t.index == j) {
          tr[static_cast<std::size_t>(i)] += t.coef;
        }
      }
    }
  }
  Matrix<Scalar> out = Matrix<Scalar>::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (auto const& t : a.product(i, j)) {
        out(i, j) += t.coef * tr[static_cast<std::size_t>(t.index)];
      }
    }
  }
  return out;
}

// Dickson's criterion: x is in the radical iff trace(L_{xy}) = 0 for all y.
// Columns of the result span the radical.
template <typename Scalar>
Matrix<Scalar> jacobson_radical(FdStarAlgebra<Scalar> const& a) {
  Matrix<Scalar> t = trace_form(a);
  Matrix<Scalar> rad = nullspace<Scalar>(t.transpose(), a.tolerance());
  SpanBuilder<Scalar> span(a.dim(), a.tolerance());
  for (Index k = 0; k < rad.cols(); ++k) {
    span.insert(rad.col(k));
  }
  for (Index k = 0; k < rad.cols(); ++k) {
    if (!span.contains(a.star(rad.col(k)))) {
      throw Error("jacobson_radical: radical is not star-closed");
    }
  }
  return rad;
}

// Entry (j, i) is trace(L_{b_j* b_i}), the Gram matrix of the trace inner
// product.
template <typename Scalar>
Matrix<Scalar> trace_gram(FdStarAlgebra<Scalar> const& a) {
  Index const          n = a.dim();
  Matrix<Scalar> const t = trace_form(a);
  Matrix<Scalar>       gram = Matrix<Scalar>::Zero(n, n);
  for (Index j = 0; j < n; ++j) {
    for (auto const& sj : a.star_of(j)) {
      for (Index i = 0; i < n; ++i) {
        gram(j, i) += sj.coef * t(sj.index, i);
      }
    }
  }
  return gram;
}

struct CstarDimension {
  Index       dimension = 0;  // dim A / rad
  Index       radical   = 0;
  bool        certified = false;
  std::string note;
};

// Certification: the form (x, y) -> trace(L_{y* x}) is positive semidefinite
// with kernel of the same dimension as the radical.
template <typename Scalar>
CstarDimension cstar_dimension(FdStarAlgebra<Scalar> const& a) {
  using Traits = ScalarTraits<Scalar>;
  Index const          n   = a.dim();
  Matrix<Scalar> const rad = jacobson_radical(a);
  CstarDimension       out{n - rad.cols(), rad.cols(), false, {}};

  Matrix<Scalar> gram   = trace_gram(a);
  Index          kernel = 0;
  bool  psd    = true;
  if constexpr (Traits::exact) {
    for (Index k = 0; k < n && psd; ++k) {
      Scalar d = gram(k, k);
      if (sgn(d.imag()) != 0 || sgn(d.real()) < 0) {
        psd = false;
      } else if (d.is_zero()) {
        ++kernel;
        for (Index j = k + 1; j < n; ++j) {
          psd = psd && gram(k, j).is_zero() && gram(j, k).is_zero();
        }
      } else {
        for (Index i = k + 1; i < n; ++i) {
          if (gram(i, k).is_zero()) {
            continue;
          }
          Scalar f = gram(i, k) / d;
          for (Index j = k + 1; j < n; ++j) {
            gram(i, j) -= f * gram(k, j);
          }
        }
      }
    }
  } else {
    Eigen::SelfAdjointEigenSolver<Matrix<Complex>> es(cast_matrix<Complex>(gram));
    auto const&  ev    = es.eigenvalues();
    double const scale = std::max(1.0, ev.size() ? ev.cwiseAbs().maxCoeff() : 0.0);
    double const zero  = a.tolerance() * scale * static_cast<double>(std::max<Index>(1, n));
    for (Index k = 0; k < ev.size(); ++k) {
      if (ev(k) < -zero) {
        psd = false;
      } else if (ev(k) <= zero) {
        ++kernel;
      }
    }
  }
  out.certified = psd && kernel == out.radical;
  if (!psd) {
    out.note = "trace form is not positive semidefinite";
  } else if (!out.certified) {
    out.note = "trace form kernel has dimension " + std::to_string(kernel) + ", radical "
               + std::to_string(out.radical);
  }
  return out;
}

// A / I for the two-sided star-ideal I generated by the columns of
// `generators`. The quotient basis is the greedy complement of I among the
// original basis vectors, scanned in `order` (index order when empty).
template <typename Scalar>
struct AlgebraQuotient {
  FdStarAlgebra<Scalar> algebra;
  Matrix<Scalar>        ideal;       // columns span I
  Matrix<Scalar>        projection;  // quotient coordinates of a vector of A
  std::vector<Index>    lift;        // basis index of A behind each quotient basis vector
};

template <typename Scalar>
Matrix<Scalar> generated_ideal(FdStarAlgebra<Scalar> const& a, Matrix<Scalar> const& generators) {
  SpanBuilder<Scalar>         span(a.dim(), a.tolerance());
  std::vector<Vector<Scalar>> queue;
  auto push = [&](Vector<Scalar> const& v) {
    if (span.insert(v)) {
      queue.push_back(v);
    }
  };
  for (Index k = 0; k < generators.cols(); ++k) {
    push(generators.col(k));
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vector<Scalar> v = queue[head];
    push(a.star(v));
    for (Index i = 0; i < a.dim(); ++i) {
      push(a.mul(a.basis(i), v));
      push(a.mul(v, a.basis(i)));
    }
  }
  return span.basis();
}

template <typename Scalar>
AlgebraQuotient<Scalar> quotient_algebra(FdStarAlgebra<Scalar> const& a,
                                         Matrix<Scalar> const&        generators,
                                         std::vector<Index>           order = {}) {
  Index const         n     = a.dim();
  Matrix<Scalar>      ideal = generated_ideal(a, generators);
  SpanBuilder<Scalar> span(n, a.tolerance());
  for (Index k = 0; k < ideal.cols(); ++k) {
    span.insert(ideal.col(k));
  }
  if (order.empty()) {
    for (Index i = 0; i < n; ++i) {
      order.push_back(i);
    }
  }
  std::vector<Index> lift;
  for (Index i : order) {
    if (span.insert(a.basis(i))) {
      lift.push_back(i);
    }
  }
  Index const    q = static_cast<Index>(lift.size());
  Matrix<Scalar> frame(n, n);
  frame.leftCols(ideal.cols()) = ideal;
  for (Index k = 0; k < q; ++k) {
    frame.col(ideal.cols() + k) = a.basis(lift[static_cast<std::size_t>(k)]);
  }
  auto inv = inverse(frame, a.tolerance());
  if (!inv) {
    throw Error("quotient_algebra: complement frame is singular");
  }
  Matrix<Scalar> projection = inv->bottomRows(q);

  std::vector<std::string>    labels;
  std::vector<Sparse<Scalar>> prod(static_cast<std::size_t>(q * q)), star(static_cast<std::size_t>(q));
  for (Index i = 0; i < q; ++i) {
    auto bi = a.basis(lift[static_cast<std::size_t>(i)]);
    labels.push_back(a.label(lift[static_cast<std::size_t>(i)]));
    star[static_cast<std::size_t>(i)] = to_sparse<Scalar>(projection * a.star(bi), a.tolerance());
    for (Index j = 0; j < q; ++j) {
      auto bj = a.basis(lift[static_cast<std::size_t>(j)]);
      prod[static_cast<std::size_t>(i * q + j)] = to_sparse<Scalar>(projection * a.mul(bi, bj), a.tolerance());
    }
  }
  return {FdStarAlgebra<Scalar>(std::move(labels), std::move(prod), std::move(star), a.tolerance()),
          std::move(ideal), std::move(projection), std::move(lift)};
}

}  // namespace twistcross

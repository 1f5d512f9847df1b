#pragma once

// JSON formats for semigroups, subsets, congruences, sections, S(G)
// elements, algebras and twisted actions. Scalars are [re, im] pairs; exact
// parts are integers or "p/q" strings. Matrices are row-major arrays of rows.

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "twistcross/actions.hpp"
#include "twistcross/cross_section.hpp"
#include "twistcross/exel.hpp"

namespace twistcross {

using Json = nlohmann::json;

// Parses text, turning syntax errors into InputError with line and column.
Json parse_json(std::string const& text, std::string const& source = "input");
Json read_json_file(std::string const& path);

// {"type":"cayley","size","product","star","unit","labels"}.
Json semigroup_to_json(FiniteInverseSemigroup const& s);
// Accepts the cayley form and {"type":"partial_bijections","degree",
// "generators"} with generators as integer arrays or tuple strings.
FiniteInverseSemigroup semigroup_from_json(Json const& j, std::size_t cap = 100000);

Json   subset_to_json(Subset const& set);
Subset subset_from_json(Json const& j, std::size_t size);
// As above, also accepting element labels in place of indices.
Subset subset_from_json(Json const& j, FiniteInverseSemigroup const& s);

Json       congruence_to_json(Congruence const& c);
Congruence congruence_from_json(Json const& j, std::size_t size);

// Object mapping class index (as a string key) to element index; arrays are
// also accepted.
Json         section_to_json(CrossSection const& c);
CrossSection section_from_json(Json const& j, std::size_t classes);

Json        exel_to_json(ExelElement const& x);
ExelElement exel_from_json(Json const& j, std::shared_ptr<Group const> carrier);

Json   exact_to_json(Exact const& x);
Exact  exact_from_json(Json const& j);

template <typename Scalar>
Json scalar_to_json(Scalar const& x) {
  if constexpr (ScalarTraits<Scalar>::exact) {
    return exact_to_json(x);
  } else {
    return Json::array({x.real(), x.imag()});
  }
}

template <typename Scalar>
Scalar scalar_from_json(Json const& j) {
  if constexpr (ScalarTraits<Scalar>::exact) {
    return exact_from_json(j);
  } else {
    if (j.is_number()) {
      return {j.get<double>(), 0.0};
    }
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
      throw InputError("scalar must be a number or an [re, im] pair");
    }
    return {j[0].get<double>(), j[1].get<double>()};
  }
}

template <typename Scalar>
Json vector_to_json(Vector<Scalar> const& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) {
    out.push_back(scalar_to_json(v(i)));
  }
  return out;
}

template <typename Scalar>
Vector<Scalar> vector_from_json(Json const& j, Index size) {
  if (!j.is_array() || static_cast<Index>(j.size()) != size) {
    throw InputError("vector must have " + std::to_string(size) + " entries");
  }
  Vector<Scalar> out(size);
  for (Index i = 0; i < size; ++i) {
    out(i) = scalar_from_json<Scalar>(j[static_cast<std::size_t>(i)]);
  }
  return out;
}

template <typename Scalar>
Json matrix_to_json(Matrix<Scalar> const& m) {
  Json out = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) {
      row.push_back(scalar_to_json(m(r, c)));
    }
    out.push_back(std::move(row));
  }
  return out;
}

template <typename Scalar>
Matrix<Scalar> matrix_from_json(Json const& j, Index rows, Index cols) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows) {
    throw InputError("matrix must have " + std::to_string(rows) + " rows");
  }
  Matrix<Scalar> out(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    Json const& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      throw InputError("matrix row must have " + std::to_string(cols) + " entries");
    }
    for (Index c = 0; c < cols; ++c) {
      out(r, c) = scalar_from_json<Scalar>(row[static_cast<std::size_t>(c)]);
    }
  }
  return out;
}

// {"dim","labels","products":[[i,j,k,c]...],"star":[[i,k,c]...],"tolerance"}.
template <typename Scalar>
Json algebra_to_json(FdStarAlgebra<Scalar> const& a) {
  Json prod = Json::array();
  Json star = Json::array();
  for (Index i = 0; i < a.dim(); ++i) {
    for (auto const& t : a.star_of(i)) {
      star.push_back(Json::array({i, t.index, scalar_to_json(t.coef)}));
    }
    for (Index j = 0; j < a.dim(); ++j) {
      for (auto const& t : a.product(i, j)) {
        prod.push_back(Json::array({i, j, t.index, scalar_to_json(t.coef)}));
      }
    }
  }
  return {{"dim", a.dim()}, {"labels", a.labels()}, {"products", prod}, {"star", star}, {"tolerance", a.tolerance()}};
}

template <typename Scalar>
FdStarAlgebra<Scalar> algebra_from_json(Json const& j) {
  auto const n = j.at("dim").get<Index>();
  if (n < 0) {
    throw InputError("algebra dimension is negative");
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    labels = j.at("labels").get<std::vector<std::string>>();
  } else {
    for (Index i = 0; i < n; ++i) {
      labels.push_back("b" + std::to_string(i));
    }
  }
  if (static_cast<Index>(labels.size()) != n) {
    throw InputError("algebra labels do not match its dimension");
  }
  auto in_range = [n](Json const& x) {
    auto v = x.get<Index>();
    if (v < 0 || v >= n) {
      throw InputError("algebra basis index out of range");
    }
    return v;
  };
  std::vector<Sparse<Scalar>> prod(static_cast<std::size_t>(n * n)), star(static_cast<std::size_t>(n));
  for (auto const& t : j.at("products")) {
    if (!t.is_array() || t.size() != 4) {
      throw InputError("product triplet must be [i, j, k, coefficient]");
    }
    Index i = in_range(t[0]), k = in_range(t[1]), m = in_range(t[2]);
    prod[static_cast<std::size_t>(i * n + k)].push_back({m, scalar_from_json<Scalar>(t[3])});
  }
  for (auto const& t : j.at("star")) {
    if (!t.is_array() || t.size() != 3) {
      throw InputError("star entry must be [i, k, coefficient]");
    }
    star[static_cast<std::size_t>(in_range(t[0]))].push_back({in_range(t[1]), scalar_from_json<Scalar>(t[2])});
  }
  double tol = j.value("tolerance", kDefaultTolerance);
  return FdStarAlgebra<Scalar>(std::move(labels), std::move(prod), std::move(star), tol);
}

inline Json ideal_to_json(BasisIdeal const& ideal) { return ideal.indices; }

inline BasisIdeal ideal_from_json(Json const& j, Index dim) {
  auto idx = j.get<std::vector<Index>>();
  for (Index i : idx) {
    if (i < 0 || i >= dim) {
      throw InputError("ideal index out of range");
    }
  }
  return make_ideal(std::move(idx));
}

template <typename Scalar>
Json automorphism_to_json(PartialStarAutomorphism<Scalar> const& f) {
  return {{"domain", ideal_to_json(f.domain)}, {"range", ideal_to_json(f.range)}, {"matrix", matrix_to_json(f.map)}};
}

template <typename Scalar>
PartialStarAutomorphism<Scalar> automorphism_from_json(Json const& j, Index dim) {
  PartialStarAutomorphism<Scalar> f;
  f.domain  = ideal_from_json(j.at("domain"), dim);
  f.range   = ideal_from_json(j.at("range"), dim);
  f.map     = matrix_from_json<Scalar>(j.at("matrix"), f.range.size(), f.domain.size());
  f.ambient = dim;
  return f;
}

template <typename Scalar>
Json action_to_json(BusbySmithAction<Scalar> const& act) {
  Json out{{"kind", "busby-smith"},
           {"scalar", ScalarTraits<Scalar>::name},
           {"semigroup", semigroup_to_json(act.semigroup)},
           {"algebra", algebra_to_json(act.algebra)},
           {"ideals", Json::array()},
           {"beta", Json::array()},
           {"w", Json::array()}};
  for (auto const& e : act.ideals) {
    out["ideals"].push_back(ideal_to_json(e));
  }
  for (auto const& b : act.beta) {
    out["beta"].push_back(automorphism_to_json(b));
  }
  for (auto const& w : act.w) {
    out["w"].push_back(vector_to_json(w));
  }
  return out;
}

template <typename Scalar>
Json action_to_json(GreenAction<Scalar> const& act) {
  Json out{{"kind", "green"},
           {"scalar", ScalarTraits<Scalar>::name},
           {"semigroup", semigroup_to_json(act.semigroup)},
           {"normal", subset_to_json(act.normal)},
           {"algebra", algebra_to_json(act.algebra)},
           {"ideals", Json::array()},
           {"gamma", Json::array()},
           {"tau", Json::array()}};
  for (auto const& e : act.ideals) {
    out["ideals"].push_back(ideal_to_json(e));
  }
  for (auto const& g : act.gamma) {
    out["gamma"].push_back(automorphism_to_json(g));
  }
  for (auto const& t : act.tau) {
    out["tau"].push_back(vector_to_json(t));
  }
  return out;
}

namespace detail {

template <typename Scalar>
void read_ideals_and_maps(Json const&                                   j,
                          char const*                                   maps,
                          FdStarAlgebra<Scalar> const&                  a,
                          std::size_t                                   n,
                          std::vector<BasisIdeal>&                      ideals,
                          std::vector<PartialStarAutomorphism<Scalar>>& out) {
  if (j.at("ideals").size() != n || j.at(maps).size() != n) {
    throw InputError(std::string("action needs one ideal and one map in '") + maps + "' per element");
  }
  for (auto const& e : j.at("ideals")) {
    ideals.push_back(ideal_from_json(e, a.dim()));
  }
  for (auto const& m : j.at(maps)) {
    out.push_back(automorphism_from_json<Scalar>(m, a.dim()));
  }
}

}  // namespace detail

template <typename Scalar>
BusbySmithAction<Scalar> busby_from_json(Json const& j) {
  if (j.value("kind", "busby-smith") != "busby-smith") {
    throw InputError("expected a Busby-Smith action bundle");
  }
  BusbySmithAction<Scalar> act{algebra_from_json<Scalar>(j.at("algebra")), semigroup_from_json(j.at("semigroup")), {}, {}, {}};
  std::size_t const n = act.semigroup.size();
  detail::read_ideals_and_maps(j, "beta", act.algebra, n, act.ideals, act.beta);
  if (j.at("w").size() != n * n) {
    throw InputError("cocycle needs |S|^2 entries");
  }
  for (auto const& w : j.at("w")) {
    act.w.push_back(vector_from_json<Scalar>(w, act.algebra.dim()));
  }
  return act;
}

template <typename Scalar>
GreenAction<Scalar> green_from_json(Json const& j) {
  if (j.value("kind", "") != "green") {
    throw InputError("expected a Green action bundle");
  }
  GreenAction<Scalar> act{algebra_from_json<Scalar>(j.at("algebra")), semigroup_from_json(j.at("semigroup")), {}, {}, {}, {}};
  std::size_t const n = act.semigroup.size();
  act.normal          = subset_from_json(j.at("normal"), n);
  detail::read_ideals_and_maps(j, "gamma", act.algebra, n, act.ideals, act.gamma);
  if (j.at("tau").size() != act.normal.size()) {
    throw InputError("tau needs one entry per element of N");
  }
  for (auto const& t : j.at("tau")) {
    act.tau.push_back(vector_from_json<Scalar>(t, act.algebra.dim()));
  }
  return act;
}

}  // namespace twistcross

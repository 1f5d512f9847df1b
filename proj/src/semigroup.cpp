#include "twistcross/semigroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "twistcross/partial_bijection.hpp"

namespace twistcross {

FiniteInverseSemigroup::FiniteInverseSemigroup(std::vector<std::vector<Elem>> const& product,
                                               std::vector<Elem>                     star)
    : star_(std::move(star)) {
  std::size_t const n = star_.size();
  if (n == 0) {
    throw InputError("semigroup: empty table");
  }
  if (product.size() != n) {
    throw InputError("semigroup: product table has " + std::to_string(product.size())
                     + " rows, star table " + std::to_string(n) + " entries");
  }
  table_.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (product[a].size() != n) {
      throw InputError("semigroup: product row " + std::to_string(a) + " has wrong length");
    }
    for (Elem x : product[a]) {
      if (x >= n) {
        throw InputError("semigroup: product entry " + std::to_string(x) + " out of range");
      }
      table_.push_back(x);
    }
    if (star_[a] >= n) {
      throw InputError("semigroup: star entry " + std::to_string(star_[a]) + " out of range");
    }
  }
  for (Elem u = 0; u < n && !unit_; ++u) {
    bool ok = true;
    for (Elem s = 0; s < n && ok; ++s) {
      ok = mul(u, s) == s && mul(s, u) == s;
    }
    if (ok) {
      unit_ = u;
    }
  }
  for (Elem z = 0; z < n && !zero_; ++z) {
    bool ok = n > 1;
    for (Elem s = 0; s < n && ok; ++s) {
      ok = mul(z, s) == z && mul(s, z) == z;
    }
    if (ok) {
      zero_ = z;
    }
  }
}

std::vector<Elem> FiniteInverseSemigroup::idempotents() const {
  std::vector<Elem> out;
  for (Elem a = 0; a < size(); ++a) {
    if (is_idempotent(a)) {
      out.push_back(a);
    }
  }
  return out;
}

void FiniteInverseSemigroup::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != size()) {
    throw InputError("semigroup: label count does not match size");
  }
  labels_ = std::move(labels);
}

void FiniteInverseSemigroup::set_words(std::vector<std::vector<std::uint32_t>> words,
                                       std::vector<std::string>                generator_names) {
  if (!words.empty() && words.size() != size()) {
    throw InputError("semigroup: word count does not match size");
  }
  words_           = std::move(words);
  generator_names_ = std::move(generator_names);
}

std::string FiniteInverseSemigroup::label(Elem a) const {
  if (!labels_.empty()) {
    return labels_[a];
  }
  if (!words_.empty() && !generator_names_.empty()) {
    std::string out;
    for (auto g : words_[a]) {
      out += generator_names_[g];
    }
    return out;
  }
  return "#" + std::to_string(a);
}

std::optional<Elem> FiniteInverseSemigroup::find_label(std::string const& label) const {
  for (Elem a = 0; a < size(); ++a) {
    if (this->label(a) == label) {
      return a;
    }
  }
  return std::nullopt;
}

std::vector<std::vector<Elem>> FiniteInverseSemigroup::product_rows() const {
  std::vector<std::vector<Elem>> rows(size());
  for (Elem a = 0; a < size(); ++a) {
    rows[a].assign(table_.begin() + static_cast<std::ptrdiff_t>(a * size()),
                   table_.begin() + static_cast<std::ptrdiff_t>((a + 1) * size()));
  }
  return rows;
}

Group::Group(FiniteInverseSemigroup s) : s_(std::move(s)) {
  if (!s_.unit()) {
    throw InputError("group: no identity element");
  }
  for (Elem g = 0; g < s_.size(); ++g) {
    if (s_.mul(g, s_.star(g)) != *s_.unit() || s_.mul(s_.star(g), g) != *s_.unit()) {
      throw InputError("group: element " + s_.label(g) + " is not invertible");
    }
  }
}

Report verify_inverse_semigroup(FiniteInverseSemigroup const& s, VerifyOptions const& opts) {
  Report            rep("inverse semigroup");
  std::size_t const n   = s.size();
  auto              lab = [&](Elem a) { return s.label(a); };

  auto assoc = [&](Elem a, Elem b, Elem c) {
    if (s.mul(s.mul(a, b), c) != s.mul(a, s.mul(b, c))) {
      rep.check("associativity", false, "(" + lab(a) + "," + lab(b) + "," + lab(c) + ")");
    } else {
      rep.check("associativity", true);
    }
  };
  if (n <= opts.exhaustive_bound) {
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) {
          assoc(a, b, c);
        }
      }
    }
  } else {
    std::mt19937_64                     rng(opts.seed);
    std::uniform_int_distribution<Elem> pick(0, n - 1);
    for (std::size_t k = 0; k < opts.samples; ++k) {
      Elem a = pick(rng), b = pick(rng), c = pick(rng);
      assoc(a, b, c);
    }
    rep.note("associativity sampled on " + std::to_string(opts.samples) + " random triples");
  }

  for (Elem a = 0; a < n; ++a) {
    Elem as = s.star(a);
    rep.check("s s* s = s", s.mul(a, as, a) == a, lab(a));
    rep.check("s* s s* = s*", s.mul(as, a, as) == as, lab(a));
    rep.check("star involutive", s.star(as) == a, lab(a));
    std::size_t inverses = 0;
    for (Elem t = 0; t < n; ++t) {
      if (s.mul(a, t, a) == a && s.mul(t, a, t) == t) {
        ++inverses;
      }
    }
    rep.check("unique inverse", inverses == 1,
              lab(a) + " has " + std::to_string(inverses) + " inverses");
    for (Elem b = 0; b < n; ++b) {
      rep.check("star anti-multiplicative", s.star(s.mul(a, b)) == s.mul(s.star(b), as),
                "(" + lab(a) + "," + lab(b) + ")");
    }
  }
  auto const es = s.idempotents();
  for (Elem e : es) {
    for (Elem f : es) {
      rep.check("idempotents commute", s.mul(e, f) == s.mul(f, e),
                "(" + lab(e) + "," + lab(f) + ")");
    }
  }
  return rep;
}

std::vector<Elem> idempotents(FiniteInverseSemigroup const& s) { return s.idempotents(); }

std::vector<std::vector<bool>> natural_order(FiniteInverseSemigroup const& s) {
  std::vector<std::vector<bool>> out(s.size(), std::vector<bool>(s.size()));
  for (Elem a = 0; a < s.size(); ++a) {
    for (Elem b = 0; b < s.size(); ++b) {
      out[a][b] = s.leq(a, b);
    }
  }
  return out;
}

std::vector<Elem> maximal_elements(FiniteInverseSemigroup const& s) {
  std::vector<Elem> out;
  for (Elem t = 0; t < s.size(); ++t) {
    if (s.zero() && *s.zero() == t && s.size() > 1) {
      continue;
    }
    bool maximal = true;
    for (Elem u = 0; u < s.size() && maximal; ++u) {
      maximal = u == t || !s.leq(t, u);
    }
    if (maximal) {
      out.push_back(t);
    }
  }
  return out;
}

FtildeResult is_ftilde(FiniteInverseSemigroup const& s) {
  FtildeResult out;
  out.zero_designated = s.zero().has_value();
  if (!s.unit()) {
    out.note = "not unital";
    return out;
  }
  if (!out.zero_designated) {
    out.note = "no zero element; every element treated as nonzero";
  }
  auto const maxima = maximal_elements(s);
  out.majorant.assign(s.size(), 0);
  for (Elem t = 0; t < s.size(); ++t) {
    if (s.zero() && *s.zero() == t) {
      out.majorant[t] = t;
      continue;
    }
    std::size_t count = 0;
    for (Elem m : maxima) {
      if (s.leq(t, m)) {
        out.majorant[t] = m;
        ++count;
      }
    }
    if (count != 1) {
      out.witness = t;
      out.majorant.clear();
      out.note = s.label(t) + " lies under " + std::to_string(count) + " maximal elements";
      return out;
    }
  }
  out.ftilde = true;
  return out;
}

Quotient quotient_by_partition(FiniteInverseSemigroup const& s, std::vector<std::vector<Elem>> classes) {
  std::size_t const n = s.size();
  for (auto& c : classes) {
    std::sort(c.begin(), c.end());
    if (c.empty()) {
      throw InputError("quotient: empty class");
    }
  }
  std::sort(classes.begin(), classes.end());
  std::vector<Elem> proj(n, n);
  for (Elem k = 0; k < classes.size(); ++k) {
    for (Elem a : classes[k]) {
      if (a >= n) {
        throw InputError("quotient: element " + std::to_string(a) + " out of range");
      }
      if (proj[a] != n) {
        throw InputError("quotient: element " + s.label(a) + " appears in two classes");
      }
      proj[a] = k;
    }
  }
  for (Elem a = 0; a < n; ++a) {
    if (proj[a] == n) {
      throw InputError("quotient: element " + s.label(a) + " is in no class");
    }
  }
  std::size_t const              m = classes.size();
  std::vector<std::vector<Elem>> product(m, std::vector<Elem>(m));
  std::vector<Elem>              star(m);
  for (Elem p = 0; p < m; ++p) {
    star[p] = proj[s.star(classes[p][0])];
    for (Elem a : classes[p]) {
      if (proj[s.star(a)] != star[p]) {
        throw InputError("quotient: star not compatible at " + s.label(a));
      }
    }
    for (Elem q = 0; q < m; ++q) {
      product[p][q] = proj[s.mul(classes[p][0], classes[q][0])];
    }
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (proj[s.mul(a, b)] != product[proj[a]][proj[b]]) {
        throw InputError("quotient: partition is not a congruence at (" + s.label(a) + ","
                         + s.label(b) + ")");
      }
    }
  }
  Quotient out{FiniteInverseSemigroup(product, std::move(star)), std::move(proj), std::move(classes)};
  std::vector<std::string> labels;
  for (auto const& c : out.classes) {
    labels.push_back("[" + s.label(c[0]) + "]");
  }
  out.semigroup.set_labels(std::move(labels));
  return out;
}

std::vector<std::vector<Elem>> minimum_group_congruence(FiniteInverseSemigroup const& s) {
  auto const        es = s.idempotents();
  std::size_t const n  = s.size();
  std::vector<Elem> rep(n, n);
  std::vector<std::vector<Elem>> classes;
  for (Elem a = 0; a < n; ++a) {
    if (rep[a] != n) {
      continue;
    }
    rep[a] = classes.size();
    std::vector<Elem> cls{a};
    for (Elem b = a + 1; b < n; ++b) {
      if (rep[b] != n) {
        continue;
      }
      bool related = std::any_of(es.begin(), es.end(),
                                 [&](Elem e) { return s.mul(e, a) == s.mul(e, b); });
      if (related) {
        rep[b] = rep[a];
        cls.push_back(b);
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

GroupImage max_group_image(FiniteInverseSemigroup const& s) {
  auto q = quotient_by_partition(s, minimum_group_congruence(s));
  return GroupImage{Group(std::move(q.semigroup)), std::move(q.projection)};
}

FiniteInverseSemigroup adjoin_unit(FiniteInverseSemigroup const& s) {
  if (s.unit()) {
    return s;
  }
  std::size_t const n    = s.size();
  auto              rows = s.product_rows();
  for (Elem a = 0; a < n; ++a) {
    rows[a].push_back(a);
  }
  std::vector<Elem> last(n + 1);
  std::iota(last.begin(), last.end(), Elem{0});
  rows.push_back(std::move(last));
  auto star = s.star_table();
  star.push_back(n);
  FiniteInverseSemigroup out(rows, std::move(star));
  std::vector<std::string> labels;
  for (Elem a = 0; a < n; ++a) {
    labels.push_back(s.label(a));
  }
  labels.push_back("1");
  out.set_labels(std::move(labels));
  return out;
}

Group cyclic_group(std::size_t n) {
  if (n == 0) {
    throw InputError("cyclic_group: order must be positive");
  }
  std::vector<std::vector<Elem>> product(n, std::vector<Elem>(n));
  std::vector<Elem>              star(n);
  std::vector<std::string>       labels(n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      product[a][b] = (a + b) % n;
    }
    star[a]   = (n - a) % n;
    labels[a] = std::to_string(a);
  }
  FiniteInverseSemigroup s(product, std::move(star));
  s.set_labels(std::move(labels));
  return Group(std::move(s));
}

Generated<PartialBijection> generate_partial_bijections(std::vector<PartialBijection> const& generators,
                                                        std::size_t                          cap) {
  auto gen = generate<PartialBijection>(
      generators, [](PartialBijection const& f, PartialBijection const& g) { return compose(f, g); },
      [](PartialBijection const& f) { return star(f); }, cap);
  std::vector<std::string> labels;
  for (auto const& f : gen.elements) {
    labels.push_back(f.to_string());
  }
  gen.semigroup.set_labels(std::move(labels));
  return gen;
}

FiniteInverseSemigroup symmetric_inverse_monoid(std::size_t degree) {
  if (degree == 0 || degree > 5) {
    throw InputError("symmetric_inverse_monoid: degree must be in 1..5");
  }
  using V = PartialBijection::value_type;
  std::vector<PartialBijection> all;
  std::vector<V>                im(degree, 0);
  std::vector<bool>             used(degree + 1, false);
  auto rec = [&](auto& self, std::size_t i) -> void {
    if (i == degree) {
      all.emplace_back(im);
      return;
    }
    for (V a = 0; a <= degree; ++a) {
      if (a != 0 && used[a]) {
        continue;
      }
      im[i] = a;
      if (a != 0) {
        used[a] = true;
      }
      self(self, i + 1);
      if (a != 0) {
        used[a] = false;
      }
    }
    im[i] = 0;
  };
  rec(rec, 0);
  return generate_partial_bijections(all, all.size()).semigroup;
}

}  // namespace twistcross

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "twistcross/error.hpp"
#include "twistcross/partial_bijection.hpp"
#include "twistcross/report.hpp"

namespace twistcross {

using Elem = std::size_t;

// Finite inverse semigroup given by its Cayley table and involution. Unit
// and zero are detected from the table.
class FiniteInverseSemigroup {
 public:
  FiniteInverseSemigroup() = default;
  FiniteInverseSemigroup(std::vector<std::vector<Elem>> const& product, std::vector<Elem> star);

  std::size_t size() const noexcept { return star_.size(); }

  Elem mul(Elem a, Elem b) const { return table_[a * size() + b]; }
  Elem mul(Elem a, Elem b, Elem c) const { return mul(mul(a, b), c); }
  Elem star(Elem a) const { return star_[a]; }

  std::optional<Elem> unit() const noexcept { return unit_; }
  std::optional<Elem> zero() const noexcept { return zero_; }

  bool is_idempotent(Elem a) const { return mul(a, a) == a; }
  std::vector<Elem> idempotents() const;

  // s <= t iff s = t s* s.
  bool leq(Elem s, Elem t) const { return s == mul(t, star(s), s); }

  // Domain and range idempotents s*s and ss*.
  Elem source(Elem s) const { return mul(star(s), s); }
  Elem target(Elem s) const { return mul(s, star(s)); }

  void set_labels(std::vector<std::string> labels);
  void set_words(std::vector<std::vector<std::uint32_t>> words,
                 std::vector<std::string>              generator_names);

  std::string label(Elem a) const;
  std::vector<std::string> const& labels() const noexcept { return labels_; }
  std::vector<std::vector<std::uint32_t>> const& words() const noexcept { return words_; }
  std::vector<std::string> const& generator_names() const noexcept { return generator_names_; }

  // Index of the element with the given label, if any.
  std::optional<Elem> find_label(std::string const& label) const;

  std::vector<std::vector<Elem>> product_rows() const;
  std::vector<Elem> const&       star_table() const noexcept { return star_; }

  friend bool operator==(FiniteInverseSemigroup const& a, FiniteInverseSemigroup const& b) {
    return a.table_ == b.table_ && a.star_ == b.star_;
  }

 private:
  std::vector<Elem>                        table_;
  std::vector<Elem>                        star_;
  std::optional<Elem>                      unit_;
  std::optional<Elem>                      zero_;
  std::vector<std::string>                 labels_;
  std::vector<std::vector<std::uint32_t>>  words_;
  std::vector<std::string>                 generator_names_;
};

// A finite inverse semigroup in which every element is a unit.
class Group {
 public:
  explicit Group(FiniteInverseSemigroup s);

  FiniteInverseSemigroup const& semigroup() const noexcept { return s_; }
  std::size_t                   order() const noexcept { return s_.size(); }
  Elem                          identity() const noexcept { return *s_.unit(); }
  Elem                          mul(Elem a, Elem b) const { return s_.mul(a, b); }
  Elem                          inverse(Elem a) const { return s_.star(a); }
  std::string                   label(Elem a) const { return s_.label(a); }

 private:
  FiniteInverseSemigroup s_;
};

template <typename T>
struct Generated {
  FiniteInverseSemigroup semigroup;
  std::vector<T>         elements;
};

// Closure of `generators` under `multiply` and `star_of`. Elements are indexed
// in breadth-first order over generator words, the extended generator list
// being the generators followed by their new stars. Throws LimitError once
// more than `cap` elements appear.
template <typename T, typename Hash = std::hash<T>, typename Mul, typename Star>
Generated<T> generate(std::vector<T> const& generators, Mul multiply, Star star_of, std::size_t cap) {
  if (generators.empty()) {
    throw InputError("generate: empty generator list");
  }
  std::vector<T>                     gens;
  std::vector<std::string>           gen_names;
  std::unordered_map<T, Elem, Hash>  index;
  std::vector<T>                     elements;
  std::vector<std::vector<std::uint32_t>> words;

  auto add = [&](T const& x, std::vector<std::uint32_t> word) -> bool {
    if (index.count(x) != 0) {
      return false;
    }
    if (elements.size() >= cap) {
      throw LimitError("generate: closure exceeds cap " + std::to_string(cap), elements.size());
    }
    index.emplace(x, elements.size());
    elements.push_back(x);
    words.push_back(std::move(word));
    return true;
  };

  for (std::size_t i = 0; i < generators.size(); ++i) {
    gens.push_back(generators[i]);
    gen_names.push_back("g" + std::to_string(i));
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    T s = star_of(generators[i]);
    bool seen = false;
    for (auto const& g : gens) {
      seen = seen || g == s;
    }
    if (!seen) {
      gens.push_back(std::move(s));
      gen_names.push_back("g" + std::to_string(i) + "*");
    }
  }
  for (std::uint32_t j = 0; j < gens.size(); ++j) {
    add(gens[j], {j});
  }

  std::vector<std::vector<Elem>> right;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    std::vector<Elem> row(gens.size());
    for (std::uint32_t j = 0; j < gens.size(); ++j) {
      T x = multiply(elements[i], gens[j]);
      auto it = index.find(x);
      if (it == index.end()) {
        auto w = words[i];
        w.push_back(j);
        add(x, std::move(w));
        it = index.find(x);
      }
      row[j] = it->second;
    }
    right.push_back(std::move(row));
  }

  std::size_t const              n = elements.size();
  std::vector<std::vector<Elem>> product(n, std::vector<Elem>(n));
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      Elem x = a;
      for (auto g : words[b]) {
        x = right[x][g];
      }
      product[a][b] = x;
    }
  }
  std::vector<Elem> star(n);
  for (Elem a = 0; a < n; ++a) {
    auto it = index.find(star_of(elements[a]));
    if (it == index.end()) {
      throw Error("generate: star of an element escaped the closure");
    }
    star[a] = it->second;
  }
  Generated<T> out{FiniteInverseSemigroup(product, std::move(star)), std::move(elements)};
  out.semigroup.set_words(std::move(words), std::move(gen_names));
  return out;
}

// Closure of partial bijections under composition and inversion; elements
// are labelled in tuple notation.
Generated<PartialBijection> generate_partial_bijections(std::vector<PartialBijection> const& generators,
                                                        std::size_t cap = 100000);

struct VerifyOptions {
  std::size_t   exhaustive_bound = 64;
  std::size_t   samples          = 10000;
  std::uint64_t seed             = 0;
};

// Checks associativity, the inverse laws, uniqueness of inverses,
// commutation of idempotents and the anti-automorphism property of star.
Report verify_inverse_semigroup(FiniteInverseSemigroup const& s, VerifyOptions const& opts = {});

std::vector<Elem> idempotents(FiniteInverseSemigroup const& s);

// Row-major boolean matrix: entry (a, b) is 1 iff a <= b.
std::vector<std::vector<bool>> natural_order(FiniteInverseSemigroup const& s);

struct FtildeResult {
  bool                ftilde = false;
  bool                zero_designated = false;
  std::vector<Elem>   majorant;  // m_t; the zero maps to itself
  std::optional<Elem> witness;   // element with 0 or at least 2 maximal majorants
  std::string         note;
};

FtildeResult is_ftilde(FiniteInverseSemigroup const& s);

// Maximal elements of the natural order (excluding a designated zero).
std::vector<Elem> maximal_elements(FiniteInverseSemigroup const& s);

struct Quotient {
  FiniteInverseSemigroup         semigroup;
  std::vector<Elem>              projection;
  std::vector<std::vector<Elem>> classes;  // sorted, ordered by least member
};

// Quotient by a partition; throws InputError when the partition is not a
// congruence or does not cover every element exactly once.
Quotient quotient_by_partition(FiniteInverseSemigroup const& s, std::vector<std::vector<Elem>> classes);

// Classes of the minimum group congruence: s ~ t iff es = et for some
// idempotent e.
std::vector<std::vector<Elem>> minimum_group_congruence(FiniteInverseSemigroup const& s);

struct GroupImage {
  Group             group;
  std::vector<Elem> projection;
};

GroupImage max_group_image(FiniteInverseSemigroup const& s);

FiniteInverseSemigroup adjoin_unit(FiniteInverseSemigroup const& s);

Group                  cyclic_group(std::size_t n);
FiniteInverseSemigroup symmetric_inverse_monoid(std::size_t degree);

}  // namespace twistcross

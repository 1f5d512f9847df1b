#include "twistcross/exel.hpp"

#include <algorithm>
#include <unordered_map>

namespace twistcross {

namespace {

void require_carrier(std::shared_ptr<Group const> const& g) {
  if (!g) {
    throw InputError("S(G): null carrier");
  }
  if (g->order() > kMaxExelGroupOrder) {
    throw LimitError("S(G): group order exceeds " + std::to_string(kMaxExelGroupOrder), g->order());
  }
}

std::uint64_t bit(Elem g) { return std::uint64_t{1} << g; }

// Image of the subset P under left multiplication by g.
std::uint64_t left_translate(Group const& grp, Elem g, std::uint64_t P) {
  std::uint64_t out = 0;
  for (Elem h = 0; h < grp.order(); ++h) {
    if ((P >> h) & 1u) {
      out |= bit(grp.mul(g, h));
    }
  }
  return out;
}

std::string element_name(Group const& grp, Elem g) {
  return g == grp.identity() ? std::string("e") : grp.label(g);
}

}  // namespace

std::vector<Elem> ExelElement::brackets() const {
  std::vector<Elem> out;
  for (Elem g = 0; g < 64; ++g) {
    if (contains(g)) {
      out.push_back(g);
    }
  }
  return out;
}

ExelElement make_exel(std::shared_ptr<Group const> carrier, std::vector<Elem> const& brackets, Elem s) {
  require_carrier(carrier);
  std::uint64_t P = 0;
  for (Elem g : brackets) {
    if (g >= carrier->order()) {
      throw InputError("S(G): bracket " + std::to_string(g) + " outside the group");
    }
    P |= bit(g);
  }
  if (s >= carrier->order()) {
    throw InputError("S(G): tail " + std::to_string(s) + " outside the group");
  }
  if (!(P & bit(carrier->identity())) || !(P & bit(s))) {
    throw InputError("S(G): P must contain e and s");
  }
  return {std::move(carrier), P, s};
}

ExelElement exel_unit(std::shared_ptr<Group const> carrier) {
  require_carrier(carrier);
  Elem e = carrier->identity();
  return {std::move(carrier), bit(e), e};
}

ExelElement embed(std::shared_ptr<Group const> carrier, Elem g) {
  require_carrier(carrier);
  if (g >= carrier->order()) {
    throw InputError("S(G): embed of an element outside the group");
  }
  return {carrier, bit(carrier->identity()) | bit(g), g};
}

ExelElement multiply(ExelElement const& x, ExelElement const& y) {
  if (x.carrier != y.carrier) {
    throw InputError("S(G): multiplication across different groups");
  }
  auto const& grp = *x.carrier;
  return {x.carrier, x.P | left_translate(grp, x.s, y.P), grp.mul(x.s, y.s)};
}

ExelElement star(ExelElement const& x) {
  auto const& grp = *x.carrier;
  Elem        inv = grp.inverse(x.s);
  return {x.carrier, left_translate(grp, inv, x.P), inv};
}

bool is_idempotent(ExelElement const& x) { return x.s == x.carrier->identity(); }

std::string to_canonical_string(ExelElement const& x) {
  auto const& grp = *x.carrier;
  std::string out;
  for (Elem g : x.brackets()) {
    if (g != grp.identity() && g != x.s) {
      out += "[" + element_name(grp, g) + "][" + element_name(grp, g) + "^-1]";
    }
  }
  return out + "[" + element_name(grp, x.s) + "]";
}

Elem ExelSemigroup::index_of(ExelElement const& x) const {
  if (x.carrier != carrier) {
    throw InputError("S(G): element of a different group");
  }
  auto it = std::find(elements.begin(), elements.end(), x);
  if (it == elements.end()) {
    throw InputError("S(G): malformed element " + to_canonical_string(x));
  }
  return static_cast<Elem>(it - elements.begin());
}

ExelSemigroup enumerate_SG(std::shared_ptr<Group const> carrier, std::size_t max_size) {
  require_carrier(carrier);
  std::size_t const n = carrier->order();
  Elem const        e = carrier->identity();
  std::size_t const count = n == 1 ? 1 : (std::size_t{1} << (n - 2)) * (n + 1);
  if (n >= 40 || count > max_size) {
    throw LimitError("S(G): " + std::to_string(n) + "-element group exceeds the size guard", 0);
  }
  ExelSemigroup out{carrier, {}, {}};
  std::unordered_map<std::uint64_t, Elem> index;  // key: P * 64 + s
  for (Elem s = 0; s < n; ++s) {
    std::uint64_t must = bit(e) | bit(s);
    for (std::uint64_t P = 0; P < (std::uint64_t{1} << n); ++P) {
      if ((P & must) == must) {
        index[P * 64 + s] = static_cast<Elem>(out.elements.size());
        out.elements.push_back({carrier, P, s});
      }
    }
  }
  std::size_t const           size = out.elements.size();
  std::vector<std::vector<Elem>> product(size, std::vector<Elem>(size));
  std::vector<Elem>              inv(size);
  std::vector<std::string>       labels(size);
  for (Elem a = 0; a < size; ++a) {
    auto const& x = out.elements[a];
    for (Elem b = 0; b < size; ++b) {
      auto const z  = multiply(x, out.elements[b]);
      product[a][b] = index.at(z.P * 64 + z.s);
    }
    auto const xs = star(x);
    inv[a]        = index.at(xs.P * 64 + xs.s);
    labels[a]     = to_canonical_string(x);
  }
  out.semigroup = FiniteInverseSemigroup(std::move(product), std::move(inv));
  out.semigroup.set_labels(std::move(labels));
  return out;
}

bool is_exel_semigroup(ExelSemigroup const& s) {
  if (!s.carrier || s.elements.size() != s.semigroup.size()) {
    return false;
  }
  std::size_t const n = s.carrier->order();
  if (s.elements.size() != (n == 1 ? 1 : (std::size_t{1} << (n - 2)) * (n + 1))) {
    return false;
  }
  for (auto const& x : s.elements) {
    if (x.carrier != s.carrier || !x.contains(s.carrier->identity()) || !x.contains(x.s)) {
      return false;
    }
  }
  for (Elem a = 0; a < s.elements.size(); ++a) {
    if (!(s.elements[s.semigroup.star(a)] == star(s.elements[a]))) {
      return false;
    }
    for (Elem b = 0; b < s.elements.size(); ++b) {
      if (!(s.elements[s.semigroup.mul(a, b)] == multiply(s.elements[a], s.elements[b]))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace twistcross

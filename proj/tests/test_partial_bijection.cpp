#include <doctest.h>

#include <random>

#include "twistcross/error.hpp"
#include "twistcross/partial_bijection.hpp"

using namespace twistcross;

namespace {

PartialBijection pb(char const* text) { return PartialBijection::parse(text); }

// Coordinate-wise evaluation of f(g(x)), independent of compose().
std::vector<std::uint32_t> evaluate(PartialBijection const& f, PartialBijection const& g) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 1; x <= g.degree(); ++x) {
    std::uint32_t y = g(x);
    out.push_back(y == 0 ? 0 : f(y));
  }
  return out;
}

PartialBijection random_pb(std::mt19937& rng, std::size_t n) {
  std::vector<std::uint32_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) {
    perm[i] = static_cast<std::uint32_t>(i + 1);
  }
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution keep(0.6);
  for (auto& a : perm) {
    if (!keep(rng)) {
      a = 0;
    }
  }
  return PartialBijection(perm);
}

}  // namespace

TEST_CASE("products of the two degree-6 generators") {
  auto r = pb("(1,4,5,0,0,0)");
  auto s = pb("(0,5,4,0,0,6)");
  CHECK(compose(star(s), r) == pb("(0,3,2,0,0,0)"));
  CHECK(compose(star(s), r).image() == evaluate(star(s), r));
  CHECK(compose(PartialBijection::identity(6), r) == r);
  CHECK(compose(r, star(r)) == pb("(1,0,0,4,5,0)"));
  CHECK(compose(r, star(s)) == pb("(0,0,0,5,4,0)"));
  CHECK(compose(s, star(s), r) == pb("(0,4,5,0,0,0)"));
}

TEST_CASE("star inverts coordinate-wise") {
  CHECK(star(pb("(1,4,5,0,0,0)")) == pb("(1,0,0,2,3,0)"));
  CHECK(star(PartialBijection::empty(4)) == PartialBijection::empty(4));
}

TEST_CASE("natural order is restriction") {
  CHECK(natural_leq(pb("(0,4,5,0,0,0)"), pb("(1,4,5,0,0,0)")));
  CHECK_FALSE(natural_leq(pb("(1,4,5,0,0,0)"), pb("(0,4,5,0,0,0)")));
  auto f = pb("(3,0,1)");
  CHECK(natural_leq(f, f));
}

TEST_CASE("parse and format") {
  auto r = pb("(1,4,5,0,0,0)");
  CHECK(r.degree() == 6);
  CHECK(r(1) == 1);
  CHECK(r(2) == 4);
  CHECK(r(3) == 5);
  CHECK(r.domain() == std::vector<std::uint32_t>{1, 2, 3});
  CHECK(r.range() == std::vector<std::uint32_t>{1, 4, 5});
  CHECK(pb("(0,0,0,0,0,0)") == PartialBijection::empty(6));
  for (char const* t : {"(1,4,5,0,0,0)", "(0,0,0,0,0,0)", "(2,1)", "(1)"}) {
    CHECK(pb(t).to_string() == t);
  }
  CHECK(pb(" 2, 1 ") == pb("(2,1)"));
  CHECK_THROWS_AS(pb("(1,1,0)"), InputError);
  CHECK_THROWS_AS(pb("(4,0,0)"), InputError);
  CHECK_THROWS_AS(pb("(1,x)"), InputError);
  CHECK_THROWS_AS(pb("(1,2"), InputError);
  CHECK_THROWS_AS(compose(pb("(1,2)"), pb("(1,2,3)")), InputError);
  CHECK_THROWS_AS(natural_leq(pb("(1,2)"), pb("(1,2,3)")), InputError);
}

TEST_CASE("inverse-semigroup laws on random partial bijections") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + trial % 7;
    auto f = random_pb(rng, n);
    auto g = random_pb(rng, n);
    auto h = random_pb(rng, n);
    CHECK(compose(f, star(f), f) == f);
    CHECK(compose(star(f), f, star(f)) == star(f));
    CHECK(star(star(f)) == f);
    CHECK(compose(f, g).image() == evaluate(f, g));
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    CHECK(star(compose(f, g)) == compose(star(g), star(f)));

    auto e1 = compose(f, star(f));
    auto e2 = compose(star(g), g);
    CHECK(is_idempotent(e1));
    CHECK(compose(e1, e2) == compose(e2, e1));
    bool identity_on_subset = true;
    for (std::uint32_t x = 1; x <= n; ++x) {
      identity_on_subset = identity_on_subset && (e1(x) == 0 || e1(x) == x);
    }
    CHECK(identity_on_subset);
    CHECK(is_idempotent(h) == (compose(h, h) == h));

    CHECK(natural_leq(f, g) == (f == compose(g, star(f), f)));
    if (natural_leq(f, g)) {
      CHECK(natural_leq(compose(h, f), compose(h, g)));
      CHECK(natural_leq(compose(f, h), compose(g, h)));
      if (natural_leq(g, f)) {
        CHECK(f == g);
      }
    }
    auto ef = compose(f, e2);
    CHECK(natural_leq(ef, f));
    if (natural_leq(ef, g) && natural_leq(g, f)) {
      CHECK(natural_leq(ef, f));
    }
  }
}

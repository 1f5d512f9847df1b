#include <doctest.h>

#include "oracles.hpp"
#include "twistcross/congruence.hpp"

using namespace twistcross;

namespace {

PartialBijection pb(char const* text) { return PartialBijection::parse(text); }

struct Ex19 {
  Generated<PartialBijection> g;
  Elem                        sr, srsr, rs, rsrs;
  std::vector<std::vector<Elem>> partition;
};

Ex19 ex19() {
  Ex19 out{generate_partial_bijections({pb("(1,4,5,0,0,0)"), pb("(0,5,4,0,0,6)")}), 0, 0, 0, 0, {}};
  auto idx = [&](PartialBijection const& f) {
    return static_cast<Elem>(std::find(out.g.elements.begin(), out.g.elements.end(), f) - out.g.elements.begin());
  };
  auto r  = pb("(1,4,5,0,0,0)");
  auto s  = pb("(0,5,4,0,0,6)");
  auto sr = compose(star(s), r);
  auto rs = compose(r, star(s));
  out.sr   = idx(sr);
  out.srsr = idx(compose(sr, sr));
  out.rs   = idx(rs);
  out.rsrs = idx(compose(rs, rs));
  out.partition = {{out.sr, out.srsr}, {out.rs, out.rsrs}};
  for (Elem a = 0; a < out.g.semigroup.size(); ++a) {
    if (a != out.sr && a != out.srsr && a != out.rs && a != out.rsrs) {
      out.partition.push_back({a});
    }
  }
  return out;
}

FiniteInverseSemigroup s3() {
  return generate_partial_bijections({pb("(2,1,3)"), pb("(2,3,1)")}).semigroup;
}

// All subsets between E and the idempotent centralizer passing the
// normal-Clifford check.
std::vector<Subset> brute_normal_clifford(FiniteInverseSemigroup const& s) {
  auto   z  = idempotent_centralizer(s);
  auto   es = s.idempotents();
  Subset extra;
  for (Elem a : z) {
    if (!s.is_idempotent(a)) {
      extra.push_back(a);
    }
  }
  REQUIRE(extra.size() < 16);
  std::vector<Subset> out;
  for (std::uint32_t mask = 0; mask < (1u << extra.size()); ++mask) {
    Subset n = es;
    for (std::size_t i = 0; i < extra.size(); ++i) {
      if (mask & (1u << i)) {
        n.push_back(extra[i]);
      }
    }
    std::sort(n.begin(), n.end());
    if (is_normal_clifford(s, n).ok()) {
      out.push_back(n);
    }
  }
  return out;
}

bool same_family(std::vector<Subset> a, std::vector<Subset> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

TEST_CASE("the kernel normal system of the 19-element example") {
  auto e  = ex19();
  auto const& s = e.g.semigroup;

  // Kernel union: the idempotents together with s*r and rs*.
  Subset n = s.idempotents();
  n.push_back(e.sr);
  n.push_back(e.rs);
  std::sort(n.begin(), n.end());
  CHECK(n.size() == 11);
  CHECK(is_normal_clifford(s, n).ok());

  auto c = congruence_from_normal_clifford(s, n);
  CHECK(is_congruence(s, c).ok());
  CHECK(is_idempotent_separating(s, c));
  CHECK(kernel_union(s, c) == n);

  auto kns = kernel_normal_system(s, c);
  CHECK(kns.size() == 9);
  std::size_t nontrivial = 0;
  for (auto const& k : kns) {
    if (k.members.size() == 2) {
      ++nontrivial;
      bool first  = k.members == Subset{std::min(e.sr, e.srsr), std::max(e.sr, e.srsr)};
      bool second = k.members == Subset{std::min(e.rs, e.rsrs), std::max(e.rs, e.rsrs)};
      CHECK((first || second));
    } else {
      CHECK(k.members.size() == 1);
      CHECK(s.is_idempotent(k.members[0]));
    }
  }
  CHECK(nontrivial == 2);

  // The smallest congruence identifying each kernel pair is the same one.
  auto closure = oracle::congruence_closure(s, {{e.sr, e.srsr}, {e.rs, e.rsrs}});
  CHECK(Congruence(s.size(), closure) == c);

  // Propagating the two kernel pairs merges two further pairs, among them
  // the class of ss*r = (0,4,5,0,0,0) with (0,5,4,0,0,0).
  CHECK(c.class_count() == 15);
  auto ssr = *s.find_label("(0,4,5,0,0,0)");
  auto alt = *s.find_label("(0,5,4,0,0,0)");
  CHECK(c.related(ssr, alt));

  // Keeping every non-kernel element as a singleton is not a congruence.
  CHECK_FALSE(is_congruence(s, e.partition).ok());

  auto q = quotient(s, c);
  CHECK(q.semigroup.size() == 15);
  CHECK(q.semigroup.idempotents().size() == s.idempotents().size());
  CHECK(verify_inverse_semigroup(q.semigroup).ok());
}

TEST_CASE("trivial congruences") {
  auto const& s = ex19().g.semigroup;
  auto id = Congruence::identity(s.size());
  CHECK(is_congruence(s, id).ok());
  CHECK(kernel_normal_system(s, id).size() == s.idempotents().size());
  CHECK(quotient(s, id).semigroup == s);

  auto es = s.idempotents();
  auto c  = congruence_from_normal_clifford(s, es);
  CHECK(c == id);

  FiniteInverseSemigroup two({{0, 1}, {1, 1}}, {0, 1});
  Congruence all(2, {{0, 1}});
  CHECK(is_congruence(two, all).ok());
  CHECK_FALSE(is_idempotent_separating(two, all));

  CHECK_THROWS_AS(Congruence(3, {{0, 1}}), InputError);
  CHECK_THROWS_AS(Congruence(2, {{0, 1}, {1}}), InputError);
}

TEST_CASE("non-congruence partitions are reported") {
  auto const& s = ex19().g.semigroup;
  std::vector<std::vector<Elem>> bad{{0, 1}};
  for (Elem a = 2; a < s.size(); ++a) {
    bad.push_back({a});
  }
  auto rep = is_congruence(s, bad);
  CHECK_FALSE(rep.ok());
}

TEST_CASE("groups: normal Clifford subsemigroups are normal subgroups") {
  auto z4 = cyclic_group(4).semigroup();
  auto nz = enumerate_normal_clifford(z4);
  CHECK(nz == std::vector<Subset>{{0}, {0, 2}, {0, 1, 2, 3}});
  auto c = congruence_from_normal_clifford(z4, {0, 2});
  CHECK(c.classes() == std::vector<std::vector<Elem>>{{0, 2}, {1, 3}});
  auto q = quotient(z4, c);
  CHECK(q.semigroup.size() == 2);
  auto kns = kernel_normal_system(z4, c);
  REQUIRE(kns.size() == 1);
  CHECK(kns[0].members == Subset{0, 2});

  auto sym = s3();
  CHECK(sym.size() == 6);
  auto ns = enumerate_normal_clifford(sym);
  CHECK(ns.size() == 3);
  CHECK(ns[1].size() == 3);
}

TEST_CASE("semilattice has only E") {
  std::vector<std::vector<Elem>> p{{0, 1, 2}, {1, 1, 2}, {2, 2, 2}};
  FiniteInverseSemigroup chain(p, {0, 1, 2});
  CHECK(enumerate_normal_clifford(chain) == std::vector<Subset>{{0, 1, 2}});
}

TEST_CASE("enumeration agrees with exhaustive subset search") {
  std::vector<FiniteInverseSemigroup> cases{ex19().g.semigroup, symmetric_inverse_monoid(2),
                                            symmetric_inverse_monoid(3), cyclic_group(6).semigroup(), s3()};
  for (auto const& s : cases) {
    auto list = enumerate_normal_clifford(s, 40);
    CHECK(same_family(list, brute_normal_clifford(s)));
    CHECK(list.front() == s.idempotents());
    CHECK(list.back() == idempotent_centralizer(s));
    for (std::size_t i = 1; i < list.size(); ++i) {
      CHECK(list[i - 1].size() <= list[i].size());
    }
  }
  auto list19 = enumerate_normal_clifford(ex19().g.semigroup);
  auto e      = ex19();
  Subset n    = e.g.semigroup.idempotents();
  n.push_back(e.sr);
  n.push_back(e.rs);
  std::sort(n.begin(), n.end());
  CHECK(std::find(list19.begin(), list19.end(), n) != list19.end());
}

TEST_CASE("normal Clifford subsemigroups and separating congruences correspond") {
  std::vector<FiniteInverseSemigroup> cases{ex19().g.semigroup, symmetric_inverse_monoid(3),
                                            cyclic_group(6).semigroup(), s3()};
  for (auto const& s : cases) {
    for (auto const& n : enumerate_normal_clifford(s, 40)) {
      auto c = congruence_from_normal_clifford(s, n);
      CHECK(is_congruence(s, c).ok());
      CHECK(is_idempotent_separating(s, c));
      CHECK(kernel_union(s, c) == n);
      for (auto const& k : kernel_normal_system(s, c)) {
        for (Elem m : k.members) {
          CHECK(s.target(m) == k.idempotent);
          CHECK(s.source(m) == k.idempotent);
        }
      }
      auto q = quotient(s, c);
      for (Elem a = 0; a < s.size(); ++a) {
        CHECK(q.projection[s.star(a)] == q.semigroup.star(q.projection[a]));
        for (Elem b = 0; b < s.size(); ++b) {
          if (s.leq(a, b)) {
            CHECK(q.semigroup.leq(q.projection[a], q.projection[b]));
          }
        }
      }
      // Reverse direction: the congruence generated by the kernel pairs.
      std::vector<std::pair<Elem, Elem>> pairs;
      for (auto const& k : kernel_normal_system(s, c)) {
        for (Elem m : k.members) {
          pairs.emplace_back(k.idempotent, m);
        }
      }
      CHECK(Congruence(s.size(), oracle::congruence_closure(s, pairs)) == c);
    }
  }
}

TEST_CASE("non-normal subsets are rejected with the clause name") {
  auto sym = s3();
  auto ns  = enumerate_normal_clifford(sym);
  // A transposition subgroup is not normal.
  Subset h{*sym.unit()};
  for (Elem a = 0; a < sym.size(); ++a) {
    if (a != *sym.unit() && sym.mul(a, a) == *sym.unit()) {
      h.push_back(a);
      break;
    }
  }
  std::sort(h.begin(), h.end());
  try {
    congruence_from_normal_clifford(sym, h);
    FAIL("expected ConstructionError");
  } catch (ConstructionError const& e) {
    CHECK(e.clause() == "normal");
  }
  try {
    congruence_from_normal_clifford(sym, {});
    FAIL("expected ConstructionError");
  } catch (ConstructionError const& e) {
    CHECK(e.clause() == "contains idempotents");
  }
  CHECK_THROWS_AS(enumerate_normal_clifford(symmetric_inverse_monoid(3)), LimitError);
}

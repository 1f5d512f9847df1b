#include <doctest.h>

#include "fixtures.hpp"
#include "twistcross/cross_section.hpp"

using namespace twistcross;
using fixture::pb;

namespace {

// Every order-preserving section, by exhaustive enumeration.
std::vector<CrossSection> all_sections(FiniteInverseSemigroup const& s, Congruence const& cong) {
  std::vector<CrossSection> out;
  CrossSection              c{std::vector<Elem>(cong.class_count())};
  auto rec = [&](auto& self, std::size_t k) -> void {
    if (k == cong.class_count()) {
      if (is_order_preserving(s, cong, c).ok()) {
        out.push_back(c);
      }
      return;
    }
    for (Elem a : cong.members(k)) {
      c.image[k] = a;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::size_t section_count(Congruence const& cong) {
  std::size_t n = 1;
  for (auto const& cls : cong.classes()) {
    n *= cls.size();
  }
  return n;
}

}  // namespace

TEST_CASE("the 19-element example has no order-preserving cross-section") {
  auto const  ex   = fixture::ex19();
  auto const& s    = ex.semigroup();
  auto const  cong = congruence_from_normal_clifford(s, ex.kernel());
  REQUIRE(cong.class_count() == 15);

  auto const found = find_order_preserving(s, cong);
  CHECK_FALSE(found.section.has_value());
  bool named = false;
  for (auto const& ob : found.obstructions) {
    bool pair = (ob.first == cong.class_of(ex.r) && ob.second == cong.class_of(ex.s))
                || (ob.first == cong.class_of(ex.s) && ob.second == cong.class_of(ex.r));
    named = named || (ob.below == cong.class_of(ex.ssr) && pair);
  }
  CHECK(named);

  CHECK(section_count(cong) == 16);
  CHECK(all_sections(s, cong).empty());
  CrossSection c{std::vector<Elem>(cong.class_count())};
  for (Elem k = 0; k < cong.class_count(); ++k) {
    c.image[k] = cong.representative(k);
  }
  auto const rep = is_order_preserving(s, cong, c);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.passed("monotone"));
}

TEST_CASE("Z4 modulo {0,2}") {
  auto const z4   = cyclic_group(4);
  auto const cong = congruence_from_normal_clifford(z4.semigroup(), {0, 2});
  auto const found = find_order_preserving(z4.semigroup(), cong);
  REQUIRE(found.section.has_value());
  CHECK(found.section->image == std::vector<Elem>{0, 1});
  CHECK(all_sections(z4.semigroup(), cong).size() == 2);
  CHECK(is_order_preserving(z4.semigroup(), cong, CrossSection{{0, 3}}).ok());
  CHECK_FALSE(is_order_preserving(z4.semigroup(), cong, CrossSection{{2, 1}}).ok());

  auto const other = ftilde_cross_section(z4.semigroup(), cong, {{1, 3}});
  CHECK(other.image == std::vector<Elem>{0, 3});
  CHECK_THROWS_AS(ftilde_cross_section(z4.semigroup(), cong, {{0, 2}}), InputError);
  CHECK_THROWS_AS(ftilde_cross_section(z4.semigroup(), cong, {{1, 2}}), InputError);
}

TEST_CASE("identity congruence admits the identity section") {
  auto const i2   = symmetric_inverse_monoid(2);
  auto const cong = congruence_from_normal_clifford(i2, i2.idempotents());
  CHECK(cong.class_count() == 7);
  auto const found = find_order_preserving(i2, cong);
  REQUIRE(found.section.has_value());
  for (Elem k = 0; k < cong.class_count(); ++k) {
    CHECK(found.section->image[k] == cong.representative(k));
  }
  auto const rep = is_order_preserving(i2, cong, *found.section);
  CHECK(rep.ok());
  REQUIRE(rep.notes().size() == 1);
  CHECK(rep.notes()[0].find("holds") != std::string::npos);
}

TEST_CASE("malformed sections are rejected") {
  auto const z4   = cyclic_group(4);
  auto const cong = congruence_from_normal_clifford(z4.semigroup(), {0, 2});
  CHECK_THROWS_AS(is_order_preserving(z4.semigroup(), cong, CrossSection{{0}}), InputError);
  CHECK_THROWS_AS(is_order_preserving(z4.semigroup(), cong, CrossSection{{0, 2}}), InputError);
  CHECK_THROWS_AS(is_order_preserving(z4.semigroup(), cong, CrossSection{{0, 9}}), InputError);
}

TEST_CASE("search agrees with exhaustive enumeration") {
  std::vector<FiniteInverseSemigroup> cases = {fixture::ex19().semigroup(), symmetric_inverse_monoid(2),
                                               symmetric_inverse_monoid(3), cyclic_group(6).semigroup(),
                                               fixture::s3(), adjoin_unit(fixture::ex19().semigroup())};
  std::size_t checked = 0;
  for (auto const& s : cases) {
    for (auto const& n : enumerate_normal_clifford(s, 40)) {
      auto const cong = congruence_from_normal_clifford(s, n);
      if (cong.class_count() > 12 && section_count(cong) > 64) {
        continue;
      }
      auto const all   = all_sections(s, cong);
      auto const found = find_order_preserving(s, cong);
      CHECK(found.section.has_value() == !all.empty());
      if (found.section) {
        CHECK(std::find(all.begin(), all.end(), *found.section) != all.end());
        CHECK(found.obstructions.empty());
      }
      ++checked;
    }
  }
  CHECK(checked > 10);
}

TEST_CASE("F-tilde sections are order-preserving") {
  std::vector<FiniteInverseSemigroup> cases = {symmetric_inverse_monoid(2), symmetric_inverse_monoid(3),
                                               cyclic_group(6).semigroup(), fixture::s3(),
                                               adjoin_unit(fixture::ex19().semigroup())};
  std::size_t built = 0, refused = 0;
  for (auto const& s : cases) {
    for (auto const& n : enumerate_normal_clifford(s, 40)) {
      auto const cong = congruence_from_normal_clifford(s, n);
      if (is_ftilde(quotient(s, cong).semigroup).ftilde) {
        auto const c = ftilde_cross_section(s, cong);
        CHECK(is_order_preserving(s, cong, c).ok());
        ++built;
      } else {
        CHECK_THROWS_AS(ftilde_cross_section(s, cong), ConstructionError);
        ++refused;
      }
    }
  }
  CHECK(built > 0);
  CHECK(refused > 0);
}

TEST_CASE("F-tilde section on a unital semilattice is the identity") {
  // Chain 1 > a > 0 of idempotents.
  FiniteInverseSemigroup chain({{0, 1, 2}, {1, 1, 2}, {2, 2, 2}}, {0, 1, 2});
  auto const             c = ftilde_cross_section(chain, Congruence::identity(3));
  CHECK(c.image == std::vector<Elem>{0, 1, 2});
}

TEST_CASE("group quotients: every unit-fixing section works") {
  auto const s    = fixture::s3();
  auto const subs = enumerate_normal_clifford(s);
  REQUIRE(subs.size() == 3);
  auto const cong = congruence_from_normal_clifford(s, subs[1]);
  CHECK(cong.class_count() == 2);
  CHECK(all_sections(s, cong).size() == 3);
}

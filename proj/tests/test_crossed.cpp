#include <doctest.h>

#include "fixtures.hpp"
#include "twistcross/crossed.hpp"

using namespace twistcross;

namespace {

struct Z4 {
  FiniteInverseSemigroup t = cyclic_group(4).semigroup();
  Subset                 n{0, 2};
  CrossSection           c{{0, 1}};
};

FdStarAlgebra<Exact> scalars() { return from_multimatrix<Exact>({1}); }

BusbySmithAction<Exact> canonical_i2() {
  auto const i2 = symmetric_inverse_monoid(2);
  auto const e  = i2.idempotents();
  return action_from_cross_section<Exact>(i2, e, *find_order_preserving(i2, congruence_from_normal_clifford(i2, e)).section);
}

// Counting oracle: |{f in E : f <= ss*}| summed over S.
std::size_t count_lower_idempotents(FiniteInverseSemigroup const& s) {
  std::size_t out = 0;
  for (Elem x = 0; x < s.size(); ++x) {
    for (Elem f = 0; f < s.size(); ++f) {
      if (s.mul(f, f) == f && s.mul(f, s.mul(x, s.star(x))) == f) {
        ++out;
      }
    }
  }
  return out;
}

std::vector<Elem> identity_map(std::size_t n) {
  std::vector<Elem> out(n);
  for (Elem k = 0; k < n; ++k) {
    out[k] = k;
  }
  return out;
}

void check_covariant_round_trip(BusbySmithAction<Exact> const& act) {
  auto const cp = quotient_crossed_product(act);
  REQUIRE(cp.cstar.certified);
  auto const big = left_regular(cp.quotient.algebra);
  REQUIRE(verify_representation(big, cp.quotient.algebra).ok());
  auto const rep = rep_from_algebra_rep(big, act, cp);
  CHECK(rep.notes.empty());
  auto const cov = verify_covariant(rep, act);
  CHECK_MESSAGE(cov.ok(), cov.to_text());
  CHECK(cov.passed("v_e = 1"));
  CHECK(cov.passed("v_s* = pi(w_s*,s) adj(v_s)"));
  CHECK(cov.passed("adj(v_s) = pi(w*_s*,s) v_s*"));
  auto const integ = verify_integrated_form(rep, big, act, cp);
  CHECK_MESSAGE(integ.ok(), integ.to_text());
}

}  // namespace

TEST_CASE("convolution algebra dimensions and laws") {
  SUBCASE("canonical action of I_2") {
    auto const act  = canonical_i2();
    auto const conv = build_L(act);
    CHECK(static_cast<std::size_t>(conv.dim()) == count_lower_idempotents(symmetric_inverse_monoid(2)));
    CHECK(conv.dim() == 17);
    CHECK(conv.report.ok());
  }
  SUBCASE("Z4 over Z2") {
    Z4         z;
    auto const conv = build_L(action_from_cross_section<Exact>(z.t, z.n, z.c));
    CHECK(conv.dim() == 4);
    CHECK(conv.report.ok());
  }
  SUBCASE("group case gives the group algebra") {
    auto const g  = cyclic_group(3).semigroup();
    auto const cp = quotient_crossed_product(trivial_action(scalars(), g));
    CHECK(cp.convolution.dim() == 3);
    CHECK(cp.relations.cols() == 0);
    CHECK(cp.dim() == 3);
    CHECK(verify_explicit_iso(semigroup_algebra_map(cp.convolution, g, {*g.unit()}, identity_map(3)), cp,
                              from_semigroup_algebra<Exact>(g))
              .ok());
  }
}

TEST_CASE("unit interaction identities in a perturbed action") {
  Z4              z;
  std::mt19937_64 rng(3);
  auto const      base = action_from_cross_section<Exact>(z.t, z.n, z.c);
  auto const      act  = perturb(base, random_exterior_family(base, rng));
  REQUIRE(verify_busby_smith(act).ok());
  auto const  conv = build_L(act);
  auto const& a    = act.algebra;
  auto const& l    = conv.algebra;
  Elem const  e    = *act.semigroup.unit();
  for (Elem s = 0; s < act.semigroup.size(); ++s) {
    for (Index i = 0; i < a.dim(); ++i) {
      for (Index j : act.ideals[s].indices) {
        auto const ae = a.basis(i);
        auto const at = a.basis(j);
        CHECK(l.equal(l.mul(conv.delta(e, ae), conv.delta(s, at)), conv.delta(s, a.mul(ae, at))));
        auto const back = inverse(act.beta[s]).apply(at);
        CHECK(l.equal(l.mul(conv.delta(s, at), conv.delta(e, ae)), conv.delta(s, act.beta[s].apply(a.mul(back, ae)))));
      }
    }
  }
}

TEST_CASE("an unverified action is refused") {
  Z4   z;
  auto act          = action_from_cross_section<Exact>(z.t, z.n, z.c);
  act.cocycle(1, 0) = act.algebra.basis(1);
  CHECK_THROWS_AS(build_L(act), InputError);
  CHECK_THROWS_AS(quotient_crossed_product(act), InputError);
}

TEST_CASE("quotients by the order relations") {
  SUBCASE("I_2 gives its semigroup algebra") {
    auto const i2  = symmetric_inverse_monoid(2);
    auto const act = canonical_i2();
    auto const cp  = quotient_crossed_product(act);
    CHECK(cp.dim() == 7);
    CHECK(cp.cstar.certified);
    // (tt*) d_t -> t, and generally f d_t -> f t.
    auto const iso = verify_explicit_iso(semigroup_algebra_map(cp.convolution, i2, i2.idempotents(), identity_map(7)),
                                         cp, from_semigroup_algebra<Exact>(i2));
    CHECK_MESSAGE(iso.ok(), iso.to_text());
  }
  SUBCASE("Z4 over Z2 gives the group algebra of Z4") {
    Z4         z;
    auto const cp = quotient_crossed_product(action_from_cross_section<Exact>(z.t, z.n, z.c));
    CHECK(cp.dim() == 4);
    CHECK(cp.cstar.certified);
    auto const target = from_semigroup_algebra<Exact>(z.t);
    auto const iso    = verify_explicit_iso(semigroup_algebra_map(cp.convolution, z.t, z.n, z.c.image), cp, target);
    CHECK_MESSAGE(iso.ok(), iso.to_text());

    // Sending the nontrivial class to 0 instead of a representative.
    auto const bad = verify_explicit_iso(semigroup_algebra_map(cp.convolution, z.t, z.n, {0, 0}), cp, target);
    CHECK_FALSE(bad.passed("kernel equals the relation ideal"));
    CHECK_FALSE(bad.passed("surjective"));
  }
}

TEST_CASE("Green crossed products") {
  SUBCASE("Z4 over Z2") {
    Z4         z;
    auto const cp = green_crossed_product(green_canonical<Exact>(z.t, z.n));
    CHECK(cp.dim() == 4);
    auto const iso = verify_explicit_iso(semigroup_algebra_map(cp.convolution, z.t, z.n, identity_map(4)), cp,
                                         from_semigroup_algebra<Exact>(z.t));
    CHECK_MESSAGE(iso.ok(), iso.to_text());
  }
  SUBCASE("I_2 over E, where tau is the family of units") {
    auto const i2    = symmetric_inverse_monoid(2);
    auto const green = green_canonical<Exact>(i2, i2.idempotents());
    auto const cp    = green_crossed_product(green);
    CHECK(cp.dim() == 7);
    CHECK(cp.dim() == quotient_crossed_product(detail::untwisted(green)).dim());
    auto const iso = verify_explicit_iso(semigroup_algebra_map(cp.convolution, i2, i2.idempotents(), identity_map(7)),
                                         cp, from_semigroup_algebra<Exact>(i2));
    CHECK_MESSAGE(iso.ok(), iso.to_text());
  }
  SUBCASE("a broken twist is refused") {
    Z4   z;
    auto green   = green_canonical<Exact>(z.t, z.n);
    green.tau[1] = green.tau[1] * GaussRational::i();
    CHECK_THROWS_AS(green_crossed_product(green), InputError);
  }
}

TEST_CASE("covariant representations from the left-regular representation") {
  Z4 z;
  SUBCASE("Z4 over Z2") { check_covariant_round_trip(action_from_cross_section<Exact>(z.t, z.n, z.c)); }
  SUBCASE("canonical I_2") { check_covariant_round_trip(canonical_i2()); }
  SUBCASE("perturbed Z4 over Z2") {
    std::mt19937_64 rng(11);
    auto const      base = action_from_cross_section<Exact>(z.t, z.n, z.c);
    check_covariant_round_trip(perturb(base, random_exterior_family(base, rng)));
  }
  SUBCASE("degenerate representations are compressed") {
    auto const act = canonical_i2();
    auto const cp  = quotient_crossed_product(act);
    auto const big = left_regular(cp.quotient.algebra);
    Index const d  = big.space_dim();
    AlgebraRepresentation<Exact> padded{Matrix<Exact>::Identity(d + 2, d + 2), {}};
    padded.gram.topLeftCorner(d, d) = big.gram;
    for (auto const& m : big.image) {
      Matrix<Exact> x        = Matrix<Exact>::Zero(d + 2, d + 2);
      x.topLeftCorner(d, d)  = m;
      padded.image.push_back(x);
    }
    auto const rep = rep_from_algebra_rep(padded, act, cp);
    REQUIRE(rep.notes.size() == 1);
    CHECK(rep.space_dim() == d);
    CHECK(verify_covariant(rep, act).ok());
    CHECK(verify_integrated_form(rep, padded, act, cp).ok());
  }
  SUBCASE("a rescaled isometry breaks the cocycle identity") {
    auto const act = action_from_cross_section<Exact>(z.t, z.n, z.c);
    auto const cp  = quotient_crossed_product(act);
    auto       rep = rep_from_algebra_rep(left_regular(cp.quotient.algebra), act, cp);
    rep.v[1]       = rep.v[1] * GaussRational::i();
    auto const bad = verify_covariant(rep, act);
    CHECK_FALSE(bad.passed("v_r v_s = pi(w_r,s) v_rs"));
    CHECK(bad.passed("v_s is a partial isometry"));
  }
}

TEST_CASE("Green decomposition") {
  SUBCASE("I_2 with N = K = E") {
    auto const i2  = symmetric_inverse_monoid(2);
    auto const e   = i2.idempotents();
    auto const dec = decompose_green(green_canonical<Exact>(i2, e), e);
    CHECK_MESSAGE(dec.ok(), dec.report.to_text());
    CHECK(dec.direct == 7);
    CHECK(dec.iterated == 7);
  }
  SUBCASE("Z4 with N = {0}, K = {0, 2}") {
    Z4         z;
    auto const dec = decompose_green(green_canonical<Exact>(z.t, {0}), z.n);
    CHECK_MESSAGE(dec.ok(), dec.report.to_text());
    CHECK(dec.direct == 4);
    CHECK(dec.iterated == 4);
  }
  SUBCASE("K = N") {
    Z4         z;
    auto const dec = decompose_green(green_canonical<Exact>(z.t, z.n), z.n);
    CHECK_MESSAGE(dec.ok(), dec.report.to_text());
    CHECK(dec.direct == 4);
  }
  SUBCASE("K must contain N") {
    Z4 z;
    CHECK_THROWS_AS(decompose_green(green_canonical<Exact>(z.t, z.n), {0}), InputError);
  }
}

TEST_CASE("Busby-Smith decomposition") {
  SUBCASE("trivial action of Z4 with L = Z2") {
    auto const dec = decompose_busby(trivial_action(scalars(), cyclic_group(4).semigroup()), {0, 2});
    CHECK_MESSAGE(dec.ok(), dec.report.to_text());
    CHECK(dec.direct == 4);
    CHECK(dec.iterated == 4);
    auto const j = dec.to_json();
    CHECK(j["dims"]["iso"] == true);
  }
  SUBCASE("canonical I_2 with L = E") {
    auto const act = canonical_i2();
    auto const dec = decompose_busby(act, act.semigroup.idempotents());
    CHECK_MESSAGE(dec.ok(), dec.report.to_text());
    CHECK(dec.direct == 7);
    CHECK(dec.iterated == 7);
  }
  SUBCASE("the 19-element example is refused") {
    auto const ex = fixture::ex19();
    auto const s  = adjoin_unit(ex.semigroup());
    Subset     l  = ex.kernel();
    l.push_back(s.size() - 1);
    auto const dec = decompose_busby(trivial_action(scalars(), s), l);
    CHECK(dec.refused);
    CHECK_FALSE(dec.ok());
    CHECK(dec.diagnosis.find("no order-preserving cross-section") != std::string::npos);
    CHECK_FALSE(dec.report.passed("order-preserving cross-section exists"));
  }
}

TEST_CASE("semigroup C*-algebra identities") {
  SUBCASE("I_2 over E") {
    auto const i2  = symmetric_inverse_monoid(2);
    auto const rep = semigroup_cstar_reports<Exact>(i2, i2.idempotents());
    CHECK_MESSAGE(rep.ok(), rep.to_text());
    CHECK(rep.passed("C*(T) = C*(N) x T/N (Busby-Smith)"));
  }
  SUBCASE("Z4 over Z2") {
    Z4         z;
    auto const rep = semigroup_cstar_reports<Exact>(z.t, z.n);
    CHECK_MESSAGE(rep.ok(), rep.to_text());
    CHECK(rep.passed("C*(G_S) = C*(G_N) x S (Green)"));
    CHECK(rep.passed("C*(G_T) = C*(G_N) x T/N (Busby-Smith)"));
  }
  SUBCASE("a semilattice over itself") {
    auto const i2  = symmetric_inverse_monoid(2);
    auto const e   = detail::subsemigroup(i2, i2.idempotents());
    auto const rep = semigroup_cstar_reports<Exact>(e, identity_map(e.size()));
    CHECK_MESSAGE(rep.ok(), rep.to_text());
  }
}

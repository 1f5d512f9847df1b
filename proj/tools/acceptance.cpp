#include "acceptance.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "twistcross/crossed.hpp"

namespace twistcross::acceptance {

namespace {

constexpr double kTol = 1e-9;

std::shared_ptr<Group const> zn(std::size_t n) { return std::make_shared<Group const>(cyclic_group(n)); }

std::vector<Elem> identity_map(std::size_t n) {
  std::vector<Elem> out(n);
  for (Elem k = 0; k < n; ++k) {
    out[k] = k;
  }
  return out;
}

FiniteInverseSemigroup z4() { return cyclic_group(4).semigroup(); }
Subset const       kZ2{0, 2};
CrossSection const kSectionC{{0, 1}};
CrossSection const kSectionD{{0, 3}};

CrossSection section_of(FiniteInverseSemigroup const& t, Subset const& n) {
  auto found = find_order_preserving(t, congruence_from_normal_clifford(t, n));
  if (!found.section) {
    throw ConstructionError("order-preserving cross-section exists", "no section for the requested pair");
  }
  return *found.section;
}

struct Counterexample {
  Generated<PartialBijection> g;
  Elem                        r, s, sr, srsr, rs, rsrs, ssr;

  FiniteInverseSemigroup const& semigroup() const { return g.semigroup; }

  Subset kernel() const {
    Subset n = g.semigroup.idempotents();
    n.push_back(sr);
    n.push_back(rs);
    std::sort(n.begin(), n.end());
    return n;
  }
};

Counterexample counterexample() {
  auto const r = PartialBijection::parse("(1,4,5,0,0,0)");
  auto const s = PartialBijection::parse("(0,5,4,0,0,6)");
  Counterexample out{generate_partial_bijections({r, s}), 0, 0, 0, 0, 0, 0, 0};
  auto index = [&](PartialBijection const& f) {
    auto it = std::find(out.g.elements.begin(), out.g.elements.end(), f);
    if (it == out.g.elements.end()) {
      throw ConstructionError("closure", "missing element " + f.to_string());
    }
    return static_cast<Elem>(it - out.g.elements.begin());
  };
  auto const sr = compose(star(s), r);
  auto const rs = compose(r, star(s));
  out.r         = index(r);
  out.s         = index(s);
  out.sr        = index(sr);
  out.srsr      = index(compose(sr, sr));
  out.rs        = index(rs);
  out.rsrs      = index(compose(rs, rs));
  out.ssr       = index(compose(s, star(s), r));
  return out;
}

Subset pair(Elem a, Elem b) { return {std::min(a, b), std::max(a, b)}; }

void check_action(Report& rep, std::string const& tag, Report const& verdict) {
  for (auto const& name : busby_smith_axioms()) {
    rep.check(tag + ": " + name, verdict.passed(name) && verdict.find(name) != nullptr);
  }
  for (auto const& name : busby_smith_consequences()) {
    rep.check(tag + ": " + name, verdict.passed(name) && verdict.find(name) != nullptr);
  }
  rep.check(tag + ": all clauses", verdict.ok(), verdict.ok() ? "" : detail::failure_text(verdict));
}

Report counterexample_reproduction() {
  Report      rep("counterexample");
  auto const  ex = counterexample();
  auto const& s  = ex.semigroup();
  rep.check("closure of the two generators has 19 elements", s.size() == 19, std::to_string(s.size()));

  auto const n = ex.kernel();
  rep.check("E u {s*r, rs*} is a normal Clifford subsemigroup", is_normal_clifford(s, n).ok());
  auto const cong = congruence_from_normal_clifford(s, n);
  rep.check("determined congruence is a congruence", is_congruence(s, cong).ok());
  rep.check("determined congruence is idempotent separating", is_idempotent_separating(s, cong));

  auto const  kns        = kernel_normal_system(s, cong);
  std::size_t nontrivial = 0;
  bool        shape      = kns.size() == s.idempotents().size();
  for (auto const& k : kns) {
    if (k.members.size() == 2) {
      ++nontrivial;
      shape = shape && (k.members == pair(ex.sr, ex.srsr) || k.members == pair(ex.rs, ex.rsrs));
    } else {
      shape = shape && k.members.size() == 1 && s.is_idempotent(k.members[0]);
    }
  }
  rep.check("kernel normal system is {s*r,(s*r)^2}, {rs*,(rs*)^2} and idempotent singletons",
            shape && nontrivial == 2);

  std::vector<std::vector<Elem>> literal{pair(ex.sr, ex.srsr), pair(ex.rs, ex.rsrs)};
  for (Elem x = 0; x < s.size(); ++x) {
    if (x != ex.sr && x != ex.srsr && x != ex.rs && x != ex.rsrs) {
      literal.push_back({x});
    }
  }
  bool const literal_ok = is_congruence(s, literal).ok();
  rep.note(std::string("two kernel pairs plus singletons elsewhere: ")
           + (literal_ok ? "a congruence" : "not a congruence; the determined congruence has ")
           + (literal_ok ? "" : std::to_string(cong.class_count()) + " classes"));
  rep.check("determined congruence has the kernel pairs as its only nontrivial idempotent classes",
            kernel_union(s, cong) == n);

  auto const found = find_order_preserving(s, cong);
  rep.check("find_order_preserving returns none", !found.section.has_value());
  Elem const below  = cong.class_of(ex.ssr);
  Elem const cls_r  = cong.class_of(ex.r);
  Elem const cls_s  = cong.class_of(ex.s);
  bool       named  = false;
  for (auto const& ob : found.obstructions) {
    bool const both = (ob.first == cls_r && ob.second == cls_s) || (ob.first == cls_s && ob.second == cls_r);
    named           = named || (ob.below == below && both);
  }
  rep.check("obstruction [ss*r] <= [r] and [ss*r] <= [s]", named);

  auto const q  = quotient(s, cong);
  auto const qb = q.projection[ex.ssr];
  rep.check("[ss*r] <= [r] in S/N", q.semigroup.leq(qb, q.projection[ex.r]));
  rep.check("[ss*r] <= [s] in S/N", q.semigroup.leq(qb, q.projection[ex.s]));
  return rep;
}

Report axiom_suite(std::uint64_t seed) {
  Report          rep("Busby-Smith axioms");
  std::mt19937_64 rng(seed + 2);
  auto const      t  = z4();
  auto const      i2 = symmetric_inverse_monoid(2);
  auto const      e2 = i2.idempotents();

  auto const s3 = generate_partial_bijections({PartialBijection::parse("(2,1,3)"), PartialBijection::parse("(2,3,1)")}).semigroup;
  Subset     a3{*s3.find_label("(1,2,3)"), *s3.find_label("(2,3,1)"), *s3.find_label("(3,1,2)")};
  std::sort(a3.begin(), a3.end());

  auto const u19 = adjoin_unit(counterexample().semigroup());
  auto const e19 = u19.idempotents();

  check_action(rep, "cross-section Z4/Z2", verify_busby_smith(action_from_cross_section<Exact>(t, kZ2, kSectionC)));
  check_action(rep, "cross-section Z4/Z2 (d)", verify_busby_smith(action_from_cross_section<Exact>(t, kZ2, kSectionD)));
  check_action(rep, "cross-section I_2/E", verify_busby_smith(action_from_cross_section<Exact>(i2, e2, section_of(i2, e2))));
  check_action(rep, "cross-section S3/A3", verify_busby_smith(action_from_cross_section<Exact>(s3, a3, section_of(s3, a3))));
  check_action(rep, "cross-section S^1/E, 19-element S",
               verify_busby_smith(action_from_cross_section<Exact>(u19, e19, section_of(u19, e19))));
  check_action(rep, "green_to_busby Z4/Z2",
               verify_busby_smith(green_to_busby(green_canonical<Exact>(t, kZ2), kSectionC)));
  check_action(rep, "green_to_busby I_2/E",
               verify_busby_smith(green_to_busby(green_canonical<Exact>(i2, e2), section_of(i2, e2))));

  auto const z2  = zn(2);
  auto const sz2 = enumerate_SG(z2);
  auto const sz3 = enumerate_SG(zn(3));
  check_action(rep, "partial_to_exel block swap",
               verify_busby_smith(partial_to_exel(restricted_partial_action<Exact>(z2, {{0, 0}, {1, 0}, {0, 1}}, 1), sz2)));
  check_action(rep, "partial_to_exel random Z3",
               verify_busby_smith(partial_to_exel(random_partial_action<Exact>(zn(3), 1, rng), sz3)));

  check_action(rep, "complex cross-section Z4/Z2",
               verify_busby_smith(action_from_cross_section<Complex>(t, kZ2, kSectionC)));
  check_action(rep, "complex green_to_busby I_2/E",
               verify_busby_smith(green_to_busby(green_canonical<Complex>(i2, e2), section_of(i2, e2))));
  check_action(rep, "complex partial_to_exel random Z2",
               verify_busby_smith(partial_to_exel(random_partial_action<Complex>(z2, 2, rng), sz2)));
  check_action(rep, "complex partial_to_exel random Z3",
               verify_busby_smith(partial_to_exel(random_partial_action<Complex>(zn(3), 2, rng), sz3)));
  return rep;
}

Report group_case() {
  Report     rep("Z4 over Z2");
  auto const t   = z4();
  auto const act = action_from_cross_section<Exact>(t, kZ2, kSectionC);
  rep.check("w_1,1 is the nontrivial element of Z2", act.algebra.equal(act.cocycle(1, 1), act.algebra.basis(1)));
  rep.check("w_1,1 is not the unit", !act.algebra.equal(act.cocycle(1, 1), act.algebra.basis(0)));
  auto const cp = quotient_crossed_product(act);
  rep.check("dim L = 4", cp.convolution.dim() == 4, std::to_string(cp.convolution.dim()));
  rep.check("dim of the order quotient = 4", cp.dim() == 4, std::to_string(cp.dim()));
  rep.check("trace form certified", cp.cstar.certified);
  auto const iso = verify_explicit_iso(semigroup_algebra_map(cp.convolution, t, kZ2, kSectionC.image), cp,
                                       from_semigroup_algebra<Exact>(t));
  rep.merge(iso, "a d_q -> a c(q): ");
  return rep;
}

Report canonical_decomposition() {
  Report     rep("canonical I_2");
  auto const i2  = symmetric_inverse_monoid(2);
  auto const e   = i2.idempotents();
  auto const act = action_from_cross_section<Exact>(i2, e, section_of(i2, e));
  auto const cp  = quotient_crossed_product(act);
  rep.check("|I_2| = 7", i2.size() == 7);
  rep.check("quotient dimension = 7", cp.dim() == 7, std::to_string(cp.dim()));
  auto const iso = verify_explicit_iso(semigroup_algebra_map(cp.convolution, i2, e, identity_map(i2.size())), cp,
                                       from_semigroup_algebra<Exact>(i2));
  rep.merge(iso, "a d_s -> a s: ");
  auto const props = semigroup_cstar_reports<Exact>(i2, e);
  for (char const* name : {"C*(S) = C*(N) x S (Green)", "C*(G_S) = C*(G_N) x S (Green)",
                           "C*(T) = C*(N) x T/N (Busby-Smith)", "C*(G_T) = C*(G_N) x T/N (Busby-Smith)"}) {
    rep.check(name, props.find(name) != nullptr && props.passed(name));
  }
  rep.check("every identity clause holds", props.ok(), props.ok() ? "" : detail::failure_text(props));
  return rep;
}

Report round_trip() {
  Report     rep("Green and Busby-Smith");
  auto const t  = z4();
  auto const i2 = symmetric_inverse_monoid(2);
  auto const e  = i2.idempotents();
  auto const ci = section_of(i2, e);
  rep.merge(same_action(green_to_busby(green_canonical<Exact>(t, kZ2), kSectionC),
                        action_from_cross_section<Exact>(t, kZ2, kSectionC)),
            "Z4/Z2, c: ");
  rep.merge(same_action(green_to_busby(green_canonical<Exact>(t, kZ2), kSectionD),
                        action_from_cross_section<Exact>(t, kZ2, kSectionD)),
            "Z4/Z2, d: ");
  rep.merge(same_action(green_to_busby(green_canonical<Exact>(i2, e), ci), action_from_cross_section<Exact>(i2, e, ci)),
            "I_2/E: ");

  rep.check("c and d are distinct order-preserving sections",
            kSectionC != kSectionD
                && is_order_preserving(t, congruence_from_normal_clifford(t, kZ2), kSectionC).ok()
                && is_order_preserving(t, congruence_from_normal_clifford(t, kZ2), kSectionD).ok());
  auto const ac = action_from_cross_section<Exact>(t, kZ2, kSectionC);
  auto const ad = action_from_cross_section<Exact>(t, kZ2, kSectionD);
  auto const v  = cross_section_equivalence_witness<Exact>(t, kZ2, kSectionC, kSectionD);
  rep.merge(is_exterior_equivalence(ac, ad, v), "V_s = d(s) c(s)*: ");
  return rep;
}

Report exel_correspondence(std::uint64_t seed) {
  Report          rep("S(G)");
  std::mt19937_64 rng(seed + 6);
  auto const      z2  = zn(2);
  auto const      z3  = zn(3);
  auto const      sz2 = enumerate_SG(z2);
  auto const      sz3 = enumerate_SG(z3);
  rep.check("|S(Z2)| = 3", sz2.semigroup.size() == 3, std::to_string(sz2.semigroup.size()));
  rep.check("|S(Z3)| = 8", sz3.semigroup.size() == 8, std::to_string(sz3.semigroup.size()));
  for (int trial = 0; trial < 20; ++trial) {
    bool const        small = trial % 2 == 0;
    auto const&       g     = small ? z2 : z3;
    auto const&       sg    = small ? sz2 : sz3;
    std::string const tag   = "Z" + std::string(small ? "2" : "3") + " #" + std::to_string(trial);
    auto const        tpa   = random_partial_action<Complex>(g, small ? 2 : 1, rng);
    rep.check("twisted partial action verifies", verify_twisted_partial(tpa).ok(), tag);
    auto const fwd = partial_to_exel(tpa, sg);
    rep.check("S(G) action verifies", verify_busby_smith(fwd).ok(), tag);
    auto const back = exel_to_partial(fwd, sg);
    rep.check("recovered action verifies", verify_twisted_partial(back).ok(), tag);
    rep.check("exel_to_partial o partial_to_exel = id", same_action(back, tpa).ok(), tag);
  }
  return rep;
}

Report representation_bijection() {
  Report     rep("covariant representations");
  auto const t  = z4();
  auto const i2 = symmetric_inverse_monoid(2);
  auto const e  = i2.idempotents();
  std::vector<std::pair<std::string, BusbySmithAction<Exact>>> cases{
      {"Z4/Z2", action_from_cross_section<Exact>(t, kZ2, kSectionC)},
      {"I_2/E", action_from_cross_section<Exact>(i2, e, section_of(i2, e))},
  };
  for (auto const& [tag, act] : cases) {
    auto const cp = quotient_crossed_product(act);
    rep.check(tag + ": quotient certified", cp.cstar.certified);
    auto const big = left_regular(cp.quotient.algebra);
    rep.merge(verify_representation(big, cp.quotient.algebra), tag + ": left regular: ");
    auto const cov = rep_from_algebra_rep(big, act, cp);
    rep.check(tag + ": nondegenerate without compression", cov.notes.empty());
    auto const verdict = verify_covariant(cov, act);
    rep.merge(verdict, tag + ": ");
    for (char const* name : {"v_f is the orthogonal projection onto pi(E_f)H", "v_e = 1", "v_s* = pi(w_s*,s) adj(v_s)",
                             "adj(v_s) = v_s* pi(w*_s,s*)", "adj(v_s) = pi(w*_s*,s) v_s*"}) {
      rep.check(tag + ": property present: " + name, verdict.find(name) != nullptr);
    }
    rep.merge(verify_integrated_form(cov, big, act, cp), tag + ": ");
  }
  return rep;
}

Report exterior_equivalence(std::uint64_t seed) {
  Report          rep("exterior equivalence");
  std::mt19937_64 rng(seed + 8);
  auto const      act = action_from_cross_section<Complex>(z4(), kZ2, kSectionC);
  auto const&     a   = act.algebra;
  std::vector<Vector<Complex>> ones;
  for (auto const& ideal : act.ideals) {
    ones.push_back(ideal_identity(a, ideal));
  }
  rep.check("algebra tolerance is 1e-9", a.tolerance() == kTol);
  rep.check("base action verifies", verify_busby_smith(act).ok());
  rep.check("reflexive on the base action", is_exterior_equivalence(act, act, ones).ok());
  for (int trial = 0; trial < 50; ++trial) {
    std::string const tag = "family " + std::to_string(trial);
    auto const        v   = random_exterior_family(act, rng);
    auto const        x   = random_exterior_family(act, rng);
    auto const        b   = perturb(act, v);
    auto const        c   = perturb(b, x);
    rep.check("perturbed action verifies", verify_busby_smith(b).ok() && verify_busby_smith(c).ok(), tag);
    rep.check("reflexive", is_exterior_equivalence(b, b, ones).ok(), tag);
    rep.check("beta ~ beta^V via V", is_exterior_equivalence(act, b, v).ok(), tag);
    std::vector<Vector<Complex>> vs, xv;
    for (Elem s = 0; s < v.size(); ++s) {
      vs.push_back(a.star(v[s]));
      xv.push_back(a.mul(x[s], v[s]));
    }
    rep.check("symmetric via V*", is_exterior_equivalence(b, act, vs).ok(), tag);
    rep.check("transitive via X V", is_exterior_equivalence(act, c, xv).ok(), tag);
  }
  return rep;
}

Report decompositions() {
  Report     rep("decompositions");
  auto const i2 = symmetric_inverse_monoid(2);
  auto const e  = i2.idempotents();
  auto const t  = z4();
  auto const c  = from_multimatrix<Exact>({1});

  auto record = [&](std::string const& tag, Decomposition const& d, Index expected) {
    rep.check(tag + ": direct = " + std::to_string(expected), d.direct == expected, std::to_string(d.direct));
    rep.check(tag + ": iterated = direct", d.iterated == d.direct, std::to_string(d.iterated));
    rep.check(tag + ": isomorphism certified", d.iso);
    rep.check(tag + ": every clause holds", d.ok(), d.ok() ? "" : detail::failure_text(d.report));
  };
  record("Green (I_2, E, E)", decompose_green(green_canonical<Exact>(i2, e), e), 7);
  record("Green (Z4, {0}, Z2)", decompose_green(green_canonical<Exact>(t, {0}), kZ2), 4);
  record("Busby-Smith (Z4, Z2)", decompose_busby(trivial_action(c, t), kZ2), 4);

  auto const ex = counterexample();
  auto const u  = adjoin_unit(ex.semigroup());
  Subset     l  = ex.kernel();
  l.push_back(u.size() - 1);
  auto const refused = decompose_busby(trivial_action(c, u), l);
  rep.check("19-element example: refused", refused.refused);
  rep.check("19-element example: no-section diagnosis",
            refused.diagnosis.find("no order-preserving cross-section") != std::string::npos, refused.diagnosis);
  return rep;
}

Report semisimplicity() {
  Report rep("semisimplicity");
  auto   pbs = [](std::initializer_list<char const*> gens) {
    std::vector<PartialBijection> out;
    for (auto const* g : gens) {
      out.push_back(PartialBijection::parse(g));
    }
    return generate_partial_bijections(out).semigroup;
  };
  auto const ex = counterexample();
  std::vector<std::pair<std::string, FiniteInverseSemigroup>> suite{
      {"Z1", cyclic_group(1).semigroup()},
      {"Z2", cyclic_group(2).semigroup()},
      {"Z3", cyclic_group(3).semigroup()},
      {"Z4", z4()},
      {"I_1", symmetric_inverse_monoid(1)},
      {"S(Z2)", enumerate_SG(zn(2)).semigroup},
      {"E(I_2)", detail::subsemigroup(symmetric_inverse_monoid(2), symmetric_inverse_monoid(2).idempotents())},
      {"B_2", pbs({"(2,0)"})},
      {"S3", pbs({"(2,1,3)", "(2,3,1)"})},
      {"I_2", symmetric_inverse_monoid(2)},
      {"S(Z3)", enumerate_SG(zn(3)).semigroup},
      {"S/N, 19-element S", quotient(ex.semigroup(), congruence_from_normal_clifford(ex.semigroup(), ex.kernel())).semigroup},
      {"19-element S", ex.semigroup()},
  };
  for (auto const& [tag, s] : suite) {
    auto const a   = from_semigroup_algebra<Exact>(s);
    auto const rad = jacobson_radical(a);
    auto const cd  = cstar_dimension(a);
    rep.check("size within 1..19", s.size() >= 1 && s.size() <= 19, tag + ": " + std::to_string(s.size()));
    rep.check("radical is zero", rad.cols() == 0, tag);
    rep.check("trace form certified positive", cd.certified, tag + (cd.note.empty() ? "" : ": " + cd.note));
    rep.check("cstar_dimension = |S|", cd.dimension == static_cast<Index>(s.size()), tag);
  }
  return rep;
}

}  // namespace

std::string CriterionResult::line() const {
  std::ostringstream out;
  out << (passed() ? "[PASS] " : "[FAIL] ") << id << ' ' << name << " (" << tolerance << ", "
      << report.clauses().size() << " clauses)";
  if (!passed()) {
    out << ": " << (report.clauses().empty() ? std::string("no clauses recorded") : detail::failure_text(report));
  }
  return out.str();
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  std::string const tol = "tol 1e-9";
  struct Entry {
    int                     id;
    char const*             name;
    std::string             tolerance;
    std::function<Report()> run;
  };
  std::vector<Entry> const entries{
      {1, "Counterexample reproduction", "exact", counterexample_reproduction},
      {2, "Busby-Smith axiom suite", "exact; complex " + tol, [seed] { return axiom_suite(seed); }},
      {3, "Twisted decomposition, group case", "exact", group_case},
      {4, "Canonical-action decomposition", "exact", canonical_decomposition},
      {5, "Green / Busby-Smith round trip", "exact", round_trip},
      {6, "S(G) correspondence", "complex " + tol, [seed] { return exel_correspondence(seed); }},
      {7, "Representation bijection", "exact", representation_bijection},
      {8, "Exterior equivalence is an equivalence relation", "complex " + tol,
       [seed] { return exterior_equivalence(seed); }},
      {9, "Green and Busby-Smith decompositions", "exact", decompositions},
      {10, "Semisimplicity oracle", "exact", semisimplicity},
  };
  std::vector<CriterionResult> out;
  for (auto const& entry : entries) {
    CriterionResult r{entry.id, entry.name, entry.tolerance, Report(entry.name)};
    try {
      r.report = entry.run();
    } catch (std::exception const& e) {
      r.report.check("runs to completion", false, e.what());
    }
    out.push_back(std::move(r));
  }
  return out;
}

nlohmann::json to_json(std::vector<CriterionResult> const& results) {
  nlohmann::json out = nlohmann::json::array();
  for (auto const& r : results) {
    out.push_back({{"id", r.id},
                   {"name", r.name},
                   {"tolerance", r.tolerance},
                   {"passed", r.passed()},
                   {"report", r.report.to_json()}});
  }
  return out;
}

}  // namespace twistcross::acceptance

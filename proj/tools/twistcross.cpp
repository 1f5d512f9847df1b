// twistcross: command-line front-end. Every subcommand prints one JSON
// document (or a text rendering with --format text). Exit codes: 0 when all
// verdicts pass, 1 when one fails, 2 on input errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "acceptance.hpp"
#include "twistcross/crossed.hpp"
#include "twistcross/json_io.hpp"

using namespace twistcross;

namespace {

struct RunSpec {
  std::string   format   = "json";
  std::string   output;
  std::string   scalar   = "exact";
  double        tol      = kDefaultTolerance;
  bool          tol_set  = false;
  std::size_t   samples  = 200;
  std::uint64_t seed     = 0;
  std::size_t   max_size = 100000;
};

struct Outcome {
  Json        doc;
  bool        ok = true;
  std::string text;  // overrides the generic text rendering when set
};

bool is_scalar(Json const& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(Json const& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

bool is_report(Json const& j) { return j.is_object() && j.contains("subject") && j.contains("clauses"); }

void render(std::ostream& out, Json const& j, std::string const& pad);

void render_report(std::ostream& out, Json const& j, std::string const& pad) {
  out << pad << j["subject"].get<std::string>() << ": " << (j["ok"].get<bool>() ? "PASS" : "FAIL") << '\n';
  for (auto const& c : j["clauses"]) {
    out << pad << "  [" << (c["passed"].get<bool>() ? "ok " : "BAD") << "] " << c["name"].get<std::string>() << " ("
        << c["checked"] << ')';
    if (c.contains("witness")) {
      out << "  witness: " << c["witness"].get<std::string>();
    }
    out << '\n';
  }
  if (j.contains("notes")) {
    for (auto const& n : j["notes"]) {
      out << pad << "  note: " << n.get<std::string>() << '\n';
    }
  }
}

bool flat_row(Json const& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](Json const& x) { return is_scalar(x); });
}

std::string row_text(Json const& j) {
  std::string out;
  for (auto const& x : j) {
    out += (out.empty() ? "" : " ") + scalar_text(x);
  }
  return out;
}

void render(std::ostream& out, Json const& j, std::string const& pad) {
  if (is_report(j)) {
    render_report(out, j, pad);
  } else if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      auto const& v = it.value();
      if (is_scalar(v)) {
        out << pad << it.key() << ": " << scalar_text(v) << '\n';
      } else if (flat_row(v)) {
        out << pad << it.key() << ": " << row_text(v) << '\n';
      } else {
        out << pad << it.key() << ":\n";
        render(out, v, pad + "  ");
      }
    }
  } else if (j.is_array()) {
    for (auto const& v : j) {
      if (is_scalar(v)) {
        out << pad << scalar_text(v) << '\n';
      } else if (flat_row(v)) {
        out << pad << row_text(v) << '\n';
      } else {
        out << pad << "-\n";
        render(out, v, pad + "  ");
      }
    }
  } else {
    out << pad << scalar_text(j) << '\n';
  }
}

Json load_json_arg(std::string const& arg, std::string const& flag) {
  if (!arg.empty() && (arg.front() == '[' || arg.front() == '{')) {
    return parse_json(arg, flag);
  }
  return read_json_file(arg);
}

FiniteInverseSemigroup load_semigroup(std::string const& path, RunSpec const& spec) {
  Json const j = read_json_file(path);
  if (j.is_object() && j.contains("kind") && j.contains("semigroup")) {
    return semigroup_from_json(j.at("semigroup"), spec.max_size);
  }
  return semigroup_from_json(j, spec.max_size);
}

// "E" names the idempotents; anything else is inline JSON or a file.
Subset load_subset(std::string const& arg, FiniteInverseSemigroup const& s, std::string const& flag) {
  if (arg == "E") {
    return s.idempotents();
  }
  return subset_from_json(load_json_arg(arg, flag), s);
}

std::string class_label(FiniteInverseSemigroup const& s, Congruence const& cong, Elem cls) {
  std::string out = "[";
  for (Elem x : cong.members(cls)) {
    out += (out.size() > 1 ? "," : "") + s.label(x);
  }
  return out + "]";
}

Json labels_of(FiniteInverseSemigroup const& s, Subset const& set) {
  Json out = Json::array();
  for (Elem x : set) {
    out.push_back(s.label(x));
  }
  return out;
}

template <typename Scalar>
void apply_tolerance(FdStarAlgebra<Scalar>& a, RunSpec const& spec) {
  if constexpr (!ScalarTraits<Scalar>::exact) {
    if (spec.tol_set) {
      a.set_tolerance(spec.tol);
    }
  }
}

template <typename F>
Outcome with_scalar(std::string const& scalar, F&& f) {
  if (scalar == "exact" || scalar == ScalarTraits<Exact>::name) {
    return f(Exact{});
  }
  if (scalar == "complex" || scalar == ScalarTraits<Complex>::name) {
    return f(Complex{});
  }
  throw InputError("unknown scalar '" + scalar + "'; use exact or complex");
}

std::string bundle_scalar(Json const& j, RunSpec const& spec) { return j.value("scalar", spec.scalar); }

Outcome run_gen(RunSpec const& spec, std::size_t degree, std::vector<std::string> const& gens, std::string const& input) {
  if (!input.empty()) {
    Json j = read_json_file(input);
    if (j.value("type", std::string()) != "partial_bijections") {
      throw InputError(input + ": expected {\"type\":\"partial_bijections\",\"degree\",\"generators\"}");
    }
    return {semigroup_to_json(semigroup_from_json(j, spec.max_size)), true, {}};
  }
  if (gens.empty() || degree == 0) {
    throw InputError("gen needs --degree and --gens, or --input");
  }
  std::vector<PartialBijection> pbs;
  for (auto const& g : gens) {
    auto f = PartialBijection::parse(g);
    if (f.degree() != degree) {
      throw InputError("generator " + g + " does not have degree " + std::to_string(degree));
    }
    pbs.push_back(std::move(f));
  }
  return {semigroup_to_json(generate_partial_bijections(pbs, spec.max_size).semigroup), true, {}};
}

Outcome run_analyze(RunSpec const& spec, std::string const& input) {
  auto const s = load_semigroup(input, spec);
  Json       doc;
  doc["size"]        = s.size();
  doc["labels"]      = s.labels();
  doc["unit"]        = s.unit() ? Json(*s.unit()) : Json(nullptr);
  doc["zero"]        = s.zero() ? Json(*s.zero()) : Json(nullptr);
  doc["idempotents"] = s.idempotents();
  Json order         = Json::array();
  for (Elem a = 0; a < s.size(); ++a) {
    for (Elem b = 0; b < s.size(); ++b) {
      if (a != b && s.leq(a, b)) {
        order.push_back(Json::array({a, b}));
      }
    }
  }
  doc["natural_order"] = order;
  doc["maximal"]       = maximal_elements(s);
  auto const ft        = is_ftilde(s);
  doc["ftilde"]        = {{"ftilde", ft.ftilde},
                          {"zero_designated", ft.zero_designated},
                          {"majorant", ft.majorant},
                          {"witness", ft.witness ? Json(*ft.witness) : Json(nullptr)},
                          {"note", ft.note}};
  auto const gi        = max_group_image(s);
  doc["max_group_image"] = {{"order", gi.group.order()},
                            {"projection", gi.projection},
                            {"group", semigroup_to_json(gi.group.semigroup())}};
  VerifyOptions opts;
  opts.samples = spec.samples;
  opts.seed    = spec.seed;
  auto const rep = verify_inverse_semigroup(s, opts);
  doc["verify"]  = rep.to_json();
  return {doc, rep.ok(), {}};
}

Outcome run_nclifford(RunSpec const& spec, std::string const& input, std::size_t guard) {
  auto const s    = load_semigroup(input, spec);
  auto const subs = enumerate_normal_clifford(s, guard);
  Json       list = Json::array();
  for (auto const& n : subs) {
    list.push_back({{"subset", n},
                    {"labels", labels_of(s, n)},
                    {"classes", congruence_from_normal_clifford(s, n).class_count()}});
  }
  return {{{"count", subs.size()}, {"subsemigroups", list}}, true, {}};
}

Outcome run_section(RunSpec const& spec, std::string const& input, std::string const& sub, std::string const& section) {
  auto const s    = load_semigroup(input, spec);
  auto const n    = load_subset(sub, s, "--subsemigroup");
  auto const cong = congruence_from_normal_clifford(s, n);
  Json       doc;
  doc["classes"] = cong.class_count();
  if (!section.empty()) {
    auto const c = section_from_json(load_json_arg(section, "--section"), cong.class_count());
    validate_cross_section(cong, c);
    auto const rep = is_order_preserving(s, cong, c);
    doc["found"]   = rep.ok();
    doc["section"] = section_to_json(c);
    doc["report"]  = rep.to_json();
    return {doc, rep.ok(), {}};
  }
  auto const search = find_order_preserving(s, cong);
  doc["found"]      = search.section.has_value();
  doc["nodes"]      = search.nodes;
  if (search.section) {
    doc["section"] = section_to_json(*search.section);
    Json labels    = Json::object();
    for (Elem k = 0; k < cong.class_count(); ++k) {
      labels[class_label(s, cong, k)] = s.label((*search.section)(k));
    }
    doc["section_labels"] = labels;
  }
  Json obs = Json::array();
  for (auto const& ob : search.obstructions) {
    obs.push_back({{"below", ob.below},
                   {"first", ob.first},
                   {"second", ob.second},
                   {"text", class_label(s, cong, ob.below) + " <= " + class_label(s, cong, ob.first) + " and "
                                + class_label(s, cong, ob.below) + " <= " + class_label(s, cong, ob.second)}});
  }
  doc["obstructions"] = obs;
  return {doc, true, {}};
}

Outcome run_exel(RunSpec const& spec, std::size_t order, std::string const& input, bool table) {
  std::shared_ptr<Group const> g = input.empty() ? std::make_shared<Group const>(cyclic_group(order))
                                                 : std::make_shared<Group const>(Group(load_semigroup(input, spec)));
  auto const sg = enumerate_SG(g, spec.max_size);
  Json       elements = Json::array();
  for (auto const& x : sg.elements) {
    elements.push_back(exel_to_json(x));
  }
  Json doc{{"group_order", g->order()}, {"size", sg.semigroup.size()}, {"elements", elements}};
  if (table) {
    doc["semigroup"] = semigroup_to_json(sg.semigroup);
  }
  bool const ok = is_exel_semigroup(sg);
  doc["verified"] = ok;
  return {doc, ok, {}};
}

struct BuildArgs {
  std::string              construction;
  std::string              input;
  std::string              sub;
  std::string              section;
  std::string              action;
  std::vector<std::size_t> blocks{1};
  std::size_t              group_order = 2;
  std::size_t              block       = 1;
};

template <typename Scalar>
Outcome build_action(RunSpec const& spec, BuildArgs const& args) {
  auto finish = [&](auto act, Json extra) {
    apply_tolerance(act.algebra, spec);
    Report rep;
    if constexpr (requires { act.gamma; }) {
      rep = verify_green(act);
    } else {
      rep = verify_busby_smith(act);
    }
    Json doc = action_to_json(act);
    for (auto it = extra.begin(); it != extra.end(); ++it) {
      doc[it.key()] = it.value();
    }
    doc["report"] = rep.to_json();
    return Outcome{doc, rep.ok(), {}};
  };
  std::mt19937_64 rng(spec.seed);
  auto const&     kind = args.construction;
  if (kind == "random-exterior") {
    if (args.action.empty()) {
      throw InputError("random-exterior needs --action");
    }
    auto act = busby_from_json<Scalar>(read_json_file(args.action));
    apply_tolerance(act.algebra, spec);
    auto v      = random_exterior_family(act, rng);
    Json family = Json::array();
    for (auto const& x : v) {
      family.push_back(vector_to_json(x));
    }
    return finish(perturb(act, v), {{"family", family}});
  }
  if (kind == "partial-to-exel") {
    auto g   = std::make_shared<Group const>(cyclic_group(args.group_order));
    auto tpa = random_partial_action<Scalar>(g, args.block, rng);
    return finish(partial_to_exel(tpa, enumerate_SG(g, spec.max_size)), Json::object());
  }
  if (args.input.empty()) {
    throw InputError(kind + " needs --input");
  }
  auto const t = load_semigroup(args.input, spec);
  if (kind == "trivial") {
    return finish(trivial_action(from_multimatrix<Scalar>(args.blocks), t), Json::object());
  }
  auto const n = load_subset(args.sub.empty() ? std::string("E") : args.sub, t, "--sub");
  if (kind == "green") {
    return finish(green_canonical<Scalar>(t, n), Json::object());
  }
  auto const   cong = congruence_from_normal_clifford(t, n);
  CrossSection c;
  if (!args.section.empty()) {
    c = section_from_json(load_json_arg(args.section, "--section"), cong.class_count());
  } else {
    auto found = find_order_preserving(t, cong);
    if (!found.section) {
      throw ConstructionError("order-preserving cross-section exists", "none for this subsemigroup");
    }
    c = *found.section;
  }
  Json extra{{"section", section_to_json(c)}};
  if (kind == "cross-section") {
    return finish(action_from_cross_section<Scalar>(t, n, c), extra);
  }
  if (kind == "green-to-busby") {
    return finish(green_to_busby(green_canonical<Scalar>(t, n), c), extra);
  }
  throw InputError("unknown construction '" + kind + "'");
}

Outcome run_action_verify(RunSpec const& spec, std::string const& input) {
  Json const j = read_json_file(input);
  return with_scalar(bundle_scalar(j, spec), [&](auto tag) {
    using Scalar = decltype(tag);
    Report rep;
    if (j.value("kind", std::string("busby-smith")) == "green") {
      auto act = green_from_json<Scalar>(j);
      apply_tolerance(act.algebra, spec);
      rep = verify_green(act);
    } else {
      auto act = busby_from_json<Scalar>(j);
      apply_tolerance(act.algebra, spec);
      rep = verify_busby_smith(act);
    }
    return Outcome{rep.to_json(), rep.ok(), {}};
  });
}

template <typename Scalar>
Json crossed_summary(CrossedProduct<Scalar> const& cp) {
  return {{"provenance", cp.provenance},
          {"dim_L", cp.convolution.dim()},
          {"dim", cp.dim()},
          {"basis", cp.quotient.algebra.labels()},
          {"cstar",
           {{"dimension", cp.cstar.dimension},
            {"radical", cp.cstar.radical},
            {"certified", cp.cstar.certified},
            {"note", cp.cstar.note}}},
          {"report", cp.convolution.report.to_json()}};
}

Outcome run_xprod(RunSpec const& spec, std::string const& input, bool covariant) {
  Json const j = read_json_file(input);
  return with_scalar(bundle_scalar(j, spec), [&](auto tag) {
    using Scalar = decltype(tag);
    if (j.value("kind", std::string("busby-smith")) == "green") {
      auto act = green_from_json<Scalar>(j);
      apply_tolerance(act.algebra, spec);
      auto const cp = green_crossed_product(act);
      return Outcome{crossed_summary(cp), cp.convolution.report.ok() && cp.cstar.certified, {}};
    }
    auto act = busby_from_json<Scalar>(j);
    apply_tolerance(act.algebra, spec);
    auto const cp  = quotient_crossed_product(act);
    Json       doc = crossed_summary(cp);
    bool       ok  = cp.convolution.report.ok() && cp.cstar.certified;
    if (covariant) {
      auto const big   = left_regular(cp.quotient.algebra);
      auto const rrep  = verify_representation(big, cp.quotient.algebra);
      auto const rep   = rep_from_algebra_rep(big, act, cp);
      auto const cov   = verify_covariant(rep, act);
      auto const integ = verify_integrated_form(rep, big, act, cp);
      doc["covariant"] = {{"space_dim", rep.space_dim()},
                          {"notes", rep.notes},
                          {"left_regular", rrep.to_json()},
                          {"covariant", cov.to_json()},
                          {"integrated", integ.to_json()}};
      ok = ok && rrep.ok() && cov.ok() && integ.ok();
    }
    return Outcome{doc, ok, {}};
  });
}

struct DecomposeArgs {
  std::string mode = "busby";
  std::string input;
  std::string sub;
  std::string normal;
  std::string action;
  std::string section;
  bool        adjoin = false;
};

Outcome run_decompose(RunSpec const& spec, DecomposeArgs const& args) {
  if (args.mode == "busby" && !args.action.empty()) {
    Json const j = read_json_file(args.action);
    return with_scalar(bundle_scalar(j, spec), [&](auto tag) {
      using Scalar = decltype(tag);
      auto act     = busby_from_json<Scalar>(j);
      apply_tolerance(act.algebra, spec);
      auto const l = load_subset(args.sub, act.semigroup, "--sub");
      std::optional<CrossSection> c;
      if (!args.section.empty()) {
        c = section_from_json(load_json_arg(args.section, "--section"),
                              congruence_from_normal_clifford(act.semigroup, l).class_count());
      }
      auto const d = decompose_busby(act, l, c);
      return Outcome{d.to_json(), d.ok(), {}};
    });
  }
  if (args.input.empty()) {
    throw InputError("decompose needs --input (or --action in busby mode)");
  }
  auto const base = load_semigroup(args.input, spec);
  auto const s    = args.adjoin ? adjoin_unit(base) : base;
  // With --adjoin-unit the new unit is index |S| and joins every subset.
  auto load_subset = [&](std::string const& arg, FiniteInverseSemigroup const& t, std::string const& flag) {
    Subset out = ::load_subset(arg, t, flag);
    if (args.adjoin && !contains(out, *t.unit())) {
      out.push_back(*t.unit());
    }
    return out;
  };
  if (args.mode == "identities") {
    auto const n   = load_subset(args.normal.empty() ? (args.sub.empty() ? std::string("E") : args.sub) : args.normal, s,
                                 "--normal");
    auto const rep = with_scalar(spec.scalar, [&](auto tag) {
      auto r = semigroup_cstar_reports<decltype(tag)>(s, n);
      return Outcome{r.to_json(), r.ok(), {}};
    });
    return rep;
  }
  if (args.sub.empty()) {
    throw InputError("decompose needs --sub");
  }
  auto const sub = load_subset(args.sub, s, "--sub");
  return with_scalar(spec.scalar, [&](auto tag) {
    using Scalar = decltype(tag);
    if (args.mode == "green") {
      auto const n = load_subset(args.normal.empty() ? std::string("E") : args.normal, s, "--normal");
      auto green   = green_canonical<Scalar>(s, n);
      apply_tolerance(green.algebra, spec);
      auto const d = decompose_green(green, sub);
      return Outcome{d.to_json(), d.ok(), {}};
    }
    if (args.mode != "busby") {
      throw InputError("unknown mode '" + args.mode + "'; use green, busby or identities");
    }
    auto act = trivial_action(from_multimatrix<Scalar>({1}), s);
    apply_tolerance(act.algebra, spec);
    std::optional<CrossSection> c;
    if (!args.section.empty()) {
      c = section_from_json(load_json_arg(args.section, "--section"),
                            congruence_from_normal_clifford(s, sub).class_count());
    }
    auto const d = decompose_busby(act, sub, c);
    return Outcome{d.to_json(), d.ok(), {}};
  });
}

Outcome run_paper_example(RunSpec const& spec) {
  auto const r  = PartialBijection::parse("(1,4,5,0,0,0)");
  auto const sb = PartialBijection::parse("(0,5,4,0,0,6)");
  auto const g  = generate_partial_bijections({r, sb}, spec.max_size);
  auto const& s = g.semigroup;
  Subset      n = s.idempotents();
  n.push_back(*s.find_label(compose(star(sb), r).to_string()));
  n.push_back(*s.find_label(compose(r, star(sb)).to_string()));
  std::sort(n.begin(), n.end());
  auto const cong   = congruence_from_normal_clifford(s, n);
  auto const search = find_order_preserving(s, cong);
  Json       kns    = Json::array();
  for (auto const& k : kernel_normal_system(s, cong)) {
    kns.push_back(labels_of(s, k.members));
  }
  Json obs = Json::array();
  for (auto const& ob : search.obstructions) {
    obs.push_back(class_label(s, cong, ob.below) + " <= " + class_label(s, cong, ob.first) + ", "
                  + class_label(s, cong, ob.second));
  }
  Json ce{{"size", s.size()},
          {"kernel_normal_system", kns},
          {"classes", cong.class_count()},
          {"found", search.section.has_value()},
          {"obstructions", obs}};

  auto const results = acceptance::run_acceptance(spec.seed);
  bool       ok      = true;
  std::ostringstream text;
  text << "19-element example: |S| = " << s.size() << ", " << cong.class_count()
       << " classes, order-preserving section " << (search.section ? "found" : "not found") << '\n';
  for (auto const& o : obs) {
    text << "  obstruction: " << o.get<std::string>() << '\n';
  }
  for (auto const& res : results) {
    text << res.line() << '\n';
    ok = ok && res.passed();
  }
  return {{{"counterexample", ce}, {"acceptance", acceptance::to_json(results)}}, ok, text.str()};
}

void emit(RunSpec const& spec, Outcome const& out) {
  std::ostringstream buf;
  if (spec.format == "text") {
    if (!out.text.empty()) {
      buf << out.text;
    } else {
      render(buf, out.doc, "");
    }
  } else {
    buf << out.doc.dump(2) << '\n';
  }
  if (spec.output.empty()) {
    std::cout << buf.str();
    return;
  }
  std::ofstream file(spec.output);
  if (!file) {
    throw InputError("cannot write " + spec.output);
  }
  file << buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted actions of finite inverse semigroups and their crossed products"};
  app.require_subcommand(1);
  app.fallthrough();
  RunSpec spec;
  app.add_option("--format", spec.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--output,-o", spec.output, "write the result to a file");
  app.add_option("--scalar", spec.scalar, "exact (Gaussian rationals) or complex")
      ->check(CLI::IsMember({"exact", "complex"}));
  auto* tol = app.add_option("--tol", spec.tol, "complex comparison tolerance")->check(CLI::PositiveNumber);
  app.add_option("--samples", spec.samples, "random samples for sampled checks");
  app.add_option("--seed", spec.seed, "seed for every random choice");
  app.add_option("--max-size", spec.max_size, "closure and enumeration cap");

  std::function<Outcome()> run;

  auto*                    gen = app.add_subcommand("gen", "closure of partial bijections");
  std::size_t              degree = 0;
  std::vector<std::string> gens;
  std::string              gen_input;
  gen->add_option("--degree", degree);
  gen->add_option("--gens", gens, "tuples such as (1,4,5,0,0,0)");
  gen->add_option("--input", gen_input, "JSON {type: partial_bijections, degree, generators}");
  gen->callback([&] { run = [&] { return run_gen(spec, degree, gens, gen_input); }; });

  auto*       analyze = app.add_subcommand("analyze", "idempotents, order, F~, maximal group image");
  std::string an_input;
  analyze->add_option("--input", an_input)->required();
  analyze->callback([&] { run = [&] { return run_analyze(spec, an_input); }; });

  auto*       ncl = app.add_subcommand("nclifford", "normal Clifford subsemigroups");
  std::string ncl_input;
  std::size_t guard = 30;
  ncl->add_option("--input", ncl_input)->required();
  ncl->add_option("--guard", guard, "largest |S| for the exhaustive enumeration");
  ncl->callback([&] { run = [&] { return run_nclifford(spec, ncl_input, guard); }; });

  auto*       sec = app.add_subcommand("section", "find or verify an order-preserving cross-section");
  std::string sec_input, sec_sub, sec_section;
  sec->add_option("--input", sec_input)->required();
  sec->add_option("--subsemigroup,--sub", sec_sub, "normal Clifford N: file, inline JSON, or E")->required();
  sec->add_option("--section", sec_section, "section to verify instead of searching");
  sec->callback([&] { run = [&] { return run_section(spec, sec_input, sec_sub, sec_section); }; });

  auto*       exel = app.add_subcommand("exel", "enumerate S(G)");
  std::size_t order = 2;
  std::string exel_input;
  bool        table = false;
  exel->add_option("--group-order", order, "cyclic group order");
  exel->add_option("--input", exel_input, "group as a semigroup JSON");
  exel->add_flag("--table", table, "include the Cayley table");
  exel->callback([&] { run = [&] { return run_exel(spec, order, exel_input, table); }; });

  auto*     action = app.add_subcommand("action", "build or verify twisted actions");
  BuildArgs build;
  action->require_subcommand(1);
  auto* ab = action->add_subcommand("build", "construct an action bundle");
  ab->add_option("--construction", build.construction)
      ->required()
      ->check(CLI::IsMember({"cross-section", "green", "trivial", "green-to-busby", "random-exterior", "partial-to-exel"}));
  ab->add_option("--input", build.input, "semigroup T");
  ab->add_option("--sub", build.sub, "normal Clifford N (default E)");
  ab->add_option("--section", build.section, "cross-section of T/N (default: search)");
  ab->add_option("--action", build.action, "action bundle to perturb");
  ab->add_option("--blocks", build.blocks, "matrix block sizes of the trivial action's algebra");
  ab->add_option("--group-order", build.group_order);
  ab->add_option("--block", build.block, "block size of the random partial action");
  ab->callback([&] {
    run = [&] {
      std::string const scalar = build.construction == "random-exterior" && !build.action.empty()
                                     ? bundle_scalar(read_json_file(build.action), spec)
                                     : spec.scalar;
      return with_scalar(scalar, [&](auto tag) { return build_action<decltype(tag)>(spec, build); });
    };
  });
  auto*       av = action->add_subcommand("verify", "verify an action bundle");
  std::string av_input;
  av->add_option("--input", av_input)->required();
  av->callback([&] { run = [&] { return run_action_verify(spec, av_input); }; });

  auto*       xp = app.add_subcommand("xprod", "crossed product of an action bundle");
  std::string xp_input;
  bool        covariant = false;
  xp->add_option("--input", xp_input)->required();
  xp->add_flag("--covariant", covariant, "also check the left-regular covariant representation");
  xp->callback([&] { run = [&] { return run_xprod(spec, xp_input, covariant); }; });

  auto*         dec = app.add_subcommand("decompose", "iterated crossed product decompositions");
  DecomposeArgs dargs;
  dec->add_option("--mode", dargs.mode)->check(CLI::IsMember({"green", "busby", "identities"}));
  dec->add_option("--input", dargs.input, "semigroup");
  dec->add_option("--sub", dargs.sub, "K (green) or L (busby)");
  dec->add_option("--normal", dargs.normal, "N for the canonical Green action (default E)");
  dec->add_option("--action", dargs.action, "Busby-Smith bundle (default: trivial action on C)");
  dec->add_option("--section", dargs.section, "cross-section of S/L");
  dec->add_flag("--adjoin-unit", dargs.adjoin, "append a unit to S and to the subsets");
  dec->callback([&] { run = [&] { return run_decompose(spec, dargs); }; });

  auto* paper = app.add_subcommand("paper-example", "19-element example and the acceptance table");
  paper->callback([&] { run = [&] { return run_paper_example(spec); }; });

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  spec.tol_set = tol->count() > 0;

  try {
    auto const out = run();
    emit(spec, out);
    return out.ok ? 0 : 1;
  } catch (InputError const& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (LimitError const& e) {
    std::cerr << "limit: " << e.what() << '\n';
    return 2;
  } catch (Json::exception const& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "failed: " << e.what() << '\n';
    return 1;
  }
}

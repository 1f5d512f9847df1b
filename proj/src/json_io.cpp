#include "twistcross/json_io.hpp"

#include <fstream>
#include <sstream>

namespace twistcross {

namespace {

std::size_t index_in(Json const& j, std::size_t size, char const* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0 || j.get<std::size_t>() >= size) {
    throw InputError(std::string(what) + " index out of range");
  }
  return j.get<std::size_t>();
}

mpq_class rational_from_json(Json const& j) {
  if (j.is_number_integer()) {
    return mpq_class(std::to_string(j.get<long long>()));
  }
  if (j.is_number_float()) {
    return mpq_class(j.get<double>());
  }
  if (j.is_string()) {
    mpq_class q;
    if (q.set_str(j.get<std::string>(), 10) != 0) {
      throw InputError("bad rational '" + j.get<std::string>() + "'");
    }
    q.canonicalize();
    return q;
  }
  throw InputError("rational must be a number or a \"p/q\" string");
}

Json rational_to_json(mpq_class const& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) {
    return q.get_num().get_si();
  }
  return q.get_str();
}

}  // namespace

Json parse_json(std::string const& text, std::string const& source) {
  try {
    return Json::parse(text);
  } catch (Json::parse_error const& e) {
    std::size_t line = 1, column = 1;
    std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t k = 0; k < stop; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InputError(source + ": malformed JSON at line " + std::to_string(line) + ", column "
                     + std::to_string(column));
  }
}

Json read_json_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open " + path);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path);
}

Json semigroup_to_json(FiniteInverseSemigroup const& s) {
  Json out{{"type", "cayley"}, {"size", s.size()}, {"product", s.product_rows()}, {"star", s.star_table()}};
  if (s.unit()) {
    out["unit"] = *s.unit();
  }
  std::vector<std::string> labels;
  for (Elem a = 0; a < s.size(); ++a) {
    labels.push_back(s.label(a));
  }
  out["labels"] = labels;
  return out;
}

FiniteInverseSemigroup semigroup_from_json(Json const& j, std::size_t cap) {
  if (!j.is_object()) {
    throw InputError("semigroup must be a JSON object");
  }
  auto const type = j.value("type", std::string("cayley"));
  if (type == "partial_bijections") {
    auto const degree = j.at("degree").get<std::size_t>();
    std::vector<PartialBijection> gens;
    for (auto const& g : j.at("generators")) {
      PartialBijection f = g.is_string() ? PartialBijection::parse(g.get<std::string>())
                                         : PartialBijection(g.get<std::vector<PartialBijection::value_type>>());
      if (f.degree() != degree) {
        throw InputError("generator " + f.to_string() + " does not have degree " + std::to_string(degree));
      }
      gens.push_back(std::move(f));
    }
    return generate_partial_bijections(gens, cap).semigroup;
  }
  if (type != "cayley") {
    throw InputError("unknown semigroup type '" + type + "'");
  }
  auto const n    = j.at("size").get<std::size_t>();
  auto const rows = j.at("product");
  auto const star = j.at("star");
  if (!rows.is_array() || rows.size() != n || !star.is_array() || star.size() != n) {
    throw InputError("cayley table does not match its size");
  }
  std::vector<std::vector<Elem>> product(n);
  std::vector<Elem>              inv(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (!rows[a].is_array() || rows[a].size() != n) {
      throw InputError("cayley row " + std::to_string(a) + " does not have " + std::to_string(n) + " entries");
    }
    for (auto const& x : rows[a]) {
      product[a].push_back(index_in(x, n, "product"));
    }
    inv[a] = index_in(star[a], n, "star");
  }
  FiniteInverseSemigroup s(product, std::move(inv));
  if (j.contains("unit") && (!s.unit() || *s.unit() != index_in(j.at("unit"), n, "unit"))) {
    throw InputError("declared unit is not the unit of the table");
  }
  if (j.contains("labels")) {
    auto labels = j.at("labels").get<std::vector<std::string>>();
    if (labels.size() != n) {
      throw InputError("labels do not match the size");
    }
    s.set_labels(std::move(labels));
  }
  return s;
}

Json subset_to_json(Subset const& set) { return set; }

Subset subset_from_json(Json const& j, std::size_t size) {
  Json const& arr = j.is_object() ? j.at("subset") : j;
  if (!arr.is_array()) {
    throw InputError("subset must be an array of element indices");
  }
  Subset out;
  for (auto const& x : arr) {
    out.push_back(index_in(x, size, "subset"));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Subset subset_from_json(Json const& j, FiniteInverseSemigroup const& s) {
  Json const& arr = j.is_object() ? j.at("subset") : j;
  if (!arr.is_array()) {
    throw InputError("subset must be an array of element indices or labels");
  }
  Json indices = Json::array();
  for (auto const& x : arr) {
    if (x.is_string()) {
      auto const found = s.find_label(x.get<std::string>());
      if (!found) {
        throw InputError("subset: no element labelled '" + x.get<std::string>() + "'");
      }
      indices.push_back(*found);
    } else {
      indices.push_back(x);
    }
  }
  return subset_from_json(indices, s.size());
}

Json congruence_to_json(Congruence const& c) { return c.classes(); }

Congruence congruence_from_json(Json const& j, std::size_t size) {
  if (!j.is_array()) {
    throw InputError("congruence must be an array of classes");
  }
  std::vector<std::vector<Elem>> classes;
  for (auto const& cls : j) {
    std::vector<Elem> members;
    for (auto const& x : cls) {
      members.push_back(index_in(x, size, "congruence"));
    }
    classes.push_back(std::move(members));
  }
  return Congruence(size, std::move(classes));
}

Json section_to_json(CrossSection const& c) {
  Json out = Json::object();
  for (std::size_t k = 0; k < c.image.size(); ++k) {
    out[std::to_string(k)] = c.image[k];
  }
  return out;
}

CrossSection section_from_json(Json const& j, std::size_t classes) {
  CrossSection out{std::vector<Elem>(classes, 0)};
  std::vector<bool> seen(classes, false);
  auto put = [&](std::size_t cls, Json const& v) {
    if (cls >= classes || seen[cls]) {
      throw InputError("section class index out of range or repeated");
    }
    seen[cls]      = true;
    out.image[cls] = v.get<Elem>();
  };
  if (j.is_array()) {
    for (std::size_t k = 0; k < j.size(); ++k) {
      put(k, j[k]);
    }
  } else if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      std::size_t cls = 0;
      try {
        cls = std::stoul(it.key());
      } catch (std::exception const&) {
        throw InputError("section key '" + it.key() + "' is not a class index");
      }
      put(cls, it.value());
    }
  } else {
    throw InputError("section must be an object or an array");
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw InputError("section does not cover every class");
  }
  return out;
}

Json exel_to_json(ExelElement const& x) {
  return {{"P", x.brackets()}, {"s", x.s}, {"label", to_canonical_string(x)}};
}

ExelElement exel_from_json(Json const& j, std::shared_ptr<Group const> carrier) {
  return make_exel(std::move(carrier), j.at("P").get<std::vector<Elem>>(), j.at("s").get<Elem>());
}

Json exact_to_json(Exact const& x) { return Json::array({rational_to_json(x.real()), rational_to_json(x.imag())}); }

Exact exact_from_json(Json const& j) {
  if (j.is_array()) {
    if (j.size() != 2) {
      throw InputError("scalar pair must have two entries");
    }
    return Exact(rational_from_json(j[0]), rational_from_json(j[1]));
  }
  return Exact(rational_from_json(j));
}

}  // namespace twistcross

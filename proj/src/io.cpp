#include "flagj/io.hpp"

#include <fstream>
#include <set>

#include "flagj/errors.hpp"

namespace flagj {

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("config '" + path + "' is not valid JSON: " + e.what());
  }
}

Rational rational_from_json(const Json& j, const std::string& what) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InputError(what + " must be a rational given as a string like \"3/4\"");
}

Gaussian gaussian_from_json(const Json& j, const std::string& what) {
  if (j.is_string()) return Gaussian::parse(j.get<std::string>());
  if (j.is_number_integer()) return Gaussian(j.get<long>());
  throw InputError(what + " must be a Gaussian rational given as a string like \"1/2-1/3i\"");
}

namespace {

AlgebraSpec algebra_from_json(const Json& j) {
  if (j.is_string()) return AlgebraSpec::parse(j.get<std::string>());
  if (!j.is_object() || !j.contains("family") || !j.contains("rank")) {
    throw InputError("algebra must be {\"family\": \"A\", \"rank\": 3} or \"A3\"");
  }
  const Json& f = j.at("family");
  const Json& r = j.at("rank");
  if (!f.is_string() || f.get<std::string>().size() != 1 || !r.is_number_integer()) {
    throw InputError("algebra family must be a single letter and rank an integer");
  }
  return AlgebraSpec::make(f.get<std::string>()[0], r.get<int>());
}

const Json& require_object(const Json& j, const std::string& what) {
  if (!j.is_object()) throw InputError(what + " must be a JSON object");
  return j;
}

// Keys of a root-keyed object resolved to positive indices, rejecting duplicates.
std::vector<std::pair<std::size_t, const Json*>> root_entries(const Json& j, const RootSystem& rs,
                                                               const std::string& what) {
  require_object(j, what);
  std::vector<std::pair<std::size_t, const Json*>> out;
  std::set<std::size_t> seen;
  for (const auto& [key, value] : j.items()) {
    const std::size_t r = rs.parse_positive_root(key);
    if (!seen.insert(r).second) throw InputError(what + " lists root " + rs.name(r) + " twice");
    out.emplace_back(r, &value);
  }
  return out;
}

RootJ block_from_json(const Json& j, const std::string& root) {
  require_object(j, "block for " + root);
  if (!j.contains("kind") || !j.at("kind").is_string()) throw InputError("block for " + root + " needs a \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "complex") {
    if (!j.contains("sign") || !j.at("sign").is_number_integer()) {
      throw InputError("complex block for " + root + " needs an integer \"sign\"");
    }
    const int sign = j.at("sign").get<int>();
    if (sign != 1 && sign != -1) throw InputError("complex block for " + root + " needs sign +1 or -1");
    return Complex{sign};
  }
  if (kind == "noncomplex") {
    if (!j.contains("a") || !j.contains("x")) throw InputError("non-complex block for " + root + " needs \"a\" and \"x\"");
    NonComplex n;
    n.a = rational_from_json(j.at("a"), "a for " + root);
    n.x = rational_from_json(j.at("x"), "x for " + root);
    if (n.x.is_zero()) throw InputError("non-complex block for " + root + " needs x != 0");
    n.y = j.contains("y") ? rational_from_json(j.at("y"), "y for " + root) : noncomplex_from(n.a, n.x).y;
    return n;
  }
  throw InputError("block kind for " + root + " must be \"complex\" or \"noncomplex\"");
}

}  // namespace

Structure structure_from_json(const Json& j, const RootSystem& rs) {
  require_object(j, "structure");
  if (!j.contains("blocks")) throw InputError("structure needs a \"blocks\" object");
  std::vector<std::optional<RootJ>> blocks(rs.size());
  for (const auto& [r, value] : root_entries(j.at("blocks"), rs, "structure blocks")) {
    blocks[r] = block_from_json(*value, rs.name(r));
  }
  Structure s;
  std::string missing;
  for (std::size_t r = 0; r < rs.size(); ++r) {
    if (!blocks[r]) {
      missing += (missing.empty() ? "" : ", ") + rs.name(r);
      continue;
    }
    s.blocks.push_back(*blocks[r]);
  }
  if (!missing.empty()) throw InputError("structure has no block for: " + missing);
  require_valid(rs, s);
  return s;
}

Json block_to_json(const RootJ& j) {
  Json out;
  if (const auto* c = std::get_if<Complex>(&j)) {
    out["kind"] = "complex";
    out["sign"] = c->sign;
    return out;
  }
  const auto& n = std::get<NonComplex>(j);
  out["kind"] = "noncomplex";
  out["a"] = n.a.str();
  out["x"] = n.x.str();
  out["y"] = n.y.str();
  return out;
}

Json structure_to_json(const Structure& s, const RootSystem& rs) {
  Json blocks = Json::object();
  for (std::size_t r = 0; r < s.blocks.size(); ++r) blocks[rs.name(r)] = block_to_json(s.blocks[r]);
  return Json{{"blocks", blocks}};
}

InvariantTwoForm two_form_from_json(const Json& j, const RootSystem& rs) {
  InvariantTwoForm w = InvariantTwoForm::zero(rs);
  for (const auto& [r, value] : root_entries(j, rs, "omega")) w.diag[r] = gaussian_from_json(*value, "omega at " + rs.name(r));
  return w;
}

Json two_form_to_json(const InvariantTwoForm& w, const RootSystem& rs) {
  Json out = Json::object();
  for (std::size_t r = 0; r < w.diag.size(); ++r) out[rs.name(r)] = w.diag[r].str();
  return out;
}

Json three_form_to_json(const InvariantThreeForm& om, const RootSystem& rs) {
  Json out = Json::object();
  for (std::size_t k = 0; k < om.vals.size(); ++k) out[rs.triple_name(rs.triples()[k])] = om.vals[k].str();
  return out;
}

Json signed_selection_to_json(const std::vector<int>& p, const RootSystem& rs) {
  Json out = Json::array();
  for (std::size_t r = 0; r < p.size(); ++r) out.push_back(rs.name(SignedRoot{r, p[r]}));
  return out;
}

RunConfig parse_config(const Json& j, const std::optional<AlgebraSpec>& algebra) {
  require_object(j, "config");
  static const std::set<std::string> known{"algebra", "H", "structure", "theta", "seeds", "signs", "omega"};
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) throw InputError("unknown config field \"" + key + "\"");
  }
  RunConfig cfg;
  if (j.contains("algebra")) {
    cfg.algebra = algebra_from_json(j.at("algebra"));
    if (algebra && !(*algebra == cfg.algebra)) {
      throw InputError("--algebra " + algebra->name() + " conflicts with config algebra " + cfg.algebra.name());
    }
  } else if (algebra) {
    cfg.algebra = *algebra;
  } else {
    throw InputError("no algebra given (use --algebra or an \"algebra\" field)");
  }
  const RootSystem rs = build_root_system(cfg.algebra);

  if (j.contains("H")) {
    const Json& h = j.at("H");
    if (!h.is_array()) throw InputError("H must be an array of positive rationals");
    RegularElement reg;
    for (const Json& v : h) reg.c.push_back(rational_from_json(v, "H entry"));
    reg.validate(rs);
    cfg.H = std::move(reg);
  }
  if (j.contains("structure")) cfg.structure = structure_from_json(j.at("structure"), rs);
  if (j.contains("theta")) {
    const Json& t = j.at("theta");
    if (!t.is_array()) throw InputError("theta must be an array of simple root names");
    std::vector<std::string> names;
    for (const Json& v : t) {
      if (!v.is_string()) throw InputError("theta entries must be root names");
      names.push_back(v.get<std::string>());
    }
    cfg.theta = rs.parse_simple_set(names);
  }
  if (j.contains("seeds")) {
    for (const auto& [r, value] : root_entries(j.at("seeds"), rs, "seeds")) {
      if (!rs.is_simple(r)) throw InputError("seed given for non-simple root " + rs.name(r));
      require_object(*value, "seed for " + rs.name(r));
      if (!value->contains("a") || !value->contains("x")) throw InputError("seed for " + rs.name(r) + " needs \"a\" and \"x\"");
      cfg.seeds[rs.root(r).support().front()] = Seed{rational_from_json(value->at("a"), "seed a for " + rs.name(r)),
                                                     rational_from_json(value->at("x"), "seed x for " + rs.name(r))};
    }
  }
  if (j.contains("signs")) {
    std::vector<int> signs(rs.size(), 1);
    for (const auto& [r, value] : root_entries(j.at("signs"), rs, "signs")) {
      if (!value->is_number_integer() || (value->get<int>() != 1 && value->get<int>() != -1)) {
        throw InputError("sign for " + rs.name(r) + " must be 1 or -1");
      }
      signs[r] = value->get<int>();
    }
    cfg.signs = std::move(signs);
  }
  if (j.contains("omega")) cfg.omega = two_form_from_json(j.at("omega"), rs);
  return cfg;
}

}  // namespace flagj

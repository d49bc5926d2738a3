#include "cohomolib/json_io.hpp"

#include <algorithm>

namespace cohomolib {

namespace {

const Json& expect_object(const Json& j, const char* what) {
  if (!j.is_object()) fail("InputInvalid", std::string(what) + " must be a JSON object");
  return j;
}

const Json& expect_field(const Json& j, const char* key, const char* what) {
  auto it = j.find(key);
  if (it == j.end())
    fail("InputInvalid", std::string(what) + " is missing the \"" + key + "\" field");
  return *it;
}

std::vector<int> int_array(const Json& j, const char* what) {
  if (!j.is_array()) fail("InputInvalid", std::string(what) + " must be an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number_integer())
      fail("InputInvalid", std::string(what) + " must contain integers only");
    out.push_back(e.get<int>());
  }
  return out;
}

Json resolve(const Json& j, const RefLoader& load, const char* what) {
  if (j.is_string()) {
    if (!load)
      fail("InputInvalid", std::string(what) + ": file references are not available here");
    return load(j.get<std::string>());
  }
  return j;
}

} // namespace

GroupPtr group_from_json(const Json& j, const RefLoader& load, int max_order) {
  Json doc = resolve(j, load, "group");
  expect_object(doc, "group");
  std::string name = doc.value("name", std::string{});
  if (doc.contains("permutation_generators")) {
    const Json& gens_j = doc["permutation_generators"];
    int degree = expect_field(doc, "degree", "permutation group").get<int>();
    if (degree < 1) fail("InputInvalid", "degree must be positive");
    if (!gens_j.is_array()) fail("InputInvalid", "permutation_generators must be an array");
    std::vector<std::vector<int>> gens;
    for (const auto& gen : gens_j) {
      // a generator is a list of cycles, each a list of points
      std::vector<int> perm(degree);
      for (int i = 0; i < degree; ++i) perm[i] = i;
      if (!gen.is_array()) fail("InputInvalid", "each generator must be a list of cycles");
      for (const auto& cyc : gen) {
        auto points = int_array(cyc, "cycle");
        for (size_t i = 0; i < points.size(); ++i) {
          int from = points[i], to = points[(i + 1) % points.size()];
          if (from < 0 || from >= degree || to < 0 || to >= degree)
            fail("InputInvalid", "cycle point out of range");
          perm[from] = to;
        }
      }
      gens.push_back(std::move(perm));
    }
    return group_from_permutations(gens, degree, max_order, std::move(name));
  }
  const Json& table_j = expect_field(doc, "table", "group");
  if (!table_j.is_array()) fail("InputInvalid", "group table must be an array of rows");
  std::vector<std::vector<int>> table;
  for (const auto& row : table_j) table.push_back(int_array(row, "group table row"));
  if (doc.contains("order") &&
      doc["order"].get<size_t>() != table.size())
    fail("InputInvalid", "declared order disagrees with the table size");
  std::vector<std::string> labels;
  if (doc.contains("labels"))
    for (const auto& l : doc["labels"]) labels.push_back(l.get<std::string>());
  return validate_group(table, std::move(name), std::move(labels));
}

Json group_to_json(const FiniteGroup& g) {
  Json out = Json::object();
  out["order"] = g.order;
  Json table = Json::array();
  for (int a = 0; a < g.order; ++a) {
    Json row = Json::array();
    for (int b = 0; b < g.order; ++b) row.push_back(g.mul(a, b));
    table.push_back(std::move(row));
  }
  out["table"] = std::move(table);
  if (!g.name.empty()) out["name"] = g.name;
  if (!g.labels.empty()) out["labels"] = g.labels;
  return out;
}

ActionPtr action_from_json(const Json& j, const RefLoader& load, const Budget& budget) {
  Json doc = resolve(j, load, "action");
  expect_object(doc, "action");
  auto gamma = group_from_json(expect_field(doc, "gamma", "action"), load, budget.max_gamma);
  auto target =
      group_from_json(expect_field(doc, "target", "action"), load, budget.max_target);
  budget.check_gamma(gamma->order);
  budget.check_target(target->order);
  const Json& perms_j = expect_field(doc, "automorphisms", "action");
  if (!perms_j.is_array() || perms_j.size() != static_cast<size_t>(gamma->order))
    fail("InputInvalid", "action needs one automorphism per acting element");
  std::vector<std::vector<int>> perms;
  for (const auto& p : perms_j) perms.push_back(int_array(p, "automorphism"));
  return make_action(std::move(gamma), std::move(target), perms, budget.aut_bound);
}

Json action_to_json(const GammaAction& a) {
  Json out = Json::object();
  out["gamma"] = group_to_json(*a.gamma);
  out["target"] = group_to_json(*a.target);
  Json perms = Json::array();
  for (int s = 0; s < a.gamma->order; ++s) perms.push_back(a.aut->perms[a.action[s]]);
  out["automorphisms"] = std::move(perms);
  return out;
}

Cocycle1 cocycle1_from_json(ActionPtr ctx, const Json& j) {
  expect_object(j, "cocycle");
  return make_cocycle1(std::move(ctx), int_array(expect_field(j, "values", "cocycle"),
                                                 "cocycle values"));
}

Json cocycle1_to_json(const Cocycle1& c) { return Json{{"values", c.values}}; }

Cocycle2 cocycle2_from_json(ActionPtr ctx, const Json& j) {
  expect_object(j, "cocycle");
  return make_cocycle2(std::move(ctx), int_array(expect_field(j, "values", "cocycle"),
                                                 "cocycle values"));
}

Json cocycle2_to_json(const Cocycle2& c) { return Json{{"values", c.values}}; }

LienPtr lien_from_json(const Json& j, const RefLoader& load, const Budget& budget) {
  Json doc = resolve(j, load, "lien");
  expect_object(doc, "lien");
  auto gamma = group_from_json(expect_field(doc, "gamma", "lien"), load, budget.max_gamma);
  auto g = group_from_json(expect_field(doc, "g", "lien"), load, budget.max_target);
  budget.check_gamma(gamma->order);
  budget.check_target(g->order);
  auto kappa = int_array(expect_field(doc, "kappa", "lien"), "kappa");
  return make_lien(std::move(gamma), std::move(g), kappa, budget.aut_bound);
}

Json lien_to_json(const Lien& lien) {
  Json out = Json::object();
  out["gamma"] = group_to_json(*lien.gamma);
  out["g"] = group_to_json(*lien.g);
  out["kappa"] = lien.kappa;
  return out;
}

ExtensionCocycle extension_from_json(LienPtr lien, const Json& j) {
  expect_object(j, "extension");
  auto phi = int_array(expect_field(j, "phi", "extension"), "phi");
  auto gvals = int_array(expect_field(j, "g", "extension"), "g");
  return make_extension(std::move(lien), std::move(phi), std::move(gvals));
}

Json extension_to_json(const ExtensionCocycle& e) {
  return Json{{"g", e.gvals}, {"phi", e.phi}};
}

TameLocalDatum local_datum_from_json(const Json& j, const RefLoader& load, int max_order) {
  expect_object(j, "local datum");
  auto g = group_from_json(expect_field(j, "group", "local datum"), load, max_order);
  const Json& q = expect_field(j, "q", "local datum");
  if (!q.is_number_integer()) fail("InputInvalid", "q must be an integer");
  return make_local_datum(std::move(g), q.get<long long>());
}

Json local_class_to_json(const LocalClass& c) {
  auto f = classify_local_class(c);
  Json flags = Json::object();
  flags["cyclic"] = f.cyclic;
  flags["ramified"] = f.ramified;
  flags["totally_ramified"] = f.totally_ramified;
  flags["unramified"] = f.unramified;
  return Json{{"flags", std::move(flags)}, {"s", c.s}, {"t", c.t}};
}

namespace {

PlaceKind kind_from_string(const std::string& s) {
  if (s == "finite") return PlaceKind::Finite;
  if (s == "archimedean") return PlaceKind::Archimedean;
  if (s == "divides_n") return PlaceKind::DividesN;
  fail("InputInvalid", "unknown place kind " + s);
}

} // namespace

GlobalDatum global_datum_from_json(const Json& j, const RefLoader& load, int max_order) {
  Json doc = resolve(j, load, "global datum");
  expect_object(doc, "global datum");
  auto gamma = group_from_json(expect_field(doc, "gamma", "global datum"), load, max_order);
  const Json& n_j = expect_field(doc, "n", "global datum");
  if (!n_j.is_number_integer()) fail("InputInvalid", "n must be an integer");
  auto chi = int_array(expect_field(doc, "chi", "global datum"), "chi");
  auto np = int_array(expect_field(doc, "n_prime", "global datum"), "n_prime");
  auto nl = int_array(expect_field(doc, "n_l", "global datum"), "n_l");
  std::vector<PlaceSpec> places;
  const Json& places_j = expect_field(doc, "places", "global datum");
  if (!places_j.is_array()) fail("InputInvalid", "places must be an array");
  for (const auto& p : places_j) {
    expect_object(p, "place");
    std::string name = expect_field(p, "name", "place").get<std::string>();
    PlaceKind kind = kind_from_string(p.value("kind", std::string("finite")));
    auto gv = int_array(expect_field(p, "gamma_v", "place"), "gamma_v");
    auto iv = int_array(expect_field(p, "inertia", "place"), "inertia");
    int frob = p.value("frobenius", 0);
    int tau = p.value("tau", 0);
    int q = p.value("q_mod_n", 1);
    places.push_back(make_place(std::move(name), kind, make_subgroup(gamma, gv),
                                make_subgroup(gamma, iv), frob, tau, q));
  }
  return make_global_datum(gamma, n_j.get<int>(), std::move(chi),
                           make_subgroup(gamma, np), make_subgroup(gamma, nl),
                           std::move(places));
}

Json global_datum_to_json(const GlobalDatum& d) {
  Json out = Json::object();
  out["gamma"] = group_to_json(*d.gamma);
  out["n"] = d.n;
  out["chi"] = d.chi;
  out["n_prime"] = d.n_prime.elements;
  out["n_l"] = d.n_l.elements;
  Json places = Json::array();
  for (const auto& v : d.places) {
    Json p = Json::object();
    p["frobenius"] = v.frobenius;
    p["gamma_v"] = v.gamma_v.elements;
    p["inertia"] = v.inertia.elements;
    p["kind"] = to_string(v.kind);
    p["name"] = v.name;
    p["q_mod_n"] = v.q_mod_n;
    p["tau"] = v.tau;
    places.push_back(std::move(p));
  }
  out["places"] = std::move(places);
  return out;
}

LocalTargets targets_from_json(const GlobalDatum& d, ActionPtr action, const Json& j) {
  expect_object(j, "targets");
  auto names_j = expect_field(j, "places", "targets");
  auto classes_j = expect_field(j, "classes", "targets");
  if (!names_j.is_array() || !classes_j.is_array() || names_j.size() != classes_j.size())
    fail("InputInvalid", "targets need matching places and classes arrays");
  LocalTargets out;
  for (size_t i = 0; i < names_j.size(); ++i) {
    std::string name = names_j[i].get<std::string>();
    const auto& v = d.place(name);
    auto ra = restrict_action(action, v.gamma_v);
    out.places.push_back(std::move(name));
    out.classes.push_back(class_of(cocycle1_from_json(ra.ctx, classes_j[i])));
  }
  return out;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace cohomolib

// Batch front end: load JSON descriptions, dispatch to the library, emit
// canonical JSON. Exit codes: 0 success/solved, 2 input or hypothesis
// rejection, 3 infeasible/negative answer, 4 budget exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cohomolib/json_io.hpp"

namespace fs = std::filesystem;
using namespace cohomolib;

namespace {

constexpr const char* kSchema = "cohomolib/1";

Json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) fail("InputInvalid", "cannot open " + path.string());
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    fail("InputInvalid", path.string() + ": " + e.what());
  }
  return j;
}

// References inside a document are paths relative to that document's folder.
RefLoader loader_for(const fs::path& doc_path) {
  fs::path base = doc_path.parent_path();
  return [base](const std::string& ref) { return read_json_file(base / ref); };
}

void emit(Json out, const Budget& budget) {
  out["schema"] = kSchema;
  out["budget"] = Json{{"aut_bound", budget.aut_bound},
                       {"max_gamma", budget.max_gamma},
                       {"max_target", budget.max_target}};
  std::cout << canonical_dump(out);
}

Json flags_json(const LocalizeResult& lr) {
  return Json{{"cyclic", lr.cyclic_at_v},
              {"ramified", lr.ramified_at_v},
              {"totally_ramified", lr.totally_ramified_at_v},
              {"unramified", lr.unramified_at_v}};
}

Json per_place_json(const GlobalDatum& d, const CohClass1& cls) {
  Json per_place = Json::array();
  for (const auto& v : d.places) {
    auto lr = localize(d, cls, v.name);
    per_place.push_back(Json{{"flags", flags_json(lr)},
                             {"place", v.name},
                             {"values", lr.cls.rep.values}});
  }
  return per_place;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact finite-group cohomology toolkit"};
  app.require_subcommand(1);
  app.fallthrough(); // allow --budget/--threads after the verb
  int budget_knob = 0;
  int threads = 1;
  app.add_option("--budget", budget_knob,
                 "override all enumeration bounds with one value");
  app.add_option("--threads", threads, "inner parallelism (output-invariant)");

  std::string in1, in2, in3;
  long long q_override = -1;
  int degree = 1;
  std::vector<std::string> place_names;

  auto* c_group = app.add_subcommand("group-info", "validate a group and report invariants");
  c_group->add_option("group", in1)->required();
  auto* c_h1 = app.add_subcommand("h1", "all H1 classes of an action");
  c_h1->add_option("action", in1)->required();
  auto* c_h2 = app.add_subcommand("h2", "all H2 classes of an abelian action");
  c_h2->add_option("action", in1)->required();
  auto* c_lh2 = app.add_subcommand("lien-h2", "all extension classes of a lien");
  c_lh2->add_option("lien", in1)->required();
  auto* c_ln = app.add_subcommand("lien-neutral", "test an extension class for neutrality");
  c_ln->add_option("lien", in1)->required();
  c_ln->add_option("extension", in2)->required();
  auto* c_lc = app.add_subcommand("local-classify", "enumerate and classify tame local classes");
  c_lc->add_option("datum", in1)->required();
  c_lc->add_option("--q", q_override, "override the residue parameter");
  auto* c_ll = app.add_subcommand("local-lift", "lift a totally ramified cyclic class");
  c_ll->add_option("problem", in1)->required();
  auto* c_gv = app.add_subcommand("global-validate", "check a datum against an action");
  c_gv->add_option("datum", in1)->required();
  c_gv->add_option("action", in2)->required();
  auto* c_gs = app.add_subcommand("global-sha", "joint localization kernel");
  c_gs->add_option("datum", in1)->required();
  c_gs->add_option("action", in2)->required();
  c_gs->add_option("--degree", degree)->check(CLI::Range(1, 2));
  auto* c_gw = app.add_subcommand("global-weak-approx", "local-tuple surjectivity check");
  c_gw->add_option("datum", in1)->required();
  c_gw->add_option("action", in2)->required();
  c_gw->add_option("--places", place_names)->delimiter(',');
  auto* c_gd = app.add_subcommand("global-devissage", "solve the prescribed-local-classes problem");
  c_gd->add_option("datum", in1)->required();
  c_gd->add_option("action", in2)->required();
  c_gd->add_option("targets", in3);
  auto* c_gh = app.add_subcommand("global-hasse", "neutrality certificate search");
  c_gh->add_option("datum", in1)->required();
  c_gh->add_option("lien", in2)->required();
  c_gh->add_option("extension", in3)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e); // --help
    std::cerr << canonical_dump(Json{
        {"error", {{"code", "InputInvalid"}, {"detail", ""}, {"message", e.what()}}}});
    return 2;
  }

  Budget budget;
  if (budget_knob > 0) {
    budget.max_gamma = budget_knob;
    budget.max_target = budget_knob;
    budget.aut_bound = budget_knob;
  }
  budget.threads = threads > 0 ? threads : 1;

  if (*c_group) {
    auto g = group_from_json(read_json_file(in1), loader_for(in1), budget.max_target);
    Json out = Json::object();
    out["abelian"] = g->abelian();
    out["cyclic"] = g->cyclic();
    out["exponent"] = g->exponent;
    out["order"] = g->order;
    out["center_order"] = center(g).size();
    Json lens = Json::array();
    for (const auto& term : derived_series(g)) lens.push_back(term.size());
    out["derived_series_lengths"] = std::move(lens);
    out["solvable"] = is_solvable(g);
    emit(std::move(out), budget);
    return 0;
  }
  if (*c_h1) {
    auto ctx = action_from_json(read_json_file(in1), loader_for(in1), budget);
    Json classes = Json::array();
    for (const auto& c : h1_enumerate(ctx, budget))
      classes.push_back(cocycle1_to_json(c.rep));
    Json out{{"classes", std::move(classes)}};
    out["count"] = out["classes"].size();
    emit(std::move(out), budget);
    return 0;
  }
  if (*c_h2) {
    auto ctx = action_from_json(read_json_file(in1), loader_for(in1), budget);
    Json classes = Json::array();
    for (const auto& c : h2_abelian_enumerate(ctx, budget))
      classes.push_back(cocycle2_to_json(c));
    Json out{{"classes", std::move(classes)}};
    out["count"] = out["classes"].size();
    emit(std::move(out), budget);
    return 0;
  }
  if (*c_lh2) {
    auto lien = lien_from_json(read_json_file(in1), loader_for(in1), budget);
    Json classes = Json::array();
    for (const auto& e : h2_lien_enumerate(lien, budget)) {
      Json item = extension_to_json(e);
      item["neutral"] = is_neutral(e, budget).has_value();
      classes.push_back(std::move(item));
    }
    Json out{{"classes", std::move(classes)}};
    out["count"] = out["classes"].size();
    emit(std::move(out), budget);
    return 0;
  }
  if (*c_ln) {
    auto lien = lien_from_json(read_json_file(in1), loader_for(in1), budget);
    auto e = extension_from_json(lien, read_json_file(in2));
    auto w = is_neutral(e, budget);
    Json out{{"neutral", w.has_value()}};
    if (w) out["witness"] = Json{{"h", w->h}, {"phi_hom", w->phi_hom}};
    emit(std::move(out), budget);
    return w ? 0 : 3;
  }
  if (*c_lc) {
    Json doc = read_json_file(in1);
    if (q_override > 0) doc["q"] = q_override;
    auto d = local_datum_from_json(doc, loader_for(in1), budget.max_target);
    Json classes = Json::array();
    int unramified = 0, totally_ramified = 0;
    for (const auto& c : local_h1_enumerate(d, budget)) {
      auto f = classify_local_class(c);
      unramified += f.unramified ? 1 : 0;
      totally_ramified += f.totally_ramified ? 1 : 0;
      classes.push_back(local_class_to_json(c));
    }
    Json out{{"classes", std::move(classes)}};
    out["count"] = out["classes"].size();
    out["q_mod"] = d.q_mod;
    out["unramified_count"] = unramified;
    out["totally_ramified_count"] = totally_ramified;
    emit(std::move(out), budget);
    return 0;
  }
  if (*c_ll) {
    Json doc = read_json_file(in1);
    auto load = loader_for(in1);
    auto d = local_datum_from_json(doc, load, budget.max_target);
    if (!doc.contains("quotient") || !doc.contains("images") || !doc.contains("class"))
      fail("InputInvalid", "lift problem needs \"quotient\", \"images\" and \"class\"");
    auto h = group_from_json(doc["quotient"], load, budget.max_target);
    std::vector<int> images;
    for (const auto& e : doc["images"]) images.push_back(e.get<int>());
    GroupHom p = make_hom(d.g, h, std::move(images));
    auto dh = make_local_datum(h, doc["q"].get<long long>());
    auto cls = make_local_class(dh, doc["class"]["s"].get<int>(),
                                doc["class"]["t"].get<int>());
    auto lifted = lift_totally_ramified(d, p, cls);
    Json out{{"lift", local_class_to_json(lifted)},
             {"pushes_back", pushforward_local(lifted, p) ==
                                 canonical_local_class(cls)}};
    emit(std::move(out), budget);
    return 0;
  }
  if (*c_gv) {
    auto d = global_datum_from_json(read_json_file(in1), loader_for(in1), budget.max_gamma);
    auto ctx = action_from_json(read_json_file(in2), loader_for(in2), budget);
    auto r = datum_validate(d, ctx);
    Json out{{"bad_primes", r.bad_primes},
             {"chebotarev_complete", r.chebotarev_complete},
             {"frobenius_mismatch", r.frobenius_mismatch},
             {"ok", r.ok()},
             {"p_places", r.p_places},
             {"splits_g", r.splits_g}};
    emit(std::move(out), budget);
    return r.ok() ? 0 : 3;
  }
  if (*c_gs) {
    auto d = global_datum_from_json(read_json_file(in1), loader_for(in1), budget.max_gamma);
    auto ctx = action_from_json(read_json_file(in2), loader_for(in2), budget);
    Json classes = Json::array();
    if (degree == 1)
      for (const auto& c : sha1(d, ctx, budget)) classes.push_back(cocycle1_to_json(c.rep));
    else
      for (const auto& c : sha2(d, ctx, budget)) classes.push_back(cocycle2_to_json(c));
    Json out{{"classes", std::move(classes)}, {"degree", degree}};
    out["count"] = out["classes"].size();
    emit(std::move(out), budget);
    return 0;
  }
  if (*c_gw) {
    auto d = global_datum_from_json(read_json_file(in1), loader_for(in1), budget.max_gamma);
    auto ctx = action_from_json(read_json_file(in2), loader_for(in2), budget);
    auto r = weak_approx_check(d, ctx, place_names, budget);
    Json out{{"surjective", r.surjective}};
    if (!r.surjective) out["missing"] = r.missing;
    emit(std::move(out), budget);
    return r.surjective ? 0 : 3;
  }
  if (*c_gd) {
    auto d = global_datum_from_json(read_json_file(in1), loader_for(in1), budget.max_gamma);
    auto ctx = action_from_json(read_json_file(in2), loader_for(in2), budget);
    LocalTargets targets;
    if (!in3.empty()) targets = targets_from_json(d, ctx, read_json_file(in3));
    auto r = devissage_solve(d, ctx, targets, budget);
    Json out{{"trace", r.trace}};
    if (r.status == SolveResult::Status::Solved) {
      out["status"] = "solved";
      out["class"] = r.cls->rep.values;
      out["per_place"] = per_place_json(d, *r.cls);
    } else {
      out["status"] = "infeasible";
    }
    emit(std::move(out), budget);
    return r.status == SolveResult::Status::Solved ? 0 : 3;
  }
  if (*c_gh) {
    auto d = global_datum_from_json(read_json_file(in1), loader_for(in1), budget.max_gamma);
    auto lien = lien_from_json(read_json_file(in2), loader_for(in2), budget);
    auto e = extension_from_json(lien, read_json_file(in3));
    auto r = hasse_solve(d, lien, e, budget);
    Json out{{"trace", r.trace}};
    if (r.status == HasseResult::Status::Certificate) {
      out["status"] = "certificate";
      out["certificate"] = Json{{"alpha", r.cert->alpha.rep.values},
                                {"f0", r.cert->f0},
                                {"splitting", r.cert->splitting}};
    } else {
      out["status"] = "obstruction";
    }
    emit(std::move(out), budget);
    return r.status == HasseResult::Status::Certificate ? 0 : 3;
  }
  return 2;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << canonical_dump(Json{{"error",
                                      {{"code", e.code()},
                                       {"detail", ""},
                                       {"message", e.what()}}}});
    return std::string(e.code()) == "BudgetExceeded" ? 4 : 2;
  } catch (const std::exception& e) {
    std::cerr << canonical_dump(
        Json{{"error",
              {{"code", "Internal"}, {"detail", ""}, {"message", e.what()}}}});
    return 2;
  }
}

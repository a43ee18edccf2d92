// csg: build, check and grade composition superalgebras over exact fields.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>

#include "csg/acceptance.hpp"
#include "csg/axioms.hpp"
#include "csg/catalog.hpp"
#include "csg/io.hpp"

using namespace csg;

namespace {

struct Config {
  std::string field;
  std::string construction;
  BuildOptions opts;
  std::string catalog_id;
  std::string grading_file;
  std::uint64_t budget = SearchBudget{}.max_nodes;
  std::string out;
};

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool usage_kind(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse:
    case ErrorKind::UnknownField:
    case ErrorKind::InfiniteField:
    case ErrorKind::FieldConditionUnmet:
    case ErrorKind::WrongCharacteristic:
    case ErrorKind::NoCubeRoot:
    case ErrorKind::ZeroAlpha:
    case ErrorKind::DimensionTooLarge:
    case ErrorKind::SupportTooLarge:
    case ErrorKind::Unsupported:
      return true;
    default:
      return false;
  }
}

void emit(const Config& c, const Json& j) {
  std::string text = j.dump(2) + "\n";
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw Usage("cannot write " + c.out);
  f << text;
}

const Field& field_of(const Config& c, const char* fallback = nullptr) {
  if (c.field.empty()) {
    if (!fallback) throw Usage("--field is required");
    return Field::parse(fallback);
  }
  return Field::parse(c.field);
}

SearchBudget budget_of(const Config& c) {
  if (c.budget == 0) throw Usage("--budget must be positive");
  return SearchBudget{c.budget};
}

Json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Usage("cannot read " + path);
  try {
    return Json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
}

struct Loaded {
  AlgebraPtr alg;
  Grading grading;
  std::string source;
};

bool catalog_entry_exists(const std::string& id) {
  for (const auto& x : catalog_ids())
    if (x == id) return true;
  return false;
}

/// A catalog id (on --field or its default field) or a file written by
/// `build --catalog`.
Loaded load_grading(const Config& c, const std::string& ref) {
  if (!ref.empty() && catalog_entry_exists(ref)) {
    CatalogEntry e = catalog_entry(ref);
    BuiltEntry b = build_entry(ref, field_of(c, e.default_field.c_str()));
    return {b.alg, b.grading, ref};
  }
  Json j = read_json(ref);
  AlgebraPtr a = algebra_from_json(j.at("algebra"));
  return {a, grading_from_json(a, j.at("grading")), ref};
}

AlgebraPtr load_algebra(const Config& c) {
  if (!c.construction.empty()) return build_construction(c.construction, field_of(c), c.opts);
  if (!c.grading_file.empty()) {
    Json j = read_json(c.grading_file);
    return algebra_from_json(j.contains("algebra") ? j.at("algebra") : j);
  }
  throw Usage("--construction or --algebra is required");
}

void add_construction_flags(CLI::App* app, Config& c) {
  app->add_option("--construction", c.construction, "construction id");
  app->add_option("--field", c.field, "Q, GF(p), GF(4) or GF(9)");
  app->add_option("--alpha", c.opts.alpha, "Cayley-Dickson parameter");
  app->add_option("--lambda", c.opts.lambda, "B(1,2)_lambda parameter");
  app->add_option("--variant", c.opts.variant, "Okubo twist: nst or omega");
  app->add_option("--algebra", c.grading_file, "algebra JSON file");
}

int cmd_build(const Config& c) {
  if (!c.catalog_id.empty()) {
    Loaded l = load_grading(c, c.catalog_id);
    emit(c, {{"algebra", to_json(*l.alg)}, {"grading", to_json(l.grading)}});
    return 0;
  }
  emit(c, to_json(*load_algebra(c)));
  return 0;
}

int cmd_check(const Config& c, const std::string& axiom) {
  AlgebraPtr a = load_algebra(c);
  std::vector<AxiomReport> reps;
  bool all = axiom == "auto";
  if (axiom == "hurwitz" || (all && a->unit())) reps.push_back(check_hurwitz(*a));
  if (axiom == "composition" || all) reps.push_back(check_composition_super(*a));
  if (axiom == "symmetric" || (all && !a->unit())) reps.push_back(check_symmetric(*a));
  bool pass = true;
  Json out = Json::array();
  for (const auto& r : reps) {
    Json j;
    j["construction"] = c.construction.empty() ? a->name() : c.construction;
    j["field"] = a->field().name();
    j["axiom"] = r.axiom;
    j["pass"] = r.pass;
    j["mode"] = r.mode;
    j["count"] = r.count;
    if (r.witness) j["witness"] = *r.witness;
    out.push_back(j);
    pass = pass && r.pass;
  }
  emit(c, {{"pass", pass}, {"checks", out}});
  return pass ? 0 : 1;
}

int cmd_catalog_list(const Config& c) {
  Json rows = Json::array();
  for (const auto& id : catalog_ids()) {
    CatalogEntry e = catalog_entry(id);
    rows.push_back({{"id", e.id},
                    {"label", e.label},
                    {"construction", e.construction},
                    {"field_condition", to_string(e.need)},
                    {"claimed_group", e.claimed_group},
                    {"coarsening_of", e.coarsening_of}});
  }
  Json flagged = Json::array();
  for (const auto& n : non_instantiable_items())
    flagged.push_back({{"id", n.id}, {"claim", n.claim}, {"reason", n.reason}});
  emit(c, {{"entries", rows}, {"not_instantiable", flagged}});
  return 0;
}

int cmd_catalog_verify(const Config& c, const std::string& target, const std::string& claim) {
  Json reps = Json::array();
  Json skipped = Json::array();
  bool pass = true;
  if (target == "all") {
    if (!claim.empty()) throw Usage("--claim needs a single entry");
    for (const auto& id : catalog_ids()) {
      CatalogEntry e = catalog_entry(id);
      const Field& f = field_of(c, e.default_field.c_str());
      if (auto why = field_condition_failure(e, f)) {
        skipped.push_back({{"id", id}, {"reason", *why}});
        continue;
      }
      EntryReport r = verify_entry(id, f);
      pass = pass && r.pass;
      reps.push_back(to_json(r));
    }
  } else {
    CatalogEntry e = catalog_entry(target);
    EntryReport r = verify_entry(target, field_of(c, e.default_field.c_str()),
                                 claim.empty() ? std::nullopt : std::optional<std::string>(claim));
    pass = r.pass;
    reps.push_back(to_json(r));
  }
  Json out = {{"pass", pass}, {"reports", reps}};
  if (!skipped.empty()) out["skipped"] = skipped;
  emit(c, out);
  return pass ? 0 : 1;
}

int cmd_universal_group(const Config& c, bool json) {
  std::string ref = !c.catalog_id.empty() ? c.catalog_id : c.grading_file;
  if (ref.empty()) throw Usage("--catalog or --grading is required");
  Loaded l = load_grading(c, ref);
  UniversalGroup u = universal_group(l.grading);
  if (json) {
    emit(c, to_json(u));
  } else if (c.out.empty()) {
    std::cout << u.group.str() << "\n";
  } else {
    emit(c, u.group.str());
  }
  return u.injective ? 0 : 1;
}

int conclusive(SearchStatus s) { return s == SearchStatus::BudgetExhausted ? 1 : 0; }

int cmd_equiv(const Config& c, const std::string& a, const std::string& b, const std::string& mode) {
  Loaded x = load_grading(c, a), y = load_grading(c, b);
  MapMode m = mode == "isomorphism" ? MapMode::Isomorphism : MapMode::Equivalence;
  SearchResult r = find_graded_map(x.grading, y.grading, m, budget_of(c));
  Json j = {{"source", a}, {"target", b}, {"mode", mode}};
  j.update(to_json(r));
  emit(c, j);
  return conclusive(r.status);
}

int cmd_autos(const Config& c) {
  std::optional<Grading> constraint;
  AlgebraPtr a;
  if (!c.catalog_id.empty()) {
    Loaded l = load_grading(c, c.catalog_id);
    a = l.alg;
    constraint = l.grading;
  } else {
    a = load_algebra(c);
  }
  AutomorphismList r = enumerate_automorphisms(a, constraint, budget_of(c));
  Json j = {{"algebra", a->name()}, {"field", a->field().name()}};
  if (constraint) j["grading"] = c.catalog_id;
  j.update(to_json(r));
  emit(c, j);
  return r.complete ? 0 : 1;
}

int cmd_enumerate(const Config& c) {
  AlgebraPtr a = load_algebra(c);
  GradingList r = enumerate_all_gradings(a, budget_of(c));
  Json j = {{"algebra", a->name()}, {"field", a->field().name()}};
  j.update(to_json(r));
  emit(c, j);
  return conclusive(r.status);
}

int cmd_fine(const Config& c, int depth) {
  std::string ref = !c.catalog_id.empty() ? c.catalog_id : c.grading_file;
  if (ref.empty()) throw Usage("--catalog or --grading is required");
  Loaded l = load_grading(c, ref);
  FineResult r = fine_check(l.grading, budget_of(c), depth);
  Json j = {{"grading", ref}, {"field", l.alg->field().name()}};
  j.update(to_json(r));
  emit(c, j);
  return conclusive(r.status);
}

int cmd_report(const Config& c) {
  Json rows = Json::array();
  bool pass = true;
  for (const auto& r : run_acceptance([](const CriterionResult& r) {
         std::cerr << "criterion " << r.number << ": " << (r.pass ? "PASS" : "FAIL") << "\n";
       })) {
    pass = pass && r.pass;
    rows.push_back(to_json(r));
  }
  emit(c, {{"pass", pass}, {"criteria", rows}});
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hurwitz and symmetric composition superalgebras and their gradings"};
  app.require_subcommand(1);
  app.fallthrough();
  Config c;
  app.add_option("--out", c.out, "write JSON here instead of standard output");
  app.add_option("--budget", c.budget, "search node budget");

  auto* build = app.add_subcommand("build", "emit an algebra, or a catalog grading with its algebra");
  add_construction_flags(build, c);
  build->add_option("--catalog", c.catalog_id, "catalog id");

  std::string axiom = "auto";
  auto* check = app.add_subcommand("check", "run the axiom checks");
  add_construction_flags(check, c);
  check->add_option("--axiom", axiom, "auto, hurwitz, composition or symmetric")
      ->check(CLI::IsMember({"auto", "hurwitz", "composition", "symmetric"}));

  auto* catalog = app.add_subcommand("catalog", "labeled gradings");
  catalog->require_subcommand(1);
  catalog->fallthrough();
  auto* list = catalog->add_subcommand("list", "list entries");
  auto* verify = catalog->add_subcommand("verify", "verify an entry or all");
  std::string target = "all", claim;
  verify->add_option("id", target, "entry id or all");
  verify->add_option("--field", c.field, "field");
  verify->add_option("--claim", claim, "claimed universal group, overriding the catalog");

  bool ug_json = false;
  auto* ug = app.add_subcommand("universal-group", "universal grading group");
  ug->add_option("--catalog", c.catalog_id, "catalog id");
  ug->add_option("--grading", c.grading_file, "file written by build --catalog");
  ug->add_option("--field", c.field, "field");
  ug->add_flag("--json", ug_json, "emit the degrees as JSON");

  std::string src, dst, mode = "isomorphism";
  auto* equiv = app.add_subcommand("equiv", "graded isomorphism or equivalence search");
  equiv->add_option("source", src, "catalog id or grading file")->required();
  equiv->add_option("target", dst, "catalog id or grading file")->required();
  equiv->add_option("--mode", mode, "isomorphism or equivalence")->check(CLI::IsMember({"isomorphism", "equivalence"}));
  equiv->add_option("--field", c.field, "field");

  auto* autos = app.add_subcommand("autos", "enumerate (graded) automorphisms");
  add_construction_flags(autos, c);
  autos->add_option("--catalog", c.catalog_id, "preserve the components of this grading");

  auto* enumerate = app.add_subcommand("enumerate", "all gradings in dimension <= 4");
  add_construction_flags(enumerate, c);

  int depth = 1;
  auto* fine = app.add_subcommand("fine", "single-split (or double-split) refinement search");
  fine->add_option("--catalog", c.catalog_id, "catalog id");
  fine->add_option("--grading", c.grading_file, "file written by build --catalog");
  fine->add_option("--field", c.field, "field");
  fine->add_option("--depth", depth, "components split at once")->check(CLI::Range(1, 2));

  auto* report = app.add_subcommand("report", "run every acceptance criterion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) return cmd_build(c);
    if (check->parsed()) return cmd_check(c, axiom);
    if (list->parsed()) return cmd_catalog_list(c);
    if (verify->parsed()) return cmd_catalog_verify(c, target, claim);
    if (ug->parsed()) return cmd_universal_group(c, ug_json);
    if (equiv->parsed()) return cmd_equiv(c, src, dst, mode);
    if (autos->parsed()) return cmd_autos(c);
    if (enumerate->parsed()) return cmd_enumerate(c);
    if (fine->parsed()) return cmd_fine(c, depth);
    if (report->parsed()) return cmd_report(c);
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage_kind(e.kind()) ? 2 : 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

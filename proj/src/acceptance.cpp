#include "csg/acceptance.hpp"

#include <algorithm>
#include <sstream>

#include "csg/axioms.hpp"

namespace csg {

namespace {

const Field& gf(const char* name) { return Field::parse(name); }

const Field& extension_of(const Field& f) { return f.characteristic() == 3 ? Field::gf9() : Field::gf4(); }

CriterionResult start(int n, std::string name) {
  CriterionResult r;
  r.number = n;
  r.name = std::move(name);
  r.pass = true;
  r.detail = Json::object();
  return r;
}

std::string count_summary(std::size_t ok, std::size_t total, const std::string& what) {
  std::ostringstream s;
  s << ok << "/" << total << " " << what;
  return s.str();
}

Json report_row(const std::string& subject, const std::string& field, const AxiomReport& a) {
  Json j = to_json(a);
  j["subject"] = subject;
  j["field"] = field;
  return j;
}

}  // namespace

std::vector<const Field*> entry_fields(const CatalogEntry& e) {
  const Field& d = Field::parse(e.default_field);
  const Field& x = extension_of(d);
  if (&d == &x) return {&d};
  return {&d, &x};
}

CriterionResult criterion_axioms() {
  CriterionResult r = start(1, "axiom suite");
  Json rows = Json::array();
  std::size_t ok = 0, total = 0;
  auto record = [&](const std::string& subject, const Field& f, const AxiomReport& a, bool need_exhaustive) {
    bool pass = a.pass && (!need_exhaustive || a.mode == "exhaustive");
    ++total;
    ok += pass;
    r.pass = r.pass && pass;
    rows.push_back(report_row(subject, f.name(), a));
  };
  struct Case {
    const char* id;
    std::vector<const char*> fields;
  };
  const std::vector<Case> hurwitz = {
      {"split2", {"GF(2)", "GF(3)"}}, {"split4", {"GF(2)", "GF(3)"}}, {"split8", {"GF(2)", "GF(3)"}},
      {"cd2", {"GF(2)", "GF(4)"}},    {"cd4", {"GF(2)", "GF(4)"}},    {"b12", {"GF(3)", "GF(9)"}},
      {"b42", {"GF(3)", "GF(9)"}},
  };
  for (const auto& c : hurwitz)
    for (const char* fn : c.fields) {
      const Field& f = gf(fn);
      AlgebraPtr a = build_construction(c.id, f);
      record(c.id, f, check_hurwitz(*a), true);
      record(c.id, f, check_composition_super(*a), true);
    }
  const std::vector<Case> symmetric = {
      {"para-split2", {"GF(2)", "GF(3)"}}, {"para-split4", {"GF(2)", "GF(3)"}}, {"para-split8", {"GF(2)", "GF(3)"}},
      {"para-cd2", {"GF(2)", "GF(4)"}},    {"para-cd4", {"GF(2)", "GF(4)"}},    {"para-b12", {"GF(3)", "GF(9)"}},
      {"para-b42", {"GF(3)", "GF(9)"}},    {"okubo-nst", {"GF(2)", "GF(4)"}},   {"okubo-omega", {"GF(4)"}},
  };
  for (const auto& c : symmetric)
    for (const char* fn : c.fields) {
      const Field& f = gf(fn);
      record(c.id, f, check_symmetric(*build_construction(c.id, f)), false);
    }
  for (const char* fn : {"GF(3)", "GF(9)"})
    for (const Scalar& l : gf(fn).elements())
      record("b12lambda(" + l.str() + ")", gf(fn), check_symmetric(*b12_lambda(l)), false);
  r.summary = count_summary(ok, total, "axiom checks pass");
  r.detail["checks"] = rows;
  return r;
}

CriterionResult criterion_canonical_basis() {
  CriterionResult r = start(2, "canonical basis from every isotropic seed");
  const Field& f = Field::prime(2);
  AlgebraPtr c = split_hurwitz(8, f);
  std::size_t ok = 0, total = 0;
  Json failures = Json::array();
  for (const Vec& a : all_vectors(f, c->dim())) {
    if (is_zero(a) || !c->q0(a).is_zero()) continue;
    ++total;
    std::optional<std::string> why;
    try {
      why = canonical_table_failure(canonical_basis_find(c, a));
    } catch (const Error& e) {
      why = e.what();
    }
    if (!why) {
      ++ok;
    } else {
      r.pass = false;
      failures.push_back({{"seed", c->format(a)}, {"failure", *why}});
    }
  }
  r.pass = r.pass && total > 0;
  r.summary = count_summary(ok, total, "isotropic seeds give the canonical table");
  r.detail["seeds"] = total;
  r.detail["failures"] = failures;
  return r;
}

CriterionResult criterion_catalog() {
  CriterionResult r = start(3, "catalog completeness and correctness");
  std::size_t ok = 0, total = 0;
  Json failures = Json::array();
  for (const std::string& id : catalog_ids()) {
    CatalogEntry e = catalog_entry(id);
    for (const Field* f : entry_fields(e)) {
      ++total;
      EntryReport rep = verify_entry(id, *f);
      if (rep.pass) {
        ++ok;
      } else {
        r.pass = false;
        failures.push_back(to_json(rep));
      }
    }
  }
  Json flagged = Json::array();
  for (const auto& n : non_instantiable_items())
    flagged.push_back({{"id", n.id}, {"claim", n.claim}, {"status", "not instantiable over a finite field"}, {"reason", n.reason}});
  r.pass = r.pass && !non_instantiable_items().empty();
  r.summary = count_summary(ok, total, "entry/field pairs verified") + ", " + std::to_string(catalog_entries().size()) +
              " labeled entries, " + std::to_string(non_instantiable_items().size()) + " flagged items";
  r.detail["labeled_entries"] = catalog_entries().size();
  r.detail["failures"] = failures;
  r.detail["flagged"] = flagged;
  return r;
}

namespace {

bool lattice_matches(const std::string& top, const std::vector<std::string>& expected, const Field& f, Json& out) {
  BuiltEntry b = build_entry(top, f);
  std::vector<Grading> got = coarsenings_enum(b.grading);
  std::vector<bool> used(got.size(), false);
  bool pass = got.size() == expected.size();
  Json matched = Json::array();
  for (const std::string& id : expected) {
    BuiltEntry e = build_entry(id, f);
    bool hit = false;
    for (std::size_t i = 0; i < got.size() && !hit; ++i)
      if (!used[i] && same_decomposition(got[i], e.grading) && got[i].group.str() == e.entry.claimed_group) {
        used[i] = hit = true;
        matched.push_back({{"entry", id}, {"group", got[i].group.str()}});
      }
    pass = pass && hit;
    if (!hit) matched.push_back({{"entry", id}, {"group", nullptr}});
  }
  out[top] = {{"coarsenings", got.size()}, {"matched", matched}, {"pass", pass}};
  return pass;
}

}  // namespace

CriterionResult criterion_coarsenings() {
  CriterionResult r = start(4, "coarsening lattices");
  const Field& f = Field::prime(3);
  bool a = lattice_matches("eq2", {"eq2", "eq3", "eq4", "main-b42", "trivial-b42"}, f, r.detail);
  bool b = lattice_matches("eq1", {"eq1", "main-b12", "trivial-b12"}, f, r.detail);
  r.pass = a && b;
  r.summary = std::string("eq2 lattice ") + (a ? "matches" : "differs") + ", eq1 lattice " + (b ? "matches" : "differs");
  return r;
}

CriterionResult criterion_b12_lambda_uniqueness() {
  CriterionResult r = start(5, "B(1,2)_lambda has only the main grading");
  const Field& f = Field::prime(3);
  Json rows = Json::array();
  std::size_t ok = 0, total = 0;
  for (const Scalar& l : f.elements()) {
    if (l.is_zero()) continue;
    ++total;
    AlgebraPtr a = b12_lambda(l);
    GradingList gl = enumerate_all_gradings(a);
    Grading main = main_grading(a), triv = trivial_grading(a);
    bool has_main = false, has_triv = false;
    for (const auto& g : gl.gradings) {
      has_main = has_main || same_decomposition(g, main);
      has_triv = has_triv || same_decomposition(g, triv);
    }
    bool pass = gl.status == SearchStatus::ProvenNone && gl.gradings.size() == 2 && has_main && has_triv;
    ok += pass;
    r.pass = r.pass && pass;
    Json groups = Json::array();
    for (const auto& g : gl.gradings) groups.push_back(g.group.str());
    rows.push_back({{"lambda", l.str()}, {"status", to_string(gl.status)}, {"gradings", gl.gradings.size()},
                    {"groups", groups}, {"nodes", gl.nodes}, {"pass", pass}});
  }
  r.summary = count_summary(ok, total, "nonzero lambda give exactly {trivial, main}, proven complete");
  r.detail["cases"] = rows;
  return r;
}

CriterionResult criterion_isomorphisms() {
  CriterionResult r = start(6, "isomorphism criteria");
  const std::vector<std::pair<const char*, const char*>> runs = {
      {"b12", "GF(9)"}, {"b42", "GF(9)"}, {"super-cayley", "GF(4)"}, {"okubo-omega", "GF(4)"}};
  Json rows = Json::array();
  std::ostringstream s;
  for (const auto& [alg, fn] : runs) {
    IsoReport rep = verify_iso_theorems(alg, gf(fn));
    r.pass = r.pass && rep.pass();
    Json j = to_json(rep);
    j["algebra"] = alg;
    j["field"] = fn;
    if (j["mismatches"].size() > 20) {
      Json head = Json::array();
      for (std::size_t i = 0; i < 20; ++i) head.push_back(j["mismatches"][i]);
      j["mismatch_count"] = rep.mismatches.size();
      j["mismatches"] = head;
    }
    rows.push_back(j);
    s << (s.tellp() > 0 ? ", " : "") << alg << "/" << fn << " " << rep.mismatches.size() << " mismatches in "
      << rep.cases.size();
  }
  r.summary = s.str();
  r.detail["runs"] = rows;
  return r;
}

namespace {

/// phi acts on the given basis vectors as one scalar.
bool acts_as_scalar(const Morphism& phi, const SuperAlgebra& s, const std::vector<std::size_t>& idx) {
  if (idx.empty()) return true;
  Vec first = phi.image(idx.front());
  const Scalar c = first[idx.front()];
  for (std::size_t i : idx)
    if (phi.image(i) != c * s.basis(i)) return false;
  return true;
}

}  // namespace

CriterionResult criterion_okubo_facts() {
  CriterionResult r = start(7, "Okubo structure facts");
  const std::vector<std::pair<const char*, const char*>> runs = {
      {"nst", "GF(2)"}, {"nst", "GF(4)"}, {"omega", "GF(4)"}};
  Json rows = Json::array();
  std::size_t ok = 0;
  for (const auto& [variant, fn] : runs) {
    const Field& f = gf(fn);
    OkuboSuper o = okubo_super(f, variant);
    const Morphism& phi = o.phi_s;
    const SuperAlgebra& s = *o.s;
    Json j = {{"variant", variant}, {"field", fn}};
    bool order3 = power(phi, 3).matrix == Matrix::identity(f, s.dim());
    bool even_fixed = true;
    for (std::size_t i : s.indices(Parity::Even)) even_fixed = even_fixed && phi.image(i) == s.basis(i);
    std::vector<Vec> shifted;
    bool cyclotomic = true;
    for (std::size_t i : s.indices(Parity::Odd)) {
      Vec x = s.basis(i), p1 = phi.apply(x), p2 = phi.apply(p1);
      shifted.push_back(p1 - x);
      cyclotomic = cyclotomic && is_zero(p2 + p1 + x);
    }
    bool no_fixed = rank(Matrix::from_rows(f, s.dim(), shifted)) == shifted.size();
    bool minpoly = cyclotomic && !acts_as_scalar(phi, s, s.indices(Parity::Odd));
    AxiomReport remark = check_remark_identities(s, *o.c, o.phi);
    j["phi_cubed_identity"] = order3;
    j["phi_identity_on_even"] = even_fixed;
    j["no_fixed_odd_vectors"] = no_fixed;
    j["odd_minimal_polynomial_x2_x_1"] = minpoly;
    j["twist_identities"] = to_json(remark);
    bool pass = order3 && even_fixed && no_fixed && minpoly && remark.pass;
    j["pass"] = pass;
    ok += pass;
    r.pass = r.pass && pass;
    rows.push_back(j);
  }
  r.summary = count_summary(ok, runs.size(), "Okubo superalgebras satisfy all facts");
  r.detail["cases"] = rows;
  return r;
}

CriterionResult criterion_para_units() {
  CriterionResult r = start(8, "para-unit uniqueness and reconstruction");
  const std::vector<std::pair<const char*, const char*>> runs = {
      {"split4", "GF(2)"}, {"split4", "GF(3)"}, {"split8", "GF(2)"}, {"split8", "GF(3)"}, {"super-cayley", "GF(2)"},
      {"cd2", "GF(2)"},    {"cd4", "GF(2)"},    {"cdns2", "GF(2)"},  {"b12", "GF(3)"},    {"b42", "GF(3)"}};
  Json rows = Json::array();
  std::size_t ok = 0;
  for (const auto& [id, fn] : runs) {
    const Field& f = gf(fn);
    AlgebraPtr c = build_construction(id, f);
    AlgebraPtr s = para_hurwitz(c);
    std::vector<Vec> units = find_para_units(*s, ParaUnitMode::Exhaustive);
    Json j = {{"construction", std::string("para-") + id}, {"field", fn}, {"dim", s->dim()}, {"para_units", units.size()}};
    bool pass = units.size() == 1;
    if (pass) {
      AxiomReport rec = check_para_reconstruction(*s, *c, units.front());
      j["para_unit"] = s->format(units.front());
      j["reconstruction"] = to_json(rec);
      pass = rec.pass;
    }
    j["pass"] = pass;
    ok += pass;
    r.pass = r.pass && pass;
    rows.push_back(j);
  }
  r.summary = count_summary(ok, runs.size(), "para-Hurwitz superalgebras have one para-unit that reconstructs the product");
  r.detail["cases"] = rows;
  return r;
}

CriterionResult criterion_fineness() {
  CriterionResult r = start(9, "fine-ness");
  struct Case {
    const char* id;
    const char* field;
    bool expect_fine;
  };
  const std::vector<Case> runs = {
      {"eq7", "GF(2)", true},           {"eq7", "GF(4)", true},           {"eq5", "GF(2)", true},
      {"eq5", "GF(4)", true},           {"eq6", "GF(2)", true},           {"eq6", "GF(4)", true},
      {"okuboeq1", "GF(2)", true},      {"okuboeq1", "GF(4)", true},      {"okuboeq3", "GF(4)", true},
      {"main-cd4", "GF(2)", false},     {"main-cd4", "GF(4)", false},     {"main-okubo-nst", "GF(2)", false},
      {"main-okubo-nst", "GF(4)", false}, {"main-okubo-omega", "GF(4)", false},
  };
  Json rows = Json::array();
  std::size_t ok = 0;
  for (const auto& c : runs) {
    BuiltEntry b = build_entry(c.id, gf(c.field));
    FineResult fr = fine_check(b.grading, {}, 1);
    if (!c.expect_fine && fr.status == SearchStatus::ProvenNone) fr = fine_check(b.grading, {}, 2);
    bool pass = c.expect_fine ? fr.status == SearchStatus::ProvenNone
                              : fr.status == SearchStatus::Found && fr.witness && validate(*fr.witness) &&
                                    is_refinement(*fr.witness, b.grading) && !same_decomposition(*fr.witness, b.grading);
    Json j = to_json(fr);
    j["entry"] = c.id;
    j["field"] = c.field;
    j["expected"] = c.expect_fine ? "fine" : "refinable";
    if (fr.witness) j["witness"] = {{"group", fr.witness->group.str()}, {"components", fr.witness->comps.size()}};
    if (c.expect_fine) {
      FineResult deep = fine_check(b.grading, {}, 2);
      j["double_split"] = deep.status == SearchStatus::ProvenNone ? "fine" : deep.status == SearchStatus::Found ? "refinable" : "budget-exhausted";
      if (deep.witness) j["double_split_witness"] = deep.witness->group.str();
    }
    j["pass"] = pass;
    ok += pass;
    r.pass = r.pass && pass;
    rows.push_back(j);
  }
  r.summary = count_summary(ok, runs.size(), "fine-ness verdicts as expected");
  r.detail["cases"] = rows;
  return r;
}

CriterionResult criterion_orthogonality() {
  CriterionResult r = start(10, "orthogonality of homogeneous components");
  std::size_t ok = 0, total = 0;
  Json failures = Json::array();
  for (const std::string& id : catalog_ids()) {
    CatalogEntry e = catalog_entry(id);
    for (const Field* f : entry_fields(e)) {
      ++total;
      BuiltEntry b = build_entry(id, *f);
      AxiomReport a = check_orthogonality(b.grading);
      if (a.pass) {
        ++ok;
      } else {
        r.pass = false;
        failures.push_back(report_row(id, f->name(), a));
      }
    }
  }
  r.summary = count_summary(ok, total, "catalog gradings orthogonal");
  r.detail["failures"] = failures;
  return r;
}

std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& progress) {
  const std::vector<CriterionResult (*)()> all = {
      criterion_axioms,        criterion_canonical_basis, criterion_catalog,   criterion_coarsenings,
      criterion_b12_lambda_uniqueness, criterion_isomorphisms, criterion_okubo_facts, criterion_para_units,
      criterion_fineness,      criterion_orthogonality};
  std::vector<CriterionResult> out;
  for (auto fn : all) {
    out.push_back(fn());
    if (progress) progress(out.back());
  }
  return out;
}

Json to_json(const CriterionResult& r) {
  Json j;
  j["criterion"] = r.number;
  j["name"] = r.name;
  j["pass"] = r.pass;
  j["summary"] = r.summary;
  j["detail"] = r.detail;
  return j;
}

}  // namespace csg

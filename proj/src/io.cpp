#include "csg/io.hpp"

namespace csg {

Json to_json(const Vec& v) {
  Json j = Json::array();
  for (const auto& s : v) j.push_back(s.str());
  return j;
}

Vec vec_from_json(const Field& f, const Json& j) {
  Vec v;
  for (const auto& s : j) v.push_back(f.parse_scalar(s.get<std::string>()));
  return v;
}

Json to_json(const SuperAlgebra& a) {
  Json j;
  j["field"] = a.field().name();
  j["name"] = a.name();
  j["dim"] = a.dim();
  j["basis"] = a.basis_names();
  Json par = Json::array();
  for (auto p : a.parities()) par.push_back(to_string(p));
  j["parity"] = par;
  Json st = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k)
      for (const auto& [idx, c] : a.sparse(i, k)) st.push_back(Json::array({i, k, idx, c.str()}));
  j["structure"] = st;
  j["q0_values"] = to_json(a.q0_values());
  Json polar = Json::array();
  for (std::size_t r = 0; r < a.dim(); ++r) polar.push_back(to_json(a.polar().row_vec(r)));
  j["polar"] = polar;
  return j;
}

AlgebraPtr algebra_from_json(const Json& j) {
  try {
    const Field& f = Field::parse(j.at("field").get<std::string>());
    const std::size_t n = j.at("dim").get<std::size_t>();
    std::vector<std::string> names = j.at("basis").get<std::vector<std::string>>();
    std::vector<Parity> parity;
    for (const auto& p : j.at("parity")) {
      const std::string s = p.get<std::string>();
      if (s != "even" && s != "odd") throw Error(ErrorKind::Parse, "parity must be even or odd");
      parity.push_back(s == "even" ? Parity::Even : Parity::Odd);
    }
    if (names.size() != n || parity.size() != n) throw Error(ErrorKind::Parse, "basis and parity must have dim entries");
    Table t(n, std::vector<Vec>(n, zero_vec(f, n)));
    for (const auto& e : j.at("structure")) {
      auto i = e.at(0).get<std::size_t>(), k = e.at(1).get<std::size_t>(), m = e.at(2).get<std::size_t>();
      if (i >= n || k >= n || m >= n) throw Error(ErrorKind::Parse, "structure index out of range");
      t[i][k][m] = t[i][k][m] + f.parse_scalar(e.at(3).get<std::string>());
    }
    Vec q0 = vec_from_json(f, j.at("q0_values"));
    Matrix polar(f, n, n);
    const Json& rows = j.at("polar");
    if (rows.size() != n) throw Error(ErrorKind::Parse, "polar must be dim x dim");
    for (std::size_t r = 0; r < n; ++r) {
      Vec row = vec_from_json(f, rows.at(r));
      if (row.size() != n) throw Error(ErrorKind::Parse, "polar must be dim x dim");
      polar.set_row(r, row);
    }
    return make_algebra(f, j.value("name", std::string("custom")), names, parity, t, q0, polar);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

Json to_json(const Grading& g) {
  Json j;
  j["algebra"] = g.alg->name();
  j["field"] = g.alg->field().name();
  j["group"] = g.group.str();
  Json comps = Json::array();
  for (std::size_t i = 0; i < g.comps.size(); ++i) {
    Json c;
    c["degree"] = g.comps[i].degree.str();
    c["coords"] = g.comps[i].degree.coords();
    for (Parity p : {Parity::Even, Parity::Odd}) {
      Matrix m = g.part(i, p);
      Json rows = Json::array();
      for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(to_json(m.row_vec(r)));
      c[to_string(p)] = rows;
    }
    comps.push_back(c);
  }
  j["components"] = comps;
  return j;
}

Grading grading_from_json(const AlgebraPtr& alg, const Json& j) {
  try {
    AbGroup group = AbGroup::parse(j.at("group").get<std::string>());
    Grading g{alg, group, {}};
    for (const auto& c : j.at("components")) {
      Component comp{AbElement(group, c.at("coords").get<std::vector<std::int64_t>>()),
                     Matrix(alg->field(), 0, alg->dim())};
      for (const char* p : {"even", "odd"})
        if (c.contains(p))
          for (const auto& row : c.at(p)) {
            Vec v = vec_from_json(alg->field(), row);
            if (v.size() != alg->dim()) throw Error(ErrorKind::Parse, "basis vector of wrong length");
            comp.basis.append_row(v);
          }
      g.comps.push_back(comp);
    }
    require_valid(g);
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

Json to_json(const Morphism& m) {
  Json j;
  j["source"] = m.source->name();
  j["target"] = m.target->name();
  j["verified"] = check_names(m.verified);
  Json img = Json::array();
  for (std::size_t c = 0; c < m.matrix.cols(); ++c)
    img.push_back({{"of", m.source->basis_names()[c]}, {"image", m.target->format(m.image(c))}});
  j["images"] = img;
  return j;
}

Json to_json(const AxiomReport& r) {
  Json j;
  j["axiom"] = r.axiom;
  j["pass"] = r.pass;
  j["mode"] = r.mode;
  j["count"] = r.count;
  if (r.witness) j["witness"] = *r.witness;
  return j;
}

Json to_json(const SearchResult& r) {
  Json j;
  j["status"] = to_string(r.status);
  j["nodes"] = r.nodes;
  if (!r.note.empty()) j["note"] = r.note;
  if (r.map) j["map"] = to_json(*r.map);
  return j;
}

Json to_json(const AutomorphismList& r) {
  Json j;
  j["complete"] = r.complete;
  j["count"] = r.maps.size();
  j["nodes"] = r.nodes;
  Json maps = Json::array();
  for (const auto& m : r.maps) maps.push_back(to_json(m));
  j["maps"] = maps;
  return j;
}

Json to_json(const GradingList& r) {
  Json j;
  j["status"] = to_string(r.status);
  j["count"] = r.gradings.size();
  j["nodes"] = r.nodes;
  Json gs = Json::array();
  for (const auto& g : r.gradings) gs.push_back(to_json(g));
  j["gradings"] = gs;
  return j;
}

Json to_json(const FineResult& r) {
  Json j;
  j["result"] = r.status == SearchStatus::ProvenNone ? "fine" : r.status == SearchStatus::Found ? "refinable" : "budget-exhausted";
  j["search"] = r.depth == 1 ? "single-split" : "double-split";
  j["nodes"] = r.nodes;
  if (r.witness) j["witness"] = to_json(*r.witness);
  return j;
}

Json to_json(const UniversalGroup& u) {
  Json j;
  j["group"] = u.group.str();
  j["injective"] = u.injective;
  Json d = Json::array();
  for (const auto& x : u.degrees) d.push_back(x.str());
  j["degrees"] = d;
  return j;
}

Json to_json(const EntryReport& r) {
  Json j;
  j["id"] = r.id;
  j["field"] = r.field;
  j["pass"] = r.pass;
  j["claimed_group"] = r.claimed_group;
  j["group"] = r.group;
  Json cs = Json::array();
  for (const auto& c : r.checks) {
    Json x = {{"check", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) x["detail"] = c.detail;
    cs.push_back(x);
  }
  j["checks"] = cs;
  return j;
}

Json to_json(const IsoCase& c) {
  return {{"algebra", c.algebra}, {"group", c.group},           {"source", c.source},
          {"target", c.target},   {"expected", c.expected},     {"isomorphic", c.isomorphic},
          {"via", c.via},         {"status", to_string(c.status)}, {"nodes", c.nodes}};
}

Json to_json(const IsoReport& r) {
  Json j;
  j["pass"] = r.pass();
  j["cases"] = r.cases.size();
  std::size_t iso = 0;
  for (const auto& c : r.cases) iso += c.isomorphic;
  j["isomorphic"] = iso;
  Json m = Json::array();
  for (const auto& c : r.mismatches) m.push_back(to_json(c));
  j["mismatches"] = m;
  return j;
}

}  // namespace csg

#include "csg/gradings.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace csg {

namespace {

bool row_is_homogeneous(const SuperAlgebra& a, std::span<const Scalar> row) {
  Vec v(row.begin(), row.end());
  return a.is_homogeneous(v, Parity::Even) || a.is_homogeneous(v, Parity::Odd);
}

struct ProductMap {
  ProductTargets targets;
};

std::optional<ProductMap> product_map(const SuperAlgebra& a, const Decomposition& d) {
  const std::size_t n = a.dim();
  Matrix p(a.field(), 0, n);
  std::vector<std::size_t> owner;
  for (std::size_t c = 0; c < d.size(); ++c)
    for (std::size_t r = 0; r < d[c].rows(); ++r) {
      p.append_row(d[c].row(r));
      owner.push_back(c);
    }
  if (p.rows() != n) return std::nullopt;
  auto q = inverse(p.transpose());
  if (!q) return std::nullopt;
  ProductMap pm;
  pm.targets.assign(d.size(), std::vector<std::vector<std::size_t>>(d.size()));
  for (std::size_t s = 0; s < d.size(); ++s)
    for (std::size_t t = 0; t < d.size(); ++t) {
      std::set<std::size_t> hit;
      for (std::size_t i = 0; i < d[s].rows(); ++i)
        for (std::size_t j = 0; j < d[t].rows(); ++j) {
          Vec xy = a.mul(d[s].row_vec(i), d[t].row_vec(j));
          if (is_zero(xy)) continue;
          Vec c = q->apply(xy);
          for (std::size_t k = 0; k < n; ++k)
            if (!c[k].is_zero()) hit.insert(owner[k]);
        }
      pm.targets[s][t].assign(hit.begin(), hit.end());
    }
  return pm;
}

// restricted growth strings enumerate set partitions in lexicographic order
bool next_rgs(std::vector<std::size_t>& rgs) {
  for (std::size_t i = rgs.size(); i-- > 1;) {
    std::size_t mx = *std::max_element(rgs.begin(), rgs.begin() + static_cast<std::ptrdiff_t>(i));
    if (rgs[i] <= mx) {
      ++rgs[i];
      std::fill(rgs.begin() + static_cast<std::ptrdiff_t>(i) + 1, rgs.end(), 0);
      return true;
    }
  }
  return false;
}

std::string matrix_key(const Matrix& m) {
  Matrix r = row_space(m);
  std::string s;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    for (std::size_t j = 0; j < r.cols(); ++j) s += r(i, j).str() + ",";
    s += ";";
  }
  return s;
}

Grading sorted(Grading g) {
  std::sort(g.comps.begin(), g.comps.end(), [](const Component& x, const Component& y) { return x.degree < y.degree; });
  return g;
}

Grading build_from_blocks(const AlgebraPtr& alg, const Decomposition& d, const UniversalGroup& u,
                          const std::vector<std::size_t>& block_of, std::size_t nblocks) {
  Grading g{alg, u.group, {}};
  for (std::size_t b = 0; b < nblocks; ++b) {
    Matrix rows(alg->field(), 0, alg->dim());
    for (std::size_t c = 0; c < d.size(); ++c)
      if (block_of[c] == b)
        for (std::size_t r = 0; r < d[c].rows(); ++r) rows.append_row(d[c].row(r));
    g.comps.push_back({u.degrees[b], rows});
  }
  return sorted(g);
}

UniversalGroup present(std::size_t nblocks, const IntMatrix& relations) {
  Presentation p = presentation_to_group(nblocks, relations);
  UniversalGroup u{p.group, p.projection, true, std::nullopt};
  std::set<std::vector<std::int64_t>> seen;
  for (const auto& d : u.degrees)
    if (!seen.insert(d.coords()).second) u.injective = false;
  return u;
}

}  // namespace

std::optional<ProductTargets> product_targets(const SuperAlgebra& a, const Decomposition& d) {
  auto pm = product_map(a, d);
  if (!pm) return std::nullopt;
  return pm->targets;
}

std::optional<std::size_t> Grading::find(const AbElement& g) const {
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (comps[i].degree == g) return i;
  return std::nullopt;
}

Matrix Grading::part(std::size_t i, Parity p) const {
  Matrix out(alg->field(), 0, alg->dim());
  for (std::size_t r = 0; r < comps[i].basis.rows(); ++r)
    if (alg->is_homogeneous(comps[i].basis.row_vec(r), p)) out.append_row(comps[i].basis.row(r));
  return out;
}

Decomposition decomposition(const Grading& g) {
  Decomposition d;
  for (const auto& c : g.comps) d.push_back(c.basis);
  return d;
}

std::optional<std::string> grading_failure(const Grading& g) {
  const SuperAlgebra& a = *g.alg;
  std::set<std::vector<std::int64_t>> seen;
  std::size_t total = 0;
  for (const auto& c : g.comps) {
    if (c.degree.group() != g.group) return "degree " + c.degree.str() + " is not in " + g.group.str();
    if (!seen.insert(c.degree.coords()).second) return "degree " + c.degree.str() + " repeated";
    if (c.basis.rows() == 0) return "component " + c.degree.str() + " is empty";
    if (c.basis.cols() != a.dim()) return "component " + c.degree.str() + " has wrong vector length";
    for (std::size_t r = 0; r < c.basis.rows(); ++r)
      if (!row_is_homogeneous(a, c.basis.row(r)))
        return "component " + c.degree.str() + " has a non-homogeneous vector " + a.format(c.basis.row_vec(r));
    total += c.basis.rows();
  }
  if (total != a.dim()) return "components have " + std::to_string(total) + " vectors, dimension is " + std::to_string(a.dim());
  auto pm = product_map(a, decomposition(g));
  if (!pm) return "components are not independent";
  for (std::size_t s = 0; s < g.comps.size(); ++s)
    for (std::size_t t = 0; t < g.comps.size(); ++t) {
      const auto& hit = pm->targets[s][t];
      if (hit.empty()) continue;
      AbElement sum = g.comps[s].degree + g.comps[t].degree;
      auto r = g.find(sum);
      if (!r || hit.size() != 1 || hit[0] != *r)
        return "product of degrees " + g.comps[s].degree.str() + " and " + g.comps[t].degree.str() + " leaves degree " +
               sum.str();
    }
  return std::nullopt;
}

bool validate(const Grading& g) { return !grading_failure(g); }

void require_valid(const Grading& g) {
  if (auto fail = grading_failure(g)) throw Error(ErrorKind::InvalidGrading, g.alg->name() + ": " + *fail);
}

std::vector<AbElement> support(const Grading& g) {
  std::vector<AbElement> s;
  for (const auto& c : g.comps) s.push_back(c.degree);
  std::sort(s.begin(), s.end());
  return s;
}

std::optional<UniversalGroup> universal_group(const AlgebraPtr& alg, const Decomposition& d) {
  auto pm = product_map(*alg, d);
  if (!pm) return std::nullopt;
  IntMatrix rel;
  for (std::size_t s = 0; s < d.size(); ++s)
    for (std::size_t t = 0; t < d.size(); ++t) {
      const auto& hit = pm->targets[s][t];
      if (hit.size() > 1) return std::nullopt;
      if (hit.empty()) continue;
      std::vector<std::int64_t> r(d.size(), 0);
      r[s] += 1;
      r[t] += 1;
      r[hit[0]] -= 1;
      rel.push_back(r);
    }
  UniversalGroup u = present(d.size(), rel);
  if (u.injective) {
    std::vector<std::size_t> id(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) id[i] = i;
    u.grading = build_from_blocks(alg, d, u, id, d.size());
  }
  return u;
}

UniversalGroup universal_group(const Grading& g) {
  auto u = universal_group(g.alg, decomposition(g));
  if (!u) throw Error(ErrorKind::InvalidGrading, "decomposition is not a set grading");
  return *u;
}

Grading induce(const Grading& g, const AbHom& alpha) {
  if (alpha.source() != g.group) throw Error(ErrorKind::WrongGroup, "homomorphism source differs from the grading group");
  std::map<std::vector<std::int64_t>, std::size_t> at;
  Grading out{g.alg, alpha.target(), {}};
  for (const auto& c : g.comps) {
    AbElement d = alpha.apply(c.degree);
    auto it = at.find(d.coords());
    if (it == at.end()) {
      at[d.coords()] = out.comps.size();
      out.comps.push_back({d, c.basis});
    } else {
      out.comps[it->second].basis = stack(out.comps[it->second].basis, c.basis);
    }
  }
  return sorted(out);
}

bool is_refinement(const Grading& fine, const Grading& coarse) {
  for (const auto& f : fine.comps) {
    bool inside = false;
    for (const auto& c : coarse.comps)
      if (row_space_contains(c.basis, f.basis)) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  return true;
}

std::string decomposition_key(const Decomposition& d) {
  std::vector<std::string> keys;
  for (const auto& m : d) keys.push_back(matrix_key(m));
  std::sort(keys.begin(), keys.end());
  std::string s;
  for (const auto& k : keys) s += k + "|";
  return s;
}

bool same_decomposition(const Grading& a, const Grading& b) {
  return decomposition_key(decomposition(a)) == decomposition_key(decomposition(b));
}

std::vector<Grading> coarsenings_enum(const Grading& g) {
  const std::size_t k = g.comps.size();
  if (k > 8) throw Error(ErrorKind::SupportTooLarge, "support has " + std::to_string(k) + " elements (limit 8)");
  Decomposition d = decomposition(g);
  auto pm = product_map(*g.alg, d);
  if (!pm) throw Error(ErrorKind::InvalidGrading, "components are not independent");
  std::vector<Grading> out;
  std::set<std::string> seen;
  std::vector<std::size_t> rgs(k, 0);
  while (true) {
    std::size_t nblocks = k ? *std::max_element(rgs.begin(), rgs.end()) + 1 : 0;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> table;
    IntMatrix rel;
    bool ok = true;
    for (std::size_t s = 0; s < k && ok; ++s)
      for (std::size_t t = 0; t < k && ok; ++t)
        for (std::size_t r : pm->targets[s][t]) {
          auto key = std::make_pair(rgs[s], rgs[t]);
          auto [it, fresh] = table.emplace(key, rgs[r]);
          if (!fresh && it->second != rgs[r]) {
            ok = false;
            break;
          }
          if (fresh) {
            std::vector<std::int64_t> row(nblocks, 0);
            row[rgs[s]] += 1;
            row[rgs[t]] += 1;
            row[rgs[r]] -= 1;
            rel.push_back(row);
          }
        }
    if (ok) {
      UniversalGroup u = present(nblocks, rel);
      if (u.injective) {
        Grading c = build_from_blocks(g.alg, d, u, rgs, nblocks);
        if (seen.insert(decomposition_key(decomposition(c))).second) out.push_back(c);
      }
    }
    if (!next_rgs(rgs)) break;
  }
  return out;
}

Grading from_degrees(const AlgebraPtr& alg, const AbGroup& group, const std::vector<Vec>& vectors,
                     const std::vector<AbElement>& degrees) {
  if (vectors.size() != degrees.size()) throw Error(ErrorKind::InvalidGrading, "one degree per vector required");
  Grading g{alg, group, {}};
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (degrees[i].group() != group) throw Error(ErrorKind::WrongGroup, "degree outside " + group.str());
    auto at = g.find(degrees[i]);
    if (!at) {
      g.comps.push_back({degrees[i], Matrix(alg->field(), 0, alg->dim())});
      at = g.comps.size() - 1;
    }
    g.comps[*at].basis.append_row(vectors[i]);
  }
  g = sorted(g);
  require_valid(g);
  return g;
}

Grading from_named_degrees(const AlgebraPtr& alg, const AbGroup& group,
                           const std::vector<std::pair<std::string, AbElement>>& degrees) {
  std::vector<Vec> v;
  std::vector<AbElement> d;
  for (const auto& [name, deg] : degrees) {
    v.push_back(alg->basis(name));
    d.push_back(deg);
  }
  return from_degrees(alg, group, v, d);
}

Grading main_grading(const AlgebraPtr& alg) {
  AbGroup z2 = AbGroup::cyclic(2);
  std::vector<Vec> v;
  std::vector<AbElement> d;
  for (std::size_t i = 0; i < alg->dim(); ++i) {
    v.push_back(alg->basis(i));
    d.emplace_back(z2, std::vector<std::int64_t>{alg->parity(i) == Parity::Odd ? 1 : 0});
  }
  return from_degrees(alg, z2, v, d);
}

Grading trivial_grading(const AlgebraPtr& alg) {
  AbGroup t = AbGroup::make(0);
  std::vector<Vec> v;
  for (std::size_t i = 0; i < alg->dim(); ++i) v.push_back(alg->basis(i));
  return from_degrees(alg, t, v, std::vector<AbElement>(alg->dim(), AbElement::zero(t)));
}

Grading gamma_grading_b12(const AlgebraPtr& alg, const AbElement& g) {
  AbElement z = AbElement::zero(g.group());
  return from_named_degrees(alg, g.group(), {{"1", z}, {"u", g}, {"v", -g}});
}

Grading gamma_grading_b42(const AlgebraPtr& alg, const AbElement& g) {
  AbElement z = AbElement::zero(g.group());
  return from_named_degrees(alg, g.group(),
                            {{"e1", z}, {"e2", z}, {"x", 2 * g}, {"y", -(2 * g)}, {"u", g}, {"v", -g}});
}

Grading gamma_grading_dim4(const CanonicalBasis& cb, const AbElement& g) {
  if (cb.size() != 4) throw Error(ErrorKind::Unsupported, "dimension-4 canonical basis required");
  AbElement z = AbElement::zero(g.group());
  return from_degrees(cb.alg, g.group(), cb.vectors, {z, z, g, -g});
}

std::string GradingTriple::str() const { return "(" + g1.str() + ", " + g2.str() + ", " + g3.str() + ")"; }

GradingTriple make_triple(const AbElement& g1, const AbElement& g2, const AbElement& g3) {
  if (!(g1 + g2 + g3).is_zero())
    throw Error(ErrorKind::TripleNotZeroSum, "(" + g1.str() + ", " + g2.str() + ", " + g3.str() + ") does not sum to 0");
  return {g1, g2, g3};
}

Grading gamma_grading_dim8(const CanonicalBasis& cb, const AbGroup& group, const GradingTriple& t) {
  if (cb.size() != 8) throw Error(ErrorKind::Unsupported, "dimension-8 canonical basis required");
  make_triple(t.g1, t.g2, t.g3);
  AbElement z = AbElement::zero(group);
  return from_degrees(cb.alg, group, cb.vectors, {z, z, t.g1, t.g2, t.g3, -t.g1, -t.g2, -t.g3});
}

bool gamma_equiv(const GradingTriple& a, const GradingTriple& b) {
  for (int eps : {1, -1})
    for (bool swap : {false, true}) {
      const AbElement& x1 = swap ? a.g2 : a.g1;
      const AbElement& x2 = swap ? a.g1 : a.g2;
      if (b.g3 == eps * a.g3 && b.g1 == eps * x1 && b.g2 == eps * x2) return true;
    }
  return false;
}

}  // namespace csg

#include "csg/search.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "csg/axioms.hpp"

namespace csg {

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::ProvenNone: return "proven-none";
    case SearchStatus::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

std::optional<std::string> graded_map_failure(const Morphism& phi, const Grading& a, const Grading& b, MapMode mode) {
  if (mode == MapMode::Ungraded) return std::nullopt;
  std::vector<bool> hit(b.comps.size(), false);
  for (const auto& c : a.comps) {
    Matrix img(a.alg->field(), 0, b.alg->dim());
    for (std::size_t r = 0; r < c.dim(); ++r) img.append_row(phi.apply(c.basis.row_vec(r)));
    std::optional<std::size_t> at;
    if (mode == MapMode::Isomorphism) {
      auto d = b.find(c.degree);
      if (d && same_row_space(img, b.comps[*d].basis)) at = d;
    } else {
      for (std::size_t d = 0; d < b.comps.size() && !at; ++d)
        if (!hit[d] && same_row_space(img, b.comps[d].basis)) at = d;
    }
    if (!at) return "component of degree " + c.degree.str() + " is not mapped onto a component";
    hit[*at] = true;
  }
  return std::nullopt;
}

namespace {

struct Profile {
  std::size_t even, odd;
  auto operator<=>(const Profile&) const = default;
};

Profile profile(const Grading& g, std::size_t c) { return {g.dim(c, Parity::Even), g.dim(c, Parity::Odd)}; }

std::vector<Vec> nonzero_span(const Matrix& rows) {
  std::vector<Vec> out;
  if (rows.rows() == 0) return out;
  for (const Vec& c : all_vectors(rows.field(), rows.rows())) {
    if (is_zero(c)) continue;
    Vec v = zero_vec(rows.field(), rows.cols());
    for (std::size_t r = 0; r < rows.rows(); ++r)
      if (!c[r].is_zero()) v = v + c[r] * rows.row_vec(r);
    out.push_back(v);
  }
  return out;
}

// Rows of m reordered so that `first` leads, keeping a basis of the same span.
Matrix basis_starting_with(const Vec& first, const Matrix& m) {
  Matrix out = Matrix::from_rows(m.field(), m.cols(), {first});
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!in_row_space(out, m.row(r))) out.append_row(m.row(r));
  return out;
}

Matrix columns(const Field& f, std::size_t n, const std::vector<Vec>& cols) {
  Matrix m(f, n, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < n; ++r) m(r, c) = cols[c][r];
  return m;
}

// Echelon basis with pop-last undo for incremental independence tests.
class IndependenceTracker {
 public:
  explicit IndependenceTracker(std::size_t n) : n_(n) {}
  bool push(const Vec& v) {
    Vec w = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Scalar& c = w[pivots_[i]];
      if (!c.is_zero()) w = w - c * rows_[i];
    }
    std::size_t p = 0;
    while (p < n_ && w[p].is_zero()) ++p;
    if (p == n_) return false;
    rows_.push_back(w[p].inv() * w);
    pivots_.push_back(p);
    return true;
  }
  void pop() {
    rows_.pop_back();
    pivots_.pop_back();
  }

 private:
  std::size_t n_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

class Engine {
 public:
  Engine(const Grading& ga, const Grading& gb, MapMode mode, const SearchBudget& budget, bool collect)
      : ga_(ga), gb_(gb), a_(*ga.alg), b_(*gb.alg), mode_(mode), budget_(budget), collect_(collect),
        tracker_(gb.alg->dim()) {}

  SearchResult run() {
    SearchResult r;
    if (&a_.field() != &b_.field()) throw Error(ErrorKind::MixedFields, "algebras over different fields");
    if (!a_.field().is_finite()) throw Error(ErrorKind::InfiniteField, "search needs a finite field");
    if (auto why = obstruction()) {
      r.note = *why;
      return r;
    }
    std::optional<Vec> ua, ub;
    if (auto why = anchors(ua, ub)) {
      r.note = *why;
      return r;
    }
    setup_source(ua);
    setup_target();
    if (ua)
      for (std::size_t k = 0; k < vars_.size(); ++k)
        if (vars_[k] == *ua) preset_.push_back({k, *ub});
    bool ok = true;
    for (auto [v, w] : preset_)
      if (!assign(v, w)) ok = false;
    if (ok) search();
    r.nodes = nodes_;
    if (!solutions_.empty()) {
      r.status = SearchStatus::Found;
      r.map = solutions_.front();
    } else {
      r.status = exhausted_ ? SearchStatus::BudgetExhausted : SearchStatus::ProvenNone;
      if (!ok) r.note = "fixed unit images are inconsistent";
    }
    return r;
  }

  const std::vector<Morphism>& solutions() const { return solutions_; }
  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  struct Term {
    std::size_t k;
    Scalar c;
  };
  struct Pair {
    std::size_t i, j;
    std::vector<Term> out;
  };

  std::optional<std::string> obstruction() {
    if (a_.dim() != b_.dim()) return "dimensions differ";
    if (mode_ == MapMode::Ungraded) return std::nullopt;
    if (a_.dim(Parity::Odd) != b_.dim(Parity::Odd)) return "odd parts differ in dimension";
    if (a_.unit().has_value() != b_.unit().has_value()) return "only one algebra is unital";
    if (mode_ == MapMode::Isomorphism) {
      if (ga_.group != gb_.group) throw Error(ErrorKind::WrongGroup, "gradings by different groups");
      for (std::size_t c = 0; c < ga_.comps.size(); ++c) {
        auto d = gb_.find(ga_.comps[c].degree);
        if (!d || profile(ga_, c) != profile(gb_, *d))
          return "component dimensions differ in degree " + ga_.comps[c].degree.str();
      }
      if (ga_.comps.size() != gb_.comps.size()) return "supports differ";
    } else {
      std::multiset<Profile> pa, pb;
      for (std::size_t c = 0; c < ga_.comps.size(); ++c) pa.insert(profile(ga_, c));
      for (std::size_t c = 0; c < gb_.comps.size(); ++c) pb.insert(profile(gb_, c));
      if (pa != pb) return "component dimension profiles differ";
    }
    return std::nullopt;
  }

  std::vector<Matrix> source_components() const {
    std::vector<Matrix> comps;
    if (mode_ == MapMode::Ungraded) {
      comps.push_back(Matrix::identity(a_.field(), a_.dim()));
    } else {
      for (std::size_t c = 0; c < ga_.comps.size(); ++c)
        comps.push_back(stack(ga_.part(c, Parity::Even), ga_.part(c, Parity::Odd)));
    }
    return comps;
  }

  void setup_source(const std::optional<Vec>& anchor) {
    std::vector<Matrix> comps = source_components();
    if (anchor)
      for (auto& m : comps)
        if (in_row_space(m, *anchor)) m = basis_starting_with(*anchor, m);
    for (std::size_t c = 0; c < comps.size(); ++c)
      for (std::size_t r = 0; r < comps[c].rows(); ++r) {
        Vec v = comps[c].row_vec(r);
        vars_.push_back(v);
        comp_.push_back(c);
        parity_.push_back(mode_ == MapMode::Ungraded || a_.is_homogeneous(v, Parity::Even) ? Parity::Even : Parity::Odd);
      }
    const std::size_t n = vars_.size();
    sinv_ = *inverse(columns(a_.field(), n, vars_));
    touching_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vec co = sinv_.apply(a_.mul(vars_[i], vars_[j]));
        Pair p{i, j, {}};
        for (std::size_t k = 0; k < n; ++k)
          if (!co[k].is_zero()) p.out.push_back({k, co[k]});
        const std::size_t id = pairs_.size();
        pairs_.push_back(p);
        std::set<std::size_t> involved = {i, j};
        for (const auto& t : p.out) involved.insert(t.k);
        for (auto v : involved) touching_[v].push_back(id);
      }
    if (mode_ != MapMode::Ungraded) {
      ba_.assign(n, std::vector<Scalar>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) ba_[i][j] = a_.b(vars_[i], vars_[j]);
      qa_.assign(n, Scalar());
      for (std::size_t i = 0; i < n; ++i)
        if (parity_[i] == Parity::Even) qa_[i] = a_.q0(vars_[i]);
    }
    img_.assign(n, std::nullopt);
    match_.assign(comps.size(), -1);
  }

  void setup_target() {
    std::vector<Vec> cols;
    if (mode_ == MapMode::Ungraded) {
      Matrix id = Matrix::identity(b_.field(), b_.dim());
      cands_.push_back({nonzero_span(id), {}});
      for (std::size_t i = 0; i < b_.dim(); ++i) {
        cols.push_back(b_.basis(i));
        owner_.push_back({0, Parity::Even});
      }
      used_.assign(1, false);
    } else {
      for (std::size_t d = 0; d < gb_.comps.size(); ++d) {
        Matrix e = gb_.part(d, Parity::Even), o = gb_.part(d, Parity::Odd);
        cands_.push_back({nonzero_span(e), nonzero_span(o)});
        for (std::size_t r = 0; r < e.rows(); ++r) {
          cols.push_back(e.row_vec(r));
          owner_.push_back({d, Parity::Even});
        }
        for (std::size_t r = 0; r < o.rows(); ++r) {
          cols.push_back(o.row_vec(r));
          owner_.push_back({d, Parity::Odd});
        }
      }
      used_.assign(gb_.comps.size(), false);
    }
    tinv_ = *inverse(columns(b_.field(), b_.dim(), cols));
    if (mode_ == MapMode::Isomorphism)
      for (std::size_t c = 0; c < ga_.comps.size(); ++c) match_[c] = static_cast<int>(*gb_.find(ga_.comps[c].degree));
    if (mode_ == MapMode::Ungraded) match_[0] = 0;
  }

  // unit, or unique para-unit, of each side
  std::optional<std::string> anchors(std::optional<Vec>& ua, std::optional<Vec>& ub) {
    if (a_.unit()) {
      ua = a_.unit();
      ub = b_.unit();
      return std::nullopt;
    }
    if (mode_ == MapMode::Ungraded) return std::nullopt;
    auto pa = find_para_units(a_, ParaUnitMode::Algebraic), pb = find_para_units(b_, ParaUnitMode::Algebraic);
    if (pa.size() != pb.size()) return "para-unit counts differ";
    if (pa.size() == 1) {
      ua = pa[0];
      ub = pb[0];
    }
    return std::nullopt;
  }

  // target component and parity of w, if w is homogeneous for the target grading
  std::optional<std::pair<std::size_t, Parity>> locate(const Vec& w) const {
    Vec c = tinv_.apply(w);
    std::optional<std::pair<std::size_t, Parity>> at;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k].is_zero()) continue;
      if (at && *at != owner_[k]) return std::nullopt;
      at = owner_[k];
    }
    return at;
  }

  bool admissible(std::size_t v, const Vec& w, std::size_t& target) const {
    auto at = locate(w);
    if (!at || at->second != parity_[v]) return false;
    const int m = match_[comp_[v]];
    if (m >= 0) {
      if (static_cast<std::size_t>(m) != at->first) return false;
    } else {
      if (used_[at->first] || profile(gb_, at->first) != profile(ga_, comp_[v])) return false;
    }
    target = at->first;
    return true;
  }

  struct TrailEntry {
    std::size_t var;
    int matched_comp;  // -1 unless this assignment fixed a component match
  };

  bool assign(std::size_t v, const Vec& w) {
    std::vector<std::pair<std::size_t, Vec>> queue{{v, w}};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      auto [k, x] = queue[qi];
      if (img_[k]) {
        if (*img_[k] != x) return false;
        continue;
      }
      std::size_t target = 0;
      if (!admissible(k, x, target)) return false;
      if (!tracker_.push(x)) return false;
      int matched = -1;
      if (match_[comp_[k]] < 0) {
        match_[comp_[k]] = static_cast<int>(target);
        used_[target] = true;
        matched = static_cast<int>(comp_[k]);
      }
      img_[k] = x;
      trail_.push_back({k, matched});
      if (!consistent(k, queue)) return false;
    }
    return true;
  }

  bool consistent(std::size_t v, std::vector<std::pair<std::size_t, Vec>>& queue) {
    const Vec& w = *img_[v];
    if (mode_ != MapMode::Ungraded) {
      if (parity_[v] == Parity::Even && b_.q0(w) != qa_[v]) return false;
      for (std::size_t u = 0; u < vars_.size(); ++u)
        if (img_[u] && (b_.b(w, *img_[u]) != ba_[v][u] || b_.b(*img_[u], w) != ba_[u][v])) return false;
    }
    for (std::size_t id : touching_[v]) {
      const Pair& p = pairs_[id];
      if (!img_[p.i] || !img_[p.j]) continue;
      Vec rest = b_.mul(*img_[p.i], *img_[p.j]);
      const Term* open = nullptr;
      int unknown = 0;
      for (const auto& t : p.out) {
        if (img_[t.k])
          rest = rest - t.c * *img_[t.k];
        else {
          ++unknown;
          open = &t;
        }
      }
      if (unknown == 0 && !is_zero(rest)) return false;
      if (unknown == 1) queue.push_back({open->k, open->c.inv() * rest});
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      TrailEntry e = trail_.back();
      trail_.pop_back();
      img_[e.var].reset();
      tracker_.pop();
      if (e.matched_comp >= 0) {
        used_[static_cast<std::size_t>(match_[static_cast<std::size_t>(e.matched_comp)])] = false;
        match_[static_cast<std::size_t>(e.matched_comp)] = -1;
      }
    }
  }

  std::size_t candidate_count(std::size_t v) const {
    const int m = match_[comp_[v]];
    const std::size_t p = parity_[v] == Parity::Even ? 0 : 1;
    if (m >= 0) return cands_[static_cast<std::size_t>(m)][p].size();
    std::size_t total = 0;
    for (std::size_t d = 0; d < cands_.size(); ++d)
      if (!used_[d] && profile(gb_, d) == profile(ga_, comp_[v])) total += cands_[d][p].size();
    return total;
  }

  // true when the search should stop
  bool search() {
    std::optional<std::size_t> pick;
    std::size_t best = 0;
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      if (img_[v]) continue;
      std::size_t c = candidate_count(v);
      if (!pick || c < best) {
        pick = v;
        best = c;
      }
    }
    if (!pick) {
      record();
      return !collect_;
    }
    const std::size_t v = *pick;
    const std::size_t p = parity_[v] == Parity::Even ? 0 : 1;
    std::vector<std::size_t> targets;
    const int m = match_[comp_[v]];
    if (m >= 0)
      targets.push_back(static_cast<std::size_t>(m));
    else
      for (std::size_t d = 0; d < cands_.size(); ++d)
        if (!used_[d] && profile(gb_, d) == profile(ga_, comp_[v])) targets.push_back(d);
    for (std::size_t d : targets)
      for (const Vec& w : cands_[d][p]) {
        if (++nodes_ > budget_.max_nodes) {
          exhausted_ = true;
          return true;
        }
        const std::size_t mark = trail_.size();
        if (assign(v, w) && search()) return true;
        undo(mark);
      }
    return false;
  }

  void record() {
    const Field& f = a_.field();
    const std::size_t n = vars_.size();
    std::vector<Vec> im;
    for (std::size_t k = 0; k < n; ++k) im.push_back(*img_[k]);
    Matrix m = columns(f, n, im) * *inverse(columns(f, n, vars_));
    unsigned checks = mode_ == MapMode::Ungraded ? AlgebraHom : (AlgebraHom | Isometry | ParityPreserving);
    Morphism phi = is_morphism(Morphism{ga_.alg, gb_.alg, m, 0}, checks);
    if (auto why = graded_map_failure(phi, ga_, gb_, mode_))
      throw Error(ErrorKind::CheckFailed, "search produced a non-graded map: " + *why);
    solutions_.push_back(phi);
  }

  const Grading& ga_;
  const Grading& gb_;
  const SuperAlgebra& a_;
  const SuperAlgebra& b_;
  MapMode mode_;
  SearchBudget budget_;
  bool collect_;

  std::vector<Vec> vars_;
  std::vector<std::size_t> comp_;
  std::vector<Parity> parity_;
  Matrix sinv_;
  std::vector<Pair> pairs_;
  std::vector<std::vector<std::size_t>> touching_;
  std::vector<std::vector<Scalar>> ba_;
  std::vector<Scalar> qa_;

  std::vector<std::array<std::vector<Vec>, 2>> cands_;
  std::vector<std::pair<std::size_t, Parity>> owner_;
  Matrix tinv_;

  std::vector<std::optional<Vec>> img_;
  std::vector<int> match_;
  std::vector<bool> used_;
  std::vector<TrailEntry> trail_;
  IndependenceTracker tracker_;
  std::vector<std::pair<std::size_t, Vec>> preset_;

  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<Morphism> solutions_;
};

}  // namespace

SearchResult find_graded_map(const Grading& a, const Grading& b, MapMode mode, const SearchBudget& budget) {
  Engine e(a, b, mode, budget, false);
  return e.run();
}

SearchResult find_algebra_isomorphism(const AlgebraPtr& a, const AlgebraPtr& b, const SearchBudget& budget) {
  Grading ga = trivial_grading(a), gb = trivial_grading(b);
  Engine e(ga, gb, MapMode::Ungraded, budget, false);
  return e.run();
}

AutomorphismList enumerate_automorphisms(const AlgebraPtr& a, const std::optional<Grading>& constraints,
                                         const SearchBudget& budget) {
  Grading g = constraints ? *constraints : trivial_grading(a);
  Engine e(g, g, MapMode::Isomorphism, budget, true);
  e.run();
  return {!e.exhausted(), e.solutions(), e.nodes()};
}

std::vector<std::pair<Matrix, Matrix>> two_piece_splits(const Matrix& rows) {
  const std::size_t m = rows.rows();
  const Field& f = rows.field();
  std::vector<std::pair<Matrix, Matrix>> out;
  auto lift = [&](const Matrix& coords) { return coords * rows; };
  for (std::size_t k = 0; k <= m; ++k)
    for (const Matrix& x : all_subspaces(f, m, k))
      for (const Matrix& y : all_subspaces(f, m, m - k))
        if (rank(stack(x, y)) == m) out.emplace_back(lift(x), lift(y));
  return out;
}

namespace {

// Decompositions of the row space of `rows` into nonzero subspaces, each once.
void direct_sums(const std::vector<Matrix>& subs, std::size_t m, std::size_t start, const Matrix& sum,
                 std::vector<std::size_t>& chosen, std::vector<std::vector<std::size_t>>& out, std::uint64_t& nodes) {
  const std::size_t have = sum.rows();
  if (have == m) {
    out.push_back(chosen);
    return;
  }
  for (std::size_t i = start; i < subs.size(); ++i) {
    if (have + subs[i].rows() > m) continue;
    ++nodes;
    Matrix next = stack(sum, subs[i]);
    if (rank(next) != have + subs[i].rows()) continue;
    chosen.push_back(i);
    direct_sums(subs, m, i + 1, next, chosen, out, nodes);
    chosen.pop_back();
  }
}

std::vector<std::vector<Matrix>> decompositions_of(const Matrix& rows, std::uint64_t& nodes) {
  const std::size_t m = rows.rows();
  if (m == 0) return {{}};
  std::vector<Matrix> subs;
  for (std::size_t k = 1; k <= m; ++k)
    for (const Matrix& s : all_subspaces(rows.field(), m, k)) subs.push_back(s);
  std::vector<std::vector<std::size_t>> picks;
  std::vector<std::size_t> chosen;
  direct_sums(subs, m, 0, Matrix(rows.field(), 0, m), chosen, picks, nodes);
  std::vector<std::vector<Matrix>> out;
  for (const auto& p : picks) {
    std::vector<Matrix> d;
    for (auto i : p) d.push_back(subs[i] * rows);
    out.push_back(d);
  }
  return out;
}

void matchings(const std::vector<Matrix>& p0, const std::vector<Matrix>& p1, std::size_t i, std::vector<int>& partner,
               std::vector<bool>& taken, std::vector<Decomposition>& out) {
  if (i == p0.size()) {
    Decomposition d;
    for (std::size_t k = 0; k < p0.size(); ++k)
      d.push_back(partner[k] >= 0 ? stack(p0[k], p1[static_cast<std::size_t>(partner[k])]) : p0[k]);
    for (std::size_t k = 0; k < p1.size(); ++k)
      if (!taken[k]) d.push_back(p1[k]);
    out.push_back(d);
    return;
  }
  partner[i] = -1;
  matchings(p0, p1, i + 1, partner, taken, out);
  for (std::size_t k = 0; k < p1.size(); ++k) {
    if (taken[k]) continue;
    taken[k] = true;
    partner[i] = static_cast<int>(k);
    matchings(p0, p1, i + 1, partner, taken, out);
    taken[k] = false;
  }
  partner[i] = -1;
}

Matrix parity_rows(const SuperAlgebra& a, Parity p) {
  Matrix m(a.field(), 0, a.dim());
  for (auto i : a.indices(p)) m.append_row(a.basis(i));
  return m;
}

}  // namespace

GradingList enumerate_all_gradings(const AlgebraPtr& a, const SearchBudget& budget) {
  if (a->dim() > 4) throw Error(ErrorKind::DimensionTooLarge, "grading enumeration is limited to dimension 4");
  if (!a->field().is_finite()) throw Error(ErrorKind::InfiniteField, "grading enumeration needs a finite field");
  GradingList result;
  auto d0 = decompositions_of(parity_rows(*a, Parity::Even), result.nodes);
  auto d1 = decompositions_of(parity_rows(*a, Parity::Odd), result.nodes);
  std::set<std::string> seen;
  for (const auto& p0 : d0)
    for (const auto& p1 : d1) {
      std::vector<Decomposition> ds;
      std::vector<int> partner(p0.size(), -1);
      std::vector<bool> taken(p1.size(), false);
      matchings(p0, p1, 0, partner, taken, ds);
      for (const auto& d : ds) {
        if (++result.nodes > budget.max_nodes) {
          result.status = SearchStatus::BudgetExhausted;
          return result;
        }
        auto u = universal_group(a, d);
        if (!u || !u->injective) continue;
        if (seen.insert(decomposition_key(d)).second) result.gradings.push_back(*u->grading);
      }
    }
  return result;
}

namespace {

std::vector<std::pair<Matrix, Matrix>> component_splits(const Grading& g, std::size_t c) {
  std::vector<std::pair<Matrix, Matrix>> out;
  std::set<std::string> seen;
  auto es = two_piece_splits(g.part(c, Parity::Even));
  auto os = two_piece_splits(g.part(c, Parity::Odd));
  const std::size_t n = g.alg->dim();
  const Field& f = g.alg->field();
  for (const auto& [xe, ye] : es)
    for (const auto& [xo, yo] : os) {
      Matrix x = stack(xe.rows() ? xe : Matrix(f, 0, n), xo.rows() ? xo : Matrix(f, 0, n));
      Matrix y = stack(ye.rows() ? ye : Matrix(f, 0, n), yo.rows() ? yo : Matrix(f, 0, n));
      if (x.rows() == 0 || y.rows() == 0) continue;
      std::string kx = decomposition_key({x}), ky = decomposition_key({y});
      if (!seen.insert(std::min(kx, ky) + "#" + std::max(kx, ky)).second) continue;
      out.emplace_back(x, y);
    }
  return out;
}

Decomposition replace(const Decomposition& d, std::size_t c, const Matrix& x, const Matrix& y) {
  Decomposition out;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (i != c) out.push_back(d[i]);
  out.push_back(x);
  out.push_back(y);
  return out;
}

}  // namespace

FineResult fine_check(const Grading& g, const SearchBudget& budget, int depth) {
  if (!g.alg->field().is_finite()) throw Error(ErrorKind::InfiniteField, "fine check needs a finite field");
  FineResult r;
  r.depth = depth;
  Decomposition d = decomposition(g);
  auto accept = [&](const Decomposition& trial) -> bool {
    auto u = universal_group(g.alg, trial);
    if (u && u->injective) {
      r.status = SearchStatus::Found;
      r.witness = u->grading;
      return true;
    }
    return false;
  };
  std::vector<std::vector<std::pair<Matrix, Matrix>>> splits(d.size());
  for (std::size_t c = 0; c < d.size(); ++c)
    if (d[c].rows() >= 2) splits[c] = component_splits(g, c);
  for (std::size_t c = 0; c < d.size(); ++c)
    for (const auto& [x, y] : splits[c]) {
      if (++r.nodes > budget.max_nodes) {
        r.status = SearchStatus::BudgetExhausted;
        return r;
      }
      if (accept(replace(d, c, x, y))) return r;
    }
  if (depth < 2) return r;
  for (std::size_t c1 = 0; c1 < d.size(); ++c1)
    for (const auto& [x1, y1] : splits[c1]) {
      Decomposition half = replace(d, c1, x1, y1);
      // index of the second component after removing c1
      for (std::size_t c2 = c1 + 1; c2 < d.size(); ++c2) {
        if (splits[c2].empty()) continue;
        const std::size_t at = c2 - 1;
        auto t = product_targets(*g.alg, half);
        bool hopeless = false;
        for (std::size_t s = 0; t && s < half.size() && !hopeless; ++s)
          for (std::size_t u = 0; u < half.size(); ++u)
            if (s != at && u != at && (*t)[s][u].size() > 1) {
              hopeless = true;
              break;
            }
        if (hopeless) continue;
        for (const auto& [x2, y2] : splits[c2]) {
          if (++r.nodes > budget.max_nodes) {
            r.status = SearchStatus::BudgetExhausted;
            return r;
          }
          if (accept(replace(half, at, x2, y2))) return r;
        }
      }
    }
  return r;
}

}  // namespace csg

#include "csg/abelian.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace csg {

namespace {

using i64 = std::int64_t;

i64 ck_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer addition");
  return r;
}

i64 ck_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer multiplication");
  return r;
}

i64 ck_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer subtraction");
  return r;
}

i64 mod_floor(i64 a, i64 n) {
  i64 r = a % n;
  return r < 0 ? r + n : r;
}

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<i64>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// row_a -= q * row_b, on a matrix stored by rows
void row_axpy(IntMatrix& m, std::size_t a, std::size_t b, i64 q) {
  for (std::size_t j = 0; j < m[a].size(); ++j) m[a][j] = ck_sub(m[a][j], ck_mul(q, m[b][j]));
}

void col_axpy(IntMatrix& m, std::size_t a, std::size_t b, i64 q) {
  for (auto& row : m) row[a] = ck_sub(row[a], ck_mul(q, row[b]));
}

void col_swap(IntMatrix& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  const std::size_t rows = input.size();
  const std::size_t cols = rows ? input[0].size() : 0;
  SmithForm s{input, identity(rows), identity(cols), {}};
  IntMatrix& a = s.d;
  const std::size_t n = std::min(rows, cols);
  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // smallest nonzero entry of the remaining block goes to (t,t)
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pr == rows || std::llabs(a[i][j]) < std::llabs(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) goto done;
      std::swap(a[t], a[pr]);
      std::swap(s.u[t], s.u[pr]);
      col_swap(a, t, pc);
      col_swap(s.v, t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        i64 q = a[i][t] / a[t][t];
        row_axpy(a, i, t, q);
        row_axpy(s.u, i, t, q);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        i64 q = a[t][j] / a[t][t];
        col_axpy(a, j, t, q);
        col_axpy(s.v, j, t, q);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      row_axpy(a, t, bad, -1);
      row_axpy(s.u, t, bad, -1);
    }
    if (a[t][t] < 0) {
      for (auto& x : a[t]) x = -x;
      for (auto& x : s.u[t]) x = -x;
    }
    s.invariants.push_back(a[t][t]);
  }
done:
  return s;
}

IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  IntMatrix r(n, std::vector<i64>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      if (a[i][l] != 0)
        for (std::size_t j = 0; j < m; ++j) r[i][j] = ck_add(r[i][j], ck_mul(a[i][l], b[l][j]));
  return r;
}

std::int64_t int_determinant(const IntMatrix& input) {
  // fraction-free Bareiss elimination
  IntMatrix m = input;
  const std::size_t n = m.size();
  if (n == 0) return 1;
  i64 sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t sel = k + 1;
      while (sel < n && m[sel][k] == 0) ++sel;
      if (sel == n) return 0;
      std::swap(m[k], m[sel]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = ck_sub(ck_mul(m[i][j], m[k][k]), ck_mul(m[i][k], m[k][j])) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

AbGroup AbGroup::make(int rank, std::vector<std::int64_t> moduli) {
  AbGroup g;
  g.rank_ = rank;
  IntMatrix diag(moduli.size(), std::vector<i64>(moduli.size(), 0));
  for (std::size_t i = 0; i < moduli.size(); ++i) diag[i][i] = std::llabs(moduli[i]);
  SmithForm s = smith_normal_form(diag);
  for (std::size_t i = s.invariants.size(); i < moduli.size(); ++i) ++g.rank_;
  for (i64 d : s.invariants)
    if (d != 1) g.torsion_.push_back(d);
  return g;
}

AbGroup AbGroup::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (c != ' ') t += c;
  if (t == "0" || t == "1") return AbGroup{};
  int rank = 0;
  std::vector<i64> moduli;
  std::size_t pos = 0;
  while (pos <= t.size()) {
    std::size_t next = t.find('x', pos);
    std::string tok = t.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (tok.empty() || tok[0] != 'Z') throw Error(ErrorKind::Parse, "bad group string '" + text + "'");
    std::size_t caret = tok.find('^');
    std::string base = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
    int power = 1;
    try {
      if (caret != std::string::npos) power = std::stoi(tok.substr(caret + 1));
      for (int i = 0; i < power; ++i) {
        if (base.empty())
          ++rank;
        else
          moduli.push_back(std::stoll(base));
      }
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::Parse, "bad group string '" + text + "'");
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return make(rank, moduli);
}

std::int64_t AbGroup::order() const {
  if (rank_ > 0) throw Error(ErrorKind::Unsupported, "order of an infinite group");
  i64 o = 1;
  for (i64 d : torsion_) o = ck_mul(o, d);
  return o;
}

std::int64_t AbGroup::modulus(std::size_t i) const {
  if (i < static_cast<std::size_t>(rank_)) return 0;
  return torsion_.at(i - static_cast<std::size_t>(rank_));
}

std::string AbGroup::str() const {
  if (is_trivial()) return "0";
  std::vector<std::string> parts;
  if (rank_ == 1) parts.push_back("Z");
  if (rank_ > 1) parts.push_back("Z^" + std::to_string(rank_));
  for (i64 d : torsion_) parts.push_back("Z" + std::to_string(d));
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " x " : "") + parts[i];
  return s;
}

AbElement::AbElement(AbGroup g, std::vector<std::int64_t> coords) : group_(std::move(g)), coords_(std::move(coords)) {
  if (coords_.size() != group_.ngens())
    throw Error(ErrorKind::WrongGroup, "element has " + std::to_string(coords_.size()) + " coordinates, group " +
                                           group_.str() + " needs " + std::to_string(group_.ngens()));
  reduce();
}

void AbElement::reduce() {
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    i64 n = group_.modulus(i);
    if (n) coords_[i] = mod_floor(coords_[i], n);
  }
}

bool AbElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](i64 c) { return c == 0; });
}

std::int64_t AbElement::order() const {
  i64 o = 1;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    i64 n = group_.modulus(i);
    if (n == 0) {
      if (coords_[i] != 0) return 0;
      continue;
    }
    i64 oi = n / std::gcd(coords_[i], n);
    o = std::lcm(o, oi);
  }
  return o;
}

static void same_group(const AbElement& a, const AbElement& b) {
  if (a.group() != b.group())
    throw Error(ErrorKind::WrongGroup, "elements of " + a.group().str() + " and " + b.group().str());
}

AbElement operator+(const AbElement& a, const AbElement& b) {
  same_group(a, b);
  std::vector<i64> c(a.coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = ck_add(a.coords_[i], b.coords_[i]);
  return AbElement(a.group_, c);
}

AbElement operator-(const AbElement& a, const AbElement& b) { return a + (-b); }

AbElement operator-(const AbElement& a) {
  std::vector<i64> c(a.coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = ck_sub(0, a.coords_[i]);
  return AbElement(a.group_, c);
}

AbElement operator*(std::int64_t k, const AbElement& a) {
  std::vector<i64> c(a.coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = ck_mul(k, a.coords_[i]);
  return AbElement(a.group_, c);
}

std::string AbElement::str() const {
  if (coords_.empty()) return "0";
  if (coords_.size() == 1) {
    i64 n = group_.modulus(0);
    return n ? std::to_string(coords_[0]) + " mod " + std::to_string(n) : std::to_string(coords_[0]);
  }
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) s += (i ? "," : "") + std::to_string(coords_[i]);
  return s + ")";
}

AbHom::AbHom(AbGroup source, AbGroup target, std::vector<AbElement> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.ngens()) throw Error(ErrorKind::WrongGroup, "one image per source generator required");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i].group() != target_) throw Error(ErrorKind::WrongGroup, "image outside target group");
    i64 n = source_.modulus(i);
    if (n && !(n * images_[i]).is_zero())
      throw Error(ErrorKind::WrongGroup, "image of generator " + std::to_string(i) + " does not respect its order");
  }
}

AbHom AbHom::from_matrix(AbGroup source, AbGroup target, const IntMatrix& rows) {
  std::vector<AbElement> imgs;
  for (const auto& r : rows) imgs.emplace_back(target, r);
  return AbHom(std::move(source), std::move(target), std::move(imgs));
}

AbHom AbHom::identity(const AbGroup& g) { return from_matrix(g, g, csg::identity(g.ngens())); }

AbHom AbHom::zero(const AbGroup& source, const AbGroup& target) {
  return AbHom(source, target, std::vector<AbElement>(source.ngens(), AbElement::zero(target)));
}

AbElement AbHom::apply(const AbElement& x) const {
  if (x.group() != source_) throw Error(ErrorKind::WrongGroup, "argument not in source " + source_.str());
  AbElement r = AbElement::zero(target_);
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (x.coords()[i] != 0) r = r + x.coords()[i] * images_[i];
  return r;
}

Presentation presentation_to_group(std::size_t ngenerators, const IntMatrix& relations) {
  for (const auto& r : relations)
    if (r.size() != ngenerators) throw Error(ErrorKind::WrongGroup, "relation length differs from generator count");
  IntMatrix m = relations;
  SmithForm s = smith_normal_form(m.empty() ? IntMatrix{} : m);
  IntMatrix v = s.v.empty() ? identity(ngenerators) : s.v;
  // coordinate i of the new basis has modulus invariants[i] (or 0 past the rank)
  std::vector<i64> mods(ngenerators, 0);
  for (std::size_t i = 0; i < s.invariants.size(); ++i) mods[i] = s.invariants[i];
  std::vector<std::size_t> free_idx, tors_idx;
  for (std::size_t i = 0; i < ngenerators; ++i) {
    if (mods[i] == 0)
      free_idx.push_back(i);
    else if (mods[i] != 1)
      tors_idx.push_back(i);
  }
  std::vector<i64> tors;
  for (auto i : tors_idx) tors.push_back(mods[i]);
  Presentation p;
  p.group = AbGroup::make(static_cast<int>(free_idx.size()), tors);
  for (std::size_t j = 0; j < ngenerators; ++j) {
    std::vector<i64> c;
    for (auto i : free_idx) c.push_back(v[j][i]);
    for (auto i : tors_idx) c.push_back(v[j][i]);
    p.projection.emplace_back(p.group, c);
  }
  return p;
}

}  // namespace csg

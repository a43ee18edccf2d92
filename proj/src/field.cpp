#include "csg/field.hpp"

#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace csg {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::MixedFields: return "MixedFields";
    case ErrorKind::InfiniteField: return "InfiniteField";
    case ErrorKind::UnknownField: return "UnknownField";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::WrongGroup: return "WrongGroup";
    case ErrorKind::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorKind::MixedAlgebras: return "MixedAlgebras";
    case ErrorKind::OddArgument: return "OddArgument";
    case ErrorKind::NoUnit: return "NoUnit";
    case ErrorKind::CheckFailed: return "CheckFailed";
    case ErrorKind::ZeroAlpha: return "ZeroAlpha";
    case ErrorKind::NotHurwitz: return "NotHurwitz";
    case ErrorKind::WrongCharacteristic: return "WrongCharacteristic";
    case ErrorKind::BadAutomorphism: return "BadAutomorphism";
    case ErrorKind::NoCubeRoot: return "NoCubeRoot";
    case ErrorKind::NotIsotropic: return "NotIsotropic";
    case ErrorKind::NotSplit: return "NotSplit";
    case ErrorKind::TripleNotZeroSum: return "TripleNotZeroSum";
    case ErrorKind::SupportTooLarge: return "SupportTooLarge";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::FieldConditionUnmet: return "FieldConditionUnmet";
    case ErrorKind::InvalidGrading: return "InvalidGrading";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

namespace {

bool is_small_prime(int p) {
  if (p < 2 || p >= 64) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw Error(ErrorKind::Overflow, "rational arithmetic exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

void require_same(const Scalar& a, const Scalar& b) {
  if (!a.valid() || !b.valid() || &a.field() != &b.field())
    throw Error(ErrorKind::MixedFields, "operands live in different fields");
}

}  // namespace

Field::Field() : kind_(FieldKind::Rational), name_("Q") {}

Field::Field(int p) : kind_(FieldKind::Prime), p_(p), q_(p), name_("GF(" + std::to_string(p) + ")") {
  build_tables();
}

Field::Field(int p, int c0, int c1)
    : kind_(FieldKind::Quadratic), p_(p), q_(p * p), mod0_(c0), mod1_(c1),
      name_("GF(" + std::to_string(p * p) + ")") {
  for (int t = 0; t < p; ++t)
    if ((t * t + c1 * t + c0) % p == 0)
      throw Error(ErrorKind::UnknownField, "modulus has a root in GF(p)");
  build_tables();
}

void Field::build_tables() {
  const int q = q_;
  add_.assign(static_cast<std::size_t>(q) * q, 0);
  mul_.assign(static_cast<std::size_t>(q) * q, 0);
  neg_.assign(q, 0);
  inv_.assign(q, 0);
  auto split = [&](int c) { return std::pair<int, int>{c % p_, c / p_}; };
  auto join = [&](int a0, int a1) { return ((a0 % p_ + p_) % p_) + p_ * ((a1 % p_ + p_) % p_); };
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      int s, m;
      if (kind_ == FieldKind::Prime) {
        s = (a + b) % p_;
        m = (a * b) % p_;
      } else {
        auto [a0, a1] = split(a);
        auto [b0, b1] = split(b);
        s = join(a0 + b0, a1 + b1);
        // x^2 = -c1 x - c0
        int hi = a1 * b1;
        m = join(a0 * b0 - hi * mod0_, a0 * b1 + a1 * b0 - hi * mod1_);
      }
      add_[a * q + b] = static_cast<std::uint8_t>(s);
      mul_[a * q + b] = static_cast<std::uint8_t>(m);
    }
  }
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (add_[a * q + b] == 0) neg_[a] = static_cast<std::uint8_t>(b);
      if (mul_[a * q + b] == 1) inv_[a] = static_cast<std::uint8_t>(b);
    }
  }
}

const Field& Field::rationals() {
  static const Field* f = new Field();
  return *f;
}

const Field& Field::prime(int p) {
  if (!is_small_prime(p)) throw Error(ErrorKind::UnknownField, "GF(" + std::to_string(p) + ") is not supported");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Field>> fields;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = fields[p];
  if (!slot) slot.reset(new Field(p));
  return *slot;
}

const Field& Field::gf4() {
  static const Field* f = new Field(2, 1, 1);
  return *f;
}

const Field& Field::gf9() {
  static const Field* f = new Field(3, 1, 0);
  return *f;
}

const Field& Field::parse(std::string_view name) {
  if (name == "Q") return rationals();
  if (name.size() > 4 && name.substr(0, 3) == "GF(" && name.back() == ')') {
    std::string inner(name.substr(3, name.size() - 4));
    char* end = nullptr;
    long q = std::strtol(inner.c_str(), &end, 10);
    if (end && *end == '\0' && !inner.empty()) {
      if (q == 4) return gf4();
      if (q == 9) return gf9();
      if (is_small_prime(static_cast<int>(q))) return prime(static_cast<int>(q));
    }
  }
  throw Error(ErrorKind::UnknownField, "unsupported field '" + std::string(name) + "'");
}

std::uint64_t Field::order() const {
  if (!is_finite()) throw Error(ErrorKind::InfiniteField, "Q has no finite order");
  return static_cast<std::uint64_t>(q_);
}

Scalar Field::zero() const { return make(0); }
Scalar Field::one() const { return make(1); }

Scalar Field::from_int(std::int64_t n) const {
  if (!is_finite()) return Scalar(this, n, 1);
  std::int64_t r = ((n % p_) + p_) % p_;
  return make(r);
}

Scalar Field::fraction(std::int64_t num, std::int64_t den) const {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  if (!is_finite()) return make_fraction(num, den);
  return from_int(num) / from_int(den);
}

Scalar Field::make_fraction(__int128 num, __int128 den) const {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  return Scalar(this, narrow(num), narrow(den));
}

Scalar Field::element(int code) const {
  if (!is_finite()) throw Error(ErrorKind::InfiniteField, "element codes exist only for finite fields");
  if (code < 0 || code >= q_) throw Error(ErrorKind::Parse, "element code out of range");
  return make(code);
}

Scalar Field::generator() const {
  if (kind_ != FieldKind::Quadratic) throw Error(ErrorKind::Unsupported, name_ + " has no adjoined generator");
  return make(p_);
}

std::vector<Scalar> Field::elements() const {
  if (!is_finite()) throw Error(ErrorKind::InfiniteField, "cannot enumerate Q");
  std::vector<Scalar> out;
  out.reserve(q_);
  for (int c = 0; c < q_; ++c) out.push_back(make(c));
  return out;
}

std::optional<Scalar> Field::primitive_cube_root() const {
  if (!is_finite()) return std::nullopt;
  for (const Scalar& w : elements()) {
    if (w.is_zero() || w.is_one()) continue;
    if ((w * w * w).is_one()) return w;
  }
  return std::nullopt;
}

Scalar Field::parse_scalar(std::string_view text) const {
  std::string s;
  for (char c : text)
    if (c != ' ') s.push_back(c);
  if (s.empty()) throw Error(ErrorKind::Parse, "empty scalar");
  auto parse_int = [&](const std::string& t) -> std::int64_t {
    if (t.empty() || t == "+") return 1;
    if (t == "-") return -1;
    char* end = nullptr;
    long long v = std::strtoll(t.c_str(), &end, 10);
    if (!end || *end != '\0') throw Error(ErrorKind::Parse, "bad integer '" + t + "' in scalar");
    return v;
  };
  if (!is_finite()) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return from_int(parse_int(s));
    return fraction(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
  }
  if (kind_ == FieldKind::Prime) return from_int(parse_int(s));
  // a1 x + a0 forms: "x", "2x", "x+1", "2x+2", "1"
  auto xpos = s.find('x');
  if (xpos == std::string::npos) return from_int(parse_int(s));
  std::int64_t a1 = parse_int(s.substr(0, xpos));
  std::int64_t a0 = 0;
  if (xpos + 1 < s.size()) a0 = parse_int(s.substr(xpos + 1));
  return generator() * from_int(a1) + from_int(a0);
}

bool Scalar::is_one() const { return a_ == 1 && b_ == 1; }

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  const Field& f = *a.field_;
  if (f.is_finite()) return f.make(f.add_[a.a_ * f.q_ + b.a_]);
  return f.make_fraction(static_cast<__int128>(a.a_) * b.b_ + static_cast<__int128>(b.a_) * a.b_,
                         static_cast<__int128>(a.b_) * b.b_);
}

Scalar operator-(const Scalar& a) {
  if (!a.valid()) throw Error(ErrorKind::MixedFields, "uninitialised scalar");
  const Field& f = *a.field_;
  if (f.is_finite()) return f.make(f.neg_[a.a_]);
  return Scalar(a.field_, narrow(-static_cast<__int128>(a.a_)), a.b_);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  const Field& f = *a.field_;
  if (f.is_finite()) return f.make(f.mul_[a.a_ * f.q_ + b.a_]);
  return f.make_fraction(static_cast<__int128>(a.a_) * b.a_, static_cast<__int128>(a.b_) * b.b_);
}

Scalar Scalar::inv() const {
  if (!valid()) throw Error(ErrorKind::MixedFields, "uninitialised scalar");
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  const Field& f = *field_;
  if (f.is_finite()) return f.make(f.inv_[a_]);
  return f.make_fraction(b_, a_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  return a * b.inv();
}

bool operator<(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  if (a.field().is_finite()) return a.a_ < b.a_;
  return static_cast<__int128>(a.a_) * b.b_ < static_cast<__int128>(b.a_) * a.b_;
}

Scalar Scalar::pow(std::int64_t e) const {
  if (e < 0) return inv().pow(-e);
  Scalar result = field_->one();
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::string Scalar::str() const {
  if (!valid()) return "<invalid>";
  const Field& f = *field_;
  if (!f.is_finite()) {
    if (b_ == 1) return std::to_string(a_);
    return std::to_string(a_) + "/" + std::to_string(b_);
  }
  if (f.kind() == FieldKind::Prime) return std::to_string(a_);
  int p = f.characteristic();
  int a0 = static_cast<int>(a_ % p), a1 = static_cast<int>(a_ / p);
  if (a1 == 0) return std::to_string(a0);
  std::string s = (a1 == 1 ? "" : std::to_string(a1)) + "x";
  if (a0 != 0) s += "+" + std::to_string(a0);
  return s;
}

}  // namespace csg

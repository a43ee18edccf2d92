#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "csg/error.hpp"

namespace csg {

class Field;

/// Exact scalar over one of the supported fields. Immutable value type.
///
/// Finite field elements are stored as a code in [0, q); for GF(p^2) the
/// code is a0 + a1*p for the residue a0 + a1*x. Rationals are stored as a
/// reduced fraction with positive denominator.
class Scalar {
 public:
  Scalar() = default;

  const Field& field() const;
  bool valid() const { return field_ != nullptr; }

  bool is_zero() const { return a_ == 0; }
  bool is_one() const;

  /// Finite fields only: the element code in [0, q).
  int code() const { return static_cast<int>(a_); }
  /// Rationals only.
  std::int64_t num() const { return a_; }
  std::int64_t den() const { return b_; }

  Scalar inv() const;
  Scalar pow(std::int64_t e) const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.a_ == b.a_ && a.b_ == b.b_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  /// Total order within one field (by code, or by value for rationals).
  friend bool operator<(const Scalar& a, const Scalar& b);

  std::string str() const;

 private:
  friend class Field;
  Scalar(const Field* f, std::int64_t a, std::int64_t b) : field_(f), a_(a), b_(b) {}

  const Field* field_ = nullptr;
  std::int64_t a_ = 0;
  std::int64_t b_ = 1;
};

enum class FieldKind { Rational, Prime, Quadratic };

/// A supported base field. Instances are process-wide singletons obtained
/// through the static accessors, so `const Field&` identity is field identity.
class Field {
 public:
  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  static const Field& rationals();
  /// GF(p) for a prime p < 64.
  static const Field& prime(int p);
  /// GF(2)[x]/(x^2+x+1).
  static const Field& gf4();
  /// GF(3)[x]/(x^2+1).
  static const Field& gf9();
  /// Accepts "Q", "GF(p)" for small primes, "GF(4)" and "GF(9)".
  static const Field& parse(std::string_view name);

  FieldKind kind() const { return kind_; }
  int characteristic() const { return kind_ == FieldKind::Rational ? 0 : p_; }
  bool is_finite() const { return kind_ != FieldKind::Rational; }
  /// Number of elements; throws InfiniteField for Q.
  std::uint64_t order() const;
  const std::string& name() const { return name_; }
  /// Coefficients (c0, c1) of the monic modulus x^2 + c1*x + c0 (quadratic only).
  std::pair<int, int> modulus() const { return {mod0_, mod1_}; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t n) const;
  Scalar fraction(std::int64_t num, std::int64_t den) const;
  /// Finite fields: element with the given code.
  Scalar element(int code) const;
  /// Quadratic fields: the residue class of x.
  Scalar generator() const;
  /// Parses the output of Scalar::str() back.
  Scalar parse_scalar(std::string_view text) const;

  /// Every element exactly once, in code order. Throws InfiniteField for Q.
  std::vector<Scalar> elements() const;

  /// Some w with w != 1 and w^3 = 1, if one exists (smallest code first).
  std::optional<Scalar> primitive_cube_root() const;

 private:
  friend class Scalar;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);
  Field();                     // rationals
  explicit Field(int p);         // prime field
  Field(int p, int c0, int c1);  // quadratic extension

  void build_tables();
  Scalar make(std::int64_t a) const { return Scalar(this, a, 1); }
  Scalar make_fraction(__int128 num, __int128 den) const;

  FieldKind kind_;
  int p_ = 0;
  int q_ = 0;
  int mod0_ = 0;
  int mod1_ = 0;
  std::string name_;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> mul_;
  std::vector<std::uint8_t> neg_;
  std::vector<std::uint8_t> inv_;
};

inline const Field& Scalar::field() const { return *field_; }

}  // namespace csg

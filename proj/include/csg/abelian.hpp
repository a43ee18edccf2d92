#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "csg/error.hpp"

namespace csg {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Finitely generated abelian group Z^rank x Z_{d1} x ... x Z_{dk} in
/// invariant-factor form: every d_i >= 2 and d_i | d_{i+1}.
class AbGroup {
 public:
  AbGroup() = default;
  /// Builds the canonical form of Z^rank x Z_{m1} x ...; the moduli need not
  /// form a divisibility chain and may contain 1 or 0 (0 adds a free factor).
  static AbGroup make(int rank, std::vector<std::int64_t> moduli = {});
  static AbGroup cyclic(std::int64_t n) { return make(n == 0 ? 1 : 0, n == 0 ? std::vector<std::int64_t>{} : std::vector<std::int64_t>{n}); }
  static AbGroup integers(int rank = 1) { return make(rank); }
  /// Parses "0", "Z", "Z^2", "Z4", "Z x Z2", "Z2 x Z2", "Z2^2".
  static AbGroup parse(const std::string& text);

  int rank() const { return rank_; }
  const std::vector<std::int64_t>& torsion() const { return torsion_; }
  /// Number of coordinates: free coordinates first, then torsion ones.
  std::size_t ngens() const { return static_cast<std::size_t>(rank_) + torsion_.size(); }
  bool is_trivial() const { return ngens() == 0; }
  bool is_finite() const { return rank_ == 0; }
  std::int64_t order() const;  // finite groups only
  /// Modulus of coordinate i (0 for free coordinates).
  std::int64_t modulus(std::size_t i) const;

  std::string str() const;

  friend bool operator==(const AbGroup& a, const AbGroup& b) {
    return a.rank_ == b.rank_ && a.torsion_ == b.torsion_;
  }
  friend bool operator!=(const AbGroup& a, const AbGroup& b) { return !(a == b); }

 private:
  int rank_ = 0;
  std::vector<std::int64_t> torsion_;
};

class AbElement {
 public:
  AbElement() = default;
  AbElement(AbGroup g, std::vector<std::int64_t> coords);
  static AbElement zero(const AbGroup& g) { return AbElement(g, std::vector<std::int64_t>(g.ngens(), 0)); }

  const AbGroup& group() const { return group_; }
  const std::vector<std::int64_t>& coords() const { return coords_; }
  bool is_zero() const;
  /// 0 for elements of infinite order.
  std::int64_t order() const;

  friend AbElement operator+(const AbElement& a, const AbElement& b);
  friend AbElement operator-(const AbElement& a, const AbElement& b);
  friend AbElement operator-(const AbElement& a);
  friend AbElement operator*(std::int64_t k, const AbElement& a);
  friend bool operator==(const AbElement& a, const AbElement& b) {
    return a.group_ == b.group_ && a.coords_ == b.coords_;
  }
  friend bool operator!=(const AbElement& a, const AbElement& b) { return !(a == b); }
  friend bool operator<(const AbElement& a, const AbElement& b) { return a.coords_ < b.coords_; }

  /// "3", "1 mod 4", or "(1,0)".
  std::string str() const;

 private:
  void reduce();
  AbGroup group_;
  std::vector<std::int64_t> coords_;
};

/// Homomorphism given by the images of the canonical generators of the source.
class AbHom {
 public:
  AbHom(AbGroup source, AbGroup target, std::vector<AbElement> images);
  /// Convenience: images as integer rows in target coordinates.
  static AbHom from_matrix(AbGroup source, AbGroup target, const IntMatrix& rows);
  static AbHom identity(const AbGroup& g);
  static AbHom zero(const AbGroup& source, const AbGroup& target);

  const AbGroup& source() const { return source_; }
  const AbGroup& target() const { return target_; }
  const std::vector<AbElement>& images() const { return images_; }

  AbElement apply(const AbElement& x) const;

 private:
  AbGroup source_;
  AbGroup target_;
  std::vector<AbElement> images_;
};

struct SmithForm {
  IntMatrix d;  // U * M * V
  IntMatrix u;  // unimodular, rows x rows
  IntMatrix v;  // unimodular, cols x cols
  std::vector<std::int64_t> invariants;  // nonzero diagonal entries, d1 | d2 | ...
};

/// Smith normal form with transforms. All arithmetic is overflow-checked.
SmithForm smith_normal_form(const IntMatrix& m);

IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b);
std::int64_t int_determinant(const IntMatrix& m);

struct Presentation {
  AbGroup group;
  std::vector<AbElement> projection;  // image of generator i
};

/// The group Z^n / <relations> with the image of each generator.
Presentation presentation_to_group(std::size_t ngenerators, const IntMatrix& relations);

}  // namespace csg

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ceresa/rat.hpp"

namespace ceresa {

/// Short Weierstrass curve y^2 = x^3 + A x + B over Q, nonsingular.
class WeierstrassCurve {
 public:
  WeierstrassCurve(Rat A, Rat B);

  const Rat& A() const { return A_; }
  const Rat& B() const { return B_; }
  Rat j_invariant() const;

  friend bool operator==(const WeierstrassCurve&, const WeierstrassCurve&) = default;

 private:
  Rat A_;
  Rat B_;
};

/// A point of E(Q): the identity at infinity or an affine (x, y).
class ECPoint {
 public:
  ECPoint() = default;
  ECPoint(Rat x, Rat y) : affine_(true), x_(std::move(x)), y_(std::move(y)) {}
  static ECPoint infinity() { return {}; }

  bool is_infinity() const { return !affine_; }
  /// Coordinates; only meaningful for affine points.
  const Rat& x() const { return x_; }
  const Rat& y() const { return y_; }

  ECPoint operator-() const { return affine_ ? ECPoint(x_, -y_) : *this; }

  friend bool operator==(const ECPoint&, const ECPoint&) = default;
  /// Infinity first, then lexicographic on (x, y).
  friend std::strong_ordering operator<=>(const ECPoint& p, const ECPoint& q);

  std::string str() const;

 private:
  bool affine_ = false;
  Rat x_;
  Rat y_;
};

bool on_curve(const WeierstrassCurve& E, const ECPoint& P);

/// Chord-tangent addition. Throws DomainError for points off E.
ECPoint add(const WeierstrassCurve& E, const ECPoint& P, const ECPoint& Q);

/// n P by double-and-add; negative n negates.
ECPoint scalar_mul(const WeierstrassCurve& E, std::int64_t n, const ECPoint& P);

/// Least n in 1..12 with n P = O, or nullopt when P has infinite order.
/// Twelve suffices over Q by Mazur's bound on rational torsion.
std::optional<int> torsion_order_q(const WeierstrassCurve& E, const ECPoint& P);

inline constexpr int kMazurBound = 12;

/// The map (x, y) -> (4x, 4y) from y^2 = 4x^3 + D onto y^2 = x^3 + 16 D.
struct DoubledModelMap {
  Rat D;

  /// Whether (x, y) lies on y^2 = 4x^3 + D.
  bool source_contains(const ECPoint& P) const;
  ECPoint apply(const ECPoint& P) const;
  ECPoint inverse(const ECPoint& P) const;
};

struct DoubledModel {
  WeierstrassCurve curve;
  DoubledModelMap map;
};

/// Converts y^2 = 4x^3 + D to short form y^2 = x^3 + 16 D.
DoubledModel from_doubled_model(const Rat& D);

/// Full rational torsion subgroup of y^2 = x^3 + D, sorted with O first.
/// Built from rational roots of x^3 + D and of the 3-division polynomial
/// 3x^4 + 12 D x, then closed under the group law.
std::vector<ECPoint> rational_torsion_j0(const Rat& D);

/// Degree-3 isogeny y^2 = x^3 + D -> y^2 = x^3 - 27 D with kernel {O, (0, +-sqrt D)}:
///   (x, y) -> ((x^3 + 4D)/x^2, y (x^3 - 8D)/x^3).
class Velu3Isogeny {
 public:
  explicit Velu3Isogeny(const Rat& D);

  const WeierstrassCurve& domain() const { return domain_; }
  const WeierstrassCurve& codomain() const { return codomain_; }
  /// Image of P; kernel points and O map to O.
  ECPoint apply(const ECPoint& P) const;

 private:
  Rat D_;
  WeierstrassCurve domain_;
  WeierstrassCurve codomain_;
};

Velu3Isogeny velu_3isogeny(const Rat& D);

}  // namespace ceresa

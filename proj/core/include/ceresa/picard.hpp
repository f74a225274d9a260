#pragma once

#include <optional>
#include <vector>

#include "ceresa/elliptic.hpp"
#include "ceresa/quartic.hpp"
#include "ceresa/rat.hpp"

namespace ceresa {

/// The smooth plane quartic y^3 = x^4 + a x^2 + b x + c; requires disc != 0.
class PicardCurve {
 public:
  explicit PicardCurve(DepressedQuartic quartic);

  const DepressedQuartic& quartic() const { return quartic_; }

 private:
  DepressedQuartic quartic_;
};

/// P_f = (I, J) on y^2 = 4x^3 - 27 disc, and its image on the short model
/// y^2 = x^3 - 432 disc.
struct InvariantPoint {
  QuarticInvariants invariants;
  Rat D;  ///< -27 disc, the constant of the doubled model.
  WeierstrassCurve short_curve;
  ECPoint point;        ///< P_f on the doubled model.
  ECPoint point_short;  ///< (4I, 4J).
};

InvariantPoint picard_invariant_point(const PicardCurve& C);

enum class GriffithsVerdict { Torsion };

/// Decision record for the Ceresa cycle of a Picard curve.
///
/// `point_order` is the order of P_f in E_f(Q); the cycle is torsion in the
/// Chow group exactly when this is finite. The order of the cycle itself
/// divides a non-effective multiple of it and is not reported. The cycle is
/// always torsion modulo algebraic equivalence.
struct CeresaVerdict {
  std::optional<int> point_order;
  GriffithsVerdict griffiths = GriffithsVerdict::Torsion;
  QuarticInvariants invariants;
  ECPoint point;        ///< P_f on y^2 = 4x^3 - 27 disc.
  ECPoint point_short;  ///< P_f on y^2 = x^3 - 432 disc.

  bool chow_torsion() const { return point_order.has_value(); }
};

CeresaVerdict decide(const PicardCurve& C);

/// Intermediate values of the bielliptic check, for reporting.
struct BiellipticTrace {
  Rat source_constant;  ///< D' = 4c (a^2 - 4c)^2
  ECPoint q;            ///< Q_f = (a^2 - 4c, a (a^2 - 4c)) on y^2 = x^3 + D'
  ECPoint image;        ///< Velu image on y^2 = x^3 - 27 D'
  ECPoint scaled;       ///< (4x, 8y) on y^2 = x^3 - 432 disc
  ECPoint target;       ///< P_f on the short model
  bool matches = false; ///< scaled == +-target
};

/// For b = 0: pushes Q_f through the 3-isogeny and compares with P_f up to sign.
BiellipticTrace bielliptic_trace(const Rat& a, const Rat& c);
bool bielliptic_consistency(const Rat& a, const Rat& c);

/// g_{(I,J)}(t) = t^3 - I t / 3 - J / 27.
Rat family_cubic(const Rat& I, const Rat& J, const Rat& t);

/// The Picard curve f_{(I,J),t} on the rational curve through (I, J) in E_0:
///   x^4 - (3 alpha/2) x^2 + beta x + (g^2 I/12 - 3 alpha^2/16),
/// alpha = t g(t), beta = g(t)^2. Its invariants are (g^2 I, g^3 J, g^6), so
/// P_f is a rational twist of (I, J) and has the same order.
PicardCurve family_generate(const Rat& I, const Rat& J, const Rat& t);

/// Rational torsion of E_0: y^2 = 4x^3 - 27, in those coordinates.
std::vector<ECPoint> e0_rational_torsion();

}  // namespace ceresa

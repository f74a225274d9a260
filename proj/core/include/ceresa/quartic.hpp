#pragma once

#include <optional>

#include "ceresa/rat.hpp"
#include "ceresa/upoly.hpp"

namespace ceresa {

/// f = x^4 + a x^2 + b x + c. The discriminant may vanish here; smoothness
/// is enforced by PicardCurve.
struct DepressedQuartic {
  Rat a;
  Rat b;
  Rat c;

  UPoly poly() const { return UPoly{c, b, a, Rat(0), Rat(1)}; }
  bool is_zero_triple() const { return a.is_zero() && b.is_zero() && c.is_zero(); }

  friend bool operator==(const DepressedQuartic&, const DepressedQuartic&) = default;
};

/// Classical invariants of the binary quartic z^4 f(x/z); they satisfy
/// J^2 = 4 I^3 - 27 disc.
struct QuarticInvariants {
  Rat I;
  Rat J;
  Rat disc;

  friend bool operator==(const QuarticInvariants&, const QuarticInvariants&) = default;
};

/// Closed-form discriminant of x^4 + a x^2 + b x + c.
Rat quartic_discriminant(const DepressedQuartic& q);

/// I = a^2 + 12c, J = 72ac - 2a^3 - 27b^2 and the closed-form disc. Throws
/// std::logic_error if the syzygy fails (never for a correct build).
QuarticInvariants invariants(const DepressedQuartic& q);

/// Weighted G_m-action: lam . (a, b, c) = (lam^2 a, lam^3 b, lam^4 c).
DepressedQuartic gm_scale(const Rat& lam, const DepressedQuartic& q);

/// True iff q1 and q2 give the same point of P(2,3,4) over an algebraic
/// closure, i.e. q2 = lam . q1 for some lam in Qbar^*.
bool moduli_equal_geometric(const DepressedQuartic& q1, const DepressedQuartic& q2);

/// A rational lam with gm_scale(lam, q1) == q2, if any.
std::optional<Rat> moduli_equal_rational(const DepressedQuartic& q1, const DepressedQuartic& q2);

/// Inverse of f -> (-2a/3, b) from the quartics with invariants (I, J) onto
/// the affine points of y^2 = x^3 - I x/3 - J/27:
///   (alpha, beta) -> x^4 - 3 alpha x^2 / 2 + beta x + (I/12 - 3 alpha^2 / 16).
DepressedQuartic quartic_from_point(const Rat& I, const Rat& alpha, const Rat& beta);

}  // namespace ceresa

#include "ceresa/quartic.hpp"

#include <stdexcept>

#include "ceresa/errors.hpp"

namespace ceresa {

Rat quartic_discriminant(const DepressedQuartic& q) {
  const Rat& a = q.a;
  const Rat& b = q.b;
  const Rat& c = q.c;
  const Rat a2 = a * a;
  const Rat b2 = b * b;
  return Rat(-4) * a2 * a * b2 - Rat(27) * b2 * b2 + Rat(16) * a2 * a2 * c +
         Rat(144) * a * b2 * c - Rat(128) * a2 * c * c + Rat(256) * c * c * c;
}

QuarticInvariants invariants(const DepressedQuartic& q) {
  const Rat& a = q.a;
  QuarticInvariants inv{
      a * a + Rat(12) * q.c,
      Rat(72) * a * q.c - Rat(2) * a * a * a - Rat(27) * q.b * q.b,
      quartic_discriminant(q),
  };
  if (inv.J * inv.J != Rat(4) * pow(inv.I, 3) - Rat(27) * inv.disc) {
    throw std::logic_error("quartic syzygy J^2 = 4I^3 - 27 disc violated");
  }
  return inv;
}

DepressedQuartic gm_scale(const Rat& lam, const DepressedQuartic& q) {
  if (lam.is_zero()) throw DomainError("G_m scaling by zero");
  const Rat l2 = lam * lam;
  return {l2 * q.a, l2 * lam * q.b, l2 * l2 * q.c};
}

namespace {

void require_nonzero(const DepressedQuartic& q1, const DepressedQuartic& q2) {
  if (q1.is_zero_triple() || q2.is_zero_triple()) {
    throw DomainError("(0, 0, 0) is not a point of P(2,3,4)");
  }
}

bool same_zero_pattern(const DepressedQuartic& q1, const DepressedQuartic& q2) {
  return q1.a.is_zero() == q2.a.is_zero() && q1.b.is_zero() == q2.b.is_zero() &&
         q1.c.is_zero() == q2.c.is_zero();
}

}  // namespace

bool moduli_equal_geometric(const DepressedQuartic& q1, const DepressedQuartic& q2) {
  require_nonzero(q1, q2);
  if (!same_zero_pattern(q1, q2)) return false;
  const bool ha = !q1.a.is_zero();
  const bool hb = !q1.b.is_zero();
  const bool hc = !q1.c.is_zero();
  // Each relation compares monomials of equal weight (6, 8 and 24); any two
  // of them determine a common lam, and with one nonzero coordinate a root
  // always exists in the closure.
  if (ha && hb && pow(q1.a, 3) * pow(q2.b, 2) != pow(q2.a, 3) * pow(q1.b, 2)) return false;
  if (ha && hc && pow(q1.a, 2) * q2.c != pow(q2.a, 2) * q1.c) return false;
  if (hb && hc && pow(q1.b, 4) * pow(q2.c, 3) != pow(q2.b, 4) * pow(q1.c, 3)) return false;
  return true;
}

std::optional<Rat> moduli_equal_rational(const DepressedQuartic& q1, const DepressedQuartic& q2) {
  require_nonzero(q1, q2);
  if (!same_zero_pattern(q1, q2)) return std::nullopt;

  std::optional<Rat> root;
  unsigned weight = 0;
  if (!q1.a.is_zero()) {
    root = exact_root(q2.a / q1.a, 2);
    weight = 2;
  } else if (!q1.b.is_zero()) {
    root = exact_root(q2.b / q1.b, 3);
    weight = 3;
  } else {
    root = exact_root(q2.c / q1.c, 4);
    weight = 4;
  }
  if (!root) return std::nullopt;

  // Odd weight pins the root; even weight leaves a sign to try.
  for (const Rat& lam : {*root, -*root}) {
    if (gm_scale(lam, q1) == q2) return lam;
    if (weight % 2 == 1) break;
  }
  return std::nullopt;
}

DepressedQuartic quartic_from_point(const Rat& I, const Rat& alpha, const Rat& beta) {
  return {Rat(-3) * alpha / Rat(2), beta, I / Rat(12) - Rat(3) * alpha * alpha / Rat(16)};
}

}  // namespace ceresa

#include "ceresa/picard.hpp"

#include "ceresa/errors.hpp"

namespace ceresa {

PicardCurve::PicardCurve(DepressedQuartic quartic) : quartic_(std::move(quartic)) {
  if (quartic_discriminant(quartic_).is_zero()) {
    throw DomainError(quartic_.poly().str() + " has zero discriminant");
  }
}

InvariantPoint picard_invariant_point(const PicardCurve& C) {
  QuarticInvariants inv = invariants(C.quartic());
  const Rat D = Rat(-27) * inv.disc;
  DoubledModel model = from_doubled_model(D);
  ECPoint p(inv.I, inv.J);
  if (!model.map.source_contains(p)) throw std::logic_error("P_f is off the doubled model");
  ECPoint p_short = model.map.apply(p);
  return {std::move(inv), D, model.curve, std::move(p), std::move(p_short)};
}

CeresaVerdict decide(const PicardCurve& C) {
  InvariantPoint ip = picard_invariant_point(C);
  CeresaVerdict v;
  v.point_order = torsion_order_q(ip.short_curve, ip.point_short);
  v.invariants = std::move(ip.invariants);
  v.point = std::move(ip.point);
  v.point_short = std::move(ip.point_short);
  return v;
}

BiellipticTrace bielliptic_trace(const Rat& a, const Rat& c) {
  const Rat u = a * a - Rat(4) * c;
  if (u.is_zero()) throw DomainError("bielliptic check needs a^2 - 4c != 0");
  const PicardCurve curve(DepressedQuartic{a, Rat(0), c});
  const InvariantPoint ip = picard_invariant_point(curve);

  BiellipticTrace t;
  t.source_constant = Rat(4) * c * u * u;
  t.q = ECPoint(u, a * u);
  const Velu3Isogeny phi = velu_3isogeny(t.source_constant);
  t.image = phi.apply(t.q);
  t.scaled = t.image.is_infinity() ? t.image
                                   : ECPoint(Rat(4) * t.image.x(), Rat(8) * t.image.y());
  if (!on_curve(ip.short_curve, t.scaled)) {
    throw std::logic_error("scaled isogeny image is off y^2 = x^3 - 432 disc");
  }
  t.target = ip.point_short;
  t.matches = t.scaled == t.target || t.scaled == -t.target;
  return t;
}

bool bielliptic_consistency(const Rat& a, const Rat& c) { return bielliptic_trace(a, c).matches; }

Rat family_cubic(const Rat& I, const Rat& J, const Rat& t) {
  return pow(t, 3) - I * t / Rat(3) - J / Rat(27);
}

PicardCurve family_generate(const Rat& I, const Rat& J, const Rat& t) {
  if (J * J != Rat(4) * pow(I, 3) - Rat(27)) {
    throw DomainError("(" + I.str() + ", " + J.str() + ") is not on E_0: y^2 = 4x^3 - 27");
  }
  const Rat g = family_cubic(I, J, t);
  if (g.is_zero()) throw DomainError("degenerate parameter: g(t) = 0 at t = " + t.str());
  const Rat alpha = t * g;
  const Rat beta = g * g;
  DepressedQuartic f{
      Rat(-3) * alpha / Rat(2),
      beta,
      g * g * I / Rat(12) - Rat(3) * alpha * alpha / Rat(16),
  };
  return PicardCurve(std::move(f));
}

std::vector<ECPoint> e0_rational_torsion() {
  const DoubledModel model = from_doubled_model(Rat(-27));
  std::vector<ECPoint> out;
  for (const ECPoint& p : rational_torsion_j0(model.curve.B())) out.push_back(model.map.inverse(p));
  return out;
}

}  // namespace ceresa

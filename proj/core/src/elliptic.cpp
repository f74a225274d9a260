#include "ceresa/elliptic.hpp"

#include <algorithm>
#include <set>

#include "ceresa/errors.hpp"

namespace ceresa {

WeierstrassCurve::WeierstrassCurve(Rat A, Rat B) : A_(std::move(A)), B_(std::move(B)) {
  if (Rat(4) * pow(A_, 3) + Rat(27) * B_ * B_ == Rat(0)) {
    throw DomainError("singular curve y^2 = x^3 + (" + A_.str() + ")x + (" + B_.str() + ")");
  }
}

Rat WeierstrassCurve::j_invariant() const {
  const Rat a3 = Rat(4) * pow(A_, 3);
  return Rat(1728) * a3 / (a3 + Rat(27) * B_ * B_);
}

std::strong_ordering operator<=>(const ECPoint& p, const ECPoint& q) {
  if (p.is_infinity() || q.is_infinity()) {
    return q.is_infinity() <=> p.is_infinity();
  }
  if (auto c = p.x_ <=> q.x_; c != 0) return c;
  return p.y_ <=> q.y_;
}

std::string ECPoint::str() const {
  if (!affine_) return "infinity";
  return "(" + x_.str() + ", " + y_.str() + ")";
}

bool on_curve(const WeierstrassCurve& E, const ECPoint& P) {
  if (P.is_infinity()) return true;
  return P.y() * P.y() == pow(P.x(), 3) + E.A() * P.x() + E.B();
}

namespace {

void require_on_curve(const WeierstrassCurve& E, const ECPoint& P) {
  if (!on_curve(E, P)) throw DomainError("point " + P.str() + " is not on the curve");
}

ECPoint add_unchecked(const WeierstrassCurve& E, const ECPoint& P, const ECPoint& Q) {
  if (P.is_infinity()) return Q;
  if (Q.is_infinity()) return P;
  Rat slope;
  if (P.x() == Q.x()) {
    if (P.y() != Q.y() || P.y().is_zero()) return ECPoint::infinity();
    slope = (Rat(3) * P.x() * P.x() + E.A()) / (Rat(2) * P.y());
  } else {
    slope = (Q.y() - P.y()) / (Q.x() - P.x());
  }
  Rat x = slope * slope - P.x() - Q.x();
  Rat y = slope * (P.x() - x) - P.y();
  return {std::move(x), std::move(y)};
}

ECPoint scalar_mul_unchecked(const WeierstrassCurve& E, std::int64_t n, const ECPoint& P) {
  ECPoint base = n < 0 ? -P : P;
  auto k = static_cast<std::uint64_t>(n < 0 ? -n : n);
  ECPoint acc;
  while (k > 0) {
    if (k & 1U) acc = add_unchecked(E, acc, base);
    k >>= 1U;
    if (k > 0) base = add_unchecked(E, base, base);
  }
  return acc;
}

}  // namespace

ECPoint add(const WeierstrassCurve& E, const ECPoint& P, const ECPoint& Q) {
  require_on_curve(E, P);
  require_on_curve(E, Q);
  return add_unchecked(E, P, Q);
}

ECPoint scalar_mul(const WeierstrassCurve& E, std::int64_t n, const ECPoint& P) {
  require_on_curve(E, P);
  return scalar_mul_unchecked(E, n, P);
}

std::optional<int> torsion_order_q(const WeierstrassCurve& E, const ECPoint& P) {
  require_on_curve(E, P);
  ECPoint acc = P;
  for (int n = 1; n <= kMazurBound; ++n) {
    if (acc.is_infinity()) return n;
    acc = add_unchecked(E, acc, P);
  }
  return std::nullopt;
}

bool DoubledModelMap::source_contains(const ECPoint& P) const {
  if (P.is_infinity()) return true;
  return P.y() * P.y() == Rat(4) * pow(P.x(), 3) + D;
}

ECPoint DoubledModelMap::apply(const ECPoint& P) const {
  if (P.is_infinity()) return P;
  return {Rat(4) * P.x(), Rat(4) * P.y()};
}

ECPoint DoubledModelMap::inverse(const ECPoint& P) const {
  if (P.is_infinity()) return P;
  return {P.x() / Rat(4), P.y() / Rat(4)};
}

DoubledModel from_doubled_model(const Rat& D) {
  if (D.is_zero()) throw DomainError("singular model y^2 = 4x^3");
  return {WeierstrassCurve(Rat(0), Rat(16) * D), DoubledModelMap{D}};
}

std::vector<ECPoint> rational_torsion_j0(const Rat& D) {
  const WeierstrassCurve E(Rat(0), D);
  std::vector<ECPoint> gens;

  // 2-torsion: x^3 + D = 0.
  if (auto r = exact_root(-D, 3)) gens.emplace_back(*r, Rat(0));

  // 3-torsion: psi_3 = 3x^4 + 12 D x = 3x (x^3 + 4D), with x^3 + D a square.
  std::vector<Rat> xs{Rat(0)};
  if (auto r = exact_root(Rat(-4) * D, 3)) xs.push_back(*r);
  for (const Rat& x : xs) {
    if (auto y = exact_root(pow(x, 3) + D, 2); y && !y->is_zero()) {
      gens.emplace_back(x, *y);
      gens.emplace_back(x, -*y);
    }
  }

  std::set<ECPoint> group{ECPoint::infinity()};
  std::vector<ECPoint> frontier{ECPoint::infinity()};
  while (!frontier.empty()) {
    std::vector<ECPoint> next;
    for (const auto& p : frontier) {
      for (const auto& g : gens) {
        ECPoint s = add_unchecked(E, p, g);
        if (group.insert(s).second) next.push_back(std::move(s));
      }
    }
    frontier = std::move(next);
  }
  return {group.begin(), group.end()};
}

Velu3Isogeny::Velu3Isogeny(const Rat& D)
    : D_(D),
      domain_(D.is_zero() ? throw DomainError("singular curve y^2 = x^3") : WeierstrassCurve(Rat(0), D)),
      codomain_(Rat(0), Rat(-27) * D) {}

ECPoint Velu3Isogeny::apply(const ECPoint& P) const {
  require_on_curve(domain_, P);
  if (P.is_infinity() || P.x().is_zero()) return ECPoint::infinity();
  const Rat& x = P.x();
  const Rat x2 = x * x;
  const Rat x3 = x2 * x;
  return {(x3 + Rat(4) * D_) / x2, P.y() * (x3 - Rat(8) * D_) / x3};
}

Velu3Isogeny velu_3isogeny(const Rat& D) { return Velu3Isogeny(D); }

}  // namespace ceresa

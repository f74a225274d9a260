#include <doctest.h>

#include "ceresa/errors.hpp"
#include "ceresa/picard.hpp"
#include "oracles.hpp"

using namespace ceresa;

namespace {

PicardCurve curve(long a, long b, long c) { return PicardCurve({Rat(a), Rat(b), Rat(c)}); }

std::optional<PicardCurve> random_curve(oracle::RatGen& gen) {
  DepressedQuartic q{gen.rat(12, 4), gen.rat(12, 4), gen.rat(12, 4)};
  if (quartic_discriminant(q).is_zero()) return std::nullopt;
  return PicardCurve(q);
}

}  // namespace

TEST_CASE("PicardCurve rejects singular quartics") {
  CHECK_THROWS_AS(curve(0, 0, 0), DomainError);
  CHECK_THROWS_AS(curve(-2, 0, 1), DomainError);  // (x^2 - 1)^2
  CHECK_NOTHROW(curve(1, 0, 1));
}

TEST_CASE("picard_invariant_point examples") {
  auto p = picard_invariant_point(curve(1, 0, 1));
  CHECK(p.point == ECPoint(13, 70));
  CHECK(p.point_short == ECPoint(52, 280));
  CHECK(p.short_curve == WeierstrassCurve(Rat(0), Rat(-62208)));
  CHECK(p.D == Rat(-27 * 144));

  p = picard_invariant_point(curve(-12, 1, -12));
  CHECK(p.point == ECPoint(0, 13797));
  CHECK(p.D == Rat(13797) * Rat(13797));

  p = picard_invariant_point(curve(0, 0, -1));
  CHECK(p.point == ECPoint(-12, 0));
}

TEST_CASE("decide examples") {
  const auto v = decide(curve(-12, 1, -12));
  CHECK(v.point_order == 3);
  CHECK(v.chow_torsion());
  CHECK(v.griffiths == GriffithsVerdict::Torsion);

  const auto w = decide(curve(1, 0, 1));
  CHECK_FALSE(w.point_order.has_value());
  CHECK_FALSE(w.chow_torsion());
  CHECK(w.griffiths == GriffithsVerdict::Torsion);

  CHECK(decide(curve(0, 0, -1)).point_order == 2);

  // The whole one-parameter family with a = c = -12 has I = 0, hence order 3.
  for (long t = 1; t <= 20; ++t) CHECK(decide(curve(-12, t, -12)).point_order == 3);
}

TEST_CASE("decide properties on random curves") {
  oracle::RatGen gen(41);
  int checked = 0;
  while (checked < 200) {
    auto C = random_curve(gen);
    if (!C) continue;
    ++checked;
    const auto v = decide(*C);
    const auto& inv = v.invariants;
    CHECK(v.griffiths == GriffithsVerdict::Torsion);
    // P_f lies on y^2 = 4x^3 - 27 disc.
    CHECK(inv.J * inv.J == Rat(4) * pow(inv.I, 3) - Rat(27) * inv.disc);
    CHECK(v.point == ECPoint(inv.I, inv.J));
    CHECK(v.point_short == ECPoint(Rat(4) * inv.I, Rat(4) * inv.J));

    // G_m-scaling twists E_f without changing the order of P_f.
    const Rat lam = gen.nonzero(7, 3);
    const auto scaled = decide(PicardCurve(gm_scale(lam, C->quartic())));
    CHECK(scaled.point_order == v.point_order);
    if (!inv.disc.is_zero()) {
      CHECK(pow(scaled.invariants.I, 3) / scaled.invariants.disc == pow(inv.I, 3) / inv.disc);
      CHECK(scaled.invariants.J * scaled.invariants.J / scaled.invariants.disc == inv.J * inv.J / inv.disc);
    }
    // The reported order is exact.
    if (v.point_order) {
      const WeierstrassCurve E(Rat(0), Rat(-432) * inv.disc);
      CHECK(scalar_mul(E, *v.point_order, v.point_short) == ECPoint::infinity());
    }
  }
}

TEST_CASE("bielliptic examples") {
  const auto tr = bielliptic_trace(Rat(1), Rat(1));
  CHECK(tr.source_constant == Rat(36));
  CHECK(tr.q == ECPoint(-3, -3));
  CHECK(tr.image == ECPoint(13, -35));
  CHECK(tr.scaled == ECPoint(52, -280));
  CHECK(tr.target == ECPoint(52, 280));
  CHECK(tr.scaled == -tr.target);
  CHECK(tr.matches);

  CHECK(bielliptic_consistency(Rat(-12), Rat(-12)));
  for (long c : {-5L, -1L, 1L, 2L, 7L}) {
    const auto t0 = bielliptic_trace(Rat(0), Rat(c));
    CHECK(t0.matches);
    CHECK(t0.q.y().is_zero());
    CHECK(t0.image.y().is_zero());
  }
  CHECK_THROWS_AS(bielliptic_consistency(Rat(2), Rat(1)), DomainError);  // a^2 = 4c
  CHECK_THROWS_AS(bielliptic_consistency(Rat(1), Rat(0)), DomainError);  // disc = 0
}

TEST_CASE("bielliptic consistency on random (a, c)") {
  oracle::RatGen gen(43);
  int checked = 0;
  while (checked < 200) {
    const Rat a = gen.rat(15, 5), c = gen.rat(15, 5);
    const Rat e = a * a - Rat(4) * c;
    if (e.is_zero() || c.is_zero()) continue;
    ++checked;
    const auto tr = bielliptic_trace(a, c);
    CHECK(tr.matches);
    CHECK((tr.scaled == tr.target || tr.scaled == -tr.target));
    // Q_f is a genuine point of E'_f and the chain lands on E_f.
    CHECK(on_curve(WeierstrassCurve(Rat(0), tr.source_constant), tr.q));
    const Rat disc = quartic_discriminant({a, Rat(0), c});
    CHECK(on_curve(WeierstrassCurve(Rat(0), Rat(-432) * disc), tr.scaled));
  }
}

TEST_CASE("family_cubic and family_generate examples") {
  CHECK(family_cubic(Rat(3), Rat(9), Rat(0)) == Rat(-1, 3));
  CHECK(family_cubic(Rat(3), Rat(9), Rat(1)) == Rat(-1, 3));

  const PicardCurve f0 = family_generate(Rat(3), Rat(9), Rat(0));
  CHECK(f0.quartic() == DepressedQuartic{Rat(0), Rat(1, 9), Rat(1, 36)});
  CHECK(invariants(f0.quartic()) == QuarticInvariants{Rat(1, 3), Rat(-1, 3), Rat(1, 729)});

  CHECK(family_generate(Rat(3), Rat(9), Rat(1)).quartic() == DepressedQuartic{Rat(1, 2), Rat(1, 9), Rat(1, 144)});

  CHECK_THROWS_AS(family_generate(Rat(1), Rat(1), Rat(0)), DomainError);  // off E_0
}

TEST_CASE("g(t) has no rational zero on E_0(Q)") {
  // E_0(Q) is {O, (3, +-9)}, and 3t^3 - 3t -+ 1 has no rational root, so the
  // degenerate parameter is unreachable from exact rational input.
  oracle::RatGen gen(53);
  for (int i = 0; i < 500; ++i) {
    const Rat t = gen.rat(60, 30);
    CHECK_FALSE(family_cubic(Rat(3), Rat(9), t).is_zero());
    CHECK_FALSE(family_cubic(Rat(3), Rat(-9), t).is_zero());
  }
}

TEST_CASE("family_generate lands on a twist of (I, J)") {
  oracle::RatGen gen(47);
  const WeierstrassCurve E0(Rat(0), Rat(-432));
  for (const auto& P : e0_rational_torsion()) {
    if (P.is_infinity()) continue;
    for (int i = 0; i < 100; ++i) {
      const Rat t = gen.rat(20, 7);
      const Rat g = family_cubic(P.x(), P.y(), t);
      if (g.is_zero()) continue;
      const PicardCurve C = family_generate(P.x(), P.y(), t);
      const auto inv = invariants(C.quartic());
      CHECK(inv.I == g * g * P.x());
      CHECK(inv.J == pow(g, 3) * P.y());
      CHECK(inv.disc == pow(g, 6));
      CHECK(decide(C).point_order == torsion_order_q(E0, ECPoint(Rat(4) * P.x(), Rat(4) * P.y())));
    }
  }
}

TEST_CASE("e0_rational_torsion") {
  const auto T = e0_rational_torsion();
  CHECK(T == std::vector<ECPoint>{ECPoint::infinity(), ECPoint(3, -9), ECPoint(3, 9)});
  const DoubledModel m = from_doubled_model(Rat(-27));
  std::set<std::pair<mpq_class, mpq_class>> mapped;
  for (const auto& P : T) {
    if (P.is_infinity()) continue;
    const ECPoint Q = m.map.apply(P);
    mapped.emplace(Q.x().raw(), Q.y().raw());
  }
  CHECK(mapped == oracle::torsion_by_division_polynomials(0, -432));
}

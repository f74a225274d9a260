#include <doctest.h>

#include "ceresa/cyclotomic.hpp"
#include "ceresa/errors.hpp"
#include "ceresa/quartic.hpp"
#include "ceresa/rat.hpp"
#include "ceresa/upoly.hpp"
#include "oracles.hpp"

using namespace ceresa;

namespace {

oracle::Coeffs to_coeffs(const UPoly& p) {
  oracle::Coeffs c;
  for (const auto& r : p.coeffs()) c.push_back(r.raw());
  return c;
}

}  // namespace

TEST_CASE("Rat is stored in lowest terms with a positive denominator") {
  CHECK(Rat(mpz_class(6), mpz_class(-4)).str() == "-3/2");
  CHECK(Rat(mpz_class(0), mpz_class(-7)).str() == "0");
  CHECK(Rat(mpz_class(0), mpz_class(-7)).den() == 1);
  CHECK(Rat::parse("10/4") == Rat(mpz_class(5), mpz_class(2)));
  CHECK(Rat::parse("-12").str() == "-12");
  CHECK(Rat::parse("-12/1").str() == "-12");
  CHECK_THROWS_AS(Rat::parse("1/0"), DomainError);
  CHECK_THROWS_AS(Rat::parse("1/-2"), DomainError);
  CHECK_THROWS_AS(Rat::parse("abc"), DomainError);
  CHECK_THROWS_AS(Rat::parse(""), DomainError);
  CHECK_THROWS_AS(Rat(1) / Rat(0), DomainError);
}

TEST_CASE("exact_root finds rational roots only") {
  CHECK(exact_root(Rat::parse("8/27"), 3) == Rat::parse("2/3"));
  CHECK(exact_root(Rat(-8), 3) == Rat(-2));
  CHECK(exact_root(Rat(16), 4) == Rat(2));
  CHECK_FALSE(exact_root(Rat(-4), 2).has_value());
  CHECK_FALSE(exact_root(Rat(2), 2).has_value());
  CHECK_FALSE(exact_root(Rat::parse("4/3"), 2).has_value());
}

TEST_CASE("poly_discriminant examples") {
  CHECK(poly_discriminant(UPoly{-1, 0, 1}) == Rat(4));
  CHECK(poly_discriminant(UPoly{1, 0, 1, 0, 1}) == Rat(144));
  CHECK(poly_discriminant(UPoly{0, 1, 0, 0, 1}) == Rat(-27));
  CHECK_THROWS_AS(poly_discriminant(UPoly{}), DomainError);
}

TEST_CASE("resultant agrees with the Sylvester determinant") {
  oracle::RatGen gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rat> pc, qc;
    const long dp = gen.integer(1, 5);
    const long dq = gen.integer(1, 5);
    for (long i = 0; i < dp; ++i) pc.push_back(gen.rat(9, 4));
    pc.push_back(gen.nonzero(9, 4));
    for (long i = 0; i < dq; ++i) qc.push_back(gen.rat(9, 4));
    qc.push_back(gen.nonzero(9, 4));
    const UPoly p(pc), q(qc);
    CHECK(resultant(p, q) == Rat(oracle::sylvester_resultant(to_coeffs(p), to_coeffs(q))));
  }
}

TEST_CASE("resultant discriminant matches the quartic closed form on 1000 samples") {
  oracle::RatGen gen(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const DepressedQuartic q{gen.rat(), gen.rat(), gen.rat()};
    REQUIRE(poly_discriminant(q.poly()) == quartic_discriminant(q));
  }
}

TEST_CASE("UPoly division identity") {
  oracle::RatGen gen(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rat> a, b;
    for (long i = 0; i < gen.integer(1, 8); ++i) a.push_back(gen.rat());
    for (long i = 0; i < gen.integer(1, 4); ++i) b.push_back(gen.rat());
    b.push_back(gen.nonzero());
    const UPoly p(a), d(b);
    auto [q, r] = p.divmod(d);
    CHECK(q * d + r == p);
    CHECK(r.degree() < d.degree());
  }
  const UPoly p1{1, 1};
  CHECK_THROWS_AS(p1.divmod(UPoly{}), DomainError);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == UPoly{-1, 1});
  CHECK(cyclotomic_polynomial(3) == UPoly{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == UPoly{1, 0, 1});
  CHECK(cyclotomic_polynomial(9) == UPoly{1, 0, 0, 1, 0, 0, 1});

  // Phi_9 = (x^9 - 1)/(x^3 - 1), Phi_{p^k} = (x^{p^k} - 1)/(x^{p^{k-1}} - 1).
  for (auto [n, d] : {std::pair{9U, 3U}, std::pair{25U, 5U}, std::pair{27U, 9U}, std::pair{7U, 1U}}) {
    std::vector<Rat> expected;
    for (const auto& c : oracle::geometric_quotient(n, d)) expected.emplace_back(mpq_class(c));
    CHECK(cyclotomic_polynomial(n) == UPoly(expected));
  }
  for (std::uint32_t L = 1; L <= 60; ++L) {
    CHECK(cyclotomic_polynomial(L).degree() == static_cast<int>(euler_phi(L)));
    CHECK(cyclotomic_polynomial(L).leading() == Rat(1));
  }
  // Phi_105 is the first with a coefficient outside {-1, 0, 1}.
  CHECK(cyclotomic_polynomial(105).coeff(7) == Rat(-2));
}

TEST_CASE("root_of_unity examples") {
  CHECK(root_of_unity(3, 0) == CycNum(3, Rat(1)));
  CHECK(root_of_unity(3, 2).rep() == UPoly{-1, -1});
  CHECK(root_of_unity(4, 3).rep() == UPoly{0, -1});
  CHECK(root_of_unity(5, -1) == root_of_unity(5, 4));
}

TEST_CASE("cyc_to_rational") {
  CHECK(cyc_to_rational(CycNum(3, Rat::parse("5/2"))) == Rat::parse("5/2"));
  CHECK_THROWS_AS(cyc_to_rational(root_of_unity(3, 1)), DomainError);
  const CycNum s = root_of_unity(3, 0) + root_of_unity(3, 1) + root_of_unity(3, 2);
  CHECK(cyc_to_rational(s) == Rat(0));
}

TEST_CASE("root_of_unity^L = 1 and the full sum vanishes") {
  for (std::uint32_t L = 1; L <= 24; ++L) {
    CycNum total(L);
    for (std::int64_t e = 0; e < static_cast<std::int64_t>(L); ++e) {
      CHECK(pow(root_of_unity(L, e), L) == CycNum(L, Rat(1)));
      total += root_of_unity(L, e);
    }
    if (L >= 2) CHECK(total == CycNum(L, Rat(0)));
  }
}

TEST_CASE("CycNum is a commutative ring") {
  oracle::RatGen gen(99);
  auto random_elem = [&](std::uint32_t L) {
    std::vector<Rat> c;
    for (long i = 0; i < gen.integer(0, 2 * static_cast<long>(L)); ++i) c.push_back(gen.rat(6, 3));
    return CycNum(L, UPoly(c));
  };
  for (std::uint32_t L : {3U, 5U, 7U, 9U, 12U, 15U}) {
    for (int trial = 0; trial < 20; ++trial) {
      const CycNum x = random_elem(L), y = random_elem(L), z = random_elem(L);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x * y == y * x);
      CHECK((x + y) + z == x + (y + z));
      CHECK(x - x == CycNum(L));
    }
  }
}

TEST_CASE("mixed-level arithmetic lifts to the lcm") {
  // zeta_3 = zeta_12^4 and zeta_4 = zeta_12^3.
  const CycNum prod = root_of_unity(3, 1) * root_of_unity(4, 1);
  CHECK(prod.level() == 12);
  CHECK(prod == root_of_unity(12, 7));
  CHECK(root_of_unity(3, 1) == root_of_unity(9, 3));
  CHECK(root_of_unity(2, 1) == CycNum(5, Rat(-1)));
  CHECK_THROWS_AS(root_of_unity(4, 1).lift(6), DomainError);
}

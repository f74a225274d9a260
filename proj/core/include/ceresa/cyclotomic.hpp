#pragma once

#include <cstdint>
#include <string>

#include "ceresa/rat.hpp"
#include "ceresa/upoly.hpp"

namespace ceresa {

/// The L-th cyclotomic polynomial, obtained by dividing x^L - 1 by the
/// product of Phi_d over the proper divisors d of L. Results are memoized.
const UPoly& cyclotomic_polynomial(std::uint32_t level);

/// Euler's phi.
std::uint32_t euler_phi(std::uint32_t n);

/// An element of Q(zeta_L), stored as its residue modulo Phi_L.
///
/// The basis 1, zeta, ..., zeta^{phi(L)-1} makes equality and rationality
/// coefficient checks. Operands of different levels are lifted to the lcm
/// of their levels before combining.
class CycNum {
 public:
  CycNum() : CycNum(1) {}
  explicit CycNum(std::uint32_t level);
  CycNum(std::uint32_t level, const Rat& value);
  /// Reduces rep modulo Phi_level.
  CycNum(std::uint32_t level, const UPoly& rep);

  std::uint32_t level() const { return level_; }
  const UPoly& rep() const { return rep_; }

  /// The same element viewed in Q(zeta_M); level() must divide M.
  CycNum lift(std::uint32_t target_level) const;

  bool is_rational() const { return rep_.degree() <= 0; }

  CycNum operator-() const { return CycNum(level_, -rep_); }
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator*=(const Rat& c);
  CycNum& operator/=(const Rat& c);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator*(CycNum a, const Rat& c) { return a *= c; }
  friend CycNum operator*(const Rat& c, CycNum a) { return a *= c; }
  friend CycNum operator/(CycNum a, const Rat& c) { return a /= c; }

  friend bool operator==(const CycNum& a, const CycNum& b);

  std::string str() const { return rep_.str('z'); }

 private:
  std::uint32_t level_;
  UPoly rep_;
};

CycNum pow(const CycNum& z, std::uint64_t e);

/// zeta_L^e for any integer e.
CycNum root_of_unity(std::uint32_t level, std::int64_t e);

/// The rational value of z; throws DomainError("not rational") otherwise.
Rat cyc_to_rational(const CycNum& z);

}  // namespace ceresa

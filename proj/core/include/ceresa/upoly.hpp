#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ceresa/rat.hpp"

namespace ceresa {

/// Dense univariate polynomial over Q; coeffs()[i] multiplies x^i.
/// The leading coefficient is nonzero unless the polynomial is zero.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> coeffs);
  UPoly(std::initializer_list<Rat> coeffs);

  static UPoly constant(const Rat& c);
  /// c * x^n
  static UPoly monomial(const Rat& c, std::size_t n);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Rat> coeffs() const { return coeffs_; }
  /// Coefficient of x^i (zero past the degree).
  Rat coeff(std::size_t i) const;
  Rat leading() const;

  Rat eval(const Rat& x) const;
  UPoly derivative() const;
  /// p(x^k)
  UPoly inflate(std::size_t k) const;

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const Rat& c);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rat& c) { return a *= c; }
  friend UPoly operator*(const Rat& c, UPoly a) { return a *= c; }
  friend bool operator==(const UPoly&, const UPoly&) = default;

  /// Euclidean division; throws DomainError on a zero divisor.
  std::pair<UPoly, UPoly> divmod(const UPoly& divisor) const;
  UPoly operator/(const UPoly& divisor) const { return divmod(divisor).first; }
  UPoly operator%(const UPoly& divisor) const { return divmod(divisor).second; }

  /// Human-readable rendering in x, highest degree first.
  std::string str(char var = 'x') const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

/// Res(p, q) through the Euclidean remainder sequence over Q.
Rat resultant(const UPoly& p, const UPoly& q);

/// disc(p) = (-1)^{d(d-1)/2} Res(p, p') / lc(p). Requires deg p >= 1.
Rat poly_discriminant(const UPoly& p);

}  // namespace ceresa

#include "ceresa/upoly.hpp"

#include <sstream>

#include "ceresa/errors.hpp"

namespace ceresa {

UPoly::UPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly::UPoly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }

UPoly UPoly::constant(const Rat& c) { return UPoly(std::vector<Rat>{c}); }

UPoly UPoly::monomial(const Rat& c, std::size_t n) {
  std::vector<Rat> v(n + 1);
  v[n] = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rat UPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }

Rat UPoly::leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

Rat UPoly::eval(const Rat& x) const {
  Rat acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rat> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
  return UPoly(std::move(d));
}

UPoly UPoly::inflate(std::size_t k) const {
  if (k == 0) throw DomainError("inflate by zero");
  if (coeffs_.empty()) return {};
  std::vector<Rat> v((coeffs_.size() - 1) * k + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
  return UPoly(std::move(v));
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(std::move(v));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& divisor) const {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  if (degree() < divisor.degree()) return {UPoly{}, *this};
  std::vector<Rat> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  const Rat lead = divisor.leading();
  std::vector<Rat> quot(rem.size() - dd);
  for (std::size_t k = rem.size(); k-- > dd;) {
    if (rem[k].is_zero()) continue;
    const Rat q = rem[k] / lead;
    quot[k - dd] = q;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= q * divisor.coeffs_[j];
  }
  rem.resize(dd);
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

std::string UPoly::str(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rat& c = coeffs_[k];
    if (c.is_zero()) continue;
    const Rat mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != Rat(1)) os << mag;
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

Rat resultant(const UPoly& p, const UPoly& q) {
  if (p.is_zero() || q.is_zero()) return Rat(0);
  const int dp = p.degree();
  const int dq = q.degree();
  if (dq == 0) return pow(q.leading(), dp);
  if (dp == 0) return pow(p.leading(), dq);
  if (dp < dq) {
    const Rat r = resultant(q, p);
    return (dp * dq) % 2 == 0 ? r : -r;
  }
  const UPoly r = p % q;
  if (r.is_zero()) return Rat(0);
  const Rat sign = (dp * dq) % 2 == 0 ? Rat(1) : Rat(-1);
  return sign * pow(q.leading(), dp - r.degree()) * resultant(q, r);
}

Rat poly_discriminant(const UPoly& p) {
  if (p.is_zero()) throw DomainError("discriminant of the zero polynomial");
  const int d = p.degree();
  if (d < 1) throw DomainError("discriminant of a constant polynomial");
  const Rat res = resultant(p, p.derivative());
  const Rat sign = ((d * (d - 1) / 2) % 2 == 0) ? Rat(1) : Rat(-1);
  return sign * res / p.leading();
}

}  // namespace ceresa

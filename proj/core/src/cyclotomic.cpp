#include "ceresa/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "ceresa/errors.hpp"

namespace ceresa {

namespace {

UPoly compute_cyclotomic(std::uint32_t level) {
  UPoly num = UPoly::monomial(Rat(1), level) - UPoly::constant(Rat(1));
  UPoly den = UPoly::constant(Rat(1));
  for (std::uint32_t d = 1; d < level; ++d) {
    if (level % d == 0) den = den * cyclotomic_polynomial(d);
  }
  auto [quot, rem] = num.divmod(den);
  if (!rem.is_zero()) throw std::logic_error("cyclotomic division left a remainder");
  return quot;
}

}  // namespace

const UPoly& cyclotomic_polynomial(std::uint32_t level) {
  if (level == 0) throw DomainError("cyclotomic level must be positive");
  // Entries are never erased, so references stay valid after the lock drops.
  static std::mutex mutex;
  static std::map<std::uint32_t, std::unique_ptr<UPoly>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(level); it != cache.end()) return *it->second;
  }
  auto poly = std::make_unique<UPoly>(compute_cyclotomic(level));
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(level, std::move(poly));
  return *it->second;
}

std::uint32_t euler_phi(std::uint32_t n) {
  std::uint32_t result = n;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

CycNum::CycNum(std::uint32_t level) : level_(level) {
  if (level == 0) throw DomainError("cyclotomic level must be positive");
}

CycNum::CycNum(std::uint32_t level, const Rat& value) : CycNum(level) {
  rep_ = UPoly::constant(value);
}

CycNum::CycNum(std::uint32_t level, const UPoly& rep) : CycNum(level) {
  const UPoly& phi = cyclotomic_polynomial(level);
  rep_ = rep.degree() >= phi.degree() ? rep % phi : rep;
}

CycNum CycNum::lift(std::uint32_t target_level) const {
  if (target_level == level_) return *this;
  if (target_level % level_ != 0) {
    throw DomainError("cannot lift level " + std::to_string(level_) + " to " +
                      std::to_string(target_level));
  }
  return CycNum(target_level, rep_.inflate(target_level / level_));
}

namespace {

std::uint32_t common_level(std::uint32_t a, std::uint32_t b) { return std::lcm(a, b); }

}  // namespace

CycNum& CycNum::operator+=(const CycNum& o) {
  const auto m = common_level(level_, o.level_);
  *this = lift(m);
  rep_ += o.lift(m).rep_;
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  const auto m = common_level(level_, o.level_);
  *this = lift(m);
  rep_ -= o.lift(m).rep_;
  return *this;
}

CycNum& CycNum::operator*=(const CycNum& o) {
  const auto m = common_level(level_, o.level_);
  *this = CycNum(m, lift(m).rep_ * o.lift(m).rep_);
  return *this;
}

CycNum& CycNum::operator*=(const Rat& c) {
  rep_ *= c;
  return *this;
}

CycNum& CycNum::operator/=(const Rat& c) {
  if (c.is_zero()) throw DomainError("division by zero");
  rep_ *= Rat(1) / c;
  return *this;
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.level_ == b.level_) return a.rep_ == b.rep_;
  const auto m = common_level(a.level_, b.level_);
  return a.lift(m).rep_ == b.lift(m).rep_;
}

CycNum pow(const CycNum& z, std::uint64_t e) {
  CycNum result(z.level(), Rat(1));
  CycNum base = z;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

CycNum root_of_unity(std::uint32_t level, std::int64_t e) {
  if (level == 0) throw DomainError("cyclotomic level must be positive");
  const auto l = static_cast<std::int64_t>(level);
  const auto r = static_cast<std::size_t>(((e % l) + l) % l);
  return CycNum(level, UPoly::monomial(Rat(1), r));
}

Rat cyc_to_rational(const CycNum& z) {
  if (!z.is_rational()) throw DomainError("not rational: " + z.str());
  return z.rep().coeff(0);
}

}  // namespace ceresa

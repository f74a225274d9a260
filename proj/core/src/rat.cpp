#include "ceresa/rat.hpp"

#include <limits>
#include <ostream>

#include "ceresa/errors.hpp"

namespace ceresa {

Rat::Rat(long long v) : q_(mpz_class(static_cast<long>(v))) {
  static_assert(sizeof(long) == sizeof(long long), "64-bit long expected");
}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat::Rat(mpq_class q) : q_(std::move(q)) {
  if (q_.get_den() == 0) throw DomainError("rational with zero denominator");
  q_.canonicalize();
}

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  std::string_view digits = num;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!is_digits(digits) || !is_digits(den)) {
    throw DomainError("not a rational number: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  mpz_class d(std::string(den), 10);
  return Rat(n, d);
}

std::int64_t Rat::to_int64() const {
  if (!is_integer()) throw DomainError("not an integer: " + str());
  const mpz_class& n = q_.get_num();
  if (!n.fits_slong_p()) throw DomainError("integer out of range: " + str());
  return n.get_si();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rat::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rat pow(const Rat& r, long e) {
  if (e < 0) {
    if (r.is_zero()) throw DomainError("zero to a negative power");
    return Rat(1) / pow(r, -e);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), r.num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), r.den().get_mpz_t(), static_cast<unsigned long>(e));
  return Rat(n, d);
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

std::optional<Rat> exact_root(const Rat& r, unsigned k) {
  if (k == 0) throw DomainError("zeroth root");
  if (k == 1) return r;
  if (r.sign() < 0 && k % 2 == 0) return std::nullopt;
  mpz_class n = r.num();
  const bool negative = n < 0;
  if (negative) n = -n;
  mpz_class rn, rd;
  if (mpz_root(rn.get_mpz_t(), n.get_mpz_t(), k) == 0) return std::nullopt;
  mpz_class d = r.den();
  if (mpz_root(rd.get_mpz_t(), d.get_mpz_t(), k) == 0) return std::nullopt;
  if (negative) rn = -rn;
  return Rat(rn, rd);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace ceresa

#include "ceresa/repcrit.hpp"

#include <algorithm>
#include <numeric>
#include <type_traits>

#include "ceresa/errors.hpp"

namespace ceresa {

ActionProfile normalized(ActionProfile profile) {
  if (profile.group_order == 0) throw MalformedProfile("group order must be positive");
  if (profile.level == 0) throw MalformedProfile("level must be positive");
  if (profile.classes.empty()) throw MalformedProfile("no conjugacy classes");

  const auto level = static_cast<std::int64_t>(profile.level);
  const std::size_t dim = profile.classes.front().exps.size();
  std::uint64_t total = 0;
  bool has_identity = false;
  for (auto& cls : profile.classes) {
    if (cls.size == 0) throw MalformedProfile("class of size zero");
    if (cls.exps.size() != dim) throw MalformedProfile("classes disagree on dim V");
    for (auto& e : cls.exps) e = ((e % level) + level) % level;
    if (std::all_of(cls.exps.begin(), cls.exps.end(), [](std::int64_t e) { return e == 0; })) {
      has_identity = has_identity || cls.size == 1;
    }
    total += cls.size;
  }
  if (!has_identity) throw MalformedProfile("identity class (size 1, all exponents 0) missing");
  if (total != profile.group_order) {
    throw MalformedProfile("class sizes sum to " + std::to_string(total) + ", not " +
                           std::to_string(profile.group_order));
  }
  return profile;
}

namespace {

// Elements of Z[x]/(x^L - 1). Characters are summed and multiplied here and
// reduced modulo Phi_L once at the end, which is valid since Phi_L | x^L - 1.
// T is std::int64_t when the entries provably fit, mpz_class otherwise.
template <typename T>
using GroupRing = std::vector<T>;

template <typename T>
GroupRing<T> power_sum(const ClassEntry& cls, std::int64_t k, std::uint32_t level) {
  const auto L = static_cast<std::int64_t>(level);
  GroupRing<T> out(level, T(0));
  for (std::int64_t e : cls.exps) out[static_cast<std::size_t>((((k * e) % L) + L) % L)] += 1;
  return out;
}

template <typename T>
GroupRing<T> convolve(const GroupRing<T>& a, const GroupRing<T>& b) {
  const std::size_t L = a.size();
  GroupRing<T> out(L, T(0));
  for (std::size_t i = 0; i < L; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < L; ++j) {
      if (b[j] != 0) out[(i + j) % L] += a[i] * b[j];
    }
  }
  return out;
}

template <typename T>
CycNum reduce(const GroupRing<T>& v, std::uint32_t level) {
  std::vector<Rat> coeffs;
  coeffs.reserve(v.size());
  for (const auto& c : v) {
    if constexpr (std::is_same_v<T, mpz_class>) {
      coeffs.emplace_back(c);
    } else {
      coeffs.emplace_back(static_cast<long long>(c));
    }
  }
  return CycNum(level, UPoly(std::move(coeffs)));
}

// Each entry is at most |G| * 6 * n^3 in absolute value, n = dim of the space.
bool fits_int64(const ActionProfile& profile, Space space) {
  const std::uint64_t n = profile.dim() * (space == Space::H1 ? 2 : 1);
  if (n == 0 || n > 100000) return false;
  return profile.group_order <= (std::uint64_t{1} << 62) / (6 * n * n * n);
}

ClassEntry with_conjugates(const ClassEntry& cls) {
  ClassEntry h1 = cls;
  for (std::int64_t e : cls.exps) h1.exps.push_back(-e);
  return h1;
}

const ClassEntry& space_entry(const ClassEntry& cls, Space space, ClassEntry& scratch) {
  if (space == Space::V) return cls;
  scratch = with_conjugates(cls);
  return scratch;
}

// Sum over classes of |class| (chi^3 - 3 chi(g) chi(g^2) + 2 chi(g^3)).
template <typename T>
CycNum wedge3_class_sum(const ActionProfile& profile, Space space) {
  const std::uint32_t L = profile.level;
  GroupRing<T> sum(L, T(0));
  ClassEntry scratch;
  for (const auto& cls : profile.classes) {
    const ClassEntry& w = space_entry(cls, space, scratch);
    const auto chi1 = power_sum<T>(w, 1, L);
    const auto chi2 = power_sum<T>(w, 2, L);
    const auto chi3 = power_sum<T>(w, 3, L);
    const auto cube = convolve(convolve(chi1, chi1), chi1);
    const auto mixed = convolve(chi1, chi2);
    const T size(static_cast<std::int64_t>(cls.size));
    for (std::size_t i = 0; i < L; ++i) sum[i] += size * (cube[i] - 3 * mixed[i] + 2 * chi3[i]);
  }
  return reduce(sum, L);
}

std::uint64_t to_dimension(const CycNum& average, const char* what) {
  Rat value;
  try {
    value = cyc_to_rational(average);
  } catch (const DomainError&) {
    throw MalformedProfile(std::string(what) + " average is irrational: " + average.str());
  }
  if (!value.is_integer() || value.sign() < 0) {
    throw MalformedProfile(std::string(what) + " average is " + value.str() +
                           ", not a nonnegative integer");
  }
  return static_cast<std::uint64_t>(value.to_int64());
}

}  // namespace

CycNum char_power(const ClassEntry& cls, std::int64_t k, std::uint32_t level) {
  if (level == 0) throw DomainError("cyclotomic level must be positive");
  return reduce(power_sum<mpz_class>(cls, k, level), level);
}

std::uint64_t dim_inv_wedge3(const ActionProfile& raw, Space space) {
  const ActionProfile profile = normalized(raw);
  if (profile.dim() < 3) throw DomainError("exterior cube needs dim V >= 3");
  const CycNum sum = fits_int64(profile, space) ? wedge3_class_sum<std::int64_t>(profile, space)
                                                 : wedge3_class_sum<mpz_class>(profile, space);
  const Rat denom(mpz_class(mpz_class(6) * static_cast<unsigned long>(profile.group_order)));
  return to_dimension(sum / denom, "wedge^3 character");
}

std::uint64_t dim_invariants(const ActionProfile& raw, Space space) {
  const ActionProfile profile = normalized(raw);
  GroupRing<mpz_class> sum(profile.level);
  ClassEntry scratch;
  for (const auto& cls : profile.classes) {
    const auto chi = power_sum<mpz_class>(space_entry(cls, space, scratch), 1, profile.level);
    const mpz_class size(static_cast<unsigned long>(cls.size));
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += size * chi[i];
  }
  const Rat denom(mpz_class(static_cast<unsigned long>(profile.group_order)));
  return to_dimension(reduce(sum, profile.level) / denom, "character");
}

bool thm_b_applies(const ActionProfile& profile) { return dim_inv_wedge3(profile, Space::V) == 0; }

PrimitiveH3 primitive_h3_invariants(const ActionProfile& profile) {
  PrimitiveH3 dims{dim_inv_wedge3(profile, Space::H1), dim_invariants(profile, Space::H1)};
  if (dims.wedge3_h1 < dims.h1) {
    throw MalformedProfile("dim H^3(J)^G < dim H^1(J)^G");
  }
  return dims;
}

bool thm_a_applies(const ActionProfile& profile) { return primitive_h3_invariants(profile).primitive() == 0; }

namespace {

void check_dihedral(std::uint64_t m, std::uint64_t a, std::uint64_t b) {
  if (!(0 < a && a < b && 2 * b < m)) {
    throw DomainError("dihedral family needs 0 < a < b < m/2");
  }
  if (std::gcd(m, std::gcd(a, b)) != 1) throw DomainError("dihedral family needs gcd(m, a, b) = 1");
}

}  // namespace

std::uint64_t dihedral_genus(std::uint64_t m, std::uint64_t a, std::uint64_t b) {
  check_dihedral(m, a, b);
  return m + 1 - std::gcd(a, m) - std::gcd(b, m);
}

bool dihedral_epsilon(std::uint64_t m, std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return (n * a) % m != 0 && (n * b) % m != 0;
}

ActionProfile dihedral_profile(std::uint64_t m, std::uint64_t a, std::uint64_t b) {
  const std::uint64_t genus = dihedral_genus(m, a, b);
  std::vector<std::int64_t> chars;
  for (std::uint64_t n = 1; n < m; ++n) {
    if (dihedral_epsilon(m, a, b, n)) chars.push_back(static_cast<std::int64_t>(n));
  }
  if (chars.size() != genus) {
    throw std::logic_error("mu_m character has dimension " + std::to_string(chars.size()) +
                           " but the genus is " + std::to_string(genus));
  }

  ActionProfile p;
  p.group_order = m;
  p.level = static_cast<std::uint32_t>(m);
  const auto mm = static_cast<std::int64_t>(m);
  for (std::int64_t k = 0; k < mm; ++k) {
    ClassEntry cls;
    for (std::int64_t n : chars) cls.exps.push_back((k * n) % mm);
    p.classes.push_back(std::move(cls));
  }
  return p;
}

std::optional<std::array<std::uint64_t, 3>> dihedral_triple(std::uint64_t m, std::uint64_t a,
                                                             std::uint64_t b) {
  check_dihedral(m, a, b);
  for (std::uint64_t n1 = 1; 3 * n1 + 3 <= m; ++n1) {
    if (!dihedral_epsilon(m, a, b, n1)) continue;
    for (std::uint64_t n2 = n1 + 1; n1 + 2 * n2 + 1 <= m; ++n2) {
      const std::uint64_t n3 = m - n1 - n2;
      if (dihedral_epsilon(m, a, b, n2) && dihedral_epsilon(m, a, b, n3)) {
        return std::array{n1, n2, n3};
      }
    }
  }
  return std::nullopt;
}

bool dihedral_vanishing(std::uint64_t m, std::uint64_t a, std::uint64_t b) {
  if (dihedral_genus(m, a, b) < 3) throw DomainError("dihedral criterion needs genus >= 3");
  const bool triple_free = !dihedral_triple(m, a, b).has_value();
  const bool no_invariants = dim_inv_wedge3(dihedral_profile(m, a, b), Space::V) == 0;
  if (triple_free != no_invariants) {
    throw std::logic_error("triple criterion and mu_m invariant dimension disagree");
  }
  return triple_free;
}

}  // namespace ceresa

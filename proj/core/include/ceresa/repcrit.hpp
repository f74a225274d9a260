#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ceresa/cyclotomic.hpp"

namespace ceresa {

/// One conjugacy class of a finite group G acting on V = H^0(C, Omega^1):
/// its size and the eigenvalues of a representative, written as exponents
/// of zeta_L.
struct ClassEntry {
  std::uint64_t size = 1;
  std::vector<std::int64_t> exps;

  friend bool operator==(const ClassEntry&, const ClassEntry&) = default;
};

/// Eigenvalue data of a finite group action on holomorphic differentials.
struct ActionProfile {
  std::uint64_t group_order = 1;
  std::uint32_t level = 1;
  std::vector<ClassEntry> classes;

  /// dim V, the genus.
  std::size_t dim() const { return classes.empty() ? 0 : classes.front().exps.size(); }

  friend bool operator==(const ActionProfile&, const ActionProfile&) = default;
};

/// Checks sizes sum to the group order, equal dimensions and the identity
/// class; throws MalformedProfile. Exponents are reduced mod level.
ActionProfile normalized(ActionProfile profile);

enum class Space { V, H1 };

/// chi_V(g^k) = sum_i zeta_L^{k e_i}.
CycNum char_power(const ClassEntry& cls, std::int64_t k, std::uint32_t level);

/// dim of the G-invariants of the exterior cube of V or of H^1 = V + conj(V),
/// from chi_{wedge^3} = (chi^3 - 3 chi(g) chi(g^2) + 2 chi(g^3)) / 6.
/// Requires dim V >= 3; throws MalformedProfile if the average is not a
/// nonnegative integer.
std::uint64_t dim_inv_wedge3(const ActionProfile& profile, Space space);

/// dim of the G-invariants of V or H^1.
std::uint64_t dim_invariants(const ActionProfile& profile, Space space);

/// Whether (wedge^3 V)^G = 0, i.e. H^0(J, Omega^3)^G = 0.
bool thm_b_applies(const ActionProfile& profile);

struct PrimitiveH3 {
  std::uint64_t wedge3_h1;  ///< dim H^3(J)^G
  std::uint64_t h1;         ///< dim H^1(J)^G
  std::uint64_t primitive() const { return wedge3_h1 - h1; }
};

/// Invariant dimensions behind H^3(J)_prim^G = H^3(J)^G / H^1(J)(-1)^G.
PrimitiveH3 primitive_h3_invariants(const ActionProfile& profile);

/// Whether H^3(J)_prim^G = 0.
bool thm_a_applies(const ActionProfile& profile);

// --- Curves y^m = ((x+1)/(x-1))^a ((x+t)/(x-t))^b with D_m action ----------

/// g = m + 1 - gcd(a, m) - gcd(b, m); requires 0 < a < b < m/2 and
/// gcd(m, a, b) = 1.
std::uint64_t dihedral_genus(std::uint64_t m, std::uint64_t a, std::uint64_t b);

/// epsilon(n) = 1 iff m divides neither n a nor n b.
bool dihedral_epsilon(std::uint64_t m, std::uint64_t a, std::uint64_t b, std::uint64_t n);

/// The mu_m action: class of g^k has exponents {k n mod m : epsilon(n) = 1}.
ActionProfile dihedral_profile(std::uint64_t m, std::uint64_t a, std::uint64_t b);

/// Lexicographically first 0 < n1 < n2 < n3 < m with epsilon(n_i) = 1 and
/// n1 + n2 + n3 = m, if any.
std::optional<std::array<std::uint64_t, 3>> dihedral_triple(std::uint64_t m, std::uint64_t a,
                                                             std::uint64_t b);

/// True iff (wedge^3 V)^{D_m} = 0. Requires genus >= 3. The triple test is
/// cross-checked against dim_inv_wedge3 of the mu_m profile.
bool dihedral_vanishing(std::uint64_t m, std::uint64_t a, std::uint64_t b);

// --- Presets --------------------------------------------------------------

/// "picard_c3", "c9_x4px", "klein_c7" or "dihedral:m,a,b".
ActionProfile preset_profile(std::string_view name);

std::vector<std::string> preset_names();

}  // namespace ceresa

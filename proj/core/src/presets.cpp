#include <charconv>

#include "ceresa/errors.hpp"
#include "ceresa/repcrit.hpp"

namespace ceresa {

namespace {

// Cyclic group of order n acting through a generator with the given
// eigenvalue exponents; the class of g^k has exponents k * gen.
ActionProfile cyclic_profile(std::uint32_t n, const std::vector<std::int64_t>& gen) {
  ActionProfile p;
  p.group_order = n;
  p.level = n;
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(n); ++k) {
    ClassEntry cls;
    for (std::int64_t e : gen) cls.exps.push_back((k * e) % n);
    p.classes.push_back(std::move(cls));
  }
  return p;
}

std::uint64_t parse_uint(std::string_view s, std::string_view whole) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw LookupError("bad dihedral preset '" + std::string(whole) + "', expected dihedral:m,a,b");
  }
  return v;
}

}  // namespace

ActionProfile preset_profile(std::string_view name) {
  // y^3 = f(x): (x, y) -> (x, zeta_3 y) acts on dx/y^2, x dx/y^2, dx/y.
  if (name == "picard_c3") return cyclic_profile(3, {1, 1, 2});
  // y^3 = x^4 + x: (x, y) -> (zeta_9^3 x, zeta_9 y) on the same basis.
  if (name == "c9_x4px") return cyclic_profile(9, {1, 4, 2});
  // Order-7 automorphism of the Klein quartic.
  if (name == "klein_c7") return cyclic_profile(7, {1, 2, 4});

  constexpr std::string_view kDihedral = "dihedral:";
  if (name.starts_with(kDihedral)) {
    std::string_view rest = name.substr(kDihedral.size());
    const auto c1 = rest.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : rest.find(',', c1 + 1);
    if (c2 == std::string_view::npos) {
      throw LookupError("bad dihedral preset '" + std::string(name) + "', expected dihedral:m,a,b");
    }
    const auto m = parse_uint(rest.substr(0, c1), name);
    const auto a = parse_uint(rest.substr(c1 + 1, c2 - c1 - 1), name);
    const auto b = parse_uint(rest.substr(c2 + 1), name);
    return dihedral_profile(m, a, b);
  }
  throw LookupError("unknown profile preset '" + std::string(name) + "'");
}

std::vector<std::string> preset_names() { return {"picard_c3", "c9_x4px", "klein_c7", "dihedral:m,a,b"}; }

}  // namespace ceresa

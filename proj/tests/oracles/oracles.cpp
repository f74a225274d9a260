#include "oracles.hpp"

#include <stdexcept>

namespace ceresa::oracle {

namespace {

void trim(Coeffs& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Coeffs mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

Coeffs sub(Coeffs a, const Coeffs& b) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

Coeffs scale(Coeffs a, const mpq_class& c) {
  for (auto& x : a) x *= c;
  trim(a);
  return a;
}

Coeffs cube(const Coeffs& a) { return mul(a, mul(a, a)); }
Coeffs square(const Coeffs& a) { return mul(a, a); }

mpz_class eval_int(const std::vector<mpz_class>& p, const mpz_class& x) {
  mpz_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<std::pair<mpz_class, unsigned>> factors;
  for (mpz_class p = 2; p * p <= n; ++p) {
    if (p > 1000000) throw std::runtime_error("oracle: constant term too hard to factor");
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = divs.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

/// Integer roots of a nonzero integer polynomial, restricted to candidates
/// accepted by `keep` (checked before the costly evaluation).
template <typename Keep>
std::set<mpz_class> integer_roots(std::vector<mpz_class> p, Keep keep) {
  std::set<mpz_class> roots;
  while (p.size() > 1 && p.front() == 0) {
    if (keep(mpz_class(0))) roots.insert(0);
    p.erase(p.begin());
  }
  if (p.size() <= 1) return roots;
  for (const auto& d : divisors(p.front())) {
    for (const mpz_class& x : {d, mpz_class(-d)}) {
      if (keep(x) && eval_int(p, x) == 0) roots.insert(x);
    }
  }
  return roots;
}

std::vector<mpz_class> clear_denominators(const Coeffs& p) {
  mpz_class l = 1;
  for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> out;
  for (const auto& c : p) {
    mpq_class v = c * l;
    out.push_back(v.get_num());
  }
  return out;
}

}  // namespace

mpq_class sylvester_resultant(const Coeffs& p, const Coeffs& q) {
  const std::size_t m = p.size() - 1;  // deg p
  const std::size_t n = q.size() - 1;  // deg q
  const std::size_t size = m + n;
  if (size == 0) return 1;
  std::vector<std::vector<mpq_class>> M(size, std::vector<mpq_class>(size, 0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i <= m; ++i) M[r][r + i] = p[m - i];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i <= n; ++i) M[n + r][r + i] = q[n - i];

  mpq_class det = 1;
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && M[pivot][col] == 0) ++pivot;
    if (pivot == size) return 0;
    if (pivot != col) {
      std::swap(M[pivot], M[col]);
      det = -det;
    }
    det *= M[col][col];
    for (std::size_t r = col + 1; r < size; ++r) {
      if (M[r][col] == 0) continue;
      const mpq_class f = M[r][col] / M[col][col];
      for (std::size_t k = col; k < size; ++k) M[r][k] -= f * M[col][k];
    }
  }
  return det;
}

Coeffs geometric_quotient(unsigned n, unsigned d) {
  if (d == 0 || n % d != 0) throw std::invalid_argument("d must divide n");
  Coeffs rem(n + 1, 0);
  rem[n] = 1;
  rem[0] = -1;
  Coeffs quot(n - d + 1, 0);
  for (unsigned k = n; k >= d; --k) {
    const mpq_class c = rem[k];
    if (c == 0) continue;
    quot[k - d] = c;
    rem[k] -= c;
    rem[k - d] += c;
  }
  trim(quot);
  return quot;
}

std::vector<Coeffs> division_polynomials(const mpz_class& A, const mpz_class& B, unsigned n_max) {
  const mpq_class a(A), b(B);
  std::vector<Coeffs> g(std::max(5U, n_max + 1));
  g[0] = {};
  g[1] = {1};
  g[2] = {1};
  g[3] = {-a * a, 12 * b, 6 * a, 0, 3};
  g[4] = scale({-8 * b * b - a * a * a, -4 * a * b, -5 * a * a, 20 * b, 5 * a, 0, 1}, 2);
  const Coeffs f = {b, a, 0, 1};
  const Coeffs f2_16 = scale(square(f), 16);
  for (unsigned n = 5; n <= n_max; ++n) {
    const unsigned m = n / 2;
    if (n % 2 == 1) {
      if (m % 2 == 0) {
        g[n] = sub(mul(f2_16, mul(g[m + 2], cube(g[m]))), mul(g[m - 1], cube(g[m + 1])));
      } else {
        g[n] = sub(mul(g[m + 2], cube(g[m])), mul(f2_16, mul(g[m - 1], cube(g[m + 1]))));
      }
    } else {
      g[n] = mul(g[m], sub(mul(g[m + 2], square(g[m - 1])), mul(g[m - 2], square(g[m + 1]))));
    }
  }
  g.resize(n_max + 1);
  return g;
}

std::set<std::pair<mpq_class, mpq_class>> torsion_by_division_polynomials(const mpz_class& A,
                                                                        const mpz_class& B) {
  std::set<std::pair<mpq_class, mpq_class>> points;
  const auto g = division_polynomials(A, B, 12);
  auto add_x = [&](const mpz_class& x) {
    const mpz_class rhs = x * x * x + A * x + B;
    if (rhs < 0) return;
    if (rhs == 0) {
      points.emplace(mpq_class(x), mpq_class(0));
      return;
    }
    mpz_class y;
    mpz_sqrt(y.get_mpz_t(), rhs.get_mpz_t());
    if (y * y != rhs) return;
    points.emplace(mpq_class(x), mpq_class(y));
    points.emplace(mpq_class(x), mpq_class(-y));
  };
  // Only x with x^3 + A x + B a square can give a rational point.
  auto square_rhs = [&](const mpz_class& x) {
    const mpz_class rhs = x * x * x + A * x + B;
    return rhs >= 0 && mpz_perfect_square_p(rhs.get_mpz_t()) != 0;
  };
  // Orders dividing one of these cover every group allowed over Q.
  for (unsigned n : {7U, 8U, 9U, 10U, 12U}) {
    for (const auto& x : integer_roots(clear_denominators(g[n]), square_rhs)) add_x(x);
  }
  for (const auto& x : integer_roots({B, A, 0, 1}, square_rhs)) add_x(x);
  return points;
}

std::uint64_t count_zero_sum_triples(const std::vector<std::int64_t>& exps, std::int64_t level) {
  std::uint64_t count = 0;
  const std::size_t n = exps.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const std::int64_t s = exps[i] + exps[j] + exps[k];
        if (((s % level) + level) % level == 0) ++count;
      }
  return count;
}

}  // namespace ceresa::oracle

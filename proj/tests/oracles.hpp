#pragma once
// Independent reference computations used as test oracles. None of these
// call into the library.
#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace oracle {

inline mpz_class binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline mpq_class frac(long a, long b) {
  mpq_class q(a, b);
  q.canonicalize();
  return q;
}

// Hilbert polynomial of P^{n-1}: chi(O(t)) = (t+1)(t+2)...(t+n-1)/(n-1)!,
// valid for every integer t.
inline mpz_class chi_line(long t, int n) {
  mpq_class num = 1;
  for (int i = 1; i <= n - 1; ++i) num *= frac(t + i, i);
  return num.get_num();
}

// chi(Omega^p(t)) from 0 -> Omega^p -> wedge^p V* (x) O(-p) -> Omega^{p-1} -> 0.
inline mpz_class chi_omega(int n, int p, long t) {
  mpz_class total = 0;
  for (int i = 0; i <= p; ++i) {
    const mpz_class term = binom(n, i) * chi_line(t - i, n);
    total += ((p - i) % 2 == 0) ? term : mpz_class(-term);
  }
  return total;
}

// Dimension of the GL_m irreducible with partition highest weight, by the
// hook-content formula.
inline mpz_class hook_content_dim(int m, const std::vector<int>& lambda) {
  mpq_class r = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      int arm = lambda[i] - j - 1;
      int leg = 0;
      for (std::size_t k = i + 1; k < lambda.size() && lambda[k] > j; ++k) ++leg;
      r *= frac(m + j - static_cast<int>(i), arm + leg + 1);
    }
  }
  return r.get_num();
}

// dim of the traceless part of Sym^p V (x) Sym^q V*, dim V = n.
inline mpz_class traceless(int n, long p, long q) {
  if (p < 0 || q < 0) return 0;
  return binom(n + p - 1, p) * binom(n + q - 1, q) - binom(n + p - 2, p - 1) * binom(n + q - 2, q - 1);
}

// Lagrange coordinates of [O(a)] in the basis [O(0)], ..., [O(n-1)] of
// K_0(P^{n-1}): K_0 is identified with integer-valued polynomials of degree
// < n via the Hilbert polynomial, and [O(a)] <-> chi(O(a + t)).
inline std::vector<mpz_class> line_coords(long a, int n) {
  std::vector<mpz_class> c;
  for (int j = 0; j < n; ++j) {
    mpq_class v = 1;
    for (int i = 0; i < n; ++i) {
      if (i != j) v *= frac(a - i, j - i);
    }
    c.push_back(v.get_num());
  }
  return c;
}

// Rank over Q by plain Gaussian elimination on rationals.
inline long rank(std::vector<std::vector<mpq_class>> m) {
  long r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < static_cast<long>(m.size()); ++c) {
    std::size_t piv = static_cast<std::size_t>(r);
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[static_cast<std::size_t>(r)]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == static_cast<std::size_t>(r) || m[i][c] == 0) continue;
      const mpq_class f = m[i][c] / m[static_cast<std::size_t>(r)][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[static_cast<std::size_t>(r)][j];
    }
    ++r;
  }
  return r;
}

}  // namespace oracle

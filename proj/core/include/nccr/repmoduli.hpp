#pragma once

// Field-valued points of the moduli of representations of the double
// Beilinson quiver with dimension vector (1, ..., 1).
//
// A triple (alpha, beta) with <beta, alpha> = 0 gives W_k = Sym^k P^dual
// (one-dimensional, with its monomial basis); f_i: W_k -> W_{k+1} acts by
// alpha_i and v_j: W_k -> W_{k-1} by beta_j. The point of Y is
// ([alpha], X = alpha beta^T).
//
// Y+ convention: a representation generated by W_{n-1} is read through the
// mirror k -> n-1-k, f_i <-> v_i; its Y+ point is ([beta], beta alpha^T),
// i.e. the transpose of X.
//
// Everything is templated on the field; Rational and ModP are provided.

#include "nccr/numeric.hpp"
#include "nccr/quiveralg.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace nccr::rep {

/// Integers modulo the prime 1000003.
class ModP {
 public:
  static constexpr std::int64_t p = 1000003;
  ModP() = default;
  ModP(std::int64_t x) : v_(((x % p) + p) % p) {}  // NOLINT(google-explicit-constructor)
  std::int64_t value() const { return v_; }
  friend ModP operator+(ModP a, ModP b) { return ModP(a.v_ + b.v_); }
  friend ModP operator-(ModP a, ModP b) { return ModP(a.v_ - b.v_); }
  friend ModP operator*(ModP a, ModP b) { return ModP(a.v_ * b.v_); }
  friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
  ModP operator-() const { return ModP(-v_); }
  ModP& operator+=(ModP b) { return *this = *this + b; }
  ModP& operator-=(ModP b) { return *this = *this - b; }
  ModP& operator*=(ModP b) { return *this = *this * b; }
  bool operator==(const ModP&) const = default;
  ModP inverse() const;

 private:
  std::int64_t v_ = 0;
};

std::string to_string(const ModP& x);

template <typename F>
struct RepTriple {
  int n = 0;
  std::vector<F> alpha;
  std::vector<F> beta;
};

/// f[k][i]: scalar of f_{i+1} on the edge W_k -> W_{k+1}, k = 0..n-2.
/// v[k][j]: scalar of v_{j+1} on the edge W_{k+1} -> W_k, k = 0..n-2.
template <typename F>
struct Rep {
  int n = 0;
  std::vector<std::vector<F>> f;
  std::vector<std::vector<F>> v;
};

template <typename F>
struct YPoint {
  std::vector<F> line;                 // first nonzero coordinate is 1
  std::vector<std::vector<F>> X;       // X[i][j]
};

struct RelationFailure {
  std::string relation;
  int vertex = 0;
};

template <typename F>
F pairing(const std::vector<F>& beta, const std::vector<F>& alpha) {
  F s = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) s += beta[i] * alpha[i];
  return s;
}

template <typename F>
bool is_zero(const std::vector<F>& x) {
  for (const auto& e : x) {
    if (!(e == F(0))) return false;
  }
  return true;
}

/// Throws std::invalid_argument unless alpha != 0 and <beta, alpha> = 0.
template <typename F>
void validate(const RepTriple<F>& t) {
  if (t.n < 2) throw std::invalid_argument("RepTriple: n must be >= 2");
  if (static_cast<int>(t.alpha.size()) != t.n || static_cast<int>(t.beta.size()) != t.n) {
    throw std::invalid_argument("RepTriple: alpha and beta must have n entries");
  }
  if (is_zero(t.alpha)) throw std::invalid_argument("RepTriple: alpha must be nonzero");
  if (!(pairing(t.beta, t.alpha) == F(0))) throw std::invalid_argument("RepTriple: <beta, alpha> must vanish");
}

template <typename F>
Rep<F> rep_from_triple(const RepTriple<F>& t) {
  validate(t);
  Rep<F> r;
  r.n = t.n;
  r.f.assign(static_cast<std::size_t>(t.n - 1), t.alpha);
  r.v.assign(static_cast<std::size_t>(t.n - 1), t.beta);
  return r;
}

namespace detail {

template <typename F>
F arrow_scalar(const Rep<F>& r, const quiver::Quiver& q, int vertex, quiver::Label x) {
  const auto i = static_cast<std::size_t>(q.index(x) - 1);
  if (q.is_up(x)) return r.f[static_cast<std::size_t>(vertex)][i];
  return r.v[static_cast<std::size_t>(vertex - 1)][i];
}

template <typename F>
void check_shape(const Rep<F>& r) {
  if (r.n < 2 || static_cast<int>(r.f.size()) != r.n - 1 || static_cast<int>(r.v.size()) != r.n - 1) {
    throw std::invalid_argument("Rep: expected n-1 edges of f and v scalars");
  }
  for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(r.n); ++k) {
    if (static_cast<int>(r.f[k].size()) != r.n || static_cast<int>(r.v[k].size()) != r.n) {
      throw std::invalid_argument("Rep: each edge carries n scalars");
    }
  }
}

}  // namespace detail

/// Evaluates every generating relation at every vertex where it is defined.
template <typename F>
std::optional<RelationFailure> check_relations(const Rep<F>& r) {
  detail::check_shape(r);
  const quiver::Quiver q(r.n);
  for (const auto& rel : quiver::generating_relations(q)) {
    F total = 0;
    for (const auto& [w, c] : rel.terms) {
      F prod = F(static_cast<std::int64_t>(c));
      int vertex = rel.source;
      for (auto x : w) {
        prod *= detail::arrow_scalar(r, q, vertex, x);
        vertex = q.step(vertex, x);
      }
      total += prod;
    }
    if (!(total == F(0))) return RelationFailure{rel.str(q), rel.source};
  }
  return std::nullopt;
}

/// True when the subrepresentation generated by W_vertex is everything.
template <typename F>
bool generated_by(const Rep<F>& r, int vertex) {
  detail::check_shape(r);
  if (vertex < 0 || vertex >= r.n) throw std::invalid_argument("generated_by: vertex out of range");
  std::vector<bool> seen(static_cast<std::size_t>(r.n), false);
  std::vector<int> stack{vertex};
  seen[static_cast<std::size_t>(vertex)] = true;
  while (!stack.empty()) {
    const int k = stack.back();
    stack.pop_back();
    if (k + 1 < r.n && !seen[static_cast<std::size_t>(k + 1)] && !is_zero(r.f[static_cast<std::size_t>(k)])) {
      seen[static_cast<std::size_t>(k + 1)] = true;
      stack.push_back(k + 1);
    }
    if (k > 0 && !seen[static_cast<std::size_t>(k - 1)] && !is_zero(r.v[static_cast<std::size_t>(k - 1)])) {
      seen[static_cast<std::size_t>(k - 1)] = true;
      stack.push_back(k - 1);
    }
  }
  for (bool s : seen) {
    if (!s) return false;
  }
  return true;
}

/// No proper nonzero subrepresentation: every vertex generates everything.
template <typename F>
bool is_simple(const Rep<F>& r) {
  for (int k = 0; k < r.n; ++k) {
    if (!generated_by(r, k)) return false;
  }
  return true;
}

/// Recovers (alpha, beta) after rescaling the bases of W_1..W_{n-1} so that
/// every f-edge carries the scalars of the first one. Throws
/// std::invalid_argument if r is not generated by W_0 or violates the
/// relations.
template <typename F>
RepTriple<F> triple_from_rep(const Rep<F>& r) {
  if (check_relations(r)) throw std::invalid_argument("triple_from_rep: relations fail");
  if (!generated_by(r, 0)) throw std::invalid_argument("triple_from_rep: not generated by W_0");
  const auto& alpha = r.f[0];
  std::size_t piv = 0;
  while (alpha[piv] == F(0)) ++piv;
  RepTriple<F> t{r.n, alpha, std::vector<F>(static_cast<std::size_t>(r.n), F(0))};
  // basis_scale[k]: new basis vector of W_k in terms of the old one.
  std::vector<F> basis_scale(static_cast<std::size_t>(r.n), F(1));
  for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(r.n); ++k) {
    const F lambda = r.f[k][piv] * basis_scale[k];
    basis_scale[k + 1] = lambda / alpha[piv];
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (!(r.f[k][i] * basis_scale[k] / basis_scale[k + 1] == alpha[i])) {
        throw std::invalid_argument("triple_from_rep: f-edges are not proportional");
      }
    }
  }
  for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(r.n); ++k) {
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      const F b = r.v[k][j] * basis_scale[k + 1] / basis_scale[k];
      if (k == 0) {
        t.beta[j] = b;
      } else if (!(b == t.beta[j])) {
        throw std::invalid_argument("triple_from_rep: v-edges are not proportional");
      }
    }
  }
  validate(t);
  return t;
}

template <typename F>
std::vector<F> normalize_line(const std::vector<F>& x) {
  std::size_t piv = 0;
  while (piv < x.size() && x[piv] == F(0)) ++piv;
  if (piv == x.size()) throw std::invalid_argument("normalize_line: zero vector");
  std::vector<F> out(x);
  const F s = x[piv];
  for (auto& e : out) e = e / s;
  return out;
}

template <typename F>
std::vector<std::vector<F>> outer(const std::vector<F>& a, const std::vector<F>& b) {
  std::vector<std::vector<F>> x(a.size(), std::vector<F>(b.size(), F(0)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) x[i][j] = a[i] * b[j];
  }
  return x;
}

template <typename F>
YPoint<F> to_point(const Rep<F>& r) {
  const RepTriple<F> t = triple_from_rep(r);
  return YPoint<F>{normalize_line(t.alpha), outer(t.alpha, t.beta)};
}

/// Mirror k -> n-1-k exchanging f_i and v_i; turns a representation generated
/// by W_{n-1} into one generated by W_0.
template <typename F>
Rep<F> mirror(const Rep<F>& r) {
  detail::check_shape(r);
  Rep<F> m;
  m.n = r.n;
  m.f.assign(r.v.rbegin(), r.v.rend());
  m.v.assign(r.f.rbegin(), r.f.rend());
  return m;
}

/// Point of Y+ for a representation generated by W_{n-1}.
template <typename F>
YPoint<F> to_point_plus(const Rep<F>& r) {
  return to_point(mirror(r));
}

template <typename F>
std::vector<std::vector<F>> mat_mul(const std::vector<std::vector<F>>& a, const std::vector<std::vector<F>>& b) {
  const std::size_t n = a.size();
  std::vector<std::vector<F>> c(n, std::vector<F>(n, F(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == F(0)) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

template <typename F>
int mat_rank(std::vector<std::vector<F>> a) {
  int rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < rows && a[piv][c] == F(0)) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[static_cast<std::size_t>(rank)]);
    const auto& pr = a[static_cast<std::size_t>(rank)];
    for (std::size_t i = static_cast<std::size_t>(rank) + 1; i < rows; ++i) {
      if (a[i][c] == F(0)) continue;
      const F m = a[i][c] / pr[c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= m * pr[j];
    }
    ++rank;
  }
  return rank;
}

template <typename F>
bool is_zero_matrix(const std::vector<std::vector<F>>& x) {
  for (const auto& row : x) {
    if (!is_zero(row)) return false;
  }
  return true;
}

/// X^2 = 0, rank X <= 1 and every column of X lies on the line.
template <typename F>
bool point_invariants_hold(const YPoint<F>& p) {
  if (!is_zero_matrix(mat_mul(p.X, p.X)) || mat_rank(p.X) > 1) return false;
  const std::size_t n = p.line.size();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        // column j must be proportional to line: X[i][j] line[k] = X[k][j] line[i]
        if (!(p.X[i][j] * p.line[k] == p.X[k][j] * p.line[i])) return false;
      }
    }
  }
  return true;
}

/// (alpha', beta') = (c alpha, c^{-1} beta) for some nonzero scalar c.
template <typename F>
bool equal_up_to_scaling(const RepTriple<F>& s, const RepTriple<F>& t) {
  if (s.n != t.n) return false;
  std::size_t piv = 0;
  while (piv < s.alpha.size() && s.alpha[piv] == F(0)) ++piv;
  if (piv == s.alpha.size() || t.alpha[piv] == F(0)) return false;
  const F c = t.alpha[piv] / s.alpha[piv];
  for (std::size_t i = 0; i < s.alpha.size(); ++i) {
    if (!(t.alpha[i] == c * s.alpha[i])) return false;
    if (!(t.beta[i] * c == s.beta[i])) return false;
  }
  return true;
}

/// Samples a valid integer triple: alpha uniform over nonzero vectors in
/// [-box, box]^n, then beta uniform over the solutions of <beta, alpha> = 0
/// in the same box (rejection sampling).
RepTriple<Rational> random_triple(int n, int box, std::mt19937_64& rng);
RepTriple<ModP> to_modp(const RepTriple<Rational>& t);

/// Parses a comma-separated list of rationals.
std::vector<Rational> parse_vector(const std::string& text);

}  // namespace nccr::rep

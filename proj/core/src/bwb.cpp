#include "nccr/bwb.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nccr::bwb {

LeviWeight::LeviWeight(int n, int first, std::vector<int> rest)
    : n_(n), first_(first), rest_(std::move(rest)) {
  if (n_ < 2) throw std::invalid_argument("LeviWeight requires n >= 2");
  if (static_cast<int>(rest_.size()) != n_ - 1) {
    throw std::invalid_argument("LeviWeight: GL_{n-1} block must have n-1 entries");
  }
  for (std::size_t i = 1; i < rest_.size(); ++i) {
    if (rest_[i] > rest_[i - 1]) {
      throw std::invalid_argument("LeviWeight: GL_{n-1} block must be weakly decreasing");
    }
  }
  const int shift = rest_.back();
  first_ -= shift;
  for (int& r : rest_) r -= shift;
}

std::vector<int> LeviWeight::full() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n_));
  out.push_back(first_);
  out.insert(out.end(), rest_.begin(), rest_.end());
  return out;
}

LeviWeight LeviWeight::dual() const {
  std::vector<int> r(rest_.rbegin(), rest_.rend());
  for (int& x : r) x = -x;
  return LeviWeight(n_, -first_, std::move(r));
}

combinat::Partition LeviWeight::rest_partition() const { return combinat::Partition(rest_); }

std::string LeviWeight::str() const {
  std::ostringstream os;
  os << '(' << first_ << ';';
  for (std::size_t i = 0; i < rest_.size(); ++i) {
    os << (i ? "," : "") << rest_[i];
  }
  os << ')';
  return os.str();
}

BundleExpr::BundleExpr(const LeviWeight& w) : n_(w.n()) { terms_[w] = 1; }

void BundleExpr::add(const LeviWeight& w, const Integer& coeff) {
  if (w.n() != n_) throw std::invalid_argument("BundleExpr: mixed projective spaces");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

BundleExpr& BundleExpr::operator+=(const BundleExpr& other) {
  if (other.n_ != n_) throw std::invalid_argument("BundleExpr: mixed projective spaces");
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

BundleExpr& BundleExpr::operator-=(const BundleExpr& other) {
  if (other.n_ != n_) throw std::invalid_argument("BundleExpr: mixed projective spaces");
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

BundleExpr operator*(const Integer& c, const BundleExpr& e) {
  BundleExpr out(e.n_);
  for (const auto& [w, k] : e.terms_) out.add(w, c * k);
  return out;
}

BundleExpr BundleExpr::twisted(int t) const {
  BundleExpr out(n_);
  for (const auto& [w, c] : terms_) out.add(w.twisted(t), c);
  return out;
}

BundleExpr BundleExpr::dual() const {
  BundleExpr out(n_);
  for (const auto& [w, c] : terms_) out.add(w.dual(), c);
  return out;
}

BundleExpr BundleExpr::tensor(const BundleExpr& other) const {
  if (other.n_ != n_) throw std::invalid_argument("BundleExpr: mixed projective spaces");
  BundleExpr out(n_);
  for (const auto& [w1, c1] : terms_) {
    for (const auto& [w2, c2] : other.terms_) {
      const int first = w1.first() + w2.first();
      for (const auto& [nu, mult] : combinat::lr_product(w1.rest_partition(), w2.rest_partition())) {
        if (nu.length() > n_ - 1) continue;
        out.add(LeviWeight(n_, first, nu.padded(n_ - 1)), c1 * c2 * mult);
      }
    }
  }
  return out;
}

Integer BundleExpr::rank() const {
  Integer r = 0;
  for (const auto& [w, c] : terms_) {
    r += c * combinat::weyl_dim(n_ - 1, std::span<const int>(w.rest()));
  }
  return r;
}

std::string BundleExpr::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << c.get_str() << '*';
    os << w.str();
  }
  return os.str();
}

LeviWeight line_bundle(int n, int t) {
  return LeviWeight(n, t, std::vector<int>(static_cast<std::size_t>(n - 1), 0));
}

BundleExpr omega(int n, int p, int t) {
  if (n < 2) throw std::invalid_argument("omega: n must be >= 2");
  if (p < 0 || p > n - 1) {
    throw std::invalid_argument("omega: p must lie in [0, " + std::to_string(n - 1) + "]");
  }
  std::vector<int> rest(static_cast<std::size_t>(n - 1), 0);
  for (int i = 0; i < p; ++i) rest[static_cast<std::size_t>(i)] = 1;
  return BundleExpr(LeviWeight(n, t - p, std::move(rest)));
}

BundleExpr wedge_tangent(int n, int p, int t) {
  if (n < 2) throw std::invalid_argument("wedge_tangent: n must be >= 2");
  if (p < 0 || p > n - 1) {
    throw std::invalid_argument("wedge_tangent: p must lie in [0, " + std::to_string(n - 1) + "]");
  }
  // Lambda^p T = Lambda^p(Omega(1))^dual (p).
  std::vector<int> rest(static_cast<std::size_t>(n - 1), 0);
  for (int i = 0; i < p; ++i) rest[static_cast<std::size_t>(n - 2 - i)] = -1;
  return BundleExpr(LeviWeight(n, p + t, std::move(rest)));
}

LeviWeight schur_of_omega1(int n, const combinat::Partition& lambda, int t) {
  if (lambda.length() > n - 1) {
    throw std::invalid_argument("schur_of_omega1: partition has more than n-1 rows");
  }
  return LeviWeight(n, t, lambda.padded(n - 1));
}

LeviWeight sym_tangent(int n, int m, int t) {
  if (m < 0) throw std::invalid_argument("sym_tangent: m must be >= 0");
  std::vector<int> rest(static_cast<std::size_t>(n - 1), 0);
  rest.back() = -m;
  return LeviWeight(n, m + t, std::move(rest));
}

BottResult bott(const LeviWeight& w) {
  const int n = w.n();
  std::vector<int> v = w.full();
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] += n - 1 - i;
  int inversions = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (v[static_cast<std::size_t>(i)] == v[static_cast<std::size_t>(j)]) return {};
      if (v[static_cast<std::size_t>(i)] < v[static_cast<std::size_t>(j)]) ++inversions;
    }
  }
  std::sort(v.begin(), v.end(), std::greater<>());
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] -= n - 1 - i;
  return BottResult{false, inversions, combinat::weyl_dim(n, std::span<const int>(v))};
}

CohTable cohomology(const BundleExpr& e) {
  CohTable out;
  for (const auto& [w, c] : e.terms()) {
    BottResult r = bott(w);
    if (r.singular) continue;
    out[r.degree] += c * r.dim;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Integer euler_characteristic(const CohTable& t) {
  Integer chi = 0;
  for (const auto& [q, d] : t) chi += (q % 2 == 0) ? d : Integer(-d);
  return chi;
}

CohTable bott_closed_form(int n, int p, int t) {
  if (p < 0 || p > n - 1) throw std::invalid_argument("bott_closed_form: p out of range");
  const int top = n - 1;
  CohTable out;
  if (t > p) {
    out[0] = binomial(t + top - p, t) * binomial(t - 1, p);
  } else if (t == 0) {
    out[p] = 1;
  } else if (t < p - top) {
    out[top] = binomial(-t + p, -t) * binomial(-t - 1, top - p);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

BundleExpr hom_bundle(int a, int b, int c, int n) {
  if (a < 1 || a > n || b < 1 || b > n) {
    throw std::invalid_argument("hom_bundle: a and b must lie in [1, " + std::to_string(n) + "]");
  }
  // (Omega^{b-1}(b))^* = Lambda^{b-1}(T(-1)) (-1) = Omega^{n-b}(n-b).
  return omega(n, n - b, n - b).tensor(omega(n, a - 1, a)).twisted(-c);
}

std::string to_string(BlvCase c) {
  switch (c) {
    case BlvCase::vanishes: return "vanishes";
    case BlvCase::case1: return "case1";
    case BlvCase::case2: return "case2";
    case BlvCase::case3: return "case3";
    case BlvCase::case4: return "case4";
  }
  return "?";
}

BlvCase blv_classify(int a, int b, int c, int d, int n) {
  const int diff = d - c;
  if (diff > 0) {
    return (d == 0 && c < 0) ? BlvCase::case1 : BlvCase::vanishes;
  }
  if (diff == 0) {
    const int s = c + b;
    return (s >= std::max(a, b) && s <= std::min(n, a + b - 1)) ? BlvCase::case2 : BlvCase::vanishes;
  }
  if (diff == -1) {
    const int s = c - a;
    return (s >= std::max(0, n - a - b - 1) && s <= std::min(n - b, n - a)) ? BlvCase::case3
                                                                           : BlvCase::vanishes;
  }
  return (d == n - 1 && c > n) ? BlvCase::case4 : BlvCase::vanishes;
}

}  // namespace nccr::bwb

#pragma once

// Cohomology of homogeneous bundles on P^{n-1} = P(V) by Borel-Weil-Bott.
//
// A homogeneous bundle is a weight for the Levi GL_1 x GL_{n-1}. The full
// GL_n weight is (first, rest...). Conventions, fixed by anchor tests:
//   O(t)        = (t; 0, ..., 0)
//   Omega(1)    = (0; 1, 0, ..., 0)        (so H^0(O(1)) = V*, dim n)
//   Omega^p(t)  = (t - p; 1^p, 0^{n-1-p})
//   Sym^m T     = (m; 0, ..., 0, -m)
// Weights differing by a constant vector give the same bundle; weights are
// normalized so the last entry is zero.

#include "nccr/combinat.hpp"
#include "nccr/numeric.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace nccr::bwb {

class LeviWeight {
 public:
  /// Throws std::invalid_argument unless n >= 2, rest has n-1 entries and is
  /// weakly decreasing.
  LeviWeight(int n, int first, std::vector<int> rest);

  int n() const { return n_; }
  int first() const { return first_; }
  const std::vector<int>& rest() const { return rest_; }

  /// (first, rest...) as a GL_n weight.
  std::vector<int> full() const;
  LeviWeight twisted(int t) const { return LeviWeight(n_, first_ + t, rest_); }
  LeviWeight dual() const;
  /// GL_{n-1} part as a partition (valid because of normalization).
  combinat::Partition rest_partition() const;

  std::string str() const;

  auto operator<=>(const LeviWeight&) const = default;

 private:
  int n_;
  int first_;
  std::vector<int> rest_;
};

/// Formal Z-linear combination of irreducible homogeneous bundles.
class BundleExpr {
 public:
  explicit BundleExpr(int n) : n_(n) {}
  BundleExpr(const LeviWeight& w);  // NOLINT(google-explicit-constructor)

  int n() const { return n_; }
  const std::map<LeviWeight, Integer>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add(const LeviWeight& w, const Integer& coeff);
  BundleExpr& operator+=(const BundleExpr& other);
  BundleExpr& operator-=(const BundleExpr& other);
  friend BundleExpr operator+(BundleExpr a, const BundleExpr& b) { return a += b; }
  friend BundleExpr operator-(BundleExpr a, const BundleExpr& b) { return a -= b; }
  friend BundleExpr operator*(const Integer& c, const BundleExpr& e);

  BundleExpr twisted(int t) const;
  BundleExpr dual() const;
  /// Tensor product, decomposing GL_{n-1} parts with Littlewood-Richardson.
  BundleExpr tensor(const BundleExpr& other) const;
  /// Total rank of the bundle.
  Integer rank() const;

  std::string str() const;

  bool operator==(const BundleExpr& other) const = default;

 private:
  int n_;
  std::map<LeviWeight, Integer> terms_;
};

/// Degree q -> dimension of H^q, zero entries omitted. Dimensions can be
/// negative for virtual bundles.
using CohTable = std::map<int, Integer>;

LeviWeight line_bundle(int n, int t);
/// Omega^p(t). Throws std::invalid_argument for p outside [0, n-1].
BundleExpr omega(int n, int p, int t);
/// Lambda^p T (t).
BundleExpr wedge_tangent(int n, int p, int t);
/// S_lambda(Omega(1)) (t). Throws if lambda has more than n-1 rows.
LeviWeight schur_of_omega1(int n, const combinat::Partition& lambda, int t);
/// Sym^m T (t).
LeviWeight sym_tangent(int n, int m, int t);

struct BottResult {
  bool singular = true;
  int degree = 0;
  Integer dim = 0;
};

/// Borel-Weil-Bott for one irreducible weight.
BottResult bott(const LeviWeight& w);

CohTable cohomology(const BundleExpr& e);

/// Euler characteristic sum_q (-1)^q h^q.
Integer euler_characteristic(const CohTable& t);

/// Classical closed form for H^q(P^{n-1}, Omega^p(t)).
CohTable bott_closed_form(int n, int p, int t);

/// M_a^b(-c) = Hom(Omega^{b-1}(b), Omega^{a-1}(a)) (-c). The dual of
/// Omega^{b-1}(b) is rewritten as Omega^{n-b}(n-b) before tensoring.
BundleExpr hom_bundle(int a, int b, int c, int n);

enum class BlvCase { vanishes, case1, case2, case3, case4 };

std::string to_string(BlvCase c);

/// Necessary condition for H^d(M_a^b(-c)) != 0: returns the case that admits
/// nonvanishing, or `vanishes`.
BlvCase blv_classify(int a, int b, int c, int d, int n);

}  // namespace nccr::bwb

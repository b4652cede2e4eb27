#pragma once

// Graded Hom spaces on Z = |V* (x) O(-1)| and Y = |Omega_{P(V)}|, Hilbert
// functions of the modules M_a, and tilting checks for bundle families.
//
// Degree-k piece of Hom_Z(O(a), O(b)) with d = b - a:
//   Sym^{k + max(0,-d)} V (x) Sym^{k + max(0,d)} V*.
// Y is cut out of Z by the trace sum_i v_i f_i, so Hom_Y is the cokernel of
// multiplication by the trace from degree k-1 to degree k.

#include "nccr/bwb.hpp"
#include "nccr/linalg.hpp"
#include "nccr/numeric.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nccr::coh {

/// Truncated Hilbert function: dims[k] for 0 <= k <= cap.
struct GradedDims {
  int cap = 0;
  std::vector<Integer> dims;

  GradedDims() = default;
  explicit GradedDims(int c) : cap(c), dims(static_cast<std::size_t>(c + 1), 0) {}
  const Integer& operator[](int k) const { return dims.at(static_cast<std::size_t>(k)); }
  Integer& operator[](int k) { return dims.at(static_cast<std::size_t>(k)); }
  bool operator==(const GradedDims&) const = default;
};

/// Which resolution: Y over P(V), or the flop Y+ over P(V*) (V and V*
/// exchange roles in the fiber coordinates).
enum class Side { Y, Yplus };

/// Monomials of degree `degree` in n variables as exponent vectors, in
/// graded-lex order (x_1^degree first).
class MonomialBasis {
 public:
  MonomialBasis(int n, int degree);
  int n() const { return n_; }
  int degree() const { return degree_; }
  int size() const { return static_cast<int>(exps_.size()); }
  const std::vector<int>& operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  /// Index of an exponent vector of this degree; -1 if absent.
  int index_of(const std::vector<int>& e) const;

 private:
  int n_;
  int degree_;
  std::vector<std::vector<int>> exps_;
};

GradedDims hom_z_graded(int a, int b, int n, int cap, Side side = Side::Y);

struct TraceMultMatrix {
  int n = 0;
  int k = 0;
  int a = 0;  // the shift b - a
  /// rows: target monomial pairs (degree k+1), cols: source pairs (degree k).
  linalg::SparseMatrix matrix{0, 0};
};

/// Multiplication by sum_i v_i f_i from degree k to degree k+1 of Hom_Z with
/// shift d. Throws std::invalid_argument for k < 0.
TraceMultMatrix trace_mult_matrix(int n, int k, int d, Side side = Side::Y);

/// Throws std::invalid_argument when b - a < -n + 1.
GradedDims hom_y_graded(int a, int b, int n, int cap, Side side = Side::Y);

/// Hilbert function of M_a = phi_* O_Y(a); requires -n+1 <= a <= n-1.
GradedDims hilbert_M(int a, int n, int cap);

/// Degrees k in [1, cap] where the corank differs from the naive
/// difference hom_z[k] - hom_z[k-1] (i.e. trace multiplication fails to be
/// injective).
std::vector<int> difference_formula_discrepancies(int a, int b, int n, int cap);

enum class Family { Tk, TkPlus, TPrime, Sk, SkDual };

std::string to_string(Family f);
/// Accepts Tk, TkPlus (alias TPlus), TPrime, Sk, SkDual.
std::optional<Family> family_from_string(const std::string& s);

struct TiltingFamily {
  Family name = Family::Tk;
  int n = 2;
  int k = 0;
};

/// Summands of the family as bundles on P^{n-1}. Throws
/// std::invalid_argument on out-of-range parameters (n >= 2; 0 <= k <= n-1 for
/// Sk and SkDual).
std::vector<bwb::BundleExpr> family_summands(const TiltingFamily& f);
std::vector<std::string> family_summand_names(const TiltingFamily& f);

struct TiltingWitness {
  int from = 0;  // summand index A
  int to = 0;    // summand index B; the bundle is A^dual (x) B
  int degree = 0;
  int twist = 0;
  Integer dim = 0;
};

struct TiltingReport {
  TiltingFamily family;
  bool pass = false;
  std::optional<TiltingWitness> witness;
  /// Twists 0..stabilization_bound are checked; beyond it every Schur
  /// constituent is dominant, so only H^0 survives.
  int stabilization_bound = 0;
  long pairs_checked = 0;
};

TiltingReport tilting_check(const TiltingFamily& f);

/// H^i(Y, A^dual (x) B) = 0 for i > 0 over all ordered pairs of summands, via
/// H^i(P, A^dual (x) B (x) Sym^m T) for m = 0..bound. Only `family.n` of the
/// returned report is meaningful.
TiltingReport ext_vanishing_check(const std::vector<bwb::BundleExpr>& summands, int n);

enum class NccrFamily { LambdaK, LambdaPrime };

/// R-rank 2 * sum of ranks of the summands of the underlying bundle.
Integer nccr_rank(NccrFamily family, int n);

}  // namespace nccr::coh

#pragma once

// K_0 calculus for the Mukai flop Y <-> Y+ and Ext-dimension ledgers.
//
// K_0(Y) = K_0(P^{n-1}) is free of rank n with window basis
// [O(0)], ..., [O(n-1)]; every [O(a)] reduces to it through the Koszul
// relation sum_i (-1)^i C(n,i) [O(a-i)] = 0. The same holds on Y+.
//
// Ext profiles are dimensions only. Cones are assembled from long exact
// sequences; a connecting map whose rank is not forced (by a zero space or
// by an explicit argument for 1-dimensional spaces) is an error.

#include "nccr/numeric.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nccr::kf {

enum class Side { Y, Yplus };

using Matrix = std::vector<std::vector<Integer>>;

struct KClass {
  int n = 0;
  Side side = Side::Y;
  std::vector<Integer> coords;

  KClass() = default;
  KClass(int n_, Side s) : n(n_), side(s), coords(static_cast<std::size_t>(n_), 0) {}
  KClass& operator+=(const KClass& o);
  KClass& operator-=(const KClass& o);
  friend KClass operator+(KClass a, const KClass& b) { return a += b; }
  friend KClass operator-(KClass a, const KClass& b) { return a -= b; }
  friend KClass operator*(const Integer& c, KClass a);
  bool operator==(const KClass&) const = default;
  std::string str() const;
};

/// Coordinates of [O(a)] in the window basis [O(0)], ..., [O(n-1)].
std::vector<Integer> reduce_line(int a, int n);
KClass kclass_line(int a, int n, Side side = Side::Y);
/// [j_* O_P(b)] = sum_p (-1)^p [Lambda^p T (b)].
KClass kclass_jp(int b, int n, Side side = Side::Y);
/// [Lambda^p T (b)] via the Euler-sequence recurrence.
KClass kclass_wedge_tangent(int p, int b, int n, Side side = Side::Y);
/// The Koszul relation vector sum_i (-1)^i C(n,i) [O(a-i)], unreduced: the
/// coefficients on O(a-n)..O(a) (index i <-> O(a-n+i)).
std::vector<Integer> koszul_relation(int a, int n);

/// chi(P^{n-1}, O(t)).
Integer chi_line(int t, int n);
/// chi(j_* O_P(c), x) for a class x on Y.
Integer chi_jp_left(int c, const KClass& x);
/// chi(x, j_* O_P(b)).
Integer chi_jp_right(const KClass& x, int b);

enum class Direction { KN, KNprime };

/// Matrix (columns = images of window basis vectors) of KN_k: K_0(Y) ->
/// K_0(Y+) (or KN'_k: K_0(Y+) -> K_0(Y)), defined by O(a) -> O(-a) on the
/// window a in [-n+k+1, k].
Matrix kn_matrix(int k, int n, Direction d);
/// Tensoring with O(t) in the window basis.
Matrix twist_matrix(int t, int n);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix identity(int n);
KClass apply(const Matrix& m, const KClass& x, Side target);

struct FlopFlopResult {
  bool pass = false;
  Matrix product;
};
/// KN'_{-k} o KN_{n+k} is the identity on K_0.
FlopFlopResult flop_flop_check(int k, int n);

// ---------------------------------------------------------------- ledger

enum class ObjKind { OY, OYplus, JP, JPdual, F, Ch };

/// OY(a), OYplus(a), JP(b) = j_* O_P(b), JPdual(b) = j'_* O_{P^dual}(b),
/// F (from the P-twist proof, built on JP(-1)), Ch(c) = cone(h: JP(c)[-2] -> JP(c)).
struct LedgerObject {
  ObjKind kind = ObjKind::OY;
  int param = 0;
  static LedgerObject oy(int a) { return {ObjKind::OY, a}; }
  static LedgerObject oyplus(int a) { return {ObjKind::OYplus, a}; }
  static LedgerObject jp(int b) { return {ObjKind::JP, b}; }
  static LedgerObject jpdual(int b) { return {ObjKind::JPdual, b}; }
  static LedgerObject f() { return {ObjKind::F, -1}; }
  static LedgerObject ch(int c = -1) { return {ObjKind::Ch, c}; }
  std::string str() const;
  auto operator<=>(const LedgerObject&) const = default;
};

/// Parses names like "OY(-1)", "JP(0)", "Ch(-1)", "F".
std::optional<LedgerObject> parse_ledger_object(const std::string& s);

/// Degree -> dimension, zero entries omitted.
using ExtProfile = std::map<int, Integer>;

struct ExtComputation {
  ExtProfile profile;
  /// True when the local-to-global spectral sequence is assumed to
  /// degenerate (JP(b) against JP(c), b != c).
  bool degeneration_assumed = false;
  /// Rank decisions taken for connecting maps, with their reasons.
  std::vector<std::string> rank_decisions;
};

/// Throws std::invalid_argument for unsupported pairs.
ExtComputation ext_profile(const LedgerObject& a, const LedgerObject& b, int n);

Integer euler_characteristic(const ExtProfile& p);
std::string to_string(const ExtProfile& p);

struct LedgerStep {
  std::string name;
  std::string anchor;  // the mathematical statement being checked
  std::string computed;
  std::string expected;
  bool pass = false;
};

struct LedgerReport {
  int n = 0;
  std::vector<LedgerStep> steps;
  bool pass() const;
  /// First failing step, if any.
  const LedgerStep* failure() const;
};

/// Replays the computation showing P_{-1}(F) = O_Y(-1) for F = KN'_0(O_{Y+}(1)).
/// Requires n >= 3.
LedgerReport ptwist_ledger_check(int n);

// ---------------------------------------------------- Fourier-Mukai replay

/// A graded formal sum of objects: (object, shift) -> multiplicity.
struct FormalSum {
  std::map<std::pair<LedgerObject, int>, Integer> terms;
  void add(const LedgerObject& o, int shift, const Integer& mult);
  FormalSum shifted(int s) const;
  FormalSum& operator+=(const FormalSum& o);
  bool operator==(const FormalSum&) const = default;
  std::string str() const;
  KClass kclass(int n) const;
};

struct KnImageRow {
  int a = 0;
  FormalSum phi_pxp;       // Phi_{O_{P x P^dual}}(O_Y(a))
  FormalSum phi_pxp_m1;    // Phi_{O(-1,-1)}(O_Y(a))
  FormalSum phi_e;         // Phi_{O_E}(O_Y(a))
  FormalSum phi_ytilde;    // Phi_{O_Ytilde}(O_Y(a))
  std::vector<std::string> cancellations;
  FormalSum result;        // KN_0(O_Y(a))
  bool pass = false;       // result == O_{Y+}(-a) and K-classes agree
};

/// KN_0(O_Y(a)) for a in [-n+1, 0] from the decomposition
/// 0 -> O_Yhat -> O_Ytilde + O_{P x P^dual} -> O_E -> 0 and the pushforward
/// facts R p_* O_E(kE) = 0 (1 <= k <= n-2), j'_* O(-n)[-n+2] (k = n-1).
std::vector<KnImageRow> kn0_image_table(int n);

}  // namespace nccr::kf

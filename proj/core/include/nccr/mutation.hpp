#pragma once
// Bookkeeping for Iyama-Wemyss mutations at W = M_0 + ... + M_{n-2}.
//
// Modules are tracked by label and Hilbert function only. Two long Euler
// sequences are spliced:
//   descending (on Y+, M_a <-> O(-a) on P(V*)):
//     0 -> M_{n-1} -> wedge^{n-1}V (x) M_{n-2} -> ... -> V (x) M_0 -> M_{-1} -> 0,
//     kernels L_k <-> Omega^k(1);
//   ascending (on Y, M_a <-> O(a) on P(V)):
//     0 -> M_{-1} -> wedge^{n-1}V* (x) M_0 -> ... -> V* (x) M_{n-2} -> M_{n-1} -> 0,
//     kernels WedgeT_j <-> Omega^{n-1-j}(n-1) = wedge^j T(-1).
// Hilbert functions in fibre degree m are h^0(P, G (x) Sym^m T).
#include "nccr/cohengine.hpp"
#include "nccr/numeric.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nccr::mut {

enum class LabelKind { M, L, WedgeT };

struct ModuleLabel {
  LabelKind kind = LabelKind::M;
  int index = 0;

  static ModuleLabel m(int a) { return {LabelKind::M, a}; }
  static ModuleLabel l(int k) { return {LabelKind::L, k}; }
  static ModuleLabel wedge_t(int j) { return {LabelKind::WedgeT, j}; }

  /// L(n-1) = WedgeT(n-1) = M(n-1) and L(0) = WedgeT(0) = M(-1).
  ModuleLabel normalized(int n) const;
  std::string str() const;
  auto operator<=>(const ModuleLabel&) const = default;
};

/// Parses "M(a)", "L(k)" or "WedgeT(j)"; nullopt on malformed text.
std::optional<ModuleLabel> parse_module_label(const std::string& text);

/// minus: the descending chain (nu^-); plus: the ascending chain (nu^+).
enum class Chain { minus, plus };
std::string to_string(Chain c);

struct EulerTerm {
  ModuleLabel module;
  /// Multiplicity space, e.g. "wedge^2 V"; empty for the two end terms.
  std::string coefficient;
  Integer multiplicity;
};

/// Nonzero terms of the long Euler sequence, left to right (n + 1 terms).
std::vector<EulerTerm> euler_sequence(int n, Chain chain);

/// Rank over R (= rank of the underlying bundle).
Integer label_rank(const ModuleLabel& l, int n);

/// Dimensions in fibre degrees 0..max_degree of the label, computed by
/// Borel-Weil-Bott on the side of `chain`. M(a) is valid on both sides.
std::vector<Integer> fiber_hilbert(const ModuleLabel& l, int n, int max_degree, Chain chain);

/// Hilbert function normalized so the lowest nonzero degree is 0. M(a) is
/// taken from cohengine::hilbert_M.
coh::GradedDims hilbert_of_label(const ModuleLabel& l, int n, int cap);

struct MutationState {
  int n = 0;
  Chain chain = Chain::minus;
  /// The non-W summand: L(k) on the descending chain, WedgeT(j) on the
  /// ascending chain.
  ModuleLabel moving;
  int step = 0;
  /// Approximation datum of the last step, "" for the initial state.
  std::string approximation;

  /// W plus the moving summand, all labels normalized.
  std::map<ModuleLabel, int> summands() const;
  std::string summands_str() const;
};

/// E_{n-1} = W + M_{n-1}, the start of the descending chain.
MutationState initial_state(int n);

/// One IW mutation at W. Throws std::logic_error at the end of a chain
/// (L(0) on the descending chain, WedgeT(n-1) on the ascending chain).
MutationState mutate_step(const MutationState& s);

/// Continue an exhausted descending chain (state L(0) = M(-1)) on the
/// ascending chain at WedgeT(0).
MutationState restart_ascending(const MutationState& s);

struct SpliceCheck {
  Chain chain;
  std::string sequence;  // "0 -> K -> Mid -> C -> 0"
  std::vector<Integer> alternating;  // per fibre degree, must be zero
  bool pass = false;
};

/// Degreewise alternating sums of every splice of both sequences, fibre
/// degrees 0..cap, with all three terms computed directly.
std::vector<SpliceCheck> splice_checks(int n, int cap);

struct RecursionCheck {
  ModuleLabel label;
  std::vector<Integer> direct, from_top, from_bottom;
  bool pass = false;
};

/// L(k) computed directly versus recursively through the splices starting
/// from either end of the descending sequence (and likewise WedgeT(j)).
std::vector<RecursionCheck> recursion_checks(int n, int cap);

struct OrbitStep {
  int step = 0;
  Chain chain = Chain::minus;
  std::string summands;
  std::string approximation;
  Integer rank;
};

struct OrbitReport {
  int n = 0;
  int cap = 0;
  std::vector<OrbitStep> steps;
  /// First step index > 0 at which the summand multiset and Hilbert data
  /// equal the start; -1 if never within 2n-2 steps.
  int closes_after = -1;
  bool hilbert_equal = false;
  bool splices_exact = false;
  bool recursion_consistent = false;
  bool pass() const;
};

/// Runs the 2n-2 step orbit from E_{n-1}. Requires n >= 2.
OrbitReport orbit_check(int n, int cap);

struct EndpointReport {
  int n = 0;
  std::vector<coh::TiltingReport> tilting;  // S_k for k = 0..n-1
  Integer rank_start;  // E_{n-1}
  Integer rank_end;    // E_0
  Integer expected_rank;
  bool pass() const;
};

/// Every intermediate E_k has End_R(E_k) = End(S_k) with S_k tilting, and the
/// endpoint R-ranks (2 * sum of summand ranks) equal 2n. Requires n >= 3.
EndpointReport endpoint_algebra_check(int n);

}  // namespace nccr::mut

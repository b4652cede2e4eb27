#include "nccr/cohengine.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace nccr::coh {

namespace {

void enumerate(int n, int remaining, int pos, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (pos == n - 1) {
    cur[static_cast<std::size_t>(pos)] = remaining;
    out.push_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[static_cast<std::size_t>(pos)] = e;
    enumerate(n, remaining - e, pos + 1, cur, out);
  }
  cur[static_cast<std::size_t>(pos)] = 0;
}

// Fiber degrees (V-degree, V*-degree) of the k-th piece.
std::pair<int, int> piece_degrees(int k, int d, Side side) {
  const int s = k + std::max(0, -d);
  const int t = k + std::max(0, d);
  return side == Side::Y ? std::pair{s, t} : std::pair{t, s};
}

}  // namespace

MonomialBasis::MonomialBasis(int n, int degree) : n_(n), degree_(degree) {
  if (n < 1) throw std::invalid_argument("MonomialBasis: n must be >= 1");
  if (degree < 0) return;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  enumerate(n, degree, 0, cur, exps_);
}

int MonomialBasis::index_of(const std::vector<int>& e) const {
  // Graded-lex descending order: binary search with reversed comparison.
  auto it = std::lower_bound(exps_.begin(), exps_.end(), e, std::greater<>());
  if (it == exps_.end() || *it != e) return -1;
  return static_cast<int>(it - exps_.begin());
}

GradedDims hom_z_graded(int a, int b, int n, int cap, Side side) {
  if (cap < 0) throw std::invalid_argument("hom_z_graded: cap must be >= 0");
  GradedDims out(cap);
  for (int k = 0; k <= cap; ++k) {
    auto [s, t] = piece_degrees(k, b - a, side);
    out[k] = combinat::dim_sym(n, s) * combinat::dim_sym(n, t);
  }
  return out;
}

TraceMultMatrix trace_mult_matrix(int n, int k, int d, Side side) {
  if (k < 0) throw std::invalid_argument("trace_mult_matrix: k must be >= 0");
  auto [s, t] = piece_degrees(k, d, side);
  const MonomialBasis src_v(n, s), src_w(n, t), dst_v(n, s + 1), dst_w(n, t + 1);
  TraceMultMatrix out;
  out.n = n;
  out.k = k;
  out.a = d;
  out.matrix = linalg::SparseMatrix(dst_v.size() * dst_w.size(), src_v.size() * src_w.size());
  std::vector<int> ev, ew;
  for (int i = 0; i < src_v.size(); ++i) {
    for (int j = 0; j < src_w.size(); ++j) {
      const int col = i * src_w.size() + j;
      for (int x = 0; x < n; ++x) {
        ev = src_v[i];
        ew = src_w[j];
        ++ev[static_cast<std::size_t>(x)];
        ++ew[static_cast<std::size_t>(x)];
        const int row = dst_v.index_of(ev) * dst_w.size() + dst_w.index_of(ew);
        out.matrix.add(row, col, 1);
      }
    }
  }
  return out;
}

GradedDims hom_y_graded(int a, int b, int n, int cap, Side side) {
  if (b - a < -n + 1) {
    throw std::invalid_argument("hom_y_graded: b - a = " + std::to_string(b - a) +
                                " is below the valid range b - a >= " + std::to_string(-n + 1));
  }
  GradedDims out = hom_z_graded(a, b, n, cap, side);
  for (int k = 1; k <= cap; ++k) {
    out[k] -= linalg::rank(trace_mult_matrix(n, k - 1, b - a, side).matrix);
  }
  return out;
}

GradedDims hilbert_M(int a, int n, int cap) {
  if (a < -n + 1 || a > n - 1) {
    throw std::invalid_argument("hilbert_M: a = " + std::to_string(a) + " outside [" +
                                std::to_string(-n + 1) + ", " + std::to_string(n - 1) + "]");
  }
  return hom_y_graded(0, a, n, cap);
}

std::vector<int> difference_formula_discrepancies(int a, int b, int n, int cap) {
  const GradedDims z = hom_z_graded(a, b, n, cap);
  const GradedDims y = hom_y_graded(a, b, n, cap);
  std::vector<int> out;
  for (int k = 1; k <= cap; ++k) {
    if (y[k] != z[k] - z[k - 1]) out.push_back(k);
  }
  return out;
}

std::string to_string(Family f) {
  switch (f) {
    case Family::Tk: return "Tk";
    case Family::TkPlus: return "TkPlus";
    case Family::TPrime: return "TPrime";
    case Family::Sk: return "Sk";
    case Family::SkDual: return "SkDual";
  }
  return "?";
}

std::optional<Family> family_from_string(const std::string& s) {
  if (s == "Tk") return Family::Tk;
  if (s == "TkPlus" || s == "TPlus") return Family::TkPlus;
  if (s == "TPrime") return Family::TPrime;
  if (s == "Sk") return Family::Sk;
  if (s == "SkDual") return Family::SkDual;
  return std::nullopt;
}

namespace {

void validate(const TiltingFamily& f) {
  if (f.n < 2) throw std::invalid_argument("tilting family: n must be >= 2");
  if ((f.name == Family::Sk || f.name == Family::SkDual) && (f.k < 0 || f.k > f.n - 1)) {
    throw std::invalid_argument("tilting family " + to_string(f.name) + ": k = " + std::to_string(f.k) +
                                " outside [0, " + std::to_string(f.n - 1) + "]");
  }
}

}  // namespace

std::vector<bwb::BundleExpr> family_summands(const TiltingFamily& f) {
  validate(f);
  const int n = f.n;
  std::vector<bwb::BundleExpr> out;
  switch (f.name) {
    case Family::Tk:
    case Family::TkPlus:
      // Y+ is again the cotangent bundle of a P^{n-1}; the check is the same
      // computation on P(V*).
      for (int a = -n + f.k + 1; a <= f.k; ++a) out.emplace_back(bwb::line_bundle(n, a));
      break;
    case Family::TPrime:
      for (int a = 1; a <= n; ++a) out.push_back(bwb::omega(n, a - 1, a));
      break;
    case Family::Sk:
    case Family::SkDual:
      for (int a = -n + 2; a <= 0; ++a) out.emplace_back(bwb::line_bundle(n, a));
      out.push_back(bwb::omega(n, f.k, 1));
      if (f.name == Family::SkDual) {
        for (auto& e : out) e = e.dual();
      }
      break;
  }
  return out;
}

std::vector<std::string> family_summand_names(const TiltingFamily& f) {
  validate(f);
  const int n = f.n;
  std::vector<std::string> out;
  auto line = [](int a) { return "O(" + std::to_string(a) + ")"; };
  switch (f.name) {
    case Family::Tk:
    case Family::TkPlus:
      for (int a = -n + f.k + 1; a <= f.k; ++a) out.push_back(line(a));
      break;
    case Family::TPrime:
      for (int a = 1; a <= n; ++a) out.push_back("omega(" + std::to_string(a - 1) + "," + std::to_string(a) + ")");
      break;
    case Family::Sk:
      for (int a = -n + 2; a <= 0; ++a) out.push_back(line(a));
      out.push_back("omega(" + std::to_string(f.k) + ",1)");
      break;
    case Family::SkDual:
      for (int a = -n + 2; a <= 0; ++a) out.push_back(line(-a));
      out.push_back("omega(" + std::to_string(f.k) + ",1)^dual");
      break;
  }
  return out;
}

TiltingReport tilting_check(const TiltingFamily& f) {
  TiltingReport report = ext_vanishing_check(family_summands(f), f.n);
  report.family = f;
  return report;
}

TiltingReport ext_vanishing_check(const std::vector<bwb::BundleExpr>& summands, int n) {
  TiltingReport report;
  report.family.n = n;

  std::vector<std::vector<bwb::BundleExpr>> pair_bundles(summands.size());
  int largest_negative = 0;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    const bwb::BundleExpr dual = summands[i].dual();
    for (std::size_t j = 0; j < summands.size(); ++j) {
      bwb::BundleExpr e = dual.tensor(summands[j]);
      for (const auto& [w, c] : e.terms()) {
        largest_negative = std::max(largest_negative, w.rest().front() - w.first());
      }
      pair_bundles[i].push_back(std::move(e));
    }
  }
  report.stabilization_bound = std::max(2 * largest_negative, n);
  for (const auto& row : pair_bundles) {
    for (const auto& e : row) {
      for (const auto& [w, c] : e.terms()) {
        if (w.first() + report.stabilization_bound < w.rest().front()) {
          throw std::logic_error("tilting_check: stabilization bound does not reach the dominant chamber");
        }
      }
    }
  }

  for (std::size_t i = 0; i < pair_bundles.size(); ++i) {
    for (std::size_t j = 0; j < pair_bundles[i].size(); ++j) {
      ++report.pairs_checked;
      for (int m = 0; m <= report.stabilization_bound; ++m) {
        const bwb::CohTable h = bwb::cohomology(pair_bundles[i][j].twisted(m));
        for (const auto& [q, dim] : h) {
          if (q > 0 && dim != 0) {
            report.pass = false;
            report.witness = TiltingWitness{static_cast<int>(i), static_cast<int>(j), q, m, dim};
            return report;
          }
        }
      }
    }
  }
  report.pass = true;
  return report;
}

Integer nccr_rank(NccrFamily family, int n) {
  if (n < 2) throw std::invalid_argument("nccr_rank: n must be >= 2");
  const TiltingFamily f{family == NccrFamily::LambdaK ? Family::Tk : Family::TPrime, n, 0};
  Integer total = 0;
  for (const auto& s : family_summands(f)) total += s.rank();
  return 2 * total;
}

}  // namespace nccr::coh

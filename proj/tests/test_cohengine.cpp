#include "nccr/cohengine.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace nccr;
using namespace nccr::coh;

namespace {

std::vector<std::vector<mpq_class>> dense(const linalg::SparseMatrix& m) {
  std::vector<std::vector<mpq_class>> d(static_cast<std::size_t>(m.rows()),
                                        std::vector<mpq_class>(static_cast<std::size_t>(m.cols()), 0));
  for (int r = 0; r < m.rows(); ++r) {
    for (const auto& e : m.row_data()[static_cast<std::size_t>(r)]) d[static_cast<std::size_t>(r)][static_cast<std::size_t>(e.col)] = e.value;
  }
  return d;
}

}  // namespace

TEST_CASE("monomial bases") {
  for (int n = 1; n <= 5; ++n) {
    for (int d = 0; d <= 5; ++d) {
      const MonomialBasis b(n, d);
      CHECK(b.size() == oracle::binom(n + d - 1, d));
      for (int i = 0; i < b.size(); ++i) CHECK(b.index_of(b[i]) == i);
      if (d > 0) CHECK(b[0][0] == d);
    }
  }
  CHECK(MonomialBasis(3, 2).index_of({1, 0, 0}) == -1);
}

TEST_CASE("trace multiplication is injective") {
  for (int n = 2; n <= 4; ++n) {
    for (int k = 0; k <= (n == 4 ? 3 : 5); ++k) {
      for (int d = 0; d <= n - 1; ++d) {
        const TraceMultMatrix t = trace_mult_matrix(n, k, d);
        CHECK(oracle::rank(dense(t.matrix)) == t.matrix.cols());
      }
    }
  }
  CHECK_THROWS_AS(trace_mult_matrix(3, -1, 0), std::invalid_argument);
}

TEST_CASE("graded Hom on Z and Y against closed forms") {
  for (int n = 2; n <= 5; ++n) {
    for (int d = -n + 1; d <= n - 1; ++d) {
      const GradedDims z = hom_z_graded(0, d, n, 5);
      const GradedDims y = hom_y_graded(0, d, n, 5);
      const GradedDims yp = hom_y_graded(0, d, n, 5, Side::Yplus);
      for (int k = 0; k <= 5; ++k) {
        const long p = k + std::max(0, -d), q = k + std::max(0, d);
        CHECK(z[k] == oracle::binom(n + p - 1, p) * oracle::binom(n + q - 1, q));
        CHECK(y[k] == oracle::traceless(n, p, q));
        CHECK(yp[k] == y[k]);
      }
      CHECK(difference_formula_discrepancies(0, d, n, 5).empty());
    }
  }
  CHECK_THROWS_AS(hom_y_graded(0, -3, 3, 4), std::invalid_argument);
}

TEST_CASE("twist invariance of graded Hom") {
  for (int n = 2; n <= 4; ++n) {
    for (int a = -2; a <= 2; ++a) {
      for (int b = a - n + 1; b <= a + n - 1; ++b) CHECK(hom_y_graded(a, b, n, 4) == hom_y_graded(0, b - a, n, 4));
    }
  }
}

TEST_CASE("Hilbert functions of M_a") {
  // R = M_0 has dims of the traceless Sym^k V (x) Sym^k V*.
  const GradedDims r = hilbert_M(0, 3, 4);
  for (int k = 0; k <= 4; ++k) CHECK(r[k] == oracle::traceless(3, k, k));
  CHECK(hilbert_M(1, 3, 0)[0] == 3);
  CHECK_THROWS_AS(hilbert_M(3, 3, 2), std::invalid_argument);
}

TEST_CASE("tilting families") {
  for (int n = 2; n <= 5; ++n) {
    for (int k = -n; k <= n; ++k) CHECK(tilting_check({Family::Tk, n, k}).pass);
    CHECK(tilting_check({Family::TPrime, n, 0}).pass);
    for (int k = 0; k <= n - 1; ++k) {
      CHECK(tilting_check({Family::Sk, n, k}).pass);
      CHECK(tilting_check({Family::SkDual, n, k}).pass);
    }
  }
  CHECK_THROWS_AS(tilting_check({Family::Sk, 3, 3}), std::invalid_argument);
}

TEST_CASE("the higher-Ext check detects non-tilting bundles") {
  for (int n = 2; n <= 5; ++n) {
    // Hom(O(n), O(0)) = O(-n) has H^{n-1} = 1.
    const TiltingReport r = ext_vanishing_check({bwb::line_bundle(n, 0), bwb::line_bundle(n, n)}, n);
    REQUIRE_FALSE(r.pass);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->from == 1);
    CHECK(r.witness->to == 0);
    CHECK(r.witness->degree == n - 1);
    CHECK(r.witness->dim == 1);
  }
  // A window of length n + 1 is too long as well.
  std::vector<bwb::BundleExpr> window;
  for (int a = 0; a <= 3; ++a) window.emplace_back(bwb::line_bundle(3, a));
  CHECK_FALSE(ext_vanishing_check(window, 3).pass);
}

TEST_CASE("family names") {
  CHECK(family_from_string("TPlus") == Family::TkPlus);
  CHECK(family_from_string("SkDual") == Family::SkDual);
  CHECK_FALSE(family_from_string("T").has_value());
  CHECK(family_summand_names({Family::Tk, 3, 0}) == std::vector<std::string>{"O(-2)", "O(-1)", "O(0)"});
}

TEST_CASE("NCCR ranks") {
  CHECK(nccr_rank(NccrFamily::LambdaK, 3) == 6);
  CHECK(nccr_rank(NccrFamily::LambdaPrime, 3) == 8);
  CHECK(nccr_rank(NccrFamily::LambdaPrime, 2) == 4);
  for (int n = 2; n <= 6; ++n) {
    CHECK(nccr_rank(NccrFamily::LambdaK, n) == 2 * n);
    CHECK(nccr_rank(NccrFamily::LambdaPrime, n) == oracle::binom(n, 0) << n);
  }
}

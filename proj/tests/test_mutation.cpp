#include "nccr/mutation.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace nccr;
using namespace nccr::mut;

TEST_CASE("long Euler sequences") {
  for (int n = 2; n <= 6; ++n) {
    for (Chain c : {Chain::minus, Chain::plus}) {
      const auto seq = euler_sequence(n, c);
      REQUIRE(seq.size() == static_cast<std::size_t>(n + 1));
      Integer alternating_rank = 0;
      for (std::size_t i = 0; i < seq.size(); ++i) {
        const Integer r = seq[i].multiplicity * label_rank(seq[i].module, n);
        alternating_rank += i % 2 ? Integer(-r) : r;
      }
      CHECK(alternating_rank == 0);
    }
  }
  const auto two = euler_sequence(2, Chain::minus);
  CHECK(two[0].module == ModuleLabel::m(1));
  CHECK(two[1].module == ModuleLabel::m(0));
  CHECK(two[1].multiplicity == 2);
  CHECK(two[2].module == ModuleLabel::m(-1));
  const auto four = euler_sequence(4, Chain::minus);
  for (int k = 1; k <= 3; ++k) CHECK(four[static_cast<std::size_t>(4 - k)].multiplicity == oracle::binom(4, k));
}

TEST_CASE("fibre Hilbert functions of M_a on both sides") {
  for (int n = 2; n <= 4; ++n) {
    for (int a = -1; a <= n - 1; ++a) {
      const auto minus = fiber_hilbert(ModuleLabel::m(a), n, 6 + n, Chain::minus);
      const auto plus = fiber_hilbert(ModuleLabel::m(a), n, 6 + n, Chain::plus);
      const int sm = std::max(0, a), sp = std::max(0, -a);
      for (int k = 0; k <= 6; ++k) {
        const long p = k + std::max(0, -a), q = k + std::max(0, a);
        CHECK(minus[static_cast<std::size_t>(k + sm)] == oracle::traceless(n, p, q));
        CHECK(plus[static_cast<std::size_t>(k + sp)] == oracle::traceless(n, p, q));
      }
    }
  }
}

TEST_CASE("normalization of end labels") {
  for (int n = 2; n <= 5; ++n) {
    CHECK(hilbert_of_label(ModuleLabel::l(n - 1), n, 6) == hilbert_of_label(ModuleLabel::m(n - 1), n, 6));
    CHECK(hilbert_of_label(ModuleLabel::l(0), n, 6) == hilbert_of_label(ModuleLabel::m(-1), n, 6));
    CHECK(hilbert_of_label(ModuleLabel::wedge_t(0), n, 6) == hilbert_of_label(ModuleLabel::m(-1), n, 6));
    CHECK(hilbert_of_label(ModuleLabel::wedge_t(n - 1), n, 6) == hilbert_of_label(ModuleLabel::m(n - 1), n, 6));
    CHECK(ModuleLabel::l(n - 1).normalized(n) == ModuleLabel::m(n - 1));
    CHECK(ModuleLabel::wedge_t(0).normalized(n) == ModuleLabel::m(-1));
  }
  CHECK_THROWS_AS(hilbert_of_label(ModuleLabel::l(3), 3, 4), std::invalid_argument);
}

TEST_CASE("mutation steps") {
  MutationState s = initial_state(4);
  CHECK(s.moving == ModuleLabel::l(3));
  s = mutate_step(s);
  CHECK(s.moving == ModuleLabel::l(2));
  CHECK(s.approximation.find("wedge^3 V (x) M(2)") != std::string::npos);
  s = mutate_step(mutate_step(s));
  CHECK(s.summands() == std::map<ModuleLabel, int>{{ModuleLabel::m(-1), 1}, {ModuleLabel::m(0), 1}, {ModuleLabel::m(1), 1}, {ModuleLabel::m(2), 1}});
  CHECK_THROWS_AS(mutate_step(s), std::logic_error);
  s = restart_ascending(s);
  for (int i = 0; i < 3; ++i) s = mutate_step(s);
  CHECK(s.summands() == initial_state(4).summands());
  CHECK(s.step == 6);
  CHECK_THROWS_AS(mutate_step(s), std::logic_error);
  CHECK_THROWS_AS(restart_ascending(initial_state(3)), std::logic_error);
}

TEST_CASE("splices are exact and both recursions agree") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& c : splice_checks(n, 6)) CHECK(c.pass);
    for (const auto& r : recursion_checks(n, 6)) CHECK(r.pass);
  }
}

TEST_CASE("orbit closes after 2n-2 steps") {
  for (int n = 2; n <= 4; ++n) {
    const OrbitReport r = orbit_check(n, 6);
    CHECK(r.pass());
    CHECK(r.closes_after == 2 * n - 2);
    REQUIRE(r.steps.size() == static_cast<std::size_t>(2 * n - 1));
    CHECK(r.steps.front().rank == 2 * n);
    CHECK(r.steps[static_cast<std::size_t>(n - 1)].rank == 2 * n);
    // Intermediate E_k = W + L_k has R-rank 2 (n - 1 + C(n-1, k)).
    for (int k = 1; k <= n - 2; ++k) {
      CHECK(r.steps[static_cast<std::size_t>(n - 1 - k)].rank == 2 * (n - 1 + oracle::binom(n - 1, k)));
    }
  }
}

TEST_CASE("endpoint algebras") {
  for (int n = 3; n <= 4; ++n) {
    const EndpointReport r = endpoint_algebra_check(n);
    CHECK(r.pass());
    CHECK(r.rank_start == 2 * n);
    CHECK(r.rank_end == 2 * n);
    CHECK(r.tilting.size() == static_cast<std::size_t>(n));
  }
  CHECK_THROWS_AS(endpoint_algebra_check(2), std::invalid_argument);
}

TEST_CASE("module label parsing") {
  CHECK(parse_module_label("M(-1)") == ModuleLabel::m(-1));
  CHECK(parse_module_label(" L( 2 )") == ModuleLabel::l(2));
  CHECK(parse_module_label("WedgeT(0)") == ModuleLabel::wedge_t(0));
  CHECK_FALSE(parse_module_label("N(1)").has_value());
}

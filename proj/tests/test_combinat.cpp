#include "nccr/combinat.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <functional>
#include <vector>

using namespace nccr;
using namespace nccr::combinat;

namespace {

// All partitions of size <= max_size with at most max_rows rows.
std::vector<Partition> partitions_up_to(int max_size, int max_rows) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == max_rows) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(max_size, max_size);
  return out;
}

}  // namespace

TEST_CASE("sym and wedge dimensions are binomials") {
  for (int n = 1; n <= 7; ++n) {
    for (int k = 0; k <= 8; ++k) {
      CHECK(dim_sym(n, k) == oracle::binom(n + k - 1, k));
      CHECK(dim_wedge(n, k) == oracle::binom(n, k));
    }
  }
}

TEST_CASE("weyl_dim agrees with the hook-content formula") {
  for (int m = 1; m <= 5; ++m) {
    for (const auto& p : partitions_up_to(7, m)) CHECK(weyl_dim(m, p) == oracle::hook_content_dim(m, p.parts()));
  }
}

TEST_CASE("weyl_dim of a dual weight and of det twists") {
  const std::vector<int> w{3, 1, 0, -2};
  const std::vector<int> dual{2, 0, -1, -3};
  CHECK(weyl_dim(4, w) == weyl_dim(4, dual));
  const std::vector<int> shifted{5, 3, 2, 0};
  CHECK(weyl_dim(4, w) == weyl_dim(4, shifted));
  CHECK(weyl_dim(4, shifted) == oracle::hook_content_dim(4, {5, 3, 2}));
  const std::vector<int> bad{0, 1};
  CHECK_THROWS_AS(weyl_dim(2, bad), std::invalid_argument);
}

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
  CHECK(Partition({3, 1, 0, 0}).length() == 2);
  CHECK(Partition::column(3).size() == 3);
}

TEST_CASE("Pieri rule: s_lambda * h_k adds a horizontal strip") {
  for (const auto& lambda : partitions_up_to(5, 4)) {
    for (int k = 0; k <= 3; ++k) {
      const LRProduct got = lr_product(lambda, Partition::row(k));
      LRProduct expected;
      // nu / lambda horizontal strip of size k: lambda_i <= nu_i <= lambda_{i-1}.
      std::vector<int> nu(static_cast<std::size_t>(lambda.length() + 1), 0);
      std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == lambda.length() + 1) {
          if (left == 0) ++expected[Partition(nu)];
          return;
        }
        const int lo = lambda[i];
        const int hi = i == 0 ? lambda[0] + left : lambda[i - 1];
        for (int v = lo; v <= hi && v - lo <= left; ++v) {
          nu[static_cast<std::size_t>(i)] = v;
          rec(i + 1, left - (v - lo));
        }
      };
      rec(0, k);
      CHECK(got == expected);
    }
  }
}

TEST_CASE("Littlewood-Richardson: symmetry and dimension additivity") {
  const auto parts = partitions_up_to(4, 3);
  for (const auto& a : parts) {
    for (const auto& b : parts) {
      const LRProduct ab = lr_product(a, b);
      CHECK(ab == lr_product(b, a));
      for (int m = 3; m <= 4; ++m) {
        Integer total = 0;
        for (const auto& [nu, c] : ab) {
          if (nu.length() <= m) total += c * weyl_dim(m, nu);
        }
        CHECK(total == weyl_dim(m, a) * weyl_dim(m, b));
      }
    }
  }
}

TEST_CASE("Littlewood-Richardson known coefficient") {
  const LRProduct p = lr_product(Partition({2, 1}), Partition({2, 1}));
  CHECK(p.at(Partition({3, 2, 1})) == 2);
  CHECK(p.at(Partition({4, 2})) == 1);
  CHECK(p.count(Partition({6})) == 0);
}

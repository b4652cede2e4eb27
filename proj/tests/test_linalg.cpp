#include "nccr/linalg.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace nccr;
using namespace nccr::linalg;

namespace {

std::vector<std::vector<Integer>> random_dense(std::mt19937_64& rng, int rows, int cols, int box, double density) {
  std::uniform_int_distribution<int> val(-box, box);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::vector<Integer>> m(static_cast<std::size_t>(rows), std::vector<Integer>(static_cast<std::size_t>(cols), 0));
  for (auto& row : m) {
    for (auto& x : row) {
      if (coin(rng) < density) x = val(rng);
    }
  }
  return m;
}

SparseMatrix to_sparse(const std::vector<std::vector<Integer>>& d, int cols) {
  SparseMatrix s(static_cast<int>(d.size()), cols);
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (int j = 0; j < cols; ++j) {
      if (d[i][static_cast<std::size_t>(j)] != 0) s.add(static_cast<int>(i), j, d[i][static_cast<std::size_t>(j)]);
    }
  }
  return s;
}

std::vector<std::vector<mpq_class>> to_q(const std::vector<std::vector<Integer>>& d) {
  std::vector<std::vector<mpq_class>> q;
  for (const auto& row : d) {
    q.emplace_back();
    for (const auto& x : row) q.back().emplace_back(x);
  }
  return q;
}

}  // namespace

TEST_CASE("sparse, Bareiss and oracle ranks agree on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 9), cols = 1 + static_cast<int>(rng() % 9);
    auto d = random_dense(rng, rows, cols, 3, trial % 2 ? 0.3 : 0.8);
    // Force some dependencies.
    if (rows > 2) {
      for (int j = 0; j < cols; ++j) d[0][static_cast<std::size_t>(j)] = d[1][static_cast<std::size_t>(j)] * 2 - d[2][static_cast<std::size_t>(j)];
    }
    const long expected = oracle::rank(to_q(d));
    CHECK(rank(to_sparse(d, cols)) == expected);
    CHECK(bareiss_rank(d) == expected);
    CHECK(static_cast<long>(rref(to_q(d), cols).pivot_cols.size()) == expected);
  }
}

TEST_CASE("rank survives 64-bit overflow") {
  const Integer big = Integer(1) << 62;
  std::vector<std::vector<Integer>> d{{big, big + 1, 3}, {big - 1, big, 5}, {2 * big - 1, 2 * big + 1, 8}};
  CHECK(rank(to_sparse(d, 3)) == oracle::rank(to_q(d)));
  std::vector<std::vector<std::pair<int, std::int64_t>>> rows{
      {{0, INT64_MAX}, {1, INT64_MAX - 1}}, {{0, INT64_MAX - 1}, {1, INT64_MAX - 2}}};
  CHECK(rank(rows, 2) == 2);
}

TEST_CASE("row-list rank normalizes duplicates") {
  std::vector<std::vector<std::pair<int, std::int64_t>>> rows{{{1, 2}, {1, -2}}, {{0, 1}, {0, 1}}, {{0, 4}}};
  CHECK(rank(rows, 2) == 1);
}

TEST_CASE("rref is reduced") {
  const Rref r = rref({{2, 4, 6}, {1, 2, 4}, {0, 0, 0}}, 3);
  REQUIRE(r.pivot_cols == std::vector<int>{0, 2});
  CHECK(r.rows[0] == std::vector<Rational>{1, 2, 0});
  CHECK(r.rows[1] == std::vector<Rational>{0, 0, 1});
}

TEST_CASE("degenerate shapes") {
  CHECK(rank(SparseMatrix(0, 5)) == 0);
  CHECK(rank(SparseMatrix(4, 0)) == 0);
  CHECK(rank(SparseMatrix(3, 3)) == 0);
  SparseMatrix s(2, 2);
  s.add(0, 0, 1);
  s.add(0, 0, -1);
  CHECK(rank(s) == 0);
}

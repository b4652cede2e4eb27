#include "nccr/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace nccr::linalg {

void SparseMatrix::add(int r, int c, const Integer& value) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
    throw std::out_of_range("sparse matrix index out of range");
  }
  if (value == 0) return;
  auto& row = data_[static_cast<std::size_t>(r)];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const SparseEntry& e, int col) { return e.col < col; });
  if (it != row.end() && it->col == c) {
    it->value += value;
    if (it->value == 0) row.erase(it);
  } else {
    row.insert(it, SparseEntry{c, value});
  }
}

Integer SparseMatrix::at(int r, int c) const {
  const auto& row = data_.at(static_cast<std::size_t>(r));
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const SparseEntry& e, int col) { return e.col < col; });
  return (it != row.end() && it->col == c) ? it->value : Integer(0);
}

SparseMatrix SparseMatrix::transposed() const {
  SparseMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (const auto& e : data_[static_cast<std::size_t>(r)]) {
      t.data_[static_cast<std::size_t>(e.col)].push_back(SparseEntry{r, e.value});
    }
  }
  return t;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

namespace {

struct Overflow {};

struct CheckedI64 {
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw Overflow{};
    return out;
  }
  static std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_sub_overflow(a, b, &out)) throw Overflow{};
    return out;
  }
  static std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
  static bool negative(std::int64_t a) { return a < 0; }
  static std::int64_t neg(std::int64_t a) {
    if (a == INT64_MIN) throw Overflow{};
    return -a;
  }
};

struct BigOps {
  static Integer mul(const Integer& a, const Integer& b) { return a * b; }
  static Integer sub(const Integer& a, const Integer& b) { return a - b; }
  static Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }
  static bool negative(const Integer& a) { return a < 0; }
  static Integer neg(const Integer& a) { return -a; }
};

template <typename T>
using Row = std::vector<std::pair<int, T>>;

template <typename T, typename Ops>
void make_primitive(Row<T>& row) {
  T g = 0;
  for (const auto& [c, v] : row) {
    g = Ops::gcd(g, v);
    if (g == 1) break;
  }
  if (Ops::negative(row.front().second)) g = Ops::neg(g);
  if (g != 1) {
    for (auto& e : row) e.second /= g;
  }
}

// r <- p*r - c*b where p, c are the leading coefficients of b and r.
template <typename T, typename Ops>
Row<T> eliminate(const Row<T>& r, const Row<T>& b) {
  T p = b.front().second;
  T c = r.front().second;
  T g = Ops::gcd(p, c);
  p /= g;
  c /= g;
  Row<T> out;
  out.reserve(r.size() + b.size());
  std::size_t i = 1, j = 1;
  while (i < r.size() || j < b.size()) {
    if (j >= b.size() || (i < r.size() && r[i].first < b[j].first)) {
      out.emplace_back(r[i].first, Ops::mul(p, r[i].second));
      ++i;
    } else if (i >= r.size() || b[j].first < r[i].first) {
      out.emplace_back(b[j].first, Ops::neg(Ops::mul(c, b[j].second)));
      ++j;
    } else {
      T v = Ops::sub(Ops::mul(p, r[i].second), Ops::mul(c, b[j].second));
      if (v != 0) out.emplace_back(r[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

template <typename T, typename Ops>
long reduce_block(std::vector<Row<T>> rows) {
  std::sort(rows.begin(), rows.end(), [](const Row<T>& a, const Row<T>& b) {
    if (a.front().first != b.front().first) return a.front().first < b.front().first;
    return a.size() < b.size();
  });
  std::unordered_map<int, std::size_t> pivot_of;
  std::vector<Row<T>> basis;
  for (auto& row : rows) {
    Row<T> r = std::move(row);
    while (!r.empty()) {
      auto it = pivot_of.find(r.front().first);
      if (it == pivot_of.end()) {
        make_primitive<T, Ops>(r);
        pivot_of.emplace(r.front().first, basis.size());
        basis.push_back(std::move(r));
        break;
      }
      r = eliminate<T, Ops>(r, basis[it->second]);
      if (!r.empty()) make_primitive<T, Ops>(r);
    }
  }
  return static_cast<long>(basis.size());
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(a)] = b;
  }
};

// Splits nonempty normalized rows into blocks that share no columns.
template <typename T>
std::vector<std::vector<Row<T>>> split_blocks(std::vector<Row<T>>& rows, int cols) {
  UnionFind uf(cols);
  for (const auto& r : rows) {
    for (std::size_t i = 1; i < r.size(); ++i) uf.unite(r[0].first, r[i].first);
  }
  std::unordered_map<int, std::size_t> block_of;
  std::vector<std::vector<Row<T>>> blocks;
  for (auto& r : rows) {
    int root = uf.find(r[0].first);
    auto [it, inserted] = block_of.emplace(root, blocks.size());
    if (inserted) blocks.emplace_back();
    blocks[it->second].push_back(std::move(r));
  }
  return blocks;
}

Row<Integer> widen(const Row<std::int64_t>& r) {
  Row<Integer> out;
  out.reserve(r.size());
  for (const auto& [c, v] : r) out.emplace_back(c, Integer(static_cast<long>(v)));
  return out;
}

long rank_blocks_i64(std::vector<Row<std::int64_t>> rows, int cols) {
  auto blocks = split_blocks(rows, cols);
  long total = 0;
  for (auto& block : blocks) {
    try {
      total += reduce_block<std::int64_t, CheckedI64>(block);
    } catch (const Overflow&) {
      std::vector<Row<Integer>> wide;
      wide.reserve(block.size());
      for (const auto& r : block) wide.push_back(widen(r));
      total += reduce_block<Integer, BigOps>(std::move(wide));
    }
  }
  return total;
}

}  // namespace

long rank(const SparseMatrix& m) {
  bool fits = true;
  for (const auto& row : m.row_data()) {
    for (const auto& e : row) {
      if (!mpz_fits_slong_p(e.value.get_mpz_t())) fits = false;
    }
  }
  if (fits) {
    std::vector<Row<std::int64_t>> rows;
    rows.reserve(static_cast<std::size_t>(m.rows()));
    for (const auto& row : m.row_data()) {
      if (row.empty()) continue;
      Row<std::int64_t> r;
      r.reserve(row.size());
      for (const auto& e : row) r.emplace_back(e.col, e.value.get_si());
      rows.push_back(std::move(r));
    }
    return rank_blocks_i64(std::move(rows), m.cols());
  }
  std::vector<Row<Integer>> rows;
  for (const auto& row : m.row_data()) {
    if (row.empty()) continue;
    Row<Integer> r;
    for (const auto& e : row) r.emplace_back(e.col, e.value);
    rows.push_back(std::move(r));
  }
  auto blocks = split_blocks(rows, m.cols());
  long total = 0;
  for (auto& b : blocks) total += reduce_block<Integer, BigOps>(std::move(b));
  return total;
}

long rank(std::vector<std::vector<std::pair<int, std::int64_t>>> rows, int cols) {
  std::vector<Row<std::int64_t>> clean;
  clean.reserve(rows.size());
  for (auto& r : rows) {
    std::sort(r.begin(), r.end());
    Row<std::int64_t> out;
    for (const auto& [c, v] : r) {
      if (c < 0 || c >= cols) throw std::out_of_range("column index out of range");
      if (!out.empty() && out.back().first == c) {
        out.back().second = CheckedI64::sub(out.back().second, CheckedI64::neg(v));
        if (out.back().second == 0) out.pop_back();
      } else if (v != 0) {
        out.emplace_back(c, v);
      }
    }
    if (!out.empty()) clean.push_back(std::move(out));
  }
  return rank_blocks_i64(std::move(clean), cols);
}

long bareiss_rank(std::vector<std::vector<Integer>> a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a[0].size();
  long r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(r) < rows; ++c) {
    std::size_t piv = static_cast<std::size_t>(r);
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[static_cast<std::size_t>(r)]);
    const auto& pr = a[static_cast<std::size_t>(r)];
    for (std::size_t i = static_cast<std::size_t>(r) + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (pr[c] * a[i][j] - a[i][c] * pr[j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = pr[c];
    ++r;
  }
  return r;
}

Rref rref(std::vector<std::vector<Rational>> a, int cols) {
  Rref out;
  std::size_t r = 0;
  const std::size_t rows = a.size();
  for (int c = 0; c < cols && r < rows; ++c) {
    const auto cc = static_cast<std::size_t>(c);
    std::size_t piv = r;
    while (piv < rows && a[piv][cc] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const Rational inv = 1 / a[r][cc];
    for (std::size_t j = cc; j < static_cast<std::size_t>(cols); ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][cc] == 0) continue;
      const Rational f = a[i][cc];
      for (std::size_t j = cc; j < static_cast<std::size_t>(cols); ++j) {
        if (a[r][j] != 0) a[i][j] -= f * a[r][j];
      }
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

}  // namespace nccr::linalg

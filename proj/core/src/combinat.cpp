#include "nccr/combinat.hpp"

#include <sstream>
#include <stdexcept>

namespace nccr::combinat {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) {
      throw std::invalid_argument("partition has a negative part");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

std::vector<int> Partition::padded(int m) const {
  std::vector<int> out(parts_);
  if (static_cast<int>(out.size()) < m) out.resize(static_cast<std::size_t>(m), 0);
  return out;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

Integer dim_sym(int n, int k) {
  if (n < 1) throw std::invalid_argument("dim_sym requires n >= 1");
  if (k < 0) return 0;
  return binomial(n + k - 1, k);
}

Integer dim_wedge(int n, int k) {
  if (n < 1) throw std::invalid_argument("dim_wedge requires n >= 1");
  return binomial(n, k);
}

Integer weyl_dim(int m, std::span<const int> weight) {
  if (m < 1) throw std::invalid_argument("weyl_dim requires m >= 1");
  if (static_cast<int>(weight.size()) > m) {
    throw std::invalid_argument("weight longer than the rank");
  }
  std::vector<long> w(static_cast<std::size_t>(m), 0);
  for (std::size_t i = 0; i < weight.size(); ++i) w[i] = weight[i];
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] > w[i - 1]) throw std::invalid_argument("weight must be weakly decreasing");
  }
  Integer num = 1, den = 1;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      num *= w[static_cast<std::size_t>(i)] - w[static_cast<std::size_t>(j)] + (j - i);
      den *= (j - i);
    }
  }
  return num / den;
}

Integer weyl_dim(int m, const Partition& lambda) {
  return weyl_dim(m, std::span<const int>(lambda.parts()));
}

namespace {

// Adds the boxes labelled `label` (a horizontal strip of size content[label])
// row by row, enforcing the Yamanouchi condition on the reverse reading word.
struct LREnumerator {
  const std::vector<int>& content;
  LRProduct& out;
  // count[r][l]: number of boxes labelled l in row r.
  std::vector<std::vector<int>> count;

  void place(std::size_t label, std::vector<int>& shape) {
    if (label == content.size()) {
      ++out[Partition(shape)];
      return;
    }
    std::vector<int> before = shape;
    before.push_back(0);
    std::vector<int> added(before.size(), 0);
    fill_row(label, 0, content[label], before, added, shape);
  }

  void fill_row(std::size_t label, std::size_t row, int remaining, const std::vector<int>& before,
                std::vector<int>& added, std::vector<int>& shape) {
    if (remaining == 0) {
      std::vector<int> next(before);
      for (std::size_t r = 0; r < next.size(); ++r) next[r] += added[r];
      while (!next.empty() && next.back() == 0) next.pop_back();
      if (count.size() < next.size()) count.resize(next.size(), std::vector<int>(content.size(), 0));
      for (std::size_t r = 0; r < added.size(); ++r) {
        if (added[r] && r < count.size()) count[r][label] += added[r];
      }
      place(label + 1, next);
      for (std::size_t r = 0; r < added.size(); ++r) {
        if (added[r] && r < count.size()) count[r][label] -= added[r];
      }
      return;
    }
    if (row >= before.size()) return;
    // Horizontal strip: new row length may not exceed the old row above.
    int cap = row == 0 ? remaining : before[row - 1] - before[row];
    if (cap > remaining) cap = remaining;
    // Lattice condition: labels placed so far in rows <= row may not exceed
    // the number of (label-1)'s in rows strictly above.
    int placed_above = 0;
    for (std::size_t r = 0; r < row; ++r) placed_above += added[r];
    int limit = cap;
    if (label > 0) {
      int prev_above = 0;
      for (std::size_t r = 0; r < row && r < count.size(); ++r) prev_above += count[r][label - 1];
      int allowance = prev_above - placed_above;
      if (allowance < limit) limit = allowance;
    }
    for (int x = limit; x >= 0; --x) {
      added[row] = x;
      fill_row(label, row + 1, remaining - x, before, added, shape);
    }
    added[row] = 0;
  }
};

}  // namespace

LRProduct lr_product(const Partition& lambda, const Partition& mu) {
  LRProduct out;
  if (mu.empty()) {
    out[lambda] = 1;
    return out;
  }
  std::vector<int> content = mu.parts();
  LREnumerator e{content, out, {}};
  e.count.assign(static_cast<std::size_t>(lambda.length()), std::vector<int>(content.size(), 0));
  std::vector<int> shape = lambda.parts();
  e.place(0, shape);
  return out;
}

}  // namespace nccr::combinat

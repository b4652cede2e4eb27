#pragma once

// Partitions, binomial dimensions, the Weyl dimension formula for GL_m and
// Littlewood-Richardson products.

#include "nccr/numeric.hpp"

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace nccr::combinat {

/// Weakly decreasing list of nonnegative parts; trailing zeros are dropped.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument on negative or increasing parts.
  explicit Partition(std::vector<int> parts);

  static Partition row(int k) { return Partition(k > 0 ? std::vector<int>{k} : std::vector<int>{}); }
  static Partition column(int k) { return Partition(std::vector<int>(static_cast<std::size_t>(k > 0 ? k : 0), 1)); }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  int operator[](int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
  bool empty() const { return parts_.empty(); }

  /// Parts padded with zeros to length m (m >= length()).
  std::vector<int> padded(int m) const;

  std::string str() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Multiset of partitions with positive multiplicities.
using LRProduct = std::map<Partition, long>;

/// dim Sym^k of an n-dimensional space.
Integer dim_sym(int n, int k);

/// dim Lambda^k of an n-dimensional space.
Integer dim_wedge(int n, int k);

/// Weyl dimension of the irreducible GL_m representation with highest weight
/// `weight` (weakly decreasing, entries may be negative, padded with zeros to
/// length m). Throws std::invalid_argument on a non-decreasing weight or one
/// longer than m.
Integer weyl_dim(int m, std::span<const int> weight);
Integer weyl_dim(int m, const Partition& lambda);

/// Littlewood-Richardson expansion of s_lambda * s_mu by enumerating LR
/// tableaux of shape nu/lambda and content mu.
LRProduct lr_product(const Partition& lambda, const Partition& mu);

}  // namespace nccr::combinat

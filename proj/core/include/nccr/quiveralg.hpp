#pragma once

// The double Beilinson quiver on vertices 0..n-1 with arrows f_1..f_n from j
// to j+1 and v_1..v_n from j to j-1, modulo the C-relations
//   v_i v_j = v_j v_i,  f_i f_j = f_j f_i,  v_j f_i = f_i v_j,
//   f_k v_j f_i = f_i v_j f_k,  v_j f_i v_l = v_l f_i v_j,
//   sum_i f_i v_i = 0 = sum_i v_i f_i,
// imposed wherever every word of a relation is a path.
//
// Words are written in traversal order: the first label is the first arrow
// walked from the source vertex.

#include "nccr/numeric.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace nccr::quiver {

/// 0..n-1 encode f_1..f_n, n..2n-1 encode v_1..v_n.
using Label = std::uint8_t;
using Word = std::vector<Label>;

class Quiver {
 public:
  /// Throws std::invalid_argument unless 2 <= n <= 64.
  explicit Quiver(int n);
  int n() const { return n_; }
  Label f(int i) const { return static_cast<Label>(i - 1); }  // i in 1..n
  Label v(int i) const { return static_cast<Label>(n_ + i - 1); }
  bool is_up(Label x) const { return x < n_; }
  /// Index 1..n of the arrow.
  int index(Label x) const { return (x % n_) + 1; }
  /// Target of x starting at `vertex`, or -1 if the arrow does not exist there.
  int step(int vertex, Label x) const;
  /// Target of the whole word, or -1 if it is not composable.
  int walk(int source, const Word& w) const;
  std::string label_name(Label x) const;

 private:
  int n_;
};

struct QuiverWord {
  int source = 0;
  Word arrows;
  int target = 0;
  int length() const { return static_cast<int>(arrows.size()); }
  std::string str(const Quiver& q) const;
  auto operator<=>(const QuiverWord&) const = default;
};

/// Formal integer combination of paths sharing source and target.
struct PathCombination {
  int source = 0;
  int target = 0;
  std::map<Word, long> terms;
  std::string str(const Quiver& q) const;
};

/// All words of length `len` from a to b, lexicographic in labels.
std::vector<QuiverWord> enumerate_paths(const Quiver& q, int a, int b, int len);

/// Number of paths of length `len` from a to b.
Integer count_paths(const Quiver& q, int a, int b, int len);

/// Generating relations with their source vertex.
std::vector<PathCombination> generating_relations(const Quiver& q);

/// Every embedding prefix . r . suffix of a generating relation r into the
/// paths of length `len` from a to b.
std::vector<PathCombination> relation_instances(const Quiver& q, int a, int b, int len);

/// (#paths) - rank(relation instances). Direct, but large for n = 4.
Integer graded_dim_by_instances(const Quiver& q, int a, int b, int len);

/// Graded pieces of the quotient algebra e_b (CQ/J) e_a for one source a and
/// all lengths up to max_len, computed degree by degree: the length-l piece
/// is (A_{l-1} (x) arrows) modulo the images of relations ending at the last
/// arrow, with a chosen basis of normal words at every length.
class QuotientAlgebra {
 public:
  QuotientAlgebra(const Quiver& q, int source, int max_len);

  int source() const { return source_; }
  int max_len() const { return max_len_; }
  /// dim e_b A_len e_a.
  Integer dim(int b, int len) const;
  /// The chosen normal words of length len (each a path in the quotient basis).
  const std::vector<QuiverWord>& normal_words(int len) const;

 private:
  int source_;
  int max_len_;
  std::vector<std::vector<QuiverWord>> normals_;
};

/// dim e_b (CQ/J) e_a in path length len.
Integer graded_dim(const Quiver& q, int a, int b, int len);

struct DimCell {
  int a = 0;
  int b = 0;
  int len = 0;
  Integer paths = 0;
  Integer relations_rank = 0;
  Integer dim = 0;
};

/// All cells (a, b, len) with len <= max_len in (a, b, len) order.
std::vector<DimCell> dim_table(const Quiver& q, int max_len);

struct CompareMismatch {
  int a = 0;
  int b = 0;
  int len = 0;
  Integer quiver_dim = 0;
  Integer hom_dim = 0;
};

struct CompareReport {
  int n = 0;
  int max_len = 0;
  long cells_checked = 0;
  std::vector<CompareMismatch> mismatches;
  bool pass() const { return mismatches.empty(); }
};

/// Compares quiver graded dimensions against Hom_Y(O(a), O(b)) in internal
/// degree (len - |b - a|) / 2.
CompareReport compare_with_nccr(int n, int max_len);

}  // namespace nccr::quiver

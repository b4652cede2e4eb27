#include "nccr/quiveralg.hpp"

#include "nccr/cohengine.hpp"
#include "nccr/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace nccr::quiver {

Quiver::Quiver(int n) : n_(n) {
  if (n < 2 || n > 64) throw std::invalid_argument("Quiver: n must lie in [2, 64]");
}

int Quiver::step(int vertex, Label x) const {
  if (vertex < 0 || vertex >= n_ || x >= 2 * n_) return -1;
  const int t = is_up(x) ? vertex + 1 : vertex - 1;
  return (t >= 0 && t < n_) ? t : -1;
}

int Quiver::walk(int source, const Word& w) const {
  int v = source;
  for (Label x : w) {
    v = step(v, x);
    if (v < 0) return -1;
  }
  return v;
}

std::string Quiver::label_name(Label x) const {
  return (is_up(x) ? "f" : "v") + std::to_string(index(x));
}

std::string QuiverWord::str(const Quiver& q) const {
  if (arrows.empty()) return "e" + std::to_string(source);
  std::string out;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (i) out += ' ';
    out += q.label_name(arrows[i]);
  }
  return out;
}

std::string PathCombination::str(const Quiver& q) const {
  std::string out;
  for (const auto& [w, c] : terms) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    if (std::labs(c) != 1) out += std::to_string(std::labs(c)) + "*";
    out += QuiverWord{source, w, target}.str(q);
  }
  return out.empty() ? "0" : out;
}

namespace {

void extend(const Quiver& q, int vertex, int b, int remaining, Word& cur, std::vector<QuiverWord>& out, int a) {
  if (std::abs(b - vertex) > remaining) return;
  if (remaining == 0) {
    if (vertex == b) out.push_back(QuiverWord{a, cur, b});
    return;
  }
  for (int x = 0; x < 2 * q.n(); ++x) {
    const int t = q.step(vertex, static_cast<Label>(x));
    if (t < 0) continue;
    cur.push_back(static_cast<Label>(x));
    extend(q, t, b, remaining - 1, cur, out, a);
    cur.pop_back();
  }
}

void check_vertex(const Quiver& q, int v) {
  if (v < 0 || v >= q.n()) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " outside [0, " + std::to_string(q.n() - 1) + "]");
  }
}

}  // namespace

std::vector<QuiverWord> enumerate_paths(const Quiver& q, int a, int b, int len) {
  check_vertex(q, a);
  check_vertex(q, b);
  std::vector<QuiverWord> out;
  if (len < 0) return out;
  Word cur;
  extend(q, a, b, len, cur, out, a);
  return out;
}

Integer count_paths(const Quiver& q, int a, int b, int len) {
  check_vertex(q, a);
  check_vertex(q, b);
  if (len < 0) return 0;
  std::vector<Integer> dp(static_cast<std::size_t>(q.n()), 0);
  dp[static_cast<std::size_t>(a)] = 1;
  for (int s = 0; s < len; ++s) {
    std::vector<Integer> next(dp.size(), 0);
    for (int v = 0; v < q.n(); ++v) {
      const auto& c = dp[static_cast<std::size_t>(v)];
      if (c == 0) continue;
      if (v + 1 < q.n()) next[static_cast<std::size_t>(v + 1)] += c * q.n();
      if (v - 1 >= 0) next[static_cast<std::size_t>(v - 1)] += c * q.n();
    }
    dp = std::move(next);
  }
  return dp[static_cast<std::size_t>(b)];
}

std::vector<PathCombination> generating_relations(const Quiver& q) {
  const int n = q.n();
  std::vector<PathCombination> out;
  auto emit = [&](int s, std::map<Word, long> terms) {
    int target = -1;
    for (const auto& [w, c] : terms) {
      const int t = q.walk(s, w);
      if (t < 0) return;
      if (target >= 0 && t != target) throw std::logic_error("inhomogeneous relation");
      target = t;
    }
    out.push_back(PathCombination{s, target, std::move(terms)});
  };
  for (int s = 0; s < n; ++s) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        emit(s, {{{q.v(i), q.v(j)}, 1}, {{q.v(j), q.v(i)}, -1}});
        emit(s, {{{q.f(i), q.f(j)}, 1}, {{q.f(j), q.f(i)}, -1}});
      }
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) emit(s, {{{q.v(j), q.f(i)}, 1}, {{q.f(i), q.v(j)}, -1}});
    }
    for (int i = 1; i <= n; ++i) {
      for (int k = i + 1; k <= n; ++k) {
        for (int j = 1; j <= n; ++j) {
          emit(s, {{{q.f(k), q.v(j), q.f(i)}, 1}, {{q.f(i), q.v(j), q.f(k)}, -1}});
          emit(s, {{{q.v(i), q.f(j), q.v(k)}, 1}, {{q.v(k), q.f(j), q.v(i)}, -1}});
        }
      }
    }
    std::map<Word, long> fv, vf;
    for (int i = 1; i <= n; ++i) {
      fv[{q.f(i), q.v(i)}] = 1;
      vf[{q.v(i), q.f(i)}] = 1;
    }
    emit(s, std::move(fv));
    emit(s, std::move(vf));
  }
  return out;
}

std::vector<PathCombination> relation_instances(const Quiver& q, int a, int b, int len) {
  check_vertex(q, a);
  check_vertex(q, b);
  std::vector<PathCombination> out;
  for (const auto& r : generating_relations(q)) {
    const int rlen = static_cast<int>(r.terms.begin()->first.size());
    for (int p = 0; p + rlen <= len; ++p) {
      const auto prefixes = enumerate_paths(q, a, r.source, p);
      if (prefixes.empty()) continue;
      const auto suffixes = enumerate_paths(q, r.target, b, len - p - rlen);
      for (const auto& pre : prefixes) {
        for (const auto& suf : suffixes) {
          PathCombination inst{a, b, {}};
          for (const auto& [w, c] : r.terms) {
            Word full = pre.arrows;
            full.insert(full.end(), w.begin(), w.end());
            full.insert(full.end(), suf.arrows.begin(), suf.arrows.end());
            inst.terms[full] += c;
          }
          out.push_back(std::move(inst));
        }
      }
    }
  }
  return out;
}

Integer graded_dim_by_instances(const Quiver& q, int a, int b, int len) {
  const auto paths = enumerate_paths(q, a, b, len);
  if (paths.empty()) return 0;
  std::map<Word, int> index;
  for (const auto& p : paths) index.emplace(p.arrows, static_cast<int>(index.size()));
  std::vector<std::vector<std::pair<int, std::int64_t>>> rows;
  for (const auto& inst : relation_instances(q, a, b, len)) {
    std::vector<std::pair<int, std::int64_t>> row;
    for (const auto& [w, c] : inst.terms) row.emplace_back(index.at(w), c);
    rows.push_back(std::move(row));
  }
  const long r = linalg::rank(std::move(rows), static_cast<int>(paths.size()));
  return Integer(static_cast<long>(paths.size())) - r;
}

namespace {

using SparseVec = std::map<int, Rational>;

struct Level {
  std::vector<QuiverWord> normals;
  std::vector<std::vector<int>> weight;  // per normal: #v_i - #f_i
  // cand[u * 2n + x] = candidate id of (normal u of previous level, arrow x)
  std::vector<int> cand;
  // reduction of each candidate into this level's normals
  std::vector<std::vector<std::pair<int, Rational>>> red;
};

}  // namespace

QuotientAlgebra::QuotientAlgebra(const Quiver& q, int source, int max_len)
    : source_(source), max_len_(max_len) {
  check_vertex(q, source);
  if (max_len < 0) throw std::invalid_argument("QuotientAlgebra: max_len must be >= 0");
  const int n = q.n();
  const int arrows = 2 * n;
  const auto relations = generating_relations(q);

  std::vector<Level> levels(static_cast<std::size_t>(max_len + 1));
  levels[0].normals.push_back(QuiverWord{source, {}, source});
  levels[0].weight.emplace_back(static_cast<std::size_t>(n), 0);

  for (int len = 1; len <= max_len; ++len) {
    const Level& prev = levels[static_cast<std::size_t>(len - 1)];
    Level& cur = levels[static_cast<std::size_t>(len)];

    // Candidates (u, x) grouped into homogeneous blocks.
    struct Cand {
      int u;
      Label x;
      int target;
      std::vector<int> weight;
    };
    std::vector<Cand> cands;
    cur.cand.assign(prev.normals.size() * static_cast<std::size_t>(arrows), -1);
    std::map<std::vector<int>, std::vector<int>> blocks;
    for (std::size_t u = 0; u < prev.normals.size(); ++u) {
      for (int x = 0; x < arrows; ++x) {
        const int t = q.step(prev.normals[u].target, static_cast<Label>(x));
        if (t < 0) continue;
        Cand c{static_cast<int>(u), static_cast<Label>(x), t, prev.weight[u]};
        c.weight[static_cast<std::size_t>(x % n)] += q.is_up(static_cast<Label>(x)) ? -1 : 1;
        const int id = static_cast<int>(cands.size());
        cur.cand[u * static_cast<std::size_t>(arrows) + static_cast<std::size_t>(x)] = id;
        std::vector<int> key{t};
        key.insert(key.end(), c.weight.begin(), c.weight.end());
        blocks[key].push_back(id);
        cands.push_back(std::move(c));
      }
    }

    // Push a vector over normals of level l through arrow x into level l+1.
    auto push = [&](const SparseVec& vec, int l, Label x) {
      SparseVec out;
      const Level& next = levels[static_cast<std::size_t>(l + 1)];
      for (const auto& [u, c] : vec) {
        const int id = next.cand[static_cast<std::size_t>(u) * static_cast<std::size_t>(arrows) + x];
        if (id < 0) throw std::logic_error("QuotientAlgebra: non-composable relation term");
        for (const auto& [w, d] : next.red[static_cast<std::size_t>(id)]) {
          Rational& slot = out[w];
          slot += c * d;
          if (slot == 0) out.erase(w);
        }
      }
      return out;
    };

    // Images of relations r ending at the last arrow, one row per normal
    // word u of length len - |r| ending at the source of r.
    std::vector<SparseVec> rows;
    for (const auto& r : relations) {
      const int rlen = static_cast<int>(r.terms.begin()->first.size());
      if (rlen > len) continue;
      const Level& base = levels[static_cast<std::size_t>(len - rlen)];
      for (std::size_t u = 0; u < base.normals.size(); ++u) {
        if (base.normals[u].target != r.source) continue;
        SparseVec row;
        for (const auto& [w, coeff] : r.terms) {
          SparseVec vec{{static_cast<int>(u), Rational(1)}};
          for (int t = 0; t + 1 < rlen; ++t) vec = push(vec, len - rlen + t, w[static_cast<std::size_t>(t)]);
          for (const auto& [v, c] : vec) {
            const int id = cur.cand[static_cast<std::size_t>(v) * static_cast<std::size_t>(arrows) + w.back()];
            if (id < 0) throw std::logic_error("QuotientAlgebra: non-composable relation term");
            Rational& slot = row[id];
            slot += c * coeff;
            if (slot == 0) row.erase(id);
          }
        }
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }

    // Route rows to blocks.
    std::vector<int> block_of(cands.size(), -1);
    std::vector<int> local(cands.size(), -1);
    std::vector<const std::vector<int>*> block_list;
    for (const auto& [key, ids] : blocks) {
      for (std::size_t i = 0; i < ids.size(); ++i) {
        block_of[static_cast<std::size_t>(ids[i])] = static_cast<int>(block_list.size());
        local[static_cast<std::size_t>(ids[i])] = static_cast<int>(i);
      }
      block_list.push_back(&ids);
    }
    std::vector<std::vector<std::vector<Rational>>> block_rows(block_list.size());
    for (const auto& row : rows) {
      const int blk = block_of[static_cast<std::size_t>(row.begin()->first)];
      std::vector<Rational> dense(block_list[static_cast<std::size_t>(blk)]->size(), 0);
      for (const auto& [id, c] : row) {
        if (block_of[static_cast<std::size_t>(id)] != blk) throw std::logic_error("QuotientAlgebra: inhomogeneous row");
        dense[static_cast<std::size_t>(local[static_cast<std::size_t>(id)])] = c;
      }
      block_rows[static_cast<std::size_t>(blk)].push_back(std::move(dense));
    }

    cur.red.assign(cands.size(), {});
    for (std::size_t blk = 0; blk < block_list.size(); ++blk) {
      const auto& ids = *block_list[blk];
      const int width = static_cast<int>(ids.size());
      linalg::Rref rr = linalg::rref(std::move(block_rows[blk]), width);
      std::vector<int> row_of_pivot(ids.size(), -1);
      for (std::size_t r = 0; r < rr.pivot_cols.size(); ++r) {
        row_of_pivot[static_cast<std::size_t>(rr.pivot_cols[r])] = static_cast<int>(r);
      }
      std::vector<int> normal_of(ids.size(), -1);
      for (int c = 0; c < width; ++c) {
        if (row_of_pivot[static_cast<std::size_t>(c)] >= 0) continue;
        const Cand& cd = cands[static_cast<std::size_t>(ids[static_cast<std::size_t>(c)])];
        QuiverWord w = prev.normals[static_cast<std::size_t>(cd.u)];
        w.arrows.push_back(cd.x);
        w.target = cd.target;
        normal_of[static_cast<std::size_t>(c)] = static_cast<int>(cur.normals.size());
        cur.normals.push_back(std::move(w));
        cur.weight.push_back(cd.weight);
      }
      for (int c = 0; c < width; ++c) {
        auto& red = cur.red[static_cast<std::size_t>(ids[static_cast<std::size_t>(c)])];
        const int r = row_of_pivot[static_cast<std::size_t>(c)];
        if (r < 0) {
          red.emplace_back(normal_of[static_cast<std::size_t>(c)], Rational(1));
          continue;
        }
        const auto& row = rr.rows[static_cast<std::size_t>(r)];
        for (int j = c + 1; j < width; ++j) {
          if (row[static_cast<std::size_t>(j)] != 0) {
            red.emplace_back(normal_of[static_cast<std::size_t>(j)], -row[static_cast<std::size_t>(j)]);
          }
        }
      }
    }
  }

  normals_.reserve(levels.size());
  for (auto& l : levels) normals_.push_back(std::move(l.normals));
}

Integer QuotientAlgebra::dim(int b, int len) const {
  if (len < 0 || len > max_len_) throw std::out_of_range("QuotientAlgebra::dim: length beyond max_len");
  long count = 0;
  for (const auto& w : normals_[static_cast<std::size_t>(len)]) count += (w.target == b);
  return count;
}

const std::vector<QuiverWord>& QuotientAlgebra::normal_words(int len) const {
  return normals_.at(static_cast<std::size_t>(len));
}

Integer graded_dim(const Quiver& q, int a, int b, int len) {
  check_vertex(q, b);
  if (len < 0) return 0;
  return QuotientAlgebra(q, a, len).dim(b, len);
}

std::vector<DimCell> dim_table(const Quiver& q, int max_len) {
  std::vector<DimCell> out;
  for (int a = 0; a < q.n(); ++a) {
    const QuotientAlgebra alg(q, a, max_len);
    for (int b = 0; b < q.n(); ++b) {
      for (int len = 0; len <= max_len; ++len) {
        DimCell c{a, b, len, count_paths(q, a, b, len), 0, alg.dim(b, len)};
        c.relations_rank = c.paths - c.dim;
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

CompareReport compare_with_nccr(int n, int max_len) {
  const Quiver q(n);
  CompareReport rep;
  rep.n = n;
  rep.max_len = max_len;
  for (int a = 0; a < n; ++a) {
    const QuotientAlgebra alg(q, a, max_len);
    for (int b = 0; b < n; ++b) {
      const int gap = std::abs(b - a);
      const int cap = std::max(0, (max_len - gap) / 2);
      const coh::GradedDims hom = coh::hom_y_graded(a, b, n, cap);
      for (int len = 0; len <= max_len; ++len) {
        Integer expected = 0;
        if (len >= gap && (len - gap) % 2 == 0) expected = hom[(len - gap) / 2];
        const Integer got = alg.dim(b, len);
        ++rep.cells_checked;
        if (got != expected) rep.mismatches.push_back(CompareMismatch{a, b, len, got, expected});
      }
    }
  }
  return rep;
}

}  // namespace nccr::quiver

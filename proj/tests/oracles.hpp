#pragma once

// Independent checkers used by the test suites. Nothing here calls the
// library's elimination, subspace or filtration code; filtrations are read
// out as plain row lists and re-examined by rank counting.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "nearby/monodromy.hpp"
#include "nearby/weights.hpp"

namespace oracle {

using Row = std::vector<mpq_class>;
using Rows = std::vector<Row>;
using Mat = std::vector<Row>;  // row-major square matrix

inline std::size_t rank_of(Rows rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const mpq_class f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

inline Row apply(const Mat& m, const Row& v) {
  Row out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    mpq_class s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) s += m[i][j] * v[j];
    out[i] = s;
  }
  return out;
}

inline Mat power(const Mat& m, unsigned k) {
  const std::size_t n = m.size();
  Mat out(n, Row(n));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  for (unsigned step = 0; step < k; ++step) {
    Mat next(n, Row(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        if (out[i][l] != 0)
          for (std::size_t j = 0; j < n; ++j) next[i][j] += out[i][l] * m[l][j];
    out = std::move(next);
  }
  return out;
}

inline Rows concat(Rows a, const Rows& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline Rows image_rows(const Mat& m, const Rows& rows) {
  Rows out;
  for (const auto& r : rows) out.push_back(apply(m, r));
  return out;
}

// A filtration read out as raw spanning rows per weight.
struct Filtration {
  std::size_t dim = 0;
  int lo = 0;
  int hi = -1;
  std::map<int, Rows> spaces;

  Rows at(int k) const {
    if (k < lo) return {};
    if (k > hi) {
      Rows all;
      for (std::size_t i = 0; i < dim; ++i) {
        Row e(dim);
        e[i] = 1;
        all.push_back(e);
      }
      return all;
    }
    return spaces.at(k);
  }
  std::size_t dim_at(int k) const { return rank_of(at(k)); }
  std::size_t gr(int k) const { return dim_at(k) - dim_at(k - 1); }
};

inline Filtration read(const nearby::WeightFiltration& f) {
  Filtration out;
  out.dim = f.ambient_dim();
  if (!f.min_weight()) return out;
  out.lo = *f.min_weight();
  out.hi = *f.max_weight();
  for (int k = out.lo; k <= out.hi; ++k) {
    const auto b = f.at(k).basis();
    Rows rows;
    for (std::size_t i = 0; i < b.rows(); ++i) {
      Row r(out.dim);
      for (std::size_t j = 0; j < out.dim; ++j) r[j] = b(i, j);
      rows.push_back(r);
    }
    out.spaces[k] = rows;
  }
  return out;
}

inline Mat read(const nearby::QMatrix& m) {
  Mat out(m.rows(), Row(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

// Filtered (N M_k in M_{k-2}), exhaustive and separated, and for every l >= 0
// the induced N^l : Gr_{c+l} -> Gr_{c-l} is bijective. Bijectivity is
// counted as dim(N^l M_{c+l} + M_{c-l-1}) - dim(N^l M_{c+l-1} + M_{c-l-1})
// = dim Gr_{c+l} = dim Gr_{c-l}.
inline bool deligne_axioms(const Mat& n, const Filtration& f, int c) {
  const std::size_t d = n.size();
  if (f.dim != d) return false;
  if (d == 0) return true;
  if (f.dim_at(f.lo - 1) != 0 || f.dim_at(f.hi) != d) return false;
  for (int k = f.lo - 2; k <= f.hi + 2; ++k) {
    const Rows lower = f.at(k - 2);
    if (rank_of(concat(lower, image_rows(n, f.at(k)))) != rank_of(lower)) return false;
  }
  std::size_t total = 0;
  for (int k = f.lo; k <= f.hi; ++k) total += f.gr(k);
  if (total != d) return false;
  const int reach = std::max(f.hi - c, c - f.lo) + 1;
  for (int l = 0; l <= reach; ++l) {
    const Mat p = power(n, static_cast<unsigned>(l));
    const Rows base = f.at(c - l - 1);
    const std::size_t hit = rank_of(concat(base, image_rows(p, f.at(c + l)))) -
                            rank_of(concat(base, image_rows(p, f.at(c + l - 1))));
    if (f.gr(c + l) != f.gr(c - l) || hit != f.gr(c + l)) return false;
  }
  return true;
}

// Direct sum of Jordan blocks with N e_{j+1} = e_j inside each block.
inline Mat jordan(const std::vector<std::size_t>& sizes) {
  std::size_t d = 0;
  for (auto s : sizes) d += s;
  Mat m(d, Row(d));
  std::size_t off = 0;
  for (auto s : sizes) {
    for (std::size_t j = 0; j + 1 < s; ++j) m[off + j][off + j + 1] = 1;
    off += s;
  }
  return m;
}

// The j-th (1-based) vector of a block of size s sits in weight c + 2j - s - 1.
inline std::vector<int> jordan_weights(const std::vector<std::size_t>& sizes, int c) {
  std::vector<int> out;
  for (auto s : sizes)
    for (std::size_t j = 1; j <= s; ++j) out.push_back(c + 2 * static_cast<int>(j) - static_cast<int>(s) - 1);
  return out;
}

inline std::map<int, std::size_t> jordan_graded_dims(const std::vector<std::size_t>& sizes, int c) {
  std::map<int, std::size_t> out;
  for (int w : jordan_weights(sizes, c)) ++out[w];
  return out;
}

inline nearby::QMatrix to_qmatrix(const Mat& m) {
  nearby::QMatrix out(m.size(), m.empty() ? 0 : m.front().size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) out(i, j) = m[i][j];
  return out;
}

}  // namespace oracle

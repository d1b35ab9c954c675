#pragma once

// Small builders shared by the unit suites.

#include <algorithm>
#include <random>
#include <vector>

#include "nearby/gluing.hpp"
#include "nearby/monodromy.hpp"
#include "nearby/theorems.hpp"
#include "nearby/weights.hpp"

namespace support {

using namespace nearby;

inline QVector unit(std::size_t i, std::size_t d) {
  QVector v(d);
  v[i] = 1;
  return v;
}

inline QMatrix jordan_block(std::size_t s) {
  QMatrix m(s, s);
  for (std::size_t j = 0; j + 1 < s; ++j) m(j, j + 1) = 1;
  return m;
}

inline QMatrix jordan(const std::vector<std::size_t>& sizes) {
  QMatrix m(0, 0);
  for (auto s : sizes) m = direct_sum(m, jordan_block(s));
  return m;
}

// W_k spanned by the columns of `basis` whose weight is <= k.
inline WeightFiltration adapted_filtration(const QMatrix& basis, const std::vector<int>& weights) {
  const std::size_t d = basis.rows();
  std::vector<FiltrationStep> steps;
  std::vector<int> ws(weights);
  std::sort(ws.begin(), ws.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  for (int k : ws) {
    std::vector<QVector> cols;
    for (std::size_t j = 0; j < weights.size(); ++j)
      if (weights[j] <= k) cols.push_back(basis.column(j));
    steps.push_back({k, Subspace::span(cols, d)});
  }
  return WeightFiltration(d, std::move(steps));
}

inline std::vector<int> random_weights(std::mt19937_64& rng, std::size_t d, int lo, int hi) {
  std::vector<int> w(d);
  for (auto& x : w) x = lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
  return w;
}

// A random map that is filtered of the given shift: in adapted bases entry
// (i, j) vanishes whenever the target weight exceeds source weight + shift.
struct FilteredMap {
  WeightedSpace dom;
  WeightedSpace cod;
  QMatrix matrix;
};

inline FilteredMap random_filtered_map(std::mt19937_64& rng, std::size_t dd, std::size_t cd, int shift) {
  const QMatrix p = random_invertible(rng, dd);
  const QMatrix q = random_invertible(rng, cd);
  const auto wd = random_weights(rng, dd, -2, 2);
  const auto wc = random_weights(rng, cd, -2, 2);
  QMatrix a(cd, dd);
  for (std::size_t i = 0; i < cd; ++i)
    for (std::size_t j = 0; j < dd; ++j)
      if (wc[i] <= wd[j] + shift && rng() % 2 == 0) a(i, j) = static_cast<long>(rng() % 5) - 2;
  return {WeightedSpace(adapted_filtration(p, wd)), WeightedSpace(adapted_filtration(q, wc)),
          q * a * inverse(p)};
}

inline TwistedMap monodromy_of(const QMatrix& n) { return {n, -1}; }

}  // namespace support

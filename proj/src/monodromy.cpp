#include "nearby/monodromy.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "nearby/error.hpp"

namespace nearby {

namespace {

void require_nilpotent(const QMatrix& n) {
  if (!n.is_square()) throw Error(ErrorCode::ShapeMismatch, "monodromy must be square");
  if (!is_nilpotent(n)) throw Error(ErrorCode::NotNilpotent, "N^dim is nonzero: " + to_string(n));
}

// Induced N^power : Gr_{from} -> Gr_{from - 2 power}, or nullopt when N^power
// does not send W_from into W_{from - 2 power}.
std::optional<QMatrix> graded_power(const QMatrix& n_pow, const WeightFiltration& f, int from, int to) {
  try {
    return induced_map_on_quotient(n_pow, f.at(from - 1), f.at(to - 1), f.at(from), f.at(to));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotCompatible) return std::nullopt;
    throw;
  }
}

int span_of_weights(const WeightFiltration& f, int center) {
  int reach = 0;
  for (const auto& step : f.steps()) reach = std::max(reach, std::abs(step.weight - center));
  return reach;
}

}  // namespace

WeightFiltration monodromy_filtration(const QMatrix& n, int center) {
  require_nilpotent(n);
  const int d = static_cast<int>(n.rows());
  std::vector<QMatrix> powers{QMatrix::identity(n.rows())};
  for (int i = 1; i <= d + 1; ++i) powers.push_back(powers.back() * n);
  std::vector<Subspace> kernels, images;
  for (const auto& p : powers) {
    kernels.push_back(kernel(p));
    images.push_back(image(p));
  }
  std::vector<FiltrationStep> steps;
  for (int l = -d; l <= d; ++l) {
    Subspace m = Subspace::zero(n.rows());
    for (int a = std::max(0, l); a <= d; ++a) {
      const int b = a - l;
      if (b > d) break;
      m = sum(m, intersect(kernels[a + 1], images[b]));
    }
    steps.push_back({center + l, std::move(m)});
  }
  WeightFiltration f(n.rows(), std::move(steps));
  if (!satisfies_monodromy_axioms(n, f, center))
    throw std::logic_error("monodromy filtration failed its own axioms for N = " + to_string(n));
  return f;
}

bool satisfies_monodromy_axioms(const QMatrix& n, const WeightFiltration& f, int center) {
  if (!n.is_square() || n.rows() != f.ambient_dim()) return false;
  for (const auto& step : f.steps()) {
    if (!f.at(step.weight - 2).contains(map_subspace(n, step.space))) return false;
  }
  QMatrix n_pow = QMatrix::identity(n.rows());
  const int reach = span_of_weights(f, center);
  for (int l = 0; l <= reach; ++l) {
    const auto induced = graded_power(n_pow, f, center + l, center - l);
    if (!induced || !induced->is_square() || rank(*induced) != induced->rows()) return false;
    n_pow = n_pow * n;
  }
  return true;
}

std::optional<LabeledGrading> lefschetz_grading(const WeightFiltration& f, int center, const std::string& label) {
  const auto dims = f.graded_dims();
  auto dim_at = [&](int k) -> long {
    auto it = dims.find(k);
    return it == dims.end() ? 0L : static_cast<long>(it->second);
  };
  LabeledGrading g;
  const int reach = span_of_weights(f, center);
  for (int l = 0; l <= reach; ++l) {
    const long primitive = dim_at(center + l) - dim_at(center + l + 2);
    if (primitive < 0) return std::nullopt;
    for (int j = 0; j <= l; ++j) g.add(center + l - 2 * j, {label, j - l}, static_cast<std::size_t>(primitive));
  }
  for (const auto& [k, d] : dims) {
    if (g.multiplicity_at(k) != d) return std::nullopt;
  }
  if (g.total() != f.ambient_dim()) return std::nullopt;
  return g;
}

NilpotentModel::NilpotentModel(WeightedSpace space, int n, TwistedMap monodromy)
    : space_(std::move(space)), n_(n), monodromy_(std::move(monodromy)) {
  if (monodromy_.twist != -1) throw Error(ErrorCode::Validation, "monodromy must carry twist -1");
  if (monodromy_.matrix.rows() != space_.dim() || monodromy_.matrix.cols() != space_.dim())
    throw Error(ErrorCode::ShapeMismatch, "monodromy shape does not match the space");
  require_nilpotent(monodromy_.matrix);
}

NilpotentModel NilpotentModel::pure_from_matrix(const QMatrix& n_matrix, int n, const std::string& label) {
  auto f = monodromy_filtration(n_matrix, n - 1);
  auto grading = lefschetz_grading(f, n - 1, label);
  if (!grading) throw std::logic_error("monodromy filtration without sl2-symmetric graded dimensions");
  return NilpotentModel(WeightedSpace(std::move(f), std::move(*grading)), n, {n_matrix, -1});
}

bool NilpotentModel::respects_weights() const {
  return is_filtered_morphism(monodromy_, space_, space_);
}

NilpotentModel conjugated(const NilpotentModel& model, const QMatrix& p) {
  const QMatrix conj = p * model.matrix() * inverse(p);
  WeightedSpace space(model.space().filtration().transported(p), model.space().grading());
  return NilpotentModel(std::move(space), model.n(), {conj, -1});
}

JordanStringModel::JordanStringModel(std::vector<JordanString> strings, int n) : strings_(std::move(strings)), n_(n) {
  for (const auto& s : strings_) {
    if (s.length == 0) throw Error(ErrorCode::Validation, "string '" + s.label + "' has length 0");
  }
}

std::size_t JordanStringModel::dim() const noexcept {
  std::size_t d = 0;
  for (const auto& s : strings_) d += s.length;
  return d;
}

NilpotentModel JordanStringModel::to_model() const {
  const std::size_t d = dim();
  const int center = n_ - 1;
  QMatrix n_matrix(d, d);
  std::vector<int> weight_of(d);
  LabeledGrading grading;
  std::size_t offset = 0;
  for (const auto& s : strings_) {
    const int m = static_cast<int>(s.length) - 1;
    for (std::size_t j = 0; j < s.length; ++j) {
      if (j + 1 < s.length) n_matrix(offset + j, offset + j + 1) = 1;
      const int weight = center - m + 2 * static_cast<int>(j);
      weight_of[offset + j] = weight;
      grading.add(weight, {s.label, -static_cast<int>(j)}, 1);
    }
    offset += s.length;
  }
  std::set<int> weights(weight_of.begin(), weight_of.end());
  std::vector<FiltrationStep> steps;
  for (int w : weights) {
    std::vector<QVector> basis;
    for (std::size_t i = 0; i < d; ++i) {
      if (weight_of[i] > w) continue;
      QVector e(d);
      e[i] = 1;
      basis.push_back(std::move(e));
    }
    steps.push_back({w, Subspace::span(basis, d)});
  }
  return NilpotentModel(WeightedSpace(WeightFiltration(d, std::move(steps)), std::move(grading)), n_,
                        {std::move(n_matrix), -1});
}

HardLefschetzReport verify_hard_lefschetz(const NilpotentModel& model) {
  HardLefschetzReport report;
  const auto& f = model.space().filtration();
  const int c = model.center();
  QMatrix n_pow = QMatrix::identity(model.dim());
  bool all_bijective = true;
  for (int k = 0; k <= static_cast<int>(model.dim()); ++k) {
    HardLefschetzStep step;
    step.k = k;
    step.source_dim = f.graded_dim(c + k);
    step.target_dim = f.graded_dim(c - k);
    if (const auto induced = graded_power(n_pow, f, c + k, c - k)) {
      step.rank = rank(*induced);
      step.bijective = step.source_dim == step.target_dim && step.rank == step.source_dim;
      if (!step.bijective) step.detail = "induced map has rank " + std::to_string(step.rank);
    } else {
      step.bijective = false;
      step.detail = "N^" + std::to_string(k) + " does not send W_" + std::to_string(c + k) + " into W_" +
                    std::to_string(c - k);
    }
    all_bijective = all_bijective && step.bijective;
    report.steps.push_back(std::move(step));
    n_pow = n_pow * model.matrix();
  }
  report.respects_weights = model.respects_weights();
  report.matches_monodromy_filtration = monodromy_filtration(model.matrix(), c) == f;
  report.passed = all_bijective && report.respects_weights && report.matches_monodromy_filtration;
  return report;
}

GradedKernel graded_kernel(const NilpotentModel& model) {
  if (!model.respects_weights()) throw Error(ErrorCode::NotFiltered, "N does not send W_k into W_{k-2}");
  const auto& f = model.space().filtration();
  const Subspace ker = kernel(model.matrix());
  const auto kernel_filtration = induced_filtration_on_sub(model.space(), ker);
  GradedKernel out;
  for (const auto& step : f.steps()) {
    const int k = step.weight;
    GradedKernelPiece piece;
    piece.weight = k;
    piece.from_kernel_filtration = kernel_filtration.graded_dim(k);
    const QMatrix induced = induced_map_on_quotient(model.matrix(), f.at(k - 1), f.at(k - 3), f.at(k), f.at(k - 2));
    piece.from_graded_map = induced.cols() - rank(induced);
    piece.kernel_part = intersect(step.space, ker);
    if (piece.from_kernel_filtration != piece.from_graded_map)
      throw Error(ErrorCode::GradedKernelMismatch,
                  "weight " + std::to_string(k) + ": Gr ker N has dim " + std::to_string(piece.from_kernel_filtration) +
                      " but ker(Gr N) has dim " + std::to_string(piece.from_graded_map));
    if (piece.from_graded_map > 0) {
      // Bottom-of-string labels carry twist 0; fall back to the default
      // label when the model's grading does not determine them.
      LabeledGrading::Piece bottoms;
      std::size_t count = 0;
      if (auto it = model.space().grading().entries().find(k); it != model.space().grading().entries().end()) {
        for (const auto& [label, mult] : it->second) {
          if (label.twist == 0) {
            bottoms[label] = mult;
            count += mult;
          }
        }
      }
      if (count == piece.from_graded_map) {
        for (const auto& [label, mult] : bottoms) out.grading.add(k, label, mult);
      } else {
        out.grading.add(k, {kDefaultLabel, 0}, piece.from_graded_map);
      }
    }
    out.pieces.push_back(std::move(piece));
  }
  return out;
}

PrimitiveDecomposition primitive_decomposition(const NilpotentModel& model) {
  if (!verify_hard_lefschetz(model).passed)
    throw Error(ErrorCode::NotPure, "hard Lefschetz fails; W is not the monodromy filtration centered at n-1");
  const auto kernel = graded_kernel(model);
  const auto& f = model.space().filtration();
  const int c = model.center();
  const int d = static_cast<int>(model.dim());

  PrimitiveDecomposition out;
  out.dims_match = true;
  for (int k = c - d; k <= c + d; ++k) {
    PrimitiveRow row;
    row.k = k;
    row.graded_dim = f.graded_dim(k);
    for (int m = std::abs(c - k); m <= d; m += 2) {
      const std::size_t kd = kernel.grading.multiplicity_at(c - m);
      if (kd == 0) continue;
      const int twist = (c - m - k) / 2;
      row.contributions.push_back({m, twist, kd});
      row.predicted_dim += kd;
      for (const auto& [label, mult] : kernel.grading.entries().at(c - m))
        out.predicted_grading.add(k, {label.label, label.twist + twist}, mult);
    }
    if (row.graded_dim == 0 && row.predicted_dim == 0) continue;
    out.dims_match = out.dims_match && row.graded_dim == row.predicted_dim;
    out.rows.push_back(std::move(row));
  }
  out.labels_match = out.predicted_grading == model.space().grading();
  return out;
}

}  // namespace nearby

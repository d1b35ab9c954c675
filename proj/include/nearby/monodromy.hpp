#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nearby/qlinalg.hpp"
#include "nearby/weights.hpp"

namespace nearby {

// The unique M with N M_k ⊆ M_{k-2} and N^l : Gr_{c+l} ≅ Gr_{c-l}, built as
// M_{c+l} = Σ_{a-b=l, a,b>=0} ker N^{a+1} ∩ im N^b and re-checked against both
// axioms before returning. Throws ShapeMismatch, NotNilpotent.
WeightFiltration monodromy_filtration(const QMatrix& n, int center);

// Both defining axioms, evaluated through induced maps on graded pieces.
bool satisfies_monodromy_axioms(const QMatrix& n, const WeightFiltration& f, int center);

// Labels for a filtration with sl2-symmetric graded dimensions around
// `center`: a string with top weight center+l contributes label(j-l) at weight
// center+l-2j, so twist 0 sits at the bottom of every string. Returns nullopt
// when the primitive dimensions dim Gr_{c+l} - dim Gr_{c+l+2} go negative.
std::optional<LabeledGrading> lefschetz_grading(const WeightFiltration& f, int center,
                                                const std::string& label = kDefaultLabel);

// (ψ, W, N) for an object pure of weight n; ψ is centered at n-1. The
// monodromy has twist -1. Construction checks shape and nilpotency only;
// respects_weights() reports the N W_k ⊆ W_{k-2} condition so that wrong
// filtrations can still be diagnosed.
class NilpotentModel {
 public:
  NilpotentModel(WeightedSpace space, int n, TwistedMap monodromy);

  // Monodromy filtration centered at n-1, Lefschetz labels.
  static NilpotentModel pure_from_matrix(const QMatrix& n_matrix, int n, const std::string& label = kDefaultLabel);

  const WeightedSpace& space() const noexcept { return space_; }
  int n() const noexcept { return n_; }
  int center() const noexcept { return n_ - 1; }
  const TwistedMap& monodromy() const noexcept { return monodromy_; }
  const QMatrix& matrix() const noexcept { return monodromy_.matrix; }
  std::size_t dim() const noexcept { return space_.dim(); }

  bool respects_weights() const;

  friend bool operator==(const NilpotentModel&, const NilpotentModel&) = default;

 private:
  WeightedSpace space_;
  int n_ = 0;
  TwistedMap monodromy_;
};

// P N P^{-1} with the filtration transported by P; labels unchanged.
NilpotentModel conjugated(const NilpotentModel& model, const QMatrix& p);

struct JordanString {
  std::string label;
  std::size_t length = 1;

  friend bool operator==(const JordanString&, const JordanString&) = default;
};

// Canonical sl2 form: block i is a single Jordan block of the given length
// with N e_{j+1} = e_j, and e_j (1-based) in weight (n-1) + 2j - length - 1.
class JordanStringModel {
 public:
  JordanStringModel(std::vector<JordanString> strings, int n);

  const std::vector<JordanString>& strings() const noexcept { return strings_; }
  int n() const noexcept { return n_; }
  std::size_t dim() const noexcept;

  NilpotentModel to_model() const;

  friend bool operator==(const JordanStringModel&, const JordanStringModel&) = default;

 private:
  std::vector<JordanString> strings_;
  int n_ = 0;
};

struct HardLefschetzStep {
  int k = 0;
  std::size_t source_dim = 0;  // Gr_{c+k}
  std::size_t target_dim = 0;  // Gr_{c-k}
  std::size_t rank = 0;
  bool bijective = false;
  std::string detail;
};

struct HardLefschetzReport {
  std::vector<HardLefschetzStep> steps;
  bool respects_weights = false;
  bool matches_monodromy_filtration = false;
  bool passed = false;
};

HardLefschetzReport verify_hard_lefschetz(const NilpotentModel& model);

struct GradedKernelPiece {
  int weight = 0;
  std::size_t from_kernel_filtration = 0;  // dim Gr_k ker N
  std::size_t from_graded_map = 0;         // dim ker(N : Gr_k -> Gr_{k-2})
  Subspace kernel_part;                    // W_k ∩ ker N
};

struct GradedKernel {
  std::vector<GradedKernelPiece> pieces;
  LabeledGrading grading;
};

// Throws NotFiltered if N does not respect the weights, GradedKernelMismatch
// if the two computations disagree.
GradedKernel graded_kernel(const NilpotentModel& model);

struct PrimitiveContribution {
  int m = 0;
  int twist = 0;  // (n-1-m-k)/2
  std::size_t dim = 0;
};

struct PrimitiveRow {
  int k = 0;
  std::size_t graded_dim = 0;
  std::size_t predicted_dim = 0;
  std::vector<PrimitiveContribution> contributions;
};

struct PrimitiveDecomposition {
  std::vector<PrimitiveRow> rows;
  LabeledGrading predicted_grading;
  bool dims_match = false;
  bool labels_match = false;
};

// Gr_k ψ against ⊕_{m>=|n-1-k|, m≡n-1-k (2)} Gr_{n-1-m} ker N ((n-1-m-k)/2).
// Throws NotPure unless verify_hard_lefschetz passes.
PrimitiveDecomposition primitive_decomposition(const NilpotentModel& model);

}  // namespace nearby

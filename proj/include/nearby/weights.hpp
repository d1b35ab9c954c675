#pragma once

// Weight-filtered spaces. Convention: the Tate twist (d) lowers every weight
// by 2d, so a map A -> B(d) is a filtered morphism iff it sends W_k A into
// W_{k+2d} B. Use twist_shift() rather than re-deriving the sign.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nearby/qlinalg.hpp"

namespace nearby {

constexpr int twist_shift(int twist) noexcept { return 2 * twist; }

inline constexpr const char* kDefaultLabel = "pt";

// A simple constituent with its Tate twist; the label itself is opaque.
struct TwistedLabel {
  std::string label;
  int twist = 0;

  friend auto operator<=>(const TwistedLabel&, const TwistedLabel&) = default;
  friend bool operator==(const TwistedLabel&, const TwistedLabel&) = default;
};

std::string to_string(const TwistedLabel& l);

struct FiltrationStep {
  int weight = 0;
  Subspace space;

  friend bool operator==(const FiltrationStep&, const FiltrationStep&) = default;
};

// Finite increasing exhaustive filtration of Q^ambient_dim. W_k is the space
// of the last step with weight <= k, or 0 below the first step.
class WeightFiltration {
 public:
  explicit WeightFiltration(std::size_t ambient_dim = 0) : ambient_dim_(ambient_dim) {}
  // Sorts by weight, drops redundant steps. Throws InvalidFiltration when
  // weights repeat, spaces are not nested, or the last space is not full.
  WeightFiltration(std::size_t ambient_dim, std::vector<FiltrationStep> steps);

  // Everything in weight `weight`.
  static WeightFiltration trivial(std::size_t ambient_dim, int weight);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  const std::vector<FiltrationStep>& steps() const noexcept { return steps_; }

  Subspace at(int k) const;
  std::size_t graded_dim(int k) const;
  // Weight -> dim Gr_k, only nonzero entries.
  std::map<int, std::size_t> graded_dims() const;
  std::optional<int> min_weight() const;
  std::optional<int> max_weight() const;

  WeightFiltration shifted(int delta) const;
  // P W_k for invertible P.
  WeightFiltration transported(const QMatrix& p) const;

  friend bool operator==(const WeightFiltration&, const WeightFiltration&) = default;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<FiltrationStep> steps_;
};

WeightFiltration direct_sum(const WeightFiltration& a, const WeightFiltration& b);

// Weight -> (twisted label -> multiplicity).
class LabeledGrading {
 public:
  using Piece = std::map<TwistedLabel, std::size_t>;

  LabeledGrading() = default;

  // Every graded piece filled with the default label, twist 0.
  static LabeledGrading uniform(const WeightFiltration& f, const std::string& label = kDefaultLabel);

  void add(int weight, const TwistedLabel& label, std::size_t multiplicity);
  const std::map<int, Piece>& entries() const noexcept { return entries_; }
  std::size_t multiplicity_at(int weight) const;
  std::size_t total() const;
  bool empty() const noexcept { return entries_.empty(); }

  // Weights k -> k - 2d, twists t -> t + d.
  LabeledGrading twisted(int d) const;
  LabeledGrading merged(const LabeledGrading& other) const;

  friend bool operator==(const LabeledGrading&, const LabeledGrading&) = default;

 private:
  std::map<int, Piece> entries_;
};

std::string to_string(const LabeledGrading& g);

class WeightedSpace {
 public:
  WeightedSpace() = default;
  // Throws InconsistentGrading unless the grading multiplicities match the
  // graded dimensions of the filtration.
  WeightedSpace(WeightFiltration filtration, LabeledGrading grading);
  explicit WeightedSpace(WeightFiltration filtration);

  static WeightedSpace zero() { return WeightedSpace(WeightFiltration(0)); }

  std::size_t dim() const noexcept { return filtration_.ambient_dim(); }
  const WeightFiltration& filtration() const noexcept { return filtration_; }
  const LabeledGrading& grading() const noexcept { return grading_; }

  friend bool operator==(const WeightedSpace&, const WeightedSpace&) = default;

 private:
  WeightFiltration filtration_;
  LabeledGrading grading_;
};

WeightedSpace direct_sum(const WeightedSpace& a, const WeightedSpace& b);

struct GradedPiece {
  int weight = 0;
  Subspace upper;  // W_k
  Subspace lower;  // W_{k-1}
  std::size_t dim = 0;
};

GradedPiece weight_of_graded_piece(const WeightedSpace& ws, int k);

WeightedSpace tate_twist(const WeightedSpace& ws, int d);

// A linear map together with the Tate twist d of its codomain: the map is
// meant as dom -> cod(d).
struct TwistedMap {
  QMatrix matrix;
  int twist = 0;

  friend bool operator==(const TwistedMap&, const TwistedMap&) = default;
};

// True iff matrix W_k(dom) is inside W_{k+shift}(cod) for all k, with cod's
// own (untwisted) filtration. Throws ShapeMismatch.
bool check_filtered(const TwistedMap& map, const WeightedSpace& dom, const WeightedSpace& cod, int shift);
// check_filtered with shift = twist_shift(map.twist).
bool is_filtered_morphism(const TwistedMap& map, const WeightedSpace& dom, const WeightedSpace& cod);
// im(map) ∩ W_{k+2d}(cod) == map(W_k dom) for all k. Throws NotFiltered if
// the map is not a filtered morphism.
bool check_strict(const TwistedMap& map, const WeightedSpace& dom, const WeightedSpace& cod);

bool weights_at_most(const WeightedSpace& ws, int n);
bool weights_at_least(const WeightedSpace& ws, int n);
bool is_pure(const WeightedSpace& ws, int n);

// Filtration on total/sub induced by W, in QuotientBasis(sub, total)
// coordinates. Throws NotContained.
WeightFiltration induced_filtration_on_subquotient(const WeightFiltration& f, const Subspace& sub,
                                                   const Subspace& total);
// W_k ∩ s, in coordinates of the RREF basis of s.
WeightFiltration induced_filtration_on_sub(const WeightedSpace& ws, const Subspace& s);
// (W_k + s)/s, in QuotientBasis(s, full) coordinates.
WeightFiltration induced_filtration_on_quotient(const WeightedSpace& ws, const Subspace& s);

}  // namespace nearby

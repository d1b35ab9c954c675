#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nearby/gluing.hpp"
#include "nearby/kgroup.hpp"
#include "nearby/monodromy.hpp"

namespace nearby {

// How the open part is extended across the origin.
enum class Extension { Intermediate, Shriek, Star };

std::string_view to_string(Extension e) noexcept;

// M on the disk: ext(open_part) ⊕ i_*(point_part). `pure` asserts that M is
// pure of weight n = open_part.n(), i.e. the extension is intermediate, the
// open part passes hard Lefschetz and the point part is pure of weight n.
class DiskModel {
 public:
  // Throws NotPure when `pure` is set but the constituents are not pure.
  DiskModel(NilpotentModel open_part, WeightedSpace point_part, bool pure,
            Extension extension = Extension::Intermediate);

  const NilpotentModel& open_part() const noexcept { return open_part_; }
  const WeightedSpace& point_part() const noexcept { return point_part_; }
  bool pure() const noexcept { return pure_; }
  Extension extension() const noexcept { return extension_; }
  int n() const noexcept { return open_part_.n(); }

  GluingDatum datum() const;

  friend bool operator==(const DiskModel&, const DiskModel&) = default;

 private:
  NilpotentModel open_part_;
  WeightedSpace point_part_;
  bool pure_ = true;
  Extension extension_ = Extension::Intermediate;
};

enum class IndependenceStatus { Equal, Different, HypothesisNotSatisfied };

std::string_view to_string(IndependenceStatus s) noexcept;

struct IndependenceReport {
  IndependenceStatus status = IndependenceStatus::HypothesisNotSatisfied;
  LabeledGrading kernel_a;
  LabeledGrading kernel_b;
  KClass class_a;
  KClass class_b;
  KClass class_from_kernel;  // only when the hypothesis holds
  bool passed() const noexcept { return status != IndependenceStatus::Different; }
};

// Equal labeled kernel gradings stand for "same reduced zero fibre"; under
// that hypothesis both classes must agree with the class assembled from the
// kernel. Throws NotPure unless both models are pure of the same weight.
IndependenceReport verify_kclass_independence(const NilpotentModel& a, const NilpotentModel& b);
IndependenceReport verify_kclass_independence(const JordanStringModel& a, const JordanStringModel& b);

// H^k(X0; i^*M) -> H^k(X0; ψ M) --N--> H^k(X0; ψ M)(-1) on the disk, where
// ψ M is Ψ placed in degree -1.
struct LocalInvariantCyclesReport {
  int k = 0;
  bool hypothesis_ok = true;
  std::size_t source_dim = 0;  // dim H^k(i^*M)
  Subspace image;              // in the ψ slot
  Subspace kernel_of_n;        // in the ψ slot
  bool exact = false;
  std::string note;
};

LocalInvariantCyclesReport verify_local_invariant_cycles(const DiskModel& dm, int k);

enum class WeightClaim { MonodromyCentered, KernelWeightBound, IShriekLowerBound, SurjectiveOnLowWeights };

std::string_view to_string(WeightClaim c) noexcept;

struct WeightClaimResult {
  WeightClaim claim;
  bool holds = false;
  std::string detail;
};

struct WeightBoundReport {
  int k = 0;
  std::vector<WeightClaimResult> claims;
  bool all_hold() const noexcept;
  bool holds(WeightClaim c) const noexcept;
};

WeightBoundReport verify_weight_mechanics(const DiskModel& dm, int k);

// Deterministic generators feeding the property suites. All use
// std::mt19937_64 and plain modular reduction so output is identical across
// standard libraries.
JordanStringModel generate_model(std::uint64_t seed, std::size_t max_strings, std::size_t max_length, int n,
                                 const std::vector<std::string>& labels);
// Unit lower times unit upper triangular, entries in [-2, 2].
QMatrix random_invertible(std::mt19937_64& rng, std::size_t dim);
NilpotentModel generate_scrambled(const NilpotentModel& model, std::uint64_t seed);
NilpotentModel generate_scrambled(const JordanStringModel& model, std::uint64_t seed);
// A random strictly upper triangular matrix (entries in [-3, 3]) conjugated by
// random_invertible; dimension in [0, max_dim].
QMatrix random_nilpotent(std::uint64_t seed, std::size_t max_dim);

}  // namespace nearby

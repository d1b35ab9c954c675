#pragma once

// Unipotent perverse objects on the disk as gluing data (ψ, φ, can, var)
// with N = var∘can. Perverse objects sit in degree 0; i^* is the complex
// [ψ --can--> φ] in degrees (-1, 0) and i^! is [φ --var--> ψ(-1)] in
// degrees (0, 1).

#include <cstddef>
#include <string>
#include <vector>

#include "nearby/qlinalg.hpp"
#include "nearby/weights.hpp"

namespace nearby {

class GluingDatum {
 public:
  // can has twist 0 (ψ -> φ), var has twist -1 (φ -> ψ(-1)). Throws
  // ShapeMismatch, Validation (wrong twists), NotNilpotent, NotFiltered.
  GluingDatum(WeightedSpace psi, WeightedSpace phi, TwistedMap can, TwistedMap var);

  const WeightedSpace& psi() const noexcept { return psi_; }
  const WeightedSpace& phi() const noexcept { return phi_; }
  const TwistedMap& can() const noexcept { return can_; }
  const TwistedMap& var() const noexcept { return var_; }
  QMatrix monodromy() const { return var_.matrix * can_.matrix; }

  friend bool operator==(const GluingDatum&, const GluingDatum&) = default;

 private:
  WeightedSpace psi_;
  WeightedSpace phi_;
  TwistedMap can_;
  TwistedMap var_;
};

GluingDatum direct_sum(const GluingDatum& a, const GluingDatum& b);

// ψ-presentation of a datum: the space with N = var∘can, twist -1.
struct PsiData {
  WeightedSpace space;
  TwistedMap monodromy;
};

PsiData psi_u(const GluingDatum& g);

// (V, V, id, N).
GluingDatum j_lower_shriek(const WeightedSpace& v, const TwistedMap& n);
// (V, V(-1), N, id).
GluingDatum j_lower_star(const WeightedSpace& v, const TwistedMap& n);
// (V, im N ⊆ V(-1), N corestricted, inclusion); φ uses the RREF basis of im N.
GluingDatum j_intermediate(const WeightedSpace& v, const TwistedMap& n);
// (0, P, 0, 0): a summand supported at the origin.
GluingDatum i_lower_star(const WeightedSpace& point);

// A subquotient total/sub of some ambient Q^d with its induced filtration,
// expressed in QuotientBasis(sub, total) coordinates.
struct Subquotient {
  Subspace sub;
  Subspace total;
  WeightFiltration filtration;

  std::size_t dim() const noexcept { return total.dim() - sub.dim(); }
  friend bool operator==(const Subquotient&, const Subquotient&) = default;
};

Subquotient make_subquotient(const WeightedSpace& ambient, const Subspace& sub, const Subspace& total);

// source --d--> target in degrees (lowest, lowest+1). The target already
// carries whatever twist the complex needs, so d is a twist-0 morphism.
class TwoTermComplex {
 public:
  TwoTermComplex(int lowest_degree, WeightedSpace source, WeightedSpace target, QMatrix d);

  int lowest_degree() const noexcept { return lowest_degree_; }
  const WeightedSpace& source() const noexcept { return source_; }
  const WeightedSpace& target() const noexcept { return target_; }
  const QMatrix& differential() const noexcept { return d_; }

  // ker d in the lowest degree, coker d in the next one, zero elsewhere
  // (as a subquotient of the target).
  Subquotient cohomology(int degree) const;

 private:
  int lowest_degree_;
  WeightedSpace source_;
  WeightedSpace target_;
  QMatrix d_;
};

TwoTermComplex i_upper_star(const GluingDatum& g);
TwoTermComplex i_upper_shriek(const GluingDatum& g);

struct MapCheck {
  std::string name;
  bool filtered = false;
  bool strict = false;
};

struct PositionCheck {
  std::string position;
  bool exact = false;
  std::string detail;
};

// 0 -> H^-1(i^* j_* M) -> Ψ --N--> Ψ(-1) -> H^0(i^* j_* M) -> 0
struct SequenceReport {
  std::vector<std::size_t> dims;  // the four nonzero terms
  std::vector<PositionCheck> positions;
  std::vector<MapCheck> maps;
  bool exact = false;
  bool strict = false;
  bool passed = false;
};

SequenceReport verify_monodromy_sequence(const WeightedSpace& v, const TwistedMap& n);

struct CohomologyMatch {
  bool subspace_matches = false;
  bool filtration_matches = false;
  bool complementary_vanishes = false;
  std::size_t dim = 0;
  std::string detail;
};

// Stalks of the intermediate extension: H^-1(i^* j_!* M) = ker N with H^0 = 0,
// and H^1(i^! j_!* M) = coker N inside Ψ(-1) with H^0 = 0.
struct IntermediateStalkReport {
  CohomologyMatch kernel_side;
  CohomologyMatch cokernel_side;
  bool passed = false;
};

IntermediateStalkReport verify_intermediate_stalks(const WeightedSpace& v, const TwistedMap& n);

}  // namespace nearby

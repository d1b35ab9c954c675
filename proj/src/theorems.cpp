#include "nearby/theorems.hpp"

#include "nearby/error.hpp"

namespace nearby {

std::string_view to_string(Extension e) noexcept {
  switch (e) {
    case Extension::Intermediate: return "intermediate";
    case Extension::Shriek: return "shriek";
    case Extension::Star: return "star";
  }
  return "unknown";
}

std::string_view to_string(IndependenceStatus s) noexcept {
  switch (s) {
    case IndependenceStatus::Equal: return "equal";
    case IndependenceStatus::Different: return "different";
    case IndependenceStatus::HypothesisNotSatisfied: return "hypothesis_not_satisfied";
  }
  return "unknown";
}

std::string_view to_string(WeightClaim c) noexcept {
  switch (c) {
    case WeightClaim::MonodromyCentered: return "monodromy_centered";
    case WeightClaim::KernelWeightBound: return "kernel_weight_bound";
    case WeightClaim::IShriekLowerBound: return "i_shriek_lower_bound";
    case WeightClaim::SurjectiveOnLowWeights: return "surjective_on_low_weights";
  }
  return "unknown";
}

DiskModel::DiskModel(NilpotentModel open_part, WeightedSpace point_part, bool pure, Extension extension)
    : open_part_(std::move(open_part)), point_part_(std::move(point_part)), pure_(pure), extension_(extension) {
  if (!pure_) return;
  if (extension_ != Extension::Intermediate)
    throw Error(ErrorCode::NotPure, std::string("a pure disk model needs the intermediate extension, got ") +
                                        std::string(to_string(extension_)));
  if (!verify_hard_lefschetz(open_part_).passed)
    throw Error(ErrorCode::NotPure, "open part is not the monodromy filtration centered at n-1");
  if (!is_pure(point_part_, n())) throw Error(ErrorCode::NotPure, "point part is not pure of weight n");
}

GluingDatum DiskModel::datum() const {
  const auto& v = open_part_.space();
  const auto& n_map = open_part_.monodromy();
  GluingDatum open = [&] {
    switch (extension_) {
      case Extension::Shriek: return j_lower_shriek(v, n_map);
      case Extension::Star: return j_lower_star(v, n_map);
      case Extension::Intermediate: break;
    }
    return j_intermediate(v, n_map);
  }();
  return direct_sum(open, i_lower_star(point_part_));
}

namespace {

void require_pure(const NilpotentModel& m, const char* which) {
  if (!verify_hard_lefschetz(m).passed)
    throw Error(ErrorCode::NotPure, std::string(which) + " is not pure (hard Lefschetz fails)");
}

}  // namespace

IndependenceReport verify_kclass_independence(const NilpotentModel& a, const NilpotentModel& b) {
  require_pure(a, "first model");
  require_pure(b, "second model");
  if (a.n() != b.n())
    throw Error(ErrorCode::NotPure, "models are pure of different weights " + std::to_string(a.n()) + " and " +
                                        std::to_string(b.n()));
  IndependenceReport report;
  report.kernel_a = graded_kernel(a).grading;
  report.kernel_b = graded_kernel(b).grading;
  report.class_a = kclass_of_space(a.space());
  report.class_b = kclass_of_space(b.space());
  if (!(report.kernel_a == report.kernel_b)) {
    report.status = IndependenceStatus::HypothesisNotSatisfied;
    return report;
  }
  report.class_from_kernel = kclass_psi_from_kernel(report.kernel_a, a.n());
  const bool same = report.class_a == report.class_b && report.class_a == report.class_from_kernel;
  report.status = same ? IndependenceStatus::Equal : IndependenceStatus::Different;
  return report;
}

IndependenceReport verify_kclass_independence(const JordanStringModel& a, const JordanStringModel& b) {
  return verify_kclass_independence(a.to_model(), b.to_model());
}

LocalInvariantCyclesReport verify_local_invariant_cycles(const DiskModel& dm, int k) {
  const GluingDatum g = dm.datum();
  LocalInvariantCyclesReport report;
  report.k = k;
  report.hypothesis_ok = dm.pure();
  if (!dm.pure()) report.note = "hypothesis violated; exactness not guaranteed";

  if (k == -1) {
    // H^-1(i^*M) = ker(can) maps into the ψ slot (Ψ itself) by inclusion.
    const Subspace source = kernel(g.can().matrix);
    report.source_dim = source.dim();
    report.image = source;
    report.kernel_of_n = kernel(g.monodromy());
  } else {
    // The ψ slot vanishes outside degree -1.
    report.source_dim = k == 0 ? i_upper_star(g).cohomology(0).dim() : 0;
    report.image = Subspace::zero(0);
    report.kernel_of_n = Subspace::zero(0);
  }
  report.exact = report.image == report.kernel_of_n;
  return report;
}

bool WeightBoundReport::all_hold() const noexcept {
  for (const auto& c : claims) {
    if (!c.holds) return false;
  }
  return true;
}

bool WeightBoundReport::holds(WeightClaim c) const noexcept {
  for (const auto& r : claims) {
    if (r.claim == c) return r.holds;
  }
  return false;
}

WeightBoundReport verify_weight_mechanics(const DiskModel& dm, int k) {
  const GluingDatum g = dm.datum();
  const int bound = dm.n() + k;
  const QMatrix n_matrix = g.monodromy();
  WeightBoundReport report;
  report.k = k;
  auto claim = [&](WeightClaim c, bool holds, std::string detail) {
    report.claims.push_back({c, holds, holds ? std::string() : std::move(detail)});
  };

  if (k == -1) {
    const WeightFiltration expected = monodromy_filtration(n_matrix, bound);
    claim(WeightClaim::MonodromyCentered, g.psi().filtration() == expected,
          "W on Psi is not the monodromy filtration centered at " + std::to_string(bound));
    const Subspace ker = kernel(n_matrix);
    claim(WeightClaim::KernelWeightBound, g.psi().filtration().at(bound).contains(ker),
          "ker N is not inside W_" + std::to_string(bound));
    // H^0(i^!M) = ker(var) with the weights of φ.
    const WeightedSpace h0(i_upper_shriek(g).cohomology(0).filtration);
    claim(WeightClaim::IShriekLowerBound, weights_at_least(h0, bound + 1),
          "H^0(i^!M) has weights below " + std::to_string(bound + 1));
    // H^-1(i^*M) = ker(can) -> H^-1(i^*j_*j^*M) = ker N is an inclusion.
    const Subspace low = intersect(g.psi().filtration().at(bound), ker);
    claim(WeightClaim::SurjectiveOnLowWeights, kernel(g.can().matrix).contains(low),
          "image misses W_" + std::to_string(bound) + " ∩ ker N (dim " + std::to_string(low.dim()) + ")");
  } else if (k == 0) {
    claim(WeightClaim::MonodromyCentered, true, "");
    claim(WeightClaim::KernelWeightBound, true, "");
    const WeightedSpace h1(i_upper_shriek(g).cohomology(1).filtration);
    claim(WeightClaim::IShriekLowerBound, weights_at_least(h1, bound + 1),
          "H^1(i^!M) has weights below " + std::to_string(bound + 1));
    // H^0(i^*M) = φ/im(can) -> H^0(i^*j_*j^*M) = Ψ(-1)/im N is induced by var.
    const WeightedSpace twisted = tate_twist(g.psi(), -1);
    const Subspace reached = sum(image(g.var().matrix), image(n_matrix));
    claim(WeightClaim::SurjectiveOnLowWeights, reached.contains(twisted.filtration().at(bound)),
          "image misses W_" + std::to_string(bound) + " of coker N(-1)");
  } else {
    for (auto c : {WeightClaim::MonodromyCentered, WeightClaim::KernelWeightBound, WeightClaim::IShriekLowerBound,
                   WeightClaim::SurjectiveOnLowWeights})
      claim(c, true, "");
  }
  return report;
}

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

long pick_signed(std::mt19937_64& rng, long bound) {
  return static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
}

}  // namespace

JordanStringModel generate_model(std::uint64_t seed, std::size_t max_strings, std::size_t max_length, int n,
                                 const std::vector<std::string>& labels) {
  if (max_strings < 1 || max_length < 1) throw Error(ErrorCode::Validation, "generator bounds must be >= 1");
  if (labels.empty()) throw Error(ErrorCode::Validation, "generator needs at least one label");
  std::mt19937_64 rng(seed);
  const std::size_t count = pick(rng, 1, max_strings);
  std::vector<JordanString> strings;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t length = pick(rng, 1, max_length);
    const std::string& label = labels[pick(rng, 0, labels.size() - 1)];
    strings.push_back({label, length});
  }
  return JordanStringModel(std::move(strings), n);
}

QMatrix random_invertible(std::mt19937_64& rng, std::size_t dim) {
  QMatrix lower = QMatrix::identity(dim);
  QMatrix upper = QMatrix::identity(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = pick_signed(rng, 2);
      upper(j, i) = pick_signed(rng, 2);
    }
  return lower * upper;
}

NilpotentModel generate_scrambled(const NilpotentModel& model, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  return conjugated(model, random_invertible(rng, model.dim()));
}

NilpotentModel generate_scrambled(const JordanStringModel& model, std::uint64_t seed) {
  return generate_scrambled(model.to_model(), seed);
}

QMatrix random_nilpotent(std::uint64_t seed, std::size_t max_dim) {
  std::mt19937_64 rng(seed);
  const std::size_t d = pick(rng, 0, max_dim);
  QMatrix upper(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      if (rng() % 2 == 0) upper(i, j) = pick_signed(rng, 3);
    }
  const QMatrix p = random_invertible(rng, d);
  return p * upper * inverse(p);
}

}  // namespace nearby

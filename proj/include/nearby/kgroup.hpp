#pragma once

// Grothendieck-group classes as formal Z-combinations of twisted labels.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "nearby/weights.hpp"

namespace nearby {

class KClass {
 public:
  using Terms = std::map<TwistedLabel, std::int64_t>;

  KClass() = default;

  void add(const TwistedLabel& label, std::int64_t coefficient, std::optional<int> weight = std::nullopt);

  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::int64_t coefficient(const TwistedLabel& label) const;
  // Intrinsic weight(s) seen for each label; informational only.
  const std::map<std::string, std::set<int>>& label_weights() const noexcept { return label_weights_; }

  KClass& operator+=(const KClass& other);
  KClass& operator-=(const KClass& other);
  friend KClass operator+(KClass a, const KClass& b) { return a += b; }
  friend KClass operator-(KClass a, const KClass& b) { return a -= b; }

  // Label weights do not take part in equality.
  friend bool operator==(const KClass& a, const KClass& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
  std::map<std::string, std::set<int>> label_weights_;
};

// Sorted by label ascending, then twist descending: "L(0) + L(-1) + P(0)".
std::string to_string(const KClass& c);

// Throws InconsistentGrading (via WeightedSpace) for inconsistent input.
KClass kclass_of_space(const WeightedSpace& ws);
KClass kclass_of_grading(const LabeledGrading& g);

KClass twist_class(const KClass& c, int d);

// Σ_k Σ_{m>=|n-1-k|, m≡n-1-k (2)} [Gr_{n-1-m} ker N]((n-1-m-k)/2).
// Throws BadSupport if the grading has weight > n-1.
KClass kclass_psi_from_kernel(const LabeledGrading& kernel_grading, int n);

}  // namespace nearby

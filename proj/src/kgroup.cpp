#include "nearby/kgroup.hpp"

#include <algorithm>
#include <vector>

#include "nearby/error.hpp"

namespace nearby {

void KClass::add(const TwistedLabel& label, std::int64_t coefficient, std::optional<int> weight) {
  if (weight) label_weights_[label.label].insert(*weight + twist_shift(label.twist));
  if (coefficient == 0) return;
  auto& c = terms_[label];
  c += coefficient;
  if (c == 0) terms_.erase(label);
}

std::int64_t KClass::coefficient(const TwistedLabel& label) const {
  auto it = terms_.find(label);
  return it == terms_.end() ? 0 : it->second;
}

KClass& KClass::operator+=(const KClass& other) {
  for (const auto& [label, c] : other.terms_) add(label, c);
  for (const auto& [label, ws] : other.label_weights_) label_weights_[label].insert(ws.begin(), ws.end());
  return *this;
}

KClass& KClass::operator-=(const KClass& other) {
  for (const auto& [label, c] : other.terms_) add(label, -c);
  return *this;
}

std::string to_string(const KClass& c) {
  if (c.empty()) return "0";
  std::vector<std::pair<TwistedLabel, std::int64_t>> terms(c.terms().begin(), c.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.label != b.first.label) return a.first.label < b.first.label;
    return a.first.twist > b.first.twist;
  });
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    auto coefficient = terms[i].second;
    if (i == 0) {
      if (coefficient < 0) out += "-";
    } else {
      out += coefficient < 0 ? " - " : " + ";
    }
    if (coefficient < 0) coefficient = -coefficient;
    if (coefficient != 1) out += std::to_string(coefficient) + "*";
    out += to_string(terms[i].first);
  }
  return out;
}

KClass kclass_of_grading(const LabeledGrading& g) {
  KClass c;
  for (const auto& [k, piece] : g.entries())
    for (const auto& [label, mult] : piece) c.add(label, static_cast<std::int64_t>(mult), k);
  return c;
}

KClass kclass_of_space(const WeightedSpace& ws) {
  // WeightedSpace enforces consistency on construction; re-check in case the
  // grading was assembled elsewhere.
  for (const auto& [k, d] : ws.filtration().graded_dims()) {
    if (ws.grading().multiplicity_at(k) != d)
      throw Error(ErrorCode::InconsistentGrading, "weight " + std::to_string(k));
  }
  return kclass_of_grading(ws.grading());
}

KClass twist_class(const KClass& c, int d) {
  KClass out;
  for (const auto& [label, coefficient] : c.terms()) out.add({label.label, label.twist + d}, coefficient);
  return out;
}

KClass kclass_psi_from_kernel(const LabeledGrading& kernel_grading, int n) {
  const int c = n - 1;
  KClass out;
  for (const auto& [weight, piece] : kernel_grading.entries()) {
    if (weight > c)
      throw Error(ErrorCode::BadSupport, "kernel grading has weight " + std::to_string(weight) + " > n-1 = " +
                                             std::to_string(c));
    const int m = c - weight;
    for (int k = c - m; k <= c + m; k += 2) {
      const int twist = (c - m - k) / 2;
      for (const auto& [label, mult] : piece)
        out.add({label.label, label.twist + twist}, static_cast<std::int64_t>(mult), k);
    }
  }
  return out;
}

}  // namespace nearby

#include "nearby/weights.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "nearby/error.hpp"

namespace nearby {

std::string to_string(const TwistedLabel& l) { return l.label + "(" + std::to_string(l.twist) + ")"; }

WeightFiltration::WeightFiltration(std::size_t ambient_dim, std::vector<FiltrationStep> steps)
    : ambient_dim_(ambient_dim) {
  std::sort(steps.begin(), steps.end(),
            [](const FiltrationStep& a, const FiltrationStep& b) { return a.weight < b.weight; });
  Subspace previous = Subspace::zero(ambient_dim);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& step = steps[i];
    if (step.space.ambient_dim() != ambient_dim)
      throw Error(ErrorCode::InvalidFiltration, "step at weight " + std::to_string(step.weight) +
                                                    " lives in Q^" + std::to_string(step.space.ambient_dim()));
    if (i > 0 && step.weight == steps[i - 1].weight)
      throw Error(ErrorCode::InvalidFiltration, "weight " + std::to_string(step.weight) + " repeated");
    if (!step.space.contains(previous))
      throw Error(ErrorCode::InvalidFiltration,
                  "step at weight " + std::to_string(step.weight) + " does not contain the previous step");
    if (step.space == previous) continue;
    steps_.push_back(step);
    previous = step.space;
  }
  if (!previous.is_full())
    throw Error(ErrorCode::InvalidFiltration, "filtration is not exhaustive (last step has dim " +
                                                  std::to_string(previous.dim()) + " < " +
                                                  std::to_string(ambient_dim) + ")");
}

WeightFiltration WeightFiltration::trivial(std::size_t ambient_dim, int weight) {
  return WeightFiltration(ambient_dim, {{weight, Subspace::full(ambient_dim)}});
}

Subspace WeightFiltration::at(int k) const {
  Subspace result = Subspace::zero(ambient_dim_);
  for (const auto& step : steps_) {
    if (step.weight > k) break;
    result = step.space;
  }
  return result;
}

std::size_t WeightFiltration::graded_dim(int k) const {
  std::size_t lower = 0;
  for (const auto& step : steps_) {
    if (step.weight == k) return step.space.dim() - lower;
    if (step.weight > k) break;
    lower = step.space.dim();
  }
  return 0;
}

std::map<int, std::size_t> WeightFiltration::graded_dims() const {
  std::map<int, std::size_t> dims;
  std::size_t lower = 0;
  for (const auto& step : steps_) {
    dims[step.weight] = step.space.dim() - lower;
    lower = step.space.dim();
  }
  return dims;
}

std::optional<int> WeightFiltration::min_weight() const {
  if (steps_.empty()) return std::nullopt;
  return steps_.front().weight;
}

std::optional<int> WeightFiltration::max_weight() const {
  if (steps_.empty()) return std::nullopt;
  return steps_.back().weight;
}

WeightFiltration WeightFiltration::shifted(int delta) const {
  WeightFiltration out(ambient_dim_);
  out.steps_ = steps_;
  for (auto& step : out.steps_) step.weight += delta;
  return out;
}

WeightFiltration WeightFiltration::transported(const QMatrix& p) const {
  if (p.rows() != ambient_dim_ || p.cols() != ambient_dim_)
    throw Error(ErrorCode::ShapeMismatch, "transport matrix shape");
  std::vector<FiltrationStep> steps;
  for (const auto& step : steps_) steps.push_back({step.weight, map_subspace(p, step.space)});
  return WeightFiltration(ambient_dim_, std::move(steps));
}

namespace {

Subspace embed(const Subspace& s, std::size_t offset, std::size_t ambient) {
  QMatrix rows(s.dim(), ambient);
  for (std::size_t r = 0; r < s.dim(); ++r)
    for (std::size_t c = 0; c < s.ambient_dim(); ++c) rows(r, offset + c) = s.basis()(r, c);
  return Subspace::span(rows);
}

std::set<int> step_weights(const WeightFiltration& f) {
  std::set<int> ws;
  for (const auto& step : f.steps()) ws.insert(step.weight);
  return ws;
}

}  // namespace

WeightFiltration direct_sum(const WeightFiltration& a, const WeightFiltration& b) {
  const std::size_t n = a.ambient_dim() + b.ambient_dim();
  std::set<int> weights = step_weights(a);
  weights.merge(step_weights(b));
  std::vector<FiltrationStep> steps;
  for (int k : weights) {
    steps.push_back({k, sum(embed(a.at(k), 0, n), embed(b.at(k), a.ambient_dim(), n))});
  }
  return WeightFiltration(n, std::move(steps));
}

LabeledGrading LabeledGrading::uniform(const WeightFiltration& f, const std::string& label) {
  LabeledGrading g;
  for (const auto& [k, d] : f.graded_dims()) g.add(k, {label, 0}, d);
  return g;
}

void LabeledGrading::add(int weight, const TwistedLabel& label, std::size_t multiplicity) {
  if (multiplicity == 0) return;
  entries_[weight][label] += multiplicity;
}

std::size_t LabeledGrading::multiplicity_at(int weight) const {
  auto it = entries_.find(weight);
  if (it == entries_.end()) return 0;
  std::size_t total = 0;
  for (const auto& [label, mult] : it->second) total += mult;
  return total;
}

std::size_t LabeledGrading::total() const {
  std::size_t t = 0;
  for (const auto& [k, piece] : entries_) t += multiplicity_at(k);
  return t;
}

LabeledGrading LabeledGrading::twisted(int d) const {
  LabeledGrading out;
  for (const auto& [k, piece] : entries_)
    for (const auto& [label, mult] : piece) out.add(k - twist_shift(d), {label.label, label.twist + d}, mult);
  return out;
}

LabeledGrading LabeledGrading::merged(const LabeledGrading& other) const {
  LabeledGrading out = *this;
  for (const auto& [k, piece] : other.entries_)
    for (const auto& [label, mult] : piece) out.add(k, label, mult);
  return out;
}

std::string to_string(const LabeledGrading& g) {
  std::ostringstream os;
  os << '{';
  bool first_weight = true;
  for (const auto& [k, piece] : g.entries()) {
    if (!first_weight) os << "; ";
    first_weight = false;
    os << k << ": ";
    bool first = true;
    for (const auto& [label, mult] : piece) {
      if (!first) os << " + ";
      first = false;
      if (mult != 1) os << mult << '*';
      os << to_string(label);
    }
  }
  os << '}';
  return os.str();
}

WeightedSpace::WeightedSpace(WeightFiltration filtration, LabeledGrading grading)
    : filtration_(std::move(filtration)), grading_(std::move(grading)) {
  const auto dims = filtration_.graded_dims();
  for (const auto& [k, piece] : grading_.entries()) {
    const auto it = dims.find(k);
    const std::size_t expected = it == dims.end() ? 0 : it->second;
    if (grading_.multiplicity_at(k) != expected)
      throw Error(ErrorCode::InconsistentGrading, "weight " + std::to_string(k) + " carries " +
                                                      std::to_string(grading_.multiplicity_at(k)) +
                                                      " labels but dim Gr = " + std::to_string(expected));
  }
  for (const auto& [k, d] : dims) {
    if (grading_.multiplicity_at(k) != d)
      throw Error(ErrorCode::InconsistentGrading, "weight " + std::to_string(k) + " has dim Gr = " +
                                                      std::to_string(d) + " but carries " +
                                                      std::to_string(grading_.multiplicity_at(k)) + " labels");
  }
}

WeightedSpace::WeightedSpace(WeightFiltration filtration)
    : filtration_(std::move(filtration)), grading_(LabeledGrading::uniform(filtration_)) {}

WeightedSpace direct_sum(const WeightedSpace& a, const WeightedSpace& b) {
  return WeightedSpace(direct_sum(a.filtration(), b.filtration()), a.grading().merged(b.grading()));
}

GradedPiece weight_of_graded_piece(const WeightedSpace& ws, int k) {
  GradedPiece piece{k, ws.filtration().at(k), ws.filtration().at(k - 1), 0};
  piece.dim = piece.upper.dim() - piece.lower.dim();
  return piece;
}

WeightedSpace tate_twist(const WeightedSpace& ws, int d) {
  return WeightedSpace(ws.filtration().shifted(-twist_shift(d)), ws.grading().twisted(d));
}

namespace {

void require_shape(const TwistedMap& map, const WeightedSpace& dom, const WeightedSpace& cod) {
  if (map.matrix.cols() != dom.dim() || map.matrix.rows() != cod.dim())
    throw Error(ErrorCode::ShapeMismatch, "map is " + std::to_string(map.matrix.rows()) + "x" +
                                              std::to_string(map.matrix.cols()) + " but spaces have dims " +
                                              std::to_string(dom.dim()) + " -> " + std::to_string(cod.dim()));
}

}  // namespace

bool check_filtered(const TwistedMap& map, const WeightedSpace& dom, const WeightedSpace& cod, int shift) {
  require_shape(map, dom, cod);
  // W_{k+shift}(cod) only grows with k, so the jumps of dom are the binding cases.
  for (const auto& step : dom.filtration().steps()) {
    if (!cod.filtration().at(step.weight + shift).contains(map_subspace(map.matrix, step.space))) return false;
  }
  return true;
}

bool is_filtered_morphism(const TwistedMap& map, const WeightedSpace& dom, const WeightedSpace& cod) {
  return check_filtered(map, dom, cod, twist_shift(map.twist));
}

bool check_strict(const TwistedMap& map, const WeightedSpace& dom, const WeightedSpace& cod) {
  if (!is_filtered_morphism(map, dom, cod))
    throw Error(ErrorCode::NotFiltered, "check_strict needs a filtered morphism");
  const int shift = twist_shift(map.twist);
  const Subspace im = image(map.matrix);
  // Both sides are step functions of k that can only change at these weights.
  std::set<int> critical;
  for (const auto& step : dom.filtration().steps()) critical.insert(step.weight);
  for (const auto& step : cod.filtration().steps()) critical.insert(step.weight - shift);
  if (!critical.empty()) critical.insert(*critical.begin() - 1);
  for (int k : critical) {
    const Subspace lhs = intersect(im, cod.filtration().at(k + shift));
    const Subspace rhs = map_subspace(map.matrix, dom.filtration().at(k));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

bool weights_at_most(const WeightedSpace& ws, int n) {
  const auto top = ws.filtration().max_weight();
  return !top || *top <= n;
}

bool weights_at_least(const WeightedSpace& ws, int n) {
  const auto bottom = ws.filtration().min_weight();
  return !bottom || *bottom >= n;
}

bool is_pure(const WeightedSpace& ws, int n) { return weights_at_most(ws, n) && weights_at_least(ws, n); }

WeightFiltration induced_filtration_on_subquotient(const WeightFiltration& f, const Subspace& sub,
                                                   const Subspace& total) {
  if (sub.ambient_dim() != f.ambient_dim() || total.ambient_dim() != f.ambient_dim())
    throw Error(ErrorCode::NotContained, "subquotient lives in a different ambient space");
  const QuotientBasis q(sub, total);
  std::vector<FiltrationStep> steps;
  for (const auto& step : f.steps()) {
    const Subspace piece = intersect(step.space, total);
    std::vector<QVector> coords;
    for (std::size_t i = 0; i < piece.dim(); ++i) coords.push_back(q.coordinates(piece.vector(i)));
    steps.push_back({step.weight, Subspace::span(coords, q.dim())});
  }
  if (steps.empty() && q.dim() > 0)
    throw Error(ErrorCode::InvalidFiltration, "empty filtration on a nonzero space");
  return WeightFiltration(q.dim(), std::move(steps));
}

WeightFiltration induced_filtration_on_sub(const WeightedSpace& ws, const Subspace& s) {
  return induced_filtration_on_subquotient(ws.filtration(), Subspace::zero(ws.dim()), s);
}

WeightFiltration induced_filtration_on_quotient(const WeightedSpace& ws, const Subspace& s) {
  return induced_filtration_on_subquotient(ws.filtration(), s, Subspace::full(ws.dim()));
}

}  // namespace nearby

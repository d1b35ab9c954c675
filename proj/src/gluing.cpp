#include "nearby/gluing.hpp"

#include "nearby/error.hpp"

namespace nearby {

namespace {

WeightedSpace with_labels_or_default(WeightFiltration f, const LabeledGrading& candidate) {
  for (const auto& [k, d] : f.graded_dims()) {
    if (candidate.multiplicity_at(k) != d) return WeightedSpace(std::move(f));
  }
  if (candidate.total() != f.ambient_dim()) return WeightedSpace(std::move(f));
  return WeightedSpace(std::move(f), candidate);
}

// Labels that survive to im N ⊆ V(-1) when V carries string-style labels:
// everything except the bottoms of strings (twist 0).
LabeledGrading non_bottom_labels(const LabeledGrading& g) {
  LabeledGrading out;
  for (const auto& [k, piece] : g.entries())
    for (const auto& [label, mult] : piece) {
      if (label.twist != 0) out.add(k, label, mult);
    }
  return out;
}

void require_nilpotent_filtered(const WeightedSpace& v, const TwistedMap& n) {
  if (n.matrix.rows() != v.dim() || n.matrix.cols() != v.dim())
    throw Error(ErrorCode::ShapeMismatch, "N does not act on V");
  if (n.twist != -1) throw Error(ErrorCode::Validation, "N must carry twist -1");
  if (!is_nilpotent(n.matrix)) throw Error(ErrorCode::NotNilpotent, "N is not nilpotent");
  if (!is_filtered_morphism(n, v, v)) throw Error(ErrorCode::NotFiltered, "N does not send W_k into W_{k-2}");
}

// Columns are the basis vectors of s.
QMatrix inclusion(const Subspace& s) { return s.basis().transpose(); }

MapCheck check_map(std::string name, const QMatrix& m, const WeightedSpace& dom, const WeightedSpace& cod) {
  MapCheck check{std::move(name), false, false};
  const TwistedMap map{m, 0};
  check.filtered = is_filtered_morphism(map, dom, cod);
  check.strict = check.filtered && check_strict(map, dom, cod);
  return check;
}

}  // namespace

GluingDatum::GluingDatum(WeightedSpace psi, WeightedSpace phi, TwistedMap can, TwistedMap var)
    : psi_(std::move(psi)), phi_(std::move(phi)), can_(std::move(can)), var_(std::move(var)) {
  if (can_.twist != 0) throw Error(ErrorCode::Validation, "can must carry twist 0");
  if (var_.twist != -1) throw Error(ErrorCode::Validation, "var must carry twist -1");
  if (can_.matrix.rows() != phi_.dim() || can_.matrix.cols() != psi_.dim())
    throw Error(ErrorCode::ShapeMismatch, "can must map psi to phi");
  if (var_.matrix.rows() != psi_.dim() || var_.matrix.cols() != phi_.dim())
    throw Error(ErrorCode::ShapeMismatch, "var must map phi to psi");
  if (!is_nilpotent(monodromy())) throw Error(ErrorCode::NotNilpotent, "var∘can is not nilpotent");
  if (!is_filtered_morphism(can_, psi_, phi_)) throw Error(ErrorCode::NotFiltered, "can is not filtered");
  if (!is_filtered_morphism(var_, phi_, psi_)) throw Error(ErrorCode::NotFiltered, "var is not filtered");
}

GluingDatum direct_sum(const GluingDatum& a, const GluingDatum& b) {
  return GluingDatum(direct_sum(a.psi(), b.psi()), direct_sum(a.phi(), b.phi()),
                     {direct_sum(a.can().matrix, b.can().matrix), 0}, {direct_sum(a.var().matrix, b.var().matrix), -1});
}

PsiData psi_u(const GluingDatum& g) { return {g.psi(), {g.monodromy(), -1}}; }

GluingDatum j_lower_shriek(const WeightedSpace& v, const TwistedMap& n) {
  require_nilpotent_filtered(v, n);
  return GluingDatum(v, v, {QMatrix::identity(v.dim()), 0}, {n.matrix, -1});
}

GluingDatum j_lower_star(const WeightedSpace& v, const TwistedMap& n) {
  require_nilpotent_filtered(v, n);
  return GluingDatum(v, tate_twist(v, -1), {n.matrix, 0}, {QMatrix::identity(v.dim()), -1});
}

GluingDatum j_intermediate(const WeightedSpace& v, const TwistedMap& n) {
  require_nilpotent_filtered(v, n);
  const WeightedSpace twisted = tate_twist(v, -1);
  const Subspace im = image(n.matrix);
  WeightedSpace phi = with_labels_or_default(induced_filtration_on_sub(twisted, im), non_bottom_labels(v.grading()));
  QMatrix can(im.dim(), v.dim());
  for (std::size_t j = 0; j < v.dim(); ++j) {
    const auto coords = im.coordinates(n.matrix.column(j));
    for (std::size_t i = 0; i < im.dim(); ++i) can(i, j) = coords[i];
  }
  return GluingDatum(v, std::move(phi), {std::move(can), 0}, {inclusion(im), -1});
}

GluingDatum i_lower_star(const WeightedSpace& point) {
  return GluingDatum(WeightedSpace::zero(), point, {QMatrix(point.dim(), 0), 0}, {QMatrix(0, point.dim()), -1});
}

Subquotient make_subquotient(const WeightedSpace& ambient, const Subspace& sub, const Subspace& total) {
  return {sub, total, induced_filtration_on_subquotient(ambient.filtration(), sub, total)};
}

TwoTermComplex::TwoTermComplex(int lowest_degree, WeightedSpace source, WeightedSpace target, QMatrix d)
    : lowest_degree_(lowest_degree), source_(std::move(source)), target_(std::move(target)), d_(std::move(d)) {
  const TwistedMap map{d_, 0};
  if (!is_filtered_morphism(map, source_, target_))
    throw Error(ErrorCode::NotFiltered, "complex differential is not filtered");
}

Subquotient TwoTermComplex::cohomology(int degree) const {
  if (degree == lowest_degree_) return make_subquotient(source_, Subspace::zero(source_.dim()), kernel(d_));
  if (degree == lowest_degree_ + 1) return make_subquotient(target_, image(d_), Subspace::full(target_.dim()));
  return {Subspace::zero(0), Subspace::zero(0), WeightFiltration(0)};
}

TwoTermComplex i_upper_star(const GluingDatum& g) { return TwoTermComplex(-1, g.psi(), g.phi(), g.can().matrix); }

TwoTermComplex i_upper_shriek(const GluingDatum& g) {
  return TwoTermComplex(0, g.phi(), tate_twist(g.psi(), -1), g.var().matrix);
}

SequenceReport verify_monodromy_sequence(const WeightedSpace& v, const TwistedMap& n) {
  const GluingDatum star = j_lower_star(v, n);
  const TwoTermComplex cx = i_upper_star(star);
  const WeightedSpace& twisted = star.phi();

  const Subquotient h_minus = cx.cohomology(-1);
  const Subquotient h_zero = cx.cohomology(0);
  const WeightedSpace a(h_minus.filtration);
  const WeightedSpace c(h_zero.filtration);
  const QMatrix incl = inclusion(h_minus.total);
  const QMatrix proj = QuotientBasis(h_zero.sub, h_zero.total).projection();

  SequenceReport report;
  report.dims = {a.dim(), v.dim(), twisted.dim(), c.dim()};

  auto position = [&](std::string name, const Subspace& im, const Subspace& ker) {
    PositionCheck p{std::move(name), im == ker, ""};
    if (!p.exact) p.detail = "image " + to_string(im) + " vs kernel " + to_string(ker);
    report.positions.push_back(std::move(p));
  };
  position("H^-1(i^*j_*M)", Subspace::zero(a.dim()), kernel(incl));
  position("Psi", image(incl), kernel(n.matrix));
  position("Psi(-1)", image(n.matrix), kernel(proj));
  position("H^0(i^*j_*M)", image(proj), Subspace::full(c.dim()));

  report.maps.push_back(check_map("H^-1 -> Psi", incl, a, v));
  report.maps.push_back(check_map("N: Psi -> Psi(-1)", n.matrix, v, twisted));
  report.maps.push_back(check_map("Psi(-1) -> H^0", proj, twisted, c));

  report.exact = true;
  for (const auto& p : report.positions) report.exact = report.exact && p.exact;
  report.strict = true;
  for (const auto& m : report.maps) report.strict = report.strict && m.filtered && m.strict;
  report.passed = report.exact && report.strict;
  return report;
}

IntermediateStalkReport verify_intermediate_stalks(const WeightedSpace& v, const TwistedMap& n) {
  const GluingDatum ic = j_intermediate(v, n);
  IntermediateStalkReport report;

  {
    const TwoTermComplex cx = i_upper_star(ic);
    const Subquotient h = cx.cohomology(-1);
    const Subspace ker = kernel(n.matrix);
    auto& side = report.kernel_side;
    side.dim = h.dim();
    side.subspace_matches = h.sub.is_zero() && h.total == ker;
    side.filtration_matches = h.filtration == induced_filtration_on_sub(v, ker);
    side.complementary_vanishes = cx.cohomology(0).dim() == 0;
    if (!side.subspace_matches) side.detail = "H^-1 = " + to_string(h.total) + ", ker N = " + to_string(ker);
  }
  {
    const TwoTermComplex cx = i_upper_shriek(ic);
    const Subquotient h = cx.cohomology(1);
    const Subspace im = image(n.matrix);
    const WeightedSpace twisted = tate_twist(v, -1);
    auto& side = report.cokernel_side;
    side.dim = h.dim();
    side.subspace_matches = h.total.is_full() && h.total.ambient_dim() == v.dim() && h.sub == im;
    side.filtration_matches = h.filtration == induced_filtration_on_quotient(twisted, im);
    side.complementary_vanishes = cx.cohomology(0).dim() == 0;
    if (!side.subspace_matches) side.detail = "H^1 = Psi(-1)/" + to_string(h.sub) + ", im N = " + to_string(im);
  }
  auto ok = [](const CohomologyMatch& m) {
    return m.subspace_matches && m.filtration_matches && m.complementary_vanishes;
  };
  report.passed = ok(report.kernel_side) && ok(report.cokernel_side);
  return report;
}

}  // namespace nearby

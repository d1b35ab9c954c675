#include "nearby/qlinalg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "nearby/error.hpp"

namespace nearby {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotCompatible: return "NotCompatible";
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::NotFiltered: return "NotFiltered";
    case ErrorCode::InvalidFiltration: return "InvalidFiltration";
    case ErrorCode::InconsistentGrading: return "InconsistentGrading";
    case ErrorCode::BadSupport: return "BadSupport";
    case ErrorCode::NotPure: return "NotPure";
    case ErrorCode::GradedKernelMismatch: return "GradedKernelMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::Validation: return "ValidationError";
    case ErrorCode::Parse: return "ParseError";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

void require_ambient(std::size_t a, std::size_t b, const char* where) {
  if (a != b) {
    throw Error(ErrorCode::AmbientMismatch,
                std::string(where) + ": ambient dimensions " + std::to_string(a) + " and " + std::to_string(b));
  }
}

// In-place Gauss-Jordan; returns pivot columns.
std::vector<std::size_t> eliminate(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(lead_row, j));
    }
    const Rational inv = 1 / m(lead_row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c) == 0) continue;
      const Rational f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) -= f * m(lead_row, j);
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return pivots;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) return std::nullopt;
  Rational q(n, d);
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

std::string format_rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str(10);
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::ShapeMismatch, "ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::ShapeMismatch, "row length differs from column count");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& cols, std::size_t rows) {
  return from_rows(cols, rows).transpose();
}

QVector QMatrix::row(std::size_t r) const {
  return QVector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                 entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

QVector QMatrix::column(std::size_t c) const {
  QVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

QVector QMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw Error(ErrorCode::ShapeMismatch, "vector length differs from column count");
  QVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if ((*this)(r, c) != 0 && v[c] != 0) acc += (*this)(r, c) * v[c];
    }
    out[r] = acc;
  }
  return out;
}

QMatrix QMatrix::pow(unsigned k) const {
  if (!is_square()) throw Error(ErrorCode::ShapeMismatch, "power of a non-square matrix");
  QMatrix result = identity(rows_);
  for (unsigned i = 0; i < k; ++i) result = result * *this;
  return result;
}

bool QMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return q == 0; });
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::ShapeMismatch, "matrix product shape");
  QMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j) != 0) out(i, j) += a(i, k) * b(k, j);
      }
    }
  return out;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::ShapeMismatch, "matrix sum shape");
  QMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::ShapeMismatch, "matrix difference shape");
  QMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
  return out;
}

QMatrix direct_sum(const QMatrix& a, const QMatrix& b) {
  QMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
  return out;
}

QMatrix vstack(const QMatrix& top, const QMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw Error(ErrorCode::ShapeMismatch, "vstack column counts differ");
  QMatrix out(top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) out(r, c) = top(r, c);
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) out(top.rows() + r, c) = bottom(r, c);
  return out;
}

std::string to_string(const QMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ", ";
      os << format_rational(m(r, c));
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

QMatrix rref(const QMatrix& m) {
  QMatrix out = m;
  eliminate(out);
  return out;
}

std::size_t rank(const QMatrix& m) {
  QMatrix work = m;
  return eliminate(work).size();
}

QMatrix inverse(const QMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::ShapeMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const auto pivots = eliminate(aug);
  if (n > 0 && (pivots.size() < n || pivots[n - 1] != n - 1)) throw Error(ErrorCode::Singular, "matrix is not invertible");
  QMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

bool is_nilpotent(const QMatrix& m) {
  if (!m.is_square()) return false;
  return m.pow(static_cast<unsigned>(m.rows())).is_zero();
}

Subspace Subspace::span(const QMatrix& rows) {
  QMatrix work = rows;
  auto pivots = eliminate(work);
  Subspace s(rows.cols());
  s.basis_ = QMatrix(pivots.size(), rows.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = 0; c < rows.cols(); ++c) s.basis_(r, c) = work(r, c);
  s.pivots_ = std::move(pivots);
  return s;
}

Subspace Subspace::span(const std::vector<QVector>& vectors, std::size_t ambient_dim) {
  return span(QMatrix::from_rows(vectors, ambient_dim));
}

QVector Subspace::reduce(std::span<const Rational> v) const {
  require_ambient(v.size(), ambient_dim(), "Subspace::reduce");
  QVector out(v.begin(), v.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Rational f = out[pivots_[i]];
    if (f == 0) continue;
    for (std::size_t c = 0; c < out.size(); ++c) out[c] -= f * basis_(i, c);
  }
  return out;
}

bool Subspace::contains(std::span<const Rational> v) const {
  const auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Rational& q) { return q == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  require_ambient(ambient_dim(), other.ambient_dim(), "Subspace::contains");
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.vector(i))) return false;
  }
  return true;
}

QVector Subspace::coordinates(std::span<const Rational> v) const {
  if (!contains(v)) throw Error(ErrorCode::NotContained, "vector is not in the subspace");
  QVector coords(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) coords[i] = v[pivots_[i]];
  return coords;
}

std::string to_string(const Subspace& s) {
  return "span" + to_string(s.basis()) + " in Q^" + std::to_string(s.ambient_dim());
}

Subspace kernel(const QMatrix& m) {
  QMatrix work = m;
  const auto pivots = eliminate(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<QVector> vectors;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -work(i, f);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(vectors, m.cols());
}

Subspace image(const QMatrix& m) { return Subspace::span(m.transpose()); }

Subspace sum(const Subspace& a, const Subspace& b) {
  require_ambient(a.ambient_dim(), b.ambient_dim(), "sum");
  return Subspace::span(vstack(a.basis(), b.basis()));
}

Subspace annihilator(const Subspace& s) { return kernel(s.basis()); }

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_ambient(a.ambient_dim(), b.ambient_dim(), "intersect");
  // a ∩ b is cut out by the union of both sets of defining equations.
  return kernel(vstack(annihilator(a).basis(), annihilator(b).basis()));
}

Subspace preimage(const QMatrix& m, const Subspace& s) {
  require_ambient(m.rows(), s.ambient_dim(), "preimage");
  return kernel(annihilator(s).basis() * m);
}

Subspace map_subspace(const QMatrix& m, const Subspace& s) {
  require_ambient(m.cols(), s.ambient_dim(), "map_subspace");
  return Subspace::span((m * s.basis().transpose()).transpose());
}

QuotientBasis::QuotientBasis(Subspace sub, Subspace total) : sub_(std::move(sub)), total_(std::move(total)) {
  require_ambient(sub_.ambient_dim(), total_.ambient_dim(), "QuotientBasis");
  if (!total_.contains(sub_)) throw Error(ErrorCode::NotContained, "quotient: sub is not inside total");
  std::vector<QVector> reduced;
  reduced.reserve(total_.dim());
  for (std::size_t i = 0; i < total_.dim(); ++i) reduced.push_back(sub_.reduce(total_.vector(i)));
  complement_ = Subspace::span(reduced, total_.ambient_dim());
}

QVector QuotientBasis::coordinates(std::span<const Rational> v) const {
  if (!total_.contains(v)) throw Error(ErrorCode::NotContained, "quotient: vector is not inside total");
  return complement_.coordinates(sub_.reduce(v));
}

QMatrix QuotientBasis::projection() const {
  // Reduction modulo sub is linear, so apply it to each standard basis vector.
  const std::size_t n = total_.ambient_dim();
  QMatrix p(dim(), n);
  for (std::size_t j = 0; j < n; ++j) {
    QVector e(n);
    e[j] = 1;
    const auto r = sub_.reduce(e);
    for (std::size_t i = 0; i < dim(); ++i) p(i, j) = r[complement_.pivots()[i]];
  }
  return p;
}

QMatrix induced_map_on_quotient(const QMatrix& m, const Subspace& sub_dom, const Subspace& sub_cod,
                                const Subspace& quot_dom, const Subspace& quot_cod) {
  require_ambient(m.cols(), quot_dom.ambient_dim(), "induced_map_on_quotient(domain)");
  require_ambient(m.rows(), quot_cod.ambient_dim(), "induced_map_on_quotient(codomain)");
  const QuotientBasis dom(sub_dom, quot_dom);
  const QuotientBasis cod(sub_cod, quot_cod);
  if (!quot_cod.contains(map_subspace(m, quot_dom)))
    throw Error(ErrorCode::NotCompatible, "map does not send quot_dom into quot_cod");
  if (!sub_cod.contains(map_subspace(m, sub_dom)))
    throw Error(ErrorCode::NotCompatible, "map does not send sub_dom into sub_cod");
  QMatrix out(cod.dim(), dom.dim());
  for (std::size_t j = 0; j < dom.dim(); ++j) {
    const auto col = cod.coordinates(m.apply(dom.complement().vector(j)));
    for (std::size_t i = 0; i < cod.dim(); ++i) out(i, j) = col[i];
  }
  return out;
}

}  // namespace nearby

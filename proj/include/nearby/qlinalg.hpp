#pragma once

// Exact dense linear algebra over Q. Subspaces are stored by their reduced
// row echelon basis, so equal subspaces compare equal structurally.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nearby {

using Rational = mpq_class;
using QVector = std::vector<Rational>;

// Accepts "p" or "p/q" with an optional leading '-'; q must be nonzero.
std::optional<Rational> parse_rational(std::string_view text);
std::string format_rational(const Rational& q);

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix zero(std::size_t rows, std::size_t cols) { return QMatrix(rows, cols); }
  // Each inner vector becomes one row; all must have length `cols`.
  static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);
  static QMatrix from_columns(const std::vector<QVector>& cols, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  QVector row(std::size_t r) const;
  QVector column(std::size_t c) const;
  std::span<const Rational> entries() const noexcept { return entries_; }

  QMatrix transpose() const;
  QVector apply(std::span<const Rational> v) const;
  QMatrix pow(unsigned k) const;
  bool is_zero() const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

QMatrix direct_sum(const QMatrix& a, const QMatrix& b);
QMatrix vstack(const QMatrix& top, const QMatrix& bottom);
std::string to_string(const QMatrix& m);

QMatrix rref(const QMatrix& m);
std::size_t rank(const QMatrix& m);
// Throws Singular.
QMatrix inverse(const QMatrix& m);
bool is_nilpotent(const QMatrix& m);

class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : basis_(0, ambient_dim) {}

  // Row space of `rows`.
  static Subspace span(const QMatrix& rows);
  static Subspace span(const std::vector<QVector>& vectors, std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim) { return span(QMatrix::identity(ambient_dim)); }
  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }

  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_dim(); }

  // RREF rows, no zero rows.
  const QMatrix& basis() const noexcept { return basis_; }
  QVector vector(std::size_t i) const { return basis_.row(i); }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(std::span<const Rational> v) const;
  bool contains(const Subspace& other) const;
  // Coefficients of v in the RREF basis; throws NotContained.
  QVector coordinates(std::span<const Rational> v) const;
  // v minus its component along this subspace's pivot coordinates.
  QVector reduce(std::span<const Rational> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.basis_ == b.basis_;
  }

 private:
  QMatrix basis_;
  std::vector<std::size_t> pivots_;
};

std::string to_string(const Subspace& s);

Subspace kernel(const QMatrix& m);
Subspace image(const QMatrix& m);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
// {v : m v in s}.
Subspace preimage(const QMatrix& m, const Subspace& s);
// m(s).
Subspace map_subspace(const QMatrix& m, const Subspace& s);
// Linear functionals vanishing on s, as a subspace of the dual.
Subspace annihilator(const Subspace& s);

// A chosen basis of total/sub. The complement vectors are the RREF of the
// total basis reduced modulo sub, so they vanish on sub's pivot columns and
// the choice is deterministic.
class QuotientBasis {
 public:
  QuotientBasis(Subspace sub, Subspace total);

  const Subspace& sub() const noexcept { return sub_; }
  const Subspace& total() const noexcept { return total_; }
  const Subspace& complement() const noexcept { return complement_; }
  std::size_t dim() const noexcept { return complement_.dim(); }

  // Coordinates of the class of v; v must lie in total.
  QVector coordinates(std::span<const Rational> v) const;
  // Matrix sending ambient vectors of `total` to quotient coordinates.
  QMatrix projection() const;

 private:
  Subspace sub_;
  Subspace total_;
  Subspace complement_;
};

// Matrix of quot_dom/sub_dom -> quot_cod/sub_cod induced by m, in the
// QuotientBasis coordinates on each side. Throws NotContained when a sub is
// not inside its quot and NotCompatible when m fails to respect either pair.
QMatrix induced_map_on_quotient(const QMatrix& m, const Subspace& sub_dom, const Subspace& sub_cod,
                                const Subspace& quot_dom, const Subspace& quot_cod);

}  // namespace nearby

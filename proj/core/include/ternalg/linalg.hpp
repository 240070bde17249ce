#pragma once

#include <initializer_list>
#include <vector>

#include "ternalg/scalar.hpp"

namespace ternalg {

using Vec = std::vector<Scalar>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& a);
Vec vec_neg(const Vec& a);
Vec vec_conj(const Vec& a);
bool vec_is_zero(const Vec& a);
bool vec_is_real(const Vec& a);
Vec basis_vec(int dim, int i);
std::string to_string(const Vec& v);

/// Square matrix over Scalar; column j is the image of basis vector e_j.
class LinearMap {
 public:
  LinearMap() = default;
  explicit LinearMap(int dim) : dim_(dim), m_(static_cast<size_t>(dim) * dim) {}

  static LinearMap identity(int dim);
  static LinearMap diagonal(const Vec& entries);
  static LinearMap from_rows(std::initializer_list<std::initializer_list<Scalar>> rows);

  int dim() const { return dim_; }
  const Scalar& at(int r, int c) const { return m_[static_cast<size_t>(r) * dim_ + c]; }
  Scalar& at(int r, int c) { return m_[static_cast<size_t>(r) * dim_ + c]; }

  Vec apply(const Vec& v) const;
  LinearMap compose(const LinearMap& inner) const;  // this ∘ inner
  LinearMap transpose() const;
  LinearMap inverse() const;  // throws SingularMap
  LinearMap conj() const;
  Scalar determinant() const;

  LinearMap operator+(const LinearMap& o) const;
  LinearMap operator-(const LinearMap& o) const;
  LinearMap operator-() const;
  LinearMap scaled(const Scalar& c) const;

  bool operator==(const LinearMap& o) const { return dim_ == o.dim_ && m_ == o.m_; }
  bool operator!=(const LinearMap& o) const { return !(*this == o); }
  bool is_identity() const;
  bool is_zero() const;
  bool is_real() const;
  bool commutes_with(const LinearMap& o) const;

 private:
  int dim_ = 0;
  std::vector<Scalar> m_;
};

/// Rectangular matrix (rows x cols); column j is the image of e_j.  Used for
/// maps between spaces of different dimension (O-operator candidates).
class RectMap {
 public:
  RectMap() = default;
  RectMap(int rows, int cols) : rows_(rows), cols_(cols), m_(static_cast<size_t>(rows) * cols) {}
  explicit RectMap(const LinearMap& m);

  static RectMap zero(int rows, int cols) { return RectMap(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Scalar& at(int r, int c) const { return m_[static_cast<size_t>(r) * cols_ + c]; }
  Scalar& at(int r, int c) { return m_[static_cast<size_t>(r) * cols_ + c]; }

  Vec apply(const Vec& v) const;
  RectMap after(const LinearMap& inner) const;    // this ∘ inner (inner square on cols)
  RectMap before(const LinearMap& outer) const;   // outer ∘ this (outer square on rows)
  /// Square view; throws DimMismatch unless rows == cols.
  LinearMap square() const;

  bool operator==(const RectMap& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && m_ == o.m_;
  }
  bool operator!=(const RectMap& o) const { return !(*this == o); }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> m_;
};

/// Bilinear form b[i][j] = B(e_i, e_j).
class BilinearForm {
 public:
  BilinearForm() = default;
  explicit BilinearForm(int dim) : dim_(dim), b_(static_cast<size_t>(dim) * dim) {}

  int dim() const { return dim_; }
  const Scalar& at(int i, int j) const { return b_[static_cast<size_t>(i) * dim_ + j]; }
  Scalar& at(int i, int j) { return b_[static_cast<size_t>(i) * dim_ + j]; }

  Scalar value(const Vec& u, const Vec& v) const;
  bool is_skew() const;
  bool is_degenerate() const;
  /// (e_i -> sum_j B(e_i,e_j) xi_j) as a matrix, i.e. the transpose of b.
  LinearMap pairing_map() const;

  bool operator==(const BilinearForm& o) const { return dim_ == o.dim_ && b_ == o.b_; }

 private:
  int dim_ = 0;
  std::vector<Scalar> b_;
};

/// Reduced row-echelon span basis of the given vectors (canonical basis of
/// their span).  Rows come back with leading coefficient 1, sorted by pivot.
std::vector<Vec> rref_span(const std::vector<Vec>& vectors, int dim);

/// Whether v lies in the span of an rref basis.
bool in_span(const std::vector<Vec>& rref_basis, const Vec& v);

}  // namespace ternalg

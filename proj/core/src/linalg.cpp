#include "ternalg/linalg.hpp"

#include <cstddef>

namespace ternalg {

namespace {

void require_same_dim(size_t a, size_t b) {
  if (a != b) throw DimMismatch("vector dimensions differ");
}

}  // namespace

Vec vec_add(const Vec& a, const Vec& b) {
  require_same_dim(a.size(), b.size());
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  require_same_dim(a.size(), b.size());
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vec_scale(const Scalar& c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

Vec vec_neg(const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Vec vec_conj(const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i].conj();
  return r;
}

bool vec_is_zero(const Vec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

bool vec_is_real(const Vec& a) {
  for (const auto& x : a)
    if (!x.is_real()) return false;
  return true;
}

Vec basis_vec(int dim, int i) {
  Vec v(dim);
  v[i] = Scalar(1);
  return v;
}

std::string to_string(const Vec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

LinearMap LinearMap::identity(int dim) {
  LinearMap m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = Scalar(1);
  return m;
}

LinearMap LinearMap::diagonal(const Vec& entries) {
  LinearMap m(static_cast<int>(entries.size()));
  for (int i = 0; i < m.dim_; ++i) m.at(i, i) = entries[i];
  return m;
}

LinearMap LinearMap::from_rows(std::initializer_list<std::initializer_list<Scalar>> rows) {
  LinearMap m(static_cast<int>(rows.size()));
  int r = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != m.dim_) throw DimMismatch("ragged matrix rows");
    int c = 0;
    for (const auto& x : row) m.at(r, c++) = x;
    ++r;
  }
  return m;
}

Vec LinearMap::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != dim_) throw DimMismatch("map/vector dimension mismatch");
  Vec r(dim_);
  for (int c = 0; c < dim_; ++c) {
    if (v[c].is_zero()) continue;
    for (int row = 0; row < dim_; ++row) {
      const Scalar& e = at(row, c);
      if (!e.is_zero()) r[row] += e * v[c];
    }
  }
  return r;
}

LinearMap LinearMap::compose(const LinearMap& inner) const {
  if (dim_ != inner.dim_) throw DimMismatch("map composition dimension mismatch");
  LinearMap r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int k = 0; k < dim_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < dim_; ++j) {
        const Scalar& b = inner.at(k, j);
        if (!b.is_zero()) r.at(i, j) += a * b;
      }
    }
  return r;
}

LinearMap LinearMap::transpose() const {
  LinearMap r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r.at(j, i) = at(i, j);
  return r;
}

LinearMap LinearMap::inverse() const {
  LinearMap a = *this;
  LinearMap inv = identity(dim_);
  int row = 0;
  for (int col = 0; col < dim_ && row < dim_; ++col) {
    int piv = -1;
    for (int r = row; r < dim_; ++r)
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw SingularMap("matrix is singular");
    for (int c = 0; c < dim_; ++c) {
      std::swap(a.at(row, c), a.at(piv, c));
      std::swap(inv.at(row, c), inv.at(piv, c));
    }
    Scalar p = a.at(row, col).inverse();
    for (int c = 0; c < dim_; ++c) {
      a.at(row, c) *= p;
      inv.at(row, c) *= p;
    }
    for (int r = 0; r < dim_; ++r) {
      if (r == row || a.at(r, col).is_zero()) continue;
      Scalar f = a.at(r, col);
      for (int c = 0; c < dim_; ++c) {
        a.at(r, c) -= f * a.at(row, c);
        inv.at(r, c) -= f * inv.at(row, c);
      }
    }
    ++row;
  }
  if (row < dim_) throw SingularMap("matrix is singular");
  return inv;
}

LinearMap LinearMap::conj() const {
  LinearMap r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r.at(i, j) = at(i, j).conj();
  return r;
}

Scalar LinearMap::determinant() const {
  LinearMap a = *this;
  Scalar det(1);
  int row = 0;
  for (int col = 0; col < dim_; ++col) {
    int piv = -1;
    for (int r = row; r < dim_; ++r)
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return Scalar(0);
    if (piv != row) {
      for (int c = 0; c < dim_; ++c) std::swap(a.at(row, c), a.at(piv, c));
      det = -det;
    }
    det *= a.at(row, col);
    Scalar p = a.at(row, col).inverse();
    for (int r = row + 1; r < dim_; ++r) {
      if (a.at(r, col).is_zero()) continue;
      Scalar f = a.at(r, col) * p;
      for (int c = col; c < dim_; ++c) a.at(r, c) -= f * a.at(row, c);
    }
    ++row;
  }
  return det;
}

LinearMap LinearMap::operator+(const LinearMap& o) const {
  if (dim_ != o.dim_) throw DimMismatch("map addition dimension mismatch");
  LinearMap r(dim_);
  for (size_t i = 0; i < m_.size(); ++i) r.m_[i] = m_[i] + o.m_[i];
  return r;
}

LinearMap LinearMap::operator-(const LinearMap& o) const {
  if (dim_ != o.dim_) throw DimMismatch("map subtraction dimension mismatch");
  LinearMap r(dim_);
  for (size_t i = 0; i < m_.size(); ++i) r.m_[i] = m_[i] - o.m_[i];
  return r;
}

LinearMap LinearMap::operator-() const {
  LinearMap r(dim_);
  for (size_t i = 0; i < m_.size(); ++i) r.m_[i] = -m_[i];
  return r;
}

LinearMap LinearMap::scaled(const Scalar& c) const {
  LinearMap r(dim_);
  for (size_t i = 0; i < m_.size(); ++i) r.m_[i] = c * m_[i];
  return r;
}

bool LinearMap::is_identity() const { return *this == identity(dim_); }

bool LinearMap::is_zero() const {
  for (const auto& x : m_)
    if (!x.is_zero()) return false;
  return true;
}

bool LinearMap::is_real() const {
  for (const auto& x : m_)
    if (!x.is_real()) return false;
  return true;
}

bool LinearMap::commutes_with(const LinearMap& o) const {
  return compose(o) == o.compose(*this);
}

RectMap::RectMap(const LinearMap& m) : RectMap(m.dim(), m.dim()) {
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) at(r, c) = m.at(r, c);
}

Vec RectMap::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw DimMismatch("map/vector dimension mismatch");
  Vec r(rows_);
  for (int c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (int row = 0; row < rows_; ++row) {
      const Scalar& e = at(row, c);
      if (!e.is_zero()) r[row] += e * v[c];
    }
  }
  return r;
}

RectMap RectMap::after(const LinearMap& inner) const {
  if (inner.dim() != cols_) throw DimMismatch("map composition dimension mismatch");
  RectMap r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      for (int k = 0; k < cols_; ++k)
        if (!at(i, k).is_zero() && !inner.at(k, j).is_zero()) r.at(i, j) += at(i, k) * inner.at(k, j);
  return r;
}

RectMap RectMap::before(const LinearMap& outer) const {
  if (outer.dim() != rows_) throw DimMismatch("map composition dimension mismatch");
  RectMap r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      for (int k = 0; k < rows_; ++k)
        if (!outer.at(i, k).is_zero() && !at(k, j).is_zero()) r.at(i, j) += outer.at(i, k) * at(k, j);
  return r;
}

LinearMap RectMap::square() const {
  if (rows_ != cols_) throw DimMismatch("rectangular map where a square one is required");
  LinearMap m(rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
  return m;
}

Scalar BilinearForm::value(const Vec& u, const Vec& v) const {
  if (static_cast<int>(u.size()) != dim_ || static_cast<int>(v.size()) != dim_)
    throw DimMismatch("form/vector dimension mismatch");
  Scalar s(0);
  for (int i = 0; i < dim_; ++i) {
    if (u[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (v[j].is_zero()) continue;
      s += u[i] * v[j] * at(i, j);
    }
  }
  return s;
}

bool BilinearForm::is_skew() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      if (at(i, j) != -at(j, i)) return false;
  return true;
}

bool BilinearForm::is_degenerate() const {
  return pairing_map().determinant().is_zero();
}

LinearMap BilinearForm::pairing_map() const {
  LinearMap m(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m.at(j, i) = at(i, j);
  return m;
}

std::vector<Vec> rref_span(const std::vector<Vec>& vectors, int dim) {
  std::vector<Vec> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != dim) throw DimMismatch("rref vector dimension mismatch");
    rows.push_back(v);
  }
  size_t rr = 0;
  std::vector<int> pivots;
  for (int c = 0; c < dim && rr < rows.size(); ++c) {
    size_t piv = rr;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rr], rows[piv]);
    Scalar p = rows[rr][c].inverse();
    for (auto& x : rows[rr]) x *= p;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rr || rows[r][c].is_zero()) continue;
      Scalar f = rows[r][c];
      for (int cc = 0; cc < dim; ++cc) rows[r][cc] -= f * rows[rr][cc];
    }
    pivots.push_back(c);
    ++rr;
  }
  rows.resize(rr);
  return rows;
}

bool in_span(const std::vector<Vec>& rref_basis, const Vec& v) {
  Vec rem = v;
  for (const auto& row : rref_basis) {
    int pivot = -1;
    for (size_t c = 0; c < row.size(); ++c)
      if (!row[c].is_zero()) {
        pivot = static_cast<int>(c);
        break;
      }
    if (pivot < 0) continue;
    const Scalar& co = rem[pivot];
    if (co.is_zero()) continue;
    Scalar f = co;  // row has leading 1
    for (size_t c = 0; c < row.size(); ++c) rem[c] -= f * row[c];
  }
  return vec_is_zero(rem);
}

}  // namespace ternalg

#include "ternalg/tensor.hpp"

namespace ternalg {

Vec TriTensor::basis_product(int i, int j, int k) const {
  Vec v(dim_);
  for (int l = 0; l < dim_; ++l) v[l] = at(i, j, k, l);
  return v;
}

Vec TriTensor::eval(const Vec& x, const Vec& y, const Vec& z) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_ ||
      static_cast<int>(z.size()) != dim_)
    throw DimMismatch("tri_eval dimension mismatch");
  Vec r(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar cij = x[i] * y[j];
      for (int k = 0; k < dim_; ++k) {
        if (z[k].is_zero()) continue;
        Scalar c = cij * z[k];
        for (int l = 0; l < dim_; ++l) {
          const Scalar& e = at(i, j, k, l);
          if (!e.is_zero()) r[l] += c * e;
        }
      }
    }
  }
  return r;
}

TriTensor TriTensor::operator+(const TriTensor& o) const {
  if (dim_ != o.dim_) throw DimMismatch("tensor addition dimension mismatch");
  TriTensor r(dim_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

TriTensor TriTensor::operator-(const TriTensor& o) const {
  if (dim_ != o.dim_) throw DimMismatch("tensor subtraction dimension mismatch");
  TriTensor r(dim_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

TriTensor TriTensor::operator-() const {
  TriTensor r(dim_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
  return r;
}

TriTensor TriTensor::scaled(const Scalar& c) const {
  TriTensor r(dim_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c * c_[i];
  return r;
}

TriTensor TriTensor::conj() const {
  TriTensor r(dim_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i].conj();
  return r;
}

bool TriTensor::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

bool TriTensor::is_real() const {
  for (const auto& x : c_)
    if (!x.is_real()) return false;
  return true;
}

TriTensor TriTensor::permuted(const std::array<int, 3>& perm) const {
  TriTensor r(dim_);
  int args[3];
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) {
        args[perm[0]] = i;
        args[perm[1]] = j;
        args[perm[2]] = k;
        for (int l = 0; l < dim_; ++l) {
          const Scalar& e = at(i, j, k, l);
          if (!e.is_zero()) r.at(args[0], args[1], args[2], l) += e;
        }
      }
  return r;
}

TriTensor TriTensor::twisted(const LinearMap* a1, const LinearMap* a2, const LinearMap* a3,
                             const LinearMap* post) const {
  for (const LinearMap* m : {a1, a2, a3, post})
    if (m && m->dim() != dim_) throw DimMismatch("twist map dimension mismatch");
  TriTensor r(dim_);
  Vec x, y, z;
  for (int i = 0; i < dim_; ++i) {
    x = a1 ? a1->apply(basis_vec(dim_, i)) : basis_vec(dim_, i);
    for (int j = 0; j < dim_; ++j) {
      y = a2 ? a2->apply(basis_vec(dim_, j)) : basis_vec(dim_, j);
      for (int k = 0; k < dim_; ++k) {
        z = a3 ? a3->apply(basis_vec(dim_, k)) : basis_vec(dim_, k);
        Vec v = eval(x, y, z);
        if (post) v = post->apply(v);
        for (int l = 0; l < dim_; ++l)
          if (!v[l].is_zero()) r.at(i, j, k, l) = v[l];
      }
    }
  }
  return r;
}

std::vector<TriTensor::Entry> TriTensor::nonzero() const {
  std::vector<Entry> out;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        for (int l = 0; l < dim_; ++l) {
          const Scalar& e = at(i, j, k, l);
          if (!e.is_zero()) out.push_back({i, j, k, l, &e});
        }
  return out;
}

TriTensor tri_twist(const TriTensor& t, const LinearMap& a, const std::vector<int>& slots,
                    const LinearMap* post) {
  const LinearMap* m[3] = {nullptr, nullptr, nullptr};
  for (int s : slots) {
    if (s < 1 || s > 3) throw RangeError("twist slot out of range");
    m[s - 1] = &a;
  }
  return t.twisted(m[0], m[1], m[2], post);
}

Vec tri_eval(const TriTensor& t, const Vec& x, const Vec& y, const Vec& z) {
  return t.eval(x, y, z);
}

TriTensor cyclic_sum(const TriTensor& t) {
  return t + t.permuted({1, 2, 0}) + t.permuted({2, 0, 1});
}

TriTensor horizontal_tensor(const TriTensor& nw, const TriTensor& ne) {
  return nw + ne - ne.permuted({1, 0, 2});
}

TriTensor vertical_tensor(const TriTensor& nw, const TriTensor& ne) {
  return nw + ne.permuted({2, 0, 1}) - ne.permuted({2, 1, 0});
}

Vec BiTensor::basis_product(int i, int j) const {
  Vec v(dim_);
  for (int l = 0; l < dim_; ++l) v[l] = at(i, j, l);
  return v;
}

Vec BiTensor::eval(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw DimMismatch("binary eval dimension mismatch");
  Vec r(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar c = x[i] * y[j];
      for (int l = 0; l < dim_; ++l) {
        const Scalar& e = at(i, j, l);
        if (!e.is_zero()) r[l] += c * e;
      }
    }
  }
  return r;
}

bool BiTensor::is_skew() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int l = 0; l < dim_; ++l)
        if (at(i, j, l) != -at(j, i, l)) return false;
  return true;
}

bool BiTensor::is_real() const {
  for (const auto& x : c_)
    if (!x.is_real()) return false;
  return true;
}

FiveTensor::FiveTensor(int dim)
    : dim_(dim),
      c_(static_cast<size_t>(dim) * dim * dim * dim * dim * dim) {}

void FiveTensor::add_composed(const TriTensor& outer, int pos, const TriTensor& inner,
                              const std::array<int, 2>& outer_vars,
                              const std::array<int, 3>& inner_vars, const Scalar& sign) {
  if (outer.dim() != dim_ || inner.dim() != dim_)
    throw DimMismatch("composition dimension mismatch");
  // inner nonzeros grouped by output coordinate
  std::vector<std::vector<TriTensor::Entry>> by_out(dim_);
  for (const auto& e : inner.nonzero()) by_out[e.l].push_back(e);

  int free_slots[2];
  int n = 0;
  for (int s = 0; s < 3; ++s)
    if (s != pos) free_slots[n++] = s;

  int tuple[5];
  for (const auto& oe : outer.nonzero()) {
    const int oidx[3] = {oe.i, oe.j, oe.k};
    const int plug = oidx[pos];
    tuple[outer_vars[0]] = oidx[free_slots[0]];
    tuple[outer_vars[1]] = oidx[free_slots[1]];
    for (const auto& ie : by_out[plug]) {
      tuple[inner_vars[0]] = ie.i;
      tuple[inner_vars[1]] = ie.j;
      tuple[inner_vars[2]] = ie.k;
      c_[idx(tuple[0], tuple[1], tuple[2], tuple[3], tuple[4], oe.l)] +=
          sign * (*oe.value) * (*ie.value);
    }
  }
}

std::optional<std::array<int, 5>> FiveTensor::first_difference(const FiveTensor& lhs,
                                                               const FiveTensor& rhs) {
  if (lhs.dim_ != rhs.dim_) throw DimMismatch("comparison dimension mismatch");
  const int d = lhs.dim_;
  size_t p = 0;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        for (int e = 0; e < d; ++e)
          for (int f = 0; f < d; ++f) {
            for (int l = 0; l < d; ++l, ++p)
              if (lhs.c_[p] != rhs.c_[p]) return std::array<int, 5>{a, b, c, e, f};
          }
  return std::nullopt;
}

Vec FiveTensor::slice(const std::array<int, 5>& t) const {
  Vec v(dim_);
  for (int l = 0; l < dim_; ++l) v[l] = c_[idx(t[0], t[1], t[2], t[3], t[4], l)];
  return v;
}

}  // namespace ternalg

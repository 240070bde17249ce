#include "ternalg/rep_tensor.hpp"

namespace ternalg {

RepTensor::RepTensor(int algdim, int moddim, bool skew)
    : algdim_(algdim),
      moddim_(moddim),
      skew_(skew),
      m_(static_cast<size_t>(algdim) * algdim * moddim * moddim) {}

RepTensor RepTensor::from_action(int algdim, int moddim, bool skew,
                                 const std::function<LinearMap(int, int)>& action) {
  RepTensor t(algdim, moddim, skew);
  for (int i = 0; i < algdim; ++i)
    for (int j = 0; j < algdim; ++j) {
      LinearMap m = action(i, j);
      if (m.dim() != moddim) throw DimMismatch("rep action dimension mismatch");
      for (int r = 0; r < moddim; ++r)
        for (int c = 0; c < moddim; ++c) t.at(i, j, r, c) = m.at(r, c);
    }
  return t;
}

LinearMap RepTensor::matrix(int i, int j) const {
  LinearMap m(moddim_);
  for (int r = 0; r < moddim_; ++r)
    for (int c = 0; c < moddim_; ++c) m.at(r, c) = at(i, j, r, c);
  return m;
}

LinearMap RepTensor::eval(const Vec& u, const Vec& v) const {
  if (static_cast<int>(u.size()) != algdim_ || static_cast<int>(v.size()) != algdim_)
    throw DimMismatch("rep eval dimension mismatch");
  LinearMap m(moddim_);
  for (int i = 0; i < algdim_; ++i) {
    if (u[i].is_zero()) continue;
    for (int j = 0; j < algdim_; ++j) {
      if (v[j].is_zero()) continue;
      Scalar c = u[i] * v[j];
      for (int r = 0; r < moddim_; ++r)
        for (int cc = 0; cc < moddim_; ++cc) {
          const Scalar& e = at(i, j, r, cc);
          if (!e.is_zero()) m.at(r, cc) += c * e;
        }
    }
  }
  return m;
}

bool RepTensor::verify_skew() const {
  for (int i = 0; i < algdim_; ++i)
    for (int j = 0; j < algdim_; ++j)
      for (int r = 0; r < moddim_; ++r)
        for (int c = 0; c < moddim_; ++c)
          if (at(i, j, r, c) != -at(j, i, r, c)) return false;
  return true;
}

RepTensor RepTensor::scaled(const Scalar& c) const {
  RepTensor t = *this;
  for (auto& x : t.m_) x *= c;
  return t;
}

RepTensor RepTensor::negated_transpose() const {
  RepTensor t(algdim_, moddim_, skew_);
  for (int i = 0; i < algdim_; ++i)
    for (int j = 0; j < algdim_; ++j)
      for (int r = 0; r < moddim_; ++r)
        for (int c = 0; c < moddim_; ++c) t.at(i, j, r, c) = -at(i, j, c, r);
  return t;
}

}  // namespace ternalg

#pragma once

#include <functional>

#include "ternalg/linalg.hpp"

namespace ternalg {

/// Pair-indexed family of module endomorphisms r(e_i, e_j), extended
/// bilinearly.  The skew flag records that r(i,j) = -r(j,i) is asserted;
/// checkers verify it, nothing assumes it.
class RepTensor {
 public:
  RepTensor() = default;
  RepTensor(int algdim, int moddim, bool skew);

  static RepTensor zero(int algdim, int moddim, bool skew) {
    return RepTensor(algdim, moddim, skew);
  }
  /// Builds from an action on basis pairs: action(i, j) -> moddim x moddim map.
  static RepTensor from_action(int algdim, int moddim, bool skew,
                               const std::function<LinearMap(int, int)>& action);

  int algdim() const { return algdim_; }
  int moddim() const { return moddim_; }
  bool skew() const { return skew_; }

  const Scalar& at(int i, int j, int r, int c) const { return m_[idx(i, j, r, c)]; }
  Scalar& at(int i, int j, int r, int c) { return m_[idx(i, j, r, c)]; }

  LinearMap matrix(int i, int j) const;
  /// Bilinear extension r(u, v) as a module map.
  LinearMap eval(const Vec& u, const Vec& v) const;

  bool verify_skew() const;
  RepTensor scaled(const Scalar& c) const;
  RepTensor negated_transpose() const;  // (i,j) -> -r(i,j)^T
  bool operator==(const RepTensor& o) const {
    return algdim_ == o.algdim_ && moddim_ == o.moddim_ && m_ == o.m_;
  }

 private:
  size_t idx(int i, int j, int r, int c) const {
    return ((static_cast<size_t>(i) * algdim_ + j) * moddim_ + r) * moddim_ + c;
  }
  int algdim_ = 0;
  int moddim_ = 0;
  bool skew_ = false;
  std::vector<Scalar> m_;
};

}  // namespace ternalg

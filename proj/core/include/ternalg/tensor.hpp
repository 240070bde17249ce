#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ternalg/linalg.hpp"

namespace ternalg {

/// Structure constants of a trilinear product: c(i,j,k,l) is the coefficient
/// of e_l in p(e_i, e_j, e_k).  Dense storage, desk scale (dim <= 8).
class TriTensor {
 public:
  TriTensor() = default;
  explicit TriTensor(int dim)
      : dim_(dim), c_(static_cast<size_t>(dim) * dim * dim * dim) {}

  int dim() const { return dim_; }
  const Scalar& at(int i, int j, int k, int l) const { return c_[idx(i, j, k, l)]; }
  Scalar& at(int i, int j, int k, int l) { return c_[idx(i, j, k, l)]; }

  /// p(e_i, e_j, e_k) as a coordinate vector.
  Vec basis_product(int i, int j, int k) const;
  /// Full trilinear extension.
  Vec eval(const Vec& x, const Vec& y, const Vec& z) const;

  TriTensor operator+(const TriTensor& o) const;
  TriTensor operator-(const TriTensor& o) const;
  TriTensor operator-() const;
  TriTensor scaled(const Scalar& c) const;
  TriTensor conj() const;

  bool operator==(const TriTensor& o) const { return dim_ == o.dim_ && c_ == o.c_; }
  bool operator!=(const TriTensor& o) const { return !(*this == o); }
  bool is_zero() const;
  bool is_real() const;

  /// p'(x1,x2,x3) = p(x_{perm[0]}, x_{perm[1]}, x_{perm[2]}), perm 0-based.
  TriTensor permuted(const std::array<int, 3>& perm) const;

  /// (x,y,z) -> post(p(A1 x, A2 y, A3 z)); null map = identity.
  TriTensor twisted(const LinearMap* a1, const LinearMap* a2, const LinearMap* a3,
                    const LinearMap* post = nullptr) const;

  struct Entry {
    int i, j, k, l;
    const Scalar* value;
  };
  std::vector<Entry> nonzero() const;

 private:
  size_t idx(int i, int j, int k, int l) const {
    return ((static_cast<size_t>(i) * dim_ + j) * dim_ + k) * dim_ + l;
  }
  int dim_ = 0;
  std::vector<Scalar> c_;
};

/// Same map applied on a subset of slots, with an optional post map.  Slots
/// are 1-based.
TriTensor tri_twist(const TriTensor& t, const LinearMap& a, const std::vector<int>& slots,
                    const LinearMap* post = nullptr);

Vec tri_eval(const TriTensor& t, const Vec& x, const Vec& y, const Vec& z);

/// Cyclic sum p(x,y,z) + p(y,z,x) + p(z,x,y).
TriTensor cyclic_sum(const TriTensor& t);
/// {x,y,z}^h = nw(x,y,z) + ne(x,y,z) - ne(y,x,z).
TriTensor horizontal_tensor(const TriTensor& nw, const TriTensor& ne);
/// {x,y,z}^v = nw(x,y,z) + ne(z,x,y) - ne(z,y,x).
TriTensor vertical_tensor(const TriTensor& nw, const TriTensor& ne);

/// Structure constants of a binary bracket: c(i,j,l) = coeff of e_l in [e_i,e_j].
class BiTensor {
 public:
  BiTensor() = default;
  explicit BiTensor(int dim) : dim_(dim), c_(static_cast<size_t>(dim) * dim * dim) {}

  int dim() const { return dim_; }
  const Scalar& at(int i, int j, int l) const { return c_[idx(i, j, l)]; }
  Scalar& at(int i, int j, int l) { return c_[idx(i, j, l)]; }

  Vec basis_product(int i, int j) const;
  Vec eval(const Vec& x, const Vec& y) const;
  bool is_skew() const;
  bool is_real() const;

 private:
  size_t idx(int i, int j, int l) const {
    return (static_cast<size_t>(i) * dim_ + j) * dim_ + l;
  }
  int dim_ = 0;
  std::vector<Scalar> c_;
};

/// Dense 5-linear map A^5 -> A used to expand nested axiom identities.
class FiveTensor {
 public:
  explicit FiveTensor(int dim);

  int dim() const { return dim_; }

  /// Adds sign * outer(.., inner(..), ..) where the inner product sits in
  /// slot `pos` of `outer`, the remaining outer slots read variables
  /// outer_vars[0..1] (in slot order) and the inner slots read
  /// inner_vars[0..2].  Variables are 0-based indices into (x1..x5).
  void add_composed(const TriTensor& outer, int pos, const TriTensor& inner,
                    const std::array<int, 2>& outer_vars, const std::array<int, 3>& inner_vars,
                    const Scalar& sign);

  /// First tuple (lexicographic) where the two sides differ.
  static std::optional<std::array<int, 5>> first_difference(const FiveTensor& lhs,
                                                            const FiveTensor& rhs);

  Vec slice(const std::array<int, 5>& tuple) const;

 private:
  size_t idx(int a, int b, int c, int d, int e, int l) const {
    return ((((static_cast<size_t>(a) * dim_ + b) * dim_ + c) * dim_ + d) * dim_ + e) * dim_ + l;
  }
  int dim_;
  std::vector<Scalar> c_;
};

}  // namespace ternalg

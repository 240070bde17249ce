#include "axiom_engine.hpp"

#include <map>

namespace ternalg::detail {

namespace {

using A2 = std::array<int, 2>;
using A3 = std::array<int, 3>;

}  // namespace

const std::vector<Axiom>& fi_axioms() {
  static const std::vector<Axiom> axioms = {
      {"FI",
       {{Pr::NW, 2, Pr::NW, A2{0, 1}, A3{2, 3, 4}, +1}},
       {{Pr::NW, 0, Pr::NW, A2{3, 4}, A3{0, 1, 2}, +1},
        {Pr::NW, 1, Pr::NW, A2{2, 4}, A3{0, 1, 3}, +1},
        {Pr::NW, 2, Pr::NW, A2{2, 3}, A3{0, 1, 4}, +1}}},
  };
  return axioms;
}

const std::vector<Axiom>& pl_axioms() {
  static const std::vector<Axiom> axioms = {
      {"PL1",
       {{Pr::NW, 2, Pr::NW, A2{0, 1}, A3{2, 3, 4}, +1}},
       {{Pr::NW, 0, Pr::C, A2{3, 4}, A3{0, 1, 2}, +1},
        {Pr::NW, 1, Pr::C, A2{2, 4}, A3{0, 1, 3}, +1},
        {Pr::NW, 2, Pr::NW, A2{2, 3}, A3{0, 1, 4}, +1}}},
      {"PL2",
       {{Pr::NW, 0, Pr::C, A2{3, 4}, A3{0, 1, 2}, +1}},
       {{Pr::NW, 2, Pr::NW, A2{0, 1}, A3{2, 3, 4}, +1},
        {Pr::NW, 2, Pr::NW, A2{1, 2}, A3{0, 3, 4}, +1},
        {Pr::NW, 2, Pr::NW, A2{2, 0}, A3{1, 3, 4}, +1}}},
  };
  return axioms;
}

const std::vector<Axiom>& ld_axioms() {
  static const std::vector<Axiom> axioms = {
      {"LD1",
       {{Pr::NW, 2, Pr::NW, A2{0, 1}, A3{2, 3, 4}, +1},
        {Pr::NW, 2, Pr::NW, A2{2, 3}, A3{0, 1, 4}, -1}},
       {{Pr::NW, 0, Pr::C, A2{3, 4}, A3{0, 1, 2}, +1},
        {Pr::NW, 0, Pr::C, A2{2, 4}, A3{0, 1, 3}, -1}}},
      {"LD2",
       {{Pr::NW, 2, Pr::NE, A2{0, 1}, A3{4, 2, 3}, +1},
        {Pr::NE, 2, Pr::H, A2{4, 2}, A3{0, 1, 3}, -1}},
       {{Pr::NE, 1, Pr::C, A2{4, 3}, A3{0, 1, 2}, +1},
        {Pr::NE, 0, Pr::V, A2{2, 3}, A3{0, 1, 4}, +1}}},
      {"LD3",
       {{Pr::NE, 2, Pr::H, A2{4, 0}, A3{1, 2, 3}, +1},
        {Pr::NW, 2, Pr::NE, A2{1, 2}, A3{4, 0, 3}, -1}},
       {{Pr::NE, 0, Pr::V, A2{2, 3}, A3{0, 1, 4}, +1},
        {Pr::NE, 0, Pr::V, A2{1, 3}, A3{0, 2, 4}, -1}}},
      {"LD4",
       {{Pr::NW, 0, Pr::C, A2{3, 4}, A3{0, 1, 2}, +1}},
       {{Pr::NW, 2, Pr::NW, A2{0, 1}, A3{2, 3, 4}, +1},
        {Pr::NW, 2, Pr::NW, A2{1, 2}, A3{0, 3, 4}, +1},
        {Pr::NW, 2, Pr::NW, A2{2, 0}, A3{1, 3, 4}, +1}}},
      {"LD5",
       {{Pr::NE, 1, Pr::C, A2{4, 3}, A3{0, 1, 2}, +1}},
       {{Pr::NW, 2, Pr::NE, A2{0, 1}, A3{4, 2, 3}, +1},
        {Pr::NW, 2, Pr::NE, A2{1, 2}, A3{4, 0, 3}, +1},
        {Pr::NW, 2, Pr::NE, A2{2, 0}, A3{4, 1, 3}, +1}}},
      {"LD6",
       {{Pr::NW, 2, Pr::NE, A2{0, 1}, A3{4, 2, 3}, +1},
        {Pr::NE, 2, Pr::H, A2{4, 0}, A3{1, 2, 3}, +1}},
       {{Pr::NE, 2, Pr::H, A2{4, 1}, A3{0, 2, 3}, +1},
        {Pr::NE, 0, Pr::V, A2{2, 3}, A3{0, 1, 4}, +1}}},
  };
  return axioms;
}

namespace {

// outer tensor with alpha applied on its two non-pos slots
TriTensor outer_twisted(const TriTensor& t, int pos, const LinearMap& alpha) {
  const LinearMap* m[3] = {&alpha, &alpha, &alpha};
  m[pos] = nullptr;
  return t.twisted(m[0], m[1], m[2]);
}

struct TwistCache {
  std::map<std::pair<int, int>, TriTensor> cache;  // (product id, pos)
  const TensorOf* tensor_of;
  const LinearMap* alpha;
  const TriTensor& get(Pr p, int pos) {
    auto key = std::make_pair(static_cast<int>(p), pos);
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, outer_twisted((*tensor_of)(p), pos, *alpha)).first;
    return it->second;
  }
};

FiveTensor side_tensor(const std::vector<AxTerm>& terms, int dim, TwistCache& tc,
                       const TensorOf& tensor_of) {
  FiveTensor f(dim);
  for (const auto& t : terms)
    f.add_composed(tc.get(t.outer, t.pos), t.pos, tensor_of(t.inner), t.outer_vars,
                   t.inner_vars, Scalar(t.sign));
  return f;
}

long tuple_rank(const std::array<int, 5>& t, int dim) {
  long r = 0;
  for (int x : t) r = r * dim + x;
  return r + 1;
}

}  // namespace

void run_axioms(ReportBuilder& rb, const std::vector<Axiom>& axioms, int dim,
                const TensorOf& tensor_of, const LinearMap& alpha) {
  TwistCache tc{{}, &tensor_of, &alpha};
  const long total = [&] {
    long t = 1;
    for (int i = 0; i < 5; ++i) t *= dim;
    return t;
  }();
  for (const auto& ax : axioms) {
    if (!rb.ok()) return;
    rb.count_identity();
    FiveTensor lhs = side_tensor(ax.lhs, dim, tc, tensor_of);
    FiveTensor rhs = side_tensor(ax.rhs, dim, tc, tensor_of);
    auto diff = FiveTensor::first_difference(lhs, rhs);
    if (diff) {
      rb.count_tuples(tuple_rank(*diff, dim));
      rb.fail(ax.id, {diff->begin(), diff->end()}, lhs.slice(*diff), rhs.slice(*diff));
      return;
    }
    rb.count_tuples(total);
  }
}

void run_axioms_poly(ReportBuilder& rb, const std::vector<Axiom>& axioms, int dim,
                     const PolyOf& poly_of, const LinearMap& alpha, int order) {
  const long total = [&] {
    long t = 1;
    for (int i = 0; i < 5; ++i) t *= dim;
    return t;
  }();
  // twisted outer coefficients, cached per (product, pos, degree)
  std::map<std::tuple<int, int, int>, TriTensor> cache;
  auto twisted = [&](Pr p, int pos, int d) -> const TriTensor& {
    auto key = std::make_tuple(static_cast<int>(p), pos, d);
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, outer_twisted(poly_of(p)[d], pos, alpha)).first;
    return it->second;
  };
  for (const auto& ax : axioms) {
    for (int deg = 0; deg <= order && rb.ok(); ++deg) {
      rb.count_identity();
      FiveTensor lhs(dim), rhs(dim);
      for (int side = 0; side < 2; ++side) {
        const auto& terms = side == 0 ? ax.lhs : ax.rhs;
        FiveTensor& f = side == 0 ? lhs : rhs;
        for (const auto& t : terms) {
          const auto& outer_poly = poly_of(t.outer);
          const auto& inner_poly = poly_of(t.inner);
          for (int d1 = 0; d1 < static_cast<int>(outer_poly.size()); ++d1) {
            int d2 = deg - d1;
            if (d2 < 0 || d2 >= static_cast<int>(inner_poly.size())) continue;
            f.add_composed(twisted(t.outer, t.pos, d1), t.pos, inner_poly[d2], t.outer_vars,
                           t.inner_vars, Scalar(t.sign));
          }
        }
      }
      auto diff = FiveTensor::first_difference(lhs, rhs);
      if (diff) {
        rb.count_tuples(tuple_rank(*diff, dim));
        rb.fail(std::string(ax.id) + "@" + std::to_string(deg), {diff->begin(), diff->end()},
                lhs.slice(*diff), rhs.slice(*diff));
        return;
      }
      rb.count_tuples(total);
    }
    if (!rb.ok()) return;
  }
}

}  // namespace ternalg::detail

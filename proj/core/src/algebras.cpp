#include "ternalg/algebras.hpp"

#include "axiom_engine.hpp"

namespace ternalg {

namespace {

void check_dims(int dim, const TriTensor& t, const LinearMap& alpha) {
  if (t.dim() != dim || alpha.dim() != dim)
    throw DimMismatch("algebra fields have inconsistent dimensions");
}

void check_real(Mode mode, bool tensors_real) {
  if (mode == Mode::Real && !tensors_real)
    throw ModeError("real-mode algebra carries nonreal entries");
}

/// Full skew-symmetry via the two generating transpositions.
void check_skew_full(ReportBuilder& rb, const TriTensor& t, const char* id) {
  rb.count_identity();
  const int d = t.dim();
  long n = 0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        ++n;
        Vec lhs = t.basis_product(i, j, k);
        Vec swapped = vec_neg(t.basis_product(j, i, k));
        if (lhs != swapped) {
          rb.count_tuples(n);
          rb.fail(id, {i, j, k}, std::move(lhs), std::move(swapped));
          return;
        }
        swapped = vec_neg(t.basis_product(i, k, j));
        if (lhs != swapped) {
          rb.count_tuples(n);
          rb.fail(id, {i, j, k}, std::move(lhs), std::move(swapped));
          return;
        }
      }
  rb.count_tuples(n);
}

void check_skew12(ReportBuilder& rb, const TriTensor& t, const char* id) {
  rb.count_identity();
  const int d = t.dim();
  long n = 0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        ++n;
        Vec lhs = t.basis_product(i, j, k);
        Vec swapped = vec_neg(t.basis_product(j, i, k));
        if (lhs != swapped) {
          rb.count_tuples(n);
          rb.fail(id, {i, j, k}, std::move(lhs), std::move(swapped));
          return;
        }
      }
  rb.count_tuples(n);
}

void check_multiplicative(ReportBuilder& rb, const TriTensor& t, const LinearMap& alpha,
                          const char* id) {
  rb.count_identity();
  const int d = t.dim();
  std::vector<Vec> img(d);
  for (int i = 0; i < d; ++i) img[i] = alpha.apply(basis_vec(d, i));
  long n = 0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        ++n;
        Vec lhs = alpha.apply(t.basis_product(i, j, k));
        Vec rhs = t.eval(img[i], img[j], img[k]);
        if (lhs != rhs) {
          rb.count_tuples(n);
          rb.fail(id, {i, j, k}, std::move(lhs), std::move(rhs));
          return;
        }
      }
  rb.count_tuples(n);
}

}  // namespace

void validate(const ThreeHomLie& a) {
  check_dims(a.dim, a.bracket, a.alpha);
  check_real(a.mode, a.bracket.is_real() && a.alpha.is_real());
}

void validate(const ThreeHomPreLie& a) {
  check_dims(a.dim, a.prod, a.alpha);
  check_real(a.mode, a.prod.is_real() && a.alpha.is_real());
}

void validate(const ThreeHomLDend& a) {
  check_dims(a.dim, a.nw, a.alpha);
  if (a.ne.dim() != a.dim) throw DimMismatch("algebra fields have inconsistent dimensions");
  check_real(a.mode, a.nw.is_real() && a.ne.is_real() && a.alpha.is_real());
}

void validate(const HomLie& a) {
  if (a.bracket2.dim() != a.dim || a.alpha.dim() != a.dim)
    throw DimMismatch("algebra fields have inconsistent dimensions");
  check_real(a.mode, a.bracket2.is_real() && a.alpha.is_real());
}

Report check_3homlie(const ThreeHomLie& a) {
  validate(a);
  ReportBuilder rb("3homlie");
  check_skew_full(rb, a.bracket, "skew");
  if (rb.ok()) check_multiplicative(rb, a.bracket, a.alpha, "mult");
  if (rb.ok())
    detail::run_axioms(rb, detail::fi_axioms(), a.dim,
                       [&](detail::Pr) -> const TriTensor& { return a.bracket; }, a.alpha);
  return rb.finish();
}

Report check_3hompre(const ThreeHomPreLie& a) {
  validate(a);
  ReportBuilder rb("3hompre");
  check_skew12(rb, a.prod, "PL0");
  if (rb.ok()) check_multiplicative(rb, a.prod, a.alpha, "mult");
  if (rb.ok()) {
    // the sub-adjacent bracket is expanded inline, independent of the
    // subadjacent_lie constructor
    TriTensor cyc = cyclic_sum(a.prod);
    detail::run_axioms(
        rb, detail::pl_axioms(), a.dim,
        [&](detail::Pr p) -> const TriTensor& {
          return p == detail::Pr::C ? cyc : a.prod;
        },
        a.alpha);
  }
  return rb.finish();
}

Report check_3homldend(const ThreeHomLDend& a) {
  validate(a);
  ReportBuilder rb("3homldend");
  check_skew12(rb, a.nw, "LD0");
  if (rb.ok()) check_multiplicative(rb, a.nw, a.alpha, "mult-nw");
  if (rb.ok()) check_multiplicative(rb, a.ne, a.alpha, "mult-ne");
  if (rb.ok()) {
    TriTensor h = horizontal_tensor(a.nw, a.ne);
    TriTensor v = vertical_tensor(a.nw, a.ne);
    TriTensor c = cyclic_sum(h);
    detail::run_axioms(
        rb, detail::ld_axioms(), a.dim,
        [&](detail::Pr p) -> const TriTensor& {
          switch (p) {
            case detail::Pr::NW: return a.nw;
            case detail::Pr::NE: return a.ne;
            case detail::Pr::H: return h;
            case detail::Pr::V: return v;
            default: return c;
          }
        },
        a.alpha);
  }
  return rb.finish();
}

ThreeHomLie subadjacent_lie(const ThreeHomPreLie& a) {
  if (!check_3hompre(a).pass()) throw NotAPreLie("subadjacent_lie: input fails check_3hompre");
  return {a.dim, cyclic_sum(a.prod), a.alpha, a.mode};
}

ThreeHomPreLie horizontal_prelie(const ThreeHomLDend& a) {
  if (!check_3homldend(a).pass())
    throw NotALDend("horizontal_prelie: input fails check_3homldend");
  return {a.dim, horizontal_tensor(a.nw, a.ne), a.alpha, a.mode};
}

ThreeHomPreLie vertical_prelie(const ThreeHomLDend& a) {
  if (!check_3homldend(a).pass()) throw NotALDend("vertical_prelie: input fails check_3homldend");
  return {a.dim, vertical_tensor(a.nw, a.ne), a.alpha, a.mode};
}

ThreeHomLie commutator_lie(const ThreeHomLDend& a) {
  if (!check_3homldend(a).pass()) throw NotALDend("commutator_lie: input fails check_3homldend");
  TriTensor from_h = cyclic_sum(horizontal_tensor(a.nw, a.ne));
  TriTensor from_v = cyclic_sum(vertical_tensor(a.nw, a.ne));
  if (from_h != from_v)
    throw Error("commutator_lie: cyclic sums of horizontal and vertical brackets disagree");
  return {a.dim, std::move(from_h), a.alpha, a.mode};
}

ThreeHomLie yau_twist(const ThreeHomLie& a, const LinearMap& t) {
  validate(a);
  if (t.dim() != a.dim) throw DimMismatch("yau_twist map dimension mismatch");
  return {a.dim, a.bracket.twisted(&t, &t, &t), t, a.mode};
}

ThreeHomPreLie yau_twist(const ThreeHomPreLie& a, const LinearMap& t) {
  validate(a);
  if (t.dim() != a.dim) throw DimMismatch("yau_twist map dimension mismatch");
  return {a.dim, a.prod.twisted(&t, &t, &t), t, a.mode};
}

ThreeHomLDend yau_twist(const ThreeHomLDend& a, const LinearMap& t) {
  validate(a);
  if (t.dim() != a.dim) throw DimMismatch("yau_twist map dimension mismatch");
  return {a.dim, a.nw.twisted(&t, &t, &t), a.ne.twisted(&t, &t, &t), t, a.mode};
}

namespace {

bool product_morphism(const LinearMap& f, const TriTensor& src, const TriTensor& dst) {
  return src.twisted(nullptr, nullptr, nullptr, &f) == dst.twisted(&f, &f, &f);
}

bool twist_morphism(const LinearMap& f, const LinearMap& a_src, const LinearMap& a_dst) {
  return f.compose(a_src) == a_dst.compose(f);
}

}  // namespace

bool is_lie_morphism(const LinearMap& f, const ThreeHomLie& src, const ThreeHomLie& dst) {
  return product_morphism(f, src.bracket, dst.bracket) && twist_morphism(f, src.alpha, dst.alpha);
}

bool is_prelie_morphism(const LinearMap& f, const ThreeHomPreLie& src, const ThreeHomPreLie& dst) {
  return product_morphism(f, src.prod, dst.prod) && twist_morphism(f, src.alpha, dst.alpha);
}

bool is_ldend_morphism(const LinearMap& f, const ThreeHomLDend& src, const ThreeHomLDend& dst) {
  return product_morphism(f, src.nw, dst.nw) && product_morphism(f, src.ne, dst.ne) &&
         twist_morphism(f, src.alpha, dst.alpha);
}

}  // namespace ternalg

#include "ternalg/structures.hpp"

namespace ternalg {

namespace {

void require_dim(const ThreeHomLDend& a, const LinearMap& m) {
  if (m.dim() != a.dim) throw DimMismatch("structure map dimension mismatch");
}

/// E p(x,y,z) = p(Ex,Ey,Ez) + singles - E(pairs), the product-structure
/// integrability identity; the complex variant flips the two signs.
void check_integrability(ReportBuilder& rb, const TriTensor& p, const LinearMap& m, bool complex_j,
                         const char* id) {
  if (!rb.ok()) return;
  rb.count_identity();
  const Scalar full_sign = complex_j ? Scalar(-1) : Scalar(1);
  const Scalar post_sign = complex_j ? Scalar(1) : Scalar(-1);
  TriTensor lhs = p.twisted(nullptr, nullptr, nullptr, &m);
  TriTensor pairs = p.twisted(&m, &m, nullptr) + p.twisted(&m, nullptr, &m) +
                    p.twisted(nullptr, &m, &m);
  TriTensor rhs = p.twisted(&m, &m, &m).scaled(full_sign) + p.twisted(&m, nullptr, nullptr) +
                  p.twisted(nullptr, &m, nullptr) + p.twisted(nullptr, nullptr, &m) +
                  pairs.twisted(nullptr, nullptr, nullptr, &m).scaled(post_sign);
  const int d = p.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        rb.count_tuples(1);
        Vec lv = lhs.basis_product(i, j, k);
        Vec rv = rhs.basis_product(i, j, k);
        if (lv != rv) {
          rb.fail(id, {i, j, k}, std::move(lv), std::move(rv));
          return;
        }
      }
}

void check_square(ReportBuilder& rb, const LinearMap& m, bool minus, const char* id) {
  rb.count_identity();
  rb.count_tuples(1);
  LinearMap sq = m.compose(m);
  LinearMap want = minus ? -LinearMap::identity(m.dim()) : LinearMap::identity(m.dim());
  if (sq != want)
    rb.fail(id, {}, sq.apply(basis_vec(m.dim(), 0)), want.apply(basis_vec(m.dim(), 0)));
}

void check_alpha(ReportBuilder& rb, const LinearMap& m, const LinearMap& alpha, const char* id) {
  if (!rb.ok()) return;
  rb.count_identity();
  rb.count_tuples(1);
  if (!m.commutes_with(alpha))
    rb.fail(id, {}, m.compose(alpha).apply(basis_vec(m.dim(), 0)),
            alpha.compose(m).apply(basis_vec(m.dim(), 0)));
}

std::vector<Vec> eigen_span(const ThreeHomLDend& a, const LinearMap& e, int sign) {
  std::vector<Vec> vecs;
  for (int k = 0; k < a.dim; ++k) {
    Vec b = basis_vec(a.dim, k);
    Vec img = e.apply(b);
    vecs.push_back(sign > 0 ? vec_add(b, img) : vec_sub(b, img));
  }
  return rref_span(vecs, a.dim);
}

bool span_closed(const ThreeHomLDend& a, const std::vector<Vec>& basis) {
  for (const TriTensor* p : {&a.nw, &a.ne})
    for (const Vec& x : basis)
      for (const Vec& y : basis)
        for (const Vec& z : basis)
          if (!in_span(basis, p->eval(x, y, z))) return false;
  return true;
}

bool span_stable(const LinearMap& m, const std::vector<Vec>& basis) {
  for (const Vec& x : basis)
    if (!in_span(basis, m.apply(x))) return false;
  return true;
}

bool direct_sum(const std::vector<Vec>& plus, const std::vector<Vec>& minus, int dim) {
  std::vector<Vec> all = plus;
  all.insert(all.end(), minus.begin(), minus.end());
  if (static_cast<int>(all.size()) != dim) return false;
  return static_cast<int>(rref_span(all, dim).size()) == dim;
}

}  // namespace

Report check_product(const ProductCandidate& c) {
  require_dim(c.alg, c.e);
  if (!check_3homldend(c.alg).pass()) throw BadBase("check_product: target fails check_3homldend");
  ReportBuilder rb("product-structure");
  check_square(rb, c.e, false, "E2");
  check_alpha(rb, c.e, c.alg.alpha, "Ealpha");
  check_integrability(rb, c.alg.nw, c.e, false, "INT-nw");
  check_integrability(rb, c.alg.ne, c.e, false, "INT-ne");
  return rb.finish();
}

Decomposition product_decompose(const ProductCandidate& c) {
  if (!check_product(c).pass()) throw NotAProduct("product_decompose: fails check_product");
  Decomposition d{eigen_span(c.alg, c.e, +1), eigen_span(c.alg, c.e, -1)};
  if (!direct_sum(d.basis_plus, d.basis_minus, c.alg.dim))
    throw Error("product_decompose: eigenspaces do not split the space");
  for (const auto* basis : {&d.basis_plus, &d.basis_minus}) {
    if (!span_stable(c.alg.alpha, *basis))
      throw Error("product_decompose: eigenspace not alpha-stable");
    if (!span_closed(c.alg, *basis))
      throw Error("product_decompose: eigenspace not closed under the products");
  }
  return d;
}

ProductCandidate product_from_decomposition(const ThreeHomLDend& a, const Decomposition& d) {
  validate(a);
  if (!direct_sum(d.basis_plus, d.basis_minus, a.dim))
    throw NotADecomposition("product_from_decomposition: not a direct sum");
  for (const auto* basis : {&d.basis_plus, &d.basis_minus}) {
    if (!span_stable(a.alpha, *basis))
      throw NotADecomposition("product_from_decomposition: subspace not alpha-stable");
    if (!span_closed(a, *basis))
      throw NotADecomposition("product_from_decomposition: subspace is not a subalgebra");
  }
  LinearMap p(a.dim);
  int col = 0;
  for (const Vec& v : d.basis_plus) {
    for (int r = 0; r < a.dim; ++r) p.at(r, col) = v[r];
    ++col;
  }
  for (const Vec& v : d.basis_minus) {
    for (int r = 0; r < a.dim; ++r) p.at(r, col) = v[r];
    ++col;
  }
  Vec diag(a.dim);
  for (int i = 0; i < a.dim; ++i)
    diag[i] = i < static_cast<int>(d.basis_plus.size()) ? Scalar(1) : Scalar(-1);
  LinearMap e = p.compose(LinearMap::diagonal(diag)).compose(p.inverse());
  return {a, std::move(e)};
}

namespace {

struct LabelChecks {
  const ThreeHomLDend* a;
  const LinearMap* m;
  bool complex_j;

  bool strict() const {
    const LinearMap& J = *m;
    TriTensor nw_post = a->nw.twisted(nullptr, nullptr, nullptr, &J);
    if (nw_post != a->nw.twisted(&J, nullptr, nullptr)) return false;
    if (nw_post != a->nw.twisted(nullptr, nullptr, &J)) return false;
    TriTensor ne_post = a->ne.twisted(nullptr, nullptr, nullptr, &J);
    if (ne_post != a->ne.twisted(&J, nullptr, nullptr)) return false;
    if (ne_post != a->ne.twisted(nullptr, &J, nullptr)) return false;
    return ne_post == a->ne.twisted(nullptr, nullptr, &J);
  }

  bool abelian() const {
    const LinearMap& J = *m;
    const Scalar sign = complex_j ? Scalar(1) : Scalar(-1);
    for (const TriTensor* p : {&a->nw, &a->ne}) {
      TriTensor sum = p->twisted(nullptr, &J, &J) + p->twisted(&J, nullptr, &J) +
                      p->twisted(&J, &J, nullptr);
      if (*p != sum.scaled(sign)) return false;
    }
    return true;
  }

  bool strong() const {
    const LinearMap& J = *m;
    const Scalar sign = complex_j ? Scalar(-1) : Scalar(1);
    for (const TriTensor* p : {&a->nw, &a->ne}) {
      TriTensor sum = p->twisted(nullptr, nullptr, &J) + p->twisted(&J, nullptr, nullptr) +
                      p->twisted(nullptr, &J, nullptr);
      if (*p != sum.twisted(nullptr, nullptr, nullptr, &J).scaled(sign)) return false;
    }
    return true;
  }

  bool perfect() const {
    const LinearMap& J = *m;
    const Scalar sign = complex_j ? Scalar(-1) : Scalar(1);
    for (const TriTensor* p : {&a->nw, &a->ne})
      if (p->twisted(nullptr, nullptr, nullptr, &J) != p->twisted(&J, &J, &J).scaled(sign))
        return false;
    return true;
  }
};

StructureLabels classify(const ThreeHomLDend& a, const LinearMap& m, bool complex_j) {
  LabelChecks lc{&a, &m, complex_j};
  StructureLabels out;
  out.strict = lc.strict();
  out.abelian = lc.abelian();
  out.strong = lc.strong();
  out.perfect = lc.perfect();
  if (out.strict && !out.perfect)
    throw Error("classification: strict structure found that is not perfect");
  return out;
}

void require_almost(const ThreeHomLDend& a, const LinearMap& m, bool complex_j) {
  LinearMap sq = m.compose(m);
  LinearMap want =
      complex_j ? -LinearMap::identity(m.dim()) : LinearMap::identity(m.dim());
  const char* what = complex_j ? "almost complex" : "almost product";
  if (sq != want || !m.commutes_with(a.alpha)) {
    if (complex_j) throw NotAComplexStructure(std::string(what) + " structure conditions fail");
    throw NotAProduct(std::string(what) + " structure conditions fail");
  }
}

}  // namespace

StructureLabels classify_product(const ProductCandidate& c, bool allow_almost) {
  require_dim(c.alg, c.e);
  if (allow_almost) {
    require_almost(c.alg, c.e, false);
  } else if (!check_product(c).pass()) {
    throw NotAProduct("classify_product: fails check_product");
  }
  return classify(c.alg, c.e, false);
}

Report check_complex(const ComplexCandidate& c) {
  require_dim(c.alg, c.j);
  if (!check_3homldend(c.alg).pass()) throw BadBase("check_complex: target fails check_3homldend");
  ReportBuilder rb("complex-structure");
  check_square(rb, c.j, true, "J2");
  check_alpha(rb, c.j, c.alg.alpha, "Jalpha");
  check_integrability(rb, c.alg.nw, c.j, true, "INT-nw");
  check_integrability(rb, c.alg.ne, c.j, true, "INT-ne");
  return rb.finish();
}

ThreeHomLDend complexify(const ThreeHomLDend& a) {
  validate(a);
  if (a.mode != Mode::Real) throw ModeError("complexify: input is already complex");
  ThreeHomLDend out = a;
  out.mode = Mode::Complex;
  return out;
}

ThreeHomLDend conjugated(const ThreeHomLDend& a) {
  ThreeHomLDend out = a;
  out.nw = a.nw.conj();
  out.ne = a.ne.conj();
  out.alpha = a.alpha.conj();
  return out;
}

Decomposition complex_decompose(const ComplexCandidate& c) {
  if (c.alg.mode != Mode::Real)
    throw ModeError("complex_decompose: expects a real-mode algebra");
  if (!check_complex(c).pass())
    throw NotAComplexStructure("complex_decompose: fails check_complex");
  const int d = c.alg.dim;
  ThreeHomLDend ac = complexify(c.alg);
  std::vector<Vec> qv;
  for (int k = 0; k < d; ++k) {
    Vec b = basis_vec(d, k);
    qv.push_back(vec_sub(b, vec_scale(Scalar::i(), c.j.apply(b))));
  }
  std::vector<Vec> q = rref_span(qv, d);
  std::vector<Vec> qbar;
  qbar.reserve(q.size());
  for (const Vec& v : q) qbar.push_back(vec_conj(v));
  qbar = rref_span(qbar, d);
  if (!direct_sum(q, qbar, d))
    throw Error("complex_decompose: q and its conjugate do not split the complexification");
  if (!span_stable(ac.alpha, q)) throw Error("complex_decompose: q not alpha-stable");
  if (!span_closed(ac, q)) throw Error("complex_decompose: q not closed under the products");
  return {std::move(q), std::move(qbar)};
}

LinearMap complex_from_subalgebra(const ThreeHomLDend& complexified, const std::vector<Vec>& q) {
  validate(complexified);
  if (complexified.mode != Mode::Complex)
    throw ModeError("complex_from_subalgebra: expects a complexified algebra");
  const int d = complexified.dim;
  std::vector<Vec> qb = rref_span(q, d);
  std::vector<Vec> qbar;
  qbar.reserve(qb.size());
  for (const Vec& v : qb) qbar.push_back(vec_conj(v));
  qbar = rref_span(qbar, d);
  if (!direct_sum(qb, qbar, d))
    throw NotADecomposition("complex_from_subalgebra: q + conj(q) is not a direct sum");
  if (!span_closed(complexified, qb))
    throw NotADecomposition("complex_from_subalgebra: q is not a subalgebra");
  const size_t nq = qb.size();
  LinearMap basis_cols(d);
  for (size_t p = 0; p < nq; ++p)
    for (int r = 0; r < d; ++r) basis_cols.at(r, static_cast<int>(p)) = qb[p][r];
  for (size_t p = 0; p < qbar.size(); ++p)
    for (int r = 0; r < d; ++r) basis_cols.at(r, static_cast<int>(nq + p)) = qbar[p][r];
  LinearMap inv = basis_cols.inverse();
  LinearMap j(d);
  for (int col = 0; col < d; ++col) {
    Vec coeff = inv.apply(basis_vec(d, col));
    Vec img(d);
    for (size_t p = 0; p < nq; ++p)
      img = vec_add(img, vec_scale(Scalar::i() * coeff[p], qb[p]));
    for (size_t p = 0; p < qbar.size(); ++p)
      img = vec_sub(img, vec_scale(Scalar::i() * coeff[nq + p], qbar[p]));
    for (int r = 0; r < d; ++r) j.at(r, col) = img[r];
  }
  if (!j.is_real())
    throw NotRealizable("complex_from_subalgebra: restriction has imaginary entries");
  return j;
}

StructureLabels classify_complex(const ComplexCandidate& c, bool allow_almost) {
  require_dim(c.alg, c.j);
  if (allow_almost) {
    require_almost(c.alg, c.j, true);
  } else if (!check_complex(c).pass()) {
    throw NotAComplexStructure("classify_complex: fails check_complex");
  }
  return classify(c.alg, c.j, true);
}

ThreeHomLDend j_twisted_products(const ComplexCandidate& c) {
  if (!check_complex(c).pass())
    throw NotAComplexStructure("j_twisted_products: fails check_complex");
  const LinearMap& J = c.j;
  Scalar quarter = Scalar::of(1, 4);
  auto twist = [&](const TriTensor& p) {
    return (p - p.twisted(nullptr, &J, &J) - p.twisted(&J, nullptr, &J) -
            p.twisted(&J, &J, nullptr))
        .scaled(quarter);
  };
  return {c.alg.dim, twist(c.alg.nw), twist(c.alg.ne), c.alg.alpha, c.alg.mode};
}

Report product_complex_correspondence(const ThreeHomLDend& complex_alg, const LinearMap& e) {
  if (complex_alg.mode != Mode::Complex)
    throw ModeError("product_complex_correspondence: expects a complex-mode algebra");
  bool product_ok = check_product(ProductCandidate{complex_alg, e}).pass();
  bool complex_ok =
      check_complex(ComplexCandidate{complex_alg, e.scaled(Scalar::i())}).pass();
  ReportBuilder rb("product-complex-correspondence");
  rb.count_identity();
  rb.count_tuples(1);
  rb.set_detail(std::string("product=") + (product_ok ? "pass" : "fail") +
                " complex=" + (complex_ok ? "pass" : "fail"));
  if (product_ok != complex_ok)
    rb.fail("correspondence", {}, {Scalar(product_ok ? 1 : 0)}, {Scalar(complex_ok ? 1 : 0)});
  return rb.finish();
}

}  // namespace ternalg

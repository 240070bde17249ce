#include "ternalg/operators.hpp"

namespace ternalg {

namespace {

void fail_vec(ReportBuilder& rb, const char* id, std::vector<int> tuple, Vec lhs, Vec rhs) {
  rb.fail(id, std::move(tuple), std::move(lhs), std::move(rhs));
}

/// T phi = alpha T, reported column by column.
void check_twist_intertwine(ReportBuilder& rb, const RectMap& t, const LinearMap& phi,
                            const LinearMap& alpha) {
  rb.count_identity();
  RectMap lhs = t.after(phi);
  RectMap rhs = t.before(alpha);
  for (int c = 0; c < t.cols(); ++c) {
    rb.count_tuples(1);
    for (int r = 0; r < t.rows(); ++r)
      if (lhs.at(r, c) != rhs.at(r, c)) {
        Vec lv(t.rows()), rv(t.rows());
        for (int rr = 0; rr < t.rows(); ++rr) {
          lv[rr] = lhs.at(rr, c);
          rv[rr] = rhs.at(rr, c);
        }
        fail_vec(rb, "T-phi", {c}, std::move(lv), std::move(rv));
        return;
      }
  }
}

}  // namespace

Report check_o_operator(const LieOOperator& c) {
  if (!check_lie_rep(c.context).pass())
    throw BadRep("check_o_operator: context fails check_lie_rep");
  if (c.t.cols() != c.context.rho.moddim() || c.t.rows() != c.context.alg.dim)
    throw DimMismatch("O-operator candidate dimension mismatch");
  ReportBuilder rb("ooperator");
  check_twist_intertwine(rb, c.t, c.context.phi, c.context.alg.alpha);
  if (rb.ok()) {
    rb.count_identity();
    const int m = c.context.rho.moddim();
    std::vector<Vec> tv(m);
    for (int i = 0; i < m; ++i) tv[i] = c.t.apply(basis_vec(m, i));
    for (int u = 0; u < m && rb.ok(); ++u)
      for (int v = 0; v < m && rb.ok(); ++v)
        for (int w = 0; w < m && rb.ok(); ++w) {
          rb.count_tuples(1);
          Vec lhs = c.context.alg.bracket.eval(tv[u], tv[v], tv[w]);
          Vec inner = vec_add(
              vec_add(c.context.rho.eval(tv[u], tv[v]).apply(basis_vec(m, w)),
                      c.context.rho.eval(tv[v], tv[w]).apply(basis_vec(m, u))),
              c.context.rho.eval(tv[w], tv[u]).apply(basis_vec(m, v)));
          Vec rhs = c.t.apply(inner);
          if (lhs != rhs) fail_vec(rb, "O", {u, v, w}, std::move(lhs), std::move(rhs));
        }
  }
  return rb.finish();
}

Report check_o_operator(const PreLieOOperator& c) {
  if (!check_prelie_rep(c.context).pass())
    throw BadRep("check_o_operator: context fails check_prelie_rep");
  if (c.t.cols() != c.context.l.moddim() || c.t.rows() != c.context.alg.dim)
    throw DimMismatch("O-operator candidate dimension mismatch");
  ReportBuilder rb("ooperator");
  check_twist_intertwine(rb, c.t, c.context.phi, c.context.alg.alpha);
  if (rb.ok()) {
    rb.count_identity();
    const int m = c.context.l.moddim();
    std::vector<Vec> tv(m);
    for (int i = 0; i < m; ++i) tv[i] = c.t.apply(basis_vec(m, i));
    for (int u = 0; u < m && rb.ok(); ++u)
      for (int v = 0; v < m && rb.ok(); ++v)
        for (int w = 0; w < m && rb.ok(); ++w) {
          rb.count_tuples(1);
          Vec lhs = c.context.alg.prod.eval(tv[u], tv[v], tv[w]);
          Vec inner = vec_sub(c.context.l.eval(tv[u], tv[v]).apply(basis_vec(m, w)),
                              c.context.r.eval(tv[u], tv[w]).apply(basis_vec(m, v)));
          inner = vec_add(inner, c.context.r.eval(tv[v], tv[w]).apply(basis_vec(m, u)));
          Vec rhs = c.t.apply(inner);
          if (lhs != rhs) fail_vec(rb, "O", {u, v, w}, std::move(lhs), std::move(rhs));
        }
  }
  return rb.finish();
}

Report check_rota_baxter(const TriTensor& product, const LinearMap& alpha, const LinearMap& n) {
  if (product.dim() != n.dim() || alpha.dim() != n.dim())
    throw DimMismatch("Rota-Baxter check dimension mismatch");
  ReportBuilder rb("rotabaxter");
  rb.count_identity();
  if (n.compose(alpha) != alpha.compose(n)) {
    fail_vec(rb, "N-alpha", {}, n.compose(alpha).apply(basis_vec(n.dim(), 0)),
             alpha.compose(n).apply(basis_vec(n.dim(), 0)));
    return rb.finish();
  }
  rb.count_identity();
  TriTensor lhs = product.twisted(&n, &n, &n);
  TriTensor pair_sum = product.twisted(&n, &n, nullptr, &n);
  pair_sum = pair_sum + product.twisted(&n, nullptr, &n, &n);
  pair_sum = pair_sum + product.twisted(nullptr, &n, &n, &n);
  const int d = n.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        rb.count_tuples(1);
        Vec lv = lhs.basis_product(i, j, k);
        Vec rv = pair_sum.basis_product(i, j, k);
        if (lv != rv) {
          fail_vec(rb, "RB", {i, j, k}, std::move(lv), std::move(rv));
          return rb.finish();
        }
      }
  return rb.finish();
}

ThreeHomPreLie prelie_from_o(const LieOOperator& c) {
  if (!check_o_operator(c).pass())
    throw NotAnOOperator("prelie_from_o: candidate fails check_o_operator");
  const int m = c.context.rho.moddim();
  std::vector<Vec> tv(m);
  for (int i = 0; i < m; ++i) tv[i] = c.t.apply(basis_vec(m, i));
  TriTensor prod(m);
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v) {
      LinearMap act = c.context.rho.eval(tv[u], tv[v]);
      for (int w = 0; w < m; ++w)
        for (int l = 0; l < m; ++l) prod.at(u, v, w, l) = act.at(l, w);
    }
  ThreeHomPreLie out{m, std::move(prod), c.context.phi, c.context.alg.mode};
  // T maps the sub-adjacent algebra into the base algebra
  TriTensor sub = cyclic_sum(out.prod);
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v)
      for (int w = 0; w < m; ++w)
        if (c.t.apply(sub.basis_product(u, v, w)) !=
            c.context.alg.bracket.eval(tv[u], tv[v], tv[w]))
          throw Error("prelie_from_o: T is not a morphism of the sub-adjacent algebra");
  return out;
}

ThreeHomLDend ldend_from_o(const PreLieOOperator& c) {
  if (!check_o_operator(c).pass())
    throw NotAnOOperator("ldend_from_o: candidate fails check_o_operator");
  const int m = c.context.l.moddim();
  std::vector<Vec> tv(m);
  for (int i = 0; i < m; ++i) tv[i] = c.t.apply(basis_vec(m, i));
  TriTensor nw(m), ne(m);
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v) {
      LinearMap lact = c.context.l.eval(tv[u], tv[v]);
      LinearMap ract = c.context.r.eval(tv[u], tv[v]);
      for (int w = 0; w < m; ++w)
        for (int x = 0; x < m; ++x) {
          nw.at(u, v, w, x) = lact.at(x, w);
          ne.at(w, u, v, x) = ract.at(x, w);  // ne(u,v,w) = r(Tv,Tw)u
        }
    }
  ThreeHomLDend out{m, std::move(nw), std::move(ne), c.context.phi, c.context.alg.mode};
  TriTensor h = horizontal_tensor(out.nw, out.ne);
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v)
      for (int w = 0; w < m; ++w)
        if (c.t.apply(h.basis_product(u, v, w)) != c.context.alg.prod.eval(tv[u], tv[v], tv[w]))
          throw Error("ldend_from_o: T is not a morphism of the horizontal pre-Lie structures");
  return out;
}

ThreeHomLDend ldend_from_rb(const ThreeHomPreLie& a, const LinearMap& rb) {
  PreLieRep adj = adjoint_prelie_rep(a);
  if (!check_o_operator(PreLieOOperator{adj, RectMap(rb)}).pass())
    throw NotAnOOperator("ldend_from_rb: map is not a weight-0 Rota-Baxter operator");
  return {a.dim, a.prod.twisted(&rb, &rb, nullptr), a.prod.twisted(nullptr, &rb, &rb), a.alpha,
          a.mode};
}

ThreeHomLDend compatible_ldend(const PreLieOOperator& c) {
  LinearMap t = c.t.square();
  LinearMap tinv = t.inverse();  // SingularMap if not invertible
  if (!check_o_operator(c).pass())
    throw NotAnOOperator("compatible_ldend: candidate fails check_o_operator");
  const int d = c.context.alg.dim;
  TriTensor nw(d), ne(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      LinearMap lact = t.compose(c.context.l.eval(basis_vec(d, i), basis_vec(d, j)))
                           .compose(tinv);
      LinearMap ract = t.compose(c.context.r.eval(basis_vec(d, i), basis_vec(d, j)))
                           .compose(tinv);
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          nw.at(i, j, k, l) = lact.at(l, k);   // nw(x,y,z) = T(l(x,y)T^-1 z)
          ne.at(k, i, j, l) = ract.at(l, k);   // ne(x,y,z) = T(r(y,z)T^-1 x)
        }
    }
  ThreeHomLDend out{d, std::move(nw), std::move(ne), c.context.alg.alpha, c.context.alg.mode};
  if (horizontal_tensor(out.nw, out.ne) != c.context.alg.prod)
    throw Error("compatible_ldend: compatibility identity failed");
  return out;
}

Report check_symplectic(const SymplecticForm& s) {
  validate(s.alg);
  if (s.b.dim() != s.alg.dim) throw DimMismatch("form dimension mismatch");
  if (!check_3hompre(s.alg).pass())
    throw BadBase("check_symplectic: base algebra fails check_3hompre");
  ReportBuilder rb("symplectic");
  const int d = s.alg.dim;

  rb.count_identity();
  for (int i = 0; i < d && rb.ok(); ++i)
    for (int j = 0; j < d && rb.ok(); ++j) {
      rb.count_tuples(1);
      if (s.b.at(i, j) != -s.b.at(j, i))
        fail_vec(rb, "skew", {i, j}, {s.b.at(i, j)}, {-s.b.at(j, i)});
    }

  if (rb.ok()) {
    rb.count_identity();
    rb.count_tuples(1);
    LinearMap pairing = s.b.pairing_map();
    if (pairing.determinant().is_zero()) {
      // kernel vector as the witness
      std::vector<Vec> cols(d);
      for (int c = 0; c < d; ++c) {
        cols[c] = Vec(d);
        for (int r = 0; r < d; ++r) cols[c][r] = pairing.at(r, c);
      }
      // find v != 0 with pairing * v = 0 by rref of the transpose system
      std::vector<Vec> rows(d, Vec(d));
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) rows[r][c] = pairing.at(r, c);
      auto basis = rref_span(rows, d);
      // free column = one not led by any pivot
      std::vector<bool> pivot(d, false);
      for (const auto& row : basis)
        for (int c = 0; c < d; ++c)
          if (!row[c].is_zero()) {
            pivot[c] = true;
            break;
          }
      Vec v(d);
      for (int c = 0; c < d; ++c)
        if (!pivot[c]) {
          v[c] = Scalar(1);
          for (size_t r = 0; r < basis.size(); ++r) {
            int p = -1;
            for (int cc = 0; cc < d; ++cc)
              if (!basis[r][cc].is_zero()) {
                p = cc;
                break;
              }
            if (p >= 0) v[p] = -basis[r][c];
          }
          break;
        }
      fail_vec(rb, "nondegenerate", {}, std::move(v), Vec(d));
    }
  }

  if (rb.ok()) {
    rb.count_identity();
    const LinearMap a2 = s.alg.alpha.compose(s.alg.alpha);
    TriTensor cyc = cyclic_sum(s.alg.prod);
    std::vector<Vec> av(d), a2v(d);
    for (int i = 0; i < d; ++i) {
      av[i] = s.alg.alpha.apply(basis_vec(d, i));
      a2v[i] = a2.apply(basis_vec(d, i));
    }
    for (int x = 0; x < d && rb.ok(); ++x)
      for (int y = 0; y < d && rb.ok(); ++y)
        for (int z = 0; z < d && rb.ok(); ++z)
          for (int w = 0; w < d && rb.ok(); ++w) {
            rb.count_tuples(1);
            Scalar sum = s.b.value(s.alg.prod.eval(av[x], av[y], av[z]), a2v[w]);
            sum -= s.b.value(av[z], cyc.eval(basis_vec(d, x), basis_vec(d, y), basis_vec(d, w)));
            sum -= s.b.value(av[y], s.alg.prod.basis_product(w, x, z));
            sum += s.b.value(av[x], s.alg.prod.basis_product(w, y, z));
            if (!sum.is_zero()) fail_vec(rb, "closed", {x, y, z, w}, {sum}, {Scalar(0)});
          }
  }
  return rb.finish();
}

namespace {

/// T: A* -> A determined by <T^-1 x, y> = B(x, y), the B-coadjoint pre-Lie
/// O-operator context, and the alpha-symmetry precondition.
struct SymplecticContext {
  PreLieOOperator op;
  LinearMap t;
  LinearMap tinv;
};

void require_symplectic(const SymplecticForm& s) {
  Report sr = check_symplectic(s);
  if (!sr.pass()) {
    if (!sr.violations.empty() && sr.violations.front().identity == "nondegenerate")
      throw Degenerate("symplectic construction: form is degenerate");
    throw Degenerate("symplectic construction: form is not symplectic");
  }
}

SymplecticContext symplectic_context(const SymplecticForm& s) {
  require_symplectic(s);
  const int d = s.alg.dim;
  // alpha-symmetry B(alpha x, y) = B(x, alpha y); exactly what makes the
  // coadjoint candidate intertwine the twists
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (s.b.value(s.alg.alpha.apply(basis_vec(d, i)), basis_vec(d, j)) !=
          s.b.value(basis_vec(d, i), s.alg.alpha.apply(basis_vec(d, j))))
        throw NotAnOOperator("symplectic construction: form is not alpha-symmetric");
  LinearMap tinv = s.b.pairing_map();
  LinearMap t = tinv.inverse();  // nondegeneracy established above
  PreLieRep coadj = dual_prelie_rep(adjoint_prelie_rep(s.alg));
  SymplecticContext ctx{PreLieOOperator{std::move(coadj), RectMap(t)}, t, tinv};
  if (!check_o_operator(ctx.op).pass())
    throw NotAnOOperator("symplectic construction: pairing map is not an O-operator");
  return ctx;
}

}  // namespace

ThreeHomLDend ldend_from_symplectic(const SymplecticForm& s) {
  SymplecticContext ctx = symplectic_context(s);
  LinearMap ainv = s.alg.alpha.inverse();  // SingularMap if not invertible
  (void)ainv;
  ThreeHomLDend out = compatible_ldend(ctx.op);
  // defining pairing identities of the construction, on all basis 4-tuples
  const int d = s.alg.dim;
  const LinearMap a2 = s.alg.alpha.compose(s.alg.alpha);
  TriTensor cyc = cyclic_sum(s.alg.prod);
  std::vector<Vec> av(d), a2v(d);
  for (int i = 0; i < d; ++i) {
    av[i] = s.alg.alpha.apply(basis_vec(d, i));
    a2v[i] = a2.apply(basis_vec(d, i));
  }
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z)
        for (int w = 0; w < d; ++w) {
          Scalar lhs1 = s.b.value(out.nw.eval(av[x], av[y], basis_vec(d, z)), a2v[w]);
          Scalar rhs1 = s.b.value(basis_vec(d, z),
                                  cyc.eval(basis_vec(d, x), basis_vec(d, y), basis_vec(d, w)));
          Scalar lhs2 = s.b.value(out.ne.eval(basis_vec(d, x), av[y], av[z]), a2v[w]);
          Scalar rhs2 = -s.b.value(basis_vec(d, x), s.alg.prod.basis_product(w, y, z));
          if (lhs1 != rhs1 || lhs2 != rhs2)
            throw Error("ldend_from_symplectic: defining pairing identity failed");
        }
  return out;
}

ThreeHomPreLie prelie_prime_from_symplectic(const SymplecticForm& s) {
  require_symplectic(s);
  const int d = s.alg.dim;
  LinearMap t = s.b.pairing_map().inverse();
  LinearMap ainv = s.alg.alpha.inverse();
  LinearMap ainv2 = ainv.compose(ainv);
  TriTensor cyc = cyclic_sum(s.alg.prod);
  TriTensor prod(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        Vec x = ainv.apply(basis_vec(d, i));
        Vec y = ainv.apply(basis_vec(d, j));
        Vec zk = basis_vec(d, k);  // alpha(z) = e_k
        Vec rhs(d);
        for (int m = 0; m < d; ++m) {
          Vec w = ainv2.apply(basis_vec(d, m));
          Scalar val = s.b.value(zk, cyc.eval(x, y, w));
          val -= s.b.value(zk, s.alg.prod.eval(w, x, y));
          val += s.b.value(zk, s.alg.prod.eval(w, y, x));
          rhs[m] = val;
        }
        Vec v = t.apply(rhs);
        for (int l = 0; l < d; ++l) prod.at(i, j, k, l) = v[l];
      }
  return {d, std::move(prod), s.alg.alpha, s.alg.mode};
}

ThreeHomLDend ldend_from_commuting_rb(const ThreeHomLie& a, const LinearMap& r1,
                                      const LinearMap& r2) {
  LieRep adj = adjoint_rep(a);
  for (const LinearMap* r : {&r1, &r2})
    if (!check_o_operator(LieOOperator{adj, RectMap(*r)}).pass())
      throw NotAnOOperator("ldend_from_commuting_rb: map is not a Rota-Baxter operator");
  if (!r1.commutes_with(r2)) throw NotCommuting("ldend_from_commuting_rb: operators do not commute");
  // lemma: r2 stays Rota-Baxter of weight zero on {x,y,z} = [R1 x, R1 y, z]
  TriTensor induced = a.bracket.twisted(&r1, &r1, nullptr);
  if (!check_rota_baxter(induced, a.alpha, r2).pass())
    throw Error("ldend_from_commuting_rb: intermediate Rota-Baxter identity failed");
  LinearMap r12 = r1.compose(r2);
  return {a.dim, a.bracket.twisted(&r12, &r12, nullptr), a.bracket.twisted(&r1, &r12, &r2),
          a.alpha, a.mode};
}

namespace {

void require_trace(const HomLie& h, const Vec& tau) {
  validate(h);
  if (static_cast<int>(tau.size()) != h.dim) throw DimMismatch("covector dimension mismatch");
  if (!h.bracket2.is_skew()) throw BadBase("trace construction: binary bracket is not skew");
  auto tau_of = [&](const Vec& v) {
    Scalar s(0);
    for (int i = 0; i < h.dim; ++i) s += tau[i] * v[i];
    return s;
  };
  for (int i = 0; i < h.dim; ++i)
    for (int j = 0; j < h.dim; ++j)
      if (!tau_of(h.bracket2.basis_product(i, j)).is_zero())
        throw NotATrace("trace construction: tau does not vanish on brackets");
  for (int i = 0; i < h.dim; ++i)
    if (tau_of(h.alpha.apply(basis_vec(h.dim, i))) != tau[i])
      throw NotATrace("trace construction: tau is not fixed by alpha");
}

}  // namespace

ThreeHomLie trace_3homlie(const HomLie& h, const Vec& tau) {
  require_trace(h, tau);
  const int d = h.dim;
  TriTensor t(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        Vec v = vec_add(vec_add(vec_scale(tau[i], h.bracket2.basis_product(j, k)),
                                vec_scale(tau[j], h.bracket2.basis_product(k, i))),
                        vec_scale(tau[k], h.bracket2.basis_product(i, j)));
        for (int l = 0; l < d; ++l) t.at(i, j, k, l) = v[l];
      }
  return {d, std::move(t), h.alpha, h.mode};
}

ThreeHomLDend trace_rb_ldend(const HomLie& h, const Vec& tau, const LinearMap& r1,
                             const LinearMap& r2) {
  ThreeHomLie base = trace_3homlie(h, tau);
  ThreeHomLDend via_lie = ldend_from_commuting_rb(base, r1, r2);
  // the remark's explicit formulas, built directly from the binary bracket
  const int d = h.dim;
  LinearMap r12 = r1.compose(r2);
  auto tau_of = [&](const Vec& v) {
    Scalar s(0);
    for (int i = 0; i < d; ++i) s += tau[i] * v[i];
    return s;
  };
  TriTensor nw(d), ne(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        Vec x12 = r12.apply(basis_vec(d, i));
        Vec y12 = r12.apply(basis_vec(d, j));
        Vec z = basis_vec(d, k);
        Vec v = vec_add(vec_add(vec_scale(tau_of(x12), h.bracket2.eval(y12, z)),
                                vec_scale(tau_of(y12), h.bracket2.eval(z, x12))),
                        vec_scale(tau_of(z), h.bracket2.eval(x12, y12)));
        for (int l = 0; l < d; ++l) nw.at(i, j, k, l) = v[l];
        Vec x1 = r1.apply(basis_vec(d, i));
        Vec z2 = r2.apply(basis_vec(d, k));
        Vec w = vec_add(vec_add(vec_scale(tau_of(x1), h.bracket2.eval(y12, z2)),
                                vec_scale(tau_of(y12), h.bracket2.eval(z2, x1))),
                        vec_scale(tau_of(z2), h.bracket2.eval(x1, y12)));
        for (int l = 0; l < d; ++l) ne.at(i, j, k, l) = w[l];
      }
  if (nw != via_lie.nw || ne != via_lie.ne)
    throw Error("trace_rb_ldend: remark formulas disagree with the composed construction");
  return via_lie;
}

}  // namespace ternalg

#include "ternalg/representations.hpp"

namespace ternalg {

namespace {

/// First column where two module maps differ; the violation carries both
/// sides applied to that module basis vector.
bool record_diff(ReportBuilder& rb, const LinearMap& lhs, const LinearMap& rhs,
                 const std::string& id, std::vector<int> tuple) {
  for (int c = 0; c < lhs.dim(); ++c)
    for (int r = 0; r < lhs.dim(); ++r)
      if (lhs.at(r, c) != rhs.at(r, c)) {
        Vec lv(lhs.dim()), rv(lhs.dim());
        for (int rr = 0; rr < lhs.dim(); ++rr) {
          lv[rr] = lhs.at(rr, c);
          rv[rr] = rhs.at(rr, c);
        }
        tuple.push_back(c);
        rb.fail(id, std::move(tuple), std::move(lv), std::move(rv));
        return true;
      }
  return false;
}

RepTensor compose_left(const LinearMap& m, const RepTensor& t) {
  return RepTensor::from_action(t.algdim(), t.moddim(), t.skew(),
                                [&](int i, int j) { return m.compose(t.matrix(i, j)); });
}

RepTensor mu_tensor(const RepTensor& l, const RepTensor& r) {
  return RepTensor::from_action(l.algdim(), l.moddim(), true, [&](int i, int j) {
    return l.matrix(i, j) + r.matrix(i, j) - r.matrix(j, i);
  });
}

}  // namespace

void validate(const LieRep& r) {
  validate(r.alg);
  if (r.rho.algdim() != r.alg.dim || r.phi.dim() != r.rho.moddim())
    throw DimMismatch("representation dimensions inconsistent");
  if (!r.rho.skew()) throw BadRep("Lie representation must carry the skew flag");
}

void validate(const PreLieRep& p) {
  validate(p.alg);
  if (p.l.algdim() != p.alg.dim || p.r.algdim() != p.alg.dim)
    throw DimMismatch("representation dimensions inconsistent");
  if (p.l.moddim() != p.r.moddim() || p.phi.dim() != p.l.moddim())
    throw DimMismatch("representation dimensions inconsistent");
  if (!p.l.skew()) throw BadRep("the l part must carry the skew flag");
}

Report check_lie_rep(const LieRep& rep) {
  validate(rep);
  if (!check_3homlie(rep.alg).pass())
    throw BadBase("check_lie_rep: base algebra fails check_3homlie");
  ReportBuilder rb("lierep");
  const int d = rep.alg.dim;
  const int m = rep.rho.moddim();
  (void)m;

  std::vector<Vec> av(d);
  for (int i = 0; i < d; ++i) av[i] = rep.alg.alpha.apply(basis_vec(d, i));
  auto rho_alpha = [&](int i, int j) { return rep.rho.eval(av[i], av[j]); };

  rb.count_identity();
  for (int i = 0; i < d && rb.ok(); ++i)
    for (int j = 0; j < d && rb.ok(); ++j) {
      rb.count_tuples(1);
      if (record_diff(rb, rep.rho.matrix(i, j), -rep.rho.matrix(j, i), "rskew", {i, j})) break;
    }

  if (rb.ok()) {
    rb.count_identity();
    for (int i = 0; i < d && rb.ok(); ++i)
      for (int j = 0; j < d && rb.ok(); ++j) {
        rb.count_tuples(1);
        LinearMap lhs = rep.phi.compose(rep.rho.matrix(i, j));
        LinearMap rhs = rho_alpha(i, j).compose(rep.phi);
        if (record_diff(rb, lhs, rhs, "phi", {i, j})) break;
      }
  }

  auto run4 = [&](const char* id, auto&& make_sides) {
    if (!rb.ok()) return;
    rb.count_identity();
    for (int x1 = 0; x1 < d && rb.ok(); ++x1)
      for (int x2 = 0; x2 < d && rb.ok(); ++x2)
        for (int x3 = 0; x3 < d && rb.ok(); ++x3)
          for (int x4 = 0; x4 < d && rb.ok(); ++x4) {
            rb.count_tuples(1);
            auto [lhs, rhs] = make_sides(x1, x2, x3, x4);
            if (record_diff(rb, lhs, rhs, id, {x1, x2, x3, x4})) return;
          }
  };

  run4("REP1", [&](int x1, int x2, int x3, int x4) {
    Vec b123 = rep.alg.bracket.basis_product(x1, x2, x3);
    Vec b124 = rep.alg.bracket.basis_product(x1, x2, x4);
    LinearMap lhs = rho_alpha(x1, x2).compose(rep.rho.matrix(x3, x4)) -
                    rho_alpha(x3, x4).compose(rep.rho.matrix(x1, x2));
    LinearMap rhs = rep.rho.eval(b123, av[x4]).compose(rep.phi) -
                    rep.rho.eval(b124, av[x3]).compose(rep.phi);
    return std::make_pair(std::move(lhs), std::move(rhs));
  });

  run4("REP2", [&](int x1, int x2, int x3, int x4) {
    Vec b123 = rep.alg.bracket.basis_product(x1, x2, x3);
    LinearMap lhs = rep.rho.eval(b123, av[x4]).compose(rep.phi);
    LinearMap rhs = rho_alpha(x1, x2).compose(rep.rho.matrix(x3, x4)) +
                    rho_alpha(x2, x3).compose(rep.rho.matrix(x1, x4)) +
                    rho_alpha(x3, x1).compose(rep.rho.matrix(x2, x4));
    return std::make_pair(std::move(lhs), std::move(rhs));
  });

  return rb.finish();
}

Report rep_derived_identities(const LieRep& rep) {
  if (!check_lie_rep(rep).pass())
    throw BadBase("rep_derived_identities: input fails check_lie_rep");
  ReportBuilder rb("lierep-derived");
  const int d = rep.alg.dim;
  std::vector<Vec> av(d);
  for (int i = 0; i < d; ++i) av[i] = rep.alg.alpha.apply(basis_vec(d, i));
  const LinearMap zero(rep.rho.moddim());
  auto br = [&](int i, int j, int k) { return rep.alg.bracket.basis_product(i, j, k); };
  auto rho_alpha = [&](int i, int j) { return rep.rho.eval(av[i], av[j]); };

  rb.count_identity();
  for (int x1 = 0; x1 < d && rb.ok(); ++x1)
    for (int x2 = 0; x2 < d && rb.ok(); ++x2)
      for (int x3 = 0; x3 < d && rb.ok(); ++x3)
        for (int x4 = 0; x4 < d && rb.ok(); ++x4) {
          rb.count_tuples(1);
          LinearMap sum = rep.rho.eval(br(x1, x2, x3), av[x4]) -
                          rep.rho.eval(br(x1, x2, x4), av[x3]) +
                          rep.rho.eval(br(x1, x3, x4), av[x2]) -
                          rep.rho.eval(br(x2, x3, x4), av[x1]);
          if (record_diff(rb, sum.compose(rep.phi), zero, "REPD1", {x1, x2, x3, x4})) break;
        }

  if (rb.ok()) {
    rb.count_identity();
    for (int x1 = 0; x1 < d && rb.ok(); ++x1)
      for (int x2 = 0; x2 < d && rb.ok(); ++x2)
        for (int x3 = 0; x3 < d && rb.ok(); ++x3)
          for (int x4 = 0; x4 < d && rb.ok(); ++x4) {
            rb.count_tuples(1);
            LinearMap sum = rho_alpha(x1, x2).compose(rep.rho.matrix(x3, x4)) +
                            rho_alpha(x2, x3).compose(rep.rho.matrix(x1, x4)) +
                            rho_alpha(x3, x1).compose(rep.rho.matrix(x2, x4)) +
                            rho_alpha(x3, x4).compose(rep.rho.matrix(x1, x2)) +
                            rho_alpha(x1, x4).compose(rep.rho.matrix(x2, x3)) +
                            rho_alpha(x2, x4).compose(rep.rho.matrix(x3, x1));
            if (record_diff(rb, sum, zero, "REPD2", {x1, x2, x3, x4})) break;
          }
  }
  return rb.finish();
}

ThreeHomLie semidirect_lie(const LieRep& rep) {
  validate(rep);
  const int d = rep.alg.dim;
  const int m = rep.rho.moddim();
  const int n = d + m;
  TriTensor t(n);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) t.at(i, j, k, l) = rep.alg.bracket.at(i, j, k, l);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int b = 0; b < m; ++b)
        for (int l = 0; l < m; ++l) {
          // rho(x1,x2)v3, rho(x3,x1)v2 and rho(x2,x3)v1 respectively
          t.at(i, j, d + b, d + l) = rep.rho.at(i, j, l, b);
          t.at(i, d + b, j, d + l) = rep.rho.at(j, i, l, b);
          t.at(d + b, i, j, d + l) = rep.rho.at(i, j, l, b);
        }
  LinearMap tw(n);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) tw.at(r, c) = rep.alg.alpha.at(r, c);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) tw.at(d + r, d + c) = rep.phi.at(r, c);
  return {n, std::move(t), std::move(tw), rep.alg.mode};
}

LieRep adjoint_rep(const ThreeHomLie& a) {
  validate(a);
  RepTensor rho = RepTensor::from_action(a.dim, a.dim, true, [&](int i, int j) {
    LinearMap m(a.dim);
    for (int k = 0; k < a.dim; ++k)
      for (int l = 0; l < a.dim; ++l) m.at(l, k) = a.bracket.at(i, j, k, l);
    return m;
  });
  return {a, std::move(rho), a.alpha};
}

LieRep dual_lie_rep(const LieRep& rep) {
  validate(rep);
  LinearMap ai = rep.alg.alpha.inverse();
  LinearMap phi_inv = rep.phi.inverse();
  LinearMap phi_m2 = phi_inv.compose(phi_inv);
  const int d = rep.alg.dim;
  std::vector<Vec> aiv(d);
  for (int i = 0; i < d; ++i) aiv[i] = ai.apply(basis_vec(d, i));
  RepTensor dual = RepTensor::from_action(d, rep.rho.moddim(), true, [&](int i, int j) {
    return (-rep.rho.eval(aiv[i], aiv[j]).compose(phi_m2)).transpose();
  });
  return {rep.alg, std::move(dual), phi_inv.transpose()};
}

LieRep coadjoint_rep(const ThreeHomLie& a) { return dual_lie_rep(adjoint_rep(a)); }

Report check_prelie_rep(const PreLieRep& p) {
  validate(p);
  if (!check_3hompre(p.alg).pass())
    throw BadBase("check_prelie_rep: base algebra fails check_3hompre");
  ThreeHomLie sub{p.alg.dim, cyclic_sum(p.alg.prod), p.alg.alpha, p.alg.mode};

  Report lrep = check_lie_rep(LieRep{sub, p.l, p.phi});
  if (!lrep.pass()) {
    lrep.suite = "prelierep";
    lrep.violations.front().identity = "l:" + lrep.violations.front().identity;
    return lrep;
  }

  ReportBuilder rb("prelierep");
  rb.count_tuples(lrep.stats.tuples_enumerated);
  for (long i = 0; i < lrep.stats.identities_checked; ++i) rb.count_identity();

  const int d = p.alg.dim;
  std::vector<Vec> av(d);
  for (int i = 0; i < d; ++i) av[i] = p.alg.alpha.apply(basis_vec(d, i));
  RepTensor mu = mu_tensor(p.l, p.r);
  auto r_a = [&](int i, int j) { return p.r.eval(av[i], av[j]); };
  auto l_a = [&](int i, int j) { return p.l.eval(av[i], av[j]); };
  auto mu_b = [&](int i, int j) { return mu.matrix(i, j); };
  TriTensor cyc = cyclic_sum(p.alg.prod);

  rb.count_identity();
  for (int i = 0; i < d && rb.ok(); ++i)
    for (int j = 0; j < d && rb.ok(); ++j) {
      rb.count_tuples(1);
      LinearMap lhs = p.phi.compose(p.r.matrix(i, j));
      LinearMap rhs = r_a(i, j).compose(p.phi);
      if (record_diff(rb, lhs, rhs, "phi-r", {i, j})) break;
    }

  auto run4 = [&](const char* id, auto&& make_sides) {
    if (!rb.ok()) return;
    rb.count_identity();
    for (int x1 = 0; x1 < d && rb.ok(); ++x1)
      for (int x2 = 0; x2 < d && rb.ok(); ++x2)
        for (int x3 = 0; x3 < d && rb.ok(); ++x3)
          for (int x4 = 0; x4 < d && rb.ok(); ++x4) {
            rb.count_tuples(1);
            auto [lhs, rhs] = make_sides(x1, x2, x3, x4);
            if (record_diff(rb, lhs, rhs, id, {x1, x2, x3, x4})) return;
          }
  };

  run4("PREP1", [&](int x1, int x2, int x3, int x4) {
    Vec c123 = cyc.basis_product(x1, x2, x3);
    Vec p124 = p.alg.prod.basis_product(x1, x2, x4);
    LinearMap lhs = l_a(x1, x2).compose(p.r.matrix(x3, x4));
    LinearMap rhs = r_a(x3, x4).compose(mu_b(x1, x2)) +
                    p.r.eval(c123, av[x4]).compose(p.phi) +
                    p.r.eval(av[x3], p124).compose(p.phi);
    return std::make_pair(std::move(lhs), std::move(rhs));
  });

  run4("PREP2", [&](int x1, int x2, int x3, int x4) {
    Vec c123 = cyc.basis_product(x1, x2, x3);
    LinearMap lhs = p.r.eval(c123, av[x4]).compose(p.phi);
    LinearMap rhs = l_a(x1, x2).compose(p.r.matrix(x3, x4)) +
                    l_a(x2, x3).compose(p.r.matrix(x1, x4)) +
                    l_a(x3, x1).compose(p.r.matrix(x2, x4));
    return std::make_pair(std::move(lhs), std::move(rhs));
  });

  run4("PREP3", [&](int x1, int x2, int x3, int x4) {
    Vec p234 = p.alg.prod.basis_product(x2, x3, x4);
    LinearMap lhs = p.r.eval(av[x1], p234).compose(p.phi);
    LinearMap rhs = r_a(x3, x4).compose(mu_b(x1, x2)) - r_a(x2, x4).compose(mu_b(x1, x3)) +
                    l_a(x2, x3).compose(p.r.matrix(x1, x4));
    return std::make_pair(std::move(lhs), std::move(rhs));
  });

  run4("PREP4", [&](int x1, int x2, int x3, int x4) {
    Vec p134 = p.alg.prod.basis_product(x1, x3, x4);
    Vec p234 = p.alg.prod.basis_product(x2, x3, x4);
    LinearMap lhs = r_a(x3, x4).compose(mu_b(x1, x2));
    LinearMap rhs = l_a(x1, x2).compose(p.r.matrix(x3, x4)) -
                    p.r.eval(av[x2], p134).compose(p.phi) +
                    p.r.eval(av[x1], p234).compose(p.phi);
    return std::make_pair(std::move(lhs), std::move(rhs));
  });

  return rb.finish();
}

ThreeHomPreLie semidirect_prelie(const PreLieRep& p) {
  validate(p);
  const int d = p.alg.dim;
  const int m = p.l.moddim();
  const int n = d + m;
  TriTensor t(n);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) t.at(i, j, k, l) = p.alg.prod.at(i, j, k, l);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int b = 0; b < m; ++b)
        for (int l = 0; l < m; ++l) {
          // l(x1,x2)u3 - r(x1,x3)u2 + r(x2,x3)u1
          t.at(i, j, d + b, d + l) = p.l.at(i, j, l, b);
          t.at(i, d + b, j, d + l) = -p.r.at(i, j, l, b);
          t.at(d + b, i, j, d + l) = p.r.at(i, j, l, b);
        }
  LinearMap tw(n);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) tw.at(r, c) = p.alg.alpha.at(r, c);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) tw.at(d + r, d + c) = p.phi.at(r, c);
  return {n, std::move(t), std::move(tw), p.alg.mode};
}

PreLieRep adjoint_prelie_rep(const ThreeHomPreLie& a) {
  validate(a);
  RepTensor L = RepTensor::from_action(a.dim, a.dim, true, [&](int i, int j) {
    LinearMap m(a.dim);
    for (int k = 0; k < a.dim; ++k)
      for (int l = 0; l < a.dim; ++l) m.at(l, k) = a.prod.at(i, j, k, l);
    return m;
  });
  RepTensor R = RepTensor::from_action(a.dim, a.dim, false, [&](int i, int j) {
    LinearMap m(a.dim);
    for (int k = 0; k < a.dim; ++k)
      for (int l = 0; l < a.dim; ++l) m.at(l, k) = a.prod.at(k, i, j, l);
    return m;
  });
  return {a, std::move(L), std::move(R), a.alpha};
}

LieRep mu_rep(const PreLieRep& p) {
  if (!check_prelie_rep(p).pass()) throw BadRep("mu_rep: input fails check_prelie_rep");
  ThreeHomLie sub = subadjacent_lie(p.alg);
  return {std::move(sub), mu_tensor(p.l, p.r), p.phi};
}

PreLieRep dual_prelie_rep(const PreLieRep& p) {
  validate(p);
  LinearMap ai = p.alg.alpha.inverse();
  LinearMap phi_inv = p.phi.inverse();
  LinearMap phi_m2 = phi_inv.compose(phi_inv);
  const int d = p.alg.dim;
  std::vector<Vec> aiv(d);
  for (int i = 0; i < d; ++i) aiv[i] = ai.apply(basis_vec(d, i));
  auto star = [&](const RepTensor& t, bool skew) {
    return RepTensor::from_action(d, t.moddim(), skew, [&](int i, int j) {
      return (-t.eval(aiv[i], aiv[j]).compose(phi_m2)).transpose();
    });
  };
  RepTensor lstar = star(p.l, true);
  RepTensor rstar = star(p.r, false);
  RepTensor mustar = mu_tensor(lstar, rstar);
  RepTensor neg_rstar = rstar.scaled(Scalar(-1));
  return {p.alg, std::move(mustar), std::move(neg_rstar), phi_inv.transpose()};
}

PreLieRep twist_rep(const PreLieRep& p, const LinearMap& alpha, const LinearMap& phi) {
  validate(p);
  if (!p.alg.alpha.is_identity() || !p.phi.is_identity())
    throw BadRep("twist_rep: expects an untwisted representation");
  if (alpha.dim() != p.alg.dim || phi.dim() != p.l.moddim())
    throw DimMismatch("twist_rep map dimensions mismatch");
  if (p.alg.prod.twisted(nullptr, nullptr, nullptr, &alpha) !=
      p.alg.prod.twisted(&alpha, &alpha, &alpha))
    throw BadRep("twist_rep: alpha is not a morphism of the product");
  const int d = p.alg.dim;
  std::vector<Vec> av(d);
  for (int i = 0; i < d; ++i) av[i] = alpha.apply(basis_vec(d, i));
  for (const RepTensor* t : {&p.l, &p.r})
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (phi.compose(t->matrix(i, j)) != t->eval(av[i], av[j]).compose(phi))
          throw BadRep("twist_rep: phi does not intertwine the representation with alpha");
  return {yau_twist(p.alg, alpha), compose_left(phi, p.l), compose_left(phi, p.r), phi};
}

}  // namespace ternalg

#include "ternalg/nijenhuis.hpp"

#include "axiom_engine.hpp"

namespace ternalg {

namespace {

TriTensor singles(const TriTensor& p, const LinearMap& n) {
  return p.twisted(&n, nullptr, nullptr) + p.twisted(nullptr, &n, nullptr) +
         p.twisted(nullptr, nullptr, &n);
}

TriTensor pairs(const TriTensor& p, const LinearMap& n) {
  return p.twisted(&n, &n, nullptr) + p.twisted(&n, nullptr, &n) + p.twisted(nullptr, &n, &n);
}

/// p(Nx,Ny,Nz) - N(pairs - N(singles) + N^2 p) reported per basis triple.
void check_nijenhuis_product(ReportBuilder& rb, const TriTensor& p, const LinearMap& n,
                             const char* id) {
  if (!rb.ok()) return;
  rb.count_identity();
  const int d = p.dim();
  LinearMap n2 = n.compose(n);
  TriTensor lhs = p.twisted(&n, &n, &n);
  TriTensor rhs = (pairs(p, n) - singles(p, n).twisted(nullptr, nullptr, nullptr, &n) +
                   p.twisted(nullptr, nullptr, nullptr, &n2))
                      .twisted(nullptr, nullptr, nullptr, &n);
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

void check_alpha_commute(ReportBuilder& rb, const LinearMap& alpha, const LinearMap& n) {
  rb.count_identity();
  rb.count_tuples(1);
  LinearMap lhs = alpha.compose(n);
  LinearMap rhs = n.compose(alpha);
  if (lhs != rhs)
    rb.fail("alphaN", {}, lhs.apply(basis_vec(n.dim(), 0)), rhs.apply(basis_vec(n.dim(), 0)));
}

void require_map_dim(int dim, const LinearMap& n) {
  if (n.dim() != dim) throw DimMismatch("operator dimension mismatch");
}

}  // namespace

Report check_nijenhuis(const ThreeHomLDend& a, const LinearMap& n) {
  require_map_dim(a.dim, n);
  if (!check_3homldend(a).pass()) throw BadBase("check_nijenhuis: target fails check_3homldend");
  ReportBuilder rb("nijenhuis");
  check_alpha_commute(rb, a.alpha, n);
  check_nijenhuis_product(rb, a.nw, n, "NIJ-nw");
  check_nijenhuis_product(rb, a.ne, n, "NIJ-ne");
  return rb.finish();
}

Report check_nijenhuis(const ThreeHomPreLie& a, const LinearMap& n) {
  require_map_dim(a.dim, n);
  if (!check_3hompre(a).pass()) throw BadBase("check_nijenhuis: target fails check_3hompre");
  ReportBuilder rb("nijenhuis");
  check_alpha_commute(rb, a.alpha, n);
  check_nijenhuis_product(rb, a.prod, n, "NIJ");
  return rb.finish();
}

Report check_nijenhuis(const ThreeHomLie& a, const LinearMap& n) {
  require_map_dim(a.dim, n);
  if (!check_3homlie(a).pass()) throw BadBase("check_nijenhuis: target fails check_3homlie");
  ReportBuilder rb("nijenhuis");
  check_alpha_commute(rb, a.alpha, n);
  check_nijenhuis_product(rb, a.bracket, n, "NIJ");
  return rb.finish();
}

TriTensor deformed_first(const TriTensor& p, const LinearMap& n) {
  return singles(p, n) - p.twisted(nullptr, nullptr, nullptr, &n);
}

TriTensor deformed_second(const TriTensor& p, const LinearMap& n) {
  return pairs(p, n) - deformed_first(p, n).twisted(nullptr, nullptr, nullptr, &n);
}

NijenhuisDeformation nijenhuis_deform(const ThreeHomLDend& a, const LinearMap& n) {
  if (!check_nijenhuis(a, n).pass())
    throw NotNijenhuis("nijenhuis_deform: operator fails check_nijenhuis");
  TriTensor nw1 = deformed_first(a.nw, n);
  TriTensor ne1 = deformed_first(a.ne, n);
  TriTensor nw2 = deformed_second(a.nw, n);
  TriTensor ne2 = deformed_second(a.ne, n);
  ThreeHomLDend first{a.dim, nw1, ne1, a.alpha, a.mode};
  DeformationFamily family{a, std::move(nw1), std::move(ne1), std::move(nw2), std::move(ne2), 2};
  return {std::move(first), std::move(family)};
}

namespace {

bool morphism_to_base(const TriTensor& deformed, const TriTensor& base, const LinearMap& n) {
  return deformed.twisted(nullptr, nullptr, nullptr, &n) == base.twisted(&n, &n, &n);
}

}  // namespace

bool deformation_morphism_first(const ThreeHomLDend& base, const LinearMap& n) {
  return morphism_to_base(deformed_first(base.nw, n), base.nw, n) &&
         morphism_to_base(deformed_first(base.ne, n), base.ne, n);
}

bool deformation_morphism_second(const ThreeHomLDend& base, const LinearMap& n) {
  return morphism_to_base(deformed_second(base.nw, n), base.nw, n) &&
         morphism_to_base(deformed_second(base.ne, n), base.ne, n);
}

Report check_deformation(const DeformationFamily& d) {
  if (d.order < 0 || d.order > 2)
    throw BadOrder("check_deformation: only orders 0, 1 and 2 are supported");
  validate(d.base);
  if (!check_3homldend(d.base).pass())
    throw BadBase("check_deformation: base fails check_3homldend");
  ReportBuilder rb("deformation");
  std::vector<TriTensor> nw_poly{d.base.nw, d.omega1_nw, d.omega2_nw};
  std::vector<TriTensor> ne_poly{d.base.ne, d.omega1_ne, d.omega2_ne};
  std::vector<TriTensor> h_poly, v_poly, c_poly;
  for (int k = 0; k < 3; ++k) {
    h_poly.push_back(horizontal_tensor(nw_poly[k], ne_poly[k]));
    v_poly.push_back(vertical_tensor(nw_poly[k], ne_poly[k]));
    c_poly.push_back(cyclic_sum(h_poly.back()));
  }

  // LD0 per degree (linear in the products)
  const int dim = d.base.dim;
  for (int deg = 0; deg <= d.order && rb.ok(); ++deg) {
    rb.count_identity();
    for (int i = 0; i < dim && rb.ok(); ++i)
      for (int j = 0; j < dim && rb.ok(); ++j)
        for (int k = 0; k < dim && rb.ok(); ++k) {
          rb.count_tuples(1);
          Vec lhs = nw_poly[deg].basis_product(i, j, k);
          Vec rhs = vec_neg(nw_poly[deg].basis_product(j, i, k));
          if (lhs != rhs)
            rb.fail("LD0@" + std::to_string(deg), {i, j, k}, std::move(lhs), std::move(rhs));
        }
  }

  if (rb.ok())
    detail::run_axioms_poly(
        rb, detail::ld_axioms(), dim,
        [&](detail::Pr p) -> const std::vector<TriTensor>& {
          switch (p) {
            case detail::Pr::NW: return nw_poly;
            case detail::Pr::NE: return ne_poly;
            case detail::Pr::H: return h_poly;
            case detail::Pr::V: return v_poly;
            default: return c_poly;
          }
        },
        d.base.alpha, d.order);
  return rb.finish();
}

Report check_trivial_deformation(const ThreeHomLDend& a, const LinearMap& n) {
  if (!check_nijenhuis(a, n).pass())
    throw NotNijenhuis("check_trivial_deformation: operator fails check_nijenhuis");
  ReportBuilder rb("trivial-deformation");
  const int d = a.dim;
  struct Item {
    const TriTensor* p;
    const char* tag;
  };
  for (const Item& item : {Item{&a.nw, "nw"}, Item{&a.ne, "ne"}}) {
    const TriTensor& p = *item.p;
    TriTensor o1 = deformed_first(p, n);
    TriTensor o2 = deformed_second(p, n);
    TriTensor sgl = singles(p, n);
    TriTensor prs = pairs(p, n);
    TriTensor full = p.twisted(&n, &n, &n);
    struct Eq {
      const char* id;
      TriTensor lhs;
      TriTensor rhs;
    };
    Eq eqs[3] = {
        {"TD1", o1 + p.twisted(nullptr, nullptr, nullptr, &n), sgl},
        {"TD2", o2 + o1.twisted(nullptr, nullptr, nullptr, &n), prs},
        {"TD3", o2.twisted(nullptr, nullptr, nullptr, &n), full},
    };
    for (const Eq& eq : eqs) {
      if (!rb.ok()) break;
      rb.count_identity();
      for (int i = 0; i < d && rb.ok(); ++i)
        for (int j = 0; j < d && rb.ok(); ++j)
          for (int k = 0; k < d && rb.ok(); ++k) {
            rb.count_tuples(1);
            Vec lv = eq.lhs.basis_product(i, j, k);
            Vec rv = eq.rhs.basis_product(i, j, k);
            if (lv != rv)
              rb.fail(std::string(eq.id) + "-" + item.tag, {i, j, k}, std::move(lv),
                      std::move(rv));
          }
    }
    if (!rb.ok()) break;
  }
  return rb.finish();
}

Report nijenhuis_descends(const ThreeHomLDend& a, const LinearMap& n) {
  if (!check_nijenhuis(a, n).pass())
    throw NotNijenhuis("nijenhuis_descends: operator fails check_nijenhuis");
  ReportBuilder rb("nijenhuis-descends");
  struct Target {
    const char* tag;
    TriTensor t;
  };
  Target targets[3] = {
      {"descend:h", horizontal_tensor(a.nw, a.ne)},
      {"descend:v", vertical_tensor(a.nw, a.ne)},
      {"descend:c", cyclic_sum(horizontal_tensor(a.nw, a.ne))},
  };
  for (auto& tg : targets) {
    if (!rb.ok()) break;
    check_nijenhuis_product(rb, tg.t, n, tg.tag);
  }
  return rb.finish();
}

Report derivation_rb_bridge(const ThreeHomLDend& a, const LinearMap& n) {
  require_map_dim(a.dim, n);
  if (!check_3homldend(a).pass()) throw BadBase("derivation_rb_bridge: base fails its check");
  if (!a.alpha.commutes_with(n))
    throw NotADerivation("derivation_rb_bridge: operator does not commute with alpha");
  for (const TriTensor* p : {&a.nw, &a.ne}) {
    TriTensor lhs = p->twisted(nullptr, nullptr, nullptr, &n);
    if (lhs != singles(*p, n))
      throw NotADerivation("derivation_rb_bridge: operator is not a derivation of the products");
  }
  bool nij = check_nijenhuis(a, n).pass();
  bool rb_ok = check_rota_baxter(a.nw, a.alpha, n).pass() &&
               check_rota_baxter(a.ne, a.alpha, n).pass();
  ReportBuilder rb("derivation-bridge");
  rb.count_identity();
  rb.count_tuples(1);
  rb.set_detail(std::string("nijenhuis=") + (nij ? "pass" : "fail") +
                " rotabaxter=" + (rb_ok ? "pass" : "fail"));
  if (nij != rb_ok)
    rb.fail("bridge", {}, {Scalar(nij ? 1 : 0)}, {Scalar(rb_ok ? 1 : 0)});
  return rb.finish();
}

Report check_nijenhuis_prelie_compat(const ThreeHomPreLie& a, const LinearMap& n,
                                     const LinearMap& rb_op) {
  if (!check_nijenhuis(a, n).pass())
    throw NotNijenhuis("check_nijenhuis_prelie_compat: n fails check_nijenhuis on the pre-Lie");
  if (!check_o_operator(PreLieOOperator{adjoint_prelie_rep(a), RectMap(rb_op)}).pass())
    throw NotAnOOperator("check_nijenhuis_prelie_compat: rb is not a Rota-Baxter operator");
  if (!n.commutes_with(rb_op))
    throw NotCommuting("check_nijenhuis_prelie_compat: n and rb do not commute");
  return check_nijenhuis(ldend_from_rb(a, rb_op), n);
}

}  // namespace ternalg

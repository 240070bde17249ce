// ternalg: exact verification and construction of ternary Hom-algebra
// structures from structure-constant documents.
//
// Exit codes: 0 = pass/success, 1 = failing verdict, 2 = error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include <ternalg/io.hpp>

using namespace ternalg;

namespace {

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError("cannot write '" + path + "'");
  out << text;
}

Document load(const std::string& path) { return parse_document(read_file(path)); }

int report_exit(const Report& r, bool machine) {
  std::cout << render_report(r, machine);
  return r.pass() ? 0 : 1;
}

Report verify_report(const Document& doc, const std::string& suite) {
  switch (doc.kind) {
    case DocKind::HomLie: {
      if (!suite.empty() && suite != "homlie") throw CliError("unknown suite '" + suite + "'");
      HomLie h = homlie_from_document(doc);
      ReportBuilder rb("homlie");
      rb.count_identity();
      bool ok = true;
      for (int i = 0; i < h.dim && ok; ++i)
        for (int j = 0; j < h.dim && ok; ++j) {
          rb.count_tuples(1);
          Vec lhs = h.bracket2.basis_product(i, j);
          Vec rhs = vec_neg(h.bracket2.basis_product(j, i));
          if (lhs != rhs) {
            rb.fail("skew", {i, j}, std::move(lhs), std::move(rhs));
            ok = false;
          }
        }
      return rb.finish();
    }
    case DocKind::Lie3:
      if (!suite.empty() && suite != "3homlie") throw CliError("unknown suite '" + suite + "'");
      return check_3homlie(lie_from_document(doc));
    case DocKind::PreLie3:
      if (!suite.empty() && suite != "3hompre") throw CliError("unknown suite '" + suite + "'");
      return check_3hompre(prelie_from_document(doc));
    case DocKind::LDend3:
      if (!suite.empty() && suite != "3homldend")
        throw CliError("unknown suite '" + suite + "'");
      return check_3homldend(ldend_from_document(doc));
    case DocKind::Rep:
      if (!suite.empty() && suite != "lierep") throw CliError("unknown suite '" + suite + "'");
      return check_lie_rep(lierep_from_document(doc));
    case DocKind::PreRep:
      if (!suite.empty() && suite != "prelierep")
        throw CliError("unknown suite '" + suite + "'");
      return check_prelie_rep(preliererep_from_document(doc));
    case DocKind::Form:
      if (!suite.empty() && suite != "symplectic")
        throw CliError("unknown suite '" + suite + "'");
      return check_symplectic(form_from_document(doc));
    default:
      throw CliError("document kind '" + kind_name(doc.kind) + "' has no verification suite");
  }
}

Document derive_document(const std::string& what, const std::vector<Document>& docs) {
  auto need = [&](size_t n) {
    if (docs.size() != n)
      throw CliError("construction '" + what + "' takes " + std::to_string(n) + " document(s)");
  };
  if (what == "subadjacent") {
    need(1);
    return to_document(subadjacent_lie(prelie_from_document(docs[0])));
  }
  if (what == "horizontal") {
    need(1);
    return to_document(horizontal_prelie(ldend_from_document(docs[0])));
  }
  if (what == "vertical") {
    need(1);
    return to_document(vertical_prelie(ldend_from_document(docs[0])));
  }
  if (what == "commutator") {
    need(1);
    return to_document(commutator_lie(ldend_from_document(docs[0])));
  }
  if (what == "yau_twist") {
    need(2);
    LinearMap t = map_from_document(docs[1]);
    switch (docs[0].kind) {
      case DocKind::Lie3: return to_document(yau_twist(lie_from_document(docs[0]), t));
      case DocKind::PreLie3: return to_document(yau_twist(prelie_from_document(docs[0]), t));
      case DocKind::LDend3: return to_document(yau_twist(ldend_from_document(docs[0]), t));
      default: throw CliError("yau_twist expects an algebra document");
    }
  }
  if (what == "adjoint") {
    need(1);
    if (docs[0].kind == DocKind::Lie3)
      return to_document(adjoint_rep(lie_from_document(docs[0])));
    if (docs[0].kind == DocKind::PreLie3)
      return to_document(adjoint_prelie_rep(prelie_from_document(docs[0])));
    throw CliError("adjoint expects a 3hom_lie or 3hom_prelie document");
  }
  if (what == "coadjoint") {
    need(1);
    return to_document(coadjoint_rep(lie_from_document(docs[0])));
  }
  if (what == "dual") {
    need(1);
    if (docs[0].kind == DocKind::Rep)
      return to_document(dual_lie_rep(lierep_from_document(docs[0])));
    if (docs[0].kind == DocKind::PreRep)
      return to_document(dual_prelie_rep(preliererep_from_document(docs[0])));
    throw CliError("dual expects a rep or prelie_rep document");
  }
  if (what == "mu") {
    need(1);
    return to_document(mu_rep(preliererep_from_document(docs[0])));
  }
  if (what == "semidirect") {
    need(1);
    if (docs[0].kind == DocKind::Rep)
      return to_document(semidirect_lie(lierep_from_document(docs[0])));
    if (docs[0].kind == DocKind::PreRep)
      return to_document(semidirect_prelie(preliererep_from_document(docs[0])));
    throw CliError("semidirect expects a rep or prelie_rep document");
  }
  if (what == "twist_rep") {
    need(3);
    return to_document(twist_rep(preliererep_from_document(docs[0]),
                                 map_from_document(docs[1]), map_from_document(docs[2])));
  }
  if (what == "prelie_from_o") {
    need(2);
    return to_document(prelie_from_o(
        {lierep_from_document(docs[0]), RectMap(map_from_document(docs[1]))}));
  }
  if (what == "ldend_from_o") {
    need(2);
    return to_document(ldend_from_o(
        {preliererep_from_document(docs[0]), RectMap(map_from_document(docs[1]))}));
  }
  if (what == "ldend_from_rb") {
    need(2);
    return to_document(
        ldend_from_rb(prelie_from_document(docs[0]), map_from_document(docs[1])));
  }
  if (what == "compatible") {
    need(2);
    return to_document(compatible_ldend(
        {preliererep_from_document(docs[0]), RectMap(map_from_document(docs[1]))}));
  }
  if (what == "symplectic_ldend") {
    need(1);
    return to_document(ldend_from_symplectic(form_from_document(docs[0])));
  }
  if (what == "symplectic_prelie") {
    need(1);
    return to_document(prelie_prime_from_symplectic(form_from_document(docs[0])));
  }
  if (what == "commuting_rb") {
    need(3);
    return to_document(ldend_from_commuting_rb(lie_from_document(docs[0]),
                                               map_from_document(docs[1]),
                                               map_from_document(docs[2])));
  }
  if (what == "trace") {
    need(2);
    return to_document(
        trace_3homlie(homlie_from_document(docs[0]), covector_from_document(docs[1])));
  }
  if (what == "trace_rb") {
    need(4);
    return to_document(trace_rb_ldend(homlie_from_document(docs[0]),
                                      covector_from_document(docs[1]),
                                      map_from_document(docs[2]), map_from_document(docs[3])));
  }
  if (what == "nijenhuis_first") {
    need(2);
    return to_document(
        nijenhuis_deform(ldend_from_document(docs[0]), map_from_document(docs[1])).first);
  }
  if (what == "complexify") {
    need(1);
    return to_document(complexify(ldend_from_document(docs[0])));
  }
  if (what == "jtwist") {
    need(2);
    return to_document(
        j_twisted_products({ldend_from_document(docs[0]), map_from_document(docs[1])}));
  }
  throw CliError("unknown construction '" + what + "'");
}

std::string labels_line(const StructureLabels& l) {
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ",";
    out += name;
  };
  add(l.strict, "strict");
  add(l.abelian, "abelian");
  add(l.strong, "strong");
  add(l.perfect, "perfect");
  return out.empty() ? "none" : out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checker and constructor for ternary Hom-algebra structures"};
  app.require_subcommand(1);
  std::string format = "human";
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"human", "machine"}))
      ->capture_default_str();

  std::string verify_file, verify_suite;
  CLI::App* verify = app.add_subcommand("verify", "run the axiom suite of a document");
  verify->add_option("file", verify_file)->required();
  verify->add_option("--suite", verify_suite, "suite name (defaults to the document kind)");

  std::string derive_what, derive_out;
  std::vector<std::string> derive_files;
  CLI::App* derive = app.add_subcommand("derive", "apply a construction and write the result");
  derive->add_option("construction", derive_what)->required();
  derive->add_option("files", derive_files, "input documents")->required();
  derive->add_option("-o,--out", derive_out, "output path")->required();

  std::string cls_structure, cls_algebra;
  bool cls_almost = false;
  CLI::App* classify =
      app.add_subcommand("classify", "classify a product or complex structure candidate");
  classify->add_option("structure", cls_structure, "linear_map document")->required();
  classify->add_option("algebra", cls_algebra, "3hom_ldend document")->required();
  classify->add_flag("--almost", cls_almost, "classify an almost-structure");

  std::string deform_file, deform_map;
  int deform_order = 2;
  CLI::App* deform = app.add_subcommand("deform", "Nijenhuis deformation of an algebra");
  deform->add_option("file", deform_file, "3hom_ldend document")->required();
  deform->add_option("--nijenhuis", deform_map, "linear_map document")->required();
  deform->add_option("--order", deform_order, "deformation order (0..2)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // diagnostic to stderr; usage problems always exit 2
    return 2;
  }
  const bool machine = format == "machine";

  try {
    if (*verify) return report_exit(verify_report(load(verify_file), verify_suite), machine);

    if (*derive) {
      std::vector<Document> docs;
      docs.reserve(derive_files.size());
      for (const auto& f : derive_files) docs.push_back(load(f));
      Document out = derive_document(derive_what, docs);
      write_file(derive_out, serialize(out));
      if (machine)
        std::cout << "derived construction=" << derive_what << " kind=" << kind_name(out.kind)
                  << " out=" << derive_out << "\n";
      else
        std::cout << "derived " << derive_what << " -> " << derive_out << " ("
                  << kind_name(out.kind) << ")\n";
      return 0;
    }

    if (*classify) {
      LinearMap m = map_from_document(load(cls_structure));
      ThreeHomLDend alg = ldend_from_document(load(cls_algebra));
      LinearMap sq = m.compose(m);
      bool is_product;
      if (sq == LinearMap::identity(m.dim()))
        is_product = true;
      else if (sq == -LinearMap::identity(m.dim()))
        is_product = false;
      else
        throw CliError("candidate squares to neither +id nor -id");
      if (!cls_almost) {
        Report r = is_product ? check_product({alg, m}) : check_complex({alg, m});
        if (!r.pass()) return report_exit(r, machine);
      }
      StructureLabels labels = is_product ? classify_product({alg, m}, cls_almost)
                                          : classify_complex({alg, m}, cls_almost);
      if (machine)
        std::cout << "classified kind=" << (is_product ? "product" : "complex")
                  << " labels=" << labels_line(labels) << "\n";
      else
        std::cout << (is_product ? "product" : "complex")
                  << " structure labels: " << labels_line(labels) << "\n";
      return 0;
    }

    if (*deform) {
      ThreeHomLDend alg = ldend_from_document(load(deform_file));
      LinearMap n = map_from_document(load(deform_map));
      Report nij = check_nijenhuis(alg, n);
      if (!nij.pass()) return report_exit(nij, machine);
      NijenhuisDeformation nd = nijenhuis_deform(alg, n);
      nd.family.order = deform_order;
      return report_exit(check_deformation(nd.family), machine);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

#pragma once

#include <map>
#include <string>
#include <string_view>

#include "ternalg/nijenhuis.hpp"
#include "ternalg/structures.hpp"

namespace ternalg {

enum class DocKind {
  HomLie,
  Lie3,
  PreLie3,
  LDend3,
  Map,
  Rep,
  PreRep,
  Form,
  Covector,
};

std::string kind_name(DocKind k);
DocKind kind_from_name(const std::string& name);

struct DocEntry {
  std::vector<int> idx;
  Scalar value;
  bool operator==(const DocEntry&) const = default;
};

/// Canonical in-memory document: sorted sparse entries per section, reduced
/// scalars, 0-based indices.  One document per file.
struct Document {
  DocKind kind = DocKind::Lie3;
  Mode mode = Mode::Real;
  int dim = 0;      // algebras, maps, forms, covectors
  int algdim = 0;   // representations
  int moddim = 0;
  std::map<std::string, std::vector<DocEntry>> sections;

  bool operator==(const Document&) const = default;
};

/// Parses the text format; throws ParseError (with line/column) or RangeError.
Document parse_document(std::string_view text);

/// Canonical text form; parse(serialize(d)) == d for canonical documents.
std::string serialize(const Document& d);

/// Sorts entries, drops zeros.  parse_document output is already canonical.
Document canonicalize(Document d);

// document -> domain (dimension/range checked; axiom checks are the caller's)
HomLie homlie_from_document(const Document& d);
ThreeHomLie lie_from_document(const Document& d);
ThreeHomPreLie prelie_from_document(const Document& d);
ThreeHomLDend ldend_from_document(const Document& d);
LinearMap map_from_document(const Document& d);
LieRep lierep_from_document(const Document& d);
PreLieRep preliererep_from_document(const Document& d);
SymplecticForm form_from_document(const Document& d);
Vec covector_from_document(const Document& d);

// domain -> canonical document
Document to_document(const HomLie& a);
Document to_document(const ThreeHomLie& a);
Document to_document(const ThreeHomPreLie& a);
Document to_document(const ThreeHomLDend& a);
Document to_document(const LinearMap& m, Mode mode = Mode::Real);
Document to_document(const LieRep& r);
Document to_document(const PreLieRep& p);
Document to_document(const SymplecticForm& s);
Document covector_to_document(const Vec& tau, Mode mode = Mode::Real);

/// Human or machine (line-delimited records) rendering; the wall-time field
/// is the final line and is omitted when include_wall is false so byte-wise
/// comparison of reports is meaningful.
std::string render_report(const Report& r, bool machine, bool include_wall = true);

}  // namespace ternalg

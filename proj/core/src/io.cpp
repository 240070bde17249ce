#include "ternalg/io.hpp"

#include <algorithm>
#include <sstream>

namespace ternalg {

namespace {

struct SectionSpec {
  const char* name;
  int arity;
  // index bounds: 'd' = dim, 'a' = algdim, 'm' = moddim
  const char* bounds;
};

struct KindSpec {
  DocKind kind;
  const char* name;
  bool rep_dims;  // algdim/moddim instead of dim
  std::vector<SectionSpec> sections;
};

const std::vector<KindSpec>& kind_specs() {
  static const std::vector<KindSpec> specs = {
      {DocKind::HomLie, "hom_lie", false, {{"bracket2", 3, "ddd"}, {"alpha", 2, "dd"}}},
      {DocKind::Lie3, "3hom_lie", false, {{"bracket", 4, "dddd"}, {"alpha", 2, "dd"}}},
      {DocKind::PreLie3, "3hom_prelie", false, {{"prod", 4, "dddd"}, {"alpha", 2, "dd"}}},
      {DocKind::LDend3, "3hom_ldend", false,
       {{"nw", 4, "dddd"}, {"ne", 4, "dddd"}, {"alpha", 2, "dd"}}},
      {DocKind::Map, "linear_map", false, {{"m", 2, "dd"}}},
      {DocKind::Rep, "rep", true,
       {{"bracket", 4, "aaaa"}, {"alpha", 2, "aa"}, {"rho", 4, "aamm"}, {"phi", 2, "mm"}}},
      {DocKind::PreRep, "prelie_rep", true,
       {{"prod", 4, "aaaa"},
        {"alpha", 2, "aa"},
        {"l", 4, "aamm"},
        {"r", 4, "aamm"},
        {"phi", 2, "mm"}}},
      {DocKind::Form, "bilinear_form", false,
       {{"prod", 4, "dddd"}, {"alpha", 2, "dd"}, {"b", 2, "dd"}}},
      {DocKind::Covector, "covector", false, {{"tau", 1, "d"}}},
  };
  return specs;
}

const KindSpec& spec_of(DocKind k) {
  for (const auto& s : kind_specs())
    if (s.kind == k) return s;
  throw Error("unknown document kind");
}

const SectionSpec* section_of(const KindSpec& ks, const std::string& name) {
  for (const auto& s : ks.sections)
    if (name == s.name) return &s;
  return nullptr;
}

// ---------------------------------------------------------------------------
// scalar strings
// ---------------------------------------------------------------------------

bool valid_int_token(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Rational parse_rational(const std::string& tok, int line, int col) {
  auto slash = tok.find('/');
  std::string num = slash == std::string::npos ? tok : tok.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : tok.substr(slash + 1);
  if (!valid_int_token(num) || !valid_int_token(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("malformed rational '" + tok + "'", line, col);
  Int p(num), q(den);
  if (q == 0) throw ParseError("zero denominator in '" + tok + "'", line, col);
  return Rational(p, q);
}

std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  if (b == std::string::npos) return {};
  return s.substr(b, e - b + 1);
}

Scalar parse_scalar(std::string text, int line, int col) {
  text = trim(std::move(text));
  if (text.empty()) throw ParseError("empty scalar", line, col);
  bool has_i = text.back() == 'i';
  if (!has_i) return Scalar(parse_rational(text, line, col));
  std::string body = trim(text.substr(0, text.size() - 1));
  if (body.empty()) throw ParseError("malformed scalar '" + text + "'", line, col);
  // split off the imaginary coefficient at the last sign that separates two
  // rational tokens
  for (size_t p = body.size(); p-- > 1;) {
    if ((body[p] == '+' || body[p] == '-') && body[p - 1] != '/' && body[p - 1] != '+' &&
        body[p - 1] != '-') {
      std::string re = trim(body.substr(0, p));
      std::string im = trim(body.substr(p + 1));
      if (im.empty()) throw ParseError("malformed scalar '" + text + "'", line, col);
      Rational rp = parse_rational(re, line, col);
      Rational ip = parse_rational(im, line, col);
      return Scalar(rp, body[p] == '-' ? Rational(-ip) : ip);
    }
  }
  return Scalar(Rational(0), parse_rational(trim(body), line, col));
}

}  // namespace

std::string kind_name(DocKind k) { return spec_of(k).name; }

DocKind kind_from_name(const std::string& name) {
  for (const auto& s : kind_specs())
    if (name == s.name) return s.kind;
  throw ParseError("unknown kind '" + name + "'", 0, 0);
}

Document canonicalize(Document d) {
  for (auto& [name, entries] : d.sections) {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const DocEntry& a, const DocEntry& b) { return a.idx < b.idx; });
    entries.erase(std::remove_if(entries.begin(), entries.end(),
                                 [](const DocEntry& e) { return e.value.is_zero(); }),
                  entries.end());
  }
  // drop empty sections so serialization stays minimal and stable
  for (auto it = d.sections.begin(); it != d.sections.end();)
    it = it->second.empty() ? d.sections.erase(it) : std::next(it);
  return d;
}

Document parse_document(std::string_view text) {
  Document doc;
  bool kind_seen = false;
  bool dims_seen = false;
  const KindSpec* ks = nullptr;
  std::string current_section;
  const SectionSpec* current_spec = nullptr;
  std::map<std::string, std::vector<std::vector<int>>> seen_idx;

  int lineno = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string line(text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                    : eol - pos));
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError("unterminated section header", lineno, 1);
      if (!kind_seen) throw ParseError("section before kind", lineno, 1);
      current_section = trim(line.substr(1, line.size() - 2));
      current_spec = section_of(*ks, current_section);
      if (!current_spec)
        throw ParseError("unknown section '" + current_section + "'", lineno, 1);
      continue;
    }

    if (auto colon = line.find(':');
        colon != std::string::npos && current_section.empty()) {
      std::string key = trim(line.substr(0, colon));
      std::string value = trim(line.substr(colon + 1));
      if (key == "kind") {
        doc.kind = kind_from_name(value);
        ks = &spec_of(doc.kind);
        kind_seen = true;
      } else if (key == "mode") {
        if (value == "real")
          doc.mode = Mode::Real;
        else if (value == "complex")
          doc.mode = Mode::Complex;
        else
          throw ParseError("unknown mode '" + value + "'", lineno, 1);
      } else if (key == "dim" || key == "algdim" || key == "moddim") {
        if (!kind_seen) throw ParseError("dimension before kind", lineno, 1);
        int v = 0;
        try {
          v = std::stoi(value);
        } catch (...) {
          throw ParseError("malformed dimension '" + value + "'", lineno, 1);
        }
        if (v <= 0) throw ParseError("dimension must be positive", lineno, 1);
        if (key == "dim" && !ks->rep_dims)
          doc.dim = v;
        else if (key == "algdim" && ks->rep_dims)
          doc.algdim = v;
        else if (key == "moddim" && ks->rep_dims)
          doc.moddim = v;
        else
          throw ParseError("dimension key '" + key + "' not valid for this kind", lineno, 1);
        dims_seen = true;
      } else {
        throw ParseError("unknown header '" + key + "'", lineno, 1);
      }
      continue;
    }

    // entry line: indices '=' scalar
    if (current_section.empty()) throw ParseError("entry outside any section", lineno, 1);
    if (!dims_seen) throw ParseError("entry before dimensions", lineno, 1);
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("entry without '='", lineno, 1);
    std::istringstream iss(line.substr(0, eq));
    std::vector<int> idx;
    int v;
    while (iss >> v) idx.push_back(v);
    std::string rest;
    iss.clear();
    iss >> rest;
    if (!rest.empty()) throw ParseError("malformed index list", lineno, 1);
    if (static_cast<int>(idx.size()) != current_spec->arity)
      throw ParseError("expected " + std::to_string(current_spec->arity) + " indices", lineno, 1);
    for (size_t i = 0; i < idx.size(); ++i) {
      int bound = 0;
      switch (current_spec->bounds[i]) {
        case 'd': bound = doc.dim; break;
        case 'a': bound = doc.algdim; break;
        case 'm': bound = doc.moddim; break;
      }
      if (idx[i] < 0 || idx[i] >= bound)
        throw RangeError("index out of range in section [" + current_section + "] at line " +
                         std::to_string(lineno));
    }
    Scalar value = parse_scalar(line.substr(eq + 1), lineno, static_cast<int>(eq) + 2);
    if (doc.mode == Mode::Real && !value.is_real())
      throw ParseError("imaginary entry in a real-mode document", lineno,
                       static_cast<int>(eq) + 2);
    auto& seen = seen_idx[current_section];
    if (std::find(seen.begin(), seen.end(), idx) != seen.end())
      throw ParseError("duplicate entry in section [" + current_section + "]", lineno, 1);
    seen.push_back(idx);
    doc.sections[current_section].push_back({std::move(idx), std::move(value)});
  }

  if (!kind_seen) throw ParseError("missing kind header", lineno, 1);
  if (!dims_seen) throw ParseError("missing dimensions", lineno, 1);
  if (ks->rep_dims && (doc.algdim <= 0 || doc.moddim <= 0))
    throw ParseError("representation documents need algdim and moddim", lineno, 1);
  return canonicalize(std::move(doc));
}

std::string serialize(const Document& d) {
  const KindSpec& ks = spec_of(d.kind);
  std::string out;
  out += "kind: " + std::string(ks.name) + "\n";
  out += "mode: " + to_string(d.mode) + "\n";
  if (ks.rep_dims) {
    out += "algdim: " + std::to_string(d.algdim) + "\n";
    out += "moddim: " + std::to_string(d.moddim) + "\n";
  } else {
    out += "dim: " + std::to_string(d.dim) + "\n";
  }
  for (const auto& sec : ks.sections) {
    auto it = d.sections.find(sec.name);
    if (it == d.sections.end() || it->second.empty()) continue;
    out += "[" + std::string(sec.name) + "]\n";
    for (const auto& e : it->second) {
      std::string lineidx;
      for (size_t i = 0; i < e.idx.size(); ++i) {
        if (i) lineidx += " ";
        lineidx += std::to_string(e.idx[i]);
      }
      out += lineidx + " = " + to_string(e.value) + "\n";
    }
  }
  return out;
}

namespace {

void require_kind(const Document& d, DocKind k, const char* what) {
  if (d.kind != k)
    throw RangeError(std::string("document is not a ") + what + " document");
}

TriTensor tensor_from(const Document& d, const char* section, int dim) {
  TriTensor t(dim);
  auto it = d.sections.find(section);
  if (it == d.sections.end()) return t;
  for (const auto& e : it->second) t.at(e.idx[0], e.idx[1], e.idx[2], e.idx[3]) = e.value;
  return t;
}

LinearMap matrix_from(const Document& d, const char* section, int dim) {
  LinearMap m(dim);
  auto it = d.sections.find(section);
  if (it == d.sections.end()) return m;
  for (const auto& e : it->second) m.at(e.idx[0], e.idx[1]) = e.value;
  return m;
}

RepTensor rep_from(const Document& d, const char* section, int algdim, int moddim, bool skew) {
  RepTensor t(algdim, moddim, skew);
  auto it = d.sections.find(section);
  if (it == d.sections.end()) return t;
  for (const auto& e : it->second) t.at(e.idx[0], e.idx[1], e.idx[2], e.idx[3]) = e.value;
  return t;
}

void push_tensor(Document& d, const char* section, const TriTensor& t) {
  auto& entries = d.sections[section];
  for (const auto& e : t.nonzero()) entries.push_back({{e.i, e.j, e.k, e.l}, *e.value});
}

void push_matrix(Document& d, const char* section, const LinearMap& m) {
  auto& entries = d.sections[section];
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c)
      if (!m.at(r, c).is_zero()) entries.push_back({{r, c}, m.at(r, c)});
}

void push_rep(Document& d, const char* section, const RepTensor& t) {
  auto& entries = d.sections[section];
  for (int i = 0; i < t.algdim(); ++i)
    for (int j = 0; j < t.algdim(); ++j)
      for (int r = 0; r < t.moddim(); ++r)
        for (int c = 0; c < t.moddim(); ++c)
          if (!t.at(i, j, r, c).is_zero()) entries.push_back({{i, j, r, c}, t.at(i, j, r, c)});
}

}  // namespace

HomLie homlie_from_document(const Document& d) {
  require_kind(d, DocKind::HomLie, "hom_lie");
  BiTensor b(d.dim);
  if (auto it = d.sections.find("bracket2"); it != d.sections.end())
    for (const auto& e : it->second) b.at(e.idx[0], e.idx[1], e.idx[2]) = e.value;
  return {d.dim, std::move(b), matrix_from(d, "alpha", d.dim), d.mode};
}

ThreeHomLie lie_from_document(const Document& d) {
  require_kind(d, DocKind::Lie3, "3hom_lie");
  return {d.dim, tensor_from(d, "bracket", d.dim), matrix_from(d, "alpha", d.dim), d.mode};
}

ThreeHomPreLie prelie_from_document(const Document& d) {
  require_kind(d, DocKind::PreLie3, "3hom_prelie");
  return {d.dim, tensor_from(d, "prod", d.dim), matrix_from(d, "alpha", d.dim), d.mode};
}

ThreeHomLDend ldend_from_document(const Document& d) {
  require_kind(d, DocKind::LDend3, "3hom_ldend");
  return {d.dim, tensor_from(d, "nw", d.dim), tensor_from(d, "ne", d.dim),
          matrix_from(d, "alpha", d.dim), d.mode};
}

LinearMap map_from_document(const Document& d) {
  require_kind(d, DocKind::Map, "linear_map");
  return matrix_from(d, "m", d.dim);
}

LieRep lierep_from_document(const Document& d) {
  require_kind(d, DocKind::Rep, "rep");
  ThreeHomLie alg{d.algdim, tensor_from(d, "bracket", d.algdim),
                  matrix_from(d, "alpha", d.algdim), d.mode};
  return {std::move(alg), rep_from(d, "rho", d.algdim, d.moddim, true),
          matrix_from(d, "phi", d.moddim)};
}

PreLieRep preliererep_from_document(const Document& d) {
  require_kind(d, DocKind::PreRep, "prelie_rep");
  ThreeHomPreLie alg{d.algdim, tensor_from(d, "prod", d.algdim),
                     matrix_from(d, "alpha", d.algdim), d.mode};
  return {std::move(alg), rep_from(d, "l", d.algdim, d.moddim, true),
          rep_from(d, "r", d.algdim, d.moddim, false), matrix_from(d, "phi", d.moddim)};
}

SymplecticForm form_from_document(const Document& d) {
  require_kind(d, DocKind::Form, "bilinear_form");
  ThreeHomPreLie alg{d.dim, tensor_from(d, "prod", d.dim), matrix_from(d, "alpha", d.dim),
                     d.mode};
  BilinearForm b(d.dim);
  if (auto it = d.sections.find("b"); it != d.sections.end())
    for (const auto& e : it->second) b.at(e.idx[0], e.idx[1]) = e.value;
  return {std::move(alg), std::move(b)};
}

Vec covector_from_document(const Document& d) {
  require_kind(d, DocKind::Covector, "covector");
  Vec tau(d.dim);
  if (auto it = d.sections.find("tau"); it != d.sections.end())
    for (const auto& e : it->second) tau[e.idx[0]] = e.value;
  return tau;
}

Document to_document(const HomLie& a) {
  Document d;
  d.kind = DocKind::HomLie;
  d.mode = a.mode;
  d.dim = a.dim;
  auto& entries = d.sections["bracket2"];
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      for (int l = 0; l < a.dim; ++l)
        if (!a.bracket2.at(i, j, l).is_zero()) entries.push_back({{i, j, l}, a.bracket2.at(i, j, l)});
  push_matrix(d, "alpha", a.alpha);
  return canonicalize(std::move(d));
}

Document to_document(const ThreeHomLie& a) {
  Document d;
  d.kind = DocKind::Lie3;
  d.mode = a.mode;
  d.dim = a.dim;
  push_tensor(d, "bracket", a.bracket);
  push_matrix(d, "alpha", a.alpha);
  return canonicalize(std::move(d));
}

Document to_document(const ThreeHomPreLie& a) {
  Document d;
  d.kind = DocKind::PreLie3;
  d.mode = a.mode;
  d.dim = a.dim;
  push_tensor(d, "prod", a.prod);
  push_matrix(d, "alpha", a.alpha);
  return canonicalize(std::move(d));
}

Document to_document(const ThreeHomLDend& a) {
  Document d;
  d.kind = DocKind::LDend3;
  d.mode = a.mode;
  d.dim = a.dim;
  push_tensor(d, "nw", a.nw);
  push_tensor(d, "ne", a.ne);
  push_matrix(d, "alpha", a.alpha);
  return canonicalize(std::move(d));
}

Document to_document(const LinearMap& m, Mode mode) {
  Document d;
  d.kind = DocKind::Map;
  d.mode = mode;
  d.dim = m.dim();
  push_matrix(d, "m", m);
  return canonicalize(std::move(d));
}

Document to_document(const LieRep& r) {
  Document d;
  d.kind = DocKind::Rep;
  d.mode = r.alg.mode;
  d.algdim = r.alg.dim;
  d.moddim = r.rho.moddim();
  push_tensor(d, "bracket", r.alg.bracket);
  push_matrix(d, "alpha", r.alg.alpha);
  push_rep(d, "rho", r.rho);
  push_matrix(d, "phi", r.phi);
  return canonicalize(std::move(d));
}

Document to_document(const PreLieRep& p) {
  Document d;
  d.kind = DocKind::PreRep;
  d.mode = p.alg.mode;
  d.algdim = p.alg.dim;
  d.moddim = p.l.moddim();
  push_tensor(d, "prod", p.alg.prod);
  push_matrix(d, "alpha", p.alg.alpha);
  push_rep(d, "l", p.l);
  push_rep(d, "r", p.r);
  push_matrix(d, "phi", p.phi);
  return canonicalize(std::move(d));
}

Document to_document(const SymplecticForm& s) {
  Document d;
  d.kind = DocKind::Form;
  d.mode = s.alg.mode;
  d.dim = s.alg.dim;
  push_tensor(d, "prod", s.alg.prod);
  push_matrix(d, "alpha", s.alg.alpha);
  auto& entries = d.sections["b"];
  for (int i = 0; i < s.b.dim(); ++i)
    for (int j = 0; j < s.b.dim(); ++j)
      if (!s.b.at(i, j).is_zero()) entries.push_back({{i, j}, s.b.at(i, j)});
  return canonicalize(std::move(d));
}

Document covector_to_document(const Vec& tau, Mode mode) {
  Document d;
  d.kind = DocKind::Covector;
  d.mode = mode;
  d.dim = static_cast<int>(tau.size());
  auto& entries = d.sections["tau"];
  for (int i = 0; i < d.dim; ++i)
    if (!tau[i].is_zero()) entries.push_back({{i}, tau[i]});
  return canonicalize(std::move(d));
}

std::string render_report(const Report& r, bool machine, bool include_wall) {
  std::ostringstream os;
  if (machine) {
    os << "suite=" << r.suite << " status=" << (r.passed ? "pass" : "fail")
       << " identities=" << r.stats.identities_checked << " tuples=" << r.stats.tuples_enumerated
       << "\n";
    for (const auto& v : r.violations) {
      os << "violation id=" << v.identity << " tuple=";
      for (size_t i = 0; i < v.where.size(); ++i) os << (i ? "," : "") << v.where[i];
      os << " lhs=" << to_string(v.lhs) << " rhs=" << to_string(v.rhs) << "\n";
    }
    if (!r.detail.empty()) os << "detail " << r.detail << "\n";
    if (include_wall) os << "wall_ms=" << r.stats.wall_ms << "\n";
  } else {
    os << "suite " << r.suite << ": " << (r.passed ? "PASS" : "FAIL") << "\n";
    for (const auto& v : r.violations) {
      os << "  violated " << v.identity << " at (";
      for (size_t i = 0; i < v.where.size(); ++i) os << (i ? "," : "") << v.where[i];
      os << ")\n    lhs = " << to_string(v.lhs) << "\n    rhs = " << to_string(v.rhs) << "\n";
    }
    if (!r.detail.empty()) os << "  " << r.detail << "\n";
    os << "  identities checked: " << r.stats.identities_checked
       << ", tuples enumerated: " << r.stats.tuples_enumerated;
    if (include_wall) os << ", wall ms: " << r.stats.wall_ms;
    os << "\n";
  }
  return os.str();
}

}  // namespace ternalg

#include "pseudo/format.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace pseudo {

namespace {

std::string position_message(int line, int column, const std::string& msg) {
  if (line <= 0) return msg;
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg;
}

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;
  int line = 0;
  int col0 = 0;  // column of s[0] minus one

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line, col0 + static_cast<int>(pos) + 1, msg);
  }
  void ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    ws();
    return pos >= s.size();
  }
  char peek() {
    ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  int integer() {
    if (!at_digit()) fail("expected an integer");
    long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos++] - '0');
      if (v > 1000000) fail("integer too large");
    }
    return static_cast<int>(v);
  }
  Rational unsigned_rational() {
    if (!at_digit()) fail("expected a rational number");
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    std::string num(s.substr(start, pos - start)), den = "1";
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected a denominator");
      std::size_t d0 = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      den = std::string(s.substr(d0, pos - d0));
      if (den.find_first_not_of('0') == std::string::npos) {
        pos = d0;
        fail("zero denominator");
      }
    }
    Rational q(num + "/" + den);
    q.canonicalize();
    return q;
  }
  std::string word() {
    ws();
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
    if (start == pos) fail("expected a keyword");
    return std::string(s.substr(start, pos - start));
  }
};

// Parses up to (not including) one of `stops` or the end.
HopfElement hexpr_at(const HopfAlgebra& H, Cursor& c, std::string_view stops) {
  HopfElement out(H.dim());
  bool first = true;
  auto at_stop = [&] {
    char p = c.peek();
    return p == '\0' || stops.find(p) != std::string_view::npos;
  };
  while (true) {
    if (at_stop()) {
      if (first) c.fail("empty expression");
      break;
    }
    Rational sign = 1;
    if (c.accept('-')) sign = -1;
    else if (!c.accept('+') && !first) c.fail("expected '+' or '-'");
    Rational coef = 1;
    bool any = false;
    if (c.at_digit()) {
      coef = c.unsigned_rational();
      any = true;
      if (c.accept('*') && c.peek() != 'd') c.fail("expected d<i> after '*'");
    }
    HopfElement m = H.one();
    while (c.peek() == 'd') {
      ++c.pos;
      std::size_t at = c.pos;
      int i = c.integer();
      if (i < 1 || i > H.dim()) {
        c.pos = at;
        c.fail("undeclared generator d" + std::to_string(i));
      }
      int e = 1;
      if (c.accept('^')) {
        if (c.peek() == '-') c.fail("exponent < 0");
        e = c.integer();
        if (e > 60) c.fail("exponent too large");
      }
      m = H.mul(m, H.power(i - 1, e));
      any = true;
    }
    if (!any) c.fail("expected a coefficient or d<i>");
    out += m * (sign * coef);
    first = false;
  }
  return out;
}

struct RawTerm {
  Rational c;
  HopfElement h, l;
  std::vector<int> labels;  // 0-based
};

std::vector<RawTerm> terms_at(const HopfAlgebra& H, Cursor& c, int nlabels, int rank) {
  std::vector<RawTerm> out;
  bool first = true;
  while (!c.eof()) {
    Rational sign = 1;
    if (c.accept('-')) sign = -1;
    else c.accept('+');
    Rational q = sign * c.unsigned_rational();
    if (first && q == 0 && c.eof()) break;
    first = false;
    c.expect('(');
    HopfElement h = hexpr_at(H, c, "|");
    c.expect('|');
    HopfElement l = hexpr_at(H, c, ")");
    c.expect(')');
    std::vector<int> labels;
    for (int k = 0; k < nlabels; ++k) {
      c.ws();
      std::size_t at = c.pos;
      int v = c.integer();
      if (v < 1 || v > rank) {
        c.pos = at;
        c.fail("undeclared label " + std::to_string(v));
      }
      labels.push_back(v - 1);
    }
    out.push_back({q, std::move(h), std::move(l), std::move(labels)});
  }
  return out;
}

struct SourceLine {
  int no;
  std::string text;  // comment stripped
};

Cursor cursor(const SourceLine& l) { return Cursor{l.text, 0, l.no, 0}; }

std::string trim(std::string_view v) {
  std::size_t a = 0, b = v.size();
  while (a < b && std::isspace(static_cast<unsigned char>(v[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(v[b - 1]))) --b;
  return std::string(v.substr(a, b - a));
}

const std::vector<std::string> kSections = {"lie_algebra", "pseudoalgebra", "cobracket", "r", "options"};

int positive_int_option(const SourceLine& l, Cursor& c, bool allow_zero) {
  int v = c.integer();
  if (!c.eof()) c.fail("unexpected text after value");
  if (!allow_zero && v == 0) throw ParseError(l.no, 1, "value must be positive");
  return v;
}

}  // namespace

ParseError::ParseError(int l, int col, const std::string& msg)
    : std::runtime_error(position_message(l, col, msg)), line(l), column(col) {}

int DefinitionDocument::option_int(const std::string& key, int fallback) const {
  auto it = options.find(key);
  return it == options.end() ? fallback : std::stoi(it->second);
}

bool DefinitionDocument::option_bool(const std::string& key, bool fallback) const {
  auto it = options.find(key);
  return it == options.end() ? fallback : it->second == "true";
}

std::vector<int> DefinitionDocument::window() const {
  std::vector<int> w;
  auto it = options.find("window");
  if (it == options.end()) return w;
  std::istringstream in(it->second);
  for (int v; in >> v;) w.push_back(v - 1);
  return w;
}

HopfElement parse_hexpr(const HopfAlgebra& H, std::string_view text) {
  Cursor c{text, 0, 1, 0};
  return hexpr_at(H, c, "");
}

DefinitionDocument parse_definition(std::string_view text) {
  std::map<std::string, std::pair<int, std::vector<SourceLine>>> sections;
  std::string current;
  int no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++no;
    std::string body(raw.substr(0, raw.find('#')));
    if (!body.empty() && body.back() == '\r') body.pop_back();
    std::string t = trim(body);
    if (t.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (t.front() == '[') {
      int col = static_cast<int>(body.find('[')) + 1;
      if (t.back() != ']') throw ParseError(no, col, "unterminated section header");
      std::string name = trim(std::string_view(t).substr(1, t.size() - 2));
      if (std::find(kSections.begin(), kSections.end(), name) == kSections.end())
        throw ParseError(no, col, "unknown section [" + name + "]");
      if (sections.count(name)) throw ParseError(no, col, "duplicate section [" + name + "]");
      sections[name].first = no;
      current = name;
    } else {
      if (current.empty()) throw ParseError(no, 1, "content before the first section");
      sections[current].second.push_back({no, body});
    }
    if (end == text.size()) break;
  }
  for (const char* req : {"lie_algebra", "pseudoalgebra"})
    if (!sections.count(req)) throw ParseError(0, 0, std::string("missing section [") + req + "]");

  DefinitionDocument doc;

  // [lie_algebra]
  {
    const auto& [hdr, lines] = sections["lie_algebra"];
    int dim = -1, dim_line = hdr;
    std::vector<std::pair<const SourceLine*, std::size_t>> brackets;
    for (const auto& l : lines) {
      Cursor c = cursor(l);
      std::string key = c.word();
      if (key == "dim") {
        if (dim >= 0) c.fail("duplicate dim");
        c.expect('=');
        dim = positive_int_option(l, c, false);
        if (dim > kMaxGenerators) c.fail("dim exceeds " + std::to_string(kMaxGenerators));
        dim_line = l.no;
      } else if (key == "bracket") {
        brackets.push_back({&l, c.pos});
      } else {
        c.pos -= key.size();
        c.fail("unknown key '" + key + "'");
      }
    }
    if (dim < 0) throw ParseError(hdr, 1, "[lie_algebra] needs dim");
    doc.lie.dim = dim;
    HopfAlgebra flat(LieAlgebraPresentation::abelian(dim));
    std::set<std::pair<int, int>> seen;
    for (const auto& [l, p] : brackets) {
      Cursor c = cursor(*l);
      c.pos = p;
      c.ws();
      std::size_t at = c.pos;
      int i = c.integer();
      c.ws();
      std::size_t at2 = c.pos;
      int j = c.integer();
      if (i < 1 || i > dim) {
        c.pos = at;
        c.fail("undeclared generator " + std::to_string(i));
      }
      if (j < 1 || j > dim) {
        c.pos = at2;
        c.fail("undeclared generator " + std::to_string(j));
      }
      if (i == j) {
        c.pos = at;
        c.fail("bracket of a generator with itself");
      }
      if (!seen.insert({std::min(i, j), std::max(i, j)}).second) {
        c.pos = at;
        c.fail("duplicate bracket");
      }
      c.expect('=');
      c.ws();
      std::size_t vat = c.pos;
      HopfElement v = hexpr_at(flat, c, "");
      for (const auto& [I, q] : v.terms()) {
        if (I.degree() != 1) {
          c.pos = vat;
          c.fail("bracket of generators must be linear in d1..d" + std::to_string(dim));
        }
        int k = 0;
        while (I[k] == 0) ++k;
        if (i < j) doc.lie.constants[{i - 1, j - 1, k}] = q;
        else doc.lie.constants[{j - 1, i - 1, k}] = -q;
      }
    }
    if (LieValidation v = validate_lie(doc.lie); !v.ok) throw ParseError(dim_line, 1, "invalid Lie algebra: " + v.message);
    doc.H = HopfAlgebra::make(doc.lie);
  }
  const HopfAlgebra& H = *doc.H;

  // [options], read early for `partial`
  if (sections.count("options"))
    for (const auto& l : sections["options"].second) {
      Cursor c = cursor(l);
      std::string key = c.word();
      c.expect('=');
      c.ws();
      std::string value = trim(std::string_view(l.text).substr(c.pos));
      if (key == "sample_degree" || key == "cutoff") {
        positive_int_option(l, c, true);
      } else if (key == "partial") {
        if (value != "true" && value != "false") c.fail("expected true or false");
      } else if (key == "window") {
        while (!c.eof()) c.integer();
      } else if (key != "name") {
        c.pos = 0;
        c.fail("unknown option '" + key + "'");
      }
      if (doc.options.count(key)) c.fail("duplicate option '" + key + "'");
      doc.options[key] = value;
    }

  // [pseudoalgebra]
  int rank = -1;
  {
    const auto& [hdr, lines] = sections["pseudoalgebra"];
    std::map<std::pair<int, int>, PT> entries;
    for (const auto& l : lines) {
      Cursor c = cursor(l);
      std::string key = c.word();
      if (key == "rank") {
        if (rank >= 0) c.fail("duplicate rank");
        c.expect('=');
        rank = positive_int_option(l, c, false);
      } else if (key == "bracket") {
        if (rank < 0) c.fail("rank must be declared before brackets");
        c.ws();
        std::size_t at = c.pos;
        int i = c.integer();
        int j = c.integer();
        if (i < 1 || i > rank || j < 1 || j > rank) {
          c.pos = at;
          c.fail("undeclared label in bracket " + std::to_string(i) + " " + std::to_string(j));
        }
        if (entries.count({i - 1, j - 1})) {
          c.pos = at;
          c.fail("duplicate bracket");
        }
        c.expect('=');
        PT v(doc.H, 2);
        for (const auto& t : terms_at(H, c, 1, rank)) v.add_raw({t.h, t.l}, H.one(), t.labels[0], t.c);
        entries.emplace(std::make_pair(i - 1, j - 1), std::move(v));
      } else {
        c.pos -= key.size();
        c.fail("unknown key '" + key + "'");
      }
    }
    if (rank < 0) throw ParseError(hdr, 1, "[pseudoalgebra] needs rank");
    doc.table = PseudoTable(doc.H, rank);
    const bool partial = doc.option_bool("partial", false);
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) {
        if (auto it = entries.find({i, j}); it != entries.end()) doc.table.set(i, j, it->second);
        else if (auto jt = entries.find({j, i}); jt != entries.end()) doc.table.set(i, j, -jt->second.swap12());
        else if (!partial) doc.table.set(i, j, PT(doc.H, 2));
      }
    if (doc.options.count("name")) doc.table.name = doc.options["name"];
  }

  // window labels must exist
  for (int w : doc.window())
    if (w < 0 || w >= rank) throw ParseError(sections["options"].first, 1, "window label out of range");

  if (sections.count("cobracket")) {
    Cobracket C(doc.H, rank);
    std::set<int> seen;
    for (const auto& l : sections["cobracket"].second) {
      Cursor c = cursor(l);
      std::string key = c.word();
      if (key != "delta") {
        c.pos -= key.size();
        c.fail("expected 'delta'");
      }
      c.ws();
      std::size_t at = c.pos;
      int k = c.integer();
      if (k < 1 || k > rank) {
        c.pos = at;
        c.fail("undeclared label " + std::to_string(k));
      }
      if (!seen.insert(k).second) {
        c.pos = at;
        c.fail("duplicate delta");
      }
      c.expect('=');
      LTensor v(2);
      for (const auto& t : terms_at(H, c, 2, rank)) v.add_pure({t.h, t.l}, t.labels, t.c);
      C.set(k - 1, std::move(v));
    }
    doc.cobracket = std::move(C);
  }

  if (sections.count("r")) {
    LTensor r(2);
    for (const auto& l : sections["r"].second) {
      Cursor c = cursor(l);
      std::string key = c.word();
      if (key != "r") {
        c.pos -= key.size();
        c.fail("expected 'r'");
      }
      c.expect('=');
      for (const auto& t : terms_at(H, c, 2, rank)) r.add_pure({t.h, t.l}, t.labels, t.c);
    }
    doc.r = std::move(r);
  }
  return doc;
}

std::string hexpr_to_string(const HopfElement& h) {
  if (h.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [I, c] : h.terms()) {
    std::string mono;
    for (int k = 0; k < I.size(); ++k) {
      if (I[k] == 0) continue;
      if (!mono.empty()) mono += ' ';
      mono += "d" + std::to_string(k + 1);
      if (I[k] != 1) mono += "^" + std::to_string(I[k]);
    }
    Rational a = abs(c);
    std::string body = mono.empty() ? rational_to_string(a) : (a == 1 ? mono : rational_to_string(a) + " * " + mono);
    if (first) out += (c < 0 ? "-" : "") + body;
    else out += (c < 0 ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

namespace {

std::string term_string(const Rational& c, const MultiIndex& I, const MultiIndex& J, const std::vector<int>& labels) {
  std::string s = rational_to_string(c) + " (" + hexpr_to_string(HopfElement::monomial(I)) + " | " +
                  hexpr_to_string(HopfElement::monomial(J)) + ")";
  for (int l : labels) s += " " + std::to_string(l + 1);
  return s;
}

std::string pt_terms(const PT& v) {
  std::string s;
  for (const auto& [k, F] : v.to_bare())
    for (const auto& [key, c] : F.terms()) {
      if (!s.empty()) s += "  ";
      s += term_string(c, key[0], key[1], {k});
    }
  return s.empty() ? "0" : s;
}

std::string lt_terms(const LTensor& v) {
  std::string s;
  for (const auto& [slot, c] : v.terms()) {
    if (!s.empty()) s += "  ";
    s += term_string(c, slot.idx[0], slot.idx[1], slot.labels);
  }
  return s.empty() ? "0" : s;
}

}  // namespace

std::string serialize_definition(const DefinitionDocument& doc) {
  std::ostringstream out;
  const int dim = doc.lie.dim;
  out << "[lie_algebra]\ndim = " << dim << "\n";
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      HopfElement v(dim);
      for (int k = 0; k < dim; ++k) v.add_term(MultiIndex::unit(dim, k), doc.lie.c(i, j, k));
      if (!v.is_zero()) out << "bracket " << i + 1 << " " << j + 1 << " = " << hexpr_to_string(v) << "\n";
    }
  const PseudoTable& T = doc.table;
  const bool partial = doc.option_bool("partial", false);
  out << "\n[pseudoalgebra]\nrank = " << T.rank() << "\n";
  for (int i = 0; i < T.rank(); ++i)
    for (int j = 0; j < T.rank(); ++j) {
      if (!T.has(i, j)) {
        if (!partial) throw std::invalid_argument("serialize: missing entry in a table without partial = true");
        if (T.has(j, i)) throw std::invalid_argument("serialize: entry present in one order only");
        continue;
      }
      const PT& v = T.entry(i, j);
      if (i > j && T.has(j, i) && v == -T.entry(j, i).swap12()) continue;
      if (v.is_zero() && !partial) continue;
      out << "bracket " << i + 1 << " " << j + 1 << " = " << pt_terms(v) << "\n";
    }
  if (doc.cobracket) {
    out << "\n[cobracket]\n";
    for (int k = 0; k < doc.cobracket->rank(); ++k)
      if (!doc.cobracket->value(k).is_zero()) out << "delta " << k + 1 << " = " << lt_terms(doc.cobracket->value(k)) << "\n";
  }
  if (doc.r) out << "\n[r]\nr = " << lt_terms(*doc.r) << "\n";
  if (!doc.options.empty()) {
    out << "\n[options]\n";
    for (const auto& [k, v] : doc.options) out << k << " = " << v << "\n";
  }
  return out.str();
}

DefinitionDocument to_document(const CatalogEntry& e) {
  DefinitionDocument doc;
  doc.H = e.table.algebra();
  doc.lie = doc.H->presentation();
  doc.table = e.table;
  doc.cobracket = e.cobracket;
  doc.r = e.r;
  doc.options["name"] = e.name;
  if (e.table.entries().size() != static_cast<std::size_t>(e.table.rank()) * static_cast<std::size_t>(e.table.rank()))
    doc.options["partial"] = "true";
  if (!e.window.empty()) {
    std::string w;
    for (int k : e.window) w += (w.empty() ? "" : " ") + std::to_string(k + 1);
    doc.options["window"] = w;
  }
  return doc;
}

bool same_definition(const DefinitionDocument& a, const DefinitionDocument& b) {
  if (a.lie.dim != b.lie.dim || a.table.rank() != b.table.rank() || a.options != b.options) return false;
  for (int i = 0; i < a.lie.dim; ++i)
    for (int j = 0; j < a.lie.dim; ++j)
      for (int k = 0; k < a.lie.dim; ++k)
        if (a.lie.c(i, j, k) != b.lie.c(i, j, k)) return false;
  const auto& ea = a.table.entries();
  const auto& eb = b.table.entries();
  if (ea.size() != eb.size()) return false;
  for (const auto& [ij, v] : ea) {
    auto it = eb.find(ij);
    if (it == eb.end() || !(it->second == v)) return false;
  }
  return a.cobracket == b.cobracket && a.r == b.r;
}

}  // namespace pseudo

#include "pseudo/cli.hpp"

#include "pseudo/annihilation.hpp"
#include "pseudo/format.hpp"
#include "pseudo/manin.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace pseudo::cli {

namespace {

struct Check {
  std::string name;
  bool pass;
  std::string witness;
};

struct Report {
  std::string command;
  std::string instance;
  std::vector<Check> checks;
  std::vector<std::string> artifacts;
  std::vector<std::string> body;  // text mode only
  std::optional<std::string> error;

  void check(std::string name, bool pass, std::string witness = {}) {
    checks.push_back({std::move(name), pass, pass ? std::string() : std::move(witness)});
  }
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string first_failure(const std::vector<AxiomReportEntry>& f) {
  if (f.empty()) return {};
  std::string s = f.front().kind;
  for (int i : f.front().indices) s += " " + std::to_string(i + 1);
  return s + ": " + f.front().witness;
}

void emit(const Report& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    nlohmann::ordered_json j;
    j["command"] = r.command;
    j["instance"] = r.instance;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
      nlohmann::ordered_json e;
      e["name"] = c.name;
      e["pass"] = c.pass;
      if (!c.witness.empty()) e["witness"] = c.witness;
      j["checks"].push_back(std::move(e));
    }
    j["artifacts"] = r.artifacts;
    if (r.error) j["error"] = *r.error;
    out << j.dump(2) << "\n";
    return;
  }
  out << r.command << ": " << r.instance << "\n";
  for (const auto& l : r.body) out << l << "\n";
  for (const auto& c : r.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.witness.empty()) out << ": " << c.witness;
    out << "\n";
  }
  for (const auto& a : r.artifacts) out << "wrote " << a << "\n";
  if (r.error) out << "error: " << *r.error << "\n";
}

DefinitionDocument load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_definition(ss.str());
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

// Writes to `path`, or appends the text to the report body when no path was given.
void artifact(Report& r, const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) r.body.push_back(l);
    return;
  }
  std::ofstream o(path, std::ios::binary);
  if (!o) throw UsageError("cannot write " + path);
  o << text;
  r.artifacts.push_back(path);
}

struct Options {
  std::string format = "text";
  std::string file;
  std::string output;
  bool conformal = false, coalgebra = false, cocycle = false;
  std::optional<int> sample_degree;
  std::optional<int> cutoff;
  std::string pairs;
};

void cmd_check(const DefinitionDocument& doc, const Options& o, Report& r) {
  const auto window = doc.window();
  LieReport lie = check_lie_axioms(doc.table, window);
  r.check("lie_axioms", lie.ok, first_failure(lie.failures));
  if (o.conformal) {
    int deg = o.sample_degree.value_or(doc.option_int("sample_degree", 4));
    ConformalReport c = check_conformal_axioms(doc.table, deg, window);
    r.check("conformal", c.ok, first_failure(c.failures));
  }
  if ((o.coalgebra || o.cocycle) && !doc.cobracket)
    throw UsageError("--coalgebra and --cocycle need a [cobracket] section");
  if (o.coalgebra) {
    CoalgebraReport c = check_coalgebra(*doc.cobracket);
    r.check("coalgebra", c.ok, c.witness);
  }
  if (o.cocycle) {
    Verdict v = check_cocycle(doc.table, *doc.cobracket);
    r.check("cocycle", v.ok, v.witness);
  }
}

void cmd_dualize(const DefinitionDocument& doc, const Options& o, Report& r) {
  if (doc.table.entries().size() != static_cast<std::size_t>(doc.table.rank()) * static_cast<std::size_t>(doc.table.rank()))
    throw UsageError("dualize needs a complete bracket table");
  Cobracket C = dualize_to_cobracket(doc.table);
  CoalgebraReport c = check_coalgebra(C);
  r.check("coalgebra", c.ok, c.witness);
  DefinitionDocument out;
  out.lie = doc.lie;
  out.H = doc.H;
  out.table = PseudoTable(doc.H, doc.table.rank());
  for (int i = 0; i < doc.table.rank(); ++i)
    for (int j = 0; j < doc.table.rank(); ++j) out.table.set(i, j, PT(doc.H, 2));
  out.cobracket = std::move(C);
  if (doc.options.count("name")) out.options["name"] = doc.options.at("name") + " dual";
  artifact(r, o.output, serialize_definition(out));
}

void cmd_coboundary(const DefinitionDocument& doc, const Options& o, Report& r) {
  if (!doc.r) throw UsageError("coboundary needs an [r] section");
  CybeReport c = cybe_check(doc.table, *doc.r);
  r.check("invariance", c.invariance, c.witness);
  r.check("cybe_mod", c.cybe_mod, c.witness);
  r.check("quasitriangular", c.quasitriangular, c.witness);
  if (doc.cobracket) {
    std::string w;
    for (int k = 0; k < c.delta.rank() && w.empty(); ++k)
      if (!(c.delta.value(k) == doc.cobracket->value(k)))
        w = "delta_r(" + key_to_string(k) + ") = " + c.delta.value(k).to_string() + ", section has " +
            doc.cobracket->value(k).to_string();
    r.check("delta equals [cobracket] section", w.empty(), w);
  }
  DefinitionDocument out = doc;
  out.cobracket = c.delta;
  artifact(r, o.output, serialize_definition(out));
}

void cmd_double(const DefinitionDocument& doc, const Options& o, Report& r) {
  if (!doc.cobracket) throw UsageError("double needs a [cobracket] section");
  DoubleResult d = drinfeld_double(doc.table, *doc.cobracket);
  LieReport lie = check_lie_axioms(d.manin.R);
  r.check("lie_axioms", lie.ok, first_failure(lie.failures));
  std::string mv = manin_violation(d.manin);
  r.check("manin_triple", mv.empty(), mv);
  FormReport f = form_check(d.manin.form, d.manin.R);
  r.check("invariant_form", f.symmetric && f.invariant && f.nondegenerate, f.witness);
  r.check("restriction_l", d.restrict_l, d.witness);
  r.check("restriction_dual", d.restrict_dual, d.witness);
  r.check("quasitriangular", d.cybe.quasitriangular, d.cybe.witness);
  DefinitionDocument out;
  out.lie = doc.lie;
  out.H = doc.H;
  out.table = d.manin.R;
  out.cobracket = d.delta;
  out.r = d.r;
  if (doc.options.count("name")) out.options["name"] = "D(" + doc.options.at("name") + ")";
  artifact(r, o.output, serialize_definition(out));
}

std::vector<std::pair<int, int>> parse_pairs(const std::string& s, int rank) {
  std::vector<std::pair<int, int>> out;
  if (s.empty()) {
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) out.emplace_back(i, j);
    return out;
  }
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');) {
    int i = 0, j = 0;
    char colon = 0;
    std::istringstream p(item);
    if (!(p >> i >> colon >> j) || colon != ':' || !(p >> std::ws).eof())
      throw UsageError("--pairs expects i:j[,i:j...], got '" + item + "'");
    if (i < 1 || j < 1 || i > rank || j > rank) throw UsageError("--pairs label out of range in '" + item + "'");
    out.emplace_back(i - 1, j - 1);
  }
  return out;
}

void cmd_annihilate(const DefinitionDocument& doc, const Options& o, Report& r) {
  const HopfAlgebra& H = *doc.H;
  if (!H.is_abelian()) throw UsageError("annihilate needs an abelian Lie algebra of derivations");
  const int cutoff = o.cutoff.value_or(doc.option_int("cutoff", 6));
  const int rank = doc.table.rank();
  auto pairs = parse_pairs(o.pairs, rank);
  Cobracket dual = dualize_to_cobracket(doc.table);
  std::string bad;
  for (const auto& [i, j] : pairs)
    for (const auto& I : indices_up_to(H.dim(), cutoff))
      for (const auto& J : indices_up_to(H.dim(), cutoff - I.degree())) {
        AnnihilationElement u = AnnihilationElement::basis(H.dim(), rank, I, i);
        AnnihilationElement v = AnnihilationElement::basis(H.dim(), rank, J, j);
        AnnihilationElement uv = ann_bracket(doc.table, u, v);
        r.body.push_back("[" + u.to_string() + ", " + v.to_string() + "] = " + uv.to_string());
        ConvolutionMap lhs = phi_iso(doc.table, uv);
        ConvolutionMap rhs = convolution_bracket(dual, phi_iso(doc.table, u), phi_iso(doc.table, v));
        if (!(lhs == rhs) && bad.empty())
          bad = "at [" + u.to_string() + ", " + v.to_string() + "]: " + lhs.to_string() + " vs " + rhs.to_string();
      }
  r.check("phi_homomorphism", bad.empty(), bad);
  if (!o.output.empty()) {
    std::string text;
    for (const auto& l : r.body) text += l + "\n";
    artifact(r, o.output, text);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lie pseudoalgebras and pseudo-bialgebras over U(d)", "pseudoalg"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto common = [&](CLI::App* s, bool writes) {
    s->add_option("file", o.file, "definition file")->required();
    if (writes) s->add_option("-o,--output", o.output, "artifact path");
    s->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  CLI::App* check = app.add_subcommand("check", "Lie axioms and optional suites");
  common(check, false);
  check->add_flag("--conformal", o.conformal, "add the x-bracket suite");
  check->add_flag("--coalgebra", o.coalgebra, "co-Jacobi of the [cobracket] section");
  check->add_flag("--cocycle", o.cocycle, "1-cocycle condition of the [cobracket] section");
  check->add_option("--sample-degree", o.sample_degree, "x-bracket sample degree")->check(CLI::NonNegativeNumber);
  CLI::App* dualize = app.add_subcommand("dualize", "cobracket on the dual module");
  common(dualize, true);
  CLI::App* cob = app.add_subcommand("coboundary", "delta_r and the CYBE report");
  common(cob, true);
  CLI::App* dbl = app.add_subcommand("double", "Drinfeld double");
  common(dbl, true);
  CLI::App* ann = app.add_subcommand("annihilate", "annihilation algebra samples");
  common(ann, true);
  ann->add_option("--cutoff", o.cutoff, "max m + n for t_m, t_n")->check(CLI::NonNegativeNumber);
  ann->add_option("--pairs", o.pairs, "label pairs i:j, comma separated");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }
  if (o.sample_degree && !o.conformal) {
    err << "--sample-degree needs --conformal\n";
    return 2;
  }

  Report r;
  r.command = app.get_subcommands().front()->get_name();
  r.instance = std::filesystem::path(o.file).filename().string();
  try {
    DefinitionDocument doc = load(o.file);
    if (doc.options.count("name")) r.instance = doc.options.at("name");
    if (r.command == "check") cmd_check(doc, o, r);
    else if (r.command == "dualize") cmd_dualize(doc, o, r);
    else if (r.command == "coboundary") cmd_coboundary(doc, o, r);
    else if (r.command == "double") cmd_double(doc, o, r);
    else cmd_annihilate(doc, o, r);
  } catch (const TruncationInsufficient& e) {
    r.error = std::string(e.what()) +
              (e.required >= 0 ? "; minimal sufficient cutoff " + std::to_string(e.required) : std::string());
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  emit(r, o.format, out);
  if (r.error) {
    if (o.format == "json") err << "error: " << *r.error << "\n";
    return 2;
  }
  for (const auto& c : r.checks)
    if (!c.pass) return 1;
  return 0;
}

}  // namespace pseudo::cli

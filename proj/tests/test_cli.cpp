#include "oracle.hpp"
#include "printers.hpp"

#include "pseudo/cli.hpp"
#include "pseudo/format.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace pseudo;

namespace {

std::string data(const std::string& f) { return std::string(PSEUDO_TEST_DATA) + "/" + f; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Every json report has the four fixed keys, plus "error" only on errors.
void expect_well_formed(const std::string& text, bool error) {
  nlohmann::json j = nlohmann::json::parse(text);
  ASSERT_TRUE(j.is_object());
  EXPECT_TRUE(j.at("command").is_string());
  EXPECT_TRUE(j.at("instance").is_string());
  ASSERT_TRUE(j.at("checks").is_array());
  for (const auto& c : j.at("checks")) {
    EXPECT_TRUE(c.at("name").is_string());
    EXPECT_TRUE(c.at("pass").is_boolean());
    EXPECT_EQ(c.contains("witness"), !c.at("pass").get<bool>());
  }
  EXPECT_TRUE(j.at("artifacts").is_array());
  EXPECT_EQ(j.contains("error"), error);
}

std::map<std::string, bool> verdicts(const std::string& text) {
  std::map<std::string, bool> out;
  nlohmann::json j = nlohmann::json::parse(text);
  for (const auto& c : j.at("checks")) out[c.at("name").get<std::string>()] = c.at("pass").get<bool>();
  return out;
}

const char* kHead = "[lie_algebra]\ndim = 1\n[pseudoalgebra]\nrank = 2\n";

}  // namespace

TEST(Parse, SolvableFile) {
  DefinitionDocument doc = parse_definition(slurp(data("lpD.def")));
  const HopfPtr& H = doc.H;
  ASSERT_EQ(H->dim(), 1);
  PT want(H, 2);
  want.add_raw({H->gen(0), H->one()}, H->one(), 1);
  EXPECT_EQ(doc.table.entry(0, 1), want);
  // the missing bracket 2 1 comes from skew-symmetry
  EXPECT_EQ(doc.table.entry(1, 0), -want.swap12());
  EXPECT_TRUE(doc.table.entry(0, 0).is_zero());
  EXPECT_FALSE(doc.cobracket.has_value());
  EXPECT_EQ(doc.options.at("name"), "L_D");
}

TEST(Parse, CobracketAndRMatchCatalog) {
  DefinitionDocument doc = parse_definition(slurp(data("lp1.def")));
  CatalogEntry c = build_solvable(doc.H, doc.H->one(), doc.H->gen(0));
  EXPECT_TRUE(table_is_zero(table_difference(doc.table, c.table)));
  ASSERT_TRUE(doc.cobracket.has_value());
  EXPECT_EQ(*doc.cobracket, *c.cobracket);
  ASSERT_TRUE(doc.r.has_value());
  EXPECT_EQ(*doc.r, *c.r);
}

TEST(Parse, LieSectionOverTwoGenerators) {
  DefinitionDocument doc = parse_definition("[lie_algebra]\ndim = 2\nbracket 1 2 = d2\n[pseudoalgebra]\nrank = 1\n");
  EXPECT_EQ(doc.lie.c(0, 1, 1), 1);
  EXPECT_EQ(doc.lie.c(1, 0, 1), -1);
  EXPECT_FALSE(doc.H->is_abelian());
  EXPECT_TRUE(table_is_zero(doc.table));
}

TEST(Parse, Errors) {
  auto err = [](const std::string& text) -> std::pair<int, int> {
    try {
      parse_definition(text);
    } catch (const ParseError& e) {
      return {e.line, e.column};
    }
    return {-1, -1};
  };
  try {
    parse_definition(slurp(data("missing.def")));
    ADD_FAILURE() << "no error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("missing section"), std::string::npos) << e.what();
  }
  // positions: the label pair, the '-' of the exponent, the index after 'd'
  EXPECT_EQ(err(std::string(kHead) + "bracket 1 3 = 1 (1 | 1) 2\n"), std::make_pair(5, 9));
  EXPECT_EQ(err(std::string(kHead) + "bracket 1 2 = 1 (d1^-1 | 1) 2\n"), std::make_pair(5, 21));
  EXPECT_EQ(err(std::string(kHead) + "bracket 1 2 = 1 (d2 | 1) 2\n"), std::make_pair(5, 19));
  EXPECT_EQ(err(std::string(kHead) + "bracket 1 2 = 1 (1 | 1) 3\n"), std::make_pair(5, 25));
  EXPECT_EQ(err(std::string(kHead) + "bracket 1 2 = 1/0 (1 | 1) 2\n").first, 5);
  EXPECT_EQ(err("[lie_algebra]\ndim = 1\n[nonsense]\n").first, 3);
  EXPECT_EQ(err("dim = 1\n").first, 1);
  EXPECT_THROW(parse_definition(std::string(kHead) + "bracket 1 2 = 1 (1 | 1)\n"), ParseError);
}

TEST(Parse, ErrorMessagesCarryPosition) {
  try {
    parse_definition(std::string(kHead) + "bracket 1 2 = 1 (d1^-1 | 1) 2\n");
    FAIL();
  } catch (const ParseError& e) {
    std::string m = e.what();
    EXPECT_NE(m.find("exponent < 0"), std::string::npos) << m;
    EXPECT_NE(m.find('5'), std::string::npos) << m;
    EXPECT_NE(m.find("21"), std::string::npos) << m;
  }
}

TEST(Hexpr, DividedPowers) {
  auto H = HopfAlgebra::make(LieAlgebraPresentation::abelian(1));
  HopfElement D = H->gen(0);
  EXPECT_EQ(parse_hexpr(*H, "d1"), D);
  // D^2 = 2 d1^2
  EXPECT_EQ(parse_hexpr(*H, "2 * d1^2"), H->mul(D, D));
  EXPECT_EQ(parse_hexpr(*H, "3/2 * d1^2 + 1 - d1"), HopfElement::monomial({2}, Rational(3, 2)) + H->one() - D);
  EXPECT_EQ(parse_hexpr(*H, "1"), H->one());
  EXPECT_THROW(parse_hexpr(*H, "d1^-2"), ParseError);
  EXPECT_THROW(parse_hexpr(*H, "d3"), ParseError);
}

TEST(Hexpr, StringRoundTrip) {
  std::mt19937 rng(8);
  for (const auto& pres : {LieAlgebraPresentation::abelian(1), LieAlgebraPresentation::solvable2()}) {
    auto H = HopfAlgebra::make(pres);
    for (int trial = 0; trial < 30; ++trial) {
      HopfElement h = oracle::random_element(rng, H->dim(), 3, 3);
      if (h.is_zero()) continue;
      EXPECT_EQ(parse_hexpr(*H, hexpr_to_string(h)), h) << hexpr_to_string(h);
    }
  }
}

TEST(Serialize, CatalogRoundTrip) {
  for (const auto& c : standard_catalog()) {
    DefinitionDocument doc = to_document(c);
    std::string text = serialize_definition(doc);
    DefinitionDocument back = parse_definition(text);
    EXPECT_TRUE(same_definition(doc, back)) << c.name << "\n" << text;
    EXPECT_EQ(serialize_definition(back), text) << c.name;
  }
}

TEST(Serialize, DataFilesRoundTrip) {
  for (const char* f : {"lp1.def", "lpD.def", "zero.def", "broken.def"}) {
    DefinitionDocument doc = parse_definition(slurp(data(f)));
    EXPECT_TRUE(same_definition(doc, parse_definition(serialize_definition(doc)))) << f;
  }
}

TEST(Serialize, SameDefinitionDetectsDifferences) {
  DefinitionDocument a = parse_definition(slurp(data("lp1.def")));
  DefinitionDocument b = parse_definition(slurp(data("lpD.def")));
  EXPECT_FALSE(same_definition(a, b));
  DefinitionDocument c = a;
  c.r.reset();
  EXPECT_FALSE(same_definition(a, c));
}

TEST(Run, ExitCodes) {
  EXPECT_EQ(run({"check", data("lp1.def")}).code, 0);
  EXPECT_EQ(run({"check", data("lp1.def"), "--conformal", "--coalgebra", "--cocycle"}).code, 0);
  EXPECT_EQ(run({"check", data("broken.def")}).code, 1);
  EXPECT_EQ(run({"check", data("missing.def")}).code, 2);
  EXPECT_EQ(run({"check", data("does-not-exist.def")}).code, 2);
  EXPECT_EQ(run({"check", data("lpD.def"), "--coalgebra"}).code, 2);
  EXPECT_EQ(run({"check", data("lp1.def"), "--sample-degree", "3"}).code, 2);
  EXPECT_EQ(run({"check", data("lp1.def"), "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"frobnicate", data("lp1.def")}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"coboundary", data("lpD.def")}).code, 2);
  EXPECT_EQ(run({"annihilate", data("lp1.def"), "--pairs", "1-2"}).code, 2);
  EXPECT_EQ(run({"annihilate", data("lp1.def"), "--pairs", "1:3"}).code, 2);
}

TEST(Run, JsonAlwaysWellFormed) {
  const std::vector<std::pair<std::vector<std::string>, bool>> cases{
      {{"check", data("lp1.def")}, false},
      {{"check", data("broken.def")}, false},
      {{"check", data("missing.def")}, true},
      {{"check", data("lpD.def"), "--coalgebra"}, true},
      {{"coboundary", data("lp1.def")}, false},
      {{"double", data("zero.def")}, false},
      {{"annihilate", data("lpD.def"), "--cutoff", "2"}, false},
  };
  for (const auto& [args, error] : cases) {
    std::vector<std::string> a = args;
    a.insert(a.end(), {"--format", "json"});
    Invocation r = run(a);
    SCOPED_TRACE(args[0] + " " + args[1]);
    expect_well_formed(r.out, error);
    EXPECT_EQ(r.code == 2, error);
  }
}

TEST(Run, BrokenWitness) {
  Invocation r = run({"check", data("broken.def"), "--format", "json"});
  nlohmann::json j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["checks"].size(), 1u);
  EXPECT_EQ(j["checks"][0]["name"], "lie_axioms");
  EXPECT_FALSE(j["checks"][0]["pass"].get<bool>());
  EXPECT_EQ(j["checks"][0]["witness"].get<std::string>().rfind("skew 1 1", 0), 0u);
}

TEST(Run, CheckExampleAllGreen) {
  Invocation r = run({"check", data("lp1.def"), "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(verdicts(r.out), (std::map<std::string, bool>{{"lie_axioms", true}}));
}

TEST(Run, CoboundaryExampleMatchesStatedReport) {
  // stated report: invariance, cybe_mod and "delta equals [cobracket] section" all pass
  Invocation r = run({"coboundary", data("lp1.def"), "--format", "json"});
  auto v = verdicts(r.out);
  EXPECT_TRUE(v.at("invariance"));
  EXPECT_TRUE(v.at("cybe_mod"));
  EXPECT_TRUE(v.at("delta equals [cobracket] section"));
  EXPECT_EQ(r.code, 0);
}

TEST(Run, DoubleOfZeroBialgebra) {
  auto out = std::filesystem::temp_directory_path() / "pseudo_test_double_zero.def";
  Invocation r = run({"double", data("zero.def"), "-o", out.string(), "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(verdicts(r.out).at("quasitriangular"));
  DefinitionDocument d = parse_definition(slurp(out.string()));
  EXPECT_EQ(d.table.rank(), 4);
  EXPECT_TRUE(table_is_zero(d.table));
  ASSERT_TRUE(d.r.has_value());
  EXPECT_EQ(nlohmann::json::parse(r.out)["artifacts"][0], out.string());
  std::filesystem::remove(out);
}

TEST(Run, DualizeArtifact) {
  auto out = std::filesystem::temp_directory_path() / "pseudo_test_dualize.def";
  Invocation r = run({"dualize", data("lpD.def"), "-o", out.string()});
  EXPECT_EQ(r.code, 0);
  DefinitionDocument src = parse_definition(slurp(data("lpD.def")));
  DefinitionDocument d = parse_definition(slurp(out.string()));
  ASSERT_TRUE(d.cobracket.has_value());
  EXPECT_EQ(*d.cobracket, dualize_to_cobracket(src.table));
  EXPECT_EQ(d.options.at("name"), "L_D dual");
  std::filesystem::remove(out);
}

TEST(Run, AnnihilateSamples) {
  Invocation r = run({"annihilate", data("lp1.def"), "--cutoff", "3", "--pairs", "1:2"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS phi_homomorphism"), std::string::npos) << r.out;
}

TEST(Run, TextModeLists) {
  Invocation r = run({"check", data("broken.def")});
  EXPECT_EQ(r.out.rfind("check: broken\nFAIL lie_axioms: skew 1 1", 0), 0u) << r.out;
}

TEST(Golden, JsonReportsAreByteStable) {
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases{
      {{"check", data("lp1.def")}, "check_lp1.json"},
      {{"coboundary", data("lp1.def")}, "coboundary_lp1.json"},
      {{"double", data("zero.def")}, "double_zero.json"},
  };
  for (const auto& [args, golden] : cases) {
    std::vector<std::string> a = args;
    a.insert(a.end(), {"--format", "json"});
    std::string first = run(a).out;
    EXPECT_EQ(run(a).out, first) << golden;
    EXPECT_EQ(first, slurp(std::string(PSEUDO_TEST_GOLDEN) + "/" + golden)) << golden;
  }
}

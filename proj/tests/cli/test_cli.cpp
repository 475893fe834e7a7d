#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "superschur/cli/commands.hpp"

using namespace superschur;
using namespace superschur::cli;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "superschur");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "superschur_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

const std::vector<std::string> kGrid = {
    "k",          "c1",           "mat:2:(k)",     "mat:1|1:(k)",     "mat:2:(c1)",
    "gamma:2:(mat:2:(k))", "gamma:2:(mat:1:(c1))", "schur:2:2:(k)", "schur:1|1:2:(k)",
    "schur:2:2:(c1)", "wreath:3:(k)", "wreath:2:(c1)",
};

}  // namespace

TEST(Spec, ParsesEveryForm) {
  for (const auto& s : kGrid) EXPECT_EQ(parse_spec(s).to_string(), s);
  const auto m = parse_spec("mat:2|3:(c1)");
  EXPECT_EQ(m.kind, AlgebraSpec::Kind::Matrix);
  EXPECT_EQ(m.even, 2u);
  EXPECT_EQ(m.odd, 3u);
  EXPECT_EQ(m.inner->kind, AlgebraSpec::Kind::Clifford);
  EXPECT_EQ(parse_spec("schur:2|0:2:(k)").to_string(), "schur:2:2:(k)");
}

TEST(Spec, RejectsMalformed) {
  for (const char* bad : {"", "K", "k ", "mat:2(k)", "mat:0:(k)", "schur:0:1:(k)", "schur:0|0:1:(k)",
                          "schur:2:0:(k)", "wreath:0:(k)", "wreath:2:k", "gamma:2:(k", "mat:2:(k))",
                          "mat:99999999:(k)", "sym:2:(k)"})
    EXPECT_THROW(parse_spec(bad), std::invalid_argument) << bad;
}

TEST(Spec, DimensionsFromFormulas) {
  EXPECT_EQ(spec_dims(parse_spec("schur:2:2:(k)")).total(), 10);
  EXPECT_EQ(spec_dims(parse_spec("schur:2:2:(k)")).odd, 0);
  EXPECT_EQ(spec_dims(parse_spec("schur:2:2:(c1)")).total(), 32);
  EXPECT_EQ(spec_dims(parse_spec("wreath:2:(c1)")).total(), 8);
  EXPECT_EQ(spec_dims(parse_spec("schur:1|1:2:(k)")).total(), 8);
  const auto terms = gamma_breakdown(parse_spec("schur:2:2:(c1)"));
  ASSERT_EQ(terms.size(), 3u);
  EXPECT_EQ(terms[1].value(), 16);
}

TEST(Spec, FormulasMatchConstructions) {
  BuildOptions o;
  for (const auto& s : kGrid) {
    const auto spec = parse_spec(s);
    const auto a = build(spec, o);
    const auto dims = spec_dims(spec);
    EXPECT_EQ(Integer(a.carrier().even_dim()), dims.even) << s;
    EXPECT_EQ(Integer(a.carrier().odd_dim()), dims.odd) << s;
  }
}

TEST(Spec, BuildHonoursOptions) {
  BuildOptions o;
  o.clifford = salg::CliffordSign::Minus;
  EXPECT_EQ(build(parse_spec("c1"), o).product(1, 1), (coeff::SparseVector{{0, -1}}));
  o.ring = coeff::make_ring("Z/5");
  EXPECT_EQ(build(parse_spec("c1"), o).product(1, 1), (coeff::SparseVector{{0, 4}}));
  o.limits.max_algebra_dim = 31;
  EXPECT_THROW(build(parse_spec("schur:2:2:(c1)"), o), SizeLimitError);
}

TEST(Dump, RoundTripsExactly) {
  BuildOptions o;
  for (const auto& ring : {"Z", "Z/5"}) {
    o.ring = coeff::make_ring(ring);
    for (const auto& s : kGrid) {
      const auto a = build(parse_spec(s), o);
      const auto text = dump_text(a);
      const auto b = load_text(text);
      EXPECT_TRUE(a == b) << s;
      EXPECT_EQ(dump_text(b), text) << s;
    }
  }
}

TEST(Dump, CliffordTable) {
  const auto j = to_json(build(parse_spec("c1"), {}));
  EXPECT_EQ(j["basis"], Json::array({"1", "c"}));
  EXPECT_EQ(j["mult"].back(), Json::parse(R"([1,1,[[0,"1"]]])"));
  const auto m = to_json(build(parse_spec("mat:1|1:(k)"), {}));
  EXPECT_EQ(m["dim_even"], 2);
  EXPECT_EQ(m["dim_odd"], 2);
}

TEST(Dump, RejectsSchemaViolations) {
  const std::string good = dump_text(salg::clifford1(coeff::Ring::integers()));
  EXPECT_NO_THROW(load_text(good));
  EXPECT_THROW(load_text("{"), std::invalid_argument);
  EXPECT_THROW(load_text(R"({"ring":"Q","dim_even":1,"dim_odd":0,"basis":["1"],"unit":["1"],"mult":[]})"),
               std::invalid_argument);
  EXPECT_THROW(load_text(R"({"ring":"Z","dim_even":1,"dim_odd":0,"basis":["1","x"],"unit":["1"],"mult":[]})"),
               std::invalid_argument);
  EXPECT_THROW(load_text(R"({"ring":"Z","dim_even":1,"dim_odd":0,"basis":["1"],"unit":[1],"mult":[]})"),
               std::invalid_argument);
  EXPECT_THROW(load_text(R"({"ring":"Z","dim_even":1,"dim_odd":0,"basis":["1"],"unit":["1"],"mult":[[0,1,[]]]})"),
               std::invalid_argument);
  EXPECT_THROW(
      load_text(R"({"ring":"Z","dim_even":1,"dim_odd":0,"basis":["1"],"unit":["1"],"mult":[[0,0,[]],[0,0,[]]]})"),
      std::invalid_argument);
}

TEST(Run, DimsCommand) {
  const auto r = invoke({"dims", "schur:2:2:(k)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("total: 10\neven: 10\nodd: 0\n"), std::string::npos);
  const auto path = scratch("dims.json");
  EXPECT_EQ(invoke({"dims", "wreath:2:(c1)", "--out", path.string()}).code, 0);
  EXPECT_EQ(Json::parse(slurp(path))["total"], "8");
}

TEST(Run, TableIsDeterministicAndLoadable) {
  for (const auto& s : kGrid) {
    const auto a = scratch("a.json"), b = scratch("b.json"), c = scratch("c.json");
    ASSERT_EQ(invoke({"table", s, "--out", a.string()}).code, 0) << s;
    ASSERT_EQ(invoke({"table", s, "--out", b.string()}).code, 0) << s;
    EXPECT_EQ(slurp(a), slurp(b)) << s;
    ASSERT_EQ(invoke({"load", a.string(), "--out", c.string()}).code, 0) << s;
    EXPECT_EQ(slurp(a), slurp(c)) << s;
  }
}

TEST(Run, LoadCheckDetectsBrokenTable) {
  const auto path = scratch("broken.json");
  std::ofstream(path) << R"({"ring":"Z","dim_even":1,"dim_odd":0,"basis":["1"],"unit":["1"],"mult":[[0,0,[[0,"2"]]]]})";
  const auto r = invoke({"load", path.string(), "--check"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("axioms: fail"), std::string::npos);
}

TEST(Run, VerifySuites) {
  EXPECT_EQ(invoke({"verify", "axioms", "schur:2:2:(c1)"}).code, 0);
  EXPECT_EQ(invoke({"verify", "idempotents", "--base", "c1", "--n", "2", "--d", "2"}).code, 0);
  EXPECT_EQ(invoke({"verify", "surjectivity", "--base", "k", "--d", "2", "--middle", "2|2", "--source",
                    "1|1", "--target", "1|1", "--prime", "5"})
                .code,
            0);
  const auto deficit = invoke({"verify", "surjectivity", "--base", "k", "--d", "2", "--middle", "1",
                               "--source", "2", "--target", "2", "--prime", "5"});
  EXPECT_EQ(deficit.code, 1);
  EXPECT_NE(deficit.out.find("rank 9 of target dim 10"), std::string::npos);

  const auto ok = invoke({"verify", "schur-weyl", "--base", "k", "--n", "2", "--d", "2", "--prime", "5"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("commutant dim 2"), std::string::npos);
  const auto below = invoke({"verify", "schur-weyl", "--base", "k", "--n", "1", "--d", "2", "--prime", "5"});
  EXPECT_EQ(below.code, 1);
  EXPECT_NE(below.out.find("[fail] injective"), std::string::npos);
}

TEST(Run, VerifyReportJsonIsDeterministic) {
  const auto a = scratch("r1.json"), b = scratch("r2.json");
  const std::vector<std::string> args = {"verify", "schur-weyl", "--base", "c1", "--n", "2", "--d", "2",
                                         "--prime", "7", "--out"};
  auto first = args, second = args;
  first.push_back(a.string());
  second.push_back(b.string());
  EXPECT_EQ(invoke(first).code, 0);
  EXPECT_EQ(invoke(second).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_EQ(Json::parse(slurp(a))["passed"], true);
}

TEST(Run, ExitCodes) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"dims", "mat:(k)"}).code, 2);
  EXPECT_EQ(invoke({"table", "schur:3:3:(c1)", "--max-dim", "100"}).code, 2);
  EXPECT_EQ(invoke({"table", "k", "--ring", "Q"}).code, 2);
  EXPECT_EQ(invoke({"table", "c1", "--clifford-sign", "2"}).code, 2);
  EXPECT_EQ(invoke({"verify", "axioms"}).code, 2);
  EXPECT_EQ(invoke({"verify", "nonsense"}).code, 2);
  EXPECT_EQ(invoke({"verify", "schur-weyl", "--prime", "6"}).code, 2);
  EXPECT_EQ(invoke({"load", scratch("missing.json").string() + ".nope"}).code, 2);
}

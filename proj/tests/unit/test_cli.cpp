#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "douady/error.hpp"
#include "douady/goettsche.hpp"
#include "surface_config.hpp"

using namespace douady;
using douady::cli::kExitIdentityFailure;
using douady::cli::kExitOk;
using douady::cli::kExitUsage;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = douady::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) { return std::filesystem::path(DOUADY_TEST_TMP) / name; }

std::string write_file(const std::string& name, const std::string& text) {
  const auto p = scratch(name);
  std::ofstream(p) << text;
  return p.string();
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("golden: goettsche p2") {
  const auto r = run({"goettsche", "--surface", "p2", "--order", "2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out ==
        "n\tpoincare\n"
        "0\t1\n"
        "1\t1 + t^2 + t^4\n"
        "2\t1 + 2t^2 + 3t^4 + 2t^6 + t^8\n");
}

TEST_CASE("golden: euler k3") {
  const auto r = run({"euler", "--surface", "k3", "--order", "3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "n\teuler\n0\t1\n1\t24\n2\t324\n3\t3200\n");
  const auto e = run({"euler", "--e", "-2", "--order", "4"});
  CHECK(e.out == "n\teuler\n0\t1\n1\t-2\n2\t-1\n3\t2\n4\t1\n");
}

TEST_CASE("golden: strata") {
  const auto r = run({"strata", "--n", "3", "--h", "2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "partition\n(3)\n");
  const auto t = run({"strata", "--n", "3"});
  CHECK(t.out ==
        "partition\tstalks\tlocal_check\n"
        "(3)\t1,1,1\ttrue\n"
        "(2,1)\t1,1,0\ttrue\n"
        "(1,1,1)\t1,0,0\ttrue\n");
}

TEST_CASE("golden: other subcommands") {
  CHECK(run({"sym", "--surface", "p2", "--order", "2"}).out ==
        "m\tpoincare\n0\t1\n1\t1 + t^2 + t^4\n2\t1 + t^2 + 2t^4 + t^6 + t^8\n");
  CHECK(run({"punctual", "--order", "4"}).out ==
        "n\tpoincare\ttop_betti\tvanishes_above\n"
        "1\t1\t1\ttrue\n2\t1 + t^2\t1\ttrue\n3\t1 + t^2 + t^4\t1\ttrue\n4\t1 + t^2 + 2t^4 + t^6\t1\ttrue\n");
  CHECK(run({"hodge", "--surface", "p2", "--order", "2"}).out ==
        "n\thodge\n0\t1\n1\t1 + xy + x^2y^2\n2\t1 + 2xy + 3x^2y^2 + 2x^3y^3 + x^4y^4\n");
  CHECK(run({"fock", "--surface", "delta", "--n", "3"}).out ==
        "monomial\tlevel\tdegree\np[1,0]^3\t3\t0\np[1,0] p[2,0]\t3\t2\np[3,0]\t3\t4\n");
  CHECK(run({"ktheory", "--surface", "p2", "--order", "2"}).out == "n\tdim_k\ttotal_betti\n0\t1\t1\n1\t3\t3\n2\t9\t9\n");
  CHECK(run({"adhm", "--n", "2"}).out ==
        "partition\tcommuting\tstable\tsupport\tin_bidisk\tstaircase\n"
        "(2)\ttrue\ttrue\t2*(0,0)\ttrue\t(2)\n"
        "(1,1)\ttrue\ttrue\t2*(0,0)\ttrue\t(1,1)\n");
}

TEST_CASE("fock character rows") {
  const auto r = run({"fock", "--surface", "abelian", "--order", "2"});
  CHECK(r.code == kExitOk);
  std::istringstream lines(r.out);
  std::string header, row0, row1, row2;
  std::getline(lines, header);
  std::getline(lines, row0);
  std::getline(lines, row1);
  std::getline(lines, row2);
  CHECK(row2.substr(0, 2) == "2\t");
  CHECK(row2.substr(row2.rfind('\t') + 1) == "144");
}

TEST_CASE("commutators and selfcheck pass") {
  const auto c = run({"commutators", "--surface", "abelian", "--order", "3", "--states", "5"});
  CHECK(c.code == kExitOk);
  CHECK(c.out.find("\t0\n") != std::string::npos);
  const auto s = run({"selfcheck", "--order", "4"});
  CHECK(s.code == kExitOk);
  CHECK(s.out.rfind("identity\tscope\tstatus\n", 0) == 0);
  CHECK(s.out.find("FAIL") == std::string::npos);
  CHECK(s.err.empty());
}

TEST_CASE("identity failures exit 1 with both sides") {
  std::vector<douady::cli::Check> checks{{"ok_identity", "n<=2", true, ""},
                                         {"broken_identity", "n<=2", false, "n=2: lhs=1 + t^2 rhs=1"}};
  std::string table;
  std::ostringstream err;
  CHECK(douady::cli::report_checks(checks, table, err) == kExitIdentityFailure);
  CHECK(table == "identity\tscope\tstatus\nok_identity\tn<=2\tpass\nbroken_identity\tn<=2\tFAIL\n");
  CHECK(err.str().find("broken_identity") != std::string::npos);
  CHECK(err.str().find("lhs=1 + t^2 rhs=1") != std::string::npos);
  checks.pop_back();
  std::ostringstream quiet;
  CHECK(douady::cli::report_checks(checks, table, quiet) == kExitOk);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  auto r = run({"goettsche"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("--surface") != std::string::npos);
  r = run({"goettsche", "--surface", "enriques"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("--surface") != std::string::npos);
  CHECK(run({"goettsche", "--surface", "p2", "--format", "csv"}).code == kExitUsage);
  CHECK(run({"goettsche", "--surface", "p2", "--order", "-1"}).code == kExitUsage);
  CHECK(run({"goettsche", "--surface", "p2", "--order", "two"}).code == kExitUsage);
  CHECK(run({"hodge", "--surface", write_file("plain.cfg", "betti=1,0,1,0,1\n")}).code == kExitUsage);
  CHECK(run({"strata"}).code == kExitUsage);
  CHECK(run({"adhm", "--triple", scratch("missing.triple").string()}).code == kExitUsage);
  CHECK(run({"goettsche", "--surface", "p2", "--output", "/nonexistent/dir/out.tsv"}).code == kExitUsage);
}

TEST_CASE("help exits 0") {
  const auto r = run({"--help"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("goettsche") != std::string::npos);
  CHECK(run({"euler", "--help"}).code == kExitOk);
}

TEST_CASE("surface config files") {
  const auto cfg = cli::parse_surface_config(
      "# quadric\nname=quadric\nbetti=1,0,2,0,1\neuler=4\nhodge=0,0,1, 1,1,2, 2,2,1\n\n");
  CHECK(cfg.name == "quadric");
  CHECK(cfg.betti == BettiVector{1, 0, 2, 0, 1});
  CHECK(cfg.euler == 4);
  REQUIRE(cfg.hodge.has_value());
  CHECK(cfg.hodge->size() == 3);
  const auto model = cli::to_model(cfg);
  CHECK(model.betti_c() == model.betti());
  CHECK(model.has_hodge());
  CHECK(poincare_hilbert_product(model, 4) == poincare_hilbert_product(presets::p1xp1(), 4));

  const auto path = write_file("quadric.cfg", "name=quadric\nbetti=1,0,2,0,1\nhodge=0,0,1,1,1,2,2,2,1\n");
  const auto from_file = run({"hodge", "--surface", path, "--order", "3"});
  const auto from_preset = run({"hodge", "--surface", "p1xp1", "--order", "3"});
  CHECK(from_file.code == kExitOk);
  CHECK(from_file.out == from_preset.out);

  const auto open = write_file("open.cfg", "name=open\nbetti=1,0,0,0,0\nbetti_c=0,0,0,0,1\n");
  CHECK(run({"goettsche", "--surface", open, "--order", "4"}).out ==
        run({"goettsche", "--surface", "delta", "--order", "4"}).out);
}

TEST_CASE("bad surface config files") {
  auto code_of = [](const std::string& text) {
    try {
      cli::to_model(cli::parse_surface_config(text));
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(code_of("betti=1,0,1,0,1\neuler=4\n").find("euler") != std::string::npos);
  CHECK(code_of("betti=1,0,1,0\n").find("betti") != std::string::npos);
  CHECK(code_of("betti=1,0,x,0,1\n").find("betti") != std::string::npos);
  CHECK(code_of("name=q\n").find("betti") != std::string::npos);
  CHECK(code_of("betti=1,0,1,0,1\ncolour=red\n").find("colour") != std::string::npos);
  CHECK(code_of("betti=1,0,1,0,1\nhodge=0,0,1,1,1\n").find("hodge") != std::string::npos);
  CHECK(code_of("betti=1,0,1,0,1\nhodge=0,0,1,1,1,2,2,2,1\n").find("InvalidSurface") != std::string::npos);
  CHECK(code_of("betti=1,-1,0,0,1\n").find("betti") != std::string::npos);
  CHECK(code_of("just some words\n").find("line 1") != std::string::npos);

  const auto path = write_file("bad.cfg", "betti=1,0,1,0,1\neuler=7\n");
  const auto r = run({"goettsche", "--surface", path});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("euler") != std::string::npos);
}

TEST_CASE("adhm triple files") {
  const auto path = write_file("diag.triple", "# diagonal\n2\n1/2 0\n0 1/3i\n0 0\n0 -1/4\n1 1\n");
  const auto r = run({"adhm", "--triple", path});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("commuting\ttrue\n") != std::string::npos);
  CHECK(r.out.find("stable\ttrue\n") != std::string::npos);
  CHECK(r.out.find("support\t(1/3i,-1/4) + (1/2,0)\n") != std::string::npos);
  CHECK(r.out.find("in_bidisk\ttrue\n") != std::string::npos);
  CHECK(r.out.find("trace A^1 B^0\t1/2+1/3i\n") != std::string::npos);

  const auto irr = write_file("irr.triple", "2\n0 2\n1 0\n0 0\n0 0\n1 0\n");
  const auto ri = run({"adhm", "--triple", irr});
  CHECK(ri.code == kExitOk);
  CHECK(ri.out.find("not split") != std::string::npos);

  const auto nc = write_file("nc.triple", "2\n0 1\n0 0\n0 0\n1 0\n1 0\n");
  const auto rn = run({"adhm", "--triple", nc});
  CHECK(rn.code == kExitOk);
  CHECK(rn.out.find("commuting\tfalse\n") != std::string::npos);

  const auto bad = write_file("bad.triple", "2\n1 2 3\n");
  CHECK(run({"adhm", "--triple", bad}).code == kExitUsage);
}

TEST_CASE("output is byte-deterministic and --output writes the same bytes") {
  const std::vector<std::vector<std::string>> cmds{
      {"goettsche", "--surface", "abelian", "--order", "5"},
      {"hodge", "--surface", "k3", "--order", "3"},
      {"fock", "--surface", "abelian", "--n", "2"},
      {"commutators", "--surface", "k3", "--order", "3", "--states", "3", "--seed", "9"},
      {"selfcheck", "--surface", "p2", "--order", "3"},
  };
  for (const auto& cmd : cmds) {
    const auto a = run(cmd);
    const auto b = run(cmd);
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    auto with_output = cmd;
    const auto path = scratch("out_" + cmd[0] + ".tsv");
    with_output.push_back("--output");
    with_output.push_back(path.string());
    const auto c = run(with_output);
    CHECK(c.code == kExitOk);
    CHECK(c.out.empty());
    CHECK(slurp(path) == a.out);
  }
}

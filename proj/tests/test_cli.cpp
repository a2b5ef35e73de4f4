#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "pbz/cli.hpp"
#include "pbz/constructors.hpp"
#include "pbz/facts.hpp"
#include "pbz/format.hpp"

using namespace pbz;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("check reports holds or the first counterexample") {
  const auto ok = run_cli({"check", "F8", "SDM"});
  CHECK(ok.code == 0);
  CHECK(ok.out == "holds\n");

  const auto bad = run_cli({"check", "D5", "SK"});
  CHECK(bad.code == 1);
  CHECK(bad.out.rfind("counterexample: x=", 0) == 0);

  const auto text = run_cli({"check", "D3", "x", "|", "y", "=", "y", "|", "x"});
  CHECK(text.code == 0);
  CHECK(run_cli({"check", "F8", "x <= y' , x' & y' <= x & y => x = y'"}).code == 1);
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"check", "F8"}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  const auto unknown = run_cli({"show", "nope"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("nope") != std::string::npos);
  CHECK(run_cli({"check", "B6", "SDM"}).code == 2);
  CHECK(run_cli({"check", "F8", "x &"}).code == 2);
  CHECK(run_cli({"classify-modal", "D3"}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("catalog and show") {
  const auto c = run_cli({"catalog"});
  CHECK(c.code == 0);
  for (const auto& name : catalog_names()) {
    CHECK(c.out.find(name) != std::string::npos);
  }
  const auto s = run_cli({"show", "F8"});
  CHECK(s.code == 0);
  CHECK(parse_algebra(s.out) == catalog("F8"));
}

TEST_CASE("algebra files are accepted wherever a name is") {
  const auto path =
      (std::filesystem::temp_directory_path() / "pbz_test_cli.alg").string();
  save_algebra(catalog("D4"), path);
  CHECK(resolve_algebra(path) == catalog("D4"));
  CHECK(run_cli({"check", path, "SK"}).code == 1);
  CHECK(run_cli({"iso", path, "D4"}).code == 0);
  std::remove(path.c_str());
  CHECK_THROWS_AS(resolve_algebra(path), UnknownName);
}

TEST_CASE("embeddings and isomorphisms") {
  const auto e = run_cli({"embed", "B6", "F8", "--sig", "I"});
  CHECK(e.code == 0);
  CHECK(e.out.rfind("embedding: ", 0) == 0);
  const auto none = run_cli({"embed", "B6", "D5", "--sig", "I"});
  CHECK(none.code == 1);
  CHECK(run_cli({"iso", "D3", "D4"}).code == 1);
  CHECK(run_cli({"embed", "D3", "H"}).code == 0);
}

TEST_CASE("congruences and quotients") {
  const auto c = run_cli({"con", "D3"});
  CHECK(c.code == 0);
  CHECK(c.out.find("congruences: 2") != std::string::npos);
  CHECK(c.out.find("subdirectly irreducible: yes") != std::string::npos);
  const auto q = run_cli({"quotient", "D4", "0,a;a';1"});
  CHECK(q.code == 1);
  const auto q2 = run_cli({"quotient", "D5", "0;a,b,a';1"});
  CHECK(q2.code == 0);
  CHECK(q2.out.find("elements") != std::string::npos);
}

TEST_CASE("constructors and translations") {
  const auto p = run_cli({"product", "D2", "D3"});
  CHECK(p.code == 0);
  CHECK(parse_algebra(p.out).size() == 6);
  CHECK(run_cli({"osum", "M3", "M3"}).code == 0);
  CHECK(parse_algebra(run_cli({"symext", "D2", "M3-PK"}).out).size() == 7);
  const auto t = run_cli({"translate", "menarini-8", "--to-bz"});
  CHECK(t.code == 0);
  CHECK(parse_algebra(t.out).signature() == Signature::BZ);
  CHECK(run_cli({"translate", "menarini-4", "--to-bz"}).code == 1);
  CHECK(run_cli({"translate", "F8", "--to-modal"}).code == 1);
}

TEST_CASE("classification commands") {
  const auto c = run_cli({"classify", "F8"});
  CHECK(c.code == 0);
  CHECK(c.out.find("antiortholattice") != std::string::npos);
  CHECK(run_cli({"classify-stone", "BZ4"}).code == 0);
  CHECK(run_cli({"classify-modal", "menarini-3"}).code == 0);
  CHECK(run_cli({"discriminator", "D3"}).code == 0);
  CHECK(run_cli({"discriminator", "D4"}).code == 1);
}

TEST_CASE("facts") {
  CHECK(run_cli({"verify-facts", "--fact", "F8-SDM"}).code == 0);
  CHECK(run_cli({"verify-facts", "--fact", "no-such-fact"}).code == 2);
  std::size_t ids = 0;
  for (const auto& f : facts()) {
    ++ids;
    CHECK_FALSE(f.claim.empty());
  }
  CHECK(ids >= 50);
  std::ostringstream out;
  report_facts(out, "D3-SDM-SK");
  CHECK(out.str().rfind("FACT D3-SDM-SK PASS", 0) == 0);
}

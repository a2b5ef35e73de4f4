#include "doctest.h"

#include "oracles.hpp"
#include "pbz/classify.hpp"
#include "pbz/constructors.hpp"

using namespace pbz;

namespace {

bool implies(const ClassificationReport& r, const char* a, const char* b) {
  return !r.holds(a) || r.holds(b);
}

}  // namespace

TEST_CASE("F8 is an antiortholattice") {
  const auto& f8 = catalog("F8");
  const auto r = classify(f8);
  CHECK(r.holds("PBZ*"));
  CHECK(r.holds("antiortholattice"));
  CHECK(r.holds("paraorthomodular"));
  CHECK(r.holds("pseudo-Kleene"));
  CHECK(r.verdict("distributive") == Verdict::Fails);
  CHECK(r.verdict("ortholattice") == Verdict::Fails);
  CHECK(sharp_elements(f8) == ElementSet{f8.bottom(), f8.top()});
  CHECK(has_trivial_brouwer(f8));
}

TEST_CASE("verdicts follow the signature") {
  const auto r = classify(catalog("M3"));
  CHECK(r.holds("lattice"));
  CHECK(r.holds("modular"));
  CHECK(r.verdict("distributive") == Verdict::Fails);
  CHECK(r.verdict("BI-lattice") == Verdict::NotApplicable);
  CHECK(r.verdict("PBZ*") == Verdict::NotApplicable);
  CHECK_THROWS_AS(r.get("no-such-class"), UnknownName);

  const auto b6 = classify(catalog("B6"));
  CHECK(b6.holds("BI-lattice"));
  CHECK(b6.verdict("BZ-lattice") == Verdict::NotApplicable);
}

TEST_CASE("every failing verdict carries a reproducing witness") {
  for (const auto& e : catalog_entries()) {
    INFO(e.name);
    for (const auto& c : classify(e.algebra).classes) {
      CHECK((c.verdict == Verdict::Fails) == c.witness.has_value());
      if (c.witness) CHECK(c.witness->reproduces(e.algebra));
    }
  }
}

TEST_CASE("class inclusions hold across the catalog") {
  for (const auto& e : catalog_entries()) {
    INFO(e.name);
    const auto r = classify(e.algebra);
    CHECK(implies(r, "distributive", "modular"));
    CHECK(implies(r, "Kleene", "De Morgan"));
    CHECK(implies(r, "Kleene", "pseudo-Kleene"));
    CHECK(implies(r, "orthomodular", "ortholattice"));
    CHECK(implies(r, "orthomodular", "paraorthomodular"));
    CHECK(implies(r, "ortholattice", "pseudo-Kleene"));
    CHECK(implies(r, "antiortholattice", "PBZ*"));
    CHECK(implies(r, "PBZ*", "star"));
    CHECK(implies(r, "PBZ*", "paraorthomodular"));
    CHECK(implies(r, "SDM", "star"));
  }
}

TEST_CASE("conditions agree with their equational forms") {
  const std::pair<const char*, const char*> pairs[] = {
      {"DIST", "DIST"}, {"MODULAR", "MODULAR"}, {"KLEENE", "KLEENE"},
      {"OM", "OM"},     {"PARA", "PARA"},       {"STAR", "star"},
      {"SDM", "SDM"},   {"QS2", "QS2"},         {"QS3", "QS3"},
      {"QS4", "QS4"},   {"QS5", "QS5"}};
  for (const auto& e : catalog_entries()) {
    for (const auto& [cond, law] : pairs) {
      const Condition& c = condition(cond);
      if (!c.applicable(e.algebra)) continue;
      if (!applicable(e.algebra, named_equation(law))) continue;
      INFO(e.name << " " << cond);
      CHECK(!first_failure(e.algebra, c).has_value() ==
            oracle::holds(e.algebra, law));
    }
  }
  CHECK_THROWS_AS(condition("NOPE"), UnknownName);
}

TEST_CASE("antiortholattices are the PBZ*-lattices with the trivial Brouwer complement") {
  for (const auto& e : catalog_entries()) {
    const auto& a = e.algebra;
    if (a.signature() != Signature::BZ) continue;
    const auto r = classify(a);
    if (!r.holds("PBZ*")) continue;
    INFO(e.name);
    CHECK(r.holds("antiortholattice") == has_trivial_brouwer(a));
  }
}

TEST_CASE("sharp and dense elements") {
  const auto& mo2 = catalog("MO2");
  CHECK(sharp_elements(mo2).size() == mo2.size());
  CHECK(dense_elements(mo2) == ElementSet{mo2.top()});
  const auto& d4 = catalog("D4");
  CHECK(dense_elements(d4).size() == 3);
  CHECK_THROWS_AS(dense_elements(catalog("B6")), SignatureMismatch);
  CHECK_THROWS_AS(sharp_elements(catalog("M3")), SignatureMismatch);
}

TEST_CASE("trivial Brouwer extension") {
  const auto e = trivial_brouwer_extension(catalog("D4").reduct(Signature::BI));
  CHECK(e.same_structure(catalog("D4")));
  CHECK(trivial_brouwer_table(e) == e.table(UnaryOp::Brouwer));
  CHECK_THROWS_AS(trivial_brouwer_extension(catalog("D4")), SignatureMismatch);
  // MO2 has sharp atoms.
  CHECK_THROWS_AS(trivial_brouwer_extension(catalog("MO2").reduct(Signature::BI)),
                  PreconditionFailed);
}

TEST_CASE("quasi-Stone failures and the Boolean kernel") {
  const auto& mo2 = catalog("MO2");
  const auto w = quasi_stone_failure(mo2);
  REQUIRE(w.has_value());
  CHECK(w->condition == "DIST");
  CHECK_THROWS_AS(boolean_kernel(mo2), NotQuasiStone);
  const auto& bz4 = catalog("BZ4");
  CHECK_FALSE(quasi_stone_failure(bz4).has_value());
  CHECK(boolean_kernel(bz4) == ElementSet{bz4.bottom(), bz4.top()});
}

TEST_CASE("witnesses are the first failure in lexicographic order") {
  const auto& d5 = catalog("D5");
  const auto w = first_failure(catalog("M3"), condition("DIST"));
  REQUIRE(w.has_value());
  std::optional<std::vector<Element>> naive;
  oracle::assignments(5, 3, [&](const std::vector<Element>& v) {
    if (condition("DIST").holds(catalog("M3"), v)) return true;
    naive = v;
    return false;
  });
  CHECK(w->assignment == *naive);
  CHECK(describe(catalog("M3"), *w).find("x=") == 0);
  CHECK_FALSE(first_failure(d5, condition("DIST")).has_value());
}

#include "doctest.h"

#include "oracles.hpp"
#include "pbz/classify.hpp"
#include "pbz/constructors.hpp"
#include "pbz/equivalences.hpp"

using namespace pbz;

namespace {

const char* const kModalClasses[] = {
    "diamond-DeMorgan",   "topological-quasi-Boolean",
    "classical-diamond-DeMorgan", "monadic-DeMorgan",
    "weak-Lukasiewicz",   "Lukasiewicz",
    "three-valued-Lukasiewicz",   "tetravalent-modal",
    "involutive-Stone"};

// Expected memberships of menarini-1..8, one row per algebra, columns in
// kModalClasses order.
const bool kMenarini[8][9] = {
    {1, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 1, 0, 0, 0, 0, 0, 0},
    {1, 1, 1, 1, 0, 0, 0, 1, 0},
    {1, 1, 1, 1, 0, 0, 0, 0, 0},
    {1, 1, 1, 1, 0, 0, 0, 0, 1},
    {1, 1, 1, 1, 1, 0, 0, 0, 0},
    {1, 1, 1, 1, 1, 1, 0, 0, 1},
};

std::string label(const FiniteAlgebra& a, Element x) { return a.label(x); }

}  // namespace

TEST_CASE("Stone classes of small BZ-algebras") {
  for (const char* name : {"D2", "D3", "D4", "D5"}) {
    const auto r = classify_stone(catalog(name));
    INFO(name);
    for (const auto& c : r.classes) CHECK(c.verdict == Verdict::Holds);
  }
  const auto bz4 = classify_stone(catalog("BZ4"));
  CHECK(bz4.holds("Kleene-quasi-Stone"));
  CHECK_FALSE(bz4.holds("Stone"));
  CHECK(bz4.get("Stone").witness->condition == "SDM");
  const auto mo2 = classify_stone(catalog("MO2"));
  CHECK(mo2.get("quasi-Stone").witness->condition == "DIST");
  CHECK_THROWS_AS(classify_stone(catalog("B6")), SignatureMismatch);
}

TEST_CASE("Stone class inclusions") {
  for (const auto& e : catalog_entries()) {
    if (e.algebra.signature() != Signature::BZ) continue;
    const auto r = classify_stone(e.algebra);
    INFO(e.name);
    CHECK((!r.holds("Stone") || r.holds("quasi-Stone")));
    CHECK((!r.holds("Kleene-Stone") || r.holds("Stone")));
    CHECK((!r.holds("Kleene-Stone") || r.holds("Kleene-quasi-Stone")));
    CHECK((!r.holds("Kleene-quasi-Stone") || r.holds("quasi-Stone-DeMorgan")));
    CHECK((!r.holds("quasi-Stone-DeMorgan") || r.holds("quasi-Stone")));
  }
}

TEST_CASE("Kleene-Stone algebras are the distributive PBZ*-lattices with SDM") {
  for (const auto& e : catalog_entries()) {
    const auto& a = e.algebra;
    if (a.signature() != Signature::BZ) continue;
    INFO(e.name);
    const bool ks = classify_stone(a).holds("Kleene-Stone");
    const bool pbz = classify(a).holds("PBZ*") && oracle::holds(a, "DIST") &&
                     oracle::holds(a, "SDM");
    CHECK(ks == pbz);
  }
}

TEST_CASE("derived quasi-Stone laws hold on every quasi-Stone catalog member") {
  for (const auto& e : catalog_entries()) {
    const auto& a = e.algebra;
    if (a.signature() != Signature::BZ) continue;
    const auto r = classify_stone(a);
    if (!r.holds("quasi-Stone")) continue;
    INFO(e.name);
    for (const char* law : {"QS6", "QS7", "QS8", "QS9a", "QS9b"}) {
      CHECK(oracle::holds(a, law));
    }
    if (r.holds("quasi-Stone-DeMorgan")) CHECK(oracle::holds(a, "MOLA"));
    if (r.holds("Stone")) {
      CHECK(oracle::holds(a, "S1a"));
      CHECK(oracle::holds(a, "S1b"));
    }
  }
}

TEST_CASE("modal classes of menarini-1..8") {
  for (int i = 0; i < 8; ++i) {
    const auto& m = catalog("menarini-" + std::to_string(i + 1));
    const auto r = classify_modal(m);
    INFO(m.name());
    CHECK(r.classes.size() == 9);
    for (int j = 0; j < 9; ++j) {
      INFO(kModalClasses[j]);
      CHECK(r.holds(kModalClasses[j]) == kMenarini[i][j]);
      const auto& c = r.get(kModalClasses[j]);
      CHECK(c.witness.has_value() == !c.holds);
    }
    CHECK(r.respects_inclusions());
  }
}

TEST_CASE("modal witnesses evaluate as reported") {
  SUBCASE("menarini-3: box dia a = 0 while dia a = a") {
    const auto& m = catalog("menarini-3");
    const auto w = classify_modal(m).get("monadic-DeMorgan").witness;
    REQUIRE(w);
    CHECK(w->law == "M6");
    const Element a = m.element("a");
    const Element box_dia = m.kleene(m.diamond(m.kleene(m.diamond(a))));
    CHECK(box_dia == m.bottom());
    CHECK(m.diamond(a) == a);
    CHECK(describe(m, *w) == "M6 fails at x=a: a != 0");
  }
  SUBCASE("menarini-5: dia a & a' = a' while a & a' = 0") {
    const auto& m = catalog("menarini-5");
    const auto w = classify_modal(m).get("tetravalent-modal").witness;
    REQUIRE(w);
    CHECK(w->law == "M10");
    const Element a = m.element("a");
    CHECK(m.meet(m.diamond(a), m.kleene(a)) == m.kleene(a));
    CHECK(m.meet(a, m.kleene(a)) == m.bottom());
    CHECK(label(m, w->counterexample.lhs) == "0");
    CHECK(label(m, w->counterexample.rhs) == "a'");
  }
}

TEST_CASE("modal laws on the catalog") {
  for (const auto& e : catalog_entries()) {
    if (e.algebra.signature() != Signature::Modal) continue;
    const auto r = classify_modal(e.algebra);
    INFO(e.name);
    if (r.holds("weak-Lukasiewicz")) CHECK(oracle::holds(e.algebra, "M6"));
    if (r.holds("classical-diamond-DeMorgan")) CHECK(oracle::holds(e.algebra, "M8"));
  }
  CHECK_THROWS_AS(classify_modal(catalog("D3")), SignatureMismatch);
}

TEST_CASE("classify_modal rejects a non-distributive lattice") {
  const auto bi = catalog("M3+M3").reduct(Signature::BI);
  UnaryTable dia(bi.size(), bi.top());
  dia[bi.bottom()] = bi.bottom();
  const auto m = bi.with_unary(UnaryOp::Diamond, dia, Signature::Modal);
  CHECK_THROWS_AS(classify_modal(m), NotDeMorgan);
}

TEST_CASE("translations between weak Lukasiewicz algebras and distributive PBZ*-lattices") {
  for (const auto& e : catalog_entries()) {
    const auto& a = e.algebra;
    INFO(e.name);
    if (a.signature() == Signature::Modal &&
        classify_modal(a).holds("weak-Lukasiewicz")) {
      const auto b = bz_of_modal(a);
      CHECK(b.signature() == Signature::BZ);
      CHECK(classify(b).holds("PBZ*"));
      CHECK(modal_of_bz(b).same_structure(a));
      for (Element x = 0; x < a.size(); ++x) {
        CHECK(b.brouwer(x) == a.kleene(a.diamond(x)));
      }
    }
    if (a.signature() == Signature::BZ && classify(a).holds("PBZ*") &&
        oracle::holds(a, "DIST")) {
      const auto m = modal_of_bz(a);
      CHECK(classify_modal(m).holds("weak-Lukasiewicz"));
      CHECK(bz_of_modal(m).same_structure(a));
    }
  }
  CHECK_THROWS_AS(bz_of_modal(catalog("menarini-4")), NotWeakLukasiewicz);
  CHECK_THROWS_AS(modal_of_bz(catalog("F8")), NotDistributivePBZ);
  CHECK_THROWS_AS(modal_of_bz(catalog("BZ4")), NotDistributivePBZ);
}

TEST_CASE("the discriminator on D3") {
  const auto& d3 = catalog("D3");
  const auto r = verify_discriminator(d3);
  CHECK(r.size == 3);
  CHECK(r.e_separates);
  CHECK(r.realises);
  CHECK_FALSE(r.first_failure);
  for (Element x = 0; x < 3; ++x) {
    for (Element y = 0; y < 3; ++y) {
      CHECK(r.e[x * 3 + y] == (x == y ? d3.bottom() : d3.top()));
      CHECK(oracle::eval(d3, discriminator_e(), {x, y}) == r.e[x * 3 + y]);
      for (Element z = 0; z < 3; ++z) {
        CHECK(r.t[(x * 3 + y) * 3 + z] == (x == y ? z : x));
      }
    }
  }
}

TEST_CASE("the discriminator fails on D4 and holds on D2") {
  const auto r = verify_discriminator(catalog("D4"));
  CHECK_FALSE(r.realises);
  REQUIRE(r.first_failure);
  const auto [x, y, z] = *r.first_failure;
  CHECK(r.t[(x * 4 + y) * 4 + z] != (x == y ? z : x));
  CHECK(verify_discriminator(catalog("D2")).realises);
  CHECK_THROWS_AS(verify_discriminator(catalog("menarini-2")), SignatureMismatch);
}

TEST_CASE("truncated sum on D3 is min(1, x + y)") {
  const auto& d3 = catalog("D3");
  // 0, a, 1 read as 0, 1/2, 1; values in halves.
  const int halves[] = {0, 1, 2};
  const auto table = truncated_sum_table(d3);
  REQUIRE(table.size() == 9);
  for (Element x = 0; x < 3; ++x) {
    for (Element y = 0; y < 3; ++y) {
      CHECK(halves[table[x * 3 + y]] == std::min(2, halves[x] + halves[y]));
    }
  }
  CHECK_THROWS_AS(truncated_sum_table(catalog("B6")), SignatureMismatch);
}

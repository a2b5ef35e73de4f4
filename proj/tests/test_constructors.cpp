#include "doctest.h"

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "pbz/analysis.hpp"
#include "pbz/classify.hpp"
#include "pbz/constructors.hpp"

using namespace pbz;

TEST_CASE("chains") {
  const auto c5 = chain(5);
  CHECK(c5.labels() == std::vector<std::string>{"0", "a", "b", "a'", "1"});
  const auto c6 = chain(6);
  CHECK(c6.labels() ==
        std::vector<std::string>{"0", "a", "b", "b'", "a'", "1"});
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto c = chain(n);
    INFO(n);
    CHECK(c.size() == n);
    for (Element x = 0; x < n; ++x) {
      CHECK(c.kleene(x) == n - 1 - x);
      for (Element y = 0; y < n; ++y) CHECK(c.leq(x, y) == (x <= y));
    }
    if (n >= 2) CHECK(has_trivial_brouwer(c));
  }
  CHECK(chain(3).same_structure(catalog("D3")));
}

TEST_CASE("dual reverses the order") {
  const auto& b6 = catalog("B6");
  const auto d = dual(b6);
  CHECK(d.signature() == Signature::Lattice);
  for (Element x = 0; x < b6.size(); ++x) {
    for (Element y = 0; y < b6.size(); ++y) CHECK(d.leq(x, y) == b6.leq(y, x));
  }
  CHECK(dual(d).same_structure(b6.reduct(Signature::Lattice)));
}

TEST_CASE("ordinal sums glue top to bottom") {
  const auto& m3 = catalog("M3");
  const auto s = ordinal_sum(m3, m3);
  CHECK(s.size() == 9);
  CHECK(s.label(0) == "L:0");
  CHECK(s.find("M:0").has_value());
  CHECK_FALSE(s.find("L:1").has_value());
  const Element mid = s.element("M:0");
  for (Element x = 0; x < s.size(); ++x) {
    const bool lower = s.label(x).rfind("L:", 0) == 0;
    CHECK((lower ? s.leq(x, mid) : s.leq(mid, x)));
  }
  const auto d2 = chain(2).reduct(Signature::Lattice);
  CHECK(find_isomorphism(ordinal_sum(d2, d2), chain(3).reduct(Signature::Lattice),
                         Signature::Lattice)
            .has_value());
}

TEST_CASE("symmetric extensions") {
  const auto d2 = chain(2).reduct(Signature::Lattice);
  const auto s = symmetric_extension(d2, catalog("M3-PK"));
  CHECK(s.size() == 7);
  CHECK(s.signature() == Signature::BI);
  CHECK(s.kleene(s.element("L:0")) == s.element("Ld:0"));
  CHECK(classify(s).holds("pseudo-Kleene"));
  CHECK_THROWS_AS(symmetric_extension(chain(1).reduct(Signature::Lattice),
                                      catalog("B6")),
                  PreconditionFailed);
  CHECK_THROWS_AS(symmetric_extension(d2, catalog("M3")), SignatureMismatch);
}

TEST_CASE("direct products are componentwise") {
  const auto& l = catalog("M3+M3");
  const auto& r = catalog("D3");
  const auto p = direct_product(l, r);
  CHECK(p.size() == 27);
  CHECK(p.label(0) == "(" + l.label(0) + "," + r.label(0) + ")");
  auto idx = [&](Element x, Element y) { return x * r.size() + y; };
  for (Element a = 0; a < l.size(); ++a) {
    for (Element b = 0; b < r.size(); ++b) {
      CHECK(p.brouwer(idx(a, b)) == idx(l.brouwer(a), r.brouwer(b)));
      CHECK(p.kleene(idx(a, b)) == idx(l.kleene(a), r.kleene(b)));
      for (Element c = 0; c < l.size(); c += 2) {
        CHECK(p.meet(idx(a, b), idx(c, 1)) == idx(l.meet(a, c), r.meet(b, 1)));
        CHECK(p.join(idx(a, b), idx(c, 1)) == idx(l.join(a, c), r.join(b, 1)));
      }
    }
  }
  CHECK_THROWS_AS(direct_product(l, catalog("B6")), SignatureMismatch);
}

TEST_CASE("horizontal sums of four-element Boolean algebras") {
  const auto mo2 = horizontal_sum_mo(2);
  CHECK(mo2.size() == 6);
  CHECK(find_isomorphism(mo2, catalog("MO2"), Signature::BZ).has_value());
  CHECK(classify(horizontal_sum_mo(3)).holds("orthomodular"));
}

TEST_CASE("Brouwer completions satisfy the BZ axioms and respect fixed values") {
  const auto bi = catalog("D4").reduct(Signature::BI);
  const auto all = brouwer_completions(bi, {});
  CHECK_FALSE(all.empty());
  std::set<UnaryTable> distinct(all.begin(), all.end());
  CHECK(distinct.size() == all.size());
  for (const auto& t : all) {
    const auto a = bi.with_unary(UnaryOp::Brouwer, t, Signature::BZ);
    CHECK(oracle::holds(a, "QS7"));
  }
  CHECK(std::find(all.begin(), all.end(),
                  catalog("D4").table(UnaryOp::Brouwer)) != all.end());
  CHECK(brouwer_completions(bi, {}, 1).size() == 1);
  // 0~ = 0 would give 0~~ = 0 but 0~' = 1.
  CHECK(brouwer_completions(bi, {{bi.bottom(), bi.bottom()}}).empty());
}

TEST_CASE("the catalog") {
  const auto names = catalog_names();
  CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
  for (const auto& e : catalog_entries()) {
    CHECK(e.algebra.name() == e.name);
    CHECK_FALSE(e.provenance.empty());
  }
  CHECK_THROWS_AS(catalog("nope"), UnknownName);
  CHECK(catalog("F8").size() == 8);
  CHECK(catalog("A").size() == 12);
  CHECK(catalog("H").size() == 15);
}

TEST_CASE("H completion") {
  const auto& h = catalog("H");
  std::map<Element, Element> fixed;
  for (const auto& [x, y] : h_labeled_brouwer()) fixed[h.element(x)] = h.element(y);
  CHECK(fixed.size() == 4);
  const auto all = brouwer_completions(h.reduct(Signature::BI), fixed);
  REQUIRE(all.size() == 1);
  CHECK(all[0] == h.table(UnaryOp::Brouwer));
}

// Acceptance gate: one line per criterion, "CRITERION n PASS|FAIL detail".
// Exits 1 when any criterion fails.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pbz/analysis.hpp"
#include "pbz/classify.hpp"
#include "pbz/constructors.hpp"
#include "pbz/equivalences.hpp"
#include "pbz/format.hpp"
#include "pbz/terms.hpp"

using namespace pbz;

namespace {

// Collects sub-checks of one criterion; the detail lists failures first.
class Criterion {
 public:
  void require(bool ok, const std::string& what) {
    (ok ? passed_ : failed_).push_back(what);
  }
  void note(const std::string& what) { notes_.push_back(what); }
  bool ok() const { return failed_.empty(); }

  std::string detail() const {
    std::string out;
    auto add = [&](const std::string& s) {
      if (!out.empty()) out += "; ";
      out += s;
    };
    for (const auto& f : failed_) add("failed: " + f);
    add(std::to_string(passed_.size()) + "/" +
        std::to_string(passed_.size() + failed_.size()) + " checks");
    for (const auto& n : notes_) add(n);
    return out;
  }

 private:
  std::vector<std::string> passed_, failed_, notes_;
};

const FiniteAlgebra& cat(std::string_view n) { return catalog(n); }

bool holds(const FiniteAlgebra& a, std::string_view law) {
  return check(a, named_equation(law)).holds();
}

std::string witness(const FiniteAlgebra& a, std::string_view law) {
  const auto r = check(a, named_equation(law));
  if (r.holds()) return std::string(law) + " holds";
  const auto& c = *r.counterexample;
  std::string out = std::string(law) + " fails at ";
  for (std::size_t i = 0; i < c.assignment.size(); ++i) {
    if (i) out += ",";
    out += std::string(variable_name(i)) + "=" + a.label(c.assignment[i]);
  }
  return out + " (" + a.label(c.lhs) + " vs " + a.label(c.rhs) + ")";
}

bool embeds(const FiniteAlgebra& p, const FiniteAlgebra& t, Signature s) {
  return find_embedding(p, t, s).has_value();
}

bool has_involution(const FiniteAlgebra& a) {
  return a.has(UnaryOp::Kleene);
}

Criterion c1() {
  Criterion c;
  const auto& f8 = cat("F8");
  const auto r = classify(f8);
  c.require(r.holds("antiortholattice"), "F8 is an antiortholattice");
  c.require(holds(f8, "SDM"), "F8 satisfies SDM");
  c.require(!holds(f8, "Q"), "F8 fails Q");
  c.note(witness(f8, "Q"));
  return c;
}

Criterion c2() {
  Criterion c;
  const auto& b6 = cat("B6");
  const auto& f8 = cat("F8");
  std::size_t para = 0, inv = 0;
  for (const auto& e : catalog_entries()) {
    const auto& a = e.algebra;
    if (!has_involution(a)) continue;
    ++inv;
    const bool q = holds(a, "Q");
    const bool b6_in = embeds(b6, a, Signature::I);
    c.require(q == !b6_in, "Q iff no B6 I-embedding on " + e.name);
    if (!classify(a).holds("paraorthomodular")) continue;
    ++para;
    const bool f8_in = embeds(f8, a, Signature::BI);
    c.require(q == !f8_in, "Q iff no F8 BI-embedding on " + e.name);
    c.require(b6_in == f8_in, "B6 I-embeds iff F8 BI-embeds on " + e.name);
  }
  c.note(std::to_string(inv) + " involution algebras, " +
         std::to_string(para) + " paraorthomodular");
  return c;
}

Criterion c3() {
  Criterion c;
  const auto& a = cat("A");
  const auto& f8 = cat("F8");
  c.require(holds(a, "Q"), "A satisfies Q");
  if (!holds(a, "Q")) c.note(witness(a, "Q"));
  const auto m = find_embedding(f8, a, Signature::BI);
  c.require(!m, "no BI-embedding of F8 into A");
  if (m) c.note("F8 embeds as " + describe(f8, a, *m));
  const Partition theta = parse_partition(a, "0;a;c,e;b,d;b',d';c',e';a';1");
  const bool singles = theta.blocks()[theta.block(a.bottom())].size() == 1 &&
                       theta.blocks()[theta.block(a.top())].size() == 1;
  c.require(singles, "theta has singleton 0 and 1 classes");
  c.require(is_congruence(a, theta, Signature::BI), "theta is a BI-congruence");
  c.require(is_congruence(a, theta, Signature::BZ), "theta is a BZ-congruence");
  try {
    const auto q = quotient(a, theta, Signature::BZ);
    c.require(find_isomorphism(q, f8, Signature::BZ).has_value(),
              "A/theta is isomorphic to F8");
  } catch (const NotACongruence& e) {
    c.require(false, "A/theta is isomorphic to F8");
    c.note(std::string("quotient: ") + e.what());
  }
  return c;
}

Criterion c4() {
  Criterion c;
  const auto& h = cat("H");
  c.require(h.size() == 16, "H has 16 elements");
  c.note("H has " + std::to_string(h.size()) + " elements");
  c.require(classify(h).holds("PBZ*"), "H is PBZ*");
  c.require(holds(h, "SDM"), "H satisfies SDM");
  c.require(holds(h, "SK"), "H satisfies SK");
  c.require(!holds(h, "J2"), "H fails J2");
  c.require(embeds(cat("D3"), h, Signature::BZ), "D3 BZ-embeds in H");
  std::map<Element, Element> fixed;
  for (const auto& [x, y] : h_labeled_brouwer()) fixed[h.element(x)] = h.element(y);
  const auto all = brouwer_completions(h.reduct(Signature::BI), fixed);
  c.require(all.size() == 1, "exactly one Brouwer completion");
  return c;
}

Criterion c5() {
  Criterion c;
  for (const char* n : {"D2", "D3", "D4", "D5"}) {
    const auto r = classify(cat(n));
    c.require(r.holds("PBZ*") && r.holds("antiortholattice"),
              std::string(n) + " is a PBZ*-antiortholattice");
  }
  c.require(!holds(cat("D4"), "SK"), "D4 fails SK");
  c.require(!holds(cat("D5"), "SK"), "D5 fails SK");
  c.require(holds(cat("D3"), "SDM") && holds(cat("D3"), "SK"),
            "D3 satisfies SDM and SK");
  c.require(all_congruences(cat("D3"), Signature::BZ).size() == 2, "D3 is simple");
  c.require(is_subdirectly_irreducible(cat("D3"), Signature::BZ),
            "D3 is subdirectly irreducible");
  return c;
}

Criterion c6() {
  Criterion c;
  const auto& m = cat("M3+M3");
  c.require(!holds(m, "WDSDM"), "M3+M3 fails WDSDM");
  c.note(witness(m, "WDSDM"));
  // Atoms a, b, c of the lower M3.
  const Element a = m.element("a"), b = m.element("b"), cc = m.element("c");
  const Element lhs = m.brouwer(m.meet(a, m.join(b, cc)));
  const Element rhs = m.meet(m.brouwer(m.meet(a, b)), m.brouwer(m.meet(a, cc)));
  c.require(m.meet(a, m.join(b, cc)) == a && lhs == m.brouwer(a) &&
                lhs == m.bottom() && rhs == m.top(),
            "(a & (b | c))~ = a~ = 0 and (a & b)~ & (a & c)~ = 1");
  c.require(!holds(m, "WDISTjoinTilde"), "M3+M3 fails WDIST with ~");
  const auto& d = cat("D2+M3+D2");
  c.require(holds(d, "SDM") && !holds(d, "DIST"), "D2+M3+D2 satisfies SDM, not DIST");
  const auto& s = cat("D2^2+D2^2");
  c.require(holds(s, "DIST") && !holds(s, "SDM"), "D2^2+D2^2 satisfies DIST, not SDM");
  c.require(!embeds(m, direct_product(m, cat("D3")), Signature::BZ),
            "M3+M3 does not BZ-embed in (M3+M3) x D3");
  return c;
}

Criterion c7() {
  Criterion c;
  const auto& bz4 = cat("BZ4");
  c.require(classify_stone(bz4).holds("Kleene-quasi-Stone"), "BZ4 is Kleene-quasi-Stone");
  const Element a = bz4.element("a");
  const Element lhs = bz4.brouwer(bz4.meet(a, bz4.kleene(a)));
  const Element rhs = bz4.join(bz4.brouwer(a), bz4.brouwer(bz4.kleene(a)));
  c.require(!holds(bz4, "star") && lhs == bz4.top() && rhs == bz4.bottom(),
            "BZ4 fails (*) with (a & a')~ = 1 != 0");
  std::size_t qs = 0;
  for (const auto& e : catalog_entries()) {
    const auto& x = e.algebra;
    if (x.signature() != Signature::BZ) continue;
    const auto r = classify_stone(x);
    const bool pbz = classify(x).holds("PBZ*") && holds(x, "DIST") && holds(x, "SDM");
    c.require(r.holds("Kleene-Stone") == pbz,
              "Kleene-Stone iff PBZ* + DIST + SDM on " + e.name);
    if (!r.holds("quasi-Stone")) continue;
    ++qs;
    for (const char* law : {"QS6", "QS7", "QS8", "QS9a", "QS9b"}) {
      c.require(holds(x, law), std::string(law) + " on " + e.name);
    }
    if (r.holds("quasi-Stone-DeMorgan")) {
      c.require(holds(x, "MOLA"), "x~~ = x~'~' on " + e.name);
    }
  }
  c.note(std::to_string(qs) + " quasi-Stone members");
  return c;
}

Criterion c8() {
  Criterion c;
  const auto& d3 = cat("D3");
  const auto r = verify_discriminator(d3);
  bool e_ok = true, t_ok = true;
  for (Element x = 0; x < 3; ++x) {
    for (Element y = 0; y < 3; ++y) {
      e_ok = e_ok && r.e[x * 3 + y] == (x == y ? d3.bottom() : d3.top());
      for (Element z = 0; z < 3; ++z) {
        t_ok = t_ok && r.t[(x * 3 + y) * 3 + z] == (x == y ? z : x);
      }
    }
  }
  c.require(r.realises && r.e_separates, "verify_discriminator(D3) is true");
  c.require(e_ok, "e on all 9 pairs of D3");
  c.require(t_ok, "t on all 27 triples of D3");
  c.require(!verify_discriminator(cat("D4")).realises, "verify_discriminator(D4) is false");
  const auto sum = truncated_sum_table(d3);
  const int halves[] = {0, 1, 2};
  bool sum_ok = sum.size() == 9;
  for (Element x = 0; sum_ok && x < 3; ++x) {
    for (Element y = 0; y < 3; ++y) {
      sum_ok = sum_ok && halves[sum[x * 3 + y]] == std::min(2, halves[x] + halves[y]);
    }
  }
  c.require(sum_ok, "truncated sum on D3 is min(1, x + y)");
  return c;
}

Criterion c9() {
  Criterion c;
  const char* classes[] = {"diamond-DeMorgan", "topological-quasi-Boolean",
                           "classical-diamond-DeMorgan", "monadic-DeMorgan",
                           "weak-Lukasiewicz", "Lukasiewicz",
                           "three-valued-Lukasiewicz", "tetravalent-modal",
                           "involutive-Stone"};
  // Memberships asserted per algebra: (class index, expected).
  const std::vector<std::vector<std::pair<int, bool>>> claims = {
      {{0, true}, {1, false}},
      {{1, true}, {2, false}},
      {{1, true}, {3, false}},
      {{7, true}, {8, false}, {4, false}},
      {{3, true}, {7, false}},
      {{8, true}, {4, false}},
      {{4, true}, {8, false}},
      {{5, true}, {7, false}},
  };
  for (std::size_t i = 0; i < claims.size(); ++i) {
    const std::string name = "menarini-" + std::to_string(i + 1);
    const auto& m = cat(name);
    const auto r = classify_modal(m);
    for (const auto& [k, want] : claims[i]) {
      c.require(r.holds(classes[k]) == want,
                name + (want ? " is " : " is not ") + classes[k]);
    }
    c.require(r.respects_inclusions(), name + " respects the class inclusions");
  }
  {
    const auto& m = cat("menarini-2");
    const Element a = m.element("a");
    const Element d = m.diamond(a);
    c.require(m.meet(d, m.kleene(d)) == a && a != m.bottom(),
              "menarini-2: dia a & (dia a)' = a != 0");
  }
  {
    const auto& m = cat("menarini-3");
    const Element a = m.element("a");
    const Element box_dia = m.kleene(m.diamond(m.kleene(m.diamond(a))));
    c.require(box_dia == m.bottom() && m.diamond(a) == a,
              "menarini-3: box dia a = 0 != a = dia a");
  }
  for (const char* n : {"menarini-5", "menarini-8"}) {
    const auto& m = cat(n);
    const Element a = m.element("a");
    const Element lhs = m.meet(m.diamond(a), m.kleene(a));
    c.require(lhs == m.kleene(a) && lhs != m.meet(a, m.kleene(a)),
              std::string(n) + ": dia a & a' = a' != a & a'");
  }
  std::size_t wl = 0, classical = 0, rounds = 0;
  for (const auto& e : catalog_entries()) {
    const auto& x = e.algebra;
    if (x.signature() == Signature::Modal) {
      const auto r = classify_modal(x);
      if (r.holds("weak-Lukasiewicz")) {
        ++wl;
        c.require(holds(x, "M6"), "M6 on " + e.name);
        c.require(modal_of_bz(bz_of_modal(x)).same_structure(x),
                  "f(g(" + e.name + ")) is table-identical");
        ++rounds;
      }
      if (r.holds("classical-diamond-DeMorgan")) {
        ++classical;
        c.require(holds(x, "M8"), "M8 on " + e.name);
      }
    } else if (x.signature() == Signature::BZ && holds(x, "DIST") &&
               classify(x).holds("PBZ*")) {
      c.require(bz_of_modal(modal_of_bz(x)).same_structure(x),
                "g(f(" + e.name + ")) is table-identical");
      ++rounds;
    }
  }
  c.note(std::to_string(wl) + " weak Lukasiewicz, " + std::to_string(classical) +
         " classical, " + std::to_string(rounds) + " round trips");
  return c;
}

// For a <= b' with a' & b' <= a & b, the meets a&a', b&b', a'&b', a&b agree.
bool four_meets(const FiniteAlgebra& x) {
  for (Element a = 0; a < x.size(); ++a) {
    for (Element b = 0; b < x.size(); ++b) {
      const Element na = x.kleene(a), nb = x.kleene(b);
      if (!x.leq(a, nb) || !x.leq(x.meet(na, nb), x.meet(a, b))) continue;
      const Element m = x.meet(a, na);
      if (x.meet(b, nb) != m || x.meet(na, nb) != m || x.meet(a, b) != m) {
        return false;
      }
    }
  }
  return true;
}

Criterion c10() {
  Criterion c;
  for (const auto& e : catalog_entries()) {
    const auto& x = e.algebra;
    if (x.signature() != Signature::BZ) continue;
    const bool sdm = holds(x, "SDM");
    c.require(!sdm || holds(x, "star"), "SDM implies (*) on " + e.name);
    c.require(!sdm || holds(x, "SK"), "SDM implies SK on " + e.name);
    c.require(!holds(x, "J0") || holds(x, "J2"), "J0 implies J2 on " + e.name);
  }
  bool alternate = true;
  for (const auto& e : catalog_entries()) {
    const auto& x = e.algebra;
    if (x.signature() == Signature::BZ && holds(x, "SK") && !holds(x, "star")) {
      alternate = false;
    }
  }
  c.note(std::string("SK implies (*) on every catalog BZ-algebra: ") +
         (alternate ? "yes" : "no"));
  for (const auto& e : catalog_entries()) {
    const auto& x = e.algebra;
    if (!has_involution(x)) continue;
    c.require(holds(x, "Q") == holds(x, "Qprime"), "Q iff Q' on " + e.name);
    c.require(four_meets(x), "four meets coincide on " + e.name);
  }
  std::size_t small = 0;
  for (const auto& e : catalog_entries()) {
    const auto& x = e.algebra;
    if (x.size() > 8) continue;
    ++small;
    const auto naive = oracle::congruences(x, x.signature());
    bool ok = true;
    for (Element a = 0; a < x.size(); ++a) {
      for (Element b = 0; b < x.size(); ++b) {
        ok = ok && principal_congruence(x, a, b, x.signature()) ==
                       Partition(oracle::principal(naive, x.size(), a, b));
      }
    }
    c.require(ok, "principal congruences of " + e.name + " match the oracle");
  }
  const auto path =
      (std::filesystem::temp_directory_path() / "pbz_acceptance.alg").string();
  for (const auto& e : catalog_entries()) {
    save_algebra(e.algebra, path);
    c.require(load_algebra(path) == e.algebra, "load/save round trip of " + e.name);
  }
  std::remove(path.c_str());
  c.note(std::to_string(small) + " algebras of size <= 8");
  return c;
}

}  // namespace

int main() {
  Criterion (*const criteria[])() = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10};
  int failures = 0;
  for (std::size_t i = 0; i < std::size(criteria); ++i) {
    Criterion c;
    try {
      c = criteria[i]();
    } catch (const std::exception& e) {
      c.require(false, std::string("error: ") + e.what());
    }
    if (!c.ok()) ++failures;
    std::cout << "CRITERION " << i + 1 << ' ' << (c.ok() ? "PASS" : "FAIL") << ' '
              << c.detail() << '\n';
  }
  return failures == 0 ? 0 : 1;
}

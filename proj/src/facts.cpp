#include "pbz/facts.hpp"

#include <map>
#include <sstream>

#include "pbz/analysis.hpp"
#include "pbz/classify.hpp"
#include "pbz/constructors.hpp"
#include "pbz/equivalences.hpp"
#include "pbz/terms.hpp"

namespace pbz {

namespace {

const FiniteAlgebra& cat(std::string_view name) { return catalog(name); }

std::string labels(const FiniteAlgebra& a, const ElementSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += a.label(s[i]);
  }
  return out + "}";
}

std::string assignment(const FiniteAlgebra& a, const std::vector<Element>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << variable_name(i) << '=' << a.label(v[i]);
  }
  return out.str();
}

// Checks a named law; the detail is "holds" or the first counterexample.
FactOutcome law(const FiniteAlgebra& a, std::string_view name) {
  const CheckResult r = check(a, named_equation(name));
  if (r.holds()) return {true, std::string(name) + " holds"};
  const auto& c = *r.counterexample;
  return {false, std::string(name) + " fails at " + assignment(a, c.assignment) +
                     ": " + a.label(c.lhs) + " != " + a.label(c.rhs)};
}

FactOutcome embeds(const FiniteAlgebra& p, const FiniteAlgebra& t,
                   Signature sig) {
  if (auto m = find_embedding(p, t, sig)) return {true, describe(p, t, *m)};
  return {false, "no embedding"};
}

FactOutcome all_of(std::initializer_list<FactOutcome> parts) {
  FactOutcome out{true, ""};
  for (const auto& p : parts) {
    out.observed = out.observed && p.observed;
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += p.detail;
  }
  return out;
}

FactOutcome verdict(const FiniteAlgebra& a, const ClassificationReport& r,
                    std::string_view cls, bool want) {
  const ClassResult& c = r.get(cls);
  const bool holds = c.verdict == Verdict::Holds;
  std::string d = std::string(cls) + " " + std::string(to_string(c.verdict));
  if (c.witness) d += " (" + c.witness->condition + " at " + describe(a, *c.witness) + ")";
  return {holds == want, d};
}

FactOutcome modal(const FiniteAlgebra& m, const ModalClassReport& r,
                  std::string_view cls, bool want) {
  const ModalClassResult& c = r.get(cls);
  std::string d = std::string(cls) + (c.holds ? " holds" : " fails");
  if (c.witness) d += " (" + describe(m, *c.witness) + ")";
  return {c.holds == want, d};
}

// The failing law of a modal class together with its values.
FactOutcome modal_witness(const FiniteAlgebra& m, std::string_view cls,
                          std::string_view law, std::string_view at,
                          std::string_view lhs, std::string_view rhs) {
  const ModalClassReport r = classify_modal(m);
  const ModalClassResult& c = r.get(cls);
  if (c.holds || !c.witness) return {false, std::string(cls) + " holds"};
  const auto& w = *c.witness;
  const bool ok = w.law == law && w.counterexample.assignment.size() == 1 &&
                  m.label(w.counterexample.assignment[0]) == at &&
                  m.label(w.counterexample.lhs) == lhs &&
                  m.label(w.counterexample.rhs) == rhs;
  return {ok, describe(m, w)};
}

const char* const kTheta = "0;a;c,e;b,d;b',d';c',e';a';1";

Partition theta() { return parse_partition(cat("A"), kTheta); }

// "congruence" or the first incompatibility found by quotient().
FactOutcome congruence(const FiniteAlgebra& a, const Partition& p,
                       Signature sig) {
  try {
    quotient(a, p, sig);
    return {true, "congruence"};
  } catch (const NotACongruence& e) {
    return {false, e.what()};
  }
}

// Removes the joins a trailing term contributed to an m-term.
Term strip_tail(Term m, const Term& tail) {
  std::size_t parts = 1;
  for (const Term* t = &tail; t->kind() == NodeKind::Join; t = &t->left()) {
    ++parts;
  }
  for (std::size_t i = 0; i < parts; ++i) m = Term(m.left());
  return m;
}

std::vector<Fact> build_facts() {
  using S = Signature;
  std::vector<Fact> f;
  auto add = [&](std::string id, std::string claim, bool expected,
                 std::function<FactOutcome()> run) {
    f.push_back({std::move(id), std::move(claim), expected, std::move(run)});
  };

  add("F8-bounds", "in F8, a & b = c and a | b = c'", true, [] {
    const auto& a = cat("F8");
    const Bounds b = bounds(a, a.element("a"), a.element("b"));
    return FactOutcome{a.label(b.meet) == "c" && a.label(b.join) == "c'",
                       "meet " + a.label(b.meet) + ", join " + a.label(b.join)};
  });
  add("F8-classes", "F8 is a non-distributive PBZ*-antiortholattice", true, [] {
    const auto& a = cat("F8");
    const auto r = classify(a);
    return all_of({verdict(a, r, "PBZ*", true),
                   verdict(a, r, "antiortholattice", true),
                   verdict(a, r, "distributive", false)});
  });
  add("F8-sharp", "the sharp elements of F8 are 0 and 1", true, [] {
    const auto& a = cat("F8");
    const auto s = sharp_elements(a);
    return FactOutcome{s == ElementSet{a.bottom(), a.top()}, labels(a, s)};
  });
  add("F8-dense", "every nonzero element of F8 is dense", true, [] {
    const auto& a = cat("F8");
    const auto d = dense_elements(a);
    return FactOutcome{d.size() == a.size() - 1 && d.front() != a.bottom(),
                       labels(a, d)};
  });
  add("F8-symext", "D2 + B6 + D2 with the trivial Brouwer complement is F8",
      true, [] {
        const auto built = trivial_brouwer_extension(
            symmetric_extension(chain(2).reduct(S::Lattice), cat("B6")));
        if (auto m = find_isomorphism(built, cat("F8"), S::BZ)) {
          return FactOutcome{true, describe(built, cat("F8"), *m)};
        }
        return FactOutcome{false, "not isomorphic"};
      });
  add("F8-osum-size", "D2 + B6 + D2 has 8 elements", true, [] {
    const auto d2 = chain(2).reduct(S::Lattice);
    const auto s = ordinal_sum(ordinal_sum(d2, cat("B6").reduct(S::Lattice)), d2);
    return FactOutcome{s.size() == 8, std::to_string(s.size()) + " elements"};
  });
  add("D3-trivial-extension",
      "the BI-chain D3 with the trivial Brouwer complement is the "
      "antiortholattice D3",
      true, [] {
        const auto e = trivial_brouwer_extension(cat("D3").reduct(S::BI));
        const auto r = classify(e);
        return all_of({{e.same_structure(cat("D3")), "tables equal D3"},
                       verdict(e, r, "antiortholattice", true)});
      });
  add("D5-kernel", "the image of ~ on D5 is {0,1}", true, [] {
    const auto& a = cat("D5");
    const auto k = boolean_kernel(a);
    return FactOutcome{k == ElementSet{a.bottom(), a.top()}, labels(a, k)};
  });
  add("chain3", "chain(3) has a' = a and a~ = 0", true, [] {
    const auto c = chain(3);
    const Element a = c.element("a");
    return FactOutcome{c.kleene(a) == a && c.brouwer(a) == c.bottom(),
                       "a' = " + c.label(c.kleene(a)) +
                           ", a~ = " + c.label(c.brouwer(a))};
  });
  add("D4-SK", "D4 satisfies SK", false, [] { return law(cat("D4"), "SK"); });
  add("D5-SK", "D5 satisfies SK", false, [] { return law(cat("D5"), "SK"); });
  add("D3-SDM-SK", "D3 satisfies SDM and SK", true, [] {
    return all_of({law(cat("D3"), "SDM"), law(cat("D3"), "SK")});
  });
  add("chains-AOL", "D2 to D5 are PBZ*-antiortholattices", true, [] {
    FactOutcome out{true, ""};
    for (const char* n : {"D2", "D3", "D4", "D5"}) {
      const auto r = classify(cat(n));
      const bool ok = r.holds("PBZ*") && r.holds("antiortholattice");
      out.observed = out.observed && ok;
      out.detail += std::string(out.detail.empty() ? "" : ", ") + n +
                    (ok ? " yes" : " no");
    }
    return out;
  });
  add("D3-simple", "D3 has exactly two BZ-congruences", true, [] {
    const auto c = all_congruences(cat("D3"), S::BZ);
    return FactOutcome{c.size() == 2, std::to_string(c.size()) + " congruences"};
  });
  add("D3-SI", "D3 is subdirectly irreducible", true, [] {
    return FactOutcome{is_subdirectly_irreducible(cat("D3"), S::BZ),
                       "monolith found"};
  });
  add("M3M3-osum", "M3 + M3 has 9 elements and its bottom has three covers",
      true, [] {
        const auto s = ordinal_sum(cat("M3"), cat("M3"));
        const auto up = s.covers(s.order_bottom());
        return FactOutcome{s.size() == 9 && up.size() == 3,
                           std::to_string(s.size()) + " elements, " +
                               std::to_string(up.size()) + " covers of 0"};
      });
  add("D2M3D2-symext",
      "D2 + M3 + D2 with the trivial Brouwer complement is an "
      "antiortholattice isomorphic to the catalog D2+M3+D2",
      true, [] {
        const auto e = trivial_brouwer_extension(symmetric_extension(
            chain(2).reduct(S::Lattice), cat("M3-PK")));
        const auto r = classify(e);
        const bool iso =
            find_isomorphism(e, cat("D2+M3+D2"), S::BZ).has_value();
        return all_of({verdict(e, r, "antiortholattice", true),
                       {iso, std::to_string(e.size()) + " elements"}});
      });
  add("product-size", "(M3 + M3) x D3 is a 27-element BZ-lattice", true, [] {
    const auto p = direct_product(cat("M3+M3"), cat("D3"));
    return FactOutcome{p.size() == 27 && p.signature() == S::BZ,
                       std::to_string(p.size()) + " elements"};
  });
  add("MO2-classes", "MO2 is orthomodular and not distributive", true, [] {
    const auto& a = cat("MO2");
    const auto r = classify(a);
    return all_of({verdict(a, r, "orthomodular", true),
                   verdict(a, r, "distributive", false)});
  });
  add("F8-SDM", "F8 satisfies SDM", true, [] { return law(cat("F8"), "SDM"); });
  add("F8-Q", "F8 satisfies Q", false, [] { return law(cat("F8"), "Q"); });
  add("B6-in-F8", "B6 is an involution sublattice of F8", true,
      [] { return embeds(cat("B6"), cat("F8"), S::I); });
  add("A-Q", "A satisfies Q", true, [] { return law(cat("A"), "Q"); });
  add("F8-in-A", "F8 is a BI-subalgebra of A", false,
      [] { return embeds(cat("F8"), cat("A"), S::BI); });
  add("A-theta-BI",
      "theta is a BI-congruence of A whose 0 and 1 classes are singletons",
      true, [] {
        const auto& a = cat("A");
        const Partition t = theta();
        const bool singles = t.blocks()[t.block(a.bottom())].size() == 1 &&
                             t.blocks()[t.block(a.top())].size() == 1;
        const FactOutcome cong = congruence(a, t, S::BI);
        return FactOutcome{cong.observed && singles, cong.detail};
      });
  add("A-theta-BZ", "theta is a BZ-congruence of A", true, [] {
    return congruence(cat("A"), theta(), S::BZ);
  });
  add("A-quotient", "A/theta is isomorphic to F8", true, [] {
    const auto q = quotient(cat("A"), theta(), S::BZ);
    if (auto m = find_isomorphism(q, cat("F8"), S::BZ)) {
      return FactOutcome{true, describe(q, cat("F8"), *m)};
    }
    return FactOutcome{false, "not isomorphic"};
  });
  add("H-size", "H has the 15 elements of its diagram", true, [] {
    return FactOutcome{cat("H").size() == 15,
                       std::to_string(cat("H").size()) + " elements"};
  });
  add("H-PBZ", "H is a PBZ*-lattice satisfying SDM and SK", true, [] {
    const auto& h = cat("H");
    return all_of({verdict(h, classify(h), "PBZ*", true), law(h, "SDM"),
                   law(h, "SK")});
  });
  add("H-J2", "H satisfies J2", false, [] { return law(cat("H"), "J2"); });
  add("D3-in-H", "D3 is a BZ-subalgebra of H", true,
      [] { return embeds(cat("D3"), cat("H"), S::BZ); });
  add("H-completion",
      "the four labeled Brouwer values of H have exactly one completion",
      true, [] {
        const auto& h = cat("H");
        std::map<Element, Element> fixed;
        for (const auto& [x, y] : h_labeled_brouwer()) {
          fixed[h.element(x)] = h.element(y);
        }
        const auto all = brouwer_completions(h.reduct(S::BI), fixed);
        return FactOutcome{all.size() == 1 &&
                               all[0] == h.table(UnaryOp::Brouwer),
                           std::to_string(all.size()) + " completions"};
      });
  add("M3M3-WDSDM", "M3 + M3 satisfies WDSDM", false,
      [] { return law(cat("M3+M3"), "WDSDM"); });
  add("M3M3-WDIST", "M3 + M3 satisfies WDIST with ~", false,
      [] { return law(cat("M3+M3"), "WDISTjoinTilde"); });
  add("D2M3D2-SDM", "D2 + M3 + D2 satisfies SDM but not DIST", true, [] {
    const auto& a = cat("D2+M3+D2");
    const auto d = law(a, "DIST");
    return all_of({law(a, "SDM"), {!d.observed, d.detail}});
  });
  add("D2sq-DIST", "D2^2 + D2^2 satisfies DIST but not SDM", true, [] {
    const auto& a = cat("D2^2+D2^2");
    const auto s = law(a, "SDM");
    return all_of({law(a, "DIST"), {!s.observed, s.detail}});
  });
  add("M3M3-in-product", "M3 + M3 is a BZ-subalgebra of (M3 + M3) x D3",
      false, [] {
        return embeds(cat("M3+M3"),
                      direct_product(cat("M3+M3"), cat("D3")), S::BZ);
      });
  add("BZ4-KQS", "BZ4 is a Kleene-quasi-Stone algebra", true, [] {
    const auto& a = cat("BZ4");
    return verdict(a, classify_stone(a), "Kleene-quasi-Stone", true);
  });
  add("BZ4-star", "BZ4 fails (*) with (a & a')~ = 1 and a~ | a'~ = 0", true,
      [] {
        const auto& a = cat("BZ4");
        const Element x = a.element("a");
        const Element lhs = a.brouwer(a.meet(x, a.kleene(x)));
        const Element rhs = a.join(a.brouwer(x), a.brouwer(a.kleene(x)));
        const auto star = law(a, "star");
        return FactOutcome{!star.observed && lhs == a.top() &&
                               rhs == a.bottom(),
                           star.detail};
      });
  add("D5-KS", "D5 is a Kleene-Stone algebra", true, [] {
    const auto& a = cat("D5");
    return verdict(a, classify_stone(a), "Kleene-Stone", true);
  });
  add("menarini-1", "menarini-1 is diamond-De Morgan, not topological", true,
      [] {
        const auto& m = cat("menarini-1");
        const auto r = classify_modal(m);
        return all_of({modal(m, r, "diamond-DeMorgan", true),
                       modal(m, r, "topological-quasi-Boolean", false)});
      });
  add("menarini-2",
      "menarini-2 is topological, not classical: dia a & (dia a)' = a",
      true, [] {
        const auto& m = cat("menarini-2");
        const auto r = classify_modal(m);
        return all_of({modal(m, r, "topological-quasi-Boolean", true),
                       modal_witness(m, "classical-diamond-DeMorgan", "M5",
                                     "a", "a", "0")});
      });
  add("menarini-3",
      "menarini-3 is topological, not monadic: box dia a = 0, dia a = a",
      true, [] {
        const auto& m = cat("menarini-3");
        const auto r = classify_modal(m);
        return all_of({modal(m, r, "topological-quasi-Boolean", true),
                       modal_witness(m, "monadic-DeMorgan", "M6", "a", "a",
                                     "0")});
      });
  add("menarini-4",
      "menarini-4 is tetravalent, not involutive Stone, not weak Lukasiewicz",
      true, [] {
        const auto& m = cat("menarini-4");
        const auto r = classify_modal(m);
        return all_of({modal(m, r, "tetravalent-modal", true),
                       modal(m, r, "monadic-DeMorgan", true),
                       modal(m, r, "involutive-Stone", false),
                       modal(m, r, "weak-Lukasiewicz", false)});
      });
  add("menarini-5",
      "menarini-5 is monadic, not tetravalent: dia a & a' = a', a & a' = 0",
      true, [] {
        const auto& m = cat("menarini-5");
        const auto r = classify_modal(m);
        return all_of({modal(m, r, "monadic-DeMorgan", true),
                       modal_witness(m, "tetravalent-modal", "M10", "a", "0",
                                     "a'")});
      });
  add("menarini-6", "menarini-6 is involutive Stone, not weak Lukasiewicz",
      true, [] {
        const auto& m = cat("menarini-6");
        const auto r = classify_modal(m);
        return all_of({modal(m, r, "involutive-Stone", true),
                       modal(m, r, "weak-Lukasiewicz", false),
                       modal(m, r, "Lukasiewicz", false)});
      });
  add("menarini-7", "menarini-7 is weak Lukasiewicz, not involutive Stone",
      true, [] {
        const auto& m = cat("menarini-7");
        const auto r = classify_modal(m);
        return all_of({modal(m, r, "weak-Lukasiewicz", true),
                       modal(m, r, "involutive-Stone", false),
                       modal(m, r, "Lukasiewicz", false)});
      });
  add("menarini-8",
      "menarini-8 is Lukasiewicz, not tetravalent: dia a & a' = a', a & a' = a",
      true, [] {
        const auto& m = cat("menarini-8");
        const auto r = classify_modal(m);
        return all_of({modal(m, r, "Lukasiewicz", true),
                       modal(m, r, "involutive-Stone", true),
                       modal(m, r, "weak-Lukasiewicz", true),
                       modal_witness(m, "tetravalent-modal", "M10", "a", "a",
                                     "a'")});
      });
  add("fg-D3", "f and g are mutually inverse on D3", true, [] {
    const auto& d3 = cat("D3");
    const auto back = bz_of_modal(modal_of_bz(d3));
    return FactOutcome{back.same_structure(d3), "bz(modal(D3)) vs D3"};
  });
  add("fg-menarini-4", "menarini-4 has no BZ counterpart", false, [] {
    try {
      bz_of_modal(cat("menarini-4"));
      return FactOutcome{true, "translated"};
    } catch (const NotWeakLukasiewicz& e) {
      return FactOutcome{false, e.what()};
    }
  });
  add("D3-discriminator", "t realises the discriminator on D3", true, [] {
    const auto r = verify_discriminator(cat("D3"));
    return FactOutcome{r.realises && r.e_separates,
                       r.e_separates ? "e separates" : "e does not separate"};
  });
  add("D3-sum", "a (+) a = 1 in D3", true, [] {
    const auto& d3 = cat("D3");
    const Element a = d3.element("a");
    const Element v = truncated_sum_table(d3)[a * d3.size() + a];
    return FactOutcome{v == d3.top(), "a (+) a = " + d3.label(v)};
  });
  add("parse-star", "\"(x & x') ~ = x~ | x'~\" parses to (*)", true, [] {
    const Law l = parse_law("(x & x') ~ = x~ | x'~", S::BZ);
    return FactOutcome{l == named_equation("star"), print(l)};
  });
  add("parse-Q", "\"x <= y' , x' & y' <= x & y => x = y'\" parses to Q",
      true, [] {
        const Law l = parse_law("x <= y' , x' & y' <= x & y => x = y'", S::I);
        return FactOutcome{l == named_equation("Q"), print(l)};
      });
  add("SK-variables", "SK has two variables", true, [] {
    const auto n = usage(named_equation("SK")).variables;
    return FactOutcome{n == 2, std::to_string(n) + " variables"};
  });
  add("J0-J2", "J0 implies J2 on every catalog BZ-lattice", true, [] {
    FactOutcome out{true, "no counterexample"};
    for (const auto& e : catalog_entries()) {
      if (e.algebra.signature() != S::BZ) continue;
      if (law(e.algebra, "J0").observed && !law(e.algebra, "J2").observed) {
        out = {false, e.name + " satisfies J0 but not J2"};
      }
    }
    return out;
  });
  add("m-terms", "m(t,u) and m(u,t) differ only in the trailing term", true,
      [] {
        const Term t = parse_term("x | x'", S::BZ);
        const Term u = parse_term("y | y'", S::BZ);
        const MTerms m = build_m_terms(t, u, {{0}, {1}, {}});
        return FactOutcome{strip_tail(m.m_tu, t) == strip_tail(m.m_ut, u),
                           print(m.m_tu) + " vs " + print(m.m_ut)};
      });
  return f;
}

}  // namespace

const std::vector<Fact>& facts() {
  static const std::vector<Fact> all = build_facts();
  return all;
}

FactResult run_fact(const Fact& fact) {
  try {
    return {&fact, fact.run()};
  } catch (const std::exception& e) {
    return {&fact, {!fact.expected, std::string("error: ") + e.what()}};
  }
}

std::size_t report_facts(std::ostream& out, std::string_view id) {
  bool found = id.empty();
  std::size_t failures = 0;
  for (const auto& fact : facts()) {
    if (!id.empty() && fact.id != id) continue;
    found = true;
    const FactResult r = run_fact(fact);
    if (!r.pass()) ++failures;
    out << "FACT " << fact.id << ' ' << (r.pass() ? "PASS" : "FAIL") << " \""
        << fact.claim << "\" " << r.outcome.detail << '\n';
  }
  if (!found) throw UnknownName("unknown fact '" + std::string(id) + "'");
  return failures;
}

}  // namespace pbz

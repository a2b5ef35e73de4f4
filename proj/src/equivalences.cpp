#include "pbz/equivalences.hpp"

#include <algorithm>
#include <sstream>

namespace pbz {

namespace {

void require_bz(const FiniteAlgebra& algebra, std::string_view what) {
  if (algebra.signature() != Signature::BZ) {
    throw SignatureMismatch(algebra.name() + ": " + std::string(what) +
                            " needs signature BZ, got " +
                            std::string(to_string(algebra.signature())));
  }
}

struct StoneDef {
  const char* name;
  const char* parent;
  std::vector<const char*> conditions;
};

const std::vector<StoneDef>& stone_defs() {
  static const std::vector<StoneDef> defs = {
      {"quasi-Stone", nullptr, {"DIST", "QS1", "QS2", "QS3", "QS4", "QS5"}},
      {"Stone", "quasi-Stone", {"SDM"}},
      {"quasi-Stone-DeMorgan", "quasi-Stone", {"BCLOSED"}},
      {"Kleene-quasi-Stone", "quasi-Stone-DeMorgan", {"KLEENE"}},
      {"Kleene-Stone", "Kleene-quasi-Stone", {"SDM"}},
  };
  return defs;
}

struct ModalDef {
  const char* name;
  const char* parent;
  std::vector<const char*> laws;
};

const std::vector<ModalDef>& modal_defs() {
  static const std::vector<ModalDef> defs = {
      {"diamond-DeMorgan", nullptr, {"M1", "M2"}},
      {"topological-quasi-Boolean", "diamond-DeMorgan", {"M3", "M4"}},
      {"classical-diamond-DeMorgan", "topological-quasi-Boolean", {"M5"}},
      {"monadic-DeMorgan", "classical-diamond-DeMorgan", {"M6"}},
      {"weak-Lukasiewicz", "classical-diamond-DeMorgan", {"KLEENE", "M7"}},
      {"Lukasiewicz", "weak-Lukasiewicz", {"M9"}},
      {"three-valued-Lukasiewicz", "Lukasiewicz", {"M10"}},
      {"tetravalent-modal", "classical-diamond-DeMorgan", {"M10"}},
      {"involutive-Stone", "classical-diamond-DeMorgan", {"M9"}},
  };
  return defs;
}

Term parsed(std::string_view text) {
  return parse_term(text, Signature::BZ);
}

}  // namespace

ClassificationReport classify_stone(const FiniteAlgebra& algebra) {
  require_bz(algebra, "classify_stone");
  ClassificationReport report;
  for (const auto& def : stone_defs()) {
    ClassResult r{def.name, Verdict::Holds, std::nullopt};
    if (def.parent) {
      const ClassResult& parent = report.get(def.parent);
      r.verdict = parent.verdict;
      r.witness = parent.witness;
    }
    for (std::size_t i = 0; r.verdict == Verdict::Holds &&
                            i < def.conditions.size();
         ++i) {
      if (auto w = first_failure(algebra, condition(def.conditions[i]))) {
        r.verdict = Verdict::Fails;
        r.witness = std::move(w);
      }
    }
    report.classes.push_back(std::move(r));
  }
  return report;
}

const ModalClassResult& ModalClassReport::get(std::string_view name) const {
  for (const auto& c : classes) {
    if (c.name == name) return c;
  }
  throw UnknownName("unknown modal class '" + std::string(name) + "'");
}

bool ModalClassReport::respects_inclusions() const {
  for (const auto& def : modal_defs()) {
    if (def.parent && holds(def.name) && !holds(def.parent)) return false;
  }
  for (const char* sub :
       {"weak-Lukasiewicz", "tetravalent-modal", "involutive-Stone"}) {
    if (holds(sub) && !holds("monadic-DeMorgan")) return false;
  }
  return !holds("Lukasiewicz") || holds("involutive-Stone");
}

ModalClassReport classify_modal(const FiniteAlgebra& algebra) {
  if (algebra.signature() != Signature::Modal) {
    throw SignatureMismatch(algebra.name() +
                            ": classify_modal needs signature MODAL, got " +
                            std::string(to_string(algebra.signature())));
  }
  if (auto w = first_failure(algebra, condition("DIST"))) {
    throw NotDeMorgan(algebra.name() +
                      ": lattice is not distributive at " +
                      describe(algebra, *w));
  }
  ModalClassReport report;
  for (const auto& def : modal_defs()) {
    ModalClassResult r{def.name, true, std::nullopt};
    if (def.parent) {
      const ModalClassResult& parent = report.get(def.parent);
      r.holds = parent.holds;
      r.witness = parent.witness;
    }
    for (std::size_t i = 0; r.holds && i < def.laws.size(); ++i) {
      CheckResult c = check(algebra, named_equation(def.laws[i]));
      if (!c.holds()) {
        r.holds = false;
        r.witness = LawFailure{def.laws[i], *c.counterexample};
      }
    }
    report.classes.push_back(std::move(r));
  }
  return report;
}

std::string describe(const FiniteAlgebra& algebra, const LawFailure& failure) {
  std::ostringstream out;
  out << failure.law << " fails at ";
  const auto& a = failure.counterexample.assignment;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out << ", ";
    out << variable_name(i) << '=' << algebra.label(a[i]);
  }
  out << ": " << algebra.label(failure.counterexample.lhs)
      << " != " << algebra.label(failure.counterexample.rhs);
  return out.str();
}

FiniteAlgebra bz_of_modal(const FiniteAlgebra& algebra) {
  const ModalClassReport report = classify_modal(algebra);
  const ModalClassResult& wl = report.get("weak-Lukasiewicz");
  if (!wl.holds) {
    throw NotWeakLukasiewicz(algebra.name() + ": " +
                             describe(algebra, *wl.witness));
  }
  UnaryTable tilde(algebra.size());
  for (Element x = 0; x < algebra.size(); ++x) {
    tilde[x] = algebra.kleene(algebra.diamond(x));
  }
  return algebra.with_unary(UnaryOp::Brouwer, std::move(tilde), Signature::BZ)
      .renamed("bz(" + algebra.name() + ")");
}

FiniteAlgebra modal_of_bz(const FiniteAlgebra& algebra) {
  require_bz(algebra, "modal_of_bz");
  const ClassificationReport report = classify(algebra);
  for (const char* name : {"distributive", "PBZ*"}) {
    const ClassResult& r = report.get(name);
    if (r.verdict != Verdict::Holds) {
      throw NotDistributivePBZ(algebra.name() + ": not " + name + "; " +
                               r.witness->condition + " fails at " +
                               describe(algebra, *r.witness));
    }
  }
  UnaryTable dia(algebra.size());
  for (Element x = 0; x < algebra.size(); ++x) {
    dia[x] = algebra.brouwer(algebra.brouwer(x));
  }
  return algebra.with_unary(UnaryOp::Diamond, std::move(dia), Signature::Modal)
      .renamed("modal(" + algebra.name() + ")");
}

Term discriminator_e() {
  static const Term e = parsed(
      "x~ & dia(y) | y~ & dia(x) | box(x) & box(y)~ | box(y) & box(x)~");
  return e;
}

Term discriminator_t() {
  const Term e = discriminator_e();
  return Term::meet(Term::join(e, Term::var(2)),
                    Term::join(Term::kleene(e), Term::var(0)));
}

DiscriminatorReport verify_discriminator(const FiniteAlgebra& algebra) {
  require_bz(algebra, "verify_discriminator");
  const std::size_t n = algebra.size();
  const Evaluator e(algebra, discriminator_e());
  const Evaluator t(algebra, discriminator_t());
  DiscriminatorReport r{n, std::vector<Element>(n * n),
                        std::vector<Element>(n * n * n), true, true,
                        std::nullopt};
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const std::array<Element, 3> xy0 = {x, y, 0};
      const Element v = e(xy0);
      r.e[x * n + y] = v;
      if (v != (x == y ? algebra.bottom() : algebra.top())) {
        r.e_separates = false;
      }
      for (Element z = 0; z < n; ++z) {
        const std::array<Element, 3> xyz = {x, y, z};
        const Element w = t(xyz);
        r.t[(x * n + y) * n + z] = w;
        if (w != (x == y ? z : x) && r.realises) {
          r.realises = false;
          r.first_failure = xyz;
        }
      }
    }
  }
  return r;
}

Term truncated_sum() {
  static const Term sum = parsed("(x | dia(y)) & (y | dia(x))");
  return sum;
}

std::vector<Element> truncated_sum_table(const FiniteAlgebra& algebra) {
  require_bz(algebra, "truncated_sum_table");
  const std::size_t n = algebra.size();
  const Evaluator sum(algebra, truncated_sum());
  std::vector<Element> table(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const std::array<Element, 2> xy = {x, y};
      table[x * n + y] = sum(xy);
    }
  }
  return table;
}

}  // namespace pbz

#include "pbz/classify.hpp"

#include <algorithm>
#include <sstream>

namespace pbz {

namespace {

using Args = std::span<const Element>;
using A = FiniteAlgebra;

Element k(const A& m, Element x) { return m.kleene(x); }
Element b(const A& m, Element x) { return m.brouwer(x); }

std::vector<Condition> make_conditions() {
  const std::vector<UnaryOp> none;
  const std::vector<UnaryOp> inv = {UnaryOp::Kleene};
  const std::vector<UnaryOp> bz = {UnaryOp::Kleene, UnaryOp::Brouwer};
  return {
      {"DIST", 3, none, false,
       [](const A& m, Args v) {
         return m.meet(v[0], m.join(v[1], v[2])) ==
                m.join(m.meet(v[0], v[1]), m.meet(v[0], v[2]));
       }},
      {"MODULAR", 3, none, false,
       [](const A& m, Args v) {
         return !m.leq(v[0], v[2]) ||
                m.join(v[0], m.meet(v[1], v[2])) ==
                    m.meet(m.join(v[0], v[1]), v[2]);
       }},
      {"KLEENE", 2, inv, true,
       [](const A& m, Args v) {
         return m.leq(m.meet(v[0], k(m, v[0])), m.join(v[1], k(m, v[1])));
       }},
      {"ORTHO", 1, inv, true,
       [](const A& m, Args v) {
         return m.meet(v[0], k(m, v[0])) == m.bottom();
       }},
      {"OM", 2, inv, true,
       [](const A& m, Args v) {
         return !m.leq(v[0], v[1]) ||
                v[1] == m.join(m.meet(v[1], k(m, v[0])), v[0]);
       }},
      {"PARA", 2, inv, true,
       [](const A& m, Args v) {
         return !m.leq(v[0], v[1]) ||
                m.meet(k(m, v[0]), v[1]) != m.bottom() || v[0] == v[1];
       }},
      {"SHARP", 1, inv, true,
       [](const A& m, Args v) {
         return m.join(v[0], k(m, v[0])) != m.top() || v[0] == m.bottom() ||
                v[0] == m.top();
       }},
      {"STAR", 1, bz, true,
       [](const A& m, Args v) {
         const Element x = v[0];
         return b(m, m.meet(x, k(m, x))) == m.join(b(m, x), b(m, k(m, x)));
       }},
      {"SDM", 2, bz, true,
       [](const A& m, Args v) {
         return b(m, m.meet(v[0], v[1])) == m.join(b(m, v[0]), b(m, v[1]));
       }},
      {"QS1", 0, bz, true,
       [](const A& m, Args) {
         return b(m, m.bottom()) == m.top() && b(m, m.top()) == m.bottom();
       }},
      {"QS2", 2, bz, true,
       [](const A& m, Args v) {
         return b(m, m.join(v[0], v[1])) == m.meet(b(m, v[0]), b(m, v[1]));
       }},
      {"QS3", 2, bz, true,
       [](const A& m, Args v) {
         return b(m, m.meet(v[0], b(m, v[1]))) ==
                m.join(b(m, v[0]), b(m, b(m, v[1])));
       }},
      {"QS4", 1, bz, true,
       [](const A& m, Args v) { return m.leq(v[0], b(m, b(m, v[0]))); }},
      {"QS5", 1, bz, true,
       [](const A& m, Args v) {
         return m.join(b(m, v[0]), b(m, b(m, v[0]))) == m.top();
       }},
      {"BCLOSED", 1, bz, true,
       [](const A& m, Args v) {
         const Element x = v[0];
         return b(m, b(m, x)) != x || b(m, b(m, k(m, x))) == k(m, x);
       }},
  };
}

struct ClassDef {
  std::string name;
  std::vector<UnaryOp> needs;
  bool needs_bounds;
  std::vector<std::string> conditions;
};

const std::vector<ClassDef>& class_defs() {
  static const std::vector<ClassDef> defs = [] {
    const std::vector<UnaryOp> inv = {UnaryOp::Kleene};
    const std::vector<UnaryOp> bz = {UnaryOp::Kleene, UnaryOp::Brouwer};
    return std::vector<ClassDef>{
        {"lattice", {}, false, {}},
        {"distributive", {}, false, {"DIST"}},
        {"modular", {}, false, {"MODULAR"}},
        {"BI-lattice", inv, true, {}},
        {"De Morgan", inv, true, {"DIST"}},
        {"pseudo-Kleene", inv, true, {"KLEENE"}},
        {"Kleene", inv, true, {"DIST", "KLEENE"}},
        {"ortholattice", inv, true, {"ORTHO"}},
        {"orthomodular", inv, true, {"ORTHO", "OM"}},
        {"paraorthomodular", inv, true, {"PARA"}},
        {"BZ-lattice", bz, true, {"KLEENE"}},
        {"star", bz, true, {"STAR"}},
        {"SDM", bz, true, {"SDM"}},
        {"PBZ*", bz, true, {"KLEENE", "PARA", "STAR"}},
        {"antiortholattice", bz, true, {"KLEENE", "PARA", "STAR", "SHARP"}},
    };
  }();
  return defs;
}

bool needs_met(const FiniteAlgebra& algebra, const std::vector<UnaryOp>& needs,
               bool needs_bounds) {
  if (needs_bounds && !algebra.has_bounds()) return false;
  return std::all_of(needs.begin(), needs.end(),
                     [&](UnaryOp op) { return algebra.has(op); });
}

void require(const FiniteAlgebra& algebra, UnaryOp op, std::string_view what) {
  if (!algebra.has(op) || !algebra.has_bounds()) {
    throw SignatureMismatch(algebra.name() + ": " + std::string(what) +
                            " needs signature with bounds and " +
                            std::string(to_string(op)));
  }
}

}  // namespace

bool Condition::applicable(const FiniteAlgebra& algebra) const {
  return needs_met(algebra, needs, needs_bounds);
}

const std::vector<Condition>& conditions() {
  static const std::vector<Condition> all = make_conditions();
  return all;
}

const Condition& condition(std::string_view name) {
  for (const auto& c : conditions()) {
    if (c.name == name) return c;
  }
  throw UnknownName("unknown condition '" + std::string(name) + "'");
}

bool Witness::reproduces(const FiniteAlgebra& algebra) const {
  const Condition& c = pbz::condition(condition);
  if (assignment.size() != c.arity) return false;
  return !c.holds(algebra, assignment);
}

std::optional<Witness> first_failure(const FiniteAlgebra& algebra,
                                     const Condition& cond) {
  if (!cond.applicable(algebra)) {
    throw SignatureMismatch(algebra.name() + ": condition " + cond.name +
                            " does not apply to signature " +
                            std::string(to_string(algebra.signature())));
  }
  const std::size_t n = algebra.size();
  std::vector<Element> v(cond.arity, 0);
  while (true) {
    if (!cond.holds(algebra, v)) return Witness{cond.name, v};
    std::size_t i = v.size();
    while (i > 0 && ++v[i - 1] == n) v[--i] = 0;
    if (i == 0) return std::nullopt;
  }
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "holds";
    case Verdict::Fails:
      return "fails";
    case Verdict::NotApplicable:
      return "n/a";
  }
  return "?";
}

const ClassResult& ClassificationReport::get(std::string_view name) const {
  for (const auto& c : classes) {
    if (c.name == name) return c;
  }
  throw UnknownName("unknown class '" + std::string(name) + "'");
}

ClassificationReport classify(const FiniteAlgebra& algebra) {
  ClassificationReport report;
  for (const auto& def : class_defs()) {
    ClassResult r{def.name, Verdict::Holds, std::nullopt};
    if (!needs_met(algebra, def.needs, def.needs_bounds)) {
      r.verdict = Verdict::NotApplicable;
    } else {
      for (const auto& name : def.conditions) {
        if (auto w = first_failure(algebra, condition(name))) {
          r.verdict = Verdict::Fails;
          r.witness = std::move(w);
          break;
        }
      }
    }
    report.classes.push_back(std::move(r));
  }
  return report;
}

ElementSet sharp_elements(const FiniteAlgebra& algebra) {
  require(algebra, UnaryOp::Kleene, "sharp_elements");
  ElementSet out;
  for (Element x = 0; x < algebra.size(); ++x) {
    if (algebra.join(x, algebra.kleene(x)) == algebra.top()) out.push_back(x);
  }
  return out;
}

ElementSet dense_elements(const FiniteAlgebra& algebra) {
  require(algebra, UnaryOp::Brouwer, "dense_elements");
  ElementSet out;
  for (Element x = 0; x < algebra.size(); ++x) {
    if (algebra.brouwer(x) == algebra.bottom()) out.push_back(x);
  }
  return out;
}

UnaryTable trivial_brouwer_table(const FiniteAlgebra& algebra) {
  UnaryTable t(algebra.size(), algebra.order_bottom());
  t[algebra.order_bottom()] = algebra.order_top();
  return t;
}

bool has_trivial_brouwer(const FiniteAlgebra& algebra) {
  return algebra.has(UnaryOp::Brouwer) &&
         algebra.table(UnaryOp::Brouwer) == trivial_brouwer_table(algebra);
}

FiniteAlgebra trivial_brouwer_extension(const FiniteAlgebra& algebra) {
  if (algebra.signature() != Signature::BI) {
    throw SignatureMismatch(algebra.name() +
                            ": trivial Brouwer extension needs signature BI");
  }
  for (const char* name : {"KLEENE", "PARA", "SHARP"}) {
    if (auto w = first_failure(algebra, condition(name))) {
      throw PreconditionFailed(algebra.name() + ": condition " + name +
                               " fails at " + describe(algebra, *w));
    }
  }
  return algebra.with_unary(UnaryOp::Brouwer, trivial_brouwer_table(algebra),
                            Signature::BZ);
}

std::optional<Witness> quasi_stone_failure(const FiniteAlgebra& algebra) {
  for (const char* name : {"DIST", "QS1", "QS2", "QS3", "QS4", "QS5"}) {
    if (auto w = first_failure(algebra, condition(name))) return w;
  }
  return std::nullopt;
}

ElementSet boolean_kernel(const FiniteAlgebra& algebra) {
  require(algebra, UnaryOp::Brouwer, "boolean_kernel");
  if (auto w = quasi_stone_failure(algebra)) {
    throw NotQuasiStone(algebra.name() + ": " + w->condition + " fails at " +
                        describe(algebra, *w));
  }
  ElementSet image;
  ElementSet regular;
  for (Element x = 0; x < algebra.size(); ++x) {
    image.push_back(algebra.brouwer(x));
    if (algebra.brouwer(algebra.brouwer(x)) == x) regular.push_back(x);
  }
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());

  auto member = [&](Element x) {
    return std::binary_search(image.begin(), image.end(), x);
  };
  bool ok = image == regular && member(algebra.bottom()) &&
            member(algebra.top());
  for (Element x : image) {
    const Element c = algebra.brouwer(x);
    ok = ok && member(c) && algebra.meet(x, c) == algebra.bottom() &&
         algebra.join(x, c) == algebra.top();
    for (Element y : image) {
      ok = ok && member(algebra.meet(x, y)) && member(algebra.join(x, y));
    }
  }
  if (!ok) {
    throw Error(algebra.name() +
                ": image of ~ is not a Boolean subuniverse of a quasi-Stone "
                "algebra");
  }
  return image;
}

std::string describe(const FiniteAlgebra& algebra, const Witness& witness) {
  static const char* const names[] = {"x", "y", "z", "w"};
  if (witness.assignment.empty()) return "constants";
  std::ostringstream out;
  for (std::size_t i = 0; i < witness.assignment.size(); ++i) {
    if (i) out << ", ";
    out << (i < 4 ? names[i] : "x" + std::to_string(i - 3)) << '='
        << algebra.label(witness.assignment[i]);
  }
  return out.str();
}

}  // namespace pbz

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pbz/algebra.hpp"

namespace pbz {

using ElementSet = std::vector<Element>;  // sorted ascending

// A first-order condition over `arity` elements, checked exhaustively.
struct Condition {
  std::string name;
  std::size_t arity;
  std::vector<UnaryOp> needs;
  bool needs_bounds;
  std::function<bool(const FiniteAlgebra&, std::span<const Element>)> holds;

  bool applicable(const FiniteAlgebra& algebra) const;
};

// DIST, MODULAR, KLEENE, ORTHO, OM, PARA, SHARP, STAR, SDM, QS1..QS5 and
// BCLOSED (x = x~~ implies x' = x'~~). Throws UnknownName.
const Condition& condition(std::string_view name);
const std::vector<Condition>& conditions();

struct Witness {
  std::string condition;
  std::vector<Element> assignment;

  // True when re-evaluating the condition at the assignment still fails.
  bool reproduces(const FiniteAlgebra& algebra) const;
};

// First failing assignment in lexicographic order, or nullopt.
std::optional<Witness> first_failure(const FiniteAlgebra& algebra,
                                     const Condition& cond);

enum class Verdict { Holds, Fails, NotApplicable };
std::string_view to_string(Verdict v);

struct ClassResult {
  std::string name;
  Verdict verdict;
  std::optional<Witness> witness;  // set iff verdict == Fails
};

struct ClassificationReport {
  std::vector<ClassResult> classes;

  // Throw UnknownName for unknown class names.
  const ClassResult& get(std::string_view name) const;
  Verdict verdict(std::string_view name) const { return get(name).verdict; }
  bool holds(std::string_view name) const {
    return verdict(name) == Verdict::Holds;
  }
};

// Class names, in report order: lattice, distributive, modular, BI-lattice,
// De Morgan, pseudo-Kleene, Kleene, ortholattice, orthomodular,
// paraorthomodular, BZ-lattice, star, SDM, PBZ*, antiortholattice.
ClassificationReport classify(const FiniteAlgebra& algebra);

// Elements with x | x' = 1. Throws SignatureMismatch.
ElementSet sharp_elements(const FiniteAlgebra& algebra);
// Elements with x~ = 0. Throws SignatureMismatch.
ElementSet dense_elements(const FiniteAlgebra& algebra);

// 0~ = 1 and x~ = 0 for every other x.
UnaryTable trivial_brouwer_table(const FiniteAlgebra& algebra);
bool has_trivial_brouwer(const FiniteAlgebra& algebra);

// Attaches the trivial Brouwer complement to a paraorthomodular pseudo-Kleene
// BI-lattice without nontrivial sharp elements. Throws SignatureMismatch
// unless the signature is BI, PreconditionFailed otherwise.
FiniteAlgebra trivial_brouwer_extension(const FiniteAlgebra& algebra);

// Distributivity followed by QS1..QS5; nullopt when all hold.
std::optional<Witness> quasi_stone_failure(const FiniteAlgebra& algebra);

// Image of ~ on a quasi-Stone algebra. Throws NotQuasiStone.
ElementSet boolean_kernel(const FiniteAlgebra& algebra);

// Renders an assignment as "x=a, y=b" using element labels.
std::string describe(const FiniteAlgebra& algebra, const Witness& witness);

}  // namespace pbz

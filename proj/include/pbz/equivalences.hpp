#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pbz/algebra.hpp"
#include "pbz/classify.hpp"
#include "pbz/terms.hpp"

namespace pbz {

// Classes, in report order: quasi-Stone, Stone, quasi-Stone-DeMorgan,
// Kleene-quasi-Stone, Kleene-Stone. ~ plays the quasi-Stone operation.
// Throws SignatureMismatch unless the algebra has signature BZ.
ClassificationReport classify_stone(const FiniteAlgebra& algebra);

struct LawFailure {
  std::string law;
  Counterexample counterexample;
};

struct ModalClassResult {
  std::string name;
  bool holds;
  std::optional<LawFailure> witness;  // set iff !holds
};

struct ModalClassReport {
  std::vector<ModalClassResult> classes;

  // Throws UnknownName.
  const ModalClassResult& get(std::string_view name) const;
  bool holds(std::string_view name) const { return get(name).holds; }
  // Inclusions between the classes, including the three that are theorems
  // rather than definitions: weak-Lukasiewicz, tetravalent-modal and
  // involutive-Stone algebras are monadic-DeMorgan.
  bool respects_inclusions() const;
};

// Classes, in report order: diamond-DeMorgan, topological-quasi-Boolean,
// classical-diamond-DeMorgan, monadic-DeMorgan, weak-Lukasiewicz,
// Lukasiewicz, three-valued-Lukasiewicz, tetravalent-modal,
// involutive-Stone. Throws SignatureMismatch unless the signature is MODAL,
// NotDeMorgan when the lattice is not distributive.
ModalClassReport classify_modal(const FiniteAlgebra& algebra);

// "M10 fails at x=a: 0 != a'" with element labels.
std::string describe(const FiniteAlgebra& algebra, const LawFailure& failure);

// Same carrier with x~ = (dia x)'. Throws NotWeakLukasiewicz.
FiniteAlgebra bz_of_modal(const FiniteAlgebra& algebra);
// Same carrier with dia x = x~~. Throws NotDistributivePBZ.
FiniteAlgebra modal_of_bz(const FiniteAlgebra& algebra);

// e(x,y) = x~ & dia(y) | y~ & dia(x) | box(x) & box(y)~ | box(y) & box(x)~
// t(x,y,z) = (e(x,y) | z) & (e(x,y)' | x)
Term discriminator_e();
Term discriminator_t();

struct DiscriminatorReport {
  std::size_t size;
  std::vector<Element> e;  // e[x*n + y]
  std::vector<Element> t;  // t[(x*n + y)*n + z]
  // e(a,a) = 0 and e(a,b) = 1 for a != b.
  bool e_separates;
  // t(a,b,c) = c when a = b, a otherwise.
  bool realises;
  std::optional<std::array<Element, 3>> first_failure;
};

// Throws SignatureMismatch unless the signature is BZ.
DiscriminatorReport verify_discriminator(const FiniteAlgebra& algebra);

// (x | dia(y)) & (y | dia(x)) as a row-major table. Throws
// SignatureMismatch unless the signature is BZ.
Term truncated_sum();
std::vector<Element> truncated_sum_table(const FiniteAlgebra& algebra);

}  // namespace pbz

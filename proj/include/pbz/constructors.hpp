#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "pbz/algebra.hpp"

namespace pbz {

// n-element chain with x' = n-1-x and the trivial Brouwer complement.
// Labels: 0, then a, b, ... for the lower half, a self-dual middle letter
// when n is odd, the primed lower letters in reverse, then 1.
FiniteAlgebra chain(std::size_t n);

// Reversed order; unary operations are dropped (signature LAT).
FiniteAlgebra dual(const FiniteAlgebra& algebra);

// Stacks `upper` on `lower`, gluing lower's top to upper's bottom. Elements
// are lower minus its top ("L:x"), then all of upper ("M:x"). Signature LAT.
FiniteAlgebra ordinal_sum(const FiniteAlgebra& lower,
                          const FiniteAlgebra& upper);

// L (+) K (+) L^d with K's involution in the middle and L:x <-> Ld:x outside.
// Elements: L minus top ("L:x"), K ("K:x"), then L minus top reversed
// ("Ld:x"). Signature BI. Throws PreconditionFailed when L is trivial,
// SignatureMismatch when K lacks a bounded involution.
FiniteAlgebra symmetric_extension(const FiniteAlgebra& lower,
                                  const FiniteAlgebra& middle);

// Componentwise structure on pairs "(l,r)", ordered with the left factor
// most significant. Throws SignatureMismatch on differing signatures.
FiniteAlgebra direct_product(const FiniteAlgebra& left,
                             const FiniteAlgebra& right);

// 0, 1 and k incomparable pairs of atoms a, a', b, b', ... with x~ = x'.
FiniteAlgebra horizontal_sum_mo(std::size_t k);

// Every Brouwer table on the BI-reduct of `algebra` that satisfies the BZ
// axioms and agrees with `fixed`. Stops after `limit` tables.
std::vector<UnaryTable> brouwer_completions(
    const FiniteAlgebra& algebra, const std::map<Element, Element>& fixed,
    std::size_t limit = 64);

struct CatalogEntry {
  std::string name;
  FiniteAlgebra algebra;
  std::string provenance;
};

// Entries in a fixed order. Built once.
const std::vector<CatalogEntry>& catalog_entries();
// Throws UnknownName.
const FiniteAlgebra& catalog(std::string_view name);
std::vector<std::string> catalog_names();

// The Brouwer values of H read off its diagram, by label.
std::map<std::string, std::string> h_labeled_brouwer();

}  // namespace pbz

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pbz/algebra.hpp"
#include "pbz/classify.hpp"

namespace pbz {

// Least subset containing `seed` closed under meet, join, the unary
// operations of `signature` and, for bounded signatures, the constants.
ElementSet subuniverse_closure(const FiniteAlgebra& algebra,
                               const ElementSet& seed, Signature signature);

// Image of each source element in the target.
struct ElementMap {
  std::string source;
  std::string target;
  std::vector<Element> image;

  bool operator==(const ElementMap& other) const = default;
};

// True when `image` is injective and preserves meet, join, the unary
// operations of `signature` and, for bounded signatures, 0 and 1.
bool is_embedding(const FiniteAlgebra& pattern, const FiniteAlgebra& target,
                  const std::vector<Element>& image, Signature signature);

// Backtracking search for an embedding of `pattern` into `target`. Both
// algebras must carry the operations of `signature` (SignatureMismatch).
std::optional<ElementMap> find_embedding(const FiniteAlgebra& pattern,
                                         const FiniteAlgebra& target,
                                         Signature signature);
std::optional<ElementMap> find_isomorphism(const FiniteAlgebra& a,
                                           const FiniteAlgebra& b,
                                           Signature signature);

// "0->0, a->c, ..." with source and target labels.
std::string describe(const FiniteAlgebra& source, const FiniteAlgebra& target,
                     const ElementMap& map);

// An equivalence on 0..n-1. Blocks are numbered by their least element, so
// equal partitions compare equal.
class Partition {
 public:
  explicit Partition(std::vector<std::size_t> block_of);
  static Partition identity(std::size_t n);
  static Partition total(std::size_t n);

  std::size_t size() const noexcept { return block_of_.size(); }
  std::size_t block_count() const noexcept { return block_count_; }
  std::size_t block(Element x) const { return block_of_.at(x); }
  bool related(Element x, Element y) const { return block(x) == block(y); }
  // Blocks in order of their least element, each sorted ascending.
  std::vector<ElementSet> blocks() const;

  bool is_identity() const noexcept { return block_count_ == size(); }
  bool is_total() const noexcept { return block_count_ == 1; }
  // Every block of this partition lies inside a block of `other`.
  bool refines(const Partition& other) const;

  Partition meet(const Partition& other) const;
  Partition join(const Partition& other) const;

  bool operator==(const Partition& other) const = default;

 private:
  std::vector<std::size_t> block_of_;
  std::size_t block_count_;
};

// Parses "0;a;c,e;b,d" with labels of `algebra`; labels may themselves
// contain commas. Every element must appear exactly once (ParseError).
Partition parse_partition(const FiniteAlgebra& algebra, std::string_view text);
std::string format_partition(const FiniteAlgebra& algebra, const Partition& p);

// Compatibility with meet, join and the unary operations of `signature`.
bool is_congruence(const FiniteAlgebra& algebra, const Partition& p,
                   Signature signature);

// Least congruence relating x and y.
Partition principal_congruence(const FiniteAlgebra& algebra, Element x,
                               Element y, Signature signature);

// Least congruence containing `p`.
Partition congruence_closure(const FiniteAlgebra& algebra, const Partition& p,
                             Signature signature);

struct Congruence {
  Partition partition;
  // The classes of the order bottom and top are singletons.
  bool constants_singleton;
};

inline constexpr std::size_t kMaxCongruenceSize = 16;

// Every congruence, finest first (more blocks first, then by block vector).
// Throws CapExceeded above kMaxCongruenceSize elements.
std::vector<Congruence> all_congruences(const FiniteAlgebra& algebra,
                                        Signature signature);

// Block algebra labelled by each block's least element. Throws
// NotACongruence.
FiniteAlgebra quotient(const FiniteAlgebra& algebra, const Partition& p,
                       Signature signature);

// Least non-identity congruence, when the non-identity congruences have a
// non-identity intersection. Throws CapExceeded.
std::optional<Partition> monolith(const FiniteAlgebra& algebra,
                                  Signature signature);
// Nontrivial with a monolith. Throws CapExceeded.
bool is_subdirectly_irreducible(const FiniteAlgebra& algebra,
                                Signature signature);

}  // namespace pbz

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pbz/errors.hpp"

namespace pbz {

// Elements of a finite algebra are dense indices 0..n-1.
using Element = std::size_t;

// Lattice:  bounded lattice, no unary operation.
// I:        lattice with involution ', no constants.
// BI:       bounded involution lattice.
// BZ:       BI plus the Brouwer complement ~.
// Modal:    BI plus the possibility operator dia.
enum class Signature { Lattice, I, BI, BZ, Modal };

enum class UnaryOp { Kleene, Brouwer, Diamond };

inline constexpr std::array<UnaryOp, 3> kUnaryOps = {
    UnaryOp::Kleene, UnaryOp::Brouwer, UnaryOp::Diamond};

std::string_view to_string(Signature sig);
std::string_view to_string(UnaryOp op);
Signature parse_signature(std::string_view text);

bool signature_has(Signature sig, UnaryOp op);
bool signature_has_bounds(Signature sig);

// True when every operation of `inner` is also an operation of `outer`.
bool signature_within(Signature inner, Signature outer);

using UnaryTable = std::vector<Element>;

// A finite lattice-ordered algebra. The order relation is the primary data;
// meet and join tables are derived once at construction. Values are
// immutable after construction.
class FiniteAlgebra {
 public:
  struct Tables {
    std::optional<UnaryTable> kleene;
    std::optional<UnaryTable> brouwer;
    std::optional<UnaryTable> diamond;
  };

  // Validates every structural invariant; throws MalformedAlgebra.
  // `order` is row-major n*n, order[x*n+y] != 0 iff x <= y.
  FiniteAlgebra(std::string name, std::vector<std::string> labels,
                std::vector<char> order, Signature signature, Tables tables);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return labels_.size(); }
  Signature signature() const noexcept { return signature_; }

  const std::string& label(Element x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Element> find(std::string_view label) const;
  // Throws UnknownName.
  Element element(std::string_view label) const;

  bool leq(Element x, Element y) const { return order_[x * size() + y] != 0; }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  Element meet(Element x, Element y) const { return meet_[x * size() + y]; }
  Element join(Element x, Element y) const { return join_[x * size() + y]; }

  bool has_bounds() const noexcept { return signature_has_bounds(signature_); }
  // Throw SignatureMismatch for signature I.
  Element bottom() const;
  Element top() const;
  // Least and greatest elements of the order regardless of signature.
  Element order_bottom() const noexcept { return bottom_; }
  Element order_top() const noexcept { return top_; }

  bool has(UnaryOp op) const noexcept;
  // Throws SignatureMismatch when the table is absent.
  const UnaryTable& table(UnaryOp op) const;
  Element apply(UnaryOp op, Element x) const { return table(op)[x]; }
  Element kleene(Element x) const { return apply(UnaryOp::Kleene, x); }
  Element brouwer(Element x) const { return apply(UnaryOp::Brouwer, x); }
  Element diamond(Element x) const { return apply(UnaryOp::Diamond, x); }

  // Upper covers of x, in element order.
  std::vector<Element> covers(Element x) const;

  // Drops every operation the target signature lacks. Throws
  // SignatureMismatch when the target needs an operation this algebra lacks.
  FiniteAlgebra reduct(Signature target) const;
  // Replaces or adds a unary table and retags the signature.
  FiniteAlgebra with_unary(UnaryOp op, UnaryTable table,
                           Signature signature) const;
  FiniteAlgebra renamed(std::string name) const;
  FiniteAlgebra relabeled(std::vector<std::string> labels) const;

  const std::vector<char>& order_matrix() const noexcept { return order_; }
  const Tables& tables() const noexcept { return tables_; }

  // Same carrier, order, labels, signature and tables; the name is ignored.
  bool same_structure(const FiniteAlgebra& other) const;
  bool operator==(const FiniteAlgebra& other) const;

 private:
  void validate_order() const;
  void derive_bounds();
  void validate_unary() const;

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<char> order_;
  Signature signature_;
  Tables tables_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  Element bottom_ = 0;
  Element top_ = 0;
};

struct Bounds {
  Element meet;
  Element join;
};

// Greatest lower and least upper bound of x and y.
Bounds bounds(const FiniteAlgebra& algebra, Element x, Element y);

// Computes glb/lub directly from an order matrix; throws MalformedAlgebra
// when either bound is missing, which signals the order is not a lattice.
Bounds bounds_from_order(const std::vector<char>& order, std::size_t n,
                         Element x, Element y);

// Assembles algebras from Hasse-diagram data: labels, upper covers and
// labeled unary values. Used by the catalog and the file loader.
class AlgebraBuilder {
 public:
  AlgebraBuilder(std::string name, Signature signature);

  AlgebraBuilder& elements(std::vector<std::string> labels);
  AlgebraBuilder& covers(std::string_view lower,
                         const std::vector<std::string>& uppers);
  // Both directions are recorded: x' = y and y' = x.
  AlgebraBuilder& involution(std::string_view x, std::string_view y);
  AlgebraBuilder& unary(UnaryOp op, std::string_view x, std::string_view y);
  // Value used for every element without an explicit entry.
  AlgebraBuilder& unary_default(UnaryOp op, std::string_view y);

  FiniteAlgebra build() const;

 private:
  Element index(std::string_view label) const;

  std::string name_;
  Signature signature_;
  std::vector<std::string> labels_;
  std::vector<std::pair<Element, Element>> covers_;
  std::array<std::vector<std::optional<Element>>, 3> unary_;
  std::array<std::optional<Element>, 3> defaults_;
  std::array<bool, 3> touched_{};
};

}  // namespace pbz

#include "pbz/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace pbz {

namespace {

std::size_t op_slot(UnaryOp op) { return static_cast<std::size_t>(op); }

std::optional<UnaryTable>& slot(FiniteAlgebra::Tables& tables, UnaryOp op) {
  switch (op) {
    case UnaryOp::Kleene:
      return tables.kleene;
    case UnaryOp::Brouwer:
      return tables.brouwer;
    case UnaryOp::Diamond:
      return tables.diamond;
  }
  return tables.kleene;
}

const std::optional<UnaryTable>& slot(const FiniteAlgebra::Tables& tables,
                                      UnaryOp op) {
  return slot(const_cast<FiniteAlgebra::Tables&>(tables), op);
}

}  // namespace

std::string_view to_string(Signature sig) {
  switch (sig) {
    case Signature::Lattice:
      return "LAT";
    case Signature::I:
      return "I";
    case Signature::BI:
      return "BI";
    case Signature::BZ:
      return "BZ";
    case Signature::Modal:
      return "MODAL";
  }
  return "?";
}

std::string_view to_string(UnaryOp op) {
  switch (op) {
    case UnaryOp::Kleene:
      return "'";
    case UnaryOp::Brouwer:
      return "~";
    case UnaryOp::Diamond:
      return "dia";
  }
  return "?";
}

Signature parse_signature(std::string_view text) {
  if (text == "LAT") return Signature::Lattice;
  if (text == "I") return Signature::I;
  if (text == "BI") return Signature::BI;
  if (text == "BZ") return Signature::BZ;
  if (text == "MODAL") return Signature::Modal;
  throw UnknownName("unknown signature '" + std::string(text) + "'");
}

bool signature_has(Signature sig, UnaryOp op) {
  switch (op) {
    case UnaryOp::Kleene:
      return sig != Signature::Lattice;
    case UnaryOp::Brouwer:
      return sig == Signature::BZ;
    case UnaryOp::Diamond:
      return sig == Signature::Modal;
  }
  return false;
}

bool signature_has_bounds(Signature sig) { return sig != Signature::I; }

bool signature_within(Signature inner, Signature outer) {
  for (UnaryOp op : kUnaryOps) {
    if (signature_has(inner, op) && !signature_has(outer, op)) return false;
  }
  return !signature_has_bounds(inner) || signature_has_bounds(outer);
}

Bounds bounds_from_order(const std::vector<char>& order, std::size_t n,
                         Element x, Element y) {
  auto le = [&](Element a, Element b) { return order[a * n + b] != 0; };
  std::optional<Element> glb;
  std::optional<Element> lub;
  for (Element z = 0; z < n; ++z) {
    if (le(z, x) && le(z, y)) {
      bool greatest = true;
      for (Element w = 0; w < n && greatest; ++w) {
        if (le(w, x) && le(w, y) && !le(w, z)) greatest = false;
      }
      if (greatest) glb = z;
    }
    if (le(x, z) && le(y, z)) {
      bool least = true;
      for (Element w = 0; w < n && least; ++w) {
        if (le(x, w) && le(y, w) && !le(z, w)) least = false;
      }
      if (least) lub = z;
    }
  }
  if (!glb || !lub) {
    std::ostringstream msg;
    msg << "elements " << x << " and " << y << " have no "
        << (!glb ? "greatest lower bound" : "least upper bound");
    throw MalformedAlgebra(msg.str());
  }
  return {*glb, *lub};
}

FiniteAlgebra::FiniteAlgebra(std::string name, std::vector<std::string> labels,
                             std::vector<char> order, Signature signature,
                             Tables tables)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      order_(std::move(order)),
      signature_(signature),
      tables_(std::move(tables)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw MalformedAlgebra(name_ + ": empty universe");
  if (order_.size() != n * n) {
    throw MalformedAlgebra(name_ + ": order matrix has wrong dimensions");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (labels_[i] == labels_[j]) {
        throw MalformedAlgebra(name_ + ": duplicate label '" + labels_[i] +
                               "'");
      }
    }
  }
  validate_order();
  meet_.resize(n * n);
  join_.resize(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      Bounds b;
      try {
        b = bounds_from_order(order_, n, x, y);
      } catch (const MalformedAlgebra&) {
        throw MalformedAlgebra(name_ + ": '" + labels_[x] + "' and '" +
                               labels_[y] +
                               "' lack a unique meet or join; not a lattice");
      }
      meet_[x * n + y] = meet_[y * n + x] = b.meet;
      join_[x * n + y] = join_[y * n + x] = b.join;
    }
  }
  derive_bounds();
  validate_unary();
}

void FiniteAlgebra::validate_order() const {
  const std::size_t n = size();
  for (Element x = 0; x < n; ++x) {
    if (!leq(x, x)) {
      throw MalformedAlgebra(name_ + ": order is not reflexive at '" +
                             labels_[x] + "'");
    }
    for (Element y = 0; y < n; ++y) {
      if (x != y && leq(x, y) && leq(y, x)) {
        throw MalformedAlgebra(name_ + ": order is not antisymmetric on '" +
                               labels_[x] + "', '" + labels_[y] + "'");
      }
      if (!leq(x, y)) continue;
      for (Element z = 0; z < n; ++z) {
        if (leq(y, z) && !leq(x, z)) {
          throw MalformedAlgebra(name_ + ": order is not transitive at '" +
                                 labels_[x] + "' <= '" + labels_[y] +
                                 "' <= '" + labels_[z] + "'");
        }
      }
    }
  }
}

void FiniteAlgebra::derive_bounds() {
  Element lo = 0;
  Element hi = 0;
  for (Element x = 1; x < size(); ++x) {
    lo = meet(lo, x);
    hi = join(hi, x);
  }
  bottom_ = lo;
  top_ = hi;
}

void FiniteAlgebra::validate_unary() const {
  const std::size_t n = size();
  for (UnaryOp op : kUnaryOps) {
    const auto& t = slot(tables_, op);
    if (signature_has(signature_, op) != t.has_value()) {
      throw MalformedAlgebra(name_ + ": signature " +
                             std::string(to_string(signature_)) +
                             (t ? " does not allow " : " requires ") +
                             "operation " + std::string(to_string(op)));
    }
    if (!t) continue;
    if (t->size() != n) {
      throw MalformedAlgebra(name_ + ": table for " +
                             std::string(to_string(op)) + " is not total");
    }
    for (Element v : *t) {
      if (v >= n) {
        throw MalformedAlgebra(name_ + ": table for " +
                               std::string(to_string(op)) +
                               " leaves the universe");
      }
    }
  }
  auto fail = [&](const std::string& what, Element x, Element y) {
    throw MalformedAlgebra(name_ + ": " + what + " (at '" + labels_[x] +
                           "', '" + labels_[y] + "')");
  };
  if (tables_.kleene) {
    const auto& k = *tables_.kleene;
    for (Element x = 0; x < n; ++x) {
      if (k[k[x]] != x) fail("involution is not idempotent: x'' != x", x, x);
      for (Element y = 0; y < n; ++y) {
        if (leq(x, y) && !leq(k[y], k[x])) {
          fail("involution is not order-reversing", x, y);
        }
      }
    }
  }
  if (tables_.brouwer) {
    const auto& b = *tables_.brouwer;
    const auto& k = *tables_.kleene;
    for (Element x = 0; x < n; ++x) {
      if (meet(x, b[x]) != bottom_) fail("Brouwer axiom x & x~ = 0 fails", x, x);
      if (!leq(x, b[b[x]])) fail("Brouwer axiom x <= x~~ fails", x, x);
      if (b[b[x]] != k[b[x]]) fail("Brouwer axiom x~~ = x~' fails", x, x);
      for (Element y = 0; y < n; ++y) {
        if (leq(x, y) && !leq(b[y], b[x])) {
          fail("Brouwer complement is not order-reversing", x, y);
        }
      }
    }
  }
}

std::optional<Element> FiniteAlgebra::find(std::string_view label) const {
  for (Element x = 0; x < size(); ++x) {
    if (labels_[x] == label) return x;
  }
  return std::nullopt;
}

Element FiniteAlgebra::element(std::string_view label) const {
  if (auto x = find(label)) return *x;
  throw UnknownName(name_ + ": no element labeled '" + std::string(label) +
                    "'");
}

Element FiniteAlgebra::bottom() const {
  if (!has_bounds()) {
    throw SignatureMismatch(name_ + ": signature I has no constant 0");
  }
  return bottom_;
}

Element FiniteAlgebra::top() const {
  if (!has_bounds()) {
    throw SignatureMismatch(name_ + ": signature I has no constant 1");
  }
  return top_;
}

bool FiniteAlgebra::has(UnaryOp op) const noexcept {
  return slot(tables_, op).has_value();
}

const UnaryTable& FiniteAlgebra::table(UnaryOp op) const {
  const auto& t = slot(tables_, op);
  if (!t) {
    throw SignatureMismatch(name_ + ": signature " +
                            std::string(to_string(signature_)) +
                            " lacks operation " + std::string(to_string(op)));
  }
  return *t;
}

std::vector<Element> FiniteAlgebra::covers(Element x) const {
  std::vector<Element> out;
  for (Element y = 0; y < size(); ++y) {
    if (!less(x, y)) continue;
    bool cover = true;
    for (Element z = 0; z < size() && cover; ++z) {
      if (less(x, z) && less(z, y)) cover = false;
    }
    if (cover) out.push_back(y);
  }
  return out;
}

FiniteAlgebra FiniteAlgebra::reduct(Signature target) const {
  if (!signature_within(target, signature_)) {
    throw SignatureMismatch(name_ + ": cannot take a " +
                            std::string(to_string(target)) + " reduct of a " +
                            std::string(to_string(signature_)) + " algebra");
  }
  Tables t;
  for (UnaryOp op : kUnaryOps) {
    if (signature_has(target, op)) slot(t, op) = slot(tables_, op);
  }
  return FiniteAlgebra(name_, labels_, order_, target, std::move(t));
}

FiniteAlgebra FiniteAlgebra::with_unary(UnaryOp op, UnaryTable table,
                                        Signature signature) const {
  Tables t;
  for (UnaryOp other : kUnaryOps) {
    if (other != op && signature_has(signature, other)) {
      slot(t, other) = slot(tables_, other);
    }
  }
  slot(t, op) = std::move(table);
  return FiniteAlgebra(name_, labels_, order_, signature, std::move(t));
}

FiniteAlgebra FiniteAlgebra::renamed(std::string name) const {
  FiniteAlgebra copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

FiniteAlgebra FiniteAlgebra::relabeled(std::vector<std::string> labels) const {
  if (labels.size() != size()) {
    throw MalformedAlgebra(name_ + ": relabel needs " +
                           std::to_string(size()) + " labels");
  }
  return FiniteAlgebra(name_, std::move(labels), order_, signature_, tables_);
}

bool FiniteAlgebra::same_structure(const FiniteAlgebra& other) const {
  return labels_ == other.labels_ && order_ == other.order_ &&
         signature_ == other.signature_ &&
         tables_.kleene == other.tables_.kleene &&
         tables_.brouwer == other.tables_.brouwer &&
         tables_.diamond == other.tables_.diamond;
}

bool FiniteAlgebra::operator==(const FiniteAlgebra& other) const {
  return name_ == other.name_ && same_structure(other);
}

Bounds bounds(const FiniteAlgebra& algebra, Element x, Element y) {
  if (x >= algebra.size() || y >= algebra.size()) {
    throw UnknownName(algebra.name() + ": element index out of range");
  }
  return {algebra.meet(x, y), algebra.join(x, y)};
}

AlgebraBuilder::AlgebraBuilder(std::string name, Signature signature)
    : name_(std::move(name)), signature_(signature) {}

AlgebraBuilder& AlgebraBuilder::elements(std::vector<std::string> labels) {
  labels_ = std::move(labels);
  for (auto& table : unary_) table.assign(labels_.size(), std::nullopt);
  return *this;
}

Element AlgebraBuilder::index(std::string_view label) const {
  for (Element x = 0; x < labels_.size(); ++x) {
    if (labels_[x] == label) return x;
  }
  throw MalformedAlgebra(name_ + ": unknown element '" + std::string(label) +
                         "'");
}

AlgebraBuilder& AlgebraBuilder::covers(std::string_view lower,
                                       const std::vector<std::string>& uppers) {
  const Element lo = index(lower);
  for (const auto& up : uppers) covers_.emplace_back(lo, index(up));
  return *this;
}

AlgebraBuilder& AlgebraBuilder::involution(std::string_view x,
                                           std::string_view y) {
  unary(UnaryOp::Kleene, x, y);
  unary(UnaryOp::Kleene, y, x);
  return *this;
}

AlgebraBuilder& AlgebraBuilder::unary(UnaryOp op, std::string_view x,
                                      std::string_view y) {
  const Element from = index(x);
  const Element to = index(y);
  auto& entry = unary_[op_slot(op)][from];
  if (entry && *entry != to) {
    throw MalformedAlgebra(name_ + ": conflicting values for '" +
                           std::string(x) + "'" + std::string(to_string(op)));
  }
  entry = to;
  touched_[op_slot(op)] = true;
  return *this;
}

AlgebraBuilder& AlgebraBuilder::unary_default(UnaryOp op, std::string_view y) {
  defaults_[op_slot(op)] = index(y);
  touched_[op_slot(op)] = true;
  return *this;
}

FiniteAlgebra AlgebraBuilder::build() const {
  const std::size_t n = labels_.size();
  std::vector<char> order(n * n, 0);
  for (Element x = 0; x < n; ++x) order[x * n + x] = 1;
  for (auto [lo, hi] : covers_) order[lo * n + hi] = 1;
  // Warshall closure.
  for (Element k = 0; k < n; ++k) {
    for (Element i = 0; i < n; ++i) {
      if (!order[i * n + k]) continue;
      for (Element j = 0; j < n; ++j) {
        if (order[k * n + j]) order[i * n + j] = 1;
      }
    }
  }
  FiniteAlgebra::Tables tables;
  for (UnaryOp op : kUnaryOps) {
    const std::size_t s = op_slot(op);
    if (!signature_has(signature_, op)) {
      if (touched_[s]) {
        throw MalformedAlgebra(name_ + ": signature " +
                               std::string(to_string(signature_)) +
                               " has no operation " +
                               std::string(to_string(op)));
      }
      continue;
    }
    UnaryTable table(n);
    for (Element x = 0; x < n; ++x) {
      const auto& v = unary_[s][x];
      if (v) {
        table[x] = *v;
      } else if (defaults_[s]) {
        table[x] = *defaults_[s];
      } else {
        throw MalformedAlgebra(name_ + ": no value of " +
                               std::string(to_string(op)) + " for '" +
                               labels_[x] + "'");
      }
    }
    slot(tables, op) = std::move(table);
  }
  return FiniteAlgebra(name_, labels_, std::move(order), signature_,
                       std::move(tables));
}

}  // namespace pbz

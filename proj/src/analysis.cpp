#include "pbz/analysis.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace pbz {

namespace {

constexpr Element kUnset = std::numeric_limits<Element>::max();

std::vector<UnaryOp> unary_ops(Signature sig) {
  std::vector<UnaryOp> out;
  for (UnaryOp op : kUnaryOps) {
    if (signature_has(sig, op)) out.push_back(op);
  }
  return out;
}

void require_signature(const FiniteAlgebra& algebra, Signature sig) {
  if (!signature_within(sig, algebra.signature())) {
    throw SignatureMismatch(algebra.name() + ": signature " +
                            std::string(to_string(algebra.signature())) +
                            " does not provide " +
                            std::string(to_string(sig)));
  }
}

std::size_t degree(const FiniteAlgebra& algebra, Element x) {
  std::size_t d = algebra.covers(x).size();
  for (Element y = 0; y < algebra.size(); ++y) {
    const auto up = algebra.covers(y);
    if (std::find(up.begin(), up.end(), x) != up.end()) ++d;
  }
  return d;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent_[std::max(x, y)] = std::min(x, y);
    return true;
  }

  std::vector<std::size_t> roots() {
    std::vector<std::size_t> out(parent_.size());
    for (std::size_t x = 0; x < out.size(); ++x) out[x] = find(x);
    return out;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Backtracking state for find_embedding. Assignments propagate through the
// operations: once x and y are mapped, meet(x,y) and join(x,y) are forced.
class EmbeddingSearch {
 public:
  EmbeddingSearch(const FiniteAlgebra& p, const FiniteAlgebra& a,
                  Signature sig)
      : p_(p),
        a_(a),
        ops_(unary_ops(sig)),
        image_(p.size(), kUnset),
        used_(a.size(), false) {
    std::vector<std::size_t> pdeg(p.size());
    for (Element x = 0; x < p.size(); ++x) pdeg[x] = degree(p, x);
    adeg_.resize(a.size());
    for (Element x = 0; x < a.size(); ++x) adeg_[x] = degree(a, x);
    pdeg_ = pdeg;
    order_.resize(p.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](Element x, Element y) {
      return pdeg[x] > pdeg[y];
    });
    bounded_ = signature_has_bounds(sig);
  }

  bool run() {
    if (p_.size() > a_.size()) return false;
    if (bounded_) {
      if (!assign(p_.order_bottom(), a_.order_bottom())) return false;
      if (!assign(p_.order_top(), a_.order_top())) return false;
    }
    return search();
  }

  const std::vector<Element>& image() const { return image_; }

 private:
  bool assign(Element x, Element v) {
    std::vector<std::pair<Element, Element>> work = {{x, v}};
    while (!work.empty()) {
      auto [u, w] = work.back();
      work.pop_back();
      if (image_[u] == w) continue;
      if (image_[u] != kUnset || used_[w]) return false;
      image_[u] = w;
      used_[w] = true;
      trail_.push_back(u);
      for (UnaryOp op : ops_) {
        work.emplace_back(p_.apply(op, u), a_.apply(op, w));
      }
      for (Element y = 0; y < p_.size(); ++y) {
        if (image_[y] == kUnset) continue;
        work.emplace_back(p_.meet(u, y), a_.meet(w, image_[y]));
        work.emplace_back(p_.join(u, y), a_.join(w, image_[y]));
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      used_[image_[trail_.back()]] = false;
      image_[trail_.back()] = kUnset;
      trail_.pop_back();
    }
  }

  bool consistent(Element x, Element v) const {
    for (Element y = 0; y < p_.size(); ++y) {
      if (image_[y] == kUnset) continue;
      if (p_.leq(x, y) != a_.leq(v, image_[y])) return false;
      if (p_.leq(y, x) != a_.leq(image_[y], v)) return false;
    }
    return true;
  }

  bool search() {
    auto next = std::find_if(order_.begin(), order_.end(),
                             [&](Element x) { return image_[x] == kUnset; });
    if (next == order_.end()) return true;
    const Element x = *next;
    std::vector<Element> candidates;
    for (Element v = 0; v < a_.size(); ++v) {
      if (!used_[v] && consistent(x, v)) candidates.push_back(v);
    }
    auto gap = [&](Element v) {
      return adeg_[v] > pdeg_[x] ? adeg_[v] - pdeg_[x] : pdeg_[x] - adeg_[v];
    };
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](Element u, Element v) { return gap(u) < gap(v); });
    for (Element v : candidates) {
      const std::size_t mark = trail_.size();
      if (assign(x, v) && search()) return true;
      undo(mark);
    }
    return false;
  }

  const FiniteAlgebra& p_;
  const FiniteAlgebra& a_;
  std::vector<UnaryOp> ops_;
  std::vector<Element> image_;
  std::vector<bool> used_;
  std::vector<Element> trail_;
  std::vector<Element> order_;
  std::vector<std::size_t> pdeg_;
  std::vector<std::size_t> adeg_;
  bool bounded_ = false;
};

// First pair of related elements whose images under some translation are
// not related, rendered for error messages.
std::optional<std::string> congruence_violation(const FiniteAlgebra& algebra,
                                                const Partition& p,
                                                Signature sig) {
  const std::size_t n = algebra.size();
  const auto ops = unary_ops(sig);
  auto lbl = [&](Element x) { return algebra.label(x); };
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (!p.related(x, y)) continue;
      for (UnaryOp op : ops) {
        const Element fx = algebra.apply(op, x);
        const Element fy = algebra.apply(op, y);
        if (!p.related(fx, fy)) {
          const std::string o(to_string(op));
          return lbl(x) + " ~ " + lbl(y) + " but " + lbl(x) + o + " = " +
                 lbl(fx) + " and " + lbl(y) + o + " = " + lbl(fy) +
                 " are not related";
        }
      }
      for (Element z = 0; z < n; ++z) {
        const Element mx = algebra.meet(x, z);
        const Element my = algebra.meet(y, z);
        if (!p.related(mx, my)) {
          return lbl(x) + " ~ " + lbl(y) + " but " + lbl(x) + "&" + lbl(z) +
                 " = " + lbl(mx) + " and " + lbl(y) + "&" + lbl(z) + " = " +
                 lbl(my) + " are not related";
        }
        const Element jx = algebra.join(x, z);
        const Element jy = algebra.join(y, z);
        if (!p.related(jx, jy)) {
          return lbl(x) + " ~ " + lbl(y) + " but " + lbl(x) + "|" + lbl(z) +
                 " = " + lbl(jx) + " and " + lbl(y) + "|" + lbl(z) + " = " +
                 lbl(jy) + " are not related";
        }
      }
    }
  }
  return std::nullopt;
}

Partition close(const FiniteAlgebra& algebra, UnionFind uf,
                std::vector<std::pair<Element, Element>> work, Signature sig) {
  const auto ops = unary_ops(sig);
  const std::size_t n = algebra.size();
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    for (UnaryOp op : ops) {
      const Element fx = algebra.apply(op, x);
      const Element fy = algebra.apply(op, y);
      if (uf.unite(fx, fy)) work.emplace_back(fx, fy);
    }
    for (Element z = 0; z < n; ++z) {
      const Element mx = algebra.meet(x, z);
      const Element my = algebra.meet(y, z);
      if (uf.unite(mx, my)) work.emplace_back(mx, my);
      const Element jx = algebra.join(x, z);
      const Element jy = algebra.join(y, z);
      if (uf.unite(jx, jy)) work.emplace_back(jx, jy);
    }
  }
  return Partition(uf.roots());
}

}  // namespace

ElementSet subuniverse_closure(const FiniteAlgebra& algebra,
                               const ElementSet& seed, Signature signature) {
  require_signature(algebra, signature);
  std::vector<bool> in(algebra.size(), false);
  for (Element x : seed) in.at(x) = true;
  if (signature_has_bounds(signature)) {
    in[algebra.bottom()] = true;
    in[algebra.top()] = true;
  }
  const auto ops = unary_ops(signature);
  bool changed = true;
  while (changed) {
    changed = false;
    auto add = [&](Element x) {
      if (!in[x]) in[x] = changed = true;
    };
    for (Element x = 0; x < algebra.size(); ++x) {
      if (!in[x]) continue;
      for (UnaryOp op : ops) add(algebra.apply(op, x));
      for (Element y = 0; y < algebra.size(); ++y) {
        if (!in[y]) continue;
        add(algebra.meet(x, y));
        add(algebra.join(x, y));
      }
    }
  }
  ElementSet out;
  for (Element x = 0; x < algebra.size(); ++x) {
    if (in[x]) out.push_back(x);
  }
  return out;
}

bool is_embedding(const FiniteAlgebra& pattern, const FiniteAlgebra& target,
                  const std::vector<Element>& image, Signature signature) {
  const std::size_t n = pattern.size();
  if (image.size() != n) return false;
  std::set<Element> seen(image.begin(), image.end());
  if (seen.size() != n || (n > 0 && *seen.rbegin() >= target.size())) {
    return false;
  }
  if (signature_has_bounds(signature) &&
      (image[pattern.bottom()] != target.bottom() ||
       image[pattern.top()] != target.top())) {
    return false;
  }
  for (Element x = 0; x < n; ++x) {
    for (UnaryOp op : unary_ops(signature)) {
      if (image[pattern.apply(op, x)] != target.apply(op, image[x])) {
        return false;
      }
    }
    for (Element y = 0; y < n; ++y) {
      if (image[pattern.meet(x, y)] != target.meet(image[x], image[y]) ||
          image[pattern.join(x, y)] != target.join(image[x], image[y])) {
        return false;
      }
    }
  }
  return true;
}

std::optional<ElementMap> find_embedding(const FiniteAlgebra& pattern,
                                         const FiniteAlgebra& target,
                                         Signature signature) {
  require_signature(pattern, signature);
  require_signature(target, signature);
  EmbeddingSearch search(pattern, target, signature);
  if (!search.run()) return std::nullopt;
  return ElementMap{pattern.name(), target.name(), search.image()};
}

std::optional<ElementMap> find_isomorphism(const FiniteAlgebra& a,
                                           const FiniteAlgebra& b,
                                           Signature signature) {
  require_signature(a, signature);
  require_signature(b, signature);
  if (a.size() != b.size()) return std::nullopt;
  return find_embedding(a, b, signature);
}

std::string describe(const FiniteAlgebra& source, const FiniteAlgebra& target,
                     const ElementMap& map) {
  std::ostringstream out;
  for (Element x = 0; x < map.image.size(); ++x) {
    if (x > 0) out << ", ";
    out << source.label(x) << "->" << target.label(map.image[x]);
  }
  return out.str();
}

Partition::Partition(std::vector<std::size_t> block_of)
    : block_of_(std::move(block_of)) {
  std::map<std::size_t, std::size_t> renumber;
  for (auto& b : block_of_) {
    auto [it, fresh] = renumber.try_emplace(b, renumber.size());
    b = it->second;
  }
  block_count_ = renumber.size();
}

Partition Partition::identity(std::size_t n) {
  std::vector<std::size_t> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  return Partition(std::move(ids));
}

Partition Partition::total(std::size_t n) {
  return Partition(std::vector<std::size_t>(n, 0));
}

std::vector<ElementSet> Partition::blocks() const {
  std::vector<ElementSet> out(block_count_);
  for (Element x = 0; x < size(); ++x) out[block_of_[x]].push_back(x);
  return out;
}

bool Partition::refines(const Partition& other) const {
  for (Element x = 0; x < size(); ++x) {
    for (Element y = x + 1; y < size(); ++y) {
      if (related(x, y) && !other.related(x, y)) return false;
    }
  }
  return true;
}

Partition Partition::meet(const Partition& other) const {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> ids;
  std::vector<std::size_t> out(size());
  for (Element x = 0; x < size(); ++x) {
    auto key = std::make_pair(block(x), other.block(x));
    out[x] = ids.try_emplace(key, ids.size()).first->second;
  }
  return Partition(std::move(out));
}

Partition Partition::join(const Partition& other) const {
  UnionFind uf(size());
  for (Element x = 0; x < size(); ++x) {
    for (Element y = x + 1; y < size(); ++y) {
      if (related(x, y) || other.related(x, y)) uf.unite(x, y);
    }
  }
  return Partition(uf.roots());
}

Partition parse_partition(const FiniteAlgebra& algebra,
                          std::string_view text) {
  const std::size_t n = algebra.size();
  std::vector<std::size_t> block_of(n, kUnset);
  std::size_t block = 0;
  std::size_t pos = 0;
  // Labels never contain whitespace, so blanks around them are skipped.
  auto skip = [&](std::size_t p) {
    while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
    return p;
  };
  while (true) {
    pos = skip(pos);
    // Longest label at `pos` that ends at a separator or the end of input.
    std::optional<Element> found;
    std::size_t length = 0;
    for (Element x = 0; x < n; ++x) {
      const std::string& l = algebra.label(x);
      if (l.size() <= length || text.substr(pos, l.size()) != l) continue;
      const std::size_t end = skip(pos + l.size());
      if (end == text.size() || text[end] == ',' || text[end] == ';') {
        found = x;
        length = l.size();
      }
    }
    if (!found) throw ParseError("expected an element label", pos);
    if (block_of[*found] != kUnset) {
      throw ParseError("element '" + algebra.label(*found) + "' repeated",
                       pos);
    }
    block_of[*found] = block;
    pos = skip(pos + length);
    if (pos == text.size()) break;
    if (text[pos] == ';') ++block;
    ++pos;
  }
  for (Element x = 0; x < n; ++x) {
    if (block_of[x] == kUnset) {
      throw ParseError("element '" + algebra.label(x) + "' missing",
                       text.size());
    }
  }
  return Partition(std::move(block_of));
}

std::string format_partition(const FiniteAlgebra& algebra,
                             const Partition& p) {
  std::ostringstream out;
  const auto blocks = p.blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b > 0) out << ';';
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (i > 0) out << ',';
      out << algebra.label(blocks[b][i]);
    }
  }
  return out.str();
}

bool is_congruence(const FiniteAlgebra& algebra, const Partition& p,
                   Signature signature) {
  require_signature(algebra, signature);
  if (p.size() != algebra.size()) return false;
  return !congruence_violation(algebra, p, signature).has_value();
}

Partition principal_congruence(const FiniteAlgebra& algebra, Element x,
                               Element y, Signature signature) {
  require_signature(algebra, signature);
  UnionFind uf(algebra.size());
  std::vector<std::pair<Element, Element>> work;
  if (uf.unite(x, y)) work.emplace_back(x, y);
  return close(algebra, std::move(uf), std::move(work), signature);
}

Partition congruence_closure(const FiniteAlgebra& algebra, const Partition& p,
                             Signature signature) {
  require_signature(algebra, signature);
  UnionFind uf(algebra.size());
  std::vector<std::pair<Element, Element>> work;
  for (const auto& block : p.blocks()) {
    for (std::size_t i = 1; i < block.size(); ++i) {
      if (uf.unite(block[0], block[i])) work.emplace_back(block[0], block[i]);
    }
  }
  return close(algebra, std::move(uf), std::move(work), signature);
}

std::vector<Congruence> all_congruences(const FiniteAlgebra& algebra,
                                        Signature signature) {
  require_signature(algebra, signature);
  const std::size_t n = algebra.size();
  if (n > kMaxCongruenceSize) {
    throw CapExceeded(algebra.name() + ": congruence lattice needs at most " +
                      std::to_string(kMaxCongruenceSize) + " elements, got " +
                      std::to_string(n));
  }
  std::vector<Partition> principal;
  std::set<std::vector<std::size_t>> seen;
  auto key = [&](const Partition& p) {
    std::vector<std::size_t> k(n);
    for (Element x = 0; x < n; ++x) k[x] = p.block(x);
    return k;
  };
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      Partition p = principal_congruence(algebra, x, y, signature);
      if (seen.insert(key(p)).second) principal.push_back(p);
    }
  }
  std::vector<Partition> all = {Partition::identity(n)};
  seen = {key(all[0])};
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const auto& q : principal) {
      Partition j = all[i].join(q);
      if (seen.insert(key(j)).second) all.push_back(j);
    }
  }
  std::sort(all.begin(), all.end(), [&](const Partition& a, const Partition& b) {
    if (a.block_count() != b.block_count()) {
      return a.block_count() > b.block_count();
    }
    return key(a) < key(b);
  });
  std::vector<Congruence> out;
  for (auto& p : all) {
    const auto blocks = p.blocks();
    const bool singleton =
        blocks[p.block(algebra.order_bottom())].size() == 1 &&
        blocks[p.block(algebra.order_top())].size() == 1;
    out.push_back({std::move(p), singleton});
  }
  return out;
}

FiniteAlgebra quotient(const FiniteAlgebra& algebra, const Partition& p,
                       Signature signature) {
  require_signature(algebra, signature);
  if (p.size() != algebra.size()) {
    throw NotACongruence(algebra.name() + ": partition has " +
                         std::to_string(p.size()) + " elements, algebra " +
                         std::to_string(algebra.size()));
  }
  if (auto why = congruence_violation(algebra, p, signature)) {
    throw NotACongruence(algebra.name() + ": not a congruence: " + *why);
  }
  const auto blocks = p.blocks();
  const std::size_t m = blocks.size();
  std::vector<Element> rep(m);
  std::vector<std::string> labels(m);
  for (std::size_t b = 0; b < m; ++b) {
    Element least = blocks[b][0];
    for (Element x : blocks[b]) least = algebra.meet(least, x);
    rep[b] = least;
    labels[b] = algebra.label(least);
  }
  std::vector<char> order(m * m, 0);
  for (std::size_t b = 0; b < m; ++b) {
    for (std::size_t c = 0; c < m; ++c) {
      order[b * m + c] = p.related(algebra.join(rep[b], rep[c]), rep[c]);
    }
  }
  FiniteAlgebra::Tables tables;
  for (UnaryOp op : unary_ops(signature)) {
    UnaryTable t(m);
    for (std::size_t b = 0; b < m; ++b) {
      t[b] = p.block(algebra.apply(op, rep[b]));
      for (Element x : blocks[b]) {
        if (p.block(algebra.apply(op, x)) != t[b]) {
          throw NotACongruence(algebra.name() + ": operation " +
                               std::string(to_string(op)) +
                               " depends on the block representative");
        }
      }
    }
    switch (op) {
      case UnaryOp::Kleene:
        tables.kleene = std::move(t);
        break;
      case UnaryOp::Brouwer:
        tables.brouwer = std::move(t);
        break;
      case UnaryOp::Diamond:
        tables.diamond = std::move(t);
        break;
    }
  }
  return FiniteAlgebra(algebra.name() + "/" + std::to_string(m),
                       std::move(labels), std::move(order), signature,
                       std::move(tables));
}

std::optional<Partition> monolith(const FiniteAlgebra& algebra,
                                  Signature signature) {
  const auto all = all_congruences(algebra, signature);
  std::optional<Partition> least;
  for (const auto& c : all) {
    if (c.partition.is_identity()) continue;
    least = least ? least->meet(c.partition) : c.partition;
  }
  if (!least || least->is_identity()) return std::nullopt;
  return least;
}

bool is_subdirectly_irreducible(const FiniteAlgebra& algebra,
                                Signature signature) {
  return algebra.size() > 1 && monolith(algebra, signature).has_value();
}

}  // namespace pbz

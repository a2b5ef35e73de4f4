#include "pbz/constructors.hpp"

#include <algorithm>
#include <functional>

#include "pbz/classify.hpp"

namespace pbz {

namespace {

std::string letter(std::size_t i) { return std::string(1, char('a' + i)); }

FiniteAlgebra::Tables brouwer_only(UnaryTable kleene, UnaryTable brouwer) {
  FiniteAlgebra::Tables t;
  t.kleene = std::move(kleene);
  t.brouwer = std::move(brouwer);
  return t;
}

}  // namespace

FiniteAlgebra chain(std::size_t n) {
  if (n == 0) throw MalformedAlgebra("chain: size must be positive");
  std::vector<std::string> labels(n);
  labels[0] = "0";
  if (n > 1) labels[n - 1] = "1";
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const std::size_t mirror = n - 1 - i;
    if (i <= mirror) {
      labels[i] = letter(i - 1);
    } else {
      labels[i] = letter(mirror - 1) + "'";
    }
  }
  std::vector<char> order(n * n, 0);
  UnaryTable kleene(n);
  for (Element x = 0; x < n; ++x) {
    kleene[x] = n - 1 - x;
    for (Element y = x; y < n; ++y) order[x * n + y] = 1;
  }
  UnaryTable brouwer(n, 0);
  brouwer[0] = n - 1;
  return FiniteAlgebra("D" + std::to_string(n), std::move(labels),
                       std::move(order), Signature::BZ,
                       brouwer_only(std::move(kleene), std::move(brouwer)));
}

FiniteAlgebra dual(const FiniteAlgebra& algebra) {
  const std::size_t n = algebra.size();
  std::vector<char> order(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) order[x * n + y] = algebra.leq(y, x);
  }
  return FiniteAlgebra(algebra.name() + "^d", algebra.labels(),
                       std::move(order), Signature::Lattice, {});
}

FiniteAlgebra ordinal_sum(const FiniteAlgebra& lower,
                          const FiniteAlgebra& upper) {
  std::vector<Element> lower_part;
  for (Element x = 0; x < lower.size(); ++x) {
    if (x != lower.order_top()) lower_part.push_back(x);
  }
  const std::size_t nl = lower_part.size();
  const std::size_t n = nl + upper.size();
  std::vector<std::string> labels;
  for (Element x : lower_part) labels.push_back("L:" + lower.label(x));
  for (Element y = 0; y < upper.size(); ++y) {
    labels.push_back("M:" + upper.label(y));
  }
  std::vector<char> order(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      bool le;
      if (i < nl && j < nl) {
        le = lower.leq(lower_part[i], lower_part[j]);
      } else if (i < nl) {
        le = true;
      } else if (j < nl) {
        le = false;
      } else {
        le = upper.leq(i - nl, j - nl);
      }
      order[i * n + j] = le;
    }
  }
  return FiniteAlgebra(lower.name() + "+" + upper.name(), std::move(labels),
                       std::move(order), Signature::Lattice, {});
}

FiniteAlgebra symmetric_extension(const FiniteAlgebra& lower,
                                  const FiniteAlgebra& middle) {
  if (lower.size() < 2) {
    throw PreconditionFailed("symmetric_extension: lower lattice " +
                             lower.name() + " is trivial");
  }
  if (!middle.has(UnaryOp::Kleene) || !middle.has_bounds()) {
    throw SignatureMismatch("symmetric_extension: " + middle.name() +
                            " has no bounded involution");
  }
  std::vector<Element> lower_part;
  for (Element x = 0; x < lower.size(); ++x) {
    if (x != lower.order_top()) lower_part.push_back(x);
  }
  const std::size_t nl = lower_part.size();
  const std::size_t nk = middle.size();
  const std::size_t n = 2 * nl + nk;

  // Each position is (part, element): part 0 = L, 1 = K, 2 = L^d.
  std::vector<std::pair<int, Element>> pos;
  std::vector<std::string> labels;
  for (Element x : lower_part) {
    pos.emplace_back(0, x);
    labels.push_back("L:" + lower.label(x));
  }
  for (Element y = 0; y < nk; ++y) {
    pos.emplace_back(1, y);
    labels.push_back("K:" + middle.label(y));
  }
  for (auto it = lower_part.rbegin(); it != lower_part.rend(); ++it) {
    pos.emplace_back(2, *it);
    labels.push_back("Ld:" + lower.label(*it));
  }
  std::vector<char> order(n * n, 0);
  UnaryTable kleene(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto [pi, xi] = pos[i];
    for (std::size_t j = 0; j < n; ++j) {
      const auto [pj, xj] = pos[j];
      bool le;
      if (pi != pj) {
        le = pi < pj;
      } else if (pi == 0) {
        le = lower.leq(xi, xj);
      } else if (pi == 1) {
        le = middle.leq(xi, xj);
      } else {
        le = lower.leq(xj, xi);
      }
      order[i * n + j] = le;
    }
    if (pi == 1) {
      kleene[i] = nl + middle.kleene(xi);
    } else {
      // L:x sits at index k, Ld:x at n-1-k.
      kleene[i] = n - 1 - i;
    }
  }
  FiniteAlgebra::Tables t;
  t.kleene = std::move(kleene);
  return FiniteAlgebra(lower.name() + "+" + middle.name() + "+" +
                           lower.name() + "^d",
                       std::move(labels), std::move(order), Signature::BI,
                       std::move(t));
}

FiniteAlgebra direct_product(const FiniteAlgebra& left,
                             const FiniteAlgebra& right) {
  if (left.signature() != right.signature()) {
    throw SignatureMismatch("direct_product: signatures " +
                            std::string(to_string(left.signature())) +
                            " and " +
                            std::string(to_string(right.signature())) +
                            " differ");
  }
  const std::size_t nl = left.size();
  const std::size_t nr = right.size();
  const std::size_t n = nl * nr;
  std::vector<std::string> labels;
  for (Element i = 0; i < nl; ++i) {
    for (Element j = 0; j < nr; ++j) {
      labels.push_back("(" + left.label(i) + "," + right.label(j) + ")");
    }
  }
  std::vector<char> order(n * n, 0);
  for (Element p = 0; p < n; ++p) {
    for (Element q = 0; q < n; ++q) {
      order[p * n + q] =
          left.leq(p / nr, q / nr) && right.leq(p % nr, q % nr);
    }
  }
  FiniteAlgebra::Tables tables;
  for (UnaryOp op : kUnaryOps) {
    if (!left.has(op)) continue;
    UnaryTable t(n);
    for (Element p = 0; p < n; ++p) {
      t[p] = left.apply(op, p / nr) * nr + right.apply(op, p % nr);
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
  return FiniteAlgebra(left.name() + "x" + right.name(), std::move(labels),
                       std::move(order), left.signature(), std::move(tables));
}

FiniteAlgebra horizontal_sum_mo(std::size_t k) {
  if (k == 0) throw MalformedAlgebra("horizontal_sum_mo: k must be positive");
  AlgebraBuilder builder("MO" + std::to_string(k), Signature::BZ);
  std::vector<std::string> labels = {"0"};
  std::vector<std::string> atoms;
  for (std::size_t i = 0; i < k; ++i) {
    atoms.push_back(letter(i));
    atoms.push_back(letter(i) + "'");
  }
  labels.insert(labels.end(), atoms.begin(), atoms.end());
  labels.push_back("1");
  builder.elements(labels).covers("0", atoms).involution("0", "1");
  for (const auto& a : atoms) builder.covers(a, {"1"});
  for (std::size_t i = 0; i < k; ++i) {
    builder.involution(letter(i), letter(i) + "'");
  }
  builder.unary(UnaryOp::Brouwer, "0", "1").unary(UnaryOp::Brouwer, "1", "0");
  for (std::size_t i = 0; i < k; ++i) {
    builder.unary(UnaryOp::Brouwer, letter(i), letter(i) + "'");
    builder.unary(UnaryOp::Brouwer, letter(i) + "'", letter(i));
  }
  return builder.build();
}

std::vector<UnaryTable> brouwer_completions(
    const FiniteAlgebra& algebra, const std::map<Element, Element>& fixed,
    std::size_t limit) {
  const FiniteAlgebra& m = algebra;
  const std::size_t n = m.size();
  if (!m.has(UnaryOp::Kleene) || !m.has_bounds()) {
    throw SignatureMismatch(m.name() + ": Brouwer completion needs a BI-lattice");
  }
  constexpr Element kUnset = static_cast<Element>(-1);
  std::vector<Element> t(n, kUnset);
  std::vector<UnaryTable> out;

  // Checks every axiom instance whose operands are all assigned.
  auto consistent = [&](Element x) {
    const Element v = t[x];
    if (m.meet(x, v) != m.bottom()) return false;
    for (Element y = 0; y < n; ++y) {
      if (t[y] == kUnset) continue;
      if (m.leq(x, y) && !m.leq(t[y], v)) return false;
      if (m.leq(y, x) && !m.leq(v, t[y])) return false;
      // y~ = x: then x~ = y~~ must equal y~' = x'.
      if (t[y] == x && v != m.kleene(x)) return false;
    }
    if (t[v] != kUnset && t[v] != m.kleene(v)) return false;
    if (t[v] != kUnset && !m.leq(x, t[v])) return false;
    for (Element y = 0; y < n; ++y) {
      if (t[y] == x && !m.leq(y, t[x])) return false;
    }
    return true;
  };

  std::vector<Element> free_elements;
  for (Element x = 0; x < n; ++x) {
    if (!fixed.count(x)) free_elements.push_back(x);
  }
  for (const auto& [x, v] : fixed) {
    if (x >= n || v >= n) {
      throw MalformedAlgebra(m.name() + ": fixed Brouwer value out of range");
    }
    t[x] = v;
  }
  for (const auto& [x, v] : fixed) {
    if (!consistent(x)) return out;
  }

  std::function<void(std::size_t)> search = [&](std::size_t i) {
    if (out.size() >= limit) return;
    if (i == free_elements.size()) {
      out.push_back(t);
      return;
    }
    const Element x = free_elements[i];
    for (Element v = 0; v < n; ++v) {
      t[x] = v;
      if (consistent(x)) search(i + 1);
    }
    t[x] = kUnset;
  };
  search(0);
  return out;
}

std::map<std::string, std::string> h_labeled_brouwer() {
  return {{"d", "a'"}, {"e", "b'"}, {"f", "b"}, {"g", "a"}};
}

namespace {

FiniteAlgebra build_b6(Signature sig) {
  AlgebraBuilder b(sig == Signature::BZ ? "B6-OL" : "B6", sig);
  b.elements({"0", "a", "b", "b'", "a'", "1"})
      .covers("0", {"a", "b"})
      .covers("a", {"b'"})
      .covers("b", {"a'"})
      .covers("b'", {"1"})
      .covers("a'", {"1"})
      .involution("0", "1")
      .involution("a", "a'")
      .involution("b", "b'");
  if (sig == Signature::BZ) {
    for (auto [x, y] : {std::pair{"0", "1"}, {"1", "0"}, {"a", "a'"},
                        {"a'", "a"}, {"b", "b'"}, {"b'", "b"}}) {
      b.unary(UnaryOp::Brouwer, x, y);
    }
  }
  return b.build();
}

FiniteAlgebra build_f8() {
  AlgebraBuilder b("F8", Signature::BZ);
  b.elements({"0", "c", "a", "b", "b'", "a'", "c'", "1"})
      .covers("0", {"c"})
      .covers("c", {"a", "b"})
      .covers("a", {"b'"})
      .covers("b", {"a'"})
      .covers("b'", {"c'"})
      .covers("a'", {"c'"})
      .covers("c'", {"1"})
      .involution("0", "1")
      .involution("c", "c'")
      .involution("a", "a'")
      .involution("b", "b'")
      .unary(UnaryOp::Brouwer, "0", "1")
      .unary_default(UnaryOp::Brouwer, "0");
  return b.build();
}

FiniteAlgebra build_m3(Signature sig) {
  AlgebraBuilder b(sig == Signature::BI ? "M3-PK" : "M3", sig);
  b.elements({"0", "a", "b", "c", "1"})
      .covers("0", {"a", "b", "c"})
      .covers("a", {"1"})
      .covers("b", {"1"})
      .covers("c", {"1"});
  if (sig == Signature::BI) {
    b.involution("0", "1").involution("a", "b").involution("c", "c");
  }
  return b.build();
}

FiniteAlgebra build_h(bool with_frozen_brouwer) {
  AlgebraBuilder b("H", with_frozen_brouwer ? Signature::BZ : Signature::BI);
  b.elements({"0", "d", "e", "f", "g", "a", "b", "c", "b'", "a'", "d'", "e'",
              "f'", "g'", "1"})
      .covers("0", {"d", "e", "f", "g"})
      .covers("d", {"a", "c"})
      .covers("e", {"b", "c"})
      .covers("f", {"b'", "c"})
      .covers("g", {"a'", "c"})
      .covers("a", {"g'"})
      .covers("b", {"f'"})
      .covers("b'", {"e'"})
      .covers("a'", {"d'"})
      .covers("c", {"d'", "e'", "f'", "g'"})
      .covers("d'", {"1"})
      .covers("e'", {"1"})
      .covers("f'", {"1"})
      .covers("g'", {"1"})
      .involution("0", "1")
      .involution("d", "d'")
      .involution("e", "e'")
      .involution("f", "f'")
      .involution("g", "g'")
      .involution("a", "a'")
      .involution("b", "b'")
      .involution("c", "c");
  if (with_frozen_brouwer) {
    for (const auto& [x, y] : h_labeled_brouwer()) {
      b.unary(UnaryOp::Brouwer, x, y);
    }
    for (auto [x, y] : {std::pair{"0", "1"}, {"a", "a'"}, {"b", "b'"},
                        {"b'", "b"}, {"a'", "a"}}) {
      b.unary(UnaryOp::Brouwer, x, y);
    }
    b.unary_default(UnaryOp::Brouwer, "0");
  }
  return b.build();
}

FiniteAlgebra build_a() {
  AlgebraBuilder b("A", Signature::BZ);
  b.elements({"0", "c", "a", "e", "b", "d", "a'", "d'", "b'", "e'", "c'", "1"})
      .covers("0", {"c"})
      .covers("c", {"a", "e", "b"})
      .covers("e", {"d", "b'"})
      .covers("b", {"d", "e'"})
      .covers("d", {"a'"})
      .covers("a", {"d'"})
      .covers("d'", {"e'", "b'"})
      .covers("b'", {"c'"})
      .covers("e'", {"c'"})
      .covers("a'", {"c'"})
      .covers("c'", {"1"})
      .involution("0", "1")
      .involution("a", "a'")
      .involution("b", "b'")
      .involution("c", "c'")
      .involution("d", "d'")
      .involution("e", "e'")
      .unary(UnaryOp::Brouwer, "0", "1")
      .unary_default(UnaryOp::Brouwer, "0");
  return b.build();
}

// Boolean 0 < a, a' < 1.
AlgebraBuilder boolean_four(std::string name, Signature sig) {
  AlgebraBuilder b(std::move(name), sig);
  b.elements({"0", "a", "a'", "1"})
      .covers("0", {"a", "a'"})
      .covers("a", {"1"})
      .covers("a'", {"1"})
      .involution("0", "1")
      .involution("a", "a'");
  return b;
}

// De Morgan 0 < a, b < 1 with both atoms fixed by the involution.
AlgebraBuilder de_morgan_four(std::string name, Signature sig) {
  AlgebraBuilder b(std::move(name), sig);
  b.elements({"0", "a", "b", "1"})
      .covers("0", {"a", "b"})
      .covers("a", {"1"})
      .covers("b", {"1"})
      .involution("0", "1")
      .involution("a", "a")
      .involution("b", "b");
  return b;
}

// ◊0 = 0 and ◊x = 1 otherwise.
FiniteAlgebra with_step_diamond(const FiniteAlgebra& algebra,
                                std::string name) {
  UnaryTable t(algebra.size(), algebra.top());
  t[algebra.bottom()] = algebra.bottom();
  return algebra.reduct(Signature::BI)
      .with_unary(UnaryOp::Diamond, std::move(t), Signature::Modal)
      .renamed(std::move(name));
}

FiniteAlgebra with_diamond(const FiniteAlgebra& algebra, std::string name,
                           const std::vector<std::string>& values) {
  UnaryTable t;
  for (const auto& v : values) t.push_back(algebra.element(v));
  return algebra.reduct(Signature::BI)
      .with_unary(UnaryOp::Diamond, std::move(t), Signature::Modal)
      .renamed(std::move(name));
}

FiniteAlgebra lattice_reduct(const FiniteAlgebra& algebra) {
  return algebra.reduct(Signature::Lattice);
}

FiniteAlgebra checked_h() {
  FiniteAlgebra h = build_h(true);
  const FiniteAlgebra skeleton = build_h(false);
  std::map<Element, Element> fixed;
  for (const auto& [x, y] : h_labeled_brouwer()) {
    fixed[skeleton.element(x)] = skeleton.element(y);
  }
  const auto completions = brouwer_completions(skeleton, fixed);
  if (completions.size() != 1 ||
      completions.front() != h.table(UnaryOp::Brouwer)) {
    throw Error("H: Brouwer completion is not unique or differs from the "
                "frozen table (" +
                std::to_string(completions.size()) + " completions)");
  }
  return h;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  auto add = [&](FiniteAlgebra a, std::string provenance) {
    std::string name = a.name();
    out.push_back({std::move(name), std::move(a), std::move(provenance)});
  };
  for (std::size_t n = 1; n <= 5; ++n) {
    add(chain(n), "n-element chain with the trivial Brouwer complement");
  }
  add(build_b6(Signature::BI), "benzene ring B6 as a BI-lattice");
  add(build_b6(Signature::BZ), "benzene ring B6 with ~ = '");
  add(build_f8(), "F8 = D2 + B6 + D2 with the trivial Brouwer complement");
  add(horizontal_sum_mo(2).renamed("MO2"),
      "modular ortholattice with two pairs of atoms, ~ = '");
  add(build_m3(Signature::Lattice), "diamond lattice M3");
  add(build_m3(Signature::BI), "M3 with involution a <-> b, c fixed");

  const FiniteAlgebra d1_bi = chain(1).reduct(Signature::BI);
  add(trivial_brouwer_extension(
          symmetric_extension(build_m3(Signature::Lattice), d1_bi))
          .relabeled({"0", "a", "b", "c", "m", "c'", "b'", "a'", "1"})
          .renamed("M3+M3"),
      "antiortholattice on M3 + M3");
  add(trivial_brouwer_extension(
          symmetric_extension(lattice_reduct(chain(2)),
                              build_m3(Signature::BI)))
          .relabeled({"0", "d", "a", "b", "c", "d'", "1"})
          .renamed("D2+M3+D2"),
      "antiortholattice D2 + M3 + D2");
  const FiniteAlgebra d2 = lattice_reduct(chain(2));
  const FiniteAlgebra square_sum =
      trivial_brouwer_extension(
          symmetric_extension(direct_product(d2, d2), d1_bi))
          .relabeled({"0", "a", "b", "c", "b'", "a'", "1"})
          .renamed("D2^2+D2^2");
  add(square_sum, "antiortholattice D2^2 + D2^2");
  add(checked_h(),
      "15-element PBZ*-lattice H; four Brouwer values from its diagram, the "
      "rest the unique completion");
  add(build_a(), "12-element antiortholattice A carrying the partition theta");
  {
    AlgebraBuilder b = boolean_four("BZ4", Signature::BZ);
    b.unary(UnaryOp::Brouwer, "0", "1").unary_default(UnaryOp::Brouwer, "0");
    add(b.build(), "Boolean 4-element lattice with the trivial Brouwer "
                   "complement, a Kleene-quasi-Stone algebra failing (*)");
  }
  const FiniteAlgebra b4dm = de_morgan_four("B4-DM", Signature::BI).build();
  add(b4dm, "four-element De Morgan algebra with a = a', b = b'");
  const FiniteAlgebra boolean4 = boolean_four("D2^2", Signature::BI).build();

  add(with_diamond(chain(2), "menarini-1", {"0", "0"}),
      "D2 with dia 0 = dia 1 = 0");
  add(with_diamond(chain(3), "menarini-2", {"0", "a", "1"}),
      "D3 with dia x = x");
  add(with_diamond(boolean4, "menarini-3", {"0", "a", "1", "1"}),
      "D2^2 with dia a = a, dia a' = 1");
  add(with_step_diamond(b4dm, "menarini-4"),
      "four-element De Morgan algebra with dia 0 = 0, else 1");
  add(with_step_diamond(boolean4, "menarini-5"),
      "D2^2 with dia 0 = 0, else 1");
  add(with_step_diamond(
          symmetric_extension(d2, b4dm).relabeled(
              {"0", "a", "b", "c", "a'", "1"}),
          "menarini-6"),
      "D2 + B4 + D2 with b = b', c = c', dia 0 = 0, else 1");
  add(with_step_diamond(square_sum, "menarini-7"),
      "D2^2 + D2^2 with c = c', dia 0 = 0, else 1");
  add(with_step_diamond(chain(4), "menarini-8"),
      "D4 as a De Morgan algebra with dia 0 = 0, else 1");
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const FiniteAlgebra& catalog(std::string_view name) {
  for (const auto& e : catalog_entries()) {
    if (e.name == name) return e.algebra;
  }
  throw UnknownName("no catalog algebra named '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& e : catalog_entries()) names.push_back(e.name);
  return names;
}

}  // namespace pbz

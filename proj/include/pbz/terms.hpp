#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pbz/algebra.hpp"

namespace pbz {

enum class NodeKind { Var, Zero, One, Meet, Join, Kleene, Brouwer, Diamond };

// Immutable term tree with shared subterms.
class Term {
 public:
  static Term var(std::size_t index);
  static Term zero();
  static Term one();
  static Term meet(Term a, Term b);
  static Term join(Term a, Term b);
  static Term kleene(Term a);
  static Term brouwer(Term a);
  static Term diamond(Term a);

  NodeKind kind() const;
  std::size_t var_index() const;  // kind() == Var
  const Term& left() const;       // binary nodes
  const Term& right() const;      // binary nodes
  const Term& child() const;      // unary nodes

  // One more than the largest variable index, 0 for closed terms.
  std::size_t variable_count() const;

  bool operator==(const Term& other) const;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Equation {
  Term lhs;
  Term rhs;
  // Parsed from `s <= t`: lhs = s & t, rhs = s. Only affects printing.
  bool inequality = false;

  std::size_t variable_count() const;
  bool operator==(const Equation& other) const = default;
};

struct Quasiequation {
  std::vector<Equation> premises;
  Equation conclusion;

  std::size_t variable_count() const;
  bool operator==(const Quasiequation& other) const = default;
};

using Law = std::variant<Equation, Quasiequation>;
using Formula = std::variant<Term, Equation, Quasiequation>;

// Variable names in index order: x y z w x1 .. x9.
std::string_view variable_name(std::size_t index);
inline constexpr std::size_t kMaxVariables = 13;

// Standalone terms keep each variable's index from the name order above;
// equations and quasiequations renumber their variables to 0..k-1
// preserving that order. `<=` becomes meet absorption; box and dia are
// expanded for BZ and kept as the diamond operator for MODAL.
// Throws ParseError or SignatureError.
Formula parse(std::string_view text, Signature signature);
Term parse_term(std::string_view text, Signature signature);
Equation parse_equation(std::string_view text, Signature signature);
Law parse_law(std::string_view text, Signature signature);

std::string print(const Term& term);
std::string print(const Equation& equation);
std::string print(const Quasiequation& quasi);
std::string print(const Law& law);

// Operations and constants used by a term or law.
struct Usage {
  bool constants = false;
  bool kleene = false;
  bool brouwer = false;
  bool diamond = false;
  std::size_t variables = 0;
};
Usage usage(const Term& term);
Usage usage(const Law& law);
// True when the algebra provides every symbol the law uses.
bool applicable(const FiniteAlgebra& algebra, const Law& law);

// Compiled evaluator for one term on one algebra. Throws SignatureError when
// the algebra lacks a symbol of the term.
class Evaluator {
 public:
  Evaluator(const FiniteAlgebra& algebra, const Term& term);
  // Throws UnboundVariable when the assignment is too short.
  Element operator()(std::span<const Element> assignment) const;

 private:
  struct Instr {
    NodeKind kind;
    std::size_t arg;
  };
  const FiniteAlgebra* algebra_;
  std::vector<Instr> program_;
  std::size_t variables_;
  mutable std::vector<Element> stack_;
};

Element eval(const FiniteAlgebra& algebra, const Term& term,
             std::span<const Element> assignment);

struct Counterexample {
  std::vector<Element> assignment;
  Element lhs;  // of the failing equation (the conclusion for quasis)
  Element rhs;
};

struct CheckResult {
  std::optional<Counterexample> counterexample;
  bool holds() const { return !counterexample.has_value(); }
};

inline constexpr std::size_t kMaxCheckVariables = 4;
inline constexpr std::size_t kMaxCheckSize = 64;

// Exhaustive search in lexicographic order, variable 0 most significant.
// Throw CapExceeded, SignatureError.
CheckResult check_identity(const FiniteAlgebra& algebra, const Equation& eq);
CheckResult check_quasiidentity(const FiniteAlgebra& algebra,
                                const Quasiequation& q);
CheckResult check(const FiniteAlgebra& algebra, const Law& law);

struct NamedLaw {
  std::string name;
  std::string text;       // canonical printed form
  Signature signature;    // smallest signature the text parses in
  Law law;
};

const std::vector<NamedLaw>& named_laws();
// Throws UnknownName.
const NamedLaw& named_law(std::string_view name);
const Law& named_equation(std::string_view name);

// Variable indices partitioned as: only in t, only in u, shared.
struct VariableSplit {
  std::vector<std::size_t> t_only;
  std::vector<std::size_t> u_only;
  std::vector<std::size_t> shared;
};

struct MTerms {
  Term m_tu;  // prefix | t
  Term m_ut;  // prefix | u
};

// Prefix is the left-nested join of (v & v')~ over t_only, u_only, shared;
// the trailing term's top-level joins are appended one by one. Throws
// VariableSplitError when the split is not disjoint or misses a variable.
MTerms build_m_terms(const Term& t, const Term& u, const VariableSplit& split);
Term build_m_term(const Term& t, const Term& u, const VariableSplit& split);

}  // namespace pbz

#include "pbz/terms.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <set>

namespace pbz {

struct Term::Node {
  NodeKind kind;
  std::size_t index = 0;
  std::optional<Term> a;
  std::optional<Term> b;
  std::size_t vars = 0;
};

namespace {

constexpr std::array<std::string_view, kMaxVariables> kVariableNames = {
    "x", "y", "z", "w", "x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8", "x9"};

}  // namespace

Term Term::var(std::size_t index) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Var;
  n->index = index;
  n->vars = index + 1;
  return Term(std::move(n));
}

Term Term::zero() {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Zero;
  return Term(std::move(n));
}

Term Term::one() {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::One;
  return Term(std::move(n));
}

Term Term::meet(Term a, Term b) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Meet;
  n->vars = std::max(a.variable_count(), b.variable_count());
  n->a = std::move(a);
  n->b = std::move(b);
  return Term(std::move(n));
}

Term Term::join(Term a, Term b) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Join;
  n->vars = std::max(a.variable_count(), b.variable_count());
  n->a = std::move(a);
  n->b = std::move(b);
  return Term(std::move(n));
}

Term Term::kleene(Term a) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Kleene;
  n->vars = a.variable_count();
  n->a = std::move(a);
  return Term(std::move(n));
}

Term Term::brouwer(Term a) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Brouwer;
  n->vars = a.variable_count();
  n->a = std::move(a);
  return Term(std::move(n));
}

Term Term::diamond(Term a) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Diamond;
  n->vars = a.variable_count();
  n->a = std::move(a);
  return Term(std::move(n));
}

NodeKind Term::kind() const { return node_->kind; }
std::size_t Term::var_index() const { return node_->index; }
const Term& Term::left() const { return *node_->a; }
const Term& Term::right() const { return *node_->b; }
const Term& Term::child() const { return *node_->a; }
std::size_t Term::variable_count() const { return node_->vars; }

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case NodeKind::Var:
      return var_index() == other.var_index();
    case NodeKind::Zero:
    case NodeKind::One:
      return true;
    case NodeKind::Meet:
    case NodeKind::Join:
      return left() == other.left() && right() == other.right();
    default:
      return child() == other.child();
  }
}

std::size_t Equation::variable_count() const {
  return std::max(lhs.variable_count(), rhs.variable_count());
}

std::size_t Quasiequation::variable_count() const {
  std::size_t n = conclusion.variable_count();
  for (const auto& p : premises) n = std::max(n, p.variable_count());
  return n;
}

std::string_view variable_name(std::size_t index) {
  if (index >= kMaxVariables) {
    throw UnboundVariable("variable index " + std::to_string(index) +
                          " has no name");
  }
  return kVariableNames[index];
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, Signature sig) : s_(text), sig_(sig) {}

  Formula formula() {
    Term first = join();
    skip();
    if (done()) return first;
    std::vector<Equation> eqs;
    eqs.push_back(finish_equation(std::move(first)));
    while (true) {
      skip();
      if (done()) break;
      if (accept(",")) {
        eqs.push_back(equation());
      } else if (accept("=>")) {
        Equation c = equation();
        skip();
        if (!done()) fail("unexpected trailing input");
        return Quasiequation{std::move(eqs), std::move(c)};
      } else {
        fail("expected ',', '=>' or end of input");
      }
    }
    if (eqs.size() > 1) fail("premises without '=>'");
    return eqs.front();
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, pos_);
  }

  [[noreturn]] void unsupported(const std::string& symbol,
                                std::size_t at) const {
    throw SignatureError("symbol " + symbol + " is not in signature " +
                         std::string(to_string(sig_)) + " (position " +
                         std::to_string(at) + ")");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool done() const { return pos_ >= s_.size(); }

  bool peek(std::string_view tok) {
    skip();
    return s_.substr(pos_, tok.size()) == tok;
  }

  bool accept(std::string_view tok) {
    if (!peek(tok)) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  Equation equation() { return finish_equation(join()); }

  Equation finish_equation(Term lhs) {
    if (accept("<=")) {
      Term rhs = join();
      return Equation{Term::meet(lhs, std::move(rhs)), lhs, true};
    }
    if (peek("=>")) fail("expected '=' or '<='");
    if (accept("=")) return Equation{std::move(lhs), join(), false};
    fail("expected '=' or '<='");
  }

  Term join() {
    Term t = meet();
    while (accept("|")) t = Term::join(std::move(t), meet());
    return t;
  }

  Term meet() {
    Term t = postfix();
    while (accept("&")) t = Term::meet(std::move(t), postfix());
    return t;
  }

  Term postfix() {
    Term t = primary();
    while (true) {
      skip();
      const std::size_t at = pos_;
      if (accept("'")) {
        if (!signature_has(sig_, UnaryOp::Kleene)) unsupported("'", at);
        t = Term::kleene(std::move(t));
      } else if (accept("~")) {
        if (!signature_has(sig_, UnaryOp::Brouwer)) unsupported("~", at);
        t = Term::brouwer(std::move(t));
      } else {
        return t;
      }
    }
  }

  Term primary() {
    skip();
    const std::size_t at = pos_;
    if (done()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Term t = join();
      expect(")");
      return t;
    }
    if (c == '0' || c == '1') {
      ++pos_;
      if (!signature_has_bounds(sig_)) unsupported(std::string(1, c), at);
      return c == '0' ? Term::zero() : Term::one();
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      fail(std::string("unexpected character '") + c + "'");
    }
    std::size_t end = pos_;
    while (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end])))
      ++end;
    const std::string_view word = s_.substr(pos_, end - pos_);
    if (word == "dia" || word == "box") {
      pos_ = end;
      expect("(");
      Term t = join();
      expect(")");
      return modal(word == "dia", std::move(t), at);
    }
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (word == kVariableNames[i]) {
        pos_ = end;
        return Term::var(i);
      }
    }
    fail("unknown identifier '" + std::string(word) + "'");
  }

  Term modal(bool possibility, Term t, std::size_t at) {
    if (sig_ == Signature::BZ) {
      // dia t = t~~, box t = t'~
      return possibility ? Term::brouwer(Term::brouwer(std::move(t)))
                         : Term::brouwer(Term::kleene(std::move(t)));
    }
    if (sig_ == Signature::Modal) {
      return possibility
                 ? Term::diamond(std::move(t))
                 : Term::kleene(Term::diamond(Term::kleene(std::move(t))));
    }
    unsupported(possibility ? "dia" : "box", at);
  }

  std::string_view s_;
  Signature sig_;
  std::size_t pos_ = 0;
};

void collect(const Term& t, std::set<std::size_t>& out) {
  switch (t.kind()) {
    case NodeKind::Var:
      out.insert(t.var_index());
      break;
    case NodeKind::Zero:
    case NodeKind::One:
      break;
    case NodeKind::Meet:
    case NodeKind::Join:
      collect(t.left(), out);
      collect(t.right(), out);
      break;
    default:
      collect(t.child(), out);
  }
}

Term remap(const Term& t, const std::map<std::size_t, std::size_t>& m) {
  switch (t.kind()) {
    case NodeKind::Var:
      return Term::var(m.at(t.var_index()));
    case NodeKind::Zero:
    case NodeKind::One:
      return t;
    case NodeKind::Meet:
      return Term::meet(remap(t.left(), m), remap(t.right(), m));
    case NodeKind::Join:
      return Term::join(remap(t.left(), m), remap(t.right(), m));
    case NodeKind::Kleene:
      return Term::kleene(remap(t.child(), m));
    case NodeKind::Brouwer:
      return Term::brouwer(remap(t.child(), m));
    case NodeKind::Diamond:
      return Term::diamond(remap(t.child(), m));
  }
  return t;
}

Equation remap(const Equation& e, const std::map<std::size_t, std::size_t>& m) {
  return Equation{remap(e.lhs, m), remap(e.rhs, m), e.inequality};
}

std::map<std::size_t, std::size_t> compaction(
    const std::vector<const Equation*>& eqs) {
  std::set<std::size_t> used;
  for (const Equation* e : eqs) {
    collect(e->lhs, used);
    collect(e->rhs, used);
  }
  std::map<std::size_t, std::size_t> m;
  for (std::size_t v : used) m.emplace(v, m.size());
  return m;
}

}  // namespace

Formula parse(std::string_view text, Signature signature) {
  Formula f = Parser(text, signature).formula();
  if (auto* e = std::get_if<Equation>(&f)) {
    return remap(*e, compaction({e}));
  }
  if (auto* q = std::get_if<Quasiequation>(&f)) {
    std::vector<const Equation*> all;
    for (const auto& p : q->premises) all.push_back(&p);
    all.push_back(&q->conclusion);
    const auto m = compaction(all);
    Quasiequation out{{}, remap(q->conclusion, m)};
    for (const auto& p : q->premises) out.premises.push_back(remap(p, m));
    return out;
  }
  return f;
}

Term parse_term(std::string_view text, Signature signature) {
  Formula f = parse(text, signature);
  if (auto* t = std::get_if<Term>(&f)) return *t;
  throw ParseError("expected a term, found an equation", 0);
}

Equation parse_equation(std::string_view text, Signature signature) {
  Formula f = parse(text, signature);
  if (auto* e = std::get_if<Equation>(&f)) return *e;
  throw ParseError("expected an equation", 0);
}

Law parse_law(std::string_view text, Signature signature) {
  Formula f = parse(text, signature);
  if (auto* e = std::get_if<Equation>(&f)) return *e;
  if (auto* q = std::get_if<Quasiequation>(&f)) return *q;
  throw ParseError("expected an equation or quasiequation", 0);
}

// --------------------------------------------------------------- printing

namespace {

int precedence(NodeKind k) {
  switch (k) {
    case NodeKind::Join:
      return 1;
    case NodeKind::Meet:
      return 2;
    case NodeKind::Kleene:
    case NodeKind::Brouwer:
      return 3;
    default:
      return 4;
  }
}

void print_to(const Term& t, std::string& out);

void print_wrapped(const Term& t, bool wrap, std::string& out) {
  if (wrap) out += '(';
  print_to(t, out);
  if (wrap) out += ')';
}

void print_to(const Term& t, std::string& out) {
  const NodeKind k = t.kind();
  switch (k) {
    case NodeKind::Var:
      out += variable_name(t.var_index());
      return;
    case NodeKind::Zero:
      out += '0';
      return;
    case NodeKind::One:
      out += '1';
      return;
    case NodeKind::Diamond:
      out += "dia(";
      print_to(t.child(), out);
      out += ')';
      return;
    case NodeKind::Kleene:
    case NodeKind::Brouwer:
      print_wrapped(t.child(), precedence(t.child().kind()) < 3, out);
      out += k == NodeKind::Kleene ? '\'' : '~';
      return;
    case NodeKind::Meet:
    case NodeKind::Join: {
      const int p = precedence(k);
      print_wrapped(t.left(), precedence(t.left().kind()) < p, out);
      out += k == NodeKind::Meet ? " & " : " | ";
      print_wrapped(t.right(), precedence(t.right().kind()) <= p, out);
      return;
    }
  }
}

}  // namespace

std::string print(const Term& term) {
  std::string out;
  print_to(term, out);
  return out;
}

std::string print(const Equation& e) {
  if (e.inequality && e.lhs.kind() == NodeKind::Meet && e.lhs.left() == e.rhs) {
    return print(e.rhs) + " <= " + print(e.lhs.right());
  }
  return print(e.lhs) + " = " + print(e.rhs);
}

std::string print(const Quasiequation& q) {
  std::string out;
  for (std::size_t i = 0; i < q.premises.size(); ++i) {
    if (i) out += " , ";
    out += print(q.premises[i]);
  }
  return out + " => " + print(q.conclusion);
}

std::string print(const Law& law) {
  return std::visit([](const auto& l) { return print(l); }, law);
}

// ------------------------------------------------------------- evaluation

namespace {

void add_usage(const Term& t, Usage& u) {
  switch (t.kind()) {
    case NodeKind::Var:
      break;
    case NodeKind::Zero:
    case NodeKind::One:
      u.constants = true;
      break;
    case NodeKind::Meet:
    case NodeKind::Join:
      add_usage(t.left(), u);
      add_usage(t.right(), u);
      break;
    case NodeKind::Kleene:
      u.kleene = true;
      add_usage(t.child(), u);
      break;
    case NodeKind::Brouwer:
      u.brouwer = true;
      add_usage(t.child(), u);
      break;
    case NodeKind::Diamond:
      u.diamond = true;
      add_usage(t.child(), u);
      break;
  }
  u.variables = std::max(u.variables, t.variable_count());
}

void add_usage(const Equation& e, Usage& u) {
  add_usage(e.lhs, u);
  add_usage(e.rhs, u);
}

}  // namespace

Usage usage(const Term& term) {
  Usage u;
  add_usage(term, u);
  return u;
}

Usage usage(const Law& law) {
  Usage u;
  if (const auto* e = std::get_if<Equation>(&law)) {
    add_usage(*e, u);
  } else {
    const auto& q = std::get<Quasiequation>(law);
    for (const auto& p : q.premises) add_usage(p, u);
    add_usage(q.conclusion, u);
  }
  return u;
}

bool applicable(const FiniteAlgebra& algebra, const Law& law) {
  const Usage u = usage(law);
  return (!u.constants || algebra.has_bounds()) &&
         (!u.kleene || algebra.has(UnaryOp::Kleene)) &&
         (!u.brouwer || algebra.has(UnaryOp::Brouwer)) &&
         (!u.diamond || algebra.has(UnaryOp::Diamond));
}

namespace {

void compile(const Term& t, std::vector<std::pair<NodeKind, std::size_t>>& out) {
  switch (t.kind()) {
    case NodeKind::Var:
      out.emplace_back(NodeKind::Var, t.var_index());
      return;
    case NodeKind::Zero:
    case NodeKind::One:
      out.emplace_back(t.kind(), 0);
      return;
    case NodeKind::Meet:
    case NodeKind::Join:
      compile(t.left(), out);
      compile(t.right(), out);
      out.emplace_back(t.kind(), 0);
      return;
    default:
      compile(t.child(), out);
      out.emplace_back(t.kind(), 0);
  }
}

}  // namespace

Evaluator::Evaluator(const FiniteAlgebra& algebra, const Term& term)
    : algebra_(&algebra), variables_(term.variable_count()) {
  const Usage u = usage(term);
  auto missing = [&](const char* symbol) {
    throw SignatureError(algebra.name() + ": signature " +
                         std::string(to_string(algebra.signature())) +
                         " has no " + symbol);
  };
  if (u.constants && !algebra.has_bounds()) missing("constants 0, 1");
  if (u.kleene && !algebra.has(UnaryOp::Kleene)) missing("'");
  if (u.brouwer && !algebra.has(UnaryOp::Brouwer)) missing("~");
  if (u.diamond && !algebra.has(UnaryOp::Diamond)) missing("dia");
  std::vector<std::pair<NodeKind, std::size_t>> code;
  compile(term, code);
  for (auto [k, a] : code) program_.push_back({k, a});
  stack_.resize(program_.size());
}

Element Evaluator::operator()(std::span<const Element> v) const {
  if (v.size() < variables_) {
    throw UnboundVariable("assignment binds " + std::to_string(v.size()) +
                          " variables, term needs " +
                          std::to_string(variables_));
  }
  const FiniteAlgebra& m = *algebra_;
  std::size_t sp = 0;
  for (const Instr& in : program_) {
    switch (in.kind) {
      case NodeKind::Var:
        stack_[sp++] = v[in.arg];
        break;
      case NodeKind::Zero:
        stack_[sp++] = m.bottom();
        break;
      case NodeKind::One:
        stack_[sp++] = m.top();
        break;
      case NodeKind::Meet:
        --sp;
        stack_[sp - 1] = m.meet(stack_[sp - 1], stack_[sp]);
        break;
      case NodeKind::Join:
        --sp;
        stack_[sp - 1] = m.join(stack_[sp - 1], stack_[sp]);
        break;
      case NodeKind::Kleene:
        stack_[sp - 1] = m.kleene(stack_[sp - 1]);
        break;
      case NodeKind::Brouwer:
        stack_[sp - 1] = m.brouwer(stack_[sp - 1]);
        break;
      case NodeKind::Diamond:
        stack_[sp - 1] = m.diamond(stack_[sp - 1]);
        break;
    }
  }
  return stack_[0];
}

Element eval(const FiniteAlgebra& algebra, const Term& term,
             std::span<const Element> assignment) {
  return Evaluator(algebra, term)(assignment);
}

namespace {

void check_caps(const FiniteAlgebra& algebra, std::size_t vars) {
  if (vars > kMaxCheckVariables) {
    throw CapExceeded("exhaustive check limited to " +
                      std::to_string(kMaxCheckVariables) + " variables, got " +
                      std::to_string(vars));
  }
  if (algebra.size() > kMaxCheckSize) {
    throw CapExceeded("exhaustive check limited to algebras of size " +
                      std::to_string(kMaxCheckSize) + ", got " +
                      std::to_string(algebra.size()));
  }
}

// Calls f on every assignment in lexicographic order until it returns true.
template <typename F>
void for_each_assignment(std::size_t n, std::size_t vars, F f) {
  std::vector<Element> v(vars, 0);
  while (true) {
    if (f(std::span<const Element>(v))) return;
    std::size_t i = vars;
    while (i > 0 && ++v[i - 1] == n) v[--i] = 0;
    if (i == 0) return;
  }
}

}  // namespace

CheckResult check_identity(const FiniteAlgebra& algebra, const Equation& eq) {
  const std::size_t vars = eq.variable_count();
  check_caps(algebra, vars);
  const Evaluator lhs(algebra, eq.lhs);
  const Evaluator rhs(algebra, eq.rhs);
  CheckResult result;
  for_each_assignment(algebra.size(), vars, [&](std::span<const Element> v) {
    const Element l = lhs(v);
    const Element r = rhs(v);
    if (l == r) return false;
    result.counterexample = Counterexample{{v.begin(), v.end()}, l, r};
    return true;
  });
  return result;
}

CheckResult check_quasiidentity(const FiniteAlgebra& algebra,
                                const Quasiequation& q) {
  const std::size_t vars = q.variable_count();
  check_caps(algebra, vars);
  std::vector<std::pair<Evaluator, Evaluator>> premises;
  for (const auto& p : q.premises) {
    premises.emplace_back(Evaluator(algebra, p.lhs), Evaluator(algebra, p.rhs));
  }
  const Evaluator lhs(algebra, q.conclusion.lhs);
  const Evaluator rhs(algebra, q.conclusion.rhs);
  CheckResult result;
  for_each_assignment(algebra.size(), vars, [&](std::span<const Element> v) {
    for (const auto& [pl, pr] : premises) {
      if (pl(v) != pr(v)) return false;
    }
    const Element l = lhs(v);
    const Element r = rhs(v);
    if (l == r) return false;
    result.counterexample = Counterexample{{v.begin(), v.end()}, l, r};
    return true;
  });
  return result;
}

CheckResult check(const FiniteAlgebra& algebra, const Law& law) {
  if (const auto* e = std::get_if<Equation>(&law)) {
    return check_identity(algebra, *e);
  }
  return check_quasiidentity(algebra, std::get<Quasiequation>(law));
}

// ---------------------------------------------------------------- m-terms

MTerms build_m_terms(const Term& t, const Term& u, const VariableSplit& split) {
  std::set<std::size_t> seen;
  auto claim = [&](const std::vector<std::size_t>& group) {
    for (std::size_t v : group) {
      if (!seen.insert(v).second) {
        throw VariableSplitError("variable " + std::to_string(v) +
                                 " is declared in more than one group");
      }
    }
  };
  claim(split.t_only);
  claim(split.u_only);
  claim(split.shared);

  auto require_within = [&](const Term& term, const std::vector<std::size_t>& own,
                            const char* which) {
    std::set<std::size_t> used;
    collect(term, used);
    for (std::size_t v : used) {
      const bool ok =
          std::find(own.begin(), own.end(), v) != own.end() ||
          std::find(split.shared.begin(), split.shared.end(), v) !=
              split.shared.end();
      if (!ok) {
        throw VariableSplitError(std::string("variable ") +
                                 std::string(variable_name(v)) + " of " +
                                 which + " is not declared for it");
      }
    }
  };
  require_within(t, split.t_only, "t");
  require_within(u, split.u_only, "u");

  std::optional<Term> prefix;
  auto add = [&](Term part) {
    prefix = prefix ? Term::join(std::move(*prefix), std::move(part))
                    : std::move(part);
  };
  for (const auto* group : {&split.t_only, &split.u_only, &split.shared}) {
    for (std::size_t v : *group) {
      add(Term::brouwer(Term::meet(Term::var(v), Term::kleene(Term::var(v)))));
    }
  }
  auto finish = [&](const Term& tail) {
    if (!prefix) return tail;
    std::vector<Term> parts;
    Term cur = tail;
    while (cur.kind() == NodeKind::Join) {
      parts.push_back(cur.right());
      cur = cur.left();
    }
    parts.push_back(cur);
    Term out = *prefix;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
      out = Term::join(std::move(out), *it);
    }
    return out;
  };
  return {finish(t), finish(u)};
}

Term build_m_term(const Term& t, const Term& u, const VariableSplit& split) {
  return build_m_terms(t, u, split).m_tu;
}

}  // namespace pbz

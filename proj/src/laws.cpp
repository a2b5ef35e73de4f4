#include <array>

#include "pbz/terms.hpp"

namespace pbz {

namespace {

struct LawText {
  const char* name;
  const char* text;
  Signature signature;
};

constexpr std::array kLawTexts = {
    LawText{"star", "(x & x')~ = x~ | x'~", Signature::BZ},
    LawText{"SDM", "(x & y)~ = x~ | y~", Signature::BZ},
    LawText{"SK", "x & y~~ <= x'~ | y", Signature::BZ},
    LawText{"DIST", "x & (y | z) = x & y | x & z", Signature::Lattice},
    LawText{"MODULAR", "x <= z => x | y & z = (x | y) & z", Signature::Lattice},
    LawText{"KLEENE", "x & x' <= y | y'", Signature::I},
    LawText{"PARA", "x <= y , x' & y = 0 => x = y", Signature::BI},
    LawText{"OM", "x <= y => y = y & x' | x", Signature::I},
    LawText{"J0", "x & y~ | x & y~~ = x", Signature::BZ},
    LawText{"J2", "x & (y & y')~ | x & (y & y')~~ = x", Signature::BZ},
    LawText{"D2OLjoin",
            "(x & x')~ | (y & y')~ | x | x' = (x & x')~ | (y & y')~ | y | y'",
            Signature::BZ},
    LawText{"WDSDM", "(x & (y | z))~ = (x & y)~ & (x & z)~", Signature::BZ},
    LawText{"DISTjoinTilde",
            "(x | x~) & (y | y~ | z | z~) = (x | x~) & (y | y~) | (x | x~) & "
            "(z | z~)",
            Signature::BZ},
    LawText{"WDISTjoinTilde",
            "((x | x~) & (y | y~ | z | z~))~ = ((x | x~) & (y | y~) | (x | x~) "
            "& (z | z~))~",
            Signature::BZ},
    LawText{"Q", "x <= y' , x' & y' <= x & y => x = y'", Signature::I},
    LawText{"Qprime", "x' & (x' & y)' <= x & (x' & y) => x' <= y",
            Signature::I},
    // As typeset; fails at x = y = 1 in every nontrivial algebra.
    LawText{"QprimeLiteral", "x' & (x' & y)' <= x & (x' & y) => y <= x'",
            Signature::I},
    LawText{"QS2", "(x | y)~ = x~ & y~", Signature::BZ},
    LawText{"QS3", "(x & y~)~ = x~ | y~~", Signature::BZ},
    LawText{"QS4", "x <= x~~", Signature::BZ},
    LawText{"QS5", "x~ | x~~ = 1", Signature::BZ},
    LawText{"QS6", "x <= y => y~ <= x~", Signature::BZ},
    LawText{"QS7", "x & x~ = 0", Signature::BZ},
    LawText{"QS8", "x~~~ = x~", Signature::BZ},
    LawText{"QS9a", "x & y~ = 0 => x <= y~~", Signature::BZ},
    LawText{"QS9b", "x <= y~~ => x & y~ = 0", Signature::BZ},
    LawText{"S1a", "x & y = 0 => x <= y~", Signature::BZ},
    LawText{"S1b", "x <= y~ => x & y = 0", Signature::BZ},
    LawText{"MOLA", "x~~ = x~'~'", Signature::BZ},
    LawText{"M1", "dia(0) = 0", Signature::Modal},
    LawText{"M2", "dia(x | y) = dia(x) | dia(y)", Signature::Modal},
    LawText{"M3", "x <= dia(x)", Signature::Modal},
    LawText{"M4", "dia(x) = dia(dia(x))", Signature::Modal},
    LawText{"M5", "dia(x) & dia(x)' = 0", Signature::Modal},
    LawText{"M6", "dia(x) = dia(dia(x)')'", Signature::Modal},
    LawText{"M7", "dia(x & x') = dia(x) & dia(x')", Signature::Modal},
    LawText{"M8", "x' | dia(x) = 1", Signature::Modal},
    LawText{"M9", "dia(x & y) = dia(x) & dia(y)", Signature::Modal},
    LawText{"M10", "x & x' = dia(x) & x'", Signature::Modal},
};

std::vector<NamedLaw> build_laws() {
  std::vector<NamedLaw> out;
  for (const auto& l : kLawTexts) {
    out.push_back({l.name, l.text, l.signature, parse_law(l.text, l.signature)});
  }
  return out;
}

}  // namespace

const std::vector<NamedLaw>& named_laws() {
  static const std::vector<NamedLaw> laws = build_laws();
  return laws;
}

const NamedLaw& named_law(std::string_view name) {
  for (const auto& l : named_laws()) {
    if (l.name == name) return l;
  }
  throw UnknownName("no named law '" + std::string(name) + "'");
}

const Law& named_equation(std::string_view name) { return named_law(name).law; }

}  // namespace pbz

#pragma once

#include <stdexcept>
#include <string>

#include "wb/formula.hpp"
#include "wb/signature.hpp"

namespace wb {

struct ParseError : std::runtime_error {
  ParseError(std::string msg, std::size_t position)
      : std::runtime_error(msg + " (at position " + std::to_string(position) +
                           ")"),
        pos(position) {}
  std::size_t pos;
};

// Concrete grammar (ASCII):
//   forall v. A | exists v. A | A -> B | A \/ B | A /\ B | ~A
//   | P(t1,...,tk) | t1 = t2 | top | bot | (A)
// precedence ~ > /\ > \/ > ->, implication right-associative,
// quantifier scope extends maximally to the right.
// Variables: ident or ident$k (k a decimal index).
FormulaPtr parseFormula(const std::string& text, const Signature& sig);

// Deterministic output: binary connectives fully parenthesized, quantifier
// bodies bare. parse(print(F)) reproduces F up to alpha-equivalence
// (syntactically, in fact).
std::string printFormula(const FormulaPtr& f);
std::string printTerm(const TermPtr& t);

FormulaPtr loadFormulaFile(const std::string& path, const Signature& sig);

}  // namespace wb

#pragma once

#include "wb/formula.hpp"
#include "wb/signature.hpp"

namespace wb {

// Relational signature for a functional one: each k-ary function f becomes
// the (k+1)-ary graph predicate named graphPredicateName(f).
std::string graphPredicateName(const Signature& sig, const std::string& fn);
Signature graphSignature(const Signature& sig);

struct ElimResult {
  FormulaPtr formula;       // purely relational
  Signature signature;      // graph signature
  unsigned rho0Before = 0;
  unsigned rho0After = 0;   // rho0After - rho0Before is the reported overhead
};

// Deep strategy: innermost subterms are unfolded first through existential
// graph atoms. Equivalent to the input over models interpreting each graph
// predicate as the function's graph.
ElimResult eliminateTerms(const FormulaPtr& f, const Signature& sig);

}  // namespace wb

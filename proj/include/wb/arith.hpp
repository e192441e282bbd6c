#pragma once

#include <string>

#include "wb/complexity.hpp"
#include "wb/formula.hpp"
#include "wb/godel.hpp"
#include "wb/signature.hpp"
#include "wb/translation.hpp"

namespace wb {

struct ArithError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Context for the arithmetical constructions. N is the interpretation of
// the numbers (one-dimensional here); sub and prov are uninterpreted
// predicate symbols whose complexity profiles are stipulated, since their
// bodies are treated as black boxes. seqSchemeRho0 is the stipulated rho0
// of the sequence scheme; it is attached to the domain predicate N so the
// measured budgets see it.
struct ArithContext {
  Translation N;
  std::string subPred = "sub";    // ternary
  std::string provPred = "prov";  // binary
  ComplexityProfile subProfile{4, 4, 4, 4, 0};
  ComplexityProfile provProfile{4, 4, 4, 4, 0};
  unsigned seqSchemeRho0 = 3;

  // sub, prov and the domain predicate of N
  Stipulations stipulations() const;
  // arithmetic signature extended with sub and prov
  Signature signature() const;

  static ArithContext standard();
};

// delta_N(x) for a single variable
FormulaPtr deltaN(const ArithContext& ctx, const Var& x);

// Relational binary numeral: num_n(x) built from the Z, S, A graphs with
// delta_N guards; O(log n) size, rho0 overhead exactly 1 over the guards
// and graph atoms.
FormulaPtr numeral(const Code& n, const ArithContext& ctx,
                   const Var& x = Var{"x", 0});

// Witness comparison between two delta_N-relativized existentials.
struct WitnessComparison {
  FormulaPtr left;   // exists x (delta_N(x) /\ A0(x))
  FormulaPtr right;  // exists y (delta_N(y) /\ B0(y))
  bool strict = false;
};

// Checks both sides have the required shape; throws ArithError otherwise.
WitnessComparison makeComparison(const FormulaPtr& A, const FormulaPtr& B,
                                 bool strict, const ArithContext& ctx);

// The emitted formula: exists x (delta_N(x) /\ (A0(x) /\ forall y (y <N x
// -> ~B0(y)))), with <= using lt inside and < using le inside.
FormulaPtr comparisonFormula(const WitnessComparison& c,
                             const ArithContext& ctx);

// swaps the sides and flips strictness; an involution
WitnessComparison dual(const WitnessComparison& c);

// Executable self-substitution: decodes c1 (at most one free variable),
// binds that variable to the numeral of c2 wide scope:
//   exists w (delta_N(w) /\ num_{c2}(w) /\ D(w)).
// On a closed formula the substitution is vacuous (returns the canonical
// code of the same formula).
Code subOracle(const Code& c1, const Code& c2, const ArithContext& ctx);

// c11 = max(rho0(sub), rho0(prov)) + 3
unsigned cEleven(const ArithContext& ctx);

// n = max(rho0(A), rho0(B) + c11, seqSchemeRho0 + c11)
unsigned threshold(const ArithContext& ctx, const FormulaPtr& A,
                   const FormulaPtr& B);

struct RosserResult {
  FormulaPtr diagonal;  // D, with one free variable
  Code diagonalCode;    // encode(D)
  FormulaPtr sentence;  // R
  unsigned rho0 = 0;    // measured with the context's stipulations
  unsigned statedBound = 0;  // max(r(sub),r(prov)) + max(r(S),r(B0)) + 3
};

// The self-referential sentence of the bounded-witness construction:
//   D(w) := exists x (delta_N(x) /\ B0(x) /\
//             exists z (delta_N(z) /\ sub(w,w,z) /\
//               forall y (y <N x -> ~prov(y,z))))
//   R := exists w (delta_N(w) /\ num_l(w) /\ D(w)),  l = encode(D).
// Requires rho0(R) <= budget; the fixed point is checkable exactly:
// subOracle(l, l) == encode(R).
RosserResult rosserSentence(const FormulaPtr& B0, unsigned budget,
                            const ArithContext& ctx);

}  // namespace wb

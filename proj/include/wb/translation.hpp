#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wb/formula.hpp"
#include "wb/signature.hpp"

namespace wb {

struct TranslationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Slot variables: the designated free variables of a translation's domain
// formula and predicate formulas. For dimension m,
//   delta uses slot(0) .. slot(m-1),
//   the formula for an n-ary predicate uses argSlot(i, k, m) for argument
//   i < n, component k < m, which is slot(i*m + k).
// slot(0) prints as "v", slot(j) as "v$j".
Var slot(unsigned j);
Var argSlot(unsigned arg, unsigned component, unsigned dim);

// m-dimensional relative translation, possibly with parameters. The
// identity predicate is translated via predMap at key "=" (arity 2).
struct Translation {
  std::string name;
  Signature source;
  Signature target;
  unsigned dim = 1;
  FormulaPtr delta;
  std::map<std::string, FormulaPtr> predMap;
  std::vector<Var> params;      // w-vector; empty means parameter-free
  std::vector<Var> paramsAlt;   // z-vector for the equivalence E
  FormulaPtr paramDomain;       // pi over params
  FormulaPtr paramEq;           // E over params ++ paramsAlt

  const FormulaPtr& predFormula(const std::string& p) const;
  bool parameterFree() const { return params.empty(); }
};

Translation makeIdentity(const Signature& sig);

// Composition: first tau (source -> mid), then nu (mid -> target);
// dimension is tau.dim * nu.dim. Parameter domains compose per the
// parametric composition clauses.
Translation compose(const Translation& tau, const Translation& nu);

// Disjunctive translation tau<A>nu: behaves as tau on models of A and as
// nu on models of ~A; dimension max(tau.dim, nu.dim) via padding.
Translation disjunctive(const Translation& tau, const FormulaPtr& caseA,
                        const Translation& nu);

// Relativized application A^tau. Free variables of A are assigned fresh
// deterministic blocks unless freeBlocks provides them; parameters stay
// free in the output (or are substituted when paramVars is given).
FormulaPtr apply(const Translation& tau, const FormulaPtr& A,
                 const std::map<Var, std::vector<Var>>* freeBlocks = nullptr,
                 const std::vector<Var>* paramVars = nullptr);

// max of rho0(delta) and rho0 of every predicate formula
unsigned rhoStar(const Translation& tau);

// Conjoin the delta guard on every argument block of every predicate
// formula, making the guard demand true syntactically.
Translation guarded(Translation tau);

Translation parseTranslationText(const std::string& text,
                                 const Signature& source,
                                 const Signature& target);
Translation loadTranslationFile(const std::string& path,
                                const Signature& source,
                                const Signature& target);
std::string printTranslation(const Translation& tau);

// Metadata-only interpretation: the proof obligation is recorded, never
// checked.
struct Interpretation {
  std::string name;
  std::vector<std::pair<std::string, FormulaPtr>> sourceTheory;
  std::vector<std::pair<std::string, FormulaPtr>> targetTheory;
  Translation translation;
};

}  // namespace wb

#pragma once

#include <set>
#include <string>
#include <vector>

#include "wb/complexity.hpp"
#include "wb/formula.hpp"
#include "wb/signature.hpp"
#include "wb/translation.hpp"

namespace wb {

struct SatGenError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Axioms of adjunctive set theory over the arithmetic signature.
// The first extended axiom (the number-theory bootstrap) is a named
// placeholder whose profile is stipulated, not constructed.

struct NamedAxiom {
  std::string name;
  FormulaPtr formula;
  bool placeholder = false;
};

struct AxiomCatalog {
  std::vector<NamedAxiom> AS;      // AS1, AS2
  std::vector<NamedAxiom> ASplus;  // ASplus1 .. ASplus6
};

AxiomCatalog catalog();

// ---------------------------------------------------------------------------
// Definitional library: non-extensional pairing, functions, numerically
// indexed functions and their update operation. Each entry expands fully
// to a formula over the arithmetic signature; internal bound variables
// avoid the given arguments. The default-value parameter x* stays free in
// napp (and its dependents) as kDefaultParam.

extern const Var kDefaultParam;  // printed "xstar"

std::vector<std::string> defNames();
unsigned defArity(const std::string& name);
FormulaPtr defExpand(const std::string& name, const std::vector<Var>& args);

// ---------------------------------------------------------------------------
// Partial satisfaction generator. sat_n(i, al, fm) has the three designated
// free variables below; level 0 additionally documents that only the sign
// variable occurs. Scaffolding predicates (syntax predicates on formula
// codes, the sign predicate, goodness, proof structure) are uninterpreted
// symbols with stipulated profiles; the library predicates napp and upd are
// stipulated at the measured profiles of their expansions.

extern const Var kSatSign;     // i
extern const Var kSatAssign;   // al
extern const Var kSatFormula;  // fm
extern const Var kCutVar;      // x, the free variable of cut formulas

enum class SatMode { Naive, Optimized };

struct SatGenContext {
  Signature theta;
  unsigned cap = 8;
  unsigned scaffoldRho0 = 2;
  SatMode mode = SatMode::Optimized;

  // arithmetic + theta + scaffolding and library predicates
  Signature signature() const;
  // signature() extended with the recursion placeholders SatPrev, SatCur
  Signature templateSignature() const;
  Stipulations stipulations() const;
};

struct SatFamily {
  unsigned n = 0;
  SatMode mode = SatMode::Optimized;
  FormulaPtr formula;
};

// sign-split base: (pos(i) -> bot) /\ (~pos(i) -> top)
FormulaPtr satZero();
// one unfolding step with the recursion placeholder SatPrev(i, al, fm);
// naive mode has two placeholder occurrences, optimized mode one
FormulaPtr satTemplate(const SatGenContext& ctx, SatMode mode);
SatFamily genSat(unsigned n, const SatGenContext& ctx);

// substitution-invariance property of a formula code (free variable fm),
// with the placeholder SatCur(i, al, fm) for the current sat level
FormulaPtr qTemplate(const SatGenContext& ctx);
// qTemplate with sat_n spliced in
FormulaPtr qProperty(unsigned n, const SatGenContext& ctx);

// ---------------------------------------------------------------------------
// Cut families over the sat hierarchy, each with one free variable kCutVar.

enum class CutKind { Jdag, Jcirc, Jstar, Y, Im, Custom };

struct CutFormula {
  CutKind kind = CutKind::Custom;
  unsigned n = 0;
  FormulaPtr formula;
  ComplexityProfile profile;
};

// Jdag(n), Jstar(n) for n >= 1 use sat_n; Jcirc(0) is the number domain
// itself and Jcirc(n) nests Jcirc(n-1) syntactically; Y(n) uses sat_n and
// Jstar(n+1); Im(n) is shortened Jstar(n+1) /\ Y(n).
CutFormula genCut(CutKind kind, unsigned n, const SatGenContext& ctx);

enum class Closure { Plus, Times, Omega1 };

// Applies the additive, multiplicative, and omega1 shortening combinators
// in that order; the input formula appears as a subformula of the output.
CutFormula shortenCut(const CutFormula& J, const std::set<Closure>& closures,
                      const SatGenContext& ctx);

// Parameter-free shortening of a cut given by I(x, params):
// forall params (cut-conditions for {z | I(z, params)} -> I(x, params)).
FormulaPtr parameterFreeShortening(const FormulaPtr& I, const Var& x,
                                   const std::vector<Var>& params);

// shortened Jstar(n+1) /\ Y(n), pushed through the sequence scheme
CutFormula genIm(unsigned n, const SatGenContext& ctx,
                 const Translation& scheme);

// A0 /\ forall x (Im_n(x) -> B(x)) at the threshold level
// n = max(rho0(A0), rho0(B) + c11, m + c11, rhoStar(scheme) + c11).
FormulaPtr conservativeExtension(const FormulaPtr& A0, const FormulaPtr& B,
                                 unsigned m, const Translation& scheme,
                                 const SatGenContext& ctx, unsigned c11);
unsigned conservativeLevel(const FormulaPtr& A0, const FormulaPtr& B,
                           unsigned m, const Translation& scheme,
                           const SatGenContext& ctx, unsigned c11);

// ---------------------------------------------------------------------------
// Empirical growth-law measurement by exact integer differencing.

struct ConstantsReport {
  unsigned c0 = 0;   // slope of rho0(sat_n)
  unsigned c1 = 0;   // intercept of rho0(sat_n)
  unsigned c7 = 0;   // residual of rho0(Jstar_n) against c0 * n
  unsigned c10 = 0;  // residual of rho0(Im_n) against c0 * n
  bool satSlopeConstant = false;
  bool optimizedLinear = false;
  bool naiveSuperLinear = false;
  bool jstarResidualConstant = false;
  bool imResidualConstant = false;
  std::vector<unsigned> satRho;            // index = n
  std::vector<std::size_t> optimizedSize;  // node counts, index = n
  std::vector<std::size_t> naiveSize;
  std::vector<unsigned> jstarRho;  // index = n, 0 for unmeasured levels
  std::vector<unsigned> imRho;

  std::string render() const;
};

ConstantsReport measureConstants(unsigned cap, const SatGenContext& ctx);

}  // namespace wb

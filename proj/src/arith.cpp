#include "wb/arith.hpp"

namespace wb {

Stipulations ArithContext::stipulations() const {
  Stipulations s;
  s[subPred] = subProfile;
  s[provPred] = provProfile;
  // the domain predicate carries the sequence scheme's cost
  if (N.delta && N.delta->kind() == Formula::Kind::Atom)
    s[N.delta->pred()] = ComplexityProfile{seqSchemeRho0, seqSchemeRho0,
                                           seqSchemeRho0, seqSchemeRho0, 0};
  return s;
}

Signature ArithContext::signature() const {
  Signature s = Signature::arithmetic();
  s.setName("arith+subprov");
  s.addPredicate(subPred, 3);
  s.addPredicate(provPred, 2);
  return s;
}

ArithContext ArithContext::standard() {
  ArithContext ctx;
  Signature arith = Signature::arithmetic();
  ctx.N = makeIdentity(arith);
  ctx.N.name = "N";
  ctx.N.delta = Formula::atom("N", {Term::var(slot(0))});
  return ctx;
}

FormulaPtr deltaN(const ArithContext& ctx, const Var& x) {
  if (ctx.N.dim != 1)
    throw ArithError("the arithmetical constructions require a "
                     "one-dimensional number interpretation");
  std::map<Var, TermPtr> s;
  s[slot(0)] = Term::var(x);
  return substituteSim(ctx.N.delta, s);
}

namespace {

FormulaPtr numeralAt(const Code& n, const ArithContext& ctx, const Var& x,
                     unsigned depth) {
  if (n == 0) return Formula::atom("Z", {Term::var(x)});
  Var y{"y", depth};
  FormulaPtr inner, step;
  if (n % 2 == 1) {
    inner = numeralAt(n - 1, ctx, y, depth + 1);
    step = Formula::atom("S", {Term::var(y), Term::var(x)});
  } else {
    inner = numeralAt(n / 2, ctx, y, depth + 1);
    step = Formula::atom("A", {Term::var(y), Term::var(y), Term::var(x)});
  }
  return Formula::exists(
      y, Formula::conj(deltaN(ctx, y), Formula::conj(inner, step)));
}

// destructure exists v (delta_N(v) /\ Body)
void splitRelativized(const FormulaPtr& f, const ArithContext& ctx, Var& v,
                      FormulaPtr& body) {
  if (f->kind() != Formula::Kind::Exists ||
      f->sub()->kind() != Formula::Kind::And ||
      !syntacticEq(f->sub()->left(), deltaN(ctx, f->boundVar())))
    throw ArithError(
        "expected a relativized existential: exists x (delta_N(x) /\\ ...)");
  v = f->boundVar();
  body = f->sub()->right();
}

}  // namespace

FormulaPtr numeral(const Code& n, const ArithContext& ctx, const Var& x) {
  if (n < 0) throw ArithError("numeral of a negative number");
  return numeralAt(n, ctx, x, 0);
}

WitnessComparison makeComparison(const FormulaPtr& A, const FormulaPtr& B,
                                 bool strict, const ArithContext& ctx) {
  Var v;
  FormulaPtr body;
  splitRelativized(A, ctx, v, body);
  splitRelativized(B, ctx, v, body);
  return WitnessComparison{A, B, strict};
}

FormulaPtr comparisonFormula(const WitnessComparison& c,
                             const ArithContext& ctx) {
  Var xa, xb;
  FormulaPtr a0, b0;
  splitRelativized(c.left, ctx, xa, a0);
  splitRelativized(c.right, ctx, xb, b0);
  // bound variable for the inner universal: keep the right side's name
  // unless it clashes with the left witness
  VarSet used = freeVars(a0);
  used.insert(xa);
  auto fvb = freeVars(b0);
  fvb.erase(xb);
  used.insert(fvb.begin(), fvb.end());
  Var y = freshVar(xb.name, used);
  FormulaPtr b0y = substitute(b0, xb, Term::var(y));
  // <= uses lt inside, < uses le inside
  FormulaPtr cmp = Formula::atom(c.strict ? "le" : "lt",
                                 {Term::var(y), Term::var(xa)});
  FormulaPtr inner = Formula::forall(
      y, Formula::implies(cmp, Formula::negation(b0y)));
  return Formula::exists(
      xa, Formula::conj(deltaN(ctx, xa), Formula::conj(a0, inner)));
}

WitnessComparison dual(const WitnessComparison& c) {
  return WitnessComparison{c.right, c.left, !c.strict};
}

namespace {

// exists w (delta_N(w) /\ num_code(w) /\ F), with w the given variable
FormulaPtr wideScopeNumeral(const FormulaPtr& F, const Var& w,
                            const Code& code, const ArithContext& ctx) {
  return Formula::exists(
      w, Formula::conj(deltaN(ctx, w),
                       Formula::conj(numeral(code, ctx, w), F)));
}

}  // namespace

Code subOracle(const Code& c1, const Code& c2, const ArithContext& ctx) {
  FormulaPtr F = godelDecode(c1);
  VarSet fv = freeVars(F);
  if (fv.empty()) return godelEncode(F);
  if (fv.size() != 1)
    throw ArithError("sub requires at most one free variable");
  return godelEncode(wideScopeNumeral(F, *fv.begin(), c2, ctx));
}

unsigned cEleven(const ArithContext& ctx) {
  return std::max(ctx.subProfile.rho0, ctx.provProfile.rho0) + 3;
}

unsigned threshold(const ArithContext& ctx, const FormulaPtr& A,
                   const FormulaPtr& B) {
  Stipulations stip = ctx.stipulations();
  unsigned c11 = cEleven(ctx);
  unsigned n = profile(A, &stip).rho0;
  n = std::max(n, profile(B, &stip).rho0 + c11);
  n = std::max(n, ctx.seqSchemeRho0 + c11);
  return n;
}

RosserResult rosserSentence(const FormulaPtr& B0, unsigned budget,
                            const ArithContext& ctx) {
  VarSet fv = freeVars(B0);
  if (fv.size() != 1)
    throw ArithError("B0 must have exactly one free variable");
  Var xb = *fv.begin();

  VarSet used = allVars(B0);
  Var x = freshVar("x", used);
  used.insert(x);
  Var y = freshVar("y", used);
  used.insert(y);
  Var z = freshVar("z", used);
  used.insert(z);
  Var w = freshVar("w", used);

  FormulaPtr b0x = substitute(B0, xb, Term::var(x));
  FormulaPtr provAtom =
      Formula::atom(ctx.provPred, {Term::var(y), Term::var(z)});
  FormulaPtr guard = Formula::forall(
      y, Formula::implies(Formula::atom("lt", {Term::var(y), Term::var(x)}),
                          Formula::negation(provAtom)));
  FormulaPtr subAtom = Formula::atom(
      ctx.subPred, {Term::var(w), Term::var(w), Term::var(z)});
  FormulaPtr innerEx = Formula::exists(
      z, Formula::conj(deltaN(ctx, z), Formula::conj(subAtom, guard)));
  FormulaPtr D = Formula::exists(
      x, Formula::conj(deltaN(ctx, x), Formula::conj(b0x, innerEx)));

  RosserResult out;
  out.diagonal = D;
  out.diagonalCode = godelEncode(D);
  out.sentence = wideScopeNumeral(D, w, out.diagonalCode, ctx);

  Stipulations stip = ctx.stipulations();
  out.rho0 = profile(out.sentence, &stip).rho0;
  unsigned rB0 = profile(B0, &stip).rho0;
  out.statedBound = std::max(ctx.subProfile.rho0, ctx.provProfile.rho0) +
                   std::max(ctx.seqSchemeRho0, rB0) + 3;
  if (out.rho0 > budget)
    throw ArithError("complexity budget violated: rho0 = " +
                     std::to_string(out.rho0) + " > " +
                     std::to_string(budget));
  return out;
}

}  // namespace wb

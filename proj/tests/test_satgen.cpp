#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wb/model.hpp"
#include "wb/parse.hpp"
#include "wb/satgen.hpp"

using namespace wb;

static SatGenContext testContext() {
  SatGenContext ctx;
  ctx.theta = Signature("theta");
  ctx.theta.addPredicate("P", 1);
  ctx.theta.addPredicate("R", 2);
  return ctx;
}

static std::size_t countAtoms(const FormulaPtr& f, const std::string& pred) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
      return f->pred() == pred ? 1 : 0;
    case Formula::Kind::Equals:
    case Formula::Kind::Top:
    case Formula::Kind::Bot:
      return 0;
    case Formula::Kind::Not:
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      return countAtoms(f->sub(), pred);
    default:
      return countAtoms(f->left(), pred) + countAtoms(f->right(), pred);
  }
}

TEST_CASE("axiom catalog matches the displayed sentences") {
  AxiomCatalog c = catalog();
  REQUIRE(c.AS.size() == 2);
  REQUIRE(c.ASplus.size() == 6);
  CHECK(printFormula(c.AS[0].formula) == "exists y. forall x. ~in(x,y)");
  CHECK(printFormula(c.ASplus[1].formula) ==
        "exists x. forall y. ~in(y,x)");
  // union axiom: forall x,y exists z forall u (u in z <-> (u in x \/ u in y))
  CHECK(printFormula(c.ASplus[3].formula) ==
        "forall x. forall y. exists z. forall u. "
        "((in(u,z) -> (in(u,x) \\/ in(u,y))) /\\ "
        "((in(u,x) \\/ in(u,y)) -> in(u,z)))");
  CHECK(c.ASplus[0].placeholder);
  for (const auto& ax : c.AS) CHECK_FALSE(ax.placeholder);

  // everything parses back against the satgen signature and profiles
  SatGenContext ctx = testContext();
  Signature sig = ctx.signature();
  for (const auto& ax : c.AS) {
    FormulaPtr back = parseFormula(printFormula(ax.formula), sig);
    CHECK(syntacticEq(back, ax.formula));
    CHECK(profile(ax.formula).rho0 > 0);
  }
  for (const auto& ax : c.ASplus)
    CHECK(syntacticEq(parseFormula(printFormula(ax.formula), sig),
                      ax.formula));
  // stable concrete measure of the adjunction axiom
  CHECK(profile(c.AS[1].formula).rho0 == 4);
}

TEST_CASE("library expansion: pair shape and errors") {
  Var u{"u", 0}, v{"v", 0}, w{"w", 0};
  FormulaPtr p = defExpand("pair", {u, v, w});
  REQUIRE(p->kind() == Formula::Kind::Exists);
  REQUIRE(p->sub()->kind() == Formula::Kind::Exists);
  VarSet fv = freeVars(p);
  CHECK(fv == VarSet{u, v, w});
  CHECK_THROWS_AS(defExpand("pair", {u, v}), SatGenError);
  CHECK_THROWS_AS(defExpand("nosuch", {u}), SatGenError);
  for (const auto& name : defNames()) {
    std::vector<Var> args;
    for (unsigned t = 0; t < defArity(name); ++t)
      args.push_back(Var{"z", t});
    FormulaPtr f = defExpand(name, args);
    VarSet free = freeVars(f);
    for (const auto& a : args) CHECK(free.count(a) == 1);
  }
}

TEST_CASE("napp carries the default parameter") {
  Var al{"al", 0}, a{"a", 0}, v{"v", 0};
  FormulaPtr f = defExpand("napp", {al, a, v});
  CHECK(freeVars(f).count(kDefaultParam) == 1);
  // dependents inherit it
  Var be{"be", 0};
  CHECK(freeVars(defExpand("upd", {al, a, be})).count(kDefaultParam) == 1);
  // pure pairing does not
  Var u{"u", 0}, w{"w", 0};
  CHECK(freeVars(defExpand("pair", {u, v, w})).count(kDefaultParam) == 0);
}

TEST_CASE("library semantics on a hand-built membership model") {
  // w = {pa, pb}, pa = {u}, pb = {u, v}: so pair(u, v, w); f0 = {w}
  FiniteModel M;
  std::size_t u = M.addElement("u"), v = M.addElement("v"),
              w = M.addElement("w"), pa = M.addElement("pa"),
              pb = M.addElement("pb"), f0 = M.addElement("f0");
  M.addTuple("in", {pa, w});
  M.addTuple("in", {pb, w});
  M.addTuple("in", {u, pa});
  M.addTuple("in", {u, pb});
  M.addTuple("in", {v, pb});
  M.addTuple("in", {w, f0});

  Var xu{"u", 0}, xv{"v", 0}, xw{"w", 0}, xf{"f", 0};
  Assignment asg{{xu, u}, {xv, v}, {xw, w}, {xf, f0}};
  CHECK(eval(M, defExpand("pair", {xu, xv, xw}), asg));
  CHECK_FALSE(eval(M, defExpand("pair", {xv, xu, xw}), asg));
  CHECK(eval(M, defExpand("Pair", {xw}), asg));
  CHECK(eval(M, defExpand("fun", {xf}), asg));
  CHECK(eval(M, defExpand("dom", {xf, xu}), asg));
  CHECK_FALSE(eval(M, defExpand("dom", {xf, xv}), asg));
  CHECK(eval(M, defExpand("app", {xf, xu, xv}), asg));
  CHECK_FALSE(eval(M, defExpand("app", {xf, xu, xu}), asg));
}

TEST_CASE("sat level zero splits on the sign") {
  FormulaPtr f = satZero();
  REQUIRE(f->kind() == Formula::Kind::And);
  CHECK(f->left()->right()->kind() == Formula::Kind::Bot);
  CHECK(f->right()->right()->kind() == Formula::Kind::Top);
  SatGenContext ctx = testContext();
  SatFamily s0 = genSat(0, ctx);
  CHECK(syntacticEq(s0.formula, f));
}

TEST_CASE("placeholder occurrences: two naive, one optimized") {
  SatGenContext ctx = testContext();
  CHECK(countAtoms(satTemplate(ctx, SatMode::Naive), "SatPrev") == 2);
  CHECK(countAtoms(satTemplate(ctx, SatMode::Optimized), "SatPrev") == 1);
  // templates parse against the template signature
  Signature ts = ctx.templateSignature();
  for (SatMode m : {SatMode::Naive, SatMode::Optimized}) {
    FormulaPtr t = satTemplate(ctx, m);
    CHECK(syntacticEq(parseFormula(printFormula(t), ts), t));
  }
}

TEST_CASE("generated sat formulas parse and have the documented frees") {
  SatGenContext ctx = testContext();
  Signature sig = ctx.signature();
  for (unsigned n = 1; n <= 3; ++n) {
    SatFamily s = genSat(n, ctx);
    CHECK(freeVars(s.formula) ==
          VarSet{kSatSign, kSatAssign, kSatFormula});
    FormulaPtr back = parseFormula(printFormula(s.formula), sig);
    CHECK(syntacticEq(back, s.formula));
  }
  SatGenContext small = ctx;
  small.cap = 2;
  CHECK_THROWS_AS(genSat(3, small), SatGenError);
}

TEST_CASE("growth laws: constant rho slope, linear vs exponential size") {
  SatGenContext ctx = testContext();
  ConstantsReport rep = measureConstants(7, ctx);
  CHECK(rep.satSlopeConstant);
  CHECK(rep.c0 > 0);
  CHECK(rep.optimizedLinear);
  CHECK(rep.naiveSuperLinear);
  CHECK(rep.jstarResidualConstant);
  CHECK(rep.imResidualConstant);
  // intercept consistency on the tail
  for (unsigned n = 2; n <= 7; ++n)
    CHECK(rep.satRho[n] == rep.c0 * n + rep.c1);
  // the two regimes separate
  CHECK(rep.naiveSize[6] > rep.optimizedSize[6]);
}

TEST_CASE("Q property ties two sat occurrences through substitution") {
  SatGenContext ctx = testContext();
  FormulaPtr qt = qTemplate(ctx);
  CHECK(countAtoms(qt, "SatCur") == 4);
  CHECK(freeVars(qt) == VarSet{kSatFormula});
  FormulaPtr q1 = qProperty(1, ctx);
  CHECK(countAtoms(q1, "SatCur") == 0);
  CHECK(freeVars(q1) == VarSet{kSatFormula});
}

TEST_CASE("cut formulas: shape, frees, nesting") {
  SatGenContext ctx = testContext();
  CutFormula j0 = genCut(CutKind::Jcirc, 0, ctx);
  CHECK(printFormula(j0.formula) == "N(x)");

  CutFormula j1 = genCut(CutKind::Jcirc, 1, ctx);
  CutFormula j2 = genCut(CutKind::Jcirc, 2, ctx);
  // each level syntactically contains the previous one
  CHECK(syntacticEq(j2.formula->left(), j1.formula));
  CHECK(syntacticEq(j1.formula->left(), j0.formula));

  for (CutKind k : {CutKind::Jdag, CutKind::Jstar, CutKind::Y}) {
    CutFormula c = genCut(k, 2, ctx);
    CHECK(freeVars(c.formula) == VarSet{kCutVar});
    CHECK(countAtoms(c.formula, "SatCur") == 0);
    CHECK(c.profile.rho0 > 0);
  }
  CHECK(countAtoms(genCut(CutKind::Jstar, 2, ctx).formula, "nule") > 0);
  CHECK(countAtoms(genCut(CutKind::Jstar, 2, ctx).formula, "dstar") > 0);
  CHECK_THROWS_AS(genCut(CutKind::Jstar, 0, ctx), SatGenError);
}

TEST_CASE("shortening: shape, containment, bounded overhead") {
  SatGenContext ctx = testContext();
  CutFormula j = genCut(CutKind::Jstar, 2, ctx);

  CutFormula plus = shortenCut(j, {Closure::Plus}, ctx);
  // J(x) /\ forall y (J(y) -> forall z (A(y,x,z) -> J(z)))
  REQUIRE(plus.formula->kind() == Formula::Kind::And);
  CHECK(syntacticEq(plus.formula->left(), j.formula));
  const FormulaPtr& shifted = plus.formula->right();
  REQUIRE(shifted->kind() == Formula::Kind::Forall);
  CHECK(shifted->sub()->kind() == Formula::Kind::Implies);
  // one combinator atom plus the numerals inside the two J copies
  CHECK(countAtoms(shifted, "A") == 2 * countAtoms(j.formula, "A") + 1);

  unsigned base = 0, over = 0;
  bool constantOverhead = true;
  for (unsigned n = 2; n <= 4; ++n) {
    CutFormula jn = genCut(CutKind::Jstar, n, ctx);
    CutFormula sh = shortenCut(
        jn, {Closure::Plus, Closure::Times, Closure::Omega1}, ctx);
    CHECK(freeVars(sh.formula) == VarSet{kCutVar});
    unsigned d = sh.profile.rho0 - jn.profile.rho0;
    if (n == 2) {
      base = jn.profile.rho0;
      over = d;
    } else if (d != over) {
      constantOverhead = false;
    }
    CHECK(d <= 6);
  }
  CHECK(base > 0);
  CHECK(constantOverhead);
}

TEST_CASE("parameter-free shortening has the guarded universal shape") {
  SatGenContext ctx = testContext();
  Signature sig = ctx.signature();
  Var x{"x", 0}, p{"p", 0};
  FormulaPtr I =
      Formula::conj(parseFormula("N(x)", sig), parseFormula("in(x, p)", sig));
  FormulaPtr star = parameterFreeShortening(I, x, {p});
  REQUIRE(star->kind() == Formula::Kind::Forall);
  CHECK(star->boundVar() == p);
  REQUIRE(star->sub()->kind() == Formula::Kind::Implies);
  CHECK(syntacticEq(star->sub()->right(), I));
  // cut conditions mention zero, successor and downward closure
  const FormulaPtr& cond = star->sub()->left();
  CHECK(countAtoms(cond, "Z") == 1);
  CHECK(countAtoms(cond, "S") == 1);
  CHECK(countAtoms(cond, "le") == 1);
  CHECK(freeVars(star) == VarSet{x});
}

TEST_CASE("Im cut: one free variable, scheme relativization") {
  SatGenContext ctx = testContext();
  Translation ident = makeIdentity(ctx.signature());
  CutFormula im = genIm(2, ctx, ident);
  CHECK(freeVars(im.formula).size() == 1);
  CHECK(im.kind == CutKind::Im);
  // relativized application stays within the additivity envelope
  Stipulations st = ctx.stipulations();
  CutFormula base = shortenCut(
      CutFormula{CutKind::Custom, 2,
                 Formula::conj(genCut(CutKind::Jstar, 3, ctx).formula,
                               genCut(CutKind::Y, 2, ctx).formula),
                 {}},
      {Closure::Plus, Closure::Times, Closure::Omega1}, ctx);
  CHECK(profile(im.formula, &st).rhoE <=
        profile(base.formula, &st).rhoE + rhoStar(ident));
}

TEST_CASE("conservative extension: level arithmetic and output shape") {
  SatGenContext ctx = testContext();
  Signature sig = ctx.signature();
  Translation ident = makeIdentity(ctx.signature());

  // rho0 profiles 9 (A0), 2 (B), explicit m 3, c11 4:
  // n = max(9, 2 + 4, 3 + 4, rhoStar + 4)
  FormulaPtr deep = parseFormula(
      "forall a. exists b. forall c. exists d. forall e. exists f. "
      "forall g. exists h. R(a, h)",
      sig);
  FormulaPtr B2 = parseFormula("exists b. R(x, b)", sig);
  CHECK(profile(deep).rho0 == 9);
  CHECK(profile(B2).rho0 == 2);
  CHECK(conservativeLevel(deep, B2, 3, ident, ctx, 4) == 9);

  // a small instance that fits under the cap
  FormulaPtr A0 = parseFormula("forall x. P(x)", sig);
  FormulaPtr B = parseFormula("P(x) -> P(x)", sig);
  FormulaPtr out = conservativeExtension(A0, B, 1, ident, ctx, 3);
  REQUIRE(out->kind() == Formula::Kind::And);
  CHECK(syntacticEq(out->left(), A0));
  REQUIRE(out->right()->kind() == Formula::Kind::Forall);
  CHECK(out->right()->sub()->kind() == Formula::Kind::Implies);
  CHECK(freeVars(out).empty());

  // degenerate scheme formula is true on a one-element model
  FiniteModel M;
  std::size_t a = M.addElement("a");
  M.addTuple("P", {a});
  CHECK(eval(M, out, {}));

  CHECK_THROWS_AS(conservativeExtension(B, B, 1, ident, ctx, 3),
                  SatGenError);
}

TEST_CASE("constants report renders all measured series") {
  SatGenContext ctx = testContext();
  ConstantsReport rep = measureConstants(5, ctx);
  std::string text = rep.render();
  CHECK(text.find("c0 = ") != std::string::npos);
  CHECK(text.find("c7 = ") != std::string::npos);
  CHECK(text.find("rho0(Im_n)") != std::string::npos);
  // byte stability
  CHECK(measureConstants(5, ctx).render() == text);
}

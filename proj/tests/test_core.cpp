#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wb/complexity.hpp"
#include "wb/elim.hpp"
#include "wb/formula.hpp"
#include "wb/parse.hpp"
#include "wb/signature.hpp"
#include "wb/translation.hpp"

using namespace wb;

static Signature demoSig() {
  Signature s("demo");
  s.addPredicate("P", 3);
  s.addPredicate("Q", 3);
  s.addPredicate("R", 1);
  s.addPredicate("B", 2);
  return s;
}

TEST_CASE("parse and print round trip") {
  Signature s = demoSig();
  const char* inputs[] = {
      "forall x. forall y. exists z. P(x, y, z)",
      "forall x. ((forall y. exists z. P(x, y, z)) -> exists u. exists v. Q(x, u, v))",
      "~x = y",
      "(forall x. R(x)) -> bot",
      "R(x) /\\ R(y) \\/ ~R(z)",
      "exists x$2. B(x$2, x)",
      "top -> (bot \\/ x = x)",
  };
  for (const char* text : inputs) {
    FormulaPtr f = parseFormula(text, s);
    std::string printed = printFormula(f);
    FormulaPtr g = parseFormula(printed, s);
    CHECK_MESSAGE(syntacticEq(f, g), text, " reprinted as ", printed);
    CHECK(printFormula(g) == printed);
  }
}

TEST_CASE("quantifier scope is maximal to the right") {
  Signature s = demoSig();
  FormulaPtr f = parseFormula("forall x. R(x) -> R(y)", s);
  CHECK(f->kind() == Formula::Kind::Forall);
  CHECK(f->sub()->kind() == Formula::Kind::Implies);
  FormulaPtr g = parseFormula("(forall x. R(x)) -> R(y)", s);
  CHECK(g->kind() == Formula::Kind::Implies);
  // printing g must keep the parenthesis
  CHECK(syntacticEq(parseFormula(printFormula(g), s), g));
}

TEST_CASE("precedence and associativity") {
  Signature s = demoSig();
  FormulaPtr f = parseFormula("R(x) -> R(y) -> R(z)", s);
  CHECK(f->right()->kind() == Formula::Kind::Implies);
  FormulaPtr g = parseFormula("~R(x) /\\ R(y) \\/ R(z)", s);
  CHECK(g->kind() == Formula::Kind::Or);
  CHECK(g->left()->kind() == Formula::Kind::And);
  CHECK(g->left()->left()->kind() == Formula::Kind::Not);
}

TEST_CASE("parser rejects bad input") {
  Signature s = demoSig();
  CHECK_THROWS_AS(parseFormula("R(x, y)", s), ParseError);     // arity
  CHECK_THROWS_AS(parseFormula("S(x)", s), ParseError);        // unknown
  CHECK_THROWS_AS(parseFormula("forall x R(x)", s), ParseError);
  CHECK_THROWS_AS(parseFormula("R(x) ->", s), ParseError);
}

TEST_CASE("substitution avoids capture") {
  Signature s = demoSig();
  FormulaPtr f = parseFormula("exists y. B(x, y)", s);
  FormulaPtr g = substitute(f, Var{"x", 0}, Term::var("y"));
  // binder must be renamed away from the substituted y
  CHECK(g->boundVar() != Var{"y", 0});
  VarSet fv = freeVars(g);
  CHECK(fv.count(Var{"y", 0}) == 1);
  CHECK(fv.size() == 1);
}

TEST_CASE("alpha equivalence") {
  Signature s = demoSig();
  FormulaPtr a = parseFormula("forall x. exists y. B(x, y)", s);
  FormulaPtr b = parseFormula("forall u. exists w. B(u, w)", s);
  FormulaPtr c = parseFormula("forall u. exists w. B(w, u)", s);
  CHECK(alphaEq(a, b));
  CHECK(!alphaEq(a, c));
  CHECK(!syntacticEq(a, b));
}

TEST_CASE("alternation measure on the leading example") {
  Signature s = demoSig();
  FormulaPtr f = parseFormula(
      "forall x. ((forall y. exists z. P(x, y, z)) -> exists u. exists v. Q(x, u, v))",
      s);
  ComplexityProfile p = profile(f);
  CHECK(p.rhoE == 4);
  CHECK(p.rhoA == 3);
  CHECK(p.rho0 == 4);
}

TEST_CASE("measure base cases and duality") {
  Signature s = demoSig();
  CHECK(profile(parseFormula("R(x)", s)).rhoE == 1);
  CHECK(profile(parseFormula("R(x)", s)).rhoA == 1);
  FormulaPtr f = parseFormula("forall x. exists y. B(x, y)", s);
  FormulaPtr nf = Formula::negation(f);
  ComplexityProfile p = profile(f), np = profile(nf);
  CHECK(np.rhoE == p.rhoA);
  CHECK(np.rhoA == p.rhoE);
}

TEST_CASE("stipulated atom profiles") {
  Signature s = demoSig();
  Stipulations stip;
  stip["R"] = ComplexityProfile{3, 4, 3, 4, 0};
  FormulaPtr f = parseFormula("exists x. R(x)", s);
  ComplexityProfile p = profile(f, &stip);
  CHECK(p.rhoE == 3);
  CHECK(p.rhoA == 4);
}

TEST_CASE("class membership") {
  Signature s = demoSig();
  FormulaPtr sig1 = parseFormula("exists x. exists y. B(x, y)", s);
  CHECK(classMember(sig1, {ClassKind::SigmaStar, 1}));
  CHECK(!classMember(sig1, {ClassKind::PiStar, 1}));
  CHECK(classMember(sig1, {ClassKind::PiStar, 2}));
  CHECK(classMember(sig1, {ClassKind::DeltaStar, 2}));
  FormulaPtr pi2 = parseFormula("forall x. exists y. B(x, y)", s);
  CHECK(classMember(pi2, {ClassKind::PiStar, 2}));
  CHECK(!classMember(pi2, {ClassKind::SigmaStar, 2}));
  CHECK(!classMember(pi2, {ClassKind::PiStar, 1}));
  // implication hides a polarity flip on the left
  FormulaPtr f = parseFormula("(exists x. R(x)) -> exists y. R(y)", s);
  CHECK(classMember(f, {ClassKind::SigmaStar, 2}));
  CHECK(!classMember(f, {ClassKind::SigmaStar, 1}));
}

TEST_CASE("term elimination produces an equivalent relational formula") {
  Signature s("funs");
  s.addPredicate("R", 1);
  s.addFunction("f", 1);
  s.addFunction("c", 0);
  FormulaPtr f = parseFormula("R(f(f(x)))", s);
  ElimResult r = eliminateTerms(f, s);
  CHECK(!containsFunctions(r.formula));
  CHECK(r.signature.hasPredicate("Gf"));
  CHECK(r.signature.predicateArity("Gf") == 2u);
  // shape: exists y (Gf(x,y) /\ exists y' (Gf(y,y') /\ R(y')))
  CHECK(r.formula->kind() == Formula::Kind::Exists);
  CHECK(profile(r.formula).rhoE >= r.rho0Before);
}

TEST_CASE("identity translation is invisible up to guards") {
  Signature s = demoSig();
  Translation id = makeIdentity(s);
  CHECK(rhoStar(id) == 1);
  FormulaPtr f = parseFormula("forall x. R(x)", s);
  FormulaPtr g = wb::apply(id, f);
  CHECK(printFormula(g) == "forall x. (x = x -> R(x))");
}

TEST_CASE("relativization clauses") {
  Signature src("src");
  src.addPredicate("R", 1);
  Signature tgt("tgt");
  tgt.addPredicate("D", 1);
  tgt.addPredicate("Rt", 1);
  Translation t;
  t.name = "rel";
  t.source = src;
  t.target = tgt;
  t.dim = 1;
  t.delta = parseFormula("D(v)", tgt);
  t.predMap["R"] = parseFormula("Rt(v)", tgt);
  t.predMap["="] = parseFormula("v = v$1", tgt);
  t.paramDomain = Formula::top();
  t.paramEq = Formula::top();

  FormulaPtr all = wb::apply(t, parseFormula("forall x. R(x)", src));
  CHECK(printFormula(all) == "forall x. (D(x) -> Rt(x))");
  FormulaPtr ex = wb::apply(t, parseFormula("exists x. R(x)", src));
  CHECK(printFormula(ex) == "exists x. (D(x) /\\ Rt(x))");
  FormulaPtr eq = wb::apply(t, parseFormula("forall x. x = x", src));
  CHECK(printFormula(eq) == "forall x. (D(x) -> x = x)");
}

TEST_CASE("multi-dimensional application uses argument blocks") {
  Signature src("src");
  src.addPredicate("B", 2);
  Signature tgt("tgt");
  tgt.addPredicate("D2", 2);
  tgt.addPredicate("B4", 4);
  Translation t;
  t.name = "pairs";
  t.source = src;
  t.target = tgt;
  t.dim = 2;
  t.delta = parseFormula("D2(v, v$1)", tgt);
  t.predMap["B"] = parseFormula("B4(v, v$1, v$2, v$3)", tgt);
  t.predMap["="] = parseFormula("v = v$2 /\\ v$1 = v$3", tgt);
  t.paramDomain = Formula::top();
  t.paramEq = Formula::top();

  FormulaPtr f = wb::apply(t, parseFormula("forall x. exists y. B(x, y)", src));
  CHECK(printFormula(f) ==
        "forall x. forall x$1. (D2(x,x$1) -> "
        "exists y. exists y$1. (D2(y,y$1) /\\ B4(x,x$1,y,y$1)))");
  // bound tracks the translation overhead
  ComplexityProfile before = profile(parseFormula("forall x. exists y. B(x, y)", src));
  CHECK(profile(f).rhoE <= before.rhoE + rhoStar(t));
}

TEST_CASE("composition dimension and slot discipline") {
  Signature src("src");
  src.addPredicate("R", 1);
  Signature mid("mid");
  mid.addPredicate("D", 1);
  mid.addPredicate("Rt", 1);
  Signature tgt("tgt");
  tgt.addPredicate("D2", 2);
  tgt.addPredicate("Dt", 1);
  tgt.addPredicate("Rtt", 2);

  Translation t1;
  t1.name = "a";
  t1.source = src;
  t1.target = mid;
  t1.dim = 1;
  t1.delta = parseFormula("D(v)", mid);
  t1.predMap["R"] = parseFormula("Rt(v)", mid);
  t1.predMap["="] = parseFormula("v = v$1", mid);
  t1.paramDomain = Formula::top();
  t1.paramEq = Formula::top();

  Translation t2;
  t2.name = "b";
  t2.source = mid;
  t2.target = tgt;
  t2.dim = 2;
  t2.delta = parseFormula("D2(v, v$1)", tgt);
  t2.predMap["D"] = parseFormula("Dt(v) /\\ Dt(v$1)", tgt);
  t2.predMap["Rt"] = parseFormula("Rtt(v, v$1)", tgt);
  t2.predMap["="] = parseFormula("v = v$2 /\\ v$1 = v$3", tgt);
  t2.paramDomain = Formula::top();
  t2.paramEq = Formula::top();

  Translation c = compose(t1, t2);
  CHECK(c.dim == 2);
  // composite delta mentions only the first dim slots
  VarSet dv = freeVars(c.delta);
  for (const Var& v : dv) {
    CHECK(v.name == "v");
    CHECK(v.index < 2);
  }
  // composite predicate formula for R mentions only slots below arity*dim
  VarSet pv = freeVars(c.predFormula("R"));
  for (const Var& v : pv) CHECK(v.index < 2);
  VarSet ev = freeVars(c.predFormula("="));
  for (const Var& v : ev) CHECK(v.index < 4);

  // applying the composite equals applying the stages in sequence,
  // up to renaming
  FormulaPtr A = parseFormula("exists x. R(x)", src);
  FormulaPtr staged = wb::apply(t2, wb::apply(t1, A));
  FormulaPtr direct = wb::apply(c, A);
  ComplexityProfile ps = profile(staged), pd = profile(direct);
  CHECK(pd.rhoE <= profile(A).rhoE + rhoStar(c));
  CHECK(ps.rhoE <= profile(A).rhoE + rhoStar(t1) + rhoStar(t2));
}

TEST_CASE("disjunctive translation pads the smaller branch") {
  Signature src("src");
  src.addPredicate("R", 1);
  Signature tgt("tgt");
  tgt.addPredicate("D1", 1);
  tgt.addPredicate("D2", 2);
  tgt.addPredicate("R1", 1);
  tgt.addPredicate("R2", 2);
  tgt.addPredicate("C", 1);

  Translation t1;
  t1.name = "one";
  t1.source = src;
  t1.target = tgt;
  t1.dim = 1;
  t1.delta = parseFormula("D1(v)", tgt);
  t1.predMap["R"] = parseFormula("R1(v)", tgt);
  t1.predMap["="] = parseFormula("v = v$1", tgt);
  t1.paramDomain = Formula::top();
  t1.paramEq = Formula::top();

  Translation t2 = t1;
  t2.name = "two";
  t2.dim = 2;
  t2.delta = parseFormula("D2(v, v$1)", tgt);
  t2.predMap["R"] = parseFormula("R2(v, v$1)", tgt);
  t2.predMap["="] = parseFormula("v = v$2 /\\ v$1 = v$3", tgt);

  FormulaPtr caseA = parseFormula("forall x. C(x)", tgt);
  Translation d = disjunctive(t1, caseA, t2);
  CHECK(d.dim == 2);
  // branch one's predicate formula is restricted to the first component
  VarSet pv = freeVars(d.predFormula("R"));
  for (const Var& v : pv) CHECK(v.index < 2);
}

TEST_CASE("translation file round trip") {
  Signature src("src");
  src.addPredicate("R", 1);
  Signature tgt("tgt");
  tgt.addPredicate("D", 1);
  tgt.addPredicate("Rt", 1);
  std::string text =
      "translation rel : src -> tgt dim 1\n"
      "delta: D(v)\n"
      "pred R: Rt(v)\n";
  Translation t = parseTranslationText(text, src, tgt);
  CHECK(t.dim == 1);
  CHECK(t.parameterFree());
  // loading guards predicate formulas with delta
  CHECK(printFormula(t.predFormula("R")) == "(D(v) /\\ Rt(v))");
  Translation t2 =
      parseTranslationText(printTranslation(t), src, tgt);
  CHECK(syntacticEq(t.delta, t2.delta));
  CHECK(syntacticEq(t.predFormula("R"), t2.predFormula("R")));
}

TEST_CASE("signature parsing and reserved arities") {
  Signature s = parseSignatureText("pred P 2\nfun f 1\n# comment\npred Q 0\n");
  CHECK(s.predicateArity("P") == 2u);
  CHECK(s.functionArity("f") == 1u);
  CHECK(s.predicateArity("Q") == 0u);
  CHECK_THROWS_AS(parseSignatureText("pred N 2\n"), SignatureError);
  Signature arith = Signature::arithmetic();
  CHECK(arith.predicateArity("A") == 3u);
  CHECK(arith.predicateArity("in") == 2u);
}

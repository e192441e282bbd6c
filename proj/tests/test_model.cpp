#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gen.hpp"
#include "wb/model.hpp"
#include "wb/parse.hpp"

using namespace wb;

static Signature sigRB() {
  Signature s("rb");
  s.addPredicate("R", 1);
  s.addPredicate("B", 2);
  return s;
}

TEST_CASE("basic evaluation") {
  Signature s = sigRB();
  FiniteModel M = parseModelText("universe a b\npred R: (a)\npred B: (a,b)\n", s);
  CHECK(eval(M, parseFormula("exists x. R(x)", s), {}));
  CHECK(!eval(M, parseFormula("forall x. R(x)", s), {}));
  CHECK(eval(M, parseFormula("bot", s), {}) == false);
  CHECK(eval(M, parseFormula("exists x. exists y. B(x, y) /\\ ~B(y, x)", s), {}));
  CHECK(eval(M, parseFormula("forall x. x = x", s), {}));
  CHECK_THROWS_AS(eval(M, parseFormula("R(z)", s), {}), ModelError);
}

TEST_CASE("function evaluation and totality") {
  Signature s("f");
  s.addPredicate("R", 1);
  s.addFunction("f", 1);
  FiniteModel M =
      parseModelText("universe a b\npred R: (b)\nfun f: a->b b->a\n", s);
  CHECK(eval(M, parseFormula("R(f(x))", s), {{Var{"x", 0}, 0}}));
  CHECK(!eval(M, parseFormula("R(f(f(x)))", s), {{Var{"x", 0}, 0}}));
  CHECK_THROWS_AS(parseModelText("universe a b\nfun f: a->b\n", s), ModelError);
}

TEST_CASE("De Morgan over random models") {
  Signature s = sigRB();
  wbtest::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    FiniteModel M = wbtest::randomModel(rng, s, 3);
    FormulaPtr A = wbtest::closeSentence(
        rng, wbtest::randomFormula(rng, s, 3, {Var{"x", 0}}));
    FormulaPtr B = wbtest::closeSentence(
        rng, wbtest::randomFormula(rng, s, 3, {Var{"x", 0}}));
    bool lhs = eval(M, Formula::negation(Formula::conj(A, B)), {});
    bool rhs = eval(M, Formula::disj(Formula::negation(A),
                                     Formula::negation(B)), {});
    CHECK(lhs == rhs);
  }
}

TEST_CASE("model file round trip") {
  Signature s = sigRB();
  FiniteModel M =
      parseModelText("universe a b c\npred R: (a) (c)\npred B: (a,b)\n", s);
  FiniteModel M2 = parseModelText(printModel(M), s);
  CHECK(M2.universe() == M.universe());
  CHECK(M2.predicates() == M.predicates());
}

TEST_CASE("relativization gives a submodel") {
  Signature src("src");
  src.addPredicate("Q", 1);
  Signature tgt("tgt");
  tgt.addPredicate("P", 1);
  tgt.addPredicate("Q", 1);
  Translation t;
  t.name = "sub";
  t.source = src;
  t.target = tgt;
  t.dim = 1;
  t.delta = parseFormula("P(v)", tgt);
  t.predMap["Q"] = parseFormula("Q(v)", tgt);
  t.predMap["="] = parseFormula("v = v$1", tgt);
  t.paramDomain = Formula::top();
  t.paramEq = Formula::top();

  FiniteModel M =
      parseModelText("universe a b c\npred P: (a) (b)\npred Q: (b) (c)\n", tgt);
  FiniteModel I = internalModel(M, t);
  CHECK(I.size() == 2);
  CHECK(I.universe() == std::vector<std::string>{"a", "b"});
  CHECK(I.holds("Q", {1}));
  CHECK(!I.holds("Q", {0}));
}

TEST_CASE("empty domain is an error") {
  Signature src("src");
  src.addPredicate("Q", 1);
  Signature tgt("tgt");
  tgt.addPredicate("P", 1);
  tgt.addPredicate("Q", 1);
  Translation t;
  t.source = src;
  t.target = tgt;
  t.dim = 1;
  t.delta = parseFormula("P(v)", tgt);
  t.predMap["Q"] = parseFormula("Q(v)", tgt);
  t.predMap["="] = parseFormula("v = v$1", tgt);
  t.paramDomain = Formula::top();
  t.paramEq = Formula::top();
  FiniteModel M = parseModelText("universe a b\npred Q: (a)\n", tgt);
  CHECK_THROWS_WITH_AS(internalModel(M, t), "internal model has empty domain",
                       ModelError);
}

// translated identity = "same C-status"; predicates defined invariantly
static Translation quotientTranslation(const Signature& src,
                                       const Signature& tgt) {
  Translation t;
  t.name = "quot";
  t.source = src;
  t.target = tgt;
  t.dim = 1;
  t.delta = parseFormula("v = v", tgt);
  t.predMap["="] = parseFormula(
      "(C(v) -> C(v$1)) /\\ (C(v$1) -> C(v))", tgt);
  t.predMap["Q"] = parseFormula("exists u. ((C(u) -> C(v)) /\\ (C(v) -> C(u)) /\\ R(u))",
                                tgt);
  t.paramDomain = Formula::top();
  t.paramEq = Formula::top();
  return t;
}

TEST_CASE("two-class quotient") {
  Signature src("src");
  src.addPredicate("Q", 1);
  Signature tgt("tgt");
  tgt.addPredicate("C", 1);
  tgt.addPredicate("R", 1);
  Translation t = quotientTranslation(src, tgt);
  FiniteModel M =
      parseModelText("universe a b c d\npred C: (a) (b)\npred R: (a)\n", tgt);
  FiniteModel I = internalModel(M, t);
  CHECK(I.size() == 2);  // classes {a,b} and {c,d}
  // Q holds on the class containing an R element
  CHECK(I.holds("Q", {0}));
  CHECK(!I.holds("Q", {1}));
}

TEST_CASE("non-congruent identity is rejected distinctly") {
  Signature src("src");
  src.addPredicate("Q", 1);
  Signature tgt("tgt");
  tgt.addPredicate("C", 1);
  tgt.addPredicate("R", 1);
  Translation t = quotientTranslation(src, tgt);
  // Q directly as R breaks congruence when a class mixes R and non-R
  t.predMap["Q"] = parseFormula("R(v)", tgt);
  FiniteModel M =
      parseModelText("universe a b\npred C: (a) (b)\npred R: (a)\n", tgt);
  CHECK_THROWS_WITH_AS(internalModel(M, t),
                       "translated identity is not a congruence for Q",
                       ModelError);
}

TEST_CASE("non-equivalence identity is rejected distinctly") {
  Signature src("src");
  src.addPredicate("Q", 1);
  Signature tgt("tgt");
  tgt.addPredicate("C", 1);
  tgt.addPredicate("R", 1);
  Translation t = quotientTranslation(src, tgt);
  t.predMap["="] = parseFormula("C(v)", tgt);  // not even reflexive
  FiniteModel M = parseModelText("universe a b\npred C: (a)\n", tgt);
  CHECK_THROWS_WITH_AS(internalModel(M, t),
                       "translated identity is not an equivalence relation",
                       ModelError);
}

TEST_CASE("dim 2 with full delta has a squared universe") {
  Signature src("src");
  src.addPredicate("Q", 1);
  Signature tgt("tgt");
  tgt.addPredicate("R", 1);
  Translation t;
  t.source = src;
  t.target = tgt;
  t.dim = 2;
  t.delta = parseFormula("top", tgt);
  t.predMap["Q"] = parseFormula("R(v)", tgt);
  t.predMap["="] = parseFormula("v = v$2 /\\ v$1 = v$3", tgt);
  t.paramDomain = Formula::top();
  t.paramEq = Formula::top();
  FiniteModel M = parseModelText("universe a b c\npred R: (a)\n", tgt);
  FiniteModel I = internalModel(M, t);
  CHECK(I.size() == 9);
}

TEST_CASE("fundamental property for the identity translation") {
  Signature s = sigRB();
  Translation id = makeIdentity(s);
  wbtest::Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    FiniteModel M = wbtest::randomModel(rng, s, 3);
    FormulaPtr A = wbtest::closeSentence(
        rng, wbtest::randomFormula(rng, s, 3, {Var{"x", 0}}));
    CHECK(checkFundamental(M, id, A));
  }
}

TEST_CASE("fundamental property for random translations") {
  Signature src("src");
  src.addPredicate("Q", 1);
  src.addPredicate("S", 2);
  Signature tgt("tgt");
  tgt.addPredicate("R", 1);
  tgt.addPredicate("B", 2);
  wbtest::Rng rng(13);
  int checked = 0;
  for (int i = 0; i < 150; ++i) {
    unsigned dim = 1 + (i % 3);
    Translation t = wbtest::randomTranslation(rng, src, tgt, dim, 2);
    FiniteModel M = wbtest::randomModel(rng, tgt, 2 + (i % 2));
    FormulaPtr A = wbtest::closeSentence(
        rng, wbtest::randomFormula(rng, src, 2, {Var{"x", 0}}));
    CHECK(checkFundamental(M, t, A));
    ++checked;
  }
  CHECK(checked == 150);
}

TEST_CASE("fundamental property through a parametric translation") {
  Signature src("src");
  src.addPredicate("Q", 1);
  Signature tgt("tgt");
  tgt.addPredicate("B", 2);
  Translation t;
  t.name = "par";
  t.source = src;
  t.target = tgt;
  t.dim = 1;
  t.params = {Var{"w", 0}};
  t.paramsAlt = {Var{"z", 0}};
  t.delta = parseFormula("v = v", tgt);
  t.predMap["Q"] = parseFormula("B(v, w)", tgt);
  t.predMap["="] = parseFormula("v = v$1", tgt);
  t.paramDomain = parseFormula("w = w", tgt);
  t.paramEq = parseFormula("w = z", tgt);

  wbtest::Rng rng(17);
  for (int i = 0; i < 50; ++i) {
    FiniteModel M = wbtest::randomModel(rng, tgt, 3);
    FormulaPtr A = wbtest::closeSentence(
        rng, wbtest::randomFormula(rng, src, 2, {Var{"x", 0}}));
    for (const auto& pv : admissibleParams(M, t))
      CHECK(checkFundamental(M, t, A, &pv));
  }
}

TEST_CASE("disjunctive translation follows the case sentence") {
  Signature src("src");
  src.addPredicate("Q", 1);
  Signature tgt("tgt");
  tgt.addPredicate("R", 1);
  tgt.addPredicate("B", 2);

  wbtest::Rng rng(19);
  for (int i = 0; i < 60; ++i) {
    Translation t1 = wbtest::randomTranslation(rng, src, tgt, 1, 2);
    Translation t2 = wbtest::randomTranslation(rng, src, tgt, 2, 2);
    FormulaPtr caseA = parseFormula("exists x. R(x)", tgt);
    Translation d = disjunctive(t1, caseA, t2);
    FiniteModel M = wbtest::randomModel(rng, tgt, 2);
    FormulaPtr A = wbtest::closeSentence(
        rng, wbtest::randomFormula(rng, src, 2, {Var{"x", 0}}));
    CHECK(checkFundamental(M, d, A));
    // agreement with the active branch
    bool active = eval(M, caseA, {});
    const Translation& branch = active ? t1 : t2;
    CHECK(eval(M, wb::apply(d, A), {}) == eval(M, wb::apply(branch, A), {}));
  }
}

TEST_CASE("fundamental property through composition") {
  Signature src("src");
  src.addPredicate("Q", 1);
  Signature mid("mid");
  mid.addPredicate("R", 1);
  mid.addPredicate("B", 2);
  Signature tgt("tgt");
  tgt.addPredicate("P", 1);
  tgt.addPredicate("S", 2);
  wbtest::Rng rng(23);
  for (int i = 0; i < 60; ++i) {
    Translation t1 = wbtest::randomTranslation(rng, src, mid, 1 + (i % 2), 2);
    Translation t2 = wbtest::randomTranslation(rng, mid, tgt, 1 + (i % 2), 2);
    Translation c = compose(t1, t2);
    FiniteModel M = wbtest::randomModel(rng, tgt, 2);
    FormulaPtr A = wbtest::closeSentence(
        rng, wbtest::randomFormula(rng, src, 2, {Var{"x", 0}}));
    CHECK(checkFundamental(M, c, A));
  }
}

TEST_CASE("functoriality on an instance family") {
  Signature src("src");
  src.addPredicate("Q", 1);
  Signature mid("mid");
  mid.addPredicate("R", 1);
  Signature tgt("tgt");
  tgt.addPredicate("P", 1);
  wbtest::Rng rng(29);
  for (int i = 0; i < 40; ++i) {
    Translation t1 = wbtest::randomTranslation(rng, src, mid, 1, 1);
    Translation t2 = wbtest::randomTranslation(rng, mid, tgt, 1, 1);
    Translation c = compose(t1, t2);
    FiniteModel M = wbtest::randomModel(rng, tgt, 3);
    FiniteModel staged = internalModel(internalModel(M, t2), t1);
    FiniteModel direct = internalModel(M, c);
    // same cardinality and the same truth value on all depth-2 sentences
    CHECK(staged.size() == direct.size());
    for (int j = 0; j < 10; ++j) {
      FormulaPtr A = wbtest::closeSentence(
          rng, wbtest::randomFormula(rng, src, 2, {Var{"x", 0}}));
      CHECK(eval(staged, A, {}) == eval(direct, A, {}));
    }
  }
}

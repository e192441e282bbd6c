// Regenerates the valid proof corpus under tests/proofs/. Ten derivation
// schemas, five atom instantiations each; every file is re-checked before
// it is written.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <vector>

#include "wb/parse.hpp"
#include "wb/proof.hpp"
#include "wb/signature.hpp"

using namespace wb;

namespace {

Signature corpusSignature() {
  Signature s("proofs");
  s.addPredicate("P", 1);
  s.addPredicate("Q", 1);
  s.addPredicate("R", 2);
  return s;
}

struct Inst {
  std::string A, B, C;  // propositional slots (closed or open atoms)
  std::string P, Q;     // unary predicate slots for quantifier schemas
  std::string x, y, z;  // variable slots
};

const std::vector<Inst> kInsts = {
    {"P(u)", "Q(u)", "R(u,w)", "P", "Q", "x", "y", "z"},
    {"Q(w)", "P(u)", "Q(u)", "Q", "P", "a", "b", "c"},
    {"R(u,u)", "P(w)", "Q(w)", "P", "Q", "s", "t", "r"},
    {"P(u)", "R(w,u)", "P(w)", "Q", "P", "m", "k", "j"},
    {"Q(u)", "Q(w)", "R(u,w)", "P", "Q", "e", "d", "g"},
};

struct Builder {
  Signature sig = corpusSignature();
  ProofObject p;

  explicit Builder(unsigned n) { p.n = n; }

  FormulaPtr f(const std::string& s) { return parseFormula(s, sig); }

  std::size_t step(const std::vector<std::string>& ctx, const std::string& c,
                   const std::string& rule,
                   std::vector<std::size_t> prem = {}) {
    ProofStep st;
    for (const auto& a : ctx) st.assumptions.push_back(f(a));
    st.formula = f(c);
    st.rule = rule;
    for (std::size_t i : prem) st.premises.push_back(i - 1);
    p.steps.push_back(std::move(st));
    return p.steps.size();
  }
};

using Schema = ProofObject (*)(const Inst&);

// A, B |- A /\ B
ProofObject conjIntro(const Inst& t) {
  Builder b(3);
  b.step({t.A, t.B}, t.A, "assumption");
  b.step({t.A, t.B}, t.B, "assumption");
  b.step({t.A, t.B}, t.A + " /\\ " + t.B, "andI", {1, 2});
  return b.p;
}

// A /\ B |- B /\ A
ProofObject conjComm(const Inst& t) {
  Builder b(3);
  std::string ab = t.A + " /\\ " + t.B;
  b.step({ab}, ab, "assumption");
  b.step({ab}, t.A, "andE1", {1});
  b.step({ab}, t.B, "andE2", {1});
  b.step({ab}, t.B + " /\\ " + t.A, "andI", {3, 2});
  return b.p;
}

// A \/ B, A -> C, B -> C |- C
ProofObject disjElim(const Inst& t) {
  Builder b(3);
  std::string ab = t.A + " \\/ " + t.B;
  std::string ac = t.A + " -> " + t.C, bc = t.B + " -> " + t.C;
  std::vector<std::string> ctx = {ab, ac, bc};
  std::vector<std::string> ctxA = {ab, ac, bc, t.A};
  std::vector<std::string> ctxB = {ab, ac, bc, t.B};
  b.step(ctx, ab, "assumption");
  b.step(ctxA, t.A, "assumption");
  b.step(ctxA, ac, "assumption");
  b.step(ctxA, t.C, "impE", {3, 2});
  b.step(ctxB, t.B, "assumption");
  b.step(ctxB, bc, "assumption");
  b.step(ctxB, t.C, "impE", {6, 5});
  b.step(ctx, t.C, "orE", {1, 4, 7});
  return b.p;
}

// |- A -> (B -> A)
ProofObject weakening(const Inst& t) {
  Builder b(3);
  b.step({t.A, t.B}, t.A, "assumption");
  b.step({t.A}, t.B + " -> " + t.A, "impI", {1});
  b.step({}, t.A + " -> (" + t.B + " -> " + t.A + ")", "impI", {2});
  return b.p;
}

// |- ~(A /\ ~A)
ProofObject nonContradiction(const Inst& t) {
  Builder b(3);
  std::string an = t.A + " /\\ ~" + t.A;
  b.step({an}, an, "assumption");
  b.step({an}, t.A, "andE1", {1});
  b.step({an}, "~" + t.A, "andE2", {1});
  b.step({an}, "bot", "notE", {3, 2});
  b.step({}, "~(" + an + ")", "notI", {4});
  return b.p;
}

// forall x P(x) |- forall y P(y)
ProofObject forallRename(const Inst& t) {
  Builder b(3);
  std::string all = "forall " + t.x + ". " + t.P + "(" + t.x + ")";
  b.step({all}, all, "assumption");
  b.step({all}, t.P + "(" + t.y + ")", "allE", {1});
  b.step({all}, "forall " + t.y + ". " + t.P + "(" + t.y + ")", "allI", {2});
  return b.p;
}

// exists x P(x) |- exists y P(y)
ProofObject existsRename(const Inst& t) {
  Builder b(3);
  std::string ex = "exists " + t.x + ". " + t.P + "(" + t.x + ")";
  std::string witness = t.P + "(" + t.z + ")";
  std::string goal = "exists " + t.y + ". " + t.P + "(" + t.y + ")";
  b.step({ex}, ex, "assumption");
  b.step({ex, witness}, witness, "assumption");
  b.step({ex, witness}, goal, "exI", {2});
  b.step({ex}, goal, "exE", {1, 3});
  return b.p;
}

// forall x (P(x) -> Q(x)), forall x P(x) |- forall x Q(x)
ProofObject forallMP(const Inst& t) {
  Builder b(3);
  std::string impAll = "forall " + t.x + ". (" + t.P + "(" + t.x + ") -> " +
                       t.Q + "(" + t.x + "))";
  std::string pAll = "forall " + t.x + ". " + t.P + "(" + t.x + ")";
  std::vector<std::string> ctx = {impAll, pAll};
  b.step(ctx, impAll, "assumption");
  b.step(ctx, pAll, "assumption");
  b.step(ctx, t.P + "(" + t.y + ") -> " + t.Q + "(" + t.y + ")", "allE", {1});
  b.step(ctx, t.P + "(" + t.y + ")", "allE", {2});
  b.step(ctx, t.Q + "(" + t.y + ")", "impE", {3, 4});
  b.step(ctx, "forall " + t.y + ". " + t.Q + "(" + t.y + ")", "allI", {5});
  return b.p;
}

// x = y, P(x) |- P(y), with a reflexivity side step
ProofObject identity(const Inst& t) {
  Builder b(3);
  std::string e = t.x + " = " + t.y;
  std::string px = t.P + "(" + t.x + ")", py = t.P + "(" + t.y + ")";
  b.step({e, px}, e, "assumption");
  b.step({e, px}, px, "assumption");
  b.step({e, px}, t.y + " = " + t.y, "eqI");
  b.step({e, px}, py, "eqE", {1, 2});
  return b.p;
}

// A /\ ~A |- B (explosion)
ProofObject explosion(const Inst& t) {
  Builder b(3);
  std::string an = t.A + " /\\ ~" + t.A;
  b.step({an}, an, "assumption");
  b.step({an}, t.A, "andE1", {1});
  b.step({an}, "~" + t.A, "andE2", {1});
  b.step({an}, "bot", "notE", {3, 2});
  b.step({an}, t.B, "botE", {4});
  return b.p;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_proofs <output-dir>\n";
    return 1;
  }
  std::filesystem::path dir(argv[1]);
  std::filesystem::create_directories(dir);
  const std::vector<Schema> schemas = {
      conjIntro,  conjComm,      disjElim,     weakening, nonContradiction,
      forallRename, existsRename, forallMP,   identity,  explosion};
  unsigned index = 0;
  for (Schema s : schemas) {
    for (const Inst& t : kInsts) {
      ProofObject p = s(t);
      if (auto v = check(p)) {
        std::cerr << "schema produced an invalid proof at step " << v->step
                  << ": " << v->message << "\n";
        return 1;
      }
      char name[32];
      std::snprintf(name, sizeof name, "valid_%03u.prf", ++index);
      std::ofstream out(dir / name);
      out << printProof(p);
    }
  }
  std::cout << "wrote " << index << " proofs to " << dir.string() << "\n";
  return 0;
}

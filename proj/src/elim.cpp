#include "wb/elim.hpp"

#include "wb/complexity.hpp"

namespace wb {

std::string graphPredicateName(const Signature& sig, const std::string& fn) {
  std::string name = "G" + fn;
  while (sig.hasPredicate(name) || sig.hasFunction(name)) name += "_";
  return name;
}

Signature graphSignature(const Signature& sig) {
  Signature out(sig.name() + "_rel");
  for (const auto& [sym, ar] : sig.predicates()) out.addPredicate(sym, ar);
  for (const auto& [sym, ar] : sig.functions())
    out.addPredicate(graphPredicateName(sig, sym), ar + 1);
  return out;
}

namespace {

struct Flattener {
  const Signature& sig;
  VarSet used;

  struct Constraint {
    std::string graphPred;
    std::vector<Var> args;   // function arguments then the result variable
  };

  // Flattens t to a variable; constraints come out innermost first.
  Var flatten(const TermPtr& t, std::vector<Constraint>& cs) {
    if (t->isVar()) return t->variable();
    std::vector<Var> argVars;
    for (const auto& a : t->args()) argVars.push_back(flatten(a, cs));
    Var y = freshVar("y", used);
    used.insert(y);
    argVars.push_back(y);
    cs.push_back({graphPredicateName(sig, t->fn()), std::move(argVars)});
    return y;
  }

  FormulaPtr elimAtomic(const FormulaPtr& f) {
    std::vector<Constraint> cs;
    std::vector<Var> argVars;
    for (const auto& t : f->args()) argVars.push_back(flatten(t, cs));
    std::vector<TermPtr> args;
    for (const auto& v : argVars) args.push_back(Term::var(v));
    FormulaPtr core = f->kind() == Formula::Kind::Atom
                          ? Formula::atom(f->pred(), std::move(args))
                          : Formula::equals(args[0], args[1]);
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
      std::vector<TermPtr> gargs;
      for (const auto& v : it->args) gargs.push_back(Term::var(v));
      Var bound = it->args.back();
      core = Formula::exists(
          bound, Formula::conj(Formula::atom(it->graphPred, std::move(gargs)),
                               core));
    }
    return core;
  }

  FormulaPtr elim(const FormulaPtr& f) {
    switch (f->kind()) {
      case Formula::Kind::Atom:
      case Formula::Kind::Equals:
        if (!containsFunctions(f)) return f;
        return elimAtomic(f);
      case Formula::Kind::Top:
      case Formula::Kind::Bot:
        return f;
      case Formula::Kind::Not:
        return Formula::negation(elim(f->sub()));
      case Formula::Kind::And:
        return Formula::conj(elim(f->left()), elim(f->right()));
      case Formula::Kind::Or:
        return Formula::disj(elim(f->left()), elim(f->right()));
      case Formula::Kind::Implies:
        return Formula::implies(elim(f->left()), elim(f->right()));
      case Formula::Kind::Forall:
        return Formula::forall(f->boundVar(), elim(f->sub()));
      case Formula::Kind::Exists:
        return Formula::exists(f->boundVar(), elim(f->sub()));
    }
    return f;
  }
};

}  // namespace

ElimResult eliminateTerms(const FormulaPtr& f, const Signature& sig) {
  Flattener fl{sig, allVars(f)};
  ElimResult out;
  out.formula = fl.elim(f);
  out.signature = graphSignature(sig);
  out.rho0Before = profile(f).rho0;
  out.rho0After = profile(out.formula).rho0;
  return out;
}

}  // namespace wb

#include "wb/satgen.hpp"

#include <algorithm>

#include "wb/arith.hpp"

namespace wb {

const Var kDefaultParam{"xstar", 0};
const Var kSatSign{"i", 0};
const Var kSatAssign{"al", 0};
const Var kSatFormula{"fm", 0};
const Var kCutVar{"x", 0};

namespace {

TermPtr tv(const Var& v) { return Term::var(v); }

FormulaPtr at(const std::string& p, const std::vector<Var>& vs) {
  std::vector<TermPtr> args;
  args.reserve(vs.size());
  for (const auto& v : vs) args.push_back(tv(v));
  return Formula::atom(p, std::move(args));
}

FormulaPtr eq(const Var& a, const Var& b) {
  return Formula::equals(tv(a), tv(b));
}

FormulaPtr forallAll(const std::vector<Var>& vs, FormulaPtr f) {
  for (auto it = vs.rbegin(); it != vs.rend(); ++it)
    f = Formula::forall(*it, f);
  return f;
}

FormulaPtr existsAll(const std::vector<Var>& vs, FormulaPtr f) {
  for (auto it = vs.rbegin(); it != vs.rend(); ++it)
    f = Formula::exists(*it, f);
  return f;
}

Var pick(const std::string& name, VarSet& used) {
  Var v = freshVar(name, used);
  used.insert(v);
  return v;
}

// --- definitional library ---------------------------------------------------

FormulaPtr pairF(const Var& u, const Var& v, const Var& w, VarSet used) {
  Var a = pick("a", used), b = pick("b", used), c = pick("c", used),
      d = pick("d", used), e = pick("e", used);
  FormulaPtr sides = Formula::forall(
      c, Formula::iff(at("in", {c, w}), Formula::disj(eq(c, a), eq(c, b))));
  FormulaPtr first =
      Formula::forall(d, Formula::iff(at("in", {d, a}), eq(d, u)));
  FormulaPtr both = Formula::forall(
      e, Formula::iff(at("in", {e, b}), Formula::disj(eq(e, u), eq(e, v))));
  return Formula::exists(
      a, Formula::exists(b, Formula::conjAll({sides, first, both})));
}

FormulaPtr bigPairF(const Var& w, VarSet used) {
  Var u = pick("u", used), v = pick("v", used);
  return Formula::exists(u, Formula::exists(v, pairF(u, v, w, used)));
}

FormulaPtr pi0F(const Var& w, const Var& u, VarSet used) {
  Var v = pick("v", used);
  return Formula::exists(v, pairF(u, v, w, used));
}

FormulaPtr pi1F(const Var& w, const Var& v, VarSet used) {
  Var u = pick("u", used);
  return Formula::exists(u, pairF(u, v, w, used));
}

FormulaPtr funF(const Var& f, VarSet used) {
  Var w = pick("w", used), w2 = pick("w", used), u = pick("u", used);
  FormulaPtr uniq = Formula::forall(
      w2, Formula::implies(
              at("in", {w2, f}),
              Formula::forall(
                  u, Formula::implies(Formula::conj(pi0F(w, u, used),
                                                    pi0F(w2, u, used)),
                                      eq(w, w2)))));
  return Formula::forall(
      w, Formula::implies(at("in", {w, f}),
                          Formula::conj(bigPairF(w, used), uniq)));
}

FormulaPtr domF(const Var& f, const Var& x, VarSet used) {
  Var w = pick("w", used);
  return Formula::conj(
      funF(f, used),
      Formula::exists(w, Formula::conj(at("in", {w, f}), pi0F(w, x, used))));
}

FormulaPtr appF(const Var& f, const Var& u, const Var& v, VarSet used) {
  Var w = pick("w", used);
  return Formula::conj(
      funF(f, used),
      Formula::exists(w,
                      Formula::conj(at("in", {w, f}), pairF(u, v, w, used))));
}

FormulaPtr nfunF(const Var& al, VarSet used) {
  Var w = pick("w", used), w2 = pick("w", used), u = pick("u", used),
      u2 = pick("u", used);
  FormulaPtr numeric = Formula::forall(
      u, Formula::implies(pi0F(w, u, used), at("N", {u})));
  FormulaPtr uniq = Formula::forall(
      w2,
      Formula::implies(
          at("in", {w2, al}),
          Formula::forall(
              u, Formula::forall(
                     u2, Formula::implies(
                             Formula::conjAll({pi0F(w, u, used),
                                               pi0F(w2, u2, used),
                                               at("E", {u, u2})}),
                             eq(w, w2))))));
  return Formula::forall(
      w, Formula::implies(at("in", {w, al}),
                          Formula::conjAll({bigPairF(w, used), numeric,
                                            uniq})));
}

FormulaPtr ndomF(const Var& al, const Var& a, VarSet used) {
  Var w = pick("w", used), b = pick("b", used);
  return Formula::conj(
      nfunF(al, used),
      Formula::exists(
          w, Formula::conj(at("in", {w, al}),
                           Formula::exists(
                               b, Formula::conj(at("E", {a, b}),
                                                pi0F(w, b, used))))));
}

FormulaPtr nappF(const Var& al, const Var& a, const Var& v, VarSet used) {
  Var w = pick("w", used), b = pick("b", used);
  FormulaPtr hit = Formula::exists(
      w, Formula::conj(at("in", {w, al}),
                       Formula::exists(b, Formula::conj(at("E", {a, b}),
                                                        pairF(b, v, w,
                                                              used)))));
  FormulaPtr dflt = Formula::conj(
      Formula::negation(ndomF(al, a, used)),
      Formula::equals(tv(v), tv(kDefaultParam)));
  return Formula::conj(nfunF(al, used), Formula::disj(hit, dflt));
}

FormulaPtr updF(const Var& al, const Var& a, const Var& be, VarSet used) {
  Var b = pick("b", used), x = pick("x", used);
  FormulaPtr domains = Formula::forall(
      b, Formula::iff(ndomF(be, b, used),
                      Formula::disj(ndomF(al, b, used), at("E", {b, a}))));
  FormulaPtr elsewhere = Formula::forall(
      b, Formula::forall(
             x, Formula::implies(
                    Formula::conj(at("N", {b}),
                                  Formula::negation(at("E", {a, b}))),
                    Formula::iff(nappF(al, b, x, used),
                                 nappF(be, b, x, used)))));
  return Formula::conj(domains, elsewhere);
}

FormulaPtr resetF(const Var& al, const Var& a, const Var& y, const Var& be,
                  VarSet used) {
  return Formula::conj(updF(al, a, be, used), nappF(be, a, y, used));
}

struct DefEntry {
  unsigned arity;
  FormulaPtr (*build)(const std::vector<Var>&, VarSet);
};

const std::vector<std::pair<std::string, DefEntry>>& defTable() {
  static const std::vector<std::pair<std::string, DefEntry>> table = {
      {"pair", {3, [](const std::vector<Var>& a, VarSet u) {
                  return pairF(a[0], a[1], a[2], u);
                }}},
      {"Pair", {1, [](const std::vector<Var>& a, VarSet u) {
                  return bigPairF(a[0], u);
                }}},
      {"pi0", {2, [](const std::vector<Var>& a, VarSet u) {
                 return pi0F(a[0], a[1], u);
               }}},
      {"pi1", {2, [](const std::vector<Var>& a, VarSet u) {
                 return pi1F(a[0], a[1], u);
               }}},
      {"fun", {1, [](const std::vector<Var>& a, VarSet u) {
                 return funF(a[0], u);
               }}},
      {"dom", {2, [](const std::vector<Var>& a, VarSet u) {
                 return domF(a[0], a[1], u);
               }}},
      {"app", {3, [](const std::vector<Var>& a, VarSet u) {
                 return appF(a[0], a[1], a[2], u);
               }}},
      {"nfun", {1, [](const std::vector<Var>& a, VarSet u) {
                  return nfunF(a[0], u);
                }}},
      {"ndom", {2, [](const std::vector<Var>& a, VarSet u) {
                  return ndomF(a[0], a[1], u);
                }}},
      {"napp", {3, [](const std::vector<Var>& a, VarSet u) {
                  return nappF(a[0], a[1], a[2], u);
                }}},
      {"upd", {3, [](const std::vector<Var>& a, VarSet u) {
                 return updF(a[0], a[1], a[2], u);
               }}},
      {"reset", {4, [](const std::vector<Var>& a, VarSet u) {
                   return resetF(a[0], a[1], a[2], a[3], u);
                 }}},
  };
  return table;
}

// measured profile of a library expansion, used as the stipulation for the
// predicate when it appears as an abbreviation atom
ComplexityProfile libraryProfile(const std::string& name) {
  unsigned k = defArity(name);
  std::vector<Var> args;
  for (unsigned t = 0; t < k; ++t) args.push_back(Var{"z", t});
  return profile(defExpand(name, args));
}

// scaffolding predicates with stipulated profiles: syntax predicates on
// formula codes, the sign predicate, set goodness, proof structure, the
// omega1 graph, and the bootstrap placeholder
const std::vector<std::pair<std::string, unsigned>>& scaffoldTable() {
  static const std::vector<std::pair<std::string, unsigned>> table = {
      {"pos", 1},     {"sq", 4},      {"goodset", 1}, {"cneg", 2},
      {"cand", 3},    {"cor", 3},     {"cimp", 3},    {"cex", 3},
      {"call", 3},    {"ctop", 1},    {"cbot", 1},    {"ceq", 3},
      {"nule", 2},    {"dstar", 2},   {"freefor", 3}, {"subst", 4},
      {"agreex", 4},  {"prf", 1},     {"plen", 2},    {"concl", 2},
      {"assm", 2},    {"infml", 2},   {"omega1g", 2}, {"NatIntp", 1},
  };
  return table;
}

// replace every occurrence of the placeholder atom pred(v...) by body with
// its designated parameters substituted by the occurrence's arguments
FormulaPtr spliceAtom(const FormulaPtr& f, const std::string& pred,
                      const FormulaPtr& body, const std::vector<Var>& params) {
  switch (f->kind()) {
    case Formula::Kind::Atom: {
      if (f->pred() != pred) return f;
      if (f->args().size() != params.size())
        throw SatGenError("placeholder arity mismatch for " + pred);
      std::map<Var, TermPtr> m;
      for (std::size_t k = 0; k < params.size(); ++k)
        m[params[k]] = f->args()[k];
      return substituteSim(body, m);
    }
    case Formula::Kind::Equals:
    case Formula::Kind::Top:
    case Formula::Kind::Bot:
      return f;
    case Formula::Kind::Not:
      return Formula::negation(spliceAtom(f->sub(), pred, body, params));
    case Formula::Kind::And:
      return Formula::conj(spliceAtom(f->left(), pred, body, params),
                           spliceAtom(f->right(), pred, body, params));
    case Formula::Kind::Or:
      return Formula::disj(spliceAtom(f->left(), pred, body, params),
                           spliceAtom(f->right(), pred, body, params));
    case Formula::Kind::Implies:
      return Formula::implies(spliceAtom(f->left(), pred, body, params),
                              spliceAtom(f->right(), pred, body, params));
    case Formula::Kind::Forall:
      return Formula::forall(f->boundVar(),
                             spliceAtom(f->sub(), pred, body, params));
    case Formula::Kind::Exists:
      return Formula::exists(f->boundVar(),
                             spliceAtom(f->sub(), pred, body, params));
  }
  return f;
}

const std::vector<Var>& satParams() {
  static const std::vector<Var> p = {kSatSign, kSatAssign, kSatFormula};
  return p;
}

// exists y (num_level(y) /\ dstar(F, y)): F codes a formula of the level-th
// starred Delta class
FormulaPtr levelMark(const Var& F, unsigned level) {
  Var y{"y", 0};
  FormulaPtr num = numeral(Code(level), ArithContext::standard(), y);
  return Formula::exists(y, Formula::conj(num, at("dstar", {F, y})));
}

}  // namespace

// --- axiom catalog ----------------------------------------------------------

AxiomCatalog catalog() {
  Var x{"x", 0}, y{"y", 0}, z{"z", 0}, u{"u", 0};
  AxiomCatalog c;

  // empty set; adjunction
  c.AS.push_back({"AS1",
                  Formula::exists(
                      y, Formula::forall(
                             x, Formula::negation(at("in", {x, y})))),
                  false});
  c.AS.push_back(
      {"AS2",
       Formula::forall(
           x, Formula::forall(
                  y, Formula::exists(
                         z, Formula::forall(
                                u, Formula::iff(at("in", {u, z}),
                                                Formula::disj(
                                                    at("in", {u, y}),
                                                    eq(u, x))))))),
       false});

  // number-theory bootstrap block, represented by a stipulated placeholder
  c.ASplus.push_back(
      {"ASplus1", Formula::forall(x, at("NatIntp", {x})), true});
  // empty set
  c.ASplus.push_back({"ASplus2",
                      Formula::exists(
                          x, Formula::forall(
                                 y, Formula::negation(at("in", {y, x})))),
                      false});
  // singleton
  c.ASplus.push_back(
      {"ASplus3",
       Formula::forall(
           x, Formula::exists(
                  y, Formula::forall(z, Formula::iff(at("in", {z, y}),
                                                     eq(z, x))))),
       false});
  auto binop = [&](FormulaPtr combined) {
    return Formula::forall(
        x, Formula::forall(
               y, Formula::exists(
                      z, Formula::forall(
                             u, Formula::iff(at("in", {u, z}), combined)))));
  };
  // union, intersection, subtraction
  c.ASplus.push_back(
      {"ASplus4", binop(Formula::disj(at("in", {u, x}), at("in", {u, y}))),
       false});
  c.ASplus.push_back(
      {"ASplus5", binop(Formula::conj(at("in", {u, x}), at("in", {u, y}))),
       false});
  c.ASplus.push_back(
      {"ASplus6",
       binop(Formula::conj(at("in", {u, x}),
                           Formula::negation(at("in", {u, y})))),
       false});
  return c;
}

// --- definitional library ---------------------------------------------------

std::vector<std::string> defNames() {
  std::vector<std::string> names;
  for (const auto& [n, e] : defTable()) names.push_back(n);
  return names;
}

unsigned defArity(const std::string& name) {
  for (const auto& [n, e] : defTable())
    if (n == name) return e.arity;
  throw SatGenError("unknown library template: " + name);
}

FormulaPtr defExpand(const std::string& name, const std::vector<Var>& args) {
  for (const auto& [n, e] : defTable()) {
    if (n != name) continue;
    if (args.size() != e.arity)
      throw SatGenError("library template " + name + " expects " +
                        std::to_string(e.arity) + " arguments");
    VarSet used(args.begin(), args.end());
    used.insert(kDefaultParam);
    return e.build(args, used);
  }
  throw SatGenError("unknown library template: " + name);
}

// --- context ----------------------------------------------------------------

Signature SatGenContext::signature() const {
  Signature s = Signature::arithmeticPlus(theta);
  s.setName("satgen");
  for (const auto& [name, arity] : scaffoldTable())
    s.addPredicate(name, arity);
  s.addPredicate("napp", 3);
  s.addPredicate("upd", 3);
  for (const auto& [p, k] : theta.predicates())
    s.addPredicate("catom_" + p, 1 + k);
  return s;
}

Signature SatGenContext::templateSignature() const {
  Signature s = signature();
  s.addPredicate("SatPrev", 3);
  s.addPredicate("SatCur", 3);
  return s;
}

Stipulations SatGenContext::stipulations() const {
  Stipulations st;
  ComplexityProfile base{scaffoldRho0, scaffoldRho0, scaffoldRho0,
                         scaffoldRho0, 0};
  for (const auto& [name, arity] : scaffoldTable()) st[name] = base;
  for (const auto& [p, k] : theta.predicates()) st["catom_" + p] = base;
  st["napp"] = libraryProfile("napp");
  st["upd"] = libraryProfile("upd");
  return st;
}

// --- sat family -------------------------------------------------------------

FormulaPtr satZero() {
  FormulaPtr sign = at("pos", {kSatSign});
  return Formula::conj(
      Formula::implies(sign, Formula::bot()),
      Formula::implies(Formula::negation(sign), Formula::top()));
}

FormulaPtr satTemplate(const SatGenContext& ctx, SatMode mode) {
  Var X{"X", 0}, s{"s", 0}, i{"i", 0}, b{"b", 0}, F{"F", 0}, G{"G", 0},
      H{"H", 0}, v{"v", 0}, g{"g", 0}, j{"j", 0}, q{"q", 0}, r{"r", 0},
      w{"w", 0}, t{"t", 0}, k{"k", 0};

  auto pos = [&](const Var& sg) { return at("pos", {sg}); };
  auto neg = [&](const Var& sg) { return Formula::negation(pos(sg)); };
  auto inX = [&](const Var& m) { return at("in", {m, X}); };

  // a sequence of the given sign, assignment and formula is in X
  auto mem = [&](bool positive, const Var& bb, const Var& FF) {
    FormulaPtr sgn = positive ? pos(k) : neg(k);
    return Formula::exists(
        t, Formula::conj(inX(t),
                         Formula::exists(
                             k, Formula::conj(sgn, at("sq", {t, k, bb,
                                                            FF})))));
  };
  auto clause = [&](FormulaPtr body) {
    return Formula::forall(
        s, Formula::implies(
               inX(s),
               forallAll({i, b, F},
                         Formula::implies(at("sq", {s, i, b, F}),
                                          std::move(body)))));
  };

  std::vector<FormulaPtr> clauses;

  // members are sat-sequences
  clauses.push_back(Formula::forall(
      s, Formula::implies(inX(s),
                          existsAll({i, b, F}, at("sq", {s, i, b, F})))));

  // atomic truth, one positive and one negative clause per theta predicate
  for (const auto& [P, arity] : ctx.theta.predicates()) {
    std::vector<Var> codeVars, valVars, catomArgs{F};
    for (unsigned a = 0; a < arity; ++a) {
      codeVars.push_back(Var{"v", a});
      valVars.push_back(Var{"q", a});
      catomArgs.push_back(Var{"v", a});
    }
    for (bool positive : {true, false}) {
      std::vector<FormulaPtr> vals;
      for (unsigned a = 0; a < arity; ++a)
        vals.push_back(at("napp", {b, codeVars[a], valVars[a]}));
      FormulaPtr truth = at(P, valVars);
      if (!positive) truth = Formula::negation(truth);
      vals.push_back(truth);
      clauses.push_back(clause(forallAll(
          codeVars,
          Formula::implies(
              Formula::conj(positive ? pos(i) : neg(i),
                            at("catom_" + P, catomArgs)),
              existsAll(valVars, Formula::conjAll(vals))))));
    }
  }

  // identity atoms
  for (bool positive : {true, false}) {
    FormulaPtr same = eq(q, r);
    if (!positive) same = Formula::negation(same);
    clauses.push_back(clause(forallAll(
        {v, w},
        Formula::implies(
            Formula::conj(positive ? pos(i) : neg(i), at("ceq", {F, v, w})),
            existsAll({q, r},
                      Formula::conjAll({at("napp", {b, v, q}),
                                        at("napp", {b, w, r}), same}))))));
  }

  // truth-constant clauses
  clauses.push_back(clause(Formula::implies(
      Formula::conj(pos(i), at("cbot", {F})), Formula::bot())));
  clauses.push_back(clause(Formula::implies(
      Formula::conj(neg(i), at("ctop", {F})), Formula::bot())));

  // negation flips the sign
  clauses.push_back(clause(Formula::forall(
      G, Formula::implies(Formula::conj(pos(i), at("cneg", {F, G})),
                          mem(false, b, G)))));
  clauses.push_back(clause(Formula::forall(
      G, Formula::implies(Formula::conj(neg(i), at("cneg", {F, G})),
                          mem(true, b, G)))));

  // binary connectives
  auto binClause = [&](const char* code, bool positive, FormulaPtr conseq) {
    return clause(forallAll(
        {G, H}, Formula::implies(Formula::conj(positive ? pos(i) : neg(i),
                                               at(code, {F, G, H})),
                                 std::move(conseq))));
  };
  clauses.push_back(binClause("cand", true,
                              Formula::conj(mem(true, b, G),
                                            mem(true, b, H))));
  clauses.push_back(binClause("cand", false,
                              Formula::disj(mem(false, b, G),
                                            mem(false, b, H))));
  clauses.push_back(binClause("cor", true,
                              Formula::disj(mem(true, b, G),
                                            mem(true, b, H))));
  clauses.push_back(binClause("cor", false,
                              Formula::conj(mem(false, b, G),
                                            mem(false, b, H))));
  clauses.push_back(binClause("cimp", true,
                              Formula::disj(mem(false, b, G),
                                            mem(true, b, H))));
  clauses.push_back(binClause("cimp", false,
                              Formula::conj(mem(true, b, G),
                                            mem(false, b, H))));

  // witnessed quantifier cases: an updated assignment witnesses the body
  auto witClause = [&](const char* code, bool positive) {
    return clause(forallAll(
        {v, G},
        Formula::implies(
            Formula::conj(positive ? pos(i) : neg(i), at(code, {F, v, G})),
            Formula::exists(
                g, Formula::conj(at("upd", {b, v, g}),
                                 mem(positive, g, G))))));
  };
  clauses.push_back(witClause("cex", true));
  clauses.push_back(witClause("call", false));

  // recursion cases: the unwitnessed quantifier signs defer to the
  // previous level with the opposite sign
  FormulaPtr prev =
      Formula::negation(at("SatPrev", {j, b, F}));
  if (mode == SatMode::Naive) {
    clauses.push_back(clause(forallAll(
        {v, G},
        Formula::implies(Formula::conj(neg(i), at("cex", {F, v, G})),
                         Formula::forall(
                             j, Formula::implies(pos(j), prev))))));
    clauses.push_back(clause(forallAll(
        {v, G},
        Formula::implies(Formula::conj(pos(i), at("call", {F, v, G})),
                         Formula::forall(
                             j, Formula::implies(neg(j), prev))))));
  } else {
    FormulaPtr shape = Formula::disj(
        Formula::conj(neg(i), at("cex", {F, v, G})),
        Formula::conj(pos(i), at("call", {F, v, G})));
    FormulaPtr flipped = Formula::disj(Formula::conj(pos(j), neg(i)),
                                       Formula::conj(neg(j), pos(i)));
    clauses.push_back(clause(forallAll(
        {v, G},
        Formula::implies(shape,
                         Formula::forall(
                             j, Formula::implies(flipped, prev))))));
  }

  return Formula::exists(
      X, Formula::conj(
             at("goodset", {X}),
             Formula::conj(
                 Formula::conjAll(clauses),
                 Formula::exists(
                     s, Formula::conj(at("sq", {s, kSatSign, kSatAssign,
                                                kSatFormula}),
                                      inX(s))))));
}

SatFamily genSat(unsigned n, const SatGenContext& ctx) {
  if (n > ctx.cap)
    throw SatGenError("recursion cap exceeded: n = " + std::to_string(n) +
                      " > " + std::to_string(ctx.cap));
  FormulaPtr f = satZero();
  if (n > 0) {
    FormulaPtr tmpl = satTemplate(ctx, ctx.mode);
    for (unsigned k = 0; k < n; ++k)
      f = spliceAtom(tmpl, "SatPrev", f, satParams());
  }
  return SatFamily{n, ctx.mode, f};
}

FormulaPtr qTemplate(const SatGenContext&) {
  Var i{"i", 0}, al{"al", 0}, be{"be", 0}, v{"v", 0}, w{"w", 0}, G{"G", 0},
      q{"q", 0};
  const Var& fm = kSatFormula;
  FormulaPtr pre = Formula::conjAll(
      {at("freefor", {w, v, fm}), at("subst", {fm, v, w, G}),
       at("agreex", {al, be, fm, v}),
       Formula::exists(q, Formula::conj(at("napp", {al, v, q}),
                                        at("napp", {be, w, q})))});
  FormulaPtr same =
      Formula::iff(at("SatCur", {i, al, fm}), at("SatCur", {i, be, G}));
  return forallAll({i, al, be, v, w, G}, Formula::implies(pre, same));
}

FormulaPtr qProperty(unsigned n, const SatGenContext& ctx) {
  return spliceAtom(qTemplate(ctx), "SatCur", genSat(n, ctx).formula,
                    satParams());
}

// --- cut families -----------------------------------------------------------

namespace {

FormulaPtr jstarFormula(unsigned n, const SatGenContext& ctx) {
  Var F{"F", 0};
  FormulaPtr q = substitute(qProperty(n, ctx), kSatFormula, tv(F));
  FormulaPtr guard =
      Formula::conj(at("nule", {F, kCutVar}), levelMark(F, n));
  return Formula::conj(at("N", {kCutVar}),
                       Formula::forall(F, Formula::implies(guard, q)));
}

FormulaPtr jdagFormula(unsigned n, const SatGenContext& ctx) {
  Var b{"b", 0}, F{"F", 0}, i{"i", 0}, j{"j", 0};
  FormulaPtr comm = Formula::iff(
      Formula::negation(at("SatCur", {j, b, F})), at("SatCur", {i, b, F}));
  FormulaPtr signs =
      Formula::conj(at("pos", {i}), Formula::negation(at("pos", {j})));
  FormulaPtr guard =
      Formula::conj(at("nule", {F, kCutVar}), levelMark(F, n));
  FormulaPtr body = forallAll(
      {b, F},
      Formula::implies(guard, forallAll({i, j},
                                        Formula::implies(signs, comm))));
  body = spliceAtom(body, "SatCur", genSat(n, ctx).formula, satParams());
  return Formula::conj(at("N", {kCutVar}), body);
}

FormulaPtr jcircFormula(unsigned n, const SatGenContext& ctx) {
  if (n == 0) return at("N", {kCutVar});
  Var F{"F", 0};
  FormulaPtr q = substitute(qProperty(n, ctx), kSatFormula, tv(F));
  FormulaPtr step = Formula::forall(
      F, Formula::implies(at("nule", {F, kCutVar}), q));
  return Formula::conj(jcircFormula(n - 1, ctx), step);
}

FormulaPtr yFormula(unsigned n, const SatGenContext& ctx) {
  Var p{"p", 0}, F{"F", 0}, G{"G", 0}, b{"b", 0}, i{"i", 0}, z{"z", 0};
  auto satPos = [&](const Var& bb, const Var& FF) {
    return Formula::exists(
        i, Formula::conj(at("pos", {i}), at("SatCur", {i, bb, FF})));
  };
  // every formula of the proof sits inside the next-level cut
  FormulaPtr inCut = Formula::conjAll(
      {substitute(jstarFormula(n + 1, ctx), kCutVar, tv(z)),
       at("nule", {F, z}), levelMark(F, n)});
  FormulaPtr restricted = Formula::forall(
      F, Formula::implies(at("infml", {p, F}), Formula::exists(z, inCut)));
  FormulaPtr premises = Formula::forall(
      G, Formula::implies(at("assm", {p, G}), satPos(b, G)));
  FormulaPtr sound = Formula::forall(
      F, Formula::implies(
             at("concl", {p, F}),
             Formula::forall(b, Formula::implies(premises, satPos(b, F)))));
  FormulaPtr body = Formula::forall(
      p, Formula::implies(
             Formula::conjAll({at("prf", {p}), at("plen", {p, kCutVar}),
                               restricted}),
             sound));
  body = spliceAtom(body, "SatCur", genSat(n, ctx).formula, satParams());
  return Formula::conj(at("N", {kCutVar}), body);
}

}  // namespace

CutFormula genCut(CutKind kind, unsigned n, const SatGenContext& ctx) {
  CutFormula out;
  out.kind = kind;
  out.n = n;
  switch (kind) {
    case CutKind::Jdag:
    case CutKind::Jstar:
      if (n < 1) throw SatGenError("level must be at least 1");
      if (n > ctx.cap) throw SatGenError("recursion cap exceeded");
      out.formula = kind == CutKind::Jdag ? jdagFormula(n, ctx)
                                          : jstarFormula(n, ctx);
      break;
    case CutKind::Jcirc:
      if (n > ctx.cap) throw SatGenError("recursion cap exceeded");
      out.formula = jcircFormula(n, ctx);
      break;
    case CutKind::Y:
      if (n < 1) throw SatGenError("level must be at least 1");
      if (n + 1 > ctx.cap) throw SatGenError("recursion cap exceeded");
      out.formula = yFormula(n, ctx);
      break;
    case CutKind::Im:
      return genIm(n, ctx, makeIdentity(ctx.signature()));
    case CutKind::Custom:
      throw SatGenError("custom cuts are built by the caller");
  }
  Stipulations st = ctx.stipulations();
  out.profile = profile(out.formula, &st);
  return out;
}

CutFormula shortenCut(const CutFormula& J, const std::set<Closure>& closures,
                      const SatGenContext& ctx) {
  if (freeVars(J.formula).size() != 1)
    throw SatGenError("a cut formula must have exactly one free variable");
  const Var& x = kCutVar;
  FormulaPtr f = J.formula;
  VarSet used = allVars(f);
  used.insert(x);
  if (closures.count(Closure::Plus)) {
    Var y = pick("y", used), z = pick("z", used);
    FormulaPtr shifted = Formula::forall(
        y, Formula::implies(
               substitute(f, x, tv(y)),
               Formula::forall(
                   z, Formula::implies(at("A", {y, x, z}),
                                       substitute(f, x, tv(z))))));
    f = Formula::conj(f, shifted);
  }
  if (closures.count(Closure::Times)) {
    Var y = pick("y", used), z = pick("z", used);
    FormulaPtr scaled = Formula::forall(
        y, Formula::implies(
               substitute(f, x, tv(y)),
               Formula::forall(
                   z, Formula::implies(at("M", {y, x, z}),
                                       substitute(f, x, tv(z))))));
    f = Formula::conj(f, scaled);
  }
  if (closures.count(Closure::Omega1)) {
    Var z = pick("z", used);
    FormulaPtr smashed = Formula::forall(
        z, Formula::implies(at("omega1g", {x, z}), substitute(f, x, tv(z))));
    f = Formula::conj(f, smashed);
  }
  CutFormula out;
  out.kind = CutKind::Custom;
  out.n = J.n;
  out.formula = f;
  Stipulations st = ctx.stipulations();
  out.profile = profile(f, &st);
  return out;
}

FormulaPtr parameterFreeShortening(const FormulaPtr& I, const Var& x,
                                   const std::vector<Var>& params) {
  VarSet used = allVars(I);
  used.insert(x);
  used.insert(params.begin(), params.end());
  Var z = pick("z", used), a = pick("a", used), c = pick("c", used);
  auto inst = [&](const Var& v) { return substitute(I, x, tv(v)); };
  FormulaPtr zero = Formula::exists(
      z, Formula::conj(at("Z", {z}), inst(z)));
  FormulaPtr succ = forallAll(
      {a, c}, Formula::implies(Formula::conj(inst(a), at("S", {a, c})),
                               inst(c)));
  FormulaPtr down = forallAll(
      {a, c},
      Formula::implies(
          Formula::conjAll({inst(a), at("N", {c}), at("le", {c, a})}),
          inst(c)));
  FormulaPtr isCut = Formula::conjAll({zero, succ, down});
  return forallAll(params, Formula::implies(isCut, I));
}

CutFormula genIm(unsigned n, const SatGenContext& ctx,
                 const Translation& scheme) {
  if (n < 1) throw SatGenError("level must be at least 1");
  if (n + 1 > ctx.cap) throw SatGenError("recursion cap exceeded");
  CutFormula base;
  base.kind = CutKind::Custom;
  base.n = n;
  base.formula = Formula::conj(jstarFormula(n + 1, ctx), yFormula(n, ctx));
  CutFormula shortened = shortenCut(
      base, {Closure::Plus, Closure::Times, Closure::Omega1}, ctx);
  CutFormula out;
  out.kind = CutKind::Im;
  out.n = n;
  out.formula = wb::apply(scheme, shortened.formula);
  Stipulations st = ctx.stipulations();
  out.profile = profile(out.formula, &st);
  return out;
}

unsigned conservativeLevel(const FormulaPtr& A0, const FormulaPtr& B,
                           unsigned m, const Translation& scheme,
                           const SatGenContext& ctx, unsigned c11) {
  Stipulations st = ctx.stipulations();
  unsigned n = profile(A0, &st).rho0;
  n = std::max(n, profile(B, &st).rho0 + c11);
  n = std::max(n, m + c11);
  n = std::max(n, rhoStar(scheme) + c11);
  return n;
}

FormulaPtr conservativeExtension(const FormulaPtr& A0, const FormulaPtr& B,
                                 unsigned m, const Translation& scheme,
                                 const SatGenContext& ctx, unsigned c11) {
  if (!freeVars(A0).empty())
    throw SatGenError("the base axiom must be a sentence");
  VarSet fvB = freeVars(B);
  if (fvB.size() != 1)
    throw SatGenError("the scheme formula must have one free variable");
  Var xB = *fvB.begin();
  unsigned n = conservativeLevel(A0, B, m, scheme, ctx, c11);
  CutFormula im = genIm(n, ctx, scheme);
  VarSet fvI = freeVars(im.formula);
  if (fvI.size() != 1)
    throw SatGenError("internal invariant: cut formula not unary");
  FormulaPtr guard = substitute(im.formula, *fvI.begin(), tv(xB));
  return Formula::conj(A0,
                       Formula::forall(xB, Formula::implies(guard, B)));
}

// --- constants --------------------------------------------------------------

ConstantsReport measureConstants(unsigned cap, const SatGenContext& ctx) {
  if (cap > 8) throw SatGenError("measurement cap is 8");
  if (cap < 4) throw SatGenError("measurement needs cap >= 4");
  SatGenContext opt = ctx;
  opt.mode = SatMode::Optimized;
  opt.cap = std::max(ctx.cap, cap + 1);
  SatGenContext nai = opt;
  nai.mode = SatMode::Naive;
  Stipulations st = ctx.stipulations();

  ConstantsReport rep;
  for (unsigned n = 0; n <= cap; ++n) {
    SatFamily so = genSat(n, opt);
    SatFamily sn = genSat(n, nai);
    rep.satRho.push_back(profile(so.formula, &st).rho0);
    rep.optimizedSize.push_back(nodeCount(so.formula));
    rep.naiveSize.push_back(nodeCount(sn.formula));
  }

  rep.satSlopeConstant = true;
  for (unsigned n = 2; n + 1 <= cap; ++n) {
    unsigned d = rep.satRho[n + 1] - rep.satRho[n];
    if (n == 2)
      rep.c0 = d;
    else if (d != rep.c0)
      rep.satSlopeConstant = false;
  }
  rep.c1 = rep.satRho[cap] - rep.c0 * cap;

  rep.optimizedLinear = true;
  for (unsigned n = 2; n + 2 <= cap; ++n) {
    std::size_t d1 = rep.optimizedSize[n + 1] - rep.optimizedSize[n];
    std::size_t d2 = rep.optimizedSize[n + 2] - rep.optimizedSize[n + 1];
    if (d1 != d2) rep.optimizedLinear = false;
  }
  rep.naiveSuperLinear = true;
  for (unsigned n = 2; n + 2 <= cap; ++n) {
    std::size_t d1 = rep.naiveSize[n + 1] - rep.naiveSize[n];
    std::size_t d2 = rep.naiveSize[n + 2] - rep.naiveSize[n + 1];
    if (d2 <= d1) rep.naiveSuperLinear = false;
  }

  unsigned hi = std::min(cap, 6u);
  rep.jstarRho.assign(hi + 1, 0);
  rep.jstarResidualConstant = true;
  for (unsigned n = 2; n <= hi; ++n) {
    rep.jstarRho[n] = genCut(CutKind::Jstar, n, opt).profile.rho0;
    unsigned resid = rep.jstarRho[n] - rep.c0 * n;
    if (n == 2)
      rep.c7 = resid;
    else if (resid != rep.c7)
      rep.jstarResidualConstant = false;
  }

  unsigned hiIm = std::min(cap - 1, 6u);
  rep.imRho.assign(hiIm + 1, 0);
  rep.imResidualConstant = true;
  Translation ident = makeIdentity(opt.signature());
  for (unsigned n = 2; n <= hiIm; ++n) {
    rep.imRho[n] = genIm(n, opt, ident).profile.rho0;
    unsigned resid = rep.imRho[n] - rep.c0 * n;
    if (n == 2)
      rep.c10 = resid;
    else if (resid != rep.c10)
      rep.imResidualConstant = false;
  }
  return rep;
}

std::string ConstantsReport::render() const {
  std::string out;
  auto line = [&](const std::string& s) { out += s + "\n"; };
  auto seq = [&](const char* name, const auto& xs) {
    std::string s = name;
    s += ":";
    for (auto v : xs) s += " " + std::to_string(v);
    line(s);
  };
  line("growth constants (exact integer differencing)");
  line("c0 = " + std::to_string(c0) + "  (rho0 slope of sat_n)");
  line("c1 = " + std::to_string(c1) + "  (rho0 intercept of sat_n)");
  line("c7 = " + std::to_string(c7) + "  (rho0 residual of Jstar_n)");
  line("c10 = " + std::to_string(c10) + "  (rho0 residual of Im_n)");
  seq("rho0(sat_n)", satRho);
  seq("size(sat_n) optimized", optimizedSize);
  seq("size(sat_n) naive", naiveSize);
  seq("rho0(Jstar_n)", jstarRho);
  seq("rho0(Im_n)", imRho);
  line(std::string("sat slope constant: ") +
       (satSlopeConstant ? "yes" : "no"));
  line(std::string("optimized size linear: ") +
       (optimizedLinear ? "yes" : "no"));
  line(std::string("naive size super-linear: ") +
       (naiveSuperLinear ? "yes" : "no"));
  line(std::string("Jstar residual constant: ") +
       (jstarResidualConstant ? "yes" : "no"));
  line(std::string("Im residual constant: ") +
       (imResidualConstant ? "yes" : "no"));
  return out;
}

}  // namespace wb

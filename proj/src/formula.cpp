#include "wb/formula.hpp"

#include <functional>
#include <optional>
#include <stdexcept>

namespace wb {

TermPtr Term::var(Var v) {
  auto t = std::make_shared<Term>();
  t->kind_ = Kind::Variable;
  t->var_ = std::move(v);
  return t;
}

TermPtr Term::var(const std::string& name, unsigned index) {
  return var(Var{name, index});
}

TermPtr Term::app(std::string fn, std::vector<TermPtr> args) {
  auto t = std::make_shared<Term>();
  t->kind_ = Kind::App;
  t->fn_ = std::move(fn);
  t->args_ = std::move(args);
  return t;
}

FormulaPtr Formula::atom(std::string pred, std::vector<TermPtr> args) {
  auto f = std::make_shared<Formula>();
  f->kind_ = Kind::Atom;
  f->pred_ = std::move(pred);
  f->args_ = std::move(args);
  return f;
}

FormulaPtr Formula::equals(TermPtr lhs, TermPtr rhs) {
  auto f = std::make_shared<Formula>();
  f->kind_ = Kind::Equals;
  f->args_ = {std::move(lhs), std::move(rhs)};
  return f;
}

FormulaPtr Formula::top() {
  auto f = std::make_shared<Formula>();
  f->kind_ = Kind::Top;
  return f;
}

FormulaPtr Formula::bot() {
  auto f = std::make_shared<Formula>();
  f->kind_ = Kind::Bot;
  return f;
}

FormulaPtr Formula::negation(FormulaPtr a) {
  auto f = std::make_shared<Formula>();
  f->kind_ = Kind::Not;
  f->subs_ = {std::move(a)};
  return f;
}

FormulaPtr Formula::conj(FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind_ = Kind::And;
  f->subs_ = {std::move(a), std::move(b)};
  return f;
}

FormulaPtr Formula::disj(FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind_ = Kind::Or;
  f->subs_ = {std::move(a), std::move(b)};
  return f;
}

FormulaPtr Formula::implies(FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind_ = Kind::Implies;
  f->subs_ = {std::move(a), std::move(b)};
  return f;
}

FormulaPtr Formula::forall(Var v, FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind_ = Kind::Forall;
  f->var_ = std::move(v);
  f->subs_ = {std::move(body)};
  return f;
}

FormulaPtr Formula::exists(Var v, FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind_ = Kind::Exists;
  f->var_ = std::move(v);
  f->subs_ = {std::move(body)};
  return f;
}

FormulaPtr Formula::conjAll(const std::vector<FormulaPtr>& fs) {
  if (fs.empty()) return top();
  FormulaPtr acc = fs.back();
  for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it) acc = conj(*it, acc);
  return acc;
}

FormulaPtr Formula::disjAll(const std::vector<FormulaPtr>& fs) {
  if (fs.empty()) return bot();
  FormulaPtr acc = fs.back();
  for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it) acc = disj(*it, acc);
  return acc;
}

FormulaPtr Formula::iff(FormulaPtr a, FormulaPtr b) {
  return conj(implies(a, b), implies(b, a));
}

VarSet termVars(const TermPtr& t) {
  VarSet out;
  if (t->isVar()) {
    out.insert(t->variable());
  } else {
    for (const auto& a : t->args()) {
      auto s = termVars(a);
      out.insert(s.begin(), s.end());
    }
  }
  return out;
}

static void freeVarsInto(const FormulaPtr& f, VarSet& bound, VarSet& out) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::Equals:
      for (const auto& t : f->args())
        for (const auto& v : termVars(t))
          if (!bound.count(v)) out.insert(v);
      return;
    case Formula::Kind::Top:
    case Formula::Kind::Bot:
      return;
    case Formula::Kind::Not:
      freeVarsInto(f->sub(), bound, out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      freeVarsInto(f->left(), bound, out);
      freeVarsInto(f->right(), bound, out);
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      bool fresh = bound.insert(f->boundVar()).second;
      freeVarsInto(f->sub(), bound, out);
      if (fresh) bound.erase(f->boundVar());
      return;
    }
  }
}

VarSet freeVars(const FormulaPtr& f) {
  VarSet bound, out;
  freeVarsInto(f, bound, out);
  return out;
}

static void allVarsInto(const FormulaPtr& f, VarSet& out) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::Equals:
      for (const auto& t : f->args())
        for (const auto& v : termVars(t)) out.insert(v);
      return;
    case Formula::Kind::Top:
    case Formula::Kind::Bot:
      return;
    case Formula::Kind::Not:
      allVarsInto(f->sub(), out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      allVarsInto(f->left(), out);
      allVarsInto(f->right(), out);
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      out.insert(f->boundVar());
      allVarsInto(f->sub(), out);
      return;
  }
}

VarSet allVars(const FormulaPtr& f) {
  VarSet out;
  allVarsInto(f, out);
  return out;
}

static bool termHasFunctions(const TermPtr& t) {
  if (t->isVar()) return false;
  return true;
}

bool containsFunctions(const FormulaPtr& f) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::Equals:
      for (const auto& t : f->args())
        if (termHasFunctions(t)) return true;
      return false;
    case Formula::Kind::Top:
    case Formula::Kind::Bot:
      return false;
    case Formula::Kind::Not:
      return containsFunctions(f->sub());
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      return containsFunctions(f->left()) || containsFunctions(f->right());
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      return containsFunctions(f->sub());
  }
  return false;
}

Var freshVar(const std::string& name, const VarSet& used) {
  unsigned idx = 0;
  while (used.count(Var{name, idx})) ++idx;
  return Var{name, idx};
}

TermPtr substituteTerm(const TermPtr& t, const Var& v, const TermPtr& repl) {
  if (t->isVar()) return t->variable() == v ? repl : t;
  std::vector<TermPtr> args;
  args.reserve(t->args().size());
  for (const auto& a : t->args()) args.push_back(substituteTerm(a, v, repl));
  return Term::app(t->fn(), std::move(args));
}

namespace {

// One substitution pass. Free-variable sets are memoized by node identity
// so that untouched (often shared) subtrees are skipped outright.
struct Substituter {
  std::map<const Formula*, VarSet> fvMemo;

  const VarSet& fv(const FormulaPtr& f) {
    auto it = fvMemo.find(f.get());
    if (it != fvMemo.end()) return it->second;
    VarSet out;
    switch (f->kind()) {
      case Formula::Kind::Atom:
      case Formula::Kind::Equals:
        for (const auto& t : f->args())
          for (const auto& v : termVars(t)) out.insert(v);
        break;
      case Formula::Kind::Top:
      case Formula::Kind::Bot:
        break;
      case Formula::Kind::Not:
        out = fv(f->sub());
        break;
      case Formula::Kind::And:
      case Formula::Kind::Or:
      case Formula::Kind::Implies: {
        out = fv(f->left());
        const VarSet& r = fv(f->right());
        out.insert(r.begin(), r.end());
        break;
      }
      case Formula::Kind::Forall:
      case Formula::Kind::Exists:
        out = fv(f->sub());
        out.erase(f->boundVar());
        break;
    }
    return fvMemo.emplace(f.get(), std::move(out)).first->second;
  }

  bool touches(const FormulaPtr& f, const std::map<Var, TermPtr>& m) {
    const VarSet& s = fv(f);
    for (const auto& [v, t] : m)
      if (s.count(v)) return true;
    return false;
  }

  FormulaPtr go(const FormulaPtr& f, const std::map<Var, TermPtr>& subst) {
    if (subst.empty() || !touches(f, subst)) return f;
    switch (f->kind()) {
      case Formula::Kind::Atom:
      case Formula::Kind::Equals: {
        std::vector<TermPtr> args;
        args.reserve(f->args().size());
        for (const auto& t : f->args()) {
          // simultaneous: replace only original occurrences
          std::function<TermPtr(const TermPtr&)> rec =
              [&](const TermPtr& u) -> TermPtr {
            if (u->isVar()) {
              auto it = subst.find(u->variable());
              return it == subst.end() ? u : it->second;
            }
            std::vector<TermPtr> as;
            as.reserve(u->args().size());
            for (const auto& a : u->args()) as.push_back(rec(a));
            return Term::app(u->fn(), std::move(as));
          };
          args.push_back(rec(t));
        }
        return f->kind() == Formula::Kind::Atom
                   ? Formula::atom(f->pred(), std::move(args))
                   : Formula::equals(args[0], args[1]);
      }
      case Formula::Kind::Top:
      case Formula::Kind::Bot:
        return f;
      case Formula::Kind::Not:
        return Formula::negation(go(f->sub(), subst));
      case Formula::Kind::And:
        return Formula::conj(go(f->left(), subst), go(f->right(), subst));
      case Formula::Kind::Or:
        return Formula::disj(go(f->left(), subst), go(f->right(), subst));
      case Formula::Kind::Implies:
        return Formula::implies(go(f->left(), subst),
                                go(f->right(), subst));
      case Formula::Kind::Forall:
      case Formula::Kind::Exists: {
        Var bv = f->boundVar();
        std::map<Var, TermPtr> inner = subst;
        inner.erase(bv);
        FormulaPtr body = f->sub();
        {
          const VarSet& bodyFree = fv(body);
          for (auto it = inner.begin(); it != inner.end();) {
            if (!bodyFree.count(it->first)) it = inner.erase(it);
            else ++it;
          }
        }
        if (inner.empty()) return f;
        VarSet images;
        for (const auto& [src, tgt] : inner)
          for (const auto& v : termVars(tgt)) images.insert(v);
        if (images.count(bv)) {
          VarSet used = allVars(body);
          used.insert(images.begin(), images.end());
          for (const auto& [src, tgt] : inner) used.insert(src);
          Var nv = freshVar(bv.name, used);
          body = substitute(body, bv, Term::var(nv));
          bv = nv;
        }
        FormulaPtr nb = go(body, inner);
        return f->kind() == Formula::Kind::Forall ? Formula::forall(bv, nb)
                                                  : Formula::exists(bv, nb);
      }
    }
    return f;
  }
};

}  // namespace

FormulaPtr substituteSim(const FormulaPtr& f,
                         const std::map<Var, TermPtr>& subst) {
  Substituter s;
  return s.go(f, subst);
}

FormulaPtr substitute(const FormulaPtr& f, const Var& v, const TermPtr& t) {
  return substituteSim(f, {{v, t}});
}

static bool alphaEqRec(const FormulaPtr& a, const FormulaPtr& b,
                       std::map<Var, Var>& ab, std::map<Var, Var>& ba) {
  if (a->kind() != b->kind()) return false;
  auto varEq = [&](const Var& x, const Var& y) {
    auto ia = ab.find(x);
    auto ib = ba.find(y);
    if (ia == ab.end() && ib == ba.end()) return x == y;
    if (ia == ab.end() || ib == ba.end()) return false;
    return ia->second == y && ib->second == x;
  };
  std::function<bool(const TermPtr&, const TermPtr&)> termEq =
      [&](const TermPtr& s, const TermPtr& t2) {
        if (s->kind() != t2->kind()) return false;
        if (s->isVar()) return varEq(s->variable(), t2->variable());
        if (s->fn() != t2->fn() || s->args().size() != t2->args().size())
          return false;
        for (size_t i = 0; i < s->args().size(); ++i)
          if (!termEq(s->args()[i], t2->args()[i])) return false;
        return true;
      };
  switch (a->kind()) {
    case Formula::Kind::Atom:
      if (a->pred() != b->pred() || a->args().size() != b->args().size())
        return false;
      [[fallthrough]];
    case Formula::Kind::Equals:
      for (size_t i = 0; i < a->args().size(); ++i)
        if (!termEq(a->args()[i], b->args()[i])) return false;
      return true;
    case Formula::Kind::Top:
    case Formula::Kind::Bot:
      return true;
    case Formula::Kind::Not:
      return alphaEqRec(a->sub(), b->sub(), ab, ba);
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      return alphaEqRec(a->left(), b->left(), ab, ba) &&
             alphaEqRec(a->right(), b->right(), ab, ba);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      const Var& x = a->boundVar();
      const Var& y = b->boundVar();
      auto oldA = ab.find(x) != ab.end()
                      ? std::optional<Var>(ab[x]) : std::nullopt;
      auto oldB = ba.find(y) != ba.end()
                      ? std::optional<Var>(ba[y]) : std::nullopt;
      ab[x] = y;
      ba[y] = x;
      bool ok = alphaEqRec(a->sub(), b->sub(), ab, ba);
      if (oldA) ab[x] = *oldA; else ab.erase(x);
      if (oldB) ba[y] = *oldB; else ba.erase(y);
      return ok;
    }
  }
  return false;
}

bool alphaEq(const FormulaPtr& a, const FormulaPtr& b) {
  std::map<Var, Var> ab, ba;
  return alphaEqRec(a, b, ab, ba);
}

bool syntacticEqTerm(const TermPtr& a, const TermPtr& b) {
  if (a->kind() != b->kind()) return false;
  if (a->isVar()) return a->variable() == b->variable();
  if (a->fn() != b->fn() || a->args().size() != b->args().size()) return false;
  for (size_t i = 0; i < a->args().size(); ++i)
    if (!syntacticEqTerm(a->args()[i], b->args()[i])) return false;
  return true;
}

bool syntacticEq(const FormulaPtr& a, const FormulaPtr& b) {
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case Formula::Kind::Atom:
      if (a->pred() != b->pred()) return false;
      [[fallthrough]];
    case Formula::Kind::Equals:
      if (a->args().size() != b->args().size()) return false;
      for (size_t i = 0; i < a->args().size(); ++i)
        if (!syntacticEqTerm(a->args()[i], b->args()[i])) return false;
      return true;
    case Formula::Kind::Top:
    case Formula::Kind::Bot:
      return true;
    case Formula::Kind::Not:
      return syntacticEq(a->sub(), b->sub());
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      return syntacticEq(a->left(), b->left()) &&
             syntacticEq(a->right(), b->right());
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      return a->boundVar() == b->boundVar() &&
             syntacticEq(a->sub(), b->sub());
  }
  return false;
}

static std::size_t termNodes(const TermPtr& t) {
  if (t->isVar()) return 1;
  std::size_t n = 1;
  for (const auto& a : t->args()) n += termNodes(a);
  return n;
}

std::size_t nodeCount(const FormulaPtr& f) {
  std::size_t n = 1;
  switch (f->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::Equals:
      for (const auto& t : f->args()) n += termNodes(t);
      return n;
    case Formula::Kind::Top:
    case Formula::Kind::Bot:
      return n;
    case Formula::Kind::Not:
      return n + nodeCount(f->sub());
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      return n + nodeCount(f->left()) + nodeCount(f->right());
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      return n + nodeCount(f->sub());
  }
  return n;
}

}  // namespace wb

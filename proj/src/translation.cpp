#include "wb/translation.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "wb/complexity.hpp"
#include "wb/parse.hpp"

namespace wb {

Var slot(unsigned j) { return Var{"v", j}; }

Var argSlot(unsigned arg, unsigned component, unsigned dim) {
  return slot(arg * dim + component);
}

const FormulaPtr& Translation::predFormula(const std::string& p) const {
  auto it = predMap.find(p);
  if (it == predMap.end())
    throw TranslationError("translation " + name +
                           " has no formula for predicate " + p);
  return it->second;
}

namespace {

unsigned predArity(const Signature& sig, const std::string& p) {
  if (p == "=") return 2;
  auto ar = sig.predicateArity(p);
  if (!ar) throw TranslationError("unknown predicate: " + p);
  return *ar;
}

bool sameSymbols(const Signature& a, const Signature& b) {
  return a.predicates() == b.predicates() && a.functions() == b.functions();
}

// delta with its slots replaced by the given variables
FormulaPtr deltaAt(const Translation& tau, const std::vector<Var>& block) {
  std::map<Var, TermPtr> s;
  for (unsigned k = 0; k < tau.dim; ++k) s[slot(k)] = Term::var(block[k]);
  return substituteSim(tau.delta, s);
}

VarSet translationVars(const Translation& tau) {
  VarSet used = allVars(tau.delta);
  for (const auto& [p, f] : tau.predMap) {
    auto vs = allVars(f);
    used.insert(vs.begin(), vs.end());
  }
  used.insert(tau.params.begin(), tau.params.end());
  used.insert(tau.paramsAlt.begin(), tau.paramsAlt.end());
  return used;
}

struct Applier {
  const Translation& tau;
  VarSet used;
  std::map<Var, std::vector<Var>> blocks;
  // per-name low-water mark: every index below it is in used; since used
  // only grows this reproduces freshVar's least-unused choice amortized
  std::map<std::string, unsigned> lowIdx;

  Applier(const Translation& t, const FormulaPtr& a,
          const std::map<Var, std::vector<Var>>* freeBlocks)
      : tau(t) {
    used = translationVars(t);
    auto fv = freeVars(a);
    used.insert(fv.begin(), fv.end());
    if (freeBlocks) {
      blocks = *freeBlocks;
      for (const auto& [v, b] : blocks) used.insert(b.begin(), b.end());
    }
  }

  std::vector<Var> newBlock(const Var& v) {
    std::vector<Var> b;
    b.reserve(tau.dim);
    for (unsigned k = 0; k < tau.dim; ++k) {
      unsigned& low = lowIdx[v.name];
      while (used.count(Var{v.name, low})) ++low;
      Var c{v.name, low++};
      used.insert(c);
      b.push_back(c);
    }
    return b;
  }

  const std::vector<Var>& blockFor(const Var& v) {
    auto it = blocks.find(v);
    if (it != blocks.end()) return it->second;
    return blocks.emplace(v, newBlock(v)).first->second;
  }

  FormulaPtr translateAtom(const std::string& p,
                           const std::vector<TermPtr>& args) {
    const FormulaPtr& body = tau.predFormula(p);
    std::map<Var, TermPtr> s;
    for (unsigned i = 0; i < args.size(); ++i) {
      if (!args[i]->isVar())
        throw TranslationError(
            "apply requires a relational formula (run eliminate_terms first)");
      const auto& b = blockFor(args[i]->variable());
      for (unsigned k = 0; k < tau.dim; ++k)
        s[argSlot(i, k, tau.dim)] = Term::var(b[k]);
    }
    return substituteSim(body, s);
  }

  FormulaPtr go(const FormulaPtr& f) {
    switch (f->kind()) {
      case Formula::Kind::Atom:
        return translateAtom(f->pred(), f->args());
      case Formula::Kind::Equals:
        return translateAtom("=", f->args());
      case Formula::Kind::Top:
      case Formula::Kind::Bot:
        return f;
      case Formula::Kind::Not:
        return Formula::negation(go(f->sub()));
      case Formula::Kind::And:
        return Formula::conj(go(f->left()), go(f->right()));
      case Formula::Kind::Or:
        return Formula::disj(go(f->left()), go(f->right()));
      case Formula::Kind::Implies:
        return Formula::implies(go(f->left()), go(f->right()));
      case Formula::Kind::Forall:
      case Formula::Kind::Exists: {
        const Var& x = f->boundVar();
        auto saved = blocks.find(x) != blocks.end()
                         ? std::optional<std::vector<Var>>(blocks[x])
                         : std::nullopt;
        std::vector<Var> b = newBlock(x);
        blocks[x] = b;
        FormulaPtr body = go(f->sub());
        if (saved) blocks[x] = *saved; else blocks.erase(x);
        FormulaPtr guard = deltaAt(tau, b);
        FormulaPtr out = f->kind() == Formula::Kind::Forall
                             ? Formula::implies(guard, body)
                             : Formula::conj(guard, body);
        for (unsigned k = tau.dim; k-- > 0;)
          out = f->kind() == Formula::Kind::Forall
                    ? Formula::forall(b[k], out)
                    : Formula::exists(b[k], out);
        return out;
      }
    }
    return f;
  }
};

}  // namespace

FormulaPtr apply(const Translation& tau, const FormulaPtr& A,
                 const std::map<Var, std::vector<Var>>* freeBlocks,
                 const std::vector<Var>* paramVars) {
  Applier ap(tau, A, freeBlocks);
  FormulaPtr out = ap.go(A);
  if (paramVars) {
    if (paramVars->size() != tau.params.size())
      throw TranslationError("parameter count mismatch");
    std::map<Var, TermPtr> s;
    for (size_t i = 0; i < tau.params.size(); ++i)
      s[tau.params[i]] = Term::var((*paramVars)[i]);
    out = substituteSim(out, s);
  }
  return out;
}

Translation makeIdentity(const Signature& sig) {
  Translation t;
  t.name = "id_" + sig.name();
  t.source = sig;
  t.target = sig;
  t.dim = 1;
  t.delta = Formula::equals(Term::var(slot(0)), Term::var(slot(0)));
  for (const auto& [p, ar] : sig.predicates()) {
    std::vector<TermPtr> args;
    for (unsigned i = 0; i < ar; ++i) args.push_back(Term::var(slot(i)));
    t.predMap[p] = Formula::atom(p, std::move(args));
  }
  t.predMap["="] = Formula::equals(Term::var(slot(0)), Term::var(slot(1)));
  t.paramDomain = Formula::top();
  t.paramEq = Formula::top();
  return t;
}

unsigned rhoStar(const Translation& tau) {
  unsigned m = profile(tau.delta).rho0;
  for (const auto& [p, f] : tau.predMap) m = std::max(m, profile(f).rho0);
  return m;
}

Translation guarded(Translation tau) {
  for (auto& [p, f] : tau.predMap) {
    unsigned n = predArity(tau.source, p);
    // idempotence: skip a formula that already starts with the guard prefix
    {
      FormulaPtr rest = f;
      bool alreadyGuarded = true;
      for (unsigned i = 0; i < n && alreadyGuarded; ++i) {
        std::vector<Var> block;
        for (unsigned k = 0; k < tau.dim; ++k)
          block.push_back(argSlot(i, k, tau.dim));
        if (rest->kind() == Formula::Kind::And &&
            syntacticEq(rest->left(), deltaAt(tau, block)))
          rest = rest->right();
        else
          alreadyGuarded = false;
      }
      if (alreadyGuarded) continue;
    }
    FormulaPtr g = f;
    for (unsigned i = n; i-- > 0;) {
      std::vector<Var> block;
      for (unsigned k = 0; k < tau.dim; ++k)
        block.push_back(argSlot(i, k, tau.dim));
      g = Formula::conj(deltaAt(tau, block), g);
    }
    f = g;
  }
  return tau;
}

Translation compose(const Translation& tau, const Translation& nu) {
  if (!sameSymbols(tau.target, nu.source))
    throw TranslationError("compose: signature mismatch between " + tau.name +
                           " and " + nu.name);
  const unsigned mt = tau.dim, mn = nu.dim, m = mt * mn;
  Translation out;
  out.name = tau.name + ";" + nu.name;
  out.source = tau.source;
  out.target = nu.target;
  out.dim = m;

  // composite parameters: nu's own, then a nu-block for each tau parameter
  VarSet reserved;
  for (unsigned j = 0; j < m * 4; ++j) reserved.insert(slot(j));
  auto nuVars = translationVars(nu);
  reserved.insert(nuVars.begin(), nuVars.end());
  auto tauVars = translationVars(tau);
  reserved.insert(tauVars.begin(), tauVars.end());

  std::map<Var, std::vector<Var>> tauParamBlocks, tauParamBlocksAlt;
  out.params = nu.params;
  out.paramsAlt = nu.paramsAlt;
  for (const Var& u : tau.params) {
    std::vector<Var> b, bAlt;
    for (unsigned k = 0; k < mn; ++k) {
      Var c = freshVar(u.name, reserved);
      reserved.insert(c);
      b.push_back(c);
    }
    for (unsigned k = 0; k < mn; ++k) {
      Var c = freshVar(u.name, reserved);
      reserved.insert(c);
      bAlt.push_back(c);
    }
    tauParamBlocks[u] = b;
    tauParamBlocksAlt[u] = bAlt;
    out.params.insert(out.params.end(), b.begin(), b.end());
    out.paramsAlt.insert(out.paramsAlt.end(), bAlt.begin(), bAlt.end());
  }

  // nu-image of a mid-level formula whose designated free variables are
  // mapped onto composite slot blocks
  auto viaNu = [&](const FormulaPtr& f,
                   const std::map<Var, std::vector<Var>>& fb) {
    std::map<Var, std::vector<Var>> all = fb;
    for (const auto& [u, b] : tauParamBlocks) all[u] = b;
    return apply(nu, f, &all);
  };

  // delta
  {
    std::vector<FormulaPtr> parts;
    for (unsigned i = 0; i < mt; ++i) {
      std::vector<Var> block;
      for (unsigned k = 0; k < mn; ++k) block.push_back(slot(i * mn + k));
      parts.push_back(deltaAt(nu, block));
    }
    std::map<Var, std::vector<Var>> fb;
    for (unsigned i = 0; i < mt; ++i) {
      std::vector<Var> block;
      for (unsigned k = 0; k < mn; ++k) block.push_back(slot(i * mn + k));
      fb[slot(i)] = block;
    }
    parts.push_back(viaNu(tau.delta, fb));
    out.delta = Formula::conjAll(parts);
  }

  // predicates
  auto composePred = [&](const std::string& p, unsigned n) {
    std::vector<FormulaPtr> parts;
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < mt; ++j) {
        std::vector<Var> block;
        for (unsigned k = 0; k < mn; ++k)
          block.push_back(slot(i * m + j * mn + k));
        parts.push_back(deltaAt(nu, block));
      }
    std::map<Var, std::vector<Var>> fb;
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < mt; ++j) {
        std::vector<Var> block;
        for (unsigned k = 0; k < mn; ++k)
          block.push_back(slot(i * m + j * mn + k));
        fb[argSlot(i, j, mt)] = block;
      }
    parts.push_back(viaNu(tau.predFormula(p), fb));
    return Formula::conjAll(parts);
  };
  for (const auto& [p, ar] : tau.source.predicates())
    out.predMap[p] = composePred(p, ar);
  out.predMap["="] = composePred("=", 2);

  // parameter domain and equivalence
  if (tau.parameterFree() && nu.parameterFree()) {
    out.paramDomain = Formula::top();
    out.paramEq = Formula::top();
  } else {
    std::vector<FormulaPtr> piParts;
    if (!nu.parameterFree()) piParts.push_back(nu.paramDomain);
    for (const Var& u : tau.params)
      piParts.push_back(deltaAt(nu, tauParamBlocks[u]));
    {
      std::map<Var, std::vector<Var>> fb;
      for (const Var& u : tau.params) fb[u] = tauParamBlocks[u];
      piParts.push_back(apply(nu, tau.paramDomain, &fb));
    }
    out.paramDomain = Formula::conjAll(piParts);

    std::vector<FormulaPtr> eqParts;
    if (!nu.parameterFree()) eqParts.push_back(nu.paramEq);
    for (const Var& u : tau.params) {
      eqParts.push_back(deltaAt(nu, tauParamBlocks[u]));
      eqParts.push_back(deltaAt(nu, tauParamBlocksAlt[u]));
    }
    {
      // E_tau(u, z) through nu, u-blocks then alt-blocks
      std::map<Var, std::vector<Var>> fb;
      for (const Var& u : tau.params) fb[u] = tauParamBlocks[u];
      for (size_t i = 0; i < tau.params.size(); ++i)
        fb[tau.paramsAlt[i]] = tauParamBlocksAlt[tau.params[i]];
      eqParts.push_back(apply(nu, tau.paramEq, &fb));
    }
    out.paramEq = Formula::conjAll(eqParts);
  }
  return out;
}

Translation disjunctive(const Translation& tau, const FormulaPtr& caseA,
                        const Translation& nu) {
  if (!sameSymbols(tau.source, nu.source) ||
      !sameSymbols(tau.target, nu.target))
    throw TranslationError("disjunctive: translations must share signatures");
  if (!freeVars(caseA).empty())
    throw TranslationError("disjunctive: case formula must be a sentence");
  if (tau.params != nu.params)
    throw TranslationError(
        "disjunctive: translations must share their parameter list");
  const unsigned m = std::max(tau.dim, nu.dim);
  Translation out;
  out.name = tau.name + "<case>" + nu.name;
  out.source = tau.source;
  out.target = tau.target;
  out.dim = m;
  out.params = tau.params;
  out.paramsAlt = tau.paramsAlt;
  out.paramDomain = tau.paramDomain;
  out.paramEq = tau.paramEq;

  // restriction: components beyond the branch dimension are padding
  auto restrict1 = [&](const Translation& br) {
    // delta already uses slot(0..br.dim-1), which are the first components
    return br.delta;
  };
  auto restrictPred = [&](const Translation& br, const std::string& p,
                          unsigned n) {
    std::map<Var, TermPtr> s;
    for (unsigned i = 0; i < n; ++i)
      for (unsigned k = 0; k < br.dim; ++k)
        s[argSlot(i, k, br.dim)] = Term::var(argSlot(i, k, m));
    return substituteSim(br.predFormula(p), s);
  };

  out.delta = Formula::disj(Formula::conj(caseA, restrict1(tau)),
                            Formula::conj(Formula::negation(caseA),
                                          restrict1(nu)));
  auto branchPred = [&](const std::string& p, unsigned n) {
    return Formula::disj(
        Formula::conj(caseA, restrictPred(tau, p, n)),
        Formula::conj(Formula::negation(caseA), restrictPred(nu, p, n)));
  };
  for (const auto& [p, ar] : tau.source.predicates())
    out.predMap[p] = branchPred(p, ar);
  out.predMap["="] = branchPred("=", 2);
  return out;
}

Translation parseTranslationText(const std::string& text,
                                 const Signature& source,
                                 const Signature& target) {
  Translation t;
  t.source = source;
  t.target = target;
  t.paramDomain = Formula::top();
  t.paramEq = Formula::top();
  std::istringstream in(text);
  std::string line;
  bool sawHeader = false;
  std::string piText, eqText;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    if (kw == "translation") {
      std::string name, colon, s1, arrow, s2, dimkw;
      unsigned m = 1;
      ls >> name >> colon >> s1 >> arrow >> s2 >> dimkw >> m;
      if (colon != ":" || arrow != "->" || dimkw != "dim")
        throw TranslationError("bad translation header: " + line);
      t.name = name;
      t.dim = m;
      sawHeader = true;
    } else if (kw == "delta:") {
      std::string rest;
      std::getline(ls, rest);
      t.delta = parseFormula(rest, target);
    } else if (kw == "pred") {
      std::string p;
      ls >> p;
      if (!p.empty() && p.back() == ':') p.pop_back();
      std::string rest;
      std::getline(ls, rest);
      t.predMap[p] = parseFormula(rest, target);
    } else if (kw == "identity:") {
      std::string rest;
      std::getline(ls, rest);
      t.predMap["="] = parseFormula(rest, target);
    } else if (kw == "params:") {
      std::string w;
      while (ls >> w) t.params.push_back(Var{w, 0});
    } else if (kw == "pi:") {
      std::getline(ls, piText);
    } else if (kw == "eq:") {
      std::getline(ls, eqText);
    } else {
      throw TranslationError("unknown translation line: " + line);
    }
  }
  if (!sawHeader) throw TranslationError("missing translation header");
  if (!t.delta) throw TranslationError("missing delta");
  for (const auto& [p, ar] : source.predicates())
    if (!t.predMap.count(p))
      throw TranslationError("missing pred formula for " + p);
  if (!t.predMap.count("=")) {
    // componentwise identity
    std::vector<FormulaPtr> eqs;
    for (unsigned k = 0; k < t.dim; ++k)
      eqs.push_back(Formula::equals(Term::var(argSlot(0, k, t.dim)),
                                    Term::var(argSlot(1, k, t.dim))));
    t.predMap["="] = Formula::conjAll(eqs);
  }
  if (!t.params.empty()) {
    VarSet used = translationVars(t);
    for (const Var& w : t.params) {
      Var z = freshVar(w.name, used);
      used.insert(z);
      t.paramsAlt.push_back(z);
    }
    if (!piText.empty()) t.paramDomain = parseFormula(piText, target);
    if (!eqText.empty()) {
      t.paramEq = parseFormula(eqText, target);
    } else {
      std::vector<FormulaPtr> eqs;
      for (size_t i = 0; i < t.params.size(); ++i)
        eqs.push_back(Formula::equals(Term::var(t.params[i]),
                                      Term::var(t.paramsAlt[i])));
      t.paramEq = Formula::conjAll(eqs);
    }
  }
  return guarded(std::move(t));
}

Translation loadTranslationFile(const std::string& path,
                                const Signature& source,
                                const Signature& target) {
  std::ifstream in(path);
  if (!in) throw TranslationError("cannot open translation file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parseTranslationText(buf.str(), source, target);
}

std::string printTranslation(const Translation& tau) {
  std::ostringstream out;
  out << "translation " << (tau.name.empty() ? "t" : tau.name) << " : "
      << tau.source.name() << " -> " << tau.target.name() << " dim "
      << tau.dim << "\n";
  out << "delta: " << printFormula(tau.delta) << "\n";
  for (const auto& [p, f] : tau.predMap) {
    if (p == "=")
      out << "identity: " << printFormula(f) << "\n";
    else
      out << "pred " << p << ": " << printFormula(f) << "\n";
  }
  if (!tau.params.empty()) {
    out << "params:";
    for (const auto& w : tau.params) out << " " << w.str();
    out << "\n";
    out << "pi: " << printFormula(tau.paramDomain) << "\n";
    out << "eq: " << printFormula(tau.paramEq) << "\n";
  }
  return out.str();
}

}  // namespace wb

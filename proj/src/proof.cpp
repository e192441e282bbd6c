#include "wb/proof.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "wb/parse.hpp"

namespace wb {

namespace {

using Kind = ProofViolation::Kind;
using FKind = Formula::Kind;

ProofViolation bad(Kind k, std::size_t step, std::string msg) {
  return ProofViolation{k, step, std::move(msg)};
}

// Assumption lists compare as sets of formulas; the printed form is a
// canonical key since printing is deterministic.
std::set<std::string> ctxKey(const std::vector<FormulaPtr>& ctx) {
  std::set<std::string> out;
  for (const auto& f : ctx) out.insert(printFormula(f));
  return out;
}

bool inCtx(const std::vector<FormulaPtr>& ctx, const FormulaPtr& f) {
  return std::any_of(ctx.begin(), ctx.end(),
                     [&](const FormulaPtr& g) { return syntacticEq(f, g); });
}

VarSet ctxFree(const std::vector<FormulaPtr>& ctx) {
  VarSet out;
  for (const auto& f : ctx) {
    VarSet s = freeVars(f);
    out.insert(s.begin(), s.end());
  }
  return out;
}

// Candidate instantiation variables for a quantifier rule: whatever occurs
// free in the instance, plus the bound variable itself (identity instance).
std::vector<Var> candidates(const FormulaPtr& instance, const Var& bound) {
  VarSet s = freeVars(instance);
  s.insert(bound);
  return {s.begin(), s.end()};
}

bool isInstance(const FormulaPtr& body, const Var& bound,
                const FormulaPtr& instance) {
  for (const Var& v : candidates(instance, bound))
    if (syntacticEq(substitute(body, bound, Term::var(v)), instance))
      return true;
  return false;
}

// The one formula present in big but not in small, if the contexts differ
// by exactly that formula.
FormulaPtr ctxExtra(const std::vector<FormulaPtr>& big,
                    const std::vector<FormulaPtr>& small) {
  std::set<std::string> b = ctxKey(big), s = ctxKey(small);
  if (!std::includes(b.begin(), b.end(), s.begin(), s.end())) return nullptr;
  FormulaPtr extra;
  for (const auto& f : big) {
    if (s.count(printFormula(f))) continue;
    if (extra && !syntacticEq(extra, f)) return nullptr;
    extra = f;
  }
  return extra;
}

std::optional<ProofViolation> checkStep(const ProofObject& p, std::size_t i) {
  const ProofStep& st = p.steps[i];
  std::size_t stepNo = i + 1;
  const auto& rule = st.rule;

  auto arity = [&](std::size_t k) -> std::optional<ProofViolation> {
    if (st.premises.size() != k)
      return bad(Kind::BadRule, stepNo,
                 rule + " expects " + std::to_string(k) + " premise(s), got " +
                     std::to_string(st.premises.size()));
    return std::nullopt;
  };
  auto prem = [&](std::size_t k) -> const ProofStep& {
    return p.steps[st.premises[k]];
  };
  auto sameCtx = [&](const ProofStep& q) {
    return ctxKey(q.assumptions) == ctxKey(st.assumptions);
  };
  auto fail = [&](const std::string& msg) {
    return bad(Kind::BadRule, stepNo, rule + ": " + msg);
  };

  if (rule == "assumption") {
    if (auto v = arity(0)) return v;
    if (!inCtx(st.assumptions, st.formula))
      return fail("formula is not among the assumptions");
    return std::nullopt;
  }
  if (rule == "andI") {
    if (auto v = arity(2)) return v;
    if (!sameCtx(prem(0)) || !sameCtx(prem(1)))
      return fail("premise assumptions differ from conclusion assumptions");
    if (st.formula->kind() != FKind::And ||
        !syntacticEq(st.formula->left(), prem(0).formula) ||
        !syntacticEq(st.formula->right(), prem(1).formula))
      return fail("conclusion is not the conjunction of the premises");
    return std::nullopt;
  }
  if (rule == "andE1" || rule == "andE2") {
    if (auto v = arity(1)) return v;
    if (!sameCtx(prem(0)))
      return fail("premise assumptions differ from conclusion assumptions");
    const FormulaPtr& c = prem(0).formula;
    if (c->kind() != FKind::And) return fail("premise is not a conjunction");
    const FormulaPtr& side = rule == "andE1" ? c->left() : c->right();
    if (!syntacticEq(side, st.formula))
      return fail("conclusion is not the selected conjunct");
    return std::nullopt;
  }
  if (rule == "orI1" || rule == "orI2") {
    if (auto v = arity(1)) return v;
    if (!sameCtx(prem(0)))
      return fail("premise assumptions differ from conclusion assumptions");
    if (st.formula->kind() != FKind::Or)
      return fail("conclusion is not a disjunction");
    const FormulaPtr& side =
        rule == "orI1" ? st.formula->left() : st.formula->right();
    if (!syntacticEq(side, prem(0).formula))
      return fail("premise is not the selected disjunct");
    return std::nullopt;
  }
  if (rule == "orE") {
    if (auto v = arity(3)) return v;
    const FormulaPtr& d = prem(0).formula;
    if (!sameCtx(prem(0)))
      return fail("major premise assumptions differ");
    if (d->kind() != FKind::Or) return fail("major premise not a disjunction");
    for (int k = 1; k <= 2; ++k) {
      const ProofStep& q = prem(k);
      if (!syntacticEq(q.formula, st.formula))
        return fail("case conclusion differs from the conclusion");
      FormulaPtr extra = ctxExtra(q.assumptions, st.assumptions);
      const FormulaPtr& want = k == 1 ? d->left() : d->right();
      if (!extra || !syntacticEq(extra, want))
        return fail("case does not assume exactly its disjunct");
    }
    return std::nullopt;
  }
  if (rule == "impI") {
    if (auto v = arity(1)) return v;
    if (st.formula->kind() != FKind::Implies)
      return fail("conclusion is not an implication");
    if (!syntacticEq(prem(0).formula, st.formula->right()))
      return fail("premise is not the consequent");
    FormulaPtr extra = ctxExtra(prem(0).assumptions, st.assumptions);
    if (!extra || !syntacticEq(extra, st.formula->left()))
      return fail("premise does not assume exactly the antecedent");
    return std::nullopt;
  }
  if (rule == "impE") {
    if (auto v = arity(2)) return v;
    if (!sameCtx(prem(0)) || !sameCtx(prem(1)))
      return fail("premise assumptions differ from conclusion assumptions");
    const FormulaPtr& imp = prem(0).formula;
    if (imp->kind() != FKind::Implies ||
        !syntacticEq(imp->left(), prem(1).formula) ||
        !syntacticEq(imp->right(), st.formula))
      return fail("premises do not match modus ponens");
    return std::nullopt;
  }
  if (rule == "notI") {
    if (auto v = arity(1)) return v;
    if (st.formula->kind() != FKind::Not)
      return fail("conclusion is not a negation");
    if (prem(0).formula->kind() != FKind::Bot)
      return fail("premise is not bottom");
    FormulaPtr extra = ctxExtra(prem(0).assumptions, st.assumptions);
    if (!extra || !syntacticEq(extra, st.formula->sub()))
      return fail("premise does not assume exactly the negated formula");
    return std::nullopt;
  }
  if (rule == "notE") {
    if (auto v = arity(2)) return v;
    if (!sameCtx(prem(0)) || !sameCtx(prem(1)))
      return fail("premise assumptions differ from conclusion assumptions");
    if (st.formula->kind() != FKind::Bot)
      return fail("conclusion is not bottom");
    const FormulaPtr& neg = prem(0).formula;
    if (neg->kind() != FKind::Not || !syntacticEq(neg->sub(), prem(1).formula))
      return fail("premises are not a formula and its negation");
    return std::nullopt;
  }
  if (rule == "botE") {
    if (auto v = arity(1)) return v;
    if (!sameCtx(prem(0)))
      return fail("premise assumptions differ from conclusion assumptions");
    if (prem(0).formula->kind() != FKind::Bot)
      return fail("premise is not bottom");
    return std::nullopt;
  }
  if (rule == "allI") {
    if (auto v = arity(1)) return v;
    if (!sameCtx(prem(0)))
      return fail("premise assumptions differ from conclusion assumptions");
    if (st.formula->kind() != FKind::Forall)
      return fail("conclusion is not universal");
    if (!syntacticEq(st.formula->sub(), prem(0).formula))
      return fail("conclusion body differs from the premise");
    if (ctxFree(st.assumptions).count(st.formula->boundVar()))
      return bad(Kind::Eigenvariable, stepNo,
                 "allI eigenvariable " + st.formula->boundVar().str() +
                     " occurs free in the assumptions");
    return std::nullopt;
  }
  if (rule == "allE") {
    if (auto v = arity(1)) return v;
    if (!sameCtx(prem(0)))
      return fail("premise assumptions differ from conclusion assumptions");
    const FormulaPtr& u = prem(0).formula;
    if (u->kind() != FKind::Forall) return fail("premise is not universal");
    if (!isInstance(u->sub(), u->boundVar(), st.formula))
      return fail("conclusion is not a variable instance of the premise");
    return std::nullopt;
  }
  if (rule == "exI") {
    if (auto v = arity(1)) return v;
    if (!sameCtx(prem(0)))
      return fail("premise assumptions differ from conclusion assumptions");
    if (st.formula->kind() != FKind::Exists)
      return fail("conclusion is not existential");
    if (!isInstance(st.formula->sub(), st.formula->boundVar(),
                    prem(0).formula))
      return fail("premise is not a variable instance of the conclusion");
    return std::nullopt;
  }
  if (rule == "exE") {
    if (auto v = arity(2)) return v;
    const FormulaPtr& ex = prem(0).formula;
    if (!sameCtx(prem(0))) return fail("major premise assumptions differ");
    if (ex->kind() != FKind::Exists)
      return fail("major premise not existential");
    const ProofStep& q = prem(1);
    if (!syntacticEq(q.formula, st.formula))
      return fail("minor conclusion differs from the conclusion");
    FormulaPtr extra = ctxExtra(q.assumptions, st.assumptions);
    if (!extra) return fail("minor premise does not add exactly one witness");
    // locate the eigenvariable realizing extra as an instance of the body
    VarSet blocked = ctxFree(st.assumptions);
    {
      VarSet s = freeVars(st.formula);
      blocked.insert(s.begin(), s.end());
      s = freeVars(ex);
      blocked.insert(s.begin(), s.end());
    }
    for (const Var& y : candidates(extra, ex->boundVar())) {
      if (!syntacticEq(substitute(ex->sub(), ex->boundVar(), Term::var(y)),
                       extra))
        continue;
      if (!blocked.count(y)) return std::nullopt;
      return bad(Kind::Eigenvariable, stepNo,
                 "exE eigenvariable " + y.str() +
                     " occurs free in the conclusion or assumptions");
    }
    return fail("witness assumption is not an instance of the body");
  }
  if (rule == "eqI") {
    if (auto v = arity(0)) return v;
    if (st.formula->kind() != FKind::Equals ||
        !syntacticEqTerm(st.formula->lhs(), st.formula->rhs()))
      return fail("conclusion is not a reflexive identity");
    return std::nullopt;
  }
  if (rule == "eqE") {
    if (auto v = arity(2)) return v;
    if (!sameCtx(prem(0)) || !sameCtx(prem(1)))
      return fail("premise assumptions differ from conclusion assumptions");
    const FormulaPtr& e = prem(0).formula;
    if (e->kind() != FKind::Equals || !e->lhs()->isVar())
      return fail("major premise is not a variable identity");
    // all free occurrences replaced, or none
    FormulaPtr all =
        substitute(prem(1).formula, e->lhs()->variable(), e->rhs());
    if (!syntacticEq(st.formula, all) &&
        !syntacticEq(st.formula, prem(1).formula))
      return fail("conclusion does not arise by replacing the identified "
                  "variable");
    return std::nullopt;
  }
  return fail("unknown rule tag");
}

}  // namespace

std::vector<std::string> ruleTags() {
  return {"assumption", "andI", "andE1", "andE2", "orI1", "orI2",
          "orE",        "impI", "impE",  "notI",  "notE", "botE",
          "allI",       "allE", "exI",   "exE",   "eqI",  "eqE"};
}

std::optional<ProofViolation> check(const ProofObject& p) {
  if (p.steps.empty())
    return bad(Kind::Structure, 0, "proof has no steps");
  for (std::size_t i = 0; i < p.steps.size(); ++i)
    for (std::size_t j : p.steps[i].premises)
      if (j >= i)
        return bad(Kind::Structure, i + 1,
                   "premise index " + std::to_string(j + 1) +
                       " is not strictly earlier");
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    auto restrict = [&](const FormulaPtr& f) -> std::optional<ProofViolation> {
      unsigned r = profile(f).rho0;
      if (r <= p.n) return std::nullopt;
      return bad(ProofViolation::Kind::Restriction, i + 1,
                 "formula " + printFormula(f) + " has rho0 " +
                     std::to_string(r) + " > " + std::to_string(p.n));
    };
    for (const auto& a : p.steps[i].assumptions)
      if (auto v = restrict(a)) return v;
    if (auto v = restrict(p.steps[i].formula)) return v;
  }
  for (std::size_t i = 0; i < p.steps.size(); ++i)
    if (auto v = checkStep(p, i)) return v;
  return std::nullopt;
}

ProofStats stats(const ProofObject& p) {
  if (auto v = check(p))
    throw ProofError("step " + std::to_string(v->step) + ": " + v->message);
  ProofStats s;
  s.stepCount = static_cast<unsigned>(p.steps.size());
  for (const auto& st : p.steps) {
    ComplexityProfile pr = profile(st.formula);
    s.maxNu = std::max(s.maxNu, pr.nu);
    s.maxRho0 = std::max(s.maxRho0, pr.rho0);
    for (const auto& a : st.assumptions) {
      pr = profile(a);
      s.maxNu = std::max(s.maxNu, pr.nu);
      s.maxRho0 = std::max(s.maxRho0, pr.rho0);
    }
  }
  return s;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// Split on top-level commas only; parentheses may nest.
std::vector<std::string> splitTop(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

}  // namespace

ProofObject parseProof(const std::string& text, const Signature& sig) {
  ProofObject p;
  std::istringstream in(text);
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto syntax = [&](const std::string& msg) {
      return ProofError("line " + std::to_string(lineNo) + ": " + msg);
    };
    if (line.rfind("level ", 0) == 0) {
      p.n = static_cast<unsigned>(std::stoul(line.substr(6)));
      continue;
    }
    if (line.rfind("step ", 0) != 0) throw syntax("expected a step line");
    std::size_t colon = line.find(':');
    if (colon == std::string::npos) throw syntax("missing ':'");
    std::size_t expected = std::stoul(line.substr(5, colon - 5));
    if (expected != p.steps.size() + 1)
      throw syntax("step numbered " + std::to_string(expected) +
                   ", expected " + std::to_string(p.steps.size() + 1));
    std::size_t turnstile = line.find("|-", colon);
    if (turnstile == std::string::npos) throw syntax("missing '|-'");
    std::size_t semi = line.find(';', turnstile);
    if (semi == std::string::npos) throw syntax("missing ';'");

    ProofStep st;
    for (const std::string& a :
         splitTop(line.substr(colon + 1, turnstile - colon - 1)))
      st.assumptions.push_back(parseFormula(a, sig));
    st.formula =
        parseFormula(trim(line.substr(turnstile + 2, semi - turnstile - 2)),
                     sig);
    std::string tail = trim(line.substr(semi + 1));
    if (tail.rfind("rule ", 0) != 0) throw syntax("expected 'rule <tag>'");
    tail = trim(tail.substr(5));
    std::size_t from = tail.find(" from ");
    if (from == std::string::npos) {
      st.rule = trim(tail);
    } else {
      st.rule = trim(tail.substr(0, from));
      for (const std::string& ix : splitTop(tail.substr(from + 6)))
        st.premises.push_back(std::stoul(ix) - 1);
    }
    p.steps.push_back(std::move(st));
  }
  return p;
}

std::string printProof(const ProofObject& p) {
  std::ostringstream out;
  out << "level " << p.n << "\n";
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    const ProofStep& st = p.steps[i];
    out << "step " << i + 1 << ": ";
    for (std::size_t k = 0; k < st.assumptions.size(); ++k) {
      if (k) out << ", ";
      out << printFormula(st.assumptions[k]);
    }
    if (!st.assumptions.empty()) out << " ";
    out << "|- " << printFormula(st.formula) << " ; rule " << st.rule;
    if (!st.premises.empty()) {
      out << " from ";
      for (std::size_t k = 0; k < st.premises.size(); ++k) {
        if (k) out << ", ";
        out << st.premises[k] + 1;
      }
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace wb

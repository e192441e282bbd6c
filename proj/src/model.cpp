#include "wb/model.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace wb {

std::size_t FiniteModel::addElement(const std::string& name) {
  auto it = index_.find(name);
  if (it != index_.end()) throw ModelError("duplicate element: " + name);
  universe_.push_back(name);
  index_[name] = universe_.size() - 1;
  return universe_.size() - 1;
}

std::size_t FiniteModel::elementIndex(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw ModelError("unknown element: " + name);
  return it->second;
}

void FiniteModel::addTuple(const std::string& pred, Tuple t) {
  preds_[pred].insert(std::move(t));
}

bool FiniteModel::holds(const std::string& pred, const Tuple& t) const {
  auto it = preds_.find(pred);
  return it != preds_.end() && it->second.count(t) != 0;
}

void FiniteModel::setFunctionEntry(const std::string& fn, Tuple args,
                                   std::size_t value) {
  funcs_[fn][std::move(args)] = value;
}

std::size_t FiniteModel::applyFunction(const std::string& fn,
                                       const Tuple& args) const {
  auto it = funcs_.find(fn);
  if (it == funcs_.end()) throw ModelError("unknown function: " + fn);
  auto jt = it->second.find(args);
  if (jt == it->second.end())
    throw ModelError("function " + fn + " undefined on a tuple");
  return jt->second;
}

namespace {

std::size_t evalTerm(const FiniteModel& M, const TermPtr& t,
                     const Assignment& a) {
  if (t->isVar()) {
    auto it = a.find(t->variable());
    if (it == a.end())
      throw ModelError("uncovered free variable: " + t->variable().str());
    return it->second;
  }
  FiniteModel::Tuple args;
  for (const auto& s : t->args()) args.push_back(evalTerm(M, s, a));
  return M.applyFunction(t->fn(), args);
}

// enumerate width-w tuples over the universe, invoking fn on each
template <class F>
void forTuples(std::size_t n, std::size_t w, F&& fn) {
  FiniteModel::Tuple t(w, 0);
  if (w == 0) {
    fn(t);
    return;
  }
  if (n == 0) return;
  while (true) {
    fn(t);
    std::size_t i = 0;
    while (i < w && ++t[i] == n) t[i++] = 0;
    if (i == w) break;
  }
}

}  // namespace

bool eval(const FiniteModel& M, const FormulaPtr& f, const Assignment& a) {
  switch (f->kind()) {
    case Formula::Kind::Atom: {
      FiniteModel::Tuple t;
      for (const auto& s : f->args()) t.push_back(evalTerm(M, s, a));
      return M.holds(f->pred(), t);
    }
    case Formula::Kind::Equals:
      return evalTerm(M, f->lhs(), a) == evalTerm(M, f->rhs(), a);
    case Formula::Kind::Top:
      return true;
    case Formula::Kind::Bot:
      return false;
    case Formula::Kind::Not:
      return !eval(M, f->sub(), a);
    case Formula::Kind::And:
      return eval(M, f->left(), a) && eval(M, f->right(), a);
    case Formula::Kind::Or:
      return eval(M, f->left(), a) || eval(M, f->right(), a);
    case Formula::Kind::Implies:
      return !eval(M, f->left(), a) || eval(M, f->right(), a);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      Assignment b = a;
      bool isAll = f->kind() == Formula::Kind::Forall;
      for (std::size_t i = 0; i < M.size(); ++i) {
        b[f->boundVar()] = i;
        bool v = eval(M, f->sub(), b);
        if (isAll && !v) return false;
        if (!isAll && v) return true;
      }
      return isAll;
    }
  }
  return false;
}

namespace {

Assignment paramAssignment(const Translation& tau,
                           const std::vector<std::size_t>* paramValues) {
  Assignment a;
  if (!tau.params.empty()) {
    if (!paramValues || paramValues->size() != tau.params.size())
      throw ModelError("translation requires parameter values");
    for (std::size_t i = 0; i < tau.params.size(); ++i)
      a[tau.params[i]] = (*paramValues)[i];
  }
  return a;
}

}  // namespace

std::vector<FiniteModel::Tuple> deltaTuples(
    const FiniteModel& M, const Translation& tau,
    const std::vector<std::size_t>* paramValues) {
  Assignment base = paramAssignment(tau, paramValues);
  std::vector<FiniteModel::Tuple> out;
  forTuples(M.size(), tau.dim, [&](const FiniteModel::Tuple& t) {
    Assignment a = base;
    for (unsigned k = 0; k < tau.dim; ++k) a[slot(k)] = t[k];
    if (eval(M, tau.delta, a)) out.push_back(t);
  });
  return out;
}

FiniteModel internalModel(const FiniteModel& M, const Translation& tau,
                          const std::vector<std::size_t>* paramValues) {
  Assignment base = paramAssignment(tau, paramValues);
  const unsigned m = tau.dim;
  std::vector<FiniteModel::Tuple> dom = deltaTuples(M, tau, paramValues);
  if (dom.empty()) throw ModelError("internal model has empty domain");

  const FormulaPtr& idF = tau.predFormula("=");
  auto idHolds = [&](const FiniteModel::Tuple& s, const FiniteModel::Tuple& t) {
    Assignment a = base;
    for (unsigned k = 0; k < m; ++k) {
      a[argSlot(0, k, m)] = s[k];
      a[argSlot(1, k, m)] = t[k];
    }
    return eval(M, idF, a);
  };

  const std::size_t D = dom.size();
  std::vector<std::vector<bool>> eq(D, std::vector<bool>(D, false));
  for (std::size_t i = 0; i < D; ++i)
    for (std::size_t j = 0; j < D; ++j) eq[i][j] = idHolds(dom[i], dom[j]);
  for (std::size_t i = 0; i < D; ++i)
    if (!eq[i][i])
      throw ModelError("translated identity is not an equivalence relation");
  for (std::size_t i = 0; i < D; ++i)
    for (std::size_t j = 0; j < D; ++j) {
      if (eq[i][j] != eq[j][i])
        throw ModelError("translated identity is not an equivalence relation");
      if (eq[i][j])
        for (std::size_t k = 0; k < D; ++k)
          if (eq[j][k] && !eq[i][k])
            throw ModelError(
                "translated identity is not an equivalence relation");
    }

  // classes, in first-representative order
  std::vector<std::size_t> classOf(D);
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < D; ++i) {
    bool placed = false;
    for (std::size_t c = 0; c < reps.size() && !placed; ++c)
      if (eq[reps[c]][i]) {
        classOf[i] = c;
        placed = true;
      }
    if (!placed) {
      classOf[i] = reps.size();
      reps.push_back(i);
    }
  }

  auto predHolds = [&](const FormulaPtr& body, unsigned n,
                       const std::vector<std::size_t>& domIdx) {
    Assignment a = base;
    for (unsigned i = 0; i < n; ++i)
      for (unsigned k = 0; k < m; ++k)
        a[argSlot(i, k, m)] = dom[domIdx[i]][k];
    return eval(M, body, a);
  };

  // congruence, one coordinate at a time
  for (const auto& [p, n] : tau.source.predicates()) {
    const FormulaPtr& body = tau.predFormula(p);
    forTuples(D, n, [&](const FiniteModel::Tuple& idx) {
      std::vector<std::size_t> v(idx.begin(), idx.end());
      bool base0 = predHolds(body, n, v);
      for (unsigned i = 0; i < n; ++i) {
        std::size_t orig = v[i];
        for (std::size_t j = 0; j < D; ++j) {
          if (!eq[orig][j]) continue;
          v[i] = j;
          if (predHolds(body, n, v) != base0)
            throw ModelError("translated identity is not a congruence for " +
                             p);
        }
        v[i] = orig;
      }
    });
  }

  FiniteModel out;
  auto tupleName = [&](const FiniteModel::Tuple& t) {
    if (m == 1) return M.elementName(t[0]);
    std::string s = "(";
    for (unsigned k = 0; k < m; ++k) {
      if (k) s += ",";
      s += M.elementName(t[k]);
    }
    return s + ")";
  };
  for (std::size_t r : reps) out.addElement(tupleName(dom[r]));

  for (const auto& [p, n] : tau.source.predicates()) {
    const FormulaPtr& body = tau.predFormula(p);
    forTuples(reps.size(), n, [&](const FiniteModel::Tuple& cls) {
      std::vector<std::size_t> v;
      for (std::size_t c : cls) v.push_back(reps[c]);
      if (predHolds(body, n, v)) out.addTuple(p, cls);
    });
  }
  return out;
}

bool checkFundamental(const FiniteModel& M, const Translation& tau,
                      const FormulaPtr& sentence,
                      const std::vector<std::size_t>* paramValues) {
  if (!freeVars(sentence).empty())
    throw ModelError("check_fundamental requires a sentence");
  Assignment a = paramAssignment(tau, paramValues);
  bool lhs = eval(M, apply(tau, sentence), a);
  bool rhs = eval(internalModel(M, tau, paramValues), sentence, {});
  return lhs == rhs;
}

std::vector<std::vector<std::size_t>> admissibleParams(
    const FiniteModel& M, const Translation& tau) {
  std::vector<std::vector<std::size_t>> out;
  forTuples(M.size(), tau.params.size(), [&](const FiniteModel::Tuple& t) {
    Assignment a;
    for (std::size_t i = 0; i < tau.params.size(); ++i) a[tau.params[i]] = t[i];
    if (eval(M, tau.paramDomain, a))
      out.push_back(std::vector<std::size_t>(t.begin(), t.end()));
  });
  return out;
}

FiniteModel parseModelText(const std::string& text, const Signature& sig) {
  FiniteModel M;
  std::istringstream in(text);
  std::string line;
  bool sawUniverse = false;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    if (kw == "universe") {
      std::string e;
      while (ls >> e) M.addElement(e);
      sawUniverse = true;
    } else if (kw == "pred") {
      std::string p;
      ls >> p;
      if (!p.empty() && p.back() == ':') p.pop_back();
      auto ar = sig.predicateArity(p);
      if (!ar) throw ModelError("unknown predicate in model file: " + p);
      std::string tup;
      while (ls >> tup) {
        if (tup.size() >= 2 && tup.front() == '(' && tup.back() == ')')
          tup = tup.substr(1, tup.size() - 2);
        FiniteModel::Tuple t;
        std::istringstream ts(tup);
        std::string e;
        while (std::getline(ts, e, ',')) {
          if (!e.empty()) t.push_back(M.elementIndex(e));
        }
        if (t.size() != *ar)
          throw ModelError("tuple arity mismatch for " + p);
        M.addTuple(p, std::move(t));
      }
    } else if (kw == "fun") {
      std::string f;
      ls >> f;
      if (!f.empty() && f.back() == ':') f.pop_back();
      auto ar = sig.functionArity(f);
      if (!ar) throw ModelError("unknown function in model file: " + f);
      std::string entry;
      while (ls >> entry) {
        auto arrow = entry.find("->");
        if (arrow == std::string::npos)
          throw ModelError("bad function entry: " + entry);
        std::string argsText = entry.substr(0, arrow);
        std::string valText = entry.substr(arrow + 2);
        if (argsText.size() >= 2 && argsText.front() == '(' &&
            argsText.back() == ')')
          argsText = argsText.substr(1, argsText.size() - 2);
        FiniteModel::Tuple args;
        std::istringstream as(argsText);
        std::string e;
        while (std::getline(as, e, ',')) {
          if (!e.empty()) args.push_back(M.elementIndex(e));
        }
        if (args.size() != *ar)
          throw ModelError("function arity mismatch for " + f);
        M.setFunctionEntry(f, std::move(args), M.elementIndex(valText));
      }
    } else {
      throw ModelError("unknown model line: " + line);
    }
  }
  if (!sawUniverse) throw ModelError("model file has no universe line");
  // totality of function maps
  for (const auto& [f, ar] : sig.functions()) {
    auto it = M.functions().find(f);
    std::size_t have = it == M.functions().end() ? 0 : it->second.size();
    std::size_t need = 1;
    for (unsigned i = 0; i < ar; ++i) need *= M.size();
    if (have != need) throw ModelError("function map for " + f + " not total");
  }
  return M;
}

FiniteModel loadModelFile(const std::string& path, const Signature& sig) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open model file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parseModelText(buf.str(), sig);
}

std::string printModel(const FiniteModel& M) {
  std::ostringstream out;
  out << "universe";
  for (const auto& e : M.universe()) out << " " << e;
  out << "\n";
  for (const auto& [p, tuples] : M.predicates()) {
    out << "pred " << p << ":";
    for (const auto& t : tuples) {
      out << " (";
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out << ",";
        out << M.elementName(t[i]);
      }
      out << ")";
    }
    out << "\n";
  }
  for (const auto& [f, entries] : M.functions()) {
    out << "fun " << f << ":";
    for (const auto& [args, val] : entries) {
      out << " ";
      if (args.size() != 1) {
        out << "(";
        for (std::size_t i = 0; i < args.size(); ++i) {
          if (i) out << ",";
          out << M.elementName(args[i]);
        }
        out << ")";
      } else {
        out << M.elementName(args[0]);
      }
      out << "->" << M.elementName(val);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace wb

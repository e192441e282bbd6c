#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace wb {

// Variables are name+index pairs. Index 0 prints as the bare name,
// index k>0 prints as name$k.
struct Var {
  std::string name;
  unsigned index = 0;

  auto operator<=>(const Var&) const = default;
  std::string str() const {
    return index == 0 ? name : name + "$" + std::to_string(index);
  }
};

class Term;
using TermPtr = std::shared_ptr<const Term>;

class Term {
public:
  enum class Kind { Variable, App };

  static TermPtr var(Var v);
  static TermPtr var(const std::string& name, unsigned index = 0);
  static TermPtr app(std::string fn, std::vector<TermPtr> args);

  Kind kind() const { return kind_; }
  const Var& variable() const { return var_; }
  const std::string& fn() const { return fn_; }
  const std::vector<TermPtr>& args() const { return args_; }

  bool isVar() const { return kind_ == Kind::Variable; }

private:
  Kind kind_;
  Var var_;
  std::string fn_;
  std::vector<TermPtr> args_;
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

class Formula {
public:
  enum class Kind {
    Atom, Equals, Top, Bot, Not, And, Or, Implies, Forall, Exists
  };

  static FormulaPtr atom(std::string pred, std::vector<TermPtr> args);
  static FormulaPtr equals(TermPtr lhs, TermPtr rhs);
  static FormulaPtr top();
  static FormulaPtr bot();
  static FormulaPtr negation(FormulaPtr f);
  static FormulaPtr conj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr disj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr implies(FormulaPtr a, FormulaPtr b);
  static FormulaPtr forall(Var v, FormulaPtr body);
  static FormulaPtr exists(Var v, FormulaPtr body);

  // n-ary helpers, right-nested; empty conj is top, empty disj is bot
  static FormulaPtr conjAll(const std::vector<FormulaPtr>& fs);
  static FormulaPtr disjAll(const std::vector<FormulaPtr>& fs);
  static FormulaPtr iff(FormulaPtr a, FormulaPtr b);

  Kind kind() const { return kind_; }
  const std::string& pred() const { return pred_; }
  const std::vector<TermPtr>& args() const { return args_; }
  const TermPtr& lhs() const { return args_[0]; }
  const TermPtr& rhs() const { return args_[1]; }
  const FormulaPtr& sub() const { return subs_[0]; }     // Not, quantifiers
  const FormulaPtr& left() const { return subs_[0]; }
  const FormulaPtr& right() const { return subs_[1]; }
  const Var& boundVar() const { return var_; }

  bool isAtomic() const {
    return kind_ == Kind::Atom || kind_ == Kind::Equals ||
           kind_ == Kind::Top || kind_ == Kind::Bot;
  }
  bool isQuantifier() const {
    return kind_ == Kind::Forall || kind_ == Kind::Exists;
  }
  bool isBinary() const {
    return kind_ == Kind::And || kind_ == Kind::Or || kind_ == Kind::Implies;
  }

private:
  Kind kind_;
  std::string pred_;
  std::vector<TermPtr> args_;   // Atom arguments; Equals stores both sides here
  std::vector<FormulaPtr> subs_;
  Var var_;
};

using VarSet = std::set<Var>;

VarSet termVars(const TermPtr& t);
VarSet freeVars(const FormulaPtr& f);
VarSet allVars(const FormulaPtr& f);   // free and bound names together
bool containsFunctions(const FormulaPtr& f);

// Least index >= 0 such that (name, index) is not in used.
Var freshVar(const std::string& name, const VarSet& used);

TermPtr substituteTerm(const TermPtr& t, const Var& v, const TermPtr& repl);

// Capture-avoiding substitution A[v := t]. A clashing binder is renamed
// to the least fresh indexed variant of its name.
FormulaPtr substitute(const FormulaPtr& f, const Var& v, const TermPtr& t);

// Simultaneous capture-avoiding substitution.
FormulaPtr substituteSim(const FormulaPtr& f,
                         const std::map<Var, TermPtr>& subst);

bool alphaEq(const FormulaPtr& a, const FormulaPtr& b);

// Syntactic equality (names included)
bool syntacticEq(const FormulaPtr& a, const FormulaPtr& b);
bool syntacticEqTerm(const TermPtr& a, const TermPtr& b);

// Number of AST nodes (terms and formulas)
std::size_t nodeCount(const FormulaPtr& f);

}  // namespace wb

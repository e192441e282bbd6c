#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "wb/formula.hpp"
#include "wb/signature.hpp"
#include "wb/translation.hpp"

namespace wb {

struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite Tarskian model. Elements are indices into the universe name list;
// predicate extensions are sets of index tuples; function maps, when
// present, are total.
class FiniteModel {
public:
  using Tuple = std::vector<std::size_t>;

  std::size_t addElement(const std::string& name);
  std::size_t size() const { return universe_.size(); }
  const std::vector<std::string>& universe() const { return universe_; }
  const std::string& elementName(std::size_t i) const { return universe_[i]; }
  std::size_t elementIndex(const std::string& name) const;

  void addTuple(const std::string& pred, Tuple t);
  bool holds(const std::string& pred, const Tuple& t) const;
  const std::map<std::string, std::set<Tuple>>& predicates() const {
    return preds_;
  }

  void setFunctionEntry(const std::string& fn, Tuple args, std::size_t value);
  std::size_t applyFunction(const std::string& fn, const Tuple& args) const;
  const std::map<std::string, std::map<Tuple, std::size_t>>& functions()
      const {
    return funcs_;
  }

private:
  std::vector<std::string> universe_;
  std::map<std::string, std::size_t> index_;
  std::map<std::string, std::set<Tuple>> preds_;
  std::map<std::string, std::map<Tuple, std::size_t>> funcs_;
};

// variable -> element index
using Assignment = std::map<Var, std::size_t>;

// Standard Tarskian evaluation; quantifiers range over the whole universe.
bool eval(const FiniteModel& M, const FormulaPtr& f, const Assignment& a);

// Tuples over M.universe() of the given width satisfying delta (with the
// translation's parameters bound to paramValues).
std::vector<FiniteModel::Tuple> deltaTuples(
    const FiniteModel& M, const Translation& tau,
    const std::vector<std::size_t>* paramValues = nullptr);

// The internal model: delta-tuples quotiented by the translated identity,
// with predicates induced by the translated predicate formulas. Errors:
// empty domain; translated identity not an equivalence; not a congruence.
FiniteModel internalModel(const FiniteModel& M, const Translation& tau,
                          const std::vector<std::size_t>* paramValues = nullptr);

// Whether M |= A^tau agrees with internalModel(M, tau) |= A. A must be a
// sentence over the translation's source signature.
bool checkFundamental(const FiniteModel& M, const Translation& tau,
                      const FormulaPtr& sentence,
                      const std::vector<std::size_t>* paramValues = nullptr);

// All parameter tuples satisfying the translation's parameter domain in M.
std::vector<std::vector<std::size_t>> admissibleParams(const FiniteModel& M,
                                                       const Translation& tau);

FiniteModel parseModelText(const std::string& text, const Signature& sig);
FiniteModel loadModelFile(const std::string& path, const Signature& sig);
std::string printModel(const FiniteModel& M);

}  // namespace wb

#pragma once

#include <map>
#include <string>

#include "wb/formula.hpp"

namespace wb {

// Quantifier-alternation profile. rho == rhoE and rho0 == max(rhoE, rhoA)
// by construction; nu is connective depth.
struct ComplexityProfile {
  unsigned rhoE = 0;
  unsigned rhoA = 0;
  unsigned rho = 0;
  unsigned rho0 = 0;
  unsigned nu = 0;

  bool operator==(const ComplexityProfile&) const = default;
};

enum class ClassKind { SigmaStar, PiStar, DeltaStar };

struct ClassId {
  ClassKind kind;
  unsigned level;
};

// Caller-stipulated profiles for black-box predicate symbols (sub, prov,
// axiom-block placeholders). An atom whose predicate appears here
// contributes the stipulated profile instead of (1,1).
using Stipulations = std::map<std::string, ComplexityProfile>;

ComplexityProfile profile(const FormulaPtr& f,
                          const Stipulations* stip = nullptr);

// Independent oracle: membership decided by direct recursion on the
// inductive grammars of Sigma*/Pi*/Delta*, not via the rho measure.
bool classMember(const FormulaPtr& f, ClassId cls);

std::string profileReport(const ComplexityProfile& p);

}  // namespace wb

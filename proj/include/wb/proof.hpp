#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wb/complexity.hpp"
#include "wb/formula.hpp"
#include "wb/signature.hpp"

namespace wb {

struct ProofError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Natural deduction in sequent style: each step carries its full
// assumption list. Premise indices refer to strictly earlier steps.
struct ProofStep {
  std::vector<FormulaPtr> assumptions;
  FormulaPtr formula;
  std::string rule;
  std::vector<std::size_t> premises;
};

struct ProofObject {
  std::vector<ProofStep> steps;
  unsigned n = 0;  // restriction level: every formula must have rho0 <= n
};

// Rule tags: assumption, andI, andE1, andE2, orI1, orI2, orE, impI, impE,
// notI, notE, botE, allI, allE, exI, exE, eqI, eqE.
// Quantifier rules instantiate with variables only.
std::vector<std::string> ruleTags();

struct ProofViolation {
  enum class Kind { Structure, BadRule, Restriction, Eigenvariable };
  Kind kind;
  std::size_t step;  // 1-based, 0 when not tied to a step
  std::string message;
};

// First violation found, or empty on acceptance. The restriction check
// runs over all steps before any rule is examined.
std::optional<ProofViolation> check(const ProofObject& p);

struct ProofStats {
  unsigned stepCount = 0;
  unsigned maxNu = 0;
  unsigned maxRho0 = 0;
};

// Throws ProofError if the proof does not check.
ProofStats stats(const ProofObject& p);

// Line format, one step per line, assumptions comma-separated:
//   step <i>: <assumptions> |- <formula> ; rule <tag> from <indices>
// An optional leading "level <n>" line sets the restriction level.
ProofObject parseProof(const std::string& text, const Signature& sig);
std::string printProof(const ProofObject& p);

}  // namespace wb

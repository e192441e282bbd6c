#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace wb {

struct SignatureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite relational/functional signature. Symbol names are unique across
// predicates and functions. The reserved arithmetic symbols, when present,
// must carry their fixed arities: N, Z unary; in, E, le, lt, S binary;
// A, M ternary.
class Signature {
public:
  Signature() = default;
  explicit Signature(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  void setName(std::string n) { name_ = std::move(n); }

  void addPredicate(const std::string& symbol, unsigned arity);
  void addFunction(const std::string& symbol, unsigned arity);

  bool hasPredicate(const std::string& symbol) const {
    return predicates_.count(symbol) != 0;
  }
  bool hasFunction(const std::string& symbol) const {
    return functions_.count(symbol) != 0;
  }
  std::optional<unsigned> predicateArity(const std::string& symbol) const;
  std::optional<unsigned> functionArity(const std::string& symbol) const;

  const std::map<std::string, unsigned>& predicates() const {
    return predicates_;
  }
  const std::map<std::string, unsigned>& functions() const {
    return functions_;
  }

  bool constantsAsNullary() const { return constantsAsNullary_; }
  void setConstantsAsNullary(bool b) { constantsAsNullary_ = b; }

  // The arithmetic sub-signature used by the set-theoretic apparatus.
  static Signature arithmetic();
  // arithmetic() extended disjointly with theta's symbols
  static Signature arithmeticPlus(const Signature& theta);

private:
  void checkReserved(const std::string& symbol, unsigned arity) const;

  std::string name_;
  std::map<std::string, unsigned> predicates_;
  std::map<std::string, unsigned> functions_;
  bool constantsAsNullary_ = false;
};

Signature parseSignatureText(const std::string& text);
Signature loadSignatureFile(const std::string& path);
std::string printSignature(const Signature& sig);

}  // namespace wb

#include "wb/signature.hpp"

#include <fstream>
#include <sstream>

namespace wb {

namespace {
const std::map<std::string, unsigned> kReservedArities = {
    {"N", 1}, {"Z", 1}, {"in", 2}, {"E", 2}, {"le", 2},
    {"lt", 2}, {"S", 2}, {"A", 3},  {"M", 3},
};
}

void Signature::checkReserved(const std::string& symbol,
                              unsigned arity) const {
  auto it = kReservedArities.find(symbol);
  if (it != kReservedArities.end() && it->second != arity)
    throw SignatureError("reserved arithmetic symbol " + symbol +
                         " must have arity " + std::to_string(it->second));
}

void Signature::addPredicate(const std::string& symbol, unsigned arity) {
  if (predicates_.count(symbol) || functions_.count(symbol))
    throw SignatureError("duplicate symbol: " + symbol);
  checkReserved(symbol, arity);
  predicates_[symbol] = arity;
}

void Signature::addFunction(const std::string& symbol, unsigned arity) {
  if (predicates_.count(symbol) || functions_.count(symbol))
    throw SignatureError("duplicate symbol: " + symbol);
  functions_[symbol] = arity;
}

std::optional<unsigned> Signature::predicateArity(
    const std::string& symbol) const {
  auto it = predicates_.find(symbol);
  if (it == predicates_.end()) return std::nullopt;
  return it->second;
}

std::optional<unsigned> Signature::functionArity(
    const std::string& symbol) const {
  auto it = functions_.find(symbol);
  if (it == functions_.end()) return std::nullopt;
  return it->second;
}

Signature Signature::arithmetic() {
  Signature sig("arith");
  for (const auto& [sym, ar] : kReservedArities) sig.addPredicate(sym, ar);
  return sig;
}

Signature Signature::arithmeticPlus(const Signature& theta) {
  Signature sig = arithmetic();
  sig.setName("arith+" + theta.name());
  for (const auto& [sym, ar] : theta.predicates())
    if (!sig.hasPredicate(sym)) sig.addPredicate(sym, ar);
  for (const auto& [sym, ar] : theta.functions()) sig.addFunction(sym, ar);
  return sig;
}

Signature parseSignatureText(const std::string& text) {
  Signature sig;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw) || kw.empty() || kw[0] == '#') continue;
    std::string sym;
    unsigned arity;
    if (!(ls >> sym >> arity))
      throw SignatureError("signature line " + std::to_string(lineno) +
                           ": expected '<pred|fun> <symbol> <arity>'");
    if (kw == "pred") sig.addPredicate(sym, arity);
    else if (kw == "fun") sig.addFunction(sym, arity);
    else if (kw == "name") { sig.setName(sym); }
    else
      throw SignatureError("signature line " + std::to_string(lineno) +
                           ": unknown keyword " + kw);
  }
  return sig;
}

Signature loadSignatureFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SignatureError("cannot open signature file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parseSignatureText(buf.str());
}

std::string printSignature(const Signature& sig) {
  std::ostringstream out;
  if (!sig.name().empty()) out << "name " << sig.name() << " 0\n";
  for (const auto& [sym, ar] : sig.predicates())
    out << "pred " << sym << " " << ar << "\n";
  for (const auto& [sym, ar] : sig.functions())
    out << "fun " << sym << " " << ar << "\n";
  return out.str();
}

}  // namespace wb

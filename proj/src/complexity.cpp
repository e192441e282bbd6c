#include "wb/complexity.hpp"

#include <algorithm>
#include <sstream>

namespace wb {

namespace {

struct RhoPair {
  unsigned e;  // rho-exists
  unsigned a;  // rho-forall
};

RhoPair rho(const FormulaPtr& f, const Stipulations* stip) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
      if (stip) {
        auto it = stip->find(f->pred());
        if (it != stip->end())
          return {it->second.rhoE, it->second.rhoA};
      }
      [[fallthrough]];
    case Formula::Kind::Equals:
    case Formula::Kind::Top:
    case Formula::Kind::Bot:
      return {1, 1};
    case Formula::Kind::Not: {
      RhoPair b = rho(f->sub(), stip);
      return {b.a, b.e};
    }
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      RhoPair l = rho(f->left(), stip);
      RhoPair r = rho(f->right(), stip);
      return {std::max(l.e, r.e), std::max(l.a, r.a)};
    }
    case Formula::Kind::Implies: {
      RhoPair l = rho(f->left(), stip);
      RhoPair r = rho(f->right(), stip);
      return {std::max(l.a, r.e), std::max(l.e, r.a)};
    }
    case Formula::Kind::Exists: {
      RhoPair b = rho(f->sub(), stip);
      return {b.e, b.e + 1};
    }
    case Formula::Kind::Forall: {
      RhoPair b = rho(f->sub(), stip);
      return {b.a + 1, b.a};
    }
  }
  return {1, 1};
}

unsigned nuDepth(const FormulaPtr& f) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::Equals:
    case Formula::Kind::Top:
    case Formula::Kind::Bot:
      return 0;
    case Formula::Kind::Not:
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      return nuDepth(f->sub()) + 1;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      return std::max(nuDepth(f->left()), nuDepth(f->right())) + 1;
  }
  return 0;
}

// Memoized structural recursion on the inductive grammars. The key is the
// node identity together with the queried class; recursion is structural,
// so levels are bounded by the connective depth plus the query level.
struct Oracle {
  std::map<std::tuple<const Formula*, int, unsigned>, bool> memo;

  bool sigma(const FormulaPtr& f, unsigned n) { return member(f, 0, n); }
  bool pi(const FormulaPtr& f, unsigned n) { return member(f, 1, n); }
  bool delta(const FormulaPtr& f, unsigned n) { return member(f, 2, n); }

  bool member(const FormulaPtr& f, int which, unsigned n) {
    if (n == 0) return false;  // Sigma*_0 = Pi*_0 = empty; Delta*_0 unused
    auto key = std::make_tuple(f.get(), which, n);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool r = compute(f, which, n);
    memo[key] = r;
    return r;
  }

  bool compute(const FormulaPtr& f, int which, unsigned n) {
    if (which == 2) {  // Delta*_n, n >= 1
      switch (f->kind()) {
        case Formula::Kind::Atom:
        case Formula::Kind::Equals:
        case Formula::Kind::Top:
        case Formula::Kind::Bot:
          return true;
        case Formula::Kind::Not:
          return delta(f->sub(), n);
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies:
          return delta(f->left(), n) && delta(f->right(), n);
        case Formula::Kind::Exists:
          return sigma(f->sub(), n - 1);
        case Formula::Kind::Forall:
          return pi(f->sub(), n - 1);
      }
      return false;
    }
    bool isSigma = (which == 0);
    switch (f->kind()) {
      case Formula::Kind::Atom:
      case Formula::Kind::Equals:
      case Formula::Kind::Top:
      case Formula::Kind::Bot:
        return true;
      case Formula::Kind::Not:
        return member(f->sub(), isSigma ? 1 : 0, n);
      case Formula::Kind::And:
      case Formula::Kind::Or:
        return member(f->left(), which, n) && member(f->right(), which, n);
      case Formula::Kind::Implies:
        return member(f->left(), isSigma ? 1 : 0, n) &&
               member(f->right(), which, n);
      case Formula::Kind::Exists:
        return isSigma ? sigma(f->sub(), n) : sigma(f->sub(), n - 1);
      case Formula::Kind::Forall:
        return isSigma ? pi(f->sub(), n - 1) : pi(f->sub(), n);
    }
    return false;
  }
};

}  // namespace

ComplexityProfile profile(const FormulaPtr& f, const Stipulations* stip) {
  RhoPair p = rho(f, stip);
  ComplexityProfile out;
  out.rhoE = p.e;
  out.rhoA = p.a;
  out.rho = p.e;
  out.rho0 = std::max(p.e, p.a);
  out.nu = nuDepth(f);
  return out;
}

bool classMember(const FormulaPtr& f, ClassId cls) {
  Oracle o;
  switch (cls.kind) {
    case ClassKind::SigmaStar:
      return o.sigma(f, cls.level);
    case ClassKind::PiStar:
      return o.pi(f, cls.level);
    case ClassKind::DeltaStar:
      return o.delta(f, cls.level);
  }
  return false;
}

std::string profileReport(const ComplexityProfile& p) {
  std::ostringstream out;
  out << "rhoE=" << p.rhoE << " rhoA=" << p.rhoA << " rho0=" << p.rho0
      << " nu=" << p.nu;
  return out.str();
}

}  // namespace wb

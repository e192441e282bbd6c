#include "wb/godel.hpp"

#include <map>
#include <vector>

namespace wb {

namespace {

// formula tags
constexpr unsigned kTop = 0, kBot = 1, kNot = 2, kAnd = 3, kOr = 4,
                   kImplies = 5, kForall = 6, kExists = 7, kEquals = 8,
                   kAtom = 9;
// term tags
constexpr unsigned kBound = 0, kFree = 1, kApp = 2;

Code cantorPair(const Code& a, const Code& b) {
  Code s = a + b;
  return s * (s + 1) / 2 + b;
}

void cantorUnpair(const Code& z, Code& a, Code& b) {
  Code disc = 8 * z + 1;
  Code w = boost::multiprecision::sqrt(disc);
  w = (w - 1) / 2;
  Code t = w * (w + 1) / 2;
  b = z - t;
  a = w - b;
}

struct Encoder {
  std::vector<Code> tokens;
  std::vector<Var> binders;  // innermost last

  void emit(const Code& c) { tokens.push_back(c); }
  void emit(unsigned long long v) { tokens.push_back(Code(v)); }

  void name(const std::string& s) {
    emit(s.size());
    for (unsigned char ch : s) emit(ch);
  }

  void term(const TermPtr& t) {
    if (t->isVar()) {
      const Var& v = t->variable();
      for (std::size_t i = binders.size(); i-- > 0;) {
        if (binders[i] == v) {
          emit(kBound);
          emit(binders.size() - 1 - i);
          return;
        }
      }
      emit(kFree);
      name(v.name);
      emit(v.index);
      return;
    }
    emit(kApp);
    name(t->fn());
    emit(t->args().size());
    for (const auto& a : t->args()) term(a);
  }

  void formula(const FormulaPtr& f) {
    switch (f->kind()) {
      case Formula::Kind::Top: emit(kTop); return;
      case Formula::Kind::Bot: emit(kBot); return;
      case Formula::Kind::Not:
        emit(kNot);
        formula(f->sub());
        return;
      case Formula::Kind::And:
      case Formula::Kind::Or:
      case Formula::Kind::Implies:
        emit(f->kind() == Formula::Kind::And
                 ? kAnd
                 : f->kind() == Formula::Kind::Or ? kOr : kImplies);
        formula(f->left());
        formula(f->right());
        return;
      case Formula::Kind::Forall:
      case Formula::Kind::Exists:
        emit(f->kind() == Formula::Kind::Forall ? kForall : kExists);
        binders.push_back(f->boundVar());
        formula(f->sub());
        binders.pop_back();
        return;
      case Formula::Kind::Equals:
        emit(kEquals);
        term(f->lhs());
        term(f->rhs());
        return;
      case Formula::Kind::Atom:
        emit(kAtom);
        name(f->pred());
        emit(f->args().size());
        for (const auto& a : f->args()) term(a);
        return;
    }
  }
};

Code packTree(const std::vector<Code>& t, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return t[lo];
  std::size_t mid = lo + (hi - lo + 1) / 2;
  return cantorPair(packTree(t, lo, mid), packTree(t, mid, hi));
}

void unpackTree(const Code& c, std::size_t n, std::vector<Code>& out) {
  if (n == 1) {
    out.push_back(c);
    return;
  }
  std::size_t nl = (n + 1) / 2;
  Code l, r;
  cantorUnpair(c, l, r);
  unpackTree(l, nl, out);
  unpackTree(r, n - nl, out);
}

struct Decoder {
  const std::vector<Code>& tokens;
  std::size_t pos = 0;
  std::vector<Var> binders;
  unsigned nextPlaceholder = 0;

  explicit Decoder(const std::vector<Code>& t) : tokens(t) {}

  Code next() {
    if (pos >= tokens.size()) throw CodeError("truncated code");
    return tokens[pos++];
  }

  unsigned long long nextSmall() {
    Code c = next();
    if (c < 0 || c > 100000000) throw CodeError("token out of range");
    return c.convert_to<unsigned long long>();
  }

  std::string name() {
    unsigned long long len = nextSmall();
    if (len > 1000) throw CodeError("name too long");
    std::string s;
    for (unsigned long long i = 0; i < len; ++i) {
      unsigned long long ch = nextSmall();
      if (ch == 0 || ch > 255) throw CodeError("bad character code");
      s.push_back(static_cast<char>(ch));
    }
    if (s.empty()) throw CodeError("empty name");
    return s;
  }

  TermPtr term() {
    unsigned long long tag = nextSmall();
    switch (tag) {
      case kBound: {
        unsigned long long d = nextSmall();
        if (d >= binders.size()) throw CodeError("bound index out of scope");
        return Term::var(binders[binders.size() - 1 - d]);
      }
      case kFree: {
        std::string n = name();
        unsigned long long idx = nextSmall();
        return Term::var(Var{n, static_cast<unsigned>(idx)});
      }
      case kApp: {
        std::string fn = name();
        unsigned long long argc = nextSmall();
        if (argc > 100) throw CodeError("arity too large");
        std::vector<TermPtr> args;
        for (unsigned long long i = 0; i < argc; ++i) args.push_back(term());
        return Term::app(fn, std::move(args));
      }
      default:
        throw CodeError("bad term tag");
    }
  }

  FormulaPtr formula() {
    unsigned long long tag = nextSmall();
    switch (tag) {
      case kTop: return Formula::top();
      case kBot: return Formula::bot();
      case kNot: return Formula::negation(formula());
      case kAnd: {
        FormulaPtr l = formula();
        return Formula::conj(l, formula());
      }
      case kOr: {
        FormulaPtr l = formula();
        return Formula::disj(l, formula());
      }
      case kImplies: {
        FormulaPtr l = formula();
        return Formula::implies(l, formula());
      }
      case kForall:
      case kExists: {
        // unique placeholder, renamed canonically afterwards
        Var v{"$b", nextPlaceholder++};
        binders.push_back(v);
        FormulaPtr body = formula();
        binders.pop_back();
        return tag == kForall ? Formula::forall(v, body)
                              : Formula::exists(v, body);
      }
      case kEquals: {
        TermPtr l = term();
        return Formula::equals(l, term());
      }
      case kAtom: {
        std::string p = name();
        unsigned long long argc = nextSmall();
        if (argc > 100) throw CodeError("arity too large");
        std::vector<TermPtr> args;
        for (unsigned long long i = 0; i < argc; ++i) args.push_back(term());
        return Formula::atom(p, std::move(args));
      }
      default:
        throw CodeError("bad formula tag");
    }
  }
};

TermPtr renameTerm(const TermPtr& t, const std::map<Var, Var>& m) {
  if (t->isVar()) {
    auto it = m.find(t->variable());
    return it == m.end() ? t : Term::var(it->second);
  }
  std::vector<TermPtr> args;
  for (const auto& a : t->args()) args.push_back(renameTerm(a, m));
  return Term::app(t->fn(), std::move(args));
}

FormulaPtr canonicalize(const FormulaPtr& f, std::map<Var, Var>& m,
                        VarSet& used) {
  switch (f->kind()) {
    case Formula::Kind::Top:
    case Formula::Kind::Bot:
      return f;
    case Formula::Kind::Atom: {
      std::vector<TermPtr> args;
      for (const auto& a : f->args()) args.push_back(renameTerm(a, m));
      return Formula::atom(f->pred(), std::move(args));
    }
    case Formula::Kind::Equals:
      return Formula::equals(renameTerm(f->lhs(), m), renameTerm(f->rhs(), m));
    case Formula::Kind::Not:
      return Formula::negation(canonicalize(f->sub(), m, used));
    case Formula::Kind::And:
      return Formula::conj(canonicalize(f->left(), m, used),
                           canonicalize(f->right(), m, used));
    case Formula::Kind::Or:
      return Formula::disj(canonicalize(f->left(), m, used),
                           canonicalize(f->right(), m, used));
    case Formula::Kind::Implies:
      return Formula::implies(canonicalize(f->left(), m, used),
                              canonicalize(f->right(), m, used));
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      Var fresh = freshVar("b", used);
      used.insert(fresh);
      m[f->boundVar()] = fresh;
      FormulaPtr body = canonicalize(f->sub(), m, used);
      m.erase(f->boundVar());
      return f->kind() == Formula::Kind::Forall
                 ? Formula::forall(fresh, body)
                 : Formula::exists(fresh, body);
    }
  }
  return f;
}

}  // namespace

Code godelEncode(const FormulaPtr& f) {
  Encoder e;
  e.formula(f);
  return cantorPair(Code(e.tokens.size()), packTree(e.tokens, 0,
                                                   e.tokens.size()));
}

FormulaPtr godelDecode(const Code& c) {
  if (c < 0) throw CodeError("negative code");
  Code lenC, body;
  cantorUnpair(c, lenC, body);
  if (lenC <= 0 || lenC > 10000000) throw CodeError("bad token count");
  std::size_t n = lenC.convert_to<std::size_t>();
  std::vector<Code> tokens;
  tokens.reserve(n);
  unpackTree(body, n, tokens);
  Decoder d(tokens);
  FormulaPtr f = d.formula();
  if (d.pos != tokens.size()) throw CodeError("trailing tokens");
  std::map<Var, Var> m;
  VarSet used = freeVars(f);
  return canonicalize(f, m, used);
}

}  // namespace wb

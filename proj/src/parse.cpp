#include "wb/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace wb {

namespace {

struct Lexer {
  const std::string& src;
  std::size_t pos = 0;

  explicit Lexer(const std::string& s) : src(s) {}

  void skipWs() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
      ++pos;
  }

  bool eof() {
    skipWs();
    return pos >= src.size();
  }

  char peek() {
    skipWs();
    return pos < src.size() ? src[pos] : '\0';
  }

  bool tryConsume(const std::string& tok) {
    skipWs();
    if (src.compare(pos, tok.size(), tok) == 0) {
      pos += tok.size();
      return true;
    }
    return false;
  }

  void expect(const std::string& tok) {
    if (!tryConsume(tok))
      throw ParseError("expected '" + tok + "'", pos);
  }

  static bool identStart(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool identCont(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  // Returns empty string if no identifier at the cursor.
  std::string peekIdent() {
    skipWs();
    if (pos >= src.size() || !identStart(src[pos])) return "";
    std::size_t e = pos;
    while (e < src.size() && identCont(src[e])) ++e;
    return src.substr(pos, e - pos);
  }

  std::string takeIdent() {
    std::string id = peekIdent();
    if (id.empty()) throw ParseError("expected identifier", pos);
    pos += id.size();
    return id;
  }

  // ident optionally followed by $<digits>
  Var takeVar() {
    std::string id = takeIdent();
    unsigned idx = 0;
    if (pos < src.size() && src[pos] == '$') {
      ++pos;
      if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
        throw ParseError("expected digits after '$'", pos);
      std::size_t e = pos;
      unsigned long v = 0;
      while (e < src.size() && std::isdigit(static_cast<unsigned char>(src[e]))) {
        v = v * 10 + (src[e] - '0');
        ++e;
      }
      idx = static_cast<unsigned>(v);
      pos = e;
    }
    return Var{id, idx};
  }
};

class Parser {
public:
  Parser(const std::string& text, const Signature& sig)
      : lex_(text), sig_(sig) {}

  FormulaPtr parse() {
    FormulaPtr f = formula();
    if (!lex_.eof())
      throw ParseError("trailing input", lex_.pos);
    return f;
  }

private:
  Lexer lex_;
  const Signature& sig_;

  FormulaPtr formula() { return implication(); }

  FormulaPtr implication() {
    FormulaPtr left = disjunction();
    if (lex_.tryConsume("->"))
      return Formula::implies(left, implication());
    return left;
  }

  FormulaPtr disjunction() {
    FormulaPtr f = conjunction();
    while (lex_.tryConsume("\\/")) f = Formula::disj(f, conjunction());
    return f;
  }

  FormulaPtr conjunction() {
    FormulaPtr f = unary();
    while (lex_.tryConsume("/\\")) f = Formula::conj(f, unary());
    return f;
  }

  FormulaPtr unary() {
    if (lex_.tryConsume("~")) return Formula::negation(unary());
    std::string id = lex_.peekIdent();
    if (id == "forall" || id == "exists") {
      lex_.pos += id.size();
      Var v = lex_.takeVar();
      lex_.expect(".");
      FormulaPtr body = formula();  // maximal scope to the right
      return id == "forall" ? Formula::forall(v, body)
                            : Formula::exists(v, body);
    }
    return atomOrParen();
  }

  FormulaPtr atomOrParen() {
    if (lex_.tryConsume("(")) {
      FormulaPtr f = formula();
      lex_.expect(")");
      return f;
    }
    std::string id = lex_.peekIdent();
    if (id.empty())
      throw ParseError("expected formula", lex_.pos);
    if (id == "top") {
      lex_.pos += id.size();
      return Formula::top();
    }
    if (id == "bot") {
      lex_.pos += id.size();
      return Formula::bot();
    }
    std::size_t start = lex_.pos;
    if (auto ar = sig_.predicateArity(id)) {
      lex_.pos += id.size();
      std::vector<TermPtr> args;
      if (*ar > 0 || lex_.peek() == '(') {
        lex_.expect("(");
        if (!lex_.tryConsume(")")) {
          args.push_back(term());
          while (lex_.tryConsume(",")) args.push_back(term());
          lex_.expect(")");
        }
      }
      if (args.size() != *ar)
        throw ParseError("arity mismatch for predicate " + id + ": expected " +
                             std::to_string(*ar) + ", got " +
                             std::to_string(args.size()),
                         start);
      return Formula::atom(id, std::move(args));
    }
    // t1 = t2
    TermPtr lhs = term();
    lex_.expect("=");
    TermPtr rhs = term();
    return Formula::equals(lhs, rhs);
  }

  TermPtr term() {
    std::size_t start = lex_.pos;
    std::string id = lex_.peekIdent();
    if (id.empty()) throw ParseError("expected term", lex_.pos);
    if (auto ar = sig_.functionArity(id)) {
      lex_.pos += id.size();
      std::vector<TermPtr> args;
      if (*ar > 0) {
        lex_.expect("(");
        args.push_back(term());
        while (lex_.tryConsume(",")) args.push_back(term());
        lex_.expect(")");
      } else if (!sig_.constantsAsNullary()) {
        throw ParseError("nullary function " + id +
                             " used as constant without constantsAsNullary",
                         start);
      }
      if (args.size() != *ar)
        throw ParseError("arity mismatch for function " + id, start);
      return Term::app(id, std::move(args));
    }
    if (sig_.hasPredicate(id))
      throw ParseError("predicate symbol " + id + " used as term", start);
    Var v = lex_.takeVar();
    // unknown-symbol check: a bare ident followed by '(' is a call on an
    // undeclared symbol
    if (lex_.peek() == '(')
      throw ParseError("unknown symbol: " + id, start);
    return Term::var(v);
  }
};

}  // namespace

FormulaPtr parseFormula(const std::string& text, const Signature& sig) {
  Parser p(text, sig);
  return p.parse();
}

std::string printTerm(const TermPtr& t) {
  if (t->isVar()) return t->variable().str();
  std::string out = t->fn();
  if (!t->args().empty()) {
    out += "(";
    for (size_t i = 0; i < t->args().size(); ++i) {
      if (i) out += ",";
      out += printTerm(t->args()[i]);
    }
    out += ")";
  }
  return out;
}

// A formula "ends open" if its printed form ends inside a quantifier body,
// which would swallow a following binary connective.
static bool endsOpen(const FormulaPtr& f) {
  switch (f->kind()) {
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      return true;
    case Formula::Kind::Not:
      return endsOpen(f->sub());
    default:
      return false;
  }
}

static std::string printLeft(const FormulaPtr& f) {
  return endsOpen(f) ? "(" + printFormula(f) + ")" : printFormula(f);
}

std::string printFormula(const FormulaPtr& f) {
  switch (f->kind()) {
    case Formula::Kind::Atom: {
      std::string out = f->pred();
      if (!f->args().empty()) {
        out += "(";
        for (size_t i = 0; i < f->args().size(); ++i) {
          if (i) out += ",";
          out += printTerm(f->args()[i]);
        }
        out += ")";
      }
      return out;
    }
    case Formula::Kind::Equals:
      return printTerm(f->lhs()) + " = " + printTerm(f->rhs());
    case Formula::Kind::Top:
      return "top";
    case Formula::Kind::Bot:
      return "bot";
    case Formula::Kind::Not:
      return "~" + printFormula(f->sub());
    case Formula::Kind::And:
      return "(" + printLeft(f->left()) + " /\\ " +
             printFormula(f->right()) + ")";
    case Formula::Kind::Or:
      return "(" + printLeft(f->left()) + " \\/ " +
             printFormula(f->right()) + ")";
    case Formula::Kind::Implies:
      return "(" + printLeft(f->left()) + " -> " +
             printFormula(f->right()) + ")";
    case Formula::Kind::Forall:
      return "forall " + f->boundVar().str() + ". " + printFormula(f->sub());
    case Formula::Kind::Exists:
      return "exists " + f->boundVar().str() + ". " + printFormula(f->sub());
  }
  return "";
}

FormulaPtr loadFormulaFile(const std::string& path, const Signature& sig) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open formula file: " + path, 0);
  std::stringstream buf;
  buf << in.rdbuf();
  return parseFormula(buf.str(), sig);
}

}  // namespace wb

// Regenerates the golden template files under templates/v1/. Each file is
// the deterministic print of one construction; the template tests compare
// byte-exact against these.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "wb/arith.hpp"
#include "wb/parse.hpp"
#include "wb/satgen.hpp"

using namespace wb;

namespace {

SatGenContext templateContext() {
  SatGenContext ctx;
  ctx.theta.setName("theta");
  ctx.theta.addPredicate("P", 1);
  ctx.theta.addPredicate("R", 2);
  return ctx;
}

void write(const std::filesystem::path& dir, const std::string& name,
           const std::string& body) {
  std::ofstream out(dir / name);
  out << body;
  if (!body.empty() && body.back() != '\n') out << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_templates <output-dir>\n";
    return 1;
  }
  std::filesystem::path dir(argv[1]);
  std::filesystem::create_directories(dir);
  SatGenContext ctx = templateContext();

  {
    std::string body;
    AxiomCatalog c = catalog();
    for (const auto& a : c.AS)
      body += a.name + ": " + printFormula(a.formula) + "\n";
    for (const auto& a : c.ASplus)
      body += a.name + ": " + printFormula(a.formula) + "\n";
    write(dir, "axioms.txt", body);
  }

  {
    std::string body;
    for (const std::string& name : defNames()) {
      std::vector<Var> args;
      for (unsigned i = 0; i < defArity(name); ++i) args.push_back({"a", i});
      body += name + "(";
      for (unsigned i = 0; i < defArity(name); ++i)
        body += (i ? "," : "") + args[i].str();
      body += ") := " + printFormula(defExpand(name, args)) + "\n";
    }
    write(dir, "defs.txt", body);
  }

  write(dir, "sat0.fml", printFormula(satZero()));
  write(dir, "phi0_optimized.fml",
        printFormula(satTemplate(ctx, SatMode::Optimized)));
  write(dir, "phi0_naive.fml", printFormula(satTemplate(ctx, SatMode::Naive)));
  write(dir, "q.fml", printFormula(qTemplate(ctx)));

  write(dir, "jdag1.fml",
        printFormula(genCut(CutKind::Jdag, 1, ctx).formula));
  write(dir, "jcirc1.fml",
        printFormula(genCut(CutKind::Jcirc, 1, ctx).formula));
  write(dir, "jstar1.fml",
        printFormula(genCut(CutKind::Jstar, 1, ctx).formula));
  write(dir, "y1.fml", printFormula(genCut(CutKind::Y, 1, ctx).formula));

  {
    // the three closure combinators over a minimal custom cut
    Signature sig = ctx.signature();
    CutFormula base;
    base.formula = parseFormula("N(x)", sig);
    base.profile = profile(base.formula, nullptr);
    write(dir, "shorten_plus.fml",
          printFormula(shortenCut(base, {Closure::Plus}, ctx).formula));
    write(dir, "shorten_times.fml",
          printFormula(shortenCut(base, {Closure::Times}, ctx).formula));
    write(dir, "shorten_omega1.fml",
          printFormula(shortenCut(base, {Closure::Omega1}, ctx).formula));
    FormulaPtr I = parseFormula("in(x, p)", sig);
    write(dir, "istar.fml",
          printFormula(parameterFreeShortening(I, Var{"x", 0}, {{"p", 0}})));
  }

  {
    ArithContext actx = ArithContext::standard();
    Signature sig = actx.signature();
    FormulaPtr A = parseFormula("exists x. (N(x) /\\ Z(x))", sig);
    FormulaPtr B = parseFormula("exists y. (N(y) /\\ E(y, y))", sig);
    WitnessComparison le = makeComparison(A, B, false, actx);
    WitnessComparison lt = makeComparison(A, B, true, actx);
    write(dir, "witness_le.fml", printFormula(comparisonFormula(le, actx)));
    write(dir, "witness_lt.fml", printFormula(comparisonFormula(lt, actx)));
    write(dir, "witness_le_dual.fml",
          printFormula(comparisonFormula(dual(le), actx)));
    write(dir, "witness_lt_dual.fml",
          printFormula(comparisonFormula(dual(lt), actx)));
  }

  std::cout << "templates written to " << dir.string() << "\n";
  return 0;
}

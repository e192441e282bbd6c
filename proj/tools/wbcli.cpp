// Batch front door over the library: measurement, translation, evaluation,
// generation and proof checking. Outputs are deterministic prints.
// Exit codes: 0 ok, 1 usage, 2 input parse/validation failure, 3 internal.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wb/arith.hpp"
#include "wb/complexity.hpp"
#include "wb/elim.hpp"
#include "wb/model.hpp"
#include "wb/parse.hpp"
#include "wb/proof.hpp"
#include "wb/satgen.hpp"
#include "wb/signature.hpp"
#include "wb/translation.hpp"

using namespace wb;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Signature thetaOrDefault(const std::string& path) {
  if (!path.empty()) return loadSignatureFile(path);
  Signature s("theta");
  s.addPredicate("P", 1);
  s.addPredicate("R", 2);
  return s;
}

Assignment parseAssignment(const std::string& text, const FiniteModel& M) {
  Assignment a;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("bad assignment entry: " + item);
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t"));
      s.erase(s.find_last_not_of(" \t") + 1);
      return s;
    };
    std::string v = trim(item.substr(0, eq));
    std::string e = trim(item.substr(eq + 1));
    Var var{v, 0};
    auto dollar = v.find('$');
    if (dollar != std::string::npos) {
      var.name = v.substr(0, dollar);
      var.index = static_cast<unsigned>(std::stoul(v.substr(dollar + 1)));
    }
    a[var] = M.elementIndex(e);
  }
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbolic workbench for quantifier-alternation complexity, "
               "translations, satisfaction generators and proof checking"};
  app.require_subcommand(1);
  unsigned seed = 0;
  app.add_option("--seed", seed, "seed for randomized tooling (reserved)");

  std::string sigPath, formulaPath, stipLevelsRaw;
  auto* measure = app.add_subcommand("measure", "complexity profile");
  measure->add_option("--sig", sigPath)->required();
  measure->add_option("--formula", formulaPath)->required();

  std::string clsName;
  unsigned clsLevel = 0;
  auto* classify = app.add_subcommand("classify", "starred class membership");
  classify->add_option("--sig", sigPath)->required();
  classify->add_option("--formula", formulaPath)->required();
  classify->add_option("--class", clsName, "sigma | pi | delta")->required();
  classify->add_option("--level", clsLevel)->required();

  std::string srcPath, tgtPath, transPath;
  auto* translate = app.add_subcommand("translate", "apply a translation");
  translate->add_option("--source", srcPath)->required();
  translate->add_option("--target", tgtPath)->required();
  translate->add_option("--translation", transPath)->required();
  translate->add_option("--formula", formulaPath)->required();

  std::string midPath, trans2Path;
  auto* composeCmd = app.add_subcommand("compose", "compose translations");
  composeCmd->add_option("--source", srcPath)->required();
  composeCmd->add_option("--mid", midPath)->required();
  composeCmd->add_option("--target", tgtPath)->required();
  composeCmd->add_option("--first", transPath)->required();
  composeCmd->add_option("--second", trans2Path)->required();

  std::string modelPath, assignRaw;
  auto* evalCmd = app.add_subcommand("eval", "evaluate on a finite model");
  evalCmd->add_option("--sig", sigPath)->required();
  evalCmd->add_option("--model", modelPath)->required();
  evalCmd->add_option("--formula", formulaPath)->required();
  evalCmd->add_option("--assign", assignRaw, "x=e0,y=e1");

  auto* internal = app.add_subcommand("internal-model",
                                      "model carved out by a translation");
  internal->add_option("--source", srcPath)->required();
  internal->add_option("--target", tgtPath)->required();
  internal->add_option("--translation", transPath)->required();
  internal->add_option("--model", modelPath)->required();

  std::string thetaPath;
  unsigned levelN = 0;
  bool naive = false;
  auto* satgenCmd =
      app.add_subcommand("satgen", "partial satisfaction predicate");
  satgenCmd->add_option("--n", levelN)->required();
  satgenCmd->add_option("--theta", thetaPath);
  satgenCmd->add_flag("--naive", naive);

  std::string cutKind, shortenRaw;
  auto* cutsCmd = app.add_subcommand("cuts", "definable cut families");
  cutsCmd->add_option("--kind", cutKind, "jdag | jcirc | jstar | y | im")
      ->required();
  cutsCmd->add_option("--n", levelN)->required();
  cutsCmd->add_option("--theta", thetaPath);
  cutsCmd->add_option("--shorten", shortenRaw,
                      "comma list of plus, times, omega1");

  unsigned budget = 0;
  auto* rosserCmd =
      app.add_subcommand("rosser", "bounded-witness self-referential sentence");
  rosserCmd->add_option("--b0", formulaPath)->required();
  rosserCmd->add_option("--budget", budget)->required();

  std::string a0Path, bPath;
  unsigned consM = 0, consC11 = 0;
  auto* consCmd =
      app.add_subcommand("conservative", "reflection-based extension sentence");
  consCmd->add_option("--a0", a0Path)->required();
  consCmd->add_option("--b", bPath)->required();
  consCmd->add_option("--m", consM)->required();
  consCmd->add_option("--c11", consC11)->required();
  consCmd->add_option("--theta", thetaPath);

  std::string proofPath;
  auto* checkCmd = app.add_subcommand("check-proof", "restricted provability");
  checkCmd->add_option("--sig", sigPath)->required();
  checkCmd->add_option("--proof", proofPath)->required();

  unsigned cap = 6;
  auto* constantsCmd =
      app.add_subcommand("constants", "empirical growth-law constants");
  constantsCmd->add_option("--cap", cap);
  constantsCmd->add_option("--theta", thetaPath);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // 1 for any usage error, 0 for --help
  }

  try {
    if (*measure) {
      Signature sig = loadSignatureFile(sigPath);
      FormulaPtr f = loadFormulaFile(formulaPath, sig);
      std::cout << profileReport(profile(f)) << "\n";
    } else if (*classify) {
      Signature sig = loadSignatureFile(sigPath);
      FormulaPtr f = loadFormulaFile(formulaPath, sig);
      ClassKind k;
      if (clsName == "sigma") k = ClassKind::SigmaStar;
      else if (clsName == "pi") k = ClassKind::PiStar;
      else if (clsName == "delta") k = ClassKind::DeltaStar;
      else throw std::runtime_error("unknown class: " + clsName);
      bool in = classMember(f, ClassId{k, clsLevel});
      std::cout << (in ? "member" : "non-member") << "\n";
    } else if (*translate) {
      Signature src = loadSignatureFile(srcPath);
      Signature tgt = loadSignatureFile(tgtPath);
      Translation tau = loadTranslationFile(transPath, src, tgt);
      FormulaPtr f = loadFormulaFile(formulaPath, src);
      std::cout << printFormula(wb::apply(tau, f)) << "\n";
    } else if (*composeCmd) {
      Signature src = loadSignatureFile(srcPath);
      Signature mid = loadSignatureFile(midPath);
      Signature tgt = loadSignatureFile(tgtPath);
      Translation tau = loadTranslationFile(transPath, src, mid);
      Translation nu = loadTranslationFile(trans2Path, mid, tgt);
      std::cout << printTranslation(compose(tau, nu));
    } else if (*evalCmd) {
      Signature sig = loadSignatureFile(sigPath);
      FiniteModel M = loadModelFile(modelPath, sig);
      FormulaPtr f = loadFormulaFile(formulaPath, sig);
      Assignment a =
          assignRaw.empty() ? Assignment{} : parseAssignment(assignRaw, M);
      std::cout << (eval(M, f, a) ? "true" : "false") << "\n";
    } else if (*internal) {
      Signature src = loadSignatureFile(srcPath);
      Signature tgt = loadSignatureFile(tgtPath);
      Translation tau = loadTranslationFile(transPath, src, tgt);
      FiniteModel M = loadModelFile(modelPath, tgt);
      std::cout << printModel(internalModel(M, tau));
    } else if (*satgenCmd) {
      SatGenContext ctx;
      ctx.theta = thetaOrDefault(thetaPath);
      ctx.mode = naive ? SatMode::Naive : SatMode::Optimized;
      SatFamily fam = genSat(levelN, ctx);
      Stipulations stip = ctx.stipulations();
      std::cout << printFormula(fam.formula) << "\n";
      std::cerr << profileReport(profile(fam.formula, &stip)) << "\n";
    } else if (*cutsCmd) {
      SatGenContext ctx;
      ctx.theta = thetaOrDefault(thetaPath);
      CutKind k;
      if (cutKind == "jdag") k = CutKind::Jdag;
      else if (cutKind == "jcirc") k = CutKind::Jcirc;
      else if (cutKind == "jstar") k = CutKind::Jstar;
      else if (cutKind == "y") k = CutKind::Y;
      else if (cutKind == "im") k = CutKind::Im;
      else throw std::runtime_error("unknown cut kind: " + cutKind);
      CutFormula c = genCut(k, levelN, ctx);
      if (!shortenRaw.empty()) {
        std::set<Closure> cl;
        std::istringstream in(shortenRaw);
        std::string item;
        while (std::getline(in, item, ',')) {
          if (item == "plus") cl.insert(Closure::Plus);
          else if (item == "times") cl.insert(Closure::Times);
          else if (item == "omega1") cl.insert(Closure::Omega1);
          else throw std::runtime_error("unknown closure: " + item);
        }
        c = shortenCut(c, cl, ctx);
      }
      std::cout << printFormula(c.formula) << "\n";
      std::cerr << profileReport(c.profile) << "\n";
    } else if (*rosserCmd) {
      ArithContext ctx = ArithContext::standard();
      FormulaPtr B0 = loadFormulaFile(formulaPath, ctx.signature());
      RosserResult r = rosserSentence(B0, budget, ctx);
      std::cout << printFormula(r.sentence) << "\n";
      std::cerr << "rho0 " << r.rho0 << " bound " << r.statedBound
                << " budget " << budget << "\n";
    } else if (*consCmd) {
      SatGenContext ctx;
      ctx.theta = thetaOrDefault(thetaPath);
      Signature sig = ctx.signature();
      FormulaPtr A0 = loadFormulaFile(a0Path, sig);
      FormulaPtr B = loadFormulaFile(bPath, sig);
      Translation ident = makeIdentity(sig);
      unsigned lvl = conservativeLevel(A0, B, consM, ident, ctx, consC11);
      std::cout << printFormula(
                       conservativeExtension(A0, B, consM, ident, ctx, consC11))
                << "\n";
      std::cerr << "level " << lvl << "\n";
    } else if (*checkCmd) {
      Signature sig = loadSignatureFile(sigPath);
      ProofObject p = parseProof(slurp(proofPath), sig);
      if (auto v = check(p)) {
        std::cout << "rejected at step " << v->step << ": " << v->message
                  << "\n";
        return 2;
      }
      ProofStats st = stats(p);
      std::cout << "accepted: " << st.stepCount << " steps, max rho0 "
                << st.maxRho0 << ", max nu " << st.maxNu << " at level "
                << p.n << "\n";
    } else if (*constantsCmd) {
      SatGenContext ctx;
      ctx.theta = thetaOrDefault(thetaPath);
      std::cout << measureConstants(cap, ctx).render();
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (...) {
    std::cerr << "internal error\n";
    return 3;
  }
  return 0;
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "proofutil.hpp"
#include "wb/parse.hpp"
#include "wb/proof.hpp"

using namespace wb;

namespace {

std::vector<ProofObject> loadCorpus() {
  return wbtest::loadProofCorpus(PROOF_DIR);
}

ProofObject proofOf(const std::vector<std::string>& lines) {
  std::string text;
  for (const auto& l : lines) text += l + "\n";
  return parseProof(text, wbtest::proofSignature());
}

}  // namespace

TEST_CASE("valid corpus is accepted and round-trips through print/parse") {
  std::vector<ProofObject> corpus = loadCorpus();
  REQUIRE(corpus.size() == 50);
  for (const ProofObject& p : corpus) {
    auto v = check(p);
    if (v) INFO("step ", v->step, ": ", v->message);
    CHECK(!v);
    ProofObject again = parseProof(printProof(p), wbtest::proofSignature());
    CHECK(printProof(again) == printProof(p));
    CHECK(!check(again));
    ProofStats st = stats(p);
    CHECK(st.stepCount == p.steps.size());
    CHECK(st.maxRho0 <= p.n);
  }
}

TEST_CASE("each of 200 single mutations is rejected") {
  std::vector<ProofObject> corpus = loadCorpus();
  REQUIRE(corpus.size() == 50);
  int rejected = 0, total = 0;
  for (const ProofObject& base : corpus)
    for (const ProofObject& m : wbtest::mutations(base)) {
      ++total;
      if (check(m)) ++rejected;
    }
  CHECK(total == 200);
  CHECK(rejected == 200);
}

TEST_CASE("two-step disjunction introduction at level 1") {
  ProofObject p = proofOf({
      "level 1",
      "step 1: P(x) |- P(x) ; rule assumption",
      "step 2: P(x) |- P(x) \\/ Q(x) ; rule orI1 from 1",
  });
  CHECK(!check(p));
  CHECK(stats(p).stepCount == 2);
}

TEST_CASE("restriction violation reports the formula's rho0") {
  ProofObject p = proofOf({
      "level 1",
      "step 1: forall x. exists y. R(x, y) |- forall x. exists y. R(x, y)"
      " ; rule assumption",
  });
  auto v = check(p);
  REQUIRE(v.has_value());
  CHECK(v->kind == ProofViolation::Kind::Restriction);
  // rhoA = 2 but rhoE = 3 for the forall-exists prefix, so rho0 = 3
  CHECK(v->message.find("rho0 3") != std::string::npos);
  p.n = 2;
  CHECK(check(p).has_value());
  p.n = 3;
  CHECK(!check(p));
}

TEST_CASE("eigenvariable violations are rejected") {
  // the classic non-derivation of forall from exists
  ProofObject p = proofOf({
      "level 2",
      "step 1: exists x. P(x) |- exists x. P(x) ; rule assumption",
      "step 2: exists x. P(x), P(x) |- P(x) ; rule assumption",
      "step 3: exists x. P(x), P(x) |- forall x. P(x) ; rule allI from 2",
  });
  auto v = check(p);
  REQUIRE(v.has_value());
  CHECK(v->kind == ProofViolation::Kind::Eigenvariable);
  CHECK(v->step == 3);

  // exE whose witness variable leaks into the conclusion
  ProofObject q = proofOf({
      "level 2",
      "step 1: exists x. P(x) |- exists x. P(x) ; rule assumption",
      "step 2: exists x. P(x), P(y) |- P(y) ; rule assumption",
      "step 3: exists x. P(x) |- P(y) ; rule exE from 1, 2",
  });
  auto w = check(q);
  REQUIRE(w.has_value());
  CHECK(w->kind == ProofViolation::Kind::Eigenvariable);
}

TEST_CASE("structural defects are reported with their step") {
  ProofObject p = proofOf({
      "level 1",
      "step 1: P(x) |- P(x) ; rule assumption",
      "step 2: P(x) |- P(x) \\/ Q(x) ; rule orI1 from 2",
  });
  auto v = check(p);
  REQUIRE(v.has_value());
  CHECK(v->kind == ProofViolation::Kind::Structure);
  CHECK(v->step == 2);
  CHECK_THROWS_AS(stats(p), ProofError);
  CHECK(check(ProofObject{}).has_value());
}

TEST_CASE("accepted proofs are sound on all models of size <= 3") {
  for (const ProofObject& p : loadCorpus()) {
    REQUIRE(!check(p));
    CHECK(wbtest::soundOnSmallModels(p));
  }
}

TEST_CASE("acceptance is monotone in the restriction level") {
  for (ProofObject p : loadCorpus()) {
    REQUIRE(!check(p));
    for (unsigned n = p.n + 1; n <= p.n + 3; ++n) {
      ProofObject q = p;
      q.n = n;
      CHECK(!check(q));
    }
    // and tightening below the max rho0 rejects
    ProofStats st = stats(p);
    if (st.maxRho0 > 0) {
      ProofObject q = p;
      q.n = st.maxRho0 - 1;
      auto v = check(q);
      REQUIRE(v.has_value());
      CHECK(v->kind == ProofViolation::Kind::Restriction);
    }
  }
}

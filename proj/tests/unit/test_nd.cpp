#include "doctest.h"

#include "dispnet/nd.hpp"
#include "dispnet/random_proofs.hpp"

using namespace dispnet;

namespace {

const char* kRangUpProof = R"((signature (np 0) (s 0))
(!>E "mary+rang+everyone+up" "s"
  (^>I 1 "mary+rang+1+up" "s^>np"
    (\E "mary+rang+p0+up" "s"
      (hyp 0 "mary" "np")
      (^>E "rang+p0+up" "np\s"
        (hyp 1 "rang+1+up" "(np\s)^>np")
        (dis 1 a "p0" "np"))))
  (hyp 2 "everyone" "(s^>np)!>s"))
)";

}  // namespace

TEST_CASE("check_nd accepts the rang-up derivation") {
  ProofFile pf = parse_proof_file(kRangUpProof);
  CHECK_FALSE(check_nd(pf.proof).has_value());
  Sequent s = sequent_of(pf.proof);
  REQUIRE(s.hypotheses.size() == 3);
  CHECK(to_string(s.term) == "mary+rang+everyone+up");
}

TEST_CASE("check_nd accepts an axiom") {
  ProofFile pf = parse_proof_file("(signature (inf 1)) (hyp 0 \"a+1+b\" \"inf\")");
  CHECK_FALSE(check_nd(pf.proof).has_value());
}

TEST_CASE("check_nd rejects a broken concatenation") {
  ProofFile pf = parse_proof_file(R"((signature (np 0) (s 0))
(\E "y+x" "s" (hyp 0 "x" "np") (hyp 1 "y" "np\s")))");
  auto v = check_nd(pf.proof);
  REQUIRE(v.has_value());
  CHECK(v->path == "root");
}

TEST_CASE("check_nd rejects a discharged hypothesis that is not a variable") {
  ProofFile pf = parse_proof_file(R"((signature (np 0) (s 0))
(/I 1 "x" "s/np" (\E "x+q+q" "s" (hyp 0 "x" "np") (dis 1 a "q+q" "np\s"))))");
  CHECK(check_nd(pf.proof).has_value());
}

TEST_CASE("check_nd rejects a wrong discharge index") {
  ProofFile pf = parse_proof_file(R"((signature (np 0) (s 0))
(\I 1 "_" "np\np" (dis 2 a "p" "np")))");
  CHECK(check_nd(pf.proof).has_value());
  ProofFile ok = parse_proof_file(R"((signature (np 0) (s 0))
(\I 2 "_" "np\np" (dis 2 a "p" "np")))");
  CHECK_FALSE(check_nd(ok.proof).has_value());
}

TEST_CASE("proof files round trip") {
  ProofFile pf = parse_proof_file(kRangUpProof);
  ProofFile again = parse_proof_file(proof_file_text(pf.signature, pf.proof));
  CHECK(to_sexpr(again.proof) == to_sexpr(pf.proof));
  CHECK(same_proof(again.proof, pf.proof));
  CHECK_THROWS_AS(parse_proof_file("(signature (np 0)) (hyp 0 \"x\" \"np\""), NDSyntaxError);
  CHECK_THROWS_AS(parse_proof_file("(signature (np 0)) (frob \"x\" \"np\")"), NDSyntaxError);
}

TEST_CASE("latex output") {
  ProofFile pf = parse_proof_file(kRangUpProof);
  std::string tex = latex(pf.proof);
  CHECK(tex.find("\\infer[") != std::string::npos);
  CHECK(tex.find("\\uparrow_{>} I") != std::string::npos);
}

TEST_CASE("net_of_nd and extract_nd on the rang-up derivation") {
  ProofFile pf = parse_proof_file(kRangUpProof);
  NetOfND net = net_of_nd(pf.proof);
  CHECK(net.logical_rules == 1);
  REQUIRE(net.trace.comb);
  CHECK(row_term(net.trace.final_row) == pf.proof.term);
  NDProof back = extract_nd(net.structure, net.labels, net.goal);
  CHECK_FALSE(check_nd(back).has_value());
  CHECK(sequent_of(back) == sequent_of(pf.proof));
  CHECK(same_proof(back, pf.proof));
}

TEST_CASE("axiom net") {
  ProofFile pf = parse_proof_file("(signature (inf 1)) (hyp 0 \"a+1+b\" \"inf\")");
  NetOfND net = net_of_nd(pf.proof);
  CHECK(net.structure.links.empty());
  REQUIRE(net.trace.comb);
  CHECK(net.trace.steps.empty());
  NDProof back = extract_nd(net.structure, net.labels, net.goal);
  CHECK(back.rule == NDRule::Hyp);
}

TEST_CASE("same_proof ignores discharge names") {
  const char* a = R"((signature (np 0) (s 0))
(/I 1 "x" "s/np" (\E "x+p0" "s" (hyp 0 "x" "np") (dis 1 a "p0" "np\s"))))";
  const char* b = R"((signature (np 0) (s 0))
(/I 7 "x" "s/np" (\E "x+q" "s" (hyp 0 "x" "np") (dis 7 a "q" "np\s"))))";
  // the premiss order above is deliberately wrong for /I; the proofs still
  // compare equal as trees
  CHECK(same_proof(parse_proof_file(a).proof, parse_proof_file(b).proof));
}

TEST_CASE("random proofs survive the round trip") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    NDProof p = random_nd_proof(rng);
    REQUIRE_FALSE(check_nd(p).has_value());
    NetOfND net = net_of_nd(p);
    REQUIRE(net.trace.comb);
    CHECK(row_term(net.trace.final_row) == p.term);
    NDProof q = extract_nd(net.structure, net.labels, net.goal);
    CHECK_FALSE(check_nd(q).has_value());
    CHECK(sequent_of(q) == sequent_of(p));
  }
}

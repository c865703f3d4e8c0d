#include "doctest.h"

#include <map>

#include "dispnet/proof_structure.hpp"

using namespace dispnet;

namespace {

Signature sig() {
  Signature s;
  s.declare("np", 0);
  s.declare("s", 0);
  s.declare("a", 0);
  s.declare("b", 0);
  return s;
}

Formula f(const char* t) { return parse_formula(t, sig()); }

std::map<std::string, int> atom_counts(const ProofFrame& fr) {
  std::map<std::string, int> out;
  for (int v : fr.input_atoms) ++out[fr.graph.vertices[v].formula.name()];
  for (int v : fr.output_atoms) ++out[fr.graph.vertices[v].formula.name()];
  return out;
}

}  // namespace

TEST_CASE("rang-up unfolding") {
  ProofFrame fr = unfold({f("np"), f("(np\\s)^>np"), f("(s^>np)!>s")}, f("s"));
  int tensors = 0, pars = 0;
  for (const auto& l : fr.graph.links) (l.par ? pars : tensors)++;
  CHECK(tensors == 3);
  CHECK(pars == 1);
  auto counts = atom_counts(fr);
  CHECK(counts["np"] == 4);
  CHECK(counts["s"] == 4);
  LinkingEnumerator en(fr);
  CHECK(en.mismatches().empty());
  CHECK(en.total() == 4);
  int n = 0;
  while (en.next()) ++n;
  CHECK(n == 4);
}

TEST_CASE("axiom frame") {
  ProofFrame fr = unfold({f("np")}, f("np"));
  CHECK(fr.graph.links.empty());
  LinkingEnumerator en(fr);
  CHECK(en.total() == 1);
  auto ps = en.next();
  REQUIRE(ps);
  CHECK(ps->vertices.size() == 1);
  CHECK(ps->conclusion == ps->hypotheses[0]);
  CHECK_FALSE(en.next());
}

TEST_CASE("slash elimination frame") {
  ProofFrame fr = unfold({f("a/b"), f("b")}, f("a"));
  REQUIRE(fr.graph.links.size() == 1);
  CHECK(fr.graph.links[0].tag.to_string() == "L/");
  CHECK_FALSE(fr.graph.links[0].par);
  auto counts = atom_counts(fr);
  CHECK(counts["a"] == 2);
  CHECK(counts["b"] == 2);
}

TEST_CASE("count mismatch") {
  ProofFrame fr = unfold({f("np")}, f("s"));
  LinkingEnumerator en(fr);
  REQUIRE(en.mismatches().size() == 2);
  CHECK(en.mismatches()[0].atom == "np");
  CHECK(en.mismatches()[0].inputs == 1);
  CHECK(en.mismatches()[0].outputs == 0);
  CHECK_FALSE(en.next());
}

TEST_CASE("linking count is a product of factorials") {
  ProofFrame fr = unfold({f("np"), f("np"), f("np"), f("(np\\(np\\(np\\s)))")}, f("s"));
  LinkingEnumerator en(fr);
  CHECK(en.total() == 6);
  int n = 0;
  while (en.next()) ++n;
  CHECK(n == 6);
}

TEST_CASE("each vertex is premiss and conclusion of at most one link") {
  ProofFrame fr = unfold({f("np"), f("(np\\s)^>np"), f("(s^>np)!>s")}, f("s"));
  LinkingEnumerator en(fr);
  while (auto ps = en.next()) {
    std::vector<int> prem(ps->vertices.size()), concl(ps->vertices.size());
    for (const auto& l : ps->links) {
      for (int v : l.premisses) ++prem[v];
      for (int v : l.conclusions) ++concl[v];
    }
    for (std::size_t v = 0; v < prem.size(); ++v) {
      CHECK(prem[v] <= 1);
      CHECK(concl[v] <= 1);
    }
  }
}

#include "doctest.h"

#include "dispnet/nd.hpp"

using namespace dispnet;

namespace {

Signature sig() {
  Signature s;
  s.declare("np", 0);
  s.declare("s", 0);
  s.declare("n", 0);
  s.declare("a", 0);
  s.declare("b", 0);
  return s;
}

bool derivable(std::vector<const char*> hyps, const char* goal) {
  std::vector<Formula> fs;
  for (const char* h : hyps) fs.push_back(parse_formula(h, sig()));
  return lambek_derivable(fs, parse_formula(goal, sig()));
}

}  // namespace

TEST_CASE("Lambek theorems") {
  CHECK(derivable({"np", "np\\s"}, "s"));
  CHECK(derivable({"(a/b)*b"}, "a"));
  CHECK(derivable({"np"}, "s/(np\\s)"));
  CHECK(derivable({"a/b", "b/n"}, "a/n"));
  CHECK(derivable({}, "np/np"));
  CHECK(derivable({"np", "n"}, "np*n"));
}

TEST_CASE("Lambek non-theorems") {
  CHECK_FALSE(derivable({"np"}, "s"));
  CHECK_FALSE(derivable({"np\\s", "np"}, "s"));
  CHECK_FALSE(derivable({"a/b", "b"}, "b*a"));
  CHECK_FALSE(derivable({}, "np"));
  CHECK_FALSE(derivable({"s/(np\\s)"}, "np"));
}

TEST_CASE("discontinuous formulas are outside the oracle") {
  CHECK_THROWS_AS(derivable({"(np\\s)^>np"}, "s"), FormulaError);
}

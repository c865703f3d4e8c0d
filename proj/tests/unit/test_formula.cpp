#include "doctest.h"

#include "dispnet/formula.hpp"

using namespace dispnet;

namespace {

Signature sig() {
  Signature s;
  s.declare("np", 0);
  s.declare("s", 0);
  s.declare("n", 0);
  s.declare("inf", 1);
  return s;
}

Formula f(const char* text) { return parse_formula(text, sig()); }

}  // namespace

TEST_CASE("sorts") {
  CHECK(f("(np\\s)^>np").sort() == 1);
  CHECK(f("np").sort() == 0);
  CHECK(f("(s^>np)!>s").sort() == 0);
  CHECK(f("inf*inf").sort() == 2);
  CHECK(f("inf o< inf").sort() == 1);
  CHECK(sort_of_formula(f("inf!2(inf*inf)"), sig()) == 2);
}

TEST_CASE("well sortedness") {
  CHECK(well_sorted(f("(np\\s)^>np"), sig()).empty());
  CHECK_FALSE(well_sorted(f("np\\(s o> s)"), sig()).empty());
  CHECK_FALSE(well_sorted(f("s^2np"), sig()).empty());
  CHECK_FALSE(well_sorted(f("np/inf"), sig()).empty());
  CHECK(well_sorted(f("(inf*inf)^2np"), sig()).empty());
}

TEST_CASE("print and parse round trip") {
  for (const char* s : {"np", "np\\s", "s/np", "np\\np\\s", "s/np/np", "(np\\s)/np", "np\\(s/np)",
                        "(np\\s)^>np", "(s^>np)!>s", "inf o2 (inf*inf)", "(np*np)*np", "((s^<np)!<s)/n"}) {
    Formula x = f(s);
    CHECK(to_string(x) == s);
    CHECK(parse_formula(to_string(x), sig()) == x);
  }
}

TEST_CASE("associativity conventions") {
  CHECK(f("np\\np\\s") == Formula::under(f("np"), f("np\\s")));
  CHECK(f("s/np/np") == Formula::over(f("s/np"), f("np")));
  CHECK_THROWS_AS(f("np\\s/np"), FormulaError);
  CHECK_THROWS_AS(f("np*np*np"), FormulaError);
  CHECK_THROWS_AS(f("zz"), FormulaError);
  CHECK_THROWS_AS(f("np^9"), FormulaError);
}

TEST_CASE("latex") {
  CHECK(latex(f("(np\\s)^>np")) == "(\\mathit{np} \\backslash \\mathit{s}) \\uparrow_{>} \\mathit{np}");
}

TEST_CASE("signature files") {
  Signature s = load_signature("# atoms\nnp 0\ninf 1\n");
  CHECK(s.find("inf") == 1);
  CHECK_FALSE(s.find("s").has_value());
  CHECK_THROWS_AS(load_signature("np zero\n"), FormulaError);
}

#include "doctest.h"

#include "dispnet/terms.hpp"

using namespace dispnet;

TEST_CASE("sort counts separators") {
  CHECK(parse_term("mary").sort() == 0);
  CHECK(parse_term("rang+1+up").sort() == 1);
  CHECK(parse_term("p+1+q+1+r").sort() == 2);
  CHECK(parse_term("_").sort() == 0);
  CHECK(parse_term("_").empty());
}

TEST_CASE("concat") {
  CHECK(to_string(parse_term("mary") + parse_term("rang")) == "mary+rang");
  CHECK(concat(parse_term("_"), parse_term("a+1")) == parse_term("a+1"));
  auto t = parse_term("a+1") + parse_term("1+b");
  CHECK(to_string(t) == "a+1+1+b");
  CHECK(t.sort() == 2);
}

TEST_CASE("wrap") {
  CHECK(to_string(wrap(parse_term("rang+1+up"), Mode::first(), parse_term("everyone"))) == "rang+everyone+up");
  CHECK(wrap(parse_term("1"), Mode::first(), parse_term("x+y")) == parse_term("x+y"));
  CHECK(to_string(wrap(parse_term("a+1+b+1+c"), Mode::last(), parse_term("z"))) == "a+1+b+z+c");
  CHECK(wrap(parse_term("a+1+b+1+c"), Mode::at(2), parse_term("1")) == parse_term("a+1+b+1+c"));
  CHECK(to_string(wrap(parse_term("a+1+b+1+c"), Mode::at(1), parse_term("_"))) == "a+b+1+c");
}

TEST_CASE("wrap errors") {
  try {
    wrap(parse_term("a"), Mode::first(), parse_term("b"));
    FAIL("no error");
  } catch (const TermError& e) {
    CHECK(e.kind() == TermError::Kind::WrapOnSortZero);
  }
  try {
    wrap(parse_term("a+1+b"), Mode::at(2), parse_term("c"));
    FAIL("no error");
  } catch (const TermError& e) {
    CHECK(e.kind() == TermError::Kind::IndexOutOfRange);
  }
}

TEST_CASE("mode resolution") {
  CHECK(Mode::first().resolve(3) == 1);
  CHECK(Mode::last().resolve(3) == 3);
  CHECK(Mode::at(2).resolve(3) == 2);
  CHECK(Mode::at(4).resolve(3) == 0);
  CHECK(Mode::first().resolve(0) == 0);
  CHECK(Mode::parse(">") == Mode::first());
  CHECK(Mode::parse("<") == Mode::last());
  CHECK(Mode::parse("3") == Mode::at(3));
  CHECK(Mode::at(3).to_string() == "3");
}

TEST_CASE("term syntax") {
  for (const char* s : {"a", "_", "1", "a+1+b", "1+1", "the+cold+shoulder"}) CHECK(to_string(parse_term(s)) == s);
  CHECK(spaced(parse_term("a+1+b")) == "a 1 b");
  CHECK_THROWS_AS(parse_term("a++b"), TermError);
  CHECK_THROWS_AS(parse_term("a+_"), TermError);
  CHECK(separator_position(parse_term("a+1+b+1"), Mode::last()) == 3);
  CHECK(separator_position(parse_term("a"), Mode::first()) == -1);
}

TEST_CASE("fresh variables avoid reserved words") {
  FreshVariables fv;
  fv.reserve(parse_term("p0+1+p2"));
  CHECK(fv.next() == "p1");
  CHECK(to_string(fv.term_of_sort(2)) == "p3+1+p4+1+p5");
}

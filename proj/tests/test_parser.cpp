#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace mm;
using mmtest::pp;

TEST_CASE("parses the two-term quartic") {
  RingPtr R = make_ring(Field::rationals(), {"x", "y", "z"});
  Polynomial p = pp("x^4 + y^2*z^2", R);
  CHECK(p.terms().size() == 2);
  CHECK(p.total_degree() == 4);
  CHECK(format_polynomial(p) == "x^4 + y^2*z^2");
}

TEST_CASE("rational coefficients and unary minus") {
  RingPtr R = make_ring(Field::rationals(), {"x", "y"});
  Polynomial p = pp("-3/2*x*y", R);
  CHECK(p.terms().size() == 1);
  CHECK(p.leading_coefficient().str() == "-3/2");
  CHECK(format_polynomial(p) == "-3/2*x*y");
  CHECK(pp("-(x+y)^2", R) == pp("-x^2-2*x*y-y^2", R));
}

TEST_CASE("error positions point at the offending token") {
  RingPtr R = make_ring(Field::rationals(), {"x", "y"});
  CHECK_THROWS_WITH_AS(pp("x + ", R), "1:5: expected a variable, a number or '(', found end of input",
                       ParseError);
  CHECK_THROWS_AS(pp("x*w", R), ParseError);
  CHECK_THROWS_AS(pp("x y", R), ParseError);     // no implicit multiplication
  CHECK_THROWS_AS(pp("x^(2)", R), ParseError);   // exponent must be a literal
  CHECK_THROWS_AS(pp("x^99999999999999999999", R), ParseError);
  CHECK_THROWS_AS(pp("1/0", R), ParseError);
  CHECK_THROWS_AS(pp("x/y", R), ParseError);     // '/' only joins integer literals
}

TEST_CASE("formatting is the inverse of parsing on canonical forms") {
  CHECK(format_polynomial(Polynomial::zero(make_ring(Field::rationals(), {"x"}))) == "0");
  RingPtr R = make_ring(Field::rationals(), {"x", "y"});
  CHECK(format_polynomial(pp("x^2-y^2", R)) == "x^2 - y^2");

  std::mt19937 rng(5);
  for (Field f : {Field::rationals(), Field::prime(7)}) {
    RingPtr S = make_ring(f, {"x", "y", "z"});
    for (int i = 0; i < 150; ++i) {
      Polynomial p = mmtest::random_polynomial(rng, S, 5, 4, 6);
      CHECK(pp(format_polynomial(p), S) == p);
    }
  }
}

TEST_CASE("sessions resolve rings, ideals and polytopes") {
  SessionDocument doc = parse_session(
      "# a comment\n"
      "ring R = QQ[x, y, z];\n"
      "ideal I = x^2, x*y;\n"
      "polytope Q = (1,1,0) (2,1,0) (1,3,0) (1,1,3);\n"
      "ring S = GF(2)[a];\n"
      "ideal J = a^3;\n");
  CHECK(doc.declarations.size() == 5);
  CHECK(doc.ring("R")->arity() == 3);
  CHECK(doc.ideal("I").generators.size() == 2);
  CHECK(doc.ideal("I").ring_name == "R");
  CHECK(doc.ideal("J").ring_name == "S");
  CHECK(doc.polytope("Q").points.size() == 4);
  CHECK(doc.polytope("Q").dimension == 3);
  CHECK(doc.ring("S")->field() == Field::prime(2));
}

TEST_CASE("session errors are structured") {
  CHECK_THROWS_AS(parse_session("ideal I = a;"), ParseError);           // no ring yet
  CHECK_THROWS_AS(parse_session("ring R = QQ[x]; ring R = QQ[y];"), ParseError);
  CHECK_THROWS_AS(parse_session("ring R = QQ[x]; ideal I = x, y;"), ParseError);
  CHECK_THROWS_AS(parse_session("polytope P = (1,2) (1,2,3);"), ParseError);
  CHECK_THROWS_AS(parse_session("ring R = GF(4)[x];"), Error);          // 4 is not prime
  CHECK_THROWS_AS(parse_session("ring QQ = QQ[x];"), ParseError);       // reserved
}

TEST_CASE("points may carry negative coordinates") {
  SessionDocument doc = parse_session("polytope C = (-1,0) (1,0) (0,-1) (0,1);");
  CHECK(doc.polytope("C").points.size() == 4);
  CHECK(doc.polytope("C").points[0] == std::vector<std::int64_t>{-1, 0});
}

TEST_CASE("fuzzing the parser only produces structured errors") {
  std::mt19937 rng(99);
  const std::string alphabet = "xyz01+-*^/();,=[]# \nringidealpolytopeQGF";
  std::uniform_int_distribution<std::size_t> len(0, 40);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  RingPtr R = make_ring(Field::rationals(), {"x", "y", "z"});
  for (int i = 0; i < 500; ++i) {
    std::string text;
    std::size_t n = len(rng);
    for (std::size_t j = 0; j < n; ++j) text += alphabet[pick(rng)];
    try {
      (void)parse_polynomial(text, R);
    } catch (const Error&) {
    }
    try {
      (void)parse_session(text);
    } catch (const Error&) {
    }
  }
  CHECK(true);  // reaching here means no crash
}

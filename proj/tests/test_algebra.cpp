#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace mm;
using mmtest::pp;

TEST_CASE("rational elements are stored reduced") {
  FieldElement a = FieldElement::of_fraction(Int(6), Int(4), Field::rationals());
  CHECK(a.str() == "3/2");
  FieldElement b = FieldElement::of_fraction(Int(-6), Int(4), Field::rationals());
  CHECK(b.str() == "-3/2");
  CHECK((a + b).is_zero());
}

TEST_CASE("prime field arithmetic stays in [0, p)") {
  Field f = Field::prime(7);
  FieldElement a = FieldElement::of(-1, f);
  CHECK(a.residue_value() == 6);
  CHECK((a * a).residue_value() == 1);
  CHECK((a.inverse() * a).is_one());
  CHECK_THROWS_AS(FieldElement::zero(f).inverse(), Error);
  CHECK_THROWS_AS(Field::prime(6), Error);
  CHECK_THROWS_AS(Field::prime(1u << 31), Error);
}

TEST_CASE("field axioms hold on random samples") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> d(-20, 20);
  for (Field f : {Field::rationals(), Field::prime(101)}) {
    for (int i = 0; i < 200; ++i) {
      FieldElement a = FieldElement::of(d(rng), f);
      FieldElement b = FieldElement::of(d(rng), f);
      FieldElement c = FieldElement::of(d(rng), f);
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
  }
}

TEST_CASE("monomial products check for exponent overflow") {
  Monomial big(std::vector<std::uint32_t>{0xffffffffu});
  CHECK_THROWS_AS(big * big, Error);
  CHECK_THROWS_AS(big.pow(2), Error);
  Monomial a(std::vector<std::uint32_t>{2, 1});
  Monomial b(std::vector<std::uint32_t>{1, 3});
  CHECK((a * b).exponents() == std::vector<std::uint32_t>{3, 4});
  CHECK(Monomial::lcm(a, b).exponents() == std::vector<std::uint32_t>{2, 3});
  CHECK(Monomial::gcd(a, b).exponents() == std::vector<std::uint32_t>{1, 1});
  CHECK(Monomial::gcd(a, b).divides(a));
  CHECK(a.divides(Monomial::lcm(a, b)));
}

TEST_CASE("lex and grevlex order the textbook examples") {
  MonomialOrder lex = MonomialOrder::lex();
  MonomialOrder grevlex = MonomialOrder::grevlex();
  Monomial x2(std::vector<std::uint32_t>{2, 0, 0});
  Monomial yz(std::vector<std::uint32_t>{0, 1, 1});
  Monomial y2(std::vector<std::uint32_t>{0, 2, 0});
  // lex: x^2 > y^2 > yz ; grevlex: degree ties broken against the last variable
  CHECK(lex.compare(x2, yz) > 0);
  CHECK(lex.compare(y2, yz) > 0);
  CHECK(grevlex.compare(x2, yz) > 0);
  CHECK(grevlex.compare(y2, yz) > 0);
  Monomial xz(std::vector<std::uint32_t>{1, 0, 1});
  Monomial xy(std::vector<std::uint32_t>{1, 1, 0});
  CHECK(grevlex.compare(xy, xz) > 0);
}

TEST_CASE("orders are total and multiplicative on random triples") {
  std::mt19937 rng(7);
  auto orders = {MonomialOrder::lex(), MonomialOrder::grevlex(),
                 MonomialOrder::grevlex().with_leading_block(2)};
  for (const MonomialOrder& ord : orders) {
    for (int i = 0; i < 300; ++i) {
      Monomial u = mmtest::random_monomial(rng, 4, 4);
      Monomial v = mmtest::random_monomial(rng, 4, 4);
      Monomial w = mmtest::random_monomial(rng, 4, 4);
      int c = ord.compare(u, v);
      CHECK(c == -ord.compare(v, u));
      if (c == 0) CHECK(u == v);
      if (c < 0) CHECK(ord.compare(u * w, v * w) < 0);
      // global: 1 is the least monomial
      if (!u.is_one()) CHECK(ord.compare(u, Monomial::one(4)) > 0);
    }
  }
}

TEST_CASE("elimination blocks dominate the comparison") {
  MonomialOrder ord = MonomialOrder::grevlex().with_leading_block(1);
  Monomial w(std::vector<std::uint32_t>{1, 0, 0});
  Monomial huge(std::vector<std::uint32_t>{0, 9, 9});
  CHECK(ord.compare(w, huge) > 0);
}

static RingPtr qxyz() {
  return make_ring(Field::rationals(), {"x", "y", "z"});
}

TEST_CASE("polynomial arithmetic matches the hand examples") {
  RingPtr R = qxyz();
  CHECK(pp("x+y", R) + pp("x-y", R) == pp("2*x", R));
  CHECK(pp("x+y", R) * pp("x-y", R) == pp("x^2-y^2", R));
  Polynomial zero = Polynomial::zero(R);
  CHECK(pp("x^5-3*y+1/2", R) * zero == zero);
  CHECK_THROWS_AS(pp("x", R) + pp("a", make_ring(Field::rationals(), {"a"})), Error);
}

TEST_CASE("canonical form is a fixpoint") {
  std::mt19937 rng(11);
  RingPtr R = qxyz();
  for (int i = 0; i < 100; ++i) {
    Polynomial p = mmtest::random_polynomial(rng, R);
    Polynomial q = mmtest::random_polynomial(rng, R);
    Polynomial s = p * q + p - q;
    CHECK(Polynomial(R, s.terms(), true) == s);
  }
}

TEST_CASE("substitute expands and projects") {
  RingPtr R = make_ring(Field::rationals(), {"x", "y"});
  RingPtr S = make_ring(Field::rationals(), {"s"});
  std::vector<std::optional<Polynomial>> images{pp("s", S), pp("s+1", S)};
  CHECK(substitute(pp("x^2*y", R), S, images) == pp("s^3+s^2", S));

  std::vector<std::optional<Polynomial>> proj{Polynomial::zero(R), pp("y", R)};
  CHECK(substitute(pp("x+y", R), R, proj) == pp("y", R));

  std::vector<std::optional<Polynomial>> missing{pp("s", S), std::nullopt};
  CHECK_THROWS_AS(substitute(pp("x*y", R), S, missing), Error);
}

TEST_CASE("substituting the Rees images kills a minor") {
  // Y11*f12 - Y12*f11 vanishes under Y1j -> f1j*T1
  RingPtr E = make_ring(Field::rationals(), {"x", "y", "z", "Y11", "Y12"});
  RingPtr T = make_ring(Field::rationals(), {"x", "y", "z", "T1"});
  Polynomial f11 = pp("x^4+y^2*z^2", T);
  Polynomial f12 = pp("x*y^2*z", T);
  std::vector<std::optional<Polynomial>> images{
      pp("x", T), pp("y", T), pp("z", T), f11 * pp("T1", T), f12 * pp("T1", T)};
  Polynomial minor = pp("Y11*x*y^2*z - Y12*(x^4+y^2*z^2)", E);
  CHECK(substitute(minor, T, images).is_zero());
}

TEST_CASE("substitute is a ring homomorphism on random inputs") {
  std::mt19937 rng(13);
  RingPtr R = make_ring(Field::rationals(), {"x", "y"});
  RingPtr S = make_ring(Field::rationals(), {"u", "v"});
  for (int i = 0; i < 60; ++i) {
    std::vector<std::optional<Polynomial>> images{mmtest::random_polynomial(rng, S, 3, 2, 2),
                                                  mmtest::random_polynomial(rng, S, 3, 2, 2)};
    Polynomial p = mmtest::random_polynomial(rng, R, 3, 2, 2);
    Polynomial q = mmtest::random_polynomial(rng, R, 3, 2, 2);
    CHECK(substitute(p + q, S, images) == substitute(p, S, images) + substitute(q, S, images));
    CHECK(substitute(p * q, S, images) == substitute(p, S, images) * substitute(q, S, images));
  }
}

TEST_CASE("multidegree detects homogeneity in the block grading") {
  RingPtr R = make_ring(Field::rationals(), {"K1", "K2"}, MonomialOrder::grevlex(),
                        {{1, 0}, {0, 1}});
  auto d = multidegree(pp("K1*K2", R));
  REQUIRE(d.has_value());
  CHECK(*d == std::vector<std::uint64_t>{1, 1});

  RingPtr S = make_ring(Field::rationals(), {"x", "y"});
  CHECK(*multidegree(pp("x^2+y^2", S)) == std::vector<std::uint64_t>{2});
  CHECK(!multidegree(pp("x^2+y^3", S)).has_value());
  CHECK_THROWS_AS(multidegree(Polynomial::zero(S)), Error);
}

TEST_CASE("derivatives drop terms in characteristic p") {
  RingPtr R = make_ring(Field::prime(2), {"x", "y"});
  CHECK(derivative(pp("x^2+x*y", R), 0) == pp("y", R));
  RingPtr Q = qxyz();
  CHECK(derivative(pp("x^2*y+y^2*z+z^3", Q), 0) == pp("2*x*y", Q));
  CHECK(derivative(pp("x^2*y+y^2*z+z^3", Q), 1) == pp("x^2+2*y*z", Q));
  CHECK(derivative(pp("x^2*y+y^2*z+z^3", Q), 2) == pp("y^2+3*z^2", Q));
}

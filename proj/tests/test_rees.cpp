#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

#include "mm/rees.hpp"

using namespace mm;
using mmtest::ii;
using mmtest::pp;

namespace {

RingPtr qxyz() { return make_ring(Field::rationals(), {"x", "y", "z"}); }

/// The kernel-of-map route to the defining ideal (the slow cross-check).
Ideal defining_ideal_via_kernel(const ReesPresentation& P) {
  const RingPtr& base = P.base_ring;
  std::vector<std::string> vars = base->variables();
  for (std::size_t i = 1; i <= P.ideal_count(); ++i) vars.push_back("TT" + std::to_string(i));
  RingPtr target = make_ring(base->field(), vars);

  std::vector<std::optional<Polynomial>> images(P.extended_ring->arity());
  for (std::size_t i = 0; i < P.ideal_count(); ++i) {
    Polynomial ti = Polynomial::variable(target, base->arity() + i);
    for (std::size_t j = 0; j < P.block_size[i]; ++j)
      images[P.fiber_variable(i, j)] = transport(P.ideals[i].generators()[j], target) * ti;
  }
  return kernel_of_map(P.extended_ring, target, images);
}

}  // namespace

TEST_CASE("a single two-generator ideal gives the one printed relation") {
  RingPtr R = qxyz();
  Ideal I = ii(R, {"x^4+y^2*z^2", "x*y^2*z"});
  ReesPresentation P = rees_defining_ideal({I});
  REQUIRE(P.defining_ideal.generators().size() == 1);
  const RingPtr& E = P.extended_ring;
  CHECK(P.defining_ideal.generators()[0] ==
        pp("x*y^2*z*K1 - x^4*K2 - y^2*z^2*K2", E));
  CHECK(verify_rees_generators(P));
}

TEST_CASE("two ideals give the two printed relations") {
  RingPtr R = qxyz();
  Ideal I = ii(R, {"x^4+y^2*z^2", "x*y^2*z"});
  Ideal J = ii(R, {"y^3+z^3", "x^2*y+x*z^2"});
  ReesPresentation P = rees_defining_ideal({I, J});
  const RingPtr& E = P.extended_ring;
  REQUIRE(P.defining_ideal.generators().size() == 2);
  Ideal expected(E, {pp("x*y^2*z*K1 - x^4*K2 - y^2*z^2*K2", E),
                     pp("x^2*y*K3 + x*z^2*K3 - y^3*K4 - z^3*K4", E)});
  CHECK(same_ideal(P.defining_ideal, expected));
  CHECK(verify_rees_generators(P));
}

TEST_CASE("a principal ideal presents freely") {
  RingPtr R = qxyz();
  ReesPresentation P = rees_defining_ideal({ii(R, {"x^2+z^2"})});
  CHECK(P.defining_ideal.is_zero());
  CHECK(verify_rees_generators(P));
}

TEST_CASE("zero ideals and bad choices are rejected") {
  RingPtr R = qxyz();
  CHECK_THROWS_AS(rees_defining_ideal({Ideal::zero(R)}), Error);
  CHECK_THROWS_AS(rees_defining_ideal({ii(R, {"x"})}, {5}), Error);
  CHECK_THROWS_AS(rees_defining_ideal({}), Error);
}

TEST_CASE("monomial variant strips the stray factor") {
  RingPtr R = make_ring(Field::rationals(), {"x", "y"});
  Ideal I = ii(R, {"x^2", "x*y"});
  ReesPresentation P = rees_defining_ideal_monomial({I});
  const RingPtr& E = P.extended_ring;
  REQUIRE(P.defining_ideal.generators().size() == 1);
  CHECK(P.defining_ideal.generators()[0] == pp("y*K1 - x*K2", E));
  CHECK(verify_rees_generators(P));

  CHECK_THROWS_AS(rees_defining_ideal_monomial({ii(R, {"x+y"})}), Error);
}

TEST_CASE("monomial variant agrees with the general construction") {
  RingPtr R = make_ring(Field::rationals(), {"x", "y"});
  std::vector<std::vector<std::string>> fixtures{
      {"x^2", "x*y"},
      {"x^3", "x*y^2", "y^3"},
  };
  for (const auto& gens : fixtures) {
    Ideal I = ii(R, gens);
    ReesPresentation cls = rees_defining_ideal_monomial({I});
    ReesPresentation gen = rees_defining_ideal({I});
    CHECK(same_ideal(cls.defining_ideal, gen.defining_ideal));
  }
  // two blocks
  Ideal A = ii(R, {"x"});
  Ideal B = ii(R, {"y"});
  ReesPresentation P = rees_defining_ideal_monomial({A, B});
  CHECK(P.defining_ideal.is_zero());
}

TEST_CASE("the defining ideal does not depend on the generator choice") {
  RingPtr R = qxyz();
  Ideal I = ii(R, {"x^4+y^2*z^2", "x*y^2*z"});
  Ideal J = ii(R, {"y^3+z^3", "x^2*y+x*z^2"});
  ReesPresentation base = rees_defining_ideal({I, J}, {0, 0});
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      ReesPresentation other = rees_defining_ideal({I, J}, {a, b});
      CHECK(same_ideal(base.defining_ideal, other.defining_ideal));
    }
  }
}

TEST_CASE("defining ideal equals the kernel of the presentation map") {
  RingPtr R = qxyz();
  std::vector<std::vector<Ideal>> fixtures{
      {ii(R, {"x^2+z^2"}), ii(R, {"x*y*z+y^3"})},
      {ii(R, {"x^4+y^2*z^2", "x*y^2*z"})},
      {ii(R, {"x^2", "x*y"}), ii(R, {"y^2", "z"})},
  };
  for (const auto& ideals : fixtures) {
    ReesPresentation P = rees_defining_ideal(ideals);
    CHECK(same_ideal(P.defining_ideal, defining_ideal_via_kernel(P)));
  }
}

TEST_CASE("generators are multihomogeneous in the block grading") {
  RingPtr R = qxyz();
  Ideal I = ii(R, {"x^4+y^2*z^2", "x*y^2*z"});
  Ideal J = ii(R, {"y^3+z^3", "x^2*y+x*z^2"});
  ReesPresentation P = rees_defining_ideal({I, J});
  for (const Polynomial& g : P.defining_ideal.generators()) {
    auto deg = multidegree(g);
    CHECK(deg.has_value());
  }
}

TEST_CASE("an injected bogus generator fails verification") {
  RingPtr R = qxyz();
  Ideal I = ii(R, {"x^4+y^2*z^2", "x*y^2*z"});
  ReesPresentation P = rees_defining_ideal({I});
  std::vector<Polynomial> gens = P.defining_ideal.generators();
  gens.push_back(Polynomial::variable(P.extended_ring, P.fiber_variable(0, 0)));
  P.defining_ideal = Ideal(P.extended_ring, std::move(gens));
  CHECK(!verify_rees_generators(P));
}

TEST_CASE("empty defining ideal verifies trivially") {
  RingPtr R = qxyz();
  ReesPresentation P = rees_defining_ideal({ii(R, {"x"})});
  CHECK(P.defining_ideal.is_zero());
  CHECK(verify_rees_generators(P));
}

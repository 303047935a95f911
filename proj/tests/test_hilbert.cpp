#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

#include "mm/hilbert.hpp"

using namespace mm;
using mmtest::ii;
using mmtest::pp;

namespace {

RingPtr bigraded_k1k2() {
  return make_ring(Field::rationals(), {"K1", "K2"}, MonomialOrder::grevlex(),
                   {{1, 0}, {0, 1}});
}

}  // namespace

TEST_CASE("free bigraded ring") {
  RingPtr R = bigraded_k1k2();
  HilbertSeries H = multigraded_hilbert_series(Ideal::zero(R));
  CHECK(H.numerator == ZPoly::constant(2, 1));
  CHECK(H.denominator_exponents == std::vector<std::uint32_t>{1, 1});
}

TEST_CASE("principal bigraded quotient") {
  RingPtr R = bigraded_k1k2();
  HilbertSeries H = multigraded_hilbert_series(ii(R, {"K1*K2"}));
  ZPoly expected = ZPoly::constant(2, 1) - ZPoly::monomial(2, {1, 1});
  CHECK(H.numerator == expected);
  CHECK(H.denominator_exponents == std::vector<std::uint32_t>{1, 1});
}

TEST_CASE("grading and homogeneity preconditions") {
  RingPtr bad = make_ring(Field::rationals(), {"x", "y"}, MonomialOrder::grevlex(),
                          {{2}, {1}});
  CHECK_THROWS_AS(multigraded_hilbert_series(Ideal::zero(bad)), Error);
  RingPtr R = make_ring(Field::rationals(), {"x", "y"});
  CHECK_THROWS_AS(multigraded_hilbert_series(ii(R, {"x^2+y^3"})), Error);
}

TEST_CASE("reduce_hilbert cancels shared factors") {
  ZPoly num = ZPoly::constant(1, 1) - ZPoly::monomial(1, {1});  // 1 - t0
  HilbertSeries H{num, {2}};
  HilbertSeries r = reduce_hilbert(H);
  CHECK(r.numerator == ZPoly::constant(1, 1));
  CHECK(r.denominator_exponents == std::vector<std::uint32_t>{1});

  HilbertSeries again = reduce_hilbert(r);
  CHECK(again.numerator == r.numerator);
  CHECK(again.denominator_exponents == r.denominator_exponents);

  ZPoly mixed = ZPoly::constant(2, 1) - ZPoly::monomial(2, {1, 1});
  HilbertSeries none{mixed, {1, 1}};
  HilbertSeries keep = reduce_hilbert(none);
  CHECK(keep.numerator == mixed);
  CHECK(keep.denominator_exponents == std::vector<std::uint32_t>{1, 1});
}

TEST_CASE("reduction preserves the rational function") {
  std::mt19937 rng(41);
  RingPtr R = make_ring(Field::rationals(), {"a", "b", "c", "d"}, MonomialOrder::grevlex(),
                        {{1, 0}, {1, 0}, {0, 1}, {0, 1}});
  for (int i = 0; i < 40; ++i) {
    Ideal I = mmtest::random_monomial_ideal(rng, R, 3, 3);
    HilbertSeries H = multigraded_hilbert_series(I);
    HilbertSeries r = reduce_hilbert(H);
    // cross-multiplied identity: numerator * prod (1-t)^removed == original
    ZPoly lhs = r.numerator;
    for (std::size_t slot = 0; slot < 2; ++slot) {
      std::uint32_t removed = H.denominator_exponents[slot] - r.denominator_exponents[slot];
      for (std::uint32_t k = 0; k < removed; ++k) {
        ZPoly::Exponents e(2, 0);
        e[slot] = 1;
        lhs = lhs * (ZPoly::constant(2, 1) - ZPoly::monomial(2, e));
      }
    }
    CHECK(lhs == H.numerator);
  }
}

TEST_CASE("binomial-basis coefficients of small series") {
  // 1/(1-t)^2: Hilbert polynomial m+1 = 1*binom(m+1,1) + 0
  HilbertSeries square{ZPoly::constant(1, 1), {2}};
  CHECK(hilbert_coefficient(square, {1}) == Rat(1));
  CHECK(hilbert_coefficient(square, {0}) == Rat(0));

  // (1+t)/(1-t): two points
  HilbertSeries two_points{ZPoly::constant(1, 1) + ZPoly::monomial(1, {1}), {1}};
  CHECK(hilbert_coefficient(two_points, {0}) == Rat(2));

  CHECK_THROWS_AS(hilbert_coefficient(square, {2}), Error);
  CHECK_THROWS_AS(hilbert_coefficient(square, {0, 0}), Error);
}

TEST_CASE("series expansion matches the brute-force count") {
  std::mt19937 rng(43);
  RingPtr R = make_ring(Field::rationals(), {"a", "b", "c", "d"}, MonomialOrder::grevlex(),
                        {{1, 0}, {0, 1}, {1, 0}, {0, 1}});
  int done = 0;
  while (done < 110) {
    Ideal I = mmtest::random_monomial_ideal(rng, R, 4, 4);
    HilbertSeries H = reduce_hilbert(multigraded_hilbert_series(I));
    for (std::uint32_t m0 = 0; m0 <= 6; ++m0) {
      for (std::uint32_t m1 = 0; m1 <= 6; ++m1) {
        Int expanded = series_coefficient(H, {m0, m1});
        std::uint64_t counted = series_coefficient_bruteforce(I, {m0, m1});
        CHECK(expanded == Int(counted));
      }
    }
    ++done;
  }
}

TEST_CASE("the binomial-basis polynomial reproduces large coefficients") {
  std::mt19937 rng(47);
  RingPtr R = make_ring(Field::rationals(), {"a", "b", "c", "d"}, MonomialOrder::grevlex(),
                        {{1, 0}, {0, 1}, {1, 0}, {0, 1}});
  auto binom = [](std::uint64_t n, std::uint32_t k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
  };
  int done = 0;
  while (done < 110) {
    Ideal I = mmtest::random_monomial_ideal(rng, R, 4, 3);
    HilbertSeries H = reduce_hilbert(multigraded_hilbert_series(I));
    if (H.denominator_exponents[0] == 0 || H.denominator_exponents[1] == 0) continue;

    // P(m) = sum_u a_u binom(m0+u0, u0) binom(m1+u1, u1)
    std::vector<std::vector<Rat>> a(H.denominator_exponents[0],
                                    std::vector<Rat>(H.denominator_exponents[1]));
    for (std::uint32_t u0 = 0; u0 < H.denominator_exponents[0]; ++u0)
      for (std::uint32_t u1 = 0; u1 < H.denominator_exponents[1]; ++u1)
        a[u0][u1] = hilbert_coefficient(H, {u0, u1});

    // all entries at least the numerator degree puts us in the stable range
    std::uint32_t start0 = H.numerator.degree_in(0);
    std::uint32_t start1 = H.numerator.degree_in(1);
    for (std::uint32_t m0 = start0; m0 <= start0 + 3; ++m0) {
      for (std::uint32_t m1 = start1; m1 <= start1 + 3; ++m1) {
        Rat value(0);
        for (std::uint32_t u0 = 0; u0 < a.size(); ++u0)
          for (std::uint32_t u1 = 0; u1 < a[u0].size(); ++u1)
            value += a[u0][u1] * Rat(binom(std::uint64_t(m0) + u0, u0) *
                                     binom(std::uint64_t(m1) + u1, u1));
        CHECK(value == Rat(series_coefficient(H, {m0, m1})));
      }
    }
    ++done;
  }
}

TEST_CASE("brute force respects the enumeration guard") {
  std::vector<std::string> names;
  std::vector<std::vector<std::uint32_t>> grading;
  for (int i = 0; i < 12; ++i) {
    names.push_back("v" + std::to_string(i));
    grading.push_back({1});
  }
  RingPtr R = make_ring(Field::rationals(), names, MonomialOrder::grevlex(), grading);
  CHECK_THROWS_AS(series_coefficient_bruteforce(Ideal::zero(R), {40}), Error);
}

TEST_CASE("bigraded counts of the principal quotient") {
  RingPtr R = bigraded_k1k2();
  Ideal I = ii(R, {"K1*K2"});
  CHECK(series_coefficient_bruteforce(I, {1, 1}) == 0);
  CHECK(series_coefficient_bruteforce(I, {2, 0}) == 1);
}

TEST_CASE("ZPoly printing is deterministic and ascending") {
  ZPoly p = ZPoly::constant(2, 1) - ZPoly::monomial(2, {1, 1}, 3) + ZPoly::monomial(2, {2, 0});
  CHECK(p.str() == "1 - 3*T0*T1 + T0^2");
}

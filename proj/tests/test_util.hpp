#pragma once

#include <random>
#include <vector>

#include "mm/ideal.hpp"
#include "mm/parser.hpp"

namespace mmtest {

using namespace mm;

inline Polynomial pp(const std::string& text, const RingPtr& ring) {
  return parse_polynomial(text, ring);
}

inline Ideal ii(const RingPtr& ring, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(pp(g, ring));
  return Ideal(ring, std::move(ps));
}

inline Monomial random_monomial(std::mt19937& rng, std::size_t arity, std::uint32_t max_exp) {
  std::uniform_int_distribution<std::uint32_t> d(0, max_exp);
  std::vector<std::uint32_t> exps(arity);
  for (auto& e : exps) e = d(rng);
  return Monomial(std::move(exps));
}

inline Polynomial random_polynomial(std::mt19937& rng, const RingPtr& ring,
                                    std::size_t max_terms = 4, std::uint32_t max_exp = 3,
                                    int coeff_span = 3) {
  std::uniform_int_distribution<std::size_t> nt(0, max_terms);
  std::uniform_int_distribution<int> c(-coeff_span, coeff_span);
  std::vector<Term> terms;
  std::size_t n = nt(rng);
  for (std::size_t i = 0; i < n; ++i) {
    terms.push_back(Term{FieldElement::of(c(rng), ring->field()),
                         random_monomial(rng, ring->arity(), max_exp)});
  }
  return Polynomial(ring, std::move(terms), true);
}

inline Ideal random_monomial_ideal(std::mt19937& rng, const RingPtr& ring,
                                   std::size_t max_gens = 4, std::uint32_t max_exp = 3) {
  std::uniform_int_distribution<std::size_t> ng(1, max_gens);
  std::vector<Polynomial> gens;
  std::size_t n = ng(rng);
  for (std::size_t i = 0; i < n; ++i) {
    Monomial m = random_monomial(rng, ring->arity(), max_exp);
    if (m.is_one()) continue;
    gens.push_back(Polynomial::from_monomial(ring, FieldElement::one(ring->field()), m));
  }
  return Ideal(ring, std::move(gens));
}

}  // namespace mmtest

#pragma once

#include <vector>

#include "mm/polynomial.hpp"

namespace mm {

/// Unique reduced Gröbner basis for (ideal, ring order): every generator is
/// monic, no generator's leading monomial divides another's, all tails are in
/// normal form. Construct via buchberger().
class GroebnerBasis {
 public:
  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero_ideal() const { return gens_.empty(); }
  bool contains_one() const;

 private:
  friend GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Polynomial>& generators);
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> gens)
      : ring_(std::move(ring)), gens_(std::move(gens)) {}
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

/// Buchberger's algorithm with Gebauer-Moeller pair elimination and the
/// normal selection strategy (smallest lcm degree first), followed by full
/// auto-reduction. Deterministic: identical inputs give bit-identical bases.
GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Polynomial>& generators);

/// Remainder of p under full division by G: no term of the result is
/// divisible by any leading monomial of G, and p - result lies in <G>.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G);

bool ideal_membership(const Polynomial& p, const GroebnerBasis& G);

/// Minimal generating set of the leading-term ideal (read off a reduced
/// basis, so no member divides another).
std::vector<Monomial> leading_term_ideal(const GroebnerBasis& G);

}  // namespace mm

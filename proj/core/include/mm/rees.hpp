#pragma once

#include "mm/ideal.hpp"

namespace mm {

/// Presentation of the multi-Rees algebra R[I_1 t_1, ..., I_s t_s]: the base
/// ring, an extended ring with one block of fiber variables per ideal, the
/// saturating element h, and the defining ideal Gamma. Gamma is
/// multihomogeneous in the block grading (block i has degree e_i), and
/// substituting the i-th ideal's generators times T_i for block i kills every
/// generator.
struct ReesPresentation {
  RingPtr base_ring;
  std::vector<Ideal> ideals;
  RingPtr extended_ring;                  // [base variables..., fiber blocks...]
  std::vector<std::size_t> block_offset;  // index of each block's first fiber variable
  std::vector<std::size_t> block_size;
  Polynomial saturating_element;          // h, in the base ring
  Ideal defining_ideal;                   // Gamma, in the extended ring

  std::size_t ideal_count() const { return ideals.size(); }
  std::size_t base_arity() const { return base_ring->arity(); }
  /// Fiber variable for generator j of ideal i, as an extended-ring index.
  std::size_t fiber_variable(std::size_t i, std::size_t j) const {
    return block_offset[i] + j;
  }
};

/// Defining ideal of the multi-Rees algebra of any ideals in one polynomial
/// ring: the 2x2 minors linking each ideal's generators to its fiber block,
/// saturated by the product of one chosen generator per ideal (defaults to
/// the first). Every valid choice yields the same ideal.
ReesPresentation rees_defining_ideal(const std::vector<Ideal>& ideals,
                                     std::vector<std::size_t> generator_choice = {});

/// Variant for monomial ideals: the same minors, saturated by the product of
/// all base-ring variables.
ReesPresentation rees_defining_ideal_monomial(const std::vector<Ideal>& ideals);

/// Soundness check: every generator of Gamma maps to zero under
/// Y_{ij} -> f_{ij} T_i.
bool verify_rees_generators(const ReesPresentation& P);

/// Per-ideal index of a minimal-degree generator (ties to the earliest);
/// a cheap choice that keeps the saturation small.
std::vector<std::size_t> min_degree_generator_choice(const std::vector<Ideal>& ideals);

}  // namespace mm

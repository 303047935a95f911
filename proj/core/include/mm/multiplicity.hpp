#pragma once

#include "mm/hilbert.hpp"
#include "mm/rees.hpp"

namespace mm {

/// Presentation of the multigraded fiber of ideals I_0..I_r (I_0 primary to
/// the homogeneous maximal ideal): the quotient of the Rees presentation by
/// the extension of I_0, together with its reduced Hilbert series. Slot i of
/// the series corresponds to ideal i.
struct FiberPresentation {
  std::vector<Ideal> ideals;
  RingPtr presentation_ring;
  Ideal presented_ideal;
  HilbertSeries series;        // reduced; arity = ideals.size()
  std::vector<std::int64_t> s; // s_i = denominator exponent - 1
  bool maximal_ideal_fast_path = false;
};

enum class FiberPath {
  Auto,     ///< substitute the base variables to zero when I_0 = (x_1..x_m)
  General,  ///< always keep the base variables with their own grading slot
};

FiberPresentation fiber_presentation(const std::vector<Ideal>& ideals,
                                     FiberPath path = FiberPath::Auto);

/// Mixed multiplicity e_a(I_0 | I_1, ..., I_r): the Hilbert-polynomial
/// coefficient of the fiber at index a, which requires |a| = dim R - 1 and
/// a_i <= s_i. With raw_coefficient the |a| check is skipped and the plain
/// binomial-basis coefficient a_u is returned (may be negative).
Int mixed_multiplicity(const FiberPresentation& fiber, const std::vector<std::uint32_t>& a,
                       bool raw_coefficient = false);
Int mixed_multiplicity(const std::vector<Ideal>& ideals, const std::vector<std::uint32_t>& a,
                       bool raw_coefficient = false);

/// Multiplicity of the multi-Rees algebra R[I_1 t_1, ..., I_r t_r]: the sum
/// of the mixed multiplicities of (m, I_1, ..., I_r) over all indices of
/// weight dim R - 1.
Int rees_algebra_multiplicity(const std::vector<Ideal>& ideals);

/// Vector-space dimension of ring/I for a zero-dimensional I, counted as the
/// number of standard monomials of the leading-term ideal.
std::uint64_t colength(const Ideal& I);

}  // namespace mm

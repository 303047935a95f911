#pragma once

#include "mm/multiplicity.hpp"

namespace mm {

/// Finite set of lattice points in N^n (convex hull implied; redundant
/// interior points are accepted). Integer input points are translated by the
/// componentwise minimum so every coordinate is nonnegative — mixed volumes
/// are translation invariant.
class LatticePolytope {
 public:
  LatticePolytope(std::size_t ambient_dimension,
                  std::vector<std::vector<std::int64_t>> points);

  std::size_t ambient_dimension() const { return dim_; }
  const std::vector<std::vector<std::uint32_t>>& points() const { return points_; }

  bool operator==(const LatticePolytope&) const = default;

 private:
  std::size_t dim_;
  std::vector<std::vector<std::uint32_t>> points_;
};

/// The homogeneous monomial ideal of a polytope in k[X1..X_{n+1}]: one
/// monomial per point (coordinates as exponents of X1..Xn), homogenized to
/// the maximal total degree with X_{n+1}.
Ideal polytope_to_ideal(const LatticePolytope& P, const Field& field);

/// Mixed volume of n lattice polytopes in R^n, as the mixed multiplicity
/// e_(0,1,...,1)(m | I_1, ..., I_n) of their monomial ideals. Hilbert series
/// of monomial quotients do not depend on the field, so GF(2) is the default
/// coefficient field.
std::uint64_t mixed_volume(const std::vector<LatticePolytope>& polytopes,
                           const Field& field = Field::prime(2));

/// Newton polytope of a Laurent support: the support points shifted so all
/// coordinates are nonnegative.
LatticePolytope newton_polytope(const std::vector<std::vector<std::int64_t>>& support);
LatticePolytope newton_polytope(const Polynomial& f);

/// Bound on the number of isolated common torus zeros of a square system:
/// the mixed volume of the Newton polytopes.
std::uint64_t bernstein_bound(const std::vector<std::vector<std::vector<std::int64_t>>>& supports);
std::uint64_t bernstein_bound(const std::vector<Polynomial>& system);

/// Pointwise sums of the two generating point sets.
LatticePolytope minkowski_sum(const LatticePolytope& P, const LatticePolytope& Q);

}  // namespace mm

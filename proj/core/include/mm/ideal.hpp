#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "mm/groebner.hpp"

namespace mm {

/// Finite generator list in a ring. Zero generators are dropped at
/// construction; the reduced Gröbner basis is computed lazily, at most once,
/// and shared between copies.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(const RingPtr& ring);
  /// (x_1, ..., x_n)
  static Ideal variable_ideal(const RingPtr& ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_monomial() const;

  const GroebnerBasis& groebner() const;
  bool contains(const Polynomial& p) const;

 private:
  struct Cache {
    std::once_flag once;
    std::optional<GroebnerBasis> gb;
  };
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;

  friend Ideal with_known_basis(RingPtr ring, std::vector<Polynomial> generators,
                                GroebnerBasis gb);
};

/// Wraps an already-computed reduced basis as an Ideal without recomputing.
Ideal with_known_basis(RingPtr ring, GroebnerBasis gb);
/// Same, but with a separate display generator list for the same ideal.
Ideal with_known_basis(RingPtr ring, std::vector<Polynomial> generators, GroebnerBasis gb);

/// Both ideals generate the same set (compared through their reduced bases).
bool same_ideal(const Ideal& a, const Ideal& b);

enum class IdealBinop { Sum, Product };

/// Sum concatenates generators; product takes all pairwise products.
Ideal ideal_combine(const Ideal& a, const Ideal& b, IdealBinop op);

/// Iterated product; the zeroth power is the unit ideal.
Ideal ideal_power(const Ideal& a, std::uint32_t e);

/// (I : h) = { g : g*h in I }, via intersection with (h) in a ring with one
/// auxiliary variable and elimination.
Ideal ideal_quotient(const Ideal& I, const Polynomial& h);

/// (I : h^infinity). The generic route adjoins w, computes one basis of
/// I + (1 - w*h) under an order eliminating w and intersects with the
/// original ring; monomial factors of h are split off and handled one
/// variable at a time.
Ideal saturation(const Ideal& I, const Polynomial& h);

/// Generators of I ∩ k[remaining variables]; the result lives in the ring on
/// the remaining variables.
Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& variables);

/// Kernel of the algebra map source -> target sending each source variable to
/// its image. Entries must be given exactly for the source variables whose
/// names are not shared with the target; shared variables map to themselves.
Ideal kernel_of_map(const RingPtr& source, const RingPtr& target,
                    const std::vector<std::optional<Polynomial>>& images);

/// Krull dimension of ring/I, computed on the leading-term ideal; the unit
/// ideal reports the sentinel -1 ("empty variety").
std::int64_t krull_dimension(const Ideal& I);

}  // namespace mm

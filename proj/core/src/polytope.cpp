#include "mm/polytope.hpp"

#include <algorithm>
#include <limits>

namespace mm {

LatticePolytope::LatticePolytope(std::size_t ambient_dimension,
                                 std::vector<std::vector<std::int64_t>> points)
    : dim_(ambient_dimension) {
  if (points.empty()) throw_precondition("a lattice polytope needs at least one point");
  std::vector<std::int64_t> shift(dim_, 0);
  for (const auto& p : points) {
    if (p.size() != dim_) throw_precondition("point dimension mismatch");
    for (std::size_t i = 0; i < dim_; ++i) shift[i] = std::min(shift[i], p[i]);
  }
  for (const auto& p : points) {
    std::vector<std::uint32_t> q(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      std::int64_t c = p[i] - shift[i];
      if (c > std::int64_t(std::numeric_limits<std::uint32_t>::max()))
        throw_resource("point coordinate overflow");
      q[i] = static_cast<std::uint32_t>(c);
    }
    points_.push_back(std::move(q));
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

namespace {

RingPtr polytope_ring(std::size_t n, const Field& field) {
  std::vector<std::string> vars;
  vars.reserve(n + 1);
  for (std::size_t i = 1; i <= n + 1; ++i) vars.push_back("X" + std::to_string(i));
  return make_ring(field, std::move(vars));
}

Ideal polytope_ideal_in(const LatticePolytope& P, const RingPtr& ring) {
  const std::size_t n = P.ambient_dimension();
  std::uint64_t max_degree = 0;
  for (const auto& p : P.points()) {
    std::uint64_t d = 0;
    for (std::uint32_t c : p) d += c;
    max_degree = std::max(max_degree, d);
  }
  std::vector<Polynomial> gens;
  gens.reserve(P.points().size());
  for (const auto& p : P.points()) {
    std::vector<std::uint32_t> exps(n + 1, 0);
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < n; ++i) {
      exps[i] = p[i];
      d += p[i];
    }
    exps[n] = static_cast<std::uint32_t>(max_degree - d);  // homogenizing variable
    gens.push_back(Polynomial::from_monomial(ring, FieldElement::one(ring->field()),
                                             Monomial(std::move(exps))));
  }
  return Ideal(ring, std::move(gens));
}

}  // namespace

Ideal polytope_to_ideal(const LatticePolytope& P, const Field& field) {
  return polytope_ideal_in(P, polytope_ring(P.ambient_dimension(), field));
}

std::uint64_t mixed_volume(const std::vector<LatticePolytope>& polytopes, const Field& field) {
  if (polytopes.empty()) throw_precondition("mixed volume needs at least one polytope");
  const std::size_t n = polytopes.size();
  for (const LatticePolytope& P : polytopes) {
    if (P.ambient_dimension() != n)
      throw_precondition("mixed volume needs exactly n polytopes in dimension n");
  }
  RingPtr ring = polytope_ring(n, field);
  std::vector<Ideal> ideals;
  ideals.reserve(n + 1);
  ideals.push_back(Ideal::variable_ideal(ring));
  for (const LatticePolytope& P : polytopes) ideals.push_back(polytope_ideal_in(P, ring));

  std::vector<std::uint32_t> index(n + 1, 1);
  index[0] = 0;
  Int e = mixed_multiplicity(fiber_presentation(ideals), index);
  return static_cast<std::uint64_t>(e.get_ui());
}

LatticePolytope newton_polytope(const std::vector<std::vector<std::int64_t>>& support) {
  if (support.empty()) throw_precondition("empty support");
  return LatticePolytope(support.front().size(), support);
}

LatticePolytope newton_polytope(const Polynomial& f) {
  if (f.is_zero()) throw_precondition("empty support");
  std::vector<std::vector<std::int64_t>> support;
  support.reserve(f.terms().size());
  for (const Term& t : f.terms()) {
    std::vector<std::int64_t> p;
    p.reserve(t.mono.arity());
    for (std::uint32_t e : t.mono.exponents()) p.push_back(e);
    support.push_back(std::move(p));
  }
  return newton_polytope(support);
}

std::uint64_t bernstein_bound(
    const std::vector<std::vector<std::vector<std::int64_t>>>& supports) {
  if (supports.empty()) throw_precondition("empty system");
  std::vector<LatticePolytope> polys;
  polys.reserve(supports.size());
  for (const auto& s : supports) polys.push_back(newton_polytope(s));
  const std::size_t n = supports.size();
  for (const LatticePolytope& P : polys) {
    if (P.ambient_dimension() != n)
      throw_precondition("system is not square: " + std::to_string(n) + " polynomials in " +
                         std::to_string(P.ambient_dimension()) + " variables");
  }
  return mixed_volume(polys);
}

std::uint64_t bernstein_bound(const std::vector<Polynomial>& system) {
  if (system.empty()) throw_precondition("empty system");
  std::vector<LatticePolytope> polys;
  polys.reserve(system.size());
  for (const Polynomial& f : system) polys.push_back(newton_polytope(f));
  const std::size_t n = system.size();
  for (const LatticePolytope& P : polys) {
    if (P.ambient_dimension() != n)
      throw_precondition("system is not square: " + std::to_string(n) + " polynomials in " +
                         std::to_string(P.ambient_dimension()) + " variables");
  }
  return mixed_volume(polys);
}

LatticePolytope minkowski_sum(const LatticePolytope& P, const LatticePolytope& Q) {
  if (P.ambient_dimension() != Q.ambient_dimension())
    throw_precondition("Minkowski sum needs equal ambient dimensions");
  std::vector<std::vector<std::int64_t>> sums;
  sums.reserve(P.points().size() * Q.points().size());
  for (const auto& a : P.points()) {
    for (const auto& b : Q.points()) {
      std::vector<std::int64_t> s(P.ambient_dimension());
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = std::int64_t(a[i]) + b[i];
      sums.push_back(std::move(s));
    }
  }
  return LatticePolytope(P.ambient_dimension(), std::move(sums));
}

}  // namespace mm

#include "mm/multiplicity.hpp"

#include <algorithm>
#include <functional>

namespace mm {

namespace {

bool is_full_variable_ideal(const Ideal& I) {
  const RingPtr& R = I.ring();
  if (I.generators().size() != R->arity()) return false;
  std::vector<bool> seen(R->arity(), false);
  for (const Polynomial& g : I.generators()) {
    if (!g.is_monomial()) return false;
    const Monomial& m = g.leading_monomial();
    if (m.degree() != 1) return false;
    for (std::size_t v = 0; v < R->arity(); ++v) {
      if (m.exponent(v) == 1) {
        if (seen[v]) return false;
        seen[v] = true;
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::vector<std::int64_t> exponents_minus_one(const std::vector<std::uint32_t>& d) {
  std::vector<std::int64_t> s(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) s[i] = std::int64_t(d[i]) - 1;
  return s;
}

}  // namespace

FiberPresentation fiber_presentation(const std::vector<Ideal>& ideals, FiberPath path) {
  if (ideals.empty()) throw_precondition("need at least one ideal");
  const RingPtr& R = ideals.front().ring();
  for (const Ideal& I : ideals) {
    if (!same_ring(I.ring(), R)) throw_precondition("ideals live in different rings");
    if (I.is_zero()) throw_precondition("zero ideal in the fiber input");
  }
  if (krull_dimension(ideals.front()) != 0)
    throw_precondition("the first ideal must be primary to the maximal homogeneous ideal");
  const std::int64_t dim_r = static_cast<std::int64_t>(R->arity());
  for (std::size_t i = 1; i < ideals.size(); ++i) {
    if (krull_dimension(ideals[i]) >= dim_r)
      throw_precondition("ideal " + std::to_string(i) + " must have positive height");
  }

  // the monomial route and the general route agree on monomial inputs; the
  // former saturates variable by variable and is much cheaper
  bool all_monomial = std::all_of(ideals.begin(), ideals.end(),
                                  [](const Ideal& I) { return I.is_monomial(); });
  ReesPresentation rees = all_monomial
                              ? rees_defining_ideal_monomial(ideals)
                              : rees_defining_ideal(ideals, min_degree_generator_choice(ideals));

  const std::size_t r1 = ideals.size();  // r + 1 ideals, r1 + 1 slots when X is kept
  bool fast = path == FiberPath::Auto && is_full_variable_ideal(ideals.front());

  if (fast) {
    // fiber over k[K] alone: substitute the base variables to zero
    std::vector<std::string> vars(rees.extended_ring->variables().begin() + R->arity(),
                                  rees.extended_ring->variables().end());
    std::vector<std::vector<std::uint32_t>> grading;
    for (std::size_t i = 0; i < r1; ++i) {
      for (std::size_t j = 0; j < rees.block_size[i]; ++j) {
        std::vector<std::uint32_t> deg(r1, 0);
        deg[i] = 1;
        grading.push_back(std::move(deg));
      }
    }
    RingPtr fiber_ring = make_ring(R->field(), std::move(vars), MonomialOrder::grevlex(),
                                   std::move(grading));
    std::vector<std::optional<Polynomial>> images(rees.extended_ring->arity());
    for (std::size_t v = 0; v < R->arity(); ++v) images[v] = Polynomial::zero(fiber_ring);
    for (std::size_t v = R->arity(); v < rees.extended_ring->arity(); ++v)
      images[v] = Polynomial::variable(fiber_ring, v - R->arity());

    std::vector<Polynomial> gens;
    for (const Polynomial& g : rees.defining_ideal.generators()) {
      Polynomial image = substitute(g, fiber_ring, images);
      if (!image.is_zero()) gens.push_back(std::move(image));
    }
    Ideal presented(fiber_ring, std::move(gens));
    HilbertSeries series = reduce_hilbert(multigraded_hilbert_series(presented));
    auto s = exponents_minus_one(series.denominator_exponents);
    return FiberPresentation{ideals, fiber_ring, std::move(presented), std::move(series),
                             std::move(s), true};
  }

  // general route: base variables keep slot 0, ideal i grades slot i+1
  std::vector<std::vector<std::uint32_t>> grading;
  for (std::size_t v = 0; v < R->arity(); ++v) {
    std::vector<std::uint32_t> deg(r1 + 1, 0);
    deg[0] = 1;
    grading.push_back(std::move(deg));
  }
  for (std::size_t i = 0; i < r1; ++i) {
    for (std::size_t j = 0; j < rees.block_size[i]; ++j) {
      std::vector<std::uint32_t> deg(r1 + 1, 0);
      deg[i + 1] = 1;
      grading.push_back(std::move(deg));
    }
  }
  RingPtr graded = regrade(rees.extended_ring, std::move(grading));
  std::vector<Polynomial> gens;
  for (const Polynomial& g : rees.defining_ideal.generators())
    gens.push_back(transport(g, graded));
  for (const Polynomial& g : ideals.front().generators())
    gens.push_back(transport(g, graded));
  Ideal presented(graded, std::move(gens));

  HilbertSeries reduced = reduce_hilbert(multigraded_hilbert_series(presented));
  if (reduced.denominator_exponents[0] != 0)
    throw_internal("a power of (1 - t_0) survived in the reduced fiber series");
  HilbertSeries collapsed{
      reduced.numerator.substitute_one_and_drop(0),
      std::vector<std::uint32_t>(reduced.denominator_exponents.begin() + 1,
                                 reduced.denominator_exponents.end())};
  auto s = exponents_minus_one(collapsed.denominator_exponents);
  return FiberPresentation{ideals, graded, std::move(presented), std::move(collapsed),
                           std::move(s), false};
}

Int mixed_multiplicity(const FiberPresentation& fiber, const std::vector<std::uint32_t>& a,
                       bool raw_coefficient) {
  if (a.size() != fiber.ideals.size())
    throw_precondition("mixed multiplicity index needs one entry per ideal");
  const std::int64_t d = static_cast<std::int64_t>(fiber.ideals.front().ring()->arity());
  if (!raw_coefficient) {
    std::int64_t weight = 0;
    for (std::uint32_t ai : a) weight += ai;
    if (weight != d - 1)
      throw_precondition("mixed multiplicity index must have weight dim R - 1 = " +
                         std::to_string(d - 1));
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (static_cast<std::int64_t>(a[i]) > fiber.s[i])
      throw_precondition("coefficient index out of range");
  }
  Rat value = hilbert_coefficient(fiber.series, a);
  if (value.get_den() != 1)
    throw_internal("Hilbert coefficient is not an integer");
  if (!raw_coefficient && value < 0)
    throw_internal("negative mixed multiplicity");
  return value.get_num();
}

Int mixed_multiplicity(const std::vector<Ideal>& ideals, const std::vector<std::uint32_t>& a,
                       bool raw_coefficient) {
  return mixed_multiplicity(fiber_presentation(ideals), a, raw_coefficient);
}

Int rees_algebra_multiplicity(const std::vector<Ideal>& ideals) {
  if (ideals.empty()) throw_precondition("need at least one ideal");
  const RingPtr& R = ideals.front().ring();
  std::vector<Ideal> with_m;
  with_m.push_back(Ideal::variable_ideal(R));
  with_m.insert(with_m.end(), ideals.begin(), ideals.end());
  FiberPresentation fiber = fiber_presentation(with_m);

  const std::size_t slots = with_m.size();
  const std::uint32_t weight = static_cast<std::uint32_t>(R->arity() - 1);
  Int total = 0;
  std::vector<std::uint32_t> a(slots, 0);
  // walk all weak compositions of `weight` into `slots` parts; indices beyond
  // the polynomial's degree box contribute nothing
  std::function<void(std::size_t, std::uint32_t)> walk = [&](std::size_t i, std::uint32_t left) {
    if (i + 1 == slots) {
      a[i] = left;
      bool in_range = true;
      for (std::size_t j = 0; j < slots; ++j)
        if (static_cast<std::int64_t>(a[j]) > fiber.s[j]) in_range = false;
      if (in_range) total += mixed_multiplicity(fiber, a);
      a[i] = 0;
      return;
    }
    for (std::uint32_t take = 0; take <= left; ++take) {
      a[i] = take;
      walk(i + 1, left - take);
    }
    a[i] = 0;
  };
  walk(0, weight);
  return total;
}

std::uint64_t colength(const Ideal& I) {
  std::int64_t dim = krull_dimension(I);
  if (dim > 0) throw_precondition("colength of a positive-dimensional ideal");
  if (dim == -1) return 0;  // unit ideal: the quotient is the zero ring

  std::vector<Monomial> lt = leading_term_ideal(I.groebner());
  const std::size_t n = I.ring()->arity();

  // box bounds from the pure powers that a zero-dimensional ideal must contain
  std::vector<std::uint32_t> bound(n, 0);
  for (const Monomial& m : lt) {
    std::size_t support = 0, var = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (m.exponent(v) != 0) {
        ++support;
        var = v;
      }
    }
    if (support == 1) {
      std::uint32_t e = m.exponent(var);
      if (bound[var] == 0 || e < bound[var]) bound[var] = e;
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (bound[v] == 0) throw_internal("zero-dimensional ideal lacks a pure power");

  double estimate = 1;
  for (std::uint32_t b : bound) estimate *= b;
  if (estimate > 1e7) throw_resource("enumeration bound exceeded");

  std::uint64_t count = 0;
  std::vector<std::uint32_t> exps(n, 0);
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    if (v == n) {
      Monomial candidate{std::vector<std::uint32_t>(exps)};
      for (const Monomial& g : lt)
        if (g.divides(candidate)) return;
      ++count;
      return;
    }
    for (std::uint32_t e = 0; e < bound[v]; ++e) {
      exps[v] = e;
      walk(v + 1);
    }
    exps[v] = 0;
  };
  walk(0);
  return count;
}

}  // namespace mm

#include "mm/milnor.hpp"

namespace mm {

Ideal jacobian_ideal(const Polynomial& f) {
  if (f.is_constant()) throw_precondition("constant input has no Jacobian ideal");
  const RingPtr& R = f.ring();
  std::vector<Polynomial> partials;
  for (std::size_t v = 0; v < R->arity(); ++v) {
    Polynomial d = derivative(f, v);
    if (!d.is_zero()) partials.push_back(std::move(d));
  }
  if (partials.empty())
    throw_precondition("every partial derivative vanishes (characteristic divides all exponents)");
  return Ideal(R, std::move(partials));
}

bool derivative_drops_terms(const Polynomial& f) {
  std::uint32_t p = f.ring()->field().characteristic;
  if (p == 0) return false;
  for (const Term& t : f.terms())
    for (std::size_t v = 0; v < f.ring()->arity(); ++v)
      if (t.mono.exponent(v) != 0 && t.mono.exponent(v) % p == 0) return true;
  return false;
}

MilnorProfile sectional_milnor_numbers(const Polynomial& f) {
  const RingPtr& R = f.ring();
  const std::size_t n = R->arity();
  Ideal J = jacobian_ideal(f);
  std::vector<Ideal> pair{Ideal::variable_ideal(R), std::move(J)};
  FiberPresentation fiber = fiber_presentation(pair);

  MilnorProfile profile{f, n, {}};
  profile.e.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint32_t> u{static_cast<std::uint32_t>(n - 1 - i),
                                 static_cast<std::uint32_t>(i)};
    profile.e.push_back(mixed_multiplicity(fiber, u));
  }
  return profile;
}

std::uint64_t milnor_number(const Polynomial& f) {
  Ideal J = jacobian_ideal(f);
  if (krull_dimension(J) > 0)
    throw_precondition("positive-dimensional critical locus");
  return colength(J);
}

EulerCharacteristic euler_characteristic_complement(const Polynomial& h) {
  if (!is_homogeneous_total_degree(h) || h.is_zero())
    throw_precondition("inhomogeneous input");
  MilnorProfile profile = sectional_milnor_numbers(h);
  EulerCharacteristic chi;
  chi.terms = profile.e;
  chi.terms.push_back(Int(static_cast<long>(milnor_number(h))));
  chi.chi = 0;
  for (std::size_t i = 0; i < chi.terms.size(); ++i) {
    if (i % 2 == 0)
      chi.chi += chi.terms[i];
    else
      chi.chi -= chi.terms[i];
  }
  return chi;
}

}  // namespace mm

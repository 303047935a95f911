#pragma once

#include "mm/multiplicity.hpp"

namespace mm {

/// Sectional Milnor numbers of a hypersurface singularity, read off the
/// bigraded fiber of (m, J(f)): e_i = e_i(m | J(f)) for i = 0..n-1. e_0 is
/// always 1 in a polynomial ring.
struct MilnorProfile {
  Polynomial f;
  std::size_t ring_dimension;
  std::vector<Int> e;
};

/// Ideal of all first partial derivatives; zero partials are dropped.
Ideal jacobian_ideal(const Polynomial& f);

/// True when the field characteristic divides an occurring exponent, so some
/// derivative terms vanish (worth a warning in characteristic p).
bool derivative_drops_terms(const Polynomial& f);

MilnorProfile sectional_milnor_numbers(const Polynomial& f);

/// Colength of the Jacobian ideal. This counts all critical points of f, not
/// only the one at the origin, so it matches the local Milnor number exactly
/// when the origin is the only critical point.
std::uint64_t milnor_number(const Polynomial& f);

/// chi = sum_{i=0}^{n} (-1)^i e_i(m | J(h)) with e_n the Jacobian colength;
/// the terms carry their signs so either sign convention can be recovered.
struct EulerCharacteristic {
  std::vector<Int> terms;  // e_0 .. e_n
  Int chi;
};

EulerCharacteristic euler_characteristic_complement(const Polynomial& h);

}  // namespace mm

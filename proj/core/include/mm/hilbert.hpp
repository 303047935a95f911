#pragma once

#include <map>
#include <string>
#include <vector>

#include "mm/ideal.hpp"

namespace mm {

/// Integer polynomial in slot variables t_0..t_{k-1} (numerators of Hilbert
/// series and their derivatives). Exponent vectors map to mpz coefficients.
class ZPoly {
 public:
  using Exponents = std::vector<std::uint32_t>;

  explicit ZPoly(std::size_t arity) : arity_(arity) {}
  static ZPoly constant(std::size_t arity, Int c);
  static ZPoly monomial(std::size_t arity, Exponents e, Int c = 1);

  std::size_t arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Int>& terms() const { return terms_; }
  Int coefficient(const Exponents& e) const;

  void add_term(const Exponents& e, const Int& c);
  ZPoly operator+(const ZPoly& o) const;
  ZPoly operator-(const ZPoly& o) const;
  ZPoly operator*(const ZPoly& o) const;
  /// Multiplies by the monomial t^shift.
  ZPoly shifted(const Exponents& shift) const;

  ZPoly derivative(std::size_t slot) const;
  Int evaluate_all_ones() const;
  /// Substitutes t_slot = 1 and removes that slot (arity drops by one).
  ZPoly substitute_one_and_drop(std::size_t slot) const;
  /// Exact quotient by (1 - t_slot), or nullopt when not divisible.
  std::optional<ZPoly> divide_one_minus(std::size_t slot) const;

  std::uint32_t degree_in(std::size_t slot) const;
  bool operator==(const ZPoly& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }

  /// Deterministic rendering, terms by ascending (total degree, exponents).
  std::string str(const std::string& var_prefix = "T") const;

 private:
  std::size_t arity_;
  std::map<Exponents, Int> terms_;
};

/// Multigraded Hilbert series: numerator over prod_i (1 - t_i)^{d_i}.
struct HilbertSeries {
  ZPoly numerator;
  std::vector<std::uint32_t> denominator_exponents;

  std::size_t arity() const { return denominator_exponents.size(); }
};

/// Hilbert series of ring/I for a ring whose grading vectors are all standard
/// unit vectors; d_i counts the variables of degree e_i. Computed on the
/// leading-term ideal by pivot recursion.
HilbertSeries multigraded_hilbert_series(const Ideal& I);

/// Divides the numerator by each (1 - t_i) while it stays divisible and
/// d_i > 0; the value of the rational function is unchanged.
HilbertSeries reduce_hilbert(HilbertSeries H);

/// Coefficient a_u of the Hilbert polynomial written in the binomial basis
/// prod_i binom(m_i + u_i, u_i), for u_i <= s_i = d_i - 1:
///   a_u = (-1)^{|s-u|} / prod (s_i - u_i)! * d^{|s-u|}N/dt^{s-u} at t = 1.
Rat hilbert_coefficient(const HilbertSeries& H, const std::vector<std::uint32_t>& u);

/// Coefficient of t^m in the power-series expansion of H.
Int series_coefficient(const HilbertSeries& H, const std::vector<std::uint32_t>& m);

/// Independent oracle: counts the standard monomials of multidegree m by
/// direct enumeration (guarded at 10^7 candidates).
std::uint64_t series_coefficient_bruteforce(const Ideal& I, const std::vector<std::uint32_t>& m);

/// Slot of each variable when every grading vector is a unit vector; errors
/// otherwise.
std::vector<std::size_t> unit_grading_slots(const GradedRing& ring);

}  // namespace mm

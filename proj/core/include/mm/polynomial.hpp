#pragma once

#include <optional>
#include <vector>

#include "mm/ring.hpp"

namespace mm {

struct Term {
  FieldElement coeff;
  Monomial mono;
  bool operator==(const Term&) const = default;
};

/// Sparse polynomial: terms strictly descending in the ring's monomial order,
/// no zero coefficients; the zero polynomial has an empty term list.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, std::vector<Term> terms, bool normalize = true);

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(const RingPtr& ring, FieldElement c);
  static Polynomial constant(const RingPtr& ring, std::int64_t c);
  static Polynomial variable(const RingPtr& ring, std::size_t index);
  static Polynomial from_monomial(const RingPtr& ring, FieldElement c, Monomial m);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const FieldElement& leading_coefficient() const { return leading_term().coeff; }
  std::uint64_t total_degree() const;  // 0 for the zero polynomial

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial multiply_term(const FieldElement& c, const Monomial& m) const;
  Polynomial multiply_scalar(const FieldElement& c) const;
  Polynomial pow(std::uint32_t e) const;
  Polynomial monic() const;

  bool operator==(const Polynomial& o) const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
  void normalize();
};

void require_same_ring(const Polynomial& a, const Polynomial& b);

/// Applies the ring homomorphism sending each variable to its image. Every
/// variable occurring in p must have an image in the target ring.
Polynomial substitute(const Polynomial& p, const RingPtr& target,
                      const std::vector<std::optional<Polynomial>>& images);

/// Common grading-weighted degree of all terms, or nullopt when the terms
/// disagree (inhomogeneous). The zero polynomial is rejected.
std::optional<std::vector<std::uint64_t>> multidegree(const Polynomial& p);

bool is_homogeneous_total_degree(const Polynomial& p);

Polynomial derivative(const Polynomial& p, std::size_t var);

/// Rewrites p in `target`, matching variables by name. Fails if a variable
/// occurring in p is missing from the target or the fields differ.
Polynomial transport(const Polynomial& p, const RingPtr& target);

}  // namespace mm

#pragma once

#include <cstdint>
#include <vector>

#include "mm/error.hpp"

namespace mm {

/// Exponent vector of fixed arity with a cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exps);

  static Monomial one(std::size_t arity);
  static Monomial variable(std::size_t arity, std::size_t index, std::uint32_t e = 1);

  std::size_t arity() const { return exps_.size(); }
  std::uint32_t exponent(std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }
  std::uint64_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& m) const;
  bool coprime(const Monomial& m) const;

  Monomial operator*(const Monomial& m) const;
  /// Quotient *this / m; the caller must ensure m divides *this.
  Monomial divide_exact(const Monomial& m) const;
  Monomial pow(std::uint32_t e) const;

  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

 private:
  std::vector<std::uint32_t> exps_;
  std::uint64_t degree_ = 0;
};

}  // namespace mm

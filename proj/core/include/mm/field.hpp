#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "mm/error.hpp"

namespace mm {

using Int = mpz_class;
using Rat = mpq_class;

/// Coefficient field descriptor: the rationals (characteristic 0) or a prime
/// field GF(p) with p < 2^31 so products fit in a 64-bit word.
struct Field {
  std::uint32_t characteristic = 0;

  static Field rationals() { return Field{0}; }
  static Field prime(std::uint32_t p);

  bool is_rationals() const { return characteristic == 0; }
  bool operator==(const Field&) const = default;
  std::string str() const;
};

/// One coefficient: a reduced arbitrary-precision rational or a residue in
/// [0, p). Arithmetic between elements of different fields is rejected.
class FieldElement {
 public:
  FieldElement() : value_(Rat(0)) {}

  static FieldElement rational(Rat v);
  static FieldElement residue(std::int64_t v, std::uint32_t p);
  static FieldElement zero(const Field& f);
  static FieldElement one(const Field& f);
  static FieldElement of(const Int& n, const Field& f);
  static FieldElement of(std::int64_t n, const Field& f);
  static FieldElement of_fraction(const Int& num, const Int& den, const Field& f);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return std::holds_alternative<Rat>(value_); }
  const Rat& rat() const;
  std::uint32_t residue_value() const;

  /// True when the canonical display form starts with a minus sign.
  bool is_display_negative() const;

  FieldElement operator-() const;
  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement inverse() const;

  bool operator==(const FieldElement& o) const;

  /// "a", "a/b", or the residue as a decimal in [0, p).
  std::string str() const;

 private:
  struct Residue {
    std::uint32_t v = 0;
    std::uint32_t p = 0;
    bool operator==(const Residue&) const = default;
  };
  explicit FieldElement(Rat r) : value_(std::move(r)) {}
  explicit FieldElement(Residue r) : value_(r) {}

  std::variant<Rat, Residue> value_;
};

}  // namespace mm

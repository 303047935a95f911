#include "mm/field.hpp"

namespace mm {

namespace {

bool is_prime_u32(std::uint32_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t mod_reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw_precondition("division by zero in GF(" + std::to_string(p) + ")");
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw_internal("non-invertible residue in prime field");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31)) throw_precondition("prime field modulus must be < 2^31");
  if (!is_prime_u32(p)) throw_precondition("GF modulus " + std::to_string(p) + " is not prime");
  return Field{p};
}

std::string Field::str() const {
  return is_rationals() ? "QQ" : "GF(" + std::to_string(characteristic) + ")";
}

FieldElement FieldElement::rational(Rat v) {
  v.canonicalize();
  return FieldElement(std::move(v));
}

FieldElement FieldElement::residue(std::int64_t v, std::uint32_t p) {
  return FieldElement(Residue{mod_reduce(v, p), p});
}

FieldElement FieldElement::zero(const Field& f) { return of(0, f); }

FieldElement FieldElement::one(const Field& f) { return of(1, f); }

FieldElement FieldElement::of(std::int64_t n, const Field& f) {
  if (f.is_rationals()) return FieldElement(Rat(Int(n)));
  return residue(n, f.characteristic);
}

FieldElement FieldElement::of(const Int& n, const Field& f) {
  if (f.is_rationals()) return FieldElement(Rat(n));
  Int r = n % Int(f.characteristic);
  if (r < 0) r += Int(f.characteristic);
  return FieldElement(Residue{static_cast<std::uint32_t>(r.get_ui()), f.characteristic});
}

FieldElement FieldElement::of_fraction(const Int& num, const Int& den, const Field& f) {
  if (den == 0) throw_precondition("zero denominator in coefficient literal");
  if (f.is_rationals()) {
    Rat v(num, den);
    v.canonicalize();
    return FieldElement(std::move(v));
  }
  return of(num, f) * of(den, f).inverse();
}

Field FieldElement::field() const {
  if (is_rational()) return Field::rationals();
  return Field{std::get<Residue>(value_).p};
}

bool FieldElement::is_zero() const {
  if (is_rational()) return std::get<Rat>(value_) == 0;
  return std::get<Residue>(value_).v == 0;
}

bool FieldElement::is_one() const {
  if (is_rational()) return std::get<Rat>(value_) == 1;
  return std::get<Residue>(value_).v == 1;
}

const Rat& FieldElement::rat() const {
  if (!is_rational()) throw_internal("residue element has no rational value");
  return std::get<Rat>(value_);
}

std::uint32_t FieldElement::residue_value() const {
  if (is_rational()) throw_internal("rational element has no residue value");
  return std::get<Residue>(value_).v;
}

bool FieldElement::is_display_negative() const {
  return is_rational() && sgn(std::get<Rat>(value_)) < 0;
}

namespace {
[[noreturn]] void field_mismatch() { throw_precondition("coefficient field mismatch"); }
}  // namespace

FieldElement FieldElement::operator-() const {
  if (is_rational()) return FieldElement(Rat(-std::get<Rat>(value_)));
  const auto& r = std::get<Residue>(value_);
  return FieldElement(Residue{r.v == 0 ? 0 : r.p - r.v, r.p});
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  FieldElement c(*this);
  c += o;
  return c;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  FieldElement c(*this);
  c -= o;
  return c;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  FieldElement c(*this);
  c *= o;
  return c;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  if (is_rational() != o.is_rational()) field_mismatch();
  if (is_rational()) {
    std::get<Rat>(value_) += std::get<Rat>(o.value_);
  } else {
    auto& a = std::get<Residue>(value_);
    const auto& b = std::get<Residue>(o.value_);
    if (a.p != b.p) field_mismatch();
    std::uint64_t s = std::uint64_t(a.v) + b.v;
    if (s >= a.p) s -= a.p;
    a.v = static_cast<std::uint32_t>(s);
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  return *this += -o;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  if (is_rational() != o.is_rational()) field_mismatch();
  if (is_rational()) {
    std::get<Rat>(value_) *= std::get<Rat>(o.value_);
  } else {
    auto& a = std::get<Residue>(value_);
    const auto& b = std::get<Residue>(o.value_);
    if (a.p != b.p) field_mismatch();
    a.v = static_cast<std::uint32_t>((std::uint64_t(a.v) * b.v) % a.p);
  }
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_rational()) {
    const Rat& v = std::get<Rat>(value_);
    if (v == 0) throw_precondition("division by zero");
    return FieldElement(Rat(1 / v));
  }
  const auto& r = std::get<Residue>(value_);
  return FieldElement(Residue{mod_inverse(r.v, r.p), r.p});
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  return *this * o.inverse();
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (is_rational() != o.is_rational()) return false;
  if (is_rational()) return std::get<Rat>(value_) == std::get<Rat>(o.value_);
  return std::get<Residue>(value_) == std::get<Residue>(o.value_);
}

std::string FieldElement::str() const {
  if (!is_rational()) return std::to_string(std::get<Residue>(value_).v);
  return std::get<Rat>(value_).get_str();
}

}  // namespace mm

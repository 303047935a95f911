#include "mm/monomial.hpp"

#include <limits>

namespace mm {

namespace {
constexpr std::uint64_t kMaxExp = std::numeric_limits<std::uint32_t>::max();
}

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  for (std::uint32_t e : exps_) degree_ += e;
}

Monomial Monomial::one(std::size_t arity) {
  return Monomial(std::vector<std::uint32_t>(arity, 0));
}

Monomial Monomial::variable(std::size_t arity, std::size_t index, std::uint32_t e) {
  std::vector<std::uint32_t> v(arity, 0);
  v[index] = e;
  return Monomial(std::move(v));
}

bool Monomial::divides(const Monomial& m) const {
  if (degree_ > m.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > m.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& m) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && m.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
  Monomial r;
  r.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    std::uint64_t s = std::uint64_t(exps_[i]) + m.exps_[i];
    if (s > kMaxExp) throw_resource("exponent overflow in monomial product");
    r.exps_[i] = static_cast<std::uint32_t>(s);
  }
  r.degree_ = degree_ + m.degree_;
  return r;
}

Monomial Monomial::divide_exact(const Monomial& m) const {
  Monomial r;
  r.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] - m.exps_[i];
  r.degree_ = degree_ - m.degree_;
  return r;
}

Monomial Monomial::pow(std::uint32_t e) const {
  Monomial r;
  r.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    std::uint64_t s = std::uint64_t(exps_[i]) * e;
    if (s > kMaxExp) throw_resource("exponent overflow in monomial power");
    r.exps_[i] = static_cast<std::uint32_t>(s);
  }
  r.degree_ = degree_ * e;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.exps_.resize(a.exps_.size());
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.exps_.resize(a.exps_.size());
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

}  // namespace mm

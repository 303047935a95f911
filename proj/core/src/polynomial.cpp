#include "mm/polynomial.hpp"

#include <algorithm>
#include <map>

namespace mm {

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring(), b.ring())) throw_precondition("polynomials live in different rings");
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms, bool do_normalize)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  for (const Term& t : terms_) {
    if (t.mono.arity() != ring_->arity())
      throw_precondition("monomial arity does not match the ring");
    if (!(t.coeff.field() == ring_->field()))
      throw_precondition("coefficient field does not match the ring");
  }
  if (do_normalize) normalize();
}

void Polynomial::normalize() {
  const MonomialOrder& ord = ring_->order();
  std::stable_sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
    return ord.compare(a.mono, b.mono) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (Term& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
      if (out.back().coeff.is_zero()) out.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  terms_ = std::move(out);
}

Polynomial Polynomial::constant(const RingPtr& ring, FieldElement c) {
  if (c.is_zero()) return zero(ring);
  return Polynomial(ring, {Term{std::move(c), Monomial::one(ring->arity())}}, false);
}

Polynomial Polynomial::constant(const RingPtr& ring, std::int64_t c) {
  return constant(ring, FieldElement::of(c, ring->field()));
}

Polynomial Polynomial::variable(const RingPtr& ring, std::size_t index) {
  if (index >= ring->arity()) throw_precondition("variable index out of range");
  return Polynomial(ring, {Term{FieldElement::one(ring->field()),
                                Monomial::variable(ring->arity(), index)}},
                    false);
}

Polynomial Polynomial::from_monomial(const RingPtr& ring, FieldElement c, Monomial m) {
  if (c.is_zero()) return zero(ring);
  return Polynomial(ring, {Term{std::move(c), std::move(m)}}, false);
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw_precondition("the zero polynomial has no leading term");
  return terms_.front();
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back(Term{-t.coeff, t.mono});
  return r;
}

namespace {

Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
  require_same_ring(a, b);
  const MonomialOrder& ord = a.ring()->order();
  std::vector<Term> out;
  out.reserve(a.terms().size() + b.terms().size());
  auto ia = a.terms().begin(), ea = a.terms().end();
  auto ib = b.terms().begin(), eb = b.terms().end();
  while (ia != ea && ib != eb) {
    int c = ord.compare(ia->mono, ib->mono);
    if (c > 0) {
      out.push_back(*ia++);
    } else if (c < 0) {
      out.push_back(subtract ? Term{-ib->coeff, ib->mono} : *ib);
      ++ib;
    } else {
      FieldElement s = subtract ? ia->coeff - ib->coeff : ia->coeff + ib->coeff;
      if (!s.is_zero()) out.push_back(Term{std::move(s), ia->mono});
      ++ia;
      ++ib;
    }
  }
  for (; ia != ea; ++ia) out.push_back(*ia);
  for (; ib != eb; ++ib) out.push_back(subtract ? Term{-ib->coeff, ib->mono} : *ib);
  return Polynomial(a.ring(), std::move(out), false);
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const { return merge(*this, o, false); }

Polynomial Polynomial::operator-(const Polynomial& o) const { return merge(*this, o, true); }

Polynomial Polynomial::multiply_term(const FieldElement& c, const Monomial& m) const {
  if (c.is_zero()) return zero(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    FieldElement p = t.coeff * c;
    if (!p.is_zero()) r.terms_.push_back(Term{std::move(p), t.mono * m});
  }
  return r;
}

Polynomial Polynomial::multiply_scalar(const FieldElement& c) const {
  return multiply_term(c, Monomial::one(ring_->arity()));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(*this, o);
  if (is_zero() || o.is_zero()) return zero(ring_);
  if (o.terms_.size() == 1) return multiply_term(o.terms_[0].coeff, o.terms_[0].mono);
  if (terms_.size() == 1) return o.multiply_term(terms_[0].coeff, terms_[0].mono);

  const MonomialOrder& ord = ring_->order();
  auto less = [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) > 0; };
  std::map<Monomial, FieldElement, decltype(less)> acc(less);
  for (const Term& ta : terms_) {
    for (const Term& tb : o.terms_) {
      Monomial m = ta.mono * tb.mono;
      FieldElement c = ta.coeff * tb.coeff;
      auto it = acc.find(m);
      if (it == acc.end()) {
        acc.emplace(std::move(m), std::move(c));
      } else {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) out.push_back(Term{std::move(c), m});
  return Polynomial(ring_, std::move(out), false);
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial r = constant(ring_, 1);
  for (std::uint32_t i = 0; i < e; ++i) r = r * *this;
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  if (leading_coefficient().is_one()) return *this;
  return multiply_scalar(leading_coefficient().inverse());
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) return false;
  return terms_ == o.terms_;
}

Polynomial substitute(const Polynomial& p, const RingPtr& target,
                      const std::vector<std::optional<Polynomial>>& images) {
  if (images.size() != p.ring()->arity())
    throw_precondition("substitution needs one (optional) image per variable");
  if (!(p.ring()->field() == target->field()))
    throw_precondition("substitution cannot change the coefficient field");
  // power cache per variable
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t v, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) {
      if (!images[v])
        throw_precondition("no image for variable '" + p.ring()->variable(v) + "'");
      if (!same_ring(images[v]->ring(), target))
        throw_precondition("substitution image lives in the wrong ring");
      cache.push_back(Polynomial::constant(target, 1));
    }
    while (cache.size() <= e) cache.push_back(cache.back() * *images[v]);
    return cache[e];
  };
  Polynomial out = Polynomial::zero(target);
  for (const Term& t : p.terms()) {
    Polynomial prod = Polynomial::constant(target, FieldElement(t.coeff));
    for (std::size_t v = 0; v < images.size(); ++v) {
      std::uint32_t e = t.mono.exponent(v);
      if (e != 0) prod = prod * power(v, e);
    }
    out = out + prod;
  }
  return out;
}

std::optional<std::vector<std::uint64_t>> multidegree(const Polynomial& p) {
  if (p.is_zero()) throw_precondition("the zero polynomial has no multidegree");
  const GradedRing& R = *p.ring();
  std::vector<std::uint64_t> d = R.weighted_degree(p.terms().front().mono);
  for (std::size_t i = 1; i < p.terms().size(); ++i) {
    if (R.weighted_degree(p.terms()[i].mono) != d) return std::nullopt;
  }
  return d;
}

bool is_homogeneous_total_degree(const Polynomial& p) {
  if (p.is_zero()) return true;
  std::uint64_t d = p.terms().front().mono.degree();
  for (const Term& t : p.terms())
    if (t.mono.degree() != d) return false;
  return true;
}

Polynomial derivative(const Polynomial& p, std::size_t var) {
  if (var >= p.ring()->arity()) throw_precondition("variable index out of range");
  std::vector<Term> out;
  for (const Term& t : p.terms()) {
    std::uint32_t e = t.mono.exponent(var);
    if (e == 0) continue;
    FieldElement c = t.coeff * FieldElement::of(static_cast<std::int64_t>(e), t.coeff.field());
    if (c.is_zero()) continue;  // characteristic divides the exponent
    auto exps = t.mono.exponents();
    exps[var] -= 1;
    out.push_back(Term{std::move(c), Monomial(std::move(exps))});
  }
  return Polynomial(p.ring(), std::move(out), false);
}

Polynomial transport(const Polynomial& p, const RingPtr& target) {
  if (p.ring() == target) return p;
  if (p.ring()->field() == target->field() &&
      p.ring()->variables() == target->variables() && p.ring()->order() == target->order()) {
    // same variables and order (possibly a different grading): just rebind
    return Polynomial(target, p.terms(), false);
  }
  if (!(p.ring()->field() == target->field()))
    throw_precondition("cannot transport between different coefficient fields");
  const std::size_t n = p.ring()->arity();
  std::vector<std::ptrdiff_t> map(n, -1);
  for (std::size_t v = 0; v < n; ++v) {
    auto idx = target->variable_index(p.ring()->variable(v));
    map[v] = idx ? static_cast<std::ptrdiff_t>(*idx) : -1;
  }
  std::vector<Term> out;
  out.reserve(p.terms().size());
  for (const Term& t : p.terms()) {
    std::vector<std::uint32_t> exps(target->arity(), 0);
    for (std::size_t v = 0; v < n; ++v) {
      std::uint32_t e = t.mono.exponent(v);
      if (e == 0) continue;
      if (map[v] < 0)
        throw_precondition("variable '" + p.ring()->variable(v) +
                           "' does not exist in the target ring");
      exps[static_cast<std::size_t>(map[v])] = e;
    }
    out.push_back(Term{t.coeff, Monomial(std::move(exps))});
  }
  return Polynomial(target, std::move(out), true);
}

}  // namespace mm

#include "mm/hilbert.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace mm {

ZPoly ZPoly::constant(std::size_t arity, Int c) {
  ZPoly p(arity);
  if (c != 0) p.terms_.emplace(Exponents(arity, 0), std::move(c));
  return p;
}

ZPoly ZPoly::monomial(std::size_t arity, Exponents e, Int c) {
  ZPoly p(arity);
  if (c != 0) p.terms_.emplace(std::move(e), std::move(c));
  return p;
}

Int ZPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

void ZPoly::add_term(const Exponents& e, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
  ZPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

ZPoly ZPoly::operator-(const ZPoly& o) const {
  ZPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
  ZPoly r(arity_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(arity_);
      for (std::size_t i = 0; i < arity_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

ZPoly ZPoly::shifted(const Exponents& shift) const {
  ZPoly r(arity_);
  for (const auto& [e, c] : terms_) {
    Exponents s(arity_);
    for (std::size_t i = 0; i < arity_; ++i) s[i] = e[i] + shift[i];
    r.terms_.emplace(std::move(s), c);
  }
  return r;
}

ZPoly ZPoly::derivative(std::size_t slot) const {
  ZPoly r(arity_);
  for (const auto& [e, c] : terms_) {
    if (e[slot] == 0) continue;
    Exponents d = e;
    d[slot] -= 1;
    r.add_term(d, c * Int(e[slot]));
  }
  return r;
}

Int ZPoly::evaluate_all_ones() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

ZPoly ZPoly::substitute_one_and_drop(std::size_t slot) const {
  ZPoly r(arity_ - 1);
  for (const auto& [e, c] : terms_) {
    Exponents d;
    d.reserve(arity_ - 1);
    for (std::size_t i = 0; i < arity_; ++i)
      if (i != slot) d.push_back(e[i]);
    r.add_term(d, c);
  }
  return r;
}

std::optional<ZPoly> ZPoly::divide_one_minus(std::size_t slot) const {
  // group by the exponents away from `slot`, then take partial sums:
  // if N = sum_j c_j x^j with x = t_slot, then N/(1-x) has coefficients
  // q_j = c_0 + ... + c_j, exactly when the full sum vanishes.
  std::map<Exponents, std::map<std::uint32_t, Int>> grouped;
  for (const auto& [e, c] : terms_) {
    Exponents key = e;
    std::uint32_t j = key[slot];
    key[slot] = 0;
    grouped[std::move(key)][j] = c;
  }
  ZPoly q(arity_);
  for (const auto& [key, coeffs] : grouped) {
    Int run = 0;
    std::uint32_t top = coeffs.rbegin()->first;
    for (std::uint32_t j = 0; j <= top; ++j) {
      auto it = coeffs.find(j);
      if (it != coeffs.end()) run += it->second;
      if (j == top) {
        if (run != 0) return std::nullopt;  // not divisible
      } else if (run != 0) {
        Exponents e = key;
        e[slot] = j;
        q.terms_.emplace(std::move(e), run);
      }
    }
  }
  return q;
}

std::uint32_t ZPoly::degree_in(std::size_t slot) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[slot]);
  return d;
}

std::string ZPoly::str(const std::string& var_prefix) const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Exponents, Int>*> ordered;
  ordered.reserve(terms_.size());
  for (const auto& t : terms_) ordered.push_back(&t);
  auto total = [](const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
  };
  std::sort(ordered.begin(), ordered.end(), [&](const auto* a, const auto* b) {
    std::uint64_t da = total(a->first), db = total(b->first);
    if (da != db) return da < db;
    return a->first < b->first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto* t : ordered) {
    Int c = t->second;
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
      first = false;
    } else if (c < 0) {
      out << " - ";
      c = -c;
    } else {
      out << " + ";
    }
    bool constant_term = total(t->first) == 0;
    bool printed = false;
    if (c != 1 || constant_term) {
      out << c.get_str();
      printed = true;
    }
    for (std::size_t i = 0; i < arity_; ++i) {
      std::uint32_t e = t->first[i];
      if (e == 0) continue;
      if (printed) out << "*";
      printed = true;
      out << var_prefix << i;
      if (e > 1) out << "^" << e;
    }
  }
  return out.str();
}

std::vector<std::size_t> unit_grading_slots(const GradedRing& ring) {
  std::vector<std::size_t> slots(ring.arity());
  for (std::size_t v = 0; v < ring.arity(); ++v) {
    const auto& g = ring.grading()[v];
    std::size_t ones = 0, slot = 0;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (g[j] == 1) {
        ++ones;
        slot = j;
      } else if (g[j] != 0) {
        ones = 2;  // disqualify
      }
    }
    if (ones != 1)
      throw_precondition("variable '" + ring.variable(v) +
                         "' does not carry a unit-vector grading");
    slots[v] = slot;
  }
  return slots;
}

namespace {

using Gens = std::vector<Monomial>;

Gens minimalize(Gens gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.exponents() < b.exponents();
  });
  Gens out;
  for (const Monomial& m : gens) {
    bool redundant = false;
    for (const Monomial& kept : out) {
      if (kept.divides(m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(m);
  }
  return out;
}

ZPoly::Exponents slot_degree(const Monomial& m, const std::vector<std::size_t>& slots,
                             std::size_t arity) {
  ZPoly::Exponents d(arity, 0);
  for (std::size_t v = 0; v < m.arity(); ++v) d[slots[v]] += m.exponent(v);
  return d;
}

/// Numerator of the Hilbert series of R/(monomial ideal), by splitting on the
/// variable that occurs in the most minimal generators:
///   N(I) = N(I + (x)) + t^deg(x) N(I : x).
ZPoly quotient_numerator(const Gens& gens, const std::vector<std::size_t>& slots,
                         std::size_t arity) {
  if (gens.empty()) return ZPoly::constant(arity, 1);
  if (gens.front().is_one()) return ZPoly::constant(arity, 0);
  if (gens.size() == 1)
    return ZPoly::constant(arity, 1) -
           ZPoly::monomial(arity, slot_degree(gens[0], slots, arity));

  bool pairwise_coprime = true;
  for (std::size_t a = 0; a < gens.size() && pairwise_coprime; ++a)
    for (std::size_t b = a + 1; b < gens.size() && pairwise_coprime; ++b)
      if (!gens[a].coprime(gens[b])) pairwise_coprime = false;
  if (pairwise_coprime) {
    ZPoly out = ZPoly::constant(arity, 1);
    for (const Monomial& g : gens)
      out = out * (ZPoly::constant(arity, 1) -
                   ZPoly::monomial(arity, slot_degree(g, slots, arity)));
    return out;
  }

  const std::size_t nvars = gens.front().arity();
  std::vector<std::size_t> count(nvars, 0);
  for (const Monomial& g : gens)
    for (std::size_t v = 0; v < nvars; ++v)
      if (g.exponent(v) != 0) ++count[v];
  std::size_t pivot = std::max_element(count.begin(), count.end()) - count.begin();

  // I + (pivot)
  Gens plus;
  plus.push_back(Monomial::variable(nvars, pivot));
  for (const Monomial& g : gens)
    if (g.exponent(pivot) == 0) plus.push_back(g);

  // I : pivot
  Gens colon;
  colon.reserve(gens.size());
  for (const Monomial& g : gens) {
    if (g.exponent(pivot) == 0) {
      colon.push_back(g);
    } else {
      colon.push_back(g.divide_exact(Monomial::variable(nvars, pivot)));
    }
  }

  ZPoly shift = ZPoly::monomial(arity, slot_degree(Monomial::variable(nvars, pivot), slots, arity));
  return quotient_numerator(minimalize(std::move(plus)), slots, arity) +
         shift * quotient_numerator(minimalize(std::move(colon)), slots, arity);
}

}  // namespace

HilbertSeries multigraded_hilbert_series(const Ideal& I) {
  const GradedRing& R = *I.ring();
  std::vector<std::size_t> slots = unit_grading_slots(R);
  for (const Polynomial& g : I.generators()) {
    if (!multidegree(g)) throw_precondition("inhomogeneous generator");
  }
  const std::size_t arity = R.grading_arity();
  std::vector<std::uint32_t> den(arity, 0);
  for (std::size_t v = 0; v < R.arity(); ++v) den[slots[v]] += 1;

  Gens lt = leading_term_ideal(I.groebner());
  ZPoly num = quotient_numerator(minimalize(std::move(lt)), slots, arity);
  return HilbertSeries{std::move(num), std::move(den)};
}

HilbertSeries reduce_hilbert(HilbertSeries H) {
  for (std::size_t i = 0; i < H.arity(); ++i) {
    while (H.denominator_exponents[i] > 0) {
      auto q = H.numerator.divide_one_minus(i);
      if (!q) break;
      H.numerator = std::move(*q);
      H.denominator_exponents[i] -= 1;
    }
  }
  return H;
}

Rat hilbert_coefficient(const HilbertSeries& H, const std::vector<std::uint32_t>& u) {
  if (u.size() != H.arity()) throw_precondition("coefficient index has the wrong arity");
  std::uint64_t order = 0;
  ZPoly d = H.numerator;
  Int factorial = 1;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (H.denominator_exponents[i] == 0 || u[i] > H.denominator_exponents[i] - 1)
      throw_precondition("coefficient index out of range");
    std::uint32_t k = H.denominator_exponents[i] - 1 - u[i];
    order += k;
    for (std::uint32_t j = 0; j < k; ++j) d = d.derivative(i);
    Int f;
    mpz_fac_ui(f.get_mpz_t(), k);
    factorial *= f;
  }
  Rat value(d.evaluate_all_ones(), factorial);
  value.canonicalize();
  return order % 2 == 0 ? value : Rat(-value);
}

namespace {

Int binom(std::uint64_t n, std::uint32_t k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

Int series_coefficient(const HilbertSeries& H, const std::vector<std::uint32_t>& m) {
  if (m.size() != H.arity()) throw_precondition("multidegree has the wrong arity");
  Int total = 0;
  for (const auto& [e, c] : H.numerator.terms()) {
    Int factor = c;
    bool skip = false;
    for (std::size_t i = 0; i < m.size() && !skip; ++i) {
      if (e[i] > m[i]) {
        skip = true;
        break;
      }
      std::uint32_t d = H.denominator_exponents[i];
      std::uint32_t x = m[i] - e[i];
      if (d == 0) {
        if (x != 0) skip = true;
      } else {
        factor *= binom(std::uint64_t(x) + d - 1, d - 1);
      }
    }
    if (!skip) total += factor;
  }
  return total;
}

std::uint64_t series_coefficient_bruteforce(const Ideal& I, const std::vector<std::uint32_t>& m) {
  const GradedRing& R = *I.ring();
  std::vector<std::size_t> slots = unit_grading_slots(R);
  if (m.size() != R.grading_arity()) throw_precondition("multidegree has the wrong arity");

  std::vector<std::vector<std::size_t>> by_slot(R.grading_arity());
  for (std::size_t v = 0; v < R.arity(); ++v) by_slot[slots[v]].push_back(v);

  // candidate count: one weak composition per slot
  double estimate = 1;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (by_slot[j].empty()) {
      if (m[j] > 0) return 0;
      continue;
    }
    Int c = binom(std::uint64_t(m[j]) + by_slot[j].size() - 1,
                  static_cast<std::uint32_t>(by_slot[j].size() - 1));
    estimate *= c.get_d();
  }
  if (estimate > 1e7) throw_resource("enumeration bound exceeded");

  Gens lt = leading_term_ideal(I.groebner());

  std::uint64_t count = 0;
  std::vector<std::uint32_t> exps(R.arity(), 0);
  // enumerate weak compositions slot by slot
  std::function<void(std::size_t)> walk_slot = [&](std::size_t j) {
    if (j == by_slot.size()) {
      Monomial candidate{std::vector<std::uint32_t>(exps)};
      for (const Monomial& g : lt)
        if (g.divides(candidate)) return;
      ++count;
      return;
    }
    const auto& vars = by_slot[j];
    std::function<void(std::size_t, std::uint32_t)> compose = [&](std::size_t idx,
                                                                  std::uint32_t left) {
      if (idx + 1 == vars.size()) {
        exps[vars[idx]] = left;
        walk_slot(j + 1);
        exps[vars[idx]] = 0;
        return;
      }
      for (std::uint32_t take = 0; take <= left; ++take) {
        exps[vars[idx]] = take;
        compose(idx + 1, left - take);
      }
      exps[vars[idx]] = 0;
    };
    if (vars.empty()) {
      walk_slot(j + 1);
    } else {
      compose(0, m[j]);
    }
  };
  walk_slot(0);
  return count;
}

}  // namespace mm

#include "mm/groebner.hpp"

#include <algorithm>
#include <set>

namespace mm {

namespace {

/// Full division of p by a monic basis, leading reducers tried in list order.
Polynomial reduce_full(const Polynomial& p, const std::vector<Polynomial>& basis) {
  Polynomial work = p;
  std::vector<Term> remainder;
  while (!work.is_zero()) {
    const Term& lead = work.leading_term();
    const Polynomial* reducer = nullptr;
    for (const Polynomial& g : basis) {
      if (g.leading_monomial().divides(lead.mono)) {
        reducer = &g;
        break;
      }
    }
    if (reducer == nullptr) {
      remainder.push_back(lead);
      std::vector<Term> rest(work.terms().begin() + 1, work.terms().end());
      work = Polynomial(work.ring(), std::move(rest), false);
      continue;
    }
    Monomial q = lead.mono.divide_exact(reducer->leading_monomial());
    // reducer is monic, so the cofactor coefficient is just the lead coefficient
    work = work - reducer->multiply_term(lead.coeff, q);
  }
  return Polynomial(p.ring(), std::move(remainder), false);
}

struct SPair {
  std::size_t i, j;
  Monomial lcm;
};

struct SPairLess {
  const MonomialOrder* order;
  bool operator()(const SPair& a, const SPair& b) const {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    int c = order->compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

/// Gebauer-Moeller update: prunes the pending pair set when generator t joins.
void update_pairs(std::set<SPair, SPairLess>& pairs, const std::vector<Polynomial>& basis,
                  std::size_t t) {
  const Monomial& lt = basis[t].leading_monomial();

  std::vector<SPair> fresh;
  fresh.reserve(t);
  for (std::size_t i = 0; i < t; ++i)
    fresh.push_back(SPair{i, t, Monomial::lcm(basis[i].leading_monomial(), lt)});

  // M criterion: drop (i,t) when some other (j,t) has a properly smaller lcm
  std::vector<bool> keep(fresh.size(), true);
  for (std::size_t a = 0; a < fresh.size(); ++a) {
    if (!keep[a]) continue;
    for (std::size_t b = 0; b < fresh.size(); ++b) {
      if (a == b || !keep[b]) continue;
      if (fresh[b].lcm.divides(fresh[a].lcm) && !(fresh[b].lcm == fresh[a].lcm)) {
        keep[a] = false;
        break;
      }
    }
  }
  // F criterion: among equal lcms keep only the first
  for (std::size_t a = 0; a < fresh.size(); ++a) {
    if (!keep[a]) continue;
    for (std::size_t b = a + 1; b < fresh.size(); ++b) {
      if (keep[b] && fresh[b].lcm == fresh[a].lcm) keep[b] = false;
    }
  }
  // B criterion: drop surviving pairs with coprime leading monomials
  for (std::size_t a = 0; a < fresh.size(); ++a) {
    if (!keep[a]) continue;
    if (basis[fresh[a].i].leading_monomial().coprime(lt)) keep[a] = false;
  }

  // prune old pairs strictly refined by the newcomer
  for (auto it = pairs.begin(); it != pairs.end();) {
    const SPair& pr = *it;
    bool drop = lt.divides(pr.lcm) &&
                !(Monomial::lcm(basis[pr.i].leading_monomial(), lt) == pr.lcm) &&
                !(Monomial::lcm(basis[pr.j].leading_monomial(), lt) == pr.lcm);
    it = drop ? pairs.erase(it) : std::next(it);
  }

  for (std::size_t a = 0; a < fresh.size(); ++a)
    if (keep[a]) pairs.insert(std::move(fresh[a]));
}

}  // namespace

GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Polynomial>& generators) {
  for (const Polynomial& g : generators)
    if (!same_ring(g.ring(), ring)) throw_precondition("generators live in different rings");

  std::vector<Polynomial> basis;
  SPairLess less{&ring->order()};
  std::set<SPair, SPairLess> pairs(less);

  auto insert = [&](Polynomial p) {
    basis.push_back(transport(p, ring).monic());
    update_pairs(pairs, basis, basis.size() - 1);
  };

  for (const Polynomial& g : generators) {
    if (g.is_zero()) continue;
    Polynomial r = reduce_full(g, basis);
    if (!r.is_zero()) insert(std::move(r));
  }

  while (!pairs.empty()) {
    SPair pr = *pairs.begin();
    pairs.erase(pairs.begin());
    const Polynomial& f = basis[pr.i];
    const Polynomial& g = basis[pr.j];
    Polynomial s = f.multiply_term(FieldElement::one(ring->field()),
                                   pr.lcm.divide_exact(f.leading_monomial())) -
                   g.multiply_term(FieldElement::one(ring->field()),
                                   pr.lcm.divide_exact(g.leading_monomial()));
    Polynomial r = reduce_full(s, basis);
    if (!r.is_zero()) insert(std::move(r));
  }

  // minimalize: keep only generators whose leading monomial is not divisible
  // by another kept one (smaller leading monomials win)
  std::vector<std::size_t> idx(basis.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return ring->order().compare(basis[a].leading_monomial(), basis[b].leading_monomial()) < 0;
  });
  std::vector<Polynomial> minimal;
  for (std::size_t i : idx) {
    bool redundant = false;
    for (const Polynomial& kept : minimal) {
      if (kept.leading_monomial().divides(basis[i].leading_monomial())) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // tail-reduce each against the others
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(reduce_full(minimal[i], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring->order().compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return GroebnerBasis(ring, std::move(reduced));
}

bool GroebnerBasis::contains_one() const {
  return gens_.size() == 1 && gens_[0].leading_monomial().is_one();
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G) {
  if (!same_ring(p.ring(), G.ring())) throw_precondition("polynomial and basis ring mismatch");
  return reduce_full(p, G.generators());
}

bool ideal_membership(const Polynomial& p, const GroebnerBasis& G) {
  return normal_form(p, G).is_zero();
}

std::vector<Monomial> leading_term_ideal(const GroebnerBasis& G) {
  std::vector<Monomial> lt;
  lt.reserve(G.generators().size());
  for (const Polynomial& g : G.generators()) lt.push_back(g.leading_monomial());
  return lt;
}

}  // namespace mm

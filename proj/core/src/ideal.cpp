#include "mm/ideal.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace mm {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  gens_.reserve(generators.size());
  for (Polynomial& g : generators) {
    if (g.is_zero()) continue;
    if (!same_ring(g.ring(), ring_)) throw_precondition("generators live in different rings");
    gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(const RingPtr& ring) {
  return Ideal(ring, {Polynomial::constant(ring, 1)});
}

Ideal Ideal::variable_ideal(const RingPtr& ring) {
  std::vector<Polynomial> gens;
  gens.reserve(ring->arity());
  for (std::size_t i = 0; i < ring->arity(); ++i) gens.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(gens));
}

bool Ideal::is_monomial() const {
  for (const Polynomial& g : gens_)
    if (!g.is_monomial()) return false;
  return true;
}

const GroebnerBasis& Ideal::groebner() const {
  std::call_once(cache_->once, [this] { cache_->gb = buchberger(ring_, gens_); });
  return *cache_->gb;
}

bool Ideal::contains(const Polynomial& p) const { return ideal_membership(p, groebner()); }

Ideal with_known_basis(RingPtr ring, GroebnerBasis gb) {
  std::vector<Polynomial> gens = gb.generators();
  return with_known_basis(std::move(ring), std::move(gens), std::move(gb));
}

Ideal with_known_basis(RingPtr ring, std::vector<Polynomial> generators, GroebnerBasis gb) {
  Ideal I(std::move(ring), std::move(generators));
  std::call_once(I.cache_->once, [&] { I.cache_->gb = std::move(gb); });
  return I;
}

bool same_ideal(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) return false;
  return a.groebner().generators() == b.groebner().generators();
}

Ideal ideal_combine(const Ideal& a, const Ideal& b, IdealBinop op) {
  if (!same_ring(a.ring(), b.ring())) throw_precondition("ideals live in different rings");
  std::vector<Polynomial> gens;
  if (op == IdealBinop::Sum) {
    gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  } else {
    gens.reserve(a.generators().size() * b.generators().size());
    for (const Polynomial& f : a.generators())
      for (const Polynomial& g : b.generators()) gens.push_back(f * g);
  }
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& a, std::uint32_t e) {
  if (e == 0) return Ideal::unit(a.ring());
  Ideal acc = a;
  for (std::uint32_t i = 1; i < e; ++i) acc = ideal_combine(acc, a, IdealBinop::Product);
  return acc;
}

namespace {

/// Ring [fresh aux variables..., original variables...] whose order compares
/// the aux block first, so the original ring is a coordinate subring.
RingPtr prepend_variables(const RingPtr& ring, const std::vector<std::string>& fresh) {
  std::vector<std::string> vars = fresh;
  vars.insert(vars.end(), ring->variables().begin(), ring->variables().end());
  std::vector<std::vector<std::uint32_t>> grading(fresh.size(),
                                                  std::vector<std::uint32_t>(ring->grading_arity(), 0));
  grading.insert(grading.end(), ring->grading().begin(), ring->grading().end());
  return make_ring(ring->field(), std::move(vars), ring->order().with_leading_block(fresh.size()),
                   std::move(grading));
}

std::string fresh_name(const RingPtr& ring, const std::string& base) {
  std::string name = base;
  while (ring->variable_index(name)) name += "_";
  return name;
}

/// Members of a reduced basis in the extension that avoid the first `count`
/// variables form the reduced basis of the intersection with the subring.
std::vector<Polynomial> intersect_with_subring(const GroebnerBasis& gb, std::size_t count,
                                               const RingPtr& subring) {
  std::vector<Polynomial> kept;
  for (const Polynomial& g : gb.generators()) {
    bool has_aux = false;
    for (std::size_t v = 0; v < count && !has_aux; ++v)
      if (g.leading_monomial().exponent(v) != 0) has_aux = true;
    if (!has_aux) kept.push_back(transport(g, subring));
  }
  return kept;
}

bool ideal_is_std_homogeneous(const Ideal& I) {
  for (const Polynomial& g : I.generators())
    if (!is_homogeneous_total_degree(g)) return false;
  return true;
}

/// Saturation by a single variable for homogeneous ideals: under grevlex with
/// that variable last, dividing every basis element by its largest power of
/// the variable yields a basis of (I : v^infinity).
Ideal saturate_variable_homogeneous(const Ideal& I, std::size_t var) {
  const RingPtr& R = I.ring();
  std::vector<std::string> vars;
  vars.reserve(R->arity());
  for (std::size_t i = 0; i < R->arity(); ++i)
    if (i != var) vars.push_back(R->variable(i));
  vars.push_back(R->variable(var));
  RingPtr P = make_ring(R->field(), std::move(vars), MonomialOrder::grevlex());

  std::vector<Polynomial> moved;
  moved.reserve(I.generators().size());
  for (const Polynomial& g : I.generators()) moved.push_back(transport(g, P));
  GroebnerBasis gb = buchberger(P, moved);

  const std::size_t last = P->arity() - 1;
  std::vector<Polynomial> divided;
  divided.reserve(gb.generators().size());
  for (const Polynomial& g : gb.generators()) {
    std::uint32_t low = std::numeric_limits<std::uint32_t>::max();
    for (const Term& t : g.terms()) low = std::min(low, t.mono.exponent(last));
    if (low == 0) {
      divided.push_back(transport(g, R));
    } else {
      Monomial shift = Monomial::variable(P->arity(), last, low);
      std::vector<Term> terms;
      terms.reserve(g.terms().size());
      for (const Term& t : g.terms()) terms.push_back(Term{t.coeff, t.mono.divide_exact(shift)});
      divided.push_back(transport(Polynomial(P, std::move(terms), false), R));
    }
  }
  return Ideal(R, std::move(divided));
}

Ideal saturate_generic(const Ideal& I, const Polynomial& h) {
  const RingPtr& R = I.ring();
  RingPtr W = prepend_variables(R, {fresh_name(R, "w")});
  std::vector<Polynomial> gens;
  gens.reserve(I.generators().size() + 1);
  for (const Polynomial& g : I.generators()) gens.push_back(transport(g, W));
  gens.push_back(Polynomial::constant(W, 1) -
                 Polynomial::variable(W, 0) * transport(h, W));
  GroebnerBasis gb = buchberger(W, gens);
  return with_known_basis(R, buchberger(R, intersect_with_subring(gb, 1, R)));
}

Ideal saturate_variable(const Ideal& I, std::size_t var) {
  if (ideal_is_std_homogeneous(I)) return saturate_variable_homogeneous(I, var);
  return saturate_generic(I, Polynomial::variable(I.ring(), var));
}

}  // namespace

Ideal ideal_quotient(const Ideal& I, const Polynomial& h) {
  if (h.is_zero()) throw_precondition("ideal quotient by zero");
  if (!same_ring(I.ring(), h.ring())) throw_precondition("quotient element in a different ring");
  if (I.is_zero() || h.is_constant()) return I;

  const RingPtr& R = I.ring();
  RingPtr W = prepend_variables(R, {fresh_name(R, "w")});
  Polynomial w = Polynomial::variable(W, 0);
  Polynomial hw = transport(h, W);
  std::vector<Polynomial> gens;
  // w*I + (1-w)*(h): the part free of w generates I ∩ (h)
  for (const Polynomial& g : I.generators()) gens.push_back(w * transport(g, W));
  gens.push_back((Polynomial::constant(W, 1) - w) * hw);
  GroebnerBasis gb = buchberger(W, gens);

  std::vector<Polynomial> quotients;
  for (Polynomial& g : intersect_with_subring(gb, 1, R)) {
    // each intersection generator is divisible by h; divide it off
    Polynomial work = std::move(g);
    std::vector<Term> q;
    while (!work.is_zero()) {
      const Term& lead = work.leading_term();
      if (!h.leading_monomial().divides(lead.mono))
        throw_internal("intersection generator not divisible by the quotient element");
      FieldElement c = lead.coeff / h.leading_coefficient();
      Monomial m = lead.mono.divide_exact(h.leading_monomial());
      work = work - h.multiply_term(c, m);
      q.push_back(Term{std::move(c), std::move(m)});
    }
    quotients.push_back(Polynomial(R, std::move(q), true));
  }
  return Ideal(R, std::move(quotients));
}

Ideal saturation(const Ideal& I, const Polynomial& h) {
  if (h.is_zero()) throw_precondition("saturation by zero");
  if (!same_ring(I.ring(), h.ring())) throw_precondition("saturation element in a different ring");
  if (I.is_zero() || h.is_constant()) return I;

  // split h = (monomial content) * h' and saturate by each part in turn
  Monomial content = h.terms().front().mono;
  for (const Term& t : h.terms()) content = Monomial::gcd(content, t.mono);

  Ideal result = I;
  for (std::size_t v = 0; v < content.arity(); ++v)
    if (content.exponent(v) != 0) result = saturate_variable(result, v);

  std::vector<Term> stripped;
  stripped.reserve(h.terms().size());
  for (const Term& t : h.terms())
    stripped.push_back(Term{t.coeff, t.mono.divide_exact(content)});
  Polynomial rest(h.ring(), std::move(stripped), true);
  if (!rest.is_constant()) result = saturate_generic(result, rest);
  return result;
}

Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& variables) {
  const RingPtr& R = I.ring();
  std::set<std::size_t> elim(variables.begin(), variables.end());
  for (std::size_t v : elim)
    if (v >= R->arity()) throw_precondition("eliminated variable index out of range");
  if (elim.empty()) return with_known_basis(R, I.groebner());
  if (elim.size() == R->arity())
    throw_precondition("cannot eliminate every variable of the ring");

  std::vector<std::string> front, back;
  std::vector<std::vector<std::uint32_t>> back_grading;
  for (std::size_t v = 0; v < R->arity(); ++v) {
    if (elim.count(v)) {
      front.push_back(R->variable(v));
    } else {
      back.push_back(R->variable(v));
      back_grading.push_back(R->grading()[v]);
    }
  }
  MonomialOrder tail =
      R->order().block_list().size() == 1 ? R->order() : MonomialOrder::grevlex();
  RingPtr sub = make_ring(R->field(), back, tail, back_grading);

  std::vector<MonomialOrder::Block> blocks;
  blocks.push_back({MonomialOrder::Kind::Grevlex, 0, front.size()});
  blocks.push_back({tail.block_list()[0].kind, front.size(), MonomialOrder::npos});
  std::vector<std::string> vars = front;
  vars.insert(vars.end(), back.begin(), back.end());
  RingPtr P = make_ring(R->field(), std::move(vars), MonomialOrder::blocks(std::move(blocks)));

  std::vector<Polynomial> moved;
  moved.reserve(I.generators().size());
  for (const Polynomial& g : I.generators()) moved.push_back(transport(g, P));
  GroebnerBasis gb = buchberger(P, moved);
  std::vector<Polynomial> kept = intersect_with_subring(gb, front.size(), sub);
  return with_known_basis(sub, buchberger(sub, kept));
}

Ideal kernel_of_map(const RingPtr& source, const RingPtr& target,
                    const std::vector<std::optional<Polynomial>>& images) {
  if (images.size() != source->arity())
    throw_precondition("kernel_of_map needs one (optional) image per source variable");
  if (!(source->field() == target->field()))
    throw_precondition("kernel_of_map cannot change the coefficient field");

  std::vector<std::string> target_only;
  for (const std::string& name : target->variables())
    if (!source->variable_index(name)) target_only.push_back(name);

  RingPtr U = prepend_variables(source, target_only);
  std::vector<Polynomial> graph;
  for (std::size_t v = 0; v < source->arity(); ++v) {
    bool shared = target->variable_index(source->variable(v)).has_value();
    if (shared) {
      if (images[v] && !(*images[v] == transport(Polynomial::variable(source, v), target)))
        throw_precondition("shared variable '" + source->variable(v) +
                           "' must map to itself");
      continue;
    }
    if (!images[v])
      throw_precondition("missing image for source variable '" + source->variable(v) + "'");
    if (!same_ring(images[v]->ring(), target))
      throw_precondition("image of '" + source->variable(v) + "' is not in the target ring");
    graph.push_back(Polynomial::variable(U, target_only.size() + v) - transport(*images[v], U));
  }
  GroebnerBasis gb = buchberger(U, graph);
  std::vector<Polynomial> kept = intersect_with_subring(gb, target_only.size(), source);
  return with_known_basis(source, buchberger(source, kept));
}

namespace {

using SupportMask = std::uint64_t;

void max_independent_set(const std::vector<SupportMask>& supports, SupportMask chosen,
                         std::size_t next, std::size_t arity, std::size_t chosen_size,
                         std::size_t& best) {
  best = std::max(best, chosen_size);
  for (std::size_t v = next; v < arity; ++v) {
    if (chosen_size + (arity - v) <= best) break;
    SupportMask with = chosen | (SupportMask(1) << v);
    bool independent = true;
    for (SupportMask s : supports) {
      if ((s & ~with) == 0) {
        independent = false;
        break;
      }
    }
    if (independent)
      max_independent_set(supports, with, v + 1, arity, chosen_size + 1, best);
  }
}

}  // namespace

std::int64_t krull_dimension(const Ideal& I) {
  const std::size_t n = I.ring()->arity();
  if (n > 64) throw_resource("krull_dimension supports at most 64 variables");
  const GroebnerBasis& gb = I.groebner();
  if (gb.contains_one()) return -1;

  std::vector<SupportMask> supports;
  supports.reserve(gb.generators().size());
  for (const Polynomial& g : gb.generators()) {
    SupportMask s = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (g.leading_monomial().exponent(v) != 0) s |= SupportMask(1) << v;
    supports.push_back(s);
  }
  std::size_t best = 0;
  max_independent_set(supports, 0, 0, n, 0, best);
  return static_cast<std::int64_t>(best);
}

}  // namespace mm

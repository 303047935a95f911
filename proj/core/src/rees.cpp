#include "mm/rees.hpp"

#include <algorithm>

namespace mm {

namespace {

std::string fresh_prefix(const RingPtr& ring, std::size_t count, const char* base) {
  std::string prefix = base;
  while (true) {
    bool clash = false;
    for (std::size_t i = 1; i <= count && !clash; ++i)
      if (ring->variable_index(prefix + std::to_string(i))) clash = true;
    if (!clash) return prefix;
    prefix += base;
  }
}

struct Blocks {
  RingPtr extended;
  std::vector<std::size_t> offset;
  std::vector<std::size_t> size;
};

/// Extended ring [X..., K...] with grading arity s: base variables have
/// degree 0, fiber block i has degree e_i.
Blocks build_extended_ring(const RingPtr& base, const std::vector<Ideal>& ideals) {
  const std::size_t s = ideals.size();
  std::size_t total = 0;
  for (const Ideal& I : ideals) total += I.generators().size();

  std::string prefix = fresh_prefix(base, total, "K");
  std::vector<std::string> vars = base->variables();
  std::vector<std::vector<std::uint32_t>> grading(base->arity(),
                                                  std::vector<std::uint32_t>(s, 0));
  Blocks b;
  std::size_t next = base->arity();
  std::size_t counter = 1;
  for (std::size_t i = 0; i < s; ++i) {
    b.offset.push_back(next);
    b.size.push_back(ideals[i].generators().size());
    for (std::size_t j = 0; j < ideals[i].generators().size(); ++j) {
      vars.push_back(prefix + std::to_string(counter++));
      std::vector<std::uint32_t> deg(s, 0);
      deg[i] = 1;
      grading.push_back(std::move(deg));
      ++next;
    }
  }
  b.extended = make_ring(base->field(), std::move(vars), MonomialOrder::grevlex(),
                         std::move(grading));
  return b;
}

ReesPresentation build_presentation(const std::vector<Ideal>& ideals, Polynomial h) {
  const RingPtr& base = ideals.front().ring();
  Blocks blocks = build_extended_ring(base, ideals);

  std::vector<Polynomial> minors;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    const auto& gens = ideals[i].generators();
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Polynomial fj = transport(gens[j], blocks.extended);
      for (std::size_t j2 = j + 1; j2 < gens.size(); ++j2) {
        Polynomial fj2 = transport(gens[j2], blocks.extended);
        Polynomial yj = Polynomial::variable(blocks.extended, blocks.offset[i] + j);
        Polynomial yj2 = Polynomial::variable(blocks.extended, blocks.offset[i] + j2);
        minors.push_back(yj * fj2 - yj2 * fj);
      }
    }
  }

  Ideal gamma = saturation(Ideal(blocks.extended, std::move(minors)),
                           transport(h, blocks.extended));
  // canonical generators: the reduced basis sorted by (degree, leading monomial)
  std::vector<Polynomial> gens = gamma.groebner().generators();
  std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return blocks.extended->order().compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });

  return ReesPresentation{base,
                          ideals,
                          blocks.extended,
                          std::move(blocks.offset),
                          std::move(blocks.size),
                          std::move(h),
                          with_known_basis(blocks.extended, std::move(gens), gamma.groebner())};
}

void validate_ideals(const std::vector<Ideal>& ideals) {
  if (ideals.empty()) throw_precondition("need at least one ideal");
  const RingPtr& base = ideals.front().ring();
  for (const Ideal& I : ideals) {
    if (!same_ring(I.ring(), base)) throw_precondition("ideals live in different rings");
    if (I.is_zero()) throw_precondition("the zero ideal has no Rees presentation");
  }
}

}  // namespace

std::vector<std::size_t> min_degree_generator_choice(const std::vector<Ideal>& ideals) {
  std::vector<std::size_t> choice;
  choice.reserve(ideals.size());
  for (const Ideal& I : ideals) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < I.generators().size(); ++j) {
      if (I.generators()[j].total_degree() < I.generators()[best].total_degree()) best = j;
    }
    choice.push_back(best);
  }
  return choice;
}

ReesPresentation rees_defining_ideal(const std::vector<Ideal>& ideals,
                                     std::vector<std::size_t> generator_choice) {
  validate_ideals(ideals);
  if (generator_choice.empty()) generator_choice.assign(ideals.size(), 0);
  if (generator_choice.size() != ideals.size())
    throw_precondition("generator choice needs one index per ideal");

  Polynomial h = Polynomial::constant(ideals.front().ring(), 1);
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    if (generator_choice[i] >= ideals[i].generators().size())
      throw_precondition("generator choice index out of range");
    h = h * ideals[i].generators()[generator_choice[i]];
  }
  return build_presentation(ideals, std::move(h));
}

ReesPresentation rees_defining_ideal_monomial(const std::vector<Ideal>& ideals) {
  validate_ideals(ideals);
  for (const Ideal& I : ideals)
    if (!I.is_monomial()) throw_precondition("non-monomial generator");

  const RingPtr& base = ideals.front().ring();
  Polynomial h = Polynomial::constant(base, 1);
  for (std::size_t v = 0; v < base->arity(); ++v) h = h * Polynomial::variable(base, v);
  return build_presentation(ideals, std::move(h));
}

bool verify_rees_generators(const ReesPresentation& P) {
  const RingPtr& base = P.base_ring;
  const std::size_t s = P.ideal_count();
  std::string prefix = fresh_prefix(base, s, "T");
  std::vector<std::string> vars = base->variables();
  for (std::size_t i = 1; i <= s; ++i) vars.push_back(prefix + std::to_string(i));
  RingPtr target = make_ring(base->field(), std::move(vars));

  std::vector<std::optional<Polynomial>> images(P.extended_ring->arity());
  for (std::size_t v = 0; v < base->arity(); ++v)
    images[v] = Polynomial::variable(target, v);
  for (std::size_t i = 0; i < s; ++i) {
    Polynomial ti = Polynomial::variable(target, base->arity() + i);
    for (std::size_t j = 0; j < P.block_size[i]; ++j)
      images[P.fiber_variable(i, j)] = transport(P.ideals[i].generators()[j], target) * ti;
  }
  for (const Polynomial& g : P.defining_ideal.generators()) {
    if (!substitute(g, target, images).is_zero()) return false;
  }
  return true;
}

}  // namespace mm

#include "mm/ring.hpp"

#include <cctype>
#include <set>

namespace mm {

bool valid_identifier(std::string_view name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

GradedRing::GradedRing(Field field, std::vector<std::string> variables, MonomialOrder order,
                       std::vector<std::vector<std::uint32_t>> grading)
    : field_(field),
      variables_(std::move(variables)),
      order_(std::move(order)),
      grading_(std::move(grading)) {
  if (variables_.empty()) throw_precondition("a polynomial ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : variables_) {
    if (!valid_identifier(v)) throw_precondition("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw_precondition("duplicate variable name '" + v + "'");
  }
  if (grading_.size() != variables_.size())
    throw_precondition("grading must assign one vector per variable");
  grading_arity_ = grading_.front().size();
  if (grading_arity_ == 0) throw_precondition("grading vectors must be nonempty");
  for (const auto& g : grading_)
    if (g.size() != grading_arity_) throw_precondition("grading vectors must share one length");
}

std::optional<std::size_t> GradedRing::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i] == name) return i;
  return std::nullopt;
}

std::vector<std::uint64_t> GradedRing::weighted_degree(const Monomial& m) const {
  std::vector<std::uint64_t> d(grading_arity_, 0);
  for (std::size_t v = 0; v < arity(); ++v) {
    std::uint32_t e = m.exponent(v);
    if (e == 0) continue;
    for (std::size_t j = 0; j < grading_arity_; ++j)
      d[j] += std::uint64_t(e) * grading_[v][j];
  }
  return d;
}

bool GradedRing::same(const GradedRing& o) const {
  return field_ == o.field_ && variables_ == o.variables_ && order_ == o.order_ &&
         grading_ == o.grading_;
}

RingPtr make_ring(Field field, std::vector<std::string> variables, MonomialOrder order,
                  std::vector<std::vector<std::uint32_t>> grading) {
  if (grading.empty()) grading.assign(variables.size(), {1});
  return std::make_shared<GradedRing>(field, std::move(variables), std::move(order),
                                      std::move(grading));
}

RingPtr regrade(const RingPtr& ring, std::vector<std::vector<std::uint32_t>> grading) {
  return std::make_shared<GradedRing>(ring->field(), ring->variables(), ring->order(),
                                      std::move(grading));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same(*b);
}

}  // namespace mm

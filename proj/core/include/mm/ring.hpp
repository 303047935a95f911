#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mm/field.hpp"
#include "mm/order.hpp"

namespace mm {

/// Polynomial ring descriptor: named variables over a coefficient field with a
/// monomial order and a multigrading (one vector of naturals per variable).
class GradedRing {
 public:
  GradedRing(Field field, std::vector<std::string> variables, MonomialOrder order,
             std::vector<std::vector<std::uint32_t>> grading);

  const Field& field() const { return field_; }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::string& variable(std::size_t i) const { return variables_[i]; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<std::vector<std::uint32_t>>& grading() const { return grading_; }
  std::size_t grading_arity() const { return grading_arity_; }
  std::size_t arity() const { return variables_.size(); }

  std::optional<std::size_t> variable_index(std::string_view name) const;

  /// Grading-weighted degree of a monomial.
  std::vector<std::uint64_t> weighted_degree(const Monomial& m) const;

  bool same(const GradedRing& o) const;

 private:
  Field field_;
  std::vector<std::string> variables_;
  MonomialOrder order_;
  std::vector<std::vector<std::uint32_t>> grading_;
  std::size_t grading_arity_;
};

using RingPtr = std::shared_ptr<const GradedRing>;

bool valid_identifier(std::string_view name);

/// Standard grading (every variable of degree (1)) unless one is supplied.
RingPtr make_ring(Field field, std::vector<std::string> variables,
                  MonomialOrder order = MonomialOrder::grevlex(),
                  std::vector<std::vector<std::uint32_t>> grading = {});

/// Same variables and order, new grading.
RingPtr regrade(const RingPtr& ring, std::vector<std::vector<std::uint32_t>> grading);

bool same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace mm

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mm/polynomial.hpp"

namespace mm {

/// Parsed session file: ordered ring / ideal / polytope declarations.
/// Grammar (UTF-8 text, `#` comments to end of line, declarations end in `;`):
///
///   ring R = QQ[x, y, z];
///   ring S = GF(2)[a, b];
///   ideal I = x^4 + y^2*z^2, x*y^2*z;      # parses in the last declared ring
///   polytope Q = (1,1,0) (2,1,0) (1,3,0) (1,1,3);
///
/// Polynomial expressions use `+ - * ^` with `^` > `*` > `+`/`-`, unary
/// minus, parentheses, integer and a/b rational literals, and no implicit
/// multiplication. Exponents must be nonnegative integer literals.
struct SessionDocument {
  enum class DeclKind { Ring, Ideal, Polytope };

  struct IdealDecl {
    std::string ring_name;
    std::vector<Polynomial> generators;
  };
  struct PolytopeDecl {
    std::size_t dimension = 0;
    std::vector<std::vector<std::int64_t>> points;
  };

  std::vector<std::pair<std::string, DeclKind>> declarations;
  std::map<std::string, RingPtr> rings;
  std::map<std::string, IdealDecl> ideals;
  std::map<std::string, PolytopeDecl> polytopes;

  const RingPtr& ring(const std::string& name) const;
  const IdealDecl& ideal(const std::string& name) const;
  const PolytopeDecl& polytope(const std::string& name) const;
};

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

SessionDocument parse_session(const std::string& text,
                              const MonomialOrder& ring_order = MonomialOrder::grevlex());

/// Deterministic inverse of parse_polynomial on canonical forms: terms in
/// descending monomial order, coefficients as integers or a/b, explicit `*`
/// and `^`.
std::string format_polynomial(const Polynomial& p);

/// "QQ[x,y,z]" or "GF(7)[a,b]" ring descriptions (used by the CLI's inline
/// --ring flag).
RingPtr parse_ring_description(const std::string& text,
                               const MonomialOrder& order = MonomialOrder::grevlex());

}  // namespace mm

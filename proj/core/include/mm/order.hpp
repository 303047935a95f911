#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "mm/monomial.hpp"

namespace mm {

/// Global monomial order: lex, graded reverse lex, or a sequence of blocks
/// over variable ranges (compared block by block, so a leading block on a
/// variable set makes this an elimination order for that set).
class MonomialOrder {
 public:
  enum class Kind { Lex, Grevlex };
  struct Block {
    Kind kind;
    std::size_t begin;
    std::size_t end;  // npos = up to the arity
    bool operator==(const Block&) const = default;
  };
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  static MonomialOrder lex();
  static MonomialOrder grevlex();
  static MonomialOrder blocks(std::vector<Block> bs);

  /// Same order on variables shifted right by `count`, preceded by a grevlex
  /// block on the first `count` variables. Used for elimination.
  MonomialOrder with_leading_block(std::size_t count) const;

  /// +1 if a > b, 0 if equal, -1 if a < b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  bool operator==(const MonomialOrder&) const = default;
  bool is_plain_grevlex() const;
  const std::vector<Block>& block_list() const { return blocks_; }

 private:
  explicit MonomialOrder(std::vector<Block> bs) : blocks_(std::move(bs)) {}
  std::vector<Block> blocks_;
};

}  // namespace mm

#include "mm/order.hpp"

namespace mm {

MonomialOrder MonomialOrder::lex() {
  return MonomialOrder({Block{Kind::Lex, 0, npos}});
}

MonomialOrder MonomialOrder::grevlex() {
  return MonomialOrder({Block{Kind::Grevlex, 0, npos}});
}

MonomialOrder MonomialOrder::blocks(std::vector<Block> bs) {
  if (bs.empty()) throw_precondition("block order needs at least one block");
  std::size_t at = 0;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    if (bs[i].begin != at) throw_precondition("block order ranges must be contiguous from 0");
    if (bs[i].end != npos && bs[i].end <= bs[i].begin)
      throw_precondition("empty block in monomial order");
    if (bs[i].end == npos && i + 1 != bs.size())
      throw_precondition("only the final block may be open-ended");
    at = bs[i].end;
  }
  return MonomialOrder(std::move(bs));
}

MonomialOrder MonomialOrder::with_leading_block(std::size_t count) const {
  std::vector<Block> bs;
  bs.push_back(Block{Kind::Grevlex, 0, count});
  for (const Block& b : blocks_) {
    std::size_t end = b.end == npos ? npos : b.end + count;
    bs.push_back(Block{b.kind, b.begin + count, end});
  }
  return MonomialOrder(std::move(bs));
}

bool MonomialOrder::is_plain_grevlex() const {
  return blocks_.size() == 1 && blocks_[0].kind == Kind::Grevlex &&
         blocks_[0].begin == 0 && blocks_[0].end == npos;
}

namespace {

int compare_lex(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end) {
  for (std::size_t i = begin; i < end; ++i) {
    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i) ? 1 : -1;
  }
  return 0;
}

int compare_grevlex(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = begin; i < end; ++i) {
    da += a.exponent(i);
    db += b.exponent(i);
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = end; i-- > begin;) {
    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i) ? 1 : -1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t arity = a.arity();
  // full-range grevlex fast path: cached degrees decide most comparisons
  if (blocks_.size() == 1 && blocks_[0].kind == Kind::Grevlex) {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    for (std::size_t i = arity; i-- > 0;) {
      if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i) ? 1 : -1;
    }
    return 0;
  }
  for (const Block& blk : blocks_) {
    std::size_t end = blk.end == npos ? arity : blk.end;
    if (blk.begin >= end) continue;
    int c = blk.kind == Kind::Lex ? compare_lex(a, b, blk.begin, end)
                                  : compare_grevlex(a, b, blk.begin, end);
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace mm

#include "ogradlab/ring.hpp"

#include <set>
#include <stdexcept>

namespace ogradlab {

std::string TermOrder::name() const {
  switch (tag) {
    case Order::Degrevlex:
      return "degrevlex";
    case Order::Lex:
      return "lex";
    case Order::Block:
      return "block(" + std::to_string(block_split) + ")";
  }
  return "?";
}

PolyRing::PolyRing(std::vector<std::string> vars, TermOrder order)
    : vars_(std::move(vars)), order_(order) {
  if (vars_.empty() || static_cast<int>(vars_.size()) > kMaxVars)
    throw std::invalid_argument("ring must have between 1 and 24 variables");
  std::set<std::string> seen(vars_.begin(), vars_.end());
  if (seen.size() != vars_.size())
    throw std::invalid_argument("ring variable names must be unique");
  if (order_.tag == Order::Block &&
      (order_.block_split <= 0 ||
       order_.block_split >= static_cast<int>(vars_.size())))
    throw std::invalid_argument("block order needs 0 < split < nvars");
}

int PolyRing::var_index(std::string_view name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

RingPtr make_ring(std::vector<std::string> vars, TermOrder order) {
  return std::make_shared<const PolyRing>(std::move(vars), order);
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw std::invalid_argument("ring mismatch");
}

}  // namespace ogradlab

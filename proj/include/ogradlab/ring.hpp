#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ogradlab/rational.hpp"

namespace ogradlab {

inline constexpr int kMaxVars = 24;

enum class Order { Degrevlex, Lex, Block };

// Monomial order. Block orders eliminate the first `block_split` variables:
// compare degrevlex on the first block, ties broken degrevlex on the rest.
struct TermOrder {
  Order tag = Order::Degrevlex;
  int block_split = 0;

  bool operator==(const TermOrder&) const = default;
  std::string name() const;
};

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

class PolyRing {
 public:
  PolyRing(std::vector<std::string> vars, TermOrder order);

  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& var_name(int i) const { return vars_.at(i); }
  int var_index(std::string_view name) const;  // -1 when absent
  const TermOrder& order() const { return order_; }

  bool operator==(const PolyRing& o) const {
    return vars_ == o.vars_ && order_ == o.order_;
  }

 private:
  std::vector<std::string> vars_;
  TermOrder order_;
};

RingPtr make_ring(std::vector<std::string> vars,
                  TermOrder order = {Order::Degrevlex, 0});

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace ogradlab

#include "ineqprice/exact.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "ineqprice/errors.h"

namespace ineqprice {

void require_normalized(const Instance& inst, const char* operation) {
  if (!inst.is_normalized()) {
    throw ValidationError(std::string(operation) +
                          " needs a normalized instance (every valuation in "
                          "the price set)");
  }
}

namespace {

// Edge to a lower-numbered node, seen from the higher one.
struct BackArc {
  NodeId to;
  Price alpha_out;  // alpha(self, to)
  Price alpha_in;   // alpha(to, self)
};

class BruteForce {
 public:
  explicit BruteForce(const Instance& inst)
      : inst_(inst),
        n_(inst.num_nodes()),
        back_(n_),
        suffix_best_(n_ + 1, 0),
        current_(n_),
        best_(n_) {
    for (NodeId v = 0; v < n_; ++v) {
      for (const Arc& a : inst.neighbors(v)) {
        if (a.to < v) back_[v].push_back({a.to, a.alpha_out, a.alpha_in});
      }
    }
    for (NodeId v = n_ - 1; v >= 0; --v) {
      auto top = inst.prices().floor(inst.val(v));
      suffix_best_[v] = suffix_best_[v + 1] + (top ? *top * inst.demand(v) : 0);
    }
  }

  Solution run() {
    search(0, 0);
    return Solution{PriceVector{best_}, best_revenue_, "brute"};
  }

 private:
  bool consistent(NodeId v, Price p) const {
    for (const BackArc& a : back_[v]) {
      const PriceChoice& q = current_[a.to];
      if (!q) continue;
      if (p - *q > a.alpha_out || *q - p > a.alpha_in) return false;
    }
    return true;
  }

  void search(NodeId v, Revenue so_far) {
    if (best_revenue_ >= 0 && so_far + suffix_best_[v] <= best_revenue_) return;
    if (v == n_) {
      best_revenue_ = so_far;
      best_ = current_;
      return;
    }
    for (Price p : inst_.prices().values()) {
      if (!consistent(v, p)) continue;
      current_[v] = p;
      const Revenue gain = p <= inst_.val(v) ? p * inst_.demand(v) : 0;
      search(v + 1, so_far + gain);
    }
    current_[v] = std::nullopt;
    search(v + 1, so_far);
  }

  const Instance& inst_;
  const NodeId n_;
  std::vector<std::vector<BackArc>> back_;
  std::vector<Revenue> suffix_best_;
  std::vector<PriceChoice> current_;
  std::vector<PriceChoice> best_;
  Revenue best_revenue_ = -1;
};

}  // namespace

Solution brute_force_opt(const Instance& inst, int node_limit) {
  if (inst.num_nodes() > node_limit) {
    throw SizeLimitError("exhaustive search refused: " +
                         std::to_string(inst.num_nodes()) +
                         " nodes exceeds the node limit of " +
                         std::to_string(node_limit));
  }
  return BruteForce(inst).run();
}

Revenue single_price_revenue(const Instance& inst, Price p) {
  Revenue total = 0;
  for (NodeId v = 0; v < inst.num_nodes(); ++v) {
    if (inst.val(v) >= p) total += p * inst.demand(v);
  }
  return total;
}

Solution single_price_best(const Instance& inst) {
  require_normalized(inst, "single_price_best");
  const std::set<Price> candidates(inst.valuations().begin(),
                                   inst.valuations().end());
  Price best_price = inst.prices().min();
  Revenue best = -1;
  for (Price p : candidates) {
    const Revenue r = single_price_revenue(inst, p);
    if (r > best) {
      best = r;
      best_price = p;
    }
  }
  if (best < 0) best = 0;
  return Solution{PriceVector::constant(inst.num_nodes(), best_price), best,
                  "single-price"};
}

Rational harmonic(int r) {
  if (r < 1) throw ValidationError("harmonic number needs r >= 1");
  Rational sum = 0;
  for (int i = 1; i <= r; ++i) sum += Rational(1, i);
  return sum;
}

Rational price_sum_pk(const PriceSet& prices, std::size_t j) {
  if (j > prices.size()) {
    throw ValidationError("P_j requested past the number of prices");
  }
  Rational sum = 0;
  Price prev = 0;
  for (std::size_t i = 0; i < j; ++i) {
    sum += Rational(BigInt(prices[i] - prev), BigInt(prices[i]));
    prev = prices[i];
  }
  return sum;
}

Rational price_sum_pk(const PriceSet& prices) {
  return price_sum_pk(prices, prices.size());
}

}  // namespace ineqprice

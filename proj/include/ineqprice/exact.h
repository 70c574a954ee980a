#ifndef INEQPRICE_EXACT_H_
#define INEQPRICE_EXACT_H_

#include "ineqprice/instance.h"
#include "ineqprice/rational.h"

namespace ineqprice {

inline constexpr int kDefaultNodeLimit = 12;

// Exhaustive optimum over (P u {bottom})^n. Per node the options are tried in
// ascending price order with the discontinuity last, partial assignments that
// already break an edge are cut, and branches that cannot strictly beat the
// incumbent are cut. Among optimal vectors the lexicographically smallest one
// (bottom ordered after all prices) is returned. Tag "brute".
// Throws SizeLimitError when the instance has more than node_limit nodes.
Solution brute_force_opt(const Instance& inst,
                         int node_limit = kDefaultNodeLimit);

// p times the demand of every node valued at least p.
Revenue single_price_revenue(const Instance& inst, Price p);

// Best constant price vector. Only prices equal to some valuation are
// candidates; ties go to the smaller price. Requires a normalized instance.
// Tag "single-price".
Solution single_price_best(const Instance& inst);

// H_r = 1 + 1/2 + ... + 1/r, r >= 1.
Rational harmonic(int r);

// P_j = sum_{i<=j} (p_i - p_{i-1}) / p_i with p_0 = 0; j defaults to k.
Rational price_sum_pk(const PriceSet& prices);
Rational price_sum_pk(const PriceSet& prices, std::size_t j);

// Throws ValidationError unless every valuation is in the price set.
void require_normalized(const Instance& inst, const char* operation);

}  // namespace ineqprice

#endif  // INEQPRICE_EXACT_H_

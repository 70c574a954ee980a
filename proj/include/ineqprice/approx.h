#ifndef INEQPRICE_APPROX_H_
#define INEQPRICE_APPROX_H_

#include <optional>

#include "ineqprice/instance.h"
#include "ineqprice/rational.h"

namespace ineqprice {

// Two-price vertex-cover algorithm. Puts a discontinuity on a minimum vertex
// cover of the restricted subgraph and prices everyone else at their own
// valuation (revenue MAX - val(cover)), then returns whichever of that and the
// best single price earns more (the cover solution on ties). Requires exactly
// two prices and a normalized instance. Tag "vc".
Solution alg_two_prices(const Instance& inst);

// Valuations clamped to p2 and prices restricted to {p1, p2}. Edges and
// demands are unchanged.
Instance clamp_to_two_prices(const Instance& inst);

// General-k algorithm: runs alg_two_prices on the clamped instance and the
// best single price on the original one, returning the better (clamped branch
// on ties). The clamped branch's prices are reported as-is against the
// original instance. Requires k >= 2 and a normalized instance. Tag "general".
Solution alg_general_k(const Instance& inst);

// Worst-case ratio of the two-price algorithm for prices p1 < p2:
//   p2^2 / (2 p2^2 - p1 p2 - (p2 - p1) min(p1, p2 - p1 - alpha_star))
// alpha_star is capped at p2 - p1 - 1, the largest value a restricted edge can
// carry.
Rational two_price_ratio(Price p1, Price p2, Price alpha_star);

// 1 / (P_k - x) with x = P_2 - 1 / two_price_ratio(p1, p2, alpha_star); equals
// two_price_ratio itself when k = 2. Throws ValidationError when k < 2.
Rational guaranteed_ratio(const PriceSet& prices, Price alpha_star);

// 1 / (H_r - 1/4), the general-k guarantee for prices {1..k}, where r is the
// largest valuation. r below 2 is treated as 2.
Rational general_k_ratio(Price max_valuation);

// alpha_star of the restriction the algorithm for `tag` works on ("vc" uses
// the instance, "general" the clamped instance).
Price algorithm_alpha_star(const Instance& inst, const std::string& tag);

struct RatioReport {
  Rational guaranteed;
  Revenue achieved_numerator = 0;
  Revenue achieved_denominator = 0;  // OPT when known, else MAX

  Rational achieved() const;
};

// Proven ratio for the algorithm that produced `sol` ("single-price": 1 /
// min(H_n, P_k); "vc" and "general": guaranteed_ratio; "brute": 1), paired
// with the achieved revenue over `opt` when given, else over MAX.
RatioReport ratio_report(const Instance& inst, const Solution& sol,
                         std::optional<Revenue> opt);

}  // namespace ineqprice

#endif  // INEQPRICE_APPROX_H_

#ifndef INEQPRICE_TABLE_H_
#define INEQPRICE_TABLE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ineqprice/instance.h"
#include "ineqprice/rational.h"

namespace ineqprice {

// How the binding slack alpha* is chosen for a table row. Worst picks
// p2 - p1 - 1, the largest slack that still constrains.
struct AlphaChoice {
  enum class Kind { kZero, kWorst, kFixed } kind = Kind::kWorst;
  Price value = 0;

  static AlphaChoice parse(std::string_view text);
  std::string label() const;
  Price resolve(const PriceSet& prices) const;
};

struct TableRow {
  PriceSet prices;
  AlphaChoice alpha;
  Rational ratio_hk;                    // 1 / H_|P|
  std::optional<Rational> ratio_alg2;   // 1 / (H_k - 1/4), P = {1..k} only
  Rational ratio_thm45;                 // guaranteed_ratio(P, alpha*)
};

TableRow table_row(const PriceSet& prices, AlphaChoice alpha);

// The five reference price sets, each under worst and zero slack.
std::vector<TableRow> default_table();

// "1,2,3", "1,...,100" or "1..100". Throws ParseError.
PriceSet parse_price_spec(std::string_view text);
// Inverse of parse_price_spec; runs of four or more consecutive prices
// print as "a,...,b".
std::string format_price_spec(const PriceSet& prices);

// CSV with header prices,alpha,ratio_hk,ratio_alg2,ratio_thm45. Values are
// truncated to three places, or exact "p/q" when exact is set; "--" marks an
// absent Alg-2 entry.
std::string format_table_csv(const std::vector<TableRow>& rows, bool exact);
std::string format_table_text(const std::vector<TableRow>& rows, bool exact);

}  // namespace ineqprice

#endif  // INEQPRICE_TABLE_H_

#include "ineqprice/table.h"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <sstream>

#include "ineqprice/approx.h"
#include "ineqprice/errors.h"
#include "ineqprice/exact.h"

namespace ineqprice {

namespace {

Price parse_price(std::string_view text) {
  Price value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("malformed price '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::vector<Price> expand_range(Price lo, Price hi) {
  if (hi < lo) throw ParseError("descending price range");
  if (hi - lo > 1'000'000) throw ParseError("price range is too long");
  std::vector<Price> out;
  for (Price p = lo; p <= hi; ++p) out.push_back(p);
  return out;
}

std::string cell(const Rational& r, bool exact) {
  return exact ? to_string(r) : to_decimal_truncated(r, 3);
}

}  // namespace

AlphaChoice AlphaChoice::parse(std::string_view text) {
  if (text == "zero") return {Kind::kZero, 0};
  if (text == "worst") return {Kind::kWorst, 0};
  const Price value = parse_price(text);
  if (value < 0) throw ParseError("alpha must be nonnegative");
  return {Kind::kFixed, value};
}

std::string AlphaChoice::label() const {
  switch (kind) {
    case Kind::kZero:
      return "zero";
    case Kind::kWorst:
      return "worst";
    case Kind::kFixed:
      break;
  }
  return std::to_string(value);
}

Price AlphaChoice::resolve(const PriceSet& prices) const {
  switch (kind) {
    case Kind::kZero:
      return 0;
    case Kind::kWorst:
      return prices.size() < 2 ? 0 : prices[1] - prices[0] - 1;
    case Kind::kFixed:
      break;
  }
  return value;
}

TableRow table_row(const PriceSet& prices, AlphaChoice alpha) {
  if (prices.size() < 2) {
    throw ValidationError("table rows need at least two prices");
  }
  TableRow row{prices, alpha, 1 / harmonic(static_cast<int>(prices.size())),
               std::nullopt, guaranteed_ratio(prices, alpha.resolve(prices))};
  if (prices.is_initial_range()) {
    row.ratio_alg2 = general_k_ratio(prices.max());
  }
  return row;
}

std::vector<TableRow> default_table() {
  const std::vector<PriceSet> sets = {
      PriceSet::range(2), PriceSet::range(3), PriceSet::range(100),
      PriceSet({10, 20, 25}), PriceSet({3, 6, 10, 11})};
  std::vector<TableRow> rows;
  for (const PriceSet& p : sets) {
    rows.push_back(table_row(p, {AlphaChoice::Kind::kWorst, 0}));
    rows.push_back(table_row(p, {AlphaChoice::Kind::kZero, 0}));
  }
  return rows;
}

PriceSet parse_price_spec(std::string_view text) {
  if (text.empty()) throw ParseError("empty price set");
  std::vector<Price> prices;
  if (auto dots = text.find(".."); dots != std::string_view::npos &&
                                   text.find(',') == std::string_view::npos) {
    prices = expand_range(parse_price(text.substr(0, dots)),
                          parse_price(text.substr(dots + 2)));
  } else {
    const auto parts = split(text, ',');
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] == "...") {
        if (i == 0 || i + 1 == parts.size()) {
          throw ParseError("'...' needs a price on each side");
        }
        const auto tail =
            expand_range(prices.back() + 1, parse_price(parts[i + 1]));
        prices.insert(prices.end(), tail.begin(), tail.end());
        ++i;
        continue;
      }
      prices.push_back(parse_price(parts[i]));
    }
  }
  try {
    return PriceSet(std::move(prices));
  } catch (const ValidationError& e) {
    throw ParseError(std::string("bad price set: ") + e.what());
  }
}

std::string format_price_spec(const PriceSet& prices) {
  std::string out;
  const auto values = prices.values();
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i;
    while (j + 1 < values.size() && values[j + 1] == values[j] + 1) ++j;
    if (!out.empty()) out += ",";
    if (j - i >= 3) {
      out += std::to_string(values[i]) + ",...," + std::to_string(values[j]);
    } else {
      out += std::to_string(values[i]);
      for (std::size_t m = i + 1; m <= j; ++m) {
        out += "," + std::to_string(values[m]);
      }
    }
    i = j + 1;
  }
  return out;
}

std::string format_table_csv(const std::vector<TableRow>& rows, bool exact) {
  std::ostringstream out;
  out << "prices,alpha,ratio_hk,ratio_alg2,ratio_thm45\n";
  for (const TableRow& row : rows) {
    out << '"' << format_price_spec(row.prices) << "\"," << row.alpha.label()
        << ',' << cell(row.ratio_hk, exact) << ','
        << (row.ratio_alg2 ? cell(*row.ratio_alg2, exact) : "--") << ','
        << cell(row.ratio_thm45, exact) << '\n';
  }
  return out.str();
}

std::string format_table_text(const std::vector<TableRow>& rows, bool exact) {
  std::vector<std::vector<std::string>> cells = {
      {"P", "alpha", "1/H_k", "general-k", "guaranteed"}};
  for (const TableRow& row : rows) {
    cells.push_back({"{" + format_price_spec(row.prices) + "}",
                     row.alpha.label(), cell(row.ratio_hk, exact),
                     row.ratio_alg2 ? cell(*row.ratio_alg2, exact) : "--",
                     cell(row.ratio_thm45, exact)});
  }
  std::vector<std::size_t> width(5, 0);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      width[c] = std::max(width[c], line[c].size());
    }
  }
  std::ostringstream out;
  for (const auto& line : cells) {
    for (std::size_t c = 0; c + 1 < line.size(); ++c) {
      out << std::left << std::setw(static_cast<int>(width[c]) + 2) << line[c];
    }
    out << line.back() << '\n';
  }
  return out.str();
}

}  // namespace ineqprice

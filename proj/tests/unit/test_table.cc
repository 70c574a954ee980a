#include <doctest.h>

#include "ineqprice/errors.h"
#include "ineqprice/exact.h"
#include "ineqprice/table.h"

using namespace ineqprice;

TEST_CASE("price set specs") {
  CHECK(parse_price_spec("1,2,3") == PriceSet::range(3));
  CHECK(parse_price_spec("1,...,100") == PriceSet::range(100));
  CHECK(parse_price_spec("1..100") == PriceSet::range(100));
  CHECK(parse_price_spec("3,6,10,11") == PriceSet({3, 6, 10, 11}));
  CHECK(parse_price_spec("2,5,...,8") == PriceSet({2, 5, 6, 7, 8}));
  CHECK_THROWS_AS(parse_price_spec(""), ParseError);
  CHECK_THROWS_AS(parse_price_spec("2,1"), ParseError);
  CHECK_THROWS_AS(parse_price_spec("1,x"), ParseError);
  CHECK_THROWS_AS(parse_price_spec("...,4"), ParseError);
  CHECK(format_price_spec(PriceSet::range(100)) == "1,...,100");
  CHECK(format_price_spec(PriceSet::range(3)) == "1,2,3");
  CHECK(format_price_spec(PriceSet({3, 6, 10, 11})) == "3,6,10,11");
  CHECK(format_price_spec(PriceSet({1, 5, 6, 7, 8, 20})) == "1,5,...,8,20");
}

TEST_CASE("alpha choices") {
  const PriceSet p({3, 6, 10, 11});
  CHECK(AlphaChoice::parse("worst").resolve(p) == 2);
  CHECK(AlphaChoice::parse("zero").resolve(p) == 0);
  CHECK(AlphaChoice::parse("1").resolve(p) == 1);
  CHECK(AlphaChoice::parse("1").label() == "1");
  CHECK_THROWS_AS(AlphaChoice::parse("-1"), ParseError);
  CHECK_THROWS_AS(AlphaChoice::parse("most"), ParseError);
}

TEST_CASE("table rows") {
  const TableRow row = table_row(PriceSet({1, 2}), AlphaChoice::parse("zero"));
  CHECK(row.ratio_thm45 == Rational(4, 5));
  CHECK(row.ratio_alg2 == Rational(4, 5));
  CHECK(row.ratio_hk == Rational(2, 3));
  const TableRow hundred = table_row(PriceSet::range(100), AlphaChoice::parse("worst"));
  CHECK(to_decimal_truncated(*hundred.ratio_alg2, 3) == "0.202");
  CHECK(hundred.ratio_hk == 1 / harmonic(100));
  CHECK_FALSE(table_row(PriceSet({10, 20, 25}), AlphaChoice::parse("zero")).ratio_alg2);
  CHECK_THROWS_AS(table_row(PriceSet({5}), AlphaChoice::parse("zero")), ValidationError);
}

TEST_CASE("default table") {
  const auto rows = default_table();
  CHECK(rows.size() == 10);
  const std::string csv = format_table_csv(rows, false);
  CHECK(csv.rfind("prices,alpha,ratio_hk,ratio_alg2,ratio_thm45\n", 0) == 0);
  CHECK(csv.find("\"1,2\",zero,0.666,0.800,0.800\n") != std::string::npos);
  CHECK(csv.find("\"10,20,25\",worst,0.545,--,0.597\n") != std::string::npos);
  CHECK(csv.find("\"3,6,10,11\",zero,0.480,--,0.574\n") != std::string::npos);
  const std::string exact = format_table_csv(rows, true);
  CHECK(exact.find("\"10,20,25\",zero,6/11,--,20/29\n") != std::string::npos);
  CHECK(format_table_text(rows, false).find("{1,...,100}") != std::string::npos);
}

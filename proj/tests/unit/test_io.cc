#include <doctest.h>

#include "helpers.h"
#include "ineqprice/errors.h"
#include "ineqprice/generators.h"
#include "ineqprice/instance_io.h"
#include "ineqprice/rational.h"
#include "ineqprice/reductions.h"
#include "ineqprice/reductions_io.h"

using namespace ineqprice;
using ineqprice::testing::fig1;
using ineqprice::testing::random_spec;
using ineqprice::testing::vec;

TEST_CASE("instance round trip") {
  const Instance inst = fig1();
  const std::string text = serialize_instance(inst);
  CHECK(parse_instance(text) == inst);
  CHECK(serialize_instance(parse_instance(text)) == text);
  const Instance heavy(PriceSet({3, 9}), {9, 3}, {2, 5}, {{1, 0, 4, 1}});
  CHECK(parse_instance(serialize_instance(heavy)) == heavy);
}

TEST_CASE("instance parsing") {
  SUBCASE("demand defaults to one") {
    const Instance inst = parse_instance(
        R"({"prices":[1,2],"nodes":[{"id":1,"val":1},{"id":0,"val":2}],"edges":[]})");
    CHECK(inst.demand(0) == 1);
    CHECK(inst.demand(1) == 1);
    CHECK(inst.val(0) == 2);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(parse_instance("{"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"nodes":[],"edges":[]})"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"prices":[2,1],"nodes":[],"edges":[]})"),
                    ParseError);
    CHECK_THROWS_AS(
        parse_instance(
            R"({"prices":[1],"nodes":[{"id":0,"val":1}],"edges":[{"u":0,"v":3,"alpha_uv":0,"alpha_vu":0}]})"),
        ValidationError);
    CHECK_THROWS_AS(
        parse_instance(
            R"({"prices":[1],"nodes":[{"id":0,"val":1},{"id":1,"val":1}],"edges":[{"u":0,"v":1,"alpha_uv":-1,"alpha_vu":0}]})"),
        ValidationError);
    CHECK_THROWS_AS(
        parse_instance(
            R"({"prices":[1],"nodes":[{"id":0,"val":1},{"id":1,"val":1}],"edges":[{"u":0,"v":1,"alpha_uv":0}]})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_instance(R"({"prices":[1],"nodes":[{"id":2,"val":1}],"edges":[]})"),
        ValidationError);
  }
}

TEST_CASE("price vector documents") {
  const PriceVector pv = vec({2, std::nullopt, 1, 1});
  const std::string text = serialize_price_vector(pv);
  CHECK(parse_price_vector(text, 4) == pv);
  CHECK(parse_price_vector(text) == pv);
  CHECK(text.find("null") != std::string::npos);
  CHECK_THROWS_AS(parse_price_vector(text, 5), ValidationError);
  CHECK_THROWS_AS(parse_price_vector(R"({"assignment":{"0":"x"}})", 1), ParseError);
  CHECK_THROWS_AS(parse_price_vector("[]", 0), ParseError);
}

TEST_CASE("property: random instances survive a normalized round trip") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Instance inst = normalize(gen_random(random_spec(
        1 + static_cast<int>(seed % 10), PriceSet({2, 3, 7}), 5, seed,
        Rational(1, 3), 4)));
    const std::string text = serialize_instance(inst);
    CHECK(serialize_instance(parse_instance(text)) == text);
  }
}

TEST_CASE("rationals") {
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("1.5") == Rational(3, 2));
  CHECK(parse_rational(".25") == Rational(1, 4));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(-4, 2)) == "-2");
  CHECK(to_decimal_truncated(Rational(2, 3), 3) == "0.666");
  CHECK(to_decimal_truncated(Rational(-1, 3000), 3) == "0.000");
  CHECK(to_decimal_truncated(Rational(5, 2), 0) == "2");
}

TEST_CASE("terminal graph documents") {
  const TerminalGraph g = parse_terminal_graph(
      R"({"n":4,"edges":[[0,1],[0,2],[0,3]],"terminals":[1,2,3],"q":1})");
  CHECK(g.num_nodes == 4);
  CHECK(g.edges.size() == 3);
  CHECK(g.budget == 1);
  const TerminalGraph again = parse_terminal_graph(serialize_terminal_graph(g));
  CHECK(again.edges == g.edges);
  CHECK(again.terminals == g.terminals);
  CHECK_THROWS_AS(parse_terminal_graph(R"({"n":4,"edges":[],"terminals":[1,2]})"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_terminal_graph(R"({"n":4,"edges":[[1,2]],"terminals":[1,2,3]})"),
      ValidationError);
  CHECK_THROWS_AS(
      parse_terminal_graph(R"({"n":4,"edges":[],"terminals":[1,2,3],"q":5})"),
      ValidationError);
}

TEST_CASE("sidecar") {
  const TerminalGraph g{4, {{0, 1}, {0, 2}, {0, 3}}, {1, 2, 3}, 1};
  const std::string side = serialize_sidecar("tnc-to-pricing", tnc_to_pricing(g));
  CHECK(side.find("\"threshold\": 13824") != std::string::npos);
  CHECK(side.find("\"k\": 80") != std::string::npos);
  const std::string apx = serialize_sidecar("apx", apx_construct(g, Rational(3, 2)));
  CHECK(apx.find("\"c_r\": \"141119/141120\"") != std::string::npos);
  CHECK(apx.find("\"threshold\": null") != std::string::npos);
}

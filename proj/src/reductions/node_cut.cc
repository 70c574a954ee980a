#include <algorithm>
#include <array>
#include <limits>
#include <set>
#include <string>

#include "ineqprice/errors.h"
#include "ineqprice/reductions.h"
#include "reductions/bundles.h"

namespace ineqprice {

namespace {

BigInt power(const BigInt& base, unsigned exponent) {
  BigInt out = 1;
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) { return (a + b - 1) / b; }

std::int64_t to_int64(const BigInt& x, const char* what) {
  if (x > BigInt(std::numeric_limits<std::int64_t>::max())) {
    throw SizeLimitError(std::string(what) + " does not fit in 64 bits");
  }
  return x.convert_to<std::int64_t>();
}

// a satisfies the slack bound for maximum price k: 27 a^3 <= k, or, scaled,
// a^den <= k^(den - num) for eps = num/den.
bool alpha_within_bound(const BigInt& a, const BigInt& k, bool scaled,
                        const Rational& eps) {
  if (!scaled) return 27 * a * a * a <= k;
  const auto num = boost::multiprecision::numerator(eps).convert_to<unsigned>();
  const auto den = boost::multiprecision::denominator(eps).convert_to<unsigned>();
  return power(a, den) <= power(k, den - num);
}

BigInt largest_alpha(const BigInt& k, bool scaled, const Rational& eps) {
  BigInt lo = 0;
  BigInt hi = k;
  while (lo < hi) {
    BigInt mid = (lo + hi + 1) / 2;
    if (alpha_within_bound(mid, k, scaled, eps)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

}  // namespace

ReductionOutput tnc_to_pricing(const TerminalGraph& source,
                               const TncOptions& options) {
  validate_terminal_graph(source);
  if (!source.budget) throw ValidationError("tnc_to_pricing needs a budget q");
  const int q = *source.budget;

  TerminalGraph g = source;
  const bool padded = g.num_nodes % 2 == 1;
  if (padded) ++g.num_nodes;

  const BigInt n = g.num_nodes;
  BigInt scale = 1;
  unsigned c = 0;
  if (options.scaled) {
    if (options.epsilon <= 0 || options.epsilon >= 1) {
      throw ValidationError("scaled construction needs 0 < epsilon < 1");
    }
    if (boost::multiprecision::denominator(options.epsilon) > 1000) {
      throw ValidationError("epsilon denominator above 1000 is not supported");
    }
    const Rational four_over_eps = 4 / options.epsilon;
    c = ceil_div(boost::multiprecision::numerator(four_over_eps),
                 boost::multiprecision::denominator(four_over_eps))
            .convert_to<unsigned>() + 1;
    scale = power(n, c);
  }
  const BigInt n2 = n * n;
  const BigInt n3 = n2 * n;
  const BigInt bundle_size = n3 * scale;
  const BigInt k = (n3 + n2) * scale;
  const BigInt targets = (n - 3) + 3 * bundle_size;
  if (targets > options.size_cap || k > options.size_cap) {
    throw SizeLimitError("construction needs " + targets.str() + " nodes and " +
                         k.str() + " prices, above the cap of " +
                         std::to_string(options.size_cap));
  }

  BigInt alpha;
  if (options.alpha) {
    alpha = *options.alpha;
    if (alpha < 0 || !alpha_within_bound(alpha, k, options.scaled,
                                         options.epsilon)) {
      throw ValidationError("alpha " + alpha.str() +
                            " exceeds the slack bound for k = " + k.str());
    }
  } else {
    alpha = largest_alpha(k, options.scaled, options.epsilon);
  }

  std::array<BigInt, 3> bundle_val;
  for (int i = 0; i < 3; ++i) bundle_val[i] = (n3 + i * n2 / 2) * scale;
  BigInt threshold = (n - 3 - q) * n3 * scale;
  for (int i = 0; i < 3; ++i) threshold += bundle_size * bundle_val[i];

  internal::BundledGraph layout =
      internal::build_bundled_graph(g, to_int64(bundle_size, "bundle size"));
  const Price a = to_int64(alpha, "alpha");
  const Price top = to_int64(k, "k");
  std::vector<Price> vals(layout.num_targets, top);
  for (int i = 0; i < 3; ++i) {
    const Price v = to_int64(bundle_val[i], "bundle valuation");
    for (NodeId x : layout.bundle_map[g.terminals[i]]) vals[x] = v;
  }
  std::vector<Edge> edges;
  edges.reserve(layout.edges.size());
  for (auto [u, v] : layout.edges) edges.push_back({u, v, a, a});

  ReductionOutput out{
      Instance(PriceSet::range(top), std::move(vals), std::move(edges)),
      to_int64(threshold, "threshold"),
      std::move(layout.bundle_map),
      {g.terminals.begin(), g.terminals.end()},
      {}};
  out.params["n"] = Rational(n);
  out.params["q"] = Rational(q);
  out.params["k"] = Rational(k);
  out.params["bundle_size"] = Rational(bundle_size);
  out.params["alpha"] = Rational(alpha);
  out.params["padded"] = Rational(padded ? 1 : 0);
  out.params["scale"] = Rational(scale);
  if (options.scaled) {
    out.params["c"] = Rational(c);
    out.params["epsilon"] = options.epsilon;
  }
  return out;
}

PriceVector separator_to_prices(const TerminalGraph& g,
                                std::span<const NodeId> cut,
                                const ReductionOutput& red) {
  validate_terminal_graph(g);
  if (red.terminals.size() != 3 ||
      red.bundle_map.size() < static_cast<std::size_t>(g.num_nodes)) {
    throw ValidationError("reduction output does not come from this graph");
  }
  std::set<NodeId> unique_cut;
  for (NodeId v : cut) {
    if (v < 0 || v >= g.num_nodes) {
      throw ValidationError("cut node " + std::to_string(v) + " is not a node");
    }
    if (std::find(g.terminals.begin(), g.terminals.end(), v) !=
        g.terminals.end()) {
      throw ValidationError("cut contains terminal " + std::to_string(v));
    }
    unique_cut.insert(v);
  }
  if (g.budget && static_cast<int>(unique_cut.size()) > *g.budget) {
    throw ValidationError("cut of size " + std::to_string(unique_cut.size()) +
                          " exceeds the budget " + std::to_string(*g.budget));
  }
  if (!separates_nodes(g, cut)) {
    throw ValidationError("cut does not separate the terminals");
  }

  const Instance& h = red.instance;
  std::vector<bool> removed(h.num_nodes(), false);
  for (NodeId v : unique_cut) {
    for (NodeId x : red.bundle_map[v]) removed[x] = true;
  }
  const auto labels = internal::component_labels_of(h, removed);
  std::vector<int> component_bundle(h.num_nodes(), -1);
  std::vector<PriceChoice> component_price(h.num_nodes());
  for (int i = 0; i < 3; ++i) {
    for (NodeId x : red.bundle_map[red.terminals[i]]) {
      int& owner = component_bundle[labels[x]];
      if (owner >= 0 && owner != i) {
        throw std::logic_error("two terminal bundles share a component");
      }
      owner = i;
      component_price[labels[x]] = h.val(x);
    }
  }
  PriceVector pv = PriceVector::all_bottom(h.num_nodes());
  for (NodeId x = 0; x < h.num_nodes(); ++x) {
    if (removed[x]) continue;
    pv[x] = component_price[labels[x]] ? *component_price[labels[x]] : h.val(x);
  }
  return pv;
}

}  // namespace ineqprice

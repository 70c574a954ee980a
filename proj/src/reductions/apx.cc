#include <algorithm>
#include <string>

#include "ineqprice/errors.h"
#include "ineqprice/reductions.h"
#include "reductions/bundles.h"

namespace ineqprice {

namespace {

constexpr std::int64_t kApxSizeCap = 5'000'000;

// Terminal-bundle view of an APX instance.
struct Bundles {
  std::array<const std::vector<NodeId>*, 3> members{};
  std::array<Price, 3> value{};
  std::array<std::vector<NodeId>, 3> neighbours;
};

Bundles bundles_of(const ReductionOutput& red) {
  if (red.terminals.size() != 3) {
    throw ValidationError("reduction output has no terminal bundles");
  }
  Bundles b;
  for (int i = 0; i < 3; ++i) {
    const auto& members = red.bundle_map.at(red.terminals[i]);
    if (members.empty()) throw ValidationError("empty terminal bundle");
    b.members[i] = &members;
    b.value[i] = red.instance.val(members.front());
    for (const Arc& a : red.instance.neighbors(members.front())) {
      b.neighbours[i].push_back(a.to);
    }
  }
  return b;
}

void isolate(PriceVector& pv, const Bundles& b, int i) {
  for (NodeId x : *b.members[i]) pv[x] = b.value[i];
  for (NodeId y : b.neighbours[i]) pv[y] = std::nullopt;
}

}  // namespace

ReductionOutput apx_construct(const TerminalGraph& g, const Rational& r) {
  validate_terminal_graph(g);
  if (r <= 1) throw ValidationError("apx construction needs r > 1");
  const Rational eps = std::min(Rational(1, 2), Rational(r - 1));
  const Rational ratio = 42 / eps;
  const BigInt t_big = (boost::multiprecision::numerator(ratio) +
                        boost::multiprecision::denominator(ratio) - 1) /
                       boost::multiprecision::denominator(ratio);
  const BigInt bundle_big = 4 * t_big * g.num_nodes;
  const BigInt targets = 3 * bundle_big + (g.num_nodes - 3);
  if (targets > kApxSizeCap || t_big > kApxSizeCap) {
    throw SizeLimitError("apx construction needs " + targets.str() +
                         " nodes, above the cap of " +
                         std::to_string(kApxSizeCap));
  }
  const auto t = t_big.convert_to<Price>();
  const auto bundle_size = bundle_big.convert_to<std::int64_t>();

  internal::BundledGraph layout = internal::build_bundled_graph(g, bundle_size);
  std::vector<Price> vals(layout.num_targets, t);
  for (int i = 0; i < 3; ++i) {
    for (NodeId x : layout.bundle_map[g.terminals[i]]) vals[x] = t + i - 2;
  }
  std::vector<Edge> edges;
  edges.reserve(layout.edges.size());
  for (auto [u, v] : layout.edges) edges.push_back({u, v, 0, 0});

  ReductionOutput out{
      Instance(PriceSet::range(t), std::move(vals), std::move(edges)),
      std::nullopt,
      std::move(layout.bundle_map),
      {g.terminals.begin(), g.terminals.end()},
      {}};
  out.params["r"] = r;
  out.params["epsilon"] = eps;
  out.params["t"] = Rational(t_big);
  out.params["c_r"] = 1 - Rational(BigInt(1), 20 * t_big * t_big);
  out.params["bundle_size"] = Rational(bundle_big);
  out.params["n"] = Rational(g.num_nodes);
  return out;
}

PriceVector apx_canonicalize(const ReductionOutput& red, const PriceVector& pv) {
  const Instance& h = red.instance;
  if (!is_feasible(h, pv)) {
    throw ValidationError("price vector is infeasible for the constructed instance");
  }
  const Bundles b = bundles_of(red);
  PriceVector out = pv;
  const int max_steps = h.num_nodes() + 3;
  int steps = 0;
  auto tick = [&] {
    if (++steps > max_steps) {
      throw std::logic_error("canonicalization did not terminate");
    }
  };

  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < 3; ++i) {
      const auto& members = *b.members[i];
      if (std::all_of(members.begin(), members.end(),
                      [&](NodeId x) { return !out[x]; })) {
        isolate(out, b, i);
        changed = true;
        tick();
      }
    }
  }

  for (bool changed = true; changed;) {
    changed = false;
    std::vector<bool> removed(h.num_nodes(), false);
    for (NodeId x = 0; x < h.num_nodes(); ++x) removed[x] = !out[x];
    const auto labels = internal::component_labels_of(h, removed);
    auto shares_component = [&](int i, int j) {
      for (NodeId x : *b.members[i]) {
        if (labels[x] < 0) continue;
        for (NodeId y : *b.members[j]) {
          if (labels[y] == labels[x]) return true;
        }
      }
      return false;
    };
    for (int i = 0; i < 3 && !changed; ++i) {
      for (int j = i + 1; j < 3 && !changed; ++j) {
        if (!shares_component(i, j)) continue;
        const auto& members = *b.members[i];
        const bool i_priced_out =
            std::none_of(members.begin(), members.end(), [&](NodeId x) {
              return out[x] && *out[x] <= b.value[i];
            });
        isolate(out, b, i_priced_out ? i : j);
        changed = true;
        tick();
      }
    }
  }
  return out;
}

std::vector<NodeId> apx_extract(const ReductionOutput& red,
                                const PriceVector& pv) {
  const PriceVector canonical = apx_canonicalize(red, pv);
  const Instance& h = red.instance;
  std::vector<NodeId> separator;
  std::vector<bool> removed(h.num_nodes(), false);
  for (NodeId v = 0; v < static_cast<NodeId>(red.bundle_map.size()); ++v) {
    if (std::find(red.terminals.begin(), red.terminals.end(), v) !=
        red.terminals.end()) {
      continue;
    }
    const NodeId image = red.bundle_map[v].front();
    if (!canonical[image]) {
      separator.push_back(v);
      removed[image] = true;
    }
  }
  const auto labels = internal::component_labels_of(h, removed);
  std::vector<int> owner(h.num_nodes(), -1);
  for (int i = 0; i < 3; ++i) {
    for (NodeId x : red.bundle_map[red.terminals[i]]) {
      if (owner[labels[x]] >= 0 && owner[labels[x]] != i) {
        throw std::logic_error("extracted set does not separate the terminals");
      }
      owner[labels[x]] = i;
    }
  }
  return separator;
}

}  // namespace ineqprice

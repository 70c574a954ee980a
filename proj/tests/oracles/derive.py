"""Independent reference values for the C++ test suite.

Everything here is recomputed from first principles in plain Python
(itertools enumeration, fractions.Fraction) and shares no code with the
library. `--check FILE` compares against the frozen copy used by the tests.
"""

import argparse
import itertools
import json
import math
import sys
from fractions import Fraction


def opt(prices, vals, edges, demands=None):
    n = len(vals)
    demands = demands or [1] * n
    best = 0
    for choice in itertools.product(list(prices) + [None], repeat=n):
        ok = True
        for u, v, a_uv, a_vu in edges:
            pu, pv = choice[u], choice[v]
            if pu is None or pv is None:
                continue
            if pu - pv > a_uv or pv - pu > a_vu:
                ok = False
                break
        if not ok:
            continue
        rev = sum(d * p for p, val, d in zip(choice, vals, demands)
                  if p is not None and p <= val)
        best = max(best, rev)
    return best


def single_price(vals, demands=None):
    demands = demands or [1] * len(vals)
    return max(p * sum(d for v, d in zip(vals, demands) if v >= p)
               for p in set(vals))


def harmonic(r):
    return sum(Fraction(1, i) for i in range(1, r + 1))


def pk(prices, j=None):
    j = len(prices) if j is None else j
    total, prev = Fraction(0), 0
    for p in prices[:j]:
        total += Fraction(p - prev, p)
        prev = p
    return total


def rho(p1, p2, alpha):
    alpha = min(alpha, p2 - p1 - 1)
    return Fraction(p2 * p2, 2 * p2 * p2 - p1 * p2 - (p2 - p1) * min(p1, p2 - p1 - alpha))


def guaranteed(prices, alpha):
    x = pk(prices, 2) - 1 / rho(prices[0], prices[1], alpha)
    return 1 / (pk(prices) - x)


def fig1():
    return [2, 2, 1, 1], [(1, 2, 0, 0), (1, 3, 0, 0)]


def r_q(n, q):
    n3, n2 = n ** 3, n ** 2
    return (n - 3 - q) * n3 + sum(n3 * (n3 + i * n2 // 2) for i in range(3))


def derive():
    out = {}
    vals, edges = fig1()
    out["fig1_opt"] = opt([1, 2], vals, edges)
    out["fig1_single_price"] = single_price(vals)
    out["fig1_max"] = sum(vals)

    # The fig1 gadget plus an isolated node valued 3, P = {1,2,3}.
    out["general_k_example_opt"] = opt([1, 2, 3], vals + [3], edges)
    clamped = [min(v, 2) for v in vals + [3]]
    cover_revenue = sum(clamped) - 2  # cover {v2}
    sp = single_price(vals + [3])
    out["general_k_example_alg"] = max(cover_revenue, sp)

    out["two_node_opt"] = opt([10, 20], [20, 10], [(0, 1, 0, 0)])
    out["multi_demand_opt"] = opt([1, 2], [2, 1], [(0, 1, 0, 0)], [2, 1])
    # The same instance after expansion: copies 0,1 of u, copy 2 of w.
    out["multi_demand_reduced_opt"] = opt(
        [1, 2], [2, 2, 1],
        [(0, 1, 0, 0), (0, 2, 0, 0), (1, 2, 0, 0)])

    out["rq_n4_q1"] = r_q(4, 1)
    out["h_nodes_n4"] = 4 - 3 + 3 * 4 ** 3
    out["h_k_n4"] = 4 ** 3 + 4 ** 2
    out["h_nodes_n6"] = 6 - 3 + 3 * 6 ** 3
    out["rq_n6_q1"] = r_q(6, 1)
    out["h_alpha_n4"] = max(a for a in range(0, 10) if 27 * a ** 3 <= 80)

    eps = min(Fraction(1, 2), Fraction(3, 2) - 1)
    t = math.ceil(Fraction(42) / eps)
    out["apx_t"] = t
    out["apx_c_r"] = str(1 - Fraction(1, 20 * t * t))
    out["apx_bundle_n6"] = 4 * t * 6
    out["apx_nodes_n6"] = 3 * 4 * t * 6 + 3

    out["clique_harmonic3_opt"] = opt([2, 3, 6], [6, 3, 2],
                                      [(u, v, 6, 6) for u, v in itertools.combinations(range(3), 2)])
    out["clique_harmonic3_single"] = single_price([6, 3, 2])

    out["pk_10_20_25"] = str(pk([10, 20, 25]))
    out["pk_3_6_10_11"] = str(pk([3, 6, 10, 11]))
    out["h3"] = str(harmonic(3))

    table = {}
    for prices in ([1, 2], [1, 2, 3], list(range(1, 101)), [10, 20, 25], [3, 6, 10, 11]):
        key = ",".join(map(str, prices)) if len(prices) < 10 else "1..100"
        row = {"hk": str(1 / harmonic(len(prices))),
               "worst": str(guaranteed(prices, prices[1] - prices[0] - 1)),
               "zero": str(guaranteed(prices, 0))}
        if prices == list(range(1, len(prices) + 1)):
            row["alg2"] = str(1 / (harmonic(max(prices[-1], 2)) - Fraction(1, 4)))
        table[key] = row
    out["table"] = table

    # Subdividing a single edge between two non-terminals plus three isolated terminals.
    degrees = [1, 1, 0, 0, 0]
    out["tc_single_edge_nodes"] = sum(d + 1 for d in degrees) + 1
    return out


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--check", help="frozen JSON to compare against")
    args = parser.parse_args()
    values = derive()
    if not args.check:
        json.dump(values, sys.stdout, indent=1, sort_keys=True)
        print()
        return 0
    with open(args.check) as f:
        frozen = json.load(f)
    if frozen != values:
        for key in sorted(set(frozen) | set(values)):
            if frozen.get(key) != values.get(key):
                print(f"mismatch {key}: frozen={frozen.get(key)} derived={values.get(key)}")
        return 1
    print(f"{len(values)} reference values match")
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Compare the CLI's exhaustive solver with the plain enumerator in derive.py."""

import json
import subprocess
import sys

from derive import opt


def main(cli):
    mismatches = 0
    checked = 0
    for seed in range(60):
        n = 1 + seed % 7
        prices = ["1,2", "1,2,3", "2,5,6", "1,3,4,9"][seed % 4]
        gen = subprocess.run(
            [cli, "gen", "--family", "random", "--n", str(n), "--prices", prices,
             "--alpha-max", str(seed % 4), "--max-demand", str(1 + seed % 3),
             "--seed", str(seed)],
            check=True, capture_output=True, text=True).stdout
        doc = json.loads(gen)
        path = f"/tmp/ineqprice_cross_{seed}.json"
        with open(path, "w") as f:
            f.write(gen)
        report = json.loads(subprocess.run(
            [cli, "solve", "--in", path, "--algo", "brute"],
            check=True, capture_output=True, text=True).stdout)
        nodes = sorted(doc["nodes"], key=lambda x: x["id"])
        edges = [(e["u"], e["v"], e["alpha_uv"], e["alpha_vu"]) for e in doc["edges"]]
        expected = opt(doc["prices"], [x["val"] for x in nodes], edges,
                       [x.get("demand", 1) for x in nodes])
        checked += 1
        if expected != report["revenue"]:
            mismatches += 1
            print(f"seed {seed}: cli {report['revenue']} reference {expected}")
    print(f"{checked} instances, {mismatches} mismatches")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1]))

#!/usr/bin/env python3
"""Run all bundled experiments and print their reports.

Covers the three experiment suites exposed by the CLI:
  ladder      - rung sets extend to even subgraphs with exactly ceil(|S|/2)
                components, yet admit no covering circuit;
  gk-witness  - the three small edge-connectivity threshold witnesses;
  corollary   - feasibility for all (2k-1)-sets implies it for all 2k-sets,
                checked exhaustively on small generated instances.
"""
import sys
import tempfile
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from circuitcover.cli import main  # noqa: E402
from circuitcover.generators import ladder, two_cycles_bridge  # noqa: E402
from circuitcover.graphio import write_instance  # noqa: E402


def run() -> int:
    rc = 0
    print("== ladder experiment (r = 4, 5, 6) ==")
    rc |= main(["experiment", "ladder", "--r", "4", "5", "6", "--json"])
    print("== threshold witnesses ==")
    rc |= main(["experiment", "gk-witness", "--json"])
    print("== parity monotonicity spot check ==")
    with tempfile.TemporaryDirectory() as tmp:
        paths = []
        for inst in (ladder(3), ladder(4), two_cycles_bridge(3, 3)):
            gpath, _ = write_instance(inst, tmp)
            paths.append(str(gpath))
        rc |= main(["experiment", "corollary", "--graphs", *paths, "--json"])
    return rc


if __name__ == "__main__":
    sys.exit(run())

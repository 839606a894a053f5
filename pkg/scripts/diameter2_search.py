"""Classify connected circulants of diameter 2 with four distinct eigenvalues.

Each graph is sorted into the common-neighbour cases and the verdict is
compared with the direct Hadamard-closure test.
"""
import argparse
import time
from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations

from qpgraph.algebra import is_hadamard_closed
from qpgraph.graph import circulant, distance_data, is_connected
from qpgraph.spectral import count_distinct_eigenvalues
from qpgraph.structure import Diameter2Class, diameter2_four_ev_check


@dataclass(frozen=True)
class SearchConfig:
    min_n: int = 5
    max_n: int = 16


def search(cfg: SearchConfig):
    found = defaultdict(list)
    mismatches = []
    for n in range(cfg.min_n, cfg.max_n + 1):
        steps = range(1, n // 2 + 1)
        for k in range(1, len(steps) + 1):
            for s in combinations(steps, k):
                g = circulant(n, s)
                if not is_connected(g) or distance_data(g).diameter != 2:
                    continue
                if count_distinct_eigenvalues(g.adjacency) != 4:
                    continue
                cls = diameter2_four_ev_check(g)
                closed = is_hadamard_closed(g)
                found[cls].append((n, s))
                if (cls is not Diameter2Class.NEITHER) != closed:
                    mismatches.append((n, s, cls, closed))
    return found, mismatches


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--min-n", type=int, default=SearchConfig.min_n)
    ap.add_argument("--max-n", type=int, default=SearchConfig.max_n)
    args = ap.parse_args()
    t0 = time.perf_counter()
    found, mismatches = search(SearchConfig(args.min_n, args.max_n))
    for cls in Diameter2Class:
        if found[cls]:
            shown = ", ".join(f"C({n},{set(s)})" for n, s in found[cls][:8])
            print(f"{cls.value:8s} {len(found[cls]):3d}  {shown}")
    print(f"mismatches with closure: {len(mismatches)}")
    for m in mismatches:
        print("  ", m)
    print(f"{time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()

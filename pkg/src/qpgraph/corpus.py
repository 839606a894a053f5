"""Seeded test corpus: named small graphs plus random connected graphs and circulants."""
from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import (
    Graph,
    chordal_ring_12_4,
    circulant,
    complete,
    cycle,
    from_edge_list,
    is_connected,
    kronecker,
    petersen,
    triangular,
)


@dataclass(frozen=True)
class CorpusConfig:
    seed: int = 20240611
    max_n: int = 12               # K_n and C_n up to this order
    random_graphs: int = 50
    random_max_n: int = 10
    random_circulants: int = 20
    circulant_max_n: int = 16


def example_graphs() -> list[Graph]:
    return [kronecker(complete(2), triangular(4)), chordal_ring_12_4(), circulant(7, (1, 2))]


def random_connected_graph(rng: random.Random, max_n: int) -> Graph:
    while True:
        n = rng.randint(2, max_n)
        p = rng.uniform(0.25, 0.8)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = from_edge_list(n, edges, name=f"gnp({n},{p:.2f})")
        if is_connected(g):
            return g


def random_circulant(rng: random.Random, max_n: int) -> Graph:
    while True:
        n = rng.randint(5, max_n)
        steps = [s for s in range(1, n // 2 + 1) if rng.random() < 0.4]
        if not steps:
            continue
        g = circulant(n, steps)
        if is_connected(g):
            return g


def corpus(cfg: CorpusConfig = CorpusConfig()) -> list[Graph]:
    rng = random.Random(cfg.seed)
    out = example_graphs()
    out += [complete(n) for n in range(2, cfg.max_n + 1)]
    out += [cycle(n) for n in range(3, cfg.max_n + 1)]
    out.append(petersen())
    out += [random_connected_graph(rng, cfg.random_max_n) for _ in range(cfg.random_graphs)]
    out += [random_circulant(rng, cfg.circulant_max_n) for _ in range(cfg.random_circulants)]
    return out

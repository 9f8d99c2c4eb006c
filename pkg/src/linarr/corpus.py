"""Seeded random arrangements for property checks and experiments."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .arrangement import Arrangement, parse_line


@dataclass(frozen=True)
class CorpusConfig:
    size: int = 50
    d_min: int = 4
    d_max: int = 10
    height: int = 3
    # fraction drawn from the 13 lines of height one, which produces many triple points
    special_fraction: float = 0.5
    seed: int = 20240601


def _height_one_lines():
    out = set()
    for a in (-1, 0, 1):
        for b in (-1, 0, 1):
            for c in (-1, 0, 1):
                if (a, b, c) != (0, 0, 0):
                    out.add(parse_line(a, b, c))
    return sorted(out)


def random_arrangement(rng: random.Random, d: int, height: int, special: bool) -> Arrangement:
    pool = _height_one_lines() if special else None
    while True:
        if special:
            lines = rng.sample(pool, d)
        else:
            lines = set()
            while len(lines) < d:
                t = [rng.randint(-height, height) for _ in range(3)]
                if any(t):
                    lines.add(parse_line(*t))
            lines = sorted(lines)
            rng.shuffle(lines)
        A = Arrangement(tuple(lines))
        if A.is_essential:
            return A


def random_arrangements(cfg: CorpusConfig = CorpusConfig()) -> list[Arrangement]:
    rng = random.Random(cfg.seed)
    out = []
    for i in range(cfg.size):
        d = rng.randint(cfg.d_min, cfg.d_max)
        special = rng.random() < cfg.special_fraction and d <= 13
        out.append(random_arrangement(rng, d, cfg.height, special))
    return out

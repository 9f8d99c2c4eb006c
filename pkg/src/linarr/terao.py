"""Numerical resolution candidates for a fixed lattice, and the filters that prune them.

A lattice with pi(A, t) = (1+t)(1+at)(1+(d-1-a)t) and maximal Mobius value M
constrains the minimal free resolution of D0.  :func:`enumerate_candidates`
lists every pair of degree multisets compatible with those constraints; the
filters then remove candidates that cannot belong to a non-free realization.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from .arrangement import Arrangement, PreconditionError, max_mu, poincare


class InapplicableFilter(ValueError):
    pass


def _c2(n: int) -> int:
    return comb(n, 2) if n >= 2 else 0


@dataclass(frozen=True)
class LatticeSummary:
    d: int
    a: int
    M: int

    @property
    def deg_j(self) -> int:
        return (self.d - 1) ** 2 - self.a * (self.d - 1 - self.a)

    @classmethod
    def from_arrangement(cls, A: Arrangement) -> "LatticeSummary":
        pi = poincare(A)
        if pi.factor_roots is None:
            raise PreconditionError(f"Poincare polynomial {pi} does not factor over the integers")
        return cls(A.d, min(pi.factor_roots), max_mu(A))


@dataclass(frozen=True, order=True)
class Candidate:
    alphas: tuple[int, ...]
    betas: tuple[int, ...] = ()

    @property
    def m(self) -> int:
        return len(self.alphas)

    @property
    def is_free(self) -> bool:
        return not self.betas

    @property
    def regularity(self) -> int:
        r = max(self.alphas)
        return max(r, max(self.betas) - 1) if self.betas else r

    def __str__(self):
        return f"alpha={list(self.alphas)} beta={list(self.betas)}"


def violated_constraints(c: Candidate, d: int, a: int, M: int) -> list[int]:
    """Numbers (1-6) of the lattice constraints the candidate fails."""
    al, be = c.alphas, c.betas
    bad = []
    if not (2 <= len(al) <= d - 1 and len(be) == len(al) - 2):
        bad.append(1)
    if sum(al) - sum(be) != d - 1:
        bad.append(2)
    lhs = _c2(d - 2) - sum(_c2(x - 1) for x in al) + sum(_c2(x - 1) for x in be) + 1
    if lhs != a * (d - 1 - a):
        bad.append(3)
    if not all(2 <= x <= d - 2 for x in al) or not all(3 <= x <= d - 1 for x in be):
        bad.append(4)
    if be and len(al) >= 2 and be[0] < al[1] + 1:
        bad.append(5)
    if not any(x >= M for x in al):
        bad.append(6)
    return bad


def _multisets(lo: int, hi: int, size: int, total: int | None = None):
    """Ascending tuples of the given size from [lo, hi], optionally with a fixed sum."""
    if size == 0:
        if total in (None, 0):
            yield ()
        return
    for first in range(lo, hi + 1):
        if total is not None and (first * size > total or hi * size < total):
            continue
        rest = None if total is None else total - first
        for tail in _multisets(first, hi, size - 1, rest):
            yield (first,) + tail


@lru_cache(maxsize=None)
def _betas(lo: int, hi: int, size: int, total: int, weight: int) -> tuple[tuple[int, ...], ...]:
    """Ascending tuples from [lo, hi] with the given size, sum and sum of C(x-1, 2)."""
    if size == 0:
        return ((),) if total == 0 and weight == 0 else ()
    out = []
    for first in range(lo, hi + 1):
        if first * size > total or hi * size < total or _c2(first - 1) * size > weight:
            continue
        for tail in _betas(first, hi, size - 1, total - first, weight - _c2(first - 1)):
            out.append((first,) + tail)
    return tuple(out)


def enumerate_candidates(d: int, a: int, M: int) -> list[Candidate]:
    """All numerically possible resolutions for the lattice data (d, a, M), sorted."""
    if d < 4 or not 1 <= a <= (d - 1) / 2 or M < 1:
        raise ValueError(f"need d >= 4, 1 <= a <= (d-1)/2, M >= 1; got {(d, a, M)}")
    target = a * (d - 1 - a)
    out = []
    for m in range(2, d):
        for al in _multisets(2, d - 2, m):
            if al[-1] < M:
                continue
            beta_sum = sum(al) - (d - 1)
            # constraint (3) fixes sum C(beta-1, 2)
            need = target - 1 - _c2(d - 2) + sum(_c2(x - 1) for x in al)
            lo = max(3, al[1] + 1) if m > 2 else 3
            if beta_sum < 0 or need < 0:
                continue
            out.extend(Candidate(al, be) for be in _betas(lo, d - 1, m - 2, beta_sum, need))
    return sorted(out, key=lambda c: (c.m, c.alphas, c.betas))


def _is_balanced_lattice(d: int, a: int) -> bool:
    return d % 2 == 1 and 2 * a == d - 1


def filter_balanced_stability(cands, d: int, a: int | None = None) -> list[Candidate]:
    """Keep the free candidate and non-free ones with generators on both sides of (d-1)/2."""
    if d % 2 == 0 or (a is not None and 2 * a != d - 1):
        raise InapplicableFilter("balanced-stability filter needs d odd and a = (d-1)/2")
    half = (d - 1) / 2
    return [c for c in cands
            if c.is_free or (min(c.alphas) < half and max(c.alphas) > half)]


def filter_second_syzygy(cands) -> list[Candidate]:
    """Drop candidates with two lowest generators in degree <= q but >= 2 relations in degree q+1.

    Relations in degree q+1 only involve generators of degree <= q; on two
    generators the relation module is cyclic, so at most one such relation.
    """
    def possible(c: Candidate) -> bool:
        for q in set(c.alphas):
            if sum(1 for x in c.alphas if x <= q) == 2 and c.betas.count(q + 1) >= 2:
                return False
        return True
    return [c for c in cands if possible(c)]


@dataclass(frozen=True)
class ChainSpec:
    """Regularity of a starting arrangement and the |A''| counts of successive additions."""

    base_regularity: int
    steps: tuple[int, ...] = ()

    def __post_init__(self):
        if self.base_regularity < 1 or any(s < 1 for s in self.steps):
            raise ValueError("chain values must be positive")

    @classmethod
    def parse(cls, text: str) -> "ChainSpec":
        """``"BASE;S1,S2,..."``."""
        base, _, rest = text.partition(";")
        steps = tuple(int(s) for s in rest.split(",") if s.strip())
        return cls(int(base), steps)


def chain_bound(chain: ChainSpec) -> int:
    r = chain.base_regularity
    for s in chain.steps:
        r = max(r + 1, s - 1)
    return r


def filter_regularity(cands, bound: int) -> list[Candidate]:
    if bound < 1:
        raise ValueError("regularity bound must be positive")
    return [c for c in cands if c.regularity <= bound]


@dataclass(frozen=True)
class TeraoVerdict:
    summary: LatticeSummary
    survivors: tuple[Candidate, ...]
    trace: tuple[tuple[str, int], ...]
    chain: ChainSpec | None = None
    notes: tuple[str, ...] = field(default=())

    @property
    def forced_free(self) -> bool:
        return len(self.survivors) == 1 and self.survivors[0].is_free


def verdict(summary: LatticeSummary, chain: ChainSpec | None = None) -> TeraoVerdict:
    d, a = summary.d, summary.a
    cands = enumerate_candidates(d, a, summary.M)
    trace = [("enumerate", len(cands))]
    notes = []
    if _is_balanced_lattice(d, a):
        cands = filter_balanced_stability(cands, d, a)
        trace.append(("balanced_stability", len(cands)))
    cands = filter_second_syzygy(cands)
    trace.append(("second_syzygy", len(cands)))
    if chain is not None:
        cands = filter_regularity(cands, chain_bound(chain))
        trace.append(("regularity", len(cands)))
        notes.append("chain data is taken as given for every realization of the lattice")
    return TeraoVerdict(summary, tuple(cands), tuple(trace), chain, tuple(notes))

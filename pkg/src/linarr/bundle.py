"""The rank-2 bundle attached to D0: Chern data, stability, splitting types, jump lines."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable

from . import poly
from .arrangement import (Arrangement, Line, PreconditionError, canonical_triple, cross,
                          jacobian_degree, line_through, parse_line, restriction_count,
                          singular_points)
from .derivations import InvariantViolation, graded_piece, hilbert_table, resolve
from .exactlin import (Subspace, complement_equations, kernel, monomials, nullspace, primitive,
                       rank, span)

STABLE = "stable"
SEMISTABLE = "semistable-not-stable"
UNSTABLE = "unstable"


class UnstableBundle(PreconditionError):
    """Jump lines are only defined here for semistable bundles."""


class NoCurveError(ValueError):
    pass


# --------------------------------------------------------------------------
# Chern data and stability
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class ChernData:
    c1: int
    c2: int
    k: int

    @property
    def c1n(self) -> int:
        return self.c1 + 2 * self.k

    @property
    def c2n(self) -> int:
        return self.c2 + self.k * self.c1 + self.k ** 2


def normalization_twist(d: int) -> int:
    """k with c1(D(k)) in {0, -1} for c1 = -(d-1)."""
    return (d - 1) // 2 if d % 2 else (d - 2) // 2


def chern(A: Arrangement) -> ChernData:
    d = A.d
    return ChernData(-(d - 1), (d - 1) ** 2 - jacobian_degree(A), normalization_twist(d))


@dataclass(frozen=True)
class StabilityReport:
    verdict: str
    witness_degree: int | None
    bogomolov_passes: bool

    @property
    def semistable(self) -> bool:
        return self.verdict != UNSTABLE


def _verdict(A: Arrangement) -> tuple[str, int | None]:
    d = A.d
    k = normalization_twist(d)
    h = hilbert_table(A, k)
    if h[k] == 0:
        return STABLE, None
    if d % 2 and (k == 0 or h[k - 1] == 0):
        return SEMISTABLE, None
    return UNSTABLE, next(t for t, x in enumerate(h) if x)


def stability(A: Arrangement) -> StabilityReport:
    """Stable iff (D0)_k = 0; for odd d semistable iff (D0)_{k-1} = 0."""
    verdict, witness = _verdict(A)
    bogomolov = 4 * jacobian_degree(A) < 3 * (A.d - 1) ** 2
    if verdict == STABLE and not bogomolov:
        raise InvariantViolation("stable bundle failing the Bogomolov inequality")
    return StabilityReport(verdict, witness, bogomolov)


def stability_sufficient(A: Arrangement, h: int) -> str:
    """First clause of the deletion stability criteria that applies, or ``"none"``."""
    d = A.d
    s = restriction_count(A, A.lines[h])
    deleted = A.delete(h)
    if not deleted.is_essential:
        return "none"
    v = _verdict(deleted)[0]
    fired = "none"
    if d % 2:
        if v == STABLE and 2 * s > d + 1:
            fired = "stable-1"
        elif v != UNSTABLE and 2 * s > d - 1:
            fired = "semistable-2"
    elif v != UNSTABLE and 2 * s > d:
        fired = "stable-3"
    exact = _verdict(A)[0]
    if fired.startswith("stable") and exact != STABLE:
        raise InvariantViolation(f"clause {fired} fired but the bundle is {exact}")
    if fired == "semistable-2" and exact == UNSTABLE:
        raise InvariantViolation("clause semistable-2 fired but the bundle is unstable")
    return fired


# --------------------------------------------------------------------------
# splitting types
# --------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class SplittingType:
    a1: int
    a2: int

    def __post_init__(self):
        if self.a1 < self.a2:
            raise ValueError("splitting type must have a1 >= a2")


def line_parametrization(L: Line) -> tuple[tuple[int, int, int], tuple[int, int, int]]:
    """Two integer points spanning L, smallest height first, ties broken lexicographically."""
    cands = sorted({canonical_triple(*cross(L.coeffs, e))
                    for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))
                    if any(cross(L.coeffs, e))},
                   key=lambda p: (max(map(abs, p)), p))
    p = cands[0]
    q = next(c for c in cands[1:] if any(cross(p, c)))
    return p, q


def _binary_mul(f: list[int], g: list[int]) -> list[int]:
    out = [0] * (len(f) + len(g) - 1)
    for i, u in enumerate(f):
        if u:
            for j, v in enumerate(g):
                out[i + j] += u * v
    return out


def restriction_matrix(p, q, t: int) -> list[list[int]]:
    """R_t -> binary forms of degree t via (x, y, z) = s*p + u*q; rows index u-powers."""
    # powers[var][e] = (p_var s + q_var u)^e as a coefficient list in u
    powers = []
    for var in range(3):
        pw = [[1]]
        for _ in range(t):
            pw.append(_binary_mul(pw[-1], [p[var], q[var]]))
        powers.append(pw)
    mons = monomials(t)
    rows = [[0] * len(mons) for _ in range(t + 1)]
    for col, (i, j, k) in enumerate(mons):
        f = _binary_mul(_binary_mul(powers[0][i], powers[1][j]), powers[2][k])
        for r, c in enumerate(f):
            rows[r][col] = c
    return rows


def _restrict(vecs: list[list[int]], rho: list[list[int]], t: int) -> list[list[int]]:
    n = comb(t + 2, 2)
    out = []
    for v in vecs:
        w = []
        for blk in range(3):
            comp = v[blk * n:(blk + 1) * n]
            w.extend(sum(r * c for r, c in zip(row, comp)) for row in rho)
        out.append(w)
    return out


def _saturate_down(N: Subspace, t: int) -> Subspace:
    """{v in S_{t-1}^3 : s v in N and u v in N}, N inside S_t^3."""
    E = complement_equations(N)
    width = t + 1
    rows = []
    for shift in (0, 1):  # multiplication by s keeps the u-power, by u raises it
        for e in E:
            rows.append([e[blk * width + j + shift] for blk in range(3) for j in range(t)])
    return kernel(rows)


def saturation_dims(A: Arrangement, L: Line, param=None) -> dict[int, int]:
    """dim of the saturated restriction module in each degree 0..d."""
    d = A.d
    p, q = param or line_parametrization(L)
    h = hilbert_table(A, d)
    restricted = {}
    for t in (d - 1, d):
        rho = restriction_matrix(p, q, t)
        vecs = _restrict(graded_piece(A, t).space.integer_basis(), rho, t)
        restricted[t] = span(vecs, 3 * (t + 1)) if vecs else Subspace(3 * (t + 1), ())
        if restricted[t].dim != h[t] - h[t - 1]:
            raise InvariantViolation(f"D0/lD0 in degree {t} has the wrong dimension")
    if restricted[d].dim - restricted[d - 1].dim != 2:
        raise InvariantViolation("restricted module not yet linear at the start degree")
    dims = {d: restricted[d].dim}
    N = restricted[d]
    for t in range(d, 0, -1):
        N = _saturate_down(N, t)
        dims[t - 1] = N.dim
        if t - 1 == d - 1 and not all(v in N for v in restricted[d - 1].basis):
            raise InvariantViolation("restricted module is not contained in its saturation")
        if N.dim == 0:
            break
    for t in range(0, d + 1):
        dims.setdefault(t, 0)
    return dict(sorted(dims.items()))


def splitting_type(A: Arrangement, L: Line, param=None) -> SplittingType:
    """(a1, a2) with D|_L = O(a1) + O(a2)."""
    d = A.d
    if not isinstance(L, Line):
        L = parse_line(*L)
    res = resolve(A)
    if res.is_free:
        lo, hi = res.alphas
        return SplittingType(-lo, -hi)
    dims = saturation_dims(A, L, param)
    g1 = min(t for t, n in dims.items() if n)
    g2 = 2 * d - g1 + 2 - dims[d]
    st = SplittingType(-g1, -g2)
    if st.a1 + st.a2 != -(d - 1):
        raise InvariantViolation(f"splitting {st} does not sum to -(d-1)")
    expected = {t: max(0, t - g1 + 1) + max(0, t - g2 + 1) for t in dims}
    if expected != dims:
        raise InvariantViolation("saturated restriction is not free of rank two")
    return st


# --------------------------------------------------------------------------
# jump lines
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class JumpReport:
    line: Line
    in_arrangement: bool
    restriction_count: int
    splitting: SplittingType
    is_jump: bool
    threshold_fired: bool


def threshold_fires(d: int, in_arrangement: bool, s: int) -> bool:
    """Combinatorial sufficient conditions for L to be a jump line."""
    if in_arrangement:
        return 2 * s >= d + 3 if d % 2 else 2 * s >= d + 4
    return d - 1 >= 2 * s if d % 2 else d - 2 >= 2 * s


def is_jump_line(A: Arrangement, L: Line) -> JumpReport:
    if not isinstance(L, Line):
        L = parse_line(*L)
    if not stability(A).semistable:
        raise UnstableBundle("bundle is unstable; jump lines are not defined")
    k = normalization_twist(A.d)
    inside = L in A.lines
    s = restriction_count(A, L)
    st = splitting_type(A, L)
    jump = st.a1 >= 1 - k
    fired = threshold_fires(A.d, inside, s)
    if fired and not jump:
        raise InvariantViolation(f"jump threshold fired for {L} but the splitting is balanced")
    return JumpReport(L, inside, s, st, jump, fired)


def candidate_lines(A: Arrangement, height: int) -> list[Line]:
    """Arrangement lines, lines joining singular points, and all lines of small height."""
    cands = set(A.lines)
    pts = [sp.point for sp in singular_points(A)]
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            cands.add(line_through(pts[i], pts[j]))
    rng = range(-height, height + 1)
    for a in rng:
        for b in rng:
            for c in rng:
                if (a, b, c) != (0, 0, 0):
                    cands.add(parse_line(a, b, c))
    return sorted(cands)


def scan_lines(A: Arrangement, height: int = 2) -> list[JumpReport]:
    """Reports for every candidate line (jumping or not), in canonical line order."""
    return [is_jump_line(A, L) for L in candidate_lines(A, height)]


def jump_scan(A: Arrangement, height: int = 2) -> list[JumpReport]:
    """Jump lines among the candidates; an empty result is not a completeness proof."""
    return [r for r in scan_lines(A, height) if r.is_jump]


# --------------------------------------------------------------------------
# curves in the dual plane
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class DualCurve:
    """A form in dual coordinates; the line ax+by+cz=0 is the dual point (a:b:c)."""

    degree: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != comb(self.degree + 2, 2) or not any(self.coeffs):
            raise ValueError("coefficients must be a nonzero vector over the monomials")

    def __call__(self, point) -> int:
        return poly.evaluate(poly.from_vector(self.coeffs, self.degree), point)

    def __str__(self):
        parts = []
        for c, m in zip(self.coeffs, monomials(self.degree)):
            if not c:
                continue
            mono = "".join(v + (f"^{e}" if e > 1 else "") for v, e in zip("xyz", m) if e)
            mag = "" if abs(c) == 1 and mono else str(abs(c))
            parts.append(("-" if c < 0 else "+") + mag + mono)
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s


def dual_point(L: Line) -> tuple[int, int, int]:
    return L.coeffs


def curve_contains(C: DualCurve, L: Line) -> bool:
    return C(dual_point(L)) == 0


def fit_dual_curve(points: Iterable, degree: int, non_members: Iterable = ()):
    """Forms of the given degree through ``points``.

    A one-dimensional solution space gives a single :class:`DualCurve`.
    Otherwise the canonical (RREF) basis of the solutions is filtered by
    dropping members that vanish at any of ``non_members``: one survivor is
    returned on its own, several survivors as a tuple, and if none survive the
    whole basis is returned as a tuple.
    """
    if degree < 1:
        raise ValueError("degree must be at least 1")
    points = [tuple(p.coeffs) if isinstance(p, Line) else tuple(p) for p in points]
    non_members = [tuple(p.coeffs) if isinstance(p, Line) else tuple(p) for p in non_members]
    mons = monomials(degree)
    rows = [[x ** i * y ** j * z ** k for (i, j, k) in mons] for (x, y, z) in points]
    if rows:
        sol = nullspace(rows)
    else:
        sol = Subspace(len(mons), tuple(tuple(int(i == j) for j in range(len(mons)))
                                        for i in range(len(mons))))
    if sol.dim == 0:
        raise NoCurveError(f"no curve of degree {degree} through {len(points)} points")
    basis = [DualCurve(degree, tuple(primitive(v))) for v in sol.basis]
    if len(basis) == 1:
        return basis[0]
    survivors = [C for C in basis if all(C(p) != 0 for p in non_members)]
    if len(survivors) == 1:
        return survivors[0]
    return tuple(survivors or basis)


def interpolation_rank(points, degree: int) -> int:
    mons = monomials(degree)
    return rank([[x ** i * y ** j * z ** k for (i, j, k) in mons] for (x, y, z) in points])

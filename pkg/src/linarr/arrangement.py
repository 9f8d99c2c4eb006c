"""Line arrangements in P^2: lattice data, Poincare polynomial, deletion/restriction."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd, isqrt, lcm


class InvalidArrangement(ValueError):
    """Zero coefficients, repeated lines, or a configuration that is not allowed."""


class PreconditionError(ValueError):
    """An operation was called outside its domain (pencil, too few lines...)."""


def canonical_triple(a, b, c) -> tuple[int, int, int]:
    """Primitive integer representative of a projective class, first nonzero > 0."""
    vals = [Fraction(a), Fraction(b), Fraction(c)]
    den = lcm(*(v.denominator for v in vals))
    ints = [int(v * den) for v in vals]
    if not any(ints):
        raise InvalidArrangement("zero triple does not define a projective object")
    g = gcd(*ints)
    if next(x for x in ints if x) < 0:
        g = -g
    return tuple(x // g for x in ints)


def cross(u, v) -> tuple[int, int, int]:
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def dot(u, v) -> int:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


_VARS = "xyz"


@dataclass(frozen=True, order=True)
class Line:
    """The line a*x + b*y + c*z = 0, stored canonically."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if canonical_triple(self.a, self.b, self.c) != self.coeffs:
            raise InvalidArrangement(f"{self.coeffs} is not canonical; use parse_line")

    @property
    def coeffs(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    @property
    def height(self) -> int:
        return max(abs(self.a), abs(self.b), abs(self.c))

    def __call__(self, point) -> int:
        return dot(self.coeffs, point)

    def __str__(self):
        terms = []
        for coef, var in zip(self.coeffs, _VARS):
            if coef == 0:
                continue
            mag = "" if abs(coef) == 1 else str(abs(coef))
            sign = "-" if coef < 0 else "+"
            terms.append((sign, mag + var))
        s = "".join(sg + t for sg, t in terms)
        return s[1:] if s.startswith("+") else s


def parse_line(a, b, c) -> Line:
    return Line(*canonical_triple(a, b, c))


def intersection(l1: Line, l2: Line) -> tuple[int, int, int]:
    """Canonical point where two distinct lines meet."""
    return canonical_triple(*cross(l1.coeffs, l2.coeffs))


def line_through(p, q) -> Line:
    return Line(*canonical_triple(*cross(p, q)))


@dataclass(frozen=True)
class SingularPoint:
    point: tuple[int, int, int]
    incident: frozenset[int]

    @property
    def m(self) -> int:
        return len(self.incident)

    @property
    def mu(self) -> int:
        return self.m - 1


@dataclass(frozen=True)
class Arrangement:
    """An ordered list of pairwise distinct lines."""

    lines: tuple[Line, ...]

    def __post_init__(self):
        if not self.lines:
            raise InvalidArrangement("an arrangement needs at least one line")
        if len(set(self.lines)) != len(self.lines):
            raise InvalidArrangement("repeated line in arrangement")

    @classmethod
    def from_coeffs(cls, triples) -> "Arrangement":
        return cls(tuple(parse_line(*t) for t in triples))

    @property
    def d(self) -> int:
        return len(self.lines)

    def __len__(self):
        return len(self.lines)

    def __iter__(self):
        return iter(self.lines)

    def __str__(self):
        return "{" + ", ".join(map(str, self.lines)) + "}"

    def add(self, line: Line) -> "Arrangement":
        return Arrangement(self.lines + (line,))

    def delete(self, index: int) -> "Arrangement":
        return Arrangement(self.lines[:index] + self.lines[index + 1:])

    def index(self, line: Line) -> int:
        return self.lines.index(line)

    @property
    def is_essential(self) -> bool:
        if self.d < 3:
            return False
        p = intersection(self.lines[0], self.lines[1])
        return any(l(p) != 0 for l in self.lines[2:])


def require_essential(A: Arrangement):
    if not A.is_essential:
        raise PreconditionError("arrangement is not essential (all lines pass through one point)")


def singular_points(A: Arrangement) -> list[SingularPoint]:
    """Rank-2 flats: every point where two or more lines meet, sorted by point."""
    if A.d < 2:
        raise PreconditionError("need at least two lines for intersection points")
    incident = defaultdict(set)
    for i in range(A.d):
        for j in range(i + 1, A.d):
            p = intersection(A.lines[i], A.lines[j])
            incident[p].update((i, j))
    pts = [SingularPoint(p, frozenset(s)) for p, s in sorted(incident.items())]
    assert sum(comb(sp.m, 2) for sp in pts) == comb(A.d, 2)
    return pts


def max_mu(A: Arrangement) -> int:
    return max(sp.mu for sp in singular_points(A))


@dataclass(frozen=True)
class PoincareData:
    """pi(A, t) = (1 + t)(1 + b1 t + b2 t^2)."""

    b1: int
    b2: int
    factor_roots: tuple[int, int] | None

    def coefficients(self) -> tuple[int, int, int, int]:
        return (1, self.b1 + 1, self.b1 + self.b2, self.b2)

    def __str__(self):
        if self.factor_roots:
            factors = ["(1+t)"] + [f"(1+{'' if r == 1 else r}t)" if r else "1"
                                   for r in self.factor_roots]
            factors = [f for f in factors if f != "1"]
            out = ""
            for f in dict.fromkeys(factors):
                n = factors.count(f)
                out += f if n == 1 else f"{f}^{n}"
            return out
        return f"(1+t)(1+{self.b1}t+{self.b2}t^2)"


def _factor_quadratic(b1: int, b2: int) -> tuple[int, int] | None:
    # 1 + b1 t + b2 t^2 = (1 + a t)(1 + (b1 - a) t) with a(b1 - a) = b2
    disc = b1 * b1 - 4 * b2
    if disc < 0:
        return None
    r = isqrt(disc)
    if r * r != disc or (b1 - r) % 2:
        return None
    a = (b1 - r) // 2
    if a < 0:
        return None
    return (a, b1 - a)


def poincare(A: Arrangement) -> PoincareData:
    require_essential(A)
    pts = singular_points(A)
    b1 = A.d - 1
    b2 = sum(sp.mu for sp in pts) - A.d + 1
    return PoincareData(b1, b2, _factor_quadratic(b1, b2))


def jacobian_degree(A: Arrangement) -> int:
    """deg J_Q as the sum of squared Mobius values over the singular points."""
    require_essential(A)
    return sum(sp.mu ** 2 for sp in singular_points(A))


@dataclass(frozen=True)
class TripleData:
    deleted: Arrangement
    pivot_index: int
    restriction: tuple[SingularPoint, ...]
    multiplicities: tuple[int, ...] = field(default=())

    @property
    def restriction_count(self) -> int:
        return len(self.restriction)


def restriction_points(A: Arrangement, line: Line) -> list[tuple[int, int, int]]:
    """Distinct points cut out on ``line`` by the members of A other than it."""
    pts = {intersection(line, l) for l in A.lines if l != line}
    return sorted(pts)


def restriction_count(A: Arrangement, line: Line) -> int:
    """|A''| for the triple defined by ``line`` (in A or added to A)."""
    return len(restriction_points(A, line))


def triple(A: Arrangement, h: int) -> TripleData:
    if not 0 <= h < A.d:
        raise IndexError(f"line index {h} out of range for {A.d} lines")
    if A.d < 3:
        raise PreconditionError("triples need at least three lines")
    H = A.lines[h]
    on_h = [sp for sp in singular_points(A) if h in sp.incident]
    assert sum(sp.mu for sp in on_h) == A.d - 1
    return TripleData(A.delete(h), h, tuple(on_h), tuple(sp.m for sp in on_h))

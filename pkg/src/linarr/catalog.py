"""Named arrangements used throughout the tests, scripts and README."""

from __future__ import annotations

from .arrangement import Arrangement, parse_line

X, Y, Z = (1, 0, 0), (0, 1, 0), (0, 0, 1)

# the nested family I < II < III < IV < V
_NESTED = [X, Y, Z, (0, 1, 1), (1, 0, 1), (1, 1, 0), (1, 0, 2), (1, 2, 0), (0, 1, 2)]


def nested(level: int) -> Arrangement:
    """Arrangement I (level 1) through V (level 5)."""
    if not 1 <= level <= 5:
        raise ValueError("levels run from 1 (I) to 5 (V)")
    return Arrangement.from_coeffs(_NESTED[:4 + level])


ROMAN = {"I": 1, "II": 2, "III": 3, "IV": 4, "V": 5}


def triangle() -> Arrangement:
    return Arrangement.from_coeffs([X, Y, Z])


def non_fano() -> Arrangement:
    return Arrangement.from_coeffs([X, Y, Z, (1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1)])


def five_through_a_point() -> Arrangement:
    """Five concurrent lines through (0:0:1) plus two lines in general position."""
    return Arrangement.from_coeffs([X, Y, (1, 1, 0), (1, -1, 0), (1, 2, 0), Z, (1, 3, 5)])


def near_pencil(d: int) -> Arrangement:
    """d-1 lines through (0:0:1) and the line z."""
    if d < 3:
        raise ValueError("a near pencil needs d >= 3")
    return Arrangement.from_coeffs([(1, k, 0) for k in range(d - 2)] + [Y, Z])


def generic(d: int) -> Arrangement:
    """d lines with only double points: x, y, z, then (1, k, k^2) for k = 1, 2, ..."""
    lines = [X, Y, Z]
    k = 1
    while len(lines) < d:
        lines.append((1, k, k * k))
        k += 1
    A = Arrangement.from_coeffs(lines[:d])
    from .arrangement import singular_points
    assert all(sp.m == 2 for sp in singular_points(A))
    return A


NAMED = {
    "triangle": triangle,
    "non-fano": non_fano,
    "five-through-a-point": five_through_a_point,
    **{f"arrangement-{k}": (lambda lv=v: nested(lv)) for k, v in ROMAN.items()},
}


def line(a, b, c):
    return parse_line(a, b, c)

"""Sparse homogeneous polynomials in x, y, z as ``{exponent triple: coeff}`` dicts."""

from __future__ import annotations

from collections import defaultdict

import flint

from .exactlin import monomial_index, monomials

Poly = dict


def linear(coeffs) -> Poly:
    a, b, c = coeffs
    return {m: v for m, v in (((1, 0, 0), a), ((0, 1, 0), b), ((0, 0, 1), c)) if v}


def mul(f: Poly, g: Poly) -> Poly:
    out = defaultdict(int)
    for (i, j, k), u in f.items():
        for (p, q, r), v in g.items():
            out[(i + p, j + q, k + r)] += u * v
    return {m: v for m, v in out.items() if v}


def add(*fs: Poly) -> Poly:
    out = defaultdict(int)
    for f in fs:
        for m, v in f.items():
            out[m] += v
    return {m: v for m, v in out.items() if v}


def scale(f: Poly, c) -> Poly:
    return {m: v * c for m, v in f.items() if v * c}


def diff(f: Poly, var: int) -> Poly:
    out = {}
    for m, v in f.items():
        if m[var]:
            e = list(m)
            e[var] -= 1
            out[tuple(e)] = v * m[var]
    return out


def evaluate(f: Poly, point):
    x, y, z = point
    return sum(v * x ** i * y ** j * z ** k for (i, j, k), v in f.items())


def to_vector(f: Poly, t: int) -> list:
    idx = monomial_index(t)
    v = [0] * len(idx)
    for m, c in f.items():
        if sum(m) != t:
            raise ValueError(f"monomial {m} is not of degree {t}")
        v[idx[m]] = c
    return v


def from_vector(v, t: int) -> Poly:
    return {m: c for m, c in zip(monomials(t), v) if c}


def mult_matrix(f: Poly, deg_f: int, t: int) -> list[list[int]]:
    """Rows index monomials of degree t+deg_f, columns monomials of degree t."""
    target = monomial_index(t + deg_f)
    src = monomials(t)
    rows = [[0] * len(src) for _ in range(len(target))]
    for col, (i, j, k) in enumerate(src):
        for (p, q, r), c in f.items():
            rows[target[(i + p, j + q, k + r)]][col] += c
    return rows


def shift_matrix(var: int, t: int) -> list[list[int]]:
    """Multiplication by x, y or z from degree t to degree t+1."""
    e = [0, 0, 0]
    e[var] = 1
    return mult_matrix({tuple(e): 1}, 1, t)


def hstack(*blocks: list[list[int]]) -> list[list[int]]:
    return [sum(rows, []) for rows in zip(*blocks)]


def to_fmpz(rows: list[list[int]], cols: int) -> flint.fmpz_mat:
    return flint.fmpz_mat(rows) if rows else flint.fmpz_mat(0, cols)

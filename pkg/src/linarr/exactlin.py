"""Exact rational linear algebra and graded monomial bases.

Elimination is delegated to FLINT (fraction-free integer RREF), which keeps
coefficient growth under control for the few-hundred-column syzygy matrices
built in :mod:`linarr.derivations`.  Everything returned to callers is made of
plain Python ``int`` / ``Fraction`` values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd, lcm
from typing import Sequence

import flint


class UsageError(ValueError):
    """Bad arguments to a kernel routine (negative degree, wrong length...)."""


# --------------------------------------------------------------------------
# monomial bases
# --------------------------------------------------------------------------


@lru_cache(maxsize=None)
def monomials(t: int) -> tuple[tuple[int, int, int], ...]:
    """Exponent triples of degree ``t`` in graded-lex order (x > y > z)."""
    if t < 0:
        raise UsageError(f"degree must be nonnegative, got {t}")
    out = []
    for i in range(t, -1, -1):
        for j in range(t - i, -1, -1):
            out.append((i, j, t - i - j))
    assert len(out) == comb(t + 2, 2)
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(t: int) -> dict[tuple[int, int, int], int]:
    return {m: n for n, m in enumerate(monomials(t))}


def binary_monomials(t: int) -> tuple[tuple[int, int], ...]:
    """Exponent pairs (s, u) of degree ``t``; index ``j`` is ``s^(t-j) u^j``."""
    if t < 0:
        raise UsageError(f"degree must be nonnegative, got {t}")
    return tuple((t - j, j) for j in range(t + 1))


# --------------------------------------------------------------------------
# matrices and subspaces
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class QMatrix:
    """Dense row-major matrix of Fractions."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise UsageError("entries length must equal rows * cols")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "QMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise UsageError("ragged matrix")
        return cls(len(rows), cols, tuple(Fraction(x) for r in rows for x in r))

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def tolist(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]


def _shape(M) -> tuple[list[list], int]:
    if isinstance(M, QMatrix):
        return M.tolist(), M.cols
    if isinstance(M, (flint.fmpz_mat, flint.fmpq_mat)):
        return M.tolist(), M.ncols()
    rows = [list(r) for r in M]
    cols = len(rows[0]) if rows else 0
    if any(len(r) != cols for r in rows):
        raise UsageError("ragged matrix")
    return rows, cols


def _to_fmpz(rows: list[list], cols: int) -> flint.fmpz_mat:
    """Integer matrix with the same row space (each row scaled by its lcm)."""
    out = []
    for r in rows:
        fr = [Fraction(x) if not isinstance(x, int) else x for x in r]
        den = 1
        for x in fr:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        out.append([int(x * den) for x in fr])
    if not out:
        return flint.fmpz_mat(0, cols)
    return flint.fmpz_mat(out)


def _rref_int(A: flint.fmpz_mat) -> tuple[list[list[Fraction]], int]:
    if A.nrows() == 0 or A.ncols() == 0:
        return [[Fraction(0)] * A.ncols() for _ in range(A.nrows())], 0
    R, den, rank = A.rref()
    den = int(den)
    rows = [[Fraction(int(x), den) for x in r] for r in R.tolist()]
    return rows, int(rank)


def rref(M) -> tuple[QMatrix, int]:
    """Reduced row-echelon form and rank, exactly."""
    rows, cols = _shape(M)
    R, rank = _rref_int(_to_fmpz(rows, cols))
    return QMatrix.from_rows(R, cols), rank


def rank(M) -> int:
    if isinstance(M, flint.fmpz_mat):
        return int(M.rank()) if M.nrows() and M.ncols() else 0
    rows, cols = _shape(M)
    if not rows or cols == 0:
        return 0
    return int(_to_fmpz(rows, cols).rank())


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^n given by a basis that is the identity on ``pivot_cols``.

    Without explicit ``pivot_cols`` the basis is the canonical RREF basis and
    the pivots are the leading positions.
    """

    ambient_dim: int
    basis: tuple[tuple[Fraction, ...], ...]
    pivot_cols: tuple[int, ...] | None = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __contains__(self, v) -> bool:
        return member(self, v)

    def integer_basis(self) -> list[list[int]]:
        """Basis rows scaled to primitive integer vectors."""
        return [primitive(r) for r in self.basis]

    def pivots(self) -> list[int]:
        if self.pivot_cols is not None:
            return list(self.pivot_cols)
        return [next(i for i, x in enumerate(r) if x) for r in self.basis]


def span(vectors, ambient_dim: int) -> Subspace:
    rows = [list(v) for v in vectors]
    if any(len(r) != ambient_dim for r in rows):
        raise UsageError("vector length does not match ambient dimension")
    R, r = _rref_int(_to_fmpz(rows, ambient_dim)) if rows else ([], 0)
    return Subspace(ambient_dim, tuple(tuple(row) for row in R[:r]))


def nullspace(M) -> Subspace:
    """Right nullspace ``{v : M v = 0}``."""
    if isinstance(M, flint.fmpz_mat) and M.nrows() and M.ncols():
        return _nullspace_int(M)
    rows, cols = _shape(M)
    if not rows or cols == 0:
        return Subspace(cols, tuple(
            tuple(Fraction(int(i == j)) for j in range(cols)) for i in range(cols)))
    return _nullspace_int(_to_fmpz(rows, cols))


def _nullspace_int(A: flint.fmpz_mat) -> Subspace:
    cols = A.ncols()
    X, nullity = A.nullspace()
    nullity = int(nullity)
    if nullity == 0:
        return Subspace(cols, ())
    vecs = X.transpose().tolist()[:nullity]
    R, r = _rref_int(flint.fmpz_mat(vecs))
    assert r == nullity
    return Subspace(cols, tuple(tuple(row) for row in R))


def kernel(M) -> Subspace:
    """Right nullspace in free-column form: identity on the non-pivot columns of rref(M).

    Cheaper than :func:`nullspace` for large matrices, because it avoids a second
    elimination whose denominators grow quickly.
    """
    A = M if isinstance(M, flint.fmpz_mat) else _to_fmpz(*_shape(M))
    cols = A.ncols()
    if A.nrows() == 0 or cols == 0:
        return nullspace(M)
    R, den, r = A.rref()
    den = int(den)
    R = R.tolist()[:int(r)]
    piv = [next(j for j, x in enumerate(row) if x) for row in R]
    free = [j for j in range(cols) if j not in set(piv)]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for i, p in enumerate(piv):
            if R[i][f]:
                v[p] = Fraction(-int(R[i][f]), den)
        basis.append(tuple(v))
    return Subspace(cols, tuple(basis), tuple(free))


def member(S: Subspace, v) -> bool:
    v = [Fraction(x) for x in v]
    if len(v) != S.ambient_dim:
        raise UsageError(f"vector of length {len(v)} in ambient dimension {S.ambient_dim}")
    for row, p in zip(S.basis, S.pivots()):
        c = v[p]
        if c:
            v = [a - c * b for a, b in zip(v, row)]
    return not any(v)


def complement_equations(S: Subspace) -> list[list[int]]:
    """Integer rows E with ``S = {v : E v = 0}``."""
    if S.dim == 0:
        return [[int(i == j) for j in range(S.ambient_dim)] for i in range(S.ambient_dim)]
    return kernel(S.basis).integer_basis()


def primitive(v) -> list[int]:
    """Scale a rational vector to coprime integers, first nonzero positive."""
    v = [x if isinstance(x, Fraction) else Fraction(x) for x in v]
    den = 1
    for x in v:
        if x.denominator != 1:
            den = lcm(den, x.denominator)
    ints = [x.numerator * (den // x.denominator) for x in v]
    g = gcd(*ints)
    if g == 0:
        return ints
    lead = next(x for x in ints if x)
    if lead < 0:
        g = -g
    return [x // g for x in ints]

"""The graded module D0 of syzygies on the Jacobian ideal of an arrangement.

Every graded piece is an exact nullspace of the map
``(R_t)^3 -> R_{t+d-1}, (a, b, c) -> a Q_x + b Q_y + c Q_z``.  Computations stop
at degree ``t = d``: generators sit in degree <= d-2 and relations in degree
<= d-1, so the last two rows only serve as Hilbert-polynomial sanity checks.

The module is taken to be saturated (it is a second syzygy module), so its
Castelnuovo-Mumford regularity is read off the resolution as
``max(max alpha, max beta - 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from . import poly
from .arrangement import (Arrangement, PreconditionError, jacobian_degree, poincare,
                          require_essential, restriction_count, singular_points)
from .exactlin import Subspace, kernel, monomial_index, monomials, rank


class InvariantViolation(AssertionError):
    """A theorem-level identity failed; signals a bug rather than bad input."""


# --------------------------------------------------------------------------
# polynomial vectors
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class PolyVec:
    """theta = a d/dx + b d/dy + c d/dz with a, b, c in R_t (coefficient vectors)."""

    degree: int
    a: tuple
    b: tuple
    c: tuple

    def __post_init__(self):
        n = comb(self.degree + 2, 2)
        if not len(self.a) == len(self.b) == len(self.c) == n:
            raise ValueError(f"components must have length {n}")

    @classmethod
    def from_flat(cls, v, t: int) -> "PolyVec":
        n = comb(t + 2, 2)
        return cls(t, tuple(v[:n]), tuple(v[n:2 * n]), tuple(v[2 * n:]))

    @classmethod
    def from_polys(cls, polys, t: int) -> "PolyVec":
        return cls(t, *(tuple(poly.to_vector(p, t)) for p in polys))

    def flat(self) -> list:
        return [*self.a, *self.b, *self.c]

    def polys(self) -> tuple[dict, dict, dict]:
        return tuple(poly.from_vector(v, self.degree) for v in (self.a, self.b, self.c))

    def __call__(self, f: dict) -> dict:
        """Apply the derivation to a polynomial."""
        a, b, c = self.polys()
        return poly.add(poly.mul(a, poly.diff(f, 0)),
                        poly.mul(b, poly.diff(f, 1)),
                        poly.mul(c, poly.diff(f, 2)))

    def is_zero(self) -> bool:
        return not any(self.flat())


def euler() -> PolyVec:
    return PolyVec(1, (1, 0, 0), (0, 1, 0), (0, 0, 1))


# --------------------------------------------------------------------------
# Jacobian data
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class JacobianData:
    d: int
    Q: dict
    partials: tuple[dict, dict, dict]

    def vectors(self):
        return (poly.to_vector(self.Q, self.d),
                tuple(poly.to_vector(p, self.d - 1) for p in self.partials))


def defining_polynomial(A: Arrangement) -> dict:
    Q = {(0, 0, 0): 1}
    for l in A.lines:
        Q = poly.mul(Q, poly.linear(l.coeffs))
    return Q


@lru_cache(maxsize=256)
def _jacobian(A: Arrangement) -> JacobianData:
    forms = [poly.linear(l.coeffs) for l in A.lines]
    n = len(forms)
    # prefix[i] = l_0 ... l_{i-1}, suffix[i] = l_i ... l_{n-1}
    prefix = [{(0, 0, 0): 1}]
    for f in forms:
        prefix.append(poly.mul(prefix[-1], f))
    suffix = [{(0, 0, 0): 1}]
    for f in reversed(forms):
        suffix.append(poly.mul(f, suffix[-1]))
    suffix.reverse()
    others = [poly.mul(prefix[i], suffix[i + 1]) for i in range(n)]
    partials = tuple(
        poly.add(*(poly.scale(others[i], A.lines[i].coeffs[v]) for i in range(n)))
        for v in range(3))
    return JacobianData(n, prefix[-1], partials)


def jacobian(A: Arrangement) -> JacobianData:
    """Q and its partial derivatives (product rule), for an essential arrangement."""
    require_essential(A)
    return _jacobian(A)


# --------------------------------------------------------------------------
# graded pieces
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class GradedPiece:
    degree: int
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim

    def elements(self) -> list[PolyVec]:
        return [PolyVec.from_flat(v, self.degree) for v in self.space.integer_basis()]


def syzygy_matrix(A: Arrangement, t: int) -> list[list[int]]:
    J = _jacobian(A)
    return poly.hstack(*(poly.mult_matrix(p, A.d - 1, t) for p in J.partials))


@lru_cache(maxsize=4096)
def graded_piece(A: Arrangement, t: int) -> GradedPiece:
    """(D0)_t as an exact subspace of (R_t)^3, ordered a-block, b-block, c-block."""
    if t < 0:
        raise ValueError("degree must be nonnegative")
    n = 3 * comb(t + 2, 2)
    M = poly.to_fmpz(syzygy_matrix(A, t), n)
    return GradedPiece(t, kernel(M))


@lru_cache(maxsize=256)
def _hilbert(A: Arrangement, T: int) -> tuple[int, ...]:
    return tuple(graded_piece(A, t).dim for t in range(T + 1))


def hilbert_table(A: Arrangement, T: int | None = None) -> tuple[int, ...]:
    """dim (D0)_t for 0 <= t <= T (default T = d)."""
    if T is None:
        T = A.d
    if T < 0:
        raise ValueError("T must be nonnegative")
    return _hilbert(A, T)


def _times_variables(vecs: list[list[int]], t: int) -> list[list[int]]:
    """x*theta, y*theta, z*theta for theta of degree t, flattened in degree t+1."""
    src, dst = monomials(t), monomial_index(t + 1)
    n_src, n_dst = len(src), len(dst)
    out = []
    for v in vecs:
        for var in range(3):
            w = [0] * (3 * n_dst)
            for blk in range(3):
                for j, (i, k, l) in enumerate(src):
                    c = v[blk * n_src + j]
                    if c:
                        e = [i, k, l]
                        e[var] += 1
                        w[blk * n_dst + dst[tuple(e)]] = c
            out.append(w)
    return out


@lru_cache(maxsize=256)
def _generator_counts(A: Arrangement, T: int) -> tuple[int, ...]:
    counts = []
    prev: list[list[int]] = []
    for t in range(T + 1):
        piece = graded_piece(A, t)
        if prev:
            products = _times_variables(prev, t - 1)
            r = rank(poly.to_fmpz(products, 3 * comb(t + 2, 2)))
        else:
            r = 0
        counts.append(piece.dim - r)
        prev = piece.space.integer_basis()
    return tuple(counts)


def generator_degrees(A: Arrangement) -> tuple[int, ...]:
    """Degrees of a minimal generating set of D0, ascending.

    Counted degree by degree as ``dim (D0)_t`` minus the dimension of the part
    generated from degree t-1; scanned through degree d so that the d-2 bound
    is checked rather than assumed.
    """
    require_essential(A)
    counts = _generator_counts(A, A.d)
    alphas = tuple(t for t, c in enumerate(counts) for _ in range(c))
    if any(a > A.d - 2 for a in alphas):
        raise InvariantViolation(f"generator beyond degree d-2: {alphas}")
    return alphas


def relation_degrees(A: Arrangement, alphas, hilbert) -> tuple[int, ...]:
    """Relation degrees from the Hilbert series numerator.

    sum_j T^beta_j = sum_i T^alpha_i - (sum_t h_t T^t)(1 - T)^3, truncated at
    degree len(hilbert) - 1 (enough since every beta <= d - 1).
    """
    T = len(hilbert) - 1
    numer = [0] * (T + 1)
    cube = (1, -3, 3, -1)
    for t, h in enumerate(hilbert):
        for k, c in enumerate(cube):
            if t + k <= T:
                numer[t + k] += h * c
    betas = []
    for t in range(T + 1):
        nb = sum(1 for a in alphas if a == t) - numer[t]
        if nb < 0:
            raise InvariantViolation(
                f"Hilbert data inconsistent with generators at degree {t}")
        betas.extend([t] * nb)
    return tuple(betas)


@dataclass(frozen=True)
class Resolution:
    """0 -> (+) R(-beta_j) -> (+) R(-alpha_i) -> D0 -> 0."""

    alphas: tuple[int, ...]
    betas: tuple[int, ...]
    hilbert: tuple[int, ...]

    @property
    def regularity(self) -> int:
        return resolution_regularity(self.alphas, self.betas)

    @property
    def is_free(self) -> bool:
        return not self.betas

    def predicted_dim(self, t: int) -> int:
        def h(s):
            return comb(t - s + 2, 2) if t >= s else 0
        return sum(h(a) for a in self.alphas) - sum(h(b) for b in self.betas)

    def __str__(self):
        def terms(degs):
            seen = sorted(set(degs))
            return " + ".join(
                f"R(-{s})" + (f"^{degs.count(s)}" if degs.count(s) > 1 else "") for s in seen)
        gens = terms(list(self.alphas))
        if not self.betas:
            return f"0 -> {gens} -> D0 -> 0"
        return f"0 -> {terms(list(self.betas))} -> {gens} -> D0 -> 0"


def resolution_regularity(alphas, betas) -> int:
    r = max(alphas)
    if betas:
        r = max(r, max(betas) - 1)
    return r


def chern_consistent(alphas, betas, d: int, deg_j: int) -> bool:
    """prod(1 - alpha t) == prod(1 - beta t) (1 + c1 t + c2 t^2) mod t^3."""
    def trunc_prod(roots):
        p = [1, 0, 0]
        for r in roots:
            p = [p[0], p[1] - r * p[0], p[2] - r * p[1]]
        return p
    lhs = trunc_prod(alphas)
    c = [1, -(d - 1), (d - 1) ** 2 - deg_j]
    b = trunc_prod(betas)
    rhs = [b[0] * c[0], b[0] * c[1] + b[1] * c[0], b[0] * c[2] + b[1] * c[1] + b[2] * c[0]]
    return lhs == rhs


def validate_resolution(res: Resolution, d: int, deg_j: int) -> list[str]:
    """Names of violated resolution invariants (empty when all hold)."""
    a, b = res.alphas, res.betas
    bad = []
    if len(a) - len(b) != 2:
        bad.append("rank: |alphas| - |betas| = 2")
    if len(a) > d - 1:
        bad.append("generator count <= d-1")
    if sum(a) - sum(b) != d - 1:
        bad.append("sum alpha - sum beta = d-1")
    if any(x > d - 2 for x in a) or any(x > d - 1 for x in b):
        bad.append("alpha <= d-2, beta <= d-1")
    if res.regularity > d - 2:
        bad.append("regularity <= d-2")
    if not chern_consistent(a, b, d, deg_j):
        bad.append("Chern consistency")
    if b and len(a) >= 2 and b[0] < a[1] + 1:
        bad.append("beta_1 >= alpha_2 + 1")
    for t in range(max(d - 2, 0), len(res.hilbert)):
        if res.predicted_dim(t) != res.hilbert[t]:
            bad.append(f"Hilbert agreement at degree {t}")
    return bad


@lru_cache(maxsize=256)
def resolve(A: Arrangement) -> Resolution:
    require_essential(A)
    alphas = generator_degrees(A)
    hilbert = hilbert_table(A, A.d)
    betas = relation_degrees(A, alphas, hilbert)
    res = Resolution(alphas, betas, hilbert)
    bad = validate_resolution(res, A.d, jacobian_degree(A))
    if bad:
        raise InvariantViolation(f"resolution of {A} violates: {', '.join(bad)}")
    return res


def regularity(A: Arrangement) -> int:
    return resolve(A).regularity


@dataclass(frozen=True)
class FreenessReport:
    is_free: bool
    exponents: tuple[int, int] | None
    terao_factor_check: bool


def freeness(A: Arrangement) -> FreenessReport:
    res = resolve(A)
    pi = poincare(A)
    if res.is_free:
        a1, a2 = res.alphas
        check = (a1 + a2 == pi.b1 and a1 * a2 == pi.b2)
        if not check:
            raise InvariantViolation("free arrangement whose Poincare polynomial does not match")
        return FreenessReport(True, (a1, a2), True)
    return FreenessReport(False, None, pi.factor_roots is not None)


# --------------------------------------------------------------------------
# deletion
# --------------------------------------------------------------------------


def annihilates(theta: PolyVec, A: Arrangement) -> bool:
    """theta(Q) == 0, checked by explicit multiplication."""
    return not theta(defining_polynomial(A))


def embed_deletion(A: Arrangement, h: int, theta: PolyVec) -> PolyVec:
    """Lift theta in D0(A - H) to psi = l*theta - (theta(l)/d) E in D0(A)."""
    deleted = A.delete(h)
    if not annihilates(theta, deleted):
        raise PreconditionError("theta is not a syzygy of the deleted arrangement")
    ell = poly.linear(A.lines[h].coeffs)
    t, d = theta.degree, A.d
    theta_l = theta(ell)
    corr = {m: Fraction(v, d) for m, v in theta_l.items()}
    comps = []
    for var, comp in enumerate(theta.polys()):
        e = [0, 0, 0]
        e[var] = 1
        comps.append(poly.add(poly.mul(ell, comp), poly.scale(poly.mul({tuple(e): 1}, corr), -1)))
    return PolyVec.from_polys(comps, t + 1)


@dataclass(frozen=True)
class DeletionReport:
    d: int
    h: int
    restriction_count: int
    deg_j: int
    deg_j_deleted: int
    hilbert_rows: tuple[tuple[int, int, int, int], ...]  # (t, dim D0(A)_t, dim D0(A')_{t-1}, expected)

    @property
    def deg_j_identity(self) -> bool:
        return self.deg_j - self.deg_j_deleted == 2 * self.d - 2 - self.restriction_count

    @property
    def hilbert_identity(self) -> bool:
        return all(a - b == e for _, a, b, e in self.hilbert_rows)


def _deg_j_any(A: Arrangement) -> int:
    # the deleted arrangement may be a pencil, where jacobian_degree refuses
    return sum(sp.mu ** 2 for sp in singular_points(A))


def deletion_check(A: Arrangement, h: int) -> DeletionReport:
    """Both deletion identities for the triple at line h; raises if either fails."""
    if A.d < 4:
        raise PreconditionError("deletion check needs d >= 4")
    require_essential(A)
    d = A.d
    deleted = A.delete(h)
    s = restriction_count(A, A.lines[h])
    hA = hilbert_table(A, d)
    hD = hilbert_table(deleted, d - 1)
    rows = tuple((t, hA[t], hD[t - 1], t + 2 - s) for t in range(d - 2, d + 1))
    rep = DeletionReport(d, h, s, _deg_j_any(A), _deg_j_any(deleted), rows)
    if not rep.deg_j_identity:
        raise InvariantViolation(f"deg J deletion identity fails for line {h}")
    if not rep.hilbert_identity:
        raise InvariantViolation(f"Hilbert deletion identity fails for line {h}: {rows}")
    return rep

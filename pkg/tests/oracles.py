"""Independent reference computations used only by the test-suite."""

from fractions import Fraction
from itertools import combinations, permutations
from math import comb

import sympy


def minor_rank(rows):
    """Rank as the size of the largest nonvanishing minor (Leibniz expansion)."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    for r in range(min(m, n), 0, -1):
        for ri in combinations(range(m), r):
            for ci in combinations(range(n), r):
                if _det([[Fraction(rows[i][j]) for j in ci] for i in ri]) != 0:
                    return r
    return 0


def _det(M):
    n = len(M)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        prod = Fraction(1)
        for i, p in enumerate(perm):
            prod *= M[i][p]
            if not prod:
                break
        total += -prod if inv % 2 else prod
    return total


def restricted_kernel_dims(lines, L, T):
    """dim ker((S_t)^3 -> S_{t+d-1}) via the partials of Q restricted to L, t = 0..T.

    Uses sympy polynomials in the line coordinates (s, u) and sympy's exact
    matrix rank, independent of the package's polynomial and elimination code.
    Valid as a splitting-type oracle only when L misses the singular points.
    """
    from sympy.polys.matrices import DomainMatrix
    s, u = sympy.symbols("s u")
    a, b, c = L
    # two points spanning L
    p, q = [list(v) for v in sympy.Matrix([[a, b, c]]).nullspace()]
    restricted = [sympy.Poly(sum(coef * (p[i] * s + q[i] * u) for i, coef in enumerate(l)), s, u)
                  for l in lines]
    d = len(lines)
    parts = []
    for var in range(3):
        total = sympy.Poly(0, s, u)
        for i, l in enumerate(lines):
            if l[var]:
                prod = sympy.Poly(l[var], s, u)
                for j, f in enumerate(restricted):
                    if j != i:
                        prod = prod * f
                total = total + prod
        parts.append(total)
    dims = []
    for t in range(T + 1):
        cols = []
        for part in parts:
            for j in range(t + 1):
                f = part * sympy.Poly(s ** (t - j) * u ** j, s, u)
                cols.append([f.coeff_monomial(s ** (t + d - 1 - i) * u ** i) for i in range(t + d)])
        mat = DomainMatrix.from_list_sympy(len(cols), t + d, cols).convert_to(sympy.QQ)
        dims.append(3 * (t + 1) - mat.rank())
    return dims


def split_dims(a1, a2, T):
    return [max(0, t + a1 + 1) + max(0, t + a2 + 1) for t in range(T + 1)]


def _ideal_piece(partials, d, e):
    """Rows spanning J_e (J generated by the partials, degree d-1)."""
    from linarr import poly
    from linarr.exactlin import monomials
    if e < d - 1:
        return []
    rows = []
    for p in partials:
        for m in monomials(e - d + 1):
            rows.append(poly.to_vector(poly.mul(p, {m: 1}), e))
    return rows


def restriction_h0_via_jacobian(lines, L, t):
    """h^0(D|_L(t)) from H^1(D(s)) = (J^sat / J)_{s+d-1}; never touches D0 bases.

    h^0(D|_L(t)) = h_t - h_{t-1} + dim ker(l : H^1(D(t-1)) -> H^1(D(t))).
    """
    import flint
    from linarr import poly
    from linarr.exactlin import monomials, nullspace, span, member
    d = len(lines)
    Q = {(0, 0, 0): 1}
    for c in lines:
        Q = poly.mul(Q, poly.linear(c))
    partials = [poly.diff(Q, v) for v in range(3)]
    e = t + d - 2
    big = 3 * d + 2  # J agrees with its saturation here

    def jsat(deg):
        # f in R_deg with x^k f, y^k f, z^k f in J_{deg+k}
        k = big - deg
        Jbig = span(_ideal_piece(partials, d, big), len(monomials(big)))
        E = nullspace(Jbig.basis).integer_basis() if Jbig.dim < len(monomials(big)) else []
        rows = []
        for var in range(3):
            mono = [0, 0, 0]
            mono[var] = k
            Mk = poly.mult_matrix({tuple(mono): 1}, k, deg)
            for r in E:
                rows.append([sum(a * b for a, b in zip(r, col)) for col in zip(*Mk)])
        n = len(monomials(deg))
        return nullspace(rows) if rows else span([[int(i == j) for j in range(n)] for i in range(n)], n)

    def hdim(s):
        if s < 0:
            return 0
        n = len(monomials(s + d - 1))
        Jrows = _ideal_piece(partials, d, s + d - 1)
        return 3 * len(monomials(s)) - (n and span(Jrows, n).dim) if Jrows else 0

    # ker(l : (Jsat/J)_e -> (Jsat/J)_{e+1}) = dim {f in Jsat_e : l f in J_{e+1}} - dim J_e
    Se = jsat(e)
    J1 = span(_ideal_piece(partials, d, e + 1), len(monomials(e + 1)))
    E1 = nullspace(J1.basis).integer_basis() if J1.dim < len(monomials(e + 1)) else []
    lmat = poly.mult_matrix(poly.linear(L), 1, e)
    basis = Se.integer_basis()
    if basis and E1:
        imgs = [[sum(r * c for r, c in zip(row, v)) for row in lmat] for v in basis]
        cond = [[sum(a * b for a, b in zip(er, img)) for img in imgs] for er in E1]
        kdim = nullspace(cond).dim
    else:
        kdim = len(basis)
    Je = _ideal_piece(partials, d, e)
    jdim = span(Je, len(monomials(e))).dim if Je else 0
    return hdim(t) - hdim(t - 1) + kdim - jdim


def syzygy_dim(lines, t):
    """dim (D0)_t computed with sympy polynomials: kernel of (a,b,c) -> a Qx + b Qy + c Qz."""
    x, y, z = sympy.symbols("x y z")
    Q = sympy.Integer(1)
    for (a, b, c) in lines:
        Q *= a * x + b * y + c * z
    parts = [sympy.diff(Q, v) for v in (x, y, z)]
    mons = sorted(sympy.itermonomials([x, y, z], t, t), key=sympy.default_sort_key)
    mons = [m for m in mons if sympy.Poly(m, x, y, z).total_degree() == t]
    cols = []
    for p in parts:
        for m in mons:
            cols.append(sympy.Poly(sympy.expand(p * m), x, y, z).as_dict())
    keys = sorted({k for col in cols for k in col})
    mat = sympy.Matrix([[col.get(k, 0) for col in cols] for k in keys])
    return len(cols) - mat.rank()

"""The ten acceptance criteria, each printing one PASS/FAIL line (run with -s to see them)."""

import random
from math import comb

import pytest

from linarr import catalog, poly
from linarr.arrangement import (jacobian_degree, max_mu, parse_line, poincare, restriction_count,
                                singular_points)
from linarr.bundle import (STABLE, SEMISTABLE, UNSTABLE, DualCurve, candidate_lines, chern,
                           curve_contains, fit_dual_curve, interpolation_rank, is_jump_line,
                           jump_scan, splitting_type, stability, stability_sufficient,
                           threshold_fires)
from linarr.corpus import CorpusConfig, random_arrangements
from linarr.derivations import (deletion_check, freeness, jacobian, regularity, resolve,
                                validate_resolution)
from linarr.terao import (ChainSpec, LatticeSummary, chain_bound, enumerate_candidates,
                          filter_balanced_stability, filter_regularity, filter_second_syzygy,
                          verdict)
from oracles import restricted_kernel_dims, split_dims

L = catalog.line
NINE_POINT_CUBIC = DualCurve(3, (4, -2, -4, -4, 0, -1, 2, -1, -2, 1))
NINE = [L(0, 1, 1), L(1, 0, 1), L(1, 1, 0), L(1, 0, 2), L(1, 2, 0), L(0, 1, 2),
        L(1, -1, 0), L(1, 0, -2), L(0, 1, -1)]
COORD = [L(1, 0, 0), L(0, 1, 0), L(0, 0, 1)]


def report(n, title, failures):
    status = "PASS" if not failures else "FAIL"
    print(f"\ncriterion {n}: {status} - {title}" + ("" if not failures else f" {failures}"))
    assert not failures, failures


def test_criterion_1_chern_table():
    want = [(0, 0), (-1, 1), (0, 1), (-1, 2), (0, 3)]
    got = [(chern(catalog.nested(k)).c1n, chern(catalog.nested(k)).c2n) for k in range(1, 6)]
    report(1, "normalized Chern pairs of I-V", [] if got == want else [got])


def test_criterion_2_nested_resolutions():
    want = [((2, 2), ()), ((3, 3, 3), (4,)), ((3, 4, 4), (5,)), ((4, 4, 5), (6,)),
            ((5, 5, 5), (7,))]
    got = [(resolve(catalog.nested(k)).alphas, resolve(catalog.nested(k)).betas)
           for k in range(1, 6)]
    bad = [(k + 1, g) for k, (g, w) in enumerate(zip(got, want)) if g != w]
    report(2, "resolutions of I-V", bad)


def test_criterion_3_stability():
    want = {1: SEMISTABLE, 2: STABLE, 3: SEMISTABLE, 4: STABLE, 5: STABLE}
    bad = [(k, stability(catalog.nested(k)).verdict) for k, v in want.items()
           if stability(catalog.nested(k)).verdict != v]
    five = stability(catalog.five_through_a_point())
    if (five.verdict, five.witness_degree) != (UNSTABLE, 2):
        bad.append(("five-through-a-point", five))
    report(3, "stability verdicts", bad)


def test_criterion_4_jump_lines():
    bad = []
    if jump_scan(catalog.nested(2), 2):
        bad.append("II has jump lines")
    III = catalog.nested(3)
    j3 = jump_scan(III, 2)
    if {r.line for r in j3 if r.line in III.lines} != {L(1, 1, 0), L(0, 1, 1)}:
        bad.append("III arrangement jump lines")
    if not all(curve_contains(DualCurve(1, (1, -1, 1)), r.line) for r in j3):
        bad.append("III jump line off x-y+z")
    if [r.line for r in jump_scan(catalog.nested(4), 2)] != [L(0, 1, 1)]:
        bad.append("IV jump lines")
    V = catalog.nested(5)
    found = {r.line for r in jump_scan(V, 2)}
    if not set(NINE) <= found:
        bad.append("V misses listed lines")
    if not all(curve_contains(NINE_POINT_CUBIC, l) for l in NINE):
        bad.append("nine dual points off the cubic")
    if any(l in found for l in COORD):
        bad.append("coordinate line reported as jump")
    report(4, "jump analysis of II-V", bad)


def test_criterion_5_dual_curve_fit():
    bad = []
    if interpolation_rank([l.coeffs for l in NINE], 3) != 8:
        bad.append("rank")
    if len(fit_dual_curve(NINE, 3)) != 2:
        bad.append("solution space dimension")
    if fit_dual_curve(NINE, 3, COORD) != NINE_POINT_CUBIC:
        bad.append("fitted cubic")
    report(5, "cubic through the nine dual points of V", bad)


def test_criterion_6_terao_pipeline():
    cands = enumerate_candidates(7, 3, 2)
    b = filter_balanced_stability(cands, 7, 3)
    s = filter_second_syzygy(b)
    bound = chain_bound(ChainSpec(2, (4, 3)))
    r = filter_regularity(s, bound)
    v = verdict(LatticeSummary(7, 3, 2), ChainSpec(2, (4, 3)))
    got = (len(cands), len(b), len(s), bound, [(c.alphas, c.betas) for c in r], v.forced_free)
    want = (19, 4, 2, 4, [((3, 3), ())], True)
    report(6, "Terao pipeline for the non-Fano lattice", [] if got == want else [got])


def test_criterion_7_non_fano():
    A = catalog.non_fano()
    f = freeness(A)
    pi = poincare(A)
    ok = f.is_free and f.exponents == (3, 3) and pi.factor_roots == (3, 3) and pi.b1 == 6
    report(7, "non-Fano realization is free with exponents (3,3)", [] if ok else [f, pi])


def test_criterion_8_five_through_a_point():
    A = catalog.five_through_a_point()
    res = resolve(A)
    bad = []
    if (res.alphas, res.betas) != ((2, 5, 5), (6,)):
        bad.append(res)
    if freeness(A).is_free or poincare(A).factor_roots is None:
        bad.append("freeness / factorization")
    if max_mu(A) != 4 or max(res.alphas) < 4:
        bad.append("maxMu")
    report(8, "five-through-a-point resolution", bad)


def _generic_line(A, rng):
    while True:
        line = parse_line(*(rng.randint(-7, 7) for _ in range(3)))
        if any(line.coeffs) and all(line(sp.point) for sp in singular_points(A)):
            return line


def _corpus_failures(A, rng):
    d = A.d
    bad = []
    J = jacobian(A)
    euler_lhs = poly.add(*(poly.mul(poly.linear(e), p) for e, p in
                           zip([(1, 0, 0), (0, 1, 0), (0, 0, 1)], J.partials)))
    if euler_lhs != poly.scale(J.Q, d):
        bad.append("euler")
    pts = singular_points(A)
    if sum(comb(sp.m, 2) for sp in pts) != comb(d, 2):
        bad.append("lattice identity")
    degJ = jacobian_degree(A)
    if not comb(d, 2) <= degJ <= d * d - 3 * d + 3:
        bad.append("degJ bounds")
    res = resolve(A)
    al, be = res.alphas, res.betas
    if sum(al) - sum(be) != d - 1:
        bad.append("degree sum")
    if max(al) > d - 2 or (be and max(be) > d - 1) or len(al) > d - 1 or res.regularity > d - 2:
        bad.append("resolution bounds")
    if max(al) < max_mu(A):
        bad.append("maxMu")
    if validate_resolution(res, d, degJ):
        bad.append(("invariants", validate_resolution(res, d, degJ)))
    for h in range(d):
        rep = deletion_check(A, h)  # raises on failure
        if not (rep.deg_j_identity and rep.hilbert_identity):
            bad.append(("deletion", h))
        stability_sufficient(A, h)  # raises if a fired clause disagrees with the exact verdict
    if stability(A).semistable:
        # every candidate line (lines of A, joins of singular points, height <= 1)
        # on which a jump threshold fires must be a jump line
        for line in candidate_lines(A, 1):
            if threshold_fires(d, line in A.lines, restriction_count(A, line)):
                r = is_jump_line(A, line)
                if not r.is_jump:
                    bad.append(("threshold", line))
    line = _generic_line(A, rng)
    s = splitting_type(A, line)
    if s.a1 + s.a2 != -(d - 1):
        bad.append("splitting sum")
    lines = [l.coeffs for l in A.lines]
    if restricted_kernel_dims(lines, line.coeffs, d) != split_dims(s.a1, s.a2, d):
        bad.append(("kernel oracle", line))
    return bad


@pytest.mark.slow
def test_criterion_9_property_corpus():
    cfg = CorpusConfig(size=50, d_min=4, d_max=10, height=3)
    corpus = random_arrangements(cfg)
    assert len(corpus) >= 50 and all(4 <= A.d <= 10 for A in corpus)
    assert all(l.height <= 3 for A in corpus for l in A.lines)
    rng = random.Random(cfg.seed)
    bad = []
    for i, A in enumerate(corpus):
        try:
            f = _corpus_failures(A, rng)
        except Exception as exc:  # an internal invariant check raised
            f = [repr(exc)]
        if f:
            bad.append((i, str(A), f))
    report(9, f"property suite over {len(corpus)} random arrangements", bad)


def test_criterion_10_generic_tightness():
    got = [regularity(catalog.generic(d)) for d in (4, 5)]
    report(10, "generic 4- and 5-line arrangements have regularity d-2",
           [] if got == [2, 3] else [got])

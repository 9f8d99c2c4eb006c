"""Command-line front end.

    linarr analyze FILE [--json]
    linarr triple FILE --line INDEX [--json]
    linarr jump FILE [--height H] [--fit] [--json]
    linarr terao [FILE] [--d D --a A --M M] [--chain "BASE;S1,S2,..."] [--json]

Exit codes: 0 success, 1 usage, 2 invalid arrangement, 3 precondition not met.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bundle, derivations, terao
from .arrangement import (Arrangement, InvalidArrangement, Line, PreconditionError,
                          jacobian_degree, parse_line, poincare,
                          restriction_points, singular_points, triple)

EXIT_USAGE, EXIT_INVALID, EXIT_PRECONDITION = 1, 2, 3


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


# --------------------------------------------------------------------------
# arrangement files
# --------------------------------------------------------------------------


def parse_arrangement_text(text: str) -> Arrangement:
    """One line per projective line: three integers, '#' comments, blanks ignored."""
    triples = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        fields = body.split()
        if len(fields) != 3:
            raise InvalidArrangement(f"line {lineno}: expected three integers, got {body!r}")
        try:
            triples.append(tuple(int(f) for f in fields))
        except ValueError:
            raise InvalidArrangement(f"line {lineno}: non-integer coefficient in {body!r}")
    if not triples:
        raise InvalidArrangement("file contains no lines")
    return Arrangement.from_coeffs(triples)


def read_arrangement(path) -> Arrangement:
    return parse_arrangement_text(Path(path).read_text(encoding="utf-8"))


def format_arrangement(A: Arrangement) -> str:
    return "".join(f"{l.a} {l.b} {l.c}  # {l}\n" for l in A.lines)


# --------------------------------------------------------------------------
# report sections (machine format)
# --------------------------------------------------------------------------


def _line(l: Line) -> list[int]:
    return list(l.coeffs)


def lattice_section(A: Arrangement) -> dict:
    return {
        "d": A.d,
        "lines": [_line(l) for l in A.lines],
        "singular_points": [
            {"point": list(sp.point), "incident": sorted(sp.incident), "mu": sp.mu}
            for sp in singular_points(A)],
    }


def analyze_report(A: Arrangement) -> dict:
    pi = poincare(A)
    ch = bundle.chern(A)
    res = derivations.resolve(A)
    bad = derivations.validate_resolution(res, A.d, jacobian_degree(A))
    if bad:
        raise derivations.InvariantViolation(", ".join(bad))
    fr = derivations.freeness(A)
    st = bundle.stability(A)
    return {
        **lattice_section(A),
        "poincare": {"b1": pi.b1, "b2": pi.b2,
                     "factors": list(pi.factor_roots) if pi.factor_roots else None},
        "deg_jacobian": jacobian_degree(A),
        "chern": {"c1": ch.c1, "c2": ch.c2, "k": ch.k, "c1n": ch.c1n, "c2n": ch.c2n},
        "resolution": {"alphas": list(res.alphas), "betas": list(res.betas),
                       "regularity": res.regularity, "hilbert": list(res.hilbert)},
        "freeness": {"is_free": fr.is_free,
                     "exponents": list(fr.exponents) if fr.exponents else None},
        "stability": {"verdict": st.verdict, "witness_degree": st.witness_degree,
                      "bogomolov": st.bogomolov_passes},
    }


def triple_report(A: Arrangement, h: int) -> dict:
    tr = triple(A, h)
    check = derivations.deletion_check(A, h)
    reg = derivations.regularity(A)
    if tr.deleted.is_essential:
        reg_deleted = derivations.regularity(tr.deleted)
        bound = max(reg_deleted + 1, tr.restriction_count - 1)
    else:
        reg_deleted = bound = None
    return {
        "d": A.d,
        "line": _line(A.lines[h]),
        "index": h,
        "deleted": [_line(l) for l in tr.deleted.lines],
        "restriction_points": [list(p) for p in restriction_points(A, A.lines[h])],
        "multiplicities": list(tr.multiplicities),
        "restriction_count": tr.restriction_count,
        "deletion_check": {
            "deg_j": check.deg_j, "deg_j_deleted": check.deg_j_deleted,
            "deg_j_identity": check.deg_j_identity,
            "hilbert_rows": [list(r) for r in check.hilbert_rows],
            "hilbert_identity": check.hilbert_identity,
        },
        "regularity_deleted": reg_deleted,
        "regularity_bound": bound,
        "regularity": reg,
        "stability_clause": bundle.stability_sufficient(A, h),
    }


def jump_report(A: Arrangement, height: int, fit: bool) -> dict:
    st = bundle.stability(A)
    if not st.semistable:
        raise CliError(EXIT_PRECONDITION, "bundle is unstable; jump lines are not defined")
    scanned = bundle.scan_lines(A, height)
    jumps = [r for r in scanned if r.is_jump]
    out = {
        **lattice_section(A),
        "height": height,
        "scanned": len(scanned),
        "jump": [{"line": _line(r.line), "a1": r.splitting.a1, "a2": r.splitting.a2,
                  "is_jump": r.is_jump, "threshold": r.threshold_fired,
                  "in_arrangement": r.in_arrangement,
                  "restriction_count": r.restriction_count} for r in jumps],
        "non_jump_arrangement_lines": [_line(r.line) for r in scanned
                                       if r.in_arrangement and not r.is_jump],
    }
    if fit:
        out["fit"] = _fit_section(A, jumps, [r for r in scanned if not r.is_jump])
    return out


def _fit_section(A, jumps, non_jumps) -> dict:
    ch = bundle.chern(A)
    if ch.c1n != 0 or ch.c2n < 1:
        return {"applicable": False, "degree": None, "curves": []}
    try:
        got = bundle.fit_dual_curve([r.line for r in jumps], ch.c2n,
                                    [r.line for r in non_jumps])
    except bundle.NoCurveError:
        return {"applicable": True, "degree": ch.c2n, "curves": []}
    curves = [got] if isinstance(got, bundle.DualCurve) else list(got)
    return {"applicable": True, "degree": ch.c2n,
            "curves": [{"coefficients": list(c.coeffs), "form": str(c)} for c in curves]}


def terao_report(summary: terao.LatticeSummary, chain, A: Arrangement | None) -> dict:
    v = terao.verdict(summary, chain)
    out = {
        "summary": {"d": summary.d, "a": summary.a, "M": summary.M, "deg_j": summary.deg_j},
        "terao": {
            "candidates": [{"alphas": list(c.alphas), "betas": list(c.betas)}
                           for c in v.survivors],
            "trace": [[name, n] for name, n in v.trace],
            "forced_free": v.forced_free,
            "chain": ({"base": chain.base_regularity, "steps": list(chain.steps),
                       "bound": terao.chain_bound(chain)} if chain else None),
            "notes": list(v.notes),
        },
    }
    if A is not None:
        res = derivations.resolve(A)
        realized = terao.Candidate(res.alphas, res.betas)
        everything = terao.enumerate_candidates(summary.d, summary.a, summary.M)
        out["realized"] = {"alphas": list(res.alphas), "betas": list(res.betas),
                           "among_candidates": realized in everything,
                           "among_survivors": realized in v.survivors}
    return out


# --------------------------------------------------------------------------
# human-readable rendering
# --------------------------------------------------------------------------


def _fmt_line(coeffs) -> str:
    return str(parse_line(*coeffs))


def render_text(kind: str, rep: dict) -> str:
    out = []
    if "lines" in rep:
        out.append(f"d = {rep['d']}: " + ", ".join(_fmt_line(l) for l in rep["lines"]))
    if kind == "analyze":
        pts = rep["singular_points"]
        mults = sorted((p["mu"] + 1 for p in pts), reverse=True)
        out.append(f"singular points: {len(pts)} (multiplicities {mults})")
        p = rep["poincare"]
        fac = f" = (1+t)(1+{p['factors'][0]}t)(1+{p['factors'][1]}t)" if p["factors"] else ""
        out.append(f"poincare: (1+t)(1+{p['b1']}t+{p['b2']}t^2){fac}")
        out.append(f"deg J: {rep['deg_jacobian']}")
        c = rep["chern"]
        out.append(f"chern: c1={c['c1']} c2={c['c2']}; normalized by k={c['k']}: "
                   f"c1={c['c1n']} c2={c['c2n']}")
        r = rep["resolution"]
        out.append(f"resolution: alphas={r['alphas']} betas={r['betas']} "
                   f"regularity={r['regularity']}")
        f = rep["freeness"]
        out.append("free with exponents " + str(f["exponents"]) if f["is_free"] else "not free")
        s = rep["stability"]
        wit = f" (section in degree {s['witness_degree']})" if s["witness_degree"] is not None else ""
        out.append(f"stability: {s['verdict']}{wit}; Bogomolov inequality "
                   f"{'holds' if s['bogomolov'] else 'fails'}")
    elif kind == "triple":
        out.append(f"H = {_fmt_line(rep['line'])} (index {rep['index']})")
        out.append(f"|A''| = {rep['restriction_count']} points, multiplicities {rep['multiplicities']}")
        c = rep["deletion_check"]
        out.append(f"deg J: {c['deg_j']} - {c['deg_j_deleted']} = 2d-2-|A''|: {c['deg_j_identity']}")
        out.append(f"Hilbert exactness rows (t, dim D0_t, dim D0'_(t-1), t+2-|A''|): "
                   f"{c['hilbert_rows']} -> {c['hilbert_identity']}")
        out.append(f"regularity {rep['regularity']} <= bound {rep['regularity_bound']}")
        out.append(f"stability clause: {rep['stability_clause']}")
    elif kind == "jump":
        out.append(f"scanned {rep['scanned']} candidate lines (height {rep['height']}); "
                   f"{len(rep['jump'])} jump lines")
        for j in rep["jump"]:
            tag = "in A" if j["in_arrangement"] else "not in A"
            out.append(f"  {_fmt_line(j['line']):>12}  ({j['a1']},{j['a2']})  {tag}, "
                       f"|A''|={j['restriction_count']}, threshold={j['threshold']}")
        if "fit" in rep:
            fit = rep["fit"]
            if not fit["applicable"]:
                out.append("curve fit: not applicable (c1 of the normalized bundle is -1)")
            elif not fit["curves"]:
                out.append(f"curve fit: no curve of degree {fit['degree']}")
            else:
                for c in fit["curves"]:
                    out.append(f"jump curve (degree {fit['degree']}): {c['form']} = 0")
        out.append("(a candidate scan, not a proof that no other jump lines exist)")
    elif kind == "terao":
        s = rep["summary"]
        out.append(f"lattice: d={s['d']} a={s['a']} M={s['M']} deg J={s['deg_j']}")
        t = rep["terao"]
        out.append("trace: " + " -> ".join(f"{n} ({name})" for name, n in t["trace"]))
        for c in t["candidates"]:
            out.append(f"  survivor: alphas={c['alphas']} betas={c['betas']}")
        out.append(f"forced free: {t['forced_free']}")
        if "realized" in rep:
            r = rep["realized"]
            out.append(f"realized resolution alphas={r['alphas']} betas={r['betas']}; "
                       f"among candidates: {r['among_candidates']}")
    return "\n".join(out) + "\n"


def dump_json(rep: dict) -> str:
    return json.dumps(rep, indent=2) + "\n"


# --------------------------------------------------------------------------
# argument handling
# --------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="linarr", description="Exact analysis of line arrangements in P^2.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="lattice, Poincare, Chern, resolution, freeness, stability")
    a.add_argument("file")
    a.add_argument("--json", action="store_true")

    t = sub.add_parser("triple", help="deletion/restriction with respect to one line")
    t.add_argument("file")
    t.add_argument("--line", type=int, required=True, metavar="INDEX")
    t.add_argument("--json", action="store_true")

    j = sub.add_parser("jump", help="scan candidate lines for jumping splitting type")
    j.add_argument("file")
    j.add_argument("--height", type=int, default=2)
    j.add_argument("--fit", action="store_true", help="fit the jump curve in the dual plane")
    j.add_argument("--json", action="store_true")

    r = sub.add_parser("terao", help="enumerate and prune numerical resolutions for a lattice")
    r.add_argument("file", nargs="?")
    r.add_argument("--d", type=int)
    r.add_argument("--a", type=int)
    r.add_argument("--M", type=int)
    r.add_argument("--chain", help='"BASE;S1,S2,..." regularity chain')
    r.add_argument("--json", action="store_true")
    return p


def run(argv=None) -> tuple[int, str]:
    """Execute a command; returns (exit code, text for stdout)."""
    args = build_parser().parse_args(argv)
    try:
        A = None
        if getattr(args, "file", None):
            try:
                A = read_arrangement(args.file)
            except OSError as exc:
                raise CliError(EXIT_USAGE, f"cannot read {args.file}: {exc}")
            if not A.is_essential:
                raise CliError(EXIT_INVALID, "arrangement is a pencil (all lines concurrent)")
        if args.command == "analyze":
            rep = analyze_report(A)
        elif args.command == "triple":
            if not 0 <= args.line < A.d:
                raise CliError(EXIT_USAGE, f"--line must be in [0, {A.d - 1}]")
            if A.d < 4:
                raise CliError(EXIT_PRECONDITION, "triple reports need at least four lines")
            rep = triple_report(A, args.line)
        elif args.command == "jump":
            if args.height < 0:
                raise CliError(EXIT_USAGE, "--height must be nonnegative")
            rep = jump_report(A, args.height, args.fit)
        else:
            rep = _terao_command(args, A)
    except InvalidArrangement as exc:
        return EXIT_INVALID, f"invalid arrangement: {exc}\n"
    except CliError as exc:
        return exc.code, f"error: {exc}\n"
    text = dump_json(rep) if args.json else render_text(args.command, rep)
    return 0, text


def _terao_command(args, A):
    chain = None
    if args.chain:
        try:
            chain = terao.ChainSpec.parse(args.chain)
        except ValueError as exc:
            raise CliError(EXIT_USAGE, f"bad --chain {args.chain!r}: {exc}")
    if A is not None:
        try:
            summary = terao.LatticeSummary.from_arrangement(A)
        except PreconditionError as exc:
            raise CliError(EXIT_PRECONDITION, str(exc))
    else:
        if None in (args.d, args.a, args.M):
            raise CliError(EXIT_USAGE, "give an arrangement file or all of --d, --a, --M")
        summary = terao.LatticeSummary(args.d, args.a, args.M)
    if summary.d < 4 or not 1 <= summary.a <= (summary.d - 1) / 2 or summary.M < 1:
        raise CliError(EXIT_PRECONDITION,
                       f"lattice data outside the enumerable range: {summary}")
    return terao_report(summary, chain, A)


def main(argv=None) -> int:
    code, text = run(argv)
    (sys.stdout if code == 0 else sys.stderr).write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

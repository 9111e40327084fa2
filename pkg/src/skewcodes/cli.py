"""Command-line interface.

Subcommands: mds-search, enumerate, decompose, dual, minpoly, bound.
Exit codes: 0 success, 2 usage error, 3 enumeration budget exceeded,
4 violated operation precondition (e.g. a modulus without a two-sided
factorization).  SKEWCODES_BUDGET overrides the default work budget.
"""

from __future__ import annotations

import argparse
import csv as csv_mod
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field as dc_field
from functools import lru_cache

from . import bounds as bounds_mod
from . import codes as codes_mod
from .codes import (
    DEFAULT_BUDGET,
    code_from_generator_poly,
    code_record,
    decompose,
    dual_code,
    enumerate_right_divisors,
    min_weight_of_matrix,
)
from .errors import (
    BudgetExceededError,
    NotDivisorError,
    NotInvariantError,
    PreconditionError,
    SkewcodesError,
)
from .fields import Automorphism, Field, extend_field, field_create, field_from_order
from .linalg import MatFq
from .pseudolinear import PseudoLinearMap, semilinear_minimal_poly
from .skewpoly import RingCtx, SkewPoly, invariant_factorization, parse_poly

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_PRECONDITION = 4

NO_MODULUS = "∄"  # the no-constacyclic marker in table output


@dataclass
class JobConfig:
    """Resolved invocation parameters; round-trips through a dict."""

    command: str
    p: int
    s: int
    modulus: list | None = None
    theta_t: int = 0
    beta: str = "0"
    fmt: str = "pretty"
    out: str | None = None
    jobs: int = 1
    budget: int = DEFAULT_BUDGET
    params: dict = dc_field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "JobConfig":
        return cls(**d)


def _field_args(sub: argparse.ArgumentParser):
    sub.add_argument("--q", type=int, help="field order (prime power)")
    sub.add_argument("--p", type=int, help="characteristic (with --s)")
    sub.add_argument("--s", type=int, help="extension degree (with --p)")
    sub.add_argument(
        "--modulus", help="explicit modulus, ascending coefficients, e.g. [1,1,0,1]"
    )
    sub.add_argument("--theta", type=int, default=0, metavar="T",
                     help="automorphism exponent t in a -> a^(p^t)")
    sub.add_argument("--beta", default="0", help="derivation parameter")


def _common_args(sub: argparse.ArgumentParser):
    sub.add_argument("--format", choices=("csv", "json", "pretty"),
                     default="pretty", dest="fmt")
    sub.add_argument("--out", help="output path (default stdout)")
    sub.add_argument("--jobs", type=int, default=1)
    sub.add_argument("--budget", type=int, default=None,
                     help="enumeration budget (default 2^24 or SKEWCODES_BUDGET)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="skewcodes",
        description="Skew generalized cyclic codes over finite fields",
        epilog=(
            "Elements: prime fields use integers; extension fields use 0, 1, "
            "w, w^k or [c0,c1,...]. Polynomials: ascending coefficient lists "
            "like [1,0,w,1,1] or expressions like (X-5)(X-3), X^6-1."
        ),
    )
    sp = ap.add_subparsers(dest="command", required=True)

    m = sp.add_parser("mds-search", help="sweep geometric root grids for MDS codes")
    _field_args(m)
    m.add_argument("--n", type=int, required=True, help="code length, 2 <= n <= q-1")
    _common_args(m)

    e = sp.add_parser("enumerate", help="all codes from right divisors of a modulus")
    _field_args(e)
    e.add_argument("--f", required=True, help="monic modulus polynomial")
    _common_args(e)

    d = sp.add_parser("decompose", help="kernel decomposition of the ambient space")
    _field_args(d)
    d.add_argument("--f", required=True, help="monic modulus polynomial")
    _common_args(d)

    du = sp.add_parser("dual", help="dual code generator matrix")
    _field_args(du)
    du.add_argument("--f", required=True)
    du.add_argument("--g", required=True)
    _common_args(du)

    mp = sp.add_parser("minpoly", help="minimal polynomial of a semi-linear map")
    _field_args(mp)
    mp.add_argument("--M", required=True,
                    help="matrix rows [[..],[..]] or In for the n x n identity")
    _common_args(mp)

    b = sp.add_parser("bound", help="designed-distance certificate for a code")
    _field_args(b)
    b.add_argument("--f", required=True)
    b.add_argument("--g", required=True)
    b.add_argument("--bound-beta", dest="bound_beta", required=True,
                   help="root base element (in the field or its extension)")
    b.add_argument("--l", type=int, default=0)
    b.add_argument("--c", required=True, help="direction steps, e.g. 4 or 1,5")
    b.add_argument("--ss", default="", help="grid widths s_2..s_r, e.g. 1 or 1,2")
    b.add_argument("--delta", type=int, required=True)
    b.add_argument("--ext", type=int, default=1,
                   help="extension degree m hosting beta (default 1)")
    _common_args(b)
    return ap


def _resolve_field(args) -> Field:
    modulus = None
    if args.modulus:
        modulus = [int(c) for c in args.modulus.strip("[] ").split(",")]
    if args.q is not None:
        if args.p is not None or args.s is not None:
            raise _Usage("give either --q or --p/--s, not both")
        return field_from_order(args.q, modulus)
    if args.p is None or args.s is None:
        raise _Usage("field required: --q or both --p and --s")
    return field_create(args.p, args.s, modulus)


def _resolve_budget(args) -> int:
    if getattr(args, "budget", None):
        return args.budget
    env = os.environ.get("SKEWCODES_BUDGET", "")
    if env:
        return int(env)
    return DEFAULT_BUDGET


class _Usage(Exception):
    pass


def _ctx(args, field: Field) -> RingCtx:
    if args.theta < 0:
        raise _Usage("--theta must be >= 0")
    try:
        beta = field.parse_elem(args.beta)
    except ValueError as exc:
        raise _Usage(str(exc)) from None
    return RingCtx(field, Automorphism(field, args.theta % field.s), beta)


def _emit(text: str, args):
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


# -- distance workers (parallel sweeps) ---------------------------------------


@lru_cache(maxsize=None)
def _worker_field(p: int, s: int, modulus: tuple) -> Field:
    return field_create(p, s, modulus)


def _distance_task(task):
    p, s, modulus, rows, budget = task
    field = _worker_field(p, s, modulus)
    G = MatFq([[field.elem(v) for v in row] for row in rows], field)
    return min_weight_of_matrix(G, budget)


def _distances(matrices, field: Field, budget: int, jobs: int) -> list[int]:
    tasks = [
        (field.p, field.s, field.modulus,
         tuple(tuple(e.val for e in row) for row in G.entries), budget)
        for G in matrices
    ]
    if jobs <= 1 or len(tasks) <= 1:
        return [_distance_task(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_distance_task, tasks))


# -- subcommands ---------------------------------------------------------------


def cmd_mds_search(args) -> int:
    field = _resolve_field(args)
    if not 2 <= args.n <= field.q - 1:
        raise _Usage(f"need 2 <= n <= q - 1 = {field.q - 1}")
    budget = _resolve_budget(args)
    theta = Automorphism(field, args.theta % field.s)
    distance = None
    if args.jobs > 1:
        distance = lambda mats: _distances(mats, field, budget, args.jobs)
    rows = bounds_mod.mds_search(field, args.n, theta, budget, distance)
    if args.fmt == "json":
        _emit(_json_dump([r.record() for r in rows]), args)
    elif args.fmt == "csv":
        buf = io.StringIO()
        wr = csv_mod.writer(buf)
        wr.writerow(["q", "n", "k", "d", "g", "constacyclic_a"])
        for r in rows:
            consta = (
                ";".join(field.format_elem(a) for a in r.constacyclic)
                or NO_MODULUS
            )
            wr.writerow([field.q, r.n, r.k, r.d, r.g.to_text(), consta])
        _emit(buf.getvalue(), args)
    else:
        lines = []
        for r in rows:
            lines.append(f"q = {field.q}")
            lines.append(f"Code of type [{r.n}, {r.k}, {r.d}] over {field!r}")
            lines.append(f"Generator polynomial: {r.g.to_text()}")
            if r.constacyclic:
                for a in r.constacyclic:
                    lines.append(
                        f"Constacyclic with f = X^{r.n} - {field.format_elem(a)}"
                    )
            else:
                lines.append(f"Constacyclic modulus: {NO_MODULUS}")
            lines.append("-------------")
        _emit("\n".join(lines) + "\n", args)
    return EXIT_OK


def _enumerate_records(ctx: RingCtx, f: SkewPoly, budget: int, jobs: int):
    """Code records mirroring the search programs' printed output: one per
    dividing candidate tuple for a twisted ring, one per irreducible-power
    divisor in the commutative case."""
    field = ctx.field
    divisors = enumerate_right_divisors(f, budget)
    if ctx.is_commutative():
        literal: list[tuple[SkewPoly, SkewPoly]] = []  # (code generator, printed poly)
        for fi, alpha in invariant_factorization(f):
            for j in range(1, alpha + 1):
                g = fi**j
                if 1 <= g.degree <= f.degree - 1:
                    literal.append((g, g))
    else:
        literal = []
        for g in divisors:
            for c in field.nonzero_elements():
                literal.append((g, g.scale_left(c)))
    codes = {}
    for g in {g for g, _ in literal}:
        codes[g] = code_from_generator_poly(g, f)
    order = sorted(codes, key=lambda g: g.key())
    dists = _distances([codes[g].G for g in order], field, budget, jobs)
    dist_of = dict(zip(order, dists))
    records = []
    for g, shown in sorted(literal, key=lambda t: (t[0].key(), t[1].key())):
        C = codes[g]
        d = dist_of[g]
        records.append(
            (
                C,
                shown,
                d,
                code_record(
                    C,
                    d=d,
                    mds=(d == C.n - C.k + 1),
                    constacyclic=bounds_mod.constacyclic_moduli(g, C.n),
                    g_literal=shown,
                ),
            )
        )
    return records


def cmd_enumerate(args) -> int:
    field = _resolve_field(args)
    ctx = _ctx(args, field)
    try:
        f = parse_poly(args.f, ctx)
    except ValueError as exc:
        raise _Usage(str(exc)) from None
    budget = _resolve_budget(args)
    records = _enumerate_records(ctx, f, budget, args.jobs)
    if args.fmt == "json":
        _emit(_json_dump([rec for _, _, _, rec in records]), args)
    elif args.fmt == "csv":
        buf = io.StringIO()
        wr = csv_mod.writer(buf)
        wr.writerow(["q", "n", "k", "d", "g", "constacyclic_a"])
        for C, shown, d, rec in records:
            consta = ";".join(rec["constacyclic_a"]) or NO_MODULUS
            wr.writerow([field.q, C.n, C.k, d, shown.to_text(), consta])
        _emit(buf.getvalue(), args)
    else:
        lines = []
        ks, ds = [], []
        for C, shown, d, rec in records:
            lines.append(f"g = {shown.to_text()}")
            lines.append(repr(C.G))
            lines.append(f"Code of type: {C.n} {C.k} {d}")
            lines.append("-------------")
            ks.append(C.k)
            ds.append(d)
        lines.append(f"Spectrum of the distances for {f.to_text()}")
        lines.append(f"n = {f.degree}")
        lines.append(f"k = {ks}")
        lines.append(f"d = {ds}")
        _emit("\n".join(lines) + "\n", args)
    return EXIT_OK


def cmd_decompose(args) -> int:
    field = _resolve_field(args)
    ctx = _ctx(args, field)
    try:
        f = parse_poly(args.f, ctx)
    except ValueError as exc:
        raise _Usage(str(exc)) from None
    D = decompose(f)
    checks = _idempotent_checks(D)
    if args.fmt == "json":
        report = {
            "q": field.q,
            "theta_t": ctx.theta.t,
            "beta": field.format_elem(ctx.beta),
            "f": [field.format_elem(c) for c in f.coeffs],
            "two_sided": D.strict,
            "factors": [
                {
                    "poly": [field.format_elem(c) for c in fi.coeffs],
                    "multiplicity": alpha,
                }
                for fi, alpha in D.factorization
            ],
            "components": [
                {
                    "dimension": comp.dimension,
                    "kernel_is_linear": comp.kernel_is_linear,
                    "basis": [
                        [field.format_elem(e) for e in row]
                        for row in comp.space.entries
                    ],
                }
                for comp in D.components
            ],
            "idempotent_checks": checks,
        }
        _emit(_json_dump(report), args)
    else:
        lines = [f"f = {f.to_text()}"]
        fact_text = " * ".join(
            f"({fi.to_text()})^{alpha}" for fi, alpha in D.factorization
        )
        lines.append(f"factorization: {fact_text}")
        lines.append(f"generates a two-sided ideal: {'yes' if D.strict else 'no'}")
        for i, comp in enumerate(D.components, start=1):
            lin = "yes" if comp.kernel_is_linear else "no (GF(p)-span shown)"
            lines.append(
                f"U_{i}: dim {comp.dimension}, kernel GF(q)-linear: {lin}"
            )
            lines.append(repr(comp.space))
        lines.append(
            "idempotent checks: "
            f"squares={'ok' if checks['squares'] else 'FAIL'} "
            f"orthogonal={'ok' if checks['orthogonal'] else 'FAIL'} "
            f"sum=id={'ok' if checks['sum_is_identity'] else 'FAIL'}"
        )
        _emit("\n".join(lines) + "\n", args)
    return EXIT_OK


def _idempotent_checks(D) -> dict:
    mats = [comp.idempotent for comp in D.components]
    if not mats:
        return {"squares": True, "orthogonal": True, "sum_is_identity": True}
    gfp = mats[0].field
    size = mats[0].rows
    ident = MatFq.identity(size, gfp)
    squares = all(m * m == m for m in mats)
    orthogonal = all(
        (mats[i] * mats[j]).entries == MatFq.zeros(size, size, gfp).entries
        for i in range(len(mats))
        for j in range(len(mats))
        if i != j
    )
    total = mats[0]
    for m in mats[1:]:
        total = MatFq(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(total.entries, m.entries)
            ],
            gfp,
        )
    return {
        "squares": squares,
        "orthogonal": orthogonal,
        "sum_is_identity": total == ident,
    }


def cmd_dual(args) -> int:
    field = _resolve_field(args)
    ctx = _ctx(args, field)
    try:
        f = parse_poly(args.f, ctx)
        g = parse_poly(args.g, ctx)
    except ValueError as exc:
        raise _Usage(str(exc)) from None
    C = code_from_generator_poly(g, f)
    H = dual_code(C)
    if args.fmt == "json":
        report = {
            "q": field.q,
            "theta_t": ctx.theta.t,
            "result_poly": None,
            "result_poly_text": None,
            "result_matrix": [
                [field.format_elem(e) for e in row] for row in H.entries
            ],
        }
        _emit(_json_dump(report), args)
    else:
        _emit(repr(H) + "\n", args)
    return EXIT_OK


def _parse_matrix(text: str, field: Field) -> MatFq:
    text = text.strip()
    if text.startswith(("I", "i")) and text[1:].isdigit():
        return MatFq.identity(int(text[1:]), field)
    if not (text.startswith("[[") and text.endswith("]]")):
        raise _Usage("matrix must be [[row],[row],...] or In")
    body = text[1:-1]
    rows, depth, cur = [], 0, []
    for ch in body:
        if ch == "[":
            depth += 1
            if depth == 1:
                cur = []
                continue
        if ch == "]":
            depth -= 1
            if depth == 0:
                rows.append("".join(cur))
                continue
        if depth >= 1:
            cur.append(ch)
    parsed = []
    for row in rows:
        parsed.append([field.parse_elem(tok) for tok in row.split(",") if tok.strip()])
    return MatFq(parsed, field)


def cmd_minpoly(args) -> int:
    field = _resolve_field(args)
    M = _parse_matrix(args.M, field)
    theta = Automorphism(field, args.theta % field.s)
    T = PseudoLinearMap(M, theta, field.zero())
    m = semilinear_minimal_poly(T)
    if args.fmt == "json":
        report = {
            "q": field.q,
            "theta_t": theta.t,
            "result_poly": [field.format_elem(c) for c in m.coeffs],
            "result_poly_text": m.to_text(),
            "result_matrix": None,
        }
        _emit(_json_dump(report), args)
    else:
        _emit(m.to_text() + "\n", args)
    return EXIT_OK


def cmd_bound(args) -> int:
    field = _resolve_field(args)
    ctx = _ctx(args, field)
    try:
        f = parse_poly(args.f, ctx)
        g = parse_poly(args.g, ctx)
    except ValueError as exc:
        raise _Usage(str(exc)) from None
    C = code_from_generator_poly(g, f)
    if args.ext > 1:
        ext, embed = extend_field(field, args.ext)
        beta = ext.parse_elem(args.bound_beta)
        embedding = embed
    else:
        beta = field.parse_elem(args.bound_beta)
        embedding = None
    cs = tuple(int(t) for t in args.c.split(",") if t.strip())
    ss = tuple(int(t) for t in args.ss.split(",") if t.strip())
    res = bounds_mod.verify_bound_general(
        C, beta, args.l, cs, ss, args.delta, embedding
    )
    ok = isinstance(res, bounds_mod.BoundCertificate)
    if args.fmt == "json":
        report = {
            "q": field.q,
            "n": C.n,
            "k": C.k,
            "g": [field.format_elem(c) for c in g.coeffs],
            "f": [field.format_elem(c) for c in f.coeffs],
            "theta_t": ctx.theta.t,
            "beta": beta.field.format_elem(beta),
            "extension_degree": args.ext,
            "l": args.l,
            "cs": list(cs),
            "ss": list(ss),
            "delta": args.delta,
            "verified": ok,
            "claimed_bound": res.claimed_bound if ok else None,
            "failure": (
                None
                if ok
                else {
                    "condition": res.condition,
                    "detail": res.detail,
                    "index": list(res.index),
                }
            ),
        }
        _emit(_json_dump(report), args)
    else:
        if ok:
            _emit(
                f"certificate: d >= {res.claimed_bound} for the "
                f"[{C.n}, {C.k}] code with g = {g.to_text()}\n",
                args,
            )
        else:
            _emit(f"hypothesis failed ({res.condition}): {res.detail}\n", args)
    return EXIT_OK


_COMMANDS = {
    "mds-search": cmd_mds_search,
    "enumerate": cmd_enumerate,
    "decompose": cmd_decompose,
    "dual": cmd_dual,
    "minpoly": cmd_minpoly,
    "bound": cmd_bound,
}


def config_from_args(args) -> JobConfig:
    field = _resolve_field(args)
    params = {
        k: v
        for k, v in vars(args).items()
        if k not in {"command", "q", "p", "s", "modulus", "theta", "beta",
                     "fmt", "out", "jobs", "budget"}
    }
    return JobConfig(
        command=args.command,
        p=field.p,
        s=field.s,
        modulus=list(field.modulus),
        theta_t=args.theta % field.s,
        beta=args.beta,
        fmt=args.fmt,
        out=args.out,
        jobs=args.jobs,
        budget=_resolve_budget(args),
        params=params,
    )


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return _COMMANDS[args.command](args)
    except _Usage as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (NotInvariantError, NotDivisorError, PreconditionError) as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except SkewcodesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

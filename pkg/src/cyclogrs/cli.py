"""Command-line entry point: ``cyclogrs <subcommand> ...``.

Exit status is 0 on success, 2 on usage errors and 1 when a computation
precondition fails.  Nothing in the pipeline is random, so identical flags
give identical output bytes.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path

from . import __version__
from .bkt import BktError, BktTable, ingest, shipped_snapshot, snapshot_path, verdict
from .bound import mainbound, sfsc_dims_all_k
from .codes import (
    CodeError,
    GrsSpec,
    format_matrix,
    grs,
    grs_dual_closed_form,
    min_distance_exact,
    parse_matrix,
    subfield_subcode,
)
from .cosets import coset_unions, minimal_cosets, union_elements
from .galois import FieldError, FieldSpec, format_field, make_field, parse_field
from .ring import format_poly_dense, is_cyclotomic, parse_poly, zero_set
from .search import (
    SearchHit,
    base_code,
    candidate,
    derive_chain,
    hits_to_json,
    parse_steps,
    rebuild,
    run_search,
)


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _ints(text: str) -> list[int]:
    return [int(t) for t in text.replace(" ", "").split(",") if t]


# --- shared argument groups ----------------------------------------------------

def _add_field_args(sp):
    sp.add_argument("--p", type=int, help="characteristic (prime)")
    sp.add_argument("--m", type=int, default=1, help="extension degree")
    sp.add_argument("--modulus", help="modulus coefficients, low degree first, e.g. 1,0,1,1,1,0,0,0,1")
    sp.add_argument("--field", help="field description p^m/c0,...,cm (overrides --p/--m/--modulus)")


def _field(args) -> FieldSpec:
    if args.field:
        return parse_field(args.field)
    if args.p is None:
        raise UsageError("either --field or --p is required")
    modulus = _ints(args.modulus) if args.modulus else None
    return make_field(args.p, args.m, modulus)


def _add_twist_args(sp, k_required=True):
    sp.add_argument("--alg", choices=("1", "2"), default="1",
                    help="1: --cosets is the twist support; 2: --cosets are removed points")
    sp.add_argument("--cosets", help="comma-separated coset representatives")
    sp.add_argument("--twist", help="twist polynomial, e.g. 'x^25 + x^5 + x' (alg 1 only)")
    sp.add_argument("--k", type=int, required=k_required)


def _candidate(args, field: FieldSpec):
    """(spec without k, zero set, label dict) from --cosets/--twist."""
    if args.twist:
        if args.alg != "1":
            raise UsageError("--twist is only meaningful with --alg 1")
        g = parse_poly(field, args.twist)
        if g.is_zero():
            raise CodeError("twist polynomial is zero")
        spec = GrsSpec.from_twist(g, 0)
        return spec, zero_set(g), {"twist": format_poly_dense(g), "cyclotomic": bool(is_cyclotomic(g))}
    if not args.cosets:
        raise UsageError("one of --cosets or --twist is required")
    reps = _ints(args.cosets)
    spec, Z, g = candidate(field, reps, "alg" + args.alg)
    label = {"cosets": reps}
    if g is not None:
        label["twist"] = format_poly_dense(g)
    return spec, Z, label


def _resolve_bkt(path: str) -> Path:
    """A path as given, else a bundled snapshot of that name (e.g. ``fig5.csv``)."""
    if Path(path).exists():
        return Path(path)
    bundled = snapshot_path(path)
    if bundled.exists():
        return bundled
    raise OSError(f"best-known table {path!r} not found (neither a file nor a bundled snapshot)")


def _tables(paths, p: int) -> BktTable:
    return ingest([_resolve_bkt(x) for x in paths], p) if paths else shipped_snapshot(p)


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# --- subcommands ---------------------------------------------------------------

def cmd_field(args):
    F = _field(args)
    info = {"field": format_field(F), "p": F.p, "m": F.m, "q": F.q, "N": F.N,
            "modulus": list(F.modulus), "eta": list(F.eta.coeffs)}
    if args.format == "tsv":
        _write("".join(f"{k}\t{v if not isinstance(v, list) else ','.join(map(str, v))}\n"
                       for k, v in info.items()), None)
    else:
        _write(_dump(info), None)


def cmd_cosets(args):
    F = _field(args)
    cos = minimal_cosets(F)
    if args.format == "json":
        _write(_dump([{"b": c.b, "size": c.n_b, "elements": list(c.elements)} for c in cos]), args.out)
    else:
        _write("".join(f"{c.b}\t{c.n_b}\t{','.join(map(str, c.elements))}\n" for c in cos), args.out)


def cmd_grs(args):
    F = _field(args)
    spec, _, label = _candidate(args, F)
    spec = dataclasses.replace(spec, k=args.k)
    if args.dual:
        spec = grs_dual_closed_form(spec)
    code = grs(spec)
    if args.matrix_out:
        Path(args.matrix_out).write_text(format_matrix(code))
    _write(_dump({"field": format_field(F), **code.summary(), **label}), args.out)


def cmd_sfsc(args):
    F = _field(args)
    if args.matrix:
        if args.cosets or args.twist:
            raise UsageError("--matrix excludes --cosets/--twist")
        parent = parse_matrix(F, Path(args.matrix).read_text())
        code = subfield_subcode(parent, method=args.method)
        label = {"source": args.matrix}
    else:
        if args.k is None:
            raise UsageError("--k is required with --cosets/--twist")
        spec, _, label = _candidate(args, F)
        if args.cosets:
            code = base_code(F, _ints(args.cosets), "alg" + args.alg, args.k)
        else:
            D = grs(grs_dual_closed_form(dataclasses.replace(spec, k=args.k)))
            code = subfield_subcode(D, method=args.method)
    if args.matrix_out:
        Path(args.matrix_out).write_text(format_matrix(code))
    _write(_dump({"field": format_field(F), **code.summary(), **label}), args.out)


def _bound_table(report) -> str:
    r = report
    lines = [f"n={r.n}  k={r.k}  m={r.m}  orientation={r.orientation}  |A|={r.deg_bound}",
             f"{'b':>6} {'n_b':>4} {'|I_b∩A|':>8} {'term':>6}"]
    lines += [f"{t.b:>6} {t.n_b:>4} {t.in_A:>8} {t.term:>6}" for t in r.terms]
    lines.append(f"{'n - m|A|':>20} {r.naive:>6}")
    lines.append(f"{'bound':>20} {r.bound:>6}")
    if r.exact_dim is not None:
        lines.append(f"{'exact dimension':>20} {r.exact_dim:>6}")
        lines.append(f"{'kernel dimension':>20} {r.kernel_dim:>6}")
        lines.append(f"{'strict':>20} {str(r.strict).lower():>6}")
    return "\n".join(lines) + "\n"


def cmd_bound(args):
    F = _field(args)
    if args.zero_cosets:
        Z = frozenset(union_elements(F, _ints(args.zero_cosets)))
    else:
        _, Z, _ = _candidate(args, F)
    if args.sweep:
        from .report import plot_bound_sweep, sweep_tsv

        n = F.N - len(Z)
        exps = tuple(j for j in range(F.N) if j not in Z)
        dims = sfsc_dims_all_k(F, GrsSpec(F, exps, (1,) * n, 0))
        reports = []
        for k in range(0, n + 1):
            r = mainbound(F, Z, k, args.orientation)
            D = r.deg_bound
            exact = dims[D]
            reports.append(dataclasses.replace(r, exact_dim=exact, kernel_dim=exact - n + F.m * D,
                                               strict=exact > r.bound))
        if args.report:
            out = Path(args.report)
            out.mkdir(parents=True, exist_ok=True)
            (out / "bound.tsv").write_text(sweep_tsv(reports))
            plot_bound_sweep(reports, out / "bound.png", title=f"GF({F.p}^{F.m}), n={n}")
        if args.format == "json":
            _write(_dump([r.to_dict() for r in reports]), args.out)
        else:
            _write(sweep_tsv(reports), args.out)
        return
    if args.k is None:
        raise UsageError("--k is required (or use --sweep)")
    report = mainbound(F, Z, args.k, args.orientation, exact=not args.no_exact)
    _write(_bound_table(report) if args.format == "table" else _dump(report.to_dict()), args.out)


def cmd_search(args):
    F = _field(args)
    table = _tables(args.bkt, F.p)
    if args.unions:
        unions = [tuple(_ints(u)) for u in args.unions.split(";") if u.strip()]
        for u in unions:
            union_elements(F, u)
    else:
        unions = list(coset_unions(F, args.max_parts, args.include_zero_coset))
    hits = run_search(F, "alg" + args.alg, unions, (args.k_min, args.k_max), table, jobs=args.jobs)
    _emit_hits(hits, args, F)


def _emit_hits(hits, args, F):
    if args.emit_matrices:
        d = Path(args.emit_matrices)
        d.mkdir(parents=True, exist_ok=True)
        for i, h in enumerate(hits):
            name = f"{i:04d}_{h.kind}_{h.n}_{h.dim}_{h.d_lb}.txt"
            (d / name).write_text(format_matrix(rebuild(h)))
    if args.report:
        from .report import hits_tsv, plot_hits

        out = Path(args.report)
        out.mkdir(parents=True, exist_ok=True)
        (out / "hits.tsv").write_text(hits_tsv(hits))
        plot_hits(hits, out / "hits.png", title=f"GF({F.p}^{F.m})")
    if args.format == "tsv":
        from .report import hits_tsv

        _write(hits_tsv(hits), args.out)
    else:
        _write(hits_to_json(hits), args.out)


def cmd_derive(args):
    if args.hits:
        data = json.loads(Path(args.hits).read_text())
        if not 0 <= args.index < len(data):
            raise UsageError(f"--index {args.index} outside 0..{len(data) - 1}")
        hit = SearchHit.from_dict(data[args.index])
        F = parse_field(hit.field)
    else:
        F = _field(args)
        if args.k is None or not args.cosets:
            raise UsageError("without --hits, --cosets and --k are required")
        reps = _ints(args.cosets)
        alg = "alg" + args.alg
        code = base_code(F, reps, alg, args.k)
        _, _, g = candidate(F, reps, alg)
        table0 = _tables(args.bkt, F.p)
        n, dim, d = code.params
        hit = SearchHit(format_field(F), F.p, F.m, alg, alg, reps,
                        format_poly_dense(g) if g is not None else None, args.k, n, dim, d,
                        code.provenance, table0.lookup(n, dim), verdict(table0, n, dim, d))
    table = _tables(args.bkt, F.p)
    hits = derive_chain(hit, parse_steps(args.steps or ""), table)
    _emit_hits(hits, args, F)


def cmd_mindist(args):
    F = _field(args)
    code = parse_matrix(F, Path(args.matrix).read_text())
    d = min_distance_exact(code, args.budget)
    _write(_dump({"field": format_field(F), "n": code.n, "k": code.k, "d": d, "provenance": "exact"}), args.out)


def cmd_bkt_import(args):
    table = ingest([_resolve_bkt(x) for x in args.files], args.p, args.snapshot_date)
    if args.out:
        Path(args.out).write_text(table.to_csv())
    _write(_dump({"p": table.p, "entries": len(table), "source": table.source,
                  "snapshot_date": table.snapshot_date}), None)


def cmd_bkt_lookup(args):
    table = _tables(args.bkt, args.p)
    best = table.lookup(args.n, args.k)
    out = {"p": args.p, "n": args.n, "k": args.k, "d_best": best}
    if args.d is not None:
        out["d"] = args.d
        out["verdict"] = verdict(table, args.n, args.k, args.d)
    _write(_dump(out), None)


# --- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cyclogrs", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    ap.add_argument("--seedless", action="store_true",
                    help="accepted for scripts; the pipeline never uses randomness")
    ap.add_argument("-v", "--verbose", action="count", default=0)
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("field", help="describe GF(p^m)")
    _add_field_args(sp)
    sp.add_argument("--format", choices=("json", "tsv"), default="json")
    sp.set_defaults(func=cmd_field)

    sp = sub.add_parser("cosets", help="minimal cyclotomic cosets as TSV")
    _add_field_args(sp)
    sp.add_argument("--format", choices=("json", "tsv"), default="tsv")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_cosets)

    sp = sub.add_parser("grs", help="build GRS_k<g> over GF(p^m)")
    _add_field_args(sp)
    _add_twist_args(sp)
    sp.add_argument("--dual", action="store_true", help="emit the closed-form dual GRS code instead")
    sp.add_argument("--matrix-out")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_grs)

    sp = sub.add_parser("sfsc", help="subfield-subcode of a matrix, or E = dual(trace(GRS_k<g>))")
    _add_field_args(sp)
    _add_twist_args(sp, k_required=False)
    sp.add_argument("--matrix", help="generator matrix file over GF(p^m)")
    sp.add_argument("--method", choices=("delsarte", "kernel"), default="delsarte")
    sp.add_argument("--matrix-out")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_sfsc)

    sp = sub.add_parser("bound", help="coset-counting lower bound on the subfield-subcode dimension")
    _add_field_args(sp)
    _add_twist_args(sp, k_required=False)
    sp.add_argument("--zero-cosets", help="representatives whose union is the zero set Z_g")
    sp.add_argument("--orientation", choices=("dual", "parent"), default="dual",
                    help="dual: k is the dimension of GRS_k<g> (search convention); "
                         "parent: k is the dimension of the code whose subfield-subcode is taken")
    sp.add_argument("--no-exact", action="store_true", help="skip the exact dimension computation")
    sp.add_argument("--sweep", action="store_true", help="every k from 0 to n, with exact dimensions")
    sp.add_argument("--report", help="directory for bound.tsv and bound.png (with --sweep)")
    sp.add_argument("--format", choices=("json", "table", "tsv"), default="json")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_bound)

    sp = sub.add_parser("search", help="search coset unions for codes matching or beating a table")
    _add_field_args(sp)
    sp.add_argument("--alg", choices=("1", "2"), default="1")
    sp.add_argument("--max-parts", type=int, default=3)
    sp.add_argument("--unions", help="explicit unions, e.g. '1;31,32' (overrides --max-parts)")
    sp.add_argument("--include-zero-coset", action="store_true")
    sp.add_argument("--k-min", type=int, default=1)
    sp.add_argument("--k-max", type=int)
    sp.add_argument("--bkt", action="append", help="best-known CSV (repeatable); default: bundled snapshots")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--emit-matrices", help="directory for generator matrices of the hits")
    sp.add_argument("--report", help="directory for hits.tsv and hits.png")
    sp.add_argument("--format", choices=("json", "tsv"), default="json")
    sp.add_argument("--out", help="hits file (default: stdout)")
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("derive", help="apply shorten/puncture steps to a hit")
    _add_field_args(sp)
    sp.add_argument("--hits", help="hits.json from a search")
    sp.add_argument("--index", type=int, default=0)
    sp.add_argument("--alg", choices=("1", "2"), default="1")
    sp.add_argument("--cosets")
    sp.add_argument("--k", type=int)
    sp.add_argument("--steps", help="e.g. 'P:240;S:239,238' (S = shorten, P = puncture, 1-based)")
    sp.add_argument("--bkt", action="append")
    sp.add_argument("--emit-matrices")
    sp.add_argument("--report")
    sp.add_argument("--format", choices=("json", "tsv"), default="json")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_derive)

    sp = sub.add_parser("mindist", help="exact minimum distance by enumeration")
    _add_field_args(sp)
    sp.add_argument("--matrix", required=True)
    sp.add_argument("--budget", type=int, default=2**24)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_mindist)

    sp = sub.add_parser("bkt", help="best-known table management")
    bsub = sp.add_subparsers(dest="bkt_command", required=True)
    bp = bsub.add_parser("import", help="validate CSV snapshots and write a merged table")
    bp.add_argument("files", nargs="+")
    bp.add_argument("--p", type=int, required=True)
    bp.add_argument("--snapshot-date")
    bp.add_argument("--out")
    bp.set_defaults(func=cmd_bkt_import)
    bp = bsub.add_parser("lookup", help="best-known d for (n, k), optionally a verdict for d")
    bp.add_argument("--p", type=int, required=True)
    bp.add_argument("--n", type=int, required=True)
    bp.add_argument("--k", type=int, required=True)
    bp.add_argument("--d", type=int)
    bp.add_argument("--bkt", action="append")
    bp.set_defaults(func=cmd_bkt_lookup)
    return ap


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except UsageError as exc:
        print(f"cyclogrs {args.command}: usage error: {exc}", file=sys.stderr)
        return 2
    except (FieldError, CodeError, BktError, ValueError, OSError) as exc:
        print(f"cyclogrs {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())

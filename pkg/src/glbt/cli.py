"""Command line interface.

Exit codes: 0 success, 1 usage or input error, 2 a verification command
found a theorem verdict that failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from . import geometry as geo
from .complex import FaceLattice, UnknownVertexError, pyramid_lattice
from .experiment import fit_exponent, records_to_csv, run_approximation, strictly_increasing
from .gvec import simplicial_g, toric_g
from .homology import alpha, check_qglbt, check_zero_map, sample_vertex_sets
from .io import DocumentError, document_from_config, dumps, load_config
from .sralgebra import GenericityError, GeometricComplex, SRError, Subdivided, lefschetz_injectivity, socle_kernel_dims, sr_artinian_dims

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERDICT = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# -- output ------------------------------------------------------------------


def _jsonable(x: Any) -> Any:
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _csv_value(x: Any) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (list, tuple)):
        return " ".join(_csv_value(v) for v in x)
    return str(x)


def _render(report: dict, fmt: str, csv_line: str | None = None) -> str:
    if fmt == "json":
        return json.dumps(_jsonable(report), indent=2) + "\n"
    if csv_line is not None:
        return csv_line + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(list(report))
    w.writerow([_csv_value(v) for v in report.values()])
    return buf.getvalue()


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


# -- inputs --------------------------------------------------------------------


def _load(args) -> geo.PointConfiguration:
    if not args.inp:
        raise UsageError("--in FILE is required")
    return load_config(args.inp, rationalize=getattr(args, "rationalize", False))


def _parse_W(args, L: FaceLattice) -> list[tuple[int, ...]]:
    """Vertex sets from --W, or seeded samples from --W-seed/--W-density."""
    if args.W is not None:
        names = [x for x in args.W.split(",") if x != ""]
        try:
            return [tuple(sorted(L.vertex_indices(names)))]
        except UnknownVertexError as e:
            raise UsageError(f"unknown vertex label {e.args[0]!r}") from None
    if args.W_seed is not None:
        dens = args.W_density if args.W_density is not None else 0.5
        return sample_vertex_sets(L.n_vertices, args.W_seed, args.trials, (dens,))
    raise UsageError("give --W or --W-seed")


# -- commands ------------------------------------------------------------------

GENERATORS = ("simplex", "cube", "cross", "cyclic", "stacked", "stacked-chain", "hypersimplex", "sphere", "pyramid", "prism")


def cmd_gen(args) -> int:
    kind = args.kind
    d = args.d
    if kind in ("pyramid", "prism"):
        base = _load(args)
        pc = base
        for _ in range(args.folds):
            pc = geo.pyramid(pc) if kind == "pyramid" else geo.prism(pc)
    elif d is None:
        raise UsageError("--d is required")
    elif kind == "simplex":
        pc = geo.simplex(d)
    elif kind == "cube":
        pc = geo.cube(d)
    elif kind == "cross":
        pc = geo.cross_polytope(d)
    elif kind == "cyclic":
        pc = geo.cyclic(d, _need(args.n, "--n"))
    elif kind in ("stacked", "stacked-chain"):
        pc = geo.stacked(d, _need(args.m, "--m"), args.seed, chain=kind == "stacked-chain")
    elif kind == "hypersimplex":
        pc = geo.hypersimplex(args.m if args.m is not None else 2, d + 1)
    else:
        pc = geo.sample_sphere_polytope(d, _need(args.n, "--n"), args.seed)
    seed = args.seed if kind in ("stacked", "sphere") else None
    _emit(args, dumps(document_from_config(pc, name=args.name or kind, seed=seed)))
    return EXIT_OK


def _need(x, flag):
    if x is None:
        raise UsageError(f"{flag} is required")
    return x


def cmd_fvector(args) -> int:
    L = geo.convex_hull(_load(args)).lattice
    f = L.f_vector()
    _emit(args, _render({"f": f}, args.format, ",".join(map(str, f))))
    return EXIT_OK


def cmd_gvector(args) -> int:
    L = geo.convex_hull(_load(args)).lattice
    if args.kind == "simplicial":
        if not L.is_simplicial():
            raise UsageError("polytope is not simplicial")
        g = simplicial_g(L.f_vector(), L.dim)
    else:
        g = toric_g(L)
    rep = {"kind": g.kind, "g": list(g.g), "h": list(g.h)}
    _emit(args, _render(rep, args.format, g.as_csv()))
    negative = any(x < 0 for x in g.g)
    return EXIT_VERDICT if negative else EXIT_OK


def cmd_alpha(args) -> int:
    L = geo.convex_hull(_load(args)).lattice
    rows = []
    for W in _parse_W(args, L):
        r = alpha(L, W, args.k)
        rows.append({"W": [L.labels[v] for v in W], "k": args.k, "alpha": r.image_rank, "betti_sub": r.betti_sub, "betti_super": r.betti_super})
    _emit(args, _render_rows(rows, args.format))
    return EXIT_OK


def _render_rows(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(_jsonable(rows if len(rows) != 1 else rows[0]), indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if rows:
        w.writerow(list(rows[0]))
    for r in rows:
        w.writerow([_csv_value(v) for v in r.values()])
    return buf.getvalue()


def cmd_qglbt(args) -> int:
    L = geo.convex_hull(_load(args)).lattice
    gk = toric_g(L)[args.k]
    rows = []
    ok = True
    for W in _parse_W(args, L):
        r = check_qglbt(L, W, args.k, g_k=gk)
        ok &= r.holds
        rows.append({"W": [L.labels[v] for v in W], "k": args.k, "lhs": r.lhs, "rhs": r.rhs, "holds": r.holds})
    _emit(args, _render_rows(rows, args.format))
    return EXIT_OK if ok else EXIT_VERDICT


def cmd_zero(args) -> int:
    L = geo.convex_hull(_load(args)).lattice
    samples = _parse_W(args, L) if (args.W is not None or args.W_seed is not None) else None
    r = check_zero_map(L, args.k, samples, seed=args.seed, per_density=args.per_density)
    rep = {
        "applicable": r.applicable,
        "g_k": r.g_k,
        "trials": len(r.trials),
        "all_alpha_zero": r.all_zero,
        "missing_simplices": [[L.labels[v] for v in s] for s in r.missing],
        "missing_outside_facets": [[L.labels[v] for v in s] for s in r.missing_outside_facets],
        "holds": r.holds,
        "note": r.note,
    }
    _emit(args, _render(rep, args.format))
    return EXIT_OK if r.holds else EXIT_VERDICT


def cmd_glbt(args) -> int:
    pc = _load(args)
    r = geo.glbt_triangulation(pc, args.k)
    rep = {
        "k": args.k,
        "g_k": r.g_k,
        "simplices": [[pc.labels[i] for i in s] for s in r.simplices],
        "verdict": r.verdict,
        "mode": r.report.mode,
        "simplex_volume_sum": r.report.simplex_volume_sum,
        "hull_volume": r.report.hull_volume,
        "failure": r.report.failure,
    }
    _emit(args, _render(rep, args.format))
    return EXIT_OK if r.consistent else EXIT_VERDICT


def cmd_sr_dims(args) -> int:
    hull = geo.convex_hull(_load(args))
    gc = GeometricComplex.boundary_of(hull)
    dims = sr_artinian_dims(gc, cap=args.cap).dims
    _emit(args, _render({"dims": list(dims)}, args.format, ",".join(map(str, dims))))
    return EXIT_OK


def cmd_socle(args) -> int:
    hull = geo.convex_hull(_load(args))
    L = hull.lattice
    sub = Subdivided.of(hull)
    ok = True
    rows = []
    for W in _parse_W(args, L):
        r = socle_kernel_dims(sub, W, args.k)
        ok &= r.holds
        rows.append({"W": [L.labels[v] for v in W], "k": args.k, "kernel_dim": r.kernel_dim, "betti_target": r.betti_target, "holds": r.holds})
    _emit(args, _render_rows(rows, args.format))
    return EXIT_OK if ok else EXIT_VERDICT


def cmd_lefschetz(args) -> int:
    hull = geo.convex_hull(_load(args))
    gc = GeometricComplex.boundary_of(hull)
    r = lefschetz_injectivity(gc, args.k, seed=args.seed)
    gk = toric_g(hull.lattice)[args.k]
    rep = {"k": args.k, "quotient_dim": r.quotient_dim, "g_k": gk, "injective": r.injective, "seeds": r.seeds_tried, "holds": r.injective and r.quotient_dim == gk}
    _emit(args, _render(rep, args.format))
    return EXIT_OK if rep["holds"] else EXIT_VERDICT


def cmd_approx(args) -> int:
    try:
        ns = [int(x) for x in args.ns.split(",")]
    except ValueError:
        raise UsageError("--ns must be a comma-separated list of integers") from None
    seeds = [args.seed] if args.seeds is None else [int(x) for x in args.seeds.split(",")]
    records = []
    for s in seeds:
        records.extend(run_approximation(args.d, args.k, ns, s, timing=args.timing))
    monotone = all(strictly_increasing([r for r in records if r.seed == s]) for s in seeds)
    if args.format == "json":
        rep = {
            "records": [
                {"d": r.d, "k": r.k, "n": r.n, "seed": r.seed, "eps": r.eps, "g_k": r.g_k} | ({"runtime_ms": r.runtime_ms} if args.timing else {})
                for r in records
            ],
            "monotone": monotone,
        }
        if len(records) >= 4:
            fit = fit_exponent(records)
            rep["slope"] = round(fit.slope, 6)
            rep["residual"] = round(fit.residual, 6)
        text = json.dumps(_jsonable(rep), indent=2) + "\n"
    else:
        text = records_to_csv(records, timing=args.timing)
    _emit(args, text)
    return EXIT_OK if monotone else EXIT_VERDICT


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="glbt", description="Toric g-vectors and generalized lower bound checks.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, needs_in=True, k=False, W=False):
        sp.add_argument("--in", dest="inp", required=needs_in, help="polytope JSON (or .off) file")
        sp.add_argument("--out", help="write the report here instead of stdout")
        sp.add_argument("--format", choices=("json", "csv"), default="csv")
        sp.add_argument("--rationalize", action="store_true", help="snap OFF floats to rationals (lossy)")
        if k:
            sp.add_argument("--k", type=int, required=True)
        if W:
            sp.add_argument("--W", help="comma-separated vertex labels")
            sp.add_argument("--W-seed", dest="W_seed", type=int)
            sp.add_argument("--W-density", dest="W_density", type=float)
            sp.add_argument("--trials", type=int, default=1, help="number of seeded W samples")
        return sp

    g = sub.add_parser("gen", help="generate a polytope document")
    g.add_argument("--kind", choices=GENERATORS, required=True)
    g.add_argument("--d", type=int)
    g.add_argument("--n", type=int)
    g.add_argument("--m", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--folds", type=int, default=1)
    g.add_argument("--name")
    g.add_argument("--in", dest="inp")
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    common(sub.add_parser("fvector")).set_defaults(func=cmd_fvector)
    gv = common(sub.add_parser("gvector"))
    gv.add_argument("--kind", choices=("toric", "simplicial"), default="toric")
    gv.set_defaults(func=cmd_gvector)
    common(sub.add_parser("alpha"), k=True, W=True).set_defaults(func=cmd_alpha)
    common(sub.add_parser("qglbt-check"), k=True, W=True).set_defaults(func=cmd_qglbt)
    z = common(sub.add_parser("zero-check"), k=True, W=True)
    z.add_argument("--seed", type=int, default=0)
    z.add_argument("--per-density", dest="per_density", type=int, default=13)
    z.set_defaults(func=cmd_zero)
    common(sub.add_parser("glbt-triangulate"), k=True).set_defaults(func=cmd_glbt)
    s = common(sub.add_parser("sr-dims"))
    s.add_argument("--cap", type=int, default=4)
    s.set_defaults(func=cmd_sr_dims)
    common(sub.add_parser("socle-check"), k=True, W=True).set_defaults(func=cmd_socle)
    lf = common(sub.add_parser("lefschetz"), k=True)
    lf.add_argument("--seed", type=int, default=0)
    lf.set_defaults(func=cmd_lefschetz)
    a = common(sub.add_parser("approx-experiment"), needs_in=False)
    a.add_argument("--d", type=int, required=True)
    a.add_argument("--k", type=int, required=True)
    a.add_argument("--ns", required=True, help="comma-separated vertex counts")
    a.add_argument("--seed", type=int, default=0)
    a.add_argument("--seeds", help="comma-separated seeds (overrides --seed)")
    a.add_argument("--timing", action="store_true", help="add a runtime_ms column (breaks byte-identical output)")
    a.set_defaults(func=cmd_approx)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GenericityError as e:
        print(f"glbt {args.command}: {e}", file=sys.stderr)
        return EXIT_VERDICT
    except (UsageError, DocumentError, geo.GeometryError, SRError, ValueError, KeyError, OSError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"glbt {args.command}: error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

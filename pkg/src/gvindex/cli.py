"""Command-line frontend.

    gvindex verify --suite thm6.1 [--q-order 6]
    gvindex verify --all
    gvindex genus --space hilbert --flavor chi0 --q-order 2
    gvindex gv --geometry 5d --box 4,4

Exit status: 0 success, 1 mathematical mismatch or integrality failure,
2 usage error.
"""

import argparse
import sys

from . import verify as vf
from .series.serialize import series_json, series_csv_rows, dumps, csv_text
from .series.expand import expand_partial

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _pair(text):
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected two integers 'r,s'")
    if a < 0 or b < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return a, b


def build_parser():
    p = argparse.ArgumentParser(prog="gvindex", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q-order", type=_nonneg, default=None)
    common.add_argument("--p-order", type=_nonneg, default=None)
    common.add_argument("--out", default=None, help="output path (default stdout)")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--workers", type=_positive, default=1)

    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    g = v.add_mutually_exclusive_group(required=True)
    g.add_argument("--suite")
    g.add_argument("--all", action="store_true")
    v.add_argument("--seed", type=int, default=0)

    s = sub.add_parser("genus", parents=[common], help="genus series of a moduli space")
    s.add_argument("--space", choices=("moduli", "hilbert", "symprod"), required=True)
    s.add_argument("--flavor", choices=("chi0", "chiy", "elliptic"), default="chi0")
    s.add_argument("--rank", type=_positive, default=None)

    t = sub.add_parser("gv", parents=[common], help="Gopakumar-Vafa tables")
    t.add_argument("--geometry", required=True, help="conifold, 5d, 6d or fm:N,m")
    t.add_argument("--degree", type=_nonneg, default=None)
    t.add_argument("--box", type=_pair, default=None)
    t.add_argument("--rank", type=_positive, default=None)
    t.add_argument("--twist", type=int, default=None)
    t.add_argument("--convention", choices=("standard", "paper"), default="standard")
    return p


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- verify -----------------------------------------------------------------

def cmd_verify(args):
    if args.all:
        names = list(vf.SUITES)
    elif args.suite in vf.SUITES:
        names = [args.suite]
    else:
        raise UsageError("unknown suite %r; choose from %s" % (args.suite, ", ".join(vf.SUITES)))
    cfg = vf.RunConfig(args.q_order, args.p_order, args.workers, args.seed)
    reports = [vf.run(n, cfg) for n in names]
    for r in reports:
        print("\n".join(r.lines()))
    if args.out:
        if args.format == "json":
            text = dumps([r.as_dict() for r in reports])
        else:
            rows = [["suite", "criterion", "check", "ok", "detail"]]
            for r in reports:
                rows += [[r.suite, r.criterion, c.label, int(c.ok), c.detail] for c in r.checks]
            text = csv_text(rows)
        _emit(text, args.out)
    return EXIT_OK if all(r.ok for r in reports) else EXIT_MISMATCH


# -- genus ------------------------------------------------------------------

def genus_series_for(space, flavor, rank, q_order, p_order, workers=1):
    from .instanton import genus_series
    from .symprod import sym_series
    if space != "moduli" and rank not in (None, 1):
        raise UsageError("--rank applies to --space moduli only")
    N = rank or 1
    if flavor == "elliptic":
        cut = (q_order, 1 if p_order is None else p_order)
    else:
        if p_order:
            raise UsageError("--p-order applies to the elliptic flavor only")
        cut = q_order
    if space == "symprod":
        return sym_series(flavor, cut)
    return genus_series(N, flavor, cut, workers=workers)


def cmd_genus(args):
    q = 3 if args.q_order is None else args.q_order
    s = genus_series_for(args.space, args.flavor, args.rank, q, args.p_order, args.workers)
    if args.format == "json":
        _emit(dumps(series_json(s)), args.out)
    else:
        _emit(csv_text(series_csv_rows(s)), args.out)
    return EXIT_OK


# -- gv ---------------------------------------------------------------------

def _parse_geometry(text, args):
    if text in ("conifold", "5d", "6d"):
        return text, None
    if text.startswith("fm"):
        rest = text[2:].lstrip(":")
        if rest:
            try:
                N, m = (int(x) for x in rest.split(","))
            except ValueError:
                raise UsageError("geometry fm:N,m needs two integers")
        else:
            N, m = args.rank, args.twist
            if N is None or m is None:
                raise UsageError("geometry fm needs N,m or --rank and --twist")
        if N < 1:
            raise UsageError("rank must be >= 1")
        return "fm", (N, m)
    raise UsageError("unknown geometry %r" % text)


def gv_tables(geometry, args):
    """(lattice, n, N, metadata, extra) for the selected geometry."""
    from . import gv, stringside as ss, symprod as sp
    kind, fm = _parse_geometry(geometry, args)
    meta = {"geometry": geometry}
    extra = {}
    if kind == "conifold":
        d = args.degree if args.degree is not None else (args.q_order or 6)
        L = gv.ClassLattice(("Q",), (d,))
        n, N = gv.gv_from_Z(ss.conifold_Z(d), L)
        meta["cutoffs"] = {"Q": d}
    elif kind == "5d":
        r, s = args.box or (4, 4)
        # extract on a box wide enough for Q^r, then keep s
        L = gv.ClassLattice(("Q", "Qm"), (r, max(s, 2 * r)), gradings=("Q",))
        n, N = gv.gv_from_Z(ss.zhat_5d(r), L)
        n = {k: v for k, v in n.items() if k[0][1] <= s}
        N = {k: v for k, v in N.items() if k[0][1] <= s}
        meta["cutoffs"] = {"Q": r, "Qm": s}
    elif kind == "6d":
        Qc = 3 if args.q_order is None else args.q_order
        Pc = 2 if args.p_order is None else args.p_order
        yb = 4 * Qc * (Pc + 1) + 4
        Z = sp.sym_series("elliptic", (Qc, Pc)).substitute(vf.QS)
        L = gv.ClassLattice(("Q", "p", "y"), (Qc, Pc, yb), gradings=("Q", "p"),
                            lower=(0, 0, -yb))
        n, N = gv.gv_from_Z(Z, L)
        Ct = gv.fold_to_ctilde(gv.c_table(max(Qc * Pc, 1)))
        consistent = N == gv.ctilde_gv_prediction(Ct, (Qc, Pc))
        meta["cutoffs"] = {"Q": Qc, "p": Pc}
        meta["ctilde_consistent"] = consistent
        extra["ctilde"] = [[a, j2, c, v] for (a, j2, c), v in sorted(Ct.items())]
        if not consistent:
            raise _Mismatch(meta, L, n, N, extra)
    else:
        Nr, m = fm
        Qc = 2 if args.q_order is None else args.q_order
        B = (args.box or (0, 3))[1]
        qf = tuple("QF%d" % i for i in range(1, Nr))
        Z = ss.zhat_rank(Nr, m, Qc)
        if qf:
            Z = Z.like({a: expand_partial(c, qf, B * len(qf)) for a, c in Z.coeffs.items()})
        L = gv.ClassLattice(("Q",) + qf, (Qc,) + (B,) * len(qf), gradings=("Q",),
                            lower=(0,) + (-B,) * len(qf))
        n, N = gv.gv_from_Z(Z, L)
        meta["cutoffs"] = dict(zip(L.names, L.bounds))
    meta["orientation"] = "resolved"
    return L, n, N, meta, extra


class _Mismatch(Exception):
    pass


def _gv_rows(L, n, N, convention):
    from .gv import to_convention
    n = to_convention(n, convention)
    N = to_convention(N, convention)
    keys = sorted(set(n) | set(N))
    return [{"class": L.as_dict(beta), "g": g, "n": n.get((beta, g), 0), "N": N.get((beta, g), 0)}
            for beta, g in keys]


def cmd_gv(args):
    from .gv import GVError
    status = EXIT_OK
    try:
        L, n, N, meta, extra = gv_tables(args.geometry, args)
    except GVError as e:
        print("integrality failure: %s" % e, file=sys.stderr)
        return EXIT_MISMATCH
    except _Mismatch as e:
        meta, L, n, N, extra = e.args
        print("extracted table disagrees with the C-tilde prediction", file=sys.stderr)
        status = EXIT_MISMATCH
    meta["convention"] = args.convention
    rows = _gv_rows(L, n, N, args.convention)
    if args.format == "json":
        obj = {"metadata": meta, "table": rows}
        obj.update(extra)
        _emit(dumps(obj), args.out)
    else:
        out = [list(L.names) + ["g", "n", "N"]]
        for r in rows:
            out.append([r["class"][x] for x in L.names] + [r["g"], r["n"], r["N"]])
        _emit(csv_text(out), args.out)
    return status


COMMANDS = {"verify": cmd_verify, "genus": cmd_genus, "gv": cmd_gv}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except UsageError as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

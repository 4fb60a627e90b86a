"""Command-line interface.

One verb per construction or analysis step, so every artifact can be
regenerated from its parameters:

    stpcs gen bibd --alpha 4 --expansion star -o H.csv
    stpcs gen ocm -t 4 -o O.csv
    stpcs expand horizontal -i Hv.csv --embed B.csv -o Phi.csv
    stpcs metrics -i Phi.csv --rip-k 1
    stpcs basis -m 10 -o basis.json
    stpcs compress -A Phi.csv -x x.csv --side left -o y.csv
    stpcs recover -A Phi.csv -y y.csv --k 1 --side left -o xhat.csv
    stpcs paper-examples --outdir out/

Exit codes: 0 success, 1 domain error (the error class name is echoed),
2 usage error.  The environment variable STPCS_BUDGET overrides the
subset-enumeration budget used by spark/RIP computations.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import bibd, golden, io, metrics
from .basis import basis_layer, basis_up_to, orthonormal_basis
from .errors import BadShape, StpcsError
from .pipeline import SparsitySpec, compress, recover, recover_signal
from .signal_space import project
from .stp import Side

__all__ = ["main"]


def _budget() -> int:
    raw = os.environ.get("STPCS_BUDGET")
    return int(raw) if raw else metrics.DEFAULT_BUDGET


def _write_matrix(args, a, kind="real", name=None, provenance=None) -> None:
    if args.output:
        io.save_matrix(args.output, a, kind=kind, name=name, provenance=provenance)
    else:
        for row in np.atleast_2d(a):
            print(",".join(io._render(v, kind) for v in row))


def _emit_json(args, doc: dict) -> None:
    text = json.dumps(doc, indent=2)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _cmd_gen(args) -> int:
    if args.what == "incidence":
        _write_matrix(args, bibd.incidence_matrix(args.alpha), kind="boolean",
                      name=f"incidence-alpha{args.alpha}",
                      provenance={"alpha": args.alpha})
    elif args.what == "bibd":
        h = bibd.incidence_matrix(args.alpha)
        if args.expansion == "vertical":
            h = bibd.vertical_expand(h)
        elif args.expansion == "star":
            h = bibd.vertical_expand_star(args.alpha)
        _write_matrix(args, h, kind="boolean",
                      name=f"bibd-alpha{args.alpha}-{args.expansion}",
                      provenance={"alpha": args.alpha, "expansion": args.expansion})
    elif args.what == "ocm":
        _write_matrix(args, bibd.ocm(args.t), kind="sign", name=f"ocm-{args.t}",
                      provenance={"t": args.t})
    elif args.what == "aocm":
        _write_matrix(args, bibd.aocm(args.t), kind="sign", name=f"aocm-{args.t}",
                      provenance={"t": args.t})
    elif args.what == "random":
        rng = np.random.default_rng(args.seed)
        if args.kind == "real":
            a = rng.standard_normal((args.rows, args.cols))
        elif args.kind == "sign":
            a = rng.choice([-1.0, 1.0], size=(args.rows, args.cols))
        else:
            a = rng.integers(0, 2, size=(args.rows, args.cols)).astype(float)
        _write_matrix(args, a, kind=args.kind, name="random",
                      provenance={"rows": args.rows, "cols": args.cols,
                                  "seed": args.seed, "kind": args.kind})
    return 0


def _cmd_expand(args) -> int:
    if args.what == "vertical":
        h, _ = io.load_matrix(args.input)
        out = bibd.vertical_expand(h)
        kind = "boolean"
    elif args.what == "star":
        if args.alpha is not None:
            alpha = args.alpha
        elif args.input:
            h, _ = io.load_matrix(args.input)
            alpha = h.shape[1]
        else:
            raise BadShape("star expansion needs --alpha or -i")
        out = bibd.vertical_expand_star(alpha)
        kind = "boolean"
    else:  # horizontal
        hv, _ = io.load_matrix(args.input)
        b, _ = io.load_matrix(args.embed)
        if args.diag:
            emb = bibd.make_embedding(b, [float(v) for v in args.diag.split(",")])
            out = bibd.horizontal_expand(hv, emb)
        else:
            out = bibd.horizontal_expand(hv, b)
        kind = "real"
    _write_matrix(args, out, kind=kind)
    return 0


def _cmd_metrics(args) -> int:
    a, _ = io.load_matrix(args.input)
    if getattr(args, "class_metrics", False):
        report = metrics.class_metrics(a, Side.parse(args.side),
                                       rip_k=args.rip_k, budget=_budget())
    else:
        report = metrics.component_metrics(a, rip_k=args.rip_k, budget=_budget())
    _emit_json(args, report.to_json_dict())
    return 0


def _cmd_basis(args) -> int:
    ob = orthonormal_basis(args.m, Side.parse(args.side))
    doc = {
        "m": args.m,
        "side": ob.side.value,
        "count": ob.count,
        "labels": [list(l) for l in ob.labels],
        "elements": [[float(v) for v in e] for e in ob.elements],
    }
    _emit_json(args, doc)
    return 0


def _cmd_project(args) -> int:
    x = io.load_signal(args.input)
    y = project(x, args.n, Side.parse(args.side))
    if args.output:
        io.save_signal(args.output, y)
    else:
        print(",".join(repr(float(v)) for v in y))
    return 0


def _cmd_compress(args) -> int:
    a, _ = io.load_matrix(args.matrix)
    x = io.load_signal(args.signal)
    y = compress(a, x, Side.parse(args.side))
    if args.output:
        io.save_signal(args.output, y)
    else:
        print(",".join(repr(float(v)) for v in y))
    return 0


def _cmd_recover(args) -> int:
    a, _ = io.load_matrix(args.matrix)
    y = io.load_signal(args.measurements)
    side = Side.parse(args.side)
    if args.p is not None:
        x = recover_signal(a, y, args.p, args.k, side, method=args.method)
    else:
        spec = SparsitySpec(a.shape[1], args.k)
        x = recover(a, args.s, y, spec, side, method=args.method)
    if args.output:
        io.save_signal(args.output, x)
    else:
        print(",".join(repr(float(v)) for v in x))
    return 0


def _cmd_paper_examples(args) -> int:
    """Regenerate the checked-in reference designs and diff against them."""
    checks: list[tuple[str, bool, np.ndarray, str]] = []

    h4 = bibd.incidence_matrix(4)
    checks.append(("incidence-alpha4", np.array_equal(h4, golden.INCIDENCE_ALPHA4),
                   h4, "boolean"))

    hv = bibd.vertical_expand(h4)
    checks.append(("vertical-expansion-alpha4", np.array_equal(hv, golden.VERTICAL_ALPHA4),
                   hv, "boolean"))

    hs = bibd.vertical_expand_star(4)
    checks.append(("star-expansion-alpha4", np.array_equal(hs, golden.STAR_ALPHA4),
                   hs, "boolean"))

    phi = bibd.horizontal_expand(hv, golden.EMBED_SIGNS_3X4)
    ok = (np.array_equal(phi, golden.SENSING_7X16)
          and abs(metrics.coherence(phi) - 1 / 3) < 1e-12)
    checks.append(("sensing-7x16", ok, phi, "real"))

    for name, ours, ref in (
        ("ocm-4", bibd.ocm(4), golden.OCM4),
        ("aocm-3", bibd.aocm(3), golden.AOCM3),
        ("aocm-7", bibd.aocm(7), golden.AOCM7),
        ("aocm-5", bibd.aocm(5), golden.AOCM5),
    ):
        same = np.array_equal(bibd.canonical_sign_form(ours),
                              bibd.canonical_sign_form(ref))
        checks.append((name, same, ours, "sign"))

    lay12 = [e.j for e in basis_layer(12)]
    lay27 = [e.j for e in basis_layer(27)]
    order = [(e.n, e.j) for e in basis_up_to(10)]
    layers_ok = (lay12 == golden.BASIS_LAYER_12 and lay27 == golden.BASIS_LAYER_27
                 and order == golden.BASIS_ORDER_M10)
    checks.append(("basis-layers-and-order", layers_ok, None, ""))

    ob = orthonormal_basis(5)
    ortho_ok = len(ob.elements) >= 9 and all(
        e.shape == r.shape and np.allclose(e, r, rtol=0.0, atol=1e-10)
        for e, r in zip(ob.elements[:9], golden.ORTHONORMAL_FIRST9)
    )
    checks.append(("orthonormal-basis-9", ortho_ok, None, ""))

    failures = 0
    for name, ok, arr, kind in checks:
        print(f"{name}: {'ok' if ok else 'MISMATCH'}")
        if not ok:
            failures += 1
        if args.outdir and arr is not None:
            os.makedirs(args.outdir, exist_ok=True)
            io.save_matrix(os.path.join(args.outdir, f"{name}.csv"), arr, kind=kind)
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="stpcs", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate matrices")
    gs = g.add_subparsers(dest="what", required=True)
    gi = gs.add_parser("incidence", help="anti-diagonal block-design incidence matrix")
    gi.add_argument("--alpha", type=int, required=True)
    gb = gs.add_parser("bibd", help="incidence matrix plus optional expansion")
    gb.add_argument("--alpha", type=int, required=True)
    gb.add_argument("--expansion", choices=["none", "vertical", "star"], default="none")
    go = gs.add_parser("ocm", help="orthogonal-column sign matrix with t rows")
    go.add_argument("-t", type=int, required=True)
    ga = gs.add_parser("aocm", help="almost-orthogonal-column sign matrix with t rows")
    ga.add_argument("-t", type=int, required=True)
    gr = gs.add_parser("random", help="seeded random matrix")
    gr.add_argument("--rows", type=int, required=True)
    gr.add_argument("--cols", type=int, required=True)
    gr.add_argument("--seed", type=int, default=0)
    gr.add_argument("--kind", choices=list(io.KINDS), default="real")
    for sp in (gi, gb, go, ga, gr):
        sp.add_argument("-o", "--output")
    g.set_defaults(func=_cmd_gen)

    e = sub.add_parser("expand", help="vertical/star/horizontal expansions")
    es = e.add_subparsers(dest="what", required=True)
    ev = es.add_parser("vertical")
    ev.add_argument("-i", "--input", required=True)
    et = es.add_parser("star")
    et.add_argument("-i", "--input")
    et.add_argument("--alpha", type=int)
    eh = es.add_parser("horizontal")
    eh.add_argument("-i", "--input", required=True)
    eh.add_argument("--embed", required=True, help="sign/embedding matrix file")
    eh.add_argument("--diag", help="comma-separated diagonal to scale the embedding")
    for sp in (ev, et, eh):
        sp.add_argument("-o", "--output")
    e.set_defaults(func=_cmd_expand)

    m = sub.add_parser("metrics", help="coherence/spark/bounds report as JSON")
    m.add_argument("-i", "--input", required=True)
    m.add_argument("--rip-k", type=int, default=None)
    m.add_argument("--class", dest="class_metrics", action="store_true",
                   help="reduce to the irreducible atom first")
    m.add_argument("--side", choices=["left", "right"], default="left")
    m.add_argument("-o", "--output")
    m.set_defaults(func=_cmd_metrics)

    b = sub.add_parser("basis", help="orthonormal basis of the signal space")
    b.add_argument("-m", type=int, required=True, help="largest layer dimension")
    b.add_argument("--side", choices=["left", "right"], default="right")
    b.add_argument("-o", "--output")
    b.set_defaults(func=_cmd_basis)

    pr = sub.add_parser("project", help="project a signal onto R^n")
    pr.add_argument("-i", "--input", required=True)
    pr.add_argument("-n", type=int, required=True)
    pr.add_argument("--side", choices=["left", "right"], default="left")
    pr.add_argument("-o", "--output")
    pr.set_defaults(func=_cmd_project)

    c = sub.add_parser("compress", help="semi-tensor-product compression")
    c.add_argument("-A", "--matrix", required=True)
    c.add_argument("-x", "--signal", required=True)
    c.add_argument("--side", choices=["left", "right"], default="left")
    c.add_argument("-o", "--output")
    c.set_defaults(func=_cmd_compress)

    r = sub.add_parser("recover", help="exact blockwise-sparse recovery")
    r.add_argument("-A", "--matrix", required=True)
    r.add_argument("-y", "--measurements", required=True)
    r.add_argument("--k", type=int, required=True, help="per-block sparsity bound")
    r.add_argument("--side", choices=["left", "right"], default="left")
    r.add_argument("-s", type=int, default=1, help="identity-lift factor")
    r.add_argument("-p", type=int, default=None,
                   help="original signal dimension (enables the non-divisible case)")
    r.add_argument("--method", choices=["oracle", "omp"], default="oracle",
                   help="exhaustive search with uniqueness detection, or greedy pursuit")
    r.add_argument("-o", "--output")
    r.set_defaults(func=_cmd_recover)

    x = sub.add_parser("paper-examples",
                       help="regenerate the reference designs and diff against them")
    x.add_argument("--outdir", default=None)
    x.set_defaults(func=_cmd_paper_examples)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except StpcsError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: ValueError: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface: ``tropwall <subcommand> ...``.

Exit codes: 0 success, 1 computation error, 2 usage error, 3 budget exhausted.
When TROPWALL_CACHE names a directory, outputs are stored there keyed by a
hash of the canonical input, the operation and the package version; a hit
returns the stored bytes unchanged.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence

from . import __version__
from .grobner import BudgetExceeded, buchberger, initial_ideal
from .orders import parse_order
from .polycore import Ideal, ParseError, infer_ring, parse_polynomials

FORMAT_VERSION = 1


class UsageError(Exception):
    pass


# input helpers

def read_text(arg: str) -> str:
    """Contents of the file named by arg, or arg itself when no such file exists."""
    p = Path(arg)
    try:
        if p.is_file():
            return p.read_text()
    except OSError:
        pass
    return arg


def read_json(arg: str):
    try:
        return json.loads(read_text(arg))
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON input: {exc}") from None


def parse_vector(text: str) -> List[Fraction]:
    text = text.strip().strip("[]()")
    try:
        return [Fraction(t.strip()) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"invalid vector {text!r}") from None


def load_ideal(args) -> Ideal:
    text = read_text(args.input)
    ring = tuple(v.strip() for v in args.ring.split(",")) if args.ring else infer_ring(text)
    polys = [p for p in parse_polynomials(text, ring, getattr(args, "laurent", False)) if not p.is_zero()]
    if not polys:
        raise UsageError("the zero ideal is not a valid input")
    return Ideal(ring, polys, getattr(args, "laurent", False))


def frac_json(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else int(x)
    if isinstance(x, (list, tuple)):
        return [frac_json(a) for a in x]
    if isinstance(x, dict):
        return {k: frac_json(v) for k, v in x.items()}
    return x


def dumps(obj) -> str:
    return json.dumps(frac_json(obj), indent=2) + "\n"


# plot data

def emit_plot_data(obj, lineality: Sequence[Sequence] = (), basis: str = "orthogonal") -> dict:
    """Plain coordinates of a fan (modulo lineality) or a body (in its slice) for plotting.

    For fans, ``basis="orthogonal"`` uses a basis of the orthogonal complement
    of the lineality space; ``basis="canonical"`` uses the canonical ray
    representatives (zero in the lineality pivot columns) with those columns
    dropped.
    """
    from .polyhedra import Fan, Polytope
    from .polyhedra.fan import quotient_coordinates
    from .polyhedra.linalg import rref

    if isinstance(obj, Polytope):
        pts = [list(v[1:]) for v in obj.vertices]
        dim = obj.ambient - 1
        if dim > 3:
            raise ValueError("body has dimension above 3")
        return {"format_version": FORMAT_VERSION, "kind": "body", "dim": dim, "vertices": pts}
    if isinstance(obj, Fan):
        lin = [list(l) for l in (lineality or obj.lineality)]
        rays = obj.rays()
        if basis == "canonical":
            pivots = rref(lin)[1] if lin else []
            free = [i for i in range(obj.ambient) if i not in pivots]
            vecs = [[int(i == j) for j in range(obj.ambient)] for i in free]
            coords = [[r[i] for i in free] for r in rays]
        else:
            coords, vecs = quotient_coordinates(rays, lin, obj.ambient)
        if len(vecs) > 3:
            raise ValueError("fan modulo lineality has dimension above 3")
        index = {r: i for i, r in enumerate(rays)}
        cones = [[index[r] for r in C.rays] for C in obj.maximal_cones()]
        return {"format_version": FORMAT_VERSION, "kind": "fan", "dim": len(vecs), "basis": vecs,
                "rays": coords, "maximal_cones": cones}
    raise TypeError(f"cannot plot {type(obj).__name__}")


def body_plot_data(M) -> dict:
    """Rays of the NO cone (columns of M) together with the body."""
    from .nokbody import no_body

    d = emit_plot_data(no_body(M))
    d["cone_rays"] = [list(c) for c in M.columns()]
    return d


# cones

def resolve_cone(T, spec: str):
    """A maximal cone of T given by index, canonical id, or a point of its relative interior."""
    from .reembed import cone_id

    mc = T.maximal_cones()
    spec = spec.strip()
    if spec.lstrip("-").isdigit() and "," not in spec:
        i = int(spec)
        if not 0 <= i < len(mc):
            raise UsageError(f"cone index {i} out of range (0..{len(mc) - 1})")
        return mc[i]
    for c in mc:
        if cone_id(c.cone) == spec:
            return c
    w = parse_vector(spec)
    if len(w) != T.ambient:
        raise UsageError("cone point has wrong length")
    for c in mc:
        if c.cone.contains_relint(w):
            return c
    raise UsageError(f"no maximal cone matches {spec!r}")


# subcommands

def cmd_parse(args):
    I = load_ideal(args)
    return dumps({"format_version": FORMAT_VERSION, "ring": list(I.ring), "laurent": I.laurent,
                  "generators": [str(g) for g in I.generators]})


def cmd_gb(args):
    I = load_ideal(args)
    order = parse_order(args.order)
    G = buchberger(I, order)
    return dumps({"format_version": FORMAT_VERSION, "ring": list(I.ring), "order": str(order),
                  "basis": [str(g) for g in G.elements]})


def cmd_initial(args):
    I = load_ideal(args)
    if args.weight is not None:
        J = initial_ideal(I, parse_vector(args.weight), args.tiebreak)
        key = {"weight": [str(a) for a in parse_vector(args.weight)]}
    elif args.order is not None:
        J = initial_ideal(I, parse_order(args.order))
        key = {"order": args.order}
    else:
        raise UsageError("initial needs --weight or --order")
    out = {"format_version": FORMAT_VERSION, "ring": list(I.ring)}
    out.update(key)
    out["initial_ideal"] = [str(g) for g in J.generators]
    return dumps(out)


def cmd_gfan(args):
    from .tropical import groebner_fan

    I = load_ideal(args)
    gf = groebner_fan(I, args.budget, args.tiebreak)
    d = gf.fan.to_json()
    d["format_version"] = FORMAT_VERSION
    d["ring"] = list(I.ring)
    d["complete"] = gf.complete
    d["initial_ideals"] = [[str(g) for g in gf.initial_ideal(C).generators] for C in gf.fan.maximal_cones()]
    if args.plot:
        Path(args.plot).write_text(dumps(emit_plot_data(gf.fan, basis=args.plot_basis)))
    return dumps(d)


def cmd_trop(args):
    from .tropical import tropicalize

    I = load_ideal(args)
    T = tropicalize(I, args.budget, args.tiebreak)
    if args.plot:
        Path(args.plot).write_text(dumps(emit_plot_data(T.fan, T.lineality, args.plot_basis)))
    return dumps(T.to_json())


def cmd_toric(args):
    from .toricideal import hilbert_ehrhart_table, toric_ideal

    A = read_json(args.matrix)
    I = toric_ideal(A)
    out = {"format_version": FORMAT_VERSION, "A": A, "ring": list(I.ring), "generators": [str(g) for g in I.generators]}
    if args.hilbert_bound is not None:
        out["hilbert_ehrhart"] = [list(r) for r in hilbert_ehrhart_table(A, args.hilbert_bound)]
    return dumps(out)


def cmd_ehrhart(args):
    from .polyhedra import Polytope
    from .toricideal import ToricData, ehrhart_polynomial, is_normal, normalized_volume

    if args.matrix:
        data = ToricData(read_json(args.matrix))
        P, lattice = data.polytope, data.lattice
    elif args.vertices:
        P, lattice = Polytope(read_json(args.vertices)), None
    else:
        raise UsageError("ehrhart needs -A or -P")
    out = {"format_version": FORMAT_VERSION, "vertices": [list(v) for v in P.vertices],
           "ehrhart": [str(c) for c in ehrhart_polynomial(P, lattice)],
           "normalized_volume": normalized_volume(P, lattice)}
    if args.normal:
        out["normal_up_to"] = args.normal
        out["normal"] = is_normal(P, args.normal, lattice)
    return dumps(out)


def cmd_grassmann(args):
    from .grassmann import plucker_coords, plucker_ideal, plucker_subsets

    if args.action == "coords":
        if not args.matrix:
            raise UsageError("grassmann coords needs -M")
        M = read_json(args.matrix)
        p = plucker_coords(M)
        subs = plucker_subsets(len(M), len(M[0]))
        return dumps({"format_version": FORMAT_VERSION, "coordinates": {"".join(map(str, s)): v for s, v in zip(subs, p)}})
    if args.k is None or args.n is None:
        raise UsageError("grassmann ideal needs -k and -n")
    I = plucker_ideal(args.k, args.n, literal=args.literal)
    if args.json:
        return dumps({"format_version": FORMAT_VERSION, "ring": list(I.ring), "generators": [str(g) for g in I.generators]})
    return "".join(f"{g}\n" for g in I.generators)


def cmd_nok(args):
    from .nokbody import WeightMatrix, column_sumset, no_body, value_semigroup_elements

    M = WeightMatrix(read_json(args.matrix))
    body = no_body(M)
    out = body.to_json()
    out["format_version"] = FORMAT_VERSION
    out["M"] = M.to_json()
    if args.input:
        I = load_ideal(args)
        vals = value_semigroup_elements(M, I, args.bound)
        gen = column_sumset(M, args.bound)
        out["degree_bound"] = args.bound
        out["semigroup_generated_by_columns"] = vals == gen
    if args.plot:
        Path(args.plot).write_text(dumps(body_plot_data(M)))
    return dumps(out)


def cmd_wallcross(args):
    from .tropical import tropicalize
    from .wallcross import maps_to_json, wall_setup

    I = load_ideal(args)
    T = tropicalize(I, args.budget)
    C1, C2 = resolve_cone(T, args.cone1), resolve_cone(T, args.cone2)
    return dumps(maps_to_json(wall_setup(C1, C2, I)))


def cmd_reembed(args):
    from .reembed import algorithm1, algorithm2
    from .tropical import tropicalize

    I = load_ideal(args)
    T = tropicalize(I, args.budget)
    C = resolve_cone(T, args.cone)
    if args.adjacent:
        R = algorithm2(I, C, resolve_cone(T, args.adjacent), depth=args.depth, budget=args.budget)
    else:
        R = algorithm1(I, C, depth=args.depth, budget=args.budget)
    return dumps(R.to_json())


def cmd_verify(args):
    from .golden import run_all

    skip = (7, 8) if args.quick else ()
    results = run_all(skip=skip)
    lines = [f"{'PASS' if ok else 'FAIL'}  [{k:2d}] {name} ({t:.1f}s): {detail}" for k, name, ok, detail, t in results]
    passed = sum(1 for r in results if r[2])
    lines.append(f"{passed}/{len(results)} checks passed")
    args._failed = passed != len(results)
    return "\n".join(lines) + "\n"


# parser

def _ideal_args(p, required=True):
    p.add_argument("-i", "--input", required=required, help="ideal: a file name or inline generators")
    p.add_argument("--ring", help="comma-separated variables (default: order of appearance)")
    p.add_argument("--laurent", action="store_true", help="allow negative exponents")


def build_parser() -> argparse.ArgumentParser:
    from .tropical import DEFAULT_BUDGET

    ap = argparse.ArgumentParser(prog="tropwall", description="Tropical geometry, Groebner fans and Newton-Okounkov bodies.")
    ap.add_argument("--version", action="version", version=f"tropwall {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", help="output file (default: stdout)")
    common.add_argument("--threads", type=int, default=1, help="accepted for compatibility; work is single-threaded")
    common.add_argument("--no-cache", action="store_true", help="ignore TROPWALL_CACHE")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", parents=[common], help="parse and normalize an ideal")
    _ideal_args(p)
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("gb", parents=[common], help="reduced Groebner basis")
    _ideal_args(p)
    p.add_argument("--order", default="grevlex", help="lex | revlex | grlex | grevlex | w:[a,b,...]+grevlex")
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("initial", parents=[common], help="initial ideal for a weight or an order")
    _ideal_args(p)
    p.add_argument("-w", "--weight", help="weight vector, e.g. 1,0,-2")
    p.add_argument("--order", help="monomial order descriptor")
    p.add_argument("--tiebreak", default="grevlex")
    p.set_defaults(func=cmd_initial)

    for name, func, helptext in (("gfan", cmd_gfan, "Groebner fan"), ("trop", cmd_trop, "tropical variety")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("action", nargs="?", default="compute", choices=["compute"])
        _ideal_args(p)
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="maximal number of cones")
        p.add_argument("--tiebreak", default="grevlex")
        p.add_argument("--plot", help="also write plot coordinates to this file")
        p.add_argument("--plot-basis", default="orthogonal", choices=["orthogonal", "canonical"],
                       help="coordinates used for the plot modulo lineality")
        p.set_defaults(func=func)

    p = sub.add_parser("toric", parents=[common], help="toric ideal of an integer matrix")
    p.add_argument("action", nargs="?", default="ideal", choices=["ideal"])
    p.add_argument("-A", "--matrix", required=True, help="JSON matrix (file or inline)")
    p.add_argument("--hilbert-bound", type=int, help="also tabulate Hilbert and Ehrhart values up to this degree")
    p.set_defaults(func=cmd_toric)

    p = sub.add_parser("ehrhart", parents=[common], help="Ehrhart polynomial of a lattice polytope")
    p.add_argument("-A", "--matrix", help="JSON matrix; its columns span the polytope and the lattice")
    p.add_argument("-P", "--vertices", help="JSON list of points (standard lattice)")
    p.add_argument("--normal", type=int, help="check normality up to this dilation")
    p.set_defaults(func=cmd_ehrhart)

    p = sub.add_parser("grassmann", parents=[common], help="Pluecker ideals and coordinates")
    p.add_argument("action", nargs="?", default="ideal", choices=["ideal", "coords"])
    p.add_argument("-k", type=int)
    p.add_argument("-n", type=int)
    p.add_argument("-M", "--matrix", help="JSON k x n matrix for coords")
    p.add_argument("--literal", action="store_true", help="only disjoint exchange relations with the last index")
    p.add_argument("--json", action="store_true", help="JSON output instead of one generator per line")
    p.set_defaults(func=cmd_grassmann)

    p = sub.add_parser("nok", parents=[common], help="Newton-Okounkov body of a weight matrix")
    p.add_argument("action", nargs="?", default="body", choices=["body"])
    p.add_argument("-M", "--matrix", required=True, help="JSON weight matrix")
    _ideal_args(p, required=False)
    p.add_argument("--bound", type=int, default=3, help="degree bound for the semigroup check")
    p.add_argument("--plot", help="also write plot coordinates to this file")
    p.set_defaults(func=cmd_nok)

    p = sub.add_parser("wallcross", parents=[common], help="wall-crossing maps between adjacent prime cones")
    _ideal_args(p)
    p.add_argument("--cone1", required=True, help="maximal cone: index, canonical id or interior point")
    p.add_argument("--cone2", required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_wallcross)

    p = sub.add_parser("reembed", parents=[common], help="re-embedding for a non-prime cone")
    _ideal_args(p)
    p.add_argument("--cone", required=True, help="maximal cone: index, canonical id or interior point")
    p.add_argument("--adjacent", help="prime cone adjacent to --cone")
    p.add_argument("--depth", type=int, default=2)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_reembed)

    p = sub.add_parser("verify", parents=[common], help="run the golden checks and print a scorecard")
    p.add_argument("--suite", default="paper", choices=["paper"])
    p.add_argument("--quick", action="store_true", help="skip the two slowest checks")
    p.set_defaults(func=cmd_verify)
    return ap


def _cache_key(args, raw_inputs: dict) -> str:
    skip = {"func", "output", "threads", "no_cache", "plot"}
    payload = {k: v for k, v in sorted(vars(args).items()) if k not in skip and not k.startswith("_")}
    payload.update(raw_inputs)
    payload["version"] = __version__
    return hashlib.sha256(json.dumps(payload, sort_keys=True, default=str).encode()).hexdigest()


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cache_dir = os.environ.get("TROPWALL_CACHE")
    use_cache = cache_dir and not args.no_cache and args.command != "verify" and not getattr(args, "plot", None)
    try:
        text = None
        if use_cache:
            raw = {k: read_text(getattr(args, k)) for k in ("input", "matrix", "vertices") if getattr(args, k, None)}
            path = Path(cache_dir) / f"{args.command}-{_cache_key(args, raw)}.out"
            if path.is_file():
                text = path.read_text()
        if text is None:
            text = args.func(args)
            if use_cache:
                path.parent.mkdir(parents=True, exist_ok=True)
                path.write_text(text)
    except (UsageError, ParseError) as exc:
        print(f"tropwall: usage error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"tropwall: budget exhausted: {exc}", file=sys.stderr)
        return 3
    except Exception as exc:  # reported, not swallowed: exit code 1
        print(f"tropwall: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 1 if getattr(args, "_failed", False) else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

"""satcr command-line interface.

JSON goes to stdout (sorted keys, versioned by "schema"), diagnostics to
stderr.  Exit codes: 0 success, 2 when the requested verdict is false,
1 on errors, 64 on usage errors.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import logging
import sys

from . import checks, frobenius as fb, parabolics as pb, satur as st
from .chevalley import check_vi_equivalence
from .errors import SatcrError
from .gf import make_field
from .group import MatGroup, sl_generators, sl_group, sl_order
from .matio import matrix_json, read_matrices
from .modrep import find_proper_submodule, is_semisimple
from .rootsys import build_root_system, invariants, is_good, is_very_good, parse_type, parse_types
from .weights import decompose_by_subtraction, minimal_fundamental_weight, tensor_square_weights, weyl_dim

SCHEMA = "satcr/1"
EXIT_OK, EXIT_ERROR, EXIT_FALSE, EXIT_USAGE = 0, 1, 2, 64
BIG_TYPES = {("E", 7), ("E", 8)}

class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def emit(payload: dict) -> None:
    payload = dict(payload, schema=SCHEMA)
    print(json.dumps(checks._jsonable(payload), sort_keys=True))


def _field_arg(text: str):
    try:
        p, k = (int(x) for x in text.split(":"))
    except ValueError:
        raise UsageError(f"field must look like p:k, got {text!r}") from None
    return make_field(p, k)


def _gate(t, n, big):
    if (t, n) in BIG_TYPES and not big:
        raise UsageError(f"{t}{n} is large; pass --big to run it")


# -- subcommands -----------------------------------------------------------

def cmd_invariants(args) -> int:
    types = parse_types(args.type)
    inv = invariants(types, simply_connected=not args.adjoint)
    out = inv.as_dict()
    out["type"] = args.type
    if args.p is not None:
        comps = [build_root_system(t, n) for t, n in types if t.upper() != "T"]
        out["p"] = args.p
        out["good"] = all(is_good(rs, args.p) for rs in comps)
        out["very_good"] = all(is_very_good(rs, args.p) for rs in comps)
    emit(out)
    return EXIT_OK


def cmd_killing(args) -> int:
    t, n = parse_type(args.type)
    _gate(t, n, args.big)
    rs = build_root_system(t, n)
    e = invariants([(t, n)]).e
    rows = []
    for p, nondeg, _ in check_vi_equivalence(t, n, args.pmax):
        rows.append({"p": p, "nondegenerate": nondeg, "very_good": is_very_good(rs, p),
                     "divides_e": None if e is None else e % p == 0})
    if args.json:
        emit({"type": args.type, "rows": rows})
    else:
        cols = ["p", "nondegenerate", "very_good", "divides_e"]
        print("\t".join(cols))
        for r in rows:
            print("\t".join("NA" if r[c] is None else str(r[c]).lower() for c in cols))
    return EXIT_OK


def cmd_tensor_decomp(args) -> int:
    t, n = parse_type(args.type)
    _gate(t, n, args.big)
    rs = build_root_system(t, n)
    lam = tuple(args.weight) if args.weight else minimal_fundamental_weight(rs)
    res = decompose_by_subtraction(tensor_square_weights(rs, lam), args.p)
    emit({"type": args.type, "p": args.p, "weight": list(lam),
          "factors": [{"weight": list(f), "weyl_dim": weyl_dim(rs, f)} for f in res.factors],
          "deficits_used": [[d[0], d[1], list(d[2])] for d in res.deficits_used]})
    return EXIT_OK


def _load_group(args) -> MatGroup:
    if getattr(args, "demo", None):
        return {"ex4_4": checks.ex44_module_gf9,
                "ex4_4_twisted": checks.ex44_module_twisted,
                "ex5_4": checks.ad_group}[args.demo]()
    if not args.gens:
        raise UsageError("pass --gens FILE or --demo NAME")
    F, mats = read_matrices(args.gens)
    return MatGroup(F, mats)


def cmd_module(args) -> int:
    G = _load_group(args)
    F = G.F
    if args.test == "irreducible":
        W, cert = find_proper_submodule(G)
        verdict = W is None
        detail = {"kind": cert.kind, **cert.detail} if verdict else \
            {"kind": "submodule", "basis": matrix_json(F, W.basis)}
        emit({"test": "irreducible", "irreducible": verdict, "dim": G.dim, "certificate": detail})
    else:
        res = is_semisimple(G)
        verdict = res.semisimple
        emit({"test": "semisimple", "semisimple": verdict, "dim": G.dim,
              "certificate": res.certificate(F)})
    return EXIT_OK if verdict else EXIT_FALSE


def cmd_saturate(args) -> int:
    G = _load_group(args)
    T_field = _field_arg(args.field) if args.field else G.F
    if T_field != G.F:
        raise UsageError("--field must match the field of the generator file")
    T = T_field.elements()
    C = st.f_saturated_closure(G, T, args.cap)
    saturated = C.order() == G.order(args.cap)
    emit({"input_order": G.order(), "closure_order": C.order(), "saturated": saturated,
          "closure_generators": [matrix_json(G.F, g) for g in _small_generating_set(C)]})
    return EXIT_OK


def _small_generating_set(G: MatGroup, limit: int = 8):
    """Greedy generating set: add elements outside the current subgroup."""
    es = G.elements()
    chosen: list = []
    order = 1
    for g in es.mats:
        if order == len(es) or len(chosen) >= limit:
            break
        if chosen and MatGroup(G.F, chosen, G.dim, check=False).elements().contains(g[None])[0]:
            continue
        if (g == G.F.eye(G.dim)).all():
            continue
        chosen.append(g)
        order = MatGroup(G.F, chosen, G.dim, check=False).order()
    return chosen


def parse_endo(F, n: int, spec: str):
    """frob:q=Q, tw_unitary:q=Q, transpose_inverse, ex6_6, ex6_7."""
    name, _, rest = spec.partition(":")
    params = dict(kv.split("=") for kv in rest.split(",") if kv)
    q = int(params.get("q", F.p))
    if name == "frob":
        return fb.standard(q)
    if name == "tw_unitary":
        return fb.unitary_twist(F, n, q)
    if name == "transpose_inverse":
        return fb.transpose_inverse_conj(F.eye(n))
    if name == "ex6_6":
        return fb.composite([fb.blockwise([fb.standard(q), fb.identity()], n // 2),
                             fb.block_permutation([1, 0], n // 2)])
    if name == "ex6_7":
        return fb.blockwise([fb.standard(q), fb.standard(q * q)], n // 2)
    raise UsageError(f"unknown endomorphism {spec!r}")


def cmd_fixed_points(args) -> int:
    F = _field_arg(args.field)
    if args.group == "sl":
        G, n = sl_group(F, args.n), args.n
    else:
        G, n = fb.pair_group(F, sl_generators(F, args.n)), 2 * args.n
    e = parse_endo(F, n, args.endo)
    fp = fb.fixed_points(G, e, args.cap)
    heur = [f"SL_{args.n}({q})" for q in _subfield_sizes(F)
            if args.group == "sl" and sl_order(q, args.n) == fp.order]
    emit({"group": args.group, "n": args.n, "field": [F.p, F.k], "endo": e.describe(),
          "order": fp.order,
          "generators": [matrix_json(F, g) for g in _small_generating_set(fp.group)],
          "heuristic": {"order_matches": heur, "note": "order comparison only"}})
    return EXIT_OK


def _subfield_sizes(F):
    return [F.p ** d for d in range(1, F.k + 1) if F.k % d == 0]


def cmd_semisimplify(args) -> int:
    G = _load_group(args)
    F = G.F
    res = pb.semisimplify(G)
    emit({"exponents": list(res.cocharacter.exponents),
          "adapted_basis": matrix_json(F, res.cocharacter.C(F)),
          "generators": [matrix_json(F, g) for g in res.group.gens],
          "semisimple": res.semisimple})
    return EXIT_OK if res.semisimple else EXIT_FALSE


def cmd_paper_check(args) -> int:
    reports = checks.run_checks(args.filter, args.jobs)
    if not reports:
        raise UsageError(f"no check id starts with {args.filter!r}")
    rows = []
    for r in reports:
        d = r.as_dict()
        if not args.timings:
            d.pop("runtime_ms")
        rows.append(d)
    if args.tsv:
        for d in rows:
            print(f"{d['id']}\t{d['status']}")
    else:
        emit({"filter": args.filter or "", "checks": rows,
              "passed": sum(r.status == "pass" for r in reports),
              "failed": sum(r.status == "fail" for r in reports)})
    return EXIT_ERROR if any(r.status == "fail" for r in reports) else EXIT_OK


# -- parser ---------------------------------------------------------------

def build_parser() -> Parser:
    ap = Parser(prog="satcr", description="Finite-field computations around saturation "
                "and complete reducibility.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=Parser)

    s = sub.add_parser("invariants", help="d, a, h and related invariants")
    s.add_argument("--type", required=True, help="e.g. G2, A1xA1, T1")
    s.add_argument("--p", type=int)
    s.add_argument("--adjoint", action="store_true", help="adjoint isogeny type (h_tilde)")
    s.set_defaults(fn=cmd_invariants)

    s = sub.add_parser("killing", help="Killing form nondegeneracy table")
    s.add_argument("--type", required=True)
    s.add_argument("--pmax", type=int, default=50)
    s.add_argument("--big", action="store_true")
    fmt = s.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--tsv", action="store_true", help="default")
    s.set_defaults(fn=cmd_killing)

    s = sub.add_parser("tensor-decomp", help="composition factors of a tensor square")
    s.add_argument("--type", required=True)
    s.add_argument("--p", type=int, default=0)
    s.add_argument("--weight", type=int, nargs="+")
    s.add_argument("--big", action="store_true")
    s.set_defaults(fn=cmd_tensor_decomp)

    for name, fn, extra in (("module", cmd_module, True), ("saturate", cmd_saturate, False),
                            ("semisimplify", cmd_semisimplify, False)):
        s = sub.add_parser(name)
        src = s.add_mutually_exclusive_group(required=True)
        src.add_argument("--gens", help="matrix file")
        src.add_argument("--demo", choices=["ex4_4", "ex4_4_twisted", "ex5_4"])
        if extra:
            s.add_argument("--test", choices=["semisimple", "irreducible"], default="semisimple")
        if name == "saturate":
            s.add_argument("--field", help="p:k, the scalar set T")
            s.add_argument("--cap", type=int)
        s.set_defaults(fn=fn)

    s = sub.add_parser("fixed-points", help="fixed points of an endomorphism")
    s.add_argument("--group", choices=["sl", "sl_pair"], default="sl")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--field", required=True)
    s.add_argument("--endo", required=True,
                   help="frob:q=Q | tw_unitary:q=Q | transpose_inverse | ex6_6:q=Q | ex6_7:q=Q")
    s.add_argument("--cap", type=int)
    s.set_defaults(fn=cmd_fixed_points)

    s = sub.add_parser("paper-check", help="run the regression checks")
    s.add_argument("filter", nargs="?", default=None, help="check id prefix")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--timings", action="store_true", help="include runtimes (not reproducible)")
    fmt = s.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="default")
    fmt.add_argument("--tsv", action="store_true")
    s.set_defaults(fn=cmd_paper_check)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(message)s")
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"satcr: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SatcrError, ValueError, OSError) as exc:
        print(f"satcr: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


def run_captured(argv) -> tuple[int, dict]:
    """Run a subcommand in-process and parse its JSON output."""
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(argv)
    text = buf.getvalue().strip()
    return code, json.loads(text) if text.startswith("{") else {}


if __name__ == "__main__":
    sys.exit(main())

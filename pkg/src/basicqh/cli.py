"""Command-line entry point: ``basicqh <subcommand> ...``.

Every subcommand prints ``{"config": ..., "result": ...}`` as JSON with sorted
keys (or a plain table with ``--format table``).  Exit codes: 0 success,
1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import itertools
import json
import sys

from . import census
from .group_algebra import (
    cohomology_invariant,
    is_three_cocycle,
    omega_cocycle,
    twist_j,
    verify_twist_conditions,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _ints(text: str) -> list:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}")


def _pairs(text: str) -> list:
    v = _ints(text)
    if not v or len(v) % 2:
        raise UsageError("--pairs needs b1,d1[,b2,d2,...]")
    return [(v[i], v[i + 1]) for i in range(0, len(v), 2)]


# -- subcommands; each returns (result, exit_code, table_rows) ----------------------

def cmd_cocycle(a):
    svals = [a.s] if a.s is not None else list(range(a.m))
    rows, out = [], {}
    for s in svals:
        w = omega_cocycle(a.m, s)
        ok = is_three_cocycle(w)
        inv = cohomology_invariant(w)
        out[str(s)] = {"table": w.to_json(), "is_cocycle": ok, "invariant": inv.to_json()}
        if a.s is not None:
            rows = [(f"{i},{j},{k}", str(w(i, j, k))) for i, j, k in itertools.product(range(a.m), repeat=3)]
        else:
            rows.append((f"s={s}", f"cocycle={ok}", f"invariant={inv}"))
    code = EXIT_OK if all(v["is_cocycle"] for v in out.values()) else EXIT_FAIL
    return out, code, rows


def cmd_twist(a):
    svals = [a.s] if a.s is not None else list(range(a.m))
    out, rows = {}, []
    for s in svals:
        r = verify_twist_conditions(a.m, s, a.ordering)
        entry = {"counit_ok": r.counit_ok, "coboundary_ok": r.coboundary_ok, "ordering": r.ordering}
        if a.s is not None:
            entry["J"] = twist_j(a.m, s).to_json()
        out[str(s)] = entry
        rows.append((f"s={s}", f"counit_ok={r.counit_ok}", f"coboundary_ok={r.coboundary_ok}"))
    code = EXIT_OK if all(v["counit_ok"] and v["coboundary_ok"] for v in out.values()) else EXIT_FAIL
    return out, code, rows


def cmd_census(a):
    filters = a.filter or ["finite"]
    try:
        res = census.enumerate_data(a.modulus, a.rank, filters, symmetry=not a.no_symmetry,
                                    ceiling=a.ceiling, workers=a.workers)
    except ValueError as e:
        raise UsageError(str(e))
    reports = [r.to_json() for _, r in res]
    types: dict = {}
    for _, r in res:
        types[r.dynkin] = types.get(r.dynkin, 0) + 1
    rows = [(str(list(map(list, r.datum.pairs))), r.dynkin, str(r.upsilon), str(r.hopf_compatible)) for _, r in res]
    return {"count": len(reports), "types": types, "data": reports}, EXIT_OK, [("pairs", "type", "upsilon", "hopf")] + rows


def cmd_upsilon(a):
    m = a.m
    D = census.YDDatum(m * m, tuple(_pairs(a.pairs)))
    u = census.upsilon(D, m)
    return u, EXIT_OK, [("upsilon", str(u["values"])), ("hopf_compatible", str(u["hopf_compatible"]))]


def _ambient(a, verify_mode="auto"):
    from .nichols import build_quantum_line, build_quantum_plane

    pairs = _pairs(a.pairs)
    try:
        if len(pairs) == 1:
            return build_quantum_line(a.m, *pairs[0], convention=a.convention, basis=a.basis, verify_mode=verify_mode)
        if len(pairs) == 2:
            return build_quantum_plane(a.m, pairs, convention=a.convention, basis=a.basis, verify_mode=verify_mode)
    except ValueError as e:
        raise UsageError(str(e))
    raise UsageError("only rank 1 and A1xA1 ambient Hopf algebras are buildable")


def cmd_build_hopf(a):
    H = _ambient(a)
    cert = H.meta.get("certificate", {})
    return H.to_json(), EXIT_OK, [("dimension", str(H.dim)), ("certified", str(bool(cert)))]


def cmd_build_ahs(a):
    from .ahs import build_ahs, sweep

    H = _ambient(a)
    if a.sweep:
        table = sweep(H, a.verify_mode, a.workers)
        closed = [s for s, (ok, _, _) in table.items() if ok]
        D = census.YDDatum(a.m * a.m, tuple(_pairs(a.pairs)))
        ups = census.upsilon(D, a.m)
        expected = sorted(ups["values"] + ([0] if ups["hopf_compatible"] else []))
        result = {
            "sweep": {str(s): {"closure": ok, "certified": cert, "witnesses": {k: repr(v) for k, v in sorted(w.items())}}
                      for s, (ok, cert, w) in table.items()},
            "empirical_upsilon": closed,
            "upsilon": ups,
            "agrees": closed == expected,
        }
        rows = [(f"s={s}", f"closure={ok}", f"certified={cert}") for s, (ok, cert, _) in table.items()]
        return result, EXIT_OK, rows
    if a.s is None:
        raise UsageError("build-ahs needs --s or --sweep")
    res = build_ahs(H, a.s, a.verify_mode)
    rows = [("certified", str(res.certified)), ("closure", str(res.closure.ok))]
    rows += [(k, str(v)) for k, v in sorted(res.ledger.items())]
    return res.to_json(), EXIT_OK if res.certified else EXIT_FAIL, rows


def cmd_semisimple(a):
    from .ahs import build_semisimple, nontriviality_certificate
    from .axioms import verify

    svals = [a.s] if a.s is not None else list(range(a.m))
    out, rows = {}, []
    for s in svals:
        P = build_semisimple(a.m, s, a.basis, verify_mode=None)
        rep = verify(P, "basis")
        out[str(s)] = {"axioms": rep.to_json(), "certified": rep.certified,
                       "nontriviality": nontriviality_certificate(P)}
        rows.append((f"s={s}", f"certified={rep.certified}", out[str(s)]["nontriviality"]["verdict"]))
    code = EXIT_OK if all(v["certified"] for v in out.values()) else EXIT_FAIL
    return out, code, rows


def cmd_obstruction(a):
    try:
        r = census.lifting_obstruction(a.type, a.m, _ints(a.d))
    except ValueError as e:
        raise UsageError(str(e))
    rows = [(str(e["word"]), str(e["gamma"]), e["lambda"], str(e["nontrivial"])) for e in r["elements"]]
    return r, EXIT_OK, [("word", "gamma", "lambda", "nontrivial")] + rows


def cmd_classes(a):
    try:
        r = census.semisimple_classes(a.p, a.n)
    except ValueError as e:
        raise UsageError(str(e))
    r = dict(r)
    r["by_valuation"] = {str(k): v for k, v in r["by_valuation"].items()}
    rows = [(str(o),) for o in r["orbits"]]
    rows.append((f"computed={r['computed_count']} stated={r['stated_count']}",))
    return r, EXIT_OK, rows


def cmd_verify(a):
    from .axioms import verify
    from .presentation import QuasiHopfPresentation

    try:
        with open(a.file) as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise UsageError(f"cannot read {a.file}: {e}")
    if "result" in obj:
        obj = obj["result"]
        if "presentation" in obj:
            obj = obj["presentation"]
    try:
        P = QuasiHopfPresentation.from_json(obj)
    except (KeyError, TypeError, ValueError) as e:
        raise UsageError(f"not a presentation: {e}")
    rep = verify(P, a.mode)
    rows = [(k, str(v)) for k, v in sorted(rep.verdicts.items())]
    if rep.witness is not None:
        rows.append(("witness", repr(rep.witness)))
    return rep.to_json(), EXIT_OK if rep.certified else EXIT_FAIL, rows


COMMANDS = {
    "cocycle": cmd_cocycle,
    "twist": cmd_twist,
    "census": cmd_census,
    "upsilon": cmd_upsilon,
    "build-hopf": cmd_build_hopf,
    "build-ahs": cmd_build_ahs,
    "semisimple": cmd_semisimple,
    "obstruction": cmd_obstruction,
    "classes": cmd_classes,
    "verify": cmd_verify,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--out", default=None, help="write output to this path instead of stdout")
    common.add_argument("--workers", type=int, default=1)

    p = _Parser(prog="basicqh", description="Basic quasi-Hopf algebras over cyclic groups.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    c = sub.add_parser("cocycle", parents=[common], help="omega_s table, cocycle verdict and invariant")
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--s", type=int)

    c = sub.add_parser("twist", parents=[common], help="check the twist J_s conditions")
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--s", type=int)
    c.add_argument("--ordering", choices=("standard", "inverse"), default="standard")

    c = sub.add_parser("census", parents=[common], help="enumerate and classify data over Z_n")
    c.add_argument("--modulus", type=int, required=True)
    c.add_argument("--rank", type=int, required=True)
    c.add_argument("--filter", action="append", choices=census.FILTERS)
    c.add_argument("--ceiling", type=int, default=None)
    c.add_argument("--no-symmetry", action="store_true")

    c = sub.add_parser("upsilon", parents=[common], help="twist parameters compatible with a datum")
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--pairs", required=True)

    for name in ("build-hopf", "build-ahs"):
        c = sub.add_parser(name, parents=[common])
        c.add_argument("--m", type=int, required=True)
        c.add_argument("--pairs", required=True)
        c.add_argument("--convention", choices=("adopted", "literal", "left"), default="adopted")
        c.add_argument("--basis", choices=("idempotent", "group"), default="idempotent")
        if name == "build-ahs":
            c.add_argument("--s", type=int)
            c.add_argument("--sweep", action="store_true")
            c.add_argument("--verify-mode", choices=("basis", "generators", "auto"), default="basis")

    c = sub.add_parser("semisimple", parents=[common], help="the semisimple family H(m, s)")
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--s", type=int)
    c.add_argument("--basis", choices=("idempotent", "group"), default="idempotent")

    c = sub.add_parser("obstruction", parents=[common], help="lambda_w scalars for length-3 Weyl elements")
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--type", required=True)
    c.add_argument("--d", required=True)

    c = sub.add_parser("classes", parents=[common], help="classes of the semisimple family for p^n")
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--n", type=int, required=True)

    c = sub.add_parser("verify", parents=[common], help="run the axiom suite on a presentation JSON file")
    c.add_argument("file")
    c.add_argument("--mode", choices=("basis", "generators", "auto"), default="basis")
    return p


def _config(a) -> dict:
    cfg = {k: v for k, v in vars(a).items() if k not in ("out", "workers", "format")}
    return cfg


def render_table(rows) -> str:
    if not rows:
        return "(empty)\n"
    widths = [max(len(str(r[i])) for r in rows if i < len(r)) for i in range(max(len(r) for r in rows))]
    return "".join("  ".join(str(c).ljust(widths[i]) for i, c in enumerate(r)).rstrip() + "\n" for r in rows)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
        if a.command is None:
            raise UsageError("missing subcommand")
        if a.workers < 1:
            raise UsageError("--workers must be positive")
        result, code, rows = COMMANDS[a.command](a)
    except UsageError as e:
        print(f"basicqh: error: {e}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    if a.format == "json":
        text = json.dumps({"config": _config(a), "result": result}, sort_keys=True, indent=1) + "\n"
    else:
        text = render_table(rows)
    if a.out:
        with open(a.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

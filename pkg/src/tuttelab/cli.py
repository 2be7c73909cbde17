"""Command-line entry point: ``tuttelab <subcommand> ...``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from . import brylawski, galoiscert, irred, rankedset, sievelab
from .errors import GroundsetTooLarge, InvalidParameters, TuttelabError
from .polycore import BiPoly, format_bi, parse_bi

CONFIG_KEYS = {
    "t_budget": int,
    "p_budget": int,
    "groundset_cap": int,
    "format": str,
    "threads": int,
    "seed": int,
}
FORMATS = ("json", "csv", "pretty")


class UsageError(Exception):
    pass


def load_config(path: str | None) -> dict:
    cfg = {"t_budget": 50, "p_budget": 500, "groundset_cap": rankedset.MAX_ELEMENTS,
           "format": "json", "threads": 1, "seed": 42}
    if path:
        for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key=value")
            key, value = (s.strip() for s in line.split("=", 1))
            if key not in CONFIG_KEYS:
                raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
            try:
                cfg[key] = CONFIG_KEYS[key](value)
            except ValueError:
                raise UsageError(f"{path}:{lineno}: bad value for {key}") from None
    env = os.environ.get("TUTTELAB_THREADS")
    if env:
        try:
            cfg["threads"] = int(env)
        except ValueError:
            raise UsageError("TUTTELAB_THREADS must be an integer") from None
    if cfg["format"] not in FORMATS:
        raise UsageError(f"format must be one of {', '.join(FORMATS)}")
    if not 0 <= cfg["groundset_cap"] <= rankedset.MAX_ELEMENTS:
        raise UsageError(f"groundset_cap must be in [0, {rankedset.MAX_ELEMENTS}]")
    if cfg["threads"] < 1 or cfg["t_budget"] < 0 or cfg["p_budget"] < 2:
        raise UsageError("threads >= 1, t_budget >= 0 and p_budget >= 2 are required")
    return cfg


# ---------------------------------------------------------------------------
# inputs


def _ints(spec: str, count: int, name: str) -> list[int]:
    try:
        vals = [int(v) for v in spec.split(",")] if spec else []
    except ValueError:
        raise UsageError(f"bad parameters for {name}: {spec!r}") from None
    if len(vals) != count:
        raise UsageError(f"{name} takes {count} integer parameter(s)")
    return vals


def family_rank(spec: str) -> rankedset.RankFunction:
    name, _, params = spec.partition(":")
    if name == "cycle":
        (n,) = _ints(params, 1, name)
        return rankedset.graphic_rank(rankedset.cycle_graph(n))
    if name == "thick":
        n, j = _ints(params, 2, name)
        return rankedset.graphic_rank(rankedset.thick_cycle_graph(n, j))
    if name == "uniform":
        a, b = _ints(params, 2, name)
        return rankedset.uniform_rank(a, b)
    if name == "two-valued":
        n, r = _ints(params, 2, name)
        return rankedset.two_valued_example(n, r)[0]
    if name == "three-valued":
        (n,) = _ints(params, 1, name)
        return rankedset.three_valued_example(n)[0]
    if name == "gordon":
        return rankedset.gordon_greedoid()
    if name == "five-element":
        return rankedset.five_element_example()
    raise UsageError(f"unknown family {name!r}")


def family_poly(spec: str) -> BiPoly:
    """Closed forms where they exist, so large parameters do not need a rank table."""
    name, _, params = spec.partition(":")
    if name == "cycle":
        return rankedset.cycle_tutte(*_ints(params, 1, name))
    if name == "thick":
        return rankedset.thick_cycle_tutte(*_ints(params, 2, name))
    if name == "uniform":
        return rankedset.uniform_tutte(*_ints(params, 2, name))
    if name == "two-valued":
        return rankedset.two_valued_closed_form(*_ints(params, 2, name))
    if name == "three-valued":
        return rankedset.three_valued_closed_form(*_ints(params, 1, name))
    return rankedset.corank_nullity(family_rank(spec))


def _read_json(path: str):
    return json.loads(Path(path).read_text())


def read_poly(arg: str) -> BiPoly:
    p = Path(arg)
    text = p.read_text() if p.is_file() else arg
    stripped = text.strip()
    if stripped.startswith("{"):
        data = json.loads(stripped)
        if "terms" in data:
            return BiPoly.from_json(data)
        if "poly" in data:
            return BiPoly.from_json(data["poly"])
        raise InvalidParameters("polynomial JSON needs a 'terms' list")
    try:
        return parse_bi(stripped)
    except (ValueError, SyntaxError, TypeError) as exc:
        raise InvalidParameters(f"cannot parse polynomial: {exc}") from None


def _check_cap(S: rankedset.RankFunction, cap: int) -> rankedset.RankFunction:
    if S.n > cap:
        raise GroundsetTooLarge(f"groundset has {S.n} elements, cap is {cap}")
    return S


def input_poly(args, cfg) -> BiPoly:
    sources = [s for s in ("family", "graph", "rank_table", "poly") if getattr(args, s, None)]
    if len(sources) != 1:
        raise UsageError("give exactly one of --family, --graph, --rank-table, --poly")
    src = sources[0]
    if src == "family":
        return family_poly(args.family)
    if src == "graph":
        G = rankedset.Graph.from_json(_read_json(args.graph))
        if len(G.edges) > cfg["groundset_cap"]:
            raise GroundsetTooLarge(f"graph has {len(G.edges)} edges, cap is {cfg['groundset_cap']}")
        return rankedset.corank_nullity(rankedset.graphic_rank(G))
    if src == "rank_table":
        S = rankedset.RankFunction.from_json(_read_json(args.rank_table))
        return rankedset.corank_nullity(_check_cap(S, cfg["groundset_cap"]))
    return read_poly(args.poly)


def read_poly_or_family(arg: str) -> BiPoly:
    name = arg.partition(":")[0]
    if not Path(arg).is_file() and name in ("cycle", "thick", "uniform", "two-valued", "three-valued",
                                            "gordon", "five-element"):
        return family_poly(arg)
    return read_poly(arg)


# ---------------------------------------------------------------------------
# output


def emit(obj, cfg, out, text: str | None = None):
    if cfg["format"] == "pretty" and text is not None:
        out.write(text + "\n")
    elif cfg["format"] == "pretty":
        out.write(json.dumps(obj, indent=2) + "\n")
    else:
        out.write(json.dumps(obj) + "\n")


# ---------------------------------------------------------------------------
# subcommands


def cmd_tutte(args, cfg, out):
    T = input_poly(args, cfg)
    if cfg["format"] == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["i", "j", "c"])
        for (i, j), c in T.items():
            w.writerow([i, j, c])
        return
    emit(T.to_json(), cfg, out, format_bi(T))


def cmd_brylawski(args, cfg, out):
    T = input_poly(args, cfg)
    params = brylawski.require_brylawski(T)
    rels = brylawski.brylawski_relations(T, params, args.h_max)
    obj = {
        "params": params.to_json(),
        "relations": [{"h": r.h, "lhs": str(r.lhs), "rhs": str(r.rhs), "ok": r.ok} for r in rels],
        "all_ok": all(r.ok for r in rels),
    }
    emit(obj, cfg, out)


def cmd_irred(args, cfg, out):
    T = input_poly(args, cfg)
    methods = args.methods.split(",") if args.methods else None
    v = irred.irreducibility_verdict(T, methods, t_range=args.t_range, p_range=args.p_range)
    emit(v.to_json(), cfg, out)


def _budgets(args, cfg):
    t = args.t_budget if args.t_budget is not None else cfg["t_budget"]
    p = args.p_budget if args.p_budget is not None else cfg["p_budget"]
    return t, p


def cmd_galois(args, cfg, out):
    T = input_poly(args, cfg)
    t, p = _budgets(args, cfg)
    cert = galoiscert.certify_symmetric(T, t, p)
    emit(cert.to_json(), cfg, out)


def cmd_family_report(args, cfg, out):
    name, _, params = args.family.partition(":")
    t, p = _budgets(args, cfg)
    if name == "thick":
        n, j = _ints(params, 2, name)
        obj = galoiscert.thick_cycle_theorem_conditions(n, j, certify=True, t_budget=t, p_budget=p)
        ev = galoiscert.disc_transposition_evidence(n, j)
        obj["disc_evidence"] = ev.to_json()
    elif name == "selmer":
        obj = galoiscert.selmer_family_report(*_ints(params, 1, name), t_budget=t, p_budget=p)
    elif name == "uniform":
        obj = galoiscert.uniform_precondition_report(*_ints(params, 2, name), t_budget=t, p_budget=p)
    elif name == "two-valued":
        n, r = _ints(params, 2, name)
        obj = galoiscert.two_valued_bound(n, r)
        cert = galoiscert.certify_symmetric(rankedset.two_valued_closed_form(n, r), t, p)
        obj["certificate"] = cert.to_json()
    elif name == "p1p2":
        (t_max,) = _ints(params, 1, name)
        obj = {"t_max": t_max, "n": galoiscert.p1p2_search(t_max)}
    else:
        raise UsageError(f"unknown report family {name!r}")
    emit(obj, cfg, out)


def cmd_sieve(args, cfg, out):
    T1 = read_poly_or_family(args.t1)
    T2 = read_poly_or_family(args.t2)
    t, p = args.t_budget, args.p_budget
    seed = args.seed if args.seed is not None else cfg["seed"]
    rep = sievelab.monte_carlo_nonmax(T1, T2, args.N, args.trials, seed, t, p,
                                      exhaustive=args.exhaustive, workers=cfg["threads"])
    out.write(rep.dumps() + "\n")


def cmd_densities(args, cfg, out):
    rows = sievelab.density_table(args.r)
    if args.format == "json":
        obj = [{"partition": list(lam), "density": str(d), "families": list(f)} for lam, d, f in rows]
        emit(obj, cfg, out)
        return
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["partition", "density", "density_float", "families"])
    for lam, d, fams in rows:
        w.writerow([" ".join(map(str, lam)), str(d), f"{float(d):.12g}", ";".join(fams)])
    if args.r >= 2:
        for kind in sievelab.KINDS:
            d = sievelab.family_density(kind, args.r)
            w.writerow([kind, str(d), f"{float(d):.12g}", "family"])


def cmd_verify_cert(args, cfg, out):
    data = _read_json(args.cert)
    galoiscert.verify_certificate(data)
    emit({"valid": True, "conclusion": data.get("conclusion"), "r": data.get("r")}, cfg, out)


def _add_poly_inputs(p):
    p.add_argument("--family", help="cycle:n, thick:n,j, uniform:a,b, two-valued:n,r, three-valued:n, "
                                    "gordon, five-element")
    p.add_argument("--graph", help="JSON file {vertices, edges}")
    p.add_argument("--rank-table", dest="rank_table", help="JSON file {n, ranks}")
    p.add_argument("--poly", help="JSON file {terms}, a file with an expression, or an expression")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tuttelab", description="Corank-nullity polynomials and their Galois groups.")
    parser.add_argument("--config", help="key=value file")
    parser.add_argument("--format", choices=FORMATS, help="output format")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tutte", help="corank-nullity polynomial")
    _add_poly_inputs(p)
    p.set_defaults(func=cmd_tutte)

    p = sub.add_parser("brylawski", help="Brylawski parameters and relations")
    _add_poly_inputs(p)
    p.add_argument("--h-max", dest="h_max", type=int)
    p.set_defaults(func=cmd_brylawski)

    p = sub.add_parser("irred", help="irreducibility verdict")
    _add_poly_inputs(p)
    p.add_argument("--methods", help="comma list of a, b, newton, modp")
    p.add_argument("--t-range", dest="t_range", type=int, default=20)
    p.add_argument("--p-range", dest="p_range", type=int, default=200)
    p.set_defaults(func=cmd_irred)

    p = sub.add_parser("galois", help="symmetric group certificate")
    _add_poly_inputs(p)
    p.add_argument("--t-budget", dest="t_budget", type=int)
    p.add_argument("--p-budget", dest="p_budget", type=int)
    p.set_defaults(func=cmd_galois)

    p = sub.add_parser("family-report", help="hypotheses and certificates for the named families")
    p.add_argument("--family", required=True, help="thick:n,j, selmer:n, uniform:a,b, two-valued:n,r, p1p2:t_max")
    p.add_argument("--t-budget", dest="t_budget", type=int)
    p.add_argument("--p-budget", dest="p_budget", type=int)
    p.set_defaults(func=cmd_family_report)

    p = sub.add_parser("sieve", help="Monte-Carlo experiment on (x+n1)T1 - (x+n2)T2")
    p.add_argument("--t1", required=True)
    p.add_argument("--t2", required=True)
    p.add_argument("--N", type=int, default=1000)
    p.add_argument("--trials", type=int, default=2000)
    p.add_argument("--seed", type=int)
    p.add_argument("--t-budget", dest="t_budget", type=int, default=5)
    p.add_argument("--p-budget", dest="p_budget", type=int, default=100)
    p.add_argument("--exhaustive", action="store_true")
    p.set_defaults(func=cmd_sieve)

    p = sub.add_parser("densities", help="cycle-type density table")
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_densities)

    p = sub.add_parser("verify-cert", help="re-check a stored certificate")
    p.add_argument("cert")
    p.set_defaults(func=cmd_verify_cert)
    return parser


def _error(kind: str, detail: str) -> str:
    return json.dumps({"error": {"kind": kind, "detail": detail}})


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = load_config(args.config)
        if args.format:
            cfg["format"] = args.format
        buf = io.StringIO()
        args.func(args, cfg, buf)
    except UsageError as exc:
        err.write(f"tuttelab: {exc}\n")
        return 2
    except TuttelabError as exc:
        err.write(json.dumps(exc.to_json()) + "\n")
        return 1
    except (OSError, json.JSONDecodeError) as exc:
        err.write(_error("FileError", str(exc)) + "\n")
        return 1
    out.write(buf.getvalue())
    return 0


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())

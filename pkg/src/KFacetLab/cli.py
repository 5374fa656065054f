# cli.py
from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence

from .certificates import conic_edge_certificate, embedding_certificate, veronese_square_certificate
from .config import ENV_WORKERS, load_config
from .core import csv_table, load_point_set, parse_indices, point_set_to_dict, report_json, save_point_set, to_json_text, write_output
from .errors import ConfigError, InputError, KFacetLabError
from .faces import face_certificate, is_weakly_k_neighborly, neighborliness_degree, radon_partition, weak_separation
from .facets import enumerate_k_facets, enumerate_k_sets, k_facet_profile, k_set_profile
from .formulas import FORMULAS, formula_table, get_formula
from .genpos import GEN_MODES, generate
from .geometry import PointSet
from .lifts import apply, map_from_key
from .projection import facets_through_vertex, stereographic_project
from .runlog import close_run_log, log_error, log_info, open_run_log
from .verify import THEOREMS, run_verify_batch


@dataclass
class Session:
    config: dict
    workers: int
    log_file: object = None


# ----- helpers -----

def _emit(args, text: str) -> None:
    write_output(text, getattr(args, "out", None))


def _load_lifted(args) -> PointSet:
    S = load_point_set(args.input)
    if getattr(args, "map", None):
        S = apply(map_from_key(args.map), S)
    return S


def _format(args) -> str:
    if args.format:
        return args.format
    out = getattr(args, "out", None)
    return "csv" if out and str(out).lower().endswith(".csv") else "json"


# ----- subcommands -----

def _cmd_gen(args, session: Session) -> int:
    cfg = session.config
    bound = args.coord_bound
    if bound is None and args.mode not in ("convex", "convex-sphere"):
        bound = cfg["coord_bound_factor"] * args.n * args.d
    S = generate(args.mode, args.n, args.d, args.seed, bound, cfg["max_retries"])
    log_info(session.log_file, f"gen mode={args.mode} n={args.n} d={args.d} seed={args.seed}")
    if args.out:
        save_point_set(S, args.out)
    else:
        _emit(args, to_json_text(point_set_to_dict(S)))
    return 0


def _cmd_lift(args, session: Session) -> int:
    S = _load_lifted(args)
    if args.out:
        save_point_set(S, args.out)
    else:
        _emit(args, to_json_text(point_set_to_dict(S)))
    return 0


def _cmd_count(args, session: Session) -> int:
    """run_count: profile, facet list or k-set family of the (lifted) input."""
    S = _load_lifted(args)
    w, log = session.workers, session.log_file
    fmt = _format(args)
    if args.mode == "facets":
        profile = k_facet_profile(S, w, log)
        if fmt == "csv":
            _emit(args, csv_table(["k", "e_k"], profile.csv_rows()))
            return 0
        data = profile.to_dict()
        if args.k is not None:
            data["facets"] = [f.to_dict() for f in enumerate_k_facets(S, args.k, w, log)]
        _emit(args, to_json_text(data))
        return 0
    if args.k is None:
        a = k_set_profile(S, w, log)
        if fmt == "csv":
            _emit(args, csv_table(["k", "a_k"], [(k, v) for k, v in enumerate(a, 1)]))
        else:
            _emit(args, to_json_text({"n": S.n, "p": S.dim, "profile": a}))
        return 0
    family = enumerate_k_sets(S, args.k, w, log)
    if fmt == "csv":
        _emit(args, csv_table(["set"], [(" ".join(map(str, s)),) for s in family.sets]))
    else:
        _emit(args, to_json_text({"n": S.n, "p": S.dim, "k": family.k, "ksets": [list(s) for s in family.sets]}))
    return 0


def _cmd_certify(args, session: Session) -> int:
    S = load_point_set(args.input)
    lifted = apply(map_from_key(args.map), S) if args.map else S
    w, log = session.workers, session.log_file
    if args.degree is not None:
        _emit(args, to_json_text({"neighborliness_degree": neighborliness_degree(lifted, args.degree, w, log)}))
        return 0
    if args.weakly is not None:
        res = is_weakly_k_neighborly(lifted, args.weakly, w, log)
        _emit(args, to_json_text({"k": args.weakly, "weakly_k_neighborly": res.holds, "failing": list(res.failing) if res.failing else None}))
        return 0 if res.holds else 1
    if args.subset is None:
        raise InputError("certify needs --subset, --degree or --weakly")
    T = parse_indices(args.subset)
    if args.explicit:
        cert = _explicit_certificate(args, S, T)
        target = apply(map_from_key(_explicit_map_key(args, S)), S)
        data = cert.to_dict()
        data["verified"] = cert.verify(target, T)
        _emit(args, to_json_text(data))
        return 0 if data["verified"] else 1
    cert = face_certificate(lifted, T, strict=not args.weak)
    if cert is None:
        _emit(args, to_json_text({"subset": sorted(set(T)), "strict": not args.weak, "certificate": None}))
        return 1
    _emit(args, to_json_text(cert.to_dict()))
    return 0


def _explicit_map_key(args, S: PointSet) -> str:
    if args.explicit == "conic-edge":
        return "veronese:2:2"
    if args.explicit == "embedding":
        return f"embed:{args.k}:{S.dim}"
    return f"{'hveronese' if args.homogeneous else 'veronese'}:{S.dim}:{args.m}"


def _explicit_certificate(args, S: PointSet, T: List[int]):
    if args.explicit == "conic-edge":
        if len(T) != 2 or S.dim != 2:
            raise InputError("conic-edge needs a planar set and a subset of two indices")
        return conic_edge_certificate(S[T[0]], S[T[1]])
    if args.explicit == "embedding":
        if args.k is None:
            raise InputError("--explicit embedding needs --k")
        return embedding_certificate(S, T, args.k)
    if args.m is None:
        raise InputError("--explicit veronese needs --m")
    return veronese_square_certificate(S, T, args.m, homogeneous=args.homogeneous)


def _cmd_verify(args, session: Session) -> int:
    """run_verify over one theorem (or all) and ``--trials`` consecutive seeds."""
    params = {k: getattr(args, k) for k in ("n", "m", "k", "d", "p", "mode")}
    params = {k: v for k, v in params.items() if v is not None}
    reports = run_verify_batch(args.theorem, params, args.seed, args.trials, session.workers, session.log_file, session.config)
    _emit(args, report_json(reports))
    return 0 if all(r.passed for r in reports) else 1


def _cmd_formula(args, session: Session) -> int:
    try:
        values = [int(x) for x in args.args]
    except ValueError as e:
        raise InputError(f"Formula arguments must be integers: {args.args}") from e
    if args.table:
        rows = formula_table(args.name, values)
        _emit(args, csv_table(["k", args.name], rows))
        return 0
    result = get_formula(args.name)(*values)
    if isinstance(result, tuple):
        _emit(args, " ".join(str(x) for x in result))
    else:
        _emit(args, str(result))
    return 0


def _cmd_project(args, session: Session) -> int:
    S = load_point_set(args.input)
    through = facets_through_vertex(S, args.vertex, args.k, session.workers, session.log_file)
    projected = stereographic_project(S, args.vertex)
    e_proj = len(enumerate_k_facets(projected, args.k, session.workers, session.log_file))
    data = {"vertex": args.vertex, "k": args.k, "through_vertex": through, "projected": e_proj, "pass": through == e_proj}
    if args.show:
        data["projection"] = point_set_to_dict(projected)
    _emit(args, to_json_text(data))
    return 0 if data["pass"] else 1


def _cmd_radon(args, session: Session) -> int:
    P = load_point_set(args.input)
    witness = radon_partition(P)
    sep = weak_separation(P.subset(witness.part_q), P.subset(witness.part_r))
    data = witness.to_dict()
    data["valid"] = witness.verify(P)
    data["weak_separation"] = sep.to_dict() if sep is not None else None
    _emit(args, to_json_text(data))
    return 0 if data["valid"] else 1


# ----- parser -----

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--workers", type=int, default=None, help=f"Worker-Threads (Default: {ENV_WORKERS} oder kfacetlab.ini)")
    common.add_argument("--config", default=None, help="Alternative INI-Datei")
    common.add_argument("--out", default=None, help="Ausgabedatei (Default: stdout)")

    p = argparse.ArgumentParser(prog="kfacetlab", description="Exact k-set / k-facet enumeration for lifted point sets.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="Seeded random point set")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--d", type=int, default=2)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--mode", default="glp", help=f"One of {', '.join(GEN_MODES)}")
    g.add_argument("--coord-bound", type=int, default=None)
    g.set_defaults(func=_cmd_gen)

    li = sub.add_parser("lift", parents=[common], help="Apply a lifting map")
    li.add_argument("--in", dest="input", required=True)
    li.add_argument("--map", required=True, help="veronese:d:m | hveronese:d:m | circle | moment:d | embed:k:d | custom:<file>")
    li.set_defaults(func=_cmd_lift)

    c = sub.add_parser("count", parents=[common], help="k-facet profile or k-sets")
    c.add_argument("--in", dest="input", required=True)
    c.add_argument("--map", default=None)
    c.add_argument("--mode", choices=("facets", "sets"), default="facets")
    c.add_argument("--k", type=int, default=None)
    c.add_argument("--format", choices=("json", "csv"), default=None)
    c.set_defaults(func=_cmd_count)

    ce = sub.add_parser("certify", parents=[common], help="Face certificates and neighborliness")
    ce.add_argument("--in", dest="input", required=True)
    ce.add_argument("--map", default=None)
    ce.add_argument("--subset", default=None, help="Comma separated indices, e.g. 0,3")
    ce.add_argument("--weak", action="store_true", help="Non-strict (weak) face")
    ce.add_argument("--degree", type=int, default=None, metavar="MAXK")
    ce.add_argument("--weakly", type=int, default=None, metavar="K")
    ce.add_argument("--explicit", choices=("conic-edge", "embedding", "veronese"), default=None)
    ce.add_argument("--k", type=int, default=None)
    ce.add_argument("--m", type=int, default=None)
    ce.add_argument("--homogeneous", action="store_true")
    ce.set_defaults(func=_cmd_certify)

    v = sub.add_parser("verify", parents=[common], help="Check a counting / neighborliness claim on seeded instances")
    v.add_argument("theorem", choices=THEOREMS + ("all",))
    v.add_argument("--seed", type=int, required=True)
    v.add_argument("--trials", type=int, default=1)
    for name in ("n", "m", "k", "d", "p"):
        v.add_argument(f"--{name}", type=int, default=None)
    v.add_argument("--mode", choices=("moment", "sphere"), default=None)
    v.set_defaults(func=_cmd_verify)

    f = sub.add_parser("formula", parents=[common], help="Evaluate a closed-form count")
    f.add_argument("name", choices=sorted(FORMULAS))
    f.add_argument("args", nargs="*")
    f.add_argument("--table", action="store_true", help="CSV over k; leave k out of the arguments")
    f.set_defaults(func=_cmd_formula)

    pr = sub.add_parser("project", parents=[common], help="Stereographic projection count check")
    pr.add_argument("--in", dest="input", required=True)
    pr.add_argument("--vertex", type=int, required=True)
    pr.add_argument("--k", type=int, required=True)
    pr.add_argument("--show", action="store_true", help="Include the projected point set")
    pr.set_defaults(func=_cmd_project)

    r = sub.add_parser("radon", parents=[common], help="Radon partition of p+2 points")
    r.add_argument("--in", dest="input", required=True)
    r.set_defaults(func=_cmd_radon)
    return p


def _resolve_workers(cli_value: Optional[int], config: dict) -> int:
    workers = cli_value if cli_value is not None else config["workers"]
    if workers < 1:
        raise ConfigError(f"--workers must be >= 1, got {workers}")
    return workers


def main_cli(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = load_config(args.config, os.environ)
        workers = _resolve_workers(args.workers, config)
    except KFacetLabError as e:
        print(f"[ERROR] {e}", file=sys.stderr)
        return 2

    log_file = open_run_log(config["log_dir"])
    session = Session(config, workers, log_file)
    log_info(log_file, f"kfacetlab {args.command} workers={workers}")
    try:
        code = args.func(args, session)
    except KFacetLabError as e:
        log_error(log_file, str(e))
        print(f"[ERROR] {e}", file=sys.stderr)
        code = 2
    except Exception as e:
        log_error(log_file, f"Unexpected {type(e).__name__}: {e}")
        close_run_log(log_file, keep=True)
        raise

    keep = code != 0 or config["keep_logs"] or config["debug"]
    kept = close_run_log(log_file, keep)
    if kept is not None:
        print(f"[INFO] Log: {kept}", file=sys.stderr)
    return code

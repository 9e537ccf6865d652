"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 input-format error, 3 computational
failure.
"""

from __future__ import annotations

import argparse
import json
import os
import secrets
import sys
from pathlib import Path

from .bipartivity import EdgeIndex, edge_scores
from .errors import ComputationError, InputError
from .experiment import (
    DEFAULT_BINS,
    DEFAULT_RANGE,
    SweepConfig,
    records_to_csv,
    run_method,
    run_sweep,
    summarize,
    summary_to_json,
)
from .generators import ALL_MODELS, Model, generate, sample_instance
from .graph import read_edge_list
from .oracle import max_cut_exact
from .partitioning import ALL_METHODS, Method
from .svg import render_svg

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_COMPUTE = 0, 1, 2, 3

EXPERIMENT_DEFAULTS = {
    "models": "er,ws,rg,ba",
    "n": 20,
    "instances": 1000,
    "restarts": 100,
    "methods": "all",
    "seed": None,
    "threads": 1,
    "out": "results",
    "bins": DEFAULT_BINS,
    "include_greedy": True,
    "format": None,
    "timing": False,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_methods(text: str) -> tuple[Method, ...]:
    items = [t for t in str(text).replace(" ", "").split(",") if t]
    if not items or "all" in (t.lower() for t in items):
        return ALL_METHODS
    try:
        chosen = {Method.parse(t) for t in items}
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return tuple(m for m in ALL_METHODS if m in chosen)


def parse_models(text: str) -> tuple[Model, ...]:
    items = [t for t in str(text).replace(" ", "").split(",") if t]
    if not items or "all" in (t.lower() for t in items):
        return ALL_MODELS
    try:
        chosen = {Model.parse(t) for t in items}
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return tuple(m for m in ALL_MODELS if m in chosen)


def parse_bool(text) -> bool:
    if isinstance(text, bool):
        return text
    value = str(text).strip().lower()
    if value in ("1", "true", "yes", "on"):
        return True
    if value in ("0", "false", "no", "off"):
        return False
    raise UsageError(f"not a boolean: {text!r}")


def read_config(path) -> dict:
    """Flat ``key = value`` file; keys are flag names with ``-`` or ``_``."""
    out = {}
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read config {path}: {exc}") from None
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise InputError(f"{path}:{lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in EXPERIMENT_DEFAULTS:
            raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
        out[key] = value
    return out


def resolve_seed(seed):
    if seed is not None:
        return int(seed)
    env = os.environ.get("BIPARTIFY_SEED")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"BIPARTIFY_SEED is not an integer: {env!r}") from None
    seed = secrets.randbits(63)
    print(f"seed: {seed}", file=sys.stderr)
    return seed


def _emit(text: str, out) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _fraction_text(f) -> str:
    return f"{f.numerator}/{f.denominator}" if f.denominator != 1 else str(f.numerator)


# -- subcommands ------------------------------------------------------------


def cmd_analyze(args) -> int:
    g = read_edge_list(args.file)
    methods = parse_methods(args.methods or "all")
    seed = resolve_seed(args.seed) if any(not m.is_greedy for m in methods) else args.seed
    rows = []
    for method in methods:
        sub = None if seed is None else seed + ALL_METHODS.index(method)
        res = run_method(g, method, sub, args.restarts)
        rows.append({"method": method.value, "retained": res.retained_edges, "edges": g.m,
                     "r_b": _fraction_text(res.r_b), "r_b_float": float(res.r_b)})
    if args.format == "json":
        text = json.dumps(rows, indent=1) + "\n"
    elif args.format == "csv":
        text = "method,retained,edges,r_b,r_b_float\n" + "".join(
            f"{r['method']},{r['retained']},{r['edges']},{r['r_b']},{r['r_b_float']!r}\n"
            for r in rows)
    else:
        lines = [f"{'method':<16}{'retained':>9}{'edges':>7}  {'r_b':<8}{'r_b_float':>10}"]
        lines += [f"{r['method']:<16}{r['retained']:>9}{r['edges']:>7}  {r['r_b']:<8}"
                  f"{r['r_b_float']:>10.6f}" for r in rows]
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = read_edge_list(args.file)
    res = max_cut_exact(g)
    if args.format == "json":
        text = json.dumps({"max_cut": res.max_cut, "edges": g.m,
                           "r_b_opt": _fraction_text(res.r_b_opt),
                           "X": sorted(res.witness.X), "Y": sorted(res.witness.Y)}) + "\n"
    else:
        text = (f"max_cut={res.max_cut} r_b_opt={_fraction_text(res.r_b_opt)}\n"
                f"X={' '.join(map(str, sorted(res.witness.X)))}\n"
                f"Y={' '.join(map(str, sorted(res.witness.Y)))}\n")
    _emit(text, args.out)
    return EXIT_OK


def cmd_score_edges(args) -> int:
    g = read_edge_list(args.file)
    try:
        index = EdgeIndex.parse(args.index)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    scores = edge_scores(g, index)
    if args.format == "json":
        text = json.dumps([{"u": s.edge[0], "v": s.edge[1], "score": s.value}
                           for s in scores], indent=1) + "\n"
    else:
        text = f"u,v,{index.value}\n" + "".join(
            f"{s.edge[0]},{s.edge[1]},{s.value!r}\n" for s in scores)
    _emit(text, args.out)
    return EXIT_OK


def _parse_params(items) -> dict:
    params = {}
    for item in items or []:
        if "=" not in item:
            raise UsageError(f"--param expects KEY=VALUE, got {item!r}")
        k, v = item.split("=", 1)
        params[k.strip()] = float(v) if "." in v or "e" in v.lower() else int(v)
    return params


def cmd_generate(args) -> int:
    models = parse_models(args.models or "")
    if len(models) != 1 or not args.models:
        raise UsageError("generate needs exactly one model via --models")
    model = models[0]
    seed = resolve_seed(args.seed)
    n = args.n or 20
    params = _parse_params(args.param)
    if params:
        g = generate(model, n, params, seed)
        ptext = ";".join(f"{k}={v!r}" for k, v in params.items())
    else:
        g, spec = sample_instance(model, n, seed)
        ptext = spec.params_text()
    _emit(g.to_text(f"model={model.value} params={ptext} seed={seed}"), args.out)
    return EXIT_OK


def _merged_experiment_options(args) -> dict:
    opts = dict(EXPERIMENT_DEFAULTS)
    if args.config:
        opts.update(read_config(args.config))
    for key in EXPERIMENT_DEFAULTS:
        value = getattr(args, key, None)
        if value is not None:
            opts[key] = value
    return opts


def cmd_experiment(args) -> int:
    opts = _merged_experiment_options(args)
    try:
        cfg = SweepConfig(
            models=parse_models(opts["models"]),
            n=int(opts["n"]),
            instances=int(opts["instances"]),
            restarts=int(opts["restarts"]),
            methods=parse_methods(opts["methods"]),
            master_seed=resolve_seed(opts["seed"]),
            include_greedy=parse_bool(opts["include_greedy"]),
            timing=parse_bool(opts["timing"]),
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    fmt = opts["format"]
    if fmt not in (None, "csv", "json", "svg"):
        raise UsageError(f"invalid format {fmt!r}")
    threads = max(1, int(opts["threads"]))

    def progress(done, total):
        if done == total or done % 100 == 0:
            print(f"\r{done}/{total} instances", end="\n" if done == total else "",
                  file=sys.stderr)

    records = run_sweep(cfg, threads=threads, progress=progress)
    summary = summarize(records, cfg, bins=int(opts["bins"]), range=DEFAULT_RANGE)
    out = Path(opts["out"])
    out.mkdir(parents=True, exist_ok=True)
    if fmt in (None, "csv", "svg"):
        (out / "records.csv").write_text(records_to_csv(records), encoding="utf-8")
    if fmt in (None, "json", "svg"):
        (out / "summary.json").write_text(summary_to_json(summary), encoding="utf-8")
    if fmt == "svg":
        for model in summary["models"]:
            for kind in ("histogram", "ecdf", "heatmap"):
                (out / f"{model.lower()}_{kind}.svg").write_text(
                    render_svg(summary, kind, model), encoding="utf-8")
    print(f"wrote {len(records)} records to {out}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bipartify", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("analyze", help="run methods on one edge-list file")
    p.add_argument("file")
    p.add_argument("--methods", default="all")
    p.add_argument("--restarts", type=int, default=100)
    p.add_argument("--seed", type=int)
    p.add_argument("--out")
    p.add_argument("--format", choices=["csv", "json"])
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("generate", help="sample or build one random graph")
    p.add_argument("--models", help="one of er, ws, rg, ba")
    p.add_argument("--n", type=int)
    p.add_argument("--param", action="append", metavar="KEY=VALUE",
                   help="explicit model parameter; omit to sample from the default ranges")
    p.add_argument("--seed", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("experiment", help="run the reproduction sweep")
    p.add_argument("--config")
    p.add_argument("--models")
    p.add_argument("--n", type=int)
    p.add_argument("--instances", type=int)
    p.add_argument("--restarts", type=int)
    p.add_argument("--methods")
    p.add_argument("--seed", type=int)
    p.add_argument("--threads", type=int)
    p.add_argument("--out")
    p.add_argument("--bins", type=int)
    p.add_argument("--include-greedy", dest="include_greedy",
                   action=argparse.BooleanOptionalAction, default=None)
    p.add_argument("--timing", action="store_true", default=None,
                   help="fill runtime_ns (makes the CSV non-reproducible)")
    p.add_argument("--format", choices=["csv", "json", "svg"])
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("oracle", help="exact MAX-CUT of one edge-list file")
    p.add_argument("file")
    p.add_argument("--out")
    p.add_argument("--format", choices=["json"])
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("score-edges", help="per-edge bipartivity scores")
    p.add_argument("file")
    p.add_argument("--index", default="phinl", help="beta, phia or phinl")
    p.add_argument("--out")
    p.add_argument("--format", choices=["csv", "json"])
    p.set_defaults(func=cmd_score_edges)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "func", None):
            raise UsageError("a subcommand is required")
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    except (InputError, OSError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ComputationError as exc:
        print(f"computation failed: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())

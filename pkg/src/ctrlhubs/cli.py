"""Command-line front end.

Subcommands ``hubs``, ``drivers``, ``scheme`` and ``oracle`` read an edge
list (path or ``-`` for stdin); ``gen`` writes one; ``bench`` times the hub
pipeline on generated graphs.  JSON output is an envelope

    {"tool": ..., "version": ..., "command": ..., "input_sha256": ..., "report": {...}}

with node sets as lists of external labels in natural order.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import re
import sys
import time
from collections.abc import Iterable, Sequence

import numpy as np

from . import __version__
from .drivers import all_possible_drivers, min_driver_count, one_mds
from .errors import EmptyGraphError, ParameterError, ParseError
from .generators import MODELS, erdos_renyi_directed, generate
from .graph import DirectedGraph, NodeSet, format_edge_list, parse_edge_list, to_bipartite
from .hubs import control_hubs
from .matching import maximum_matching
from .oracle import DEFAULT_LIMIT, oracle_hubs
from .paths import extract_scheme

EXIT_OK = 0
EXIT_USAGE = 2  # argparse
EXIT_PARSE = 3
EXIT_PARAM = 4
EXIT_TRUNCATED = 5
EXIT_IO = 6

_CHUNK = re.compile(r"(\d+)")


def natural_key(label: str):
    """Sort key comparing digit runs numerically: "2" < "10", "a2" < "a10"."""
    parts = _CHUNK.split(label)
    return tuple((0, int(p), "") if i % 2 else (1, 0, p) for i, p in enumerate(parts))


def _labels(g: DirectedGraph, nodes: Iterable[int]) -> list[str]:
    return sorted((g.labels[i] for i in nodes), key=natural_key)


def _label_set(g: DirectedGraph, s: NodeSet | None) -> list[str] | None:
    return None if s is None else _labels(g, s)


def _read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _load(path: str) -> tuple[DirectedGraph, str]:
    raw = _read_input(path).replace(b"\r\n", b"\n")
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"input is not valid UTF-8 ({exc.reason} at byte {exc.start})") from None
    return parse_edge_list(text), hashlib.sha256(raw).hexdigest()


def _envelope(command: str, digest: str | None, report: dict, **extra) -> dict:
    out = {"tool": "ctrlhubs", "version": __version__, "command": command}
    if digest is not None:
        out["input_sha256"] = digest
    out.update(extra)
    out["report"] = report
    return out


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _text_value(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return " ".join(str(x) for x in v)
    return str(v)


def _dump_text(report: dict) -> str:
    lines = []
    for key, value in report.items():
        if key == "paths" or key == "cycles":
            for seq in value:
                lines.append(f"{key[:-1]}: {_text_value(seq)}")
        elif key == "role_of":
            for lab, role in value.items():
                lines.append(f"role {lab}: {role}")
        else:
            lines.append(f"{key}: {_text_value(value)}")
    return "\n".join(lines) + "\n"


def _emit(args, command: str, digest: str | None, report: dict, **extra) -> None:
    if args.format == "json":
        text = _dump_json(_envelope(command, digest, report, **extra))
    else:
        text = _dump_text(report)
    _write(args.output, text)


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def hubs_report(g: DirectedGraph) -> dict:
    r = control_hubs(g)
    return {
        "heads": _labels(g, r.heads),
        "tails": _labels(g, r.tails),
        "hubs": _labels(g, r.hubs),
        "n_d": r.n_d,
        "perfect_matching": r.perfect_matching,
        "n": r.n,
        "edge_count": r.edge_count,
    }


def drivers_report(g: DirectedGraph) -> dict:
    return {
        "all_possible_drivers": _labels(g, all_possible_drivers(g)),
        "min_driver_count": min_driver_count(g),
        "one_mds": _labels(g, one_mds(g)),
        "n": g.n,
        "edge_count": g.edge_count,
    }


def scheme_report(g: DirectedGraph) -> dict:
    m = maximum_matching(to_bipartite(g))
    s = extract_scheme(g, m)
    lab = g.labels
    order = sorted(range(g.n), key=lambda i: natural_key(lab[i]))
    return {
        "paths": [[lab[i] for i in p] for p in s.paths],
        "cycles": [[lab[i] for i in c] for c in s.cycles],
        "role_of": {lab[i]: s.role_of[i].value for i in order},
        "matching_size": s.matching_size,
    }


def oracle_report(g: DirectedGraph, limit: int) -> dict:
    o = oracle_hubs(g, limit)
    agree = None
    if not o.truncated:
        agree = o.theorem_hubs == control_hubs(g).hubs
    return {
        "matching_count": o.matching_count,
        "head_union": _label_set(g, o.head_union),
        "tail_union": _label_set(g, o.tail_union),
        "theorem_hubs": _label_set(g, o.theorem_hubs),
        "definitional_hubs": _label_set(g, o.definitional_hubs),
        "truncated": o.truncated,
        "agree": agree,
    }


def loglog_slope(ns: Sequence[float], seconds: Sequence[float]) -> float:
    """Least-squares slope of log(seconds) against log(n)."""
    x = np.log(np.asarray(ns, dtype=float))
    y = np.log(np.maximum(np.asarray(seconds, dtype=float), 1e-9))
    return float(np.polyfit(x, y, 1)[0])


def run_bench(model: str, sizes: Sequence[int], edge_factor: float, seed: int) -> list[dict]:
    """Wall time of :func:`control_hubs` on one generated graph per size."""
    if not sizes:
        raise ParameterError("empty size ladder")
    if any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise ParameterError(f"sizes must be strictly ascending, got {list(sizes)}")
    if model not in MODELS:
        raise ParameterError(f"unknown model {model!r}; choose from {sorted(MODELS)}")
    # compile the numba kernels outside the timed region
    control_hubs(erdos_renyi_directed(8, 16, 0))
    rows = []
    for n in sizes:
        l = int(round(edge_factor * n))
        g = generate(model, n, l, seed)
        t0 = time.perf_counter()
        control_hubs(g)
        rows.append({"n": n, "l": g.edge_count, "seconds": time.perf_counter() - t0})
    return rows


def _cmd_hubs(args) -> int:
    g, digest = _load(args.input)
    _emit(args, "hubs", digest, hubs_report(g))
    return EXIT_OK


def _cmd_drivers(args) -> int:
    g, digest = _load(args.input)
    _emit(args, "drivers", digest, drivers_report(g))
    return EXIT_OK


def _cmd_scheme(args) -> int:
    g, digest = _load(args.input)
    _emit(args, "scheme", digest, scheme_report(g))
    return EXIT_OK


def _cmd_oracle(args) -> int:
    if args.limit < 1:
        raise ParameterError("--limit must be >= 1")
    g, digest = _load(args.input)
    report = oracle_report(g, args.limit)
    _emit(args, "oracle", digest, report, limit=args.limit)
    if report["truncated"]:
        print(
            f"oracle: more than {args.limit} maximum matchings; result truncated",
            file=sys.stderr,
        )
        return EXIT_TRUNCATED
    return EXIT_OK


def _cmd_gen(args) -> int:
    g = generate(args.model, args.n, args.l, args.seed, args.allow_self_loops)
    header = (
        f"# ctrlhubs {__version__} gen model={args.model} n={args.n} l={args.l} "
        f"seed={args.seed} self_loops={str(args.allow_self_loops).lower()}\n"
    )
    _write(args.output, header + format_edge_list(g))
    return EXIT_OK


def _cmd_bench(args) -> int:
    rows = run_bench(args.model, args.sizes, args.edge_factor, args.seed)
    slope = loglog_slope([r["n"] for r in rows], [r["seconds"] for r in rows]) if len(rows) > 1 else None
    if args.format == "json":
        report = {"rows": rows, "loglog_slope": slope}
        params = {"model": args.model, "edge_factor": args.edge_factor, "seed": args.seed}
        _write(args.output, _dump_json(_envelope("bench", None, report, parameters=params)))
    else:
        lines = ["n\tl\tseconds"] + [f"{r['n']}\t{r['l']}\t{r['seconds']:.6f}" for r in rows]
        if slope is not None:
            lines.append(f"# loglog_slope {slope:.4f}")
        _write(args.output, "\n".join(lines) + "\n")
    return EXIT_OK


def _u64(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError(f"{text} is not an unsigned 64-bit integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ctrlhubs", description="Control hubs of directed networks."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_input=True):
        if with_input:
            p.add_argument("input", nargs="?", default="-", help="edge-list file, '-' for stdin")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--output", "-o", default=None, help="write to this path instead of stdout")

    p = sub.add_parser("hubs", help="heads, tails and control hubs")
    common(p)
    p.set_defaults(func=_cmd_hubs)

    p = sub.add_parser("drivers", help="all possible driver nodes and one minimum driver set")
    common(p)
    p.set_defaults(func=_cmd_drivers)

    p = sub.add_parser("scheme", help="control paths and cycles of one maximum matching")
    common(p)
    p.set_defaults(func=_cmd_scheme)

    p = sub.add_parser("oracle", help="brute-force check over all maximum matchings")
    common(p)
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="max matchings to enumerate")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("gen", help="write a random directed graph as an edge list")
    p.add_argument("model", choices=sorted(MODELS))
    p.add_argument("-n", type=int, required=True, help="node count")
    p.add_argument("-l", type=int, required=True, help="edge count")
    p.add_argument("--seed", type=_u64, default=0)
    p.add_argument("--allow-self-loops", action="store_true")
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bench", help="time the hub pipeline over a size ladder")
    p.add_argument("--model", choices=sorted(MODELS), default="er")
    p.add_argument("--sizes", type=int, nargs="+", default=[10**4, 10**5, 10**6])
    p.add_argument("--edge-factor", type=float, default=5.0, help="l = edge_factor * n")
    p.add_argument("--seed", type=_u64, default=1)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=_cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"ctrlhubs: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except EmptyGraphError as exc:
        print(f"ctrlhubs: empty graph: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ParameterError as exc:
        print(f"ctrlhubs: parameter error: {exc}", file=sys.stderr)
        return EXIT_PARAM
    except OSError as exc:
        name = exc.filename if exc.filename is not None else getattr(args, "input", "?")
        print(f"ctrlhubs: cannot access {name}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

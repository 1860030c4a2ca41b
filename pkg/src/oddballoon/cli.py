"""Command-line front end.

Every command prints one report.  JSON reports carry a schema tag and are
byte-identical for identical inputs: worker counts, cache locations and
timings are left out unless ``--timing`` is given.

Exit status: 0 success, 1 usage or input error, 2 capacity exceeded,
3 request outside the proved range of the bounds (t < 5).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Sequence

from . import __version__
from .ballooning import (
    BallooningSpec,
    OutOfScopeError,
    balloon,
    balloon_cycles,
    decomposition_family,
    division_family,
    family_report,
    profile,
)
from .canon import canonical_key
from .extremal import (
    COROLLARY_KINDS,
    ConstructionRecipe,
    build_family,
    corollary_base,
    corollary_value,
    theorem_bounds,
)
from .formats import FormatError, decode_edge_list, decode_graph6, encode_graph6, to_dot
from .graph import CapacityError, Graph, complete, make_named
from .invariants import (
    bipartition,
    components,
    independent_covering,
    matching_number,
    vertex_cover_number,
)
from .oracle import OrderTooLargeError, certify_free, turan_oracle

SCHEMA = "oddballoon.report/1"

EXIT_OK, EXIT_USAGE, EXIT_CAPACITY, EXIT_SCOPE = 0, 1, 2, 3

_ALIASES = {
    "triangle": "complete:3",
    "edge": "complete:2",
    "k1": "complete:1",
}

_KINDS = {
    "path": "path",
    "cycle": "cycle",
    "star": "star",
    "complete": "complete",
    "k": "complete",
    "kbip": "complete_bipartite",
    "multi": "complete_multipartite",
    "turan": "turan",
    "empty": "independent",
    "independent": "independent",
}


class UsageError(ValueError):
    pass


def parse_graph(text: str) -> Graph:
    """Named form (``star:3``, ``kbip:2,3``), an edge-list file, or graph6."""
    text = _ALIASES.get(text.strip().lower(), text.strip())
    if ":" in text:
        kind, _, rest = text.partition(":")
        if kind not in _KINDS:
            raise UsageError(f"unknown graph kind {kind!r}; known: {', '.join(sorted(_KINDS))}")
        try:
            params = [int(p) for p in rest.split(",") if p.strip()]
        except ValueError:
            raise UsageError(f"bad parameters in {text!r}") from None
        return make_named(_KINDS[kind], params)
    p = Path(text)
    if p.is_file():
        body = p.read_text()
        first = body.lstrip().split("\n", 1)[0]
        if first.split("#", 1)[0].split() and all(
            tok.isdigit() for tok in first.split("#", 1)[0].split()
        ):
            return decode_edge_list(body)
        return decode_graph6(body.strip().splitlines()[0])
    return decode_graph6(text)


def _lengths(text: str | None) -> tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"bad --lengths {text!r}") from None


def _spec(args) -> BallooningSpec:
    if args.graph is None:
        raise UsageError("--graph is required")
    return BallooningSpec(parse_graph(args.graph), args.t, _lengths(args.lengths))


def _graph_dict(g: Graph) -> dict:
    return {"graph6": encode_graph6(g), "order": g.n, "edges": g.m}


# -- commands -----------------------------------------------------------------


def cmd_invariants(args) -> dict:
    g = parse_graph(args.graph)
    out = _graph_dict(g)
    out.update(
        matching_number=matching_number(g),
        vertex_cover_number=vertex_cover_number(g),
        max_degree=g.max_degree(),
        min_degree=g.min_degree(),
        components=components(g),
        bipartite=g.is_bipartite(),
    )
    if g.is_bipartite():
        gam, covers = independent_covering(g)
        bp = bipartition(g)
        out.update(
            independent_covering_number=gam,
            min_independent_coverings=[sorted(c) for c in covers],
            bipartition={"A": sorted(bp.A), "B": sorted(bp.B)},
        )
    return out


def cmd_balloon(args) -> dict:
    spec = _spec(args)
    g = balloon(spec)
    out = _graph_dict(g)
    out["spec"] = spec.to_dict()
    out["cycles"] = balloon_cycles(spec)
    return out


def cmd_divisions(args) -> dict:
    g = parse_graph(args.graph)
    fam = division_family(g)
    return {
        "base": encode_graph6(g),
        "count": len(fam),
        "members": [_graph_dict(d) for d in fam],
    }


def _check_scope(spec: BallooningSpec) -> None:
    if spec.t < 5:
        raise OutOfScopeError(f"t = {spec.t} is outside the bound theorem (needs t >= 5)")


def cmd_decompose(args) -> dict:
    spec = _spec(args)
    _check_scope(spec)
    fam = decomposition_family(spec, args.jobs)
    return family_report(fam, profile(fam))


def cmd_bounds(args) -> dict:
    spec = _spec(args)
    _check_scope(spec)
    if args.n is None:
        raise UsageError("--n is required")
    return theorem_bounds(spec, args.n, args.jobs, cache_dir=args.cache_dir).to_dict()


def cmd_construct(args) -> dict:
    if args.n is None or args.q is None:
        raise UsageError("--n and --q are required")
    Q = parse_graph(args.Q) if args.Q else (complete(args.q - 1) if args.q > 1 else Graph.empty(0))
    r = ConstructionRecipe(args.n, args.q, args.k, Q, args.side)
    g = build_family(r)
    out = _graph_dict(g)
    out["recipe"] = r.to_dict()
    return out


def _pattern(args) -> Graph:
    if args.pattern:
        return parse_graph(args.pattern)
    if args.graph:
        return balloon(_spec(args))
    raise UsageError("give --pattern, or --graph with --t to balloon it")


def cmd_check_free(args) -> dict:
    if not args.host:
        raise UsageError("--host is required")
    host = parse_graph(args.host)
    pat = _pattern(args)
    cert = certify_free(host, pat)
    return {"host": encode_graph6(host), "pattern": encode_graph6(pat), "certificate": cert.to_dict()}


def cmd_oracle(args) -> dict:
    if args.n is None or not args.forbid:
        raise UsageError("--n and at least one --forbid are required")
    family = [parse_graph(f) for f in args.forbid]
    res = turan_oracle(args.n, family, args.jobs, args.cache_dir)
    out = res.to_dict()
    out["family"] = sorted(canonical_key(f).decode() for f in family)
    return out


def _corollary_param(args):
    if args.corollary == "star":
        return args.a
    if args.corollary in ("path", "even_cycle"):
        return args.m
    return parse_graph(args.graph) if args.graph else None


def cmd_verify(args) -> dict:
    if args.corollary is None or args.n is None:
        raise UsageError("--corollary and --n are required")
    param = _corollary_param(args)
    if param is None:
        raise UsageError("missing corollary parameter (--a, --m or --graph)")
    if args.t < 5:
        raise OutOfScopeError(f"t = {args.t} is outside the bound theorem (needs t >= 5)")
    value, recipe, report = corollary_value(args.corollary, param, args.n, args.t, args.jobs, args.cache_dir)
    g = build_family(recipe)
    target = balloon(BallooningSpec(corollary_base(args.corollary, param), args.t))
    cert = certify_free(g, target)
    ok = cert.free and g.m == value
    return {
        "corollary": args.corollary,
        "parameter": encode_graph6(param) if isinstance(param, Graph) else param,
        "n": args.n,
        "t": args.t,
        "formula_value": value,
        "construction": _graph_dict(g),
        "recipe": recipe.to_dict(),
        "edges_match_formula": g.m == value,
        "free": cert.free,
        "certificate": cert.to_dict(),
        "bounds": report.to_dict(),
        "verified": ok,
    }


def cmd_export(args) -> dict | str:
    if args.report:
        doc = json.loads(Path(args.report).read_text())
        if doc.get("schema") != SCHEMA:
            raise UsageError(f"report schema {doc.get('schema')!r} is not {SCHEMA!r}")
        if args.to != "json":
            raise UsageError("reports export to json only")
        return _dump(doc)
    if not args.graph:
        raise UsageError("give --graph or --report")
    g = parse_graph(args.graph)
    if args.to == "graph6":
        return encode_graph6(g) + "\n"
    if args.to == "dot":
        return to_dot(g)
    return _dump(_envelope("export", {"graph": args.graph}, _graph_dict(g)))


COMMANDS = {
    "invariants": cmd_invariants,
    "balloon": cmd_balloon,
    "divisions": cmd_divisions,
    "decompose": cmd_decompose,
    "bounds": cmd_bounds,
    "construct": cmd_construct,
    "check-free": cmd_check_free,
    "oracle": cmd_oracle,
    "verify": cmd_verify,
    "export": cmd_export,
}

# flags that change how a result is computed but never what it is
_NOT_ECHOED = {"jobs", "cache_dir", "format", "timing", "command"}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # usage problems exit with status 1
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="oddballoon", description=__doc__.split("\n\n")[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--format", choices=["json", "text"], default="json")
        sp.add_argument("--jobs", type=int, default=1)
        sp.add_argument("--cache-dir", default=None)
        sp.add_argument("--timing", action="store_true", help="include wall-clock time")

    def ballooned(sp, t_default=5):
        sp.add_argument("--graph")
        sp.add_argument("--t", type=int, default=t_default)
        sp.add_argument("--lengths", help="comma list of odd cycle lengths, in edge order")

    sp = sub.add_parser("invariants", help="matching, cover, covering and bipartition data")
    sp.add_argument("--graph", required=True)
    common(sp)
    sp = sub.add_parser("balloon", help="build the odd-ballooning of a graph")
    ballooned(sp)
    common(sp)
    sp = sub.add_parser("divisions", help="all graphs reachable by vertex division")
    sp.add_argument("--graph", required=True)
    common(sp)
    sp = sub.add_parser("decompose", help="decomposition family and extremal profile")
    ballooned(sp)
    common(sp)
    sp = sub.add_parser("bounds", help="lower and upper bounds for ex(n, H(t))")
    ballooned(sp)
    sp.add_argument("--n", type=int)
    common(sp)
    sp = sub.add_parser("construct", help="build a lower-bound construction")
    sp.add_argument("--n", type=int)
    sp.add_argument("--q", type=int)
    sp.add_argument("--k", type=int, default=0)
    sp.add_argument("--Q", help="graph on q-1 vertices (default: complete)")
    sp.add_argument("--side", type=int, default=0, choices=[0, 1])
    common(sp)
    sp = sub.add_parser("check-free", help="search for a pattern inside a host")
    sp.add_argument("--host")
    sp.add_argument("--pattern")
    ballooned(sp)
    common(sp)
    sp = sub.add_parser("oracle", help="exact Turán number at small order")
    sp.add_argument("--n", type=int)
    sp.add_argument("--forbid", action="append", default=[])
    common(sp)
    sp = sub.add_parser("verify", help="closed form, construction and freeness end to end")
    sp.add_argument("--corollary", choices=COROLLARY_KINDS)
    sp.add_argument("--a", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--graph", help="tree for good_tree")
    sp.add_argument("--t", type=int, default=5)
    sp.add_argument("--n", type=int)
    common(sp)
    sp = sub.add_parser("export", help="serialize a graph or re-emit a report")
    sp.add_argument("--graph")
    sp.add_argument("--report")
    sp.add_argument("--to", choices=["json", "graph6", "dot"], default="json")
    common(sp)
    return p


def _envelope(command: str, inputs: dict, result: dict, seconds: float | None = None) -> dict:
    doc = {
        "schema": SCHEMA,
        "version": __version__,
        "command": command,
        "inputs": inputs,
        "result": result,
    }
    if seconds is not None:
        doc["timing_seconds"] = round(seconds, 3)
    return doc


def _dump(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _text(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for key in sorted(obj):
            val = obj[key]
            if isinstance(val, dict) or (isinstance(val, list) and any(isinstance(x, dict) for x in val)):
                lines.append(f"{pad}{key}:")
                lines += _text(val, indent + 1)
            else:
                lines.append(f"{pad}{key}: {json.dumps(val, sort_keys=True)}")
    elif isinstance(obj, list):
        for i, val in enumerate(obj):
            lines.append(f"{pad}- [{i}]")
            lines += _text(val, indent + 1)
    else:
        lines.append(f"{pad}{json.dumps(obj)}")
    return lines


def run(argv: Sequence[str]) -> tuple[int, str, str]:
    """Run one command; returns (exit status, stdout text, stderr text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0), "", ""
    inputs = {k: v for k, v in sorted(vars(args).items()) if k not in _NOT_ECHOED and v is not None}
    start = time.perf_counter()
    try:
        result = COMMANDS[args.command](args)
    except OutOfScopeError as exc:
        return EXIT_SCOPE, "", f"out of theorem scope: {exc}\n"
    except CapacityError as exc:
        return EXIT_CAPACITY, "", f"capacity exceeded: {exc}\n"
    except (UsageError, FormatError, OrderTooLargeError, ValueError, OSError) as exc:
        return EXIT_USAGE, "", f"error: {exc}\n"
    if isinstance(result, str):
        return EXIT_OK, result, ""
    seconds = time.perf_counter() - start if args.timing else None
    doc = _envelope(args.command, inputs, result, seconds)
    if args.format == "text":
        return EXIT_OK, "\n".join(_text(doc)) + "\n", ""
    return EXIT_OK, _dump(doc), ""


def main(argv: Sequence[str] | None = None) -> int:
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    raise SystemExit(main())

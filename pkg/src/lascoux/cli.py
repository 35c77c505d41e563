"""Command-line interface.

Diagrams are read from stdin either as ASCII grids or, when the input starts
with '{', as JSON records.  Global flags select the output format and the
search limits used by enumeration-backed commands.
"""

from __future__ import annotations

import argparse
import json
import sys

from .diagram import Diagram, parse_diagram, render_ascii, to_record
from .explore import (
    SearchLimits,
    conjecture_probe,
    enumerate_gkd,
    enumerate_kkd,
    lascoux_polynomial,
    maxg,
    maxg_brute,
    maxg_hat_brute,
)
from .families import checkered_diagram, key_diagram, lock_diagram, skew_diagram
from .labeling import check_colorp
from .snow import (
    decoration_record,
    ghost_snow,
    reduce,
    render_decoration,
    snow,
    snow_star,
)
from .solve import solve_generalized_skew, solve_greedy, solve_lock


def _parse_alpha(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"bad composition {text!r}: expected comma-separated integers")


def _parse_limits(text: str) -> SearchLimits:
    states = SearchLimits().max_states
    seconds = SearchLimits().max_seconds
    for piece in text.split(","):
        key, _, value = piece.partition("=")
        key = key.strip()
        if key == "states":
            states = int(value)
        elif key == "seconds":
            seconds = float(value)
        else:
            raise ValueError(f"bad limits component {piece!r}")
    return SearchLimits(max_states=states, max_seconds=seconds)


def _read_diagram() -> Diagram:
    text = sys.stdin.read()
    if not text.strip():
        raise ValueError("no diagram on stdin")
    if text.lstrip().startswith("{"):
        return parse_diagram(json.loads(text))
    return parse_diagram(text)


def _emit_diagram(diagram: Diagram, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(to_record(diagram)))
    else:
        sys.stdout.write(render_ascii(diagram))


def _family_diagram(family: str, alpha: tuple[int, ...]) -> Diagram:
    if family == "key":
        return key_diagram(alpha)
    if family == "lock":
        return lock_diagram(alpha)
    if family == "skew":
        return skew_diagram(alpha)
    raise ValueError(f"unknown family {family!r}")


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("json", "ascii"), default="ascii")
    parser.add_argument(
        "--limits",
        type=_parse_limits,
        default=SearchLimits(),
        metavar="states=N,seconds=S",
    )


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="lascoux")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a named diagram family")
    p.add_argument("family", choices=("key", "lock", "skew", "checkered"))
    p.add_argument("--alpha", type=_parse_alpha)
    p.add_argument("--n", type=int)
    p.add_argument("--parity", choices=("even", "odd"), default="even")
    _add_common(p)

    for name in ("show", "snow", "snowstar", "ghostsnow", "maxghat", "reduce"):
        p = sub.add_parser(name)
        _add_common(p)

    p = sub.add_parser("maxg", help="maximum ghosts over the two-move closure")
    p.add_argument("--method", choices=("auto", "brute", "theorem"), default="auto")
    p.add_argument("--alpha", type=_parse_alpha)
    p.add_argument("--family", choices=("key", "lock", "skew"), default="key")
    _add_common(p)

    p = sub.add_parser("enumerate", help="list every reachable diagram")
    p.add_argument("--moves", choices=("kkd", "gkd"), default="kkd")
    p.add_argument("--out-format", dest="out", choices=("json", "count"), default="count")
    _add_common(p)

    p = sub.add_parser("lascoux", help="signed generating polynomial of a key closure")
    p.add_argument("--alpha", type=_parse_alpha, required=True)
    _add_common(p)

    p = sub.add_parser("solve", help="produce a maximum-ghost move certificate")
    p.add_argument(
        "--strategy", choices=("auto", "skew", "lock", "greedy"), default="auto"
    )
    _add_common(p)

    p = sub.add_parser("colorp", help="check the labeling invariants of a lock closure")
    p.add_argument("--alpha", type=_parse_alpha, required=True)
    _add_common(p)

    p = sub.add_parser("probe", help="search small diagrams for capacity violations")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--cells", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("serve", help="start the HTTP puzzle service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--state-file")
    _add_common(p)

    args = parser.parse_args(argv)

    try:
        return _dispatch(args)
    except (ValueError, RuntimeError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _dispatch(args: argparse.Namespace) -> int:
    fmt = getattr(args, "format", "ascii")
    limits = getattr(args, "limits", SearchLimits())

    if args.command == "gen":
        if args.family == "checkered":
            if args.n is None:
                raise ValueError("gen checkered requires --n")
            diagram = checkered_diagram(args.n, args.parity)
        else:
            if args.alpha is None:
                raise ValueError(f"gen {args.family} requires --alpha")
            diagram = _family_diagram(args.family, args.alpha)
        _emit_diagram(diagram, fmt)
        return 0

    if args.command == "show":
        _emit_diagram(_read_diagram(), fmt)
        return 0

    if args.command in ("snow", "snowstar", "ghostsnow"):
        diagram = _read_diagram()
        deco = {"snow": snow, "snowstar": snow_star, "ghostsnow": ghost_snow}[
            args.command
        ](diagram)
        if fmt == "json":
            print(json.dumps(decoration_record(deco)))
        else:
            sys.stdout.write(render_decoration(deco))
            print(f"flakes: {deco.flake_count}")
        return 0

    if args.command == "maxg":
        if args.alpha is not None:
            diagram = _family_diagram(args.family, args.alpha)
        else:
            diagram = _read_diagram()
        if args.method == "brute":
            count, method = maxg_brute(diagram, limits).count, "brute"
        else:
            count, method = maxg(diagram, limits)
            if args.method == "theorem" and method == "brute":
                raise ValueError("no capacity theorem applies to this diagram")
        if fmt == "json":
            print(json.dumps({"maxg": count, "method": method}))
        else:
            print(count)
        return 0

    if args.command == "maxghat":
        diagram = _read_diagram()
        result = maxg_hat_brute(diagram, limits)
        if not result.exact:
            raise RuntimeError("enumeration hit the search limits")
        if fmt == "json":
            print(json.dumps({"maxghat": result.count, "method": "brute"}))
        else:
            print(result.count)
        return 0

    if args.command == "enumerate":
        diagram = _read_diagram()
        explore = enumerate_kkd if args.moves == "kkd" else enumerate_gkd
        reachable = explore(diagram, limits)
        if not reachable.complete:
            raise RuntimeError("enumeration hit the search limits")
        if args.out == "count":
            print(len(reachable))
        else:
            print(json.dumps([to_record(d) for d in reachable.diagrams()]))
        return 0

    if args.command == "lascoux":
        poly = lascoux_polynomial(args.alpha, limits)
        print(json.dumps(poly.to_json()))
        return 0

    if args.command == "solve":
        diagram = _read_diagram()
        strategy = args.strategy
        if strategy == "auto":
            from .families import is_key, is_generalized_skew, is_lock, lockmain_qualifies

            if is_key(diagram) or is_generalized_skew(diagram):
                strategy = "skew"
            elif is_lock(diagram) and lockmain_qualifies(diagram):
                strategy = "lock"
            else:
                strategy = "greedy"
        solver = {
            "skew": solve_generalized_skew,
            "lock": solve_lock,
            "greedy": solve_greedy,
        }[strategy]
        certificate = solver(diagram)
        print(json.dumps({"strategy": strategy, **certificate.to_json()}))
        return 0

    if args.command == "reduce":
        diagram = _read_diagram()
        _emit_diagram(reduce(diagram, diagram), fmt)
        return 0

    if args.command == "colorp":
        report = check_colorp(lock_diagram(args.alpha), limits)
        if fmt == "json":
            print(json.dumps(report.to_json()))
        else:
            status = "ok" if report.ok else "FAILED"
            print(f"{status} ({report.members} diagrams checked)")
            for clause, result in sorted(report.clauses.items()):
                mark = "ok" if result.ok else f"FAILED: {result.counterexample}"
                print(f"  {clause}: {mark}")
        return 0 if report.ok else 1

    if args.command == "probe":
        report = conjecture_probe(args.rows, args.cols, args.cells, limits)
        if fmt == "json":
            print(json.dumps(report.to_json()))
        else:
            print(
                f"{len(report.counterexamples)} counterexamples "
                f"(checked {report.checked}, skipped {len(report.skipped)})"
            )
        return 0

    if args.command == "serve":
        import uvicorn

        from .service import create_app

        app = create_app(state_file=args.state_file, limits=limits)
        uvicorn.run(app, host="127.0.0.1", port=args.port)
        return 0

    raise ValueError(f"unknown command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Problem files are line oriented::

    # the diamond quiver
    vertices: 4
    arrows: 1 2, 1 3, 2 4, 3 4
    dims: 1 1 1 1
    weight 1: 2
    weight 2: 0
    weight 3: 0
    weight 4: -2
    sigma: 1 0 0 -1

``weight`` lines are needed by ``membership``, ``count``, ``emit-lp`` and
``oracle``; ``sigma`` by ``semistable``.  Exit codes: 0 success or
affirmative answer, 1 negative answer, 2 input error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import decision, oracle, semistability
from .errors import BoundExceeded, BudgetExceeded, ParseError, QuiverError, ValidationError
from .exactlp import Feasible
from .lpmodel import build_moment_polytope, emit_lp_text, instantiate
from .quiver import Quiver, WeightFamily, a3, diamond, validate_dims, validate_family, validate_quiver

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


@dataclass(frozen=True)
class ProblemFile:
    quiver: Quiver
    dims: tuple[int, ...]
    weights: WeightFamily | None = None
    sigma: tuple[int, ...] | None = None


_INT = re.compile(r"^[+-]?\d+$")


def _ints(text: str, lineno: int) -> list[int]:
    toks = text.split()
    for t in toks:
        if not _INT.match(t):
            raise ParseError(f"expected an integer, got {t!r}", lineno)
    return [int(t) for t in toks]


def parse_problem(text: str) -> ProblemFile:
    fields: dict[str, tuple[str, int]] = {}
    weights: dict[int, tuple[list[int], int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise ParseError(f"expected 'key: value', got {line!r}", lineno)
        key = " ".join(key.split())
        m = re.fullmatch(r"weight\s+(\d+)", key)
        if m:
            x = int(m.group(1))
            if x in weights:
                raise ParseError(f"duplicate weight for vertex {x}", lineno)
            weights[x] = (_ints(value, lineno), lineno)
            continue
        if key not in ("vertices", "arrows", "dims", "sigma"):
            raise ParseError(f"unknown key {key!r}", lineno)
        if key in fields:
            raise ParseError(f"duplicate key {key!r}", lineno)
        fields[key] = (value, lineno)

    for key in ("vertices", "arrows", "dims"):
        if key not in fields:
            raise ParseError(f"missing '{key}:' line")
    value, lineno = fields["vertices"]
    nums = _ints(value, lineno)
    if len(nums) != 1:
        raise ParseError("'vertices:' takes one integer", lineno)
    k = nums[0]
    value, lineno = fields["arrows"]
    arrows = []
    for part in value.split(","):
        if not part.strip():
            if value.strip():
                raise ParseError("empty arrow entry", lineno)
            continue
        pair = _ints(part, lineno)
        if len(pair) != 2:
            raise ParseError(f"arrow {part.strip()!r} needs a source and a target", lineno)
        arrows.append(tuple(pair))
    q = Quiver(k, arrows)
    validate_quiver(q)
    value, lineno = fields["dims"]
    dims = validate_dims(q, _ints(value, lineno))

    family = None
    if weights:
        missing = [x for x in q.vertices if x not in weights]
        extra = sorted(set(weights) - set(q.vertices))
        if extra:
            raise ParseError(f"weight for unknown vertex {extra[0]}", weights[extra[0]][1])
        if missing:
            raise ParseError(f"no weight line for vertex {missing[0]}")
        family = validate_family(dims, [weights[x][0] for x in q.vertices])
    sigma = None
    if "sigma" in fields:
        value, lineno = fields["sigma"]
        sigma = tuple(_ints(value, lineno))
        if len(sigma) != k:
            raise ValidationError(f"sigma has {len(sigma)} entries for {k} vertices")
    return ProblemFile(q, dims, family, sigma)


def render_problem(p: ProblemFile) -> str:
    lines = [
        f"vertices: {p.quiver.num_vertices}",
        "arrows: " + ", ".join(f"{s} {t}" for s, t in p.quiver.arrows),
        "dims: " + " ".join(map(str, p.dims)),
    ]
    if p.weights is not None:
        for x, w in enumerate(p.weights, start=1):
            lines.append(f"weight {x}: " + " ".join(map(str, w)))
    if p.sigma is not None:
        lines.append("sigma: " + " ".join(map(str, p.sigma)))
    return "\n".join(lines) + "\n"


def _need_weights(p: ProblemFile, scale: int) -> WeightFamily:
    if p.weights is None:
        raise ParseError("this command needs 'weight <x>:' lines")
    return tuple(tuple(scale * v for v in w) for w in p.weights)


def certificate_json(result) -> str:
    if isinstance(result, Feasible):
        body = {"status": "feasible", "point": [str(v) for v in result.point]}
    else:
        body = {"status": "infeasible", "farkas": [str(v) for v in result.farkas]}
    return json.dumps(body)


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _closed_form(p: ProblemFile, sigma: Sequence[int]):
    if p.quiver == a3():
        return semistability.closed_form_a3(p.dims, sigma)
    if p.quiver == diamond():
        return semistability.closed_form_diamond(p.dims, sigma)
    return None


def _verdict(v) -> str:
    if v is semistability.NOT_COVERED:
        return "NOT-COVERED"
    return "YES" if v else "NO"


def _selftest(seed: int) -> bool:
    from . import selftest

    ok = True
    for name, passed, detail in selftest.run_all(seed):
        print(f"{'PASS' if passed else 'FAIL'} {name}: {detail}")
        ok &= passed
    return ok


def run(command: str, args: argparse.Namespace) -> int:
    if command == "selftest":
        return EXIT_OK if _selftest(args.seed) else EXIT_NO
    if args.problem is None:
        raise ParseError(f"'{command}' needs a problem file")
    p = parse_problem(Path(args.problem).read_text())
    scale = args.scale
    budget = decision.CountBudget(max_nodes=args.budget, max_points=args.budget)

    if command == "validate":
        print(f"OK: {p.quiver.num_vertices} vertices, {len(p.quiver.arrows)} arrows, dims {list(p.dims)}")
        return EXIT_OK
    if command == "membership":
        lam = _need_weights(p, scale)
        res = decision.membership(p.quiver, p.dims, lam)
        print("MEMBER" if res.member else "NOT-MEMBER")
        _write(certificate_json(res.certificate) + "\n", args.out)
        return EXIT_OK if res.member else EXIT_NO
    if command == "count":
        lam = _need_weights(p, scale)
        print(decision.multiplicity(p.quiver, p.dims, lam, budget))
        return EXIT_OK
    if command == "emit-lp":
        lam = _need_weights(p, scale)
        _write(emit_lp_text(instantiate(build_moment_polytope(p.quiver, p.dims), lam)), args.out)
        return EXIT_OK
    if command == "oracle":
        lam = _need_weights(p, scale)
        print(oracle.multiplicity_formula(p.quiver, p.dims, lam, bound=args.budget))
        return EXIT_OK
    if command == "semistable":
        if p.sigma is None:
            raise ParseError("'semistable' needs a 'sigma:' line")
        sigma = tuple(scale * s for s in p.sigma)
        if max(p.dims) > 6:
            print("warning: the reduction grows with the dimensions; this may be slow", file=sys.stderr)
        closed = _closed_form(p, sigma)
        reduced = semistability.check_semistable(p.quiver, p.dims, sigma)
        if closed is not None:
            print(f"closed-form: {_verdict(closed)}")
        print(f"reduction: {_verdict(reduced)}")
        return EXIT_OK if reduced else EXIT_NO
    raise ParseError(f"unknown command {command!r}")


COMMANDS = ("validate", "membership", "count", "emit-lp", "semistable", "oracle", "selftest")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quivermoment",
        description="Moment cone membership and multiplicities for acyclic quivers.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("problem", nargs="?", help="problem file")
    parser.add_argument("--budget", type=int, default=decision.DEFAULT_BUDGET.max_nodes,
                        help="enumeration node limit for counting (default: %(default)s)")
    parser.add_argument("--scale", type=int, default=1, help="multiply weights / sigma by N")
    parser.add_argument("--out", help="write certificate or LP text here instead of stdout")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized self-tests")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.scale < 1 or args.budget < 1:
        print("error: --scale and --budget must be positive", file=sys.stderr)
        return EXIT_INPUT
    try:
        return run(args.command, args)
    except (BudgetExceeded, BoundExceeded) as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (QuiverError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

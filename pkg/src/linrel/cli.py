"""Command-line front end: ``linrel {analyze,check,solve,verify}``.

Exit status: 0 on success, 1 when a supplied solution fails its check or
``verify`` finds a violation, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import factorization as fz
from .errors import LinrelError
from .relation import LinearRelation, compose, contained_via_parts
from .relfile import read_relation, serialize_relation
from .report import DecisionReport
from .verify import FIELD_TAGS, SUITES, RunConfig, replay, run

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- problem table -----------------------------------------------------------------
#
# Each problem names its input relations, the criterion report, the solver and
# the verifier for a user-supplied C.


def _exact_right_solution(a, b):
    return compose(b.inverse, a) if fz.exact_right_check(a, b).verdict else None


def _exact_left_solution(a, b):
    return compose(a, b.inverse) if fz.exact_left_check(a, b).verdict else None


PROBLEMS: dict[str, dict] = {
    "contains": dict(inputs=("A", "B"), goal="is A ⊆ B?", criterion=contained_via_parts),
    "right-relation": dict(inputs=("A", "B"), goal="is there a relation C with A ⊆ BC?",
                           criterion=fz.right_relation_criterion, solve=fz.solve_right_relation,
                           verify=lambda a, b, c: fz.verify_right_solution(a, b, c, operator=False)),
    "right-operator": dict(inputs=("A", "B"), goal="is there an operator C with A ⊆ BC?",
                           criterion=fz.right_operator_criterion, solve=fz.solve_right_operator,
                           verify=lambda a, b, c: fz.verify_right_solution(a, b, c, operator=True)),
    "left-relation": dict(inputs=("A", "B"), goal="is there a relation C with A ⊆ CB?",
                          criterion=fz.left_relation_criterion, solve=fz.solve_left_relation,
                          verify=lambda a, b, c: fz.verify_left_solution(a, b, c, operator=False)),
    "left-operator": dict(inputs=("A", "B"), goal="is there an operator C with A ⊆ CB?",
                          criterion=fz.left_criterion, solve=fz.solve_left_operator,
                          verify=lambda a, b, c: fz.verify_left_solution(a, b, c, operator=True)),
    "left-injective": dict(inputs=("A", "B"), goal="is there an injective operator C with A ⊆ CB?",
                           criterion=fz.left_injective_criterion, solve=fz.solve_left_operator_injective,
                           verify=lambda a, b, c: fz.verify_left_solution(a, b, c, operator=True, injective=True)),
    "operator-part": dict(inputs=("R",), goal="is there an operator C ⊆ R with ran C = ran R?",
                          criterion=fz.operator_part_criterion, solve=fz.operator_part,
                          verify=fz.verify_operator_part),
    "exact-right": dict(inputs=("A", "B"), goal="is A = BB⁻¹A? (then C = B⁻¹A gives A = BC)",
                        criterion=fz.exact_right_check, solve=_exact_right_solution,
                        verify=lambda a, b, c: fz.verify_right_solution(a, b, c, operator=False, exact=True)),
    "exact-left": dict(inputs=("A", "B"), goal="is A = AB⁻¹B? (then C = AB⁻¹ gives A = CB)",
                       criterion=fz.exact_left_check, solve=_exact_left_solution,
                       verify=lambda a, b, c: fz.verify_left_solution(a, b, c, operator=False, exact=True)),
}


def _load(paths: Sequence[str], names: Sequence[str]) -> list[LinearRelation]:
    if len(paths) != len(names):
        raise UsageError(f"expected {len(names)} relation file(s) ({', '.join(names)}), got {len(paths)}")
    out = []
    for path in paths:
        try:
            out.append(read_relation(path))
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
        except LinrelError as exc:
            raise UsageError(f"{path}: {exc}") from None
    return out


def _emit(text: str, data: dict, as_json: bool) -> None:
    if as_json:
        sys.stdout.write(json.dumps(data, indent=2, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


# -- subcommands -----------------------------------------------------------------------


def cmd_analyze(args) -> int:
    (r,) = _load(args.files, ("R",))
    p = r.parts
    rows = [("dom", p.dom), ("ran", p.ran), ("ker", p.ker), ("mul", p.mul)]
    lines = [f"field: {r.field.name}", f"shape: K^{r.dom_dim} × K^{r.cod_dim}", f"dim R: {r.dim}"]
    lines += [f"{name}: dim {s.dim}  {s}" for name, s in rows]
    lines.append(f"operator: {'yes' if r.is_operator() else 'no'}")
    lines.append(f"injective: {'yes' if r.is_injective() else 'no'}")
    data = {"field": r.field.tag, "dom_dim": r.dom_dim, "cod_dim": r.cod_dim, "dim": r.dim,
            **{name: {"dim": s.dim, "basis": [[r.field.format(a) for a in v] for v in s.basis]} for name, s in rows},
            "operator": r.is_operator(), "injective": r.is_injective()}
    _emit("\n".join(lines), data, args.json)
    return EXIT_OK


def cmd_check(args) -> int:
    entry = PROBLEMS[args.problem]
    names = entry["inputs"]
    if len(args.files) == len(names) + 1 and "verify" in entry:
        *rels, c = _load(args.files, names + ("C",))
        report: DecisionReport = entry["verify"](*rels, c)
        title = f"{args.problem}: does the given C solve it?"
        _emit(report.to_text(title), {"problem": args.problem, "solution_check": True, **report.to_dict()}, args.json)
        return EXIT_OK if report.verdict else EXIT_FAIL
    rels = _load(args.files, names)
    report = entry["criterion"](*rels)
    title = f"{args.problem}: {entry['goal']}"
    _emit(report.to_text(title), {"problem": args.problem, "solution_check": False, **report.to_dict()}, args.json)
    return EXIT_OK


def cmd_solve(args) -> int:
    entry = PROBLEMS[args.problem]
    if "solve" not in entry:
        raise UsageError(f"'{args.problem}' is a yes/no question; use 'check {args.problem}'")
    rels = _load(args.files, entry["inputs"])
    report = entry["criterion"](*rels)
    result = entry["solve"](*rels)
    if result is None:
        msg = f"no solution: {report.failed} fails"
        _emit(report.to_text(f"{args.problem}: {msg}"),
              {"problem": args.problem, "solved": False, "obstruction": report.failed, **report.to_dict()}, args.json)
        return EXIT_OK
    c = result.C if isinstance(result, fz.OperatorSolution) else result
    text = serialize_relation(c, f"{args.problem} solution C")
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        summary = f"{args.problem}: solution written to {args.output}"
    else:
        summary = text.rstrip("\n")
    data = {"problem": args.problem, "solved": True, "output": args.output, "relation": text}
    _emit(summary, data, args.json)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.replay:
        try:
            failing = replay(Path(args.replay).read_text(encoding="utf-8"))
        except OSError as exc:
            raise UsageError(f"cannot read {args.replay}: {exc.strerror}") from None
        except LinrelError as exc:
            raise UsageError(f"{args.replay}: {exc}") from None
        text = "\n".join([f"violated: {p}" for p in failing] or ["all properties hold"])
        _emit(text, {"violated": failing}, args.json)
        return EXIT_FAIL if failing else EXIT_OK
    try:
        config = RunConfig(seed=args.seed, trials=args.trials, fields=tuple(args.field or ["gf2"]),
                           max_dim=args.max_dim, suites=tuple(args.suite) if args.suite else None,
                           oracle=args.oracle)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = run(config)
    sys.stdout.write(report.to_json() if args.json else report.to_text())
    return EXIT_OK if report.ok else EXIT_FAIL


# -- argument parsing ---------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="linrel", description="Linear relations over exact fields: parts, factorization criteria and solvers.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="dimensions of dom, ran, ker and mul")
    p.add_argument("files", nargs=1, metavar="R")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("check", help="decide a problem, or check a proposed solution C")
    p.add_argument("problem", choices=list(PROBLEMS))
    p.add_argument("files", nargs="+", metavar="FILE")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("solve", help="construct a solution C, or name the obstruction")
    p.add_argument("problem", choices=list(PROBLEMS))
    p.add_argument("files", nargs="+", metavar="FILE")
    p.add_argument("-o", "--output", help="write C here (default: stdout)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="run the seeded property suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--field", action="append", choices=FIELD_TAGS, help="repeatable; default gf2")
    p.add_argument("--max-dim", type=int, default=3)
    p.add_argument("--suite", action="append", choices=list(SUITES), help="repeatable; default all")
    p.add_argument("--oracle", action="store_true", help="include the exhaustive oracle suite (prime fields)")
    p.add_argument("--replay", metavar="FILE", help="re-check a reproducer printed by a failing run")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LinrelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run_command(argv: Sequence[str]) -> tuple[int, str]:
    """Run the CLI in-process and capture its standard output."""
    import io
    from contextlib import redirect_stdout

    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())

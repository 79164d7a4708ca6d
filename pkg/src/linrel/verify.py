"""Seeded property suites behind ``linrel verify``.

Each suite draws its instances from an RNG keyed by (seed, field, suite,
trial), so a run is a pure function of its :class:`RunConfig` and trials
can be evaluated in any order.  A violated property is reported with a
reproducer: the offending relations as relation files, shrunk by dropping
generators for as long as the same property still fails.
"""

from __future__ import annotations

import json
import random
from collections import Counter
from dataclasses import dataclass, field as dc_field
from typing import Callable, Iterable

from .errors import ParseError
from .field import FieldSpec, field_from_tag
from .oracle import EnumerationBudget, Problem, oracle_exists
from .randgen import random_instance_relation, random_subspace, trial_rng
from .relation import LinearRelation, arens_equal, compose, contained_via_parts, image
from .relfile import parse_relation, serialize_relation
from .subspace import Subspace, complement, vadd
from . import factorization as fz

Instance = dict[str, LinearRelation]
Outcome = list[tuple[str, bool | None]]  # None: hypothesis not met, property skipped

FIELD_TAGS = ("gf2", "gf3", "gf5", "q")


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    trials: int = 100
    fields: tuple[str, ...] = ("gf2",)
    max_dim: int = 3
    suites: tuple[str, ...] | None = None  # None: every suite
    oracle: bool = False

    def __post_init__(self) -> None:
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.trials < 0 or self.max_dim < 0:
            raise ValueError("trials and max_dim must be non-negative")
        for tag in self.fields:
            field_from_tag(tag)
        for s in self.selected_suites():
            if s not in SUITES:
                raise ValueError(f"unknown suite {s!r}")

    def selected_suites(self) -> tuple[str, ...]:
        if self.suites is not None:
            return self.suites
        return tuple(s for s in SUITES if self.oracle or s != "oracle")


# -- instance generation --------------------------------------------------------


def _dims(rng: random.Random, max_dim: int, k: int) -> list[int]:
    return [rng.randint(0, max_dim) for _ in range(k)]


def gen_composition(field: FieldSpec, max_dim: int, rng: random.Random) -> Instance:
    n, m, q, p = _dims(rng, max_dim, 4)
    return {
        "A": random_instance_relation(field, n, q, rng),
        "B": random_instance_relation(field, m, q, rng),
        "S": random_instance_relation(field, q, p, rng),
    }


def gen_arens(field: FieldSpec, max_dim: int, rng: random.Random) -> Instance:
    """R and S of one shape; S is R itself, R enlarged, part of R, or unrelated."""
    n, m = _dims(rng, max_dim, 2)
    r = random_instance_relation(field, n, m, rng)
    mode = rng.randrange(4)
    if mode == 0:
        s = r
    elif mode == 1:
        extra = random_subspace(field, n + m, rng)
        s = LinearRelation(n, m, r.graph + extra)
    elif mode == 2:
        s = LinearRelation(n, m, r.graph & random_subspace(field, n + m, rng))
    else:
        s = random_instance_relation(field, n, m, rng)
    return {"R": r, "S": s}


def gen_factorization(field: FieldSpec, max_dim: int, rng: random.Random) -> Instance:
    """A ⊆ X×Z with a right partner BR ⊆ Y×Z and a left partner BL ⊆ X×Y."""
    n, m, q = _dims(rng, max_dim, 3)
    return {
        "A": random_instance_relation(field, n, q, rng),
        "BR": random_instance_relation(field, m, q, rng),
        "BL": random_instance_relation(field, n, m, rng),
    }


def gen_subspaces(field: FieldSpec, max_dim: int, rng: random.Random) -> Instance:
    n = rng.randint(0, max_dim)
    return {"U": LinearRelation(n, 0, random_subspace(field, n, rng)),
            "W": LinearRelation(n, 0, random_subspace(field, n, rng))}


def gen_oracle(field: FieldSpec, max_dim: int, rng: random.Random) -> Instance:
    return gen_factorization(field, min(max_dim, oracle_dim_cap(field)), rng)


def oracle_dim_cap(field: FieldSpec) -> int:
    """Largest per-space dimension the oracle suite draws for this field."""
    return 2 if field.p == 2 else 1


# -- property checks ------------------------------------------------------------


def check_composition(inst: Instance) -> Outcome:
    a, b, s = inst["A"], inst["B"], inst["S"]
    sr = compose(s, a)
    bba = compose(b, compose(b.inverse, a))
    inside = b.ran.contains(a.ran)
    out: Outcome = [
        ("dom SR = R⁻¹(dom S ∩ ran R)", sr.dom == image(a.inverse, s.dom & a.ran)),
        ("ker SR = R⁻¹(ker S ∩ ran R)", sr.ker == image(a.inverse, s.ker & a.ran)),
        ("ran SR = S(dom S ∩ ran R)", sr.ran == image(s, s.dom & a.ran)),
        ("mul SR = S(dom S ∩ mul R)", sr.mul == image(s, s.dom & a.mul)),
        ("ran BB⁻¹A = ran A + mul B  [ran A ⊆ ran B]", bba.ran == a.ran + b.mul if inside else None),
        ("ran BB⁻¹A = (ran A ∩ ran B) + mul B", bba.ran == (a.ran & b.ran) + b.mul),
        ("ker BB⁻¹A = A⁻¹(mul B)", bba.ker == image(a.inverse, b.mul)),
    ]
    for name, r in (("A", a), ("B", b), ("S", s), ("SR", sr), ("BB⁻¹A", bba)):
        out.append((f"codim ker = codim mul  [{name}]", r.ker.codim_in(r.dom) == r.mul.codim_in(r.ran)))
    fresh = LinearRelation(a.cod_dim, a.dom_dim, a.inverse.graph)
    out.append(("inverse is an involution", fresh.inverse == a))
    inv = a.inverse
    out.append(("parts of R⁻¹ swap", (inv.dom, inv.ran, inv.ker, inv.mul) == (a.ran, a.dom, a.mul, a.ker)))
    return out


def check_arens(inst: Instance) -> Outcome:
    r, s = inst["R"], inst["S"]
    eq = arens_equal(r, s)
    sub = contained_via_parts(r, s)
    return [
        ("equality via parts = graph equality", eq.verdict == (r.graph == s.graph)),
        ("containment via parts = graph containment", sub.verdict == s.graph.contains(r.graph)),
        ("containment: ker/ran form = mul/dom form", sub.cross_checks_agree()),
        ("reports recompute to their verdicts", eq.recomputed_verdict() == eq.verdict and sub.recomputed_verdict() == sub.verdict),
    ]


def _solution_case(name: str, report, solution) -> list[tuple[str, bool | None]]:
    found = solution is not None
    out = [(f"{name}: solver succeeds iff criterion", report.verdict == found),
           (f"{name}: cross-checks agree", report.cross_checks_agree())]
    if hasattr(solution, "valid"):
        out.append((f"{name}: solution re-verifies", solution.valid))
    return out


def check_factorization(inst: Instance) -> Outcome:
    a, br, bl = inst["A"], inst["BR"], inst["BL"]
    out: Outcome = []
    rr = fz.solve_right_relation(a, br)
    out += _solution_case("right-relation", fz.right_relation_criterion(a, br), rr)
    if rr is not None:
        out.append(("right-relation: A ⊆ BC", compose(br, rr).contains(a)))
    lr = fz.solve_left_relation(a, bl)
    out += _solution_case("left-relation", fz.left_relation_criterion(a, bl), lr)
    if lr is not None:
        out.append(("left-relation: A ⊆ CB", compose(lr, bl).contains(a)))
    out.append(("left-relation(A, B) iff right-relation(A⁻¹, B⁻¹)",
                (lr is not None) == (fz.solve_right_relation(a.inverse, bl.inverse) is not None)))

    ro = fz.solve_right_operator(a, br)
    out += _solution_case("right-operator", fz.right_operator_criterion(a, br), ro)
    if ro is not None:
        out.append(("right-operator: general form accepts C0", fz.is_right_solution_general_form(a, br, ro, ro.C).verdict))
        shifted = _shift_by_kernel(a, br, ro.C)
        gf = fz.is_right_solution_general_form(a, br, ro, shifted)
        out.append(("right-operator: general form agrees with direct check", gf.cross_checks_agree()))
    lo = fz.solve_left_operator(a, bl)
    out += _solution_case("left-operator", fz.left_criterion(a, bl), lo)
    li = fz.solve_left_operator_injective(a, bl)
    out += _solution_case("left-injective", fz.left_injective_criterion(a, bl), li)
    op = fz.operator_part(a)
    out += _solution_case("operator-part", fz.operator_part_criterion(a), op)

    sel, witness = fz.independent_selection_check(a)
    out.append(("independent-selection: witness iff verdict", sel.verdict == (witness is not None)))
    out.append(("independent-selection: cross-checks agree", sel.cross_checks_agree()))
    comp, _ = fz.selection_check_composite(a, bl)
    out.append(("independent-selection for BA⁻¹: cross-checks agree", comp.cross_checks_agree()))
    out.append(("ker BA⁻¹ = A(dom A ∩ ker B) and mul BA⁻¹ = B(ker A)", comp.subreports[0].verdict))
    if a.is_operator():
        suff = fz.operators_left_sufficient(a, bl)
        out.append(("left-operator sufficient condition implies a solution", (lo is not None) if suff.verdict else None))
        if bl.is_operator():
            split = fz.complement_split_check(a, bl, lo is not None)
            out.append(("left-operator complement split = solvability [dom A ⊆ dom B]",
                        split.cross_checks_agree() if split.evidence[0].holds else None))
    return out


def _shift_by_kernel(a: LinearRelation, b: LinearRelation, c0: LinearRelation) -> LinearRelation:
    """C0 with the first ker B vector added on the first basis vector of dom A, when both exist."""
    if not a.dom.basis or not b.ker.basis:
        return c0
    f = a.field
    x0 = a.dom.basis[0]
    pairs = [(x, c0.pick(x)) for x in a.dom.basis[1:]]
    pairs.append((x0, tuple(f.add(u, v) for u, v in zip(c0.pick(x0), b.ker.basis[0]))))
    return LinearRelation.from_pairs(f, c0.dom_dim, c0.cod_dim, pairs)


def check_exactness(inst: Instance) -> Outcome:
    a, br, bl = inst["A"], inst["BR"], inst["BL"]
    right = fz.exact_right_check(a, br)
    left = fz.exact_left_check(a, bl)
    return [
        ("A = BB⁻¹A criterion = direct equality", right.cross_checks_agree()),
        ("A = AB⁻¹B criterion = direct equality", left.cross_checks_agree()),
    ]


def check_subspaces(inst: Instance) -> Outcome:
    u, w = inst["U"].graph, inst["W"].graph
    meet = u & w
    comp = complement(meet, u)
    mixed = list(reversed(u.basis))
    if len(mixed) >= 2:
        mixed[0] = vadd(u.field, mixed[0], mixed[1])
    return [
        ("dim(U+W) + dim(U∩W) = dim U + dim W", (u + w).dim + meet.dim == u.dim + w.dim),
        ("U∩W ⊆ U, W ⊆ U+W", u.contains(meet) and w.contains(meet) and (u + w).contains(u) and (u + w).contains(w)),
        ("complement: (U∩W) ∩ X0 = {0}", (meet & comp).is_zero()),
        ("complement: (U∩W) + X0 = U", meet + comp == u),
        ("canonical form ignores generator order and mixing", Subspace.span(u.field, u.ambient_dim, mixed) == u),
    ]


def check_oracle(inst: Instance) -> Outcome:
    a, br, bl = inst["A"], inst["BR"], inst["BL"]
    budget = EnumerationBudget(a.field)
    return [
        ("oracle RightRelation = criterion",
         oracle_exists(Problem.RIGHT_RELATION, a, br, budget) == fz.right_relation_criterion(a, br).verdict),
        ("oracle RightOperator = criterion",
         oracle_exists(Problem.RIGHT_OPERATOR, a, br, budget) == fz.right_operator_criterion(a, br).verdict),
        ("oracle LeftOperator = criterion",
         oracle_exists(Problem.LEFT_OPERATOR, a, bl, budget) == fz.left_criterion(a, bl).verdict),
        ("oracle LeftInjectiveOperator = criterion",
         oracle_exists(Problem.LEFT_INJECTIVE_OPERATOR, a, bl, budget) == fz.left_injective_criterion(a, bl).verdict),
        ("oracle OperatorPart = criterion",
         oracle_exists(Problem.OPERATOR_PART, a, None, budget) == fz.operator_part_criterion(a).verdict),
    ]


@dataclass(frozen=True)
class Suite:
    generate: Callable[[FieldSpec, int, random.Random], Instance]
    check: Callable[[Instance], Outcome]
    prime_only: bool = False


SUITES: dict[str, Suite] = {
    "subspace": Suite(gen_subspaces, check_subspaces),
    "composition": Suite(gen_composition, check_composition),
    "arens": Suite(gen_arens, check_arens),
    "factorization": Suite(gen_factorization, check_factorization),
    "exactness": Suite(gen_factorization, check_exactness),
    "oracle": Suite(gen_oracle, check_oracle, prime_only=True),
}


# -- running ---------------------------------------------------------------------


@dataclass
class Violation:
    field: str
    suite: str
    trial: int
    prop: str
    instance: Instance

    def reproducer(self) -> str:
        return format_bundle(self.suite, self.instance, f"violated: {self.prop}")


@dataclass
class SuiteResult:
    field: str
    suite: str
    trials: int = 0
    checked: Counter = dc_field(default_factory=Counter)
    skipped: Counter = dc_field(default_factory=Counter)
    violations: list[Violation] = dc_field(default_factory=list)


@dataclass
class RunReport:
    config: RunConfig
    results: list[SuiteResult]

    @property
    def violations(self) -> list[Violation]:
        return [v for r in self.results for v in r.violations]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_text(self) -> str:
        c = self.config
        lines = [f"verify seed={c.seed} trials={c.trials} fields={','.join(c.fields)} "
                 f"max-dim={c.max_dim} oracle={'on' if c.oracle else 'off'}"]
        for r in self.results:
            if r.trials == 0 and not r.checked:
                lines.append(f"[{r.field}] {r.suite}: not available for this field")
                continue
            bad = Counter(v.prop for v in r.violations)
            lines.append(f"[{r.field}] {r.suite}: {r.trials} trials, {len(r.violations)} violations")
            for prop in sorted(set(r.checked) | set(r.skipped), key=_prop_order(r)):
                status = "FAIL" if bad[prop] else "ok  "
                lines.append(f"  [{status}] {prop}: {r.checked[prop]} checked"
                             + (f", {r.skipped[prop]} skipped" if r.skipped[prop] else "")
                             + (f", {bad[prop]} violated" if bad[prop] else ""))
        for v in self.violations:
            lines.append(f"reproducer for [{v.field}] {v.suite} trial {v.trial}:")
            lines.append(v.reproducer().rstrip("\n"))
        lines.append("result: " + ("PASS" if self.ok else "FAIL"))
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        data = {
            "config": {"seed": self.config.seed, "trials": self.config.trials, "fields": list(self.config.fields),
                       "max_dim": self.config.max_dim, "oracle": self.config.oracle},
            "suites": [{"field": r.field, "suite": r.suite, "trials": r.trials,
                        "checked": dict(sorted(r.checked.items())), "skipped": dict(sorted(r.skipped.items())),
                        "violations": [{"trial": v.trial, "property": v.prop, "reproducer": v.reproducer()}
                                       for v in r.violations]}
                       for r in self.results],
            "ok": self.ok,
        }
        return json.dumps(data, indent=2, ensure_ascii=False, sort_keys=False) + "\n"


def _prop_order(r: SuiteResult):
    order: dict[str, int] = {}
    for key in list(r.checked) + list(r.skipped):
        order.setdefault(key, len(order))
    return order.__getitem__


def failing_properties(suite: str, instance: Instance) -> list[str]:
    return [name for name, holds in SUITES[suite].check(instance) if holds is False]


def shrink(suite: str, instance: Instance, prop: str) -> Instance:
    """Drop generators one at a time while ``prop`` keeps failing."""
    current = dict(instance)
    changed = True
    while changed:
        changed = False
        for key, rel in current.items():
            rows = list(rel.graph.basis)
            for i in range(len(rows)):
                smaller = LinearRelation.from_generators(rel.field, rel.dom_dim, rel.cod_dim, rows[:i] + rows[i + 1:])
                trial = {**current, key: smaller}
                try:
                    still = prop in failing_properties(suite, trial)
                except Exception:
                    still = False
                if still:
                    current, changed = trial, True
                    break
            if changed:
                break
    return current


def run_suite(config: RunConfig, tag: str, suite: str) -> SuiteResult:
    field = field_from_tag(tag)
    chosen = SUITES[suite]
    result = SuiteResult(tag, suite)
    if chosen.prime_only and not field.is_prime_field:
        return result
    for t in range(config.trials):
        rng = trial_rng(config.seed, tag, suite, t)
        inst = chosen.generate(field, config.max_dim, rng)
        result.trials += 1
        for prop, holds in chosen.check(inst):
            if holds is None:
                result.skipped[prop] += 1
                continue
            result.checked[prop] += 1
            if not holds:
                result.violations.append(Violation(tag, suite, t, prop, shrink(suite, inst, prop)))
    return result


def run(config: RunConfig) -> RunReport:
    results = [run_suite(config, tag, suite) for tag in config.fields for suite in config.selected_suites()]
    return RunReport(config, results)


# -- reproducer bundles ------------------------------------------------------------


def format_bundle(suite: str, instance: Instance, note: str = "") -> str:
    """Several relations in one text: a suite line, then one relation file per name."""
    lines = [f"# suite: {suite}"]
    if note:
        lines.append(f"# {note}")
    text = "\n".join(lines) + "\n"
    for name, rel in instance.items():
        text += f"# --- {name} ---\n" + serialize_relation(rel)
    return text


def parse_bundle(text: str) -> tuple[str, Instance]:
    suite = None
    blocks: dict[str, list[str]] = {}
    offsets: dict[str, int] = {}
    current = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped.startswith("# suite:") and suite is None:
            suite = stripped.split(":", 1)[1].strip()
        elif stripped.startswith("# ---") and stripped.endswith("---"):
            current = stripped.strip("#- ").strip()
            blocks[current] = []
            offsets[current] = lineno
        elif current is not None:
            blocks[current].append(line)
    if suite is None or suite not in SUITES:
        raise ParseError("missing or unknown '# suite:' line", 1)
    instance = {}
    for name, body in blocks.items():
        try:
            instance[name] = parse_relation("\n".join(body))
        except ParseError as exc:
            raise ParseError(f"in block {name}: {exc}", offsets[name] + exc.line) from None
    return suite, instance


def replay(text: str) -> list[str]:
    """The properties a reproducer bundle violates (empty if it passes)."""
    suite, instance = parse_bundle(text)
    try:
        return failing_properties(suite, instance)
    except KeyError as exc:
        raise ParseError(f"bundle has no relation named {exc.args[0]}", 1) from None


def iter_instances(config: RunConfig, tag: str, suite: str) -> Iterable[Instance]:
    """The instances a run would draw, in trial order."""
    field = field_from_tag(tag)
    for t in range(config.trials):
        yield SUITES[suite].generate(field, config.max_dim, trial_rng(config.seed, tag, suite, t))


__all__ = ["RunConfig", "RunReport", "SUITES", "run", "run_suite", "replay", "format_bundle", "parse_bundle",
           "shrink", "failing_properties", "iter_instances", "oracle_dim_cap"]

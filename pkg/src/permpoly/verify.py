"""Named verification suites behind the `verify` CLI subcommand.

Each suite sweeps a family range, checks one group of identities at full
precision, and returns a JSON-ready report: suite name, case count, and a
list of failures with expected/got pairs.  All suites pass on a correct
build; a nonempty failure list is a finding.
"""

from __future__ import annotations

from typing import Callable, Iterable

from . import closed_forms as cf
from .expansion import permanent_by_expansion
from .decomposition import (
    aux_poly,
    perm_poly_vertex_expansion,
    spec_coalescence_poly,
)
from .graphs import (
    Cycle,
    Dumbbell,
    FamilySpec,
    Lollipop,
    MatrixKind,
    Path,
    Theta,
    dense_family_sweep,
    family_sweep,
    generate,
    spec_label,
)
from .permanent import perm_poly, permanent_of_graph

BOTH_KINDS = (MatrixKind.LAPLACIAN, MatrixKind.SIGNLESS_LAPLACIAN)


def dumbbell_sweep(p_max: int = 7, r_max: int = 5) -> list[Dumbbell]:
    """Canonical dumbbells with 3 <= p <= q <= p_max and 0 <= r <= r_max."""
    return [
        Dumbbell(p, q, r)
        for p in range(3, p_max + 1)
        for q in range(p, p_max + 1)
        for r in range(0, r_max + 1)
    ]


def theta_sweep(total_max: int = 12) -> list[Theta]:
    """Canonical thetas with p <= q <= r, at most one zero, p+q+r <= total_max."""
    out = []
    for s in range(2, total_max + 1):
        for p in range(0, s + 1):
            for q in range(max(p, 1), s + 1):
                r = s - p - q
                if r >= q:
                    out.append(Theta(p, q, r))
    return out


class _Report:
    def __init__(self, suite: str):
        self.suite = suite
        self.cases = 0
        self.failures: list[dict] = []

    def check(self, case: str, expected, got) -> None:
        self.cases += 1
        if expected != got:
            self.failures.append({"case": case, "expected": str(expected), "got": str(got)})

    def to_dict(self) -> dict:
        return {"suite": self.suite, "cases": self.cases, "failures": self.failures}


def suite_coefficients(max_n: int = 14) -> dict:
    """Top-five coefficient formulas across sparse and dense families."""
    report = _Report("coefficients")
    specs: list[FamilySpec] = list(family_sweep(max_n)) + list(dense_family_sweep(max_n))
    for spec in specs:
        g = generate(spec)
        for kind in BOTH_KINDS:
            res = cf.coeff_formulas(g, kind)
            report.check(f"{spec_label(spec)}/{kind.value}", res.formula, res.computed)
    return report.to_dict()


def suite_closed_forms(max_n: int = 12) -> dict:
    """Substituted closed forms for paths, cycles and the B/U matrices."""
    report = _Report("closed-forms")
    for tag in ("P", "B", "U", "C"):
        for kind in BOTH_KINDS:
            for n in range(3 if tag == "C" else 1, max_n + 1):
                report.check(f"{tag}_{n}/{kind.value}", True, cf.verify_pathlike_closed_form(tag, kind, n))
    return report.to_dict()


def _y1_specs(max_pc_n: int, p_max: int, r_max: int, theta_total: int) -> list[FamilySpec]:
    specs: list[FamilySpec] = []
    specs += [Path(n) for n in range(1, max_pc_n + 1)]
    specs += [Cycle(n) for n in range(3, max_pc_n + 1)]
    specs += dumbbell_sweep(p_max, r_max)
    specs += theta_sweep(theta_total)
    return specs


def suite_y1(max_pc_n: int = 12, p_max: int = 7, r_max: int = 5, theta_total: int = 12) -> dict:
    """Closed x = 2 values against full polynomial evaluation."""
    report = _Report("y1")
    for spec in _y1_specs(max_pc_n, p_max, r_max, theta_total):
        for kind in BOTH_KINDS:
            got = perm_poly(generate(spec), kind)(2)
            report.check(f"{spec_label(spec)}/{kind.value}", cf.y1_value(spec, kind), got)
    for tag in ("B", "U"):
        for kind in BOTH_KINDS:
            for n in range(1, max_pc_n + 1):
                report.check(f"{tag}_{n}/{kind.value}", cf.aux_y1_value(tag, n), aux_poly(tag, n, kind)(2))
    return report.to_dict()


def suite_residuals(p_max: int = 7, r_max: int = 5, theta_total: int = 12) -> dict:
    """Remainder identities: y = 1 reconstruction, vanishing low end, and
    the parameter-identifying top terms."""
    report = _Report("residuals")
    specs: list[FamilySpec] = list(dumbbell_sweep(p_max, r_max)) + list(theta_sweep(theta_total))
    for spec in specs:
        for kind in BOTH_KINDS:
            case = f"{spec_label(spec)}/{kind.value}"
            res = cf.residual(spec, kind)
            report.check(f"{case}/value", cf.y1_value(spec, kind), res.value_at_one)
            report.check(f"{case}/low-end", (0, 0, 0), tuple(res.remainder.coeff(e) for e in range(3)))
            report.check(f"{case}/structure", True, res.structure_ok)
    return report.to_dict()


def suite_expansion(max_n: int = 12) -> dict:
    """Cover-sum permanents against Ryser on the sparse families."""
    report = _Report("expansion")
    for spec in family_sweep(max_n):
        g = generate(spec)
        for kind in BOTH_KINDS:
            report.check(
                f"{spec_label(spec)}/{kind.value}",
                permanent_of_graph(g, kind),
                permanent_by_expansion(g, kind),
            )
    return report.to_dict()


def suite_decomposition(max_n: int = 10, coalesce_max_n: int = 12) -> dict:
    """Vertex expansion at every vertex, and the coalescence splits, against
    the interpolation route."""
    report = _Report("decomposition")
    for spec in family_sweep(max_n):
        g = generate(spec)
        for kind in BOTH_KINDS:
            direct = perm_poly(g, kind)
            for v in range(g.n):
                report.check(
                    f"{spec_label(spec)}/{kind.value}/v{v}",
                    direct,
                    perm_poly_vertex_expansion(g, v, kind),
                )
    for spec in family_sweep(coalesce_max_n):
        if not isinstance(spec, (Lollipop, Dumbbell)):
            continue
        for kind in BOTH_KINDS:
            report.check(
                f"coalesce/{spec_label(spec)}/{kind.value}",
                perm_poly(generate(spec), kind),
                spec_coalescence_poly(spec, kind),
            )
    return report.to_dict()


SUITES: dict[str, Callable[..., dict]] = {
    "coefficients": suite_coefficients,
    "closed-forms": suite_closed_forms,
    "y1": suite_y1,
    "residuals": suite_residuals,
    "expansion": suite_expansion,
    "decomposition": suite_decomposition,
}


def run_suite(name: str, max_n: int | None = None) -> dict:
    """Run one suite, optionally shrinking its main sweep bound."""
    fn = SUITES[name]
    if max_n is None:
        return fn()
    if name == "coefficients":
        return fn(max_n=max_n)
    if name in ("closed-forms", "expansion"):
        return fn(max_n=max_n)
    if name == "decomposition":
        return fn(max_n=max_n, coalesce_max_n=max_n)
    if name == "y1":
        return fn(max_pc_n=max_n, p_max=min(7, max(3, max_n // 2)), r_max=3, theta_total=max_n)
    if name == "residuals":
        return fn(p_max=min(7, max(3, max_n // 2)), r_max=3, theta_total=max_n)
    raise KeyError(name)

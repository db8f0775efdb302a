"""
Verification pipelines for the satellite/companion full-twist construction.

Each pipeline returns a :class:`VerificationReport` of independent checks.
Expected values come from closed-form formulas in the parameters, never from
the computed side.
"""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable

from . import __version__
from .braid_core import BraidWord, format_braid, permutation_of, trace_strand
from .families import (
    FamilyParams,
    companion_mid_t,
    companion_t,
    companion_v,
    default_grid,
    deletion_stage_t,
    long_factor_first,
    satellite_family_t,
    satellite_family_v,
    t_link_braid,
    v_link_braid,
)
from .garside import extract_full_twists, oracle_full_twists, positive_equal
from .invariants import (
    bundles_match,
    closure_components,
    invariant_bundle,
    linking_matrix,
    nonsplit_certified,
    twist_bound_from_linking,
)
from .satellite_ops import adjoin_axis, delete_components, match_case2_form

REMARK_PATTERN = BraidWord(4, (1, 2, 3, 1, 2, 3, 1, 1))


@dataclass
class CheckRecord:
    name: str
    params: dict[str, int]
    expected: str
    computed: str
    passed: bool
    elapsed_ms: int = 0

    def to_dict(self) -> dict:
        d = asdict(self)
        d["pass"] = d.pop("passed")
        return d


@dataclass
class VerificationReport:
    checks: list[CheckRecord] = field(default_factory=list)
    tool_version: str = __version__

    def __post_init__(self):
        self.checks.sort(key=lambda c: (c.name, sorted(c.params.items())))

    @property
    def summary(self) -> dict[str, int]:
        npass = sum(c.passed for c in self.checks)
        return {"pass": npass, "fail": len(self.checks) - npass, "total": len(self.checks)}

    @property
    def ok(self) -> bool:
        return self.summary["fail"] == 0

    def merged(self, *others: VerificationReport) -> VerificationReport:
        checks = list(self.checks)
        for o in others:
            checks.extend(o.checks)
        return VerificationReport(checks, self.tool_version)

    def to_dict(self) -> dict:
        return {
            "tool_version": self.tool_version,
            "checks": [c.to_dict() for c in self.checks],
            "summary": self.summary,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        rows = [("status", "check", "params", "expected", "computed")]
        for c in self.checks:
            params = ",".join(f"{k}={v}" for k, v in sorted(c.params.items()))
            rows.append(("PASS" if c.passed else "FAIL", c.name, params, c.expected, c.computed))
        widths = [max(len(r[i]) for r in rows) for i in range(4)]
        lines = ["  ".join(r[i].ljust(widths[i]) for i in range(4)) + "  " + r[4] for r in rows]
        s = self.summary
        lines.append(f"{s['pass']} passed, {s['fail']} failed, {s['total']} total")
        return "\n".join(lines)


class _Collector:
    def __init__(self):
        self.checks: list[CheckRecord] = []

    @contextmanager
    def check(self, name: str, **params: int):
        rec = CheckRecord(name, dict(params), "", "", False)
        t0 = time.perf_counter()
        yield rec
        rec.elapsed_ms = int((time.perf_counter() - t0) * 1000)
        self.checks.append(rec)

    def equal(self, name: str, params: dict, expected, compute: Callable[[], object]) -> None:
        with self.check(name, **params) as rec:
            got = compute()
            rec.expected, rec.computed, rec.passed = str(expected), str(got), got == expected

    def at_least(self, name: str, params: dict, bound: int, compute: Callable[[], int]) -> None:
        with self.check(name, **params) as rec:
            got = compute()
            rec.expected, rec.computed, rec.passed = f">= {bound}", str(got), got >= bound

    def report(self) -> VerificationReport:
        return VerificationReport(self.checks)


def _ms(multiset: Iterable[int]) -> list[int]:
    return sorted(multiset)


def verify_components(k_max: int = 5) -> VerificationReport:
    """Three components for T((3,1),(4+3k,3)) and T((3,1),(3+2k,2))."""
    col = _Collector()
    for k in range(k_max + 1):
        col.equal("components.companion_mid_t", {"k": k}, 3,
                  lambda: len(closure_components(t_link_braid(companion_mid_t(k)))))
        col.equal("components.companion_t", {"k": k}, 3,
                  lambda: len(closure_components(t_link_braid(companion_t(k)))))
    return col.report()


def verify_strand_orbits(k_max: int = 5) -> VerificationReport:
    """In (s_1..s_{3+3k})^3 s_1 s_2 the third strand's component uses k+2 strands and
    one pass carries strand 3 to the last position."""
    col = _Collector()
    for k in range(k_max + 1):
        w = long_factor_first(companion_mid_t(k))
        col.equal("orbit.strand3_support", {"k": k}, k + 2,
                  lambda: len(next(c for c in permutation_of(w).cycles() if 3 in c)))
        first = BraidWord(w.strands, w.letters[:-2])
        col.equal("orbit.strand3_first_pass", {"k": k}, 4 + 3 * k,
                  lambda: trace_strand(first, 3).end_position)
    return col.report()


def verify_companion_obstruction(k_max: int = 5, oracle_k_max: int = 2) -> VerificationReport:
    """Linking numbers of sigma_1^(2k) Delta_3^2 and the resulting one-twist ceiling."""
    col = _Collector()
    for k in range(k_max + 1):
        w = v_link_braid(companion_v(k))
        col.equal("obstruction.linking_multiset", {"k": k}, _ms([k + 1, 1, 1]),
                  lambda: _ms(linking_matrix(w).multiset()))
        col.equal("obstruction.twist_bound", {"k": k}, 1, lambda: twist_bound_from_linking(w))
        col.equal("obstruction.garside_twists", {"k": k}, 1, lambda: extract_full_twists(w)[0])
        if k <= oracle_k_max:
            col.equal("obstruction.oracle_twists", {"k": k}, 1, lambda: oracle_full_twists(w))
    return col.report()


def verify_satellite_twists(grid: Iterable[FamilyParams] | None = None) -> VerificationReport:
    """The V-representative carries at least k+1 full twists and agrees with the T-braid's invariants."""
    col = _Collector()
    for p in default_grid() if grid is None else grid:
        params = asdict(p)
        v = v_link_braid(satellite_family_v(p))
        col.at_least("satellite.v_full_twists", params, p.k + 1, lambda: extract_full_twists(v)[0])
        col.equal("satellite.v_strands", params, p.width, lambda: v.strands)
        t = t_link_braid(satellite_family_t(p))
        col.equal("satellite.t_v_bundles", params, True,
                  lambda: bundles_match(invariant_bundle(t), invariant_bundle(v)))
    return col.report()


def verify_companion_equivalence(k_max: int = 5) -> VerificationReport:
    """Invariants of T((3,1),(3+2k,2)) and V((2,2k),(3,3)) agree."""
    col = _Collector()
    for k in range(k_max + 1):
        t = t_link_braid(companion_t(k))
        v = v_link_braid(companion_v(k))
        col.equal("companion.t_v_bundles", {"k": k}, True,
                  lambda: bundles_match(invariant_bundle(t), invariant_bundle(v)))
    return col.report()


def verify_nonsplit_certificates(grid: Iterable[FamilyParams] | None = None,
                                 k_max: int = 5) -> VerificationReport:
    col = _Collector()
    for k in range(k_max + 1):
        for label, w in (("companion_v", v_link_braid(companion_v(k))),
                         ("companion_t", t_link_braid(companion_t(k))),
                         ("companion_mid_t", t_link_braid(companion_mid_t(k)))):
            col.equal(f"nonsplit.{label}", {"k": k}, True, lambda: nonsplit_certified(w))
    for p in default_grid() if grid is None else grid:
        w = t_link_braid(satellite_family_t(p))
        col.equal("nonsplit.satellite_t", asdict(p), True, lambda: nonsplit_certified(w))
    return col.report()


DELETION_POINTS = (FamilyParams(2, 1, 2, 1), FamilyParams(2, 2, 2, 1), FamilyParams(1, 1, 2, 1))


def deletion_chain(p: FamilyParams) -> tuple[BraidWord, BraidWord]:
    """Thin the L1 braid to the middle stage, then to the companion.

    Works on the conjugate with the long factor first. Keeps the components
    of top strands 1 and 2 from the first a+b block, then the component of
    strand 3 from the block that started at strands 3..2+c.
    """
    b1 = long_factor_first(satellite_family_t(p))
    comp = closure_components(b1).component_of()
    drop = sorted({comp[s] for s in range(3, p.a + p.b + 1)})
    b2 = delete_components(b1, drop).braid if drop else b1
    comp2 = closure_components(b2).component_of()
    drop2 = sorted({comp2[s] for s in range(4, 3 + p.c)})
    b3 = delete_components(b2, drop2).braid if drop2 else b2
    return b2, b3


def verify_deletion_chain(points: Iterable[FamilyParams] = DELETION_POINTS) -> VerificationReport:
    col = _Collector()
    for p in points:
        params = asdict(p)
        b2, b3 = deletion_chain(p)
        mid = deletion_stage_t(p.c, p.k)
        comp = companion_mid_t(p.k)
        col.equal("deletion.stage2_bundle", params, True,
                  lambda: bundles_match(invariant_bundle(b2), invariant_bundle(t_link_braid(mid))))
        col.equal("deletion.stage3_bundle", params, True,
                  lambda: bundles_match(invariant_bundle(b3), invariant_bundle(t_link_braid(comp))))
        col.equal("deletion.stage2_literal", params, format_braid(long_factor_first(mid)),
                  lambda: format_braid(b2))
        col.equal("deletion.stage3_literal", params, format_braid(long_factor_first(comp)),
                  lambda: format_braid(b3))
    return col.report()


def verify_remark() -> VerificationReport:
    col = _Collector()
    col.equal("pattern.pattern_full_twists", {}, 0, lambda: extract_full_twists(REMARK_PATTERN)[0])
    p = FamilyParams(2, 2, 2, 0)
    col.equal("pattern.satellite_spec", {}, "T((6,2),(8,6))", lambda: str(satellite_family_t(p)))
    col.equal("pattern.t_v_bundles", {}, True,
              lambda: bundles_match(invariant_bundle(t_link_braid(satellite_family_t(p))),
                                    invariant_bundle(v_link_braid(satellite_family_v(p)))))
    col.at_least("pattern.v_full_twists", {}, 1,
                 lambda: extract_full_twists(v_link_braid(satellite_family_v(p)))[0])
    return col.report()


def verify_case2(k_max: int = 4) -> VerificationReport:
    """sigma_1^(2k) Delta_3^2 as B0 s_1^(2(k-1)) Delta_3^2 and as a 2-braid plus its axis."""
    col = _Collector()
    for k in range(1, k_max + 1):
        w = v_link_braid(companion_v(k))

        def shape(w=w, k=k):
            m = match_case2_form(w, wheel_cap=2 * (k - 1))
            return (m.matched, m.a, format_braid(m.b0) if m.b0 else None, m.wheel_power)

        col.equal("case2.form", {"k": k}, (True, 3, "3: 1 1", 2 * (k - 1)), shape)
        col.at_least("case2.max_wheel_power", {"k": k}, 2 * (k - 1),
                     lambda: match_case2_form(w).wheel_power)
        col.equal("case2.axis_adjunction", {"k": k}, True,
                  lambda: positive_equal(adjoin_axis(BraidWord(2, (1,) * (2 * k + 2))), w))
    return col.report()


def verify_all(k_max: int = 5, grid: Iterable[FamilyParams] | None = None) -> VerificationReport:
    grid = default_grid() if grid is None else list(grid)
    return verify_components(k_max).merged(
        verify_strand_orbits(k_max),
        verify_companion_obstruction(k_max),
        verify_companion_equivalence(k_max),
        verify_satellite_twists(grid),
        verify_nonsplit_certificates(grid, k_max),
        verify_deletion_chain(),
        verify_remark(),
        verify_case2(max(1, k_max)),
    )

"""Valuation-theoretic classification of k<<G>> read off the group presentation.

Henselian valuations with real closed residue field correspond to convex
subgroups H of G with divisible H (when k is real closed), so every
valuation here is named by a :class:`FinalSegment`.  v0 quotients by the
largest divisible convex subgroup, vp by the largest p-divisible one.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass

import sympy

from .defval import CaseTag
from .groups import (
    ConstantRule, FinalSegment, FiniteLex, GroupDescriptor, OmegaLex, TRIVIAL_GROUP,
    convex_quotient, convex_subgroup, is_closed_in_hull, is_dense_in_hull,
    is_densely_ordered, is_discretely_ordered, is_immediate_in_hull, is_regular,
    largest_p_divisible_convex,
)
from .series import DeclaredRealClosed

__all__ = [
    "StrongNIP", "ValuationDescriptor", "ClassificationReport", "v0_descriptor",
    "v0_lr_definable", "vp_descriptor", "thm45_cases", "lr_definable_regular",
    "arc_v0_collapse", "non_singular", "strongly_nip_witnessed", "field_dense_in_rc",
    "classify_report", "REPORT_PRIMES",
]

#: Primes listed in the vp table of a report.
REPORT_PRIMES = (2, 3, 5, 7)


class StrongNIP(enum.Enum):
    WITNESSED = "Witnessed"
    NOT_WITNESSED = "NotWitnessedByPresentation"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ValuationDescriptor:
    segment: FinalSegment
    value_group: GroupDescriptor
    residue_group: GroupDescriptor

    @classmethod
    def of(cls, G, segment):
        return cls(segment, convex_quotient(G, segment), convex_subgroup(G, segment))


def _divisible_segment(G) -> FinalSegment:
    """Largest convex subgroup with every component equal to Q."""
    if isinstance(G, FiniteLex):
        comps = G.components
        n = len(comps)
        while n > 0 and comps[n - 1].is_divisible:
            n -= 1
        return FinalSegment.above(n, G) if n < len(comps) else FinalSegment.trivial()
    rule_q = isinstance(G.rule, ConstantRule) and G.rule.all_divisible
    if isinstance(G, OmegaLex):
        return FinalSegment.whole() if rule_q else FinalSegment.trivial()
    if not G.top.is_divisible:
        return FinalSegment.trivial()
    return FinalSegment.whole() if rule_q else FinalSegment.top_only()


def v0_descriptor(G: GroupDescriptor) -> ValuationDescriptor:
    """The coarsest valuation with real closed residue field (for real closed k)."""
    return ValuationDescriptor.of(G, _divisible_segment(G))


def vp_descriptor(G: GroupDescriptor, p: int) -> ValuationDescriptor:
    return ValuationDescriptor.of(G, largest_p_divisible_convex(G, p))


def _closed_form_prime(V: GroupDescriptor):
    """A prime p for which V has no nontrivial p-divisible convex subgroup."""
    if isinstance(V, FiniteLex):
        return V.components[-1].allowed.smallest_missing()
    if isinstance(V, OmegaLex):
        if isinstance(V.rule, ConstantRule):
            return V.rule.component.allowed.smallest_missing()
        return 2  # no prefix-primes component is 2-divisible
    return V.top.allowed.smallest_missing()


def v0_lr_definable(G: GroupDescriptor, prime_bound: int = 50):
    """(True, p) when the v0 value group has no nontrivial p-divisible convex subgroup."""
    V = v0_descriptor(G).value_group
    if V == TRIVIAL_GROUP:
        return False, None
    for p in sympy.primerange(2, prime_bound + 1):
        if largest_p_divisible_convex(V, p).kind == "trivial":
            return True, int(p)
    p = _closed_form_prime(V)
    if p is not None and largest_p_divisible_convex(V, p).kind == "trivial":
        return True, p
    return False, None


def thm45_cases(k, G: GroupDescriptor) -> tuple:
    """Which of the three cut shapes is available for k<<G>>, in fixed order."""
    out = []
    if is_discretely_ordered(G):
        out.append(CaseTag.DISCRETE)
    if not is_closed_in_hull(G):
        out.append(CaseTag.GROUP_LIMIT_POINT)
    if not isinstance(k, DeclaredRealClosed):
        # Q and Q(sqrt d) are archimedean, so dense in their real closures
        out.append(CaseTag.RESIDUE_LIMIT_POINT)
    return tuple(out)


def lr_definable_regular(G: GroupDescriptor) -> bool:
    return is_regular(G) and not is_immediate_in_hull(G)


def arc_v0_collapse(G: GroupDescriptor) -> bool:
    """Discretely ordered or not closed in div(G); then v0 is the finest and definable."""
    fired = is_discretely_ordered(G) or not is_closed_in_hull(G)
    if fired:
        if v0_descriptor(G).segment.kind != "trivial":
            raise AssertionError(f"v0 of {G} should quotient by the trivial subgroup")
        if not v0_lr_definable(G)[0]:
            raise AssertionError(f"v0 of {G} should be Lr-definable")
    return fired


def non_singular(G: GroupDescriptor, prime_bound: int = 50) -> bool:
    """Whether G/pG is finite for every prime p (presentation-level)."""
    if isinstance(G, FiniteLex):
        return True
    rule = G.rule
    if not isinstance(rule, ConstantRule):
        return False  # infinitely many components fail 2-divisibility
    # a repeated component must be p-divisible for every p; prime_bound only
    # matters for the scans in the test suite, not for this closed form
    return rule.component.is_divisible


def strongly_nip_witnessed(G: GroupDescriptor) -> StrongNIP:
    """Finitely many non-p-divisible components for every p, read off the presentation."""
    # [C : pC] <= p for rational subgroups, so only the first condition can fail
    return StrongNIP.WITNESSED if non_singular(G) else StrongNIP.NOT_WITNESSED


def field_dense_in_rc(k, G: GroupDescriptor) -> bool:
    if G == TRIVIAL_GROUP:
        return True  # K = k, archimedean or real closed
    return isinstance(k, DeclaredRealClosed) and is_immediate_in_hull(G)


@dataclass(frozen=True)
class ClassificationReport:
    group: GroupDescriptor
    field: object
    group_flags: dict
    v0: ValuationDescriptor
    v0_lr_definable: tuple
    vp_table: tuple
    thm45_cases: tuple | None
    lr_definable_regular: bool
    arc_v0_collapse: bool
    non_singular: bool
    strongly_nip_witnessed: StrongNIP
    field_dense_in_rc: bool | None

    def items(self):
        """(key, value) pairs in their fixed print order."""
        out = []
        if self.field is not None:
            out.append(("field", str(self.field)))
        out.append(("group", str(self.group)))
        out.extend(self.group_flags.items())
        out += [
            ("v0_segment", str(self.v0.segment)),
            ("v0_value_group", str(self.v0.value_group)),
            ("v0_residue_group", str(self.v0.residue_group)),
            ("v0_lr_definable", self.v0_lr_definable[0]),
            ("v0_lr_definable_prime", self.v0_lr_definable[1]),
            ("v0_lr_definable_clause", "no nontrivial p-divisible convex subgroup of v0 value group"),
        ]
        for p, vd in self.vp_table:
            out.append((f"vp_segment[{p}]", str(vd.segment)))
        out += [
            ("lr_definable_regular", self.lr_definable_regular),
            ("arc_v0_collapse", self.arc_v0_collapse),
            ("non_singular_presentation", self.non_singular),
            ("strongly_nip", str(self.strongly_nip_witnessed)),
        ]
        if self.field is not None:
            out.append(("thm45_cases", [str(c) for c in self.thm45_cases]))
            out.append(("field_dense_in_rc", self.field_dense_in_rc))
        return out

    def render(self) -> str:
        return "".join(f"{k}: {_text(v)}\n" for k, v in self.items())

    def to_json(self) -> str:
        return json.dumps(dict(self.items()), indent=2) + "\n"


def _text(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    if isinstance(v, list):
        return "{" + ", ".join(v) + "}"
    return str(v)


def group_flags(G: GroupDescriptor) -> dict:
    return {
        "densely_ordered": is_densely_ordered(G),
        "discretely_ordered": is_discretely_ordered(G),
        "regular": is_regular(G),
        "dense_in_hull": is_dense_in_hull(G),
        "immediate_in_hull": is_immediate_in_hull(G),
        "closed_in_hull": is_closed_in_hull(G),
        "has_archimedean_model_candidate": "candidate" if is_regular(G) else "no",
    }


def classify_report(k, G: GroupDescriptor, prime_bound: int = 50) -> ClassificationReport:
    """Full report; ``k`` may be None for a group-only report."""
    return ClassificationReport(
        group=G,
        field=k,
        group_flags=group_flags(G),
        v0=v0_descriptor(G),
        v0_lr_definable=v0_lr_definable(G, prime_bound),
        vp_table=tuple((p, vp_descriptor(G, p)) for p in REPORT_PRIMES),
        thm45_cases=None if k is None else thm45_cases(k, G),
        lr_definable_regular=lr_definable_regular(G),
        arc_v0_collapse=arc_v0_collapse(G),
        non_singular=non_singular(G, prime_bound),
        strongly_nip_witnessed=strongly_nip_witnessed(G),
        field_dense_in_rc=None if k is None else field_dense_in_rc(k, G),
    )

"""Forced orbit braids of a braid iterate.

Every essential, non-degenerate twisted conjugacy class of the m-th iterate
of a braid contributes one braid on n+1 strands that every homeomorphism
inducing the braid must exhibit among its m-th iterate orbits.  This module
assembles those braids, tracks how bounded-search Unknowns affect the
answer, and renders the result as text or a JSON document.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .augbraid import AugBraid, format_aug, to_word
from .braid import BraidWord, artin, braid_eq, format_braid, power
from .foxcalc import raw_trace
from .freegroup import FreeWord, endo_power, format_word
from .nielsen import (
    Decision,
    MergedTrace,
    SearchBounds,
    TwistContext,
    abelian_invariant,
    degenerate_families,
    format_trace,
    is_degenerate,
    merge,
    twisted_conj,
)


@dataclass(frozen=True)
class ClassReport:
    """One essential class with everything the forcing verdict used."""

    coefficient: int
    representative: FreeWord
    degeneracy: Decision
    abelian_label: tuple[int, ...]
    boundary: Decision | None = None


@dataclass(frozen=True)
class ForcingReport:
    beta: BraidWord
    m: int
    bounds: SearchBounds
    boundary_fixed: bool
    permissive: bool
    base: BraidWord
    trace: MergedTrace
    classes: tuple[ClassReport, ...]
    forced: tuple[AugBraid, ...]
    exact: bool


def forced_set(
    beta: BraidWord,
    m: int,
    bounds: SearchBounds = SearchBounds(),
    boundary_fixed: bool = False,
    permissive: bool = False,
) -> ForcingReport:
    """All braids forced by the m-th iterate of beta.

    Strict mode keeps only classes whose degeneracy decision is a definite
    No; permissive mode also keeps Unknowns.  With boundary_fixed, classes
    equivalent to the empty tail are removed as well, since they are
    realized on the boundary.  exact is False whenever any Unknown decision
    could have changed the answer.
    """
    if m < 1:
        raise ValueError("iteration count m must be >= 1")
    theta = endo_power(artin(beta), m)
    ctx = TwistContext.create(theta, bounds)
    trace = merge(ctx, raw_trace(theta))
    families = degenerate_families(beta, m)
    base = power(beta, m)
    identity = FreeWord(beta.strands)

    classes: list[ClassReport] = []
    forced: list[AugBraid] = []
    exact = not trace.unresolved
    for s in trace.summands:
        deg = is_degenerate(ctx, s.representative, families)
        bd = twisted_conj(ctx, identity, s.representative) if boundary_fixed else None
        classes.append(
            ClassReport(s.coefficient, s.representative, deg, abelian_invariant(ctx, s.representative), bd)
        )
        if deg.is_unknown or (bd is not None and bd.is_unknown):
            exact = False
        keep = not deg.is_yes if permissive else deg.is_no
        if keep and (bd is None or not bd.is_yes):
            forced.append(AugBraid(base, s.representative))
    return ForcingReport(
        beta, m, bounds, boundary_fixed, permissive, base, trace, tuple(classes), tuple(forced), exact
    )


def is_forced(
    candidate: AugBraid,
    beta: BraidWord,
    m: int,
    bounds: SearchBounds = SearchBounds(),
) -> Decision:
    """Decide whether the candidate is one of the braids forced by beta^m.

    The base must equal beta^m as a braid; the tail is then matched against
    the essential class representatives.  Hitting a degenerate class is a
    definite No, while exhausted searches or unresolved class splits give
    Unknown.
    """
    if candidate.punctures != beta.strands:
        raise ValueError("puncture count mismatch")
    if m < 1:
        raise ValueError("iteration count m must be >= 1")
    if not braid_eq(candidate.base, power(beta, m)):
        return Decision.make_no(("base_mismatch",))
    theta = endo_power(artin(beta), m)
    ctx = TwistContext.create(theta, bounds)
    trace = merge(ctx, raw_trace(theta))
    families = degenerate_families(beta, m)
    fuzzy = {w for pair in trace.unresolved for w in pair}
    saw_unknown = bool(trace.unresolved)
    for s in trace.summands:
        d = twisted_conj(ctx, s.representative, candidate.tail)
        if d.is_unknown:
            saw_unknown = True
            continue
        if d.is_no:
            continue
        if any(member in fuzzy for member in s.members):
            return Decision.make_unknown(("unresolved_class", s.representative))
        deg = is_degenerate(ctx, s.representative, families)
        if deg.is_yes:
            return Decision.make_no(("degenerate_class", s.representative))
        if deg.is_unknown:
            return Decision.make_unknown(("degeneracy_unknown", s.representative))
        return Decision.make_yes(d.witness, ("class", s.representative))
    if saw_unknown:
        return Decision.make_unknown(("radius", bounds.radius))
    return Decision.make_no(("inessential",))


# ---------------------------------------------------------------------------
# rendering


def _decision_str(d: Decision | None) -> str:
    return "-" if d is None else d.kind


def report_text(report: ForcingReport) -> str:
    lines = [
        f"braid: {format_braid(report.beta)}",
        f"strands: {report.beta.strands}",
        f"iterate m: {report.m}",
        f"base word: {format_braid(report.base)}",
        f"bounds: radius={report.bounds.radius} k_max={report.bounds.k_max}",
        f"boundary_fixed: {'yes' if report.boundary_fixed else 'no'}",
        f"permissive: {'yes' if report.permissive else 'no'}",
        f"trace: {format_trace(report.trace)}",
        "classes:",
    ]
    if not report.classes:
        lines.append("  none")
    for c in report.classes:
        mark = "+" if c.coefficient > 0 else ""
        row = (
            f"  coeff={mark}{c.coefficient} rep=[{format_word(c.representative)}]"
            f" degenerate={c.degeneracy.kind} label={c.abelian_label}"
        )
        if report.boundary_fixed:
            row += f" boundary={_decision_str(c.boundary)}"
        lines.append(row)
    lines.append(f"forced count: {len(report.forced)}")
    for a in report.forced:
        lines.append(f"  {format_aug(a)} word: {format_braid(to_word(a))}")
    if report.trace.unresolved:
        lines.append("unresolved pairs:")
        for w1, w2 in report.trace.unresolved:
            lines.append(f"  [{format_word(w1)}] ~? [{format_word(w2)}]")
    else:
        lines.append("unresolved pairs: none")
    lines.append(f"exact: {'yes' if report.exact else 'no'}")
    return "\n".join(lines)


def report_json(report: ForcingReport) -> dict:
    classes = []
    for c in report.classes:
        entry = {
            "coefficient": c.coefficient,
            "representative": format_word(c.representative),
            "degeneracy": c.degeneracy.kind,
            "abelian_label": list(c.abelian_label),
            "boundary": None if c.boundary is None else c.boundary.kind,
        }
        classes.append(entry)
    return {
        "n": report.beta.strands,
        "m": report.m,
        "beta": format_braid(report.beta),
        "base_word": format_braid(report.base),
        "bounds": {"radius": report.bounds.radius, "k_max": report.bounds.k_max},
        "boundary_fixed": report.boundary_fixed,
        "permissive": report.permissive,
        "trace": format_trace(report.trace),
        "classes": classes,
        "forced": [
            {
                "base": format_braid(a.base),
                "tail": format_word(a.tail),
                "word": format_braid(to_word(a)),
            }
            for a in report.forced
        ],
        "unresolved": [[format_word(w1), format_word(w2)] for w1, w2 in report.trace.unresolved],
        "exact": report.exact,
    }


def report_json_text(report: ForcingReport) -> str:
    """Stable serialization used for byte-for-byte determinism checks."""
    return json.dumps(report_json(report), indent=2)

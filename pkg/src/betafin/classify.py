"""Finiteness-property classification for Q(beta).

Verdicts for Pisot, (F), (PF) and (F1) are three-valued: proven, refuted
or unknown, because most of the usable conditions are sufficient rather
than characterizations (cubic units being the notable complete case).
Every applied rule leaves an evidence record naming the rule and the
mathematical condition it checked, and verdicts are propagated through
the inclusion chain (F) => (PF) => (F1) with a consistency guard.

Refutation routes worth noting:
  * a nonzero tau-periodic vector v gives frac(value(v)) in Z[1/beta]
    with an infinite expansion, refuting (F) outright (the conjugacy is
    a bijection, so a vector that never reaches zero is an element whose
    digit orbit never terminates);
  * (PF) forces either (F) or a specific coefficient shape, so failing
    both refutes (PF);
  * any natural number with an infinite expansion refutes (F1); the
    first candidate tried is floor(beta) + 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .errors import (
    ClosureBudgetExceeded,
    F1Unknown,
    InvariantViolation,
    NotApplicable,
    NotCubicPisot,
    NotUnit,
    OrbitBudgetExceeded,
)
from .expansion import d_beta_one, is_finite_expansion
from .field import BetaField, cubic_pisot_criterion, is_pisot, unit_disk_profile
from .srs import ShiftRadixSystem, f1_certificate, p_set, q_set
from .words import Word, format_word

PROVEN = "proven"
REFUTED = "refuted"
UNKNOWN = "unknown"

DEFAULT_N_SWEEP = 200


def fs_type(coeffs: tuple[int, ...]) -> bool:
    """Descending chain a_{d-1} >= ... >= a_1 >= a_0 >= 1, sufficient for (F)."""
    if coeffs[0] < 1:
        return False
    return all(coeffs[i + 1] >= coeffs[i] for i in range(len(coeffs) - 1))


def hollander_type(coeffs: tuple[int, ...]) -> bool:
    """Dominant top coefficient a_{d-1} > a_{d-2} + ... + a_0 with all
    a_j >= 0, sufficient for (F)."""
    if any(a < 0 for a in coeffs):
        return False
    return coeffs[-1] > sum(coeffs[:-1])


PF_WITHOUT_F_PROVEN = "pf_without_f_proven"
NOT_SPECIAL_FORM = "not_special_form"


def pf_shape(coeffs: tuple[int, ...], floor_beta: int) -> str:
    """Match against the shape x^d - B x^{d-1} + c_2 x^{d-2} + ... + c_d
    with c_i >= 0, c_d > 0 and B > 1 + sum c_i.

    A match proves (PF) without (F).  A beta with (PF) but not (F) must
    match with B = floor(beta) + 1, so a non-match plus a refuted (F)
    refutes (PF).
    """
    # c_i = -a_{d-i}: the shape needs a_j <= 0 for j <= d-2 and a_0 < 0
    if any(a > 0 for a in coeffs[:-1]) or coeffs[0] == 0:
        return NOT_SPECIAL_FORM
    B = coeffs[-1]
    total = -sum(coeffs[:-1])
    if B > 1 + total:
        if B != floor_beta + 1:
            raise InvariantViolation("matched shape must have B = floor(beta) + 1")
        return PF_WITHOUT_F_PROVEN
    return NOT_SPECIAL_FORM


CASE_I = "case_I"
CASE_II = "case_II"
CASE_III = "case_III"
FINITE = "finite"


def bassino_case(a: int, b: int, c: int) -> str:
    """Classify whether d_beta(1) of a cubic Pisot x^3 - ax^2 - bx - c is
    infinite (cases I, II, III) or finite.

    Case III searches k in [2, a-2] with e_k <= b+c < e_{k-1} for
    e_k = 1 - a + (a-2)/k, then tests the defining inequality, all in
    exact rational arithmetic.
    """
    if not cubic_pisot_criterion(a, b, c):
        raise NotCubicPisot(f"(a,b,c)=({a},{b},{c}) fails the Pisot criterion")
    if 0 < b <= a and c < 0:
        return CASE_I
    if -a < b <= 0 and b + c < 0:
        return CASE_II
    if b <= -a:
        bc = Fraction(b + c)

        def e(k: int) -> Fraction:
            return 1 - a + Fraction(a - 2, k)

        for k in range(2, a - 1):
            if e(k) <= bc < e(k - 1):
                if b * (k - 1) + c * (k - 2) > (k - 2) - (k - 1) * a:
                    return CASE_III
                break
    return FINITE


def floor_beta_cubic(a: int, b: int, c: int) -> int:
    """floor(beta) read off the case: a, a-1 or a-2 for cases I, II, III."""
    case = bassino_case(a, b, c)
    if case == CASE_I:
        return a
    if case == CASE_II:
        return a - 1
    if case == CASE_III:
        return a - 2
    raise NotApplicable("d_beta(1) is finite; use the exact floor instead")


@dataclass
class Evidence:
    claim: str
    rule: str
    cite: str

    def to_json_dict(self) -> dict:
        return {"claim": self.claim, "rule": self.rule, "cite": self.cite}


@dataclass
class PropertyReport:
    poly: str
    pisot: str = UNKNOWN
    f: str = UNKNOWN
    pf: str = UNKNOWN
    f1: str = UNKNOWN
    d_beta_one: Word | None = None
    irreducibility_verified: bool = True
    evidence: list[Evidence] = dc_field(default_factory=list)

    def add(self, claim: str, rule: str, cite: str) -> None:
        self.evidence.append(Evidence(claim, rule, cite))

    def to_json_dict(self) -> dict:
        return {
            "poly": self.poly,
            "pisot": self.pisot,
            "F": self.f,
            "PF": self.pf,
            "F1": self.f1,
            "d_beta_1": format_word(self.d_beta_one) if self.d_beta_one else "",
            "evidence": [e.to_json_dict() for e in self.evidence],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


_ORDER = ("f", "pf", "f1")


def _set_verdict(report: PropertyReport, prop: str, verdict: str, claim: str, rule: str, cite: str) -> None:
    cur = getattr(report, prop)
    if cur == verdict:
        return
    if cur != UNKNOWN:
        raise InvariantViolation(
            f"conflicting verdicts for {prop}: {cur} vs {verdict} (rule {rule})"
        )
    setattr(report, prop, verdict)
    report.add(claim, rule, cite)


def _propagate(report: PropertyReport) -> None:
    # (F) => (PF) => (F1) upward for proofs, downward for refutations
    changed = True
    while changed:
        changed = False
        for lo, hi in zip(_ORDER, _ORDER[1:]):
            if getattr(report, lo) == PROVEN and getattr(report, hi) == UNKNOWN:
                setattr(report, hi, PROVEN)
                report.add(f"{hi} from {lo}", "inclusion-chain", "(F) implies (PF) implies (F1)")
                changed = True
            if getattr(report, hi) == REFUTED and getattr(report, lo) == UNKNOWN:
                setattr(report, lo, REFUTED)
                report.add(f"not {lo} from not {hi}", "inclusion-chain", "(F) implies (PF) implies (F1)")
                changed = True
    for lo, hi in zip(_ORDER, _ORDER[1:]):
        a, b = getattr(report, lo), getattr(report, hi)
        if a == PROVEN and b == REFUTED:
            raise InvariantViolation(f"inclusion chain violated: {lo} proven but {hi} refuted")


def cubic_unit_classify(a: int, b: int, c: int) -> dict[str, str]:
    """Complete verdicts for a cubic Pisot unit x^3 - ax^2 - bx - c.

    (F) holds iff c = 1 and b + c >= 0; (PF) and (F1) are equivalent and
    hold iff (b+c)c >= 0 and (b,c) != (1,-1).
    """
    if abs(c) != 1:
        raise NotUnit(f"|c| = {abs(c)} != 1")
    if not cubic_pisot_criterion(a, b, c):
        raise NotCubicPisot(f"(a,b,c)=({a},{b},{c}) fails the Pisot criterion")
    f_holds = c == 1 and b + c >= 0
    pf_holds = (b + c) * c >= 0 and (b, c) != (1, -1)
    return {
        "f": PROVEN if f_holds else REFUTED,
        "pf": PROVEN if pf_holds else REFUTED,
        "f1": PROVEN if pf_holds else REFUTED,
    }


def classify(
    field: BetaField,
    orbit_cap: int = 100_000,
    closure_cap: int = 1_000_000,
    n_sweep: int = DEFAULT_N_SWEEP,
    box_pad: int = 8,
) -> PropertyReport:
    """Full three-valued classification of the field's base."""
    report = PropertyReport(poly=field.poly_str())
    report.irreducibility_verified = field.irreducibility_verified
    if not field.irreducibility_verified:
        report.add(
            "irreducibility only partially tested at this degree",
            "irreducibility-flag",
            "rational-root and squarefree tests only for degree >= 5",
        )

    pisot = is_pisot(field)
    report.pisot = PROVEN if pisot else REFUTED
    inside, on, outside = unit_disk_profile(field)
    report.add(
        f"unit-disk root profile inside={inside} on={on} outside={outside}",
        "schur-cohn",
        "Pisot iff exactly one root outside the closed unit disk",
    )

    if not pisot:
        # digit orbits need not close off the Pisot case; skip them
        _set_verdict(
            report, "f1", REFUTED,
            "a base with the natural-number finiteness property must be Pisot",
            "pisot-necessity", "not Pisot refutes (F1)",
        )
        _propagate(report)
        return report

    try:
        report.d_beta_one = d_beta_one(field, orbit_cap)
    except OrbitBudgetExceeded:
        report.d_beta_one = None
        report.add("digit orbit of 1 did not close", "orbit-budget", "budget exceeded")

    d1 = report.d_beta_one
    d1_finite = d1.is_finite() if d1 is not None else None

    # ---- (F): sufficient coefficient rules -------------------------------
    if fs_type(field.coeffs):
        _set_verdict(
            report, "f", PROVEN,
            "descending coefficient chain", "fs-type",
            "a_{d-1} >= ... >= a_0 >= 1 gives (F)",
        )
    elif hollander_type(field.coeffs):
        _set_verdict(
            report, "f", PROVEN,
            "dominant top coefficient", "hollander-type",
            "a_{d-1} > a_{d-2} + ... + a_0, all a_j >= 0 gives (F)",
        )

    # cubic units are completely classified
    if field.degree == 3 and abs(field.coeffs[0]) == 1:
        a, b, c = field.coeffs[2], field.coeffs[1], field.coeffs[0]
        unit = cubic_unit_classify(a, b, c)
        for prop in ("f", "pf", "f1"):
            _set_verdict(
                report, prop, unit[prop],
                f"cubic unit rule for {prop}", "cubic-unit",
                "(F) iff c=1 and b+c>=0; (PF) iff (F1) iff (b+c)c>=0 and (b,c)!=(1,-1)",
            )

    # ---- SRS data: refutes (F) via nonzero tau-cycles, certifies (F1) ----
    srs = ShiftRadixSystem(field)
    try:
        graph = q_set(srs, closure_cap)
        P = p_set(graph)
        if P and report.f != REFUTED:
            wit = min(P)
            x0 = srs.frac_value(wit)
            if is_finite_expansion(x0, orbit_cap):
                raise InvariantViolation("tau-periodic vector mapped to a finite expansion")
            _set_verdict(
                report, "f", REFUTED,
                f"frac(value({wit})) has an infinite expansion",
                "tau-cycle-witness",
                "a nonzero tau-periodic vector yields an element of Z[1/beta] outside Fin",
            )
    except ClosureBudgetExceeded:
        report.add("vector closure budget exceeded", "closure-budget", "budget exceeded")

    # ---- (PF) -------------------------------------------------------------
    if field.degree == 2:
        _set_verdict(
            report, "pf", PROVEN,
            "quadratic Pisot base", "quadratic-pf",
            "every degree-2 Pisot number has (PF)",
        )
    shape = pf_shape(field.coeffs, field.floor_beta())
    if shape == PF_WITHOUT_F_PROVEN:
        _set_verdict(
            report, "pf", PROVEN,
            "coefficient shape with dominant B", "pf-shape",
            "x^d - B x^{d-1} + sum c_i x^{d-i}, c_i >= 0, c_d > 0, B > 1 + sum c_i gives (PF) without (F)",
        )
        _set_verdict(
            report, "f", REFUTED,
            "coefficient shape with dominant B", "pf-shape",
            "the matched shape excludes (F)",
        )
    elif report.f == REFUTED and report.pf == UNKNOWN:
        _set_verdict(
            report, "pf", REFUTED,
            "no (F) and not of the special shape", "pf-necessity",
            "(PF) forces (F) or the shape x^d - (floor(beta)+1) x^{d-1} + ...",
        )

    # charaPF: under (PF), (F) iff d_beta(1) finite
    if report.pf == PROVEN and d1_finite is not None:
        _set_verdict(
            report, "f", PROVEN if d1_finite else REFUTED,
            f"d_beta(1) is {'finite' if d1_finite else 'infinite'} under (PF)",
            "chara-pf", "with (PF), (F) holds iff d_beta(1) is finite",
        )

    # ---- (F1) --------------------------------------------------------------
    if report.f1 == UNKNOWN or report.pf == UNKNOWN:
        cert = f1_certificate(srs, closure_cap, orbit_cap, box_pad)
        if cert.verdict == PROVEN:
            _set_verdict(
                report, "f1", PROVEN,
                f"certificate: P={sorted(cert.p_set)}, delta={cert.delta}, "
                f"R0={sorted(cert.r0)} all reach zero",
                "srs-certificate",
                "preimage-closed P and delta-box slice of V inside F give (F1)",
            )
    if report.f1 == UNKNOWN:
        refuter = _find_infinite_natural(field, n_sweep, orbit_cap)
        if refuter is not None:
            _set_verdict(
                report, "f1", REFUTED,
                f"N = {refuter} has an infinite expansion", "natural-sweep",
                "one natural number outside Fin refutes (F1)",
            )

    _propagate(report)
    return report


def _find_infinite_natural(field: BetaField, n_sweep: int, orbit_cap: int) -> int | None:
    candidates = [field.floor_beta() + 1] + list(range(1, n_sweep + 1))
    seen: set[int] = set()
    for n in candidates:
        if n in seen:
            continue
        seen.add(n)
        try:
            if not is_finite_expansion(field.from_rational(n), orbit_cap):
                return n
        except OrbitBudgetExceeded:
            continue
    return None


@dataclass(frozen=True)
class CpCaseReport:
    applicable: bool
    f1: str
    pf_without_f: bool | None
    d_beta_one_finite: bool | None
    holds: bool | None
    note: str


def cpcase_check(field: BetaField, **classify_kwargs) -> CpCaseReport:
    """Instance check of: for a cubic Pisot with (F1), (PF) without (F)
    holds iff d_beta(1) is infinite.

    Raises F1Unknown when the (F1) verdict cannot be settled; reports
    inapplicability when (F1) is refuted.
    """
    if field.degree != 3:
        raise NotCubicPisot("the biconditional is about cubic Pisot numbers")
    report = classify(field, **classify_kwargs)
    if report.pisot != PROVEN:
        raise NotCubicPisot("base is not Pisot")
    if report.f1 == UNKNOWN:
        raise F1Unknown("the (F1) verdict is unknown; the biconditional needs it")
    if report.f1 == REFUTED:
        return CpCaseReport(False, report.f1, None, None, None,
                            "(F1) refuted: the biconditional presupposes (F1)")
    if report.pf == UNKNOWN or report.f == UNKNOWN:
        raise F1Unknown("(PF)/(F) verdicts unsettled; cannot evaluate the biconditional")
    pf_wo_f = report.pf == PROVEN and report.f == REFUTED
    d1 = report.d_beta_one
    if d1 is None:
        raise F1Unknown("d_beta(1) unavailable")
    holds = pf_wo_f == (not d1.is_finite())
    if not holds:
        raise InvariantViolation("the (PF)-without-(F) biconditional failed on an instance")
    return CpCaseReport(True, report.f1, pf_wo_f, d1.is_finite(), holds, "")

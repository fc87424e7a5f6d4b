"""Entailment between acts and the square of opposition at the formula level.

Entailment quantifies the value order over a whole valuation space: one act
entails another when no valuation ranks the first strictly above the second.
In the four-valued matrix "success" is the value 1/2; in the nonstandard
matrix the square is read order-theoretically, comparing an act's value, its
content negation and their complements. Contrary verbs are modeled as one
force plus content negation, so a single nonstandard value determines the
whole square.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping, Optional

from .boolalg import AlgebraSpec
from .hyper import (
    HyperValue,
    SquareReport,
    enumerate_nonstandard,
    hleq,
    hyper_to_json,
    is_standard,
    normalize,
    square_report,
    standard,
)
from .matrix_m import DESIGNATED as _M_DESIGNATED
from .matrix_m import TruthValue4, eval_m
from .matrix_m import _ev as _eval_m_resolved
from .matrix_mb import (
    MBMode,
    MBValuation,
    StandardAssignment,
    _eval_resolved,
    _slots,
    _valuation_from,
    requirements,
    valuation_to_json,
)
from .search import DEFAULT_BUDGET, Slot, first_hit
from .syntax import And, Atom, Force, Formula, Not, Or, atoms_of, inline_acts


@dataclass(frozen=True)
class CheckSpace:
    """Where a quantified check runs: which matrix, algebra, mode, filters."""

    matrix: str  # "m" | "mb"
    algebra: Optional[AlgebraSpec] = None
    mode: MBMode = MBMode.POINTWISE
    admissible_only: bool = True
    budget: int = DEFAULT_BUDGET
    jobs: int = 1

    def __post_init__(self) -> None:
        if self.matrix not in ("m", "mb"):
            raise ValueError(f"unknown matrix {self.matrix!r}")
        if self.matrix == "mb" and self.algebra is None:
            raise ValueError("the nonstandard matrix needs an algebra")


@dataclass(frozen=True)
class EntailmentResult:
    holds: bool
    witness: Optional[dict]  # JSON-shaped valuation
    left_value: Optional[str]
    right_value: Optional[str]

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "witness": self.witness,
            "left_value": self.left_value,
            "right_value": self.right_value,
        }


def entails(
    left: Formula,
    right: Formula,
    space: CheckSpace,
    defs: Optional[Mapping[str, Formula]] = None,
) -> EntailmentResult:
    """Check value(left) <= value(right) under every valuation of the space."""
    defs = dict(defs or {})
    if space.matrix == "m":
        left_resolved = inline_acts(left, defs)
        right_resolved = inline_acts(right, defs)
        atoms = sorted(set(atoms_of(left_resolved)) | set(atoms_of(right_resolved)))
        slots = [Slot(("atom", name), (0, 1)) for name in atoms]

        def violates(assignment: dict):
            e = {key[1]: bit for key, bit in assignment.items()}
            lhs = _eval_m_resolved(left_resolved, e)
            rhs = _eval_m_resolved(right_resolved, e)
            if not lhs <= rhs:
                return (lhs, rhs)
            return None

        hit = first_hit(slots, violates, budget=space.budget, jobs=space.jobs)
        if hit is None:
            return EntailmentResult(True, None, None, None)
        witness = {"atom_values": {key[1]: bit for key, bit in hit.assignment.items()}}
        return EntailmentResult(False, witness, str(hit.payload[0]), str(hit.payload[1]))

    left_resolved = inline_acts(left, defs)
    right_resolved = inline_acts(right, defs)
    reqs = requirements(left_resolved, space.mode).merge(
        requirements(right_resolved, space.mode)
    )
    slots = _slots(reqs, space.algebra)

    def violates_mb(assignment: dict):
        valuation = _valuation_from(assignment, space.algebra, space.mode)
        lhs = _eval_resolved(left_resolved, valuation, {}, nested_pointwise=False)
        rhs = _eval_resolved(right_resolved, valuation, {}, nested_pointwise=False)
        if space.admissible_only and not (lhs.admissible and rhs.admissible):
            return None
        if not hleq(lhs.value, rhs.value):
            return (lhs.value, rhs.value, valuation)
        return None

    hit = first_hit(slots, violates_mb, budget=space.budget, jobs=space.jobs)
    if hit is None:
        return EntailmentResult(True, None, None, None)
    lhs_value, rhs_value, valuation = hit.payload
    return EntailmentResult(
        False, valuation_to_json(valuation), str(lhs_value), str(rhs_value)
    )


@dataclass(frozen=True)
class RelationCheck:
    holds: bool
    witness: Optional[dict] = None

    def to_json(self) -> dict:
        return {"holds": self.holds, "witness": self.witness}


@dataclass(frozen=True)
class LawRow:
    label: str
    excluded_middle: str      # value of ~F(~p) | ~F(p)
    contrariety: str          # value of ~(F(~p) & F(p))
    excluded_middle_designated: bool
    contrariety_designated: bool

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "tertium_non_datur": {
                "value": self.excluded_middle,
                "designated": self.excluded_middle_designated,
            },
            "law_of_contrary": {
                "value": self.contrariety,
                "designated": self.contrariety_designated,
            },
        }


@dataclass(frozen=True)
class LawsReport:
    rows: tuple[LawRow, ...]
    excluded_middle_always_designated: bool
    contrariety_always_designated: bool
    values_coincide: bool

    def to_json(self) -> dict:
        return {
            "rows": [row.to_json() for row in self.rows],
            "tertium_non_datur_always_designated": self.excluded_middle_always_designated,
            "law_of_contrary_always_designated": self.contrariety_always_designated,
            "values_coincide": self.values_coincide,
        }


@dataclass(frozen=True)
class OppositionReport:
    matrix: str
    force: str
    atom: str
    square_holds: bool
    criterion_holds: bool
    contrary: RelationCheck
    contradictory: RelationCheck
    subcontrary: RelationCheck
    subaltern_left: RelationCheck
    subaltern_right: RelationCheck
    laws: LawsReport
    hyper: Optional[SquareReport] = field(default=None, repr=False)

    def to_json(self) -> dict:
        data = {
            "matrix": self.matrix,
            "force": self.force,
            "atom": self.atom,
            "square_holds": self.square_holds,
            "criterion_holds": self.criterion_holds,
            "relations": {
                "contrary": self.contrary.to_json(),
                "contradictory": self.contradictory.to_json(),
                "subcontrary": self.subcontrary.to_json(),
                "subaltern_left": self.subaltern_left.to_json(),
                "subaltern_right": self.subaltern_right.to_json(),
            },
            "laws": self.laws.to_json(),
        }
        if self.hyper is not None:
            data["hyper"] = self.hyper.to_json()
        return data


def _corner_formulas(force: str, atom: str) -> tuple[Formula, Formula, Formula, Formula]:
    p = Atom(atom)
    pos = Force(force, p)                 # F(p)
    neg_content = Force(force, Not(p))    # F(~p)
    return pos, neg_content, Not(neg_content), Not(pos)


def _laws_formulas(force: str, atom: str) -> tuple[Formula, Formula]:
    p = Atom(atom)
    excluded_middle = Or(Not(Force(force, Not(p))), Not(Force(force, p)))
    contrariety = Not(And(Force(force, Not(p)), Force(force, p)))
    return excluded_middle, contrariety


def _laws_report_m(force: str, atom: str) -> LawsReport:
    excluded_middle, contrariety = _laws_formulas(force, atom)
    rows = []
    for bit in (0, 1):
        e = {atom: bit}
        v8 = eval_m(excluded_middle, e)
        v9 = eval_m(contrariety, e)
        rows.append(
            LawRow(
                f"{atom}={bit}", str(v8), str(v9),
                v8 in _M_DESIGNATED, v9 in _M_DESIGNATED,
            )
        )
    return LawsReport(
        tuple(rows),
        all(r.excluded_middle_designated for r in rows),
        all(r.contrariety_designated for r in rows),
        all(r.excluded_middle == r.contrariety for r in rows),
    )


def _laws_report_mb(
    force: str, atom: str, space: CheckSpace, generator: HyperValue
) -> LawsReport:
    excluded_middle, contrariety = _laws_formulas(force, atom)
    valuation = MBValuation(
        space.algebra, space.mode, generators={(force, atom): generator}
    )
    designated = standard(space.algebra.top())
    v8 = _eval_resolved(excluded_middle, valuation, {}, nested_pointwise=False).value
    v9 = _eval_resolved(contrariety, valuation, {}, nested_pointwise=False).value
    row = LawRow(
        f"generator={generator}", str(v8), str(v9), v8 == designated, v9 == designated
    )
    return LawsReport(
        (row,),
        row.excluded_middle_designated,
        row.contrariety_designated,
        row.excluded_middle == row.contrariety,
    )


def criterion_holds(
    force: str,
    space: CheckSpace,
    *,
    atom: str = "p",
    generator: Optional[HyperValue] = None,
) -> bool:
    """Whether performing the negated content entails rejecting the act.

    Quantifies value(F(~p)) <= value(~F(p)) over the space's valuations; when
    this holds, the whole square of opposition does. With a fixed nonstandard
    generator it reduces to the generator's components being disjoint.
    """
    if space.matrix == "m":
        p = Atom(atom)
        return entails(Force(force, Not(p)), Not(Force(force, p)), space).holds
    if space.mode is MBMode.FREE:
        raise ValueError("the square needs a content-linked mode, not FREE")
    if generator is None:
        return all(
            criterion_holds(force, space, atom=atom, generator=g)
            for g in enumerate_nonstandard(space.algebra)
        )
    generator = normalize(generator)
    if is_standard(generator):
        raise StandardAssignment("the generator must be nonstandard")
    report = square_report(generator)
    return report.holds


def square_for_force(
    force: str,
    atom: str,
    space: CheckSpace,
    *,
    generator: Optional[HyperValue] = None,
) -> OppositionReport:
    """Build the full square report for one force applied to one atom."""
    if space.matrix == "m":
        return _square_m(force, atom, space)
    if space.mode is MBMode.FREE:
        raise ValueError("the square needs a content-linked mode, not FREE")
    if generator is None:
        return _square_mb_quantified(force, atom, space)
    generator = normalize(generator)
    if is_standard(generator):
        raise StandardAssignment("the generator must be nonstandard")
    report = square_report(generator)
    laws = _laws_report_mb(force, atom, space, generator)
    witness = {"generator": hyper_to_json(generator)}
    return OppositionReport(
        matrix="mb",
        force=force,
        atom=atom,
        square_holds=report.holds,
        criterion_holds=report.holds,
        contrary=RelationCheck(report.contrary, witness if not report.contrary else None),
        contradictory=RelationCheck(report.contradictory),
        subcontrary=RelationCheck(
            report.subcontrary, witness if not report.subcontrary else None
        ),
        subaltern_left=RelationCheck(
            report.subaltern_left, witness if not report.subaltern_left else None
        ),
        subaltern_right=RelationCheck(
            report.subaltern_right, witness if not report.subaltern_right else None
        ),
        laws=laws,
        hyper=report,
    )


def _square_m(force: str, atom: str, space: CheckSpace) -> OppositionReport:
    pos, neg_content, not_neg_content, not_pos = _corner_formulas(force, atom)

    def successful(f: Formula, e: dict) -> bool:
        return eval_m(f, e) == TruthValue4.HALF

    def unsuccessful(f: Formula, e: dict) -> bool:
        return eval_m(f, e) == TruthValue4.NEG_HALF

    def quantify(condition) -> RelationCheck:
        for bits in itertools.product((0, 1), repeat=1):
            e = {atom: bits[0]}
            if not condition(e):
                return RelationCheck(False, {"atom_values": dict(e)})
        return RelationCheck(True)

    contrary = quantify(lambda e: not (successful(pos, e) and successful(neg_content, e)))
    contradictory = quantify(
        lambda e: successful(pos, e) == unsuccessful(not_pos, e)
        and successful(neg_content, e) == unsuccessful(not_neg_content, e)
    )
    subcontrary = quantify(
        lambda e: not (unsuccessful(not_pos, e) and unsuccessful(not_neg_content, e))
    )
    subaltern_left = quantify(
        lambda e: successful(not_neg_content, e) if successful(pos, e) else True
    )
    subaltern_right = quantify(
        lambda e: successful(not_pos, e) if successful(neg_content, e) else True
    )
    criterion = entails(neg_content, not_pos, space).holds
    return OppositionReport(
        matrix="m",
        force=force,
        atom=atom,
        square_holds=criterion,
        criterion_holds=criterion,
        contrary=contrary,
        contradictory=contradictory,
        subcontrary=subcontrary,
        subaltern_left=subaltern_left,
        subaltern_right=subaltern_right,
        laws=_laws_report_m(force, atom),
    )


def _square_mb_quantified(force: str, atom: str, space: CheckSpace) -> OppositionReport:
    generators = list(enumerate_nonstandard(space.algebra))
    per_generator = [square_report(g) for g in generators]

    def quantified(attr: str) -> RelationCheck:
        for g, report in zip(generators, per_generator):
            if not getattr(report, attr):
                return RelationCheck(False, {"generator": hyper_to_json(g)})
        return RelationCheck(True)

    rows = []
    for g in generators:
        row = _laws_report_mb(force, atom, space, g).rows[0]
        rows.append(row)
    laws = LawsReport(
        tuple(rows),
        all(r.excluded_middle_designated for r in rows),
        all(r.contrariety_designated for r in rows),
        all(r.excluded_middle == r.contrariety for r in rows),
    )
    square_all = all(r.holds for r in per_generator)
    return OppositionReport(
        matrix="mb",
        force=force,
        atom=atom,
        square_holds=square_all,
        criterion_holds=square_all,
        contrary=quantified("contrary"),
        contradictory=quantified("contradictory"),
        subcontrary=quantified("subcontrary"),
        subaltern_left=quantified("subaltern_left"),
        subaltern_right=quantified("subaltern_right"),
        laws=laws,
    )


def laws_report(
    force: str,
    space: CheckSpace,
    *,
    atom: str = "p",
    generator: Optional[HyperValue] = None,
) -> LawsReport:
    """Values and designation of the two square corollaries, never asserted."""
    if space.matrix == "m":
        return _laws_report_m(force, atom)
    if space.mode is MBMode.FREE:
        raise ValueError("the laws need a content-linked mode, not FREE")
    if generator is not None:
        generator = normalize(generator)
        if is_standard(generator):
            raise StandardAssignment("the generator must be nonstandard")
        return _laws_report_mb(force, atom, space, generator)
    rows = tuple(
        _laws_report_mb(force, atom, space, g).rows[0]
        for g in enumerate_nonstandard(space.algebra)
    )
    return LawsReport(
        rows,
        all(r.excluded_middle_designated for r in rows),
        all(r.contrariety_designated for r in rows),
        all(r.excluded_middle == r.contrariety for r in rows),
    )

"""Command-line interface: evaluate, tabulate, check, and report.

Commands: eval, table, taut, check-matrix, square, entail, unfold, fmt.
Exit codes: 0 success/tautology/holds, 1 refuted/does-not-hold, 2 parse
error, 3 semantic error, 4 budget exceeded.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
from typing import Optional

from .boolalg import AlgebraMismatch, AlgebraSpec, Element
from .hyper import HyperValue, StandardInput, hyper_to_json, normalize, standard
from .matrix_m import (
    MissingAtom,
    check_matrix_properties,
    classify,
    eval_m,
    is_tautology_m,
)
from .matrix_mb import (
    MBMode,
    MBValuation,
    MissingAssignment,
    NotCyclic,
    StandardAssignment,
    default_signatures,
    eval_mb,
    is_tautology_mb,
    requirements,
    unfold_cyclic,
    valuation_from_json,
    valuation_to_json,
    _slots,
    _valuation_from,
)
from .opposition import CheckSpace, entails, square_for_force
from .search import DEFAULT_BUDGET, BudgetExceeded, assignment_at, space_size
from .syntax import (
    CyclicAct,
    ParseError,
    UnknownActRef,
    atoms_of,
    format_formula,
    format_program,
    formula_to_json,
    inline_acts,
    parse,
)

_MARK = {True: "✓", False: "✗"}  # ✓ / ✗


def _budget_default() -> int:
    raw = os.environ.get("ILLOC_BUDGET")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise ValueError(f"ILLOC_BUDGET must be an integer, got {raw!r}")
    return DEFAULT_BUDGET


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--matrix", choices=("m", "mb"), default="m")
    sub.add_argument("--algebra", default="a,b", help="comma-separated atom names (mb)")
    sub.add_argument(
        "--mode", choices=[m.value for m in MBMode], default="pointwise",
        help="how act values relate to their contents (mb)",
    )
    sub.add_argument(
        "--all-valuations", action="store_true",
        help="include valuations with standard act subvalues (mb)",
    )
    sub.add_argument("--budget", type=int, default=None)
    sub.add_argument("--jobs", type=int, default=1)
    sub.add_argument("--output", choices=("text", "json"), default="text")
    sub.add_argument("--defs", help="path to an .illoc file with act definitions")
    sub.add_argument("--valuation", help="path to a valuation JSON file (mb)")


def _algebra_of(args) -> AlgebraSpec:
    return AlgebraSpec(tuple(name.strip() for name in args.algebra.split(",") if name.strip()))


def _load_program(args, formula_text: Optional[str]):
    defs = {}
    file_formula = None
    if args.defs:
        with open(args.defs, "r", encoding="utf-8") as handle:
            result = parse(handle.read())
        defs = result.definitions
        file_formula = result.formula
    if formula_text is not None:
        formula = parse(formula_text).formula
        if formula is None:
            raise ValueError("empty formula")
    else:
        formula = file_formula
    return defs, formula


def _space(args, algebra: Optional[AlgebraSpec]) -> CheckSpace:
    return CheckSpace(
        matrix=args.matrix,
        algebra=algebra,
        mode=MBMode(args.mode),
        admissible_only=not args.all_valuations,
        budget=args.budget if args.budget is not None else _budget_default(),
        jobs=args.jobs,
    )


def _parse_assignments(pairs) -> dict[str, int]:
    assignment = {}
    for pair in pairs or ():
        name, _, raw = pair.partition("=")
        if not name or raw not in ("0", "1"):
            raise ValueError(f"--assign expects name=0 or name=1, got {pair!r}")
        assignment[name.strip()] = int(raw)
    return assignment


def _parse_element(algebra: AlgebraSpec, text: str) -> Element:
    names = [n.strip() for n in text.split(",") if n.strip()]
    return algebra.element(names)


def _parse_gen(algebra: AlgebraSpec, text: str) -> HyperValue:
    parts = dict(
        part.partition("=")[::2] for part in text.split(";") if part.strip()
    )
    unknown = set(parts) - {"on_true", "on_false"}
    if unknown or "on_true" not in parts or "on_false" not in parts:
        raise ValueError('generators look like "on_true=a,b;on_false=b"')
    return HyperValue(
        _parse_element(algebra, parts["on_true"]),
        _parse_element(algebra, parts["on_false"]),
    )


def _parse_seed(algebra: AlgebraSpec, text: str) -> HyperValue:
    if text.startswith("standard:"):
        payload = text[len("standard:"):].strip()
        if payload == "0":
            return standard(algebra.bottom())
        if payload == "1":
            return standard(algebra.top())
        return standard(_parse_element(algebra, payload))
    return _parse_gen(algebra, text)


def _load_valuation(args, algebra: AlgebraSpec) -> MBValuation:
    if not args.valuation:
        return MBValuation(algebra, MBMode(args.mode))
    with open(args.valuation, "r", encoding="utf-8") as handle:
        data = json.load(handle)
    data.setdefault("algebra", {"atoms": list(algebra.atoms)})
    return valuation_from_json(data, default_mode=MBMode(args.mode))


def _emit(args, payload: dict, text: str) -> None:
    if args.output == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _render_hyper(h: HyperValue) -> str:
    return str(normalize(h))


# --- commands ---

def _cmd_eval(args) -> int:
    defs, formula = _load_program(args, args.formula)
    if formula is None:
        raise ValueError("no formula given")
    if args.matrix == "m":
        assignment = _parse_assignments(args.assign)
        value = eval_m(formula, assignment, defs)
        payload = {
            "formula": format_formula(formula),
            "matrix": "m",
            "value": str(value),
            "classification": classify(value),
        }
        _emit(args, payload, f"{value} {classify(value)}")
        return 0
    valuation = _load_valuation(args, _algebra_of(args))
    outcome = eval_mb(formula, valuation, defs)
    payload = {
        "formula": format_formula(formula),
        "matrix": "mb",
        "mode": valuation.mode.value,
    }
    payload.update(outcome.to_json())
    flag = "admissible" if outcome.admissible else "inadmissible"
    _emit(args, payload, f"{_render_hyper(outcome.value)} {flag}")
    return 0


def _cmd_table(args) -> int:
    defs, formula = _load_program(args, args.formula)
    if formula is None:
        raise ValueError("no formula given")
    budget = args.budget if args.budget is not None else _budget_default()
    rows = []
    if args.matrix == "m":
        resolved = inline_acts(formula, defs)
        atoms = sorted(set(atoms_of(resolved)))
        if 2 ** len(atoms) > budget:
            raise BudgetExceeded(f"{2 ** len(atoms)} rows exceed the budget of {budget}")
        for bits in itertools.product((0, 1), repeat=len(atoms)):
            e = dict(zip(atoms, bits))
            value = eval_m(resolved, e)
            rows.append({"atom_values": e, "value": str(value),
                         "classification": classify(value)})
        lines = [
            " ".join(f"{k}={v}" for k, v in row["atom_values"].items())
            + f"  {row['value']}  {row['classification']}"
            for row in rows
        ]
    else:
        algebra = _algebra_of(args)
        mode = MBMode(args.mode)
        resolved = inline_acts(formula, defs)
        slots = _slots(requirements(resolved, mode), algebra)
        size = space_size(slots)
        if size > budget:
            raise BudgetExceeded(f"{size} rows exceed the budget of {budget}")
        admissible_only = not args.all_valuations
        lines = []
        for index in range(size):
            assignment = assignment_at(slots, index)
            valuation = _valuation_from(assignment, algebra, mode)
            outcome = eval_mb(resolved, valuation)
            if admissible_only and not outcome.admissible:
                continue
            described = " ".join(
                f"{_slot_label(key)}={_slot_value(value)}"
                for key, value in assignment.items()
            )
            rows.append(
                {"valuation": valuation_to_json(valuation), **outcome.to_json()}
            )
            lines.append(f"{described}  {_render_hyper(outcome.value)}")
    payload = {"formula": format_formula(formula), "rows": rows}
    _emit(args, payload, "\n".join(lines) if lines else "(no valuations)")
    return 0


def _slot_label(key: tuple) -> str:
    if key[0] == "atom":
        return key[1]
    if key[0] == "act":
        return key[1]
    if key[0] == "gen":
        return f"[{key[1]}]@{key[2]}"
    return f"sig:{key[1]}"


def _slot_value(value) -> str:
    return str(value)


def _cmd_taut(args) -> int:
    defs, formula = _load_program(args, args.formula)
    if formula is None:
        raise ValueError("no formula given")
    if args.matrix == "m":
        result = is_tautology_m(formula, defs)
        payload = {"formula": format_formula(formula), "matrix": "m"}
        payload.update(result.to_json())
        if result.status == "tautology":
            _emit(args, payload, "tautology")
            return 0
        witness = " ".join(f"{k}={v}" for k, v in sorted(result.witness.items()))
        _emit(args, payload, f"refuted at {witness} with value {result.witness_value}")
        return 1
    algebra = _algebra_of(args)
    budget = args.budget if args.budget is not None else _budget_default()
    result = is_tautology_mb(
        formula, algebra, MBMode(args.mode), defs=defs,
        admissible_only=not args.all_valuations, budget=budget, jobs=args.jobs,
    )
    payload = {
        "formula": format_formula(formula),
        "matrix": "mb",
        "mode": args.mode,
    }
    payload.update(result.to_json())
    if result.status == "tautology":
        _emit(args, payload, "tautology")
        return 0
    _emit(
        args, payload,
        f"refuted with value {_render_hyper(result.witness_value)}\n"
        f"witness: {json.dumps(valuation_to_json(result.witness))}",
    )
    return 1


def _cmd_check_matrix(args) -> int:
    report = check_matrix_properties()
    payload = {
        "properties": [
            {
                "id": p.prop_id,
                "statement": p.statement,
                "holds": p.holds,
                "checked": p.checked,
                "violations": [[str(v) for v in t] for t in p.violations],
            }
            for p in report
        ],
        "all_hold": all(p.holds for p in report),
    }
    lines = []
    for p in report:
        ok = p.checked - len(p.violations)
        lines.append(f"{'PASS' if p.holds else 'FAIL'} {p.prop_id} ({ok}/{p.checked} tuples)")
    _emit(args, payload, "\n".join(lines))
    return 0 if payload["all_hold"] else 1


def _cmd_square(args) -> int:
    if args.gen:
        args.matrix = "mb"  # a generator only makes sense in the nonstandard matrix
    algebra = _algebra_of(args) if args.matrix == "mb" else None
    space = _space(args, algebra)
    generator = None
    if args.gen:
        generator = _parse_gen(algebra, args.gen)
    report = square_for_force(args.force, args.atom, space, generator=generator)
    payload = report.to_json()
    f, a = args.force, args.atom
    lines = [
        f"  [{f}]({a}) ----contrary {_MARK[report.contrary.holds]}---- [{f}](~{a})",
        f"     |      \\                    /      |",
        f"subaltern {_MARK[report.subaltern_left.holds]}  contradictory {_MARK[report.contradictory.holds]}  subaltern {_MARK[report.subaltern_right.holds]}",
        f"     |      /                    \\      |",
        f" ~[{f}](~{a}) --subcontrary {_MARK[report.subcontrary.holds]}-- ~[{f}]({a})",
        f"criterion holds: {'yes' if report.criterion_holds else 'no'}",
        f"square holds: {'yes' if report.square_holds else 'no'}",
    ]
    for row in report.laws.rows[:8]:
        lines.append(
            f"law values [{row.label}]: tertium-non-datur={row.excluded_middle} "
            f"law-of-contrary={row.contrariety}"
        )
    _emit(args, payload, "\n".join(lines))
    return 0 if report.square_holds else 1


def _cmd_entail(args) -> int:
    defs, _ = _load_program(args, None)
    lhs = parse(args.lhs).formula
    rhs = parse(args.rhs).formula
    if lhs is None or rhs is None:
        raise ValueError("both sides must be formulas")
    algebra = _algebra_of(args) if args.matrix == "mb" else None
    result = entails(lhs, rhs, _space(args, algebra), defs)
    payload = {
        "lhs": format_formula(lhs),
        "rhs": format_formula(rhs),
        "matrix": args.matrix,
    }
    payload.update(result.to_json())
    if result.holds:
        _emit(args, payload, "entails")
        return 0
    _emit(
        args, payload,
        f"does not entail ({result.left_value} > {result.right_value})\n"
        f"witness: {json.dumps(result.witness)}",
    )
    return 1


def _cmd_unfold(args) -> int:
    defs, _ = _load_program(args, None)
    algebra = _algebra_of(args)
    valuation = None
    if args.valuation:
        valuation = _load_valuation(args, algebra)
        algebra = valuation.algebra
    seed = _parse_seed(algebra, args.seed)
    if valuation is None:
        signatures = default_signatures(defs, algebra)
        valuation = MBValuation(algebra, MBMode(args.mode), signatures=signatures)
    value = unfold_cyclic(defs, args.act, args.steps, seed, valuation=valuation)
    payload = {
        "act": args.act,
        "steps": args.steps,
        "seed": hyper_to_json(seed),
        "value": hyper_to_json(value),
    }
    _emit(args, payload, _render_hyper(value))
    return 0


def _cmd_fmt(args) -> int:
    if args.formula is not None:
        text = args.formula
    elif args.defs:
        with open(args.defs, "r", encoding="utf-8") as handle:
            text = handle.read()
    else:
        raise ValueError("nothing to format")
    result = parse(text)
    rendered = format_program(result.definitions, result.formula)
    payload = {
        "definitions": {
            name: format_formula(body) for name, body in result.definitions.items()
        },
        "formula": None if result.formula is None else format_formula(result.formula),
        "ast": None if result.formula is None else formula_to_json(result.formula),
    }
    _emit(args, payload, rendered)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="illoc",
        description="Matrix semantics for illocutionary acts",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("eval", help="evaluate a formula under one valuation")
    _add_common(sub)
    sub.add_argument("--assign", action="append", help="atom value, e.g. p=1 (matrix m)")
    sub.add_argument("formula", nargs="?")
    sub.set_defaults(handler=_cmd_eval)

    sub = subs.add_parser("table", help="print the value of a formula on every valuation")
    _add_common(sub)
    sub.add_argument("formula", nargs="?")
    sub.set_defaults(handler=_cmd_table)

    sub = subs.add_parser("taut", help="exhaustive tautology check")
    _add_common(sub)
    sub.add_argument("formula", nargs="?")
    sub.set_defaults(handler=_cmd_taut)

    sub = subs.add_parser("check-matrix", help="check the seven four-valued operator laws")
    sub.add_argument("--output", choices=("text", "json"), default="text")
    sub.set_defaults(handler=_cmd_check_matrix)

    sub = subs.add_parser("square", help="square of opposition report")
    _add_common(sub)
    sub.add_argument("--force", default="think")
    sub.add_argument("--atom", default="p")
    sub.add_argument("--gen", help='generator, e.g. "on_true=a;on_false=" (mb)')
    sub.set_defaults(handler=_cmd_square)

    sub = subs.add_parser("entail", help="does the first act entail the second?")
    _add_common(sub)
    sub.add_argument("lhs")
    sub.add_argument("rhs")
    sub.set_defaults(handler=_cmd_entail)

    sub = subs.add_parser("unfold", help="finitely unfold a cyclic act from a seed")
    _add_common(sub)
    sub.add_argument("--act", required=True)
    sub.add_argument("--steps", type=int, required=True)
    sub.add_argument("--seed", required=True, help='e.g. "standard:0" or "standard:1"')
    sub.set_defaults(handler=_cmd_unfold)

    sub = subs.add_parser("fmt", help="reprint a program in canonical form")
    sub.add_argument("--output", choices=("text", "json"), default="text")
    sub.add_argument("--defs", help="path to an .illoc file")
    sub.add_argument("formula", nargs="?")
    sub.set_defaults(handler=_cmd_fmt)

    return parser


_SEMANTIC_ERRORS = (
    MissingAtom,
    MissingAssignment,
    StandardAssignment,
    CyclicAct,
    UnknownActRef,
    AlgebraMismatch,
    StandardInput,
    NotCyclic,
    OSError,
    json.JSONDecodeError,
    ValueError,
)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ParseError as error:
        print(f"parse error: {error}", file=sys.stderr)
        return 2
    except BudgetExceeded as error:
        print(f"budget exceeded: {error}", file=sys.stderr)
        return 4
    except _SEMANTIC_ERRORS as error:
        print(f"error: {error}", file=sys.stderr)
        return 3


def console() -> None:
    raise SystemExit(main())

"""Scan the nonstandard matrix: tautology status table, square scan, law values.

The status table is the machine-checked record of how far the blanket
tautology claims for the five implication schemas actually reach under the
three valuation modes; refutations come with their first witnesses.
"""

import json
import sys
from pathlib import Path

try:
    import illoc  # noqa: F401
except ImportError:
    sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from illoc.boolalg import AlgebraSpec, meet
from illoc.hyper import enumerate_nonstandard, square_report
from illoc.matrix_mb import MBMode, is_tautology_mb, valuation_to_json
from illoc.opposition import CheckSpace, laws_report
from illoc.syntax import format_formula, parse_formula

SCHEMAS = {
    "force-detachment": "[f](p) -> p",
    "neg-force-detachment": "~[f](p) -> ~p",
    "and-split": "[f](p & q) -> ([f](p) & [f](q))",
    "or-merge": "([f](p) | [f](q)) -> [f](p | q)",
    "imp-distribution": "[f](p -> q) -> ([f](p) -> [f](q))",
}
MODES = (MBMode.FREE, MBMode.POINTWISE, MBMode.CONNECTIVE)


def status_table():
    print("tautology statuses over admissible valuations")
    print("(designated value: the standard top)\n")
    for k in (1, 2):
        spec = AlgebraSpec(tuple("ab"[:k]))
        print(f"algebra atoms: {','.join(spec.atoms)}")
        header = f"  {'schema':22s} " + "  ".join(f"{m.value:>10s}" for m in MODES)
        print(header)
        witnesses = []
        for name, text in SCHEMAS.items():
            formula = parse_formula(text)
            cells = []
            for mode in MODES:
                result = is_tautology_mb(formula, spec, mode)
                cells.append(f"{result.status:>10s}")
                if result.status == "refuted":
                    witnesses.append((name, mode, result))
            print(f"  {name:22s} " + "  ".join(cells))
        print()
        for name, mode, result in witnesses:
            compact = json.dumps(valuation_to_json(result.witness))
            print(f"  witness [{name} / {mode.value}]: value={result.witness_value}")
            print(f"    {compact}")
        print()


def square_scan():
    spec = AlgebraSpec(("a", "b"))
    print("square of opposition over every nonstandard value (two atoms):")
    holds = 0
    for g in enumerate_nonstandard(spec):
        report = square_report(g)
        disjoint = meet(g.on_true, g.on_false) == spec.bottom()
        assert report.holds == disjoint
        holds += report.holds
        print(f"  {str(g):>12s}  square={'yes' if report.holds else 'no '}  "
              f"contrary={report.contrary}  subcontrary={report.subcontrary}")
    print(f"  -> square holds for {holds} of 12 values, "
          "exactly those with disjoint components\n")


def law_values():
    spec = AlgebraSpec(("a", "b"))
    space = CheckSpace(matrix="mb", algebra=spec, mode=MBMode.POINTWISE)
    report = laws_report("f", space)
    print("square corollaries per generator (both laws share one value):")
    for row in report.rows:
        print(f"  {row.label:>26s}  value={row.excluded_middle:>6s}  "
              f"designated={row.excluded_middle_designated}")
    print(
        "  -> never designated: the laws' value is the complement of the\n"
        "     component join, which is the top only for standard values\n"
    )


if __name__ == "__main__":
    status_table()
    square_scan()
    law_values()

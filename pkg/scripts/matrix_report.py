"""Print the four-valued matrix: operation tables, operator laws, contradiction profile."""

import sys
from pathlib import Path

try:
    import illoc  # noqa: F401
except ImportError:
    sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from illoc.matrix_m import (
    CARRIER,
    and4,
    check_matrix_properties,
    contradiction_profile,
    force4,
    imp4,
    neg4,
    or4,
)


def unary_table(label, op):
    print(f"\n{label}:")
    for a in CARRIER:
        print(f"  {label}({a}) = {op(a)}")


def binary_table(label, op):
    header = " | ".join(f"{str(b):>4}" for b in CARRIER)
    print(f"\n{label}:  x\\y  {header}")
    for a in CARRIER:
        row = " | ".join(f"{str(op(a, b)):>4}" for b in CARRIER)
        print(f"  {str(a):>9}  {row}")


def main():
    print("carrier: " + ", ".join(str(v) for v in CARRIER) + "   designated: 1")
    unary_table("~", neg4)
    unary_table("F", force4)
    binary_table("->", imp4)
    binary_table("|", or4)
    binary_table("&", and4)

    print("\noperator laws (exhaustive over the carrier):")
    for prop in check_matrix_properties():
        ok = prop.checked - len(prop.violations)
        line = f"  {'PASS' if prop.holds else 'FAIL'} {prop.prop_id}: {prop.statement} ({ok}/{prop.checked})"
        if prop.violations:
            shown = ", ".join("(" + ", ".join(map(str, t)) + ")" for t in prop.violations)
            line += f"  violations: {shown}"
        print(line)

    print("\ncontradiction profile (a & ~a is not the minimum):")
    print("  a      a&~a   F(a&~a)  F(a)&~F(a)")
    for row in contradiction_profile():
        print(
            f"  {str(row.a):>4}   {str(row.conjunction):>4}   "
            f"{str(row.performed_conjunction):>6}   {str(row.split_performance):>6}"
        )


if __name__ == "__main__":
    main()

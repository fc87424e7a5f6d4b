import itertools
import random
from fractions import Fraction

import pytest

from conftest import random_force_free
from illoc.matrix_m import (
    CARRIER,
    MissingAtom,
    TruthValue4,
    and4,
    check_matrix_properties,
    classify,
    contradiction_profile,
    eval_m,
    force4,
    imp4,
    is_tautology_m,
    neg4,
    or4,
)
from illoc.syntax import ActRef, parse, parse_formula

ONE, HALF, ZERO, NEG = (
    TruthValue4.ONE,
    TruthValue4.HALF,
    TruthValue4.ZERO,
    TruthValue4.NEG_HALF,
)


class TestOperations:
    def test_force_on_classical_values(self):
        assert force4(ONE) == HALF
        assert force4(ZERO) == NEG

    def test_force_fixes_performances(self):
        assert force4(HALF) == HALF
        assert force4(NEG) == NEG

    def test_force_range_and_idempotence(self):
        assert {force4(x) for x in CARRIER} == {HALF, NEG}
        for x in CARRIER:
            assert force4(force4(x)) == force4(x)

    def test_negation(self):
        assert neg4(ONE) == ZERO and neg4(ZERO) == ONE
        assert neg4(HALF) == NEG and neg4(NEG) == HALF

    def test_dualized_clauses(self):
        assert or4(HALF, NEG) == NEG
        assert and4(HALF, NEG) == HALF

    def test_classical_clauses(self):
        assert or4(ONE, NEG) == ONE
        assert and4(ONE, HALF) == HALF
        assert or4(HALF, ZERO) == HALF

    def test_implication_branches(self):
        assert imp4(HALF, NEG) == ZERO
        assert imp4(ONE, HALF) == HALF
        assert imp4(ZERO, NEG) == HALF
        assert imp4(ZERO, ZERO) == ONE

    def test_implication_matches_arithmetic(self):
        for x, y in itertools.product(CARRIER, repeat=2):
            expected = 1 - max(x.rational, y.rational) + y.rational
            assert imp4(x, y).rational == Fraction(expected)

    def test_order_is_numeric(self):
        assert NEG < ZERO < HALF < ONE


class TestClassification:
    @pytest.mark.parametrize(
        "value,label",
        [
            (ONE, "true-sentence"),
            (ZERO, "false-sentence"),
            (HALF, "successful-performance"),
            (NEG, "unsuccessful-performance"),
        ],
    )
    def test_labels(self, value, label):
        assert classify(value) == label

    def test_rendering(self):
        assert [str(v) for v in CARRIER] == ["1", "1/2", "0", "-1/2"]


class TestEval:
    def test_successful_performance(self):
        assert eval_m(parse_formula("[think](p)"), {"p": 1}) == HALF

    def test_illocutionary_contradiction(self):
        f = parse_formula("[think](p & ~p)")
        assert eval_m(f, {"p": 1}) == NEG
        assert eval_m(f, {"p": 0}) == NEG

    def test_reflexive_implication(self):
        assert eval_m(parse_formula("p -> p"), {"p": 0}) == ONE

    def test_any_force_name_acts_as_think(self):
        for name in ("think", "promise", "order"):
            assert eval_m(parse_formula(f"[{name}](p)"), {"p": 1}) == HALF

    def test_missing_atom(self):
        with pytest.raises(MissingAtom):
            eval_m(parse_formula("p & q"), {"p": 1})

    def test_bad_atom_value(self):
        with pytest.raises(ValueError):
            eval_m(parse_formula("p"), {"p": 2})

    def test_acts_resolve_through_definitions(self):
        result = parse("act x = [think](p); x -> p")
        assert eval_m(result.formula, {"p": 1}, result.definitions) == ONE

    def test_cyclic_act_rejected(self):
        from illoc.syntax import CyclicAct

        result = parse("act x = [think](~x); x")
        with pytest.raises(CyclicAct):
            eval_m(result.formula, {}, result.definitions)

    def test_agrees_with_classical_semantics_when_force_free(self):
        rng = random.Random(7)
        for _ in range(300):
            f = random_force_free(rng, depth=4, atoms=("p", "q", "r"))
            for bits in itertools.product((0, 1), repeat=3):
                e = dict(zip(("p", "q", "r"), bits))
                value = eval_m(f, e)
                assert value in (ONE, ZERO)
                assert (value == ONE) == _classical(f, e)


def _classical(f, e):
    from illoc.syntax import And, Atom, Implies, Not, Or

    if isinstance(f, Atom):
        return bool(e[f.name])
    if isinstance(f, Not):
        return not _classical(f.body, e)
    if isinstance(f, And):
        return _classical(f.left, e) and _classical(f.right, e)
    if isinstance(f, Or):
        return _classical(f.left, e) or _classical(f.right, e)
    if isinstance(f, Implies):
        return (not _classical(f.left, e)) or _classical(f.right, e)
    raise TypeError(f)


class TestProperties:
    def test_report_shape(self):
        report = check_matrix_properties()
        assert [p.prop_id for p in report] == [
            "force-deflates",
            "neg-force-deflates",
            "and-superdistributes",
            "or-subdistributes",
            "imp-superdistributes",
            "force-idempotent",
            "force-neg-commutes",
        ]
        assert [p.checked for p in report] == [4, 4, 16, 16, 16, 4, 4]

    def test_six_of_seven_hold(self):
        # The implication law fails at exactly (1/2, 0) under the matrix's
        # own tables: F(1/2 -> 0) = F(1/2) = 1/2 while F(1/2) -> F(0) =
        # 1/2 -> -1/2 = 0. Everything else holds on every tuple.
        report = {p.prop_id: p for p in check_matrix_properties()}
        for prop_id, prop in report.items():
            if prop_id == "imp-superdistributes":
                assert not prop.holds
                assert prop.violations == ((HALF, ZERO),)
            else:
                assert prop.holds, prop_id
                assert prop.violations == ()

    def test_and_superdistribution_is_strict(self):
        lhs = and4(force4(ONE), force4(ZERO))
        rhs = force4(and4(ONE, ZERO))
        assert lhs == HALF and rhs == NEG and lhs > rhs

    def test_classical_restriction_turns_laws_into_equalities(self):
        for a, b in itertools.product((ONE, ZERO), repeat=2):
            assert a == a  # force removed: (1) and (2) are trivial identities
            assert and4(a, b) == and4(a, b)
            assert or4(a, b) == or4(a, b)
            assert imp4(a, b) == imp4(a, b)


class TestTautologies:
    def test_force_detachment(self):
        assert is_tautology_m(parse_formula("[think](p) -> p")).status == "tautology"

    def test_converse_refuted(self):
        result = is_tautology_m(parse_formula("p -> [think](p)"))
        assert result.status == "refuted"
        assert result.witness == {"p": 0}
        assert result.witness_value == HALF
        # the intuitive witness refutes as well
        assert eval_m(parse_formula("p -> [think](p)"), {"p": 1}) == HALF

    def test_negative_detachment(self):
        assert is_tautology_m(parse_formula("~[think](p) -> ~p")).status == "tautology"
        result = is_tautology_m(parse_formula("~p -> ~[think](p)"))
        assert result.status == "refuted"
        assert result.witness == {"p": 0}
        assert result.witness_value == HALF

    def test_modus_ponens_warps_under_force(self):
        plain = is_tautology_m(parse_formula("(p & (p -> q)) -> q"))
        assert plain.status == "tautology"
        warped = is_tautology_m(
            parse_formula("([think](p) & [think](p -> q)) -> [think](q)")
        )
        assert warped.status == "refuted"
        assert warped.witness == {"p": 0, "q": 0}
        assert warped.witness_value == ZERO

    def test_witness_is_first_in_counting_order(self):
        result = is_tautology_m(parse_formula("p | q"))
        assert result.witness == {"p": 0, "q": 0}

    def test_cyclic_act_rejected(self):
        from illoc.syntax import CyclicAct

        defs = parse("act x = [think](~x);").definitions
        with pytest.raises(CyclicAct):
            is_tautology_m(ActRef("x"), defs)


class TestContradictionProfile:
    def test_conjunction_with_negation_is_not_minimal(self):
        for row in contradiction_profile():
            assert row.conjunction >= row.performed_conjunction
            assert row.split_performance >= row.performed_conjunction

    def test_minimum_is_reached_by_performed_contradiction(self):
        values = {row.performed_conjunction for row in contradiction_profile()}
        assert NEG in values

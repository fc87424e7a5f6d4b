import itertools

import pytest

from illoc.boolalg import AlgebraSpec, meet
from illoc.hyper import enumerate_nonstandard, hyper, square_report, standard
from illoc.matrix_mb import MBMode, StandardAssignment
from illoc.opposition import (
    CheckSpace,
    criterion_holds,
    entails,
    laws_report,
    square_for_force,
)
from illoc.syntax import parse_formula

K2 = AlgebraSpec(("a", "b"))
M_SPACE = CheckSpace(matrix="m")
MB_SPACE = CheckSpace(matrix="mb", algebra=K2, mode=MBMode.POINTWISE)


def el(*names):
    return K2.element(names)


class TestEntailment:
    def test_performance_entails_content(self):
        assert entails(parse_formula("[think](p)"), parse_formula("p"), M_SPACE).holds

    def test_content_does_not_entail_performance(self):
        result = entails(parse_formula("p"), parse_formula("[think](p)"), M_SPACE)
        assert not result.holds
        assert result.witness == {"atom_values": {"p": 0}}
        assert (result.left_value, result.right_value) == ("0", "-1/2")
        # the intuitive witness p=1 violates the order as well (1 vs 1/2)
        from illoc.matrix_m import eval_m

        assert str(eval_m(parse_formula("p"), {"p": 1})) == "1"
        assert str(eval_m(parse_formula("[think](p)"), {"p": 1})) == "1/2"

    @pytest.mark.parametrize(
        "text", ["p", "[think](p)", "p -> q", "~[think](p & q)"]
    )
    def test_reflexive(self, text):
        f = parse_formula(text)
        assert entails(f, f, M_SPACE).holds

    def test_transitive_on_samples(self):
        pool = [
            parse_formula(text)
            for text in (
                "[think](p)",
                "p",
                "p | q",
                "[think](p & q)",
                "[think](p) & [think](q)",
                "~[think](p) -> ~p",
            )
        ]
        held = {
            (i, j): entails(f1, f2, M_SPACE).holds
            for i, f1 in enumerate(pool)
            for j, f2 in enumerate(pool)
        }
        for i in range(len(pool)):
            assert held[(i, i)]
            for j in range(len(pool)):
                for k in range(len(pool)):
                    if held[(i, j)] and held[(j, k)]:
                        assert held[(i, k)]

    def test_mb_detachment_entails(self):
        assert entails(parse_formula("[f](p)"), parse_formula("p"), MB_SPACE).holds

    def test_mb_reports_witness_valuations(self):
        result = entails(parse_formula("p"), parse_formula("[f](p)"), MB_SPACE)
        assert not result.holds
        assert "atom_values" in result.witness and "generators" in result.witness


class TestSquareMatrixM:
    def test_think_satisfies_the_whole_square(self):
        report = square_for_force("think", "p", M_SPACE)
        assert report.square_holds and report.criterion_holds
        assert report.contrary.holds
        assert report.contradictory.holds
        assert report.subcontrary.holds
        assert report.subaltern_left.holds and report.subaltern_right.holds

    def test_criterion_quantifies_both_assignments(self):
        assert criterion_holds("think", M_SPACE)

    def test_laws_evaluate_to_the_unsuccessful_value(self):
        report = laws_report("think", M_SPACE)
        assert [row.label for row in report.rows] == ["p=0", "p=1"]
        for row in report.rows:
            assert row.excluded_middle == "-1/2"
            assert row.contrariety == "-1/2"
        assert report.values_coincide
        assert not report.excluded_middle_always_designated
        assert not report.contrariety_always_designated


class TestSquareMatrixMB:
    def test_disjoint_generator_gives_full_square(self):
        report = square_for_force("f", "p", MB_SPACE, generator=hyper(el("a"), K2.bottom()))
        assert report.square_holds
        assert all(
            check.holds
            for check in (
                report.contrary,
                report.contradictory,
                report.subcontrary,
                report.subaltern_left,
                report.subaltern_right,
            )
        )

    def test_overlapping_generator_breaks_the_square(self):
        report = square_for_force("f", "p", MB_SPACE, generator=hyper(K2.top(), el("b")))
        assert not report.square_holds
        assert not report.contrary.holds
        assert report.contradictory.holds

    def test_standard_generator_rejected(self):
        with pytest.raises(StandardAssignment):
            square_for_force("f", "p", MB_SPACE, generator=standard(el("a")))
        with pytest.raises(StandardAssignment):
            criterion_holds("f", MB_SPACE, generator=standard(el("a")))

    def test_free_mode_rejected(self):
        free_space = CheckSpace(matrix="mb", algebra=K2, mode=MBMode.FREE)
        with pytest.raises(ValueError):
            square_for_force("f", "p", free_space)

    def test_criterion_is_component_disjointness(self):
        for g in enumerate_nonstandard(K2):
            expected = meet(g.on_true, g.on_false) == K2.bottom()
            assert criterion_holds("f", MB_SPACE, generator=g) == expected

    def test_quantified_report_fails_overall(self):
        report = square_for_force("f", "p", MB_SPACE)
        assert not report.square_holds  # some generator overlaps
        assert report.contradictory.holds  # complement laws never fail
        assert len(report.laws.rows) == 12

    def test_square_equivalence_over_all_generators(self):
        for g in enumerate_nonstandard(K2):
            report = square_for_force("f", "p", MB_SPACE, generator=g)
            hyper_side = square_report(g)
            bottom = meet(g.on_true, g.on_false) == K2.bottom()
            relations = (
                report.contrary.holds
                and report.subcontrary.holds
                and report.subaltern_left.holds
                and report.subaltern_right.holds
            )
            assert report.criterion_holds == report.square_holds == bottom
            assert relations == bottom
            assert hyper_side.holds == bottom


class TestLawsMatrixMB:
    def test_values_are_complement_of_component_join(self):
        from illoc.boolalg import complement, join

        for g in enumerate_nonstandard(K2):
            report = laws_report("f", MB_SPACE, generator=g)
            row = report.rows[0]
            expected = standard(complement(join(g.on_true, g.on_false)))
            assert row.excluded_middle == str(expected)
            assert row.contrariety == str(expected)
            assert report.values_coincide

    def test_concrete_example_not_designated(self):
        report = laws_report("f", MB_SPACE, generator=hyper(el("a"), K2.bottom()))
        assert report.rows[0].excluded_middle == "*{b}"
        assert not report.rows[0].excluded_middle_designated

    def test_never_designated_across_generators(self):
        report = laws_report("f", MB_SPACE)
        assert not report.excluded_middle_always_designated
        assert not report.contrariety_always_designated
        assert report.values_coincide


class TestSpaceValidation:
    def test_mb_requires_algebra(self):
        with pytest.raises(ValueError):
            CheckSpace(matrix="mb")

    def test_unknown_matrix(self):
        with pytest.raises(ValueError):
            CheckSpace(matrix="mc")

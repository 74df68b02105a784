from fractions import Fraction

import pytest

from prdual import (
    DimensionError,
    INTEGERS,
    NATURALS,
    QMatrix,
    QVector,
    Q_ALL,
    Q_POSITIVE,
    SizeError,
    SpecError,
    d_n,
    d_z,
    find_monochromatic,
    generated,
    group_of,
    image_solutions,
    image_supports,
    kernel_solutions,
    kernel_supports,
    membership,
    parse_semigroup,
    window_pr,
)

SCHUR = QMatrix.from_rows([[1, 1, -1]], cols=3)
AP4 = QMatrix.from_rows([[1, 0], [1, 1], [1, 2], [1, 3]], cols=2)
VDW_INCREMENT = QMatrix.from_rows(
    [[1, -2, 1, 0, 0], [0, 1, -2, 1, 0], [1, -1, 0, 0, 1]], cols=5
)


class TestMembership:
    def test_basics(self):
        assert membership(NATURALS, 3)
        assert not membership(NATURALS, 0)
        assert not membership(d_z(2), 3)
        assert membership(d_z(2), -4)
        assert membership(INTEGERS, -7)
        assert not membership(INTEGERS, Fraction(1, 2))
        assert membership(Q_ALL, Fraction(-3, 7))
        assert not membership(Q_POSITIVE, 0)

    def test_numerical_semigroup(self):
        s = generated(2, 3)
        assert not membership(s, 1)
        assert membership(s, 7)
        assert membership(s, 2) and membership(s, 3)
        assert not membership(s, Fraction(5, 2))

    def test_rational_generators(self):
        s = generated(Fraction(1, 2), Fraction(1, 3))
        assert membership(s, Fraction(5, 6))  # 1/2 + 1/3
        assert membership(s, 1)  # 2 * (1/2)
        assert not membership(s, Fraction(1, 6))

    def test_min_positive_integer(self):
        assert NATURALS.min_positive_integer() == 1
        assert d_z(2).min_positive_integer() == 2
        assert d_z(Fraction(2, 3)).min_positive_integer() == 2
        assert generated(2, 3).min_positive_integer() == 2
        assert generated(4, 6).min_positive_integer() == 4

    def test_group_of(self):
        assert group_of(NATURALS) == INTEGERS
        assert group_of(d_n(3)) == d_z(3)
        assert group_of(generated(2, 3)) == INTEGERS
        assert group_of(generated(4, 6)) == d_z(2)
        assert group_of(Q_POSITIVE) == Q_ALL

    def test_parse_round_trip(self):
        for literal in ("Q", "Q+", "Z", "N", "2Z", "2/3Z", "5N", "gen(2,3)"):
            spec = parse_semigroup(literal)
            assert parse_semigroup(str(spec)) == spec
        assert parse_semigroup("group(gen(4,6))") == d_z(2)
        with pytest.raises(SpecError):
            parse_semigroup("foo")
        with pytest.raises(SpecError):
            parse_semigroup("-2Z")


class TestKernelSolutions:
    def test_schur_window_three(self):
        sols = kernel_solutions(SCHUR, 3)
        assert sols == [QVector([1, 1, 2]), QVector([1, 2, 3]), QVector([2, 1, 3])]

    def test_positive_row_has_no_solutions(self):
        assert kernel_solutions(QMatrix.from_rows([[1, 1]], cols=2), 5) == []

    def test_vdw_increment_contains_progression(self):
        sols = kernel_solutions(VDW_INCREMENT, 9)
        assert QVector([1, 2, 3, 4, 1]) in sols

    def test_caps(self):
        with pytest.raises(SizeError):
            kernel_solutions(QMatrix.zero(1, 7), 3)
        with pytest.raises(SizeError):
            kernel_solutions(SCHUR, 31)

    def test_symmetry_closure(self):
        # swapping the two summands of a Schur triple is again a solution
        sols = set(kernel_solutions(SCHUR, 6))
        for x in sols:
            assert QVector([x[1], x[0], x[2]]) in sols


class TestImageSolutions:
    def test_progression_preimage(self):
        pairs = image_solutions(AP4, 9, 1)
        assert (QVector([1, 2]), QVector([1, 3, 5, 7])) in pairs

    def test_preimages_have_nonzero_entries(self):
        pairs = image_solutions(AP4, 9, 1)
        assert all(all(e != 0 for e in x) for x, _ in pairs)
        assert all(
            all(e.denominator == 1 and 1 <= e <= 9 for e in img) for _, img in pairs
        )

    def test_half_integer_grid(self):
        pairs = image_solutions(QMatrix.from_rows([[2]], cols=1), 4, 2)
        assert [x.entries[0] for x, _ in pairs] == [
            Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2)
        ]
        assert [img.entries[0] for _, img in pairs] == [1, 2, 3, 4]

    def test_zero_row_empty(self):
        assert image_solutions(QMatrix.zero(1, 2), 5, 1) == []

    def test_lexicographic_order(self):
        pairs = image_solutions(AP4, 9, 1)
        xs = [tuple(x.entries) for x, _ in pairs]
        assert xs == sorted(xs)

    def test_caps(self):
        with pytest.raises(SizeError):
            image_solutions(QMatrix.zero(1, 5), 3, 1)


class TestWindowPr:
    def test_schur_window_five_forced(self):
        assert window_pr(5, kernel_supports(SCHUR, 5), 2).verdict is True

    def test_schur_window_four_countermodel(self):
        witness = window_pr(4, kernel_supports(SCHUR, 4), 2)
        assert witness.verdict is False
        assert witness.bad_coloring == {1: 0, 2: 1, 3: 1, 4: 0}

    def test_empty_supports(self):
        witness = window_pr(3, [], 2)
        assert witness.verdict is False
        assert witness.bad_coloring == {1: 0, 2: 0, 3: 0}

    def test_monotone_in_window(self):
        verdicts = [
            window_pr(n, kernel_supports(SCHUR, n), 2).verdict for n in (4, 5, 6)
        ]
        assert verdicts == [False, True, True]

    def test_parallel_matches_serial(self):
        for n in (4, 5, 6):
            supports = kernel_supports(SCHUR, n)
            serial = window_pr(n, supports, 2)
            parallel = window_pr(n, supports, 2, parallel=True)
            assert serial == parallel

    def test_three_colors(self):
        # Schur triples survive 3-colorings only in larger windows
        assert window_pr(9, kernel_supports(SCHUR, 9), 3).verdict is False

    def test_support_outside_window_rejected(self):
        with pytest.raises(DimensionError):
            window_pr(3, [{1, 5}], 2)

    def test_space_cap(self):
        with pytest.raises(SizeError):
            window_pr(17, [{1, 2}], 2)
        with pytest.raises(SizeError):
            window_pr(11, [{1, 2}], 3)


class TestFindMonochromatic:
    def test_single_color_finds_least(self):
        coloring = {i: 0 for i in range(1, 5)}
        assert find_monochromatic(SCHUR, coloring, "kernel") == QVector([1, 1, 2])

    def test_countermodel_coloring_has_none(self):
        coloring = {1: 0, 2: 1, 3: 1, 4: 0}
        assert find_monochromatic(SCHUR, coloring, "kernel") is None

    def test_image_mode_parity(self):
        parity = {i: i % 2 for i in range(1, 10)}
        assert find_monochromatic(AP4, parity, "image") == QVector([1, 2])

    def test_agreement_with_window_countermodel(self):
        witness = window_pr(4, kernel_supports(SCHUR, 4), 2)
        assert find_monochromatic(SCHUR, dict(witness.bad_coloring), "kernel") is None

    def test_bad_mode(self):
        with pytest.raises(SpecError):
            find_monochromatic(SCHUR, {1: 0}, "weird")

    def test_partial_coloring_rejected(self):
        with pytest.raises(DimensionError):
            find_monochromatic(SCHUR, {1: 0, 3: 0}, "kernel")


def test_image_supports_are_image_entry_sets():
    sups = image_supports(AP4, 9, 1)
    assert frozenset({1, 3, 5, 7}) in sups

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catalanimal_lab.shapes import (
    Box,
    SkewShape,
    SkewTuple,
    diagonal_data,
    enumerate_ssyt,
    gamma_of,
    m_stretch,
    magic_number,
    n_prime,
    rotate180,
    rotate_tuple,
)


def partition_shape(*parts):
    return SkewShape.from_partition(parts)


partitions = st.lists(st.integers(1, 4), min_size=1, max_size=4).map(
    lambda xs: tuple(sorted(xs, reverse=True))
)


def skew_shapes():
    def build(beta, cuts):
        alpha = tuple(min(c, b) for c, b in zip(sorted(cuts, reverse=True), beta))
        return SkewShape(alpha, beta)

    return st.tuples(
        partitions, st.lists(st.integers(0, 3), min_size=4, max_size=4)
    ).map(lambda t: build(t[0], t[1]))


class TestShapeBasics:
    def test_partition_boxes(self):
        nu = partition_shape(3, 2)
        assert set(nu.boxes()) == {(1, 1), (2, 1), (3, 1), (1, 2), (2, 2)}
        assert nu.size == 5
        assert nu.num_rows == 2

    def test_row_validation(self):
        with pytest.raises(ValueError):
            SkewShape((2,), (1,))
        with pytest.raises(ValueError):
            SkewShape((0, 0), (1,))

    def test_contains(self):
        nu = SkewShape((1, 0), (3, 2), y0=5)
        assert nu.contains(2, 6)
        assert not nu.contains(1, 6)
        assert nu.contains(1, 7)
        assert not nu.contains(1, 8)

    def test_empty_rows_allowed(self):
        nu = SkewShape((2, 0), (2, 1))
        assert nu.size == 1
        assert nu.boxes() == [(1, 2)]
        assert nu.num_rows == 2

    def test_translate_shifts_contents(self):
        nu = partition_shape(2, 1)
        assert gamma_of(nu.translate(dx=1)) == gamma_of(nu)
        moved = nu.translate(dx=2, dy=-1)
        assert sorted(moved.content_counts()) == [
            c + 3 for c in sorted(nu.content_counts())
        ]


class TestGamma:
    def test_gamma_32(self):
        assert gamma_of(partition_shape(3, 2)) == (1, 2, 1, 1)

    def test_gamma_single_box(self):
        assert gamma_of(partition_shape(1)) == (1,)

    def test_gamma_single_row(self):
        assert gamma_of(partition_shape(4)) == (1, 1, 1, 1)

    def test_gamma_empty(self):
        assert gamma_of(SkewShape((), ())) == ()

    def test_gamma_staircase(self):
        assert gamma_of(partition_shape(2, 1)) == (1, 1, 1)
        assert gamma_of(partition_shape(3, 3)) == (1, 2, 2, 1)

    @given(partitions)
    def test_gamma_sums_to_size(self, mu):
        nu = SkewShape.from_partition(mu)
        assert sum(gamma_of(nu)) == nu.size


class TestNPrime:
    def test_examples(self):
        assert n_prime((1, 2, 2, 1)) == 2
        assert n_prime((1, 1, 1, 1)) == 0
        assert n_prime((3,)) == 3
        assert n_prime(()) == 0


class TestMagicNumber:
    def test_single_row(self):
        for k in range(1, 6):
            assert magic_number(partition_shape(k)) == k - 1

    def test_single_column(self):
        for k in range(1, 6):
            assert magic_number(SkewShape.from_partition((1,) * k)) == 0

    def test_hook(self):
        assert magic_number(partition_shape(2, 1)) == 1

    @given(partitions, st.integers(1, 3))
    @settings(max_examples=50, deadline=None)
    def test_stretch_invariance(self, mu, m):
        nu = SkewShape.from_partition(mu)
        assert magic_number(m_stretch(nu, m)) == magic_number(nu)

    @given(partitions)
    def test_rotation_invariance(self, mu):
        assert magic_number(rotate180(mu)) == magic_number(
            SkewShape.from_partition(mu)
        )


class TestMStretch:
    def test_m1_identity(self):
        nu = partition_shape(3, 1)
        assert m_stretch(nu, 1) == nu

    def test_32_times_3_boxes(self):
        nu3 = m_stretch(partition_shape(3, 2), 3)
        expected = (
            {(1, y) for y in range(1, 7)}
            | {(2, y) for y in range(-1, 5)}
            | {(3, y) for y in range(-3, 0)}
        )
        assert set(nu3.boxes()) == expected
        assert nu3.size == 15

    def test_32_times_3_gamma(self):
        nu3 = m_stretch(partition_shape(3, 2), 3)
        assert gamma_of(nu3) == (1, 1, 1, 2, 2, 2, 1, 1, 1, 1, 1, 1)

    @given(partitions, st.integers(1, 3))
    @settings(max_examples=50, deadline=None)
    def test_gamma_repetition_law(self, mu, m):
        nu = SkewShape.from_partition(mu)
        expected = tuple(
            g for g in gamma_of(nu) for _ in range(m)
        )
        assert gamma_of(m_stretch(nu, m)) == expected

    @given(partitions, st.integers(1, 3))
    @settings(max_examples=50, deadline=None)
    def test_size_law(self, mu, m):
        nu = SkewShape.from_partition(mu)
        assert m_stretch(nu, m).size == m * nu.size


class TestRotate180:
    def test_single_box(self):
        nu = rotate180((1,))
        assert set(nu.boxes()) == {(1, 1)}

    def test_21(self):
        nu = rotate180((2, 1))
        assert nu.alpha == (1, 0)
        assert nu.beta == (2, 2)
        assert set(nu.boxes()) == {(2, 1), (1, 2), (2, 2)}

    @given(partitions)
    def test_gamma_reversal(self, mu):
        nu = SkewShape.from_partition(mu)
        assert gamma_of(rotate180(mu)) == tuple(reversed(gamma_of(nu)))

    @given(partitions)
    def test_size_preserved(self, mu):
        assert rotate180(mu).size == sum(mu)

    @given(partitions)
    def test_involutive_box_set(self, mu):
        # rotating the rotation inside its own bounding rectangle gives back mu
        nu = rotate180(mu)
        width = mu[0]
        ell = len(mu)
        back = {(width + 1 - x, ell + 1 - y) for x, y in nu.boxes()}
        assert back == set(SkewShape.from_partition(mu).boxes())


class TestDiagonalData:
    def test_single_row(self):
        data = diagonal_data(partition_shape(3))
        assert [d.content for d in data] == [0, 1, 2]
        assert [d.has_row_start for d in data] == [True, False, False]
        assert [d.has_row_end for d in data] == [False, False, True]

    def test_22(self):
        data = diagonal_data(partition_shape(2, 2))
        assert [(d.content, d.length) for d in data] == [(-1, 1), (0, 2), (1, 1)]
        assert [d.has_row_start for d in data] == [True, True, False]
        assert [d.has_row_end for d in data] == [False, True, True]


class TestReadingOrder:
    def test_sorted_by_adjusted_content(self):
        nu = SkewTuple.of(partition_shape(2, 1), partition_shape(3))
        contents = [b.adjusted_content for b in nu.boxes()]
        assert all(a <= b for a, b in zip(contents, contents[1:]))

    def test_diagonal_runs_southwest_to_northeast(self):
        nu = SkewTuple.of(partition_shape(2, 2))
        diag = [b for b in nu.boxes() if b.content == 0]
        assert [(b.x, b.y) for b in diag] == [(1, 1), (2, 2)]

    def test_component_tiebreak(self):
        nu = SkewTuple.of(partition_shape(1), partition_shape(1))
        assert [b.component for b in nu.boxes()] == [0, 1]


class TestAttackingPairs:
    def test_single_component_empty(self):
        nu = SkewTuple.of(partition_shape(3, 2))
        assert nu.attacking_pairs() == []

    def test_two_single_boxes(self):
        nu = SkewTuple.of(partition_shape(1), partition_shape(1))
        pairs = nu.attacking_pairs()
        assert len(pairs) == 1
        a, b = pairs[0]
        assert (a.component, b.component) == (0, 1)

    def test_content_plus_one_lower_component(self):
        # box of content 0 in component 2 attacks box of content 1 in component 1
        nu = SkewTuple.of(
            SkewShape((0,), (1,), y0=-1),  # one box at (1,0), content 1
            partition_shape(1),  # one box at (1,1), content 0
        )
        pairs = nu.attacking_pairs()
        assert len(pairs) == 1
        a, b = pairs[0]
        assert (a.component, a.content) == (1, 0)
        assert (b.component, b.content) == (0, 1)

    def test_gap_in_valid_range(self):
        for a, b in SkewTuple.of(
            partition_shape(2, 1), partition_shape(2)
        ).attacking_pairs():
            diff = b.adjusted_content - a.adjusted_content
            assert EpsZero < diff < EpsOne


from catalanimal_lab.exactnum import EpsReal  # noqa: E402

EpsZero = EpsReal(0)
EpsOne = EpsReal(1)


class TestRotationInvariance:
    @staticmethod
    def mapped(nu, j):
        k = len(nu.components)
        boxes = []
        for b in nu.boxes():
            if b.component >= j:
                boxes.append(Box(b.component - j, b.x + 1, b.y))
            else:
                boxes.append(Box(b.component + k - j, b.x, b.y))
        return boxes

    @given(st.lists(skew_shapes(), min_size=1, max_size=3), st.data())
    @settings(max_examples=60, deadline=None)
    def test_reading_order_and_attacks_preserved(self, comps, data):
        nu = SkewTuple(tuple(comps))
        j = data.draw(st.integers(0, len(comps)))
        rotated = rotate_tuple(nu, j)
        mapped = self.mapped(nu, j)
        assert mapped == rotated.boxes()
        rot_pairs = set(rotated.attacking_pairs())
        box_map = dict(zip(nu.boxes(), mapped))
        assert {
            (box_map[a], box_map[b]) for a, b in nu.attacking_pairs()
        } == rot_pairs


class TestEnumerateSSYT:
    def test_single_box(self):
        nu = SkewTuple.of(partition_shape(1))
        assert len(list(enumerate_ssyt(nu, 3))) == 3

    def test_row_positive(self):
        nu = SkewTuple.of(partition_shape(2))
        fillings = list(enumerate_ssyt(nu, 2))
        letters = sorted(tuple(sorted(f.values())) for f in fillings)
        assert letters == [(1, 1), (1, 2), (2, 2)]

    def test_row_negative(self):
        nu = SkewTuple.of(partition_shape(2))
        fillings = list(enumerate_ssyt(nu, 2, negative=True))
        assert len(fillings) == 1

    def test_21_positive_count(self):
        nu = SkewTuple.of(partition_shape(2, 1))
        assert len(list(enumerate_ssyt(nu, 3))) == 8

    def test_column_strictness(self):
        nu = SkewTuple.of(SkewShape.from_partition((1, 1)))
        fillings = list(enumerate_ssyt(nu, 2))
        assert len(fillings) == 1
        assert sorted(fillings[0].values()) == [1, 2]

    def test_tuple_is_product(self):
        nu = SkewTuple.of(partition_shape(1), partition_shape(2))
        assert len(list(enumerate_ssyt(nu, 2))) == 2 * 3

    @given(partitions, st.integers(1, 3))
    @settings(max_examples=30, deadline=None)
    def test_negative_counts_match_conjugate(self, mu, n):
        from catalanimal_lab.exactnum import conjugate

        neg = list(
            enumerate_ssyt(SkewTuple.of(SkewShape.from_partition(mu)), n, True)
        )
        pos = list(
            enumerate_ssyt(
                SkewTuple.of(SkewShape.from_partition(conjugate(mu))), n
            )
        )
        assert len(neg) == len(pos)

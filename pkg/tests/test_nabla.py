"""Tests for the modified Macdonald basis and the diagonal eigenoperator.

Cross-checks: hand-expanded two- and three-box pins; the leading and
column Schur coefficients in closed form; conjugating the partition
against swapping q and t; the q = t = 1 evaluation against a brute
standard-tableau count; the eigenoperator against its defining diagonal
action and against the signed lattice-path series at random rational
points.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catalanimal_lab.exactnum import QtLaurent, conjugate, partitions
from catalanimal_lab.nabla import (
    SymFnQT,
    mn_lw_series,
    modified_macdonald,
    n_stat,
    nabla_power,
    schur_fn,
    verify_mn_lw,
)

ONE = QtLaurent.one()
Q = QtLaurent.q_power(1)
T = QtLaurent.term(1, 0, 1)

SPECS = [
    (Fraction(2), Fraction(3)),
    (Fraction(3, 2), Fraction(5, 7)),
    (Fraction(7, 4), Fraction(2, 9)),
]


def syt_count(lam):
    """Standard tableaux of a given shape, by removing corners."""
    lam = [x for x in lam if x]
    if not lam:
        return 1
    total = 0
    for i in range(len(lam)):
        if i == len(lam) - 1 or lam[i] > lam[i + 1]:
            smaller = lam[:i] + [lam[i] - 1] + lam[i + 1 :]
            total += syt_count(smaller)
    return total


def small_partitions(max_size):
    for n in range(max_size + 1):
        yield from partitions(n)


class TestModifiedMacdonald:
    def test_empty_and_single_box(self):
        assert modified_macdonald(()) == SymFnQT(0, {(): ONE})
        assert modified_macdonald((1,)) == SymFnQT(1, {(1,): ONE})

    def test_two_box_pins(self):
        assert modified_macdonald((2,)).coeffs == {(2,): ONE, (1, 1): Q}
        assert modified_macdonald((1, 1)).coeffs == {(2,): ONE, (1, 1): T}

    def test_three_box_pin(self):
        got = modified_macdonald((2, 1)).coeffs
        assert got == {(3,): ONE, (2, 1): Q + T, (1, 1, 1): Q * T}

    def test_leading_coefficient_is_one(self):
        for mu in small_partitions(5):
            got = modified_macdonald(mu)
            assert got.coeffs[(sum(mu),) if mu else ()] == ONE

    def test_column_coefficient(self):
        for mu in small_partitions(5):
            if not mu:
                continue
            got = modified_macdonald(mu)
            want = QtLaurent.qt_power(n_stat(conjugate(mu)), n_stat(mu))
            assert got.coeffs[(1,) * sum(mu)] == want

    def test_conjugate_swaps_q_and_t(self):
        for mu in small_partitions(4):
            got = modified_macdonald(mu)
            flipped = {lam: c.swap_qt() for lam, c in got.coeffs.items()}
            assert flipped == modified_macdonald(conjugate(mu)).coeffs

    def test_coefficients_are_natural(self):
        for mu in small_partitions(5):
            got = modified_macdonald(mu)
            assert all(c.is_natural() for c in got.coeffs.values())

    def test_q_t_one_counts_tableaux(self):
        one = Fraction(1)
        for mu in small_partitions(4):
            got = modified_macdonald(mu)
            for lam, c in got.coeffs.items():
                assert c.evaluate(one, one) == syt_count(list(lam))

    def test_degree_six_within_default_bound(self):
        got = modified_macdonald((3, 2, 1))
        assert got.coeffs[(6,)] == ONE
        assert all(c.is_natural() for c in got.coeffs.values())

    def test_degree_bound_enforced(self):
        with pytest.raises(ValueError, match="bound"):
            modified_macdonald((7,))
        with pytest.raises(ValueError, match="bound"):
            modified_macdonald((3,), bound=2)

    @pytest.mark.parametrize("spec", SPECS)
    def test_specialized_mode_evaluates_coefficients(self, spec):
        for mu in small_partitions(3):
            sym = modified_macdonald(mu)
            got = modified_macdonald(mu, spec=spec)
            assert got.spec == spec
            want = {
                lam: c.evaluate(*spec)
                for lam, c in sym.coeffs.items()
                if c.evaluate(*spec)
            }
            assert got.coeffs == want


class TestSymFnQT:
    def test_rejects_mixed_degrees(self):
        with pytest.raises(ValueError, match="degree"):
            SymFnQT(2, {(1,): ONE})

    def test_specialize_drops_zeros(self):
        f = SymFnQT(1, {(1,): Q - T})
        g = f.specialize(Fraction(2), Fraction(2))
        assert g == SymFnQT(1, {}, (Fraction(2), Fraction(2)))

    def test_specialize_twice_rejected(self):
        f = schur_fn((1,), spec=(Fraction(2), Fraction(3)))
        with pytest.raises(ValueError, match="specialized"):
            f.specialize(Fraction(2), Fraction(3))

    def test_schur_fn_modes(self):
        assert schur_fn((2, 1, 0)) == SymFnQT(3, {(2, 1): ONE})
        got = schur_fn((2, 1), spec=(2, 3))
        assert got.coeffs == {(2, 1): Fraction(1)}
        assert got.spec == (Fraction(2), Fraction(3))


class TestNablaPower:
    def test_requires_specialization(self):
        with pytest.raises(ValueError, match="specialization"):
            nabla_power(schur_fn((2, 1)), 1)

    def test_power_zero_is_identity(self):
        f = schur_fn((2, 1))
        assert nabla_power(f, 0) == f

    def test_fixes_single_box(self):
        for spec in SPECS:
            f = schur_fn((1,), spec=spec)
            assert nabla_power(f, 1) == f

    @pytest.mark.parametrize("spec", SPECS)
    def test_eigenvector_relation(self, spec):
        q0, t0 = spec
        for mu in small_partitions(4):
            if not mu:
                continue
            h = modified_macdonald(mu, spec=spec)
            eig = t0 ** n_stat(mu) * q0 ** n_stat(conjugate(mu))
            want = {lam: eig * c for lam, c in h.coeffs.items()}
            assert nabla_power(h, 1).coeffs == want

    def test_linear(self):
        spec = SPECS[1]
        f = schur_fn((2, 1), spec=spec)
        g = schur_fn((1, 1, 1), spec=spec)
        combined = SymFnQT(
            3,
            {(2, 1): Fraction(5), (1, 1, 1): Fraction(-2, 3)},
            f.spec,
        )
        got = nabla_power(combined, 1)
        a = nabla_power(f, 1).coeffs
        b = nabla_power(g, 1).coeffs
        want = {
            lam: Fraction(5) * a.get(lam, 0) - Fraction(2, 3) * b.get(lam, 0)
            for lam in set(a) | set(b)
        }
        assert got.coeffs == {k: v for k, v in want.items() if v}

    def test_negative_power_inverts(self):
        f = schur_fn((2, 2), spec=SPECS[0])
        assert nabla_power(nabla_power(f, 2), -2) == f

    def test_degree_bound_enforced(self):
        f = SymFnQT(7, {(7,): Fraction(1)}, (Fraction(2), Fraction(3)))
        with pytest.raises(ValueError, match="bound"):
            nabla_power(f, 1)


class TestLatticePathSeries:
    def test_single_box_series_is_schur(self):
        assert mn_lw_series((1,), 1) == SymFnQT(1, {(1,): ONE})
        assert mn_lw_series((1,), 3) == SymFnQT(1, {(1,): ONE})

    def test_two_box_column_series(self):
        got = mn_lw_series((1, 1), 1)
        assert got.coeffs == {(2,): ONE, (1, 1): Q + T}

    def test_column_series_has_natural_coefficients(self):
        for k in range(1, 5):
            got = mn_lw_series((1,) * k, 1)
            assert all(c.is_natural() for c in got.coeffs.values())

    def test_rejects_empty_shape(self):
        with pytest.raises(ValueError, match="box"):
            mn_lw_series((), 1)


class TestVerifyAgainstOperator:
    @pytest.mark.parametrize(
        "mu",
        [(1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1), (2, 2), (2, 1, 1)],
    )
    def test_first_power_matches(self, mu):
        assert verify_mn_lw(mu, 1) is None

    @pytest.mark.parametrize("mu", [(1,), (1, 1), (2,)])
    def test_second_power_matches(self, mu):
        assert verify_mn_lw(mu, 2) is None

    @given(st.integers(min_value=1, max_value=10 ** 6))
    @settings(max_examples=10, deadline=None)
    def test_seed_never_changes_the_verdict(self, seed):
        assert verify_mn_lw((2, 1), 1, specializations=1, seed=seed) is None

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError, match="bound"):
            verify_mn_lw((4, 3), 1)
        with pytest.raises(ValueError, match="positive"):
            verify_mn_lw((2, 1), 0)

    def test_detects_a_tampered_series(self):
        tampered = mn_lw_series((2,), 1)
        spoiled = SymFnQT(
            2, {(2,): tampered.coeffs[(2,)] + ONE}, tampered.spec
        )
        spec = (Fraction(2), Fraction(3))
        got = nabla_power(schur_fn((2,), spec=spec), 1)
        assert got != spoiled.specialize(*spec)

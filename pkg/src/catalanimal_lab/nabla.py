"""Modified Macdonald polynomials and the diagonal eigenoperator on them.

The polynomials are built from the classical fillings formula: a sum of
monomials over all assignments of positive integers to the boxes of a
partition diagram, weighted by q to the inversion statistic and t to the
major statistic.  A homogeneous symmetric function of degree n only needs
n variables, so the Schur expansion is exact.

The eigenoperator is applied through its diagonal action: expand the
input over the modified Macdonald basis by an exact rational linear solve
at a specialized (q, t) point, scale by the eigenvalues, and convert
back.  Several independent specializations substitute for symbolic
inversion of the transition matrix.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .dens import LWDenSpec, lw_den, rhs_nest_sum
from .exactnum import (
    MultiLaurent,
    QtLaurent,
    conjugate,
    normalize_partition,
    partitions,
    schur_expand,
)
from .shapes import SkewShape, gamma_of, magic_number, n_prime

Partition = tuple[int, ...]

DEGREE_BOUND = 6


@dataclass(frozen=True)
class SymFnQT:
    """Homogeneous symmetric function expanded in the Schur basis.

    In symbolic mode the coefficients are QtLaurent and ``spec`` is None;
    in specialized mode they are Fractions and ``spec`` records the
    rational (q, t) pair they were evaluated at.
    """

    degree: int
    coeffs: dict[Partition, object] = field(default_factory=dict)
    spec: tuple[Fraction, Fraction] | None = None

    def __post_init__(self) -> None:
        for lam in self.coeffs:
            if sum(lam) != self.degree:
                raise ValueError(
                    f"partition {lam} does not have degree {self.degree}"
                )

    def specialize(self, q0, t0) -> "SymFnQT":
        if self.spec is not None:
            raise ValueError("already specialized")
        q0, t0 = Fraction(q0), Fraction(t0)
        coeffs = {}
        for lam, c in self.coeffs.items():
            val = c.evaluate(q0, t0)
            if val:
                coeffs[lam] = val
        return SymFnQT(self.degree, coeffs, (q0, t0))


def schur_fn(mu, spec=None) -> SymFnQT:
    """A single Schur function, optionally at a rational (q, t) point."""
    mu = normalize_partition(mu)
    if spec is None:
        return SymFnQT(sum(mu), {mu: QtLaurent.one()})
    q0, t0 = spec
    return SymFnQT(sum(mu), {mu: Fraction(1)}, (Fraction(q0), Fraction(t0)))


def n_stat(mu) -> int:
    """The partition statistic summing (i - 1) times the i-th part."""
    return sum(i * x for i, x in enumerate(normalize_partition(mu)))


# ---------------------------------------------------------------------------
# the fillings formula

_HT_CACHE: dict[Partition, SymFnQT] = {}


def _diagram_data(mu: Partition):
    """Reading-order cells, attacking index pairs, and descent data.

    Rows are indexed from the bottom and read top to bottom, left to
    right.  A cell attacks the cells to its right in its own row and the
    cells strictly to its left in the row below.  A descent cell (one
    whose value exceeds the value below it) contributes its arm to the
    inversion count and its leg plus one to the major statistic.
    """
    rows = len(mu)
    index = {}
    cells = []
    for i in range(rows - 1, -1, -1):
        for j in range(mu[i]):
            index[(i, j)] = len(cells)
            cells.append((i, j))
    attacks = []
    for i in range(rows):
        for j in range(mu[i]):
            for k in range(j + 1, mu[i]):
                attacks.append((index[(i, j)], index[(i, k)]))
        if i > 0:
            for k in range(mu[i]):
                for j in range(k):
                    attacks.append((index[(i, k)], index[(i - 1, j)]))
    descents = []
    for i in range(1, rows):
        for j in range(mu[i]):
            arm = mu[i] - 1 - j
            leg = sum(1 for i2 in range(i + 1, rows) if mu[i2] > j)
            descents.append((index[(i, j)], index[(i - 1, j)], arm, leg + 1))
    return cells, attacks, descents


def modified_macdonald(mu, spec=None, bound: int = DEGREE_BOUND) -> SymFnQT:
    """Schur expansion of the modified Macdonald polynomial of ``mu``."""
    mu = normalize_partition(mu)
    n = sum(mu)
    if n > bound:
        raise ValueError(f"degree {n} exceeds the bound {bound}")
    got = _HT_CACHE.get(mu)
    if got is None:
        if n == 0:
            got = SymFnQT(0, {(): QtLaurent.one()})
        else:
            cells, attacks, descents = _diagram_data(mu)
            terms: dict[tuple[int, ...], QtLaurent] = {}
            for vals in product(range(1, n + 1), repeat=n):
                invs = sum(1 for a, b in attacks if vals[a] > vals[b])
                maj = 0
                for a, b, arm, legp in descents:
                    if vals[a] > vals[b]:
                        invs -= arm
                        maj += legp
                exps = [0] * n
                for v in vals:
                    exps[v - 1] += 1
                key = tuple(exps)
                w = QtLaurent.qt_power(invs, maj)
                terms[key] = terms.get(key, QtLaurent.zero()) + w
            poly = MultiLaurent(n, terms)
            got = SymFnQT(n, dict(schur_expand(poly).coeffs))
        _HT_CACHE[mu] = got
    if spec is None:
        return got
    return got.specialize(*spec)


# ---------------------------------------------------------------------------
# the eigenoperator

def _solve(matrix, rhs):
    """Exact solution of a square rational system by elimination."""
    n = len(matrix)
    a = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next(
            (r for r in range(col, n) if a[r][col]), None
        )
        if pivot is None:
            raise ValueError(
                "transition matrix is singular at this specialization; "
                "resample (q, t)"
            )
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def nabla_power(f: SymFnQT, m: int, bound: int = DEGREE_BOUND) -> SymFnQT:
    """Apply the m-th power of the diagonal eigenoperator to f.

    The eigenvalue on the basis member at mu is t^{n(mu)} q^{n(mu*)}, mu*
    the conjugate.  Any integer power works since the eigenvalues are
    nonzero at positive rational (q, t).
    """
    if m == 0:
        return f
    if f.spec is None:
        raise ValueError(
            "a rational (q, t) specialization is required to expand over "
            "the eigenbasis"
        )
    d = f.degree
    if d > bound:
        raise ValueError(f"degree {d} exceeds the bound {bound}")
    q0, t0 = f.spec
    basis = list(partitions(d))
    columns = [
        modified_macdonald(mu, spec=(q0, t0), bound=bound).coeffs
        for mu in basis
    ]
    matrix = [
        [col.get(lam, Fraction(0)) for col in columns] for lam in basis
    ]
    rhs = [f.coeffs.get(lam, Fraction(0)) for lam in basis]
    expansion = _solve(matrix, rhs)
    scaled = [
        c * (t0 ** n_stat(mu) * q0 ** n_stat(conjugate(mu))) ** m
        for c, mu in zip(expansion, basis)
    ]
    out: dict[Partition, Fraction] = {}
    for c, col in zip(scaled, columns):
        if not c:
            continue
        for lam, v in col.items():
            out[lam] = out.get(lam, Fraction(0)) + c * v
    return SymFnQT(d, {lam: v for lam, v in out.items() if v}, f.spec)


# ---------------------------------------------------------------------------
# the combinatorial formula against the eigenoperator

def mn_lw_series(mu, m: int) -> SymFnQT:
    """Symbolic side of the lattice-path formula: the signed (qt)-power
    prefactor times the omega-image of the nest sum over the den for
    (mu, m, 1), with q inverted inside the LLT polynomials."""
    mu = normalize_partition(mu)
    n = sum(mu)
    if n == 0:
        raise ValueError("mu must have at least one box")
    shape = SkewShape.from_partition(mu)
    offset = magic_number(shape) + m * n_prime(gamma_of(shape))
    pref = QtLaurent.term((-1) ** magic_number(shape), offset, offset)
    series = rhs_nest_sum(lw_den(LWDenSpec(mu, m, 1)), n).omega()
    return SymFnQT(
        n, {lam: c * pref for lam, c in series.coeffs.items()}
    )


def verify_mn_lw(
    mu,
    m: int,
    specializations: int = 3,
    seed: int = 0,
    bound: int = DEGREE_BOUND,
) -> str | None:
    """Compare the lattice-path formula with the eigenoperator power.

    The symbolic series is evaluated at ``specializations`` random
    positive rational (q, t) points and compared, Schur coefficient by
    Schur coefficient, with the operator applied to the single Schur
    function at mu.  Returns None on agreement, else a message.
    """
    mu = normalize_partition(mu)
    n = sum(mu)
    if n > bound:
        raise ValueError(f"degree {n} exceeds the bound {bound}")
    if m < 1:
        raise ValueError("m must be a positive integer")
    symbolic = mn_lw_series(mu, m)
    rng = random.Random(seed)
    for _ in range(specializations):
        while True:
            q0 = Fraction(rng.randint(2, 19), rng.randint(2, 19))
            t0 = Fraction(rng.randint(2, 19), rng.randint(2, 19))
            try:
                got = nabla_power(schur_fn(mu, spec=(q0, t0)), m, bound)
            except ValueError:
                continue
            break
        want = symbolic.specialize(q0, t0)
        if got != want:
            return (
                f"mismatch at q={q0}, t={t0} for mu={mu}, m={m}: "
                f"operator side {got.coeffs}, path side {want.coeffs}"
            )
    return None

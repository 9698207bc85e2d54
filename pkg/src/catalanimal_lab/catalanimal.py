"""Catalanimals: Weyl-symmetrized rational functions given by root sets and
a weight, with exact expansion of their polynomial parts.

Expanding every geometric factor turns a Catalanimal into a formal sum of
GL_l characters.  The expansion here walks root multiplicities grouped by
the upper root index in decreasing order, so each pass through a group
freezes one coordinate of the accumulated weight; branches whose frozen
coordinate can no longer reach a polynomial character are cut.  This makes
both the full polynomial part and single character coefficients finite,
exact computations.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .dens import Den, b_vec, g_vector, validate
from .exactnum import QtLaurent, SchurPoly, straighten
from .shapes import SkewShape, diagonal_data, m_stretch, rotate180

Root = tuple[int, int]


@dataclass(frozen=True)
class Catalanimal:
    """Symmetric rational function in l variables determined by root data.

    ``rq``, ``rt`` index the q- and t-geometric denominator factors, ``rqt``
    the (1 - qt z^a) numerator factors; all are sets of pairs (i, j) with
    1 <= i < j <= l encoding the positive root e_i - e_j.  ``lam`` is the
    integer weight of the leading monomial.
    """

    l: int
    rq: frozenset[Root]
    rt: frozenset[Root]
    rqt: frozenset[Root]
    lam: tuple[int, ...]

    def __post_init__(self):
        if self.l < 1:
            raise ValueError("length must be positive")
        object.__setattr__(self, "rq", frozenset(self.rq))
        object.__setattr__(self, "rt", frozenset(self.rt))
        object.__setattr__(self, "rqt", frozenset(self.rqt))
        object.__setattr__(self, "lam", tuple(self.lam))
        if len(self.lam) != self.l:
            raise ValueError("weight length must equal l")
        for name, roots in (("rq", self.rq), ("rt", self.rt), ("rqt", self.rqt)):
            for r in roots:
                i, j = r
                if not (1 <= i < j <= self.l):
                    raise ValueError(f"bad root {r} in {name}")


def root_bracket(rq, rt) -> frozenset[Root]:
    """Sums of an rq root and an rt root that are again positive roots."""
    out = set()
    for i, j in rq:
        for k, m in rt:
            if j == k:
                out.add((i, m))
            if m == i:
                out.add((k, j))
    return frozenset(out)


def is_tame(cat: Catalanimal) -> bool:
    return root_bracket(cat.rq, cat.rt) <= cat.rqt


def _block_roots(lengths) -> tuple[frozenset[Root], frozenset[Root]]:
    """Cross-block and non-adjacent-block roots for the partition of
    {1, ..., sum(lengths)} into consecutive intervals."""
    block = []
    for k, g in enumerate(lengths):
        block.extend([k] * g)
    l = len(block)
    cross, far = set(), set()
    for i in range(1, l + 1):
        for j in range(i + 1, l + 1):
            if block[i - 1] != block[j - 1]:
                cross.add((i, j))
                if block[j - 1] - block[i - 1] > 1:
                    far.add((i, j))
    return frozenset(cross), frozenset(far)


def den_catalanimal(den: Den) -> Catalanimal:
    """The Catalanimal whose polynomial part the nests of the den expand.

    Blocks of the root-set partition match the columns of the den; the
    weight is constant on each block, given by the head-to-foot drop
    d_{k-1} - e_k across column k.
    """
    msg = validate(den)
    if msg is not None:
        raise ValueError(msg)
    g = g_vector(den)
    cross, far = _block_roots(g)
    lam = []
    for k in range(den.h):
        lam.extend([den.d[k] - den.e[k + 1]] * g[k])
    return Catalanimal(sum(g), cross, cross, far, tuple(lam))


def schur_catalanimal(mu, m: int, n: int, opposite: bool = False) -> Catalanimal:
    """Catalanimal attached to the m-stretched diagram of mu (or of its
    180-degree rotation).

    Blocks are the diagonals of the stretched diagram in increasing content
    order.  On each block the weight adds an indicator for holding a row's
    first box, subtracts one for holding a row's last box, and shifts by the
    ceiling-difference spacing of n among m slots at the content's residue.
    """
    mu = tuple(mu)
    if not mu:
        raise ValueError("shape must be non-empty")
    if m < 1 or gcd(m, n) != 1:
        raise ValueError("m, n must be coprime with m positive")
    shape = rotate180(mu) if opposite else SkewShape.from_partition(mu)
    diags = diagonal_data(m_stretch(shape, m))
    cross, far = _block_roots([d.length for d in diags])
    b = b_vec(m, n)
    lam = []
    for d in diags:
        val = int(d.has_row_start) - int(d.has_row_end) + b[(d.content - 1) % m]
        lam.extend([val] * d.length)
    return Catalanimal(len(lam), cross, cross, far, tuple(lam))


_factor_cache: dict[tuple, QtLaurent | None] = {}


def _factor(kind, in_num: bool, k: int) -> QtLaurent | None:
    """Coefficient of z^(k*root) contributed by one root's factors.

    ``kind`` says which geometric series the root sits in ("q", "t", "both",
    or None), ``in_num`` whether it also carries a (1 - qt z^root) numerator
    factor.  None marks an exhausted series (only k <= in_num is possible
    without a denominator).
    """
    if k == 0:
        return QtLaurent.one()
    key = (kind, in_num, k)
    if key in _factor_cache:
        return _factor_cache[key]
    if kind is None:
        val = QtLaurent.term(-1, 1, 1) if in_num and k == 1 else None
    elif kind == "q":
        val = QtLaurent.q_power(k)
    elif kind == "t":
        val = QtLaurent.qt_power(0, k)
    else:
        val = QtLaurent({(a, k - a): 1 for a in range(k + 1)})
    if val is not None and in_num and kind is not None:
        lower = _factor(kind, False, k - 1)
        val = val - QtLaurent.term(1, 1, 1) * lower
    _factor_cache[key] = val
    return val


def _expand(cat: Catalanimal, target):
    """Run the grouped multiplicity walk.

    With ``target`` None, returns the dict partition -> coefficient of the
    polynomial part.  Otherwise ``target`` is a weakly decreasing weight and
    the return value is the coefficient of its character: each frozen
    coordinate must then consume one entry of target + rho.

    Pruning rests on two facts.  Frozen coordinates keep their values, so
    their shifted values must stay distinct, nonnegative, and at most the
    largest achievable entry.  And once coordinate j freezes, every root not
    yet processed moves weight strictly inside the prefix 1..j-1, so the
    prefix sum is pinned and must still be reachable with distinct shifted
    values avoiding the frozen ones.
    """
    l = cat.l
    kinds = {}
    for r in cat.rq:
        kinds[r] = "q"
    for r in cat.rt:
        kinds[r] = "both" if r in cat.rq else "t"
    by_j = {j: [] for j in range(2, l + 1)}
    for r in sorted(set(kinds) | set(cat.rqt)):
        by_j[r[1]].append(r)

    degree = sum(cat.lam)
    shift_total = degree + l * (l - 1) // 2
    if target is None:
        used: set[int] = set()
        floor = 0
        vmax = degree + l - 1
    else:
        used = set()
        allowed = {target[k] + (l - 1 - k) for k in range(l)}
        floor = min(allowed)
        vmax = max(allowed)

    weight = list(cat.lam)
    out: dict = {}
    coeff_total = [QtLaurent.zero()]
    js = list(range(l, 1, -1))

    def min_prefix_sum(count):
        """Smallest sum of ``count`` distinct allowed shifted values."""
        total, v, found = 0, 0, 0
        while found < count:
            if v not in used and (target is None or v in allowed):
                total += v
                found += 1
            v += 1
            if target is not None and v > vmax and found < count:
                return None
        return total

    def finish(coeff):
        if target is None:
            st = straighten(weight)
            if st is None:
                return
            sign, lam = st
            cur = out.get(lam, QtLaurent.zero())
            cur = cur + coeff if sign > 0 else cur - coeff
            if cur:
                out[lam] = cur
            elif lam in out:
                del out[lam]
        else:
            if weight[0] + (l - 1) not in allowed or weight[0] + (l - 1) in used:
                return
            sign, _ = straighten(weight, polynomial_only=False)
            coeff_total[0] = (
                coeff_total[0] + coeff if sign > 0 else coeff_total[0] - coeff
            )

    def do_group(gi, shift_free, coeff):
        if gi == len(js):
            finish(coeff)
            return
        j = js[gi]
        budget = weight[j - 1] + (l - j) - floor
        if budget < 0:
            return
        do_root(gi, j, by_j[j], 0, budget, shift_free, coeff)

    def do_root(gi, j, roots, ri, budget, shift_free, coeff):
        if ri == len(roots):
            v = weight[j - 1] + (l - j)
            if v > vmax or v in used or (target is not None and v not in allowed):
                return
            prefix = shift_free - v
            used.add(v)
            if target is not None:
                rest = sum(x for x in allowed if x not in used)
                if rest == prefix:
                    do_group(gi + 1, prefix, coeff)
            else:
                low = min_prefix_sum(j - 1)
                if low is not None and prefix >= low:
                    do_group(gi + 1, prefix, coeff)
            used.discard(v)
            return
        i, jj = roots[ri]
        kind = kinds.get((i, jj))
        in_num = (i, jj) in cat.rqt
        for k in range(budget + 1):
            f = _factor(kind, in_num, k)
            if f is None:
                break
            if k:
                weight[i - 1] += k
                weight[jj - 1] -= k
            do_root(gi, j, roots, ri + 1, budget - k, shift_free, coeff * f if k else coeff)
            if k:
                weight[i - 1] -= k
                weight[jj - 1] += k

    do_group(0, shift_total, QtLaurent.one())
    return out if target is None else coeff_total[0]


def polynomial_part(cat: Catalanimal) -> SchurPoly:
    """Truncation of the character expansion to polynomial characters,
    written in the Schur basis.  Homogeneous of degree sum(lam)."""
    return SchurPoly(cat.l, _expand(cat, None))


def character_coefficient(cat: Catalanimal, lam_dominant) -> QtLaurent:
    """Coefficient of one irreducible GL_l character, negative parts allowed."""
    target = tuple(lam_dominant)
    if len(target) != cat.l:
        raise ValueError("dominant weight length must equal l")
    if any(a < b for a, b in zip(target, target[1:])):
        raise ValueError("weight must be weakly decreasing")
    if sum(target) != sum(cat.lam):
        return QtLaurent.zero()
    return _expand(cat, target)

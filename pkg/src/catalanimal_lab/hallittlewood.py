"""Semi-symmetric Hall-Littlewood polynomials, their inner product, and
LLT series.

Nonsymmetric Hall-Littlewood polynomials E^sigma_lam(z; q) are generated
from dominant monomials z^lam by Demazure-Lusztig operators, with a
twisting permutation sigma steering which operator sorts each ascent; the
companion family F is E with weights negated and q, z inverted.  Feeding
E or F through the partial symmetrizer of a Levi subgroup GL_r =
GL_{r_1} x ... x GL_{r_k} of GL_l yields the semi-symmetric family.  E
and F are dual under a q-deformed scalar product, satisfy a t-graded
Cauchy identity, and pair into LLT series whose polynomial parts are LLT
tuple polynomials.  Everything here is exact integer arithmetic; the
scalar product and character coefficients run through a constant-term
engine that prunes against its targets instead of expanding root-factor
geometric series outright.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .catalanimal import Catalanimal, _block_roots, character_coefficient
from .dens import Den, _line_height, g_vector, validate as den_validate
from .exactnum import (
    EpsReal,
    MultiLaurent,
    QtLaurent,
    SchurPoly,
    normalize_partition,
    partitions,
    schur_in_vars,
    straighten,
)
from .llt import TripleSpec, llt_poly, sigma_rearrange, sigma_triples
from .shapes import SkewShape, SkewTuple

Perm = tuple[int, ...]
Weight = tuple[int, ...]
Root = tuple[int, int]

_Q = QtLaurent.q_power(1)
_QINV = QtLaurent.q_power(-1)
_ONE = QtLaurent.one()
_Q_MINUS_1 = _Q - _ONE
_ONE_MINUS_Q = _ONE - _Q
_QINV_MINUS_1 = _QINV - _ONE
_ONE_MINUS_QINV = _ONE - _QINV


# ---------------------------------------------------------------------------
# permutations


def _check_perm(w) -> Perm:
    w = tuple(int(x) for x in w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation of 1..{len(w)}: {w}")
    return w


def inverse_perm(w) -> Perm:
    w = _check_perm(w)
    inv = [0] * len(w)
    for i, x in enumerate(w):
        inv[x - 1] = i + 1
    return tuple(inv)


def perm_inversions(w) -> int:
    w = _check_perm(w)
    return sum(
        1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j]
    )


def perm_action(w, mu) -> Weight:
    """The weight with mu_i moved to position w(i)."""
    w = _check_perm(w)
    if len(mu) != len(w):
        raise ValueError("weight and permutation lengths differ")
    out = [0] * len(w)
    for i, x in enumerate(w):
        out[x - 1] = int(mu[i])
    return tuple(out)


def relative_order(seq) -> Perm:
    """Ranks of the entries: the permutation in one-line notation with the
    same relative order as seq.  Entries must be pairwise distinct."""
    seq = list(seq)
    ranks = tuple(1 + sum(1 for y in seq if y < x) for x in seq)
    if sorted(ranks) != list(range(1, len(seq) + 1)):
        raise ValueError("entries must be pairwise distinct")
    return ranks


def reduced_word(w) -> tuple[int, ...]:
    """Indices (i_1, ..., i_m) with w = s_{i_1} ... s_{i_m} and m = inv(w)."""
    arr = list(_check_perm(w))
    swaps = []
    changed = True
    while changed:
        changed = False
        for i in range(len(arr) - 1):
            if arr[i] > arr[i + 1]:
                arr[i], arr[i + 1] = arr[i + 1], arr[i]
                swaps.append(i + 1)
                changed = True
    return tuple(reversed(swaps))


def sigma_hat(sigma, r) -> Perm:
    """Inflate sigma in S_k along the weak composition r: the i-th group of
    positions, taken in the order the blocks are visited by sigma, maps
    increasingly onto the sigma(i)-th group of values."""
    sigma = _check_perm(sigma)
    r = tuple(int(x) for x in r)
    if len(r) != len(sigma) or any(x < 0 for x in r):
        raise ValueError("r must be a weak composition with one part per block")
    starts = [0]
    for x in r:
        starts.append(starts[-1] + x)
    out = []
    for si in sigma:
        base = starts[si - 1]
        out.extend(range(base + 1, base + 1 + r[si - 1]))
    return tuple(out)


# ---------------------------------------------------------------------------
# Demazure-Lusztig operators


def demazure_lusztig(i, f: MultiLaurent, inverse: bool = False) -> MultiLaurent:
    """Apply the i-th Demazure-Lusztig operator T_i, or its inverse, to a
    Laurent polynomial in z_1..z_l.

    T_i satisfies (T_i - q)(T_i + 1) = 0 and scales any polynomial
    symmetric in z_i, z_{i+1} by q.  On a monomial the divided-difference
    part telescopes to a finite geometric string between the exponents of
    z_i and z_{i+1}, so the result is again a Laurent polynomial.
    """
    if not 1 <= i < f.l:
        raise ValueError(f"operator index {i} out of range for l = {f.l}")
    a = i - 1
    out: dict = {}
    for nu, c in f.terms.items():
        r, s = nu[a], nu[a + 1]
        pre, post = nu[:a], nu[a + 2:]
        if not inverse:
            if r > s:
                cc = c * _Q_MINUS_1
                string = [(s, r, c * _Q)]
                string += [(u, r + s - u, cc) for u in range(s + 1, r + 1)]
            elif r == s:
                string = [(r, s, c * _Q)]
            else:
                cc = c * _ONE_MINUS_Q
                string = [(s, r, c)]
                string += [(u, r + s - u, cc) for u in range(r + 1, s)]
        else:
            if r < s:
                cc = c * _QINV_MINUS_1
                string = [(s, r, c * _QINV)]
                string += [(u, r + s - u, cc) for u in range(r, s)]
            elif r == s:
                string = [(r, s, c * _QINV)]
            else:
                cc = c * _ONE_MINUS_QINV
                string = [(s, r, c)]
                string += [(u, r + s - u, cc) for u in range(s + 1, r)]
        for u, v, coeff in string:
            key = pre + (u, v) + post
            prev = out.get(key)
            coeff = coeff if prev is None else prev + coeff
            if coeff:
                out[key] = coeff
            elif prev is not None:
                del out[key]
    return MultiLaurent(f.l, out)


def apply_hecke(w, f: MultiLaurent, inverse: bool = False) -> MultiLaurent:
    """Apply T_w = T_{i_1} ... T_{i_m} for a reduced word of w, or the
    inverse operator T_{i_m}^{-1} ... T_{i_1}^{-1}."""
    word = reduced_word(w)
    if inverse:
        for i in word:
            f = demazure_lusztig(i, f, inverse=True)
    else:
        for i in reversed(word):
            f = demazure_lusztig(i, f)
    return f


# ---------------------------------------------------------------------------
# nonsymmetric Hall-Littlewood polynomials

_NS_CACHE: dict[tuple[Weight, Perm], MultiLaurent] = {}


def ns_hl_E(lam, twist=None) -> MultiLaurent:
    """Nonsymmetric Hall-Littlewood polynomial E^twist_lam(z; q).

    Weakly decreasing lam gives z^lam for every twist.  Otherwise the
    first ascent lam_i < lam_{i+1} is sorted by one Demazure-Lusztig
    operator: q^{-1} T_i when the twist lists the value i before i + 1,
    and T_i^{-1} when it lists i after.  Coefficients lie in Z[q^{-1}].
    """
    lam = tuple(int(x) for x in lam)
    twist = (
        tuple(range(1, len(lam) + 1)) if twist is None else _check_perm(twist)
    )
    if len(twist) != len(lam):
        raise ValueError("twist and weight must have the same length")
    return _ns_e(lam, twist)


def _ns_e(lam: Weight, twist: Perm) -> MultiLaurent:
    got = _NS_CACHE.get((lam, twist))
    if got is not None:
        return got
    i = next(
        (j + 1 for j in range(len(lam) - 1) if lam[j] < lam[j + 1]), None
    )
    if i is None:
        res = MultiLaurent.monomial(lam)
    else:
        swapped = lam[:i - 1] + (lam[i], lam[i - 1]) + lam[i + 1:]
        tw2 = tuple(
            i + 1 if x == i else i if x == i + 1 else x for x in twist
        )
        sub = _ns_e(swapped, tw2)
        if twist.index(i) < twist.index(i + 1):
            res = demazure_lusztig(i, sub) * _QINV
        else:
            res = demazure_lusztig(i, sub, inverse=True)
    _NS_CACHE[(lam, twist)] = res
    return res


def ns_hl_F(lam, twist=None) -> MultiLaurent:
    """Companion family F^twist_lam(z; q): E for the reversed twist at the
    negated weight, with q and all z_i inverted.  Coefficients lie in
    Z[q]."""
    lam = tuple(int(x) for x in lam)
    twist = (
        tuple(range(1, len(lam) + 1)) if twist is None else _check_perm(twist)
    )
    if len(twist) != len(lam):
        raise ValueError("twist and weight must have the same length")
    return _ns_e(tuple(-x for x in lam), tuple(reversed(twist))).bar()


def twist_constant(twist, lam) -> int:
    """Number of pairs i < j inverted by the twist's inverse and weakly
    ordered lam_i >= lam_j: the exponent h with E^twist_lam equal to q^h
    times the inverse Hecke image of E at the permuted weight."""
    twist = _check_perm(twist)
    lam = tuple(lam)
    if len(lam) != len(twist):
        raise ValueError("twist and weight must have the same length")
    pos = {x: p for p, x in enumerate(twist)}
    return sum(
        1
        for i in range(len(lam))
        for j in range(i + 1, len(lam))
        if pos[i + 1] > pos[j + 1] and lam[i] >= lam[j]
    )


# ---------------------------------------------------------------------------
# block characters and the partial symmetrizer


def gl_character(lam, l: int) -> MultiLaurent:
    """Irreducible GL_l character with dominant weight lam, as a Laurent
    polynomial.  lam may have negative entries; a lam shorter than l must
    be a partition and is padded with zeros."""
    lam = tuple(int(x) for x in lam)
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"weight must be weakly decreasing: {lam}")
    if len(lam) > l:
        raise ValueError(f"weight {lam} has more than {l} entries")
    if len(lam) < l:
        if lam and lam[-1] < 0:
            raise ValueError("cannot zero-pad a weight with negative entries")
        lam = lam + (0,) * (l - len(lam))
    if l == 0:
        return MultiLaurent.one(0)
    m = lam[-1]
    part = normalize_partition(tuple(x - m for x in lam))
    poly = schur_in_vars(part, l)
    return poly if m == 0 else poly.mul_monomial((m,) * l)


def delta_r(f: MultiLaurent, r) -> MultiLaurent:
    """Partial symmetrization of f over GL_r = GL_{r_1} x ... x GL_{r_k}:
    the signed sum of translates over the block Weyl group divided by the
    block Weyl denominator.

    Each monomial straightens blockwise: block-singular monomials die, the
    rest contribute a sign and a product of block characters.  Monomials
    sharing all their straightened block weights are merged before any
    character is expanded.
    """
    r = tuple(int(x) for x in r)
    if any(x < 0 for x in r) or sum(r) != f.l:
        raise ValueError(f"block sizes {r} do not fit {f.l} variables")
    bounds = []
    pos = 0
    for n in r:
        bounds.append((pos, pos + n))
        pos += n
    stairs = [tuple(range(n - 1, -1, -1)) for n in r]
    grouped: dict[tuple[Weight, ...], QtLaurent] = {}
    for nu, c in f.terms.items():
        sign = 1
        kappas = []
        for (st, sp), stair in zip(bounds, stairs):
            res = straighten(
                tuple(nu[st + j] - stair[j] for j in range(sp - st)),
                polynomial_only=False,
            )
            if res is None:
                break
            sg, kap = res
            sign *= sg
            kappas.append(kap)
        else:
            key = tuple(kappas)
            cc = c if sign == 1 else -c
            prev = grouped.get(key)
            cc = cc if prev is None else prev + cc
            if cc:
                grouped[key] = cc
            elif prev is not None:
                del grouped[key]
    out: dict = {}
    for kappas, c in grouped.items():
        combos = [((), _ONE)]
        for kap, stair in zip(kappas, stairs):
            blk = gl_character(kap, len(stair))
            if stair:
                blk = blk.mul_monomial(stair)
            items = list(blk.terms.items())
            combos = [(e + eb, ce * cb) for e, ce in combos for eb, cb in items]
        for e, ce in combos:
            val = c * ce
            prev = out.get(e)
            val = val if prev is None else prev + val
            if val:
                out[e] = val
            elif prev is not None:
                del out[e]
    return MultiLaurent(f.l, out)


# ---------------------------------------------------------------------------
# Levi data and the semi-symmetric family


@dataclass(frozen=True)
class LeviData:
    """Block sizes r (a weak composition of l), a twisting permutation of
    the k blocks, and a weight rho decreasing by exactly one within each
    block.

    Each block records the maximum and minimum rho values it covers.  An
    empty block carries explicit artificial values with max < min; the
    hypothesis checks consult them, polynomial computations ignore them.
    """

    r: tuple[int, ...]
    sigma: tuple[int, ...]
    rho: tuple[int, ...]
    block_max: tuple[int, ...] | None = None
    block_min: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "r", tuple(int(x) for x in self.r))
        object.__setattr__(self, "sigma", _check_perm(self.sigma))
        object.__setattr__(self, "rho", tuple(int(x) for x in self.rho))
        k = len(self.r)
        if len(self.sigma) != k:
            raise ValueError("sigma must permute the blocks of r")
        if any(x < 0 for x in self.r):
            raise ValueError("block sizes must be nonnegative")
        if len(self.rho) != sum(self.r):
            raise ValueError("rho must have one entry per variable")
        maxs: list[int | None] = []
        mins: list[int | None] = []
        for st, sp in self.blocks():
            blk = self.rho[st:sp]
            if any(blk[j] - blk[j + 1] != 1 for j in range(len(blk) - 1)):
                raise ValueError("rho must decrease by one within each block")
            maxs.append(blk[0] if blk else None)
            mins.append(blk[-1] if blk else None)
        if self.block_max is None and self.block_min is None:
            if any(x is None for x in maxs):
                raise ValueError(
                    "empty blocks need explicit block_max and block_min"
                )
            object.__setattr__(self, "block_max", tuple(maxs))
            object.__setattr__(self, "block_min", tuple(mins))
            return
        if self.block_max is None or self.block_min is None:
            raise ValueError("give both block_max and block_min or neither")
        bm = tuple(int(x) for x in self.block_max)
        bn = tuple(int(x) for x in self.block_min)
        object.__setattr__(self, "block_max", bm)
        object.__setattr__(self, "block_min", bn)
        if len(bm) != k or len(bn) != k:
            raise ValueError("block_max and block_min need one entry per block")
        for i in range(k):
            if maxs[i] is not None:
                if bm[i] != maxs[i] or bn[i] != mins[i]:
                    raise ValueError("block_max/block_min must agree with rho")
            elif not bm[i] < bn[i]:
                raise ValueError("an empty block needs artificial max < min")

    @classmethod
    def from_minima(cls, r, sigma, minima) -> "LeviData":
        """Blockwise staircases read off per-block minima; an empty block's
        artificial maximum is its stated minimum less one."""
        r = tuple(int(x) for x in r)
        minima = tuple(int(x) for x in minima)
        if len(minima) != len(r):
            raise ValueError("one minimum per block required")
        rho = tuple(
            m + n - 1 - j for n, m in zip(r, minima) for j in range(n)
        )
        maxs = tuple(m + n - 1 if n else m - 1 for n, m in zip(r, minima))
        return cls(r, sigma, rho, maxs, minima)

    @classmethod
    def from_maxima(cls, r, sigma, maxima) -> "LeviData":
        """Blockwise staircases read off per-block maxima; an empty block's
        artificial minimum is its stated maximum plus one."""
        r = tuple(int(x) for x in r)
        maxima = tuple(int(x) for x in maxima)
        if len(maxima) != len(r):
            raise ValueError("one maximum per block required")
        rho = tuple(mx - j for n, mx in zip(r, maxima) for j in range(n))
        mins = tuple(mx - n + 1 if n else mx + 1 for n, mx in zip(r, maxima))
        return cls(r, sigma, rho, maxima, mins)

    @classmethod
    def standard(cls, r, sigma) -> "LeviData":
        """Blockwise staircases (n-1, ..., 1, 0)."""
        return cls.from_minima(r, sigma, (0,) * len(tuple(r)))

    @property
    def l(self) -> int:
        return sum(self.r)

    @property
    def k(self) -> int:
        return len(self.r)

    def blocks(self) -> tuple[tuple[int, int], ...]:
        """Half-open variable index ranges, 0-based, one per block."""
        out = []
        pos = 0
        for n in self.r:
            out.append((pos, pos + n))
            pos += n
        return tuple(out)

    def within_roots(self) -> tuple[Root, ...]:
        """Positive roots (i, j), 1-based, with both ends in one block."""
        return tuple(
            (i + 1, j + 1)
            for st, sp in self.blocks()
            for i in range(st, sp)
            for j in range(i + 1, sp)
        )

    def cross_roots(self) -> tuple[Root, ...]:
        """Positive roots with ends in different blocks."""
        within = set(self.within_roots())
        return tuple(
            (i, j)
            for i in range(1, self.l)
            for j in range(i + 1, self.l + 1)
            if (i, j) not in within
        )

    def is_regular_dominant(self, mu) -> bool:
        """True when mu is strictly decreasing within every block."""
        mu = tuple(mu)
        return len(mu) == self.l and all(
            mu[j] > mu[j + 1]
            for st, sp in self.blocks()
            for j in range(st, sp - 1)
        )

    def sigma_hat(self) -> Perm:
        return sigma_hat(self.sigma, self.r)

    def with_sigma(self, sigma) -> "LeviData":
        return LeviData(self.r, sigma, self.rho, self.block_max, self.block_min)


def _check_regular(levi: LeviData, mu: Weight) -> None:
    if not levi.is_regular_dominant(mu):
        raise ValueError(
            f"weight {mu} is not strictly decreasing within the blocks {levi.r}"
        )


_SEMI_CACHE: dict[tuple, MultiLaurent] = {}


def semi_E(levi: LeviData, mu) -> MultiLaurent:
    """Semi-symmetric Hall-Littlewood polynomial: the partial symmetrizer
    of the Levi applied to E at the inflated twist.  mu must be strictly
    decreasing within each block."""
    mu = tuple(int(x) for x in mu)
    _check_regular(levi, mu)
    key = ("E", levi.r, levi.sigma, mu)
    got = _SEMI_CACHE.get(key)
    if got is None:
        got = delta_r(ns_hl_E(mu, levi.sigma_hat()), levi.r)
        _SEMI_CACHE[key] = got
    return got


def semi_F(levi: LeviData, mu) -> MultiLaurent:
    """Companion semi-symmetric family, built from F at the inflated
    twist."""
    mu = tuple(int(x) for x in mu)
    _check_regular(levi, mu)
    key = ("F", levi.r, levi.sigma, mu)
    got = _SEMI_CACHE.get(key)
    if got is None:
        got = delta_r(ns_hl_F(mu, levi.sigma_hat()), levi.r)
        _SEMI_CACHE[key] = got
    return got


# ---------------------------------------------------------------------------
# constant terms against root-factor products
#
# Both engines multiply a Laurent polynomial by factors indexed by positive
# roots a = e_i - e_j, each factor only ever adding nonnegative multiples
# of a to exponents.  Such steps never change the prefix sums
# s_c = nu_1 + ... + nu_c for c >= j, so factors are processed in
# decreasing order of j and every pass freezes the suffix prefix-sums one
# coordinate earlier; terms whose frozen data cannot reach any target are
# dropped.  Factor kinds: "phi" for (1 - z^a)/(1 - u z^a), "geo" for
# 1/(1 - u z^a), "num1" for (1 - z^a), and "numu" for (1 - u z^a).


def _group_factors(factors, l: int) -> list[tuple[int, list]]:
    groups: dict[int, list] = {}
    for kind, (i, j) in factors:
        if not 1 <= i < j <= l:
            raise ValueError(f"bad positive root ({i}, {j}) for l = {l}")
        groups.setdefault(j, []).append((kind, (i, j)))
    return sorted(groups.items(), reverse=True)


def _run_engine(alive, factors, unit, maxs, boundary, l):
    """Multiply the alive terms by every factor, pruning at each freeze.

    maxs bounds the prefix sums of any term that can still matter;
    boundary(alive, frozen_from) filters terms by their frozen data: no
    remaining factor touches prefix sums at 1-based positions >=
    frozen_from, nor entries at 0-based positions >= frozen_from.
    """
    u_pows = [_ONE]

    def unit_pow(m):
        while len(u_pows) <= m:
            u_pows.append(u_pows[-1] * unit)
        return u_pows[m]

    u_minus_one = unit - _ONE
    alive = boundary(alive, l)
    for j, group in _group_factors(factors, l):
        alive = boundary(alive, j)
        for kind, (i, _j) in group:
            i0, j0 = i - 1, j - 1
            out: dict = {}
            for nu, c in alive.items():
                run = sum(nu[:i0])
                cap = None
                for cc in range(i0, j0):
                    run += nu[cc]
                    slack = maxs[cc] - run
                    if cap is None or slack < cap:
                        cap = slack
                if kind == "geo":
                    lo = 0
                else:
                    prev = out.get(nu)
                    acc = c if prev is None else prev + c
                    if acc:
                        out[nu] = acc
                    elif prev is not None:
                        del out[nu]
                    lo = 1
                hi = cap if kind in ("phi", "geo") else min(cap, 1)
                for m in range(lo, hi + 1):
                    if kind == "phi":
                        coeff = c * unit_pow(m - 1) * u_minus_one
                    elif kind == "geo":
                        coeff = c * unit_pow(m)
                    elif kind == "num1":
                        coeff = -c
                    else:
                        coeff = -(c * unit)
                    key = (nu[:i0] + (nu[i0] + m,) + nu[i0 + 1:j0]
                           + (nu[j0] - m,) + nu[j0 + 1:])
                    prev = out.get(key)
                    coeff = coeff if prev is None else prev + coeff
                    if coeff:
                        out[key] = coeff
                    elif prev is not None:
                        del out[key]
            alive = out
    return boundary(alive, 0)


def _ct_targets(poly: MultiLaurent, factors, unit: QtLaurent, targets):
    """Coefficients of the target monomials in poly times the factors.

    Returns {target: QtLaurent}; targets absent from the result are zero.
    """
    l = poly.l
    targets = [tuple(int(x) for x in t) for t in targets]
    if not targets:
        return {}
    if l == 0:
        c = poly.coeff(())
        return {(): c}
    tpre = []
    for t in targets:
        if len(t) != l:
            raise ValueError("target length must match the variable count")
        run, acc = 0, []
        for x in t:
            run += x
            acc.append(run)
        tpre.append(acc)
    maxs = [max(col) for col in zip(*tpre)]
    mins = [min(col) for col in zip(*tpre)]
    totals = {p[-1] for p in tpre}

    def boundary(alive, frozen_from):
        kept = {}
        for nu, c in alive.items():
            run = 0
            ok = True
            for cc in range(l):
                run += nu[cc]
                if run > maxs[cc] or (cc + 1 >= frozen_from and run < mins[cc]):
                    ok = False
                    break
            if ok and run in totals:
                kept[nu] = c
        return kept

    alive = _run_engine(dict(poly.terms), factors, unit, maxs, boundary, l)
    return {t: alive[t] for t in targets if t in alive}


def _char_ct(poly: MultiLaurent, factors, unit: QtLaurent, lams):
    """Character coefficients of the symmetrization of poly times the
    factors: {lam: QtLaurent} for the requested dominant weights lam.

    The coefficient of the GL_l character at lam in the symmetrized series
    is the signed sum, over monomials whose exponent plus the staircase
    (l-1, ..., 0) is a permutation of lam plus the staircase, of the sign
    of that permutation.  Frozen suffix entries must stay distinct and
    inside some requested shifted weight.
    """
    l = poly.l
    lams = [tuple(int(x) for x in lam) for lam in lams]
    if not lams or l == 0:
        return {(): poly.coeff(())} if lams else {}
    want = set()
    shifted_sets = []
    tpre = []
    for lam in lams:
        if len(lam) != l:
            raise ValueError("weight length must match the variable count")
        if any(lam[i] < lam[i + 1] for i in range(l - 1)):
            raise ValueError(f"weight must be weakly decreasing: {lam}")
        want.add(lam)
        shifted = [lam[c] + l - 1 - c for c in range(l)]
        shifted_sets.append(frozenset(shifted))
        run, acc = 0, []
        for x in shifted:
            run += x
            acc.append(run)
        tpre.append(acc)
    stair_pre = []
    run = 0
    for c in range(l):
        run += l - 1 - c
        stair_pre.append(run)
    maxs = [max(col) - sp for col, sp in zip(zip(*tpre), stair_pre)]
    totals = {p[-1] - stair_pre[-1] for p in tpre}

    def boundary(alive, frozen_from):
        kept = {}
        for nu, c in alive.items():
            run = 0
            ok = True
            for cc in range(l):
                run += nu[cc]
                if run > maxs[cc]:
                    ok = False
                    break
            if not ok or run not in totals:
                continue
            tail = [nu[cc] + l - 1 - cc for cc in range(frozen_from, l)]
            tailset = frozenset(tail)
            if len(tailset) != len(tail):
                continue
            if any(tailset <= s for s in shifted_sets):
                kept[nu] = c
        return kept

    alive = _run_engine(dict(poly.terms), factors, unit, maxs, boundary, l)
    out: dict[Weight, QtLaurent] = {}
    for nu, c in alive.items():
        res = straighten(nu, polynomial_only=False)
        if res is None:
            continue
        sign, dom = res
        if dom not in want:
            continue
        cc = c if sign == 1 else -c
        prev = out.get(dom)
        cc = cc if prev is None else prev + cc
        if cc:
            out[dom] = cc
        elif prev is not None:
            del out[dom]
    return out


def ct_root_denominators(
    poly: MultiLaurent, denom_roots, unit: QtLaurent, target, numer_roots=()
) -> QtLaurent:
    """Coefficient of z^target in poly times prod (1 - z^a) over the
    numerator roots divided by prod (1 - unit z^a) over the denominator
    roots, all roots positive.

    A root occurring on both sides is paired into a single bounded factor,
    so cancelling multiplicities never inflate the expansion.
    """
    denom = Counter((int(i), int(j)) for i, j in denom_roots)
    numer = Counter((int(i), int(j)) for i, j in numer_roots)
    factors = []
    for root in sorted(denom | numer):
        nd, nn = denom[root], numer[root]
        pair = min(nd, nn)
        factors += [("phi", root)] * pair
        factors += [("geo", root)] * (nd - pair)
        factors += [("num1", root)] * (nn - pair)
    target = tuple(int(x) for x in target)
    res = _ct_targets(poly, factors, unit, [target])
    return res.get(target, QtLaurent.zero())


def inner_product_r(f: MultiLaurent, g: MultiLaurent, levi: LeviData) -> QtLaurent:
    """The q-deformed scalar product adapted to the Levi: the constant
    term of f g times (1 - z^a)/(1 - q^{-1} z^a) over all positive roots
    and times (1 - q^{-1} z^a) over the within-block roots."""
    if f.l != levi.l or g.l != levi.l:
        raise ValueError("operands must match the Levi's variable count")
    l = levi.l
    factors = [
        ("phi", (i, j)) for i in range(1, l) for j in range(i + 1, l + 1)
    ]
    factors += [("numu", root) for root in levi.within_roots()]
    res = _ct_targets(f * g, factors, _QINV, [(0,) * l])
    return res.get((0,) * l, QtLaurent.zero())


def e_basis_coeff(f: MultiLaurent, levi: LeviData, mu) -> QtLaurent:
    """Coefficient of semi_E(levi, mu) in the expansion of f over the
    semi-symmetric E family, extracted by pairing against the dual F."""
    mu = tuple(int(x) for x in mu)
    neg = tuple(-x for x in levi.rho)
    dual = semi_F(levi, mu).mul_monomial(neg).bar()
    return inner_product_r(f.mul_monomial(neg), dual, levi)


# ---------------------------------------------------------------------------
# LLT series


@dataclass(frozen=True)
class LLTSeriesSpec:
    """An LLT series: a Levi datum and a pair of weights alpha, beta, both
    strictly decreasing within the blocks."""

    levi: LeviData
    alpha: tuple[int, ...]
    beta: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", tuple(int(x) for x in self.alpha))
        object.__setattr__(self, "beta", tuple(int(x) for x in self.beta))
        _check_regular(self.levi, self.alpha)
        _check_regular(self.levi, self.beta)


def llt_series_coeff(spec: LLTSeriesSpec, lam) -> QtLaurent:
    """Coefficient of the GL_l character at the dominant weight lam in the
    LLT series: the E-basis coefficient at beta of the character times
    E at alpha, both for the inverse twist, with q then inverted."""
    levi = spec.levi
    l = levi.l
    lam = tuple(int(x) for x in lam)
    if len(lam) != l or any(lam[i] < lam[i + 1] for i in range(l - 1)):
        raise ValueError(f"need a weakly decreasing weight of length {l}")
    if sum(lam) + sum(spec.alpha) != sum(spec.beta):
        return QtLaurent.zero()
    inv = levi.with_sigma(inverse_perm(levi.sigma))
    f = gl_character(lam, l) * semi_E(inv, spec.alpha)
    return e_basis_coeff(f, inv, spec.beta).subs_q_inv()


def _series_coeffs_symmetrized(spec: LLTSeriesSpec, lams) -> dict:
    """Character coefficients of the LLT series for several dominant
    weights in one pass, through the q-deformed symmetrization form: the
    series equals the symmetrized product of F at beta and the bar of E at
    alpha (inverse twist, variables reversed) against geometric factors
    1/(1 - q z^a) over the cross roots of the reversed block structure."""
    levi = spec.levi
    l = levi.l
    lams = [tuple(int(x) for x in lam) for lam in lams]
    degree = sum(spec.beta) - sum(spec.alpha)
    inv = levi.with_sigma(inverse_perm(levi.sigma))
    P = semi_F(inv, spec.beta) * semi_E(inv, spec.alpha).bar()
    w0 = tuple(range(l, 0, -1))
    P = P.permute_vars(w0)
    rev = LeviData.standard(tuple(reversed(levi.r)), tuple(range(1, levi.k + 1)))
    factors = [("geo", root) for root in rev.cross_roots()]
    good = [lam for lam in lams if sum(lam) == degree]
    raw = _char_ct(P, factors, _Q, good) if good else {}
    zero = QtLaurent.zero()
    return {lam: raw.get(lam, zero) for lam in lams}


def llt_series_pol(spec: LLTSeriesSpec) -> SchurPoly:
    """Polynomial part of the LLT series, computed combinatorially: zero
    unless alpha <= beta coordinatewise, else q^h times the tuple LLT
    polynomial of the blockwise skew shapes at inverted q, where h counts
    the component-permutation triples of the tuple."""
    levi = spec.levi
    if any(a > b for a, b in zip(spec.alpha, spec.beta)):
        return SchurPoly(levi.l, {})
    comps = []
    for st, sp in levi.blocks():
        a = tuple(spec.alpha[st + j] + j + 1 for j in range(sp - st))
        b = tuple(spec.beta[st + j] + j + 1 for j in range(sp - st))
        comps.append(SkewShape(a, b))
    nu = SkewTuple(tuple(comps))
    h, _ = sigma_triples(TripleSpec(nu, levi.sigma))
    g = llt_poly(sigma_rearrange(nu, levi.sigma), levi.l, qexp=-1)
    return g * QtLaurent.q_power(h)


# ---------------------------------------------------------------------------
# almost-monotone sequences and winding permutations


def almost_decreasing(m, sigma) -> bool:
    """m_i >= m_j - 1 for all i < j, where the slack 1 is allowed exactly
    when sigma lists i after j."""
    sigma = _check_perm(sigma)
    m = tuple(m)
    if len(m) != len(sigma):
        raise ValueError("sequence and permutation lengths differ")
    pos = {x: p for p, x in enumerate(sigma)}
    return all(
        m[i] >= m[j] - (1 if pos[i + 1] > pos[j + 1] else 0)
        for i in range(len(m))
        for j in range(i + 1, len(m))
    )


def almost_increasing(m, sigma) -> bool:
    """m_i <= m_j + 1 for all i < j, where the slack 1 is allowed exactly
    when sigma lists i before j."""
    sigma = _check_perm(sigma)
    m = tuple(m)
    if len(m) != len(sigma):
        raise ValueError("sequence and permutation lengths differ")
    pos = {x: p for p, x in enumerate(sigma)}
    return all(
        m[i] <= m[j] + (1 if pos[i + 1] < pos[j + 1] else 0)
        for i in range(len(m))
        for j in range(i + 1, len(m))
    )


def winding_permutation(x: EpsReal, y, k: int) -> Perm:
    """Ranks of the fractional parts of y + x, y + 2x, ..., y + kx for an
    eps-irrational slope x."""
    vals = [(y + x * i).frac() for i in range(1, k + 1)]
    return relative_order(vals)


def head_tail(sigma) -> tuple[tuple[int, ...], Perm, Perm]:
    """Descent indicators eta and the relative orders (head, tail) of a
    permutation with its last respectively first value dropped."""
    sigma = _check_perm(sigma)
    if len(sigma) < 2:
        raise ValueError("need a permutation of length at least 2")
    eta = tuple(
        1 if sigma[i] > sigma[i + 1] else 0 for i in range(len(sigma) - 1)
    )
    return eta, relative_order(sigma[:-1]), relative_order(sigma[1:])


def winding_check(sigma, r, mu) -> str | None:
    """Verify both winding relations for a winding permutation sigma of
    S_{k+1} over the weak composition r of length k: with (eta, head,
    tail) extracted from sigma, the semi-symmetric E and F at the tail's
    inverse twist equal z^{eta blocks} times their head-twist values at
    the weight lowered by the eta block vector."""
    sigma = _check_perm(sigma)
    r = tuple(int(x) for x in r)
    if len(r) != len(sigma) - 1:
        raise ValueError("r must have one part per head/tail position")
    eta, head, tail = head_tail(sigma)
    eta_hat = tuple(e for e, n in zip(eta, r) for _ in range(n))
    mu = tuple(int(x) for x in mu)
    lowered = tuple(m - e for m, e in zip(mu, eta_hat))
    levi_tail = LeviData.standard(r, inverse_perm(tail))
    levi_head = LeviData.standard(r, inverse_perm(head))
    for name, fn in (("E", semi_E), ("F", semi_F)):
        lhs = fn(levi_tail, mu)
        rhs = fn(levi_head, lowered).mul_monomial(eta_hat)
        if lhs != rhs:
            return (
                f"winding relation fails for {name} at mu={mu}, "
                f"sigma={sigma}, r={r}"
            )
    return None


# ---------------------------------------------------------------------------
# the Cauchy identity


def _tensor(a: MultiLaurent, b: MultiLaurent) -> MultiLaurent:
    terms = {
        ka + kb: ca * cb
        for ka, ca in a.terms.items()
        for kb, cb in b.terms.items()
    }
    return MultiLaurent(a.l + b.l, terms)


def _block_weights(d: int, caps) -> list[tuple[Weight, ...]]:
    """Tuples of partitions, one per cap, with total size d and the i-th
    partition at most caps[i] parts long."""
    out = []

    def rec(i, rem, acc):
        if i == len(caps):
            if rem == 0:
                out.append(tuple(acc))
            return
        for di in range(rem + 1):
            for part in partitions(di, max_len=caps[i]) if di else [()]:
                acc.append(part)
                rec(i + 1, rem - di, acc)
                acc.pop()

    rec(0, d, [])
    return out


def cauchy_check(levi_x: LeviData, levi_y: LeviData, tmax: int) -> str | None:
    """Verify the t-graded Cauchy identity through degree tmax.

    The kernel in x and y variables has a factor 1/(1 - t x_a y_b) for
    each pair with the x block at most the y block, and a numerator
    (1 - q t x_a y_b) for each pair with the x block strictly less.  Its
    t-degree-d layer must match the sum over tuples lam of partitions of
    total size d (the i-th at most min(r_i, s_i) parts) of the tensor of
    the rho-lowered E at q^{-1} in x and the rho-lowered F in y.

    Both Levi data must share the twist and the block maxima, with the x
    minima almost decreasing and the y minima almost increasing for it.
    Violated hypotheses raise ValueError.
    """
    if levi_x.k != levi_y.k:
        raise ValueError("the two Levi data must have the same block count")
    if levi_x.sigma != levi_y.sigma:
        raise ValueError("the two Levi data must share the twist")
    if levi_x.block_max != levi_y.block_max:
        raise ValueError("the two rho weights must share their block maxima")
    sigma = levi_x.sigma
    if not almost_decreasing(levi_x.block_min, sigma):
        raise ValueError("x-side block minima must be almost decreasing")
    if not almost_increasing(levi_y.block_min, sigma):
        raise ValueError("y-side block minima must be almost increasing")
    if tmax < 0:
        raise ValueError("tmax must be nonnegative")
    r, s = levi_x.r, levi_y.r
    lx, ly = levi_x.l, levi_y.l
    l = lx + ly
    xb = levi_x.blocks()
    yb = levi_y.blocks()
    layers = [MultiLaurent.one(l)]
    layers += [MultiLaurent.zero(l) for _ in range(tmax)]

    def step(exps, a, b):
        return exps[:a] + (exps[a] + 1,) + exps[a + 1:b] + (exps[b] + 1,) + exps[b + 1:]

    for i in range(levi_x.k):
        for j in range(levi_x.k):
            if i > j:
                continue
            pairs = [
                (a, lx + b)
                for a in range(*xb[i])
                for b in range(*yb[j])
            ]
            for a, b in pairs:
                # geometric factor 1/(1 - t x_a y_b)
                for d in range(1, tmax + 1):
                    shifted = {
                        step(nu, a, b): c for nu, c in layers[d - 1].terms.items()
                    }
                    layers[d] = layers[d] + layers[d]._raw(shifted)
                if i < j:
                    # numerator factor (1 - q t x_a y_b)
                    for d in range(tmax, 0, -1):
                        shifted = {
                            step(nu, a, b): c * _Q
                            for nu, c in layers[d - 1].terms.items()
                        }
                        layers[d] = layers[d] - layers[d]._raw(shifted)
    neg_rx = tuple(-x for x in levi_x.rho)
    neg_ry = tuple(-x for x in levi_y.rho)
    caps = [min(a, b) for a, b in zip(r, s)]
    for d in range(tmax + 1):
        acc = MultiLaurent.zero(l)
        for lamtup in _block_weights(d, caps):
            wx, wy = [], []
            for part, (n_x, n_y, (stx, spx), (sty, spy)) in zip(
                lamtup, ((r[i], s[i], xb[i], yb[i]) for i in range(levi_x.k))
            ):
                px = tuple(part) + (0,) * (n_x - len(part))
                py = tuple(part) + (0,) * (n_y - len(part))
                wx.extend(p + rho for p, rho in zip(px, levi_x.rho[stx:spx]))
                wy.extend(p + rho for p, rho in zip(py, levi_y.rho[sty:spy]))
            ex = semi_E(levi_x, tuple(wx)).mul_monomial(neg_rx).subs_q_inv()
            fy = semi_F(levi_y, tuple(wy)).mul_monomial(neg_ry)
            acc = acc + _tensor(ex, fy)
        if acc != layers[d]:
            return f"Cauchy layer t^{d} mismatch for r={r}, s={s}, sigma={sigma}"
    return None


# ---------------------------------------------------------------------------
# the stable expansion of a block Catalanimal into LLT series


def stable_main_check(
    h, p: EpsReal, s, u, v, gamma, sample_weights, tmax: int
) -> str | None:
    """Verify, character by character, that the block Catalanimal built
    from the slope data expands as the t-graded sum of LLT series.

    The slope p and intercept s cut the integers f_i = floor(s - p i) and
    jumps b_i = f_{i-1} - f_i; the ranks of the fractional parts of
    s - p i form a winding permutation whose head and tail steer the
    series twists.  u and v offset the blocks of sizes gamma: the
    Catalanimal has weight (u_i - v_i + b_i) repeated gamma_i times with
    q- and t-factors on cross-block roots and qt-numerators on roots
    crossing two non-adjacent blocks.  For every sampled dominant weight
    the character coefficient of that Catalanimal must match, through
    t-degree tmax, the coefficient sum over LLT series indexed by tuples
    of partitions.  Hypothesis violations raise ValueError.
    """
    u = tuple(int(x) for x in u)
    v = tuple(int(x) for x in v)
    gamma = tuple(int(x) for x in gamma)
    h = int(h)
    if not (len(u) == len(v) == len(gamma) == h and h >= 1):
        raise ValueError("u, v, gamma must all have length h >= 1")
    if any(g <= 0 for g in gamma):
        raise ValueError("block lengths gamma must be positive")
    for i in range(h - 1):
        if gamma[i + 1] - gamma[i] != u[i] - v[i + 1]:
            raise ValueError(
                "gamma increments must equal u_i - v_{i+1}"
            )
    if tmax < 0:
        raise ValueError("tmax must be nonnegative")
    fs = [(s - p * i).floor() for i in range(h + 1)]
    b = tuple(fs[i - 1] - fs[i] for i in range(1, h + 1))
    sigma = relative_order([(s - p * i).frac() for i in range(h + 1)])
    _eta, tau, theta = head_tail(sigma)
    if not almost_decreasing(u, inverse_perm(theta)):
        raise ValueError("u fails its almost-decreasing hypothesis")
    if not almost_increasing(v, inverse_perm(tau)):
        raise ValueError("v fails its almost-increasing hypothesis")
    l = sum(gamma)
    samples = []
    for lam in sample_weights:
        lam = tuple(int(x) for x in lam)
        if len(lam) != l or any(lam[c] < lam[c + 1] for c in range(l - 1)):
            raise ValueError(
                f"sample weights must be dominant of length {l}: {lam}"
            )
        if lam not in samples:
            samples.append(lam)
    if not samples:
        raise ValueError("at least one sample weight is required")
    weight = tuple(
        w
        for ui, vi, bi, g in zip(u, v, b, gamma)
        for w in [ui - vi + bi] * g
    )
    cross, far = _block_roots(gamma)
    cat = Catalanimal(l, cross, cross, far, weight)
    rev = tuple(reversed(gamma))
    sig_l = tuple(reversed(tau))
    levi = LeviData.from_minima(rev, sig_l, tuple(reversed(u)))
    caps = [min(gamma[i], gamma[i + 1]) for i in range(h - 1)]
    zero = QtLaurent.zero()
    rhs = [{lam: zero for lam in samples} for _ in range(tmax + 1)]
    for d in range(tmax + 1):
        for mutup in _block_weights(d, caps):
            beta, alpha = [], []
            for i in range(1, h + 1):
                o = h + 1 - i
                n = gamma[o - 1]
                bpart = mutup[o - 1] if i >= 2 else ()
                apart = mutup[o - 2] if i <= h - 1 else ()
                bpad = tuple(bpart) + (0,) * (n - len(bpart))
                apad = tuple(apart) + (0,) * (n - len(apart))
                for j in range(1, n + 1):
                    beta.append(bpad[j - 1] + b[o - 1] + u[o - 1] + n - j)
                    alpha.append(apad[j - 1] + v[o - 1] + n - j)
            spec = LLTSeriesSpec(levi, tuple(alpha), tuple(beta))
            coeffs = _series_coeffs_symmetrized(spec, samples)
            for lam in samples:
                rhs[d][lam] = rhs[d][lam] + coeffs[lam]
    for lam in samples:
        lhs = character_coefficient(cat, lam)
        by_t: dict[int, dict] = {}
        for (a, tb), c in lhs.terms.items():
            by_t.setdefault(tb, {})[(a, 0)] = c
        for d in range(tmax + 1):
            if QtLaurent(by_t.get(d)) != rhs[d][lam]:
                return (
                    f"character {lam}: t^{d} layer differs between the "
                    f"Catalanimal and the LLT series sum"
                )
    return None


def den_stable_instance(den: Den, s=None):
    """Stable-identity parameters read off a den: (h, p, s, u, v, gamma)
    with s a line height above all heads and feet, u_i the gap from the
    line lattice to the i-th foot, v_i the gap to the (i-1)-th head, and
    gamma the den's column multiplicities."""
    msg = den_validate(den)
    if msg is not None:
        raise ValueError(msg)
    if s is None:
        s = _line_height(den)
    f = [(s - den.p * i).floor() for i in range(den.h + 1)]
    u = tuple(f[i] - den.e[i] for i in range(1, den.h + 1))
    v = tuple(f[i - 1] - den.d[i - 1] for i in range(1, den.h + 1))
    return den.h, den.p, s, u, v, g_vector(den)

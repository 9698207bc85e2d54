"""LLT polynomials of skew-diagram tuples, their omega-images, and the
triple-counting generating function attached to a component permutation.

The generating function over semistandard fillings is computed letter by
letter: the boxes holding letters <= c form west-justified prefixes of every
row, so the fill state is one counter per row.  Only weakly decreasing letter
multiplicities are tracked (the sum is symmetric), and the Schur expansion is
recovered from those dominant monomial coefficients by unitriangular
elimination against Kostka vectors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial

from .exactnum import (
    QtLaurent,
    MultiLaurent,
    SchurPoly,
    normalize_partition,
    partitions,
    schur_expand,
    schur_in_vars,
)
from .shapes import Box, SkewTuple, enumerate_ssyt


def inv_stat(nu: SkewTuple, filling: dict[Box, int], negative: bool = False) -> int:
    """Attacking inversions of a filling: pairs (a, b), a before b in reading
    order, with strictly larger label on a (weakly larger for negative)."""
    if negative:
        return sum(
            1 for a, b in nu.attacking_pairs() if filling[a] >= filling[b]
        )
    return sum(1 for a, b in nu.attacking_pairs() if filling[a] > filling[b])


class _TupleFiller:
    """Per-letter fill states and transitions for one tuple of diagrams."""

    def __init__(self, nu: SkewTuple, negative: bool):
        self.negative = negative
        self.total = nu.size
        self.comp_rows = []
        for comp in nu.components:
            self.comp_rows.append([(y, a, b) for y, a, b in comp.rows()])
        att_later: dict[Box, list[Box]] = {}
        att_earlier: dict[Box, list[Box]] = {}
        for a, b in nu.attacking_pairs():
            att_later.setdefault(a, []).append(b)
            att_earlier.setdefault(b, []).append(a)
        self.att_later = att_later
        self.att_earlier = att_earlier
        self.start = tuple(
            tuple(0 for _ in rows) for rows in self.comp_rows
        )
        self._transition_cache: dict[tuple, list] = {}

    def _is_filled(self, state, box: Box) -> bool:
        for r, (y, a, b) in enumerate(self.comp_rows[box.component]):
            if y == box.y:
                return a < box.x <= a + state[box.component][r]
        return False

    def _component_extensions(self, ci: int, fills):
        """All ways to place the next letter in component ci: returns pairs
        (new fill counts, boxes added)."""
        rows = self.comp_rows[ci]
        out = []

        def south_filled_before(x, y):
            for r, (yy, a, b) in enumerate(rows):
                if yy == y - 1:
                    return a < x <= a + fills[r]
            return None  # no such row

        def in_shape_below(x, y):
            for yy, a, b in rows:
                if yy == y - 1:
                    return a < x <= b
            return False

        if not self.negative:
            # weak rows, strict columns: any run per row whose south
            # neighbours were all filled in earlier rounds
            options = []
            for r, (y, a, b) in enumerate(rows):
                max_add = 0
                for x in range(a + fills[r] + 1, b + 1):
                    if in_shape_below(x, y) and not south_filled_before(x, y):
                        break
                    max_add += 1
                options.append(range(max_add + 1))
            for adds in itertools.product(*options):
                new = tuple(f + d for f, d in zip(fills, adds))
                boxes = tuple(
                    Box(ci, x, rows[r][0])
                    for r, d in enumerate(adds)
                    for x in range(
                        rows[r][1] + fills[r] + 1, rows[r][1] + fills[r] + d + 1
                    )
                )
                out.append((new, boxes))
            return out

        # strict rows, weak columns: at most one box per row, and the box
        # below may be filled either earlier or by this same letter
        def rec(r, acc, boxes):
            if r == len(rows):
                out.append((tuple(acc), tuple(boxes)))
                return
            y, a, b = rows[r]
            rec(r + 1, acc + [fills[r]], boxes)
            if fills[r] < b - a:
                x = a + fills[r] + 1
                ok = True
                if in_shape_below(x, y):
                    below_r = r - 1
                    ya, aa, bb = rows[below_r]
                    if not (aa < x <= aa + acc[below_r]):
                        ok = False
                if ok:
                    rec(r + 1, acc + [fills[r] + 1], boxes + [Box(ci, x, y)])

        rec(0, [], [])
        return out

    def transitions(self, state):
        """All joint next-letter placements from a fill state: returns
        (new state, number of boxes added, q-exponent of the step)."""
        cached = self._transition_cache.get(state)
        if cached is not None:
            return cached
        per_comp = [
            self._component_extensions(ci, fills)
            for ci, fills in enumerate(state)
        ]
        results = []

        def rec(ci, acc, added, qpow):
            if ci == len(per_comp):
                results.append((tuple(acc), len(added), qpow))
                return
            for new_fills, boxes in per_comp[ci]:
                w = qpow
                for u in boxes:
                    for v in self.att_later.get(u, ()):
                        if self._is_filled(state, v):
                            w += 1
                    if self.negative:
                        for v in self.att_later.get(u, ()):
                            if v in added or v in boxes:
                                w += 1
                        for v in self.att_earlier.get(u, ()):
                            if v in added or v in boxes:
                                w += 1
                rec(ci + 1, acc + [new_fills], added | set(boxes), w)

        rec(0, [], frozenset(), 0)
        self._transition_cache[state] = results
        return results

    def filling_count(self, max_letter: int) -> int:
        """Number of complete fillings with letters in [1, max_letter]."""
        dp = {self.start: 1}
        for _ in range(max_letter):
            ndp: dict = {}
            for state, cnt in dp.items():
                for new_state, _, _ in self.transitions(state):
                    ndp[new_state] = ndp.get(new_state, 0) + cnt
            dp = ndp
        done = 0
        for state, cnt in dp.items():
            if sum(map(sum, state)) == self.total:
                done += cnt
        return done


def _partition_coefficients(
    nu: SkewTuple, l: int, negative: bool
) -> dict[tuple, QtLaurent]:
    """Coefficient of z^mu, mu a partition padded to l letters, in the
    inversion-weighted sum over (positive or negative) fillings of nu."""
    filler = _TupleFiller(nu, negative)
    total = filler.total
    dp: dict[tuple, dict[tuple, QtLaurent]] = {
        filler.start: {(): QtLaurent.one()}
    }
    for step in range(l):
        letters_left = l - step - 1
        ndp: dict[tuple, dict[tuple, QtLaurent]] = {}
        for state, prefixes in dp.items():
            max_bound = max(
                (p[-1] if p else total + 1) for p in prefixes
            )
            filled_now = sum(map(sum, state))
            for new_state, add, qpow in filler.transitions(state):
                if add > max_bound:
                    continue
                if total - (filled_now + add) > letters_left * add:
                    continue
                factor = QtLaurent.q_power(qpow)
                bucket = ndp.setdefault(new_state, {})
                for prefix, coeff in prefixes.items():
                    if prefix and add > prefix[-1]:
                        continue
                    key = prefix + (add,)
                    prev = bucket.get(key)
                    term = coeff * factor
                    bucket[key] = term if prev is None else prev + term
        dp = ndp

    out: dict[tuple, QtLaurent] = {}
    grand_total = 0
    for state, prefixes in dp.items():
        if sum(map(sum, state)) != total:
            continue
        for prefix, coeff in prefixes.items():
            mu = normalize_partition(prefix)
            out[mu] = coeff
            reps = factorial(l)
            for v in set(prefix):
                reps //= factorial(prefix.count(v))
            grand_total += int(coeff.evaluate(1, 1)) * reps

    # independent cross-check: the monomial coefficients at q=1 must count
    # every filling exactly once
    expected = filler.filling_count(l)
    if grand_total != expected:
        raise AssertionError(
            "tableau generating sum is not symmetric; "
            f"counted {grand_total}, expected {expected}"
        )
    return out


def _kostka(lam: tuple, mu: tuple, l: int) -> int:
    padded = tuple(mu) + (0,) * (l - len(mu))
    c = schur_in_vars(lam, l).coeff(padded)
    return c.terms.get((0, 0), 0)


def _schur_from_partition_coefficients(
    coeffs: dict[tuple, QtLaurent], degree: int, l: int
) -> SchurPoly:
    result: dict[tuple, QtLaurent] = {}
    for mu in partitions(degree, max_len=l):
        val = coeffs.get(mu, QtLaurent.zero())
        for lam, c in result.items():
            k = _kostka(lam, mu, l)
            if k:
                val = val - c * k
        if val:
            result[mu] = val
    return SchurPoly(l, result)


def llt_poly(nu: SkewTuple, l: int | None = None, qexp: int = 1) -> SchurPoly:
    """The tableau generating function of the tuple in the Schur basis:
    sum over semistandard fillings with letters <= l of q^(qexp * inv).

    ``l`` defaults to the total row count of the tuple, which is always
    enough to determine the full Schur expansion.
    """
    if l is None:
        l = max(nu.total_rows, 1)
    if qexp not in (1, -1):
        raise ValueError("qexp must be +1 or -1")
    coeffs = _partition_coefficients(nu, l, negative=False)
    poly = _schur_from_partition_coefficients(coeffs, nu.size, l)
    if qexp == -1:
        poly = poly.map_coeffs(lambda c: c.subs_q_inv())
    return poly


def omega_llt(nu: SkewTuple, l: int | None = None) -> SchurPoly:
    """Generating function over negative fillings (strict rows, weak columns,
    weak attacking inversions), which computes omega of llt_poly."""
    if l is None:
        l = max(nu.total_rows, nu.size, 1)
    coeffs = _partition_coefficients(nu, l, negative=True)
    return _schur_from_partition_coefficients(coeffs, nu.size, l)


# ---------------------------------------------------------------------------
# component-permutation triples


@dataclass(frozen=True)
class TripleSpec:
    """A tuple of diagrams with a permutation of its components.

    ``sigma[i]`` is the (1-based) image of component i+1.  The triple set
    depends on the row presentation of each component, including empty rows.
    """

    nu: SkewTuple
    sigma: tuple[int, ...]

    def __post_init__(self):
        k = len(self.nu.components)
        if sorted(self.sigma) != list(range(1, k + 1)):
            raise ValueError("sigma must be a permutation of the components")


def sigma_rearrange(nu: SkewTuple, sigma: tuple[int, ...]) -> SkewTuple:
    """Reorder components so component i lands in position sigma(i)."""
    comps: list = [None] * len(nu.components)
    for i, comp in enumerate(nu.components):
        comps[sigma[i] - 1] = comp
    return SkewTuple(tuple(comps))


def sigma_triples(spec: TripleSpec) -> tuple[int, tuple]:
    """All triples (a, b, c): b a box of a component i, (a, c) horizontally
    adjacent straddling a row of a later component j, with content(b) equal
    to content(c) when sigma(i) < sigma(j) and to content(a) otherwise.

    Returns (count, triples).  The outer boxes a, c may fall outside the
    tuple; they are still reported, tagged with component j.
    """
    comps = spec.nu.components
    sigma = spec.sigma
    by_content: dict[tuple[int, int], list[Box]] = {}
    for i, comp in enumerate(comps):
        for x, y in comp.boxes():
            by_content.setdefault((i, x - y), []).append(Box(i, x, y))
    triples = []
    for j, comp in enumerate(comps):
        for y, a_end, b_end in comp.rows():
            for x in range(a_end, b_end + 1):
                for i in range(j):
                    want = x + 1 - y if sigma[i] < sigma[j] else x - y
                    for b in by_content.get((i, want), ()):
                        triples.append(
                            (Box(j, x, y), b, Box(j, x + 1, y))
                        )
    return len(triples), tuple(triples)


def increasing_triples(
    triples: tuple, filling: dict[Box, int]
) -> int:
    """Count triples with labels increasing a < b < c; a missing outer box
    counts as minus or plus infinity respectively."""
    cnt = 0
    for a, b, c in triples:
        tb = filling[b]
        ta = filling.get(a)
        if ta is not None and ta >= tb:
            continue
        tc = filling.get(c)
        if tc is not None and tb >= tc:
            continue
        cnt += 1
    return cnt


def n_sigma(spec: TripleSpec, l: int | None = None) -> SchurPoly:
    """Generating function over negative fillings weighted by the number of
    increasing triples, in the Schur basis."""
    nu = spec.nu
    if l is None:
        l = max(nu.total_rows, nu.size, 1)
    _, triples = sigma_triples(spec)
    acc = MultiLaurent.zero(l)
    for filling in enumerate_ssyt(nu, l, negative=True):
        exps = [0] * l
        for v in filling.values():
            exps[v - 1] += 1
        acc = acc + MultiLaurent.monomial(
            tuple(exps), QtLaurent.q_power(increasing_triples(triples, filling))
        )
    return schur_expand(acc)

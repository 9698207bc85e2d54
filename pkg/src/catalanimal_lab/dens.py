"""Dens, nests of lattice paths, their statistics, and the combinatorial
side of the main polynomial identity.

A den is a pair of head and foot sequences over x = 0..h with slope
conditions measured against an irrational slope p (kept exact through the
eps-augmented rationals).  Nests are systems of nested east-end paths from
the den's sources to its sinks; they are stored canonically as the tuple of
partitions that parameterizes them, with explicit paths as a derived view.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from .exactnum import EpsReal, Partition, QtLaurent, SchurPoly, is_partition
from .llt import llt_poly
from .shapes import Box, SkewShape, SkewTuple, gamma_of, magic_number, n_prime


@dataclass(frozen=True)
class Den:
    """Heads (i, d_i) and feet (i, e_i) for i = 0..h, with slope p."""

    h: int
    p: EpsReal
    d: tuple[int, ...]
    e: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "d", tuple(self.d))
        object.__setattr__(self, "e", tuple(self.e))
        if self.h < 1:
            raise ValueError("h must be at least 1")
        if len(self.d) != self.h + 1 or len(self.e) != self.h + 1:
            raise ValueError("d and e must have length h+1")
        if not isinstance(self.p, EpsReal) or not self.p.b:
            raise ValueError("p must have a nonzero eps part")


def validate(den: Den) -> str | None:
    """None when the den inequalities hold, else a report naming the first
    violated one."""
    h, p, d, e = den.h, den.p, den.d, den.e
    for i in range(h):
        for j in range(i + 1, h):
            if not (d[i] - d[j] + 1 > p * (j - i)):
                return f"head spacing fails at i={i}, j={j}"
    for i in range(1, h + 1):
        for j in range(i + 1, h + 1):
            if not (e[i] - e[j] - 1 < p * (j - i)):
                return f"foot spacing fails at i={i}, j={j}"
    if not d[0] > e[0]:
        return "d_0 must exceed e_0"
    if not d[h] < e[h]:
        return "d_h must be less than e_h"
    if sum(d) != sum(e):
        return "head and foot sums differ"
    return None


def g_vector(den: Den) -> tuple[int, ...]:
    """g_k = number of east steps from x = k-1 to x = k in any nest."""
    out = []
    acc = 0
    for i in range(den.h):
        acc += den.d[i] - den.e[i]
        out.append(acc)
    return tuple(out)


def sources(den: Den) -> tuple[tuple[int, int], ...]:
    """Source points, in path order: left to right, bottom to top."""
    return tuple(
        (i, j)
        for i in range(den.h + 1)
        for j in range(den.e[i] + 1, den.d[i] + 1)
    )


def sinks(den: Den) -> tuple[tuple[int, int], ...]:
    """Sink points, in path order: right to left, bottom to top."""
    pts = [
        (i, j)
        for i in range(den.h + 1)
        for j in range(den.d[i] + 1, den.e[i] + 1)
    ]
    return tuple(sorted(pts, key=lambda pt: (-pt[0], pt[1])))


def _part(lam: tuple[int, ...], i: int) -> int:
    return lam[i - 1] if i <= len(lam) else 0


@dataclass(frozen=True)
class Nest:
    """A nest, stored as its parameterizing partition tuple.

    ``lambdas[k-1]`` is the partition attached to the line x = k, for
    k = 1..h-1.  Construction checks the interval conditions exactly.
    """

    den: Den
    lambdas: tuple[Partition, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "lambdas", tuple(tuple(lam) for lam in self.lambdas)
        )
        den = self.den
        if len(self.lambdas) != den.h - 1:
            raise ValueError("need h-1 partitions")
        g = g_vector(den)
        for k, lam in enumerate(self.lambdas, start=1):
            if not is_partition(lam):
                raise ValueError(f"lambda_({k}) is not a partition")
            if len(lam) > min(g[k - 1], g[k]):
                raise ValueError(f"lambda_({k}) is too long")
        for k in range(1, den.h + 1):
            lo = den.e[k] - g[k - 1]
            hi = den.e[k - 1] - (g[k - 2] if k >= 2 else 0)
            cur = self.lambdas[k - 1] if k <= den.h - 1 else ()
            prev = self.lambdas[k - 2] if k >= 2 else ()
            for i in range(1, g[k - 1] + 1):
                if lo - _part(cur, i) > hi - _part(prev, i):
                    raise ValueError(
                        f"empty path interval at x = {k - 1}, path {i}"
                    )

    def _lam(self, k: int) -> tuple[int, ...]:
        if 1 <= k <= self.den.h - 1:
            return self.lambdas[k - 1]
        return ()


def _east_y(den: Den, g, nest: Nest, k: int, i: int) -> int:
    return den.e[k] - g[k - 1] + i - _part(nest._lam(k), i)


def _interval(den: Den, g, nest: Nest, k: int, i: int) -> tuple[int, int]:
    """y-range [lo, hi] of non-sink lattice points of path i at x = k-1."""
    lo = _east_y(den, g, nest, k, i)
    g_prev = g[k - 2] if k >= 2 else 0
    hi = den.e[k - 1] - g_prev + i - _part(nest._lam(k - 1), i)
    return lo, hi


def _bounded_partitions(bounds: tuple[int, ...]):
    """Weakly decreasing positive tuples with entry i at most bounds[i],
    in increasing lexicographic order, the empty tuple first."""

    def build(idx, cap):
        yield ()
        if idx == len(bounds):
            return
        for v in range(1, min(cap, bounds[idx]) + 1):
            for rest in build(idx + 1, v):
                yield (v,) + rest

    return build(0, bounds[0] if bounds else 0)


def iter_nests(den: Den):
    """All nests of the den, as a stream of Nest values, in a fixed order
    (lexicographic in the partition tuple, last line first)."""
    bad = validate(den)
    if bad is not None:
        raise ValueError(f"invalid den: {bad}")
    h = den.h
    g = g_vector(den)
    eg = [den.e[k] - (g[k - 1] if k >= 1 else 0) for k in range(h + 1)]

    if h == 1:
        if eg[1] <= eg[0]:
            yield Nest(den, ())
        return

    def rec(k, upper):
        # choose lambda_(k); `upper` is lambda_(k+1) (empty for k = h-1)
        delta = eg[k] - eg[k + 1]
        if any(_part(upper, i) + delta < 0 for i in range(1, g[k] + 1)):
            return
        caps = tuple(
            _part(upper, i) + delta
            for i in range(1, min(g[k - 1], g[k]) + 1)
        )
        for lam in _bounded_partitions(caps):
            if k == 1:
                if _part(lam, g[0]) + (eg[0] - eg[1]) >= 0:
                    yield (lam,)
            else:
                for tail in rec(k - 1, lam):
                    yield tail + (lam,)

    for lambdas in rec(h - 1, ()):
        yield Nest(den, lambdas)


@dataclass(frozen=True)
class NestEnumeration:
    nests: tuple[Nest, ...]
    truncated: bool

    def __iter__(self):
        return iter(self.nests)

    def __len__(self):
        return len(self.nests)


def enumerate_nests(den: Den, cap: int | None = None) -> NestEnumeration:
    """Materialize the nest stream; stops after ``cap`` nests and flags
    truncation instead of running the rest."""
    out = []
    for nest in iter_nests(den):
        if cap is not None and len(out) == cap:
            return NestEnumeration(tuple(out), True)
        out.append(nest)
    return NestEnumeration(tuple(out), False)


def nest_paths(nest: Nest) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Explicit lattice points of each path, source to sink."""
    den = nest.den
    g = g_vector(den)
    r = max(g)
    paths = []
    for i in range(1, r + 1):
        cols = [k for k in range(1, den.h + 1) if g[k - 1] >= i]
        k0, k1 = cols[0], cols[-1]
        pts = []
        for k in range(k0, k1 + 1):
            lo, hi = _interval(den, g, nest, k, i)
            pts.extend((k - 1, y) for y in range(hi, lo - 1, -1))
        pts.append((k1, _east_y(den, g, nest, k1, i)))
        paths.append(tuple(pts))
    return tuple(paths)


def lambdas_from_paths(den: Den, paths) -> tuple[tuple[int, ...], ...]:
    """Recover the parameterizing partitions from explicit paths (the
    inverse of nest_paths)."""
    g = g_vector(den)
    east_y: dict[int, list[int]] = {}
    for pts in paths:
        for (x1, y1), (x2, _) in zip(pts, pts[1:]):
            if x2 == x1 + 1:
                east_y.setdefault(x2, []).append(y1)
    out = []
    for k in range(1, den.h):
        ys = sorted(east_y.get(k, ()))
        lam = [den.e[k] - g[k - 1] + i - ys[i - 1] for i in range(1, len(ys) + 1)]
        while lam and lam[-1] == 0:
            lam.pop()
        out.append(tuple(lam))
    return tuple(out)


def area_stat(nest: Nest) -> int:
    """a = total size of the parameterizing partitions."""
    return sum(sum(lam) for lam in nest.lambdas)


def _incidences(nest: Nest):
    """Point and south-step incidences of the nest, per path.

    Returns (points, steps): points are (x, y, path) for every non-sink
    lattice point, steps are (x, y_south, path) for every south step.
    """
    points = []
    steps = []
    for i, pts in enumerate(nest_paths(nest), start=1):
        for pt in pts[:-1]:
            points.append((pt[0], pt[1], i))
        for (x1, y1), (x2, y2) in zip(pts, pts[1:]):
            if y2 == y1 - 1:
                steps.append((x1, y2, i))
    return points, steps


def dinv_stat(nest: Nest) -> int:
    """Number of (point, south step) pairs, with path multiplicity, where
    the slope -p line through the point crosses the step's interior."""
    p = nest.den.p
    points, steps = _incidences(nest)
    step_vals = [(x, EpsReal(y) + p * x) for x, y, _ in steps]
    cnt = 0
    for px, py, _ in points:
        pv = EpsReal(py) + p * px
        for sx, sv in step_vals:
            if px < sx:
                diff = pv - sv
                if EpsReal(0) < diff < EpsReal(1):
                    cnt += 1
    return cnt


def _line_height(den: Den) -> EpsReal:
    best = None
    for i in range(den.h + 1):
        for y in (den.d[i], den.e[i]):
            v = EpsReal(y) + den.p * i
            if best is None or v > best:
                best = v
    return best


def _line_data(den: Den, s) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Component positions and integer offsets of the cutting line at each
    column; ``s`` may be None (lowest legal line), EpsReal, int or Fraction.
    """
    s_min = _line_height(den)
    if s is None:
        s = s_min
    elif not isinstance(s, EpsReal):
        s = EpsReal(s)
    if s < s_min:
        raise ValueError("line must pass weakly above every head and foot")
    gaps = [(s - den.p * (k - 1)).frac() for k in range(1, den.h + 1)]
    order = sorted(range(den.h), key=lambda idx: gaps[idx])
    sigma = [0] * den.h
    for rank, idx in enumerate(order, start=1):
        sigma[idx] = rank
    origins = tuple(
        (s - den.p * (k - 1)).floor() for k in range(1, den.h + 1)
    )
    return tuple(sigma), origins


def nu_of_nest(
    nest: Nest, s: EpsReal | int | Fraction | None = None
) -> tuple[SkewTuple, tuple[int, ...]]:
    """The tuple of skew diagrams cut out by the line y + p x = s, plus the
    permutation sending line index k to component position.

    Components are ordered by increasing gap between the line and the
    highest lattice point below it; rows of each component are the south
    runs of the paths crossing that line, bottom to top.
    """
    den = nest.den
    g = g_vector(den)
    sigma, origins = _line_data(den, s)
    comps: list[SkewShape | None] = [None] * den.h
    for k in range(1, den.h + 1):
        origin = origins[k - 1]
        alpha = []
        beta = []
        for i in range(1, g[k - 1] + 1):
            lo, hi = _interval(den, g, nest, k, i)
            alpha.append(origin - hi + i)
            beta.append(origin - lo + i)
        comps[sigma[k - 1] - 1] = SkewShape(tuple(alpha), tuple(beta))
    return SkewTuple(tuple(comps)), tuple(sigma)


def nu_box_steps(
    nest: Nest, s: EpsReal | int | Fraction | None = None
) -> dict:
    """Map each box of ``nu_of_nest(nest, s)`` to the south-step incidence
    it records, as (column, south endpoint height, path index)."""
    den = nest.den
    g = g_vector(den)
    sigma, origins = _line_data(den, s)
    out = {}
    for k in range(1, den.h + 1):
        origin = origins[k - 1]
        comp = sigma[k - 1] - 1
        for i in range(1, g[k - 1] + 1):
            lo, hi = _interval(den, g, nest, k, i)
            for x in range(origin - hi + i + 1, origin - lo + i + 1):
                out[Box(comp, x, i)] = (k - 1, origin - (x - i), i)
    return out


def rhs_nest_sum(den: Den, l: int | None = None) -> SchurPoly:
    """Sum over nests of t^a q^dinv times the tableau generating function
    of the nest's skew tuple with inverted q."""
    g = g_vector(den)
    if l is None:
        l = sum(g)
    total = SchurPoly.zero(max(l, 1))
    for nest in iter_nests(den):
        nu, _ = nu_of_nest(nest)
        weight = QtLaurent.qt_power(dinv_stat(nest), area_stat(nest))
        total = total + llt_poly(nu, l, qexp=-1) * weight
    return total


# ---------------------------------------------------------------------------
# the den attached to a partition with slope parameters (m, n)


@dataclass(frozen=True)
class LWDenSpec:
    mu: Partition
    m: int
    n: int

    def __post_init__(self):
        object.__setattr__(self, "mu", tuple(self.mu))
        if not (self.mu and is_partition(self.mu)):
            raise ValueError("mu must be a nonempty partition")
        if self.m < 1 or self.n < 1 or gcd(self.m, self.n) != 1:
            raise ValueError("m and n must be coprime positive integers")


def lw_den(spec: LWDenSpec) -> Den:
    """The den whose nests encode systems of m-Dyck paths for mu."""
    mu, m, n = spec.mu, spec.m, spec.n
    hook = mu[0] + len(mu) - 1
    h = m * hook
    last_contents = {mu[i] - (i + 1) for i in range(len(mu))}
    d = []
    e = []
    for i in range(h + 1):
        if i % m:
            v = (n * hook * m - i * n) // m
            d.append(v)
            e.append(v)
        else:
            j = i // m
            delta = 1 if (mu[0] - 1 - j) in last_contents else 0
            eps = 1 if j >= mu[0] else 0
            d.append(n * hook - n * j + delta - 1)
            e.append(n * hook - n * j + eps - 1)
    return Den(h, EpsReal(Fraction(n, m), -1), tuple(d), tuple(e))


def b_vec(m: int, n: int) -> tuple[int, ...]:
    """Ceiling-difference spacing of n among m slots."""
    return tuple(
        -((-i * n) // m) - -((-(i - 1) * n) // m) for i in range(1, m + 1)
    )


@dataclass(frozen=True)
class LWStatistics:
    sshare: int
    attacking_count: int
    delta_stat: int
    lw_dinv: int
    lw_area: int


def lw_statistics(spec: LWDenSpec, nest: Nest) -> LWStatistics:
    """Path statistics matching the Dyck-path model for slope 1/m."""
    if spec.n != 1:
        raise ValueError("statistics are defined for n = 1")
    den = lw_den(spec)
    if nest.den != den:
        raise ValueError("nest does not belong to the den for this spec")
    m = spec.m
    mu_shape = SkewShape.from_partition(spec.mu)
    nprime = n_prime(gamma_of(mu_shape))
    magic = magic_number(mu_shape)

    _, steps = _incidences(nest)
    by_step: dict[tuple[int, int], int] = {}
    for x, y, _ in steps:
        by_step[(x, y)] = by_step.get((x, y), 0) + 1
    sshare = sum(comb(c, 2) for c in by_step.values())

    nu, _ = nu_of_nest(nest)
    attacking = len(nu.attacking_pairs())

    delta = 0
    for (x1, y1), c1 in by_step.items():
        base = m * y1 + x1
        for (x2, y2), c2 in by_step.items():
            if x2 >= x1:
                continue
            low = m * y2 + x2
            if base <= low < base + m:
                delta += (m - (low - base) - 1) * c1 * c2
            elif base < low + m < base + m:
                delta += (low + m - base) * c1 * c2

    offset = magic + m * nprime
    return LWStatistics(
        sshare=sshare,
        attacking_count=attacking,
        delta_stat=delta,
        lw_dinv=offset + dinv_stat(nest),
        lw_area=offset + area_stat(nest),
    )


# ---------------------------------------------------------------------------
# interchange formats


def den_to_json(den: Den) -> str:
    if den.p.b not in (1, -1):
        raise ValueError("only eps coefficients of +1 or -1 serialize")
    payload = {
        "h": den.h,
        "p": {"r": str(den.p.a), "eps": int(den.p.b)},
        "d": list(den.d),
        "e": list(den.e),
    }
    return json.dumps(payload)


def den_from_json(text: str) -> Den:
    data = json.loads(text)
    p = EpsReal(Fraction(data["p"]["r"]), data["p"]["eps"])
    return Den(data["h"], p, tuple(data["d"]), tuple(data["e"]))


def nest_to_json(nest: Nest) -> str:
    return json.dumps({"lambdas": [list(lam) for lam in nest.lambdas]})


def nest_from_json(den: Den, text: str) -> Nest:
    data = json.loads(text)
    return Nest(den, tuple(tuple(lam) for lam in data["lambdas"]))

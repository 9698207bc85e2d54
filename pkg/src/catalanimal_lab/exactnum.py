"""Exact arithmetic substrate.

Laurent polynomials in q,t over the integers, the ordered field Q + Q*eps,
sparse multivariate Laurent polynomials with QtLaurent coefficients, Weyl
straightening into the Schur basis, and the bounded Kostant-type series
expansion used by constant-term extraction.

No floats and no division anywhere: every object is exact, and all values
are immutable after construction.
"""

from __future__ import annotations

from fractions import Fraction


class QtLaurent:
    """Sparse Laurent polynomial in q and t with integer coefficients.

    ``terms`` maps exponent pairs (a, b) to the nonzero integer coefficient
    of q^a t^b.  Zero coefficients are never stored, so two values are equal
    iff their term dicts are equal.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(0, 0): 1})

    @classmethod
    def term(cls, c, a=0, b=0):
        return cls({(a, b): c})

    @classmethod
    def q_power(cls, a):
        return cls({(a, 0): 1})

    @classmethod
    def qt_power(cls, a, b):
        return cls({(a, b): 1})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QtLaurent.term(other)
        if not isinstance(other, QtLaurent):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other):
        if isinstance(other, int):
            other = QtLaurent.term(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        res = QtLaurent.__new__(QtLaurent)
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = QtLaurent.__new__(QtLaurent)
        res.terms = {k: -c for k, c in self.terms.items()}
        return res

    def __sub__(self, other):
        if isinstance(other, int):
            other = QtLaurent.term(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return QtLaurent.zero()
            res = QtLaurent.__new__(QtLaurent)
            res.terms = {k: c * other for k, c in self.terms.items()}
            return res
        if not isinstance(other, QtLaurent):
            return NotImplemented
        out = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                s = out.get(k, 0) + c1 * c2
                if s:
                    out[k] = s
                else:
                    del out[k]
        res = QtLaurent.__new__(QtLaurent)
        res.terms = out
        return res

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if len(self.terms) == 1:
                (a, b), c = next(iter(self.terms.items()))
                if c == 1:
                    return QtLaurent({(a * n, b * n): 1})
            raise ValueError("negative power of a non-monomial")
        out = QtLaurent.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def map_exponents(self, fn):
        out = {}
        for (a, b), c in self.terms.items():
            k = fn(a, b)
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                del out[k]
        res = QtLaurent.__new__(QtLaurent)
        res.terms = out
        return res

    def subs_q_inv(self):
        """Substitute q -> q^-1."""
        return self.map_exponents(lambda a, b: (-a, b))

    def bar(self):
        """Substitute q -> q^-1 and t -> t^-1."""
        return self.map_exponents(lambda a, b: (-a, -b))

    def swap_qt(self):
        return self.map_exponents(lambda a, b: (b, a))

    def evaluate(self, q0, t0):
        q0, t0 = Fraction(q0), Fraction(t0)
        total = Fraction(0)
        for (a, b), c in self.terms.items():
            total += c * q0**a * t0**b
        return total

    def is_natural(self):
        """True iff the value lies in N[q,t]: nonnegative exponents and coefficients."""
        return all(a >= 0 and b >= 0 and c > 0 for (a, b), c in self.terms.items())

    def terms_sorted(self):
        return sorted(self.terms.items())

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for (a, b), c in self.terms_sorted():
            factors = []
            if a:
                factors.append("q" if a == 1 else f"q^{a}")
            if b:
                factors.append("t" if b == 1 else f"t^{b}")
            if not factors or abs(c) != 1:
                factors.insert(0, str(abs(c)))
            body = "*".join(factors)
            chunks.append(("- " if c < 0 else "+ ") + body)
        head = chunks[0][2:] if chunks[0][0] == "+" else "-" + chunks[0][2:]
        return " ".join([head] + chunks[1:])

    def __repr__(self):
        return f"QtLaurent({self.terms!r})"


class EpsReal:
    """Element a + b*eps of the ordered field Q + Q*eps, eps > 0 infinitesimal.

    The order is lexicographic on (a, b).  Products of two elements that both
    have a nonzero eps part would leave the representable set and raise.
    """

    __slots__ = ("a", "b")

    def __init__(self, a, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    @staticmethod
    def _coerce(x):
        if isinstance(x, EpsReal):
            return x
        if isinstance(x, (int, Fraction)):
            return EpsReal(x)
        return None

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.a, self.b) == (o.a, o.b)

    def __hash__(self):
        return hash((self.a, self.b))

    def __lt__(self, other):
        o = self._coerce(other)
        return (self.a, self.b) < (o.a, o.b)

    def __le__(self, other):
        o = self._coerce(other)
        return (self.a, self.b) <= (o.a, o.b)

    def __gt__(self, other):
        o = self._coerce(other)
        return (self.a, self.b) > (o.a, o.b)

    def __ge__(self, other):
        o = self._coerce(other)
        return (self.a, self.b) >= (o.a, o.b)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return EpsReal(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return EpsReal(-self.a, -self.b)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return EpsReal(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return EpsReal(self.a * other, self.b * other)
        if isinstance(other, EpsReal):
            if self.b and other.b:
                raise ValueError("eps^2 is not representable")
            return EpsReal(
                self.a * other.a, self.a * other.b + self.b * other.a
            )
        return NotImplemented

    __rmul__ = __mul__

    def floor(self):
        if self.a.denominator != 1:
            return self.a.numerator // self.a.denominator
        n = self.a.numerator
        if self.b < 0:
            return n - 1
        return n

    def frac(self):
        return self - self.floor()

    def __str__(self):
        if not self.b:
            return str(self.a)
        sign = "+" if self.b > 0 else "-"
        mag = abs(self.b)
        eps = "eps" if mag == 1 else f"{mag}*eps"
        return f"{self.a}{sign}{eps}"

    def __repr__(self):
        return f"EpsReal({self.a}, {self.b})"


class MultiLaurent:
    """Sparse Laurent polynomial in z_1..z_l with QtLaurent coefficients.

    ``terms`` maps integer exponent tuples of length l to nonzero QtLaurent
    coefficients.
    """

    __slots__ = ("l", "terms")

    def __init__(self, l, terms=None):
        self.l = l
        self.terms = {tuple(k): c for k, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls, l):
        return cls(l)

    @classmethod
    def one(cls, l):
        return cls(l, {(0,) * l: QtLaurent.one()})

    @classmethod
    def monomial(cls, exps, coeff=None):
        c = QtLaurent.one() if coeff is None else coeff
        return cls(len(exps), {tuple(exps): c})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, MultiLaurent):
            return NotImplemented
        return self.l == other.l and self.terms == other.terms

    def coeff(self, mu):
        return self.terms.get(tuple(mu), QtLaurent.zero())

    def _raw(self, terms):
        res = MultiLaurent.__new__(MultiLaurent)
        res.l = self.l
        res.terms = terms
        return res

    def __add__(self, other):
        if not isinstance(other, MultiLaurent):
            return NotImplemented
        if self.l != other.l:
            raise ValueError("variable count mismatch")
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return self._raw(out)

    def __neg__(self):
        return self._raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, QtLaurent)):
            out = {}
            for k, c in self.terms.items():
                s = c * other
                if s:
                    out[k] = s
            return self._raw(out)
        if not isinstance(other, MultiLaurent):
            return NotImplemented
        if self.l != other.l:
            raise ValueError("variable count mismatch")
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                s = out.get(k)
                s = c1 * c2 if s is None else s + c1 * c2
                if s:
                    out[k] = s
                else:
                    del out[k]
        return self._raw(out)

    __rmul__ = __mul__

    def mul_monomial(self, exps, coeff=None):
        exps = tuple(exps)
        out = {}
        for k, c in self.terms.items():
            if coeff is not None:
                c = c * coeff
                if not c:
                    continue
            out[tuple(a + b for a, b in zip(k, exps))] = c
        return self._raw(out)

    def permute_vars(self, w):
        """Apply z^mu -> z^{w(mu)} where w(mu) places entry i at position w(i).

        ``w`` is a 1-indexed permutation tuple of length l.
        """
        out = {}
        for k, c in self.terms.items():
            nk = [0] * self.l
            for i, e in enumerate(k):
                nk[w[i] - 1] = e
            nk = tuple(nk)
            s = out.get(nk)
            s = c if s is None else s + c
            if s:
                out[nk] = s
            else:
                del out[nk]
        return self._raw(out)

    def map_coeffs(self, fn):
        out = {}
        for k, c in self.terms.items():
            s = fn(c)
            if s:
                out[k] = s
        return self._raw(out)

    def subs_q_inv(self):
        return self.map_coeffs(lambda c: c.subs_q_inv())

    def bar(self):
        """The bar involution: invert q, t and every z_i."""
        out = {}
        for k, c in self.terms.items():
            out[tuple(-e for e in k)] = c.bar()
        return self._raw(out)

    def terms_sorted(self):
        return sorted(self.terms.items())

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for k, c in self.terms_sorted():
            mono = "*".join(
                f"z{i + 1}" if e == 1 else f"z{i + 1}^{e}"
                for i, e in enumerate(k)
                if e
            )
            cs = str(c)
            if len(c.terms) > 1:
                cs = f"({cs})"
            chunks.append(f"{cs}*{mono}" if mono else cs)
        return " + ".join(chunks)

    def __repr__(self):
        return f"MultiLaurent({self.l}, {self.terms!r})"


# ---------------------------------------------------------------------------
# partitions and weights (plain tuples throughout)

Partition = tuple[int, ...]  # weakly decreasing, positive, no trailing zeros
ZWeight = tuple[int, ...]  # arbitrary integer vector


def is_partition(lam):
    return all(a >= b for a, b in zip(lam, lam[1:])) and (
        not lam or lam[-1] >= 1
    )


def normalize_partition(lam):
    """Strip trailing zeros; reject increasing or negative part lists."""
    lam = tuple(lam)
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    if not is_partition(lam):
        raise ValueError(f"not a partition: {lam}")
    return lam


def conjugate(lam):
    lam = tuple(lam)
    if not lam:
        return ()
    return tuple(
        sum(1 for part in lam if part > i) for i in range(lam[0])
    )


def partitions(n, max_part=None, max_len=None):
    """All partitions of n, largest part first, in lex-decreasing order."""
    if max_part is None:
        max_part = n
    if max_len is None:
        max_len = n
    if n == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first, max_len - 1):
            yield (first,) + rest


def dominates(lam, mu):
    """True iff lam >= mu in dominance order (same size assumed)."""
    s1 = s2 = 0
    for i in range(max(len(lam), len(mu))):
        s1 += lam[i] if i < len(lam) else 0
        s2 += mu[i] if i < len(mu) else 0
        if s1 < s2:
            return False
    return True


# ---------------------------------------------------------------------------
# Weyl straightening and the Schur basis


def straighten(mu, polynomial_only=True):
    """Straighten the Weyl symmetrization of z^mu.

    With rho = (l-1, ..., 1, 0): returns None when mu + rho has a repeated
    entry; otherwise (sign, lam) where sign is the sign of the permutation
    sorting mu + rho into decreasing order and lam = sorted(mu + rho) - rho.
    In polynomial-only mode, lam with a negative entry also yields None and
    the returned lam is a partition; in full mode lam is the dominant weight
    of length l, negative entries allowed.
    """
    mu = tuple(mu)
    l = len(mu)
    shifted = [m + (l - 1 - i) for i, m in enumerate(mu)]
    if len(set(shifted)) < l:
        return None
    inv = 0
    for i in range(l):
        si = shifted[i]
        for j in range(i + 1, l):
            if si < shifted[j]:
                inv += 1
    sign = -1 if inv & 1 else 1
    shifted.sort(reverse=True)
    lam = tuple(v - (l - 1 - i) for i, v in enumerate(shifted))
    if polynomial_only:
        if lam and lam[-1] < 0:
            return None
        return sign, normalize_partition(lam)
    return sign, lam


def weyl_symmetrize(f):
    """Polynomial part of the Weyl symmetrization of f, in the Schur basis."""
    out = {}
    for mu, c in f.terms.items():
        st = straighten(mu)
        if st is None:
            continue
        sign, lam = st
        s = out.get(lam)
        s = c * sign if s is None else s + c * sign
        if s:
            out[lam] = s
        else:
            del out[lam]
    return SchurPoly(f.l, out)


_ssyt_weight_cache = {}


def _ssyt_weights(lam, l):
    """Content weight vectors of all SSYT of straight shape lam, entries <= l.

    Rows weakly increase; each entry strictly exceeds the one directly in the
    previous row (column-strictness).
    """
    key = (lam, l)
    cached = _ssyt_weight_cache.get(key)
    if cached is not None:
        return cached
    results = []
    nrows = len(lam)

    def fill_row(r, prev_row, weight):
        if r == nrows:
            results.append(tuple(weight))
            return
        width = lam[r]
        row = [0] * width

        def place(j, lo):
            if j == width:
                fill_row(r + 1, row, weight)
                return
            floor_v = prev_row[j] + 1 if prev_row else 1
            for v in range(max(lo, floor_v), l + 1):
                row[j] = v
                weight[v - 1] += 1
                place(j + 1, v)
                weight[v - 1] -= 1

        place(0, 1)

    fill_row(0, None, [0] * l)
    _ssyt_weight_cache[key] = results
    return results


_schur_cache = {}


def schur_in_vars(lam, l):
    """Monomial expansion of the Schur polynomial s_lam(z_1..z_l).

    Computed by semistandard tableau enumeration and cached per (lam, l).
    Returns the zero polynomial when lam has more than l rows.
    """
    lam = normalize_partition(lam)
    if len(lam) > l:
        return MultiLaurent.zero(l)
    key = (lam, l)
    cached = _schur_cache.get(key)
    if cached is None:
        counts = {}
        for w in _ssyt_weights(lam, l):
            counts[w] = counts.get(w, 0) + 1
        cached = MultiLaurent(
            l, {w: QtLaurent.term(c) for w, c in counts.items()}
        )
        _schur_cache[key] = cached
    return cached


class SchurPoly:
    """Symmetric polynomial in l variables written in the Schur basis.

    ``coeffs`` maps partitions (length <= l) to nonzero QtLaurent values.
    Equality is map equality.
    """

    __slots__ = ("l", "coeffs")

    def __init__(self, l, coeffs=None):
        self.l = l
        self.coeffs = {}
        for lam, c in (coeffs or {}).items():
            if c:
                lam = normalize_partition(lam)
                if len(lam) > l:
                    raise ValueError(f"partition {lam} too long for l={l}")
                self.coeffs[lam] = c

    @classmethod
    def zero(cls, l):
        return cls(l)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, SchurPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __add__(self, other):
        if not isinstance(other, SchurPoly):
            return NotImplemented
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return SchurPoly(max(self.l, other.l), out)

    def __neg__(self):
        return SchurPoly(self.l, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, QtLaurent)):
            return SchurPoly(
                self.l, {k: c * other for k, c in self.coeffs.items()}
            )
        return NotImplemented

    __rmul__ = __mul__

    def map_coeffs(self, fn):
        return SchurPoly(self.l, {k: fn(c) for k, c in self.coeffs.items()})

    def omega(self):
        """Transpose every indexing partition."""
        out = {}
        for lam, c in self.coeffs.items():
            out[conjugate(lam)] = c
        new_l = max((lam[0] for lam in self.coeffs if lam), default=0)
        return SchurPoly(max(new_l, 1) if out else self.l, out)

    def to_multilaurent(self, l=None):
        l = self.l if l is None else l
        total = MultiLaurent.zero(l)
        for lam, c in self.coeffs.items():
            total = total + schur_in_vars(lam, l) * c
        return total

    def evaluate(self, q0, t0):
        """Specialize every coefficient; returns {partition: Fraction}."""
        out = {}
        for lam, c in self.coeffs.items():
            v = c.evaluate(q0, t0)
            if v:
                out[lam] = v
        return out

    def items_sorted(self):
        return sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def __str__(self):
        if not self.coeffs:
            return "0"
        chunks = []
        for lam, c in self.items_sorted():
            name = "s[" + ",".join(map(str, lam)) + "]"
            cs = str(c)
            if len(c.terms) > 1:
                cs = f"({cs})"
            chunks.append(f"{cs}*{name}")
        return " + ".join(chunks)

    def __repr__(self):
        return f"SchurPoly({self.l}, {self.coeffs!r})"


def omega(f):
    """The standard involution on Schur expansions: s_lam -> s_{lam'}."""
    return f.omega()


def schur_expand(f):
    """Write a symmetric polynomial (nonnegative exponents) in the Schur basis.

    Works by unitriangular elimination against dominant monomials: repeatedly
    strip the lex-greatest partition-shaped exponent and subtract that
    multiple of schur_in_vars.  Raises when the input is not a symmetric
    polynomial.
    """
    l = f.l
    rem = dict(f.terms)
    out = {}
    while rem:
        best = None
        for mu in rem:
            if min(mu) >= 0 and all(a >= b for a, b in zip(mu, mu[1:])):
                if best is None or (sum(mu), mu) > (sum(best), best):
                    best = mu
        if best is None:
            raise ValueError("input is not a symmetric polynomial")
        c = rem[best]
        lam = normalize_partition(best)
        out[lam] = out.get(lam, QtLaurent.zero()) + c
        for k, sc in schur_in_vars(lam, l).terms.items():
            s = rem.get(k, QtLaurent.zero()) - sc * c
            if s:
                rem[k] = s
            else:
                rem.pop(k, None)
    return SchurPoly(l, {k: c for k, c in out.items() if c})


def kostant_q(nu, roots, unit):
    """Weighted count of ways to write nu as an N-combination of positive roots.

    ``roots`` is an iterable of pairs (i, j), 1-based with i < j, encoding
    e_i - e_j.  Each solution with multiplicities m contributes
    unit^(sum of m).  The series is finite because every root moves weight
    from a lower to a higher index; the search runs over roots grouped by
    first index in increasing order, pruning on infeasible partial sums.
    """
    nu = tuple(nu)
    l = len(nu)
    groups = {}
    for i, j in roots:
        if not (1 <= i < j <= l):
            raise ValueError(f"bad root ({i},{j}) for l={l}")
        groups.setdefault(i, []).append(j)
    group_keys = sorted(groups)
    for js in groups.values():
        js.sort()
    if sum(nu) != 0:
        return QtLaurent.zero()

    totals = []

    def walk(gi, req):
        if gi == len(group_keys):
            if all(v == 0 for v in req):
                totals.append(total_mult[0])
            return
        i = group_keys[gi]
        need = req[i - 1]
        if need < 0:
            return
        req[i - 1] = 0
        js = groups[i]

        def split(idx, remaining):
            if idx == len(js) - 1:
                j = js[idx]
                req[j - 1] += remaining
                total_mult[0] += remaining
                walk(gi + 1, req)
                total_mult[0] -= remaining
                req[j - 1] -= remaining
                return
            j = js[idx]
            for m in range(remaining + 1):
                req[j - 1] += m
                total_mult[0] += m
                split(idx + 1, remaining - m)
                total_mult[0] -= m
                req[j - 1] -= m

        if js:
            split(0, need)
        elif need == 0:
            walk(gi + 1, req)
        req[i - 1] = need

    total_mult = [0]
    walk(0, list(nu))
    result = QtLaurent.zero()
    for m in totals:
        result = result + unit**m
    return result

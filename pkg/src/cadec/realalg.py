"""Exact real algebraic numbers: root isolation, comparison, sign evaluation.

A real algebraic number is a squarefree defining polynomial together with an
open rational isolating interval.  Isolation is Descartes/bisection; Sturm
sequences are provided for counting (and reused by the test oracles).

Interval refinement mutates the cached interval but is monotone (intervals
only shrink), so concurrent readers are safe; everything else is pure.
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil, floor

from .polynomial import (
    Polynomial,
    VarOrder,
    ZeroPolynomialError,
    PolynomialError,
    exact_div,
    poly_gcd,
    resultant,
)


class RealAlgebraError(PolynomialError):
    pass


class _IdenticallyZero:
    """Distinguished outcome of roots_above when the polynomial vanishes
    everywhere over the sample (nullification)."""

    def __repr__(self):
        return "IDENTICALLY_ZERO"

    def __bool__(self):
        return False


IDENTICALLY_ZERO = _IdenticallyZero()


# ---------------------------------------------------------------------------
# dense univariate helpers (coefficient tuples, low degree first)


def trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def degree(coeffs):
    return len(coeffs) - 1


def ueval(coeffs, x):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def uderiv(coeffs):
    return tuple(c * i for i, c in enumerate(coeffs))[1:]


def uneg(coeffs):
    return tuple(-c for c in coeffs)


def uadd(a, b):
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return trim(out)


def umul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return trim(out)


def udivmod(a, b):
    if not b:
        raise ZeroDivisionError("univariate division by zero")
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lb = b[-1]
    while len(a) >= len(b) and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        shift = len(a) - len(b)
        c = a[-1] / lb
        q[shift] = c
        for i, cb in enumerate(b):
            a[shift + i] -= c * cb
        a.pop()
    return trim(q), trim(a)


def umonic(coeffs):
    coeffs = trim(coeffs)
    if not coeffs:
        return coeffs
    lead = coeffs[-1]
    return tuple(c / lead for c in coeffs)


def ugcd(a, b):
    a, b = trim(a), trim(b)
    while b:
        a, b = b, udivmod(a, b)[1]
    return umonic(a)


def usquarefree(coeffs):
    coeffs = trim(coeffs)
    if len(coeffs) <= 2:
        return umonic(coeffs)
    g = ugcd(coeffs, uderiv(coeffs))
    if len(g) == 1:
        return umonic(coeffs)
    return umonic(udivmod(coeffs, g)[0])


def normalize_int(coeffs):
    """Integer coefficients, content 1, positive leading coefficient."""
    coeffs = trim(coeffs)
    if not coeffs:
        return coeffs
    from math import gcd as igcd
    L = 1
    for c in coeffs:
        L = L * c.denominator // igcd(L, c.denominator)
    G = 0
    for c in coeffs:
        G = igcd(G, abs(c.numerator * (L // c.denominator)))
    scale = Fraction(L, G)
    if coeffs[-1] < 0:
        scale = -scale
    return tuple(c * scale for c in coeffs)


def sturm_sequence(coeffs):
    seq = [trim(coeffs)]
    d = uderiv(coeffs)
    if d:
        seq.append(d)
        while True:
            r = udivmod(seq[-2], seq[-1])[1]
            if not r:
                break
            seq.append(uneg(r))
    return seq


def _variations(values):
    count = 0
    prev = 0
    for v in values:
        if v == 0:
            continue
        s = 1 if v > 0 else -1
        if prev and s != prev:
            count += 1
        prev = s
    return count


def sturm_count(coeffs, a, b, seq=None):
    """Number of distinct real roots in (a, b]; requires coeffs(a) != 0."""
    if seq is None:
        seq = sturm_sequence(coeffs)
    va = _variations([ueval(f, a) for f in seq])
    vb = _variations([ueval(f, b) for f in seq])
    return va - vb


def sturm_count_all(coeffs):
    """Number of distinct real roots of coeffs on the whole line."""
    f = usquarefree(coeffs)
    if len(f) <= 1:
        return 0
    b = root_bound(f)
    return sturm_count(f, -b, b)


def root_bound(coeffs):
    """Cauchy bound: all real roots lie strictly inside (-B, B)."""
    coeffs = trim(coeffs)
    lead = abs(coeffs[-1])
    m = max((abs(c) for c in coeffs[:-1]), default=Fraction(0))
    return 1 + m / lead


def _taylor_shift(coeffs, a):
    """coeffs(x + a)."""
    out = list(coeffs)
    n = len(out)
    if a == 0:
        return tuple(out)
    for i in range(n):
        for j in range(n - 2, i - 1, -1):
            out[j] += a * out[j + 1]
    return tuple(out)


def _scale(coeffs, s):
    """coeffs(s * x)."""
    acc = Fraction(1)
    out = []
    for c in coeffs:
        out.append(c * acc)
        acc *= s
    return tuple(out)


def _descartes_01(coeffs):
    """Sign variation count of (1+x)^n * coeffs(1/(1+x)): bounds the number
    of roots of coeffs in (0, 1), exactly for counts 0 and 1."""
    rev = tuple(reversed(coeffs))
    shifted = _taylor_shift(rev, Fraction(1))
    return _variations(shifted)


def variations_on(coeffs, a, b):
    g = _taylor_shift(coeffs, a)
    g = _scale(g, b - a)
    return _descartes_01(g)


def _rational_roots(coeffs):
    """Rational roots of an integer-normalized polynomial, found by trial
    division over divisors of the extreme coefficients (skipped when the
    candidate set would be large)."""

    def divisors(n):
        n = abs(n)
        out = []
        d = 1
        while d * d <= n and len(out) < 40 and d <= 4096:
            if n % d == 0:
                out.append(d)
                if d != n // d:
                    out.append(n // d)
            d += 1
        if d * d <= n:
            return None
        return out

    coeffs = list(coeffs)
    roots = []
    # factor out x = 0
    while coeffs and coeffs[0] == 0:
        if 0 not in roots:
            roots.append(Fraction(0))
        coeffs.pop(0)
    if len(coeffs) <= 1:
        return roots, tuple(coeffs)
    a0 = int(coeffs[0])
    an = int(coeffs[-1])
    ps = divisors(a0)
    qs = divisors(an)
    if ps is None or qs is None or len(ps) * len(qs) > 200:
        return roots, trim(coeffs)
    candidates = set()
    for p in ps:
        for q in qs:
            candidates.add(Fraction(p, q))
            candidates.add(Fraction(-p, q))
    rest = trim(coeffs)
    for cand in sorted(candidates):
        while rest and len(rest) > 1 and ueval(rest, cand) == 0:
            roots.append(cand)
            rest = udivmod(rest, (-cand, Fraction(1)))[0]
    return sorted(set(roots)), rest


# ---------------------------------------------------------------------------
# AlgebraicNumber


class AlgebraicNumber:
    """A real algebraic number: squarefree defining polynomial plus an open
    rational interval containing exactly one of its real roots.

    Rational numbers are the degenerate case (defining x - q).  Refinement
    shrinks the interval in place and is monotone.
    """

    __slots__ = ("coeffs", "lo", "hi", "_sign_lo")

    def __init__(self, coeffs, lo, hi, _sign_lo=None):
        self.coeffs = tuple(coeffs)
        self.lo = Fraction(lo)
        self.hi = Fraction(hi)
        if _sign_lo is None and len(self.coeffs) > 2:
            v = ueval(self.coeffs, self.lo)
            if v == 0:
                raise RealAlgebraError("isolating interval endpoint is a root")
            _sign_lo = 1 if v > 0 else -1
        self._sign_lo = _sign_lo

    @classmethod
    def from_rational(cls, q):
        q = Fraction(q)
        return cls((-q, Fraction(1)), q - 1, q + 1, _sign_lo=-1)

    @property
    def is_rational(self):
        return len(self.coeffs) == 2

    def rational_value(self):
        if not self.is_rational:
            raise RealAlgebraError("not a known-rational algebraic number")
        return -self.coeffs[0] / self.coeffs[1]

    def refine(self):
        """One bisection step; may discover the value is rational."""
        if self.is_rational:
            v = self.rational_value()
            width = (self.hi - self.lo) / 4
            self.lo, self.hi = v - width, v + width
            return
        m = (self.lo + self.hi) / 2
        val = ueval(self.coeffs, m)
        if val == 0:
            self.coeffs = (-m, Fraction(1))
            width = (self.hi - self.lo) / 4
            self.lo, self.hi = m - width, m + width
            self._sign_lo = -1
            return
        s = 1 if val > 0 else -1
        if s == self._sign_lo:
            self.lo = m
        else:
            self.hi = m
    def refine_below(self, width):
        while self.hi - self.lo > width:
            self.refine()

    def interval(self):
        return self.lo, self.hi

    def approx(self, width=Fraction(1, 1 << 20)):
        self.refine_below(width)
        return (self.lo + self.hi) / 2

    def __float__(self):
        if self.is_rational:
            return float(self.rational_value())
        return float(self.approx())

    def __repr__(self):
        return "<%s>" % self

    def __str__(self):
        if self.is_rational:
            return str(self.rational_value())
        body = _coeffs_to_str(self.coeffs)
        return "root(%s, %s, %s)" % (body, self.lo, self.hi)


def _coeffs_to_str(coeffs, var="t"):
    chunks = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        if i == 0:
            mono = str(abs(c))
        else:
            v = var if i == 1 else "%s^%d" % (var, i)
            mono = v if abs(c) == 1 else "%s*%s" % (abs(c), v)
        if not chunks:
            chunks.append(mono if c > 0 else "-" + mono)
        else:
            chunks.append(("+ " if c > 0 else "- ") + mono)
    return " ".join(chunks) if chunks else "0"


def algebraic_is_root(alpha, coeffs):
    """Is alpha a root of the univariate polynomial coeffs?"""
    coeffs = trim(coeffs)
    if not coeffs:
        return True
    if alpha.is_rational:
        return ueval(coeffs, alpha.rational_value()) == 0
    g = ugcd(alpha.coeffs, coeffs)
    if len(g) <= 1:
        return False
    while ueval(g, alpha.lo) == 0 or ueval(g, alpha.hi) == 0:
        alpha.refine()
        if alpha.is_rational:
            return ueval(coeffs, alpha.rational_value()) == 0
    return sturm_count(g, alpha.lo, alpha.hi) >= 1


def compare(a, b):
    """Total order on real algebraic numbers: -1, 0, +1, decided exactly."""
    if a is b:
        return 0
    if a.is_rational and b.is_rational:
        va, vb = a.rational_value(), b.rational_value()
        return -1 if va < vb else (1 if va > vb else 0)
    if a.is_rational:
        return -compare_rational(b, a.rational_value())
    if b.is_rational:
        return compare_rational(a, b.rational_value())
    g = ugcd(a.coeffs, b.coeffs)
    can_be_equal = len(g) > 1
    while True:
        if a.hi <= b.lo:
            return -1
        if b.hi <= a.lo:
            return 1
        if not can_be_equal:
            a.refine()
            b.refine()
            if a.is_rational or b.is_rational:
                return compare(a, b)
            continue
        c = max(a.lo, b.lo)
        d = min(a.hi, b.hi)
        if c < d and ueval(g, c) != 0 and ueval(g, d) != 0:
            if sturm_count(g, c, d) >= 1:
                return 0
        a.refine()
        b.refine()
        if a.is_rational or b.is_rational:
            return compare(a, b)


def compare_rational(a, q):
    """Sign of a - q for rational q."""
    q = Fraction(q)
    if a.is_rational:
        v = a.rational_value()
        return -1 if v < q else (1 if v > q else 0)
    while True:
        if a.hi <= q:
            return -1
        if a.lo >= q:
            return 1  # the root lies strictly above lo
        if a.lo < q < a.hi:
            if ueval(a.coeffs, q) == 0:
                return 0
        a.refine()
        if a.is_rational:
            return compare_rational(a, q)


# ---------------------------------------------------------------------------
# root isolation


def isolate_coeffs(coeffs):
    """Isolate the distinct real roots of a univariate coefficient tuple."""
    coeffs = trim(coeffs)
    if not coeffs:
        raise ZeroPolynomialError("cannot isolate roots of the zero polynomial")
    if len(coeffs) == 1:
        return []
    f = normalize_int(usquarefree(coeffs))
    rational, rest = _rational_roots(f)
    roots = [AlgebraicNumber.from_rational(q) for q in rational]
    rest = trim(rest)
    if len(rest) > 1:
        bound = root_bound(rest)
        stack = [(-bound, bound)]
        while stack:
            a, b = stack.pop()
            k = variations_on(rest, a, b)
            if k == 0:
                continue
            if k == 1:
                roots.append(AlgebraicNumber(rest, a, b))
                continue
            m = (a + b) / 2
            if ueval(rest, m) == 0:
                # cannot happen for non-dyadic-rational-rooted rest unless the
                # rational root sieve skipped it; record it exactly
                roots.append(AlgebraicNumber.from_rational(m))
                rest2 = udivmod(rest, (-m, Fraction(1)))[0]
                stack = [(a, m), (m, b)]
                rest = trim(rest2)
                continue
            stack.append((a, m))
            stack.append((m, b))
    _separate(roots)
    roots.sort(key=_sort_key)
    return roots


def _sort_key(alpha):
    return (alpha.lo + alpha.hi) / 2


def _separate(roots):
    """Refine until all isolating intervals are pairwise disjoint."""
    changed = True
    while changed:
        changed = False
        for i in range(len(roots)):
            for j in range(i + 1, len(roots)):
                a, b = roots[i], roots[j]
                if a.hi > b.lo and b.hi > a.lo:
                    a.refine()
                    b.refine()
                    changed = True


def merge_roots(groups):
    """Merge lists of already-isolated roots into one strictly sorted list,
    removing duplicates across groups (exact comparison).

    Returns (sorted_roots, contributors) where contributors[i] is the set of
    group indices whose polynomial vanishes at sorted_roots[i].
    """
    merged = []
    contributors = []
    for gi, group in enumerate(groups):
        for r in group:
            placed = False
            for i, m in enumerate(merged):
                c = compare(r, m)
                if c == 0:
                    contributors[i].add(gi)
                    placed = True
                    break
                if c < 0:
                    merged.insert(i, r)
                    contributors.insert(i, {gi})
                    placed = True
                    break
            if not placed:
                merged.append(r)
                contributors.append({gi})
    # re-separate: intervals from different groups may still overlap
    _separate(merged)
    return merged, contributors


def isolate_real_roots(p):
    """Distinct real roots of a univariate Polynomial, strictly ordered."""
    if p.is_zero():
        raise ZeroPolynomialError("cannot isolate roots of the zero polynomial")
    vs = p.variables()
    if len(vs) > 1:
        raise RealAlgebraError("isolate_real_roots needs a univariate polynomial")
    if not vs:
        return []
    v = next(iter(vs))
    coeffs = tuple(c.constant_value() for c in p.coeffs_in(v))
    return isolate_coeffs(coeffs)


# ---------------------------------------------------------------------------
# sample points and sign evaluation


class SamplePoint:
    """Ordered coordinates (one AlgebraicNumber per variable) up to a level."""

    __slots__ = ("order", "coords")

    def __init__(self, order, coords):
        self.order = order
        self.coords = tuple(
            c if isinstance(c, AlgebraicNumber) else AlgebraicNumber.from_rational(c)
            for c in coords)
        if len(self.coords) > len(order):
            raise RealAlgebraError("more coordinates than variables")

    @property
    def level(self):
        return len(self.coords)

    def coordinate(self, name):
        i = self.order.index(name)
        if i >= len(self.coords):
            raise RealAlgebraError("sample point does not cover %r" % name)
        return self.coords[i]

    def extended(self, alpha):
        return SamplePoint(self.order, self.coords + (alpha,))

    def coord_map(self):
        return {self.order.names[i]: c for i, c in enumerate(self.coords)}

    def __repr__(self):
        return "SamplePoint(%s)" % ", ".join(
            "%s=%s" % (n, c) for n, c in zip(self.order.names, self.coords))


def _interval_pow(lo, hi, e):
    if e == 1:
        return lo, hi
    plo, phi = lo ** e, hi ** e
    if e % 2 == 1:
        return plo, phi
    if lo >= 0:
        return plo, phi
    if hi <= 0:
        return phi, plo
    return Fraction(0), max(plo, phi)


def _interval_mul(a, b):
    products = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return min(products), max(products)


def interval_eval(p, boxes):
    """Enclosing interval of p over a box (var -> (lo, hi)); exact rational."""
    total = (Fraction(0), Fraction(0))
    names = p.order.names
    for expt, coeff in p.terms.items():
        term = (coeff, coeff)
        for i, e in enumerate(expt):
            if e:
                term = _interval_mul(term, _interval_pow(*boxes[names[i]], e))
        total = (total[0] + term[0], total[1] + term[1])
    return total


_TVAR = "t_"


def _value_defining(q, alg_coords):
    """Defining polynomial (coefficient tuple in a fresh variable) of the
    value q(alpha_1, ..., alpha_k), by iterated resultants.

    The chain never degenerates: the leading coefficient in the fresh
    variable stays a non-zero rational throughout.
    """
    order2 = VarOrder(q.order.names + (_TVAR,))
    t = Polynomial.variable(order2, _TVAR)
    P = t - q.restricted(order2)
    for var, alpha in alg_coords:
        if P.degree_in(var) == 0:
            continue
        d = _defining_poly(alpha, var, order2)
        P = resultant(d, P, var)
    coeffs = [c.constant_value() for c in P.coeffs_in(_TVAR)]
    return trim(coeffs)


def _defining_poly(alpha, var, order):
    terms = {}
    i = order.index(var)
    width = len(order)
    for power, c in enumerate(alpha.coeffs):
        if c == 0:
            continue
        e = [0] * width
        e[i] = power
        terms[tuple(e)] = c
    return Polynomial(order, terms)


def sign_at_map(p, coord_map):
    """Exact sign of p at the point given by coord_map (var -> AlgebraicNumber)."""
    rational = {}
    algebraic = []
    for v in sorted(p.variables(), key=p.order.index):
        alpha = coord_map[v]
        if alpha.is_rational:
            rational[v] = alpha.rational_value()
        else:
            algebraic.append((v, alpha))
    q = p.evaluate(rational) if rational else p
    if q.is_constant():
        c = q.constant_value()
        return 0 if c == 0 else (1 if c > 0 else -1)
    algebraic = [(v, a) for v, a in algebraic if v in q.variables()]

    def try_interval():
        boxes = {v: a.interval() for v, a in algebraic}
        lo, hi = interval_eval(q, boxes)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        return None

    for _ in range(4):
        s = try_interval()
        if s is not None:
            return s
        for _, a in algebraic:
            a.refine()

    defining = _value_defining(q, algebraic)
    if ueval(defining, 0) != 0:
        while True:
            s = try_interval()
            if s is not None:
                return s
            for _, a in algebraic:
                a.refine()
    # 0 is a root of the candidate defining polynomial; decide whether the
    # value is that root or a different one.
    others = [r for r in isolate_coeffs(defining)
              if not (r.is_rational and r.rational_value() == 0)]
    while True:
        s = try_interval()
        if s is not None:
            return s
        boxes = {v: a.interval() for v, a in algebraic}
        lo, hi = interval_eval(q, boxes)
        overlapping = [r for r in others if r.hi > lo and r.lo < hi]
        if not overlapping:
            return 0
        for r in overlapping:
            r.refine()
        for _, a in algebraic:
            a.refine()


def sign_at(p, s):
    """Exact sign {-1, 0, +1} of p at the sample point s."""
    cmap = {}
    for v in p.variables():
        cmap[v] = s.coordinate(v)
    return sign_at_map(p, cmap)


# ---------------------------------------------------------------------------
# roots over a sample point


def roots_above(p, s, v, on_order_retry=None):
    """Distinct real roots in v of p specialized at the sample point s.

    Returns a sorted list of AlgebraicNumber, or IDENTICALLY_ZERO when the
    specialization vanishes identically (nullification).
    """
    if p.is_zero():
        return IDENTICALLY_ZERO
    cmap = {}
    for name in p.variables():
        if name == v:
            continue
        cmap[name] = s.coordinate(name)
    rational = {n: a.rational_value() for n, a in cmap.items() if a.is_rational}
    q = p.evaluate(rational) if rational else p
    algebraic = [(n, a) for n, a in cmap.items()
                 if not a.is_rational and n in q.variables()]
    algebraic.sort(key=lambda item: p.order.index(item[0]))

    coeffs = q.coeffs_in(v)
    coeff_signs = [
        c.constant_value() != 0 if c.is_constant() else sign_at_map(c, dict(cmap)) != 0
        for c in coeffs]
    if not any(coeff_signs):
        return IDENTICALLY_ZERO
    if not any(coeff_signs[1:]):
        return []

    if not algebraic:
        univ = [c.constant_value() for c in coeffs]
        return isolate_coeffs(trim(univ))

    candidates = _candidate_defining(q, v, algebraic)
    roots = []
    for rho in isolate_coeffs(candidates):
        full = dict(cmap)
        full[v] = rho
        if sign_at_map(p, full) == 0:
            roots.append(rho)
    return roots


def _candidate_defining(q, v, algebraic):
    """Univariate candidate polynomial in v whose roots include those of the
    specialization of q; resultant chain with gcd fallback and elimination
    order retry for degenerate (shared-factor) cases."""
    from itertools import permutations

    last_error = None
    for perm in permutations(range(len(algebraic))):
        P = q
        ok = True
        for k in perm:
            var, alpha = algebraic[k]
            if P.degree_in(var) == 0:
                continue
            d = _defining_poly(alpha, var, q.order)
            dcoeffs = alpha.coeffs
            while True:
                if P.degree_in(var) == 0:
                    break
                R = resultant(d, P, var)
                if not R.is_zero():
                    P = R
                    break
                g = poly_gcd(d, P)
                gcoeffs = tuple(c.constant_value() for c in g.coeffs_in(var))
                if algebraic_is_root(alpha, gcoeffs):
                    # P vanishes identically at alpha: this elimination order
                    # lost the information; try another order.
                    ok = False
                    break
                d = exact_div(d, g)
                dcoeffs = trim(udivmod(dcoeffs, gcoeffs)[0])
                if d.degree_in(var) == 0:
                    ok = False
                    break
            if not ok:
                break
        if ok and not P.is_zero():
            coeffs = [c.constant_value() for c in P.coeffs_in(v)]
            coeffs = trim(coeffs)
            if len(coeffs) > 1:
                return coeffs
            last_error = "candidate polynomial degenerated to a constant"
        else:
            last_error = "resultant chain vanished for every elimination order"
    raise RealAlgebraError(
        "could not build a candidate defining polynomial: %s" % last_error)

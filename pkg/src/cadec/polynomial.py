"""Sparse exact-rational multivariate polynomials.

Polynomials are immutable values: a map from exponent vectors to non-zero
Fraction coefficients, under a fixed variable ordering.  Everything else in
the package (root isolation, Groebner bases, projection, lifting) is built
on the operations here.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd


class PolynomialError(Exception):
    pass


class OrderingMismatchError(PolynomialError):
    """A variable is not part of the polynomial's variable ordering."""


class ZeroPolynomialError(PolynomialError):
    """Operation undefined on the zero polynomial."""


class DegenerateResultantError(PolynomialError):
    """Resultant/discriminant asked for with too-low degree in the variable."""


class ExactDivisionError(PolynomialError):
    """Division that was expected to be exact left a remainder."""


class ParseError(PolynomialError):
    def __init__(self, message, position):
        super().__init__("%s (at position %d)" % (message, position))
        self.position = position


class VarOrder:
    """A fixed total ordering of variable names.

    Position 0 is the lowest variable (projected to last); the last position
    is the highest.  Level k (1-based) refers to names[k-1].
    """

    __slots__ = ("names", "_index")

    def __init__(self, names):
        names = tuple(names)
        if not names:
            raise OrderingMismatchError("variable ordering must be non-empty")
        if len(set(names)) != len(names):
            raise OrderingMismatchError("duplicate variable in ordering: %r" % (names,))
        self.names = names
        self._index = {name: i for i, name in enumerate(names)}

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise OrderingMismatchError("unknown variable %r (ordering %r)" % (name, self.names))

    def level(self, name):
        return self.index(name) + 1

    def __contains__(self, name):
        return name in self._index

    def __len__(self):
        return len(self.names)

    def __eq__(self, other):
        return isinstance(other, VarOrder) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return "VarOrder(%s)" % ",".join(self.names)


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError("expected int or Fraction, got %r" % (x,))


class Polynomial:
    """Sparse multivariate polynomial with Fraction coefficients.

    terms maps exponent tuples (one entry per variable of the order) to
    non-zero Fractions.  Instances are immutable and hashable; equal term
    maps mean equal polynomials (canonical form).
    """

    __slots__ = ("order", "terms", "_hash")

    def __init__(self, order, terms, _clean=False):
        self.order = order
        if _clean:
            self.terms = terms
        else:
            clean = {}
            width = len(order)
            for expt, coeff in terms.items():
                coeff = _as_fraction(coeff)
                if coeff == 0:
                    continue
                expt = tuple(expt)
                if len(expt) != width or any(e < 0 for e in expt):
                    raise PolynomialError("bad exponent vector %r" % (expt,))
                clean[expt] = clean.get(expt, Fraction(0)) + coeff
            self.terms = {e: c for e, c in clean.items() if c != 0}
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, order):
        return cls(order, {}, _clean=True)

    @classmethod
    def constant(cls, order, value):
        value = _as_fraction(value)
        if value == 0:
            return cls.zero(order)
        return cls(order, {(0,) * len(order): value}, _clean=True)

    @classmethod
    def variable(cls, order, name):
        i = order.index(name)
        expt = tuple(1 if j == i else 0 for j in range(len(order)))
        return cls(order, {expt: Fraction(1)}, _clean=True)

    @classmethod
    def monomial(cls, order, expt, coeff):
        return cls(order, {tuple(expt): coeff})

    # -- basic predicates --------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(all(e == 0 for e in expt) for expt in self.terms)

    def constant_value(self):
        if self.is_zero():
            return Fraction(0)
        if not self.is_constant():
            raise PolynomialError("not a constant: %s" % self)
        return next(iter(self.terms.values()))

    def variables(self):
        seen = set()
        for expt in self.terms:
            for i, e in enumerate(expt):
                if e:
                    seen.add(self.order.names[i])
        return seen

    def main_variable(self):
        """Highest-ordered variable actually present, or None for constants."""
        best = -1
        for expt in self.terms:
            for i in range(len(expt) - 1, best, -1):
                if expt[i]:
                    best = max(best, i)
                    break
        return self.order.names[best] if best >= 0 else None

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if self.order != other.order:
            raise OrderingMismatchError("mixed variable orderings")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.order, other)
        self._check(other)
        terms = dict(self.terms)
        for expt, coeff in other.terms.items():
            s = terms.get(expt, Fraction(0)) + coeff
            if s:
                terms[expt] = s
            elif expt in terms:
                del terms[expt]
        return Polynomial(self.order, terms, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.order, {e: -c for e, c in self.terms.items()}, _clean=True)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.order, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _as_fraction(other)
            if other == 0:
                return Polynomial.zero(self.order)
            return Polynomial(self.order,
                              {e: c * other for e, c in self.terms.items()},
                              _clean=True)
        self._check(other)
        if len(self.terms) > len(other.terms):
            a, b = other, self
        else:
            a, b = self, other
        terms = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = terms.get(e, Fraction(0)) + c1 * c2
                if s:
                    terms[e] = s
                elif e in terms:
                    del terms[e]
        return Polynomial(self.order, terms, _clean=True)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise PolynomialError("negative power")
        result = Polynomial.constant(self.order, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.order == other.order
                and self.terms == other.terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.order, frozenset(self.terms.items())))
        return self._hash

    # -- structure ---------------------------------------------------------

    def degree_in(self, v):
        i = self.order.index(v)
        return max((expt[i] for expt in self.terms), default=0)

    def total_degree(self):
        return max((sum(expt) for expt in self.terms), default=0)

    def coeffs_in(self, v):
        """Coefficients as polynomials in the other variables, index = power of v."""
        i = self.order.index(v)
        d = self.degree_in(v)
        buckets = [dict() for _ in range(d + 1)]
        for expt, coeff in self.terms.items():
            stripped = expt[:i] + (0,) + expt[i + 1:]
            buckets[expt[i]][stripped] = coeff
        return [Polynomial(self.order, b, _clean=True) for b in buckets]

    @classmethod
    def from_coeffs_in(cls, order, v, coeffs):
        i = order.index(v)
        terms = {}
        for power, c in enumerate(coeffs):
            for expt, coeff in c.terms.items():
                e = expt[:i] + (expt[i] + power,) + expt[i + 1:]
                terms[e] = terms.get(e, Fraction(0)) + coeff
        return cls(order, terms)

    def leading_coeff_in(self, v):
        return self.coeffs_in(v)[-1]

    def derivative(self, v):
        i = self.order.index(v)
        terms = {}
        for expt, coeff in self.terms.items():
            if expt[i] == 0:
                continue
            e = expt[:i] + (expt[i] - 1,) + expt[i + 1:]
            terms[e] = terms.get(e, Fraction(0)) + coeff * expt[i]
        return Polynomial(self.order, terms)

    def evaluate(self, assignment):
        """Partially substitute rational values; returns a Polynomial."""
        idx = {self.order.index(v): _as_fraction(q) for v, q in assignment.items()}
        terms = {}
        for expt, coeff in self.terms.items():
            c = coeff
            e = list(expt)
            for i, q in idx.items():
                if expt[i]:
                    c *= q ** expt[i]
                    e[i] = 0
            if c == 0:
                continue
            e = tuple(e)
            s = terms.get(e, Fraction(0)) + c
            if s:
                terms[e] = s
            elif e in terms:
                del terms[e]
        return Polynomial(self.order, terms, _clean=True)

    def eval_rational(self, assignment):
        value = self.evaluate(assignment)
        return value.constant_value()

    def restricted(self, order):
        """Re-express under another ordering covering this one's variables."""
        if order == self.order:
            return self
        mapping = [order.index(name) for name in self.order.names]
        width = len(order)
        terms = {}
        for expt, coeff in self.terms.items():
            e = [0] * width
            for src, dst in enumerate(mapping):
                e[dst] = expt[src]
            terms[tuple(e)] = coeff
        return Polynomial(order, terms, _clean=True)

    # -- term ordering (lex, highest variable most significant) -------------

    def _lex_key(self, expt):
        return tuple(reversed(expt))

    def leading_term(self):
        """(exponent, coeff) of the lex-leading term (highest variable first)."""
        if self.is_zero():
            raise ZeroPolynomialError("leading term of zero")
        expt = max(self.terms, key=self._lex_key)
        return expt, self.terms[expt]

    # -- printing ----------------------------------------------------------

    def __str__(self):
        return poly_to_str(self)

    def __repr__(self):
        return "Polynomial(%s)" % poly_to_str(self)


# ---------------------------------------------------------------------------
# printing / parsing


def _monomial_str(order, expt):
    parts = []
    for name, e in reversed(tuple(zip(order.names, expt))):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append("%s^%d" % (name, e))
    return "*".join(parts)


def poly_to_str(p):
    if p.is_zero():
        return "0"
    items = sorted(p.terms.items(), key=lambda item: p._lex_key(item[0]), reverse=True)
    chunks = []
    for expt, coeff in items:
        mono = _monomial_str(p.order, expt)
        mag = abs(coeff)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = "%s*%s" % (mag, mono)
        if not chunks:
            chunks.append(body if coeff > 0 else "-" + body)
        else:
            chunks.append(("+ " if coeff > 0 else "- ") + body)
    return " ".join(chunks)


# Tokenizer shared with the formula grammar.

_SYMBOLS = ("<=", ">=", "!=", "(", ")", "+", "-", "*", "^", "=", "<", ">", ",", ".")


def tokenize(text):
    """Yield (kind, value, position) tokens; kind in {num, name, sym, end}."""
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            # rational literal p/q
            if j < n and text[j] == "/" and j + 1 < n and text[j + 1].isdigit():
                k = j + 1
                while k < n and text[k].isdigit():
                    k += 1
                tokens.append(("num", Fraction(int(text[i:j]), int(text[j + 1:k])), i))
                i = k
            else:
                tokens.append(("num", Fraction(int(text[i:j])), i))
                i = j
            continue
        if ch.isalpha() and ch.islower():
            j = i
            while j < n and (text[j].islower() or text[j].isdigit() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        for sym in _SYMBOLS:
            if text.startswith(sym, i):
                tokens.append(("sym", sym, i))
                i += len(sym)
                break
        else:
            raise ParseError("unexpected character %r" % ch, i)
    tokens.append(("end", None, n))
    return tokens


class TokenStream:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_sym(self, sym):
        kind, value, where = self.next()
        if kind != "sym" or value != sym:
            raise ParseError("expected %r" % sym, where)


KEYWORDS = frozenset({"and", "or", "not", "implies", "exists", "forall"})


def parse_poly_tokens(ts, order):
    """Parse a polynomial expression from a token stream.

    Grammar: usual precedence for + - * ^, unary minus, parentheses,
    integer/rational literals, variables from the ordering.
    """

    def parse_sum():
        kind, value, _ = ts.peek()
        negate = False
        if kind == "sym" and value in ("+", "-"):
            ts.next()
            negate = value == "-"
        acc = parse_product()
        if negate:
            acc = -acc
        while True:
            kind, value, _ = ts.peek()
            if kind == "sym" and value in ("+", "-"):
                ts.next()
                term = parse_product()
                acc = acc + term if value == "+" else acc - term
            else:
                return acc

    def parse_product():
        acc = parse_power()
        while True:
            kind, value, _ = ts.peek()
            if kind == "sym" and value == "*":
                ts.next()
                acc = acc * parse_power()
            else:
                return acc

    def parse_power():
        base = parse_atom()
        kind, value, _ = ts.peek()
        if kind == "sym" and value == "^":
            ts.next()
            kind, expo, where = ts.next()
            if kind != "num" or expo.denominator != 1 or expo < 0:
                raise ParseError("exponent must be a non-negative integer", where)
            return base ** int(expo)
        return base

    def parse_atom():
        kind, value, where = ts.next()
        if kind == "num":
            return Polynomial.constant(order, value)
        if kind == "name":
            if value in KEYWORDS:
                raise ParseError("keyword %r not allowed in polynomial" % value, where)
            if value not in order:
                raise ParseError("variable %r not in ordering %r" % (value, order.names), where)
            return Polynomial.variable(order, value)
        if kind == "sym" and value == "(":
            inner = parse_sum()
            ts.expect_sym(")")
            return inner
        if kind == "sym" and value == "-":
            return -parse_atom()
        raise ParseError("unexpected token %r" % (value,), where)

    return parse_sum()


def parse_poly(text, order):
    ts = TokenStream(tokenize(text))
    p = parse_poly_tokens(ts, order)
    kind, value, where = ts.peek()
    if kind != "end":
        raise ParseError("trailing input %r" % (value,), where)
    return p


# ---------------------------------------------------------------------------
# normalization


def integer_normalized(p):
    """Scale to integer coefficients with content 1 and positive leading
    coefficient (lex leading term, highest variable most significant)."""
    if p.is_zero():
        return p
    denom_lcm = 1
    for c in p.terms.values():
        denom_lcm = denom_lcm * c.denominator // _int_gcd(denom_lcm, c.denominator)
    num_gcd = 0
    for c in p.terms.values():
        num_gcd = _int_gcd(num_gcd, abs(c.numerator * (denom_lcm // c.denominator)))
    scale = Fraction(denom_lcm, num_gcd)
    _, lead = p.leading_term()
    if lead < 0:
        scale = -scale
    return p * scale


# ---------------------------------------------------------------------------
# division / gcd machinery


def exact_div(p, q):
    """Exact polynomial division; raises ExactDivisionError on remainder."""
    if q.is_zero():
        raise ZeroPolynomialError("division by zero polynomial")
    if q.is_constant():
        return p * (1 / q.constant_value())
    order = p.order
    q_expt, q_coeff = q.leading_term()
    quotient = {}
    rem = p
    while not rem.is_zero():
        r_expt, r_coeff = rem.leading_term()
        diff = tuple(a - b for a, b in zip(r_expt, q_expt))
        if any(e < 0 for e in diff):
            raise ExactDivisionError("%s does not divide %s" % (q, p))
        c = r_coeff / q_coeff
        quotient[diff] = c
        mono = Polynomial(order, {diff: c}, _clean=True)
        rem = rem - mono * q
    return Polynomial(order, quotient)


def divides(q, p):
    try:
        exact_div(p, q)
        return True
    except (ExactDivisionError, ZeroPolynomialError):
        return False


def pseudo_rem(p, q, v):
    """Pseudo-remainder of p by q with respect to v: lc(q)^(dp-dq+1)*p mod q."""
    dp = p.degree_in(v)
    dq = q.degree_in(v)
    if dp < dq:
        return p
    lc_q = q.leading_coeff_in(v)
    rem = p
    order = p.order
    x = Polynomial.variable(order, v)
    steps = 0
    while not rem.is_zero():
        dr = rem.degree_in(v)
        if dr < dq:
            break
        lc_r = rem.leading_coeff_in(v)
        rem = rem * lc_q - q * lc_r * x ** (dr - dq)
        steps += 1
    # The classical definition scales by exactly lc(q)^(dp-dq+1); pad when
    # intermediate degrees dropped by more than one.
    missing = (dp - dq + 1) - steps
    if missing > 0 and not rem.is_zero():
        rem = rem * lc_q ** missing
    return rem


def _gcd_many(polys):
    g = None
    for p in polys:
        if p.is_zero():
            continue
        g = p if g is None else poly_gcd(g, p)
        if g.is_constant():
            break
    if g is None:
        return Polynomial.zero(polys[0].order) if polys else None
    return integer_normalized(g)


def poly_gcd(p, q):
    """GCD over Q[vars], normalized (integer content 1, positive lead)."""
    if p.is_zero():
        return integer_normalized(q) if not q.is_zero() else q
    if q.is_zero():
        return integer_normalized(p)
    if p.is_constant() or q.is_constant():
        return Polynomial.constant(p.order, 1)
    vp = p.main_variable()
    vq = q.main_variable()
    v = vp if p.order.index(vp) >= p.order.index(vq) else vq
    if p.degree_in(v) == 0 or q.degree_in(v) == 0:
        # One side is free of the top variable: gcd divides its content.
        if p.degree_in(v) == 0:
            const_side, other = p, q
        else:
            const_side, other = q, p
        cont = _gcd_many(other.coeffs_in(v))
        return poly_gcd(const_side, cont)
    cont_p = _gcd_many([c for c in p.coeffs_in(v) if not c.is_zero()])
    cont_q = _gcd_many([c for c in q.coeffs_in(v) if not c.is_zero()])
    a = exact_div(p, cont_p)
    b = exact_div(q, cont_q)
    cont_g = poly_gcd(cont_p, cont_q)
    while True:
        da, db = a.degree_in(v), b.degree_in(v)
        if db == 0:
            if b.is_zero():
                g = a
            else:
                return integer_normalized(cont_g)
            break
        if da < db:
            a, b = b, a
            continue
        r = pseudo_rem(a, b, v)
        a = b
        if r.is_zero():
            g = a
            break
        # primitive part to keep coefficients small
        cont_r = _gcd_many([c for c in r.coeffs_in(v) if not c.is_zero()])
        b = exact_div(r, cont_r)
    g = exact_div(g, _gcd_many([c for c in g.coeffs_in(v) if not c.is_zero()]))
    return integer_normalized(g * cont_g)


# ---------------------------------------------------------------------------
# content / primitive part


def content_primitive(p, v):
    """Content (gcd of coefficients w.r.t. v, normalized) and primitive part."""
    if p.is_zero():
        raise ZeroPolynomialError("content of zero polynomial")
    coeffs = [c for c in p.coeffs_in(v) if not c.is_zero()]
    cont = _gcd_many(coeffs)
    prim = exact_div(p, cont)
    return cont, prim


def is_primitive(p, v):
    if p.is_zero():
        raise ZeroPolynomialError("primitivity of zero polynomial")
    if p.degree_in(v) < 1:
        raise PolynomialError("primitivity needs degree >= 1 in %s" % v)
    cont, _ = content_primitive(p, v)
    return cont.is_constant()


# ---------------------------------------------------------------------------
# resultants


def resultant(p, q, v):
    """Sylvester resultant of p and q with respect to v, exact sign.

    Computed by the subresultant polynomial remainder sequence; tests check
    it against a dense Sylvester determinant.
    """
    dp = p.degree_in(v)
    dq = q.degree_in(v)
    if dp < 1 or dq < 1:
        raise DegenerateResultantError(
            "resultant needs degree >= 1 in %s on both sides" % v)
    sign = 1
    if dp < dq:
        p, q = q, p
        dp, dq = dq, dp
        if dp % 2 == 1 and dq % 2 == 1:
            sign = -sign
    order = p.order
    cont_a, a = content_primitive(p, v)
    cont_b, b = content_primitive(q, v)
    t = cont_a ** q.degree_in(v) * cont_b ** p.degree_in(v)
    g = Polynomial.constant(order, 1)
    h = Polynomial.constant(order, 1)
    while True:
        da = a.degree_in(v)
        db = b.degree_in(v)
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            sign = -sign
        r = pseudo_rem(a, b, v)
        a = b
        divisor = g * h ** delta
        b = exact_div(r, divisor) if not r.is_zero() else r
        if b.is_zero():
            return Polynomial.zero(order)
        g = a.leading_coeff_in(v)
        if delta == 0:
            h = h  # h unchanged when delta = 0
        elif delta == 1:
            h = g
        else:
            h = exact_div(g ** delta, h ** (delta - 1))
        if b.degree_in(v) == 0:
            da = a.degree_in(v)
            lc_b = b.leading_coeff_in(v)
            if da == 0:
                res_pp = lc_b  # should not occur: a had degree >= 1
            elif da == 1:
                res_pp = lc_b
            else:
                res_pp = exact_div(lc_b ** da, h ** (da - 1))
            result = t * res_pp
            return result if sign == 1 else -result


def discriminant(p, v):
    """(-1)^(d(d-1)/2) * res(p, dp/dv, v) / lc(p, v)."""
    d = p.degree_in(v)
    if d < 2:
        raise DegenerateResultantError("discriminant needs degree >= 2 in %s" % v)
    res = resultant(p, p.derivative(v), v)
    lc = p.leading_coeff_in(v)
    disc = exact_div(res, lc)
    if (d * (d - 1) // 2) % 2 == 1:
        disc = -disc
    return disc


# ---------------------------------------------------------------------------
# squarefree machinery


def squarefree_part(p, v):
    """p with repeated factors (in v) collapsed, normalized."""
    if p.is_zero():
        raise ZeroPolynomialError("squarefree part of zero polynomial")
    if p.degree_in(v) == 0:
        return integer_normalized(p)
    g = poly_gcd(p, p.derivative(v))
    return integer_normalized(exact_div(p, g))


def squarefree_basis(ps, v):
    """Pairwise-coprime squarefree set with the same root set (in v) as ps.

    Constants are dropped and every element is integer-normalized.  Not an
    irreducible factorization: coprime + squarefree is all the projection
    operator needs.
    """
    queue = []
    for p in ps:
        if p.is_zero():
            raise ZeroPolynomialError("zero polynomial in squarefree basis input")
        if p.is_constant():
            continue
        queue.append(squarefree_part(p, v))
    basis = []
    while queue:
        p = queue.pop()
        if p.is_constant():
            continue
        split = False
        for i, b in enumerate(basis):
            if p == b:
                split = True
                break
            g = poly_gcd(p, b)
            if not g.is_constant():
                del basis[i]
                queue.append(g)
                queue.append(integer_normalized(exact_div(b, g)))
                queue.append(integer_normalized(exact_div(p, g)))
                split = True
                break
        if not split:
            basis.append(p)
    return set(basis)

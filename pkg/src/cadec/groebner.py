"""Buchberger's algorithm, ideal dimension, and elimination ideals."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .polynomial import Polynomial, PolynomialError, VarOrder


class GroebnerError(PolynomialError):
    pass


class MonomialOrder:
    """A monomial order (lex or degrevlex) tied to a variable ordering.

    lex compares the highest variable of the VarOrder first, so a lex
    Groebner basis eliminates variables from the top down.
    """

    __slots__ = ("kind", "order")

    def __init__(self, kind, order):
        if kind not in ("lex", "degrevlex"):
            raise GroebnerError("unknown monomial order %r" % kind)
        self.kind = kind
        self.order = order

    def key(self, expt):
        if self.kind == "lex":
            return tuple(reversed(expt))
        return (sum(expt), tuple(-e for e in expt))

    def leading(self, p):
        if p.is_zero():
            raise GroebnerError("leading term of zero polynomial")
        expt = max(p.terms, key=self.key)
        return expt, p.terms[expt]

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder)
                and self.kind == other.kind and self.order == other.order)

    def __hash__(self):
        return hash((self.kind, self.order))

    def __repr__(self):
        return "MonomialOrder(%s, %r)" % (self.kind, self.order.names)


class IdealBasis:
    """A generating set of an ideal under a monomial order."""

    __slots__ = ("gens", "morder", "is_groebner")

    def __init__(self, gens, morder, is_groebner=False):
        self.gens = tuple(gens)
        self.morder = morder
        self.is_groebner = is_groebner

    @property
    def order(self):
        return self.morder.order

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def __repr__(self):
        return "IdealBasis([%s], %s)" % (
            "; ".join(str(g) for g in self.gens), self.morder.kind)


def _monomial(order, expt, coeff=Fraction(1)):
    return Polynomial(order, {tuple(expt): coeff}, _clean=True)


def _divides_mono(a, b):
    return all(x <= y for x, y in zip(a, b))


def normal_form(p, basis):
    """Remainder of multivariate division of p by the basis generators."""
    morder = basis.morder
    order = morder.order
    if p.order != order:
        raise GroebnerError("mixed variable orderings")
    leads = [(morder.leading(g), g) for g in basis.gens if not g.is_zero()]
    remainder = Polynomial.zero(order)
    work = p
    while not work.is_zero():
        expt = max(work.terms, key=morder.key)
        coeff = work.terms[expt]
        for (lexpt, lcoeff), g in leads:
            if _divides_mono(lexpt, expt):
                factor = _monomial(order,
                                   tuple(a - b for a, b in zip(expt, lexpt)),
                                   coeff / lcoeff)
                work = work - factor * g
                break
        else:
            mono = _monomial(order, expt, coeff)
            remainder = remainder + mono
            work = work - mono
    return remainder


def s_polynomial(f, g, morder):
    (ef, cf) = morder.leading(f)
    (eg, cg) = morder.leading(g)
    lcm = tuple(max(a, b) for a, b in zip(ef, eg))
    order = morder.order
    mf = _monomial(order, tuple(a - b for a, b in zip(lcm, ef)), 1 / cf)
    mg = _monomial(order, tuple(a - b for a, b in zip(lcm, eg)), 1 / cg)
    return mf * f - mg * g


def _monic(p, morder):
    _, c = morder.leading(p)
    return p * (1 / c)


def buchberger(gens, morder):
    """Reduced Groebner basis of the ideal generated by gens."""
    basis = []
    for g in gens:
        if g.is_zero():
            continue
        if g.order != morder.order:
            raise GroebnerError("mixed variable orderings")
        basis.append(_monic(g, morder))
    if not basis:
        # the zero ideal: an empty basis is (vacuously) a Groebner basis
        return IdealBasis([], morder, is_groebner=True)

    pairs = [(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))]
    while pairs:
        i, j = pairs.pop(0)
        f, g = basis[i], basis[j]
        ef, _ = morder.leading(f)
        eg, _ = morder.leading(g)
        # Buchberger's first criterion: coprime leading monomials
        if all(a == 0 or b == 0 for a, b in zip(ef, eg)):
            continue
        lcm = tuple(max(a, b) for a, b in zip(ef, eg))
        # chain criterion: some k with LM(k) | lcm and both pairs done
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            ek, _ = morder.leading(basis[k])
            if _divides_mono(ek, lcm):
                p1 = (min(i, k), max(i, k))
                p2 = (min(j, k), max(j, k))
                if p1 not in pairs and p2 not in pairs:
                    skip = True
                    break
        if skip:
            continue
        r = normal_form(s_polynomial(f, g, morder),
                        IdealBasis(basis, morder))
        if not r.is_zero():
            r = _monic(r, morder)
            basis.append(r)
            pairs.extend((k, len(basis) - 1) for k in range(len(basis) - 1))

    return IdealBasis(_autoreduce(basis, morder), morder, is_groebner=True)


def _autoreduce(basis, morder):
    # drop generators whose leading monomial is divisible by another's
    basis = list(basis)
    changed = True
    while changed:
        changed = False
        for i, g in enumerate(basis):
            others = basis[:i] + basis[i + 1:]
            if not others:
                continue
            eg, _ = morder.leading(g)
            for h in others:
                eh, _ = morder.leading(h)
                if _divides_mono(eh, eg):
                    basis.pop(i)
                    changed = True
                    break
            if changed:
                break
    # fully reduce each generator's tail against the others
    result = []
    for i, g in enumerate(basis):
        others = basis[:i] + basis[i + 1:]
        if others:
            g = normal_form(g, IdealBasis(others, morder))
        result.append(_monic(g, morder))
    result.sort(key=lambda p: morder.key(morder.leading(p)[0]))
    return result


def is_trivial(basis):
    """Does the basis generate the unit ideal?"""
    return any(g.is_constant() and not g.is_zero() for g in basis.gens)


def dimension(basis):
    """Krull dimension: the largest set S of variables such that no leading
    monomial involves only variables of S.  Dimension of <0> is n, of <1>
    is reported as -1 by convention."""
    if not basis.is_groebner:
        raise GroebnerError("dimension needs a Groebner basis")
    names = basis.order.names
    n = len(names)
    gens = [g for g in basis.gens if not g.is_zero()]
    if not gens:
        return n
    if is_trivial(basis):
        return -1
    supports = []
    for g in gens:
        expt, _ = basis.morder.leading(g)
        supports.append(frozenset(i for i, e in enumerate(expt) if e))
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            sset = set(subset)
            if all(not supp <= sset for supp in supports):
                return size
    return 0


def elimination_ideal(basis, keep):
    """Generators of the elimination ideal onto the keep variables.

    Requires a lex Groebner basis; keep must be a downward-closed prefix of
    the variable ordering (the lowest variables)."""
    if basis.morder.kind != "lex":
        raise GroebnerError("elimination requires a lex Groebner basis")
    if not basis.is_groebner:
        raise GroebnerError("elimination requires a Groebner basis")
    names = basis.order.names
    keep = set(keep)
    prefix = set(names[:len(keep)])
    if keep != prefix:
        raise GroebnerError(
            "keep set %r is not a prefix of the ordering %r" % (sorted(keep), names))
    return {g for g in basis.gens if g.variables() <= keep}

"""Exact arithmetic in Q(zeta_e) and exact real-part comparisons.

Elements are stored as length-e vectors of Fractions, meaning
sum_k coeffs[k] * zeta^k with zeta = exp(2*pi*i/e), reduced modulo the e-th
cyclotomic polynomial.  No floating point is used anywhere; comparisons of
real parts of roots of unity go through the integer rule in re_compare.
"""

from fractions import Fraction
from functools import lru_cache


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e):
    """Coefficients of Phi_e, constant term first, as a tuple of ints."""
    # divide x^e - 1 by Phi_d for every proper divisor d of e
    poly = [Fraction(-1)] + [Fraction(0)] * (e - 1) + [Fraction(1)]
    for d in range(1, e):
        if e % d == 0:
            poly = _polydiv_exact(poly, [Fraction(c) for c in cyclotomic_polynomial(d)])
    return tuple(int(c) for c in poly)


def _polydiv_exact(num, den):
    """Exact polynomial division (remainder must vanish)."""
    q, r = _polydivmod(num, den)
    assert all(c == 0 for c in r), "non-exact cyclotomic division"
    return q


def _polydivmod(num, den):
    num = list(num)
    while den and den[-1] == 0:
        den = den[:-1]
    dn = len(den) - 1
    lead = den[-1]
    q = [Fraction(0)] * max(len(num) - dn, 1)
    for i in range(len(num) - 1, dn - 1, -1):
        coef = num[i] / lead
        q[i - dn] = coef
        if coef:
            for j in range(dn + 1):
                num[i - dn + j] -= coef * den[j]
    return q, num[:dn] if dn > 0 else [Fraction(0)]


def _reduce(coeffs, e):
    """Reduce a coefficient list modulo Phi_e, padded to length e."""
    phi = [Fraction(c) for c in cyclotomic_polynomial(e)]
    _, r = _polydivmod([Fraction(c) for c in coeffs], phi)
    r = list(r) + [Fraction(0)] * (e - len(r))
    return tuple(r[:e])


class Cyc:
    """An element of Q(zeta_e)."""

    __slots__ = ("e", "coeffs")

    def __init__(self, e, coeffs, reduced=False):
        self.e = e
        self.coeffs = tuple(coeffs) if reduced else _reduce(coeffs, e)

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(e):
        return Cyc(e, (Fraction(0),) * e, reduced=True)

    @staticmethod
    def one(e):
        return Cyc.from_rational(e, 1)

    @staticmethod
    def from_rational(e, q):
        c = [Fraction(0)] * e
        c[0] = Fraction(q)
        return Cyc(e, c, reduced=True) if e > 1 else Cyc(e, c)

    @staticmethod
    def zeta_power(e, k):
        c = [Fraction(0)] * (k % e + 1)
        c[k % e] = Fraction(1)
        return Cyc(e, c)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Cyc):
            if other.e != self.e:
                raise ValueError("mixed cyclotomic orders")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyc.from_rational(self.e, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Cyc(self.e, [a + b for a, b in zip(self.coeffs, other.coeffs)], reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.e, [-a for a in self.coeffs], reduced=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        e = self.e
        prod = [Fraction(0)] * (2 * e - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        return Cyc(e, prod)

    __rmul__ = __mul__

    def inv(self):
        """Multiplicative inverse via the extended Euclidean algorithm
        against Phi_e over Q."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        e = self.e
        a = list(self.coeffs)
        while a and a[-1] == 0:
            a.pop()
        b = [Fraction(c) for c in cyclotomic_polynomial(e)]
        # extended gcd on polynomials: track u with u*a = gcd mod Phi_e
        r0, r1 = b, a
        u0, u1 = [Fraction(0)], [Fraction(1)]
        while any(c != 0 for c in r1):
            q, r = _polydivmod(r0, r1)
            while r and r[-1] == 0:
                r.pop()
            u_new = _polysub(u0, _polymul(q, u1))
            r0, u0 = r1, u1
            r1, u1 = (r if r else [Fraction(0)]), u_new
        # r0 is a nonzero constant gcd (Phi_e is irreducible)
        assert len([c for c in r0 if c != 0]) == 1 and r0 and r0[-1] != 0
        const = next(c for c in r0 if c != 0)
        return Cyc(e, [c / const for c in u0])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def conj(self):
        """Complex conjugation: zeta^k -> zeta^(e-k)."""
        e = self.e
        out = [Fraction(0)] * e
        for k, c in enumerate(self.coeffs):
            if c:
                out[(-k) % e] += c
        return Cyc(e, out)

    # -- predicates ---------------------------------------------------------

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.e == other.e and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.e, self.coeffs))

    def __repr__(self):
        terms = [f"{c}*z^{k}" for k, c in enumerate(self.coeffs) if c]
        return f"Cyc({self.e}: {' + '.join(terms) or '0'})"

    def to_complex(self):
        """Float approximation (diagnostics only, never decisions)."""
        import cmath
        z = cmath.exp(2j * cmath.pi / self.e)
        return sum(float(c) * z**k for k, c in enumerate(self.coeffs))


def _polymul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _polysub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def re_compare(d1, d2, e):
    """Compare Re(zeta^d1) with Re(zeta^d2) exactly.

    Returns 1, 0 or -1 for >, =, <.  cos(2*pi*d/e) depends only on
    min(d mod e, e - d mod e), and cosine strictly decreases on [0, pi].
    """
    k1 = min(d1 % e, e - d1 % e)
    k2 = min(d2 % e, e - d2 % e)
    if k1 == k2:
        return 0
    return 1 if k1 < k2 else -1


def is_primitive_power_one(d, e):
    """Is zeta^d a primitive e-th root of unity?"""
    from math import gcd
    return gcd(d, e) == 1

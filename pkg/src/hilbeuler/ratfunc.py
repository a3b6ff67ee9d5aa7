"""Exact univariate rational functions with integer-coefficient polynomials.

Polynomials are dense tuples indexed by degree. RationalFunction1 values are
always normalized: gcd(num, den) = 1 as polynomials, integer coefficients
with coprime contents, and positive leading denominator coefficient.
"""

from fractions import Fraction
from math import gcd as int_gcd


# ---------------------------------------------------------------------------
# dense polynomial helpers (coefficients: int or Fraction)

def ptrim(p):
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return tuple(p) if p else (0,)


def pis_zero(p):
    return all(not c for c in p)


def padd(a, b):
    n = max(len(a), len(b))
    return ptrim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                  for i in range(n)])


def pneg(a):
    return tuple(-c for c in a)


def psub(a, b):
    return padd(a, pneg(b))


def pmul(a, b):
    if pis_zero(a) or pis_zero(b):
        return (0,)
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            if cb:
                out[i + j] += ca * cb
    return ptrim(out)


def pscale(a, c):
    return ptrim([c * x for x in a])


def pdegree(p):
    p = ptrim(p)
    return -1 if pis_zero(p) else len(p) - 1


def pdivmod(a, b):
    """Division with remainder over the rationals."""
    if pis_zero(b):
        raise ZeroDivisionError("polynomial division by zero")
    a = [Fraction(c) for c in ptrim(a)]
    b = [Fraction(c) for c in ptrim(b)]
    if pdegree(a) < pdegree(b):
        return (0,), ptrim(a)
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    r = a[:]
    db, lb = len(b) - 1, b[-1]
    while not pis_zero(r) and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        c = r[-1] / lb
        q[shift] = c
        for i in range(len(b)):
            r[shift + i] -= c * b[i]
        while r and not r[-1]:
            r.pop()
        if not r:
            r = [Fraction(0)]
    return ptrim(q), ptrim(r)


def pgcd(a, b):
    """Monic polynomial gcd over the rationals."""
    a, b = ptrim(a), ptrim(b)
    while not pis_zero(b):
        _, r = pdivmod(a, b)
        a, b = b, r
    if pis_zero(a):
        return (0,)
    lead = Fraction(a[-1])
    return ptrim([Fraction(c) / lead for c in a])


def psubs_power(p, k):
    """Substitute z -> z^k."""
    if k == 1:
        return ptrim(p)
    out = [0] * ((len(p) - 1) * k + 1)
    for i, c in enumerate(p):
        if c:
            out[i * k] = c
    return ptrim(out)


def peval(p, x):
    v = Fraction(0)
    for c in reversed(p):
        v = v * x + c
    return v


def _to_primitive_int(p):
    """Scale a rational-coefficient poly to integer coefficients; return
    (int_poly, multiplier) with int_poly = p * multiplier."""
    p = [Fraction(c) for c in p]
    den_lcm = 1
    for c in p:
        den_lcm = den_lcm * c.denominator // int_gcd(den_lcm, c.denominator)
    return tuple(int(c * den_lcm) for c in p), den_lcm


class RationalFunction1:
    """Exact ratio of integer-coefficient polynomials in one parameter."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=(1,)):
        num, den = ptrim(num), ptrim(den)
        if pis_zero(den):
            raise ZeroDivisionError("zero denominator")
        if pis_zero(num):
            self.num, self.den = (0,), (1,)
            return
        g = pgcd(num, den)
        if pdegree(g) > 0:
            num, _ = pdivmod(num, g)
            den, _ = pdivmod(den, g)
        num, mn = _to_primitive_int(num)
        den, md = _to_primitive_int(den)
        # overall rational scale: num/mn over den/md -> (num*md)/(den*mn)
        cn = 0
        for c in num:
            cn = int_gcd(cn, abs(c))
        cd = 0
        for c in den:
            cd = int_gcd(cd, abs(c))
        num = tuple(c // cn for c in num)
        den = tuple(c // cd for c in den)
        a, b = md * cn, mn * cd  # value = (a*num)/(b*den)
        g2 = int_gcd(a, b)
        a, b = a // g2, b // g2
        num = tuple(c * a for c in num)
        den = tuple(c * b for c in den)
        # sign convention: first nonzero denominator coefficient positive
        if next(c for c in den if c) < 0:
            num, den = pneg(num), pneg(den)
        self.num, self.den = num, den

    # -- constructors -------------------------------------------------------
    @classmethod
    def const(cls, value):
        f = Fraction(value)
        return cls((f.numerator,), (f.denominator,))

    @classmethod
    def z_power(cls, k):
        """z^k, with negative k represented as 1/z^(-k)."""
        if k >= 0:
            return cls((0,) * k + (1,))
        return cls((1,), (0,) * (-k) + (1,))

    # -- arithmetic ----------------------------------------------------------
    def __bool__(self):
        return not pis_zero(self.num)

    def __add__(self, other):
        other = _coerce(other)
        return RationalFunction1(
            padd(pmul(self.num, other.den), pmul(other.num, self.den)),
            pmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        r = RationalFunction1.__new__(RationalFunction1)
        r.num, r.den = pneg(self.num), self.den
        return r

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        return RationalFunction1(pmul(self.num, other.num),
                                 pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction1(pmul(self.num, other.den),
                                 pmul(self.den, other.num))

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __pow__(self, k):
        if k < 0:
            return RationalFunction1((1,)) / self ** (-k)
        out = RationalFunction1((1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, RationalFunction1):
            try:
                other = _coerce(other)
            except TypeError:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- queries -------------------------------------------------------------
    def is_polynomial(self):
        return pdegree(self.den) == 0

    def poly_coeffs(self):
        """Coefficients as Fractions; requires a polynomial value."""
        if not self.is_polynomial():
            raise ValueError("not a polynomial: %r" % (self,))
        d = self.den[0]
        return tuple(Fraction(c, d) for c in self.num)

    def subs_power(self, k):
        """Substitute z -> z^k."""
        return RationalFunction1(psubs_power(self.num, k),
                                 psubs_power(self.den, k))

    def eval(self, x):
        dv = peval(self.den, Fraction(x))
        if not dv:
            raise ZeroDivisionError("denominator vanishes at %r" % (x,))
        return peval(self.num, Fraction(x)) / dv

    def expand(self, order):
        """First order+1 Taylor coefficients at the origin."""
        return rf_expand(self, order)

    def __repr__(self):
        return "RationalFunction1(%r, %r)" % (self.num, self.den)

    def __str__(self):
        return rf_str(self)


def _coerce(x):
    if isinstance(x, RationalFunction1):
        return x
    if isinstance(x, (int, Fraction)):
        return RationalFunction1.const(x)
    raise TypeError("cannot coerce %r to RationalFunction1" % (x,))


RF0 = RationalFunction1((0,))
RF1 = RationalFunction1((1,))


def rf_expand(r, order):
    """Taylor coefficients c_0..c_order of r about the origin.

    The normalized denominator must not vanish at zero.
    """
    den = r.den
    if not den[0]:
        raise ValueError("not expandable at origin: denominator %r" % (den,))
    num, d0 = r.num, Fraction(den[0])
    out = []
    for k in range(order + 1):
        acc = Fraction(num[k]) if k < len(num) else Fraction(0)
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * out[k - j]
        out.append(acc / d0)
    return out


# ---------------------------------------------------------------------------
# rendering

def poly_str(p, var="z"):
    p = ptrim(p)
    if pis_zero(p):
        return "0"
    parts = []
    for i, c in enumerate(p):
        if not c:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            mono = var if i == 1 else "%s^%d" % (var, i)
            if c == 1:
                term = mono
            elif c == -1:
                term = "-" + mono
            else:
                term = "%s*%s" % (c, mono)
            parts.append(term)
    s = parts[0]
    for t in parts[1:]:
        s += t if t.startswith("-") else "+" + t
    return s


def rf_str(r, var="z"):
    ns = poly_str(r.num, var)
    if r.is_polynomial() and r.den == (1,):
        return ns
    ds = poly_str(r.den, var)
    if len(ptrim(r.num)) > 1 or ns.startswith("-"):
        ns = "(%s)" % ns
    return "%s/(%s)" % (ns, ds)

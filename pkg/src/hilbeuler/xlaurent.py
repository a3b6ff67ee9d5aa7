"""Laurent polynomials in x_1..x_n with coefficients in an arbitrary ring.

Coefficients may be Fractions, RationalFunction1 values, or BiSeries; any
type supporting +, * and truthiness-as-nonzero works. Exponent vectors are
integer tuples of fixed length.
"""


class XLaurent:
    __slots__ = ("nvars", "c")

    def __init__(self, nvars, coeffs=None):
        self.nvars = nvars
        self.c = {}
        if coeffs:
            for k, v in coeffs.items():
                if len(k) != nvars:
                    raise ValueError("exponent vector %r has wrong length" % (k,))
                if v:
                    self.c[tuple(k)] = v

    @classmethod
    def const(cls, nvars, value):
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def monomial(cls, nvars, exps, value):
        return cls(nvars, {tuple(exps): value})

    def __bool__(self):
        return bool(self.c)

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")

    def __add__(self, other):
        self._check(other)
        out = dict(self.c)
        for k, v in other.c.items():
            nv = out[k] + v if k in out else v
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
        r = XLaurent(self.nvars)
        r.c = out
        return r

    def __neg__(self):
        r = XLaurent(self.nvars)
        r.c = {k: -v for k, v in self.c.items()}
        return r

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        out = {}
        for k1, v1 in self.c.items():
            for k2, v2 in other.c.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                v = v1 * v2
                if not v:
                    continue
                if k in out:
                    nv = out[k] + v
                    if nv:
                        out[k] = nv
                    else:
                        del out[k]
                else:
                    out[k] = v
        r = XLaurent(self.nvars)
        r.c = out
        return r

    def scale(self, value):
        r = XLaurent(self.nvars)
        for k, v in self.c.items():
            nv = v * value
            if nv:
                r.c[k] = nv
        return r

    def map_coeffs(self, fn):
        r = XLaurent(self.nvars)
        for k, v in self.c.items():
            nv = fn(v)
            if nv:
                r.c[k] = nv
        return r

    def coeff(self, exps, zero=0):
        return self.c.get(tuple(exps), zero)

    def items_sorted(self):
        return sorted(self.c.items())

    def __eq__(self, other):
        if not isinstance(other, XLaurent):
            return NotImplemented
        return self.nvars == other.nvars and self.c == other.c

    def __repr__(self):
        return "XLaurent(%d, %r)" % (self.nvars, self.c)


def constant_term(value, zero=0):
    """Coefficient of x^0."""
    return value.c.get((0,) * value.nvars, zero)


def constant_term_nonneg(value, zero=0):
    """Sum of coefficients over exponent vectors in the nonnegative orthant.

    This realizes pairing against the plethystic exponential of the inverted
    alphabet: every factor (1 - 1/x_i)^(-1) is expanded into nonpositive
    powers of x_i.
    """
    acc = zero
    for k, v in value.c.items():
        if all(e >= 0 for e in k):
            acc = acc + v
    return acc

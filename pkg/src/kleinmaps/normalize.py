r"""
Exact normalization of real critical data into ``{0, 1, inf}``.

Given the critical values of a real Belyi map (at most three, closed under
complex conjugation) we build a real rational function ``h`` such that ``h``
sends the values into ``{0, 1, inf}`` and has all of its own critical values
there too.  With a non-real pair ``P, conj(P)``:

1. a real Moebius map sends the real value (if any) to ``inf``;
2. the real quadratic ``X^2 + a X + b`` with ``a = -2 Re(P)``, ``b = |P|^2``
   collapses ``P, conj(P)`` to ``0``; its critical values are
   ``b - a^2/4`` and ``inf``;
3. scaling by ``1 / (b - a^2/4)`` moves that value to ``1``.

Otherwise one real Moebius map suffices.  All arithmetic is over
:class:`fractions.Fraction`; the returned certificate is re-derived from the
composite itself rather than from the construction.

The module also carries the Weierstrass ``j``-invariant used to tell apart
the two real forms ``y^2 = 4x^3 - g2 x -+ g3``.
"""
from dataclasses import dataclass
from fractions import Fraction

import sympy

from .errors import (DegreeUnsupported, FormatError, InvalidParameter, NotDistinct, NotReal,
                     RealInput, SingularCurve, TooManyNonRealPairs)

__all__ = ["INF", "GaussianRational", "RealRationalMap", "CriticalSet", "Certificate",
           "moebius_to_standard", "fold_quadratic", "normalize", "critical_values",
           "j_invariant", "real_forms", "parse_value", "format_value"]


class _Inf:
    __slots__ = ()

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return "INF"


INF = _Inf()


@dataclass(frozen=True)
class GaussianRational:
    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @staticmethod
    def coerce(z):
        return z if isinstance(z, GaussianRational) else GaussianRational(z)

    def is_real(self):
        return self.im == 0

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def norm(self):
        return self.re * self.re + self.im * self.im

    def __add__(self, other):
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussianRational.coerce(other))

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = GaussianRational.coerce(other)
        d = o.norm()
        if d == 0:
            raise ZeroDivisionError("division by zero")
        return self * GaussianRational(o.re / d, -o.im / d)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, _Inf):
            return False
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __str__(self):
        return format_value(self)


def _val(v):
    """Coerce to GaussianRational or INF."""
    if v is INF or isinstance(v, GaussianRational):
        return v
    if isinstance(v, str):
        return parse_value(v)
    return GaussianRational(v)


def parse_value(text):
    """Parse ``"inf"``, ``"p/q"``, ``"i"``, ``"-2/3i"`` or ``"p/q+r/si"``."""
    s = text.strip().replace(" ", "").lower()
    if s in ("inf", "infinity", "oo", "∞"):
        return INF
    try:
        if s.endswith("i"):
            body = s[:-1]
            # split at the last sign that is not leading and not part of an exponent
            k = max(body.rfind("+", 1), body.rfind("-", 1))
            if k > 0:
                re_part, im_part = body[:k], body[k:]
            else:
                re_part, im_part = "0", body
            if im_part in ("", "+"):
                im_part = "1"
            elif im_part == "-":
                im_part = "-1"
            return GaussianRational(Fraction(re_part), Fraction(im_part))
        return GaussianRational(Fraction(s))
    except (ValueError, ZeroDivisionError):
        raise FormatError("cannot parse value {!r}".format(text)) from None


def format_value(v):
    if v is INF:
        return "inf"
    if v.im == 0:
        return str(v.re)
    im = "" if abs(v.im) == 1 else str(abs(v.im))
    if v.re == 0:
        return ("-" if v.im < 0 else "") + im + "i"
    return "{}{}{}i".format(v.re, "-" if v.im < 0 else "+", im)


# -- polynomials: ascending coefficient lists of Fractions -----------------

def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _padd(p, q):
    out = [Fraction(0)] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return _trim(out)


def _pmul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _trim(out)


def _pscale(p, c):
    return _trim([c * a for a in p])


def _pderiv(p):
    return _trim([i * c for i, c in enumerate(p)][1:])


def _pdivmod(p, q):
    p = list(p)
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 1)
    while len(p) >= len(q) and p:
        c = p[-1] / q[-1]
        k = len(p) - len(q)
        quot[k] = c
        for i, b in enumerate(q):
            p[i + k] -= c * b
        p = _trim(p)
    return _trim(quot), p


def _pgcd(p, q):
    while q:
        p, q = q, _pdivmod(p, q)[1]
    return _pscale(p, 1 / p[-1]) if p else p


def _peval(p, z):
    acc = GaussianRational(0)
    for c in reversed(p):
        acc = acc * z + c
    return acc


def _deg(p):
    return len(p) - 1


class RealRationalMap:
    """``numerator / denominator`` with real rational coefficients, in lowest terms.

    Coefficients are listed from the constant term upward and the denominator
    is made monic.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator, denominator=(1,)):
        num = _trim(Fraction(c) for c in numerator)
        den = _trim(Fraction(c) for c in denominator)
        if not den:
            raise InvalidParameter("denominator is identically zero")
        g = _pgcd(num, den) if num else [Fraction(1)]
        if len(g) > 1:
            num = _pdivmod(num, g)[0]
            den = _pdivmod(den, g)[0]
        lead = den[-1]
        self.numerator = tuple(c / lead for c in num)
        self.denominator = tuple(c / lead for c in den)

    @classmethod
    def identity(cls):
        return cls([0, 1])

    @classmethod
    def moebius(cls, a, b, c, d):
        """``(a X + b) / (c X + d)``."""
        if Fraction(a) * d - Fraction(b) * c == 0:
            raise InvalidParameter("degenerate Moebius transformation")
        return cls([b, a], [d, c])

    @property
    def degree(self):
        return max(_deg(self.numerator), _deg(self.denominator), 0)

    def __eq__(self, other):
        return (isinstance(other, RealRationalMap) and self.numerator == other.numerator
                and self.denominator == other.denominator)

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def __repr__(self):
        return "RealRationalMap({}, {})".format([str(c) for c in self.numerator],
                                                [str(c) for c in self.denominator])

    def __call__(self, z):
        z = _val(z)
        num, den = self.numerator, self.denominator
        if z is INF:
            dn, dd = _deg(num), _deg(den)
            if dn > dd:
                return INF
            if dn < dd:
                return GaussianRational(0)
            return GaussianRational(num[-1] / den[-1])
        d = _peval(den, z)
        if not d:
            return INF
        return _peval(num, z) / d

    def compose(self, inner):
        """``self ∘ inner``."""
        d = self.degree
        gn, gd = list(inner.numerator), list(inner.denominator)
        pow_n = [[Fraction(1)]]
        pow_d = [[Fraction(1)]]
        for _ in range(d):
            pow_n.append(_pmul(pow_n[-1], gn))
            pow_d.append(_pmul(pow_d[-1], gd))

        def homogenize(p):
            acc = []
            for i, c in enumerate(p):
                acc = _padd(acc, _pscale(_pmul(pow_n[i], pow_d[d - i]), c))
            return acc

        return RealRationalMap(homogenize(self.numerator), homogenize(self.denominator))

    def derivative_numerator(self):
        """``P' Q - P Q'`` for ``self = P / Q``."""
        p, q = list(self.numerator), list(self.denominator)
        return _padd(_pmul(_pderiv(p), q), _pscale(_pmul(p, _pderiv(q)), -1))

    def to_dict(self):
        return {"numerator": [str(c) for c in self.numerator],
                "denominator": [str(c) for c in self.denominator]}


def _sort_key(v):
    if v is INF:
        return (2, 0, 0)
    return (0 if v.is_real() else 1, v.re, v.im)


def _distinct(values):
    seen = []
    for v in values:
        if v in seen:
            raise NotDistinct("value {} repeated".format(format_value(v)))
        seen.append(v)


class CriticalSet:
    """At most three distinct points of the Riemann sphere, closed under conjugation."""

    __slots__ = ("values",)

    def __init__(self, values):
        values = [_val(v) for v in values]
        _distinct(values)
        pairs = sum(1 for v in values if v is not INF and v.im > 0)
        if pairs > 1:
            raise TooManyNonRealPairs("{} non-real conjugate pairs; a real Belyi map has at most one"
                                      .format(pairs))
        if len(values) > 3:
            raise InvalidParameter("at most three critical values, got {}".format(len(values)))
        for v in values:
            if v is not INF and not v.is_real() and v.conjugate() not in values:
                raise InvalidParameter("{} appears without its conjugate".format(format_value(v)))
        self.values = tuple(sorted(values, key=_sort_key))

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)


_TARGETS = (GaussianRational(0), GaussianRational(1), INF)


def moebius_to_standard(v1, v2, v3):
    """Real Moebius map sending ``v1, v2, v3`` to ``0, 1, inf``."""
    vs = [_val(v) for v in (v1, v2, v3)]
    for v in vs:
        if v is not INF and not v.is_real():
            raise NotReal("{} is not real".format(format_value(v)))
    _distinct(vs)
    v1, v2, v3 = [v if v is INF else v.re for v in vs]
    if v1 is INF:
        a, b, c, d = 0, 1, 1, -v3
    elif v3 is INF:
        a, b, c, d = 1, -v1, 0, 1
    else:
        a, b, c, d = 1, -v1, 1, -v3
    if v2 is INF:
        k = Fraction(c) / a
    else:
        k = Fraction(c * v2 + d) / (a * v2 + b)
    return RealRationalMap.moebius(k * a, k * b, c, d)


def fold_quadratic(P):
    P = _val(P)
    if P is INF or P.is_real():
        raise RealInput("{} is real; folding needs a non-real value".format(format_value(P)))
    a = -2 * P.re
    b = P.norm()
    return RealRationalMap([b, a, 1])


def _rational_roots(poly):
    """Exact roots of a rational polynomial, restricted to Gaussian rationals."""
    x = sympy.Symbol("x")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * x ** i for i, c in enumerate(poly))
    _, factors = sympy.Poly(expr, x, domain="QQ").factor_list()
    roots = []
    for f, _mult in factors:
        cs = [Fraction(int(c.p), int(c.q)) for c in reversed(f.all_coeffs())]
        if len(cs) == 2:
            roots.append(GaussianRational(-cs[0] / cs[1]))
        elif len(cs) == 3:
            c0, c1, c2 = (c / cs[2] for c in cs)
            disc = c1 * c1 - 4 * c0
            # irreducible over Q, so disc is not a rational square; need -disc a square
            s = _fraction_sqrt(-disc)
            if s is None:
                raise DegreeUnsupported("critical points outside the Gaussian rationals")
            roots.append(GaussianRational(-c1 / 2, s / 2))
            roots.append(GaussianRational(-c1 / 2, -s / 2))
        else:
            raise DegreeUnsupported("irreducible factor of degree {} in the derivative"
                                    .format(len(cs) - 1))
    return roots


def _fraction_sqrt(q):
    if q < 0:
        return None
    from math import isqrt
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def critical_points(h):
    if h.degree > 4:
        raise DegreeUnsupported("degree {} exceeds 4".format(h.degree))
    if h.degree < 2:
        return []
    w = h.derivative_numerator()
    points = _rational_roots(w) if _deg(w) > 0 else []
    if _deg(w) < 2 * h.degree - 2:
        points.append(INF)
    return points


def critical_values(h):
    """Critical values of ``h`` on the Riemann sphere, sorted, without repeats."""
    out = []
    for p in critical_points(h):
        v = h(p)
        if v not in out:
            out.append(v)
    return sorted(out, key=_sort_key)


@dataclass(frozen=True)
class Certificate:
    """Evidence that ``h`` normalizes a critical set.

    ``stages`` lists the applied maps innermost first as ``(name, map)``
    pairs; ``padding`` holds source points added when fewer than three
    values were given.
    """
    h: RealRationalMap
    inputs: tuple
    images: tuple
    own_critical_values: tuple
    stages: tuple
    padding: tuple

    @property
    def verified(self):
        return all(v in _TARGETS for v in self.images + self.own_critical_values)

    def to_dict(self):
        return {
            "map": self.h.to_dict(),
            "inputs": [format_value(v) for v in self.inputs],
            "images": [format_value(v) for v in self.images],
            "own_critical_values": [format_value(v) for v in self.own_critical_values],
            "stages": [{"name": name, "map": m.to_dict()} for name, m in self.stages],
            "padding": [format_value(v) for v in self.padding],
            "verified": self.verified,
        }


def normalize(cs):
    """Return ``(h, certificate)`` normalizing the critical set ``cs``."""
    if not isinstance(cs, CriticalSet):
        cs = CriticalSet(cs)
    values = list(cs.values)
    nonreal = [v for v in values if v is not INF and v.im > 0]
    stages = []
    padding = []
    h = RealRationalMap.identity()
    if nonreal:
        P = nonreal[0]
        real = [v for v in values if v is INF or v.is_real()]
        if not real:
            padding.append(INF)
            Q = INF
        else:
            (Q,) = real
        if Q is not INF:
            m1 = RealRationalMap.moebius(0, 1, 1, -Q.re)
            stages.append(("to_infinity", m1))
            h = m1
            P = m1(P)
        r = fold_quadratic(P)
        stages.append(("fold", r))
        h = r.compose(h)
        c = r.numerator[0] - r.numerator[1] ** 2 / 4
        if c not in (0, 1):
            m2 = RealRationalMap.moebius(1, 0, 0, c)
            stages.append(("scale", m2))
            h = m2.compose(h)
    elif not all(v in _TARGETS for v in values):
        src = list(values)
        for t in _TARGETS:
            if len(src) == 3:
                break
            if t not in src:
                src.append(t)
                padding.append(t)
        src.sort(key=_sort_key)
        h = moebius_to_standard(*src)
        stages.append(("moebius", h))
    images = tuple(h(v) for v in cs.values)
    cert = Certificate(h, cs.values, images, tuple(critical_values(h)), tuple(stages),
                       tuple(padding))
    return h, cert


def j_invariant(g2, g3):
    """``g2^3 / (g2^3 - 27 g3^2)`` for the curve ``y^2 = 4x^3 - g2 x - g3``."""
    g2, g3 = Fraction(g2), Fraction(g3)
    disc = g2 ** 3 - 27 * g3 ** 2
    if disc == 0:
        raise SingularCurve("g2^3 - 27 g3^2 vanishes for g2={}, g3={}".format(g2, g3))
    return g2 ** 3 / disc


def real_forms(j):
    """Coefficients ``((g2, g3), (g2, g3))`` of the two real curves with invariant ``j``."""
    j = Fraction(j)
    if j == 0:
        return (Fraction(0), Fraction(1)), (Fraction(0), Fraction(-1))
    if j == 1:
        return (Fraction(1), Fraction(0)), (Fraction(-1), Fraction(0))
    t = 27 * j / (j - 1)
    return (t, t), (t, -t)

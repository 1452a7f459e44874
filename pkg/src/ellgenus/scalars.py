"""Exact scalar arithmetic.

A Scalar is an element of the fraction field of polynomials in one formal
symbol (the circle constant) whose coefficients are Gaussian rationals.
Every value is kept in a canonical form, so equality of representations is
equality of values:

  * numerator and denominator share no polynomial factor,
  * the denominator is monic.

Gaussian rationals are stored as (Fraction real, Fraction imag) pairs and
polynomials as ascending coefficient tuples with no trailing zeros.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

import mpmath

from .errors import DivisionByZero

Q = Fraction

_GQ_ZERO = (Q(0), Q(0))
_GQ_ONE = (Q(1), Q(0))


def _gq(re, im=0):
    return (Q(re), Q(im))


def _gq_add(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _gq_sub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def _gq_mul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gq_inv(a):
    n = a[0] * a[0] + a[1] * a[1]
    if n == 0:
        raise DivisionByZero("gaussian rational division by zero")
    return (a[0] / n, -a[1] / n)


def _gq_neg(a):
    return (-a[0], -a[1])


# -- polynomials over Gaussian rationals, ascending tuples ------------------

_P_ZERO = ()
_P_ONE = (_GQ_ONE,)


def _p_trim(cs):
    i = len(cs)
    while i > 0 and cs[i - 1] == _GQ_ZERO:
        i -= 1
    return tuple(cs[:i])


def _p_add(a, b):
    n = max(len(a), len(b))
    return _p_trim([
        _gq_add(a[i] if i < len(a) else _GQ_ZERO, b[i] if i < len(b) else _GQ_ZERO)
        for i in range(n)
    ])


def _p_neg(a):
    return tuple(_gq_neg(c) for c in a)


def _p_mul(a, b):
    if not a or not b:
        return _P_ZERO
    out = [_GQ_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == _GQ_ZERO:
            continue
        for j, y in enumerate(b):
            if y != _GQ_ZERO:
                out[i + j] = _gq_add(out[i + j], _gq_mul(x, y))
    return _p_trim(out)


def _p_scale(a, c):
    if c == _GQ_ZERO:
        return _P_ZERO
    return _p_trim([_gq_mul(x, c) for x in a])


def _p_divmod(a, b):
    """Exact polynomial division with remainder over the Gaussian field."""
    if not b:
        raise DivisionByZero("polynomial division by zero")
    rem = list(a)
    if len(a) < len(b):
        return _P_ZERO, _p_trim(rem)
    inv_lead = _gq_inv(b[-1])
    quot = [_GQ_ZERO] * (len(a) - len(b) + 1)
    for k in range(len(a) - len(b), -1, -1):
        c = _gq_mul(rem[k + len(b) - 1], inv_lead)
        if c == _GQ_ZERO:
            continue
        quot[k] = c
        for j, y in enumerate(b):
            rem[k + j] = _gq_sub(rem[k + j], _gq_mul(c, y))
    return _p_trim(quot), _p_trim(rem)


def _p_monic(a):
    if not a:
        return a
    if a[-1] == _GQ_ONE:
        return a
    return _p_scale(a, _gq_inv(a[-1]))


def _p_gcd(a, b):
    a, b = _p_trim(a), _p_trim(b)
    while b:
        _, r = _p_divmod(a, b)
        a, b = b, r
    return _p_monic(a)


class Scalar:
    """Canonical fraction of Gaussian-rational polynomials in pi."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=_P_ONE, _canonical=False):
        if _canonical:
            self.num = num
            self.den = den
            return
        num = _p_trim(num)
        den = _p_trim(den)
        if not den:
            raise DivisionByZero("scalar with zero denominator")
        if not num:
            self.num, self.den = _P_ZERO, _P_ONE
            return
        if len(den) == 1:
            # constant denominator: fold into the numerator
            num = _p_scale(num, _gq_inv(den[0]))
            den = _P_ONE
        else:
            g = _p_gcd(num, den)
            if len(g) > 1:
                num, _ = _p_divmod(num, g)
                den, _ = _p_divmod(den, g)
            lead = den[-1]
            if lead != _GQ_ONE:
                inv = _gq_inv(lead)
                num = _p_scale(num, inv)
                den = _p_scale(den, inv)
            if len(den) == 1:
                num = _p_scale(num, _gq_inv(den[0]))
                den = _P_ONE
        self.num = num
        self.den = den

    # -- constructors --------------------------------------------------

    @staticmethod
    def from_rational(x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        return Scalar((_gq(x),)) if x else ZERO

    @staticmethod
    def from_gauss(re, im=0) -> "Scalar":
        c = _gq(re, im)
        return Scalar((c,)) if c != _GQ_ZERO else ZERO

    @staticmethod
    def pi(power: int = 1) -> "Scalar":
        if power < 0:
            return ONE / Scalar.pi(-power)
        return Scalar(tuple([_GQ_ZERO] * power) + (_GQ_ONE,))

    @staticmethod
    def i() -> "Scalar":
        return I

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, Rational)):
            return Scalar.from_rational(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return Scalar(_p_add(self.num, o.num), self.den)
        return Scalar(
            _p_add(_p_mul(self.num, o.den), _p_mul(o.num, self.den)),
            _p_mul(self.den, o.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return Scalar(_p_neg(self.num), self.den, _canonical=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not self.num or not o.num:
            return ZERO
        return Scalar(_p_mul(self.num, o.num), _p_mul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not o.num:
            raise DivisionByZero("division by the zero scalar")
        return Scalar(_p_mul(self.num, o.den), _p_mul(self.den, o.num))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def __pow__(self, k: int):
        if k == 0:
            return ONE
        if k < 0:
            return ONE / (self ** (-k))
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> "Scalar":
        return ONE / self

    # -- structure ------------------------------------------------------

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    @property
    def is_rational(self) -> bool:
        return self.den == _P_ONE and len(self.num) <= 1 and (
            not self.num or self.num[0][1] == 0
        )

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("scalar is not a plain rational: %s" % (self,))
        return self.num[0][0] if self.num else Q(0)

    def conjugate(self) -> "Scalar":
        return Scalar(
            tuple((c[0], -c[1]) for c in self.num),
            tuple((c[0], -c[1]) for c in self.den),
        )

    # -- numerics -------------------------------------------------------

    def evaluate(self, prec_bits: int = 64):
        """Numeric value as an mpmath complex at the given binary precision."""
        with mpmath.workprec(max(prec_bits, 64)):
            pi = mpmath.pi
            return _p_eval(self.num, pi) / _p_eval(self.den, pi)

    # -- printing -------------------------------------------------------

    def __str__(self):
        if not self.num:
            return "0"
        ns = _poly_str(self.num)
        if self.den == _P_ONE:
            return ns
        ds = _poly_str(self.den)
        if _needs_parens(self.num):
            ns = "(%s)" % ns
        if _needs_parens(self.den):
            ds = "(%s)" % ds
        return "%s/%s" % (ns, ds)

    def __repr__(self):
        return "Scalar(%s)" % self


def _p_eval(p, pi):
    acc = mpmath.mpc(0)
    for k in range(len(p) - 1, -1, -1):
        re, im = p[k]
        acc = acc * pi + mpmath.mpc(
            mpmath.mpf(re.numerator) / re.denominator,
            mpmath.mpf(im.numerator) / im.denominator,
        )
    return acc


def _frac_str(x: Fraction) -> str:
    return str(x)


def _gauss_str(c) -> str:
    re, im = c
    if im == 0:
        return _frac_str(re)
    if re == 0:
        if im == 1:
            return "i"
        if im == -1:
            return "-i"
        return "%s i" % _frac_str(im)
    sign = "+" if im > 0 else "-"
    mag = abs(im)
    istr = "i" if mag == 1 else "%s i" % _frac_str(mag)
    return "(%s %s %s)" % (_frac_str(re), sign, istr)


def _poly_str(p) -> str:
    parts = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if c == _GQ_ZERO:
            continue
        if k == 0:
            term = _gauss_str(c)
        else:
            pistr = "pi" if k == 1 else "pi^%d" % k
            if c == _GQ_ONE:
                term = pistr
            elif c == (Q(-1), Q(0)):
                term = "-" + pistr
            else:
                term = "%s %s" % (_gauss_str(c), pistr)
        parts.append(term)
    out = parts[0]
    for t in parts[1:]:
        if t.startswith("-"):
            out += " - " + t[1:]
        else:
            out += " + " + t
    return out


def _needs_parens(p) -> bool:
    nonzero = [c for c in p if c != _GQ_ZERO]
    return len(nonzero) > 1


ZERO = Scalar(_P_ZERO, _P_ONE, _canonical=True)
ONE = Scalar(_P_ONE, _P_ONE, _canonical=True)
I = Scalar(((Q(0), Q(1)),), _P_ONE, _canonical=True)
PI = Scalar((_GQ_ZERO, _GQ_ONE), _P_ONE, _canonical=True)
TWO_PI_I = Scalar((_GQ_ZERO, (Q(0), Q(2))), _P_ONE, _canonical=True)
PI_I = Scalar((_GQ_ZERO, (Q(0), Q(1))), _P_ONE, _canonical=True)


def scalar(x) -> Scalar:
    """Coerce an int or Fraction (or Scalar) to a Scalar."""
    return Scalar.from_rational(x)


def i_power(k: int) -> Scalar:
    k %= 4
    return (ONE, I, -ONE, -I)[k]


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """Dispatch form of the four field operations."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError("unknown op %r" % op)

"""
Exact phases and a configurable-precision complex backend.

Phases are exact rationals ``r`` standing for the unit complex number
``exp(i*pi*r)``; they are reduced modulo 2 so that equality of phases is
equality of rationals. Everything that has to be evaluated numerically goes
through :class:`ComplexApprox`, a thin immutable wrapper around an
:mod:`mpmath` complex number living in a private context of fixed binary
precision.
"""
from collections import namedtuple
from fractions import Fraction
import logging
import numbers

from mpmath.ctx_mp import MPContext


__all__ = ['PhaseQ', 'ComplexApprox', 'DEFAULT_PRECISION', 'MIN_PRECISION',
           'phase_add', 'phase_neg', 'phase_scale', 'phase_eval',
           'real_power', 'tolerance', 'approx_equal', 'get_context',
           'as_fraction', 'exact', 'Verdict']


log = logging.getLogger(__name__)

DEFAULT_PRECISION = 256
MIN_PRECISION = 64

_contexts = {}


Verdict = namedtuple('Verdict', 'ok residual lhs rhs')
Verdict.__doc__ = """
Outcome of a numerical identity check: pass/fail, the absolute residual
and both sides.
"""



def get_context(prec=DEFAULT_PRECISION):
    """
    Returns the cached :class:`mpmath.ctx_mp.MPContext` working at `prec`
    bits. Contexts are never shared between precisions, so values computed
    at different precisions do not silently round each other.

    :param prec: Precision in bits, at least `MIN_PRECISION`.
    :type prec: int

    :returns: An mpmath context.
    """
    prec = int(prec)
    if prec < MIN_PRECISION:
        raise ValueError('precision must be at least {0} bits, got {1}'
                         .format(MIN_PRECISION, prec))
    try:
        return _contexts[prec]
    except KeyError:
        ctx = MPContext()
        ctx.prec = prec
        _contexts[prec] = ctx
        return ctx


def as_fraction(x):
    """
    Converts ints, Fractions and strings such as ``'3/4'`` to a Fraction.
    Floats are rejected since they are never exact inputs here.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError('booleans are not rationals')
    if isinstance(x, numbers.Integral):
        return Fraction(int(x))
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, numbers.Rational):
        return Fraction(x.numerator, x.denominator)
    raise TypeError('expected an exact rational, got {0!r}'.format(x))



class PhaseQ(object):
    """
    The unit complex number ``exp(i*pi*r)`` for an exact rational `r`.

    The canonical exponent lies in ``[0, 2)``; two phases are equal iff
    their canonical exponents are equal.

    **Examples**

    >>> PhaseQ('3/2') + PhaseQ('3/4')
    PhaseQ(1/4)
    >>> PhaseQ(5) == PhaseQ(1)
    True
    """
    __slots__ = ('_r',)

    def __init__(self, exponent=0):
        if isinstance(exponent, PhaseQ):
            exponent = exponent.exponent
        r = as_fraction(exponent)
        # Fraction keeps the denominator positive and coprime
        self._r = r - 2 * (r.numerator // (2 * r.denominator))

    @property
    def exponent(self):
        return self._r

    @property
    def numerator(self):
        return self._r.numerator

    @property
    def denominator(self):
        return self._r.denominator

    def __add__(self, other):
        if not isinstance(other, PhaseQ):
            other = PhaseQ(other)
        return PhaseQ(self._r + other._r)

    __radd__ = __add__

    def __neg__(self):
        return PhaseQ(-self._r)

    def __sub__(self, other):
        return self + (-other if isinstance(other, PhaseQ)
                       else PhaseQ(-as_fraction(other)))

    def __mul__(self, n):
        if isinstance(n, bool) or not isinstance(n, numbers.Integral):
            raise TypeError('phases may only be scaled by integers')
        return PhaseQ(self._r * int(n))

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, PhaseQ):
            return self._r == other._r
        try:
            return self._r == PhaseQ(other)._r
        except TypeError:
            return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash(('PhaseQ', self._r))

    def __repr__(self):
        return 'PhaseQ({0})'.format(self._r)

    def __str__(self):
        return str(self._r)

    def is_zero(self):
        return self._r == 0

    def eval(self, prec=DEFAULT_PRECISION):
        return phase_eval(self, prec)



class ComplexApprox(object):
    """
    A complex number carried at a fixed binary precision.

    Instances wrap an mpmath ``mpc`` of the context returned by
    :func:`get_context`. Arithmetic with another ComplexApprox works at the
    smaller of the two precisions; ints and Fractions are converted
    exactly before the operation.
    """
    __slots__ = ('value', 'prec')

    def __init__(self, value=0, prec=DEFAULT_PRECISION):
        ctx = get_context(prec)
        self.prec = int(prec)
        if isinstance(value, ComplexApprox):
            value = value.value
        elif isinstance(value, Fraction):
            value = ctx.mpf(value.numerator) / value.denominator
        self.value = ctx.mpc(value)

    @property
    def ctx(self):
        return get_context(self.prec)

    @property
    def real(self):
        return self.value.real

    @property
    def imag(self):
        return self.value.imag

    def _coerce(self, other):
        if isinstance(other, ComplexApprox):
            prec = min(self.prec, other.prec)
            return prec, other.value
        if isinstance(other, (Fraction, numbers.Rational)) \
                and not isinstance(other, bool):
            other = as_fraction(other)
            ctx = self.ctx
            return self.prec, ctx.mpf(other.numerator) / other.denominator
        return self.prec, self.ctx.convert(other)

    def _wrap(self, prec, fn):
        ctx = get_context(prec)
        return ComplexApprox(fn(ctx), prec)

    def __add__(self, other):
        prec, o = self._coerce(other)
        return self._wrap(prec, lambda ctx: ctx.mpc(self.value) + ctx.mpc(o))

    __radd__ = __add__

    def __sub__(self, other):
        prec, o = self._coerce(other)
        return self._wrap(prec, lambda ctx: ctx.mpc(self.value) - ctx.mpc(o))

    def __rsub__(self, other):
        prec, o = self._coerce(other)
        return self._wrap(prec, lambda ctx: ctx.mpc(o) - ctx.mpc(self.value))

    def __mul__(self, other):
        prec, o = self._coerce(other)
        return self._wrap(prec, lambda ctx: ctx.mpc(self.value) * ctx.mpc(o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        prec, o = self._coerce(other)
        return self._wrap(prec, lambda ctx: ctx.mpc(self.value) / ctx.mpc(o))

    __div__ = __truediv__

    def __pow__(self, n):
        if isinstance(n, bool) or not isinstance(n, numbers.Integral):
            raise TypeError('only integer powers are unambiguous')
        return self._wrap(self.prec, lambda ctx: ctx.mpc(self.value) ** int(n))

    def __neg__(self):
        return ComplexApprox(-self.value, self.prec)

    def __abs__(self):
        return abs(self.value)

    def conjugate(self):
        return ComplexApprox(self.ctx.conj(self.value), self.prec)

    def __complex__(self):
        return complex(self.value)

    def __repr__(self):
        return 'ComplexApprox({0}, prec={1})'.format(self.to_string(15),
                                                     self.prec)

    def digits(self):
        """
        Number of significant decimal digits used in reports: precision/4.
        """
        return max(1, self.prec // 4)

    def to_string(self, digits=None):
        """
        Renders ``a+bj`` with `digits` significant digits, precision/4 by
        default. Parts that are zero at the working tolerance print as 0.
        """
        if digits is None:
            digits = self.digits()
        ctx = self.ctx
        tol = tolerance(self.prec, self)
        re, im = self.value.real, self.value.imag
        re = ctx.mpf(0) if abs(re) < tol else re
        im = ctx.mpf(0) if abs(im) < tol else im
        s_re = ctx.nstr(re, digits)
        s_im = ctx.nstr(abs(im), digits)
        sign = '-' if im < 0 else '+'
        return '{0}{1}{2}j'.format(s_re, sign, s_im)

    def to_json(self):
        return [self.ctx.nstr(self.real, self.digits()),
                self.ctx.nstr(self.imag, self.digits())]



def exact(x, prec=DEFAULT_PRECISION):
    """
    Lifts an exact rational to a :class:`ComplexApprox`.
    """
    return ComplexApprox(as_fraction(x), prec)


def phase_add(a, b):
    """
    Product of two unit phases: the exponents add modulo 2.

    **Examples**

    >>> phase_add(PhaseQ('1/2'), PhaseQ('1/2'))
    PhaseQ(1)
    """
    return PhaseQ(a) + PhaseQ(b)


def phase_neg(a):
    return -PhaseQ(a)


def phase_scale(a, n):
    return PhaseQ(a) * n


def phase_eval(a, prec=DEFAULT_PRECISION):
    """
    Evaluates ``exp(i*pi*r)`` at `prec` bits.

    :param a: The phase, or anything :class:`PhaseQ` accepts.
    :type a: PhaseQ

    :param prec: Precision in bits, at least 64.
    :type prec: int

    :returns: ComplexApprox equal to ``cos(pi r) + i sin(pi r)``.
    """
    a = a if isinstance(a, PhaseQ) else PhaseQ(a)
    ctx = get_context(prec)
    r = ctx.mpf(a.numerator) / a.denominator
    return ComplexApprox(ctx.mpc(ctx.cospi(r), ctx.sinpi(r)), prec)


def real_power(base, exponent, prec=DEFAULT_PRECISION):
    """
    Positive real power ``base**exponent`` for a positive rational base and
    an exponent with denominator 1 or 2. Half-integer exponents use the
    positive square root.

    **Examples**

    >>> real_power(4, Fraction(1, 2)).to_string(5)
    '2.0+0.0j'
    """
    base = as_fraction(base)
    exponent = as_fraction(exponent)
    if base <= 0:
        raise ValueError('real_power needs a positive base, got {0}'
                         .format(base))
    if exponent.denominator not in (1, 2):
        raise ValueError('exponent must be an integer or a half-integer, got '
                         '{0}'.format(exponent))
    ctx = get_context(prec)
    if exponent.denominator == 1:
        v = base ** exponent.numerator
        return ComplexApprox(v, prec)
    root = ctx.sqrt(ctx.mpf(base.numerator) / base.denominator)
    return ComplexApprox(root ** exponent.numerator, prec)


def tolerance(prec=DEFAULT_PRECISION, *operands):
    """
    Comparison tolerance at `prec` bits: ``2**(-prec/2)`` times the largest
    magnitude among `operands`, but never less than ``2**(-prec/2)``.
    """
    ctx = get_context(prec)
    scale = ctx.mpf(1)
    for op in operands:
        if isinstance(op, ComplexApprox):
            op = op.value
        m = abs(ctx.convert(op))
        if m > scale:
            scale = m
    return ctx.ldexp(scale, -(int(prec) // 2))


def approx_equal(a, b, prec=None):
    """
    Compares two values within :func:`tolerance`.

    :returns: ``(ok, residual)`` with `residual` the absolute difference.
    """
    if prec is None:
        precs = [x.prec for x in (a, b) if isinstance(x, ComplexApprox)]
        prec = min(precs) if precs else DEFAULT_PRECISION
    a = a if isinstance(a, ComplexApprox) else ComplexApprox(a, prec)
    diff = a - b
    residual = abs(diff.value)
    return residual <= tolerance(prec, a, b), residual

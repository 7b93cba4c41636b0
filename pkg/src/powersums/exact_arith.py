"""Exact scalar arithmetic: unbounded integers, reduced rationals, binomials.

Python ints are already arbitrary precision, and ``fractions.Fraction``
already maintains every invariant the rest of the package relies on:
denominators are strictly positive, values are stored in lowest terms,
and zero is exactly 0/1.  ``Rational`` is therefore an alias rather than
a reimplementation; this module pins the conventions (and the textual
``p/q`` grammar, with ``/q`` omitted when q == 1) that the polynomial,
faulhaber, and cli layers build on.

All values are immutable and all operations are pure functions, so
everything here may be shared freely across threads.
"""

from __future__ import annotations

import math
import operator
from fractions import Fraction

Rational = Fraction

_RATIONAL_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def as_rational(value: int | str | Rational) -> Rational:
    """Coerce to an exact Rational, rejecting floats outright.

    Floats are refused even though ``Fraction`` would accept them: the
    conversion is exact for the binary value but silently wrong for the
    decimal the caller almost certainly meant (0.1 is not 1/10).
    """
    if isinstance(value, float):
        raise TypeError(f"refusing inexact float {value!r}; use Fraction or a string like '1/10'")
    return Fraction(value)


def rat_arith(a: Rational, b: Rational, op: str) -> Rational:
    """Apply one of add/sub/mul/div to two rationals, exactly.

    Division by zero raises ZeroDivisionError.  Results are always in
    lowest terms with a positive denominator (Fraction guarantees this).
    """
    try:
        func = _RATIONAL_OPS[op]
    except KeyError:
        raise ValueError(f"unknown rational op {op!r}; expected one of {sorted(_RATIONAL_OPS)}") from None
    return func(as_rational(a), as_rational(b))


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k) with the empty-selection convention.

    Returns 0 for k < 0 or k > n.  Requires n >= 0.  Delegates to
    ``math.comb``, which uses the multiplicative running-product scheme
    with exact intermediate division (never full factorials).
    """
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)

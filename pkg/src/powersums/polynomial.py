"""Dense univariate polynomials over exact rationals, tagged by variable.

Coefficients are stored ascending by degree (index i holds the
coefficient of var**i) and normalized so the highest stored coefficient
is nonzero; the zero polynomial is the empty tuple.  Every polynomial
carries a variable tag, ``"n"`` or ``"T"``: the first is the summation
limit of a power sum, the second the triangular number T = n(n+1)/2.
Mixing tags in arithmetic is a domain error, never a silent coercion --
the two bases mean different things and confusing them must not pass
quietly.  Substituting T = (n^2+n)/2 (``t_to_n``) is the one sanctioned
bridge between them.

Polynomials are frozen dataclasses: equality is structural (same tag,
same coefficient tuple), instances are hashable, and sharing across
threads is safe.

Display order is highest degree first, e.g. ``1/4*n^4 + 1/2*n^3 +
1/4*n^2``; this exact grammar is what the CLI prints and what golden
tests pin down.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .exact_arith import Rational, as_rational

VARIABLES = ("n", "T")


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple[Rational, ...]
    var: str

    def __post_init__(self) -> None:
        if self.var not in VARIABLES:
            raise ValueError(f"unknown variable tag {self.var!r}; expected one of {VARIABLES}")
        coeffs = [as_rational(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> Rational:
        """Coefficient of var**k (zero beyond the stored degree)."""
        if k < 0:
            raise ValueError(f"coefficient index must be >= 0, got {k}")
        return self.coeffs[k] if k < len(self.coeffs) else Rational(0)

    def _require_same_var(self, other: "Polynomial") -> None:
        if self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var!r} vs {other.var!r}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._require_same_var(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        summed = list(a)
        for i, c in enumerate(b):
            summed[i] += c
        return Polynomial(tuple(summed), self.var)

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs), self.var)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            self._require_same_var(other)
            if not self.coeffs or not other.coeffs:
                return Polynomial((), self.var)
            prod = [Rational(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
            return Polynomial(tuple(prod), self.var)
        if isinstance(other, (int, Rational)):
            return poly_scale(other, self)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError(f"polynomial exponent must be >= 0, got {exponent}")
        result = Polynomial((1,), self.var)
        for _ in range(exponent):
            result = result * self
        return result

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for deg in range(self.degree, -1, -1):
            c = self.coeffs[deg]
            if c == 0:
                continue
            magnitude = abs(c)
            if deg == 0:
                body = str(magnitude)
            else:
                head = "" if magnitude == 1 else f"{magnitude}*"
                power = self.var if deg == 1 else f"{self.var}^{deg}"
                body = head + power
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)


def monomial(coeff: int | Rational, degree: int, var: str) -> Polynomial:
    """The polynomial coeff * var**degree."""
    if degree < 0:
        raise ValueError(f"monomial degree must be >= 0, got {degree}")
    return Polynomial((0,) * degree + (coeff,), var)


def constant(value: int | Rational, var: str) -> Polynomial:
    return Polynomial((value,), var)


_POLY_OPS = {
    "add": Polynomial.__add__,
    "sub": Polynomial.__sub__,
    "mul": Polynomial.__mul__,
}


def poly_arith(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    """Apply one of add/sub/mul to two polynomials with matching tags."""
    try:
        func = _POLY_OPS[op]
    except KeyError:
        raise ValueError(f"unknown polynomial op {op!r}; expected one of {sorted(_POLY_OPS)}") from None
    if not isinstance(a, Polynomial) or not isinstance(b, Polynomial):
        raise TypeError("poly_arith operates on two Polynomial values")
    return func(a, b)


def poly_scale(c: int | Rational, p: Polynomial) -> Polynomial:
    """Multiply every coefficient by the rational c."""
    c = as_rational(c)
    return Polynomial(tuple(c * a for a in p.coeffs), p.var)


def poly_eval(p: Polynomial, x: int | Rational) -> Rational:
    """Exact value of p at x, by Horner's scheme."""
    x = as_rational(x)
    acc = Rational(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_compose(p: Polynomial, q: Polynomial) -> Polynomial:
    """Expand p(q(.)); the result carries q's variable tag.

    Horner accumulation: deg(p) polynomial multiplications, which is
    plenty fast at the degrees this package ever sees.
    """
    result = Polynomial((), q.var)
    for c in reversed(p.coeffs):
        result = result * q + constant(c, q.var)
    return result


# T as a polynomial in n: the triangular number n(n+1)/2.
T_AS_N_POLY = Polynomial((0, Rational(1, 2), Rational(1, 2)), "n")


def t_to_n(p: Polynomial) -> Polynomial:
    """Substitute T = (n^2+n)/2 into a T-basis polynomial."""
    if p.var != "T":
        raise ValueError(f"t_to_n needs a T-basis polynomial, got variable {p.var!r}")
    return poly_compose(p, T_AS_N_POLY)

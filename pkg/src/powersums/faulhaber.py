"""Power-sum polynomials, Bernoulli numbers, and triangular-basis forms.

Everything here revolves around three classical facts about the power
sums S_m(n) = 1^m + 2^m + ... + n^m and the triangular numbers
T = n(n+1)/2:

* Bernoulli numbers.  B_0 = 1 and sum_{k=0}^{n} C(n+1, k) * B_k = 0 for
  n >= 1, which pins B_1 = -1/2 and yields S_m(n) as the degree-(m+1)
  polynomial whose coefficient of n^(m+1-j) is
  (-1)^j * C(m+1, j) * B_j / (m+1).

* The telescoping ladder.  Summing the telescoped differences
  (T_k)^m - (T_{k-1})^m = (k/2)^m * ((k+1)^m - (k-1)^m) and expanding by
  the binomial theorem gives, for every m >= 2,

      2^(m-1) * T^m  =  sum over j of C(m, j) * S_{m+j}(n)

  where j runs over {0, 2, ..., m-1} for odd m and {1, 3, ..., m-1} for
  even m (whichever parity makes the chain end at C(m, m-1)).  All
  exponents m+j on the right are odd.

* Faulhaber forms.  Solving the ladder for its top term shows every odd
  power sum is a polynomial in T divisible by T^2:
  S_{2m+1}(n) = P(T) * T^2 with deg P = m-1; ``power_sum_tform`` builds
  P by eliminating the lower odd sums through the ladder.

Comparing the two representations coefficient by coefficient is a
mechanical proof that the odd Bernoulli numbers B_3, B_5, ... vanish:
expanding P(T) * T^2 in n produces no linear term, yet the Bernoulli
form says the linear coefficient is -B_{2m+1}.  ``infer_odd_bernoulli``
performs exactly that extraction.

All operations are deterministic and observationally pure.  The shared
Bernoulli table and the memoized T-forms only ever grow, under a lock,
so concurrent callers always observe consistent values.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import cache

from .exact_arith import Rational, binomial
from .polynomial import T_AS_N_POLY, Polynomial, monomial, poly_scale, t_to_n


class BernoulliTable:
    """Memoized B_0, B_1, ... under the B_1 = -1/2 convention.

    Values are computed lazily from the defining recurrence
    B_n = -(sum_{k=0}^{n-1} C(n+1, k) * B_k) / (n+1) and retained for
    the lifetime of the table.  Extension happens under a lock, so a
    table may be shared by concurrent readers.
    """

    def __init__(self) -> None:
        self._values: list[Rational] = [Rational(1)]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._values)

    @property
    def values(self) -> tuple[Rational, ...]:
        """Snapshot of every value computed so far."""
        return tuple(self._values)

    def get(self, k: int) -> Rational:
        if k < 0:
            raise ValueError(f"Bernoulli index must be >= 0, got {k}")
        if k >= len(self._values):
            with self._lock:
                while len(self._values) <= k:
                    n = len(self._values)
                    acc = sum(binomial(n + 1, j) * self._values[j] for j in range(n))
                    self._values.append(-acc / (n + 1))
        return self._values[k]


_SHARED_TABLE = BernoulliTable()


def bernoulli(k: int, table: BernoulliTable | None = None) -> Rational:
    """B_k, from the given table or the process-wide shared one."""
    return (_SHARED_TABLE if table is None else table).get(k)


def power_sum_direct(m: int, n: int) -> int:
    """Literal summation 1^m + 2^m + ... + n^m, the independent oracle."""
    if m < 0 or n < 0:
        raise ValueError(f"power_sum_direct requires m >= 0 and n >= 0, got m={m}, n={n}")
    return sum(k**m for k in range(1, n + 1))


@cache
def power_sum_poly_n(m: int) -> Polynomial:
    """S_m as an exact polynomial in n, via the Bernoulli-number formula."""
    if m < 1:
        raise ValueError(f"power_sum_poly_n requires m >= 1, got {m}")
    order = m + 1
    coeffs = [Rational(0)] * (order + 1)
    for j in range(m + 1):
        sign = -1 if j % 2 else 1
        coeffs[order - j] = Rational(sign * binomial(order, j), order) * bernoulli(j)
    return Polynomial(tuple(coeffs), "n")


@dataclass(frozen=True)
class FaulhaberForm:
    """The factored odd power sum S_{2m+1}(n) = p(T) * T^2.

    Construction enforces the structural shape: deg p = m - 1, leading
    coefficient 2^m / (m+1), and for m >= 2 the two lowest coefficients
    lock together as c1 = -4*c0 (the tail of p is proportional to
    (4T - 1)/3).  Violations are invariant failures, not domain errors.
    """

    m: int
    p: Polynomial

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"FaulhaberForm index must be >= 1, got {self.m}")
        if self.p.var != "T":
            raise ValueError(f"FaulhaberForm polynomial must be T-basis, got {self.p.var!r}")
        if self.p.degree != self.m - 1:
            raise AssertionError(f"deg p = {self.p.degree}, expected {self.m - 1} for m={self.m}")
        if self.p.coeffs[-1] != Rational(2**self.m, self.m + 1):
            raise AssertionError(f"leading coefficient {self.p.coeffs[-1]} != 2^{self.m}/{self.m + 1}")
        if self.m >= 2 and self.p.coeffs[1] != -4 * self.p.coeffs[0]:
            raise AssertionError(f"tail relation c1 = -4*c0 broken for m={self.m}")


@dataclass(frozen=True)
class VerificationReport:
    """Both sides of a symbolic identity check, as canonical polynomials."""

    label: str
    lhs: Polynomial
    rhs: Polynomial

    @property
    def holds(self) -> bool:
        """True exactly when both sides match tag-for-tag and coefficient-for-coefficient."""
        return self.lhs == self.rhs


def _ladder_indices(m: int) -> range:
    """Index set of the ladder right side: {0,2,..,m-1} for odd m, {1,3,..,m-1} for even."""
    return range(0 if m % 2 else 1, m, 2)


def verify_pascal_identity(m: int) -> VerificationReport:
    """Check 2^(m-1) * T^m = sum_j C(m, j) * S_{m+j}(n) symbolically in n."""
    if m < 2:
        raise ValueError(f"verify_pascal_identity requires m >= 2, got {m}")
    lhs = 2 ** (m - 1) * T_AS_N_POLY**m
    rhs = Polynomial((), "n")
    for j in _ladder_indices(m):
        rhs = rhs + binomial(m, j) * power_sum_poly_n(m + j)
    return VerificationReport(f"pascal m={m}", lhs, rhs)


def telescoping_check(m: int, n: int) -> VerificationReport:
    """Confirm (T_n)^m equals its telescoped sum by exact integer evaluation.

    Both sides are integers here, reported as constant polynomials so the
    report shape stays uniform with the symbolic checks.
    """
    if m < 1 or n < 1:
        raise ValueError(f"telescoping_check requires m >= 1 and N >= 1, got m={m}, N={n}")
    lhs_value = (n * (n + 1) // 2) ** m
    rhs_value = sum((k * (k + 1) // 2) ** m - ((k - 1) * k // 2) ** m for k in range(1, n + 1))
    return VerificationReport(
        f"telescoping m={m} N={n}",
        Polynomial((lhs_value,), "n"),
        Polynomial((rhs_value,), "n"),
    )


def _times_t_squared(p: Polynomial) -> Polynomial:
    """p * T^2 by coefficient shift (cheaper and clearer than a general multiply)."""
    return Polynomial((Rational(0), Rational(0)) + p.coeffs, "T")


@cache
def power_sum_tform(m: int) -> FaulhaberForm:
    """Build P with S_{2m+1}(n) = P(T) * T^2, by ladder elimination.

    For m >= 2 take the ladder instance whose top term is S_{2m+1}
    (order M = m+1), substitute the already-known T-forms of the lower
    odd sums, divide by the top coefficient C(M, M-1) = M, and shift out
    the T^2 factor that must remain.  The divisibility is asserted, not
    assumed: a nonzero low coefficient would be an invariant violation.
    """
    if m < 1:
        raise ValueError(f"power_sum_tform requires m >= 1, got {m}")
    if m == 1:
        # S_3 = T^2 exactly, the classical square of the triangular number.
        return FaulhaberForm(1, Polynomial((1,), "T"))
    order = m + 1
    remainder = monomial(2 ** (order - 1), order, "T")
    for j in _ladder_indices(order)[:-1]:
        lower = power_sum_tform((m + j) // 2)
        remainder = remainder - binomial(order, j) * _times_t_squared(lower.p)
    remainder = poly_scale(Rational(1, order), remainder)
    if remainder.degree < 2 or remainder.coeffs[0] != 0 or remainder.coeffs[1] != 0:
        raise AssertionError(f"ladder remainder for m={m} is not divisible by T^2: {remainder}")
    return FaulhaberForm(m, Polynomial(remainder.coeffs[2:], "T"))


def faulhaber_coefficients(m: int) -> list[Rational]:
    """Coefficients of power_sum_tform(m).p in descending degree order."""
    return list(reversed(power_sum_tform(m).p.coeffs))


def verify_faulhaber(m: int) -> VerificationReport:
    """Cross-check the T-route against the Bernoulli route for S_{2m+1}."""
    form = power_sum_tform(m)
    lhs = t_to_n(_times_t_squared(form.p))
    rhs = power_sum_poly_n(2 * m + 1)
    return VerificationReport(f"faulhaber m={m}", lhs, rhs)


def infer_odd_bernoulli(m: int) -> Rational:
    """Read B_{2m+1} off the expanded T-form; always exactly zero.

    The Bernoulli form of S_{2m+1} carries the linear coefficient
    -C(2m+2, 2m+1) * B_{2m+1} / (2m+2) = -B_{2m+1}, while the expansion
    of P(T) * T^2 in n has no linear term at all.  Negating the linear
    coefficient found on the T-route therefore *is* B_{2m+1}.
    """
    form = power_sum_tform(m)
    expanded = t_to_n(_times_t_squared(form.p))
    return -expanded.coefficient(1)

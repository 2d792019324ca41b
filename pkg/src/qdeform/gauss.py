"""Exact integer-coefficient polynomials in the deformation variable q.

Everything downstream (vanishing predicates, ladder matrices, spectra) rests
on this layer being exact: coefficients are Python ints, equality is
structural, and the partition generating function is obtained by exact
polynomial division instead of evaluating a ratio at a numeric q.  In the
polynomial form q = 1 is an ordinary point, so the classical binomial limit
is just "sum the coefficients".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


class NotDivisibleError(ArithmeticError):
    """Exact polynomial division left a nonzero remainder.

    Raised only on a bug or invalid input; never a rounding artifact, since
    all arithmetic here is over the integers.
    """


@dataclass(frozen=True)
class QPoly:
    """Polynomial in q with integer coefficients; ``coeffs[k]`` multiplies q**k.

    Canonical form carries no trailing zero coefficients, so two polynomials
    are equal iff their coefficient tuples are equal.  The zero polynomial is
    the empty tuple.

    >>> QPoly([1, 2, 1]) * QPoly([1])
    QPoly('1 + 2q + q^2')
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def zero(cls) -> QPoly:
        return cls()

    @classmethod
    def one(cls) -> QPoly:
        return cls((1,))

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> QPoly:
        """coeff * q**power."""
        if power < 0:
            raise ValueError(f"monomial power must be nonnegative, got {power}")
        return cls((0,) * power + (coeff,))

    @property
    def degree(self) -> int:
        """Degree of the leading term; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coefficient(self, power: int) -> int:
        """Coefficient of q**power (0 beyond the stored degree)."""
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return 0

    def __add__(self, other: QPoly) -> QPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        summed = list(a)
        for i, c in enumerate(b):
            summed[i] += c
        return QPoly(summed)

    def __neg__(self) -> QPoly:
        return QPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: QPoly) -> QPoly:
        return self + (-other)

    def __mul__(self, other: QPoly | int) -> QPoly:
        if isinstance(other, int):
            return QPoly(tuple(other * c for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return QPoly()
        prod = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                prod[i + j] += a * b
        return QPoly(prod)

    __rmul__ = __mul__

    def divide_exact(self, den: QPoly) -> QPoly:
        """Quotient of an exact division: ``self == quotient * den`` over the ints.

        Raises NotDivisibleError if den does not divide self exactly.
        """
        if den.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dc = den.coeffs
        shift = len(dc) - 1
        lead = dc[-1]
        quot = [0] * max(len(rem) - shift, 0)
        for k in range(len(rem) - 1, shift - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            step, leftover = divmod(c, lead)
            if leftover:
                raise NotDivisibleError(
                    f"leading coefficient {lead} does not divide {c} at degree {k}"
                )
            quot[k - shift] = step
            for i, d in enumerate(dc):
                rem[k - shift + i] -= step * d
        if any(rem):
            raise NotDivisibleError("nonzero remainder after division")
        return QPoly(quot)

    def __call__(self, x):
        """Evaluate at a numeric point (int stays exact, float/complex allowed)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            power = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            mag = str(abs(c)) if (abs(c) != 1 or not power) else ""
            term = mag + power
            if not parts:
                parts.append(term if c > 0 else "-" + term)
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"QPoly('{self}')"


def _one_minus_q_pow(k: int) -> QPoly:
    # (1 - q^k), k >= 1
    coeffs = [0] * (k + 1)
    coeffs[0] = 1
    coeffs[k] = -1
    return QPoly(coeffs)


def gauss_generating(n: int, m: int) -> QPoly:
    """Generating polynomial of partitions into at most m parts, each <= n.

    The coefficient of q**N counts such partitions of N.  Computed as the
    exact quotient of prod_{k=1..n}(1 - q^{m+k}) by prod_{k=1..n}(1 - q^k);
    the division always comes out exact, with degree n*m.  The edge cases
    n = 0 and m = 0 give the constant polynomial 1 (only the empty partition).
    """
    if n < 0 or m < 0:
        raise ValueError(f"arguments must be nonnegative, got ({n}, {m})")
    numerator = QPoly.one()
    denominator = QPoly.one()
    for k in range(1, n + 1):
        numerator *= _one_minus_q_pow(m + k)
        denominator *= _one_minus_q_pow(k)
    return numerator.divide_exact(denominator)


def gauss_binomial(n: int, m: int) -> QPoly:
    """q-analogue of the binomial coefficient, a polynomial of degree m*(n-m).

    Zero for m outside 0..n.  Summing the coefficients (evaluating at q = 1)
    recovers the ordinary binomial coefficient.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if m < 0 or m > n:
        return QPoly.zero()
    return gauss_generating(n - m, m)


def q_number(n: int) -> QPoly:
    """The q-extension of the integer n: 1 + q + ... + q**(n-1); zero for n = 0."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return QPoly((1,) * n)


def partition_count(target: int, max_parts: int, max_part_size: int) -> int:
    """Count partitions of ``target`` into at most ``max_parts`` parts, each
    at most ``max_part_size``, by exhaustive enumeration.

    Parts are generated in non-increasing order so each partition is counted
    once.  Deliberately the dumbest correct implementation -- this is the
    independent oracle for the generating-polynomial coefficients -- so keep
    targets small (<= ~60).
    """
    if target < 0 or max_parts < 0 or max_part_size < 0:
        raise ValueError("all arguments must be nonnegative")

    def count(remaining: int, parts_left: int, cap: int) -> int:
        if remaining == 0:
            return 1
        if parts_left == 0 or cap == 0:
            return 0
        total = 0
        for part in range(min(cap, remaining), 0, -1):
            total += count(remaining - part, parts_left - 1, part)
        return total

    return count(target, max_parts, max_part_size)

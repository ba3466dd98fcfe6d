"""Exact arithmetic in the cyclotomic field Q(zeta_d).

Elements are polynomials in zeta_d with rational coefficients, reduced
modulo the d-th cyclotomic polynomial, so zeta^a == zeta^b exactly when
a = b mod d and every arithmetic identity is checked with equality --
no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Tuple, Union

Rational = Union[int, Fraction]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(d: int) -> Tuple[int, ...]:
    """Integer coefficients (constant term first) of the d-th cyclotomic
    polynomial, computed by dividing x^d - 1 by the proper-divisor ones."""
    if d < 1:
        raise ValueError(f"order must be >= 1, got {d}")
    poly = [Fraction(-1)] + [Fraction(0)] * (d - 1) + [Fraction(1)]
    for e in range(1, d):
        if d % e == 0:
            poly = _div_exact(poly, [Fraction(c) for c in cyclotomic_polynomial(e)])
    assert all(c.denominator == 1 for c in poly)
    return tuple(int(c) for c in poly)


class CyclotomicNumber:
    """An element of Q(zeta_d), immutable and hashable."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[Rational]):
        if order < 1:
            raise ValueError(f"order must be >= 1, got {order}")
        phi = len(cyclotomic_polynomial(order)) - 1
        reduced = _reduce([Fraction(c) for c in coeffs], order)
        reduced += [Fraction(0)] * (phi - len(reduced))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(reduced))

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("CyclotomicNumber is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "CyclotomicNumber":
        return cls(order, [])

    @classmethod
    def one(cls, order: int) -> "CyclotomicNumber":
        return cls(order, [1])

    @classmethod
    def from_rational(cls, order: int, value: Rational) -> "CyclotomicNumber":
        return cls(order, [Fraction(value)])

    @classmethod
    def root_of_unity(cls, order: int, power: int = 1) -> "CyclotomicNumber":
        """zeta_d^power, any integer power."""
        power %= order
        return cls(order, [0] * power + [1])

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "CyclotomicNumber":
        if isinstance(other, CyclotomicNumber):
            if other.order != self.order:
                raise ValueError(
                    f"mixed root orders {self.order} and {other.order}")
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.from_rational(self.order, other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CyclotomicNumber(
            self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.order, [-a for a in self.coeffs])

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
        n = len(self.coeffs)
        prod = [Fraction(0)] * (2 * n - 1 if n else 0)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b != 0:
                    prod[i + j] += a * b
        return CyclotomicNumber(self.order, prod)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        mod = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        inv = _invert_mod(list(self.coeffs), mod)
        return CyclotomicNumber(self.order, inv)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self.inverse() if exponent < 0 else self
        result = CyclotomicNumber.one(self.order)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    # -- comparison / display ------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicNumber.from_rational(self.order, other)
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"CyclotomicNumber(order={self.order}, {self})"

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*z" if c != 1 else "z")
            else:
                parts.append(f"{c}*z^{i}" if c != 1 else f"z^{i}")
        return " + ".join(parts) if parts else "0"


# -- polynomial helpers over Fraction ------------------------------------


def _trim(p: List[Fraction]) -> List[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _divmod_poly(num: List[Fraction], den: List[Fraction]):
    num = _trim(list(num))
    den = _trim(list(den))
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    rem = num
    while len(rem) >= len(den):
        factor = rem[-1] / den[-1]
        shift = len(rem) - len(den)
        quot[shift] = factor
        for i, c in enumerate(den):
            rem[shift + i] -= factor * c
        rem = _trim(rem)
    return quot, rem


def _div_exact(num: List[Fraction], den: List[Fraction]) -> List[Fraction]:
    quot, rem = _divmod_poly(num, den)
    if rem:
        raise ArithmeticError("division was not exact")
    return quot


def _reduce(coeffs: List[Fraction], order: int) -> List[Fraction]:
    mod = [Fraction(c) for c in cyclotomic_polynomial(order)]
    _, rem = _divmod_poly(coeffs, mod)
    return rem


def _invert_mod(p: List[Fraction], mod: List[Fraction]) -> List[Fraction]:
    """u with u*p == 1 modulo `mod`, via the extended Euclidean algorithm."""
    r0, r1 = _trim(list(mod)), _trim(list(p))
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while r1:
        q, r = _divmod_poly(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _trim([a - b for a, b in
                            _zip_longest_sub(s0, _mul_poly(q, s1))])
    # r0 is the gcd, a nonzero constant since `mod` is irreducible over Q
    if len(r0) != 1:
        raise ArithmeticError("element not invertible modulo the given polynomial")
    return [c / r0[0] for c in s0]


def _mul_poly(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _zip_longest_sub(a: List[Fraction], b: List[Fraction]):
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return zip(a, b)

"""Positive definite binary quadratic forms and their class group law.

A form (a, b, c) stands for a*x^2 + b*x*y + c*y^2. Reduced representatives
satisfy |b| <= a <= c with b >= 0 whenever |b| == a or a == c, so two forms
lie in the same class exactly when their reductions are equal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "DiscriminantError",
    "QuadForm",
    "compose",
    "discriminant",
    "inverse",
    "is_principal",
    "is_reduced",
    "power",
    "principal_form",
    "reduce",
]


class DiscriminantError(ValueError):
    pass


@dataclass(frozen=True)
class QuadForm:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a <= 0:
            raise ValueError(f"{self} is not positive definite")
        if self.b * self.b - 4 * self.a * self.c >= 0:
            raise DiscriminantError(f"{self} has non-negative discriminant")
        if math.gcd(self.a, self.b, self.c) != 1:
            raise ValueError(f"{self} is not primitive")

    def __iter__(self):
        yield self.a
        yield self.b
        yield self.c

    def __str__(self):
        return f"({self.a},{self.b},{self.c})"

    @property
    def disc(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    @classmethod
    def from_ab(cls, a: int, b: int, delta: int) -> "QuadForm":
        """The form (a, b, (b^2 - delta)/(4a))."""
        num = b * b - delta
        if num % (4 * a):
            raise DiscriminantError(f"b^2 != delta mod 4a for a={a}, b={b}, delta={delta}")
        return cls(a, b, num // (4 * a))


def discriminant(f: QuadForm) -> int:
    return f.b * f.b - 4 * f.a * f.c


def _check_delta(delta: int) -> None:
    if delta >= 0 or delta % 4 not in (0, 1):
        raise DiscriminantError(f"{delta} is not a negative discriminant")


def principal_form(delta: int) -> QuadForm:
    _check_delta(delta)
    if delta % 4 == 0:
        return QuadForm(1, 0, -delta // 4)
    return QuadForm(1, 1, (1 - delta) // 4)


def is_reduced(f: QuadForm) -> bool:
    a, b, c = f
    if not (-a < b <= a <= c):
        return False
    return not (a == c and b < 0)


def _reduce_abc(a: int, b: int, c: int) -> tuple[int, int, int]:
    while True:
        if not -a < b <= a:
            # translate b into (-a, a]
            k = (a - b) // (2 * a)
            c = a * k * k + b * k + c
            b = b + 2 * a * k
        if a > c:
            a, b, c = c, -b, a
            continue
        if a == c and b < 0:
            b = -b
        return a, b, c


def reduce(f: QuadForm) -> QuadForm:
    """The unique reduced form equivalent to f."""
    return QuadForm(*_reduce_abc(f.a, f.b, f.c))


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def compose(f: QuadForm, g: QuadForm) -> QuadForm:
    """Gauss composition of two forms of equal discriminant, reduced.

    United-forms construction via two extended gcds (Shanks).
    """
    delta = discriminant(f)
    if discriminant(g) != delta:
        raise DiscriminantError(f"cannot compose {f} and {g}: discriminants differ")
    if f.a > g.a:
        f, g = g, f
    a1, b1, _ = f
    a2, b2, c2 = g
    s = (b1 + b2) // 2
    n = b2 - s
    if a2 % a1 == 0:
        y1, d = 0, a1
    else:
        d, y1, _ = _xgcd(a2, a1)
    if s % d == 0:
        y2, x2, d1 = -1, 0, d
    else:
        d1, x2, y2 = _xgcd(s, d)
        y2 = -y2
    v1 = a1 // d1
    v2 = a2 // d1
    r = (y1 * y2 * n - x2 * c2) % v1
    b3 = b2 + 2 * v2 * r
    a3 = v1 * v2
    c3 = (b3 * b3 - delta) // (4 * a3)
    return QuadForm(*_reduce_abc(a3, b3, c3))


def inverse(f: QuadForm) -> QuadForm:
    return reduce(QuadForm(f.a, -f.b, f.c))


def power(f: QuadForm, e: int) -> QuadForm:
    """f composed with itself e times (square-and-multiply), reduced."""
    if e < 0:
        return power(inverse(f), -e)
    result = principal_form(discriminant(f))
    base = reduce(f)
    while e:
        if e & 1:
            result = compose(result, base)
        e >>= 1
        if e:
            base = compose(base, base)
    return result


def is_principal(f: QuadForm) -> bool:
    return reduce(f) == principal_form(discriminant(f))

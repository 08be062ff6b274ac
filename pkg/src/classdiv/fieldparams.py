"""The field Q(sqrt(a^2 - 4p^n)) attached to a triple (a, p, n)."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .arith import is_prime, squarefree_part

__all__ = ["FieldParams", "InvalidParams", "ParamErrorKind", "build"]


class ParamErrorKind(enum.Enum):
    A_NOT_POSITIVE = "a must be >= 1"
    A_EVEN = "a must be odd"
    N_INVALID = "n must be odd and >= 3"
    P_NOT_PRIME = "p must be prime"
    NOT_COPRIME = "gcd(a, p) must be 1"
    NOT_IMAGINARY = "a^2 must be < 4p^n"


class InvalidParams(ValueError):
    def __init__(self, kind: ParamErrorKind, detail: str = ""):
        self.kind = kind
        super().__init__(kind.value + (f" ({detail})" if detail else ""))


@dataclass(frozen=True)
class FieldParams:
    """A validated triple plus 4p^n - a^2 = c^2 d with d square-free.

    `delta` = -d is the field discriminant (d is always 3 mod 4 here).
    """

    a: int
    p: int
    n: int
    m_val: int
    c: int
    d: int

    @property
    def delta(self) -> int:
        return -self.d

    @property
    def signed_value(self) -> int:
        """a^2 - 4p^n, the signed column of the reference table."""
        return -self.m_val


def build(a: int, p: int, n: int) -> FieldParams:
    if a < 1:
        raise InvalidParams(ParamErrorKind.A_NOT_POSITIVE, f"a={a}")
    if a % 2 == 0:
        raise InvalidParams(ParamErrorKind.A_EVEN, f"a={a}")
    if n < 3 or n % 2 == 0:
        raise InvalidParams(ParamErrorKind.N_INVALID, f"n={n}")
    if not is_prime(p):
        raise InvalidParams(ParamErrorKind.P_NOT_PRIME, f"p={p}")
    if math.gcd(a, p) != 1:
        raise InvalidParams(ParamErrorKind.NOT_COPRIME, f"a={a}, p={p}")
    m_val = 4 * p**n - a * a
    if m_val <= 0:
        raise InvalidParams(ParamErrorKind.NOT_IMAGINARY, f"a={a}, p={p}, n={n}")
    sf = squarefree_part(m_val)
    params = FieldParams(a, p, n, m_val, sf.c, sf.d)
    # a odd forces c odd and d = 3 mod 4; p cannot divide d since gcd(a, p) = 1
    assert params.d * params.c**2 + a * a == 4 * p**n
    assert params.d % 4 == 3 and params.d % p != 0
    return params

"""Class numbers by counting reduced forms, prime forms, and element orders."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .arith import Factorization, divisors, factorize, kronecker, sqrt_mod, sqrt_mod_prime_power
from .quadform import (
    DiscriminantError,
    QuadForm,
    is_principal,
    compose,
    power,
    principal_form,
    reduce,
)

__all__ = [
    "ClassNumberResult",
    "Method",
    "NotAMultipleError",
    "NotSplitError",
    "OrderCapExceeded",
    "RamifiedError",
    "class_number",
    "class_order",
    "class_order_unbounded",
    "group_table",
    "prime_form",
    "reduced_forms",
]


class Method(enum.Enum):
    ENUM_BY_A = "EnumByA"
    ENUM_BY_B = "EnumByB"


class NotSplitError(ValueError):
    pass


class RamifiedError(NotSplitError):
    pass


class NotAMultipleError(ValueError):
    pass


class OrderCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class ClassNumberResult:
    delta: int
    h: int
    method: Method


def _check_delta(delta: int) -> None:
    if delta >= 0 or delta % 4 not in (0, 1):
        raise DiscriminantError(f"{delta} is not a negative discriminant")


def _smallest_prime_factors(n: int) -> list[int]:
    spf = list(range(n + 1))
    for i in range(2, math.isqrt(n) + 1):
        if spf[i] == i:
            for j in range(i * i, n + 1, i):
                if spf[j] == j:
                    spf[j] = i
    return spf


def _iter_reduced_by_a(delta: int):
    """Yield (a, b, c) for every reduced primitive form of discriminant delta.

    For each a up to sqrt(|delta|/3) the admissible b are the square roots of
    delta modulo 4a, found prime power by prime power and glued with CRT.
    """
    a_max = math.isqrt(-delta // 3)
    spf = _smallest_prime_factors(max(a_max, 1))
    root_cache: dict[tuple[int, int], list[int]] = {}
    for a in range(1, a_max + 1):
        # factor 4a from the sieve
        pe = {2: 2}
        m = a
        while m > 1:
            q = spf[m]
            m //= q
            pe[q] = pe.get(q, 0) + 1
        x, mod = [0], 1
        for q, e in pe.items():
            key = (q, e)
            roots = root_cache.get(key)
            if roots is None:
                roots = root_cache[key] = sqrt_mod_prime_power(delta, q, e)
            if not roots:
                break
            qe = q**e
            inv = pow(mod, -1, qe)
            x = [r0 + mod * ((r - r0) * inv % qe) for r0 in x for r in roots]
            mod *= qe
        else:
            two_a = 2 * a
            for r in x:
                # roots come in pairs r, r + 2a; keep one per pair as b in (-a, a]
                if r >= two_a:
                    continue
                b = r if r <= a else r - two_a
                c = (b * b - delta) // (4 * a)
                if c < a:
                    continue
                if b < 0 and (b == -a or a == c):
                    continue
                if math.gcd(a, b, c) != 1:
                    continue
                yield a, b, c


def _iter_reduced_by_b(delta: int):
    b_max = math.isqrt(-delta // 3)
    for b in range(delta % 2, b_max + 1, 2):
        n = (b * b - delta) // 4
        for a in divisors(factorize(n)):
            c = n // a
            if a < max(b, 1) or c < a:
                continue
            for sb in (b, -b) if 0 < b < a < c else (b,):
                if math.gcd(a, sb, c) == 1:
                    yield a, sb, c


def reduced_forms(delta: int, method: Method = Method.ENUM_BY_A) -> list[QuadForm]:
    """All reduced primitive forms of discriminant delta, sorted."""
    _check_delta(delta)
    it = _iter_reduced_by_a if method is Method.ENUM_BY_A else _iter_reduced_by_b
    return sorted((QuadForm(*abc) for abc in it(delta)), key=lambda f: (f.a, f.b))


def class_number(delta: int, method: Method = Method.ENUM_BY_A) -> ClassNumberResult:
    """Form class number h(delta), counted exactly.

    EnumByA is the production path; EnumByB factors (b^2 - delta)/4 for each
    b and is kept as a cross-check for small |delta|.
    """
    _check_delta(delta)
    it = _iter_reduced_by_a if method is Method.ENUM_BY_A else _iter_reduced_by_b
    return ClassNumberResult(delta, sum(1 for _ in it(delta)), method)


def prime_form(delta: int, p: int) -> QuadForm:
    """Reduced form (p, b, *) representing a prime ideal above the split prime p."""
    _check_delta(delta)
    k = kronecker(delta, p)
    if k == 0:
        raise RamifiedError(f"{p} ramifies in discriminant {delta}")
    if k == -1:
        raise NotSplitError(f"{p} does not split in discriminant {delta}")
    fac = Factorization(4 * p, ((2, 2), (p, 1)) if p != 2 else ((2, 3),))
    b = sqrt_mod(delta, 4 * p, fac)[0]
    return reduce(QuadForm.from_ab(p, b, delta))


def class_order(f: QuadForm, multiple: int) -> int:
    """Exact order of the class of f, given a known multiple of it."""
    if not is_principal(power(f, multiple)):
        raise NotAMultipleError(f"{f}^{multiple} is not principal")
    for m in divisors(factorize(multiple)):
        if is_principal(power(f, m)):
            return m
    raise AssertionError("unreachable: multiple itself is a divisor")


def class_order_unbounded(f: QuadForm, cap: int) -> int:
    """Order of the class of f by repeated composition, up to cap."""
    identity = principal_form(f.disc)
    g = reduce(f)
    cur = g
    for m in range(1, cap + 1):
        if cur == identity:
            return m
        cur = compose(cur, g)
    raise OrderCapExceeded(f"order of {f} exceeds {cap}")


def group_table(delta: int) -> tuple[list[QuadForm], list[list[int]]]:
    """Reduced forms of delta and their composition table (as indices)."""
    forms = reduced_forms(delta)
    index = {f: i for i, f in enumerate(forms)}
    table = [[index[compose(f, g)] for g in forms] for f in forms]
    return forms, table


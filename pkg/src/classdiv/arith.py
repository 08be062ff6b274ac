"""Exact integer primitives: primality, factorization, square-free parts,
Kronecker symbols and square roots modulo composite integers."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product

__all__ = [
    "Factorization",
    "FactorizationExhausted",
    "SquarefreeDecomposition",
    "crt",
    "divisors",
    "factorize",
    "is_prime",
    "is_square",
    "kronecker",
    "primes_upto",
    "sqrt_mod",
    "sqrt_mod_prime",
    "sqrt_mod_prime_power",
    "squarefree_part",
]

# Witnesses that make Miller-Rabin deterministic below 3.3e24 (Sorenson-Webster).
_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981
# Extra bases for larger inputs: 31 rounds total, composite acceptance < 4**-31
# per number for non-adversarial inputs.
_EXTRA_BASES = (43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)
_TRIAL_LIMIT = 1000
DEFAULT_RHO_CAP = 10**7


class FactorizationExhausted(RuntimeError):
    """Raised when Pollard rho exceeds its iteration cap on some cofactor."""


def is_prime(n: int) -> bool:
    """Miller-Rabin with a deterministic witness set below 3.3e24.

    Above that bound an extra battery of fixed bases is used (31 rounds); a
    composite passes all of them with probability below 4**-31.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = _DETERMINISTIC_BASES
    if n >= _DETERMINISTIC_LIMIT:
        bases = _DETERMINISTIC_BASES + _EXTRA_BASES
    for base in bases:
        x = pow(base, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_upto(n: int) -> list[int]:
    """Sieve of Eratosthenes."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, n + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


@dataclass(frozen=True)
class Factorization:
    value: int
    factors: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(sorted((int(p), int(e)) for p, e in self.factors)))
        prod = 1
        for p, e in self.factors:
            if e < 1:
                raise ValueError(f"non-positive exponent for {p}")
            prod *= p**e
        if prod != self.value:
            raise ValueError(f"factors multiply to {prod}, not {self.value}")

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def __iter__(self):
        return iter(self.factors)


def _pollard_brent(n: int, max_steps: int) -> int:
    """Return a non-trivial factor of the odd composite n (Brent's cycle finding)."""
    steps = 0
    for c in range(1, 200):
        y, r, q, g = 2, 1, 1, 1
        x = ys = 2
        m = 128
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            steps += r
            r *= 2
            if steps > max_steps:
                raise FactorizationExhausted(f"rho cap {max_steps} hit on {n}")
        if g == n:
            # batch overshoot: backtrack one step at a time
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise FactorizationExhausted(f"no rho polynomial split {n}")


def factorize(n: int, max_steps: int = DEFAULT_RHO_CAP) -> Factorization:
    """Complete prime factorization of n >= 1.

    Trial division by primes below 1000, then Pollard-Brent rho on what is
    left. `max_steps` caps the rho iterations spent on any one cofactor.
    """
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    counts: dict[int, int] = {}
    m = n
    for p in (2, 3, 5):
        while m % p == 0:
            counts[p] = counts.get(p, 0) + 1
            m //= p
    p, step = 7, 4
    while p < _TRIAL_LIMIT and p * p <= m:
        while m % p == 0:
            counts[p] = counts.get(p, 0) + 1
            m //= p
        p += step
        step = 6 - step
    stack = [m] if m > 1 else []
    while stack:
        x = stack.pop()
        if x < _TRIAL_LIMIT * _TRIAL_LIMIT or is_prime(x):
            # everything below 1000**2 that survived trial division is prime
            counts[x] = counts.get(x, 0) + 1
            continue
        r = math.isqrt(x)
        if r * r == x:
            stack.extend((r, r))
            continue
        g = _pollard_brent(x, max_steps)
        stack.extend((g, x // g))
    return Factorization(n, tuple(counts.items()))


def divisors(fac: Factorization) -> list[int]:
    out = [1]
    for p, e in fac.factors:
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


@dataclass(frozen=True)
class SquarefreeDecomposition:
    m: int
    c: int
    d: int

    def __post_init__(self):
        if self.c * self.c * self.d != self.m:
            raise ValueError(f"{self.m} != {self.c}^2 * {self.d}")


def squarefree_part(m: int, max_steps: int = DEFAULT_RHO_CAP) -> SquarefreeDecomposition:
    """Write m = c^2 d with d square-free and c maximal."""
    if m < 1:
        raise ValueError("squarefree_part needs m >= 1")
    c = d = 1
    for p, e in factorize(m, max_steps).factors:
        c *= p ** (e // 2)
        if e % 2:
            d *= p
    return SquarefreeDecomposition(m, c, d)


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a|n), defined for all integers a, n."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -1
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v:
        if a % 2 == 0:
            return 0
        if v % 2 and a % 8 in (3, 5):
            result = -result
    # Jacobi symbol (a|n), n odd positive
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def sqrt_mod_prime(a: int, p: int) -> list[int]:
    """Sorted square roots of a modulo the prime p (Tonelli-Shanks)."""
    a %= p
    if p == 2 or a == 0:
        return [a]
    if pow(a, (p - 1) // 2, p) != 1:
        return []
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
    else:
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while pow(z, (p - 1) // 2, p) != p - 1:
            z += 1
        m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c = i, b * b % p
            t, r = t * c % p, r * b % p
    return sorted({r, p - r})


def _sqrt_unit_prime_power(a: int, p: int, e: int) -> list[int]:
    # a is a unit modulo p**e
    pe = p**e
    if p == 2:
        if e == 1:
            return [1]
        if e == 2:
            return [1, 3] if a % 4 == 1 else []
        if a % 8 != 1:
            return []
        roots = [1, 3, 5, 7]
        for k in range(3, e):
            # (r + 2^k)^2 = r^2 mod 2^(k+1), so lifts are r or r + 2^k
            mod = 1 << (k + 1)
            roots = [x for r in roots for x in (r, r + (1 << k)) if (x * x - a) % mod == 0]
        return sorted(roots)
    base = sqrt_mod_prime(a, p)
    if not base:
        return []
    r, mod = base[0], p
    for _ in range(1, e):
        mod *= p
        r = (r - (r * r - a) * pow(2 * r, -1, mod)) % mod
    return sorted({r % pe, (-r) % pe})


def sqrt_mod_prime_power(a: int, p: int, e: int) -> list[int]:
    """All roots of x^2 = a (mod p^e), sorted, including when p divides a."""
    pe = p**e
    a %= pe
    if a == 0:
        return list(range(0, pe, p ** ((e + 1) // 2)))
    v = 0
    while a % p == 0:
        a //= p
        v += 1
    if v % 2:
        return []
    half = v // 2
    inner = _sqrt_unit_prime_power(a, p, e - v)
    if not inner:
        return []
    inner_mod = p ** (e - v)
    scale = p**half
    roots = {scale * (s + t * inner_mod) % pe for s in inner for t in range(p**half)}
    return sorted(roots)


def crt(residues: list[int], moduli: list[int]) -> int:
    """Combine congruences with pairwise coprime moduli."""
    x, m = 0, 1
    for r, n in zip(residues, moduli):
        x += m * ((r - x) * pow(m, -1, n) % n)
        m *= n
    return x % m


def sqrt_mod(a: int, modulus: int, modulus_factorization: Factorization | None = None) -> list[int]:
    """All residues r in [0, modulus) with r^2 = a (mod modulus), sorted."""
    if modulus < 1:
        raise ValueError("modulus must be positive")
    fac = modulus_factorization or factorize(modulus)
    if fac.value != modulus:
        raise ValueError("factorization does not match modulus")
    moduli, root_sets = [], []
    for p, e in fac.factors:
        roots = sqrt_mod_prime_power(a, p, e)
        if not roots:
            return []
        moduli.append(p**e)
        root_sets.append(roots)
    if not moduli:
        return [0]
    return sorted(crt(list(combo), moduli) for combo in product(*root_sets))

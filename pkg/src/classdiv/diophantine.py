"""Bounded solvers for D1 x^2 + D2 = lam^2 p^y and its exceptional families.

lam is carried as lam_sq in {1, 2, 4} so that lam = sqrt(2) stays integral.
Every search here is exhaustive up to an explicit bound; "absent" always
means "absent within the bounds searched".
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .arith import is_prime, is_square

__all__ = [
    "BSInstance",
    "DioSolution",
    "EXCEPTION_SET",
    "Prop21Result",
    "Prop21Status",
    "REMARK_QUADRUPLE",
    "Tag",
    "check_prop_2_1",
    "classify",
    "fibonacci",
    "in_E",
    "in_F",
    "in_G",
    "in_H",
    "ljunggren_oracle",
    "lucas",
    "lucas_square_indices",
    "solve_bs",
    "solve_special",
]

DEFAULT_Y_BOUND = 60
DEFAULT_K_BOUND = 100
DEFAULT_R_BOUND = 60
DEFAULT_S_BOUND = 10**6

# (lam_sq, D1, D2, p); the last entry is the quadruple missing from the
# originally published list, with solutions (1, 3) and (17, 9).
REMARK_QUADRUPLE = (4, 7, 25, 2)
EXCEPTION_SET = frozenset({
    (4, 13, 3, 2),
    (2, 7, 11, 3),
    (1, 2, 1, 3),
    (4, 7, 1, 2),
    (2, 1, 1, 5),
    (2, 1, 1, 13),
    (4, 1, 3, 7),
    REMARK_QUADRUPLE,
})

# (d, a, p) -> the full solution list allowed to have more than one element
PROP_2_1_EXCEPTIONS = {
    (7, 1, 2): ((1, 1), (3, 4)),
    (7, 5, 2): ((1, 3), (17, 9)),
}


class Tag(enum.Enum):
    IN_E = "InE"
    IN_F = "InF"
    IN_G = "InG"
    IN_H = "InH"
    REMARK22 = "Remark22"


@dataclass(frozen=True)
class BSInstance:
    d1: int
    d2: int
    lambda_sq: int
    p: int

    def __post_init__(self):
        if self.lambda_sq not in (1, 2, 4):
            raise ValueError("lambda_sq must be 1, 2 or 4")
        if self.d1 < 1 or self.d2 < 1:
            raise ValueError("D1 and D2 must be positive")
        if not is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")


@dataclass(frozen=True)
class DioSolution:
    instance: BSInstance
    solutions: tuple[tuple[int, int], ...]
    y_bound: int
    classification: frozenset[Tag] = field(default_factory=frozenset)


def fibonacci(k: int) -> int:
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def lucas(k: int) -> int:
    a, b = 2, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def in_E(lambda_sq: int, d1: int, d2: int, p: int) -> bool:
    return (lambda_sq, d1, d2, p) in EXCEPTION_SET


def in_F(d1: int, d2: int, p: int, k_bound: int = DEFAULT_K_BOUND) -> tuple[int, int] | None:
    """(k, eps) with (F_{k-2eps}, L_{k+eps}, F_k) == (d1, d2, p), k <= k_bound."""
    fib = [fibonacci(i) for i in range(k_bound + 3)]
    luc = [lucas(i) for i in range(k_bound + 2)]
    for k in range(2, k_bound + 1):
        if fib[k] > p:
            break
        if fib[k] != p:
            continue
        for eps in (1, -1):
            if fib[k - 2 * eps] == d1 and luc[k + eps] == d2:
                return k, eps
    return None


def _odd_prime_ok(p: int, lambda_sq: int) -> bool:
    # the oddness restriction on p is dropped for lam = 2
    return is_prime(p) and (p != 2 or lambda_sq == 4)


def _log_exact(value: int, p: int, r_bound: int) -> int | None:
    """r in [1, r_bound] with p^r == value."""
    r = 0
    while value > 1 and value % p == 0 and r < r_bound:
        value //= p
        r += 1
    return r if value == 1 and r >= 1 else None


def in_G(d1: int, d2: int, p: int, r_bound: int = DEFAULT_R_BOUND, lambda_sq: int = 4) -> int | None:
    """r with d1 = 1 and d2 = 4p^r - 1."""
    if d1 != 1 or not _odd_prime_ok(p, lambda_sq) or (d2 + 1) % 4:
        return None
    return _log_exact((d2 + 1) // 4, p, r_bound)


def in_H(d1: int, d2: int, p: int, lambda_sq: int,
         s_bound: int = DEFAULT_S_BOUND, r_bound: int = DEFAULT_R_BOUND) -> tuple[int, int] | None:
    """Smallest (r, s) with d1 s^2 + d2 = lam^2 p^r and 3 d1 s^2 - d2 = +-lam^2.

    The second equation pins s^2 = (d2 +- lam^2) / (3 d1), so at most two
    candidates need checking.
    """
    if math.gcd(d1, d2) != 1 or math.gcd(d1, p) != 1 or math.gcd(d2, p) != 1:
        return None
    if not _odd_prime_ok(p, lambda_sq):
        return None
    found = []
    for sign in (1, -1):
        num = d2 + sign * lambda_sq
        if num <= 0 or num % (3 * d1):
            continue
        s2 = num // (3 * d1)
        if not is_square(s2):
            continue
        s = math.isqrt(s2)
        if not 1 <= s <= s_bound:
            continue
        total = d1 * s2 + d2
        if total % lambda_sq:
            continue
        r = _log_exact(total // lambda_sq, p, r_bound)
        if r is not None:
            found.append((r, s))
    return min(found) if found else None


def classify(inst: BSInstance) -> frozenset[Tag]:
    tags = set()
    if in_E(inst.lambda_sq, inst.d1, inst.d2, inst.p):
        tags.add(Tag.IN_E)
    if (inst.lambda_sq, inst.d1, inst.d2, inst.p) == REMARK_QUADRUPLE:
        tags.add(Tag.REMARK22)
    if in_F(inst.d1, inst.d2, inst.p) is not None:
        tags.add(Tag.IN_F)
    if in_G(inst.d1, inst.d2, inst.p, lambda_sq=inst.lambda_sq) is not None:
        tags.add(Tag.IN_G)
    if in_H(inst.d1, inst.d2, inst.p, inst.lambda_sq) is not None:
        tags.add(Tag.IN_H)
    return frozenset(tags)


def _scan(d1: int, d2: int, lambda_sq: int, p: int, y_bound: int) -> list[tuple[int, int]]:
    sols = []
    rhs = lambda_sq
    for y in range(1, y_bound + 1):
        rhs *= p
        num = rhs - d2
        if num <= 0 or num % d1:
            continue
        q = num // d1
        x = math.isqrt(q)
        if x > 0 and x * x == q:
            sols.append((x, y))
    return sols


def solve_bs(instance: BSInstance, y_bound: int = DEFAULT_Y_BOUND) -> DioSolution:
    """All positive (x, y), y <= y_bound, with D1 x^2 + D2 = lam^2 p^y."""
    if y_bound < 1:
        raise ValueError("y_bound must be >= 1")
    i = instance
    sols = _scan(i.d1, i.d2, i.lambda_sq, i.p, y_bound)
    for x, y in sols:
        assert i.d1 * x * x + i.d2 == i.lambda_sq * i.p**y
    return DioSolution(instance, tuple(sols), y_bound, classify(instance))


def solve_special(d: int, a: int, p: int, y_bound: int = DEFAULT_Y_BOUND) -> DioSolution:
    """Solutions of d x^2 + a^2 = 4 p^y."""
    return solve_bs(BSInstance(d, a * a, 4, p), y_bound)


def ljunggren_oracle(z_max: int, y_max: int) -> list[tuple[int, int, int]]:
    """(x, z, y) with (z^y - 1)/(z - 1) = x^2, x > 1, 1 < z <= z_max, 2 < y <= y_max."""
    out = []
    for z in range(2, z_max + 1):
        rep = 1 + z
        for y in range(3, y_max + 1):
            rep = rep * z + 1
            x = math.isqrt(rep)
            if x > 1 and x * x == rep:
                out.append((x, z, y))
    return sorted(out)


def lucas_square_indices(k_max: int) -> list[int]:
    out = []
    a, b = 2, 1
    for k in range(k_max + 1):
        if is_square(a):
            out.append(k)
        a, b = b, a + b
    return out


class Prop21Status(enum.Enum):
    AT_MOST_ONE = "AtMostOne"
    KNOWN_EXCEPTION = "KnownException"
    VIOLATION = "Violation"


@dataclass(frozen=True)
class Prop21Result:
    status: Prop21Status
    solutions: tuple[tuple[int, int], ...]


def check_prop_2_1(d: int, a: int, p: int, y_bound: int = 40) -> Prop21Result:
    """Check that d x^2 + a^2 = 4 p^y has at most one positive solution.

    Two solutions are tolerated only for the listed (d, a, p) and only when
    they are exactly the listed ones; anything else is a Violation.
    """
    sols = tuple(_scan(d, a * a, 4, p, y_bound))
    if len(sols) <= 1:
        return Prop21Result(Prop21Status.AT_MOST_ONE, sols)
    if PROP_2_1_EXCEPTIONS.get((d, a, p)) == sols:
        return Prop21Result(Prop21Status.KNOWN_EXCEPTION, sols)
    return Prop21Result(Prop21Status.VIOLATION, sols)

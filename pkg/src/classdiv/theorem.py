"""Hypothesis checks and verdicts for the Z/nZ subgroup statement.

Given (a, p, n) the class of a prime ideal above p has order dividing n,
because its n-th power is generated by (a + c sqrt(-d))/2. The verdict
computes that order exactly and records whether the two sufficient
conditions predicted it to be n.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .arith import divisors, factorize, is_prime, primes_upto
from .classgroup import NotSplitError, class_number, class_order, prime_form
from .fieldparams import FieldParams, InvalidParams, ParamErrorKind, build

__all__ = [
    "EXCEPTIONAL_TRIPLES",
    "ConditionReport",
    "HypothesisError",
    "SignMode",
    "Verdict",
    "check_condition_i",
    "check_condition_ii",
    "cohn_preset",
    "gross_rohrlich_preset",
    "search_primes",
    "verify_theorem1",
    "verify_theorem_4_1",
    "verify_theorem_4_2",
]

EXCEPTIONAL_TRIPLES = frozenset({(5, 2, 3), (5, 2, 9), (11, 2, 5), (13, 2, 7)})


class SignMode(enum.Enum):
    PLUS_ONLY = "PlusOnly"
    BOTH_SIGNS = "BothSigns"


class HypothesisError(ValueError):
    """Inputs do not meet the hypotheses of a specialised statement."""


@dataclass(frozen=True)
class ConditionReport:
    holds: bool
    witnesses: tuple[tuple[int, int, str], ...]
    sign_mode: SignMode
    # condition (i) also demands d != 3; that failure has no (b, ell) witness
    d_excluded: bool = False


def _proper_divisors(a: int) -> list[int]:
    return [b for b in divisors(factorize(a)) if b != a]


def _prime_divisors(n: int) -> list[int]:
    return factorize(n).primes


def check_condition_i(a: int, n: int, d: int) -> ConditionReport:
    """a != +-b (mod ell) for all proper divisors b of a and primes ell | n; d != 3."""
    witnesses = []
    for b in _proper_divisors(a):
        for ell in _prime_divisors(n):
            if (a - b) % ell == 0:
                witnesses.append((b, ell, "+"))
            if (a + b) % ell == 0:
                witnesses.append((b, ell, "-"))
    excluded = d == 3
    return ConditionReport(not witnesses and not excluded, tuple(witnesses), SignMode.BOTH_SIGNS, excluded)


def check_condition_ii(a: int, n: int, d: int, sign_mode: SignMode = SignMode.BOTH_SIGNS) -> ConditionReport:
    """2^(ell-1) a != b^ell (mod d), and != -b^ell as well in BothSigns mode."""
    witnesses = []
    for b in _proper_divisors(a):
        for ell in _prime_divisors(n):
            lhs = pow(2, ell - 1) * a
            bl = pow(b, ell)
            if (lhs - bl) % d == 0:
                witnesses.append((b, ell, "+"))
            if sign_mode is SignMode.BOTH_SIGNS and (lhs + bl) % d == 0:
                witnesses.append((b, ell, "-"))
    return ConditionReport(not witnesses, tuple(witnesses), sign_mode)


@dataclass(frozen=True)
class Verdict:
    params: FieldParams
    exceptional: bool
    cond_i: ConditionReport
    cond_ii: ConditionReport
    order_of_class: int
    class_number: int | None = None
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def subgroup_verified(self) -> bool:
        return self.order_of_class == self.params.n

    @property
    def n_divides_h(self) -> bool | None:
        if self.class_number is None:
            return None
        return self.class_number % self.params.n == 0

    @property
    def conditions_hold(self) -> bool:
        return self.cond_i.holds or self.cond_ii.holds

    @property
    def violates_theorem(self) -> bool:
        """Hypotheses met, not exceptional, yet no class of order n was found."""
        return self.conditions_hold and not self.exceptional and not self.subgroup_verified

    def to_dict(self) -> dict:
        p = self.params
        return {
            "a": p.a,
            "p": p.p,
            "n": p.n,
            "a2_minus_4pn": p.signed_value,
            "c": p.c,
            "d": p.d,
            "exceptional": self.exceptional,
            "cond_i": self.cond_i.holds,
            "cond_i_witnesses": [list(w) for w in self.cond_i.witnesses],
            "cond_ii": self.cond_ii.holds,
            "cond_ii_witnesses": [list(w) for w in self.cond_ii.witnesses],
            "order": self.order_of_class,
            "h": self.class_number,
            "subgroup_verified": self.subgroup_verified,
            "n_divides_h": self.n_divides_h,
            "checks": dict(self.checks),
        }


def verify_theorem1(a: int, p: int, n: int, compute_h: bool = False,
                    sign_mode: SignMode = SignMode.BOTH_SIGNS) -> Verdict:
    """Compute the exact order of the prime class above p in Q(sqrt(a^2 - 4p^n)).

    The conditions are reported alongside but never gate the computation.
    """
    params = build(a, p, n)
    try:
        f = prime_form(params.delta, p)
    except NotSplitError as exc:  # excluded by build's invariants
        raise AssertionError(f"p={p} failed to split for {params}") from exc
    order = class_order(f, n)
    h = class_number(params.delta).h if compute_h else None
    return Verdict(
        params=params,
        exceptional=(a, p, n) in EXCEPTIONAL_TRIPLES,
        cond_i=check_condition_i(a, n, params.d),
        cond_ii=check_condition_ii(a, n, params.d, sign_mode),
        order_of_class=order,
        class_number=h,
    )


def verify_theorem_4_1(q: int, p: int, m: int) -> Verdict:
    """a = q, n = q^m: q^m should divide h(q^2 - 4p^(q^m))."""
    if not is_prime(q) or q < 3:
        raise HypothesisError(f"q={q} must be a prime >= 3")
    if m < 1:
        raise HypothesisError(f"m={m} must be >= 1")
    v = verify_theorem1(q, p, q**m, compute_h=True)
    v.checks["q^m | h"] = v.class_number % q**m == 0
    return v


def verify_theorem_4_2(m: int, t: int, p: int, q: int) -> Verdict:
    """a = q, n = m^t with q mod m in [2, m-2] and m | d: m^t should divide h(-d)."""
    if m < 3 or not is_prime(m):
        raise HypothesisError(f"m={m} must be an odd prime")
    if t < 1:
        raise HypothesisError(f"t={t} must be >= 1")
    if not is_prime(q):
        raise HypothesisError(f"q={q} must be prime")
    if not 2 <= q % m <= m - 2:
        raise HypothesisError(f"q not in admissible residue class: {q} mod {m} = {q % m}")
    params = build(q, p, m**t)
    if params.d % m:
        raise HypothesisError(f"m does not divide d: m={m}, d={params.d}")
    v = verify_theorem1(q, p, m**t, compute_h=True)
    v.checks["q mod m in [2, m-2]"] = True
    v.checks["m | d"] = True
    v.checks["m^t | h"] = v.class_number % m**t == 0
    return v


def search_primes(a: int, n: int, p_max: int, compute_h: bool = False) -> list[tuple[int, Verdict]]:
    """Verdicts for every admissible prime p <= p_max, in increasing p."""
    out = []
    for p in primes_upto(p_max):
        try:
            out.append((p, verify_theorem1(a, p, n, compute_h=compute_h)))
        except InvalidParams as exc:
            if exc.kind not in (ParamErrorKind.NOT_COPRIME, ParamErrorKind.NOT_IMAGINARY):
                raise
            continue
    return out


def cohn_preset(n: int) -> Verdict:
    """a = 1, p = 2: n should divide the class number of Q(sqrt(1 - 2^(n+2)))."""
    return verify_theorem1(1, 2, n, compute_h=True)


def gross_rohrlich_preset(p: int, n: int) -> Verdict:
    """a = 1 with a prime p: n should divide h(1 - 4p^n)."""
    return verify_theorem1(1, p, n, compute_h=True)

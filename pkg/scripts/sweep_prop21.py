"""Count solutions of d x^2 + a^2 = 4 p^y over a box of (d, a, p) and list every
triple with more than one solution, tagged by exceptional family.

    python scripts/sweep_prop21.py --d-max 500 --a-max 50 --p-max 50
"""
import argparse
import math
from dataclasses import dataclass

from classdiv.arith import primes_upto
from classdiv.diophantine import BSInstance, Prop21Status, check_prop_2_1, classify


@dataclass(frozen=True)
class Config:
    d_max: int = 500
    a_max: int = 50
    p_max: int = 50
    y_bound: int = 40


def sweep(cfg: Config):
    for p in primes_upto(cfg.p_max):
        for d in range(1, cfg.d_max + 1, 2):
            for a in range(1, cfg.a_max + 1, 2):
                if math.gcd(d, a) != 1:
                    continue
                r = check_prop_2_1(d, a, p, cfg.y_bound)
                if r.status is not Prop21Status.AT_MOST_ONE:
                    yield (d, a, p), r


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for field in ("d_max", "a_max", "p_max", "y_bound"):
        ap.add_argument("--" + field.replace("_", "-"), type=int, default=getattr(Config, field))
    cfg = Config(**vars(ap.parse_args()))
    for (d, a, p), r in sweep(cfg):
        tags = sorted(t.value for t in classify(BSInstance(d, a * a, 4, p)))
        note = "p | a" if a % p == 0 else ""
        print(f"d={d} a={a} p={p} {r.status.value} {list(r.solutions)} {tags} {note}".rstrip())


if __name__ == "__main__":
    main()

"""Check the order-n prediction over a box of (a, p, n).

Prints one line per valid triple where a condition holds but the prime class
has order different from n, then a summary line.
"""
import argparse
from dataclasses import dataclass

from classdiv.arith import primes_upto
from classdiv.fieldparams import InvalidParams
from classdiv.theorem import verify_theorem1


@dataclass(frozen=True)
class Config:
    a_max: int = 15
    p_max: int = 50
    ns: tuple[int, ...] = (3, 5, 7, 9)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--a-max", type=int, default=Config.a_max)
    ap.add_argument("--p-max", type=int, default=Config.p_max)
    ap.add_argument("--n", type=int, nargs="+", default=list(Config.ns))
    args = ap.parse_args()
    cfg = Config(args.a_max, args.p_max, tuple(args.n))

    valid = predicted = bad = 0
    for n in cfg.ns:
        for p in primes_upto(cfg.p_max):
            for a in range(1, cfg.a_max + 1, 2):
                try:
                    v = verify_theorem1(a, p, n)
                except InvalidParams:
                    continue
                valid += 1
                if v.conditions_hold and not v.exceptional:
                    predicted += 1
                    if v.order_of_class != n:
                        bad += 1
                        print(f"a={a} p={p} n={n} d={v.params.d} order={v.order_of_class}")
    print(f"valid={valid} predicted={predicted} violations={bad}")


if __name__ == "__main__":
    main()

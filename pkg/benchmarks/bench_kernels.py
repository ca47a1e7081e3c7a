#!/usr/bin/env python3
"""Wall-clock comparison of the compiled kernels and the pure-Python ones.

    python3 benchmarks/bench_kernels.py [--sizes 64,256,1024] [--radix 256]

Each row is the best of ``--repeat`` runs on the same random input for
both backends; outputs are compared before timing.
"""

from __future__ import annotations

import argparse
import random
import timeit
from math import gcd

from ppimod import kernels


def digits(n: int, beta: int, s: int) -> list[int]:
    out = []
    for _ in range(s):
        n, d = divmod(n, beta)
        out.append(d)
    return out


def cases(beta: int, s: int, rng: random.Random):
    u = digits(rng.randrange(beta**s) | 1, beta, s)
    v = digits(rng.randrange(beta**s), beta, s)
    while gcd(v[0], beta) != 1:
        v[0] = rng.randrange(beta)
    a = pow(v[0], -1, beta)
    # top digits nonzero so dmod / par_mul see full-length operands
    w = v[: max(1, s // 2)]
    w[-1] = w[-1] or 1
    u[-1] = u[-1] or 1
    return {
        "seq_modiv": lambda K: K.seq_modiv(u, v, beta, s, a),
        "ppi": lambda K: K.ppi(u, v, beta, s, a, s, False),
        "par_modiv": lambda K: K.par_modiv(u, v, beta, s, a),
        "par_ppi_v1": lambda K: K.par_ppi_v1(u, v, beta, s, a, False),
        "par_ppi_v2": lambda K: K.par_ppi_v2(u, v, beta, s, a, False),
        "dmod": lambda K: K.dmod(u, w, beta, a, False),
        "par_mul": lambda K: K.par_mul(u, v, beta, False),
    }


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="64,256,1024")
    ap.add_argument("--radix", type=int, default=256)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    if "cython" not in kernels.available_backends():
        print("compiled kernels not built; only the Python backend is available")
        return 1
    py, cy = kernels.get_backend("python"), kernels.get_backend("cython")
    rng = random.Random(args.seed)

    print(f"{'kernel':<12}{'s':>6}{'python ms':>12}{'cython ms':>12}{'speedup':>10}")
    for s in (int(x) for x in args.sizes.split(",")):
        for name, call in cases(args.radix, s, rng).items():
            if call(py) != call(cy):
                raise SystemExit(f"backends disagree on {name} at s={s}")
            t_py = min(timeit.repeat(lambda: call(py), number=1, repeat=args.repeat))
            t_cy = min(timeit.repeat(lambda: call(cy), number=1, repeat=args.repeat))
            print(f"{name:<12}{s:>6}{t_py * 1e3:>12.3f}{t_cy * 1e3:>12.3f}{t_py / t_cy:>9.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

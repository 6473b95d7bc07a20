"""Timing comparison between the compiled arithmetic kernels and the
pure-Python fallback.

Two views:

  micro       tight loops over the kernel functions (add / sub / mul) on
              fixed pseudo-random coefficient vectors, timed in-process
              for both backend modules side by side;
  end-to-end  one full identity-check workload per backend, each run in
              a fresh interpreter with COLORHOM_BACKEND forced, so the
              whole stack (scalars, vectors, checkers) rides on the
              selected kernels.

Usage: python3 benchmarks/bench_backends.py
(--workload is the internal child-process entry point)
"""

import os
import random
import subprocess
import sys
import time
from fractions import Fraction

from colorhom.scalars import Scalar, cyclotomic_field


def _random_pairs(field, count, seed):
    """Canonical (nums, den) kernel operands with mixed magnitudes."""
    rng = random.Random(seed)
    pool = [1, -1, 2, -3, 5, 7, -11, 13, 10**6 + 3, -(10**9 + 7)]
    out = []
    for _ in range(count):
        coeffs = [Fraction(rng.choice(pool), rng.choice((1, 2, 3, 6))) for _ in range(field.degree)]
        s = Scalar(field, coeffs)
        out.append((s.nums, s.den))
    return out


def _time_kernel(fn, pairs, reduction, repeat):
    args = list(zip(pairs, pairs[1:] + pairs[:1]))
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        if reduction is None:
            for (an, ad), (bn, bd) in args:
                fn(an, ad, bn, bd)
        else:
            for (an, ad), (bn, bd) in args:
                fn(an, ad, bn, bd, reduction)
        best = min(best, time.perf_counter() - t0)
    return best / len(args)


def micro(repeat=7):
    from colorhom import _core_py

    try:
        from colorhom import _core
    except ImportError:
        _core = None

    print("micro kernels (best of %d runs, ns per op)" % repeat)
    header = f"  {'field':<10} {'op':<4} {'python':>10} {'compiled':>10} {'speedup':>8}"
    print(header)
    for order in (4, 8, 12):
        field = cyclotomic_field(order)
        pairs = _random_pairs(field, 400, seed=order)
        for name in ("add", "sub", "mul"):
            red = field.reduction if name == "mul" else None
            t_py = _time_kernel(getattr(_core_py, name), pairs, red, repeat)
            if _core is None:
                print(f"  Q(zeta_{order:<2}) {name:<4} {t_py * 1e9:>10.0f} {'-':>10} {'-':>8}")
                continue
            t_c = _time_kernel(getattr(_core, name), pairs, red, repeat)
            print(
                f"  Q(zeta_{order:<2}) {name:<4} {t_py * 1e9:>10.0f} "
                f"{t_c * 1e9:>10.0f} {t_py / t_c:>7.1f}x"
            )
    return _core is not None


def workload():
    """A dense commutator/associator certification on a 6-dimensional
    algebra over Q(zeta_12): the hot path of the whole package."""
    from colorhom._backend import BACKEND
    from colorhom.bundles import NonAssocBundle
    from colorhom.checkers import check_akivis_identity, check_flexible_alternative
    from colorhom.constructions import akivis_from_algebra
    from colorhom.grading import Bicharacter, TRIVIAL_GROUP
    from colorhom.linalg import EvenMap, GradedSpace, MultilinearMap, Vector

    field = cyclotomic_field(12)
    dim = 6
    space = GradedSpace.build(field, TRIVIAL_GROUP, [(f"e{i}", ()) for i in range(dim)])
    rng = random.Random(7)
    z = Scalar.root(field)
    pool = [Scalar.rational(field, c) for c in (1, -1, 2, Fraction(1, 2), 3)]
    pool += [z, z * z, -z, z + Scalar.one(field)]
    table = {}
    for i in range(dim):
        for j in range(dim):
            picks = rng.sample(range(dim), 3)
            table[(i, j)] = Vector(space, {k: rng.choice(pool) for k in picks})
    mu = MultilinearMap.internal(space, 2, table)
    alpha = EvenMap.diagonal(space, [1, 2, 1, -1, 3, 1])
    b = NonAssocBundle(space, Bicharacter.trivial(TRIVIAL_GROUP, field), mu, alpha)

    t0 = time.perf_counter()
    ak = akivis_from_algebra(b)
    ok = check_akivis_identity(ak).passed
    check_flexible_alternative(b)
    dt = time.perf_counter() - t0
    print(f"backend={BACKEND} seconds={dt:.3f} ok={ok}")


def end_to_end():
    print("\nend-to-end: akivis certification, dim 6 dense over Q(zeta_12)")
    times = {}
    for mode in ("py", "c"):
        env = dict(os.environ, COLORHOM_BACKEND=mode)
        proc = subprocess.run(
            [sys.executable, os.path.abspath(__file__), "--workload"],
            env=env,
            capture_output=True,
            text=True,
        )
        if proc.returncode != 0:
            print(f"  COLORHOM_BACKEND={mode}: unavailable ({proc.stderr.strip().splitlines()[-1]})")
            continue
        line = proc.stdout.strip()
        print(f"  COLORHOM_BACKEND={mode}: {line}")
        times[mode] = float(line.split("seconds=")[1].split()[0])
    if "py" in times and "c" in times:
        print(f"  whole-stack speedup: {times['py'] / times['c']:.2f}x")


if __name__ == "__main__":
    if "--workload" in sys.argv:
        workload()
    else:
        micro()
        end_to_end()

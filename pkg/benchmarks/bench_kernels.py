"""Benchmark the compiled elimination kernels against the numpy fallback.

Times echelon_mod and rref_field on the actual Leibniz equation matrices
the oracle builds for a few group/ring pairs, then prints a per-case
table with the median runtime of each backend and the speedup.

Usage: python3 benchmarks/bench_kernels.py [--repeats N]
"""

import argparse
import statistics
import time

import numpy as np

from derring.groups import dihedral_group, symmetric_group
from derring.kernels import python_impl
from derring.oracle import _equation_rows
from derring.rings import GFRing

try:
    from derring.kernels import _celim
except ImportError:  # pragma: no cover - fallback-only build
    _celim = None


def time_call(fn, make_args, repeats):
    samples = []
    for _ in range(repeats):
        args = make_args()
        t0 = time.perf_counter()
        fn(*args)
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples)


def bench_echelon(G, m, repeats):
    base = _equation_rows(G) % m

    def args():
        return (base.copy(), m)

    rows = []
    rows.append(("python", time_call(python_impl.echelon_mod, args, repeats)))
    if _celim is not None:
        rows.append(("c", time_call(_celim.echelon_mod, args, repeats)))
    return base.shape, rows


def bench_rref(G, field, repeats):
    add, mul, neg, inv = field.tables()
    lut = np.zeros(5, dtype=np.int64)
    for k in range(-2, 3):
        lut[k + 2] = field.index(field.scalar(k, field.one))
    base = lut[_equation_rows(G) + 2]

    def args():
        return (base.copy(), add, mul, neg, inv)

    rows = []
    rows.append(("python", time_call(python_impl.rref_field, args, repeats)))
    if _celim is not None:
        rows.append(("c", time_call(_celim.rref_field, args, repeats)))
    return base.shape, rows


def report(label, shape, rows):
    print(f"{label}  (matrix {shape[0]}x{shape[1]})")
    base = dict(rows).get("python")
    for name, t in rows:
        speed = f"  {base / t:5.2f}x vs python" if name != "python" else ""
        print(f"  {name:7s} {t * 1e3:9.3f} ms{speed}")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()
    if _celim is None:
        print("note: compiled kernel unavailable; timing the fallback only")

    for G, m in [(symmetric_group(3), 4), (dihedral_group(2), 4), (dihedral_group(3), 12)]:
        shape, rows = bench_echelon(G, m, args.repeats)
        report(f"echelon_mod  Z{m}[{G.label}]", shape, rows)

    for G, field in [
        (symmetric_group(3), GFRing(2, 2)),
        (dihedral_group(2), GFRing(2, 2)),
        (dihedral_group(3), GFRing(2, 2)),
    ]:
        shape, rows = bench_rref(G, field, args.repeats)
        report(f"rref_field   {field.label}[{G.label}]", shape, rows)


if __name__ == "__main__":
    main()

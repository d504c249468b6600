"""Compare the compiled scalar backend against the pure-Python fallback.

Runs the same workloads in two subprocesses (one with TRIPACK_PURE=1) and
prints a timing table.  Usage: python benchmarks/bench_scalar.py
"""

from __future__ import annotations

import json
import os
import subprocess
import sys

WORKER = """
import json, sys, time
import tripack
from tripack.scalar import BACKEND, QE, SQRT2, SQRT3

def bench_arith():
    x = QE(3, 1, 3) / 7
    y = QE(-2, 5, 3) / 9
    acc = QE(0, 0, 3)
    t0 = time.perf_counter()
    for _ in range(20000):
        acc = acc + x * y - x / y
        if acc > y:
            acc = acc - QE(1)
    return time.perf_counter() - t0

def bench_pack_validate():
    from tripack.instances import gen_instance
    from tripack.dispatch import pack_instance
    from tripack.certify import validate_packing
    t0 = time.perf_counter()
    for fam in ("iso_axis", "iso_diag", "equilateral"):
        inst = gen_instance(fam, 1, 300, 2024, "geometric")
        res = pack_instance(fam, inst.sides)
        assert res.certificate is not None
    return time.perf_counter() - t0

print(json.dumps({
    "backend": BACKEND,
    "arith_s": bench_arith(),
    "pack_validate_s": bench_pack_validate(),
}))
"""


def run(pure):
    env = dict(os.environ)
    if pure:
        env["TRIPACK_PURE"] = "1"
    else:
        env.pop("TRIPACK_PURE", None)
    out = subprocess.run([sys.executable, "-c", WORKER], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(out.stdout.strip().splitlines()[-1])


def main():
    rows = [run(pure=False), run(pure=True)]
    print(f"{'backend':<10} {'arith 20k ops':>14} {'pack+cert 3x300':>16}")
    for r in rows:
        print(f"{r['backend']:<10} {r['arith_s']:>13.3f}s {r['pack_validate_s']:>15.3f}s")
    if rows[0]["backend"] == rows[1]["backend"]:
        print("note: compiled backend unavailable, both rows ran pure")
    else:
        a = rows[1]["arith_s"] / rows[0]["arith_s"]
        p = rows[1]["pack_validate_s"] / rows[0]["pack_validate_s"]
        print(f"speedup: arith x{a:.1f}, pack+certify x{p:.1f}")


if __name__ == "__main__":
    main()

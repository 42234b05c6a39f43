"""Timing harness comparing closed-form and dense-oracle complexity.

For every size a seeded, well-conditioned band (strictly decreasing,
positive, consecutive gaps in [0.1, 1]) is generated; each variant is run
``reps`` times after one discarded warm-up and the median wall time is
kept. The empirical scaling exponent between the smallest and largest size
is ``log(t2 / t1) / log(n2 / n1)``.
"""

from __future__ import annotations

import gc
import math
import random
import statistics
import time
from dataclasses import asdict, dataclass

from . import ops
from .core import from_band, matmul, to_dense
from .exceptions import UnsupportedOp
from .oracle import (
    dense_charpoly,
    dense_cholesky,
    dense_determinant,
    dense_eigenvalues,
    dense_inverse,
    dense_ldl,
    dense_minor,
    dense_quadratic_form,
)

CLOSED = "closed-form"
DENSE = "dense-oracle"

SMALL = (64, 128, 256)
LARGE = (2**10, 2**14, 2**18)
QUADRATIC = (256, 512, 1024)

DEFAULT_SIZES = {
    # op: (closed-form sizes, dense-oracle sizes)
    "det": (LARGE, SMALL),
    "inv": (LARGE, SMALL),
    "quadform": (LARGE, (512, 1024, 2048)),
    "definiteness": (LARGE, (16, 32, 64)),
    "ldl": (QUADRATIC, SMALL),
    "chol": (QUADRATIC, SMALL),
    "cofactor": (LARGE, SMALL),
    "colsub": (LARGE, SMALL),
    "charpoly": (QUADRATIC, (16, 32, 48)),
    "hprod": (LARGE, SMALL),
    "square": (QUADRATIC, SMALL),
}
OPS = tuple(DEFAULT_SIZES)


@dataclass(frozen=True)
class BenchRecord:
    operation: str
    n: int
    median_ns: int
    implementation: str
    reps: int

    def to_json(self):
        return asdict(self)


def well_conditioned_band(n: int, seed: int = 0):
    rng = random.Random(seed * 7919 + n)
    band = [0.0] * n
    band[-1] = 0.1 + rng.random()
    for k in range(n - 2, -1, -1):
        band[k] = band[k + 1] + rng.uniform(0.1, 1.0)
    return band


def _task(op: str, impl: str, n: int, seed: int):
    """Return a zero-argument callable; all input preparation happens here."""
    rng = random.Random(seed * 104729 + n)
    A = from_band(well_conditioned_band(n, seed), mode="float")
    x = [rng.uniform(-1, 1) for _ in range(n)]
    k = n // 2 + 1
    if impl == CLOSED:
        closed = {
            "det": lambda: ops.determinant(A),
            "inv": lambda: ops.inverse(A),
            "quadform": lambda: ops.quadratic_form(A, x),
            "definiteness": lambda: ops.classify_definiteness(A),
            "ldl": lambda: ops.ldl_decompose(A).dense_l(),
            "chol": lambda: ops.cholesky_decompose(A).dense(),
            "cofactor": lambda: ops.cofactor(A, k, k),
            "colsub": lambda: ops.det_column_substituted(A, k, x),
            "charpoly": lambda: ops.characteristic_polynomial(A),
            "hprod": lambda: ops.left_multiply_structured_upper(x, A),
            "square": lambda: ops.square(A),
        }
        return closed[op]
    D = to_dense(A).tolist()
    if op == "colsub":
        sub = [r[: k - 1] + [x[i]] + r[k:] for i, r in enumerate(D)]
        return lambda: dense_determinant(sub)
    if op == "hprod":
        H = ops.structured_upper_matrix(x)
        return lambda: matmul(H, D)
    dense = {
        "det": lambda: dense_determinant(D),
        "inv": lambda: dense_inverse(D),
        "quadform": lambda: dense_quadratic_form(D, x),
        "definiteness": lambda: dense_eigenvalues(D),
        "ldl": lambda: dense_ldl(D),
        "chol": lambda: dense_cholesky(D),
        "cofactor": lambda: dense_minor(D, k, k),
        "charpoly": lambda: dense_charpoly(D),
        "square": lambda: matmul(D, D),
    }
    return dense[op]


def time_call(fn, reps: int) -> int:
    """Median wall time in ns over ``reps`` runs, after one discarded warm-up."""
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        fn()
        samples = []
        for _ in range(reps):
            t0 = time.perf_counter_ns()
            fn()
            samples.append(time.perf_counter_ns() - t0)
    finally:
        if gc_was_enabled:
            gc.enable()
    return int(statistics.median(samples))


def scaling_exponent(records) -> float:
    """``log(t2/t1) / log(n2/n1)`` between the smallest and largest size."""
    recs = sorted(records, key=lambda r: r.n)
    if len(recs) < 2:
        raise ValueError("need at least two sizes")
    lo, hi = recs[0], recs[-1]
    return math.log(max(hi.median_ns, 1) / max(lo.median_ns, 1)) / math.log(hi.n / lo.n)


def bench(op: str, sizes=None, reps: int = 5, impl: str = "both", seed: int = 0):
    """Time ``op`` and return ``(records, {implementation: exponent})``."""
    if op not in DEFAULT_SIZES:
        raise UnsupportedOp(f"unsupported bench op {op!r}; choose from {', '.join(OPS)}")
    if reps < 1:
        raise ValueError("reps must be positive")
    impls = (CLOSED, DENSE) if impl == "both" else (impl,)
    records, exponents = [], {}
    for variant in impls:
        if variant not in (CLOSED, DENSE):
            raise UnsupportedOp(f"unknown implementation {variant!r}")
        ns = sizes if sizes is not None else DEFAULT_SIZES[op][variant == DENSE]
        ns = sorted(int(n) for n in ns)
        if not ns or ns[0] < 1:
            raise ValueError("sizes must be positive")
        recs = [BenchRecord(op, n, time_call(_task(op, variant, n, seed), reps), variant, reps) for n in ns]
        records.extend(recs)
        if len(recs) >= 2:
            exponents[variant] = scaling_exponent(recs)
    return records, exponents

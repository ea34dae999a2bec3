"""Timing harness comparing the Phi_n algorithms, with CSV output."""

import csv
import time
from dataclasses import astuple, dataclass

from .cyclo import CycloAlgo, phi
from .numth import is_square_free

CSV_HEADER = ("n", "algo", "wall_nanos", "degree", "height")


class BenchMismatch(ArithmeticError):
    """Two algorithms produced different polynomials for the same n."""


@dataclass(frozen=True)
class BenchRecord:
    n: int
    algo: CycloAlgo
    wall_nanos: int
    degree: int
    height: int

    def row(self):
        return (self.n, self.algo.value, self.wall_nanos, self.degree, self.height)


def bench_range(ns, algos, square_free_only=False):
    """Time phi(n, algo) for every n and algorithm, sequentially.

    Algorithms that do not apply to an index (neg-odd) are skipped for that n.
    Raises BenchMismatch as soon as two algorithms disagree.
    """
    algos = list(algos)
    if not algos:
        raise ValueError("at least one algorithm is required")
    records = []
    for n in ns:
        if square_free_only and not is_square_free(n):
            continue
        reference = None
        for algo in algos:
            if not algo.applies_to(n):
                continue
            start = time.perf_counter_ns()
            poly = phi(n, algo)
            elapsed = time.perf_counter_ns() - start
            if reference is None:
                reference = (algo, poly)
            elif poly != reference[1]:
                raise BenchMismatch(
                    f"n={n}: {algo.value} disagrees with {reference[0].value}")
            records.append(BenchRecord(n, algo, elapsed, poly.degree, poly.height()))
    return records


def write_csv(records, stream):
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for rec in records:
        writer.writerow(rec.row())


def read_csv(stream):
    reader = csv.reader(stream)
    header = next(reader)
    if tuple(header) != CSV_HEADER:
        raise ValueError(f"unexpected CSV header {header}")
    return [BenchRecord(int(n), CycloAlgo(a), int(t), int(d), int(h))
            for n, a, t, d, h in reader]

"""Verification suites run by ``cyclotomic verify``.

Each suite sweeps n = 1..max_n and reports, in increasing n, which indices
passed and the witnesses of any failure.
"""

from dataclasses import dataclass, field
from math import gcd

from . import numth
from .cyclo import check_lemma31, check_lemma35, factor_unity, phi, psi
from .qnring import check_cor37, check_lemma34, check_theorem33_product, dim_cap

SUITES = ("degree", "factorization", "coprimality", "lemma35", "qn")


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    total: int = 0
    skipped: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def summary(self):
        status = "OK" if self.ok else "FAIL"
        line = f"{status} {self.name} {self.passed}/{self.total}"
        if self.skipped:
            line += f" ({self.skipped} skipped above dim cap)"
        return line


def _degree(n):
    fails = []
    e = numth.euler_phi(n)
    if phi(n).degree != e:
        fails.append(f"n={n}: deg Phi_n = {phi(n).degree}, phi(n) = {e}")
    if psi(n).degree != n - e:
        fails.append(f"n={n}: deg Psi_n = {psi(n).degree}, n - phi(n) = {n - e}")
    if sum(numth.euler_phi(d) for d in numth.divisors(n)) != n:
        fails.append(f"n={n}: sum of phi(d) over d | n is not n")
    return fails


def _factorization(n):
    try:
        fac = factor_unity(n)
    except ArithmeticError as exc:
        return [f"n={n}: {exc}"]
    return [f"n={n} d={d}: Phi_d not monic of degree phi(d)"
            for d, p in fac.parts
            if not p.is_monic() or p.degree != numth.euler_phi(d)]


def _coprimality(n):
    fails = []
    for d in range(2, n):
        for with_phi in (False, True):
            rep = check_lemma31(d, n, with_phi=with_phi)
            if not rep.holds:
                fails.append(f"n={n} d={d}: case {rep.case} gcd = {rep.gcd}")
    return fails


def _lemma35(n):
    return [f"n={n} r={r}: Phi_n(Y) does not divide Phi_n(Y^r)"
            for r in range(1, n) if gcd(r, n) == 1 and not check_lemma35(n, r)]


def _qn(n):
    fails = []
    if not check_lemma34(n):
        fails.append(f"n={n}: Y^n - 1 is not prod (Y - y^r)")
    if not check_theorem33_product(n):
        fails.append(f"n={n}: Phi_n is not prod (Y - y^r) over r coprime to n")
    if n >= 2:
        rep = check_cor37(n)
        if not rep.holds:
            fails.append(f"n={n}: generator order {rep.generator_order}, "
                         f"expected {rep.expected}")
    return fails


_CHECKS = {
    "degree": _degree,
    "factorization": _factorization,
    "coprimality": _coprimality,
    "lemma35": _lemma35,
    "qn": _qn,
}


def run_suite(name, max_n):
    if name not in _CHECKS:
        raise ValueError(f"unknown suite {name!r}")
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    result = SuiteResult(name)
    cap = dim_cap() if name == "qn" else None
    for n in range(1, max_n + 1):
        if cap is not None and numth.euler_phi(n) > cap:
            result.skipped += 1
            continue
        result.total += 1
        fails = _CHECKS[name](n)
        if fails:
            result.failures.extend(fails)
        else:
            result.passed += 1
    return result

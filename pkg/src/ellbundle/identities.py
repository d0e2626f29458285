"""Cross-checks between the characteristic-class formulas.

Each suite returns a :class:`SuiteResult` with the parameter tuples that
were checked and those that failed.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import chern_formulas as cf
from . import fibration as fb
from .cohomology import exp, fibration_ring, section_ring


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> int:
        return self.checked - len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, ok: bool, params) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(params)

    def to_json(self) -> dict:
        return {"suite": self.name, "checked": self.checked, "passed": self.passed,
                "failures": [list(f) for f in self.failures]}


def master(nmax: int = 6, truncation: int | None = None) -> SuiteResult:
    """``ch U(d) e^{-zeta+L} = ch U_{1-d}``."""
    res = SuiteResult("master")
    R = fibration_ring(truncation)
    sigma, zeta, L = R.gens()
    twist = exp(L - zeta)
    for n in range(2, nmax + 1):
        for d in range(1, n):
            lhs = cf.ch_Ud_fibration(n, d, truncation) * twist
            res.record(lhs == cf.ch_Ua_fibration(n, 1 - d, truncation), (n, d))
    return res


def recursion(nmax: int = 6, amin: int = -5, amax: int = 5,
              truncation: int | None = None) -> SuiteResult:
    """``ch U_a - ch U_{a-1} = -e^{(a-1)L}(1 - e^{-(zeta - nL)})``."""
    res = SuiteResult("recursion")
    for n in range(2, nmax + 1):
        prev = cf.ch_Ua_fibration(n, amin - 1, truncation)
        for a in range(amin, amax + 1):
            cur = cf.ch_Ua_fibration(n, a, truncation)
            res.record(cur - prev == cf.modification_increment(n, a, truncation), (n, a))
            prev = cur
    return res


def newton(nmax: int = 6, amin: int = -5, amax: int = 5,
           truncation: int | None = None) -> SuiteResult:
    """Newton conversion of ``ch U_a`` gives the displayed ``c_1`` and ``c_2``;
    also ``c(U(d))`` against its product formula."""
    res = SuiteResult("newton")
    for n in range(2, nmax + 1):
        for a in range(amin, amax + 1):
            c = cf.c_from_ch(cf.ch_Ua_fibration(n, a, truncation))
            res.record(c.weight_part(1) == cf.c1_Ua_displayed(n, a, truncation), ("c1", n, a))
            res.record(c.weight_part(2) == cf.c2_Ua_displayed(n, a, truncation), ("c2", n, a))
        for d in range(1, n):
            c = cf.c_from_ch(cf.ch_Ud_fibration(n, d, truncation))
            res.record(c == cf.c_Ud_fibration(n, d, truncation), ("cUd", n, d))
    return res


def branches(nmax: int = 6, amin: int = -5, amax: int = 5,
             truncation: int | None = None) -> SuiteResult:
    """The three product formulas for ``c(U_a)`` agree with each other and
    with the Newton conversion of ``ch U_a``."""
    res = SuiteResult("branches")
    for n in range(2, nmax + 1):
        for a in range(amin, amax + 1):
            target = cf.c_from_ch(cf.ch_Ua_fibration(n, a, truncation))
            for br in cf.C_UA_BRANCHES:
                res.record(cf.c_Ua_fibration(n, a, truncation, br) == target, (br, n, a))
    return res


def specialization(nmax: int = 6, amin: int = -5, amax: int = 5,
                   truncation: int | None = None) -> SuiteResult:
    """``L -> 0, sigma -> t, zeta -> h`` maps fibration formulas to single-curve ones."""
    res = SuiteResult("specialization")
    for n in range(2, nmax + 1):
        res.record(cf.ch_Ua_twist_singlecurve(n, 1, 1, truncation).total
                   == cf.ch_U_poincare(n, truncation).total, ("poincare-ch", n))
        res.record(cf.c_from_ch(cf.ch_U_poincare(n, truncation).total)
                   == cf.c_U_poincare(n, truncation).total, ("poincare-c", n))
        res.record(cf.c_from_ch(cf.ch_U0_singlecurve(n, truncation).total)
                   == cf.c_U0_singlecurve(n, truncation).total, ("U0", n))
        for a in range(amin, amax + 1):
            ch_fib = cf.ch_Ua_fibration(n, a, truncation)
            ch_cur = cf.ch_Ua_twist_singlecurve(n, a, 0, truncation).total
            res.record(cf.specialize(ch_fib, n) == ch_cur, ("ch-Ua", n, a))
            res.record(cf.specialize(cf.c_Ua_fibration(n, a, truncation), n)
                       == cf.c_Ua_singlecurve(n, a, truncation).total, ("c-Ua", n, a))
            res.record(cf.c_from_ch(ch_cur) == cf.c_Ua_singlecurve(n, a, truncation).total,
                       ("newton-Ua", n, a))
        for d in range(1, n):
            ch_cur = cf.ch_Ud_singlecurve(n, d, truncation).total
            res.record(cf.specialize(cf.ch_Ud_fibration(n, d, truncation), n) == ch_cur,
                       ("ch-Ud", n, d))
            res.record(cf.specialize(cf.c_Ud_fibration(n, d, truncation), n)
                       == cf.c_Ud_singlecurve(n, d, truncation).total, ("c-Ud", n, d))
            res.record(ch_cur == cf.ch_Ua_twist_singlecurve(n, 1 - d, 1, truncation).total,
                       ("twist-Ud", n, d))
            res.record(cf.c_from_ch(ch_cur) == cf.c_Ud_singlecurve(n, d, truncation).total,
                       ("newton-Ud", n, d))
    return res


def sections(nmax: int = 6, amax: int = 3, truncation: int | None = None) -> SuiteResult:
    """Determinant, trivial section and reducible-section recursion."""
    res = SuiteResult("sections")
    R = section_ring(truncation)
    alpha, L = R.gen("alpha"), R.gen("L")
    for n in range(1, nmax + 1):
        for a in range(-amax, amax + 1):
            ch = fb.ch_VAa(n, a, truncation)
            ca, cl = fb.det_coefficients(n, a)
            res.record(ch.weight_part(1) == alpha.scale(ca) + L.scale(cl), ("det", n, a))
            res.record(ch.substitute({"alpha": 0}, R) == fb.ch_trivial_section(n, a, truncation),
                       ("trivial", n, a))
            if n >= 2:
                fib = cf.ch_Ua_fibration(n, a, truncation)
                res.record(fib.substitute({"zeta": alpha}, R) == ch, ("zeta->alpha", n, a))
                res.record(ch - fb.ch_VAa(n - 1, a, truncation)
                           == fb.reducible_increment(n, a, truncation), ("reducible", n, a))
    return res


SUITES = {
    "master": master,
    "recursion": recursion,
    "newton": newton,
    "branches": branches,
    "specialization": specialization,
    "sections": sections,
}


def run(suite: str = "all", nmax: int = 6, truncation: int | None = None) -> list:
    names = list(SUITES) if suite == "all" else [suite]
    out = []
    for name in names:
        if name not in SUITES:
            from .errors import EllBundleError
            raise EllBundleError(f"unknown suite {name!r}")
        out.append(SUITES[name](nmax=nmax, truncation=truncation))
    return out

"""Self-check suites behind ``deligne-gl check``."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .capdiagrams import cap_diagram, weight_diagram
from .combinatorics import Bipartition, Partition, lr_coefficient, partitions
from .deltas import GENERIC
from .grothendieck import RingVector, bilinear_form, lift, product_at, product_generic
from .oracle import bipartitions_up_to, gamma_oracle, hom_dim_oracle, lr_oracle
from .schur import LaurentPolynomial, character, composite_schur

ORACLE_DELTAS = (Fraction(-2), Fraction(-1), Fraction(0), Fraction(1), Fraction(2), Fraction(1, 2))


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    total: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def record(self, good: bool, label: str):
        self.total += 1
        if good:
            self.passed += 1
        else:
            self.failures.append(label)


def _bp(black, white) -> Bipartition:
    return Bipartition(Partition(black), Partition(white))


def run_lr(max_size: int = 6) -> SuiteResult:
    res = SuiteResult("lr")
    for n in range(max_size + 1):
        for nu in partitions(n):
            for a in range(n + 1):
                for lam in partitions(a):
                    for mu in partitions(n - a):
                        res.record(
                            lr_oracle(nu, lam, mu) == lr_coefficient(nu, lam, mu),
                            f"LR {nu} {lam} {mu}",
                        )
    return res


def _small_pairs(bound: tuple[int, int]):
    pool = [b for b in bipartitions_up_to(sum(bound)) if b.size[0] <= bound[0] and b.size[1] <= bound[1]]
    for lam in pool:
        for mu in pool:
            if lam.size[0] + mu.size[0] <= bound[0] and lam.size[1] + mu.size[1] <= bound[1]:
                yield lam, mu


def run_gamma(d: int = 6) -> SuiteResult:
    res = SuiteResult("gamma")
    for lam, mu in _small_pairs((2, 2)):
        got = gamma_oracle(lam, mu, d)
        want = product_generic(RingVector.basis(lam), RingVector.basis(mu))
        res.record(got == want, f"gamma {lam} * {mu}")
    return res


def run_hom(max_rank: int = 3, threads: int = 1) -> SuiteResult:
    res = SuiteResult("hom")
    pool = list(bipartitions_up_to(max_rank))
    jobs = [(lam, mu, d) for d in ORACLE_DELTAS for lam in pool for mu in pool]

    def one(job):
        lam, mu, d = job
        return hom_dim_oracle(lam, mu, d) == bilinear_form(lam, mu, d)

    if threads > 1:
        with ThreadPoolExecutor(threads) as ex:
            outcomes = list(ex.map(one, jobs))
    else:
        outcomes = [one(j) for j in jobs]
    for (lam, mu, d), good in zip(jobs, outcomes):
        res.record(good, f"hom {lam} {mu} delta={d}")
    return res


def _vec(ring, *pairs) -> RingVector:
    return RingVector({_bp(*bp): c for bp, c in pairs}, ring)


def _poly(m, n, terms) -> LaurentPolynomial:
    return LaurentPolynomial(m, n, {tuple(e): c for e, c in terms})


def golden_cases() -> list[tuple[str, Callable[[], bool]]]:
    box = (1,)
    cases: list[tuple[str, Callable[[], bool]]] = []
    cases.append((
        "caps of ((5,5,4,4,3,3),(5,5,5,4,3,2)) at 1",
        lambda: cap_diagram(weight_diagram(_bp((5, 5, 4, 4, 3, 3), (5, 5, 5, 4, 3, 2)), 1))
        == {(-5, 5), (-4, 2), (-3, -2), (3, 4)},
    ))
    cases.append((
        "lift_0 (box|box)",
        lambda: lift(_vec(0, ((box, box), 1))) == _vec(GENERIC, ((box, box), 1), (((), ()), 1)),
    ))
    cases.append((
        "lift_-1 ((3,2)|(3,1))",
        lambda: lift(_vec(-1, (((3, 2), (3, 1)), 1)))
        == _vec(GENERIC, (((3, 2), (3, 1)), 1), (((3,), (1, 1)), 1), (((2, 2), (3,)), 1), (((2,), (1,)), 1)),
    ))
    cases.append((
        "(box|) (|box) generic",
        lambda: product_generic(_vec(GENERIC, ((box, ()), 1)), _vec(GENERIC, (((), box), 1)))
        == _vec(GENERIC, ((box, box), 1), (((), ()), 1)),
    ))
    tail = [(((2, 1), box), 1), (((3,), box), 1)]
    expected = {
        0: tail + [(((1, 1), ()), 1), (((2,), ()), 2)],
        -1: tail + [(((2,), ()), 1)],
        1: tail + [(((1, 1), ()), 1)],
        -2: tail + [(((1, 1), ()), 1)],
        3: tail + [(((1, 1), ()), 1), (((2,), ()), 1)],
        Fraction(1, 2): tail + [(((1, 1), ()), 1), (((2,), ()), 1)],
    }
    for d, terms in expected.items():
        cases.append((
            f"((2)|) (box|box) at {d}",
            lambda d=d, terms=terms: product_at(_vec(d, (((2,), ()), 1)), _vec(d, ((box, box), 1)))
            == _vec(d, *terms),
        ))
    cases.append((
        "((2,2)|(3,1)) (box|) at -1",
        lambda: product_at(_vec(-1, (((2, 2), (3, 1)), 1)), _vec(-1, ((box, ()), 1)))
        == _vec(-1, (((3, 2), (3, 1)), 1), (((2, 2, 1), (3, 1)), 1), (((2, 2), (2, 1)), 1)),
    ))
    # exponent order (x1, y1, y2)
    s_1_2 = [((1, -1, -1), 1), ((-1, 1, -1), 1), ((-1, -1, 1), 1), ((-2, 1, 0), 1),
             ((-2, 0, 1), 1), ((-1, 0, 0), 2), ((0, -1, 0), 1), ((0, 0, -1), 1)]
    cases.append(("s_((1)|(2)) at (1|2)", lambda: composite_schur(_bp((1,), (2,)), 1, 2) == _poly(1, 2, s_1_2)))
    ch = [((-3, 2, 0), 1), ((-3, 1, 1), 1), ((-3, 0, 2), 1), ((-2, 2, -1), 1), ((-2, -1, 2), 1),
          ((-2, 1, 0), 3), ((-2, 0, 1), 3), ((-1, 1, -1), 2), ((-1, -1, 1), 2), ((-1, 0, 0), 3),
          ((0, -1, 0), 1), ((0, 0, -1), 1)]
    cases.append(("ch W((1,1)|(3)) at (1|2)", lambda: character(_bp((1, 1), (3,)), 1, 2) == _poly(1, 2, ch)))
    return cases


def run_golden() -> SuiteResult:
    res = SuiteResult("golden")
    for label, check in golden_cases():
        res.record(bool(check()), label)
    return res


SUITES = {
    "golden": lambda threads: run_golden(),
    "lr": lambda threads: run_lr(),
    "gamma": lambda threads: run_gamma(),
    "hom": lambda threads: run_hom(threads=threads),
}


def run_suites(name: str, threads: int = 1) -> list[SuiteResult]:
    names = list(SUITES) if name == "all" else [name]
    return [SUITES[n](threads) for n in names]

"""Release acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line (shown in the pytest terminal summary,
or on stdout when this file is run directly) and enforces its time budget.
"""

import contextlib
import random
import time
from fractions import Fraction

import pytest

from primecong.bernoulli import (
    BernoulliCache,
    bernoulli_number,
    bernoulli_polynomial,
    faulhaber_sum,
    von_staudt_clausen_check,
)
from primecong.congruences import (
    RPolicy,
    TheoremId,
    sun_rhs,
    sweep,
    theorem2_lhs,
    verify_eq_un,
    verify_glaisher,
    verify_sun_p3,
    verify_wolstenholme,
)
from primecong.exact import rational_mod
from primecong.primes import PrimeRange, primes_in
from primecong.primesums import (
    s1_s2_s3_closed,
    s_q_closed_binomial,
    s_q_closed_polynomial,
    s_q_sum,
    t_sum,
)

from conftest import ACCEPTANCE_LINES, akiyama_tanigawa


@contextlib.contextmanager
def criterion(number, title, budget_s):
    start = time.perf_counter()
    status = "FAIL"
    detail = ""
    try:
        yield
        elapsed = time.perf_counter() - start
        if budget_s is not None and elapsed >= budget_s:
            detail = f" (over budget: {elapsed:.2f}s >= {budget_s}s)"
            raise AssertionError(f"criterion {number} took {elapsed:.2f}s, budget {budget_s}s")
        status = "PASS"
        detail = f" ({elapsed:.2f}s" + (f" < {budget_s}s)" if budget_s is not None else ")")
    except BaseException as exc:
        if not detail:
            detail = f" ({type(exc).__name__}: {exc})"
        raise
    finally:
        line = f"[{status}] criterion {number}: {title}{detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)


def test_criterion_1_worked_examples():
    with criterion(1, "T(3)=2, T(5)=258, T(7)=53820 with residues 2, 3, 4", 1.0):
        assert [t_sum(p) for p in (3, 5, 7)] == [2, 258, 53820]
        verdicts = [verify_eq_un(p) for p in (3, 5, 7)]
        assert [(v.lhs_residue, v.rhs_residue, v.passed) for v in verdicts] == [
            (2, 2, True), (3, 3, True), (4, 4, True),
        ]
        assert [(p + 1) // 2 for p in (3, 5, 7)] == [2, 3, 4]


def test_criterion_2_triple_agreement():
    with criterion(2, "S_q brute = binomial form = polynomial form = factored, p <= 60, q in 1..3", 30.0):
        for p in primes_in(PrimeRange(2, 60)):
            for q in (1, 2, 3):
                brute = s_q_sum(p, q)
                values = [s_q_closed_binomial(p, q), s_q_closed_polynomial(p, q), s1_s2_s3_closed(p, q)]
                for value in values:
                    assert value.denominator == 1 and value == brute, (p, q, value, brute)


def test_criterion_3_theorem1_sweep():
    with criterion(3, "theorem 1 for odd p <= 100 and every r in [1, p-1]", 300.0):
        report = sweep([TheoremId.THEOREM1], PrimeRange(3, 100), RPolicy.ALL_VALID_R)
        expected_cells = sum(p - 1 for p in primes_in(PrimeRange(3, 100)))
        assert len(report) == expected_cells
        failing = [(v.p, v.r) for v in report.verdicts if not v.passed]
        assert failing == []


def test_criterion_4_theorem2_sweep():
    with criterion(4, "theorem 2 for odd p <= 100 (p=3: 15 = 0 = 9 mod 3)", 60.0):
        assert theorem2_lhs(3) == 15
        assert rational_mod(15, 3).value == 0 == rational_mod(9, 3).value
        report = sweep([TheoremId.THEOREM2], PrimeRange(3, 100))
        assert len(report) == len(primes_in(PrimeRange(3, 100)))
        assert report.failures == 0


def test_criterion_5_intro_identities():
    with criterion(5, "grid and cube-root sums brute = closed for primes 3..200", 60.0):
        report = sweep([TheoremId.GRID_IDENTITY, TheoremId.CUBE_ROOT_IDENTITY], PrimeRange(3, 200))
        assert len(report) == 2 * len(primes_in(PrimeRange(3, 200)))
        assert report.failures == 0
        assert all(v.modulus == 0 for v in report.verdicts)


def test_criterion_6_classical_congruences():
    with criterion(6, "Glaisher mod p^2, Sun mod p^3, Wolstenholme mod p^3 for 5 <= p <= 50; Wolstenholme fails at 3", 10.0):
        assert rational_mod(-Fraction(1, 6) - 5, 25).value == 24
        assert sun_rhs(5) == Fraction(23, 1152)
        assert rational_mod(Fraction(23, 1152), 125).value == 24
        for p in primes_in(PrimeRange(5, 50)):
            assert verify_glaisher(p).passed, p
            assert verify_sun_p3(p).passed, p
            assert verify_wolstenholme(p).passed, p
        v = verify_wolstenholme(3)
        assert not v.passed and v.note


def test_criterion_7_bernoulli_properties():
    with criterion(7, "Bernoulli recurrence vs Akiyama-Tanigawa, von Staudt-Clausen, Faulhaber, identities", None):
        cache = BernoulliCache()
        assert [bernoulli_number(n, cache) for n in range(61)] == akiyama_tanigawa(60)
        assert all(von_staudt_clausen_check(n, cache) for n in range(2, 61, 2))
        for n in range(1, 13):
            for r in range(1, 51):
                value = faulhaber_sum(n, r, cache)
                assert value.denominator == 1
                assert value == sum(k**n for k in range(1, r))
        rng = random.Random(20240101)
        for _ in range(100):
            x = Fraction(rng.randint(-500, 500), rng.randint(1, 97))
            n = rng.randint(1, 10)
            assert bernoulli_polynomial(n, x + 1, cache) - bernoulli_polynomial(n, x, cache) == n * x ** (n - 1)
            assert bernoulli_polynomial(n, 1 - x, cache) == (-1) ** n * bernoulli_polynomial(n, x, cache)


def test_criterion_8_determinism():
    with criterion(8, "identical sweeps give byte-identical CSV and JSON", None):
        runs = [
            sweep(list(TheoremId), PrimeRange(3, 60), RPolicy.ALL_VALID_R, timestamp="2026-01-01T00:00:00+00:00")
            for _ in range(2)
        ]
        assert runs[0].to_csv().encode() == runs[1].to_csv().encode()
        assert runs[0].to_json().encode() == runs[1].to_json().encode()
        parallel = sweep(list(TheoremId), PrimeRange(3, 60), RPolicy.ALL_VALID_R, workers=2,
                         timestamp="2026-01-01T00:00:00+00:00")
        assert parallel.to_json() == runs[0].to_json()


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
